#include "superblocks/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace superblocks {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw std::invalid_argument("malformed JSON: " + what);
}

std::vector<Integer> integers_from_json(const json& j, std::size_t expected, const char* what) {
  if (!j.is_array() || j.size() != expected)
    malformed(std::string(what) + " must be an array of " + std::to_string(expected) +
              " integers");
  std::vector<Integer> out;
  out.reserve(expected);
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

std::size_t index_from_json(const json& j, std::size_t size) {
  if (!j.is_number_integer()) malformed("index must be an integer");
  const auto v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > size)
    malformed("index " + std::to_string(v) + " out of range 1.." + std::to_string(size));
  return static_cast<std::size_t>(v - 1);
}

std::string dot_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

json integer_to_json(const Integer& x) {
  if (fits_int64(x)) return static_cast<std::int64_t>(x);
  return x.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t digits = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == digits || s.find_first_not_of("0123456789", digits) != std::string::npos)
      malformed("'" + s + "' is not an integer");
    return Integer(s);
  }
  malformed("expected an integer, got " + j.dump());
}

json to_json(const Weight& lambda) {
  json out = json::array();
  for (const auto& c : lambda.coords()) out.push_back(integer_to_json(c));
  return out;
}

Weight weight_from_json(const json& j, const Shape& shape) {
  return Weight(shape, integers_from_json(j, shape.rank(), "weight"));
}

json to_json(const Permutation& w) {
  json out = json::array();
  for (std::size_t x : w.images()) out.push_back(x + 1);
  return out;
}

Permutation permutation_from_json(const json& j, std::size_t size) {
  if (!j.is_array() || j.size() != size)
    malformed("permutation must be an array of " + std::to_string(size) + " indices");
  std::vector<std::size_t> images;
  for (const auto& x : j) images.push_back(index_from_json(x, size));
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument&) {
    malformed(j.dump() + " is not a permutation");
  }
}

json to_json(const Root& alpha) { return json::array({alpha.i() + 1, alpha.j() + 1}); }

Root root_from_json(const json& j, const Shape& shape) {
  if (!j.is_array() || j.size() != 2) malformed("root must be a pair of indices");
  const auto i = index_from_json(j[0], shape.rank());
  const auto k = index_from_json(j[1], shape.rank());
  if (i == k) malformed("root indices must differ");
  return Root(shape, i, k);
}

json to_json(const Move& move) {
  return std::visit(
      [](const auto& link) -> json {
        using T = std::decay_t<decltype(link)>;
        if constexpr (std::is_same_v<T, EvenLink>)
          return {{"kind", "even"}, {"w", to_json(link.w)}, {"translation", to_json(link.translation)}};
        else
          return {{"kind", "odd"}, {"root", to_json(link.alpha)}, {"sign", link.sign}};
      },
      move);
}

Move move_from_json(const json& j, const Shape& shape) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    malformed("move must be an object with a \"kind\"");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "even") {
    if (!j.contains("w") || !j.contains("translation")) malformed("even move needs w, translation");
    return EvenLink{permutation_from_json(j["w"], shape.rank()),
                    weight_from_json(j["translation"], shape)};
  }
  if (kind == "odd") {
    if (!j.contains("root") || !j.contains("sign") || !j["sign"].is_number_integer())
      malformed("odd move needs root, sign");
    if (j["sign"] != 1 && j["sign"] != -1) malformed("odd move sign must be 1 or -1");
    return OddLink{root_from_json(j["root"], shape), j["sign"].get<int>()};
  }
  malformed("unknown move kind '" + kind + "'");
}

json to_json(const LinkageChain& chain) {
  json out = json::array();
  out.push_back({{"weight", to_json(chain.start)}, {"move", nullptr}});
  for (const auto& step : chain.steps)
    out.push_back({{"weight", to_json(step.weight)}, {"move", to_json(step.move)}});
  return out;
}

LinkageChain chain_from_json(const json& j, const Shape& shape) {
  if (!j.is_array() || j.empty()) malformed("chain must be a non-empty array");
  for (const auto& record : j)
    if (!record.is_object() || !record.contains("weight") || !record.contains("move"))
      malformed("chain records need \"weight\" and \"move\"");
  if (!j[0]["move"].is_null()) malformed("first chain record must have a null move");
  LinkageChain chain{weight_from_json(j[0]["weight"], shape), {}};
  for (std::size_t k = 1; k < j.size(); ++k) {
    if (j[k]["move"].is_null()) malformed("only the first chain record may have a null move");
    chain.steps.push_back({move_from_json(j[k]["move"], shape), weight_from_json(j[k]["weight"], shape)});
  }
  return chain;
}

json to_json(const CharacterPoly& c) {
  json out = json::array();
  for (const auto& [e, k] : c.terms())
    out.push_back({{"exponent", to_json(Weight(c.shape(), e))}, {"coeff", integer_to_json(k)}});
  return out;
}

CharacterPoly character_from_json(const json& j, const Shape& shape) {
  if (!j.is_array()) malformed("character must be an array of terms");
  CharacterPoly c(shape);
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("exponent") || !term.contains("coeff"))
      malformed("character terms need \"exponent\" and \"coeff\"");
    c.add_term(integers_from_json(term["exponent"], shape.rank(), "exponent"),
               integer_from_json(term["coeff"]));
  }
  return c;
}

json to_json(const Defect& d) {
  auto entry = [](const std::optional<int>& v) -> json {
    return v ? json(*v) : json("inf");
  };
  return {{"plus", entry(d.plus)}, {"minus", entry(d.minus)}};
}

json to_json(const Fingerprint& f) {
  json residues = json::array();
  for (const auto& c : f.residues) residues.push_back(integer_to_json(c));
  return {{"total", integer_to_json(f.total)}, {"residues", residues}};
}

json to_json(const SameBlockResult& result) {
  json out = {{"verdict", to_string(result.verdict)},
              {"fingerprint_from", to_json(result.from)},
              {"fingerprint_to", to_json(result.to)},
              {"explored", result.explored}};
  out["chain"] = result.chain ? to_json(*result.chain) : json(nullptr);
  return out;
}

json to_json(const BlockPartition& partition) {
  json classes = json::array();
  for (const auto& cls : partition.classes) {
    json members = json::array();
    for (const auto& w : cls.members) members.push_back(to_json(w));
    classes.push_back({{"fingerprint", to_json(cls.fingerprint)}, {"members", members}});
  }
  return {{"classes", classes}, {"unresolved", partition.unresolved}};
}

std::string move_label(const Move& move) {
  return std::visit(
      [](const auto& link) -> std::string {
        using T = std::decay_t<decltype(link)>;
        if constexpr (std::is_same_v<T, EvenLink>)
          return "even(" + link.w.to_string() + ")";
        else
          return "odd(" + link.alpha.to_string() + ")";
      },
      move);
}

std::string to_dot(const BlockGraph& graph) {
  std::ostringstream os;
  os << "graph blocks {\n";
  for (const auto& w : graph.nodes) os << "  " << dot_quote(w.to_string()) << ";\n";
  for (const auto& edge : graph.edges)
    os << "  " << dot_quote(graph.nodes[edge.from].to_string()) << " -- "
       << dot_quote(graph.nodes[edge.to].to_string())
       << " [label=" << dot_quote(move_label(edge.move)) << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace superblocks
