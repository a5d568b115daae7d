// superblocks: command-line front end for the weight, linkage and character library.
//
// Exit status: 0 definite answer, 1 verification failure, 2 invalid input,
// 3 inconclusive within the search box.

#include "superblocks/characters.hpp"
#include "superblocks/linkage.hpp"
#include "superblocks/properties.hpp"
#include "superblocks/serialize.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace superblocks;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInconclusive = 3;

enum class Format { Text, Json, Dot };

int parse_int(const std::string& text, const char* what) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw std::invalid_argument(std::string(what) + ": '" + text + "' is not an integer");
  return value;
}

struct RunConfig {
  std::string shape_text;
  int p = 3;
  int r = 1;
  std::string box_text;
  std::string format_text = "text";
  std::uint64_t seed = 1;

  Shape shape() const {
    const auto comma = shape_text.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("--shape must look like m,n (got '" + shape_text + "')");
    return Shape(parse_int(shape_text.substr(0, comma), "--shape"),
                 parse_int(shape_text.substr(comma + 1), "--shape"), p, r);
  }

  Format format() const {
    if (format_text == "text") return Format::Text;
    if (format_text == "json") return Format::Json;
    if (format_text == "dot") return Format::Dot;
    throw std::invalid_argument("--format must be text, json or dot");
  }

  std::optional<Box> box(const Shape& shape) const {
    if (box_text.empty()) return std::nullopt;
    auto parse_interval = [&](const std::string& text) {
      const auto dots = text.find("..");
      if (dots == std::string::npos)
        throw std::invalid_argument("--box intervals look like lo..hi (got '" + text + "')");
      const Weight ends = Weight::parse(text.substr(0, dots) + "," + text.substr(dots + 2),
                                        Shape(1, 1, shape.p()));
      if (ends[0] > ends[1]) throw std::invalid_argument("--box interval '" + text + "' is empty");
      return std::pair<Integer, Integer>{ends[0], ends[1]};
    };
    std::vector<std::pair<Integer, Integer>> bounds;
    std::stringstream ss(box_text);
    for (std::string part; std::getline(ss, part, ',');) bounds.push_back(parse_interval(part));
    if (bounds.size() == 1) return Box::uniform(shape, bounds[0].first, bounds[0].second);
    return Box(shape, std::move(bounds));
  }

  Box box_or_default(const Shape& shape, const std::vector<Weight>& inputs) const {
    if (auto b = box(shape)) return *b;
    return Box::around(inputs, 2 * shape.p());
  }
};

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string describe_move(const Move& move) {
  return std::visit(
      [](const auto& link) -> std::string {
        using T = std::decay_t<decltype(link)>;
        if constexpr (std::is_same_v<T, EvenLink>)
          return "even  w=" + link.w.to_string() + "  translation=" + link.translation.to_string();
        else
          return "odd   " + std::string(link.sign > 0 ? "+" : "-") + "(" + link.alpha.to_string() + ")";
      },
      move);
}

void print_chain_text(const LinkageChain& chain) {
  std::cout << "  " << chain.start << "\n";
  for (const auto& step : chain.steps)
    std::cout << "  -> " << step.weight << "   [" << describe_move(step.move) << "]\n";
}

int cmd_defect(const RunConfig& cfg, const std::string& weight) {
  const Shape shape = cfg.shape();
  const Defect d = defect(Weight::parse(weight, shape));
  if (cfg.format() == Format::Json)
    print_json(to_json(d));
  else
    std::cout << d.to_string() << "\n";
  return kExitOk;
}

int cmd_linked(const RunConfig& cfg, const std::string& a, const std::string& b, bool chain_only) {
  const Shape shape = cfg.shape();
  const Weight lambda = Weight::parse(a, shape);
  const Weight mu = Weight::parse(b, shape);
  const Box box = cfg.box_or_default(shape, {lambda, mu});
  const SameBlockResult result = same_block(lambda, mu, box);
  if (chain_only) {
    print_json(result.chain ? to_json(*result.chain) : json(nullptr));
  } else if (cfg.format() == Format::Json) {
    print_json(to_json(result));
  } else {
    std::cout << to_string(result.verdict);
    if (result.chain) std::cout << " (chain of length " << result.chain->steps.size() << ")";
    std::cout << "\n";
    if (result.chain) print_chain_text(*result.chain);
    if (result.verdict == Verdict::FingerprintMismatch)
      std::cout << "  fingerprints " << result.from.to_string() << " vs " << result.to.to_string()
                << "\n";
    if (result.verdict == Verdict::InconclusiveWithinBox)
      std::cout << "  explored " << result.explored << " dominant weights in the box\n";
  }
  return result.verdict == Verdict::InconclusiveWithinBox ? kExitInconclusive : kExitOk;
}

int cmd_odd_moves(const RunConfig& cfg, const std::string& weight) {
  const Shape shape = cfg.shape();
  const auto moves = odd_neighbors(Weight::parse(weight, shape));
  if (cfg.format() == Format::Json) {
    json out = json::array();
    for (const auto& nb : moves)
      out.push_back({{"weight", to_json(nb.weight)}, {"move", to_json(Move{nb.link})}});
    print_json(out);
  } else {
    for (const auto& nb : moves)
      std::cout << nb.weight << "   [" << describe_move(nb.link) << "]\n";
  }
  return kExitOk;
}

int cmd_companion(const RunConfig& cfg, const std::string& weight, std::optional<unsigned> t) {
  const Shape shape = cfg.shape();
  const Weight lambda = Weight::parse(weight, shape);
  const Weight mu = t ? companion_with_exponent(lambda, *t) : companion(lambda);
  if (cfg.format() == Format::Json)
    print_json({{"weight", to_json(mu)}, {"defect", to_json(defect(mu))}});
  else
    std::cout << mu << "\n";
  return kExitOk;
}

int cmd_char(const RunConfig& cfg, const std::string& weight, const std::string& w_text) {
  const Shape shape = cfg.shape();
  const Weight lambda = Weight::parse(weight, shape);
  const Permutation w = Permutation::parse(w_text, shape.rank());
  const CharacterPoly c = zhat_char(lambda, w, cfg.r);
  if (cfg.format() == Format::Json)
    print_json(to_json(c));
  else
    std::cout << c.to_string() << "\n";
  return kExitOk;
}

int cmd_blocks(const RunConfig& cfg) {
  const Shape shape = cfg.shape();
  const auto box = cfg.box(shape);
  if (!box) throw std::invalid_argument("blocks needs --box");
  const BlockGraph graph = block_graph(*box);
  switch (cfg.format()) {
    case Format::Dot:
      std::cout << to_dot(graph);
      break;
    case Format::Json:
      print_json(to_json(partition_from_graph(graph)));
      break;
    case Format::Text: {
      const BlockPartition partition = partition_from_graph(graph);
      std::cout << partition.classes.size() << " classes\n";
      for (std::size_t c = 0; c < partition.classes.size(); ++c) {
        const auto& cls = partition.classes[c];
        std::cout << "[" << c << "] " << cls.fingerprint.to_string() << ":";
        for (const auto& w : cls.members) std::cout << " " << w;
        std::cout << "\n";
      }
      for (const auto& group : partition.unresolved) {
        std::cout << "possibly equal, unresolved within box:";
        for (auto c : group) std::cout << " [" << c << "]";
        std::cout << "\n";
      }
      break;
    }
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::size_t scale) {
  const auto results = run_property_suites({cfg.seed, scale});
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " checks)";
    if (!r.passed) std::cout << ": " << r.detail;
    std::cout << "\n";
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_verify_chain(const RunConfig& cfg, const std::string& path) {
  const Shape shape = cfg.shape();
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  const LinkageChain chain = chain_from_json(doc, shape);
  const ChainCheck check = replay_chain(chain);
  if (check.ok) {
    std::cout << "valid chain: " << chain.start << " -> " << chain.end() << " ("
              << chain.steps.size() << " steps)\n";
    return kExitOk;
  }
  std::cout << "invalid chain at step " << check.failed_step << ": " << check.reason << "\n";
  return kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linkage, blocks and formal characters for GL(m|n) in odd characteristic"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--shape", cfg.shape_text, "block sizes m,n")->required();
    sub->add_option("-p", cfg.p, "odd prime characteristic")->capture_default_str();
    sub->add_option("-r", cfg.r, "Frobenius level")->capture_default_str();
    sub->add_option("--format", cfg.format_text, "text|json|dot")->capture_default_str();
  };

  std::string first;
  std::string second;
  std::string w_text = "id";
  std::optional<unsigned> exponent;
  std::size_t scale = 1;
  std::string chain_path = "-";

  auto* defect_cmd = app.add_subcommand("defect", "defect d(lambda) = (d+|d-)");
  common(defect_cmd);
  defect_cmd->add_option("weight", first)->required();

  auto add_pair = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--box", cfg.box_text, "lo..hi, or one lo..hi per coordinate separated by commas");
    sub->add_option("lambda", first)->required();
    sub->add_option("mu", second)->required();
  };
  auto* linked_cmd = app.add_subcommand("linked", "decide whether two dominant weights share a block");
  add_pair(linked_cmd);
  auto* chain_cmd = app.add_subcommand("chain", "emit the linkage chain as JSON (null if none)");
  add_pair(chain_cmd);

  auto* odd_cmd = app.add_subcommand("odd-moves", "simply-odd-linked dominant neighbours");
  common(odd_cmd);
  odd_cmd->add_option("weight", first)->required();

  auto* companion_cmd = app.add_subcommand("companion", "dominant companion of a weight");
  common(companion_cmd);
  companion_cmd->add_option("weight", first)->required();
  companion_cmd->add_option("-t", exponent, "explicit exponent t");

  auto* char_cmd = app.add_subcommand("char", "formal character of Zhat_{r,w}(lambda)");
  common(char_cmd);
  char_cmd->add_option("--w", w_text, "permutation in one-line notation, or id")->capture_default_str();
  char_cmd->add_option("weight", first)->required();

  auto* blocks_cmd = app.add_subcommand("blocks", "box-restricted block classes (text, json or dot)");
  common(blocks_cmd);
  blocks_cmd->add_option("--box", cfg.box_text, "lo..hi or per-coordinate list")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
  verify_cmd->add_option("--seed", cfg.seed)->capture_default_str();
  verify_cmd->add_option("--scale", scale, "multiplier for random case counts")->capture_default_str();

  auto* verify_chain_cmd = app.add_subcommand("verify-chain", "replay a serialized chain");
  common(verify_chain_cmd);
  verify_chain_cmd->add_option("file", chain_path, "chain JSON, or - for stdin")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*defect_cmd) return cmd_defect(cfg, first);
    if (*linked_cmd) return cmd_linked(cfg, first, second, false);
    if (*chain_cmd) return cmd_linked(cfg, first, second, true);
    if (*odd_cmd) return cmd_odd_moves(cfg, first);
    if (*companion_cmd) return cmd_companion(cfg, first, exponent);
    if (*char_cmd) return cmd_char(cfg, first, w_text);
    if (*blocks_cmd) return cmd_blocks(cfg);
    if (*verify_cmd) return cmd_verify(cfg, scale);
    if (*verify_chain_cmd) return cmd_verify_chain(cfg, chain_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitInvalid;
}
