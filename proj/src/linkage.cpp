#include "superblocks/linkage.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace superblocks {

namespace {

struct BlockRange {
  std::size_t lo;
  std::size_t hi;  // exclusive
};

std::pair<BlockRange, BlockRange> blocks_of(const Shape& shape) {
  const auto m = static_cast<std::size_t>(shape.m());
  return {{0, m}, {m, shape.rank()}};
}

std::optional<int> block_defect(const Weight& lambda, BlockRange block) {
  if (block.hi - block.lo <= 1) return 0;
  const Integer p = lambda.shape().p();
  std::optional<int> best;  // infinite until some pairing is non-zero
  for (std::size_t i = block.lo; i < block.hi; ++i)
    for (std::size_t j = i + 1; j < block.hi; ++j) {
      // (lambda + rho_0, (e_i - e_j)^vee) = lambda_i - lambda_j + j - i
      const auto v = valuation(lambda[i] - lambda[j] + Integer(j - i), p);
      if (v && (!best || *v < *best)) best = v;
    }
  return best;
}

bool block_in_lattice(const Weight& delta, BlockRange block, int d) {
  const Integer modulus = delta.shape().p_power(static_cast<unsigned>(d + 1));
  Integer sum = 0;
  for (std::size_t k = block.lo; k < block.hi; ++k) {
    if (delta[k] % modulus != 0) return false;
    sum += delta[k];
  }
  return sum == 0;
}

void require_dominant(const Weight& lambda, const char* what) {
  if (!is_dominant(lambda))
    throw std::invalid_argument(std::string(what) + ": weight " + lambda.to_string() +
                                " is not dominant");
}

Defect require_finite_defect(const Weight& lambda, const char* what) {
  Defect d = defect(lambda);
  if (!d.finite())
    throw InfiniteDefect(std::string(what) + ": weight " + lambda.to_string() +
                         " has infinite defect " + d.to_string());
  return d;
}

std::string order_to_string(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string("inf");
}

}  // namespace

std::string Defect::to_string() const {
  return "(" + order_to_string(plus) + "|" + order_to_string(minus) + ")";
}

Defect defect(const Weight& lambda) {
  const auto [first, second] = blocks_of(lambda.shape());
  return {block_defect(lambda, first), block_defect(lambda, second)};
}

bool in_defect_lattice(const Weight& delta, const Defect& d) {
  if (!d.finite()) throw InfiniteDefect("lattice for infinite defect " + d.to_string());
  const auto [first, second] = blocks_of(delta.shape());
  return block_in_lattice(delta, first, *d.plus) && block_in_lattice(delta, second, *d.minus);
}

// Even linkage

std::optional<EvenLink> even_coset_witness(const Weight& lambda, const Weight& mu) {
  require_same_lattice(lambda.shape(), mu.shape(), "even_coset_witness");
  const Defect d = require_finite_defect(lambda, "even_coset_witness");
  for (const Permutation& w : block_permutations(lambda.shape())) {
    Weight delta = mu - dot_action(w, lambda);
    if (in_defect_lattice(delta, d)) return EvenLink{w, std::move(delta)};
  }
  return std::nullopt;
}

std::optional<EvenLink> even_linked(const Weight& lambda, const Weight& mu) {
  require_dominant(lambda, "even_linked");
  require_dominant(mu, "even_linked");
  return even_coset_witness(lambda, mu);
}

bool check_even_link(const Weight& from, const Weight& to, const EvenLink& link) {
  if (!from.shape().same_lattice(to.shape()) || !is_dominant(from) || !is_dominant(to))
    return false;
  if (link.w.size() != from.size() || !link.w.preserves_blocks(from.shape().m())) return false;
  if (!(to - dot_action(link.w, from) == link.translation)) return false;
  const Defect d = defect(from);
  return d.finite() && in_defect_lattice(link.translation, d);
}

// Odd linkage

std::optional<OddLink> simply_odd_linked(const Weight& lambda, const Weight& mu) {
  require_same_lattice(lambda.shape(), mu.shape(), "simply_odd_linked");
  require_dominant(lambda, "simply_odd_linked");
  require_dominant(mu, "simply_odd_linked");
  const Weight delta = mu - lambda;
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < delta.size(); ++k)
    if (delta[k] != 0) support.push_back(k);
  if (support.size() != 2) return std::nullopt;
  const std::size_t i = support[0];
  const std::size_t j = support[1];
  const Shape& shape = lambda.shape();
  if (!shape.is_first_block(i) || shape.is_first_block(j)) return std::nullopt;
  if (delta[i] + delta[j] != 0 || (delta[i] != 1 && delta[i] != -1)) return std::nullopt;
  OddLink link{Root(shape, i, j), delta[i] == 1 ? 1 : -1};
  if (!check_odd_link(lambda, mu, link)) return std::nullopt;
  return link;
}

bool check_odd_link(const Weight& from, const Weight& to, const OddLink& link) {
  if (!from.shape().same_lattice(to.shape()) || !is_dominant(from) || !is_dominant(to))
    return false;
  if (!link.alpha.is_odd() || !link.alpha.is_positive()) return false;
  if (link.sign != 1 && link.sign != -1) return false;
  if (!(to == from + Integer(link.sign) * link.alpha.as_weight())) return false;
  const Weight& higher = link.sign > 0 ? to : from;
  return odd_shifted_pairing(higher, link.alpha) % from.shape().p() == 0;
}

bool check_move(const Weight& from, const Weight& to, const Move& move) {
  return std::visit(
      [&](const auto& link) -> bool {
        using T = std::decay_t<decltype(link)>;
        if constexpr (std::is_same_v<T, EvenLink>)
          return check_even_link(from, to, link);
        else
          return check_odd_link(from, to, link);
      },
      move);
}

std::vector<OddNeighbor> odd_neighbors(const Weight& lambda) {
  require_dominant(lambda, "odd_neighbors");
  const Shape& shape = lambda.shape();
  std::vector<OddNeighbor> out;
  for (std::size_t i = 0; i < static_cast<std::size_t>(shape.m()); ++i)
    for (std::size_t j = static_cast<std::size_t>(shape.m()); j < shape.rank(); ++j) {
      const Root alpha(shape, i, j);
      for (int sign : {-1, 1}) {
        Weight mu = lambda + Integer(sign) * alpha.as_weight();
        if (!is_dominant(mu)) continue;
        OddLink link{alpha, sign};
        if (check_odd_link(lambda, mu, link)) out.push_back({std::move(mu), link});
      }
    }
  return out;
}

// Companions

unsigned minimal_companion_exponent(const Weight& lambda) {
  const Defect d = require_finite_defect(lambda, "companion");
  const Shape& shape = lambda.shape();
  Integer largest_descent = 0;
  for (std::size_t k = 0; k + 1 < lambda.size(); ++k) {
    if (k + 1 == static_cast<std::size_t>(shape.m())) continue;
    largest_descent = std::max(largest_descent, Integer(lambda[k + 1] - lambda[k]));
  }
  unsigned t = static_cast<unsigned>(std::max(*d.plus, *d.minus)) + 1;
  while (shape.p_power(t) <= largest_descent) ++t;
  return t;
}

Weight companion_with_exponent(const Weight& lambda, unsigned t) {
  const unsigned least = minimal_companion_exponent(lambda);
  if (t < least)
    throw std::invalid_argument("companion exponent " + std::to_string(t) +
                                " too small, need at least " + std::to_string(least));
  const Shape& shape = lambda.shape();
  const Integer q = shape.p_power(t);
  Weight mu = lambda;
  // pi_+ = sum_{i<m} omega_i has entry (m - i) at 1-based position i; same for pi_-.
  const auto [first, second] = blocks_of(shape);
  for (BlockRange block : {first, second}) {
    const std::size_t size = block.hi - block.lo;
    Integer total = 0;
    for (std::size_t k = 0; k < size; ++k) {
      const Integer entry(size - 1 - k);
      mu[block.lo + k] += q * entry;
      total += entry;
    }
    mu[block.hi - 1] -= q * total;
  }
  return mu;
}

Weight companion(const Weight& lambda) {
  if (is_dominant(lambda)) return lambda;
  return companion_with_exponent(lambda, minimal_companion_exponent(lambda));
}

Weight lower_reflection(const Weight& lambda, const Root& alpha, unsigned e) {
  require_same_lattice(lambda.shape(), alpha.shape(), "lower_reflection");
  if (alpha.is_odd())
    throw std::invalid_argument("lower_reflection needs an even root, got odd " +
                                alpha.to_string());
  if (!alpha.is_positive())
    throw std::invalid_argument("lower_reflection needs a positive root, got " + alpha.to_string());
  const Shape& shape = lambda.shape();
  const Integer pairing =
      pairing_coroot(HalfWeight(lambda) + rho0(shape), alpha).to_integer();
  const Integer s = mod_floor(pairing, shape.p_power(e));
  return lambda - s * alpha.as_weight();
}

// Fingerprint

std::string Fingerprint::to_string() const {
  std::string out = "(" + total.str() + "; ";
  for (std::size_t t = 0; t < residues.size(); ++t) {
    if (t > 0) out += ",";
    out += residues[t].str();
  }
  return out + ")";
}

Fingerprint fingerprint(const Weight& lambda) {
  const Shape& shape = lambda.shape();
  const Integer p = shape.p();
  const Integer m = shape.m();
  Fingerprint f{degree(lambda).total, std::vector<Integer>(static_cast<std::size_t>(shape.p()))};
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    const Integer index(k);  // 0-based; 1-based i = k + 1
    if (shape.is_first_block(k)) {
      const Integer a = mod_floor(lambda[k] + m - 1 - index, p);
      f.residues[static_cast<std::size_t>(a)] += 1;
    } else {
      const Integer b = mod_floor(index - m - lambda[k], p);
      f.residues[static_cast<std::size_t>(b)] -= 1;
    }
  }
  return f;
}

// Box

Box::Box(Shape shape, std::vector<std::pair<Integer, Integer>> bounds)
    : shape_(shape), bounds_(std::move(bounds)) {
  if (bounds_.size() != shape_.rank())
    throw ShapeMismatch("box needs one interval per coordinate (" + std::to_string(shape_.rank()) +
                        "), got " + std::to_string(bounds_.size()));
}

Box Box::uniform(const Shape& shape, const Integer& lo, const Integer& hi) {
  return Box(shape, std::vector<std::pair<Integer, Integer>>(shape.rank(), {lo, hi}));
}

Box Box::around(const std::vector<Weight>& weights, const Integer& margin) {
  if (weights.empty()) throw std::invalid_argument("Box::around needs at least one weight");
  const Shape& shape = weights.front().shape();
  std::vector<std::pair<Integer, Integer>> bounds;
  for (std::size_t k = 0; k < shape.rank(); ++k) {
    Integer lo = weights.front()[k];
    Integer hi = lo;
    for (const auto& w : weights) {
      require_same_lattice(shape, w.shape(), "Box::around");
      lo = std::min(lo, w[k]);
      hi = std::max(hi, w[k]);
    }
    bounds.emplace_back(lo - margin, hi + margin);
  }
  return Box(shape, std::move(bounds));
}

bool Box::empty() const {
  return std::any_of(bounds_.begin(), bounds_.end(),
                     [](const auto& b) { return b.first > b.second; });
}

bool Box::contains(const Weight& lambda) const {
  if (!lambda.shape().same_lattice(shape_)) return false;
  for (std::size_t k = 0; k < bounds_.size(); ++k)
    if (lambda[k] < bounds_[k].first || lambda[k] > bounds_[k].second) return false;
  return true;
}

std::vector<Weight> Box::dominant_weights() const {
  std::vector<Weight> out;
  if (empty()) return out;
  std::vector<Integer> coords(shape_.rank());
  const auto m = static_cast<std::size_t>(shape_.m());
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == coords.size()) {
      out.emplace_back(shape_, coords);
      return;
    }
    Integer hi = bounds_[k].second;
    if (k != 0 && k != m) hi = std::min(hi, coords[k - 1]);
    for (Integer x = bounds_[k].first; x <= hi; ++x) {
      coords[k] = x;
      self(self, k + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

// Box-restricted even classes

namespace {

// All non-increasing vectors x on the block with x_k in the box, x_k = base_k
// mod `modulus` and sum equal to the sum of base over the block.
void block_solutions(const std::vector<Integer>& base, BlockRange block, const Box& box,
                     const Integer& modulus, std::vector<std::vector<Integer>>& out) {
  Integer target = 0;
  for (std::size_t k = block.lo; k < block.hi; ++k) target += base[k];
  std::vector<Integer> current;
  auto recurse = [&](auto&& self, std::size_t k, const Integer& sum) -> void {
    if (k == block.hi) {
      if (sum == target) out.push_back(current);
      return;
    }
    const auto& [lo, hi_box] = box.bounds()[k];
    Integer hi = hi_box;
    if (k != block.lo) hi = std::min(hi, current.back());
    if (k + 1 == block.hi) {
      const Integer x = target - sum;
      if (x >= lo && x <= hi && mod_floor(x - base[k], modulus) == 0) {
        current.push_back(x);
        self(self, k + 1, target);
        current.pop_back();
      }
      return;
    }
    for (Integer x = lo + mod_floor(base[k] - lo, modulus); x <= hi; x += modulus) {
      current.push_back(x);
      self(self, k + 1, sum + x);
      current.pop_back();
    }
  };
  recurse(recurse, block.lo, Integer(0));
}

}  // namespace

std::vector<std::pair<Weight, EvenLink>> even_class_in_box(const Weight& lambda, const Box& box) {
  require_same_lattice(lambda.shape(), box.shape(), "even_class_in_box");
  const Defect d = require_finite_defect(lambda, "even_class_in_box");
  const Shape& shape = lambda.shape();
  const auto [first, second] = blocks_of(shape);
  std::map<Weight, EvenLink> found;
  if (box.empty()) return {};
  for (const Permutation& w : block_permutations(shape)) {
    const Weight base = dot_action(w, lambda);
    std::vector<std::vector<Integer>> heads;
    std::vector<std::vector<Integer>> tails;
    block_solutions(base.coords(), first, box, shape.p_power(static_cast<unsigned>(*d.plus + 1)),
                    heads);
    if (heads.empty()) continue;
    block_solutions(base.coords(), second, box,
                    shape.p_power(static_cast<unsigned>(*d.minus + 1)), tails);
    for (const auto& head : heads)
      for (const auto& tail : tails) {
        std::vector<Integer> coords = head;
        coords.insert(coords.end(), tail.begin(), tail.end());
        Weight mu(shape, std::move(coords));
        if (found.count(mu)) continue;
        Weight delta = mu - base;
        found.emplace(mu, EvenLink{w, std::move(delta)});
      }
  }
  return {found.begin(), found.end()};
}

// Chains

ChainCheck replay_chain(const LinkageChain& chain) {
  if (!is_dominant(chain.start)) return {false, 0, "start weight is not dominant"};
  const Weight* current = &chain.start;
  for (std::size_t k = 0; k < chain.steps.size(); ++k) {
    const ChainStep& step = chain.steps[k];
    if (!is_dominant(step.weight))
      return {false, k + 1, "weight " + step.weight.to_string() + " is not dominant"};
    bool ok = false;
    try {
      ok = check_move(*current, step.weight, step.move);
    } catch (const std::exception& e) {
      return {false, k + 1, e.what()};
    }
    if (!ok)
      return {false, k + 1,
              "move " + current->to_string() + " -> " + step.weight.to_string() +
                  " fails validation"};
    current = &step.weight;
  }
  return {};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Linked:
      return "linked";
    case Verdict::FingerprintMismatch:
      return "fingerprint-mismatch";
    case Verdict::InconclusiveWithinBox:
      return "inconclusive-within-box";
  }
  return "unknown";
}

SameBlockResult same_block(const Weight& lambda, const Weight& mu, const Box& box) {
  require_same_lattice(lambda.shape(), mu.shape(), "same_block");
  require_same_lattice(lambda.shape(), box.shape(), "same_block");
  require_dominant(lambda, "same_block");
  require_dominant(mu, "same_block");
  if (!box.contains(lambda) || !box.contains(mu))
    throw std::invalid_argument("box too small to contain both " + lambda.to_string() + " and " +
                                mu.to_string());

  SameBlockResult result{Verdict::InconclusiveWithinBox, std::nullopt, fingerprint(lambda),
                         fingerprint(mu)};
  if (!(result.from == result.to)) {
    result.verdict = Verdict::FingerprintMismatch;
    return result;
  }

  struct Visit {
    std::optional<std::size_t> parent;
    std::optional<Move> move;
    bool via_even = false;
  };
  std::vector<Weight> nodes{lambda};
  std::vector<Visit> visits{Visit{}};
  std::map<Weight, std::size_t> index{{lambda, 0}};
  std::optional<std::size_t> goal;
  if (lambda == mu) goal = 0;

  auto discover = [&](std::size_t from, const Weight& to, Move move, bool via_even) {
    if (index.count(to) || !box.contains(to)) return;
    index.emplace(to, nodes.size());
    nodes.push_back(to);
    visits.push_back(Visit{from, std::move(move), via_even});
    if (to == mu) goal = nodes.size() - 1;
  };

  for (std::size_t head = 0; head < nodes.size() && !goal; ++head) {
    const Weight current = nodes[head];
    for (auto& neighbor : odd_neighbors(current)) {
      discover(head, neighbor.weight, neighbor.link, false);
      if (goal) break;
    }
    // A weight reached by an even move shares its even class with its parent,
    // which has already been enumerated.
    if (goal || visits[head].via_even) continue;
    for (auto& [weight, link] : even_class_in_box(current, box)) {
      discover(head, weight, std::move(link), true);
      if (goal) break;
    }
  }
  result.explored = nodes.size();
  if (!goal) return result;

  LinkageChain chain{lambda, {}};
  for (std::size_t k = *goal; visits[k].parent; k = *visits[k].parent)
    chain.steps.push_back({*visits[k].move, nodes[k]});
  std::reverse(chain.steps.begin(), chain.steps.end());
  if (const ChainCheck check = replay_chain(chain); !check.ok)
    throw std::logic_error("same_block produced an invalid chain: " + check.reason);
  result.verdict = Verdict::Linked;
  result.chain = std::move(chain);
  return result;
}

// Box-wide classes

BlockGraph block_graph(const Box& box) {
  BlockGraph graph{box.dominant_weights(), {}};
  std::map<Weight, std::size_t> index;
  for (std::size_t k = 0; k < graph.nodes.size(); ++k) index.emplace(graph.nodes[k], k);
  std::vector<bool> even_done(graph.nodes.size(), false);
  for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
    const Weight& lambda = graph.nodes[k];
    for (auto& neighbor : odd_neighbors(lambda)) {
      auto it = index.find(neighbor.weight);
      if (it != index.end() && it->second > k)
        graph.edges.push_back({k, it->second, neighbor.link});
    }
    if (even_done[k]) continue;
    even_done[k] = true;
    // Nodes are sorted, so k is the smallest member of its even class.
    for (auto& [mu, link] : even_class_in_box(lambda, box)) {
      const std::size_t target = index.at(mu);
      if (target == k) continue;
      even_done[target] = true;
      graph.edges.push_back({k, target, std::move(link)});
    }
  }
  return graph;
}

BlockPartition partition_from_graph(const BlockGraph& graph) {
  std::vector<std::size_t> parent(graph.nodes.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& edge : graph.edges) {
    const std::size_t a = find(edge.from);
    const std::size_t b = find(edge.to);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  BlockPartition partition;
  std::map<std::size_t, std::size_t> class_of_root;
  for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
    const std::size_t root = find(k);
    auto [it, inserted] = class_of_root.emplace(root, partition.classes.size());
    if (inserted) partition.classes.push_back({fingerprint(graph.nodes[k]), {}});
    BlockClass& cls = partition.classes[it->second];
    if (!(fingerprint(graph.nodes[k]) == cls.fingerprint))
      throw std::logic_error("fingerprint differs inside a linkage class at " +
                             graph.nodes[k].to_string());
    cls.members.push_back(graph.nodes[k]);
  }

  std::map<Fingerprint, std::vector<std::size_t>> by_fingerprint;
  for (std::size_t c = 0; c < partition.classes.size(); ++c)
    by_fingerprint[partition.classes[c].fingerprint].push_back(c);
  for (auto& [key, group] : by_fingerprint)
    if (group.size() > 1) partition.unresolved.push_back(std::move(group));
  std::sort(partition.unresolved.begin(), partition.unresolved.end());
  return partition;
}

BlockPartition enumerate_block_classes(const Box& box) {
  return partition_from_graph(block_graph(box));
}

}  // namespace superblocks
