#pragma once

// Block machinery for dominant weights of GL(m|n): defect, even-linkage,
// simply-odd-linkage, companions, lower p^e-reflections, the residue
// fingerprint, and a box-restricted chain search with replayable certificates.

#include "superblocks/roots.hpp"
#include "superblocks/weights.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

namespace superblocks {

/// d(lambda) = (d_+ | d_-). std::nullopt stands for an infinite entry (every
/// within-block pairing of lambda + rho_0 vanishes).
struct Defect {
  std::optional<int> plus;
  std::optional<int> minus;

  bool finite() const { return plus.has_value() && minus.has_value(); }
  /// `(1|0)`, `(inf|0)`
  std::string to_string() const;

  friend bool operator==(const Defect&, const Defect&) = default;
};

class InfiniteDefect : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Defect defect(const Weight& lambda);

/// True when delta lies in p^{d+(1|1)} Z Phi: within each block the entries
/// sum to zero and are divisible by p^{d_+ + 1} (resp. p^{d_- + 1}).
bool in_defect_lattice(const Weight& delta, const Defect& d);

/// mu = w.lambda + translation, w in S_m x S_n.
struct EvenLink {
  Permutation w;
  Weight translation;
};

/// mu = lambda + sign * alpha, alpha odd positive.
struct OddLink {
  Root alpha;
  int sign;
};

using Move = std::variant<EvenLink, OddLink>;

/// Searches S_m x S_n for w with mu - w.lambda in p^{d(lambda)+(1|1)} Z Phi.
/// No dominance requirement; throws InfiniteDefect if d(lambda) is infinite.
std::optional<EvenLink> even_coset_witness(const Weight& lambda, const Weight& mu);

/// Even-linkage of dominant weights, with a witness.
std::optional<EvenLink> even_linked(const Weight& lambda, const Weight& mu);

std::optional<OddLink> simply_odd_linked(const Weight& lambda, const Weight& mu);

/// Independent validators used to replay chains.
bool check_even_link(const Weight& from, const Weight& to, const EvenLink& link);
bool check_odd_link(const Weight& from, const Weight& to, const OddLink& link);
bool check_move(const Weight& from, const Weight& to, const Move& move);

struct OddNeighbor {
  Weight weight;
  OddLink link;
};

/// Dominant lambda +- alpha, alpha odd positive, simply-odd-linked to lambda.
/// Ordered by root, then sign -1 before +1.
std::vector<OddNeighbor> odd_neighbors(const Weight& lambda);

/// Smallest t with t > d_+, t > d_- and p^t > A (A = largest descent).
unsigned minimal_companion_exponent(const Weight& lambda);

/// lambda + p^t pi_+ + p^t pi_- - p^t|pi_+| e_m - p^t|pi_-| e_{m+n}.
/// Throws std::invalid_argument if t is below minimal_companion_exponent.
Weight companion_with_exponent(const Weight& lambda, unsigned t);

/// lambda itself when dominant, otherwise the construction with the minimal t.
Weight companion(const Weight& lambda);

/// R_{alpha,e}(lambda) = lambda - s alpha, where s is the least non-negative
/// residue of (lambda + rho_0, alpha^vee) mod p^e.
Weight lower_reflection(const Weight& lambda, const Root& alpha, unsigned e);

/// (|lambda|, c_0..c_{p-1}) with c_t = #{i <= m : lambda_i + m - i = t}
/// - #{j > m : j - m - 1 - lambda_j = t}, residues mod p.
struct Fingerprint {
  Integer total;
  std::vector<Integer> residues;

  std::string to_string() const;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend bool operator<(const Fingerprint& a, const Fingerprint& b) {
    return std::tie(a.total, a.residues) < std::tie(b.total, b.residues);
  }
};

Fingerprint fingerprint(const Weight& lambda);

/// Per-coordinate closed bounds [lo_k, hi_k]. Bounds with lo > hi make the box empty.
class Box {
 public:
  Box(Shape shape, std::vector<std::pair<Integer, Integer>> bounds);
  static Box uniform(const Shape& shape, const Integer& lo, const Integer& hi);
  /// Bounding box of the given weights, widened by `margin` on every side.
  static Box around(const std::vector<Weight>& weights, const Integer& margin);

  const Shape& shape() const { return shape_; }
  const std::vector<std::pair<Integer, Integer>>& bounds() const { return bounds_; }
  bool empty() const;
  bool contains(const Weight& lambda) const;

  /// Dominant weights in the box, lexicographically ordered.
  std::vector<Weight> dominant_weights() const;

 private:
  Shape shape_;
  std::vector<std::pair<Integer, Integer>> bounds_;
};

/// (W.lambda + p^{d(lambda)+(1|1)} Z Phi) intersected with the box and the
/// dominant weights, each with a witness. Sorted by weight.
std::vector<std::pair<Weight, EvenLink>> even_class_in_box(const Weight& lambda, const Box& box);

struct ChainStep {
  Move move;
  Weight weight;  // weight reached by this move
};

struct LinkageChain {
  Weight start;
  std::vector<ChainStep> steps;

  const Weight& end() const { return steps.empty() ? start : steps.back().weight; }
};

struct ChainCheck {
  bool ok = true;
  std::size_t failed_step = 0;  // 1-based index of the first bad step
  std::string reason;
};

/// Replays every step through the validators; every weight must be dominant.
ChainCheck replay_chain(const LinkageChain& chain);

enum class Verdict { Linked, FingerprintMismatch, InconclusiveWithinBox };

std::string to_string(Verdict v);

struct SameBlockResult {
  Verdict verdict;
  std::optional<LinkageChain> chain;  // set exactly when Linked
  Fingerprint from;
  Fingerprint to;
  std::size_t explored = 0;  // weights visited by the search
};

/// Sound but incomplete: a positive answer carries a chain, a fingerprint
/// mismatch is a proof of different blocks, anything else is inconclusive.
SameBlockResult same_block(const Weight& lambda, const Weight& mu, const Box& box);

struct BlockEdge {
  std::size_t from;
  std::size_t to;
  Move move;
};

/// Dominant weights in a box with odd edges and a spanning star for every
/// box-restricted even class.
struct BlockGraph {
  std::vector<Weight> nodes;
  std::vector<BlockEdge> edges;
};

BlockGraph block_graph(const Box& box);

struct BlockClass {
  Fingerprint fingerprint;
  std::vector<Weight> members;
};

struct BlockPartition {
  std::vector<BlockClass> classes;  // ordered by smallest member
  /// Groups of class indices sharing a fingerprint: possibly the same block,
  /// unresolved within the box.
  std::vector<std::vector<std::size_t>> unresolved;
};

BlockPartition enumerate_block_classes(const Box& box);
BlockPartition partition_from_graph(const BlockGraph& graph);

}  // namespace superblocks
