#pragma once

// Permutations of {1..m+n}, the positive systems Phi^+_w they define, the
// (dot) actions on weights, minimal coset representatives D_{m,n} and the
// chain of adjacent positive systems from the identity to the longest element.

#include "superblocks/weights.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace superblocks {

/// A bijection of {0..size-1}; k maps to images()[k].
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t size);
  static Permutation transposition(std::size_t size, std::size_t i, std::size_t j);
  /// `id` or one-line 1-based image notation `3,1,2`.
  static Permutation parse(std::string_view text, std::size_t size);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t k) const { return images_[k]; }
  const std::vector<std::size_t>& images() const { return images_; }

  Permutation inverse() const;
  /// (a * b)(k) = a(b(k)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  /// Number of inversions.
  std::size_t length() const;
  bool is_identity() const;
  /// True when w maps each of the blocks [0, m) and [m, size) to itself.
  bool preserves_blocks(int m) const;

  /// w(sum lambda_k e_k) = sum lambda_k e_{w(k)}.
  Weight act(const Weight& lambda) const;
  HalfWeight act(const HalfWeight& lambda) const;

  /// One-line 1-based notation, `3,1,2`.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// All of S_size in lexicographic order of images.
std::vector<Permutation> all_permutations(std::size_t size);
/// The Weyl subgroup S_m x S_n, lexicographic.
std::vector<Permutation> block_permutations(const Shape& shape);

/// The reflection s_alpha as a permutation (the transposition (i j)).
Permutation reflection_permutation(const Root& alpha);

struct PositiveSystem {
  Permutation w;
  /// e_{w(a)} - e_{w(b)} for a < b, in lexicographic (a, b) order.
  std::vector<Root> roots;

  bool contains(const Root& alpha) const;
};

PositiveSystem positive_system(const Shape& shape, const Permutation& w);
/// alpha_k = e_{w(k)} - e_{w(k+1)}, k = 0..m+n-2.
std::vector<Root> simple_roots(const Shape& shape, const Permutation& w);

/// rho_0(w), rho_1(w): half sums of the even / odd roots of Phi^+_w.
HalfWeight rho0(const Shape& shape, const Permutation& w);
HalfWeight rho1(const Shape& shape, const Permutation& w);

/// s_alpha(lambda) = lambda - (lambda, alpha^vee) alpha.
Weight reflect(const Weight& lambda, const Root& alpha);

/// w.lambda = w(lambda + rho_0) - rho_0 for w in S_m x S_n.
Weight dot_action(const Permutation& w, const Weight& lambda);

/// D_{m,n}: w with w^{-1} increasing on each block, lexicographic order.
std::vector<Permutation> dmn_representatives(const Shape& shape);
bool in_dmn(const Shape& shape, const Permutation& w);

struct RegularDecomposition {
  Permutation even_part;  // in S_m x S_n
  Permutation coset_rep;  // in D_{m,n}
};
/// w = even_part * coset_rep.
RegularDecomposition regular_decomposition(const Shape& shape, const Permutation& w);

/// y_0 = 1, y_k = s_{beta_k} y_{k-1}; the first mn steps flip odd roots, the
/// remaining N = m(m-1)/2 + n(n-1)/2 steps flip even roots.
struct AdjacencyChain {
  std::vector<Permutation> elements;  // y_0 .. y_{mn+N}
  std::vector<Root> flipped;          // root flipped at step k is flipped[k-1]
  std::size_t odd_steps = 0;          // mn
};

/// Phi^+_{next} = Phi^+_{prev} \ {alpha} u {-alpha} with alpha simple in Phi^+_{prev}.
bool adjacent_via(const Shape& shape, const Permutation& prev, const Permutation& next,
                  const Root& alpha);

/// Builds the chain, ordering odd roots by a linear extension of the root
/// order (refined lexicographically), backtracking when adjacency fails.
/// Throws std::runtime_error if no ordering works.
AdjacencyChain adjacency_chain(const Shape& shape);

/// mu <=_w lambda: lambda - mu is a non-negative integer combination of Pi_w.
/// Equality is allowed.
bool leq_w(const Weight& mu, const Weight& lambda, const Permutation& w);

}  // namespace superblocks
