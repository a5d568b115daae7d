#pragma once

// Formal characters as sparse Laurent polynomials in e^{e_1}, ..., e^{e_{m+n}}
// with exact integer coefficients, and the product formula for the
// characters of the modules Zhat_{r,w}(lambda).

#include "superblocks/roots.hpp"
#include "superblocks/weights.hpp"

#include <map>
#include <string>
#include <vector>

namespace superblocks {

class CharacterPoly {
 public:
  using Exponent = std::vector<Integer>;
  /// Lexicographic exponent order; no stored coefficient is zero.
  using Terms = std::map<Exponent, Integer>;

  explicit CharacterPoly(Shape shape) : shape_(shape) {}

  static CharacterPoly zero(const Shape& shape) { return CharacterPoly(shape); }
  static CharacterPoly one(const Shape& shape);
  /// coeff * e^lambda
  static CharacterPoly monomial(const Weight& lambda, const Integer& coeff = 1);

  const Shape& shape() const { return shape_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Weight& lambda) const;

  /// Adds coeff * e^exponent, dropping the term if it cancels.
  void add_term(const Exponent& exponent, const Integer& coeff);

  CharacterPoly& operator+=(const CharacterPoly& other);
  CharacterPoly& operator-=(const CharacterPoly& other);
  friend CharacterPoly operator+(CharacterPoly a, const CharacterPoly& b) { return a += b; }
  friend CharacterPoly operator-(CharacterPoly a, const CharacterPoly& b) { return a -= b; }
  friend CharacterPoly operator*(const CharacterPoly& a, const CharacterPoly& b);

  /// Value at e^{e_k} = 1 for all k: the sum of the coefficients.
  Integer evaluate_at_ones() const;

  /// `e^(2,0|1) + 3·e^(1,1|1)`, highest exponent first.
  std::string to_string() const;

  friend bool operator==(const CharacterPoly& a, const CharacterPoly& b) {
    return a.shape_.same_lattice(b.shape_) && a.terms_ == b.terms_;
  }

 private:
  Shape shape_;
  Terms terms_;
};

/// sum_{k=0}^{p^r - 1} e^{-k alpha} for even alpha.
CharacterPoly even_factor(const Root& alpha, int r);
/// 1 + e^{-alpha} for odd alpha.
CharacterPoly odd_factor(const Root& alpha);

/// e^lambda prod_{even alpha in Phi^+_w} even_factor(alpha, r)
///          prod_{odd alpha in Phi^+_w} odd_factor(alpha).
CharacterPoly zhat_char(const Weight& lambda, const Permutation& w, int r);

/// lambda<w> = lambda + (p^r - 1)(rho_0(w) - rho_0) + (rho_1(w) - rho_1).
Weight bracket_weight(const Weight& lambda, const Permutation& w, int r);

/// c * e^{p^r mu}.
CharacterPoly shift(const CharacterPoly& c, const Weight& mu, int r);

/// sign * 2((p^r - 1) rho_0(w) + rho_1(w)), sign = +1 or -1.
Weight integral_char_chi(const Shape& shape, const Permutation& w, int r, int sign);

}  // namespace superblocks
