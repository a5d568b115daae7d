#pragma once

// Weight lattice of GL(m|n): integral and half-integral weights, roots,
// the super bilinear form and the rho-vectors of the standard positive system.

#include "superblocks/integer.hpp"

#include <compare>
#include <iosfwd>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace superblocks {

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ambient parameters: block sizes m, n, odd prime p and Frobenius level r.
class Shape {
 public:
  Shape(int m, int n, int p, int r = 1);

  int m() const { return m_; }
  int n() const { return n_; }
  int p() const { return p_; }
  int r() const { return r_; }
  std::size_t rank() const { return static_cast<std::size_t>(m_ + n_); }

  /// Indices are 0-based; the first block is [0, m).
  bool is_first_block(std::size_t k) const { return k < static_cast<std::size_t>(m_); }

  Integer p_power(unsigned e) const { return ipow(Integer(p_), e); }

  /// Same lattice (m and n agree), ignoring p and r.
  bool same_lattice(const Shape& other) const { return m_ == other.m_ && n_ == other.n_; }

  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  int m_;
  int n_;
  int p_;
  int r_;
};

bool is_prime(int x);

class Weight {
 public:
  Weight(Shape shape, std::vector<Integer> coords);

  static Weight zero(const Shape& shape);
  /// Unit vector epsilon_k (0-based k).
  static Weight unit(const Shape& shape, std::size_t k);
  /// Parses `a,b,...|c,d,...`. The `|` may be omitted, in which case the
  /// split falls after the first m entries.
  static Weight parse(std::string_view text, const Shape& shape);

  const Shape& shape() const { return shape_; }
  std::size_t size() const { return coords_.size(); }
  const std::vector<Integer>& coords() const { return coords_; }
  const Integer& operator[](std::size_t k) const { return coords_[k]; }
  Integer& operator[](std::size_t k) { return coords_[k]; }

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(const Integer& k, Weight a);

  /// `2,0|1,0`
  std::string to_string() const;

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.shape_.same_lattice(b.shape_) && a.coords_ == b.coords_;
  }
  /// Lexicographic on coordinates; used as the canonical tie-break order.
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords_ < b.coords_; }

 private:
  Shape shape_;
  std::vector<Integer> coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

/// A value in (1/2)Z, stored doubled.
struct Half {
  Integer doubled;

  static Half of(const Integer& x) { return Half{2 * x}; }
  bool is_integral() const { return doubled % 2 == 0; }
  Integer to_integer() const;
  std::string to_string() const;

  friend Half operator+(const Half& a, const Half& b) { return Half{a.doubled + b.doubled}; }
  friend Half operator-(const Half& a, const Half& b) { return Half{a.doubled - b.doubled}; }
  friend bool operator==(const Half&, const Half&) = default;
};

/// Element of X(T) tensor (1/2)Z, stored with every coordinate doubled.
class HalfWeight {
 public:
  HalfWeight(Shape shape, std::vector<Integer> doubled);
  explicit HalfWeight(const Weight& w);

  const Shape& shape() const { return shape_; }
  std::size_t size() const { return doubled_.size(); }
  const std::vector<Integer>& doubled() const { return doubled_; }
  Half operator[](std::size_t k) const { return Half{doubled_[k]}; }

  bool is_integral() const;
  /// Throws std::domain_error when some coordinate is not an integer.
  Weight to_weight() const;

  HalfWeight& operator+=(const HalfWeight& other);
  HalfWeight& operator-=(const HalfWeight& other);
  friend HalfWeight operator+(HalfWeight a, const HalfWeight& b) { return a += b; }
  friend HalfWeight operator-(HalfWeight a, const HalfWeight& b) { return a -= b; }
  friend HalfWeight operator*(const Integer& k, HalfWeight a);

  std::string to_string() const;

  friend bool operator==(const HalfWeight& a, const HalfWeight& b) {
    return a.shape_.same_lattice(b.shape_) && a.doubled_ == b.doubled_;
  }

 private:
  Shape shape_;
  std::vector<Integer> doubled_;
};

/// The root epsilon_i - epsilon_j (0-based indices, i != j).
class Root {
 public:
  Root(Shape shape, std::size_t i, std::size_t j);

  const Shape& shape() const { return shape_; }
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }

  bool is_odd() const { return shape_.is_first_block(i_) != shape_.is_first_block(j_); }
  bool is_even() const { return !is_odd(); }
  /// Positive for the standard system Phi^+ (i < j).
  bool is_positive() const { return i_ < j_; }

  Root negated() const { return Root(shape_, j_, i_); }
  Weight as_weight() const;
  /// `e1-e3`, 1-based.
  std::string to_string() const;

  friend bool operator==(const Root& a, const Root& b) { return a.i_ == b.i_ && a.j_ == b.j_; }
  friend auto operator<=>(const Root& a, const Root& b) {
    if (auto c = a.i_ <=> b.i_; c != 0) return c;
    return a.j_ <=> b.j_;
  }

 private:
  Shape shape_;
  std::size_t i_;
  std::size_t j_;
};

void require_same_lattice(const Shape& a, const Shape& b, const char* what);

/// (lambda, alpha^vee) = lambda_i - lambda_j.
Integer pairing_coroot(const Weight& lambda, const Root& alpha);
Half pairing_coroot(const HalfWeight& lambda, const Root& alpha);

/// (lambda, alpha) = (-1)^{|e_i|} lambda_i - (-1)^{|e_j|} lambda_j.
Integer pairing_form(const Weight& lambda, const Root& alpha);
Half pairing_form(const HalfWeight& lambda, const Root& alpha);

/// Half sums of even / odd roots of the standard positive system, and rho = rho0 - rho1.
HalfWeight rho0(const Shape& shape);
HalfWeight rho1(const Shape& shape);
HalfWeight rho(const Shape& shape);

/// (lambda + rho, alpha) for an odd positive alpha = e_i - e_j, evaluated as
/// lambda_i + lambda_j + 2m + 1 - i - j (1-based i, j).
Integer odd_shifted_pairing(const Weight& lambda, const Root& alpha);

/// Non-increasing within each block; nothing is required across positions m, m+1.
bool is_dominant(const Weight& lambda);

struct Degree {
  Integer total;
  Integer first_block;
  Integer second_block;
};
Degree degree(const Weight& lambda);

/// Membership in X_r(T)^+: 0 <= lambda_i - lambda_{i+1} <= p^r - 1 for i != m.
bool in_restricted_region(const Weight& lambda, int r);

}  // namespace superblocks
