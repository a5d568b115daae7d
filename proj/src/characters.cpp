#include "superblocks/characters.hpp"

#include <stdexcept>

namespace superblocks {

CharacterPoly CharacterPoly::one(const Shape& shape) { return monomial(Weight::zero(shape)); }

CharacterPoly CharacterPoly::monomial(const Weight& lambda, const Integer& coeff) {
  CharacterPoly c(lambda.shape());
  c.add_term(lambda.coords(), coeff);
  return c;
}

Integer CharacterPoly::coefficient(const Weight& lambda) const {
  auto it = terms_.find(lambda.coords());
  return it == terms_.end() ? Integer(0) : it->second;
}

void CharacterPoly::add_term(const Exponent& exponent, const Integer& coeff) {
  if (exponent.size() != shape_.rank()) throw ShapeMismatch("exponent has wrong length");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

CharacterPoly& CharacterPoly::operator+=(const CharacterPoly& other) {
  require_same_lattice(shape_, other.shape_, "character addition");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

CharacterPoly& CharacterPoly::operator-=(const CharacterPoly& other) {
  require_same_lattice(shape_, other.shape_, "character subtraction");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

CharacterPoly operator*(const CharacterPoly& a, const CharacterPoly& b) {
  require_same_lattice(a.shape_, b.shape_, "character multiplication");
  CharacterPoly out(a.shape_);
  CharacterPoly::Exponent sum(a.shape_.rank());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = ea[k] + eb[k];
      out.add_term(sum, ca * cb);
    }
  return out;
}

Integer CharacterPoly::evaluate_at_ones() const {
  Integer total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

std::string CharacterPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer magnitude = c < 0 ? Integer(-c) : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (magnitude != 1) out += magnitude.str() + "·";
    out += "e^(" + Weight(shape_, e).to_string() + ")";
  }
  return out;
}

namespace {

Integer level_power(const Shape& shape, int r) {
  if (r < 1) throw std::invalid_argument("Frobenius level r must be at least 1");
  return shape.p_power(static_cast<unsigned>(r));
}

}  // namespace

CharacterPoly even_factor(const Root& alpha, int r) {
  if (alpha.is_odd()) throw std::invalid_argument("even_factor needs an even root, got " +
                                                  alpha.to_string());
  const Shape& shape = alpha.shape();
  const Integer count = level_power(shape, r);
  CharacterPoly c(shape);
  const Weight step = alpha.as_weight();
  Weight exponent = Weight::zero(shape);
  for (Integer k = 0; k < count; ++k) {
    c.add_term(exponent.coords(), 1);
    exponent -= step;
  }
  return c;
}

CharacterPoly odd_factor(const Root& alpha) {
  if (alpha.is_even()) throw std::invalid_argument("odd_factor needs an odd root, got " +
                                                   alpha.to_string());
  return CharacterPoly::one(alpha.shape()) + CharacterPoly::monomial(-alpha.as_weight());
}

CharacterPoly zhat_char(const Weight& lambda, const Permutation& w, int r) {
  const Shape& shape = lambda.shape();
  CharacterPoly c = CharacterPoly::monomial(lambda);
  for (const Root& alpha : positive_system(shape, w).roots)
    c = c * (alpha.is_even() ? even_factor(alpha, r) : odd_factor(alpha));
  return c;
}

Weight bracket_weight(const Weight& lambda, const Permutation& w, int r) {
  const Shape& shape = lambda.shape();
  const Integer scale = level_power(shape, r) - 1;
  const HalfWeight shifted = HalfWeight(lambda) + scale * (rho0(shape, w) - rho0(shape)) +
                             (rho1(shape, w) - rho1(shape));
  if (!shifted.is_integral())
    throw std::logic_error("bracket_weight produced a non-integral weight " +
                           shifted.to_string());
  return shifted.to_weight();
}

CharacterPoly shift(const CharacterPoly& c, const Weight& mu, int r) {
  return c * CharacterPoly::monomial(level_power(mu.shape(), r) * mu);
}

Weight integral_char_chi(const Shape& shape, const Permutation& w, int r, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const Integer scale = level_power(shape, r) - 1;
  // The doubled representation of rho_0(w), rho_1(w) is exactly 2 rho_0(w), 2 rho_1(w).
  const HalfWeight r0 = rho0(shape, w);
  const HalfWeight r1 = rho1(shape, w);
  const auto& d0 = r0.doubled();
  const auto& d1 = r1.doubled();
  std::vector<Integer> coords(shape.rank());
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] = sign * (scale * d0[k] + d1[k]);
  return Weight(shape, std::move(coords));
}

}  // namespace superblocks
