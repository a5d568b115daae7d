#include "superblocks/weights.hpp"

#include <ostream>
#include <sstream>

namespace superblocks {

namespace {

Integer parse_integer(std::string_view token, std::string_view literal) {
  std::size_t begin = 0;
  while (begin < token.size() && token[begin] == ' ') ++begin;
  std::size_t end = token.size();
  while (end > begin && token[end - 1] == ' ') --end;
  token = token.substr(begin, end - begin);
  std::size_t digits = (!token.empty() && (token[0] == '-' || token[0] == '+')) ? 1 : 0;
  if (digits == token.size())
    throw std::invalid_argument("malformed weight literal '" + std::string(literal) + "'");
  for (std::size_t k = digits; k < token.size(); ++k) {
    if (token[k] < '0' || token[k] > '9')
      throw std::invalid_argument("malformed weight literal '" + std::string(literal) + "'");
  }
  return Integer(std::string(token[0] == '+' ? token.substr(1) : token));
}

std::vector<Integer> parse_list(std::string_view text, std::string_view literal) {
  std::vector<Integer> out;
  if (text.find_first_not_of(' ') == std::string_view::npos) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.push_back(parse_integer(text.substr(start, comma - start), literal));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename Coords>
std::string join_blocks(const Coords& coords, int m, auto&& format) {
  std::string out;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (k > 0) out += (k == static_cast<std::size_t>(m)) ? "|" : ",";
    out += format(coords[k]);
  }
  return out;
}

}  // namespace

bool is_prime(int x) {
  if (x < 2) return false;
  for (int d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

Shape::Shape(int m, int n, int p, int r) : m_(m), n_(n), p_(p), r_(r) {
  if (m < 1 || n < 1) throw std::invalid_argument("block sizes m and n must be positive");
  if (p == 2) throw std::invalid_argument("characteristic 2 unsupported (p must be an odd prime)");
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (r < 1) throw std::invalid_argument("Frobenius level r must be positive");
}

std::string Shape::to_string() const {
  std::ostringstream os;
  os << "GL(" << m_ << "|" << n_ << "), p=" << p_ << ", r=" << r_;
  return os.str();
}

void require_same_lattice(const Shape& a, const Shape& b, const char* what) {
  if (!a.same_lattice(b))
    throw ShapeMismatch(std::string(what) + ": shape mismatch (" + a.to_string() + " vs " +
                        b.to_string() + ")");
}

// Weight

Weight::Weight(Shape shape, std::vector<Integer> coords)
    : shape_(shape), coords_(std::move(coords)) {
  if (coords_.size() != shape_.rank())
    throw ShapeMismatch("weight has " + std::to_string(coords_.size()) + " coordinates, expected " +
                        std::to_string(shape_.rank()));
}

Weight Weight::zero(const Shape& shape) {
  return Weight(shape, std::vector<Integer>(shape.rank()));
}

Weight Weight::unit(const Shape& shape, std::size_t k) {
  Weight w = zero(shape);
  w.coords_.at(k) = 1;
  return w;
}

Weight Weight::parse(std::string_view text, const Shape& shape) {
  const std::size_t bar = text.find('|');
  std::vector<Integer> coords;
  if (bar == std::string_view::npos) {
    coords = parse_list(text, text);
  } else {
    if (text.find('|', bar + 1) != std::string_view::npos)
      throw std::invalid_argument("malformed weight literal '" + std::string(text) +
                                  "': more than one '|'");
    coords = parse_list(text.substr(0, bar), text);
    if (coords.size() != static_cast<std::size_t>(shape.m()))
      throw std::invalid_argument("malformed weight literal '" + std::string(text) +
                                  "': first block needs " + std::to_string(shape.m()) +
                                  " entries");
    auto second = parse_list(text.substr(bar + 1), text);
    coords.insert(coords.end(), second.begin(), second.end());
  }
  if (coords.size() != shape.rank())
    throw std::invalid_argument("malformed weight literal '" + std::string(text) + "': expected " +
                                std::to_string(shape.rank()) + " entries");
  return Weight(shape, std::move(coords));
}

Weight& Weight::operator+=(const Weight& other) {
  require_same_lattice(shape_, other.shape_, "weight addition");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  require_same_lattice(shape_, other.shape_, "weight subtraction");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= other.coords_[k];
  return *this;
}

Weight operator-(Weight a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

Weight operator*(const Integer& k, Weight a) {
  for (auto& c : a.coords_) c *= k;
  return a;
}

std::string Weight::to_string() const {
  return join_blocks(coords_, shape_.m(), [](const Integer& x) { return x.str(); });
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

// Half / HalfWeight

Integer Half::to_integer() const {
  if (!is_integral()) throw std::domain_error("half-integer " + to_string() + " is not integral");
  return doubled / 2;
}

std::string Half::to_string() const {
  if (is_integral()) return Integer(doubled / 2).str();
  return doubled.str() + "/2";
}

HalfWeight::HalfWeight(Shape shape, std::vector<Integer> doubled)
    : shape_(shape), doubled_(std::move(doubled)) {
  if (doubled_.size() != shape_.rank())
    throw ShapeMismatch("half-weight has wrong number of coordinates");
}

HalfWeight::HalfWeight(const Weight& w) : shape_(w.shape()), doubled_(w.coords()) {
  for (auto& c : doubled_) c *= 2;
}

bool HalfWeight::is_integral() const {
  for (const auto& c : doubled_)
    if (c % 2 != 0) return false;
  return true;
}

Weight HalfWeight::to_weight() const {
  if (!is_integral())
    throw std::domain_error("half-weight " + to_string() + " is not integral");
  std::vector<Integer> coords;
  coords.reserve(doubled_.size());
  for (const auto& c : doubled_) coords.push_back(c / 2);
  return Weight(shape_, std::move(coords));
}

HalfWeight& HalfWeight::operator+=(const HalfWeight& other) {
  require_same_lattice(shape_, other.shape_, "half-weight addition");
  for (std::size_t k = 0; k < doubled_.size(); ++k) doubled_[k] += other.doubled_[k];
  return *this;
}

HalfWeight& HalfWeight::operator-=(const HalfWeight& other) {
  require_same_lattice(shape_, other.shape_, "half-weight subtraction");
  for (std::size_t k = 0; k < doubled_.size(); ++k) doubled_[k] -= other.doubled_[k];
  return *this;
}

HalfWeight operator*(const Integer& k, HalfWeight a) {
  for (auto& c : a.doubled_) c *= k;
  return a;
}

std::string HalfWeight::to_string() const {
  return join_blocks(doubled_, shape_.m(), [](const Integer& x) { return Half{x}.to_string(); });
}

// Root

Root::Root(Shape shape, std::size_t i, std::size_t j) : shape_(shape), i_(i), j_(j) {
  if (i == j || i >= shape.rank() || j >= shape.rank())
    throw std::invalid_argument("invalid root indices (" + std::to_string(i + 1) + ", " +
                                std::to_string(j + 1) + ")");
}

Weight Root::as_weight() const {
  Weight w = Weight::zero(shape_);
  w[i_] = 1;
  w[j_] = -1;
  return w;
}

std::string Root::to_string() const {
  return "e" + std::to_string(i_ + 1) + "-e" + std::to_string(j_ + 1);
}

// Pairings

Integer pairing_coroot(const Weight& lambda, const Root& alpha) {
  require_same_lattice(lambda.shape(), alpha.shape(), "pairing_coroot");
  return lambda[alpha.i()] - lambda[alpha.j()];
}

Half pairing_coroot(const HalfWeight& lambda, const Root& alpha) {
  require_same_lattice(lambda.shape(), alpha.shape(), "pairing_coroot");
  return lambda[alpha.i()] - lambda[alpha.j()];
}

namespace {

template <typename Value>
Value signed_entry(const Value& x, const Shape& shape, std::size_t k) {
  return shape.is_first_block(k) ? x : Value{} - x;
}

}  // namespace

Integer pairing_form(const Weight& lambda, const Root& alpha) {
  require_same_lattice(lambda.shape(), alpha.shape(), "pairing_form");
  const auto& s = lambda.shape();
  return signed_entry(lambda[alpha.i()], s, alpha.i()) - signed_entry(lambda[alpha.j()], s, alpha.j());
}

Half pairing_form(const HalfWeight& lambda, const Root& alpha) {
  require_same_lattice(lambda.shape(), alpha.shape(), "pairing_form");
  const auto& s = lambda.shape();
  return signed_entry(lambda[alpha.i()], s, alpha.i()) - signed_entry(lambda[alpha.j()], s, alpha.j());
}

HalfWeight rho0(const Shape& shape) {
  std::vector<Integer> doubled(shape.rank());
  for (std::size_t i = 0; i < shape.rank(); ++i)
    for (std::size_t j = i + 1; j < shape.rank(); ++j)
      if (shape.is_first_block(i) == shape.is_first_block(j)) {
        doubled[i] += 1;
        doubled[j] -= 1;
      }
  return HalfWeight(shape, std::move(doubled));
}

HalfWeight rho1(const Shape& shape) {
  std::vector<Integer> doubled(shape.rank());
  for (std::size_t i = 0; i < shape.rank(); ++i)
    for (std::size_t j = i + 1; j < shape.rank(); ++j)
      if (shape.is_first_block(i) != shape.is_first_block(j)) {
        doubled[i] += 1;
        doubled[j] -= 1;
      }
  return HalfWeight(shape, std::move(doubled));
}

HalfWeight rho(const Shape& shape) { return rho0(shape) - rho1(shape); }

Integer odd_shifted_pairing(const Weight& lambda, const Root& alpha) {
  require_same_lattice(lambda.shape(), alpha.shape(), "odd_shifted_pairing");
  if (!alpha.is_odd() || !alpha.is_positive())
    throw std::invalid_argument("odd_shifted_pairing needs an odd positive root, got " +
                                alpha.to_string());
  const int m = lambda.shape().m();
  const auto i = static_cast<long>(alpha.i()) + 1;
  const auto j = static_cast<long>(alpha.j()) + 1;
  return lambda[alpha.i()] + lambda[alpha.j()] + (2 * m + 1 - i - j);
}

bool is_dominant(const Weight& lambda) {
  const auto& s = lambda.shape();
  for (std::size_t k = 0; k + 1 < lambda.size(); ++k) {
    if (k + 1 == static_cast<std::size_t>(s.m())) continue;
    if (lambda[k] < lambda[k + 1]) return false;
  }
  return true;
}

Degree degree(const Weight& lambda) {
  Degree d;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    (lambda.shape().is_first_block(k) ? d.first_block : d.second_block) += lambda[k];
  }
  d.total = d.first_block + d.second_block;
  return d;
}

bool in_restricted_region(const Weight& lambda, int r) {
  const auto& s = lambda.shape();
  const Integer bound = s.p_power(static_cast<unsigned>(r)) - 1;
  for (std::size_t k = 0; k + 1 < lambda.size(); ++k) {
    if (k + 1 == static_cast<std::size_t>(s.m())) continue;
    const Integer diff = lambda[k] - lambda[k + 1];
    if (diff < 0 || diff > bound) return false;
  }
  return true;
}

}  // namespace superblocks
