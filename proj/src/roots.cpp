#include "superblocks/roots.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace superblocks {

// Permutation

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<std::size_t> images(size);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t size, std::size_t i, std::size_t j) {
  auto images = identity(size).images_;
  std::swap(images.at(i), images.at(j));
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, std::size_t size) {
  if (text == "id") return identity(size);
  std::vector<std::size_t> images;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = std::min(text.find(',', start), text.size());
    std::string token(text.substr(start, comma - start));
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
    const auto value = std::stoul(token);
    if (value < 1 || value > size)
      throw std::invalid_argument("permutation entry " + token + " out of range 1.." +
                                  std::to_string(size));
    images.push_back(value - 1);
    start = comma + 1;
  }
  if (images.size() != size)
    throw std::invalid_argument("permutation '" + std::string(text) + "' must have " +
                                std::to_string(size) + " entries");
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("'" + std::string(text) + "' is not a permutation");
  }
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) inv[images_[k]] = k;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation sizes differ");
  std::vector<std::size_t> images(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) images[k] = a(b(k));
  return Permutation(std::move(images));
}

std::size_t Permutation::length() const {
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < images_.size(); ++a)
    for (std::size_t b = a + 1; b < images_.size(); ++b)
      if (images_[a] > images_[b]) ++inversions;
  return inversions;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] != k) return false;
  return true;
}

bool Permutation::preserves_blocks(int m) const {
  const auto split = static_cast<std::size_t>(m);
  for (std::size_t k = 0; k < images_.size(); ++k)
    if ((k < split) != (images_[k] < split)) return false;
  return true;
}

Weight Permutation::act(const Weight& lambda) const {
  if (lambda.size() != size()) throw ShapeMismatch("permutation and weight sizes differ");
  std::vector<Integer> coords(size());
  for (std::size_t k = 0; k < size(); ++k) coords[images_[k]] = lambda[k];
  return Weight(lambda.shape(), std::move(coords));
}

HalfWeight Permutation::act(const HalfWeight& lambda) const {
  if (lambda.size() != size()) throw ShapeMismatch("permutation and weight sizes differ");
  std::vector<Integer> doubled(size());
  for (std::size_t k = 0; k < size(); ++k) doubled[images_[k]] = lambda.doubled()[k];
  return HalfWeight(lambda.shape(), std::move(doubled));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(images_[k] + 1);
  }
  return out;
}

std::vector<Permutation> all_permutations(std::size_t size) {
  std::vector<Permutation> out;
  auto images = Permutation::identity(size).images();
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<Permutation> block_permutations(const Shape& shape) {
  const auto m = static_cast<std::size_t>(shape.m());
  std::vector<Permutation> out;
  auto first = Permutation::identity(m).images();
  do {
    auto second = Permutation::identity(shape.rank()).images();
    second.erase(second.begin(), second.begin() + static_cast<std::ptrdiff_t>(m));
    do {
      std::vector<std::size_t> images = first;
      images.insert(images.end(), second.begin(), second.end());
      out.emplace_back(std::move(images));
    } while (std::next_permutation(second.begin(), second.end()));
  } while (std::next_permutation(first.begin(), first.end()));
  return out;
}

Permutation reflection_permutation(const Root& alpha) {
  return Permutation::transposition(alpha.shape().rank(), alpha.i(), alpha.j());
}

// Positive systems

bool PositiveSystem::contains(const Root& alpha) const {
  return std::find(roots.begin(), roots.end(), alpha) != roots.end();
}

PositiveSystem positive_system(const Shape& shape, const Permutation& w) {
  if (w.size() != shape.rank()) throw ShapeMismatch("permutation size does not match shape");
  PositiveSystem ps{w, {}};
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b) ps.roots.emplace_back(shape, w(a), w(b));
  return ps;
}

std::vector<Root> simple_roots(const Shape& shape, const Permutation& w) {
  if (w.size() != shape.rank()) throw ShapeMismatch("permutation size does not match shape");
  std::vector<Root> out;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) out.emplace_back(shape, w(k), w(k + 1));
  return out;
}

namespace {

HalfWeight half_sum(const Shape& shape, const Permutation& w, bool odd) {
  std::vector<Integer> doubled(shape.rank());
  for (const Root& alpha : positive_system(shape, w).roots) {
    if (alpha.is_odd() != odd) continue;
    doubled[alpha.i()] += 1;
    doubled[alpha.j()] -= 1;
  }
  return HalfWeight(shape, std::move(doubled));
}

}  // namespace

HalfWeight rho0(const Shape& shape, const Permutation& w) { return half_sum(shape, w, false); }
HalfWeight rho1(const Shape& shape, const Permutation& w) { return half_sum(shape, w, true); }

Weight reflect(const Weight& lambda, const Root& alpha) {
  return lambda - pairing_coroot(lambda, alpha) * alpha.as_weight();
}

Weight dot_action(const Permutation& w, const Weight& lambda) {
  const Shape& shape = lambda.shape();
  if (w.size() != shape.rank()) throw ShapeMismatch("permutation size does not match shape");
  if (!w.preserves_blocks(shape.m()))
    throw std::invalid_argument("dot action needs a block-preserving permutation, got " +
                                w.to_string());
  const HalfWeight r0 = rho0(shape);
  return (w.act(HalfWeight(lambda) + r0) - r0).to_weight();
}

// D_{m,n} and the regular decomposition

bool in_dmn(const Shape& shape, const Permutation& w) {
  const Permutation inv = w.inverse();
  const auto m = static_cast<std::size_t>(shape.m());
  for (std::size_t k = 0; k + 1 < inv.size(); ++k) {
    if (k + 1 == m) continue;
    if (inv(k) > inv(k + 1)) return false;
  }
  return true;
}

std::vector<Permutation> dmn_representatives(const Shape& shape) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(shape.rank()))
    if (in_dmn(shape, w)) out.push_back(std::move(w));
  return out;
}

RegularDecomposition regular_decomposition(const Shape& shape, const Permutation& w) {
  if (w.size() != shape.rank()) throw ShapeMismatch("permutation size does not match shape");
  // w0 sends the k-th slot of a block to the block element with the k-th
  // smallest w^{-1}-value, so that (w0^{-1} w)^{-1} = w^{-1} w0 increases on blocks.
  const Permutation inv = w.inverse();
  const auto m = static_cast<std::size_t>(shape.m());
  std::vector<std::size_t> images(w.size());
  auto fill_block = [&](std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> block(hi - lo);
    std::iota(block.begin(), block.end(), lo);
    std::sort(block.begin(), block.end(),
              [&](std::size_t a, std::size_t b) { return inv(a) < inv(b); });
    for (std::size_t k = lo; k < hi; ++k) images[k] = block[k - lo];
  };
  fill_block(0, m);
  fill_block(m, w.size());
  Permutation w0(std::move(images));
  Permutation w1 = w0.inverse() * w;
  return {std::move(w0), std::move(w1)};
}

// Adjacency chain

bool adjacent_via(const Shape& shape, const Permutation& prev, const Permutation& next,
                  const Root& alpha) {
  const auto simple = simple_roots(shape, prev);
  if (std::find(simple.begin(), simple.end(), alpha) == simple.end()) return false;
  auto before = positive_system(shape, prev).roots;
  auto after = positive_system(shape, next).roots;
  std::set<Root> expected(before.begin(), before.end());
  expected.erase(alpha);
  expected.insert(alpha.negated());
  return expected == std::set<Root>(after.begin(), after.end());
}

namespace {

struct ChainSearch {
  const Shape& shape;
  AdjacencyChain chain;

  // Standard order on roots: beta < alpha iff alpha - beta is a non-zero
  // non-negative combination of the standard simple roots.
  bool below(const Root& beta, const Root& alpha) const {
    return !(beta == alpha) &&
           leq_w(beta.as_weight(), alpha.as_weight(), Permutation::identity(shape.rank()));
  }

  bool extend(std::vector<Root>& remaining, bool ordered) {
    if (remaining.empty()) return true;
    const Permutation& current = chain.elements.back();
    const auto simple = simple_roots(shape, current);
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      const Root alpha = remaining[k];
      if (ordered && std::any_of(remaining.begin(), remaining.end(),
                                 [&](const Root& beta) { return below(beta, alpha); }))
        continue;
      if (std::find(simple.begin(), simple.end(), alpha) == simple.end()) continue;
      Permutation next = reflection_permutation(alpha) * current;
      if (!adjacent_via(shape, current, next, alpha)) continue;
      chain.elements.push_back(std::move(next));
      chain.flipped.push_back(alpha);
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(k));
      if (extend(remaining, ordered)) return true;
      remaining.insert(remaining.begin() + static_cast<std::ptrdiff_t>(k), alpha);
      chain.elements.pop_back();
      chain.flipped.pop_back();
    }
    return false;
  }
};

}  // namespace

AdjacencyChain adjacency_chain(const Shape& shape) {
  std::vector<Root> odd;
  std::vector<Root> even;
  for (std::size_t i = 0; i < shape.rank(); ++i)
    for (std::size_t j = i + 1; j < shape.rank(); ++j) {
      Root alpha(shape, i, j);
      (alpha.is_odd() ? odd : even).push_back(alpha);
    }

  ChainSearch search{shape, {}};
  search.chain.elements.push_back(Permutation::identity(shape.rank()));
  search.chain.odd_steps = odd.size();
  if (!search.extend(odd, true))
    throw std::runtime_error("adjacency_chain: no linear extension of the odd root order gives "
                             "adjacent positive systems for " + shape.to_string());
  if (!search.extend(even, false))
    throw std::runtime_error("adjacency_chain: even roots cannot be flipped through adjacent "
                             "positive systems for " + shape.to_string());
  return std::move(search.chain);
}

bool leq_w(const Weight& mu, const Weight& lambda, const Permutation& w) {
  require_same_lattice(mu.shape(), lambda.shape(), "leq_w");
  if (w.size() != mu.size()) throw ShapeMismatch("permutation size does not match shape");
  // Coefficient of alpha_k = e_{w(k)} - e_{w(k+1)} is the prefix sum up to k.
  Integer prefix = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    prefix += lambda[w(k)] - mu[w(k)];
    if (prefix < 0) return false;
  }
  return prefix == 0;
}

}  // namespace superblocks
