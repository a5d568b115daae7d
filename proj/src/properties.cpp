#include "superblocks/properties.hpp"

#include "superblocks/characters.hpp"
#include "superblocks/serialize.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace superblocks {

// WeightSampler

long WeightSampler::uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Weight WeightSampler::weight(const Shape& shape, long bound) {
  std::vector<Integer> coords;
  for (std::size_t k = 0; k < shape.rank(); ++k) coords.emplace_back(uniform(-bound, bound));
  return Weight(shape, std::move(coords));
}

Weight WeightSampler::dominant(const Shape& shape, long bound) {
  std::vector<Integer> coords = weight(shape, bound).coords();
  const auto split = coords.begin() + shape.m();
  std::sort(coords.begin(), split, std::greater<>());
  std::sort(split, coords.end(), std::greater<>());
  return Weight(shape, std::move(coords));
}

Permutation WeightSampler::permutation(std::size_t size) {
  auto images = Permutation::identity(size).images();
  std::shuffle(images.begin(), images.end(), rng_);
  return Permutation(std::move(images));
}

Permutation WeightSampler::block_permutation(const Shape& shape) {
  auto images = Permutation::identity(shape.rank()).images();
  const auto split = images.begin() + shape.m();
  std::shuffle(images.begin(), split, rng_);
  std::shuffle(split, images.end(), rng_);
  return Permutation(std::move(images));
}

Weight WeightSampler::lattice_vector(const Shape& shape, const Defect& d, long coefficient_bound) {
  Weight delta = Weight::zero(shape);
  const auto m = static_cast<std::size_t>(shape.m());
  for (std::size_t k = 0; k + 1 < shape.rank(); ++k) {
    if (k + 1 == m) continue;
    const auto& order = shape.is_first_block(k) ? d.plus : d.minus;
    const Integer step = shape.p_power(static_cast<unsigned>(*order + 1)) *
                         uniform(-coefficient_bound, coefficient_bound);
    delta[k] += step;
    delta[k + 1] -= step;
  }
  return delta;
}

Root WeightSampler::odd_positive_root(const Shape& shape) {
  const auto i = static_cast<std::size_t>(uniform(0, shape.m() - 1));
  const auto j = static_cast<std::size_t>(uniform(shape.m(), static_cast<long>(shape.rank()) - 1));
  return Root(shape, i, j);
}

Root WeightSampler::even_positive_root(const Shape& shape) {
  std::vector<Root> even;
  for (std::size_t i = 0; i < shape.rank(); ++i)
    for (std::size_t j = i + 1; j < shape.rank(); ++j)
      if (shape.is_first_block(i) == shape.is_first_block(j)) even.emplace_back(shape, i, j);
  if (even.empty()) throw std::invalid_argument("shape has no even roots");
  return even[static_cast<std::size_t>(uniform(0, static_cast<long>(even.size()) - 1))];
}

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = describe();
    }
  }
  bool failed() const { return !result_.passed; }
  SuiteResult finish() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::vector<Shape> small_shapes(std::initializer_list<int> primes) {
  std::vector<Shape> out;
  for (int p : primes)
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) out.emplace_back(m, n, p);
  return out;
}

template <typename Range>
const auto& pick(WeightSampler& sampler, const Range& range) {
  return range[static_cast<std::size_t>(sampler.uniform(0, static_cast<long>(range.size()) - 1))];
}

SuiteResult core_pairings(WeightSampler& sampler, std::size_t count) {
  Suite suite("core: pairings and rho identities");
  for (std::size_t k = 0; k < count && !suite.failed(); ++k) {
    const Shape shape = pick(sampler, small_shapes({3, 5}));
    const Weight lambda = sampler.weight(shape, 8);
    const HalfWeight r = rho(shape);
    for (std::size_t i = 0; i < shape.rank(); ++i)
      for (std::size_t j = 0; j < shape.rank(); ++j) {
        if (i == j) continue;
        const Root alpha(shape, i, j);
        suite.check(pairing_coroot(lambda, alpha) == lambda[i] - lambda[j],
                    [&] { return "coroot pairing at " + lambda.to_string(); });
        if (alpha.is_odd() && alpha.is_positive()) {
          const Half via_form = Half::of(pairing_form(lambda, alpha)) + pairing_form(r, alpha);
          suite.check(via_form == Half::of(odd_shifted_pairing(lambda, alpha)), [&] {
            return "odd_shifted_pairing disagrees with (lambda+rho, alpha) at " +
                   lambda.to_string() + ", " + alpha.to_string();
          });
        }
      }
    const HalfWeight round_trip = (r + HalfWeight(lambda)) - HalfWeight(lambda);
    suite.check(round_trip == r, [&] { return "half-weight round trip at " + lambda.to_string(); });
    Weight root_sum = Weight::zero(shape);
    for (const Root& alpha : positive_system(shape, Permutation::identity(shape.rank())).roots)
      root_sum += alpha.as_weight();
    const HalfWeight rho_sum = rho0(shape) + rho1(shape);
    suite.check(rho_sum.doubled() == root_sum.coords(),
                [&] { return "2rho0 + 2rho1 differs from the sum of positive roots"; });
  }
  return suite.finish();
}

SuiteResult roots_structure(WeightSampler& sampler, std::size_t count) {
  Suite suite("roots: positive systems, reflections, dot action");
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}}) {
    const Shape shape(m, n, 3);
    for (const auto& w : all_permutations(shape.rank())) {
      const auto pos = positive_system(shape, w).roots;
      std::set<Root> all(pos.begin(), pos.end());
      for (const auto& a : pos) all.insert(a.negated());
      suite.check(all.size() == shape.rank() * (shape.rank() - 1) &&
                      pos.size() * 2 == all.size(),
                  [&] { return "Phi^+_w does not split Phi for w=" + w.to_string(); });
      const auto [w0, w1] = regular_decomposition(shape, w);
      suite.check(w0 * w1 == w && w0.preserves_blocks(m) && in_dmn(shape, w1),
                  [&] { return "regular decomposition fails for " + w.to_string(); });
    }
  }
  for (std::size_t k = 0; k < count && !suite.failed(); ++k) {
    const Shape shape = pick(sampler, small_shapes({3, 5}));
    const Weight lambda = sampler.weight(shape, 8);
    const auto i = static_cast<std::size_t>(sampler.uniform(0, static_cast<long>(shape.rank()) - 1));
    auto j = static_cast<std::size_t>(sampler.uniform(0, static_cast<long>(shape.rank()) - 2));
    if (j >= i) ++j;
    const Root alpha(shape, i, j);
    suite.check(reflect(reflect(lambda, alpha), alpha) == lambda,
                [&] { return "reflection is not an involution at " + lambda.to_string(); });
    const Permutation v = sampler.block_permutation(shape);
    const Permutation w = sampler.block_permutation(shape);
    suite.check(dot_action(v * w, lambda) == dot_action(v, dot_action(w, lambda)),
                [&] { return "dot action is not an action at " + lambda.to_string(); });
  }
  return suite.finish();
}

SuiteResult roots_adjacency(WeightSampler&) {
  Suite suite("roots: adjacency chains up to GL(3|3)");
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const Shape shape(m, n, 3);
      const AdjacencyChain chain = adjacency_chain(shape);
      const std::size_t mn = static_cast<std::size_t>(m * n);
      const std::size_t big_n = static_cast<std::size_t>(m * (m - 1) / 2 + n * (n - 1) / 2);
      suite.check(chain.elements.size() == mn + big_n + 1, [&] { return "wrong chain length"; });
      for (std::size_t k = 1; k < chain.elements.size(); ++k) {
        suite.check(adjacent_via(shape, chain.elements[k - 1], chain.elements[k], chain.flipped[k - 1]) &&
                        chain.flipped[k - 1].is_odd() == (k <= mn),
                    [&] { return "step " + std::to_string(k) + " not adjacent for " + shape.to_string(); });
      }
      std::size_t longest = 0;
      for (const auto& w : dmn_representatives(shape)) longest = std::max(longest, w.length());
      const Permutation& y_mn = chain.elements[mn];
      suite.check(in_dmn(shape, y_mn) && y_mn.length() == longest,
                  [&] { return "y_mn is not the longest element of D_{m,n}"; });
      suite.check(chain.elements.back().length() == shape.rank() * (shape.rank() - 1) / 2,
                  [&] { return "last element is not the longest permutation"; });
    }
  return suite.finish();
}

SuiteResult roots_order(WeightSampler&) {
  Suite suite("roots: leq_w against bounded enumeration");
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}}) {
    const Shape shape(m, n, 3);
    const std::size_t rank = shape.rank();
    for (const auto& w : all_permutations(rank)) {
      const auto simple = simple_roots(shape, w);
      std::set<std::vector<Integer>> reachable;
      std::vector<long> coeffs(simple.size(), 0);
      auto enumerate = [&](auto&& self, std::size_t k) -> void {
        if (k == simple.size()) {
          Weight sum = Weight::zero(shape);
          for (std::size_t s = 0; s < simple.size(); ++s)
            sum += Integer(coeffs[s]) * simple[s].as_weight();
          reachable.insert(sum.coords());
          return;
        }
        for (long c = 0; c <= 3; ++c) {
          coeffs[k] = c;
          self(self, k + 1);
        }
      };
      enumerate(enumerate, 0);
      std::vector<Integer> diff(rank);
      auto scan = [&](auto&& self, std::size_t k, long budget) -> void {
        if (k == rank) {
          const Weight mu = Weight::zero(shape);
          const Weight lambda(shape, diff);
          suite.check(leq_w(mu, lambda, w) == (reachable.count(diff) > 0), [&] {
            return "leq_w mismatch for difference " + lambda.to_string() + ", w=" + w.to_string();
          });
          return;
        }
        for (long x = -budget; x <= budget; ++x) {
          diff[k] = x;
          self(self, k + 1, budget - std::abs(x));
        }
      };
      scan(scan, 0, 6);
    }
  }
  return suite.finish();
}

std::optional<Weight> random_even_partner(WeightSampler& sampler, const Weight& lambda) {
  const Defect d = defect(lambda);
  for (int attempt = 0; attempt < 50; ++attempt) {
    Weight mu = dot_action(sampler.block_permutation(lambda.shape()), lambda) +
                sampler.lattice_vector(lambda.shape(), d, 1);
    if (is_dominant(mu)) return mu;
  }
  return std::nullopt;
}

SuiteResult linkage_even(WeightSampler& sampler, std::size_t count) {
  Suite suite("linkage: even-linkage relation");
  for (std::size_t k = 0; k < count && !suite.failed(); ++k) {
    const Shape shape = pick(sampler, small_shapes({3, 5}));
    const Weight lambda = sampler.dominant(shape, 6);
    const Weight other = sampler.dominant(shape, 6);
    const Weight mu = random_even_partner(sampler, lambda).value_or(other);
    suite.check(even_linked(lambda, lambda).has_value(),
                [&] { return "not reflexive at " + lambda.to_string(); });
    for (const Weight& x : {mu, other}) {
      const auto forward = even_linked(lambda, x);
      const auto backward = even_linked(x, lambda);
      suite.check(forward.has_value() == backward.has_value(), [&] {
        return "not symmetric at " + lambda.to_string() + ", " + x.to_string();
      });
      if (forward) {
        suite.check(defect(lambda) == defect(x) && check_even_link(lambda, x, *forward),
                    [&] { return "defects differ at " + lambda.to_string() + ", " + x.to_string(); });
      }
    }
  }
  return suite.finish();
}

SuiteResult linkage_fingerprint(WeightSampler& sampler, std::size_t count) {
  Suite suite("linkage: fingerprint and degree invariance");
  std::size_t accepted = 0;
  while (accepted < count && !suite.failed()) {
    const Shape shape = pick(sampler, small_shapes({3, 5}));
    const Weight lambda = sampler.dominant(shape, 6);
    const auto odd = odd_neighbors(lambda);
    if (!odd.empty()) {
      const auto& move = pick(sampler, odd);
      const Degree before = degree(lambda);
      const Degree after = degree(move.weight);
      suite.check(fingerprint(lambda) == fingerprint(move.weight) && before.total == after.total &&
                      after.first_block - before.first_block == move.link.sign &&
                      after.second_block - before.second_block == -move.link.sign,
                  [&] { return "odd move breaks invariants at " + lambda.to_string(); });
      ++accepted;
    }
    if (auto mu = random_even_partner(sampler, lambda)) {
      suite.check(fingerprint(lambda) == fingerprint(*mu) &&
                      degree(lambda).total == degree(*mu).total,
                  [&] { return "even move breaks invariants at " + lambda.to_string(); });
      ++accepted;
    }
  }
  return suite.finish();
}

SuiteResult linkage_companion(WeightSampler& sampler, std::size_t count) {
  Suite suite("linkage: companions and lower reflections");
  for (std::size_t k = 0; k < count && !suite.failed(); ++k) {
    const Shape shape = pick(sampler, small_shapes({3, 5}));
    const Weight lambda = sampler.weight(shape, 6);
    const Defect d = defect(lambda);
    if (!d.finite()) continue;
    const Weight mu = companion(lambda);
    const Weight later = companion_with_exponent(lambda, minimal_companion_exponent(lambda) + 1);
    suite.check(is_dominant(mu) && defect(mu) == d && even_coset_witness(lambda, mu) &&
                    even_linked(mu, later),
                [&] { return "companion fails at " + lambda.to_string(); });
    if (shape.m() + shape.n() > 2 && (shape.m() > 1 || shape.n() > 1)) {
      const Root alpha = sampler.even_positive_root(shape);
      const auto e = static_cast<unsigned>(sampler.uniform(0, 2));
      const Weight reflected = lower_reflection(lambda, alpha, e);
      suite.check(even_linked(companion(reflected), mu).has_value(), [&] {
        return "lower reflection leaves the even class at " + lambda.to_string() + ", " +
               alpha.to_string() + ", e=" + std::to_string(e);
      });
    }
  }
  return suite.finish();
}

SuiteResult linkage_chains(WeightSampler& sampler, std::size_t count) {
  Suite suite("linkage: same_block chains replay");
  for (std::size_t k = 0; k < count && !suite.failed(); ++k) {
    const Shape shape = pick(sampler, std::vector<Shape>{{1, 1, 3}, {2, 1, 3}, {1, 1, 5}});
    const Weight lambda = sampler.dominant(shape, 3);
    const Weight mu = sampler.dominant(shape, 3);
    const auto result = same_block(lambda, mu, Box::uniform(shape, -4, 4));
    if (result.chain) {
      const ChainCheck check = replay_chain(*result.chain);
      suite.check(check.ok && result.chain->end() == mu,
                  [&] { return "chain fails replay: " + check.reason; });
    }
    const Weight base = lambda;
    for (const auto& nb : odd_neighbors(base)) {
      const Weight& higher = nb.link.sign > 0 ? nb.weight : base;
      const Weight lower = higher - nb.link.alpha.as_weight();
      suite.check(odd_shifted_pairing(higher, nb.link.alpha) ==
                      odd_shifted_pairing(lower, nb.link.alpha),
                  [&] { return "odd pairing depends on the base at " + base.to_string(); });
    }
  }
  return suite.finish();
}

SuiteResult characters_identities(WeightSampler& sampler, std::size_t count) {
  Suite suite("characters: w-independence, dimension, shift, highest term");
  for (std::size_t k = 0; k < count && !suite.failed(); ++k) {
    const Shape shape = pick(sampler, small_shapes({3, 5}));
    const int r = 1;
    const Weight lambda = sampler.weight(shape, 5);
    const Permutation w = sampler.permutation(shape.rank());
    const CharacterPoly reference = zhat_char(lambda, Permutation::identity(shape.rank()), r);
    suite.check(zhat_char(bracket_weight(lambda, w, r), w, r) == reference,
                [&] { return "w-independence fails at " + lambda.to_string() + ", w=" + w.to_string(); });
    const int big_n = shape.m() * (shape.m() - 1) / 2 + shape.n() * (shape.n() - 1) / 2;
    const Integer dimension = shape.p_power(static_cast<unsigned>(r * big_n)) *
                              ipow(Integer(2), static_cast<unsigned>(shape.m() * shape.n()));
    const CharacterPoly c = zhat_char(lambda, w, r);
    suite.check(c.evaluate_at_ones() == dimension,
                [&] { return "dimension mismatch at " + lambda.to_string(); });
    const Weight mu = sampler.weight(shape, 3);
    suite.check(zhat_char(lambda + shape.p_power(static_cast<unsigned>(r)) * mu, w, r) ==
                    shift(c, mu, r),
                [&] { return "tensor shift fails at " + lambda.to_string(); });
    for (const auto& [e, coeff] : c.terms())
      suite.check(leq_w(Weight(shape, e), lambda, w),
                  [&] { return "exponent above lambda in " + c.to_string(); });
    if (shape.m() > 1) {
      const Root alpha(shape, 0, 1);
      const CharacterPoly lhs = (CharacterPoly::one(shape) - CharacterPoly::monomial(-alpha.as_weight())) *
                                even_factor(alpha, r);
      const CharacterPoly rhs =
          CharacterPoly::one(shape) -
          CharacterPoly::monomial(-(shape.p_power(static_cast<unsigned>(r)) * alpha.as_weight()));
      suite.check(lhs == rhs, [&] { return "geometric factor does not telescope"; });
    }
  }
  return suite.finish();
}

SuiteResult json_round_trip(WeightSampler& sampler, std::size_t count) {
  Suite suite("serialization: JSON round trips");
  for (std::size_t k = 0; k < count && !suite.failed(); ++k) {
    const Shape shape = pick(sampler, std::vector<Shape>{{1, 1, 3}, {2, 1, 3}});
    const Weight lambda = sampler.weight(shape, 1000);
    suite.check(weight_from_json(json::parse(to_json(lambda).dump()), shape) == lambda,
                [&] { return "weight round trip fails at " + lambda.to_string(); });
    const CharacterPoly c = zhat_char(lambda, sampler.permutation(shape.rank()), 1);
    suite.check(character_from_json(json::parse(to_json(c).dump()), shape) == c,
                [&] { return "character round trip fails"; });
    const auto result = same_block(sampler.dominant(shape, 2), sampler.dominant(shape, 2),
                                   Box::uniform(shape, -3, 3));
    if (result.chain) {
      const json doc = to_json(*result.chain);
      suite.check(to_json(chain_from_json(json::parse(doc.dump()), shape)) == doc,
                  [&] { return "chain round trip fails"; });
    }
  }
  return suite.finish();
}

}  // namespace

std::vector<SuiteResult> run_property_suites(const SuiteOptions& options) {
  WeightSampler sampler(options.seed);
  const std::size_t s = std::max<std::size_t>(options.scale, 1);
  std::vector<SuiteResult> out;
  out.push_back(core_pairings(sampler, 200 * s));
  out.push_back(roots_structure(sampler, 200 * s));
  out.push_back(roots_adjacency(sampler));
  out.push_back(roots_order(sampler));
  out.push_back(linkage_even(sampler, 200 * s));
  out.push_back(linkage_fingerprint(sampler, 1000 * s));
  out.push_back(linkage_companion(sampler, 500 * s));
  out.push_back(linkage_chains(sampler, 30 * s));
  out.push_back(characters_identities(sampler, 40 * s));
  out.push_back(json_round_trip(sampler, 20 * s));
  return out;
}

}  // namespace superblocks
