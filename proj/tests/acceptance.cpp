// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "superblocks/characters.hpp"
#include "superblocks/linkage.hpp"
#include "superblocks/properties.hpp"
#include "superblocks/serialize.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

using namespace superblocks;

namespace {

// All comparisons are exact; the only tolerance is wall-clock time.
constexpr double kCharacterBudgetSeconds = 60.0;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Integer power(long base, long exp) { return ipow(Integer(base), static_cast<unsigned>(exp)); }

// ---- 1, 2: character identity and dimension ------------------------------

Outcome character_identities(double& seconds, std::size_t& cases, std::size_t& dims) {
  Outcome out;
  WeightSampler sampler(kSeed);
  const auto start = std::chrono::steady_clock::now();
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}})
    for (int p : {3, 5})
      for (int r : {1, 2}) {
        const Shape s(m, n, p);
        const auto perms = all_permutations(s.rank());
        const long big_n = m * (m - 1) / 2 + n * (n - 1) / 2;
        const Integer dimension = power(p, r * big_n) * power(2, m * n);
        for (int trial = 0; trial < 20; ++trial) {
          const Weight lambda = sampler.weight(s, 10);
          const CharacterPoly base = zhat_char(lambda, Permutation::identity(s.rank()), r);
          for (const auto& w : perms) {
            const CharacterPoly c = zhat_char(bracket_weight(lambda, w, r), w, r);
            ++cases;
            if (c != base)
              out.fail(s.to_string() + " lambda=" + lambda.to_string() + " w=" + w.to_string());
            ++dims;
            if (c.evaluate_at_ones() != dimension)
              out.fail("dimension " + c.evaluate_at_ones().str() + " != " + dimension.str());
          }
        }
      }
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// ---- 3: tensor shift ----------------------------------------------------

Outcome tensor_shift() {
  Outcome out;
  WeightSampler sampler(kSeed + 3);
  const std::vector<std::pair<int, int>> shapes{{1, 1}, {2, 1}, {1, 2}, {2, 2}};
  for (int trial = 0; trial < 100; ++trial) {
    const auto [m, n] = shapes[static_cast<std::size_t>(trial) % shapes.size()];
    const int p = trial % 2 ? 3 : 5;
    const int r = 1 + (trial / 2) % 2;
    const Shape s(m, n, p);
    const Weight lambda = sampler.weight(s, 10);
    const Weight mu = sampler.weight(s, 4);
    const Permutation w = sampler.permutation(s.rank());
    const Weight shifted = lambda + s.p_power(static_cast<unsigned>(r)) * mu;
    if (zhat_char(shifted, w, r) != shift(zhat_char(lambda, w, r), mu, r))
      out.fail(s.to_string() + " lambda=" + lambda.to_string() + " mu=" + mu.to_string());
  }
  return out;
}

// ---- 4: adjacency chain --------------------------------------------------

Outcome adjacency() {
  Outcome out;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const Shape s(m, n, 3);
      AdjacencyChain chain;
      try {
        chain = adjacency_chain(s);
      } catch (const std::exception& e) {
        out.fail(s.to_string() + ": " + e.what());
        continue;
      }
      const std::size_t mn = static_cast<std::size_t>(m * n);
      const std::size_t big_n = static_cast<std::size_t>(m * (m - 1) / 2 + n * (n - 1) / 2);
      if (chain.elements.size() != mn + big_n + 1 || !chain.elements.front().is_identity()) {
        out.fail(s.to_string() + ": wrong chain length or start");
        continue;
      }
      for (std::size_t k = 1; k < chain.elements.size(); ++k) {
        const Root& alpha = chain.flipped[k - 1];
        // Phi^+_{y_k} = Phi^+_{y_{k-1}} \ {alpha} u {-alpha}, alpha simple in Phi^+_{y_{k-1}}
        const auto before = positive_system(s, chain.elements[k - 1]).roots;
        const auto after = positive_system(s, chain.elements[k]).roots;
        std::set<Root> expected(before.begin(), before.end());
        const auto simple = simple_roots(s, chain.elements[k - 1]);
        const bool is_simple = std::find(simple.begin(), simple.end(), alpha) != simple.end();
        expected.erase(alpha);
        expected.insert(alpha.negated());
        if (!is_simple || expected != std::set<Root>(after.begin(), after.end()) ||
            alpha.is_odd() != (k <= mn))
          out.fail(s.to_string() + ": swap fails at step " + std::to_string(k));
      }
      const Permutation& ymn = chain.elements[mn];
      std::size_t longest = 0;
      for (const auto& w : dmn_representatives(s)) longest = std::max(longest, w.length());
      if (!in_dmn(s, ymn) || ymn.length() != longest)
        out.fail(s.to_string() + ": y_mn is not the longest element of D_{m,n}");
      const std::size_t total = s.rank() * (s.rank() - 1) / 2;
      if (chain.elements.back().length() != total)
        out.fail(s.to_string() + ": last element is not the longest element");
    }
  return out;
}

// ---- 5: fingerprint invariance -------------------------------------------

Outcome fingerprint_invariance(std::size_t& odd_moves, std::size_t& even_moves) {
  Outcome out;
  WeightSampler sampler(kSeed + 5);
  const std::vector<std::pair<int, int>> shapes{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}};
  int guard = 0;
  while ((odd_moves + even_moves < 1000 || odd_moves < 300 || even_moves < 300) && ++guard < 100000) {
    const auto [m, n] = shapes[static_cast<std::size_t>(guard) % shapes.size()];
    const int p = guard % 3 == 0 ? 5 : 3;
    const Shape s(m, n, p);
    const Weight lambda = sampler.dominant(s, 6);
    const Fingerprint f = fingerprint(lambda);
    const Degree deg = degree(lambda);

    for (const auto& nb : odd_neighbors(lambda)) {
      if (!check_odd_link(lambda, nb.weight, nb.link)) out.fail("odd neighbour fails validation");
      ++odd_moves;
      if (fingerprint(nb.weight) != f) out.fail("odd move " + lambda.to_string() + " -> " + nb.weight.to_string());
      const Degree d2 = degree(nb.weight);
      const Integer step = d2.first_block - deg.first_block;
      if (!(step == nb.link.sign && d2.second_block - deg.second_block == -step))
        out.fail("block subtotals under odd move " + lambda.to_string());
    }

    const Box box = Box::around({lambda}, Integer(2 * p * p));
    const auto cls = even_class_in_box(lambda, box);
    if (cls.size() > 1) {
      const auto& [mu, link] = cls[static_cast<std::size_t>(sampler.uniform(0, static_cast<long>(cls.size()) - 1))];
      if (!check_even_link(lambda, mu, link)) out.fail("even witness fails validation");
      ++even_moves;
      if (fingerprint(mu) != f) out.fail("even move " + lambda.to_string() + " -> " + mu.to_string());
      const Degree d2 = degree(mu);
      if (d2.first_block != deg.first_block || d2.second_block != deg.second_block)
        out.fail("block subtotals under even move " + lambda.to_string());
    }
  }
  if (odd_moves + even_moves < 1000) out.fail("not enough moves sampled");
  return out;
}

// ---- 6: companions --------------------------------------------------------

Outcome companions(std::size_t& cases) {
  Outcome out;
  WeightSampler sampler(kSeed + 6);
  const std::vector<std::pair<int, int>> shapes{{2, 1}, {1, 2}, {2, 2}, {3, 2}, {3, 3}};
  int guard = 0;
  while (cases < 500 && ++guard < 100000) {
    const auto [m, n] = shapes[static_cast<std::size_t>(guard) % shapes.size()];
    const Shape s(m, n, guard % 2 ? 3 : 5);
    const Weight lambda = sampler.weight(s, 8);
    const Defect d = defect(lambda);
    if (!d.finite()) continue;
    ++cases;
    const unsigned t = minimal_companion_exponent(lambda);
    const Weight c = companion_with_exponent(lambda, t);
    const Weight c2 = companion_with_exponent(lambda, t + 1 + static_cast<unsigned>(sampler.uniform(0, 1)));
    if (!is_dominant(c) || !is_dominant(c2)) out.fail("companion not dominant for " + lambda.to_string());
    if (defect(c) != d || defect(c2) != d) out.fail("defect changed for " + lambda.to_string());
    const auto link = even_linked(c, c2);
    if (!link || !check_even_link(c, c2, *link)) out.fail("companions not even-linked for " + lambda.to_string());
    if (!even_coset_witness(lambda, c)) out.fail("companion outside the even coset of " + lambda.to_string());
  }
  if (cases < 500) out.fail("not enough finite-defect weights");
  return out;
}

// ---- 7: lower reflections -------------------------------------------------

Outcome lower_reflections(std::size_t& cases) {
  Outcome out;
  WeightSampler sampler(kSeed + 7);
  int guard = 0;
  while (cases < 200 && ++guard < 100000) {
    const Shape s(2, guard % 2 ? 1 : 2, 3);
    const Weight lambda = sampler.weight(s, 12);
    if (!defect(lambda).finite()) continue;
    const Root alpha = sampler.even_positive_root(s);
    const unsigned e = static_cast<unsigned>(sampler.uniform(1, 3));
    ++cases;
    const Weight low = lower_reflection(lambda, alpha, e);
    const Weight a = companion(low);
    const Weight b = companion(lambda);
    // direct search over S_m x S_n, independent of even_linked
    bool found = false;
    for (const auto& w : block_permutations(s))
      if (in_defect_lattice(b - dot_action(w, a), defect(a))) found = true;
    const auto link = even_linked(a, b);
    if (!found || !link || !check_even_link(a, b, *link))
      out.fail("R(" + lambda.to_string() + ", " + alpha.to_string() + ", " + std::to_string(e) + ")");
  }
  return out;
}

// ---- 8: GL(1|1) block chain ----------------------------------------------

Outcome gl11_chain() {
  Outcome out;
  const Shape s(1, 1, 3);
  const Box box = Box::uniform(s, -5, 5);
  const auto linked = same_block(Weight::parse("2|1", s), Weight::parse("1|2", s), box);
  if (linked.verdict != Verdict::Linked || !linked.chain || linked.chain->steps.size() != 1 ||
      !std::holds_alternative<OddLink>(linked.chain->steps[0].move) || !replay_chain(*linked.chain).ok)
    out.fail("(2,1) ~ (1,2) did not give a length-1 odd chain");
  const auto mismatch = same_block(Weight::parse("2|1", s), Weight::parse("1|1", s), box);
  if (mismatch.verdict != Verdict::FingerprintMismatch) out.fail("(2,1) vs (1,1) not a fingerprint mismatch");
  return out;
}

// ---- 9: even-linkage relation ---------------------------------------------

Outcome even_relation(std::size_t& pairs, std::size_t& triples) {
  Outcome out;
  WeightSampler sampler(kSeed + 9);
  const std::vector<std::pair<int, int>> shapes{{2, 1}, {1, 2}, {2, 2}, {3, 1}};
  std::size_t positives = 0;
  for (int trial = 0; pairs < 200; ++trial) {
    const auto [m, n] = shapes[static_cast<std::size_t>(trial) % shapes.size()];
    const Shape s(m, n, 3);
    const Weight a = sampler.dominant(s, 8);
    Weight b = sampler.dominant(s, 8);
    if (trial % 2) {
      const auto cls = even_class_in_box(a, Box::around({a}, Integer(9)));
      b = cls[static_cast<std::size_t>(sampler.uniform(0, static_cast<long>(cls.size()) - 1))].first;
    }
    ++pairs;
    if (!even_linked(a, a)) out.fail("not reflexive at " + a.to_string());
    const auto ab = even_linked(a, b);
    const auto ba = even_linked(b, a);
    if (ab.has_value() != ba.has_value()) out.fail("not symmetric: " + a.to_string() + ", " + b.to_string());
    if (ab) {
      ++positives;
      if (defect(a) != defect(b)) out.fail("defects differ: " + a.to_string() + ", " + b.to_string());
    }
  }
  if (positives == 0) out.fail("no positive pairs sampled");

  for (int trial = 0; triples < 100; ++trial) {
    const auto [m, n] = shapes[static_cast<std::size_t>(trial) % shapes.size()];
    const Shape s(m, n, 3);
    const Weight a = sampler.dominant(s, 6);
    const auto cls = even_class_in_box(a, Box::around({a}, Integer(9)));
    if (cls.size() < 2) continue;
    auto pick = [&] {
      return cls[static_cast<std::size_t>(sampler.uniform(0, static_cast<long>(cls.size()) - 1))].first;
    };
    const Weight b = pick();
    const Weight c = pick();
    const auto l1 = even_linked(a, b);
    const auto l2 = even_linked(b, c);
    if (!l1 || !l2) {
      out.fail("class members not linked near " + a.to_string());
      continue;
    }
    ++triples;
    // c = w2.(w1.a + d1) + d2 = (w2 w1).a + w2(d1) + d2
    const EvenLink composed{l2->w * l1->w, l2->w.act(l1->translation) + l2->translation};
    if (!check_even_link(a, c, composed))
      out.fail("composed witness fails: " + a.to_string() + " -> " + c.to_string());
  }
  return out;
}

// ---- 10: leq_w oracle ------------------------------------------------------

Outcome leq_oracle(std::size_t& cases) {
  Outcome out;
  const std::vector<std::pair<int, int>> shapes{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {1, 3}};
  for (auto [m, n] : shapes) {
    const Shape s(m, n, 3);
    const std::size_t rank = s.rank();
    for (const auto& w : all_permutations(rank)) {
      // reachable differences: non-negative simple-root combinations with |d|_1 <= 6
      const auto simple = simple_roots(s, w);
      std::set<std::vector<Integer>> reachable{std::vector<Integer>(rank)};
      std::vector<std::vector<Integer>> frontier{std::vector<Integer>(rank)};
      while (!frontier.empty()) {
        std::vector<std::vector<Integer>> next;
        for (const auto& v : frontier)
          for (const auto& alpha : simple) {
            auto u = v;
            u[alpha.i()] += 1;
            u[alpha.j()] -= 1;
            Integer norm = 0;
            for (const auto& x : u) norm += abs(x);
            if (norm <= 6 && reachable.insert(u).second) next.push_back(u);
          }
        frontier = std::move(next);
      }
      std::vector<Integer> diff(rank);
      std::function<void(std::size_t, int)> scan = [&](std::size_t k, int budget) {
        if (k == rank) {
          ++cases;
          if (leq_w(Weight::zero(s), Weight(s, diff), w) != (reachable.count(diff) > 0))
            out.fail(s.to_string() + " w=" + w.to_string() + " diff=" + Weight(s, diff).to_string());
          return;
        }
        for (int x = -budget; x <= budget; ++x) {
          diff[k] = x;
          scan(k + 1, budget - std::abs(x));
        }
      };
      scan(0, 6);
    }
  }
  return out;
}

// ---- 11: JSON round trips and the CLI -------------------------------------

struct Run {
  int status;
  std::string output;
};

Run run(const std::string& command) {
  Run result{-1, {}};
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

Outcome cli_round_trips(const std::string& cli, std::size_t& accepted, std::size_t& rejected) {
  Outcome out;
  WeightSampler sampler(kSeed + 11);
  const auto dir = std::filesystem::temp_directory_path() / ("superblocks-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);

  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    const Shape s(m, n, 3);
    for (int trial = 0; trial < 20; ++trial) {
      const Weight lambda = sampler.weight(s, 30);
      if (weight_from_json(json::parse(to_json(lambda).dump()), s) != lambda) out.fail("weight round trip");
      const CharacterPoly c = zhat_char(sampler.weight(s, 5), sampler.permutation(s.rank()), 1);
      if (character_from_json(json::parse(to_json(c).dump()), s) != c) out.fail("character round trip");
    }
  }

  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    const Shape s(m, n, 3);
    const std::string shape_flag = "--shape " + std::to_string(m) + "," + std::to_string(n) + " -p 3";
    const Box box = Box::uniform(s, -3, 3);
    for (int trial = 0; trial < 10; ++trial) {
      const Weight a = sampler.dominant(s, 2);
      Weight b = a;
      for (int hop = 0; hop < 3; ++hop) {
        const auto ns = odd_neighbors(b);
        if (ns.empty()) break;
        const Weight next = ns[static_cast<std::size_t>(sampler.uniform(0, static_cast<long>(ns.size()) - 1))].weight;
        if (!box.contains(next)) break;
        b = next;
      }
      const auto result = same_block(a, b, box);
      if (!result.chain) {
        out.fail("no chain for an odd walk " + a.to_string() + " -> " + b.to_string());
        continue;
      }
      const json doc = to_json(*result.chain);
      if (to_json(chain_from_json(json::parse(doc.dump()), s)) != doc) out.fail("chain round trip");

      const auto path = dir / ("chain-" + std::to_string(m) + std::to_string(n) + "-" + std::to_string(trial) + ".json");
      std::ofstream(path) << doc.dump();
      const Run ok = run(cli + " verify-chain " + shape_flag + " " + path.string());
      ++accepted;
      if (ok.status != 0) out.fail("verify-chain rejected an emitted chain: " + ok.output);

      // the CLI's own `chain` output must verify too
      const Run emitted = run(cli + " chain " + shape_flag + " --box -3..3 '" + a.to_string() + "' '" + b.to_string() + "'");
      const auto emitted_path = dir / "emitted.json";
      std::ofstream(emitted_path) << emitted.output;
      if (emitted.status != 0 || run(cli + " verify-chain " + shape_flag + " " + emitted_path.string()).status != 0)
        out.fail("CLI chain output did not verify for " + a.to_string() + " -> " + b.to_string());

      for (std::size_t k = 1; k < doc.size(); ++k) {
        for (int variant = 0; variant < 2; ++variant) {
          json bad = doc;
          if (variant == 0) {
            bad[k]["weight"][0] = integer_to_json(integer_from_json(bad[k]["weight"][0]) + 1);
          } else if (bad[k]["move"]["kind"] == "odd") {
            bad[k]["move"]["sign"] = -bad[k]["move"]["sign"].get<int>();
          } else {
            bad[k]["move"]["translation"][0] = integer_to_json(integer_from_json(bad[k]["move"]["translation"][0]) + 3);
          }
          const auto bad_path = dir / "corrupt.json";
          std::ofstream(bad_path) << bad.dump();
          const Run r = run(cli + " verify-chain " + shape_flag + " " + bad_path.string());
          ++rejected;
          if (r.status != 1) out.fail("verify-chain accepted a corrupted chain (step " + std::to_string(k) + ")");
        }
      }
    }
  }
  std::filesystem::remove_all(dir);
  if (rejected == 0) out.fail("no corruptions exercised");
  return out;
}

int report(int index, const std::string& name, const Outcome& o, const std::string& stats) {
  std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << index << "] " << name << " - " << stats;
  if (!o.ok) std::cout << " :: " << o.detail;
  std::cout << std::endl;
  return o.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "superblocks";
  int failures = 0;

  double seconds = 0;
  std::size_t cases = 0, dims = 0;
  Outcome chars = character_identities(seconds, cases, dims);
  Outcome timed = chars;
  if (seconds >= kCharacterBudgetSeconds) timed.fail("took " + std::to_string(seconds) + " s");
  std::ostringstream t;
  t.precision(2);
  t << std::fixed << seconds;
  failures += report(1, "character identity", timed, std::to_string(cases) + " (lambda, w) instances in " + t.str() + " s");
  failures += report(2, "dimension identity", chars, std::to_string(dims) + " evaluations");
  failures += report(3, "tensor shift", tensor_shift(), "100 (lambda, mu, w)");
  failures += report(4, "adjacency chain", adjacency(), "shapes up to (3,3)");

  std::size_t odd_moves = 0, even_moves = 0;
  const Outcome fp = fingerprint_invariance(odd_moves, even_moves);
  failures += report(5, "fingerprint invariance", fp,
                     std::to_string(odd_moves) + " odd + " + std::to_string(even_moves) + " even moves");

  std::size_t comp = 0;
  const Outcome co = companions(comp);
  failures += report(6, "companion correctness", co, std::to_string(comp) + " weights");

  std::size_t lows = 0;
  const Outcome lr = lower_reflections(lows);
  failures += report(7, "lower-reflection linkage", lr, std::to_string(lows) + " (lambda, alpha, e)");
  failures += report(8, "GL(1|1) block chain", gl11_chain(), "2 queries");

  std::size_t pairs = 0, triples = 0;
  const Outcome ev = even_relation(pairs, triples);
  failures += report(9, "even-linkage relation", ev,
                     std::to_string(pairs) + " pairs, " + std::to_string(triples) + " triples");

  std::size_t leq = 0;
  const Outcome lq = leq_oracle(leq);
  failures += report(10, "leq_w oracle", lq, std::to_string(leq) + " comparisons");

  std::size_t accepted = 0, rejected = 0;
  const Outcome cl = cli_round_trips(cli, accepted, rejected);
  failures += report(11, "JSON and verify-chain", cl,
                     std::to_string(accepted) + " accepted, " + std::to_string(rejected) + " corruptions rejected");

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
