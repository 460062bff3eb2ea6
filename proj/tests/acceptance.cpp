// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sidon/arith.hpp"
#include "sidon/auditor.hpp"
#include "sidon/bh.hpp"
#include "sidon/generator.hpp"
#include "sidon/gf2x.hpp"
#include "sidon/io.hpp"
#include "sidon/pruner.hpp"

namespace {

using namespace sidon;
using Clock = std::chrono::steady_clock;

// Pinned limits.
constexpr double kFiniteSetSeconds = 1.0;
constexpr double kTheoremSeconds = 60.0;
constexpr double kMonteCarloSeconds = 300.0;
constexpr double kBadRatioCeiling = 0.6;
constexpr int kMinCrossFixtures = 5;
constexpr int kMonteCarloTrials = 20;
constexpr std::uint64_t kMonteCarloSeed = 20240917;

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << " [failed: " << what << "]";
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Sums with repetition distinct mod m, by a plain set of all pair sums.
bool sidon_mod_brute(const std::vector<std::uint64_t>& s, std::uint64_t m) {
  std::set<std::uint64_t> sums;
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j, ++n) sums.insert((s[i] + s[j]) % m);
  }
  return sums.size() == n;
}

// Plain Eratosthenes, independent of the segmented sieve.
std::uint64_t pi_eratosthenes(std::uint64_t n) {
  if (n < 2) return 0;
  std::vector<bool> composite(n + 1, false);
  std::uint64_t count = 0;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    ++count;
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return count;
}

bool same_collisions(const std::vector<BigInt>& v, int l) {
  std::vector<std::pair<BigInt, std::vector<std::size_t>>> all;
  std::vector<std::size_t> cur;
  oracle::multisets(v, l, 0, cur, all);
  std::map<BigInt, std::vector<std::set<std::size_t>>> by_sum;
  for (const auto& [s, idx] : all) by_sum[s].emplace_back(idx.begin(), idx.end());
  std::size_t pairs = 0;
  for (const auto& [s, group] : by_sum) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        bool disjoint = true;
        for (auto x : group[j]) disjoint &= !group[i].count(x);
        pairs += disjoint;
      }
    }
  }
  const auto fast = find_collisions(v, l);
  for (const auto& c : fast) {
    BigInt a = 0, b = 0;
    for (auto i : c.left) a += v[i];
    for (auto i : c.right) b += v[i];
    if (a != b) return false;
  }
  return fast.size() == pairs;
}

const BlockParams kSqrt5 = BlockParams::sidon(GrowthConstant::three_minus_sqrt5_over_2());
const BlockParams kSqrt2 = BlockParams::sidon(GrowthConstant::sqrt2_minus_1());
const Basis kDefault = build_basis(BasisSource::deterministic(), 4, 8);

SequencePrefix g_theorem_prefix;  // shared by criteria 2, 4 and 9

Outcome finite_sets() {
  Outcome o;
  const std::uint64_t qs[] = {101, 1009, 10007};
  const std::size_t sizes[] = {4, 11, 25};
  for (int i = 0; i < 3; ++i) {
    const auto t0 = Clock::now();
    const std::uint64_t q = qs[i];
    const std::uint64_t g = smallest_primitive_root(q);
    const auto set = finite_dlog_sidon_set(q, g);
    const bool sidon = is_sidon_mod(set, q - 1) && sidon_mod_brute(set, q - 1);
    const double dt = seconds_since(t0);
    o.notes << " q=" << q << " g=" << g << " |A|=" << set.size() << " " << dt << "s;";
    o.require(g == oracle::brute_primitive_root(q), "primitive root");
    o.require(set.size() == sizes[i], "size");
    o.require(sidon, "sidon");
    o.require(dt < kFiniteSetSeconds, "runtime");
    for (std::size_t t = 0; t < set.size(); ++t) {
      const auto ps = oracle::primes_trial(0, 100);
      o.require(set[t] == oracle::brute_log(g, ps[t], q), "log by power table");
    }
  }
  return o;
}

Outcome theorem_exactness() {
  Outcome o;
  const auto t0 = Clock::now();
  g_theorem_prefix = generate_blocks(7, kSqrt5, kDefault, 2);
  const auto values = g_theorem_prefix.values();
  const bool distinct = all_distinct(values);
  const auto collisions = find_collisions(values, 2);
  const double dt = seconds_since(t0);
  o.notes << " elements=" << values.size() << " excluded=" << g_theorem_prefix.excluded.size()
          << " max_p=" << block_upper_edge(7, kSqrt5) << " collisions=" << collisions.size() << " " << dt << "s";
  o.require(distinct, "distinct");
  o.require(collisions.empty(), "no collision");
  o.require(dt < kTheoremSeconds, "runtime");
  return o;
}

Outcome worked_vector() {
  Outcome o;
  const struct {
    std::uint64_t p;
    std::vector<std::uint64_t> digits;
    long value;
  } cases[] = {{5, {5, 14, 59, 176}, 13784669}, {2, {5, 21, 73, 261}, 20434385}};
  for (const auto& c : cases) {
    std::vector<std::uint64_t> brute;
    BigInt v = 0;
    for (int j = 1; j <= 4; ++j) {
      const std::uint64_t x = oracle::brute_lift(oracle::brute_log(kDefault.g(j), c.p, kDefault.q(j)), kDefault.q(j), 2);
      brute.push_back(x);
      v += big_from_u64(x) * kDefault.weight(j);
    }
    const auto d = digits_of_prime(c.p, kDefault, kSqrt5, 2);
    const BigInt a = encode_value(d, kDefault);
    o.notes << " a_" << c.p << "=" << a.get_str() << " (" << d.big_endian_string() << ");";
    o.require(brute == c.digits && v == c.value, "oracle reproduces vector");
    o.require(d.digits == c.digits, "digits");
    o.require(a == c.value, "value");
  }
  return o;
}

Outcome growth_brackets() {
  Outcome o;
  const auto& prefix = g_theorem_prefix;
  // k = 1 lies below the first block; its bracket is the empty one.
  const auto r1 = count_upto(prefix.basis.weight(2), prefix);
  o.require(r1.bracket_ok, "k=1 bracket");
  for (const auto& row : growth_bracket_check(prefix)) {
    o.notes << " k=" << row.k << ":" << row.lower << "<=" << row.count << "<=" << row.upper;
    o.require(row.bracket_ok, "bracket k=" + std::to_string(row.k));
    o.require(row.element_bounds_ok, "element bounds k=" + std::to_string(row.k));
  }
  // Independent prime counts at the edges used above.
  for (int k = 1; k <= 9; ++k) {
    const std::uint64_t e = edge_or_zero(k, kSqrt5);
    o.require(prime_pi(e) == pi_eratosthenes(e), "pi at edge " + std::to_string(k));
  }
  return o;
}

Outcome pruning_pipeline() {
  Outcome o;
  int ranges = 0, nonempty = 0;
  for (int k1 = 2; k1 <= 7; ++k1) {
    for (int k2 : eligible_k2(k1, kSqrt2)) {
      ++ranges;
      nonempty += !s_bounds(k2, k1, kSqrt2, kDefault).empty();
    }
  }
  o.notes << " S-ranges=" << ranges << " nonempty=" << nonempty;
  o.require(nonempty == 0, "S ranges empty");

  const auto pruned = pruned_generate(7, kSqrt2, kDefault);
  const auto plain = generate_blocks(7, kSqrt2, kDefault, 2);
  o.require(pruned.bad.empty(), "B_k empty");
  o.require(pruned.prefix.values() == plain.values(), "pruned equals unpruned");
  const auto values = plain.values();
  o.require(all_distinct(values) && find_collisions(values, 2).empty(), "unpruned audit");
  o.notes << " elements=" << values.size() << " ratios=";
  for (const auto& s : pruned.summaries) {
    o.notes << s.ratio << (s.k == 7 ? "" : ",");
    o.require(s.ratio >= 0.0 && s.ratio <= kBadRatioCeiling, "ratio k=" + std::to_string(s.k));
  }

  int fixtures = 0;
  std::size_t checked = 0;
  for (const auto& sc : fixture::synthetic_cases()) {
    const auto run = fixture::run(sc);
    if (run.collisions.empty()) continue;
    ++fixtures;
    std::map<int, std::set<std::uint64_t>> bad;
    for (int k1 = run.params.k_min; k1 <= sc.k_max; ++k1) {
      for (const auto& rec : bad_primes(k1, run.params, run.basis, K2Policy::kExhaustive)) bad[k1].insert(rec.p1);
    }
    for (const auto& c : run.collisions) {
      ++checked;
      o.require(bad[c.left.front().k].count(c.left.front().p) != 0, "cross-oracle " + sc.name);
    }
  }
  o.notes << " fixtures=" << fixtures << " collisions=" << checked;
  o.require(fixtures >= kMinCrossFixtures, "fixture count");
  return o;
}

Outcome bh_three() {
  Outcome o;
  const auto bh = BhParams::make(3);
  const auto prefix = bh_generate(9, bh, build_basis(BasisSource::deterministic(), 9, 10));
  const auto values = prefix.values();
  std::size_t pre = 0;
  for (int l = 2; l <= 3; ++l) {
    for (auto& r : find_element_collisions(prefix.elements, l)) {
      ++pre;
      o.require(check_collision_structure(r, prefix.basis, bh.blocks, 3).all(), "desk collision structure");
    }
  }
  const auto pruned = bh_prune(prefix, 3);
  const auto kept = pruned.survivors.values();
  o.require(find_collisions(kept, 2).empty() && find_collisions(kept, 3).empty(), "post-prune B_3");
  o.notes << " elements=" << values.size() << " pre-prune collisions=" << pre
          << " removed=" << pruned.removed.size();

  std::size_t synthetic = 0;
  for (const auto& sc : fixture::bh_cases()) {
    const auto run = fixture::run_bh(sc);
    for (auto& r : find_element_collisions(run.prefix.elements, 3)) {
      ++synthetic;
      o.require(check_collision_structure(r, run.basis, run.params.blocks, 3).all(), "synthetic " + sc.name);
    }
  }
  o.notes << " synthetic 3-sum collisions=" << synthetic;
  o.require(synthetic > 0, "synthetic fixtures");

  std::mt19937_64 rng(31337);
  int instances = 0;
  for (int trial = 0; trial < 24; ++trial) {
    const int l = 2 + trial % 2;
    const std::size_t n = l == 2 ? 200 : 40 + rng() % 20;
    std::set<long> chosen;
    while (chosen.size() < n) chosen.insert(static_cast<long>(rng() % (n * 6)));
    std::vector<BigInt> v(chosen.begin(), chosen.end());
    std::shuffle(v.begin(), v.end(), rng);
    ++instances;
    o.require(same_collisions(v, l), "meet-in-the-middle vs brute force");
  }
  o.require(same_collisions(values, 2) && same_collisions(values, 3), "brute force on desk prefix");
  o.notes << " random instances=" << instances;
  return o;
}

Outcome monte_carlo() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto a = montecarlo_bad_ratio(3, 8, kMonteCarloTrials, kMonteCarloSeed);
  const auto b = montecarlo_bad_ratio(3, 8, kMonteCarloTrials, kMonteCarloSeed);
  const double dt = seconds_since(t0);
  const std::string ja = io::to_json(a).dump();
  const std::string jb = io::to_json(b).dump();
  o.require(ja == jb, "byte-identical reports");
  o.require(static_cast<int>(a.per_trial.size()) == kMonteCarloTrials, "trial count");
  double worst = 0.0;
  for (const auto& t : a.per_trial) {
    for (double r : t.ratio) {
      o.require(r >= 0.0 && r <= 1.0, "ratio range");
      worst = std::max(worst, r);
    }
  }
  o.require(dt < kMonteCarloSeconds, "runtime");
  o.notes << " trials=" << a.trials << " seed=" << a.seed << " bytes=" << ja.size() << " max ratio=" << worst
          << " " << dt << "s (two runs)";
  return o;
}

Outcome gf2() {
  Outcome o;
  const std::size_t counts[] = {2, 1, 2, 3, 6, 9};
  for (int d = 1; d <= 6; ++d) {
    o.require(irreducibles_of_degree(d).size() == counts[d - 1] && irreducible_count(d) == counts[d - 1],
              "count d=" + std::to_string(d));
  }
  for (auto [n, size] : {std::pair{7, std::size_t{5}}, std::pair{13, std::size_t{23}}}) {
    const auto s = gf2_finite_sidon(n, irreducibles_of_degree(n).front());
    const std::uint64_t m = (std::uint64_t{1} << n) - 1;
    o.notes << " n=" << n << " |A|=" << s.size() << ";";
    o.require(s.size() == size, "finite size n=" + std::to_string(n));
    o.require(sidon_mod_brute(s, m), "finite sidon n=" + std::to_string(n));
  }
  const auto prefix = gf2_generate_blocks(4, kSqrt5, Gf2Basis::deterministic(5));
  const auto values = prefix.values();
  o.notes << " prefix elements=" << values.size();
  o.require(all_distinct(values), "prefix distinct");
  o.require(find_collisions(values, 2).empty(), "prefix sidon");
  return o;
}

Outcome exponent_report() {
  Outcome o;
  const double c = kSqrt5.c.value(128).to_double();
  for (const auto& row : growth_bracket_check(g_theorem_prefix)) {
    o.notes << " k=" << row.k << ":";
    if (row.exponent) {
      o.notes << *row.exponent;
    } else {
      o.notes << "n/a";
    }
  }
  o.notes << " (target c=" << c << ", approximate, not asserted)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"finite discrete-log Sidon sets", finite_sets},
      {"c=(3-sqrt5)/2 prefix k<=7 has no repeated pair sum", theorem_exactness},
      {"worked digit vectors for p=5 and p=2", worked_vector},
      {"growth brackets and element bounds k<=7", growth_brackets},
      {"c=sqrt2-1 pruning pipeline k<=7", pruning_pipeline},
      {"B_3 prefix k<=9, pruning and structure", bh_three},
      {"Monte-Carlo reproducibility", monte_carlo},
      {"GF(2)[X] variant", gf2},
      {"exponent diagnostics", exponent_report},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.notes << " [exception: " << ex.what() << "]";
    }
    failed += !o.pass;
    std::printf("criterion %zu: %s  %s (%.2fs)%s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                seconds_since(t0), o.notes.str().c_str());
    std::fflush(stdout);
  }
  return failed;
}
