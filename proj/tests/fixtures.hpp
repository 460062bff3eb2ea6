#pragma once

// Small non-dyadic bases on which the construction does produce repeated
// sums, so the collision plumbing is exercised end to end.

#include <string>
#include <vector>

#include "sidon/auditor.hpp"
#include "sidon/basis.hpp"
#include "sidon/bh.hpp"
#include "sidon/generator.hpp"

namespace sidon::fixture {

struct SyntheticCase {
  std::string name;
  std::vector<BasisEntry> entries;
  std::string c;
  int k_max;
};

inline std::vector<SyntheticCase> synthetic_cases() {
  const std::vector<BasisEntry> tiny = {{1, 3, 2}, {2, 5, 2}, {3, 7, 3}, {4, 11, 2}, {5, 13, 2}, {6, 17, 3}};
  const std::vector<BasisEntry> odd = {{1, 5, 2}, {2, 7, 3}, {3, 11, 2}, {4, 13, 2}, {5, 17, 3}, {6, 19, 2}};
  const std::vector<BasisEntry> mixed = {{1, 3, 2}, {2, 7, 3}, {3, 13, 2}, {4, 19, 2}, {5, 23, 5}, {6, 29, 2}};
  const std::vector<BasisEntry> skip = {{1, 3, 2}, {2, 5, 2}, {3, 11, 2}, {4, 13, 2}, {5, 19, 2}, {6, 23, 5}};
  return {
      {"tiny-0.4471", tiny, "0.4471", 5},  {"tiny-0.4623", tiny, "0.4623", 5},
      {"tiny-0.4817", tiny, "0.4817", 5},  {"odd-0.4817", odd, "0.4817", 5},
      {"odd-0.4909", odd, "0.4909", 5},    {"mixed-0.4909", mixed, "0.4909", 5},
      {"skip-0.4623", skip, "0.4623", 5},
  };
}

struct SyntheticRun {
  SyntheticCase fixture_case;
  Basis basis;
  BlockParams params;
  SequencePrefix prefix;
  std::vector<CollisionReport> collisions;  // empty when values repeat
  bool distinct = false;
};

inline SyntheticRun run(const SyntheticCase& sc) {
  SyntheticRun r{sc, Basis::from_entries(4, sc.entries), BlockParams::sidon(GrowthConstant::custom(sc.c)), {}, {}, false};
  r.prefix = generate_blocks(sc.k_max, r.params, r.basis, 2);
  const auto values = r.prefix.values();
  r.distinct = all_distinct(values);
  if (r.distinct) r.collisions = find_element_collisions(r.prefix.elements, 2);
  return r;
}

// Scale-9 bases with untapered blocks for the three-fold window; these give
// repeated 3-sums in the dozens to thousands.
inline std::vector<SyntheticCase> bh_cases() {
  const std::vector<BasisEntry> a = {{1, 5, 2}, {2, 7, 3}, {3, 11, 2}, {4, 13, 2}, {5, 17, 3}, {6, 19, 2}};
  const std::vector<BasisEntry> b = {{1, 3, 2}, {2, 7, 3}, {3, 13, 2}, {4, 19, 2}, {5, 23, 5}, {6, 29, 2}};
  const std::vector<BasisEntry> c = {{1, 3, 2}, {2, 5, 2}, {3, 11, 2}, {4, 13, 2}, {5, 19, 2}, {6, 23, 5}};
  const std::vector<BasisEntry> d = {{1, 3, 2}, {2, 5, 2}, {3, 7, 3}, {4, 11, 2}, {5, 13, 2}, {6, 17, 3}};
  return {
      {"a-0.4471", a, "0.4471", 5},
      {"b-0.4471", b, "0.4471", 5},
      {"c-0.4471", c, "0.4471", 5},
      {"d-0.4471", d, "0.4471", 5},
  };
}

struct BhRun {
  SyntheticCase fixture_case;
  Basis basis;
  BhParams params;
  SequencePrefix prefix;
};

inline BhRun run_bh(const SyntheticCase& sc) {
  BhRun r{sc, Basis::from_entries(9, sc.entries), BhParams{3, BlockParams::sidon(GrowthConstant::custom(sc.c))}, {}};
  r.prefix = bh_generate(sc.k_max, r.params, r.basis);
  return r;
}

}  // namespace sidon::fixture
