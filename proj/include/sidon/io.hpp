#pragma once

#include <json.hpp>

#include <istream>
#include <vector>

#include "sidon/auditor.hpp"
#include "sidon/basis.hpp"
#include "sidon/bh.hpp"
#include "sidon/encoder.hpp"
#include "sidon/generator.hpp"
#include "sidon/gf2x.hpp"
#include "sidon/pruner.hpp"

namespace sidon::io {

using nlohmann::json;

// Big integers travel as decimal strings; everything else exact is an
// integer. Only ratios and exponent estimates are floating point.
json to_json(const Basis& basis);
Basis basis_from_json(const json& j);

json to_json(const SidonElement& e);
SidonElement element_from_json(const json& j);

json to_json(const BlockSummary& s);
json to_json(const ExcludedRecord& r);
json to_json(const BadPrimeRecord& r, const SRangeBounds& bounds);
json to_json(const SRangeBounds& b);
json to_json(const PruneSummary& s);
json to_json(const MonteCarloReport& r);
json to_json(const CollisionReport& r);
json to_json(const StructureFacts& f);
json to_json(const CountReport& r);
json to_json(const BracketRow& r);
json to_json(const Gf2Element& e);

// One JSON object per non-empty line.
std::vector<SidonElement> read_elements_jsonl(std::istream& in);

}  // namespace sidon::io
