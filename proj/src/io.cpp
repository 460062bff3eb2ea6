#include "sidon/io.hpp"

#include <string>

#include "sidon/errors.hpp"

namespace sidon::io {

namespace {

json optional_big(const std::optional<BigInt>& v) {
  return v ? json(big_to_string(*v)) : json(nullptr);
}

}  // namespace

json to_json(const Basis& basis) {
  json entries = json::array();
  for (const auto& e : basis.entries()) entries.push_back({{"j", e.j}, {"q", e.q}, {"g", e.g}});
  return {{"scale", basis.scale()}, {"entries", entries}};
}

Basis basis_from_json(const json& j) {
  std::vector<BasisEntry> entries;
  for (const auto& e : j.at("entries")) {
    entries.push_back({e.at("j").get<int>(), e.at("q").get<std::uint64_t>(), e.at("g").get<std::uint64_t>()});
  }
  return Basis::from_entries(j.at("scale").get<int>(), std::move(entries));
}

json to_json(const SidonElement& e) {
  return {{"p", e.p}, {"k", e.k}, {"digits", e.digits.digits}, {"a", big_to_string(e.value)}};
}

SidonElement element_from_json(const json& j) {
  SidonElement e;
  e.value = big_from_string(j.at("a").get<std::string>());
  e.p = j.value("p", std::uint64_t{0});
  e.k = j.value("k", 0);
  if (j.contains("digits")) {
    e.digits.digits = j.at("digits").get<std::vector<std::uint64_t>>();
    e.digits.window = j.value("window", 2);
  }
  return e;
}

json to_json(const BlockSummary& s) {
  return {{"k", s.k},
          {"block_size", s.block_size},
          {"excluded", s.excluded},
          {"emitted", s.emitted},
          {"min_value", optional_big(s.min_value)},
          {"max_value", optional_big(s.max_value)}};
}

json to_json(const ExcludedRecord& r) {
  return {{"p", r.p}, {"k", r.k}, {"j", r.j}, {"reason", "p equals basis prime q_j"}};
}

json to_json(const SRangeBounds& b) {
  return {{"k2", b.k2},
          {"k1", b.k1},
          {"Q1", big_to_string(b.q1)},
          {"Q2", big_to_string(b.q2)},
          {"s1_max", big_to_string(b.s1_max)},
          {"s2_max", big_to_string(b.s2_max)},
          {"empty", b.empty()}};
}

json to_json(const BadPrimeRecord& r, const SRangeBounds& bounds) {
  return {{"p1", r.p1},
          {"k1", r.k1},
          {"k2", r.k2},
          {"s1", big_to_string(r.s1)},
          {"s2", big_to_string(r.s2)},
          {"p2_prime", r.p2_prime},
          {"s", big_to_string(r.s(bounds))},
          {"bounds", to_json(bounds)}};
}

json to_json(const PruneSummary& s) {
  return {{"k", s.k}, {"block_size", s.block_size}, {"bad_count", s.bad_count}, {"ratio", s.ratio}};
}

json to_json(const MonteCarloReport& r) {
  json per_k = json::array();
  for (const auto& s : r.per_k) {
    per_k.push_back({{"k", s.k}, {"mean_ratio", s.mean_ratio}, {"max_ratio", s.max_ratio}});
  }
  json trials = json::array();
  for (const auto& t : r.per_trial) {
    trials.push_back({{"trial_seed", t.trial_seed},
                      {"q", t.q},
                      {"block_size", t.block_size},
                      {"removed", t.removed},
                      {"ratio", t.ratio}});
  }
  return {{"h", r.h},       {"seed", r.seed},   {"trials", r.trials},
          {"k_min", r.k_min}, {"k_max", r.k_max}, {"per_k", per_k},
          {"per_trial", trials}};
}

json to_json(const StructureFacts& f) {
  return {{"digitwise_equal", f.digitwise_equal},
          {"block_indices", f.block_indices},
          {"congruence_chain", f.congruence_chain},
          {"inequality_iv", f.inequality},
          {"divisibility_iv", f.divisibility},
          {"k", f.k}};
}

json to_json(const CollisionReport& r) {
  json left = json::array();
  json right = json::array();
  for (const auto& e : r.left) left.push_back(to_json(e));
  for (const auto& e : r.right) right.push_back(to_json(e));
  return {{"l", r.l},
          {"sum", big_to_string(r.sum())},
          {"left", left},
          {"right", right},
          {"structure", r.structure ? to_json(*r.structure) : json(nullptr)}};
}

json to_json(const CountReport& r) {
  return {{"x", big_to_string(r.x)},
          {"count", r.count},
          {"k", r.k},
          {"lower", r.lower},
          {"upper", r.upper},
          {"bracket_ok", r.bracket_ok},
          {"exponent_approx", r.exponent ? json(*r.exponent) : json(nullptr)}};
}

json to_json(const BracketRow& r) {
  return {{"k", r.k},
          {"x", big_to_string(r.x)},
          {"count", r.count},
          {"lower", r.lower},
          {"upper", r.upper},
          {"bracket_ok", r.bracket_ok},
          {"element_bounds_ok", r.element_bounds_ok},
          {"exponent_approx", r.exponent ? json(*r.exponent) : json(nullptr)}};
}

json to_json(const Gf2Element& e) {
  return {{"p", e.p.to_hex()}, {"k", e.k}, {"digits", e.digits}, {"a", big_to_string(e.value)}};
}

std::vector<SidonElement> read_elements_jsonl(std::istream& in) {
  std::vector<SidonElement> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(element_from_json(json::parse(line)));
    } catch (const json::exception& ex) {
      throw Error(Errc::kInvalidArgument, "line " + std::to_string(line_no) + ": " + ex.what());
    }
  }
  return out;
}

}  // namespace sidon::io
