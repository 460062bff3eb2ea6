// sidon: command-line driver.
//
// Exit status: 0 success, 1 verification failure, 2 usage error, 3 any other
// error raised while computing.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sidon/arith.hpp"
#include "sidon/auditor.hpp"
#include "sidon/basis.hpp"
#include "sidon/bh.hpp"
#include "sidon/errors.hpp"
#include "sidon/generator.hpp"
#include "sidon/gf2x.hpp"
#include "sidon/io.hpp"
#include "sidon/pruner.hpp"

namespace {

using nlohmann::json;
using namespace sidon;

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string c;
  int k_max = 0;
  std::string basis_mode = "deterministic";
  std::uint64_t seed = 0;
  int h = 2;
  long precision = kDefaultPrecisionBits;
  std::string taper_log = "natural";
  std::string out;
  std::string summary;
};

long default_precision() {
  const char* env = std::getenv("SIDON_PRECISION_BITS");
  if (env == nullptr || *env == '\0') return kDefaultPrecisionBits;
  try {
    std::size_t used = 0;
    const long v = std::stol(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("SIDON_PRECISION_BITS: not an integer: ") + env);
  }
}

void check_precision(long bits) {
  if (bits < kMinPrecisionBits) {
    throw UsageError("--precision: need at least " + std::to_string(kMinPrecisionBits) + " bits, got " +
                     std::to_string(bits));
  }
}

GrowthConstant parse_c(const std::string& selector, long precision) {
  try {
    GrowthConstant c = GrowthConstant::parse(selector);
    c.value(precision + 64);
    return c;
  } catch (const Error& e) {
    throw UsageError("--c: " + std::string(e.what()));
  }
}

BasisSource basis_source(const Config& cfg) {
  if (cfg.basis_mode == "deterministic") return BasisSource::deterministic();
  if (cfg.basis_mode == "random") return BasisSource::random(cfg.seed);
  throw UsageError("--basis: expected deterministic or random, got " + cfg.basis_mode);
}

// Output sink: a file when a path is given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_json(const std::string& path, const json& j) {
  Output out(path);
  out.stream() << j.dump(2) << "\n";
}

json prefix_summary(const SequencePrefix& prefix, const std::string& c) {
  json blocks = json::array();
  for (const auto& b : prefix.blocks) blocks.push_back(io::to_json(b));
  json excluded = json::array();
  for (const auto& e : prefix.excluded) excluded.push_back(io::to_json(e));
  return {{"c", c},
          {"h", prefix.h},
          {"k_max", prefix.k_max},
          {"precision_bits", prefix.params.precision_bits},
          {"elements", prefix.elements.size()},
          {"basis", io::to_json(prefix.basis)},
          {"blocks", blocks},
          {"excluded", excluded}};
}

void write_elements(const std::string& path, const std::vector<SidonElement>& elements) {
  Output out(path);
  for (const auto& e : elements) out.stream() << io::to_json(e).dump() << "\n";
}

BigInt parse_big(const std::string& s, const std::string& flag) {
  try {
    return big_from_string(s);
  } catch (const Error&) {
    throw UsageError(flag + ": not a decimal integer: " + s);
  }
}

// --- subcommands ------------------------------------------------------------

int cmd_basis(const Config& cfg, int scale, int count) {
  const Basis b = build_basis(basis_source(cfg), scale, count);
  json j = io::to_json(b);
  j["mode"] = cfg.basis_mode;
  if (cfg.basis_mode == "random") j["seed"] = cfg.seed;
  write_json(cfg.out, j);
  return 0;
}

int cmd_generate(const Config& cfg) {
  const auto params = BlockParams::sidon(parse_c(cfg.c, cfg.precision), cfg.precision);
  const Basis basis = build_basis(basis_source(cfg), 4, std::max(cfg.k_max, 1));
  const auto prefix = generate_blocks(cfg.k_max, params, basis, 2);
  write_elements(cfg.out, prefix.elements);
  if (!cfg.summary.empty()) write_json(cfg.summary, prefix_summary(prefix, cfg.c));
  return 0;
}

int cmd_prune(const Config& cfg, const std::string& bad_path, double slack, bool exhaustive) {
  const auto params = BlockParams::sidon(parse_c(cfg.c, cfg.precision), cfg.precision);
  const Basis basis = build_basis(basis_source(cfg), 4, std::max(cfg.k_max, 1));
  const auto result = pruned_generate(cfg.k_max, params, basis,
                                      exhaustive ? K2Policy::kExhaustive : K2Policy::kEligible);
  write_elements(cfg.out, result.prefix.elements);
  if (!bad_path.empty()) {
    Output out(bad_path);
    for (const auto& rec : result.bad) {
      const auto bounds = s_bounds_unchecked(rec.k2, rec.k1, params, result.prefix.basis);
      out.stream() << io::to_json(rec, bounds).dump() << "\n";
    }
  }
  bool ok = true;
  json ratios = json::array();
  for (const auto& s : result.summaries) {
    ratios.push_back(io::to_json(s));
    if (s.ratio > 0.5 + slack) ok = false;
  }
  if (!cfg.summary.empty()) {
    json j = prefix_summary(result.prefix, cfg.c);
    j["prune"] = ratios;
    j["ratio_ceiling"] = 0.5 + slack;
    j["bad_count"] = result.bad.size();
    write_json(cfg.summary, j);
  }
  if (!ok) {
    std::cerr << "prune: a block ratio |B_k|/|P_k| exceeds " << 0.5 + slack << "\n";
    return kExitVerify;
  }
  return 0;
}

TaperLog taper_log(const Config& cfg) {
  if (cfg.taper_log == "natural") return TaperLog::kNatural;
  if (cfg.taper_log == "binary") return TaperLog::kBinary;
  throw UsageError("--taper-log: expected natural or binary, got " + cfg.taper_log);
}

int cmd_bh_generate(const Config& cfg, bool prune, const std::string& removed_path) {
  if (cfg.h < 3) throw UsageError("--h: B_h construction needs h >= 3");
  const auto bh = BhParams::make(cfg.h, cfg.precision, taper_log(cfg));
  const Basis basis = build_basis(basis_source(cfg), cfg.h * cfg.h, std::max(cfg.k_max, 1));
  const auto prefix = bh_generate(cfg.k_max, bh, basis);
  if (!prune) {
    write_elements(cfg.out, prefix.elements);
    if (!cfg.summary.empty()) write_json(cfg.summary, prefix_summary(prefix, bh.blocks.c.selector()));
    return 0;
  }
  const auto pruned = bh_prune(prefix, cfg.h);
  write_elements(cfg.out, pruned.survivors.elements);
  if (!removed_path.empty()) write_elements(removed_path, pruned.removed);
  if (!cfg.summary.empty()) {
    json j = prefix_summary(pruned.survivors, bh.blocks.c.selector());
    j["removed"] = pruned.removed.size();
    write_json(cfg.summary, j);
  }
  return 0;
}

int cmd_bh_montecarlo(const Config& cfg, int trials) {
  if (cfg.h < 3) throw UsageError("--h: B_h construction needs h >= 3");
  if (trials < 1) throw UsageError("--trials: need at least one trial");
  const auto report = montecarlo_bad_ratio(cfg.h, cfg.k_max, trials, cfg.seed, cfg.precision);
  write_json(cfg.out, io::to_json(report));
  return 0;
}

int cmd_audit(const Config& cfg, const std::string& input, int l, bool allow) {
  if (l < 2) throw UsageError("--l: arity must be at least 2");
  std::ifstream in(input);
  if (!in) throw UsageError("--input: cannot open " + input);
  auto elements = io::read_elements_jsonl(in);
  bool with_digits = !elements.empty();
  for (auto& e : elements) {
    e.digits.window = cfg.h;
    with_digits = with_digits && e.digits.k() > 0;
  }
  auto reports = find_element_collisions(elements, l);
  if (with_digits && !reports.empty()) {
    const auto params = cfg.h == 2 ? BlockParams::sidon(parse_c(cfg.c, cfg.precision), cfg.precision)
                                   : BhParams::make(cfg.h, cfg.precision, taper_log(cfg)).blocks;
    int top = 0;
    for (const auto& e : elements) top = std::max(top, e.k);
    const Basis basis = build_basis(basis_source(cfg), cfg.h * cfg.h, std::max(top, 1));
    for (auto& r : reports) r.structure = check_collision_structure(r, basis, params, cfg.h);
  }
  {
    Output out(cfg.out);
    for (const auto& r : reports) out.stream() << io::to_json(r).dump() << "\n";
  }
  std::cerr << "audit: " << elements.size() << " elements, l = " << l << ", " << reports.size()
            << " collision(s)\n";
  if (!reports.empty() && !allow) {
    std::cerr << "audit: collision report at " << (cfg.out.empty() ? std::string("<stdout>") : cfg.out) << "\n";
    return kExitVerify;
  }
  return 0;
}

int cmd_count(const Config& cfg, const std::vector<std::string>& xs) {
  const auto params = BlockParams::sidon(parse_c(cfg.c, cfg.precision), cfg.precision);
  const Basis basis = build_basis(basis_source(cfg), 4, std::max(cfg.k_max, 1));
  const auto prefix = generate_blocks(cfg.k_max, params, basis, 2);
  bool ok = true;
  json j;
  j["c"] = cfg.c;
  j["k_max"] = cfg.k_max;
  j["target_exponent_approx"] = params.c.value(64).to_double();
  if (xs.empty()) {
    json rows = json::array();
    for (const auto& row : growth_bracket_check(prefix)) {
      rows.push_back(io::to_json(row));
      ok = ok && row.pass();
    }
    j["brackets"] = rows;
  } else {
    json rows = json::array();
    for (const auto& s : xs) {
      const auto r = count_upto(parse_big(s, "--x"), prefix);
      rows.push_back(io::to_json(r));
      ok = ok && r.bracket_ok;
    }
    j["counts"] = rows;
  }
  write_json(cfg.out, j);
  return ok ? 0 : kExitVerify;
}

int cmd_finite(const Config& cfg, std::uint64_t q, std::optional<std::uint64_t> g) {
  if (q < 3 || !is_prime(q)) throw UsageError("--q: need an odd prime, got " + std::to_string(q));
  const std::uint64_t gen = g ? *g : smallest_primitive_root(q);
  if (!is_primitive_root(gen, q)) {
    throw UsageError("--g: " + std::to_string(gen) + " is not a primitive root mod " + std::to_string(q));
  }
  const auto set = finite_dlog_sidon_set(q, gen);
  const bool sidon = is_sidon_mod(set, q - 1);
  write_json(cfg.out, {{"q", q}, {"g", gen}, {"modulus", q - 1}, {"size", set.size()}, {"residues", set},
                       {"sidon", sidon}});
  return sidon ? 0 : kExitVerify;
}

int cmd_gf2_finite(const Config& cfg, int n, const std::string& q_hex) {
  if (n < 3 || n > 32) throw UsageError("--n: need 3 <= n <= 32");
  Gf2Poly q;
  if (q_hex.empty()) {
    q = irreducibles_of_degree(n).front();
  } else {
    try {
      q = Gf2Poly::from_hex(q_hex);
    } catch (const Error& e) {
      throw UsageError("--q: " + std::string(e.what()));
    }
  }
  if (q.degree() != n || !is_irreducible(q)) throw UsageError("--q: need an irreducible of degree " + std::to_string(n));
  const auto set = gf2_finite_sidon(n, q);
  const std::uint64_t m = (std::uint64_t{1} << n) - 1;
  const bool sidon = is_sidon_mod(set, m);
  write_json(cfg.out, {{"n", n}, {"q", q.to_hex()}, {"g", gf2_generator(q).to_hex()}, {"modulus", m},
                       {"size", set.size()}, {"residues", set}, {"sidon", sidon}});
  return sidon ? 0 : kExitVerify;
}

int cmd_gf2_generate(const Config& cfg) {
  const auto params = BlockParams::sidon(parse_c(cfg.c, cfg.precision), cfg.precision);
  const auto basis = Gf2Basis::deterministic(std::max(cfg.k_max, 1));
  const auto prefix = gf2_generate_blocks(cfg.k_max, params, basis);
  {
    Output out(cfg.out);
    for (const auto& e : prefix.elements) out.stream() << io::to_json(e).dump() << "\n";
  }
  if (!cfg.summary.empty()) {
    json entries = json::array();
    for (const auto& e : basis.entries()) {
      entries.push_back({{"j", e.j}, {"q", e.q.to_hex()}, {"g", e.g.to_hex()}});
    }
    json blocks = json::array();
    for (std::size_t i = 0; i < prefix.blocks.size(); ++i) {
      const int k = params.k_min + static_cast<int>(i);
      const auto [lo, hi] = gf2_block_degrees(k, params);
      std::size_t emitted = 0;
      for (const auto& e : prefix.elements) emitted += e.k == k;
      blocks.push_back({{"k", k}, {"min_degree", lo}, {"max_degree", hi},
                        {"block_size", prefix.blocks[i].size()}, {"emitted", emitted}});
    }
    json excluded = json::array();
    for (const auto& e : prefix.excluded) excluded.push_back({{"p", e.p.to_hex()}, {"k", e.k}, {"j", e.j}});
    write_json(cfg.summary, {{"c", cfg.c}, {"k_max", cfg.k_max}, {"basis", entries}, {"blocks", blocks},
                             {"excluded", excluded}});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sidon and B_h sequence construction toolkit"};
  app.require_subcommand(1);
  // --h is the order of B_h, so help is long-form only.
  app.set_help_flag("--help", "print this help message and exit");
  Config cfg;

  long env_precision = kDefaultPrecisionBits;
  try {
    env_precision = default_precision();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  cfg.precision = env_precision;

  auto common = [&](CLI::App* sub, bool with_c, const std::string& c_default) {
    if (with_c) {
      sub->add_option("--c", cfg.c,
                      "growth constant: sqrt5, sqrt2, bh:<h> or a decimal in (0, 1/2); default " + c_default);
    }
    sub->add_option("--basis", cfg.basis_mode, "deterministic or random")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for --basis random")->capture_default_str();
    sub->add_option("--precision", cfg.precision, "fractional bits for block edges (env SIDON_PRECISION_BITS)")
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "output path (default stdout)");
  };

  int scale = 4, count = 4;
  auto* basis = app.add_subcommand("basis", "build a radix basis");
  common(basis, false, "");
  basis->add_option("--scale", scale, "radix scale m (4, 9, 16, ...)")->capture_default_str();
  basis->add_option("--count", count, "number of entries")->capture_default_str();

  auto* generate = app.add_subcommand("generate", "sequence prefix as JSONL");
  common(generate, true, "sqrt5");
  generate->add_option("--kmax", cfg.k_max, "last block")->required();
  generate->add_option("--summary", cfg.summary, "per-block summary JSON path");

  std::string bad_path;
  double slack = 0.1;
  bool exhaustive = false;
  auto* prune = app.add_subcommand("prune", "prefix over the surviving primes after bad-prime deletion");
  common(prune, true, "sqrt2");
  prune->add_option("--kmax", cfg.k_max, "last block")->required();
  prune->add_option("--summary", cfg.summary, "summary JSON path");
  prune->add_option("--bad", bad_path, "bad-prime records JSONL path");
  prune->add_option("--slack", slack, "allowed excess of |B_k|/|P_k| over 1/2")->capture_default_str();
  prune->add_flag("--all-k2", exhaustive, "range over every k2 <= k1, not just the eligible ones");

  auto* bh = app.add_subcommand("bh", "B_h construction");
  bh->require_subcommand(1);
  bool bh_prune_flag = false;
  std::string removed_path;
  auto* bh_gen = bh->add_subcommand("generate", "B_h prefix as JSONL");
  common(bh_gen, false, "");
  cfg.h = 2;
  bh_gen->add_option("--h", cfg.h, "order h >= 3")->required();
  bh_gen->add_option("--kmax", cfg.k_max, "last block")->required();
  bh_gen->add_option("--taper-log", cfg.taper_log, "natural or binary")->capture_default_str();
  bh_gen->add_option("--summary", cfg.summary, "summary JSON path");
  bh_gen->add_flag("--prune", bh_prune_flag, "drop the largest element of every repeated l-sum, l <= h");
  bh_gen->add_option("--removed", removed_path, "removed elements JSONL path (with --prune)");

  int trials = 20;
  auto* bh_mc = bh->add_subcommand("montecarlo", "bad-element ratios over random bases");
  bh_mc->add_option("--h", cfg.h, "order h >= 3")->required();
  bh_mc->add_option("--kmax", cfg.k_max, "last block")->required();
  bh_mc->add_option("--trials", trials, "number of random bases")->capture_default_str();
  bh_mc->add_option("--seed", cfg.seed, "master seed")->capture_default_str();
  bh_mc->add_option("--precision", cfg.precision, "fractional bits")->capture_default_str();
  bh_mc->add_option("--out", cfg.out, "report JSON path (default stdout)");

  std::string input;
  int arity = 2;
  bool allow = false;
  auto* audit = app.add_subcommand("audit", "search a JSONL element file for repeated l-sums");
  common(audit, true, "sqrt5");
  audit->add_option("--input", input, "element JSONL")->required();
  audit->add_option("--l", arity, "arity of the sums")->capture_default_str();
  audit->add_option("--h", cfg.h, "digit window of the elements (2 for Sidon)")->capture_default_str();
  audit->add_option("--taper-log", cfg.taper_log, "natural or binary (h >= 3)")->capture_default_str();
  audit->add_flag("--allow-collisions", allow, "exit 0 even when collisions are found");

  std::vector<std::string> xs;
  auto* count_cmd = app.add_subcommand("count", "counting function A(x) and its prime brackets");
  common(count_cmd, true, "sqrt5");
  count_cmd->add_option("--kmax", cfg.k_max, "last block of the prefix")->required();
  count_cmd->add_option("--x", xs, "points to count at (default: every W_(k+1))");

  std::uint64_t q = 0;
  std::optional<std::uint64_t> g;
  auto* finite = app.add_subcommand("finite", "finite discrete-log Sidon set mod q - 1");
  finite->add_option("--q", q, "prime modulus")->required();
  finite->add_option("--g", g, "primitive root (default: smallest)");
  finite->add_option("--out", cfg.out, "output path (default stdout)");

  auto* gf2 = app.add_subcommand("gf2", "GF(2)[X] construction");
  gf2->require_subcommand(1);
  int n = 0;
  std::string q_hex;
  auto* gf2_finite = gf2->add_subcommand("finite", "finite Sidon set mod 2^n - 1");
  gf2_finite->add_option("--n", n, "field degree")->required();
  gf2_finite->add_option("--q", q_hex, "irreducible modulus as hex (default: least of degree n)");
  gf2_finite->add_option("--out", cfg.out, "output path (default stdout)");
  auto* gf2_gen = gf2->add_subcommand("generate", "polynomial sequence prefix as JSONL");
  gf2_gen->add_option("--c", cfg.c, "growth constant; default sqrt5");
  gf2_gen->add_option("--kmax", cfg.k_max, "last block")->required();
  gf2_gen->add_option("--precision", cfg.precision, "fractional bits")->capture_default_str();
  gf2_gen->add_option("--out", cfg.out, "output path (default stdout)");
  gf2_gen->add_option("--summary", cfg.summary, "summary JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (cfg.c.empty()) cfg.c = *prune ? "sqrt2" : "sqrt5";

  try {
    check_precision(cfg.precision);
    if (*basis) return cmd_basis(cfg, scale, count);
    if (*generate) return cmd_generate(cfg);
    if (*prune) return cmd_prune(cfg, bad_path, slack, exhaustive);
    if (*bh_gen) return cmd_bh_generate(cfg, bh_prune_flag, removed_path);
    if (*bh_mc) return cmd_bh_montecarlo(cfg, trials);
    if (*audit) return cmd_audit(cfg, input, arity, allow);
    if (*count_cmd) return cmd_count(cfg, xs);
    if (*finite) return cmd_finite(cfg, q, g);
    if (*gf2_finite) return cmd_gf2_finite(cfg, n, q_hex);
    if (*gf2_gen) return cmd_gf2_generate(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::kInvalidArgument ? kExitUsage : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
