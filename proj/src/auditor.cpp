#include "sidon/auditor.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sidon/errors.hpp"

namespace sidon {

namespace {

using u128 = unsigned __int128;

u128 to_u128(const BigInt& v) {
  std::uint64_t words[2] = {0, 0};
  std::size_t count = 0;
  mpz_export(words, &count, -1, sizeof(std::uint64_t), 0, 0, v.get_mpz_t());
  return (static_cast<u128>(words[1]) << 64) | words[0];
}

// All r-multisets of positions 0..n-1 written as non-increasing tuples, in
// lexicographic order, flattened.
std::vector<std::uint32_t> enumerate_multisets(std::uint32_t n, int r) {
  std::vector<std::uint32_t> flat;
  if (r == 0 || n == 0) return flat;
  std::vector<std::uint32_t> cur(static_cast<std::size_t>(r), 0);
  // cur[0] >= cur[1] >= ... >= cur[r-1]
  for (;;) {
    flat.insert(flat.end(), cur.begin(), cur.end());
    int i = r - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] ==
                         (i == 0 ? n - 1 : cur[static_cast<std::size_t>(i - 1)])) {
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < r; ++t) cur[static_cast<std::size_t>(t)] = 0;
  }
  return flat;
}

struct PendingCollision {
  std::vector<std::uint32_t> left;   // positions, descending
  std::vector<std::uint32_t> right;
};

bool disjoint_desc(const std::uint32_t* a, const std::uint32_t* b, int l) {
  int i = 0, j = 0;
  while (i < l && j < l) {
    if (a[i] == b[j]) return false;
    if (a[i] > b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

template <typename K>
class SortedSumStream {
 public:
  SortedSumStream(const std::vector<K>& values, int l)
      : values_(values), l_(l), high_len_((l + 1) / 2), low_len_(l / 2) {
    const auto n = static_cast<std::uint32_t>(values.size());
    high_ = enumerate_multisets(n, high_len_);
    rows_ = high_.size() / static_cast<std::size_t>(high_len_);
    high_sum_.resize(rows_);
    for (std::size_t r = 0; r < rows_; ++r) high_sum_[r] = sum_of(&high_[r * high_len_], high_len_);

    std::vector<std::uint32_t> low = enumerate_multisets(n, low_len_);
    const std::size_t nlow = low.size() / static_cast<std::size_t>(low_len_);
    std::vector<std::size_t> order(nlow);
    std::iota(order.begin(), order.end(), 0);
    std::vector<K> low_sum(nlow);
    for (std::size_t i = 0; i < nlow; ++i) low_sum[i] = sum_of(&low[i * low_len_], low_len_);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return low_sum[a] < low_sum[b]; });
    low_.reserve(low.size());
    low_sum_.reserve(nlow);
    for (std::size_t i : order) {
      low_.insert(low_.end(), low.begin() + static_cast<std::ptrdiff_t>(i * low_len_),
                  low.begin() + static_cast<std::ptrdiff_t>((i + 1) * low_len_));
      low_sum_.push_back(low_sum[i]);
    }
  }

  std::vector<PendingCollision> run() {
    std::vector<PendingCollision> out;
    heap_.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      const std::size_t c = first_valid(r, 0);
      if (c < low_sum_.size()) heap_.push_back({high_sum_[r] + low_sum_[c], r, c});
    }
    std::make_heap(heap_.begin(), heap_.end(), Later{});
    std::vector<std::pair<std::size_t, std::size_t>> group;
    K group_sum{};
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end(), Later{});
      Entry top = heap_.back();
      if (!group.empty() && top.sum != group_sum) {
        flush(group, out);
        group.clear();
      }
      group_sum = top.sum;
      group.emplace_back(top.row, top.cursor);
      const std::size_t next = first_valid(top.row, top.cursor + 1);
      if (next < low_sum_.size()) {
        heap_.back() = {high_sum_[top.row] + low_sum_[next], top.row, next};
        std::push_heap(heap_.begin(), heap_.end(), Later{});
      } else {
        heap_.pop_back();
      }
    }
    flush(group, out);
    return out;
  }

 private:
  struct Entry {
    K sum;
    std::size_t row;
    std::size_t cursor;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const { return b.sum < a.sum; }
  };

  K sum_of(const std::uint32_t* idx, int len) const {
    K s{};
    for (int i = 0; i < len; ++i) s += values_[idx[i]];
    return s;
  }

  // The low half may not reach above the smallest position of the high half,
  // which makes every multiset appear exactly once.
  std::size_t first_valid(std::size_t row, std::size_t c) const {
    const std::uint32_t bound = high_[row * high_len_ + high_len_ - 1];
    if (low_len_ == 1) return c <= bound ? c : low_sum_.size();
    while (c < low_sum_.size() && low_[c * low_len_] > bound) ++c;
    return c;
  }

  std::vector<std::uint32_t> tuple(std::size_t row, std::size_t cursor) const {
    std::vector<std::uint32_t> t(&high_[row * high_len_], &high_[row * high_len_] + high_len_);
    t.insert(t.end(), &low_[cursor * low_len_], &low_[cursor * low_len_] + low_len_);
    return t;
  }

  void flush(const std::vector<std::pair<std::size_t, std::size_t>>& group,
             std::vector<PendingCollision>& out) const {
    if (group.size() < 2) return;
    std::vector<std::vector<std::uint32_t>> tuples;
    tuples.reserve(group.size());
    for (const auto& [row, cursor] : group) tuples.push_back(tuple(row, cursor));
    for (std::size_t a = 0; a < tuples.size(); ++a) {
      for (std::size_t b = a + 1; b < tuples.size(); ++b) {
        if (!disjoint_desc(tuples[a].data(), tuples[b].data(), l_)) continue;
        const bool a_left = tuples[a][0] > tuples[b][0];
        out.push_back({a_left ? tuples[a] : tuples[b], a_left ? tuples[b] : tuples[a]});
      }
    }
  }

  const std::vector<K>& values_;
  int l_;
  int high_len_;
  int low_len_;
  std::vector<std::uint32_t> high_;
  std::vector<K> high_sum_;
  std::size_t rows_ = 0;
  std::vector<std::uint32_t> low_;
  std::vector<K> low_sum_;
  std::vector<Entry> heap_;
};

template <typename K>
std::vector<PendingCollision> run_stream(const std::vector<K>& sorted_values, int l) {
  return SortedSumStream<K>(sorted_values, l).run();
}

bool real_less(const Real& a, const Real& b) { return a < b; }

}  // namespace

bool all_distinct(std::span<const BigInt> values) {
  std::vector<BigInt> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::vector<Collision> find_collisions(std::span<const BigInt> values, int l) {
  if (l < 2) throw Error(Errc::kArityOutOfRange, "arity must be >= 2, got " + std::to_string(l));
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (values[order[i]] == values[order[i - 1]]) {
      throw Error(Errc::kInvalidArgument, "repeated value " + values[order[i]].get_str());
    }
    if (sgn(values[order[i - 1]]) < 0) {
      throw Error(Errc::kInvalidArgument, "negative value " + values[order[i - 1]].get_str());
    }
  }
  if (values.empty()) return {};

  std::size_t bits = mpz_sizeinbase(values[order.back()].get_mpz_t(), 2);
  for (int t = 1; t < l; t *= 2) ++bits;
  std::vector<PendingCollision> pending;
  if (bits <= 127) {
    std::vector<u128> keys;
    keys.reserve(order.size());
    for (std::size_t i : order) keys.push_back(to_u128(values[i]));
    pending = run_stream(keys, l);
  } else {
    std::vector<BigInt> keys;
    keys.reserve(order.size());
    for (std::size_t i : order) keys.push_back(values[i]);
    pending = run_stream(keys, l);
  }

  std::vector<std::pair<BigInt, Collision>> keyed;
  keyed.reserve(pending.size());
  for (const auto& p : pending) {
    Collision c;
    c.l = l;
    BigInt sum = 0;
    for (std::uint32_t pos : p.left) {
      c.left.push_back(order[pos]);
      sum += values[order[pos]];
    }
    for (std::uint32_t pos : p.right) c.right.push_back(order[pos]);
    keyed.emplace_back(std::move(sum), std::move(c));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  std::vector<Collision> out;
  out.reserve(keyed.size());
  for (auto& [sum, c] : keyed) out.push_back(std::move(c));
  return out;
}

BigInt CollisionReport::sum() const {
  BigInt s = 0;
  for (const auto& e : left) s += e.value;
  return s;
}

std::vector<CollisionReport> find_element_collisions(const std::vector<SidonElement>& elements,
                                                     int l) {
  std::vector<BigInt> values;
  values.reserve(elements.size());
  for (const auto& e : elements) values.push_back(e.value);
  std::vector<CollisionReport> out;
  for (const auto& c : find_collisions(values, l)) {
    CollisionReport r;
    r.l = c.l;
    for (std::size_t i : c.left) r.left.push_back(elements[i]);
    for (std::size_t i : c.right) r.right.push_back(elements[i]);
    out.push_back(std::move(r));
  }
  return out;
}

StructureFacts check_collision_structure(const CollisionReport& r, const Basis& basis,
                                         const BlockParams& params, int h) {
  const int l = r.l;
  if (l < 2 || static_cast<int>(r.left.size()) != l || static_cast<int>(r.right.size()) != l) {
    throw Error(Errc::kArityOutOfRange, "malformed collision report");
  }
  int top = 0;
  for (const auto* side : {&r.left, &r.right}) {
    for (const auto& e : *side) {
      if (e.digits.k() == 0 || e.digits.k() != e.k) {
        throw Error(Errc::kMissingDigits, "element " + e.value.get_str() + " has no digit vector");
      }
      if (e.digits.window != h) {
        throw Error(Errc::kDigitOutOfRange, "digit window differs from h");
      }
      if (encode_value(e.digits, basis) != e.value) {
        throw Error(Errc::kDigitOutOfRange, "digits do not encode " + e.value.get_str());
      }
      top = std::max(top, e.k);
    }
  }

  StructureFacts f;
  f.digitwise_equal = true;
  for (int j = 1; j <= top; ++j) {
    std::uint64_t sl = 0, sr = 0;
    for (const auto& e : r.left) sl += e.digits.at(j);
    for (const auto& e : r.right) sr += e.digits.at(j);
    if (sl != sr) f.digitwise_equal = false;
  }

  // k_i: largest j whose column sum reaches i((h-1)q_j + 1).
  f.k.assign(static_cast<std::size_t>(l), 0);
  for (int i = 1; i <= l; ++i) {
    for (int j = top; j >= 1; --j) {
      std::uint64_t s = 0;
      for (const auto& e : r.left) s += e.digits.at(j);
      if (s >= static_cast<std::uint64_t>(i) * (static_cast<std::uint64_t>(h - 1) * basis.q(j) + 1)) {
        f.k[static_cast<std::size_t>(i - 1)] = j;
        break;
      }
    }
  }
  f.block_indices = true;
  for (int i = 0; i < l; ++i) {
    const int ki = f.k[static_cast<std::size_t>(i)];
    if (r.left[static_cast<std::size_t>(i)].k != ki || r.right[static_cast<std::size_t>(i)].k != ki) {
      f.block_indices = false;
    }
    if (i > 0 && ki > f.k[static_cast<std::size_t>(i - 1)]) f.block_indices = false;
  }

  // Chain: prod_{i<=m} p_i = prod_{i<=m} p'_i mod q_(k_(m+1)+1) ... q_(k_m).
  f.congruence_chain = true;
  for (int m = l; m >= 1; --m) {
    const int lo = m == l ? 0 : f.k[static_cast<std::size_t>(m)];
    const int hi = f.k[static_cast<std::size_t>(m - 1)];
    if (lo >= hi) continue;
    const BigInt mod = basis.modulus_product(lo + 1, hi);
    BigInt a = 1, b = 1;
    for (int i = 0; i < m; ++i) {
      a *= big_from_u64(r.left[static_cast<std::size_t>(i)].p);
      b *= big_from_u64(r.right[static_cast<std::size_t>(i)].p);
    }
    if ((a - b) % mod != 0) f.congruence_chain = false;
  }

  const long prec = params.working_precision();
  const Real c = params.c.value(prec);
  const Real one(1, prec);
  const Real ratio = c / (one - c);
  auto sq = [&](int v) { return Real(static_cast<long>(v) * v, prec); };
  if (h == 2 && l == 2) {
    const Real k1 = sq(f.k[0]);
    const Real k2 = sq(f.k[1]);
    f.inequality = real_less((one - c) * k1, k2) && real_less(k2, ratio * k1);
  } else {
    Real head(prec);
    for (int i = 0; i + 1 < l; ++i) head = head + sq(f.k[static_cast<std::size_t>(i)]);
    f.inequality = real_less(sq(f.k[static_cast<std::size_t>(l - 1)]), ratio * head);
  }

  BigInt product = 1;
  BigInt a = 1, b = 1;
  for (int i = 0; i < l; ++i) {
    a *= big_from_u64(r.left[static_cast<std::size_t>(i)].p);
    b *= big_from_u64(r.right[static_cast<std::size_t>(i)].p);
    product *= a - b;
  }
  f.divisibility = product % basis.modulus_product(1, f.k[0]) == 0;
  return f;
}

std::vector<BracketRow> growth_bracket_check(const SequencePrefix& prefix) {
  std::vector<BracketRow> rows;
  for (const auto& block : prefix.blocks) {
    const int k = block.k;
    BracketRow row;
    row.k = k;
    row.x = prefix.basis.weight(k + 1);
    const CountReport cr = count_upto(row.x, prefix);
    row.count = cr.count;
    row.lower = cr.lower;
    row.upper = cr.upper;
    row.bracket_ok = cr.bracket_ok;
    row.exponent = cr.exponent;
    const BigInt floor_value = prefix.basis.weight(k) * big_from_u64(prefix.basis.q(k));
    row.element_bounds_ok = true;
    for (const auto& e : prefix.elements) {
      if (e.k != k) continue;
      if (!(floor_value < e.value && e.value < row.x)) row.element_bounds_ok = false;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool is_sidon_mod(std::span<const std::uint64_t> residues, std::uint64_t modulus) {
  std::vector<std::uint64_t> sums;
  sums.reserve(residues.size() * (residues.size() + 1) / 2);
  for (std::size_t i = 0; i < residues.size(); ++i) {
    for (std::size_t j = i; j < residues.size(); ++j) {
      sums.push_back(static_cast<std::uint64_t>(
          (static_cast<u128>(residues[i] % modulus) + residues[j] % modulus) % modulus));
    }
  }
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

}  // namespace sidon
