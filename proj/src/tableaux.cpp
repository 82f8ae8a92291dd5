#include "mfs/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "mfs/errors.hpp"

namespace mfs::lr {

Partition normalized(Partition p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) throw InvalidChain("not weakly decreasing");
  for (const auto& x : p)
    if (x < 0) throw InvalidChain("negative part");
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

long long part_size(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0LL);
}

bool contains(const Partition& outer, const Partition& inner) {
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > (i < outer.size() ? outer[i] : 0)) return false;
  return true;
}

namespace {

long long at(const Partition& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

// Backtracking count over skew fillings in reverse reading order (right to
// left within a row, rows top to bottom); the lattice condition is exactly a
// prefix condition in this order.
long long count_fillings(const Partition& lam, const Partition& mu, const Partition& nu) {
  const std::size_t nrows = lam.size();
  const std::size_t nvals = nu.size();
  std::vector<std::vector<int>> grid(nrows);
  for (std::size_t r = 0; r < nrows; ++r)
    grid[r].assign(static_cast<std::size_t>(lam[r]), 0);

  struct Cell { std::size_t r; long long c; };
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < nrows; ++r)
    for (long long c = lam[r] - 1; c >= at(mu, r); --c) cells.push_back({r, c});

  std::vector<long long> counts(nvals + 1, 0);
  long long total = 0;

  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++total;
      return;
    }
    const auto [r, c] = cells[idx];
    int hi = static_cast<int>(nvals);
    if (c + 1 < lam[r] && grid[r][static_cast<std::size_t>(c) + 1] != 0)
      hi = std::min(hi, grid[r][static_cast<std::size_t>(c) + 1]);  // weak rows
    int lo = 1;
    if (r > 0 && c < lam[r - 1] && c >= at(mu, r - 1))
      lo = grid[r - 1][static_cast<std::size_t>(c)] + 1;  // strict columns
    for (int v = lo; v <= hi; ++v) {
      if (counts[v] >= nu[v - 1]) continue;
      if (v > 1 && counts[v] + 1 > counts[v - 1]) continue;  // lattice prefix
      counts[v] += 1;
      grid[r][static_cast<std::size_t>(c)] = v;
      rec(idx + 1);
      grid[r][static_cast<std::size_t>(c)] = 0;
      counts[v] -= 1;
    }
  };
  rec(0);
  return total;
}

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  Partition lam = normalized(lambda), m = normalized(mu), n = normalized(nu);
  if (part_size(m) + part_size(n) != part_size(lam)) return 0;
  if (!contains(lam, m)) return 0;
  if (lam.empty()) return 1;
  return count_fillings(lam, m, n);
}

std::map<Partition, long long> tensor_via_lr(int n, const Partition& a, const Partition& b) {
  Partition pa = normalized(a), pb = normalized(b);
  if (static_cast<int>(pa.size()) > n + 1 || static_cast<int>(pb.size()) > n + 1)
    throw TooManyRows("partition has more than n+1 rows");
  const long long total = part_size(pa) + part_size(pb);
  const long long cap = at(pa, 0) + at(pb, 0);

  std::map<Partition, long long> out;
  Partition lam(static_cast<std::size_t>(n + 1), 0);
  std::function<void(std::size_t, long long)> rec = [&](std::size_t row, long long used) {
    if (row == lam.size()) {
      if (used != total) return;
      Partition l = normalized(lam);
      long long c = lr_coefficient(l, pa, pb);
      if (c > 0) {
        // reduce modulo full columns of n+1 boxes
        Partition red(l.begin(), l.end());
        red.resize(static_cast<std::size_t>(n + 1), 0);
        const long long t = red.back();
        for (auto& x : red) x -= t;
        out[normalized(red)] += c;
      }
      return;
    }
    const long long hi = std::min(row == 0 ? cap : lam[row - 1], cap);
    for (long long v = at(pa, row); v <= hi; ++v) {
      if (used + v > total) break;
      lam[row] = v;
      rec(row + 1, used + v);
    }
    lam[row] = 0;
  };
  rec(0, 0);
  return out;
}

long long sl_tensor_multiplicity(int n, const Partition& a, const Partition& b,
                                 const Partition& lambda) {
  Partition lam = normalized(lambda);
  if (static_cast<int>(lam.size()) > n + 1) return 0;
  lam.resize(static_cast<std::size_t>(n + 1), 0);
  const long long r = lam.back();
  for (auto& x : lam) x -= r;  // minimal representative of the SL class
  const long long deficit = part_size(a) + part_size(b) - part_size(lam);
  if (deficit < 0 || deficit % (n + 1) != 0) return 0;
  const long long t = deficit / (n + 1);
  for (auto& x : lam) x += t;
  return lr_coefficient(lam, normalized(a), normalized(b));
}

Partition partition_of_weight(const RootDatum& an, const Weight& w) {
  auto f = an.fw_coords(w);
  if (!an.is_dominant(w)) throw NotDominant("partition_of_weight needs dominant w");
  const int n = an.rank();
  Partition p(static_cast<std::size_t>(n), 0);
  long long acc = 0;
  for (int i = n - 1; i >= 0; --i) {
    acc += f[i];
    p[static_cast<std::size_t>(i)] = acc;
  }
  return normalized(p);
}

Weight weight_of_partition(const RootDatum& an, const Partition& p) {
  const int n = an.rank();
  Partition q = normalized(p);
  if (static_cast<int>(q.size()) > n + 1) throw TooManyRows("too many rows for SL(n+1)");
  q.resize(static_cast<std::size_t>(n + 1), 0);
  const long long t = q.back();
  std::vector<long long> f(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) f[i] = (q[i] - t) - (q[i + 1] - t);
  return an.weight_fw(f);
}

bool is_lr_filling(const SkewFilling& f, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  Partition outer, inner;
  try {
    outer = normalized(f.outer);
    inner = normalized(f.inner);
  } catch (const Error& e) {
    return fail(e.what());
  }
  if (!contains(outer, inner)) return fail("inner not contained in outer");
  if (f.rows.size() < outer.size()) return fail("missing rows");
  for (std::size_t r = 0; r < f.rows.size(); ++r) {
    const long long expect = at(outer, r) - at(inner, r);
    if (static_cast<long long>(f.rows[r].size()) != expect)
      return fail("row " + std::to_string(r) + " has wrong length");
  }
  auto entry = [&](std::size_t r, long long c) -> int {
    if (r >= f.rows.size()) return 0;
    if (c < at(inner, r) || c >= at(outer, r)) return 0;
    return f.rows[r][static_cast<std::size_t>(c - at(inner, r))];
  };
  for (std::size_t r = 0; r < f.rows.size(); ++r)
    for (long long c = at(inner, r); c < at(outer, r); ++c) {
      const int v = entry(r, c);
      if (v < 1) return fail("entry below 1");
      if (c + 1 < at(outer, r) && entry(r, c + 1) < v)
        return fail("row not weakly increasing");
      if (r > 0 && c < at(outer, r - 1) && c >= at(inner, r - 1) &&
          entry(r - 1, c) >= v)
        return fail("column not strictly increasing");
    }
  // reverse reading word: right to left, top to bottom
  std::vector<long long> counts;
  for (std::size_t r = 0; r < f.rows.size(); ++r)
    for (long long c = at(outer, r) - 1; c >= at(inner, r); --c) {
      const int v = entry(r, c);
      if (static_cast<std::size_t>(v) > counts.size()) counts.resize(v, 0);
      counts[v - 1] += 1;
      if (v > 1 && counts[v - 1] > counts[v - 2])
        return fail("reverse reading word is not a lattice word");
    }
  return true;
}

std::vector<long long> filling_content(const SkewFilling& f) {
  std::vector<long long> counts;
  for (const auto& row : f.rows)
    for (int v : row) {
      if (static_cast<std::size_t>(v) > counts.size()) counts.resize(v, 0);
      counts[v - 1] += 1;
    }
  return counts;
}

std::string ascii_grid(const SkewFilling& f) {
  std::string s;
  Partition outer = normalized(f.outer), inner = normalized(f.inner);
  for (std::size_t r = 0; r < outer.size(); ++r) {
    for (long long c = 0; c < outer[r]; ++c) {
      if (c < at(inner, r)) {
        s += " .";
      } else {
        s += " " + std::to_string(f.rows[r][static_cast<std::size_t>(c - at(inner, r))]);
      }
    }
    s += "\n";
  }
  return s;
}

ProofTriple proof_triple(int n, long long k, const std::vector<long long>& chain) {
  if (static_cast<int>(chain.size()) != n) throw InvalidChain("chain length must be n");
  long long prev = 0;
  for (long long v : chain) {
    if (v < prev) throw InvalidChain("chain not weakly increasing");
    prev = v;
  }
  if (k < prev) throw InvalidChain("chain exceeds k");

  const long long kn = n > 0 ? chain.back() : 0;
  const long long k1 = n > 0 ? chain.front() : 0;
  ProofTriple t;
  t.mu.resize(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j)
    t.mu[static_cast<std::size_t>(j)] = kn - (j == 0 ? 0 : chain[static_cast<std::size_t>(j - 1)]);
  t.nu.resize(static_cast<std::size_t>(n + 1), 0);
  t.nu[0] = k - k1;
  for (int j = 1; j < n; ++j)
    t.nu[static_cast<std::size_t>(j)] = chain[static_cast<std::size_t>(n - j)] - k1;
  t.lam.assign(static_cast<std::size_t>(n + 1), kn - k1);
  t.lam[0] = kn - k1 + k;
  t.mu = normalized(t.mu);
  t.nu = normalized(t.nu);
  t.lam = normalized(t.lam);
  return t;
}

SkewFilling proof_filling(int n, long long k, const std::vector<long long>& chain) {
  ProofTriple t = proof_triple(n, k, chain);
  SkewFilling f;
  f.outer = t.lam;
  f.inner = t.mu;
  f.rows.resize(t.lam.size());
  for (std::size_t r = 0; r < t.lam.size(); ++r)
    f.rows[r].assign(static_cast<std::size_t>(t.lam[r] - at(t.mu, r)), 0);
  if (f.rows.empty()) return f;  // k = 0: empty skew shape

  // first row: 1s in the k-k1 rightmost columns
  for (auto& v : f.rows[0]) v = 1;

  // left block: each column filled top to bottom with 2, 3, ...
  const long long width = t.lam.size() > 1 ? t.lam[1] : 0;
  for (long long c = 0; c < width; ++c) {
    int v = 2;
    for (std::size_t r = 1; r < t.lam.size(); ++r) {
      if (c < at(t.mu, r) || c >= t.lam[r]) continue;
      f.rows[r][static_cast<std::size_t>(c - at(t.mu, r))] = v++;
    }
  }
  return f;
}

}  // namespace mfs::lr
