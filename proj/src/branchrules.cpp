#include "mfs/branchrules.hpp"

#include <algorithm>
#include <functional>

#include "mfs/errors.hpp"

namespace mfs::rules {

namespace {

// Doubled-integer view of a (half-)integral row; throws ParityMismatch when
// entries mix integers and half-integers.
std::vector<long long> doubled(const std::vector<Rat>& row) {
  std::vector<long long> d(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    Rat t = Rat(2) * row[i];
    if (!t.is_integer()) throw ParityMismatch("entry " + row[i].str() + " has denominator > 2");
    d[i] = t.as_integer();
  }
  long long parity = ((d[0] % 2) + 2) % 2;
  for (long long x : d)
    if (((x % 2) + 2) % 2 != parity)
      throw ParityMismatch("row mixes integers and half-integers");
  return d;
}

void check_b_dominant(const std::vector<long long>& a) {
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] < a[i + 1]) throw NotDominant("not B-dominant");
  if (a.back() < 0) throw NotDominant("not B-dominant");
}

void check_d_dominant(const std::vector<long long>& a) {
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] < a[i + 1]) throw NotDominant("not D-dominant");
  if (a.size() >= 2 && a[a.size() - 2] + a.back() < 0) throw NotDominant("not D-dominant");
}

std::vector<Rat> halved(const std::vector<long long>& d) {
  std::vector<Rat> r(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) r[i] = Rat(d[i], 2);
  return r;
}

std::array<std::array<Rat, 4>, 4> half_matrix(std::array<std::array<int, 4>, 4> m) {
  std::array<std::array<Rat, 4>, 4> r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = Rat(m[i][j], 2);
  return r;
}

}  // namespace

std::vector<std::vector<Rat>> interlace_branch(InterlaceFamily family,
                                               const std::vector<Rat>& lambda) {
  const auto a = doubled(lambda);
  const int n = static_cast<int>(a.size());
  const long long parity = ((a[0] % 2) + 2) % 2;

  std::vector<std::vector<Rat>> out;
  std::vector<long long> b;

  if (family == InterlaceFamily::BtoD) {
    check_b_dominant(a);
    b.assign(n, 0);
    // a1 >= b1 >= a2 >= b2 >= ... >= an >= |bn|, same parity class
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        out.push_back(halved(b));
        return;
      }
      const long long hi = a[i];
      const long long lo = (i + 1 < n) ? a[i + 1] : -a[i];  // last entry: |bn| <= an
      for (long long v = hi - ((hi - parity) % 2 + 2) % 2; v >= lo; v -= 2) {
        b[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
  } else {
    check_d_dominant(a);
    if (n < 2) throw InvalidRank("DtoB needs rank >= 2");
    b.assign(n - 1, 0);
    const long long absl = a[n - 1] < 0 ? -a[n - 1] : a[n - 1];
    std::function<void(int)> rec = [&](int i) {
      if (i == n - 1) {
        out.push_back(halved(b));
        return;
      }
      const long long hi = a[i];
      const long long lo = (i + 1 < n - 1) ? a[i + 1] : absl;
      for (long long v = hi - ((hi - parity) % 2 + 2) % 2; v >= lo; v -= 2) {
        b[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::array<std::array<Rat, 4>, 4>& tau_matrix() {
  static const auto m = half_matrix({{{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}}});
  return m;
}

const std::array<std::array<Rat, 4>, 4>& tau_matrix_14() {
  static const auto m = half_matrix({{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}});
  return m;
}

const std::array<std::array<Rat, 4>, 4>& tau_matrix_weyl() {
  // tau * (eps3 <-> eps4): swap the last two columns of tau
  static const auto m = [] {
    auto t = tau_matrix();
    for (int i = 0; i < 4; ++i) std::swap(t[i][2], t[i][3]);
    return t;
  }();
  return m;
}

std::array<Rat, 4> apply_tau(const std::array<Rat, 4>& nu) {
  const auto& t = tau_matrix();
  std::array<Rat, 4> out;
  for (int i = 0; i < 4; ++i) {
    Rat s;
    for (int j = 0; j < 4; ++j) s += t[i][j] * nu[j];
    out[i] = s;
  }
  return out;
}

bool twisted_d4_to_b3_contains(const std::vector<Rat>& nu, long long k) {
  if (nu.size() != 4) throw InvalidRank("twisted rule needs a D4 weight");
  const auto b = doubled(nu);  // validity/parities
  check_d_dominant(b);
  const Rat b1 = nu[0], b2 = nu[1], b3 = nu[2], b4 = nu[3];
  const Rat kk(k);
  return b1 + b3 >= kk && kk >= b1 + b4 && b1 + b4 >= Rat(0) &&
         b2 == b1 + b3 + b4 && b2 + b3 + b4 <= b1;
}

EmbeddingMap b_to_d_map(const RootDatum& b, const RootDatum& d) {
  if (b.rank() != d.rank()) throw InvalidRank("BtoD map needs equal ranks");
  const int n = b.rank();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  EmbeddingMap e{&b, &d, std::move(m), std::nullopt};
  e.validate();
  return e;
}

EmbeddingMap d4_to_b3_map(const RootDatum& d4, const RootDatum& b3,
                          const std::array<std::array<Rat, 4>, 4>& twist) {
  std::vector<std::vector<Rat>> m(3, std::vector<Rat>(4));
  for (int i = 0; i < 3; ++i) m[i][i] = 1;  // drop eps4
  std::vector<std::vector<Rat>> tw(4, std::vector<Rat>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) tw[i][j] = twist[i][j];
  EmbeddingMap e{&d4, &b3, std::move(m), std::move(tw)};
  e.validate();
  return e;
}

EmbeddingMap so9_to_spin7_map(const RootDatum& b4, const RootDatum& b3) {
  // Restriction to so8 is the identity on coordinates, so the composite is
  // the first three rows of tau.
  const auto& t = tau_matrix();
  std::vector<std::vector<Rat>> m(3, std::vector<Rat>(4));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = t[i][j];
  EmbeddingMap e{&b4, &b3, std::move(m), std::nullopt};
  e.validate();
  return e;
}

std::vector<std::pair<GTChain, Weight>> gt_weights_sl(const RootDatum& an, long long k) {
  if (an.components().size() != 1 || an.components()[0].family != Family::A ||
      an.torus_rank() != 0)
    throw InvalidRank("gt_weights_sl needs a single type-A datum");
  if (k < 0) throw InvalidChain("k must be nonnegative");
  const int n = an.rank();

  std::vector<std::pair<GTChain, Weight>> out;
  std::vector<long long> ks(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i < 0) {
      Weight w(static_cast<std::size_t>(an.eps_dim()));
      for (int j = 0; j < n; ++j) w += Rat(ks[j]) * an.simple_roots()[j];
      w -= Rat(k) * an.fund_weights()[n - 1];
      out.push_back({GTChain{k, ks}, w});
      return;
    }
    const long long hi = (i + 1 < n) ? ks[i + 1] : k;
    for (long long v = 0; v <= hi; ++v) {
      ks[i] = v;
      rec(i - 1);
    }
  };
  rec(n - 1);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first.ks < b.first.ks; });
  return out;
}

SpRankOneWell sp_rank_one_well(const RootDatum& cn, long long ell) {
  if (cn.components().size() != 1 || cn.components()[0].family != Family::C ||
      cn.torus_rank() != 0)
    throw InvalidRank("sp_rank_one_well needs a single type-C datum");
  if (ell < 0) throw InvalidChain("ell must be nonnegative");
  return {ell, Rat(ell) * cn.fund_weights()[0], cn.fund_weights()[1]};
}

bool sp_rank_one_member(const RootDatum& cn, long long ell, const Weight& lambda) {
  auto f = cn.fw_coords(lambda);
  if (!cn.is_dominant(lambda)) return false;
  if (f[0] != ell) return false;
  for (int i = 2; i < cn.rank(); ++i)
    if (f[i] != 0) return false;
  return true;
}

}  // namespace mfs::rules
