#include "mfs/wells.hpp"

#include <algorithm>
#include <functional>

#include "mfs/branchrules.hpp"
#include "mfs/errors.hpp"

namespace mfs::wells {

namespace {

std::vector<Rat> solve_lin(std::vector<std::vector<Rat>> m, std::vector<Rat> b) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw Error("singular system");
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rat f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
  return x;
}

// Embedding rows for one Sp factor of the subgroup.  A rank-one symplectic
// factor is modeled as A1 (trace-zero pair of coordinates); higher rank uses
// type C directly.
void append_sp_factor_rows(std::vector<std::vector<Rat>>& rows, int tgt_dim,
                           const std::vector<std::vector<int>>& coord_combos) {
  // coord_combos: for a C_k factor, k singleton combos; for A1 one combo.
  if (coord_combos.size() == 1) {
    std::vector<Rat> up(tgt_dim), down(tgt_dim);
    for (int j : coord_combos[0]) {
      up[j] = Rat(1, 2);
      down[j] = Rat(-1, 2);
    }
    rows.push_back(std::move(up));
    rows.push_back(std::move(down));
  } else {
    for (const auto& combo : coord_combos) {
      std::vector<Rat> r(tgt_dim);
      for (int j : combo) r[j] = 1;
      rows.push_back(std::move(r));
    }
  }
}

std::pair<Family, int> sp_factor(int k) {
  return k == 1 ? std::make_pair(Family::A, 1) : std::make_pair(Family::C, k);
}

}  // namespace

MFPair MFPair::so9_spin7(RunConfig cfg) {
  MFPair p;
  p.id_ = PairId::so9_spin7;
  p.name_ = "so9-spin7";
  p.gd_ = std::make_unique<RootDatum>(RootDatum::build({{Family::B, 4}}));
  p.hd_ = std::make_unique<RootDatum>(RootDatum::build({{Family::B, 3}}));
  p.ge_ = std::make_unique<CharEngine>(*p.gd_, cfg);
  p.he_ = std::make_unique<CharEngine>(*p.hd_, cfg);
  p.rest_ = std::make_unique<Restriction>(rules::so9_to_spin7_map(*p.gd_, *p.hd_),
                                          *p.ge_, *p.he_);
  p.gens_ = {p.gd_->fund_weights()[0], p.gd_->fund_weights()[3]};
  return p;
}

MFPair MFPair::sln_diag(int n, RunConfig cfg) {
  if (n < 1) throw InvalidRank("sln_diag needs n >= 1");
  MFPair p;
  p.id_ = PairId::sln_diag;
  p.name_ = "sln-diag";
  p.n_ = n;
  p.gd_ = std::make_unique<RootDatum>(
      RootDatum::build({{Family::A, n}, {Family::A, n}}));
  p.hd_ = std::make_unique<RootDatum>(RootDatum::build({{Family::A, n}}));
  p.ge_ = std::make_unique<CharEngine>(*p.gd_, cfg);
  p.he_ = std::make_unique<CharEngine>(*p.hd_, cfg);
  // diagonal restriction: (x, y) -> x + y
  std::vector<std::vector<Rat>> m(n + 1, std::vector<Rat>(2 * (n + 1)));
  for (int i = 0; i <= n; ++i) m[i][i] = m[i][n + 1 + i] = 1;
  EmbeddingMap e{p.gd_.get(), p.hd_.get(), std::move(m), std::nullopt};
  p.rest_ = std::make_unique<Restriction>(std::move(e), *p.ge_, *p.he_);
  for (int i = 0; i < n; ++i) {
    std::vector<long long> f(2 * n, 0);
    f[i] = 1;
    f[n + i] = -1;
    p.gens_.push_back(p.gd_->weight_fw(f));
  }
  return p;
}

MFPair MFPair::spsp(int m, int n, RunConfig cfg) {
  if (m < 2 || n < 2) throw InvalidRank("spsp needs m, n >= 2");
  MFPair p;
  p.id_ = PairId::spsp;
  p.name_ = "spsp";
  p.m_ = m;
  p.n_ = n;
  p.gd_ = std::make_unique<RootDatum>(
      RootDatum::build({{Family::C, m}, {Family::C, n}}));
  p.hd_ = std::make_unique<RootDatum>(
      RootDatum::build({sp_factor(m - 1), sp_factor(1), sp_factor(n - 1)}));
  p.ge_ = std::make_unique<CharEngine>(*p.gd_, cfg);
  p.he_ = std::make_unique<CharEngine>(*p.hd_, cfg);

  const int td = p.gd_->eps_dim();
  std::vector<std::vector<Rat>> rows;
  {
    std::vector<std::vector<int>> first;
    if (m - 1 == 1) {
      first = {{0}};
    } else {
      for (int i = 0; i < m - 1; ++i) first.push_back({i});
    }
    append_sp_factor_rows(rows, td, first);
    append_sp_factor_rows(rows, td, {{m - 1, m}});  // diagonal Sp2
    std::vector<std::vector<int>> last;
    if (n - 1 == 1) {
      last = {{m + 1}};
    } else {
      for (int j = 1; j < n; ++j) last.push_back({m + j});
    }
    append_sp_factor_rows(rows, td, last);
  }
  EmbeddingMap e{p.gd_.get(), p.hd_.get(), std::move(rows), std::nullopt};
  p.rest_ = std::make_unique<Restriction>(std::move(e), *p.ge_, *p.he_);

  std::vector<long long> f(m + n, 0);
  f[0] = 1;
  f[m] = 1;
  p.gens_.push_back(p.gd_->weight_fw(f));  // (w1, w1')
  std::fill(f.begin(), f.end(), 0);
  f[1] = 1;
  p.gens_.push_back(p.gd_->weight_fw(f));  // (w2, 0)
  std::fill(f.begin(), f.end(), 0);
  f[m + 1] = 1;
  p.gens_.push_back(p.gd_->weight_fw(f));  // (0, w2')
  return p;
}

long long MFPair::tag_shift(int i) const {
  if (i < 0 || i >= num_gens()) throw BadIndex("generator index out of range");
  return (id_ == PairId::spsp && i == 0) ? 1 : 0;
}

Weight MFPair::mu_weight(long long param) const {
  if (param < 0) throw UnsupportedPair("mu parameter must be nonnegative");
  std::vector<long long> f(hd_->fw_dim(), 0);
  switch (id_) {
    case PairId::so9_spin7:
    case PairId::sln_diag:
      f[0] = param;
      break;
    case PairId::spsp:
      f[m_ - 1] = param;  // the A1 factor sits after the C_{m-1} block
      break;
  }
  return hd_->weight_fw(f);
}

long long MFPair::mu_param(const Weight& mu) const {
  auto f = hd_->fw_coords(mu);
  long long param = 0;
  std::size_t slot = (id_ == PairId::spsp) ? static_cast<std::size_t>(m_ - 1) : 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i == slot) {
      param = f[i];
    } else if (f[i] != 0) {
      throw UnsupportedPair("mu " + mu.str() + " is not a character of the parabolic");
    }
  }
  if (param < 0) throw UnsupportedPair("mu parameter must be nonnegative");
  return param;
}

bool MFPair::pair_dominant(const Weight& gw) const {
  auto f = gd_->fw_coords(gw);
  if (id_ == PairId::sln_diag) {
    for (int i = 0; i < n_; ++i)
      if (f[i] < 0) return false;
    for (int i = n_; i < 2 * n_; ++i)
      if (f[i] > 0) return false;
    return true;
  }
  return gd_->is_dominant(gw);
}

Weight MFPair::to_std_chamber(const Weight& gw) const {
  if (id_ != PairId::sln_diag) return gw;
  // -w0 on the second SL(n+1) factor is coordinate reversal of its block
  Weight w = gw;
  std::reverse(w.eps.begin() + (n_ + 1), w.eps.end());
  return w;
}

Rat MFPair::pair_height(const Weight& gw) const {
  return gd_->height(to_std_chamber(gw));
}

long long MFPair::oracle_mult(const Weight& gw, const Weight& mu) {
  if (!pair_dominant(gw)) throw NotDominant("weight not dominant for the pair chamber");
  return rest_->multiplicity(to_std_chamber(gw), mu);
}

bool MFPair::closed_form_member(const Weight& mu, const Weight& gw) const {
  return try_index(mu, gw).has_value();
}

std::optional<MFPair::Index> MFPair::try_index(const Weight& mu, const Weight& gw) const {
  const long long par = mu_param(mu);
  if (!gd_->in_weight_lattice(gw)) throw LatticeMismatch("weight not in the G lattice");
  if (!pair_dominant(gw)) return std::nullopt;

  Index idx;
  switch (id_) {
    case PairId::so9_spin7: {
      const auto& a = gw.eps;
      const Rat k(par);
      if (!(a[1] + a[3] >= k && k >= a[1] - a[3])) return std::nullopt;
      const long long u = (a[0] - a[1]).as_integer();
      const long long v = (a[1] + a[3] - k).as_integer();
      const long long s = (a[1] - a[2]).as_integer();
      const long long t = (a[2] - a[3]).as_integer();
      idx.d = {u, v};
      idx.bottom = gd_->weight_fw(std::vector<long long>{0, s, t, par - s - t});
      idx.tag = s + t;
      break;
    }
    case PairId::sln_diag: {
      auto f = gd_->fw_coords(gw);
      const int n = n_;
      std::vector<std::vector<Rat>> mat(n, std::vector<Rat>(n));
      std::vector<Rat> rhs(n);
      for (int j = 0; j < n; ++j) {
        mat[j][j] = 2;
        if (j > 0) mat[j][j - 1] = -1;
        if (j + 1 < n) mat[j][j + 1] = -1;
        rhs[j] = Rat(f[j] + f[n + j]) + (j == n - 1 ? Rat(par) : Rat(0));
      }
      auto kappa = solve_lin(mat, rhs);
      std::vector<long long> ks(n);
      for (int j = 0; j < n; ++j) {
        if (!kappa[j].is_integer()) return std::nullopt;
        ks[j] = kappa[j].as_integer();
      }
      long long prev = 0;
      for (int j = 0; j < n; ++j) {
        if (ks[j] < prev) return std::nullopt;
        prev = ks[j];
      }
      if (ks[n - 1] > par) return std::nullopt;
      idx.d.resize(n);
      for (int j = 0; j < n; ++j) {
        idx.d[j] = f[j] - ks[j] + (j > 0 ? ks[j - 1] : 0);
        if (idx.d[j] < 0) return std::nullopt;
      }
      std::vector<long long> bf(2 * n, 0);
      for (int j = 0; j < n; ++j) {
        bf[j] = ks[j] - (j > 0 ? ks[j - 1] : 0);
        bf[n + j] = ks[j] - (j + 1 < n ? ks[j + 1] : par);
      }
      idx.bottom = gd_->weight_fw(bf);
      idx.tag = std::accumulate(ks.begin(), ks.end(), 0LL);
      break;
    }
    case PairId::spsp: {
      auto f = gd_->fw_coords(gw);
      for (int i = 2; i < m_; ++i)
        if (f[i] != 0) return std::nullopt;
      for (int j = 2; j < n_; ++j)
        if (f[m_ + j] != 0) return std::nullopt;
      const long long A = f[0], B = f[m_];
      if (A + B < par) return std::nullopt;
      if ((A + B - par) % 2 != 0) return std::nullopt;
      const long long n1 = (A + B - par) / 2;
      if (A - n1 < 0 || B - n1 < 0) return std::nullopt;
      idx.d = {n1, f[1], f[m_ + 1]};
      std::vector<long long> bf(m_ + n_, 0);
      bf[0] = A - n1;
      bf[m_] = B - n1;
      idx.bottom = gd_->weight_fw(bf);
      idx.tag = n1;
      break;
    }
  }
  idx.degree = std::accumulate(idx.d.begin(), idx.d.end(), 0LL);
  return idx;
}

MFPair::Index MFPair::index_of(const Weight& mu, const Weight& gw) const {
  auto idx = try_index(mu, gw);
  if (!idx) throw NotInWell("weight " + gw.str() + " is not in the well");
  return *idx;
}

Weight MFPair::lambda_of(const Weight& mu, const std::vector<long long>& d,
                         const Weight& b) const {
  if (static_cast<int>(d.size()) != num_gens())
    throw BadIndex("multi-index has wrong length");
  for (long long c : d)
    if (c < 0) throw BadIndex("multi-index must be nonnegative");
  auto bots = bottom(mu);
  if (std::find(bots.begin(), bots.end(), b) == bots.end())
    throw InvalidBottom("not a bottom element of this well");
  Weight w = b;
  for (int i = 0; i < num_gens(); ++i) w += Rat(d[i]) * gens_[i];
  return w;
}

std::vector<Weight> MFPair::bottom(const Weight& mu) const {
  const long long par = mu_param(mu);
  std::vector<std::pair<long long, Weight>> items;  // (tag, weight)
  switch (id_) {
    case PairId::so9_spin7: {
      for (long long s = 0; s <= par; ++s)
        for (long long t = 0; s + t <= par; ++t)
          items.emplace_back(s + t,
                             gd_->weight_fw(std::vector<long long>{0, s, t, par - s - t}));
      break;
    }
    case PairId::sln_diag: {
      const int n = n_;
      std::vector<long long> ks(n, 0);
      std::function<void(int)> rec = [&](int i) {
        if (i < 0) {
          std::vector<long long> bf(2 * n, 0);
          for (int j = 0; j < n; ++j) {
            bf[j] = ks[j] - (j > 0 ? ks[j - 1] : 0);
            bf[n + j] = ks[j] - (j + 1 < n ? ks[j + 1] : par);
          }
          items.emplace_back(std::accumulate(ks.begin(), ks.end(), 0LL),
                             gd_->weight_fw(bf));
          return;
        }
        const long long hi = (i + 1 < n) ? ks[i + 1] : par;
        for (long long v = 0; v <= hi; ++v) {
          ks[i] = v;
          rec(i - 1);
        }
      };
      rec(n - 1);
      break;
    }
    case PairId::spsp: {
      for (long long l1 = 0; l1 <= par; ++l1) {
        std::vector<long long> bf(m_ + n_, 0);
        bf[0] = l1;
        bf[m_] = par - l1;
        items.emplace_back(0, gd_->weight_fw(bf));
      }
      break;
    }
  }
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  std::vector<Weight> out;
  out.reserve(items.size());
  for (auto& [tag, w] : items) out.push_back(std::move(w));
  return out;
}

long long MFPair::degree(const Weight& mu, const Weight& gw) const {
  return index_of(mu, gw).degree;
}

long long MFPair::order_tag(const Weight& mu, const Weight& gw) const {
  return index_of(mu, gw).tag;
}

bool MFPair::order_leq(const Weight& mu, const Weight& gw1, const Weight& gw2) const {
  auto i1 = index_of(mu, gw1);
  auto i2 = index_of(mu, gw2);
  if (i1.degree != i2.degree) return i1.degree < i2.degree;
  return i1.tag <= i2.tag;
}

std::vector<Weight> MFPair::enumerate_dominant(const Rat& cutoff) const {
  const int fwd = gd_->fw_dim();
  std::vector<Rat> H(fwd);
  for (int i = 0; i < fwd; ++i) H[i] = gd_->height(gd_->fund_weights()[i]);
  std::vector<int> sign(fwd, 1);
  if (id_ == PairId::sln_diag)
    for (int i = n_; i < 2 * n_; ++i) sign[i] = -1;

  std::vector<std::pair<std::pair<Rat, std::vector<long long>>, Weight>> items;
  std::vector<long long> f(fwd, 0);
  std::function<void(int, Rat)> rec = [&](int pos, Rat used) {
    if (pos == fwd) {
      Weight w = gd_->weight_fw(f);
      items.push_back({{pair_height(w), f}, w});
      return;
    }
    Rat acc = used;
    for (long long c = 0;; ++c) {
      if (acc > cutoff) break;
      f[pos] = sign[pos] * c;
      rec(pos + 1, acc);
      acc += H[pos];
    }
    f[pos] = 0;
  };
  rec(0, Rat(0));
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Weight> out;
  out.reserve(items.size());
  for (auto& it : items) out.push_back(std::move(it.second));
  return out;
}

std::vector<Weight> MFPair::enumerate_well(const Weight& mu, const Rat& cutoff) {
  mu_param(mu);
  std::vector<Weight> out;
  for (const auto& w : enumerate_dominant(cutoff)) {
    const long long m = oracle_mult(w, mu);
    if (m > 1)
      throw MultiplicityViolation("m = " + std::to_string(m) + " at " + w.str() +
                                  ": multiplicity-freeness violated");
    if (m == 1) out.push_back(w);
  }
  return out;
}

MFPair::ShiftReport MFPair::verify_shift_monotonicity(const Weight& mu,
                                                      const Weight& lambda,
                                                      const Weight& sigma, int kmax) {
  if (!closed_form_member(mu_weight(0), sigma))
    throw UnsupportedPair("sigma " + sigma.str() + " is not a spherical weight");
  ShiftReport rep;
  Weight w = lambda;
  for (int k = 0; k <= kmax; ++k) {
    rep.mults.push_back(oracle_mult(w, mu));
    w += sigma;
  }
  for (std::size_t i = 0; i + 1 < rep.mults.size(); ++i)
    if (rep.mults[i] > rep.mults[i + 1]) rep.monotone = false;
  return rep;
}

SpLemmaReport verify_sp_lemma(int m, int i, long long ell, const Rat& cutoff,
                              RunConfig cfg) {
  if (m < 2) throw InvalidRank("verify_sp_lemma needs m >= 2");
  if (i < 0 || i > m - 1) throw BadIndex("factor index out of range");
  if (ell < 0) throw InvalidChain("ell must be nonnegative");

  RootDatum g = RootDatum::build({{Family::C, m}});
  RootDatum h = RootDatum::build({sp_factor(m - 1), sp_factor(1)});
  CharEngine ge(g, cfg), he(h, cfg);
  std::vector<std::vector<Rat>> rows;
  {
    std::vector<std::vector<int>> first;
    if (m - 1 == 1) {
      first = {{0}};
    } else {
      for (int c = 0; c < m - 1; ++c) first.push_back({c});
    }
    append_sp_factor_rows(rows, g.eps_dim(), first);
    append_sp_factor_rows(rows, g.eps_dim(), {{m - 1}});
  }
  Restriction rest(EmbeddingMap{&g, &h, std::move(rows), std::nullopt}, ge, he);

  auto mu_of = [&](long long l) {
    std::vector<long long> f(h.fw_dim(), 0);
    if (i >= 1) f[i - 1] = 1;  // omega_i of the Sp_{2m-2} factor; i = 0 degenerate
    f[m - 1] = l;
    return h.weight_fw(f);
  };
  const Weight mu1 = mu_of(ell), mu2 = mu_of(ell + 2);

  SpLemmaReport rep;
  rep.cutoff = cutoff;

  std::vector<Rat> H(m);
  for (int c = 0; c < m; ++c) H[c] = g.height(g.fund_weights()[c]);
  std::vector<std::pair<std::pair<Rat, std::vector<long long>>, Weight>> cands;
  std::vector<long long> f(m, 0);
  std::function<void(int, Rat)> rec = [&](int pos, Rat used) {
    if (pos == m) {
      Weight w = g.weight_fw(f);
      cands.push_back({{g.height(w), f}, w});
      return;
    }
    Rat acc = used;
    for (long long c = 0;; ++c) {
      if (acc > cutoff) break;
      f[pos] = c;
      rec(pos + 1, acc);
      acc += H[pos];
    }
    f[pos] = 0;
  };
  rec(0, Rat(0));
  std::sort(cands.begin(), cands.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  for (const auto& [key, w] : cands) {
    ++rep.scanned;
    if (rest.multiplicity(w, mu1) == 1 && rest.multiplicity(w, mu2) == 1) {
      rep.witness = w;
      return rep;
    }
  }
  return rep;
}

}  // namespace mfs::wells
