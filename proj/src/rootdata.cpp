#include "mfs/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mfs/errors.hpp"

namespace mfs {

namespace {

Weight embed(int total, int off, const std::vector<Rat>& block) {
  Weight w(static_cast<std::size_t>(total));
  for (std::size_t i = 0; i < block.size(); ++i) w.eps[off + i] = block[i];
  return w;
}

std::vector<Rat> unit(int dim, int i, Rat c = 1) {
  std::vector<Rat> v(dim);
  v[i] = c;
  return v;
}

// Solves M x = b exactly by Gaussian elimination.  M is square and small.
std::vector<Rat> solve(std::vector<std::vector<Rat>> m, std::vector<Rat> b) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw Error("singular matrix in solve()");
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

}  // namespace

RootDatum RootDatum::build(const std::vector<std::pair<Family, int>>& spec,
                           int torus_rank) {
  RootDatum d;
  if (torus_rank < 0) throw InvalidRank("negative torus rank");
  d.torus_rank_ = torus_rank;

  int eps_off = 0, fw_off = 0;
  for (auto [fam, n] : spec) {
    switch (fam) {
      case Family::A: if (n < 1) throw InvalidRank("A rank must be >= 1"); break;
      case Family::B: if (n < 2) throw InvalidRank("B rank must be >= 2"); break;
      case Family::C: if (n < 2) throw InvalidRank("C rank must be >= 2"); break;
      case Family::D: if (n < 3) throw InvalidRank("D rank must be >= 3"); break;
      case Family::G: if (n != 2) throw InvalidRank("G rank must be 2"); break;
    }
    int eps_dim = (fam == Family::A) ? n + 1 : (fam == Family::G ? 3 : n);
    d.comps_.push_back({fam, n, eps_off, eps_dim, fw_off});
    eps_off += eps_dim;
    fw_off += n;
    d.scale_ = std::lcm(d.scale_, static_cast<long long>(
        fam == Family::A ? n + 1 : (fam == Family::B || fam == Family::D ? 2 : 1)));
  }
  d.rank_ = fw_off;
  d.eps_dim_ = eps_off + torus_rank;

  const int T = d.eps_dim_;
  for (const auto& comp : d.comps_) {
    const int o = comp.eps_off;
    const int n = comp.rank;
    auto e = [&](int i, Rat c = 1) { return embed(T, o, unit(comp.eps_dim, i, c)); };

    switch (comp.family) {
      case Family::A: {
        for (int i = 0; i < n; ++i)
          d.simple_roots_.push_back(e(i) - e(i + 1));
        for (int i = 0; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j)
            d.pos_roots_.push_back(e(i) - e(j));
        for (int i = 1; i <= n; ++i) {
          // omega_i = e_1+...+e_i - i/(n+1) * (e_1+...+e_{n+1}), trace zero
          Weight w(static_cast<std::size_t>(T));
          for (int j = 0; j <= n; ++j)
            w.eps[o + j] = (j < i ? Rat(1) : Rat(0)) - Rat(i, n + 1);
          d.fund_weights_.push_back(w);
        }
        break;
      }
      case Family::B: {
        for (int i = 0; i + 1 < n; ++i) d.simple_roots_.push_back(e(i) - e(i + 1));
        d.simple_roots_.push_back(e(n - 1));
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            d.pos_roots_.push_back(e(i) - e(j));
            d.pos_roots_.push_back(e(i) + e(j));
          }
        for (int i = 0; i < n; ++i) d.pos_roots_.push_back(e(i));
        for (int i = 1; i < n; ++i) {
          Weight w(static_cast<std::size_t>(T));
          for (int j = 0; j < i; ++j) w.eps[o + j] = 1;
          d.fund_weights_.push_back(w);
        }
        {
          Weight w(static_cast<std::size_t>(T));
          for (int j = 0; j < n; ++j) w.eps[o + j] = Rat(1, 2);
          d.fund_weights_.push_back(w);
        }
        break;
      }
      case Family::C: {
        for (int i = 0; i + 1 < n; ++i) d.simple_roots_.push_back(e(i) - e(i + 1));
        d.simple_roots_.push_back(e(n - 1, 2));
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            d.pos_roots_.push_back(e(i) - e(j));
            d.pos_roots_.push_back(e(i) + e(j));
          }
        for (int i = 0; i < n; ++i) d.pos_roots_.push_back(e(i, 2));
        for (int i = 1; i <= n; ++i) {
          Weight w(static_cast<std::size_t>(T));
          for (int j = 0; j < i; ++j) w.eps[o + j] = 1;
          d.fund_weights_.push_back(w);
        }
        break;
      }
      case Family::D: {
        for (int i = 0; i + 1 < n; ++i) d.simple_roots_.push_back(e(i) - e(i + 1));
        d.simple_roots_.push_back(e(n - 2) + e(n - 1));
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            d.pos_roots_.push_back(e(i) - e(j));
            d.pos_roots_.push_back(e(i) + e(j));
          }
        for (int i = 1; i <= n - 2; ++i) {
          Weight w(static_cast<std::size_t>(T));
          for (int j = 0; j < i; ++j) w.eps[o + j] = 1;
          d.fund_weights_.push_back(w);
        }
        {
          Weight w(static_cast<std::size_t>(T));
          for (int j = 0; j < n; ++j) w.eps[o + j] = Rat(1, 2);
          w.eps[o + n - 1] = Rat(-1, 2);
          d.fund_weights_.push_back(w);
          Weight v(static_cast<std::size_t>(T));
          for (int j = 0; j < n; ++j) v.eps[o + j] = Rat(1, 2);
          d.fund_weights_.push_back(v);
        }
        break;
      }
      case Family::G: {
        // alpha1 = e1-e2 (short), alpha2 = -2e1+e2+e3 (long), in the
        // trace-zero 3-coordinate model.
        Weight a1 = e(0) - e(1);
        Weight a2 = Rat(-2) * e(0) + e(1) + e(2);
        d.simple_roots_.push_back(a1);
        d.simple_roots_.push_back(a2);
        d.pos_roots_.push_back(a1);
        d.pos_roots_.push_back(a2);
        d.pos_roots_.push_back(a1 + a2);
        d.pos_roots_.push_back(a1 + a1 + a2);
        d.pos_roots_.push_back(a1 + a1 + a1 + a2);
        d.pos_roots_.push_back(a1 + a1 + a1 + a2 + a2);
        d.fund_weights_.push_back(a1 + a1 + a2);            // 2a1+a2
        d.fund_weights_.push_back(a1 + a1 + a1 + a2 + a2);  // 3a1+2a2
        break;
      }
    }
  }

  // Cartan matrix c[i][j] = 2<a_i,a_j>/<a_j,a_j>.
  d.cartan_.assign(d.rank_, std::vector<long long>(d.rank_, 0));
  for (int i = 0; i < d.rank_; ++i)
    for (int j = 0; j < d.rank_; ++j) {
      Rat c = Rat(2) * dot(d.simple_roots_[i], d.simple_roots_[j]) /
              dot(d.simple_roots_[j], d.simple_roots_[j]);
      d.cartan_[i][j] = c.as_integer();
    }

  // rho both ways; the agreement is a structural invariant of the tables.
  Weight half_sum(static_cast<std::size_t>(T));
  for (const auto& r : d.pos_roots_) half_sum += r;
  half_sum = Rat(1, 2) * half_sum;
  Weight fw_sum(static_cast<std::size_t>(T));
  for (const auto& w : d.fund_weights_) fw_sum += w;
  if (!(half_sum == fw_sum)) throw Error("rho invariant violated in build()");
  d.rho_ = half_sum;

  // Inverse transposed Cartan blocks for root coordinates.
  for (const auto& comp : d.comps_) {
    const int n = comp.rank;
    std::vector<std::vector<Rat>> ct(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        ct[i][j] = Rat(d.cartan_[comp.fw_off + j][comp.fw_off + i]);
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (int col = 0; col < n; ++col) {
      std::vector<Rat> b(n);
      b[col] = 1;
      auto x = solve(ct, b);
      for (int r = 0; r < n; ++r) inv[r][col] = x[r];
    }
    d.inv_cartan_t_.push_back(std::move(inv));
  }
  return d;
}

bool RootDatum::in_weight_lattice(const Weight& w) const {
  if (static_cast<int>(w.dim()) != eps_dim_) return false;
  for (int i = 0; i < rank_; ++i) {
    Rat f = Rat(2) * dot(w, simple_roots_[i]) / dot(simple_roots_[i], simple_roots_[i]);
    if (!f.is_integer()) return false;
  }
  for (int t = 0; t < torus_rank_; ++t)
    if (!w.eps[eps_dim_ - torus_rank_ + t].is_integer()) return false;
  // type A blocks must sit in the trace-zero model
  for (const auto& comp : comps_) {
    if (comp.family != Family::A && comp.family != Family::G) continue;
    Rat tr;
    for (int j = 0; j < comp.eps_dim; ++j) tr += w.eps[comp.eps_off + j];
    if (!tr.is_zero()) return false;
  }
  return true;
}

std::vector<long long> RootDatum::fw_coords(const Weight& w) const {
  if (static_cast<int>(w.dim()) != eps_dim_)
    throw LatticeMismatch("weight has dimension " + std::to_string(w.dim()) +
                          ", expected " + std::to_string(eps_dim_));
  std::vector<long long> f(static_cast<std::size_t>(fw_dim()));
  for (int i = 0; i < rank_; ++i) {
    Rat c = Rat(2) * dot(w, simple_roots_[i]) / dot(simple_roots_[i], simple_roots_[i]);
    if (!c.is_integer())
      throw LatticeMismatch("weight " + w.str() + " not in the weight lattice");
    f[i] = c.as_integer();
  }
  for (int t = 0; t < torus_rank_; ++t) {
    const Rat& c = w.eps[eps_dim_ - torus_rank_ + t];
    if (!c.is_integer())
      throw LatticeMismatch("torus coordinate " + c.str() + " not integral");
    f[rank_ + t] = c.as_integer();
  }
  return f;
}

Weight RootDatum::weight_fw(std::span<const long long> fw) const {
  if (static_cast<int>(fw.size()) != fw_dim())
    throw LatticeMismatch("fw vector has wrong length");
  Weight w(static_cast<std::size_t>(eps_dim_));
  for (int i = 0; i < rank_; ++i)
    if (fw[i] != 0) w += Rat(fw[i]) * fund_weights_[i];
  for (int t = 0; t < torus_rank_; ++t)
    w.eps[eps_dim_ - torus_rank_ + t] = Rat(fw[rank_ + t]);
  return w;
}

bool RootDatum::is_dominant(const Weight& w) const {
  if (static_cast<int>(w.dim()) != eps_dim_)
    throw LatticeMismatch("weight has wrong dimension");
  for (int i = 0; i < rank_; ++i)
    if (dot(w, simple_roots_[i]) < Rat(0)) return false;
  return true;
}

int RootDatum::walk_fw(std::vector<long long>& f) const {
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank_; ++i) {
      if (f[i] >= 0) continue;
      const long long fi = f[i];
      for (int j = 0; j < rank_; ++j) f[j] -= fi * cartan_[i][j];
      sign = -sign;
      moved = true;
    }
  }
  return sign;
}

int RootDatum::walk_fw_rho(std::vector<long long>& f) const {
  for (auto& c : f) c += 1;
  int sign = walk_fw(f);
  for (auto& c : f) {
    if (c == 0) sign = 0;
    c -= 1;
  }
  return sign;
}

std::pair<Weight, int> RootDatum::dominant_rep(const Weight& w) const {
  auto f = fw_coords(w);
  std::vector<long long> root_part(f.begin(), f.begin() + rank_);
  int sign = walk_fw(root_part);
  std::copy(root_part.begin(), root_part.end(), f.begin());
  return {weight_fw(f), sign};
}

std::pair<Weight, int> RootDatum::dominant_rep_rho(const Weight& w) const {
  auto f = fw_coords(w);
  std::vector<long long> root_part(f.begin(), f.begin() + rank_);
  int sign = walk_fw_rho(root_part);
  std::copy(root_part.begin(), root_part.end(), f.begin());
  return {weight_fw(f), sign};
}

Weight RootDatum::dual_weight(const Weight& w) const {
  if (!is_dominant(w)) throw NotDominant("dual_weight needs a dominant weight");
  return dominant_rep(-w).first;
}

std::vector<Rat> RootDatum::root_coords(const Weight& w) const {
  std::vector<Rat> m(static_cast<std::size_t>(rank_));
  for (std::size_t ci = 0; ci < comps_.size(); ++ci) {
    const auto& comp = comps_[ci];
    const int n = comp.rank;
    std::vector<Rat> f(n);
    for (int i = 0; i < n; ++i) {
      const Weight& a = simple_roots_[comp.fw_off + i];
      f[i] = Rat(2) * dot(w, a) / dot(a, a);
    }
    for (int r = 0; r < n; ++r) {
      Rat s;
      for (int c = 0; c < n; ++c) s += inv_cartan_t_[ci][r][c] * f[c];
      m[comp.fw_off + r] = s;
    }
  }
  return m;
}

Rat RootDatum::height(const Weight& w) const {
  Rat h;
  for (const auto& c : root_coords(w)) h += c;
  return h;
}

std::vector<Weight> RootDatum::weyl_orbit(const Weight& w) const {
  auto f = fw_coords(w);
  std::vector<long long> torus(f.begin() + rank_, f.end());
  std::vector<long long> start(f.begin(), f.begin() + rank_);
  std::set<std::vector<long long>> seen{start};
  std::vector<std::vector<long long>> frontier{start};
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (const auto& g : frontier) {
      for (int i = 0; i < rank_; ++i) {
        if (g[i] == 0) continue;
        auto h = g;
        const long long gi = g[i];
        for (int j = 0; j < rank_; ++j) h[j] -= gi * cartan_[i][j];
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Weight> orbit;
  orbit.reserve(seen.size());
  std::vector<long long> full(static_cast<std::size_t>(fw_dim()));
  for (const auto& g : seen) {
    std::copy(g.begin(), g.end(), full.begin());
    std::copy(torus.begin(), torus.end(), full.begin() + rank_);
    orbit.push_back(weight_fw(full));
  }
  return orbit;
}

std::string RootDatum::spec_string() const {
  std::string s;
  for (const auto& comp : comps_) {
    if (!s.empty()) s += "x";
    s += static_cast<char>(comp.family);
    s += std::to_string(comp.rank);
  }
  if (torus_rank_ > 0) {
    if (!s.empty()) s += "x";
    s += "T" + std::to_string(torus_rank_);
  }
  return s;
}

RootDatum RootDatum::parse(const std::string& spec) {
  std::vector<std::pair<Family, int>> comps;
  int torus = 0;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    auto end = spec.find('x', pos);
    std::string tok = spec.substr(pos, end == std::string::npos ? std::string::npos
                                                                : end - pos);
    if (tok.empty()) throw ParseError("empty component in '" + spec + "'");
    char fam = static_cast<char>(std::toupper(tok[0]));
    int n;
    try {
      n = std::stoi(tok.substr(1));
    } catch (const std::exception&) {
      throw ParseError("bad component '" + tok + "'");
    }
    if (fam == 'T') {
      torus += n;
    } else if (fam == 'A' || fam == 'B' || fam == 'C' || fam == 'D' || fam == 'G') {
      comps.push_back({static_cast<Family>(fam), n});
    } else {
      throw ParseError("unknown family '" + std::string(1, fam) + "'");
    }
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return build(comps, torus);
}

}  // namespace mfs
