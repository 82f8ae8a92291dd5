#include "mfs/charcalc.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "mfs/errors.hpp"

namespace mfs {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) { i128 t = a % b; a = b; b = t; }
  return a == 0 ? 1 : a;
}

long long narrow(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
    throw ArithmeticOverflow("dimension overflow");
  return static_cast<long long>(v);
}

// Enumerates all dominant fw tuples (root part) whose height stays within
// the bound; heights[i] is the height of the i-th fundamental weight.
void enum_dominant(const std::vector<Rat>& heights, const Rat& bound,
                   std::vector<long long>& cur, std::size_t pos,
                   const Rat& used, const std::function<void(const std::vector<long long>&)>& emit) {
  if (pos == heights.size()) {
    emit(cur);
    return;
  }
  Rat acc = used;
  for (long long c = 0;; ++c) {
    if (acc > bound) break;
    cur[pos] = c;
    enum_dominant(heights, bound, cur, pos + 1, acc, emit);
    acc += heights[pos];
  }
  cur[pos] = 0;
}

}  // namespace

const DomChar& CharEngine::character(const Weight& lambda) {
  auto key = d_.fw_coords(lambda);
  auto it = char_cache_.find(key);
  if (it != char_cache_.end()) return it->second;
  auto ch = freudenthal(lambda);
  return char_cache_.emplace(std::move(key), std::move(ch)).first->second;
}

long long CharEngine::dim(const Weight& lambda) {
  if (!d_.is_dominant(lambda)) throw NotDominant("dim needs a dominant weight");
  auto key = d_.fw_coords(lambda);
  auto it = dim_cache_.find(key);
  if (it != dim_cache_.end()) return it->second;

  Weight lr = lambda + d_.rho();
  i128 num = 1, den = 1;
  for (const auto& a : d_.pos_roots()) {
    // 2<.,a> is always integral for lattice weights
    num *= (Rat(2) * dot(lr, a)).as_integer();
    den *= (Rat(2) * dot(d_.rho(), a)).as_integer();
    i128 g = gcd128(num, den);
    num /= g;
    den /= g;
  }
  if (den < 0) { num = -num; den = -den; }
  if (den != 1 || num <= 0) throw Error("Weyl dimension formula not integral");
  long long result = narrow(num);
  dim_cache_.emplace(std::move(key), result);
  return result;
}

DomChar CharEngine::freudenthal(const Weight& lambda) {
  if (!d_.is_dominant(lambda)) throw NotDominant("character needs a dominant weight");
  if (dim(lambda) > cfg_.size_limit)
    throw SizeLimitExceeded("dim " + std::to_string(dim(lambda)) + " exceeds size limit");

  const int rank = d_.rank();
  const int fwd = d_.fw_dim();
  auto lam_fw = d_.fw_coords(lambda);

  std::vector<Rat> H(rank);
  for (int i = 0; i < rank; ++i) H[i] = d_.height(d_.fund_weights()[i]);
  const Rat bound = d_.height(lambda);

  // Dominant candidates mu <= lambda: bounded height, lambda-mu a
  // nonnegative integral combination of simple roots, equal torus part.
  struct Cand {
    Rat height;
    std::vector<long long> fw;
    Weight eps;
  };
  std::vector<Cand> cands;
  std::vector<long long> cur(fwd, 0);
  for (int t = rank; t < fwd; ++t) cur[t] = lam_fw[t];
  enum_dominant(H, bound, cur, 0, Rat(0), [&](const std::vector<long long>& f) {
    std::vector<long long> diff(fwd, 0);
    for (int i = 0; i < rank; ++i) diff[i] = lam_fw[i] - f[i];
    Weight dw = d_.weight_fw(diff);
    for (const auto& c : d_.root_coords(dw))
      if (!c.is_integer() || c.num() < 0) return;
    cands.push_back({d_.height(d_.weight_fw(f)), f, d_.weight_fw(f)});
  });
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.height != b.height) return b.height < a.height;
    return b.fw < a.fw;
  });

  const auto& pos = d_.pos_roots();
  std::vector<Rat> norm2(pos.size());
  std::vector<std::vector<long long>> pos_fw(pos.size());
  for (std::size_t p = 0; p < pos.size(); ++p) {
    norm2[p] = dot(pos[p], pos[p]);
    pos_fw[p] = d_.fw_coords(pos[p]);
  }

  const Weight lr = lambda + d_.rho();
  const Rat lr2 = dot(lr, lr);

  DomChar mults;
  for (const auto& cand : cands) {
    if (cand.fw == lam_fw) {
      mults[cand.fw] = 1;
      continue;
    }
    Rat num;
    for (std::size_t p = 0; p < pos.size(); ++p) {
      const Rat base = dot(cand.eps, pos[p]);
      std::vector<long long> f(cand.fw.begin(), cand.fw.begin() + rank);
      for (long long k = 1;; ++k) {
        for (int i = 0; i < rank; ++i) f[i] += pos_fw[p][i];
        auto g = f;
        d_.walk_fw(g);
        std::vector<long long> gk(cand.fw);
        std::copy(g.begin(), g.end(), gk.begin());
        auto it = mults.find(gk);
        if (it == mults.end() || it->second == 0) break;
        num += Rat(it->second) * (base + Rat(k) * norm2[p]);
      }
    }
    const Weight mr = cand.eps + d_.rho();
    const Rat den = lr2 - dot(mr, mr);
    const Rat m = Rat(2) * num / den;
    const long long mi = m.as_integer();
    if (mi <= 0) throw Error("Freudenthal produced non-positive multiplicity");
    mults[cand.fw] = mi;
  }
  return mults;
}

std::vector<std::pair<Weight, long long>> CharEngine::weights_of(const Weight& lambda) {
  std::vector<std::pair<Weight, long long>> out;
  for_each_weight(lambda, [&](const std::vector<long long>& fw, long long m) {
    out.emplace_back(d_.weight_fw(fw), m);
  });
  return out;
}

std::map<Weight, long long> CharEngine::tensor_decompose(const Weight& a, const Weight& b) {
  if (!d_.is_dominant(a) || !d_.is_dominant(b))
    throw NotDominant("tensor_decompose needs dominant weights");
  const Weight* expand = &a;
  const Weight* shift = &b;
  if (dim(a) > dim(b)) std::swap(expand, shift);
  if (dim(*expand) > cfg_.size_limit)
    throw SizeLimitExceeded("tensor factor too large");

  const int rank = d_.rank();
  auto shift_fw = d_.fw_coords(*shift);
  std::map<std::vector<long long>, long long> acc;
  for_each_weight(*expand, [&](const std::vector<long long>& fw, long long m) {
    std::vector<long long> g(fw);
    for (int i = 0; i < d_.fw_dim(); ++i) g[i] += shift_fw[i];
    std::vector<long long> root(g.begin(), g.begin() + rank);
    int sign = d_.walk_fw_rho(root);
    if (sign == 0) return;
    std::copy(root.begin(), root.end(), g.begin());
    acc[g] += sign * m;
  });

  std::map<Weight, long long> out;
  for (const auto& [fw, m] : acc) {
    if (m == 0) continue;
    if (m < 0) throw Error("tensor decomposition produced a negative multiplicity");
    out.emplace(d_.weight_fw(fw), m);
  }
  return out;
}

const std::vector<std::pair<Weight, int>>& CharEngine::signed_rho_orbit() {
  if (!rho_orbit_.empty()) return rho_orbit_;
  const int rank = d_.rank();
  const auto& cartan = d_.cartan();
  std::map<std::vector<long long>, int> seen;
  std::vector<long long> start(rank, 1);
  seen[start] = 1;
  std::vector<std::vector<long long>> frontier{start};
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (const auto& g : frontier) {
      const int s = seen[g];
      for (int i = 0; i < rank; ++i) {
        if (g[i] == 0) continue;  // rho is regular, never happens
        auto h = g;
        const long long gi = g[i];
        for (int j = 0; j < rank; ++j) h[j] -= gi * cartan[i][j];
        if (seen.emplace(h, -s).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  std::vector<long long> full(d_.fw_dim(), 0);
  for (const auto& [g, s] : seen) {
    std::copy(g.begin(), g.end(), full.begin());
    rho_orbit_.emplace_back(d_.weight_fw(full), s);
  }
  return rho_orbit_;
}

std::vector<long long> CharEngine::scaled_key(const Weight& w) const {
  std::vector<long long> key(w.dim());
  for (std::size_t i = 0; i < w.dim(); ++i)
    key[i] = (Rat(d_.scale()) * w.eps[i]).as_integer();
  return key;
}

long long CharEngine::extract_multiplicity(const WeightMultiset& x, const Weight& mu) {
  if (!d_.is_dominant(mu)) throw NotDominant("extract_multiplicity needs dominant mu");
  const Weight base = mu + d_.rho();
  long long acc = 0;
  for (const auto& [wrho, sign] : signed_rho_orbit()) {
    auto it = x.find(scaled_key(base - wrho));
    if (it != x.end()) acc += sign * it->second;
  }
  return acc;
}

Weight EmbeddingMap::apply(const Weight& w) const {
  Weight v = w;
  if (twist) {
    Weight t(w.dim());
    for (std::size_t i = 0; i < w.dim(); ++i) {
      Rat s;
      for (std::size_t j = 0; j < w.dim(); ++j) s += (*twist)[i][j] * w.eps[j];
      t.eps[i] = s;
    }
    v = std::move(t);
  }
  Weight out(static_cast<std::size_t>(source->eps_dim()));
  for (int i = 0; i < source->eps_dim(); ++i) {
    Rat s;
    for (std::size_t j = 0; j < v.dim(); ++j) s += matrix[i][j] * v.eps[j];
    out.eps[i] = s;
  }
  return out;
}

void EmbeddingMap::validate() const {
  if (!target || !source) throw Error("embedding map missing data");
  if (static_cast<int>(matrix.size()) != source->eps_dim())
    throw LatticeMismatch("embedding matrix has wrong row count");
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != target->eps_dim())
      throw LatticeMismatch("embedding matrix has wrong column count");
  if (twist) {
    if (static_cast<int>(twist->size()) != target->eps_dim())
      throw LatticeMismatch("twist has wrong shape");
    // the twist must permute the target root system
    std::set<Weight> roots;
    for (const auto& r : target->pos_roots()) {
      roots.insert(r);
      roots.insert(-r);
    }
    EmbeddingMap tw_only{target, target, *twist, std::nullopt};
    for (const auto& r : target->pos_roots())
      if (!roots.count(tw_only.apply(r)))
        throw LatticeMismatch("twist is not a root-system automorphism");
  }
  // lattice generators must land in the source weight lattice
  for (const auto& w : target->fund_weights())
    if (!source->in_weight_lattice(apply(w)))
      throw LatticeMismatch("embedding does not map lattice to lattice");
  for (int t = 0; t < target->torus_rank(); ++t) {
    Weight u(static_cast<std::size_t>(target->eps_dim()));
    u.eps[target->eps_dim() - target->torus_rank() + t] = 1;
    if (!source->in_weight_lattice(apply(u)))
      throw LatticeMismatch("embedding does not map torus characters to lattice");
  }
}

Restriction::Restriction(EmbeddingMap e, CharEngine& target_engine, CharEngine& source_engine)
    : e_(std::move(e)), tgt_(target_engine), src_(source_engine) {
  e_.validate();
  if (&tgt_.datum() != e_.target || &src_.datum() != e_.source)
    throw Error("restriction engines do not match the embedding map");
}

WeightMultiset Restriction::pushforward(const Weight& lambda) {
  if (!e_.target->is_dominant(lambda))
    throw NotDominant("pushforward needs a dominant weight");
  if (tgt_.dim(lambda) > tgt_.config().size_limit)
    throw SizeLimitExceeded("pushforward of dim " + std::to_string(tgt_.dim(lambda)));

  // Premultiplied integer matrix: key_src = (M'' * key_tgt) / den, where
  // key_* are scale()*eps coordinates.  The twist is folded in.
  const int sd = e_.source->eps_dim();
  const int td = e_.target->eps_dim();
  std::vector<std::vector<Rat>> eff = e_.matrix;
  if (e_.twist) {
    std::vector<std::vector<Rat>> prod(sd, std::vector<Rat>(td));
    for (int i = 0; i < sd; ++i)
      for (int j = 0; j < td; ++j) {
        Rat s;
        for (int k = 0; k < td; ++k) s += e_.matrix[i][k] * (*e_.twist)[k][j];
        prod[i][j] = s;
      }
    eff = std::move(prod);
  }
  // With g = target_scale * w, the source key is
  //   S_src * eff * w = (im * g) / D,  im = S_src * lcm_eff * eff,  D = lcm_eff * S_tgt.
  long long lcm_eff = 1;
  for (const auto& row : eff)
    for (const auto& c : row) lcm_eff = std::lcm(lcm_eff, c.den());
  const long long D = lcm_eff * e_.target->scale();
  std::vector<std::vector<long long>> im(sd, std::vector<long long>(td));
  for (int i = 0; i < sd; ++i)
    for (int j = 0; j < td; ++j)
      im[i][j] = (Rat(e_.source->scale()) * Rat(lcm_eff) * eff[i][j]).as_integer();

  const auto& simple = e_.target->simple_roots();
  const long long S = e_.target->scale();

  // integer simple-root data for the orbit reflections
  const int rank = e_.target->rank();
  std::vector<std::vector<long long>> sr(rank, std::vector<long long>(td));
  std::vector<long long> sr_norm(rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < td; ++j) sr[i][j] = simple[i].eps[j].as_integer();
    sr_norm[i] = (Rat(1) * dot(simple[i], simple[i])).as_integer();
  }

  WeightMultiset out;
  const DomChar& ch = tgt_.character(lambda);
  std::set<std::vector<long long>> orbit;
  std::vector<std::vector<long long>> frontier;
  for (const auto& [fw, mult] : ch) {
    Weight w = e_.target->weight_fw(fw);
    std::vector<long long> w0(td);
    for (int j = 0; j < td; ++j) w0[j] = (Rat(S) * w.eps[j]).as_integer();
    orbit.clear();
    orbit.insert(w0);
    frontier.assign(1, w0);
    while (!frontier.empty()) {
      std::vector<std::vector<long long>> next;
      for (const auto& g : frontier) {
        for (int i = 0; i < rank; ++i) {
          long long num2 = 0;
          for (int j = 0; j < td; ++j) num2 += g[j] * sr[i][j];
          num2 *= 2;
          const long long fi = num2 / (S * sr_norm[i]);
          if (fi == 0) continue;
          auto h = g;
          for (int j = 0; j < td; ++j) h[j] -= fi * S * sr[i][j];
          if (orbit.insert(h).second) next.push_back(std::move(h));
        }
      }
      frontier = std::move(next);
    }
    for (const auto& g : orbit) {
      std::vector<long long> img(sd);
      for (int i = 0; i < sd; ++i) {
        long long acc = 0;
        for (int j = 0; j < td; ++j) acc += im[i][j] * g[j];
        if (acc % D != 0)
          throw LatticeMismatch("pushforward image leaves the source lattice");
        img[i] = acc / D;
      }
      out[img] += mult;
    }
  }
  return out;
}

std::map<Weight, long long> Restriction::branch(const Weight& lambda) {
  WeightMultiset x = pushforward(lambda);

  struct OrderKey {
    Rat height;
    std::vector<long long> fw;
    bool operator<(const OrderKey& o) const {
      if (height != o.height) return o.height < height;  // higher first
      return o.fw < fw;                                  // then fw-lex descending
    }
  };
  const RootDatum& s = src_.datum();
  const long long S = s.scale();
  auto unscale = [&](const std::vector<long long>& key) {
    Weight w(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) w.eps[i] = Rat(key[i], S);
    return w;
  };

  std::map<OrderKey, std::vector<long long>> order;
  for (const auto& [key, cnt] : x) {
    if (cnt == 0) continue;
    Weight w = unscale(key);
    std::vector<long long> fw;
    try {
      fw = s.fw_coords(w);
    } catch (const LatticeMismatch&) {
      throw NegativeMultiplicity("pushforward image " + w.str() +
                                 " is not a source lattice weight");
    }
    order.emplace(OrderKey{s.height(w), std::move(fw)}, key);
  }

  std::map<Weight, long long> decomp;
  long long dim_total = 0;
  for (const auto& [ok, key] : order) {
    auto it = x.find(key);
    if (it == x.end() || it->second == 0) continue;
    const long long c = it->second;
    if (c < 0)
      throw NegativeMultiplicity("negative residual multiplicity during peeling");
    Weight w = unscale(key);
    if (!s.is_dominant(w))
      throw NegativeMultiplicity("non-dominant residual peak " + w.str() +
                                 ": not a branching via a compatible embedding");
    decomp[w] = c;
    dim_total += c * src_.dim(w);
    src_.for_each_weight(w, [&](const std::vector<long long>& nfw, long long m) {
      x[src_.scaled_key(s.weight_fw(nfw))] -= c * m;
    });
  }
  for (const auto& [key, cnt] : x)
    if (cnt != 0)
      throw NegativeMultiplicity("peeling left a nonzero residual");
  if (dim_total != tgt_.dim(lambda))
    throw NegativeMultiplicity("branching does not conserve dimension");
  return decomp;
}

long long Restriction::multiplicity(const Weight& lambda, const Weight& mu) {
  if (!src_.datum().is_dominant(mu))
    throw NotDominant("restriction multiplicity needs dominant mu");
  WeightMultiset x = pushforward(lambda);
  long long m = src_.extract_multiplicity(x, mu);
  if (m < 0)
    throw NegativeMultiplicity("embedding map is not a branching (m < 0)");
  return m;
}

}  // namespace mfs
