#include "mfs/polystruct.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "mfs/errors.hpp"

namespace mfs::poly {

namespace {

// Compositions of total into r nonnegative parts, lexicographic.
std::vector<std::vector<long long>> compositions(int r, long long total) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(r, 0);
  std::function<void(int, long long)> rec = [&](int pos, long long left) {
    if (pos == r - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (long long v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (r == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  rec(0, total);
  return out;
}

struct OrderedLambda {
  long long tag;
  std::vector<long long> fw;
  Weight w;
};

std::vector<OrderedLambda> stratum_ordered(MFPair& pair, const Weight& mu, long long deg) {
  std::vector<OrderedLambda> out;
  if (deg < 0) return out;
  const auto bots = pair.bottom(mu);
  for (const auto& d : compositions(pair.num_gens(), deg)) {
    for (const auto& b : bots) {
      Weight w = b;
      for (int i = 0; i < pair.num_gens(); ++i)
        w += Rat(d[i]) * pair.spherical_gens()[i];
      out.push_back({pair.order_tag(mu, w), pair.g().fw_coords(w), w});
    }
  }
  std::sort(out.begin(), out.end(), [](const OrderedLambda& a, const OrderedLambda& b) {
    if (a.tag != b.tag) return a.tag < b.tag;
    return a.fw < b.fw;
  });
  return out;
}

}  // namespace

Rat schur_constant(MFPair& pair, const Weight& mu, const Weight& lambda) {
  if (!pair.closed_form_member(mu, lambda))
    throw NotInWell("schur_constant: " + lambda.str() + " not in the well");
  const long long dm = pair.h_engine().dim(mu);
  const long long dl = pair.g_engine().dim(pair.to_std_chamber(lambda));
  return Rat(dm) * Rat(dm) / Rat(dl);
}

std::vector<Weight> degree_stratum(MFPair& pair, const Weight& mu, long long deg) {
  std::vector<Weight> out;
  for (auto& item : stratum_ordered(pair, mu, deg)) out.push_back(std::move(item.w));
  return out;
}

std::vector<Weight> recurrence_support(MFPair& pair, const Weight& mu,
                                       const Weight& lambda, int i) {
  if (i < 0 || i >= pair.num_gens()) throw BadIndex("generator index out of range");
  const auto idx = pair.index_of(mu, lambda);  // throws NotInWell
  const long long D = idx.degree;
  const long long shift = pair.tag_shift(i);

  std::vector<Weight> out;
  for (long long deg = std::max(0LL, D - 1); deg <= D + 1; ++deg) {
    for (auto& item : stratum_ordered(pair, mu, deg)) {
      // lambda' preceq lambda + sigma_i
      if (deg == D + 1 && item.tag > idx.tag + shift) continue;
      // lambda - sigma_i preceq lambda'  (formal index shift)
      if (deg == D - 1 && idx.tag - shift > item.tag) continue;
      out.push_back(std::move(item.w));
    }
  }
  return out;
}

std::set<Weight> generator_weights(MFPair& pair, int i) {
  if (i < 0 || i >= pair.num_gens()) throw BadIndex("generator index out of range");
  std::set<Weight> wts;
  const Weight hw = pair.to_std_chamber(pair.spherical_gens()[i]);
  for (const auto& [w, m] : pair.g_engine().weights_of(hw)) wts.insert(w);
  return wts;
}

LeadingReport leading_structure(MFPair& pair, const Weight& mu,
                                const std::vector<long long>& d, int i) {
  if (i < 0 || i >= pair.num_gens()) throw BadIndex("generator index out of range");
  if (static_cast<int>(d.size()) != pair.num_gens())
    throw BadIndex("multi-index has wrong length");
  for (long long c : d)
    if (c < 0) throw BadIndex("multi-index must be nonnegative");

  const auto bots = pair.bottom(mu);
  const long long deg = std::accumulate(d.begin(), d.end(), 0LL);
  {
    // strata sizes are tiny for the supported pairs; guard anyway
    const long long count = static_cast<long long>(bots.size()) *
                            static_cast<long long>(compositions(pair.num_gens(), deg + 1).size());
    if (count > pair.g_engine().config().size_limit)
      throw SliceTooSmall("degree stratum too large to materialize");
  }

  // canonical bottom order: by bottom tag then fw-lex (same order at any d)
  std::vector<std::pair<std::pair<long long, std::vector<long long>>, Weight>> ordered;
  for (const auto& b : bots)
    ordered.push_back({{pair.order_tag(mu, b), pair.g().fw_coords(b)}, b});
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  const auto& wts = generator_weights(pair, i);
  const long long shift = pair.tag_shift(i);

  LeadingReport rep;
  rep.d = d;
  rep.i = i;
  rep.others_strict_by_tag = true;

  for (const auto& dp : compositions(pair.num_gens(), deg + 1)) {
    LeadingBlock blk;
    blk.dprime = dp;
    const std::size_t nb = ordered.size();
    blk.pattern.assign(nb, std::vector<int>(nb, 0));
    for (std::size_t r = 0; r < nb; ++r) {
      const Weight lam_row = pair.lambda_of(mu, dp, ordered[r].second);
      const auto idx_row = pair.index_of(mu, lam_row);
      for (std::size_t c = 0; c < nb; ++c) {
        const Weight lam_col = pair.lambda_of(mu, d, ordered[c].second);
        const auto idx_col = pair.index_of(mu, lam_col);
        // order window: lambda_row preceq lambda_col + sigma_i; the lower
        // bound holds automatically one degree up
        if (idx_row.tag > idx_col.tag + shift) continue;
        if (!wts.count(lam_row - lam_col)) continue;
        blk.pattern[r][c] = 1;
        if (r == c) blk.diagonal_empty = false;
        if (r > c) blk.upper_triangular = false;
        if (idx_row.tag >= idx_col.tag + shift) blk.strict_by_tag = false;
      }
    }
    for (std::size_t r = 0; r < nb; ++r)
      if (!blk.pattern[r][r]) blk.diagonal_full = false;

    bool is_leading = true;
    for (int j = 0; j < pair.num_gens(); ++j)
      if (dp[j] != d[j] + (j == i ? 1 : 0)) is_leading = false;
    if (is_leading) {
      rep.leading_diagonal_full = blk.diagonal_full;
      rep.leading_upper_triangular = blk.upper_triangular;
    } else {
      rep.others_strict_by_tag = rep.others_strict_by_tag && blk.strict_by_tag;
    }
    rep.blocks.push_back(std::move(blk));
  }
  return rep;
}

WellIndex index_of(MFPair& pair, const Weight& mu, const Weight& lambda) {
  auto idx = pair.index_of(mu, lambda);
  return {idx.d, idx.bottom};
}

Weight lambda_of(MFPair& pair, const Weight& mu, const WellIndex& idx) {
  return pair.lambda_of(mu, idx.d, idx.bottom);
}

}  // namespace mfs::poly
