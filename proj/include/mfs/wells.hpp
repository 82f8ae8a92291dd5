#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mfs/charcalc.hpp"

namespace mfs::wells {

enum class PairId { so9_spin7, sln_diag, spsp };

// One of the three multiplicity-free systems with non-trivial parabolic:
//   so9_spin7 : (SO9, Spin7),    mu = k*eps1,      gens w1, w4
//   sln_diag  : (SLn+1 x SLn+1, diagonal), mu = k*omega1, gens (w_i, -w_i)
//   spsp      : (Sp2m x Sp2n, Sp2m-2 x Sp2 x Sp2n-2), mu = l on the Sp2
// Owns the root data, character engines and the brute-force restriction.
// G-weights for sln_diag live in the B x B^- chamber (second block
// antidominant); to_std_chamber converts to the ordinary dominant picture.
class MFPair {
 public:
  static MFPair so9_spin7(RunConfig cfg = {});
  static MFPair sln_diag(int n, RunConfig cfg = {});
  static MFPair spsp(int m, int n, RunConfig cfg = {});

  PairId id() const { return id_; }
  const std::string& name() const { return name_; }
  const RootDatum& g() const { return *gd_; }
  const RootDatum& h() const { return *hd_; }
  const EmbeddingMap& embedding() const { return rest_->map(); }
  CharEngine& g_engine() { return *ge_; }
  CharEngine& h_engine() { return *he_; }
  Restriction& restriction() { return *rest_; }

  const std::vector<Weight>& spherical_gens() const { return gens_; }
  int num_gens() const { return static_cast<int>(gens_.size()); }
  // contribution of adding sigma_i to the order tag of a well element
  long long tag_shift(int i) const;

  // The parabolic characters this pair supports: k*eps1 / k*omega1 / l*omega.
  Weight mu_weight(long long param) const;
  long long mu_param(const Weight& mu) const;  // throws UnsupportedPair

  bool pair_dominant(const Weight& gw) const;
  Weight to_std_chamber(const Weight& gw) const;
  Rat pair_height(const Weight& gw) const;

  // Brute-force oracle m^{G,H}_lambda(mu).
  long long oracle_mult(const Weight& gw, const Weight& mu);

  bool closed_form_member(const Weight& mu, const Weight& gw) const;

  // Closed-form bottom B(mu), sorted by (tag, fw-lex).
  std::vector<Weight> bottom(const Weight& mu) const;

  struct Index {
    std::vector<long long> d;     // multi-index over the spherical generators
    Weight bottom;                // bottom element of the decomposition
    long long degree = 0;         // |d|
    long long tag = 0;            // s+t (so9/sln) or n1 (spsp)
  };
  std::optional<Index> try_index(const Weight& mu, const Weight& gw) const;
  Index index_of(const Weight& mu, const Weight& gw) const;  // throws NotInWell
  Weight lambda_of(const Weight& mu, const std::vector<long long>& d,
                   const Weight& bottom) const;

  long long degree(const Weight& mu, const Weight& gw) const;
  long long order_tag(const Weight& mu, const Weight& gw) const;
  // lambda1 preceq_mu lambda2
  bool order_leq(const Weight& mu, const Weight& gw1, const Weight& gw2) const;

  // All pair-dominant lattice weights with pair_height <= cutoff, ordered by
  // (height, fw-lex).
  std::vector<Weight> enumerate_dominant(const Rat& cutoff) const;

  // Oracle slice of the mu-well.  Checks multiplicity-freeness along the way
  // and throws MultiplicityViolation on any m > 1.
  std::vector<Weight> enumerate_well(const Weight& mu, const Rat& cutoff);

  struct ShiftReport {
    std::vector<long long> mults;  // m(lambda + k sigma), k = 0..kmax
    bool monotone = true;
  };
  ShiftReport verify_shift_monotonicity(const Weight& mu, const Weight& lambda,
                                        const Weight& sigma, int kmax);

  MFPair(MFPair&&) = default;
  MFPair& operator=(MFPair&&) = default;

 private:
  MFPair() = default;

  PairId id_{};
  std::string name_;
  int n_ = 0, m_ = 0;  // sln: n; spsp: (m, n)
  std::unique_ptr<RootDatum> gd_, hd_;
  std::unique_ptr<CharEngine> ge_, he_;
  std::unique_ptr<Restriction> rest_;
  std::vector<Weight> gens_;
};

// Search for a weight lying in both wells P^+_G(w_i + l*w_last) and
// P^+_G(w_i + (l+2)*w_last) of (Sp_2m, Sp_2m-2 x Sp_2), scanning dominant
// weights by height.  An empty result only reports the scanned range.
struct SpLemmaReport {
  std::optional<Weight> witness;
  Rat cutoff;
  long long scanned = 0;
};
SpLemmaReport verify_sp_lemma(int m, int i, long long ell, const Rat& cutoff,
                              RunConfig cfg = {});

}  // namespace mfs::wells
