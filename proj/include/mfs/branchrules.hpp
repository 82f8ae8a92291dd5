#pragma once

#include <array>
#include <utility>
#include <vector>

#include "mfs/charcalc.hpp"
#include "mfs/rootdata.hpp"

namespace mfs::rules {

enum class InterlaceFamily { BtoD, DtoB };

// Classical interlacing branching in epsilon coordinates.
//   BtoD (rank n -> rank n):   a1 >= b1 >= a2 >= ... >= an >= |bn|
//   DtoB (rank n -> rank n-1): b1 >= c1 >= b2 >= ... >= c_{n-1} >= |bn|
// Constituents inherit the integrality class of lambda (all integers or all
// half-integers) and each appears with multiplicity one.
std::vector<std::vector<Rat>> interlace_branch(InterlaceFamily family,
                                               const std::vector<Rat>& lambda);

// The triality-type automorphism of D4 that swaps alpha1 and alpha3, as
// printed: 1/2 [[1,1,1,-1],[1,1,-1,1],[1,-1,1,1],[-1,1,1,1]].
const std::array<std::array<Rat, 4>, 4>& tau_matrix();
// The variant swapping alpha1 and alpha4 instead.
const std::array<std::array<Rat, 4>, 4>& tau_matrix_14();
// tau composed with a Weyl coordinate swap (eps3 <-> eps4); same branchings.
const std::array<std::array<Rat, 4>, 4>& tau_matrix_weyl();

std::array<Rat, 4> apply_tau(const std::array<Rat, 4>& nu);

// Membership of k*eps1 in the restriction of the D4-irreducible nu to the
// twisted so7:  b1+b3 >= k >= b1+b4 >= 0,  b2 = b1+b3+b4,  b2+b3+b4 <= b1.
bool twisted_d4_to_b3_contains(const std::vector<Rat>& nu, long long k);

// Embedding maps for the oracle side of the rules above.
EmbeddingMap b_to_d_map(const RootDatum& b, const RootDatum& d);   // eps identity
EmbeddingMap d4_to_b3_map(const RootDatum& d4, const RootDatum& b3,
                          const std::array<std::array<Rat, 4>, 4>& twist);
EmbeddingMap so9_to_spin7_map(const RootDatum& b4, const RootDatum& b3);

struct GTChain {
  long long k = 0;
  std::vector<long long> ks;  // k >= ks[n-1] >= ... >= ks[0] >= 0
};

// Torus weights of the SL(n+1)-module of highest weight k*omega1, one per
// chain: sum_i ks[i]*alpha_i - k*omega_n.  Count is binom(k+n, n).
std::vector<std::pair<GTChain, Weight>> gt_weights_sl(const RootDatum& an, long long k);

// The rank-one well of (Sp_2n, Sp_2n-2 x Sp_2):  ell*w1 + N*w2.
struct SpRankOneWell {
  long long ell;
  Weight base;       // ell * w1
  Weight generator;  // w2
};
SpRankOneWell sp_rank_one_well(const RootDatum& cn, long long ell);
bool sp_rank_one_member(const RootDatum& cn, long long ell, const Weight& lambda);

}  // namespace mfs::rules
