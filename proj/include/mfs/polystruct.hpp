#pragma once

#include <set>
#include <vector>

#include "mfs/wells.hpp"

namespace mfs::poly {

using wells::MFPair;

// dim(mu)^2 / dim(lambda), the squared norm of the elementary spherical
// function attached to lambda.  Throws NotInWell outside the well.
Rat schur_constant(MFPair& pair, const Weight& mu, const Weight& lambda);

// All well elements lambda(d, b) with |d| = deg, ordered by (tag, fw-lex).
std::vector<Weight> degree_stratum(MFPair& pair, const Weight& mu, long long deg);

// Admissible support of phi_i * Phi_lambda per the recurrence bound:
// lambda - sigma_i <= lambda' <= lambda + sigma_i in the degree/tag order.
// Always contains lambda + sigma_i; every member has |deg' - deg| <= 1.
std::vector<Weight> recurrence_support(MFPair& pair, const Weight& mu,
                                       const Weight& lambda, int i);

// Candidate pattern of the degree-raising coefficient matrices: for source
// stratum d and each d' with |d'| = |d| + 1, entry (b_row, b_col) is
// admissible when lambda(d', b_row) lies in the recurrence support of
// lambda(d, b_col) for generator i and the difference is a weight of the
// generator module V_{sigma_i}.  Rows/columns are the bottom elements in
// (tag, fw-lex) order.
struct LeadingBlock {
  std::vector<long long> dprime;
  std::vector<std::vector<int>> pattern;
  bool diagonal_full = true;    // every (b, b) entry admissible
  bool diagonal_empty = true;   // no (b, b) entry admissible
  bool upper_triangular = true; // no entry strictly below the main diagonal
  bool strict_by_tag = true;    // every entry has tag(row) < tag(col) + shift
};

struct LeadingReport {
  std::vector<long long> d;
  int i = 0;
  std::vector<LeadingBlock> blocks;
  bool leading_diagonal_full = false;  // block d + delta_i has a full diagonal
  bool leading_upper_triangular = false;
  bool others_strict_by_tag = false;   // all other blocks strict in the tag order
};

LeadingReport leading_structure(MFPair& pair, const Weight& mu,
                                const std::vector<long long>& d, int i);

struct WellIndex {
  std::vector<long long> d;
  Weight bottom;
};
WellIndex index_of(MFPair& pair, const Weight& mu, const Weight& lambda);
Weight lambda_of(MFPair& pair, const Weight& mu, const WellIndex& idx);

// Weight set of the i-th fundamental spherical module, as lattice vectors.
std::set<Weight> generator_weights(MFPair& pair, int i);

}  // namespace mfs::poly
