#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mfs/rootdata.hpp"

namespace mfs::gate {

// A group entry of the classification tables.  Most entries are buildable
// root data; entries outside the supported families carry literal
// (dim, rank, #positive roots) numbers, which is all the audit needs.
struct GroupSpec {
  std::string label;
  std::vector<std::pair<Family, int>> comps;
  int torus = 0;
  std::optional<std::array<long long, 3>> literal;  // {dim, rank, npos}

  long long dim() const;
  long long rank() const;
  long long npos() const;
  bool buildable() const { return !literal.has_value(); }
  RootDatum build() const;
};

// One classified multiplicity-free system (or excluded candidate row).
struct TableEntry {
  int table = 0;
  std::string row_id;
  GroupSpec g, h, hstar;
  // Listed parabolic complements J^c, as 0-based flat simple-root indices of
  // H.  Empty when the row admits no non-trivial system.
  std::vector<std::set<int>> jc;
  // |R+_G| = dim H; no proper parabolic can meet the dimension bound.
  bool dim_equality = false;
  // Some proper parabolic meets the bound but the row is excluded by finer
  // arguments; the gate is necessary, not sufficient.
  bool excluded_by_finer = false;
  std::string note;
};

const std::vector<TableEntry>& encoded_tables();
const TableEntry& table_row(int table, const std::string& row_id);

// dim P_J for the standard parabolic of the given (possibly reducible)
// datum: dim H minus the number of positive roots not supported on J.
long long parabolic_dim(const RootDatum& d, const std::set<int>& J);
// Same, with the complement J^c given instead of J.
long long parabolic_dim_complement(const RootDatum& d, const std::set<int>& jc);

// Necessary condition dim P_J >= |R+_G| for (G, H, P_J) to be a
// multiplicity-free system.
bool dimension_gate(long long npos_g, const RootDatum& h, const std::set<int>& J);

struct CRank {
  long long c = 0;
  long long r = 0;
};
// Complexity and rank of G/H from the dimension/rank bookkeeping; throws
// InconsistentData when the numbers cannot come from a spherical pair table.
CRank complexity_rank(long long dim_g, long long dim_h, long long dim_hstar,
                      long long rank_g, long long rank_hstar);

struct JcCheck {
  std::set<int> jc;
  long long pdim = 0;
  bool pass = false;
};

struct RowReport {
  int table = 0;
  std::string row_id;
  long long dim_g = 0, dim_h = 0, dim_hstar = 0, npos_g = 0;
  long long c = 0, r = 0;
  std::vector<JcCheck> jc_checks;
  // one entry per maximal proper parabolic (dropping one simple root)
  std::vector<JcCheck> maximal_scan;
  bool any_maximal_passes = false;
  bool dim_equality = false;
  bool excluded_by_finer = false;
  bool ok = false;  // c == 0, listed J^c pass, empty-J^c scan coherent
  std::string note;
};

RowReport audit_row(const TableEntry& e);
std::vector<RowReport> audit_tables();
std::string audit_csv(const std::vector<RowReport>& rows);

}  // namespace mfs::gate
