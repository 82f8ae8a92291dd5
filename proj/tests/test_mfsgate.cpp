#include <doctest.h>

#include "mfs/errors.hpp"
#include "mfs/mfsgate.hpp"

using namespace mfs;
using namespace mfs::gate;

TEST_CASE("parabolic dimensions reproduce the classification arithmetic") {
  auto b3 = RootDatum::build({{Family::B, 3}});
  // complement {alpha_1}: dim 16
  CHECK(parabolic_dim_complement(b3, {0}) == 16);
  // J = full set gives the whole group
  CHECK(parabolic_dim(b3, {0, 1, 2}) == 21);
  // J empty gives the Borel
  CHECK(parabolic_dim(b3, {}) == 12);

  auto g2 = RootDatum::build({{Family::G, 2}});
  CHECK(parabolic_dim_complement(g2, {0}) == 9);
  CHECK(parabolic_dim_complement(g2, {1}) == 9);

  CHECK_THROWS_AS(parabolic_dim(b3, {5}), BadIndex);
}

TEST_CASE("gate monotonicity: larger J gives a larger parabolic") {
  auto c4 = RootDatum::build({{Family::C, 4}});
  long long prev = parabolic_dim(c4, {});
  std::set<int> J;
  for (int i = 0; i < 4; ++i) {
    J.insert(i);
    long long cur = parabolic_dim(c4, J);
    CHECK(cur >= prev);
    prev = cur;
  }
  CHECK(prev == c4.group_dim());
}

TEST_CASE("complexity and rank bookkeeping") {
  // (SO9, Spin7, H* = SL3)
  auto cr = complexity_rank(36, 21, 8, 4, 2);
  CHECK(cr.c == 0);
  CHECK(cr.r == 2);
  // H = G, H* = G
  auto cr2 = complexity_rank(14, 14, 14, 2, 2);
  CHECK(cr2.c == 0);
  CHECK(cr2.r == 0);
  // the Sp x Sp row of table 2
  auto cr3 = complexity_rank(20, 9, 1, 4, 1);
  CHECK(cr3.c == 0);
  CHECK(cr3.r == 3);
  CHECK_THROWS_AS(complexity_rank(10, 9, 0, 2, 1), InconsistentData);
}

TEST_CASE("table rows reproduce the dimension facts used in the proof") {
  // row 7: |R+(D5)| = 20 against maximal parabolic dims {15, 16, 17}
  auto r7 = audit_row(table_row(1, "7"));
  CHECK(r7.npos_g == 20);
  std::multiset<long long> dims;
  for (const auto& chk : r7.maximal_scan) dims.insert(chk.pdim);
  CHECK(dims == std::multiset<long long>{15, 16, 17});
  CHECK_FALSE(r7.any_maximal_passes);
  CHECK(r7.ok);

  // row 9: |R+(D4)| = 12 against the G2 parabolics of dim 9
  auto r9 = audit_row(table_row(1, "9"));
  CHECK(r9.npos_g == 12);
  for (const auto& chk : r9.maximal_scan) CHECK(chk.pdim == 9);
  CHECK(r9.ok);

  // row 8: the {alpha_1}-complement parabolic of Spin7 has dim 16 = |R+(B4)|
  auto r8 = audit_row(table_row(1, "8"));
  CHECK(r8.npos_g == 16);
  REQUIRE(r8.jc_checks.size() == 1);
  CHECK(r8.jc_checks[0].pdim == 16);
  CHECK(r8.jc_checks[0].pass);
  CHECK(r8.ok);
}

TEST_CASE("equality rows admit no proper passing parabolic") {
  for (auto [table, row] : {std::pair<int, const char*>{1, "3"},
                            {1, "5"},
                            {2, "1"},
                            {2, "4"}}) {
    auto rep = audit_row(table_row(table, row));
    CHECK(rep.dim_equality);
    CHECK(rep.npos_g == rep.dim_h);
    CHECK_FALSE(rep.any_maximal_passes);
    CHECK(rep.ok);
  }
}

TEST_CASE("every encoded row audits clean with c = 0") {
  auto rows = audit_tables();
  CHECK(rows.size() == 22);
  for (const auto& r : rows) {
    CAPTURE(r.table);
    CAPTURE(r.row_id);
    CHECK(r.c == 0);
    CHECK(r.ok);
    for (const auto& chk : r.jc_checks) CHECK(chk.pass);
  }
}

TEST_CASE("audit csv has one line per row plus a header") {
  auto rows = audit_tables();
  auto csv = audit_csv(rows);
  std::size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == rows.size() + 1);
  CHECK(csv.rfind("table,row_id,", 0) == 0);
}
