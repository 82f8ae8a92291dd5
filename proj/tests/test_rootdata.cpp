#include <doctest.h>

#include <set>

#include "mfs/rootdata.hpp"
#include "mfs/errors.hpp"

using namespace mfs;

namespace {
std::vector<long long> fw(std::initializer_list<long long> v) { return v; }
}

TEST_CASE("positive root counts match the classical formulas") {
  CHECK(RootDatum::build({{Family::B, 4}}).pos_roots().size() == 16);
  CHECK(RootDatum::build({{Family::D, 5}}).pos_roots().size() == 20);
  CHECK(RootDatum::build({{Family::A, 3}}).pos_roots().size() == 6);
  CHECK(RootDatum::build({{Family::C, 3}}).pos_roots().size() == 9);
  CHECK(RootDatum::build({{Family::D, 4}}).pos_roots().size() == 12);
  CHECK(RootDatum::build({{Family::G, 2}}).pos_roots().size() == 6);
  CHECK_THROWS_AS(RootDatum::build({{Family::D, 2}}), InvalidRank);
  CHECK_THROWS_AS(RootDatum::build({{Family::C, 1}}), InvalidRank);
}

TEST_CASE("product data are block direct sums") {
  auto d = RootDatum::build({{Family::A, 1}, {Family::A, 1}});
  CHECK(d.rank() == 2);
  CHECK(d.cartan()[0][0] == 2);
  CHECK(d.cartan()[1][1] == 2);
  CHECK(d.cartan()[0][1] == 0);
  CHECK(d.cartan()[1][0] == 0);
  CHECK(d.pos_roots().size() == 2);
}

TEST_CASE("group dimensions match the classical values") {
  CHECK(RootDatum::build({{Family::B, 4}}).group_dim() == 36);   // SO9
  CHECK(RootDatum::build({{Family::B, 3}}).group_dim() == 21);   // Spin7
  CHECK(RootDatum::build({{Family::D, 5}}).group_dim() == 45);   // SO10
  CHECK(RootDatum::build({{Family::G, 2}}).group_dim() == 14);
  CHECK(RootDatum::build({{Family::C, 2}}, 1).group_dim() == 11);  // Sp4 x C^x
}

TEST_CASE("dominance is read off the fw coordinates") {
  auto b4 = RootDatum::build({{Family::B, 4}});
  CHECK(b4.is_dominant(b4.fund_weights()[3]));
  CHECK_FALSE(b4.is_dominant(-b4.fund_weights()[0]));

  auto a2 = RootDatum::build({{Family::A, 2}});
  Weight alpha1 = a2.simple_roots()[0];
  CHECK_FALSE(a2.is_dominant(alpha1));
  CHECK(a2.fw_coords(alpha1) == fw({2, -1}));
}

TEST_CASE("fw and eps coordinates determine each other exactly") {
  for (auto spec : {std::vector<std::pair<Family, int>>{{Family::B, 4}},
                    {{Family::D, 4}},
                    {{Family::A, 2}, {Family::C, 2}},
                    {{Family::G, 2}}}) {
    auto d = RootDatum::build(spec);
    std::vector<long long> f(d.fw_dim());
    for (int i = 0; i < d.fw_dim(); ++i) f[i] = (7 * i + 3) % 5 - 1;
    Weight w = d.weight_fw(f);
    CHECK(d.fw_coords(w) == f);
    CHECK(d.in_weight_lattice(w));
  }
}

TEST_CASE("dominant representative: reflection walk with determinant") {
  auto a1 = RootDatum::build({{Family::A, 1}});
  Weight w = a1.weight_fw(fw({-3}));
  auto [dom, sign] = a1.dominant_rep(w);
  CHECK(a1.fw_coords(dom) == fw({3}));
  CHECK(sign == -1);

  auto b4 = RootDatum::build({{Family::B, 4}});
  Weight v = b4.weight_fw(fw({1, 0, 2, 1}));
  auto [same, s2] = b4.dominant_rep(v);
  CHECK(same == v);
  CHECK(s2 == 1);
}

TEST_CASE("rho-shifted walk reports walls with sign zero") {
  auto a2 = RootDatum::build({{Family::A, 2}});
  auto [w, sign] = a2.dominant_rep_rho(-a2.rho());
  CHECK(sign == 0);
  auto [v, s1] = a2.dominant_rep_rho(a2.fund_weights()[0]);
  CHECK(s1 == 1);
  CHECK(v == a2.fund_weights()[0]);
}

TEST_CASE("dominant representative is orbit-invariant and idempotent") {
  auto d = RootDatum::build({{Family::C, 2}, {Family::A, 1}});
  Weight w = d.weight_fw(fw({2, 1, 3}));
  auto orbit = d.weyl_orbit(w);
  CHECK(orbit.size() == 16);  // |W(C2)| = 8 times |W(A1)| = 2
  for (const auto& o : orbit) {
    auto [dom, sign] = d.dominant_rep(o);
    CHECK(dom == w);
  }
}

TEST_CASE("dual weight is an involution; -w0 = id in type B") {
  auto b4 = RootDatum::build({{Family::B, 4}});
  Weight w = b4.weight_fw(fw({1, 2, 0, 3}));
  CHECK(b4.dual_weight(w) == w);

  auto a2 = RootDatum::build({{Family::A, 2}});
  CHECK(a2.dual_weight(a2.fund_weights()[0]) == a2.fund_weights()[1]);
  Weight adj = a2.fund_weights()[0] + a2.fund_weights()[1];
  CHECK(a2.dual_weight(adj) == adj);
  CHECK_THROWS_AS(a2.dual_weight(-adj), NotDominant);

  auto d5 = RootDatum::build({{Family::D, 5}});
  CHECK(d5.dual_weight(d5.fund_weights()[3]) == d5.fund_weights()[4]);  // spinor swap
}

TEST_CASE("rho agrees with both defining formulas and spin weights are half-integral") {
  auto b4 = RootDatum::build({{Family::B, 4}});
  Weight half_sum(static_cast<std::size_t>(b4.eps_dim()));
  for (const auto& r : b4.pos_roots()) half_sum += r;
  CHECK(Rat(1, 2) * half_sum == b4.rho());
  for (const auto& c : b4.fund_weights()[3].eps) CHECK(c == Rat(1, 2));
}

TEST_CASE("height is the sum of simple-root coordinates") {
  auto b4 = RootDatum::build({{Family::B, 4}});
  CHECK(b4.height(b4.fund_weights()[0]) == Rat(4));   // eps1 = a1+a2+a3+a4
  CHECK(b4.height(b4.fund_weights()[3]) == Rat(5));
  auto c2 = RootDatum::build({{Family::C, 2}});
  CHECK(c2.height(c2.fund_weights()[0]) == Rat(3, 2));
  CHECK(c2.height(c2.fund_weights()[1]) == Rat(2));
}

TEST_CASE("spec strings round-trip") {
  for (std::string s : {"B4", "D5", "A2xA2", "C3xT1", "G2", "C2xC2"}) {
    CHECK(RootDatum::parse(s).spec_string() == s);
  }
  CHECK_THROWS_AS(RootDatum::parse("Z9"), ParseError);
}
