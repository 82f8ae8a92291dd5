#include <doctest.h>

#include <map>
#include <set>

#include "mfs/branchrules.hpp"
#include "mfs/charcalc.hpp"
#include "mfs/errors.hpp"

using namespace mfs;

namespace {

std::vector<long long> fw(std::initializer_list<long long> v) { return v; }

// Signed Weyl orbit of a dominant regular weight, for the character-formula
// evaluation oracle below.
std::map<std::vector<long long>, int> signed_orbit(const RootDatum& d,
                                                   const std::vector<long long>& start) {
  std::map<std::vector<long long>, int> seen{{start, 1}};
  std::vector<std::vector<long long>> frontier{start};
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (const auto& g : frontier) {
      const int s = seen[g];
      for (int i = 0; i < d.rank(); ++i) {
        REQUIRE(g[i] != 0);
        auto h = g;
        const long long gi = g[i];
        for (int j = 0; j < d.rank(); ++j) h[j] -= gi * d.cartan()[i][j];
        if (seen.emplace(h, -s).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

// Wide exact fraction for the evaluation oracle; the intermediate powers
// outgrow 64 bits well before the characters do.
struct Frac {
  __int128 n = 0, d = 1;
  static __int128 gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { __int128 t = a % b; a = b; b = t; }
    return a ? a : 1;
  }
  void reduce() {
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd(n, d);
    n /= g;
    d /= g;
  }
  friend Frac operator*(Frac a, const Frac& b) {
    a.n *= b.n;
    a.d *= b.d;
    a.reduce();
    return a;
  }
  friend Frac operator+(Frac a, const Frac& b) {
    a.n = a.n * b.d + b.n * a.d;
    a.d *= b.d;
    a.reduce();
    return a;
  }
  friend bool operator==(const Frac& a, const Frac& b) {
    return a.n == b.n && a.d == b.d;
  }
  bool is_zero() const { return n == 0; }
};

// r^(scale * w) at a torus point with rational coordinates r_i.
Frac eval_point(const RootDatum& d, const std::vector<Rat>& r, const Weight& w) {
  Frac out{1, 1};
  for (int i = 0; i < d.eps_dim(); ++i) {
    long long e = (Rat(d.scale()) * w.eps[i]).as_integer();
    Frac base = e >= 0 ? Frac{r[i].num(), r[i].den()} : Frac{r[i].den(), r[i].num()};
    for (long long k = 0; k < (e >= 0 ? e : -e); ++k) out = out * base;
  }
  return out;
}

// Independent check: sum_mu m(mu) r^mu times the Weyl denominator equals the
// alternating numerator of the character formula.
void check_weyl_evaluation(CharEngine& e, const Weight& lambda,
                           const std::vector<Rat>& r) {
  const RootDatum& d = e.datum();
  Frac char_value{0, 1};
  e.for_each_weight(lambda, [&](const std::vector<long long>& f, long long m) {
    char_value = char_value + Frac{m, 1} * eval_point(d, r, d.weight_fw(f));
  });

  auto lam_fw = d.fw_coords(lambda);
  std::vector<long long> shifted(lam_fw.begin(), lam_fw.begin() + d.rank());
  for (auto& c : shifted) c += 1;

  Frac num{0, 1}, den{0, 1};
  for (const auto& [g, s] : signed_orbit(d, shifted)) {
    std::vector<long long> full(lam_fw);
    std::copy(g.begin(), g.end(), full.begin());
    num = num + Frac{s, 1} * eval_point(d, r, d.weight_fw(full));
  }
  for (const auto& [g, s] : signed_orbit(d, std::vector<long long>(d.rank(), 1))) {
    std::vector<long long> full(d.fw_dim(), 0);
    std::copy(g.begin(), g.end(), full.begin());
    den = den + Frac{s, 1} * eval_point(d, r, d.weight_fw(full));
  }
  REQUIRE(!den.is_zero());
  CHECK(char_value * den == num);
}

// Tensor decomposition by direct convolution of weight multisets followed by
// peeling of highest weights; independent of the reflection-based route.
std::map<Weight, long long> convolution_tensor(CharEngine& e, const Weight& a,
                                               const Weight& b) {
  const RootDatum& d = e.datum();
  std::map<std::vector<long long>, long long> conv;  // fw key
  auto wa = e.weights_of(a);
  auto wb = e.weights_of(b);
  for (const auto& [x, mx] : wa)
    for (const auto& [y, my] : wb) conv[d.fw_coords(x + y)] += mx * my;

  std::map<Weight, long long> out;
  while (true) {
    bool found = false;
    std::vector<long long> best;
    Rat best_h;
    for (const auto& [f, m] : conv) {
      if (m == 0) continue;
      Weight w = d.weight_fw(f);
      Rat h = d.height(w);
      if (!found || h > best_h || (h == best_h && f > best)) {
        best = f;
        best_h = h;
        found = true;
      }
    }
    if (!found) break;
    Weight top = d.weight_fw(best);
    REQUIRE(d.is_dominant(top));
    long long mult = conv[best];
    REQUIRE(mult > 0);
    out[top] = mult;
    e.for_each_weight(top, [&](const std::vector<long long>& f, long long m) {
      conv[f] -= mult * m;
    });
  }
  return out;
}

}  // namespace

TEST_CASE("Weyl dimension formula on classical small cases") {
  auto b4 = RootDatum::build({{Family::B, 4}});
  CharEngine e4(b4);
  CHECK(e4.dim(b4.fund_weights()[0]) == 9);
  CHECK(e4.dim(b4.fund_weights()[3]) == 16);  // spin rep of Spin9
  CHECK(e4.dim(b4.zero()) == 1);

  auto b3 = RootDatum::build({{Family::B, 3}});
  CharEngine e3(b3);
  CHECK(e3.dim(b3.fund_weights()[0]) == 7);
  CHECK(e3.dim(b3.fund_weights()[2]) == 8);

  auto a1 = RootDatum::build({{Family::A, 1}});
  CharEngine e1(a1);
  for (long long k = 0; k <= 6; ++k)
    CHECK(e1.dim(a1.weight_fw(fw({k}))) == k + 1);

  CHECK_THROWS_AS(e4.dim(-b4.fund_weights()[0]), NotDominant);
}

TEST_CASE("Freudenthal: adjoint zero-weight multiplicity equals the rank") {
  auto a2 = RootDatum::build({{Family::A, 2}});
  CharEngine e(a2);
  Weight adj = a2.weight_fw(fw({1, 1}));
  const auto& ch = e.character(adj);
  CHECK(ch.at(fw({0, 0})) == 2);
  CHECK(ch.at(fw({1, 1})) == 1);

  auto b4 = RootDatum::build({{Family::B, 4}});
  CharEngine e4(b4);
  Weight adj4 = b4.fund_weights()[1];  // adjoint of so9
  CHECK(e4.character(adj4).at(fw({0, 0, 0, 0})) == 4);
}

TEST_CASE("character totals match the dimension formula") {
  for (auto spec : {std::vector<std::pair<Family, int>>{{Family::B, 3}},
                    {{Family::C, 2}},
                    {{Family::A, 2}, {Family::A, 1}}}) {
    auto d = RootDatum::build(spec);
    CharEngine e(d);
    std::vector<long long> f(d.fw_dim(), 1);
    Weight lam = d.weight_fw(f);
    long long total = 0;
    e.for_each_weight(lam, [&](const std::vector<long long>&, long long m) { total += m; });
    CHECK(total == e.dim(lam));
  }
}

TEST_CASE("Freudenthal output passes rational character-formula evaluation") {
  // all dominant weights of A2 and B2 with dim <= 500
  {
    auto a2 = RootDatum::build({{Family::A, 2}});
    CharEngine e(a2);
    std::vector<Rat> r{Rat(2), Rat(3, 2), Rat(1)};
    for (long long x = 0; x <= 6; ++x)
      for (long long y = 0; y <= 6; ++y) {
        Weight lam = a2.weight_fw(fw({x, y}));
        if (e.dim(lam) > 500) continue;
        check_weyl_evaluation(e, lam, r);
      }
  }
  {
    auto b2 = RootDatum::build({{Family::B, 2}});
    CharEngine e(b2);
    std::vector<Rat> r{Rat(2), Rat(3, 2)};
    for (long long x = 0; x <= 8; ++x)
      for (long long y = 0; y <= 8; ++y) {
        Weight lam = b2.weight_fw(fw({x, y}));
        if (e.dim(lam) > 500) continue;
        check_weyl_evaluation(e, lam, r);
      }
  }
}

TEST_CASE("tensor decomposition: Clebsch-Gordan and sl3 basics") {
  auto a1 = RootDatum::build({{Family::A, 1}});
  CharEngine e1(a1);
  auto t = e1.tensor_decompose(a1.fund_weights()[0], a1.fund_weights()[0]);
  CHECK(t.size() == 2);
  CHECK(t.at(a1.weight_fw(fw({2}))) == 1);
  CHECK(t.at(a1.zero()) == 1);

  auto a2 = RootDatum::build({{Family::A, 2}});
  CharEngine e2(a2);
  auto t2 = e2.tensor_decompose(a2.fund_weights()[0], a2.fund_weights()[1]);
  CHECK(t2.size() == 2);
  CHECK(t2.at(a2.weight_fw(fw({1, 1}))) == 1);
  CHECK(t2.at(a2.zero()) == 1);

  Weight adj = a2.weight_fw(fw({1, 1}));
  auto t3 = e2.tensor_decompose(adj, adj);
  CHECK(t3.at(a2.zero()) == 1);
  CHECK(t3.at(adj) == 2);
  CHECK(t3.at(a2.weight_fw(fw({3, 0}))) == 1);
  CHECK(t3.at(a2.weight_fw(fw({2, 2}))) == 1);
}

TEST_CASE("tensor decomposition agrees with the convolution-and-peel oracle") {
  auto a2 = RootDatum::build({{Family::A, 2}});
  CharEngine e(a2);
  std::vector<Weight> ws = {a2.fund_weights()[0], a2.fund_weights()[1],
                            a2.weight_fw(fw({1, 1})), a2.weight_fw(fw({2, 0}))};
  for (const auto& a : ws)
    for (const auto& b : ws) CHECK(e.tensor_decompose(a, b) == convolution_tensor(e, a, b));

  auto c2 = RootDatum::build({{Family::C, 2}});
  CharEngine ec(c2);
  for (const auto& a : {c2.fund_weights()[0], c2.fund_weights()[1]})
    for (const auto& b : {c2.fund_weights()[0], c2.weight_fw(fw({1, 1}))})
      CHECK(ec.tensor_decompose(a, b) == convolution_tensor(ec, a, b));
}

TEST_CASE("tensor properties: symmetry, dimension count, dual pairing") {
  auto c2 = RootDatum::build({{Family::C, 2}});
  CharEngine e(c2);
  std::vector<Weight> ws;
  for (long long x = 0; x <= 2; ++x)
    for (long long y = 0; y <= 2; ++y) ws.push_back(c2.weight_fw(fw({x, y})));
  for (const auto& a : ws)
    for (const auto& b : ws) {
      auto t = e.tensor_decompose(a, b);
      CHECK(t == e.tensor_decompose(b, a));
      long long total = 0;
      for (const auto& [w, m] : t) total += m * e.dim(w);
      CHECK(total == e.dim(a) * e.dim(b));
      // multiplicity of the trivial module detects duality
      long long m0 = t.count(c2.zero()) ? t.at(c2.zero()) : 0;
      CHECK(m0 == (b == e.datum().dual_weight(a) ? 1 : 0));
    }
}

TEST_CASE("branching along the identity map returns the module itself") {
  auto b3 = RootDatum::build({{Family::B, 3}});
  CharEngine src(b3), tgt(b3);
  std::vector<std::vector<Rat>> id(3, std::vector<Rat>(3));
  for (int i = 0; i < 3; ++i) id[i][i] = 1;
  Restriction rest(EmbeddingMap{&b3, &b3, id, std::nullopt}, tgt, src);
  Weight lam = b3.weight_fw(fw({1, 0, 1}));
  auto dec = rest.branch(lam);
  CHECK(dec.size() == 1);
  CHECK(dec.at(lam) == 1);
}

TEST_CASE("B4 to D4 vector branching: 9 = 8 + 1") {
  auto b4 = RootDatum::build({{Family::B, 4}});
  auto d4 = RootDatum::build({{Family::D, 4}});
  CharEngine eb(b4), ed(d4);
  Restriction rest(rules::b_to_d_map(b4, d4), eb, ed);
  auto dec = rest.branch(b4.fund_weights()[0]);
  CHECK(dec.size() == 2);
  CHECK(dec.at(d4.fund_weights()[0]) == 1);
  CHECK(dec.at(d4.zero()) == 1);
}

TEST_CASE("composite so9 -> spin7 restriction reproduces the membership rule") {
  auto b4 = RootDatum::build({{Family::B, 4}});
  auto b3 = RootDatum::build({{Family::B, 3}});
  CharEngine eb(b4), es(b3);
  Restriction rest(rules::so9_to_spin7_map(b4, b3), eb, es);
  Weight spin9 = b4.fund_weights()[3];  // eps (1/2,1/2,1/2,1/2)
  CHECK(rest.multiplicity(spin9, b3.weight_fw(fw({1, 0, 0}))) == 1);
  CHECK(rest.multiplicity(spin9, b3.weight_fw(fw({2, 0, 0}))) == 0);
  // trivial module restricts trivially
  CHECK(rest.multiplicity(b4.zero(), b3.zero()) == 1);
}

TEST_CASE("branch multiplicities: peel route equals extraction route") {
  auto b4 = RootDatum::build({{Family::B, 4}});
  auto b3 = RootDatum::build({{Family::B, 3}});
  CharEngine eb(b4), es(b3);
  Restriction rest(rules::so9_to_spin7_map(b4, b3), eb, es);
  for (auto f : {fw({1, 0, 0, 0}), fw({0, 1, 0, 0}), fw({0, 0, 0, 2}), fw({1, 0, 0, 1})}) {
    Weight lam = b4.weight_fw(f);
    auto dec = rest.branch(lam);
    long long total = 0;
    for (const auto& [w, m] : dec) {
      CHECK(rest.multiplicity(lam, w) == m);
      total += m * es.dim(w);
    }
    CHECK(total == eb.dim(lam));
  }
}

TEST_CASE("results are identical with fresh or warmed caches") {
  auto b4 = RootDatum::build({{Family::B, 4}});
  auto b3 = RootDatum::build({{Family::B, 3}});
  Weight lam = b4.weight_fw(fw({0, 1, 0, 1}));
  std::map<Weight, long long> first;
  {
    CharEngine eb(b4), es(b3);
    Restriction rest(rules::so9_to_spin7_map(b4, b3), eb, es);
    first = rest.branch(lam);
  }
  {
    CharEngine eb(b4), es(b3);
    Restriction rest(rules::so9_to_spin7_map(b4, b3), eb, es);
    rest.branch(b4.fund_weights()[1]);  // warm the caches on another weight
    rest.branch(lam);
    CHECK(rest.branch(lam) == first);
  }
}

TEST_CASE("size limits trip instead of running away") {
  auto b4 = RootDatum::build({{Family::B, 4}});
  RunConfig small;
  small.size_limit = 100;
  CharEngine e(b4, small);
  CHECK_THROWS_AS(e.character(b4.weight_fw(fw({2, 2, 2, 2}))), SizeLimitExceeded);
}
