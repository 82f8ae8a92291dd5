#include <doctest.h>

#include <set>

#include "mfs/config.hpp"
#include "mfs/errors.hpp"
#include "mfs/polystruct.hpp"

using namespace mfs;
using namespace mfs::poly;
using wells::MFPair;

namespace {
std::vector<long long> fw(std::initializer_list<long long> v) { return v; }
}

TEST_CASE("schur constants") {
  auto pair = MFPair::so9_spin7();
  // mu = 0, lambda = 0
  CHECK(schur_constant(pair, pair.mu_weight(0), pair.g().zero()) == Rat(1));
  // zero-well elements have c = 1/dim(lambda)
  Weight lam = pair.g().fund_weights()[0];
  CHECK(schur_constant(pair, pair.mu_weight(0), lam) == Rat(1, 9));
  // w1 is not in the k=1 well: the op errors
  CHECK_THROWS_AS(schur_constant(pair, pair.mu_weight(1), lam), NotInWell);

  auto sln = MFPair::sln_diag(2);
  // base point (0, -omega2): dim 3 module, dim(mu) = 3
  Weight base = sln.g().weight_fw(fw({0, 0, 0, -1}));
  CHECK(schur_constant(sln, sln.mu_weight(1), base) == Rat(3));
}

TEST_CASE("recurrence support contains lambda + sigma_i and stays in range") {
  auto pair = MFPair::so9_spin7();
  Weight mu = pair.mu_weight(1);
  const auto bots = pair.bottom(mu);
  for (const auto& b : bots) {
    for (int i = 0; i < pair.num_gens(); ++i) {
      auto sup = recurrence_support(pair, mu, b, i);
      Weight up = b + pair.spherical_gens()[i];
      CHECK(std::count(sup.begin(), sup.end(), up) == 1);
      for (const auto& w : sup) {
        auto idx = pair.index_of(mu, w);  // member of the well
        CHECK(idx.degree <= 1);
        CHECK(idx.degree >= 0);  // no negative degree below a bottom
      }
    }
  }
  CHECK_THROWS_AS(recurrence_support(pair, mu, pair.g().fund_weights()[0], 0), NotInWell);
  CHECK_THROWS_AS(recurrence_support(pair, mu, bots.front(), 7), BadIndex);
}

TEST_CASE("recurrence support for an interior element spans three degrees") {
  auto pair = MFPair::spsp(2, 2);
  Weight mu = pair.mu_weight(1);
  Weight b = pair.bottom(mu).front();
  Weight lam = pair.lambda_of(mu, {1, 1, 0}, b);
  auto sup = recurrence_support(pair, mu, lam, 0);
  std::set<long long> degrees;
  for (const auto& w : sup) degrees.insert(pair.degree(mu, w));
  CHECK(degrees == std::set<long long>{1, 2, 3});
  CHECK(std::count(sup.begin(), sup.end(), lam + pair.spherical_gens()[0]) == 1);
}

TEST_CASE("leading structure: mu = 0 gives 1x1 invertible blocks") {
  auto pair = MFPair::so9_spin7();
  Weight mu0 = pair.mu_weight(0);
  for (int i = 0; i < 2; ++i) {
    auto rep = leading_structure(pair, mu0, {0, 0}, i);
    CHECK(rep.leading_diagonal_full);
    CHECK(rep.leading_upper_triangular);
    CHECK(rep.others_strict_by_tag);
    for (const auto& blk : rep.blocks) CHECK(blk.pattern.size() == 1);
  }
}

TEST_CASE("leading structure on the three pairs at small multi-indices") {
  {
    auto pair = MFPair::so9_spin7();
    Weight mu = pair.mu_weight(1);
    for (int i = 0; i < 2; ++i) {
      auto rep = leading_structure(pair, mu, {0, 0}, i);
      CHECK(rep.leading_diagonal_full);
      CHECK(rep.others_strict_by_tag);
    }
  }
  {
    auto pair = MFPair::sln_diag(2);
    Weight mu = pair.mu_weight(1);
    auto rep = leading_structure(pair, mu, {0, 0}, 1);
    CHECK(rep.leading_diagonal_full);
    CHECK(rep.others_strict_by_tag);
  }
  {
    auto pair = MFPair::spsp(2, 2);
    Weight mu = pair.mu_weight(1);
    auto rep = leading_structure(pair, mu, {0, 0, 0}, 0);
    CHECK(rep.leading_diagonal_full);
    CHECK(rep.others_strict_by_tag);
  }
}

TEST_CASE("index round trip on sampled well elements") {
  auto pair = MFPair::sln_diag(2);
  Weight mu = pair.mu_weight(2);
  const auto bots = pair.bottom(mu);
  DetRng rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long long> d(static_cast<std::size_t>(pair.num_gens()));
    for (auto& c : d) c = rng.below(4);
    const Weight& b = bots[static_cast<std::size_t>(rng.below(static_cast<long long>(bots.size())))];
    WellIndex idx{d, b};
    Weight lam = lambda_of(pair, mu, idx);
    WellIndex back = index_of(pair, mu, lam);
    CHECK(back.d == d);
    CHECK(back.bottom == b);
  }
}

TEST_CASE("lambda_of validates its inputs") {
  auto pair = MFPair::spsp(2, 2);
  Weight mu = pair.mu_weight(1);
  CHECK_THROWS_AS(pair.lambda_of(mu, {1, 0, 0}, pair.g().fund_weights()[1]), InvalidBottom);
  CHECK_THROWS_AS(pair.lambda_of(mu, {1, 0}, pair.bottom(mu).front()), BadIndex);
  CHECK_THROWS_AS(pair.lambda_of(mu, {-1, 0, 0}, pair.bottom(mu).front()), BadIndex);
}
