#include <doctest.h>

#include "mfs/charcalc.hpp"
#include "mfs/errors.hpp"
#include "mfs/tableaux.hpp"

using namespace mfs;
using namespace mfs::lr;

TEST_CASE("LR coefficients on single cells and small shapes") {
  CHECK(lr_coefficient({2}, {1}, {1}) == 1);
  CHECK(lr_coefficient({2, 1}, {1}, {1, 1}) == 1);
  CHECK(lr_coefficient({2, 1}, {1}, {2}) == 1);
  CHECK(lr_coefficient({3}, {1}, {1, 1}) == 0);
  CHECK(lr_coefficient({2, 2}, {1}, {2, 1}) == 1);
  CHECK(lr_coefficient({1}, {1}, {1}) == 0);  // size mismatch, 0 by convention
  // classical multiplicity-2 case: c^{(3,2,1)}_{(2,1),(2,1)} = 2
  CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}) == 2);
  CHECK(lr_coefficient({}, {}, {}) == 1);
}

TEST_CASE("partition/weight conversions strip full columns") {
  auto a2 = RootDatum::build({{Family::A, 2}});
  CHECK(partition_of_weight(a2, a2.fund_weights()[0]) == Partition{1});
  CHECK(partition_of_weight(a2, a2.fund_weights()[1]) == Partition{1, 1});
  CHECK(weight_of_partition(a2, {2, 1, 1}) == a2.fund_weights()[0]);
  CHECK(weight_of_partition(a2, {1, 1, 1}) == a2.zero());
  CHECK_THROWS_AS(weight_of_partition(a2, {1, 1, 1, 1}), TooManyRows);
}

TEST_CASE("tensor_via_lr on the standard small products") {
  // SL2: (1) x (1) = (2) + (1,1)
  auto t2 = tensor_via_lr(1, {1}, {1});
  CHECK(t2.size() == 2);
  CHECK(t2.at({2}) == 1);
  CHECK(t2.at({}) == 1);  // (1,1) is a full column for SL2

  // SL3: 3 x 3bar = 8 + 1
  auto t3 = tensor_via_lr(2, {1}, {1, 1});
  CHECK(t3.size() == 2);
  CHECK(t3.at({2, 1}) == 1);
  CHECK(t3.at({}) == 1);

  // SL3 adjoint square: trivial once, adjoint twice
  auto t4 = tensor_via_lr(2, {2, 1}, {2, 1});
  CHECK(t4.at({}) == 1);
  CHECK(t4.at({2, 1}) == 2);

  CHECK_THROWS_AS(tensor_via_lr(1, {1, 1, 1}, {1}), TooManyRows);
}

TEST_CASE("tensor_via_lr agrees with the character-theoretic route") {
  for (int n : {1, 2, 3}) {
    auto an = RootDatum::build({{Family::A, n}});
    CharEngine e(an);
    // all dominant weights with dim <= 40 in this quick version
    std::vector<Weight> ws;
    std::vector<long long> f(n, 0);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == n) {
        Weight w = an.weight_fw(f);
        if (e.dim(w) <= 40) ws.push_back(w);
        return;
      }
      for (long long c = 0; c <= 3; ++c) {
        f[pos] = c;
        rec(pos + 1);
      }
      f[pos] = 0;
    };
    rec(0);
    for (const auto& a : ws)
      for (const auto& b : ws) {
        auto via_lr = tensor_via_lr(n, partition_of_weight(an, a), partition_of_weight(an, b));
        auto via_char = e.tensor_decompose(a, b);
        CHECK(via_lr.size() == via_char.size());
        for (const auto& [p, m] : via_lr) {
          REQUIRE(via_char.count(weight_of_partition(an, p)));
          CHECK(via_char.at(weight_of_partition(an, p)) == m);
        }
      }
  }
}

TEST_CASE("witness fillings: shapes, content and validity") {
  // n=2, k=1, chain (0,0): single box filled with 1
  auto f0 = proof_filling(2, 1, {0, 0});
  CHECK(f0.outer == Partition{1});
  CHECK(f0.inner == Partition{});
  CHECK(f0.rows[0] == std::vector<int>{1});
  CHECK(is_lr_filling(f0));

  // n=2, k=2, chain (0,1)
  auto t = proof_triple(2, 2, {0, 1});
  CHECK(t.mu == Partition{1, 1});
  CHECK(t.nu == Partition{2, 1});
  CHECK(t.lam == Partition{3, 1, 1});
  auto f1 = proof_filling(2, 2, {0, 1});
  std::string why;
  CHECK(is_lr_filling(f1, &why));
  CHECK(filling_content(f1) == std::vector<long long>{2, 1});

  // n=2, k=2, chain (1,2): content must match nu = (1,1)
  auto t2 = proof_triple(2, 2, {1, 2});
  CHECK(t2.nu == Partition{1, 1});
  auto f2 = proof_filling(2, 2, {1, 2});
  CHECK(is_lr_filling(f2));
  CHECK(filling_content(f2) == std::vector<long long>{1, 1});

  CHECK_THROWS_AS(proof_filling(2, 1, {1, 0}), InvalidChain);
  CHECK_THROWS_AS(proof_filling(2, 1, {0, 2}), InvalidChain);
}

TEST_CASE("every chain with k <= 3, n <= 3 yields a valid filling witnessing c >= 1") {
  for (int n = 1; n <= 3; ++n)
    for (long long k = 0; k <= 3; ++k) {
      std::vector<long long> chain(n, 0);
      std::function<void(int)> rec = [&](int i) {
        if (i < 0) {
          auto t = proof_triple(n, k, chain);
          auto f = proof_filling(n, k, chain);
          std::string why;
          const bool valid = is_lr_filling(f, &why);
          CHECK_MESSAGE(valid, "chain invalid: ", why);
          auto content = filling_content(f);
          content.resize(t.nu.size(), 0);
          CHECK(content == std::vector<long long>(t.nu.begin(), t.nu.end()));
          CHECK(lr_coefficient(t.lam, t.mu, t.nu) >= 1);
          return;
        }
        const long long hi = (i + 1 < n) ? chain[i + 1] : k;
        for (long long v = 0; v <= hi; ++v) {
          chain[i] = v;
          rec(i - 1);
        }
      };
      rec(n - 1);
    }
}

TEST_CASE("ascii grid renders inner cells as dots") {
  auto f = proof_filling(2, 2, {0, 1});
  auto grid = ascii_grid(f);
  CHECK(grid.find('.') != std::string::npos);
  CHECK(grid.find('1') != std::string::npos);
  CHECK(grid.find('2') != std::string::npos);
}
