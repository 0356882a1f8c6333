#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "sperner/lattice.hpp"
#include "support.hpp"

using namespace sperner;

namespace {

// Independent product-form evaluation: C(n,k) = prod_{i=1..k} (n-k+i)/i,
// divided stepwise (each prefix is itself a binomial, so division is exact).
BigCount binomial_oracle(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigCount c = 1;
  for (long i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("binomial small values") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(7, 7) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(10, 3) == 120);
}

TEST_CASE("binomial(400,200) against the product-form oracle") {
  BigCount big = binomial(400, 200);
  CHECK(big == binomial_oracle(400, 200));
  CHECK(big.get_str().size() == 120);  // ~1.03e119: 120 decimal digits
}

TEST_CASE("binomial matches the oracle on a grid") {
  for (long n = 0; n <= 40; ++n)
    for (long k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial_oracle(n, k));
  CHECK(binomial(1000, 500) == binomial_oracle(1000, 500));
}

TEST_CASE("Pascal identity spot checks") {
  for (long n = 1; n <= 30; ++n)
    for (long k = 1; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("layer_iter smallest cases") {
  std::vector<SubsetWord> got;
  for (const SubsetWord& s : layer_iter(3, 1)) got.push_back(s);
  REQUIRE(got.size() == 3);
  CHECK(got[0] == SubsetWord::from_elements(3, {1}));
  CHECK(got[1] == SubsetWord::from_elements(3, {2}));
  CHECK(got[2] == SubsetWord::from_elements(3, {3}));

  got.clear();
  for (const SubsetWord& s : layer_iter(4, 2)) got.push_back(s);
  CHECK(got.size() == 6);
  std::set<std::string> distinct;
  for (const SubsetWord& s : got) {
    CHECK(s.size() == 2);
    distinct.insert(s.to_string());
  }
  CHECK(distinct.size() == 6);
}

TEST_CASE("layer_iter degenerate layers") {
  std::vector<SubsetWord> got;
  for (const SubsetWord& s : layer_iter(5, 0)) got.push_back(s);
  REQUIRE(got.size() == 1);
  CHECK(got[0].empty());

  got.clear();
  for (const SubsetWord& s : layer_iter(5, 5)) got.push_back(s);
  REQUIRE(got.size() == 1);
  CHECK(got[0].size() == 5);
}

TEST_CASE("layer_iter stream length equals binomial for n <= 12") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      long count = 0;
      for (const SubsetWord& s : layer_iter(n, k)) {
        CHECK(s.size() == k);
        ++count;
      }
      CHECK(BigCount(count) == binomial(n, k));
    }
}

TEST_CASE("layer_iter emits strictly increasing colex order") {
  for (int n : {5, 8, 10}) {
    for (int k = 1; k < n; ++k) {
      bool first = true;
      SubsetWord prev;
      for (const SubsetWord& s : layer_iter(n, k)) {
        if (!first) CHECK(colex_less(prev, s));
        prev = s;
        first = false;
      }
    }
  }
}

TEST_CASE("layer_iter near the word-size cap") {
  // n = 64 exercises the overflow guard in the colex successor.
  long count = 0;
  for (const SubsetWord& s : layer_iter(64, 1)) {
    CHECK(s.size() == 1);
    ++count;
  }
  CHECK(count == 64);

  count = 0;
  for (const SubsetWord& s : layer_iter(64, 63)) {
    CHECK(s.size() == 63);
    ++count;
  }
  CHECK(count == 64);
}

TEST_CASE("layer_iter rejects unsupported grounds") {
  CHECK_THROWS_AS(layer_iter(65, 2), std::invalid_argument);
  CHECK_THROWS_AS(layer_iter(4, -1), std::invalid_argument);
  // k > n is a valid, empty layer.
  LayerRange empty = layer_iter(4, 5);
  CHECK(empty.begin() == empty.end());
}

TEST_CASE("isqrt_floor") {
  CHECK(isqrt_floor(0) == 0);
  CHECK(isqrt_floor(1) == 1);
  CHECK(isqrt_floor(3) == 1);
  CHECK(isqrt_floor(4) == 2);
  CHECK(isqrt_floor(10001) == 100);
  CHECK(isqrt_floor(10002) == 100);
  for (long r = 1; r <= 2000; ++r) {
    CHECK(isqrt_floor(r * r) == r);
    CHECK(isqrt_floor(r * r - 1) == r - 1);
    CHECK(isqrt_floor(r * r + 1) == r);
  }
}

}  // TEST_SUITE
