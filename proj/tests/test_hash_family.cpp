#include <cmath>
#include <cstdint>

#include "doctest.h"
#include "f2watch/hash_family.hpp"
#include "f2watch/rng.hpp"

using f2watch::SignHash;

TEST_CASE("same seed gives identical hash functions") {
  SignHash a(42);
  SignHash b(42);
  CHECK(a == b);
  for (uint64_t k = 0; k < 1000; ++k) CHECK(a.sign(k) == b.sign(k));
}

TEST_CASE("different seeds give different functions") {
  SignHash a(1);
  SignHash b(2);
  bool differ = false;
  for (uint64_t k = 0; k < 1000 && !differ; ++k) differ = a.sign(k) != b.sign(k);
  CHECK(differ);
}

TEST_CASE("coefficients lie in the field") {
  for (uint64_t seed : {0ULL, 1ULL, 42ULL, 0xdeadbeefULL, ~0ULL}) {
    SignHash h(seed);
    for (int i = 0; i < 4; ++i) CHECK(h.coefficient(i) < SignHash::kPrime);
  }
}

TEST_CASE("codomain is exactly {-1, +1} and evaluation is pure") {
  SignHash h(7);
  for (uint64_t k : {uint64_t{0}, uint64_t{1}, SignHash::kPrime - 1, SignHash::kPrime, ~uint64_t{0}}) {
    int s = h.sign(k);
    CHECK((s == -1 || s == +1));
    CHECK(h.sign(k) == s);
  }
}

TEST_CASE("keys at or above p reduce mod p") {
  SignHash h(99);
  for (uint64_t k = 0; k < 64; ++k) CHECK(h.sign(k) == h.sign(k + SignHash::kPrime));
}

TEST_CASE("signs are balanced on average") {
  // E[g(k)] = 0: mean over 1e5 keys and 100 seeds.
  double sum = 0.0;
  const uint64_t keys = 100000;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    SignHash h(f2watch::derive_seed(0xbadc0de, seed));
    long long local = 0;
    for (uint64_t k = 0; k < keys; ++k) local += h.sign(k);
    sum += static_cast<double>(local) / static_cast<double>(keys);
  }
  double mean = sum / 100.0;
  CHECK(mean >= -0.02);
  CHECK(mean <= 0.02);
}

TEST_CASE("pairwise and 4-wise sign products are centered") {
  const int trials = 10000;
  const double sigma = 1.0 / std::sqrt(static_cast<double>(trials));
  const uint64_t a = 3, b = 17, c = 101, e = 999;
  long long pair_sum = 0;
  long long quad_sum = 0;
  for (int t = 0; t < trials; ++t) {
    SignHash h(f2watch::derive_seed(0x4157, t));
    pair_sum += h.sign(a) * h.sign(b);
    quad_sum += h.sign(a) * h.sign(b) * h.sign(c) * h.sign(e);
  }
  CHECK(std::abs(static_cast<double>(pair_sum) / trials) <= 3.0 * sigma);
  CHECK(std::abs(static_cast<double>(quad_sum) / trials) <= 3.0 * sigma);
}
