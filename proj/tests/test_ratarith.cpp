#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "etcs/ratarith.hpp"

using namespace etcs;
using namespace etcs::ratarith;

namespace {

// Independent oracle: the defining double-sawtooth sum, evaluated with plain
// Rational arithmetic (no integer-collapse shortcut).
Rational dedekind_brute(long long k, long long n) {
  Rational acc(0);
  for (long long j = 1; j < n; ++j) {
    acc += sawtooth(Rational(BigInt(j), BigInt(n))) *
           sawtooth(Rational(BigInt(j) * k, BigInt(n)));
  }
  return acc;
}

}  // namespace

TEST_CASE("sawtooth") {
  CHECK(sawtooth(Rational(5)) == Rational(0));
  CHECK(sawtooth(Rational(BigInt(1), BigInt(2))) == Rational(0));
  CHECK(sawtooth(Rational(BigInt(1), BigInt(3))) == Rational(BigInt(-1), BigInt(6)));
  CHECK(sawtooth(Rational(BigInt(-1), BigInt(3))) == Rational(BigInt(1), BigInt(6)));
  CHECK(sawtooth(Rational(BigInt(7), BigInt(3))) ==
        sawtooth(Rational(BigInt(1), BigInt(3))));
}

TEST_CASE("dedekind sum values") {
  CHECK(dedekind_sum(3, 10) == Rational(0));
  CHECK(dedekind_sum(0, 1) == Rational(0));
  CHECK(dedekind_sum(-1, 3) == Rational(BigInt(-1), BigInt(18)));
  CHECK(dedekind_sum(1, 5) == Rational(BigInt(1), BigInt(5)));
  CHECK_THROWS_AS(dedekind_sum(1, 0), std::domain_error);
}

TEST_CASE("dedekind sum agrees with the sawtooth definition") {
  for (long long n = 1; n <= 40; ++n)
    for (long long k = -5; k < n; ++k) CHECK(dedekind_sum(k, n) == dedekind_brute(k, n));
}

TEST_CASE("dedekind sum properties") {
  for (long long n = 1; n <= 60; ++n) {
    for (long long k = 0; k < n; ++k) {
      const Rational s = dedekind_sum(k, n);
      CHECK(dedekind_sum(-k, n) == -s);
      CHECK(dedekind_sum(k + n, n) == s);
      CHECK((Rational(6 * n) * s).is_integer());
      if (std::gcd(k, n) == 1) {
        const BigInt inv = mod_inverse(k, n);
        CHECK(dedekind_sum(inv, n) == s);
      }
    }
  }
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(2, 5) == 3);
  CHECK(mod_inverse(-1, 3) == 2);
  CHECK(mod_inverse(1, 1) == 0);
  CHECK(mod_inverse(5, 6) == 5);
  CHECK_THROWS_AS(mod_inverse(2, 4), std::domain_error);
  for (long long k = 1; k <= 30; ++k)
    for (long long e = -2 * k; e <= 2 * k; ++e) {
      if (std::gcd(e, k) != 1) continue;
      const BigInt inv = mod_inverse(e, k);
      CHECK(inv >= 0);
      CHECK(inv < k);
      BigInt prod = (BigInt(e) * inv) % k;
      if (prod < 0) prod += k;
      CHECK(prod == (k == 1 ? 0 : 1));
    }
}

TEST_CASE("hj_expand digits") {
  auto e1 = hj_expand(Rational(BigInt(7), BigInt(5)));
  CHECK(e1.digits == std::vector<BigInt>{2, 2, 3});
  auto e2 = hj_expand(Rational(BigInt(-3), BigInt(10)));
  CHECK(e2.digits == std::vector<BigInt>{0, 4, 2, 2});
  auto e3 = hj_expand(Rational(3));
  CHECK(e3.digits == std::vector<BigInt>{3});

  // Digits from position 2 on are always >= 2.
  for (const auto& exp : {e1, e2, e3})
    for (std::size_t i = 1; i < exp.digits.size(); ++i) CHECK(exp.digits[i] >= 2);
}

TEST_CASE("hj_convergents structure") {
  auto conv = hj_convergents(hj_expand(Rational(BigInt(7), BigInt(5))));
  CHECK(conv.a_prime.front() == 7);
  CHECK(conv.b_prime.front() == 5);
  CHECK(conv.a_prime.back() == 1);
  CHECK(conv.b_prime.back() == 0);
  for (std::size_t j = 0; j + 1 < conv.a_prime.size(); ++j)
    CHECK(conv.a_prime[j + 1] * conv.b_prime[j] - conv.a_prime[j] * conv.b_prime[j + 1] ==
          1);

  auto single = hj_convergents(hj_expand(Rational(3)));
  CHECK(single.a_prime == std::vector<BigInt>{3, 1});
  CHECK(single.b_prime == std::vector<BigInt>{1, 0});

  // Entry-228 case: -b'_1 inverse to a'_0 = -3 modulo b'_0 = 10.
  auto c228 = hj_convergents(hj_expand(Rational(BigInt(-3), BigInt(10))));
  BigInt prod = (-c228.b_prime[1] * -3) % 10;
  if (prod < 0) prod += 10;
  CHECK(prod == 1);
}

TEST_CASE("hj round-trip is exact for all reduced a/b with |a|,b <= 200") {
  for (long long b = 1; b <= 200; ++b) {
    for (long long a = -200; a <= 200; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const Rational x{BigInt(a), BigInt(b)};
      auto exp = hj_expand(x);
      auto conv = hj_convergents(exp);
      CHECK(Rational(conv.a_prime[0], conv.b_prime[0]) == x);
      // The convergents increase strictly towards 1/0.
      for (std::size_t j = 0; j + 2 < conv.a_prime.size(); ++j)
        CHECK(Rational(conv.a_prime[j], conv.b_prime[j]) <
              Rational(conv.a_prime[j + 1], conv.b_prime[j + 1]));
    }
  }
}

TEST_CASE("zagier_n") {
  CHECK(zagier_n(1, 1, 0, 1) == Rational(1));
  CHECK(zagier_n(0, -1, 1, 0) == Rational(0));
  CHECK(zagier_n(1, 0, 0, 1) == Rational(0));
  CHECK_THROWS_AS(zagier_n(1, 1, 1, 1), std::domain_error);

  // Integrality and sign-invariance on random words in S and T.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    long long a = 1, b = 0, c = 0, d = 1;
    int len = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) {
      if (rng() % 2) {  // right-multiply by T^e
        long long e = static_cast<long long>(rng() % 5) - 2;
        b += a * e;
        d += c * e;
      } else {  // right-multiply by S = (0 -1; 1 0)
        std::swap(a, b);
        std::swap(c, d);
        a = -a;
        c = -c;
      }
    }
    REQUIRE(a * d - b * c == 1);
    const Rational nval = zagier_n(a, b, c, d);
    CHECK(nval.is_integer());
    CHECK(zagier_n(-a, -b, -c, -d) == nval);
  }
}
