#pragma once

#include <vector>

#include "etcs/rational.hpp"

namespace etcs::ratarith {

// Sawtooth ((x)): 0 at integers, x - floor(x) - 1/2 otherwise.
Rational sawtooth(const Rational& x);

// Dedekind sum S(k, n) = sum_{j=1}^{n-1} ((j/n)) ((jk/n)).  Requires n >= 1;
// the result lies in (1/6n) * Z.
Rational dedekind_sum(const BigInt& k, const BigInt& n);

// Canonical inverse of e modulo k: the representative in [0, k) with
// e * e^* == 1 (mod k).  mod_inverse(e, 1) == 0.
BigInt mod_inverse(const BigInt& e, const BigInt& k);

// Continued fraction with minus signs: x = c_1 - 1/(c_2 - 1/(... - 1/c_l))
// with c_j >= 2 for j >= 2.
struct HJExpansion {
  std::vector<BigInt> digits;
  Rational value;
};

HJExpansion hj_expand(const Rational& x);

// Convergent numerators/denominators a'_0..a'_l, b'_0..b'_l of an HJ
// expansion: a'_0/b'_0 is the expanded value, b'_l = 0, a'_l = 1, and
// a'_{j+1} b'_j - a'_j b'_{j+1} = 1 throughout.
struct ConvergentPair {
  std::vector<BigInt> a_prime;
  std::vector<BigInt> b_prime;
};

ConvergentPair hj_convergents(const HJExpansion& exp);

// The integer N(a,b,c,d) from the eta-logarithm transformation law:
// b/d when c = 0, else (a+d)/c - 12 S(d, c).  Requires ad - bc = 1.
Rational zagier_n(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d);

}  // namespace etcs::ratarith
