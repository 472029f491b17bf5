#include "etcs/ratarith.hpp"

#include <stdexcept>
#include <utility>

namespace etcs::ratarith {

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return x - Rational(x.floor()) - Rational(BigInt(1), BigInt(2));
}

Rational dedekind_sum(const BigInt& k, const BigInt& n) {
  if (n < 1) throw std::domain_error("dedekind_sum: n must be >= 1");
  // ((j/n)) = (2j - n)/(2n) for 0 < j < n, so the sum collapses to an
  // integer accumulation over residues; ((jk/n)) vanishes when n | jk.
  BigInt kk = k % n;
  if (kk < 0) kk += n;
  BigInt acc = 0;
  BigInt r = 0;  // j*k mod n, updated incrementally
  for (BigInt j = 1; j < n; ++j) {
    r += kk;
    if (r >= n) r -= n;
    if (r == 0) continue;
    acc += (2 * j - n) * (2 * r - n);
  }
  return Rational(acc, 4 * n * n);
}

BigInt mod_inverse(const BigInt& e, const BigInt& k) {
  if (k < 1) throw std::domain_error("mod_inverse: modulus must be positive");
  if (k == 1) return 0;
  // Extended Euclid on (e mod k, k).
  BigInt a = e % k;
  if (a < 0) a += k;
  BigInt old_r = a, r = k;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("mod_inverse: arguments not coprime");
  BigInt inv = old_s % k;
  if (inv < 0) inv += k;
  return inv;
}

HJExpansion hj_expand(const Rational& x) {
  HJExpansion out;
  out.value = x;
  Rational cur = x;
  for (;;) {
    BigInt c = cur.ceil();
    out.digits.push_back(c);
    Rational rem = Rational(c) - cur;
    if (rem.is_zero()) break;
    cur = Rational(1) / rem;  // > 1, so subsequent digits are >= 2
  }
  return out;
}

ConvergentPair hj_convergents(const HJExpansion& exp) {
  const auto& c = exp.digits;
  const std::size_t ell = c.size();
  if (ell == 0) throw std::domain_error("hj_convergents: empty expansion");
  // Products M(c_1)...M(c_t) with M(c) = (c -1; 1 0) carry the convergents
  // in their columns: the full product is (a'_0 -a'_1; b'_0 -b'_1), and the
  // partial product of length t is (a'_{l-t} -a'_{l-t+1}; b'_{l-t} ...).
  ConvergentPair out;
  out.a_prime.assign(ell + 1, 0);
  out.b_prime.assign(ell + 1, 0);
  out.a_prime[ell] = 1;
  out.b_prime[ell] = 0;
  BigInt u0 = c[0], u1 = 1;   // first column of the running product
  BigInt v0 = -1, v1 = 0;     // second column
  out.a_prime[ell - 1] = u0;
  out.b_prime[ell - 1] = u1;
  for (std::size_t t = 1; t < ell; ++t) {
    BigInt nu0 = u0 * c[t] + v0;
    BigInt nu1 = u1 * c[t] + v1;
    v0 = -u0;
    v1 = -u1;
    u0 = nu0;
    u1 = nu1;
    out.a_prime[ell - 1 - t] = u0;
    out.b_prime[ell - 1 - t] = u1;
  }
  return out;
}

Rational zagier_n(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
  if (a * d - b * c != 1) throw std::domain_error("zagier_n: determinant must be 1");
  // N(g) = N(-g), so reduce to c >= 0.
  if (c < 0) return zagier_n(-a, -b, -c, -d);
  if (c == 0) return Rational(b * d);  // d = +-1, so b/d = b*d
  return Rational(a + d, c) - Rational(12) * dedekind_sum(d, c);
}

}  // namespace etcs::ratarith
