#pragma once

#include <vector>

#include "etcs/rational.hpp"

namespace etcs::cyclo {

// Arithmetic in Q(zeta_N), zeta_N = exp(2*pi*i/N), with elements stored as
// polynomials in zeta of degree < phi(N), reduced mod the N-th cyclotomic
// polynomial.  Small fields only (catalog needs N <= 24), but nothing here
// assumes a bound.
class Field {
 public:
  explicit Field(int n);

  int n() const { return n_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }

  using Elem = std::vector<Rational>;  // size == degree()

  Elem zero() const { return Elem(degree(), Rational(0)); }
  Elem from_rational(const Rational& r) const;
  Elem zeta_pow(long long e) const;  // zeta^e, any integer exponent

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scal(const Rational& c, const Elem& a) const;
  Elem inverse(const Elem& a) const;

  bool is_zero(const Elem& a) const;
  bool is_rational(const Elem& a) const;
  Rational rational_part(const Elem& a) const;  // throws unless is_rational

  // cos(2*pi*e/N) and sin(2*pi*e/N) as field elements (requires 4 | N for sin).
  Elem cos2pi(long long e) const;
  Elem sin2pi(long long e) const;

 private:
  std::vector<Rational> reduce(std::vector<Rational> p) const;

  int n_;
  std::vector<Rational> phi_;  // monic cyclotomic polynomial, low-to-high
};

}  // namespace etcs::cyclo
