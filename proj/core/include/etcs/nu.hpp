#pragma once

#include "etcs/gluing.hpp"
#include "etcs/rational.hpp"

namespace etcs::nu {

// Term-by-term breakdown of the exact nu-bar formula
//   nu_bar = D+ + D- + 3*m_rho + 24*(q/(k- n) - m/(k+ n) + 12*S(A, n)),
// with A = (m - eps+^* n)/k+.
struct NuBreakdown {
  Rational d_plus;
  Rational d_minus;
  long long m_rho_term = 0;  // 3*m_rho
  Rational dedekind_term;    // the 24*(...) bracket
  BigInt a;                  // A, always an integer for valid data
  Rational nu_bar;           // integer-valued
};

// Exact evaluation; requires n > 0 (valid for either sign of m as long as
// m_rho matches the datum's actual rho).  eps_star_shift adds t*k+ to the
// canonical inverse representative; the result is independent of t.
NuBreakdown nu_bar_exact(const gluing::GluingData& g, const Rational& d_plus,
                         const Rational& d_minus, int m_rho,
                         long long eps_star_shift = 0);

// nu = nu_bar - 24*(1 + b1) mod 48, reduced into [0, 48); the manifold bounds
// in G2-bordism exactly when 3 | nu.
struct NuMod48 {
  int nu = 0;
  bool nullbordant = false;
};
NuMod48 nu_mod48(const BigInt& nu_bar, int b1 = 0);

// The mod-24 congruence: nu_bar == D+ + D- + 3*m_rho - 24*(eps+^*/k+ + eps-^*/k-)
// modulo 24.
bool congruence_check(const gluing::GluingData& g, const Rational& d_plus,
                      const Rational& d_minus, int m_rho, const BigInt& nu_bar);

}  // namespace etcs::nu
