#include "etcs/nu.hpp"

#include <stdexcept>

#include "etcs/ratarith.hpp"

namespace etcs::nu {

NuBreakdown nu_bar_exact(const gluing::GluingData& g, const Rational& d_plus,
                         const Rational& d_minus, int m_rho, long long eps_star_shift) {
  if (g.n <= 0) throw std::domain_error("nu_bar_exact: requires n > 0");
  NuBreakdown out;
  out.d_plus = d_plus;
  out.d_minus = d_minus;
  out.m_rho_term = 3LL * m_rho;

  BigInt eps_star = ratarith::mod_inverse(g.eps_plus, g.k_plus) +
                    BigInt(eps_star_shift) * g.k_plus;
  BigInt a_num = BigInt(g.m) - eps_star * g.n;
  if (a_num % g.k_plus != 0)
    throw std::domain_error("nu_bar_exact: A = (m - eps+^* n)/k+ is not an integer");
  out.a = a_num / g.k_plus;

  Rational bracket = Rational(BigInt(g.q), BigInt(g.k_minus) * g.n) -
                     Rational(BigInt(g.m), BigInt(g.k_plus) * g.n) +
                     Rational(12) * ratarith::dedekind_sum(out.a, g.n);
  out.dedekind_term = Rational(24) * bracket;
  out.nu_bar = d_plus + d_minus + Rational(out.m_rho_term) + out.dedekind_term;
  if (!out.nu_bar.is_integer())
    throw std::domain_error("nu_bar_exact: result is not an integer (invalid inputs)");
  return out;
}

NuMod48 nu_mod48(const BigInt& nu_bar, int b1) {
  BigInt v = nu_bar - 24 * (1 + b1);
  BigInt r = v % 48;
  if (r < 0) r += 48;
  NuMod48 out;
  out.nu = r.convert_to<int>();
  out.nullbordant = out.nu % 3 == 0;
  return out;
}

bool congruence_check(const gluing::GluingData& g, const Rational& d_plus,
                      const Rational& d_minus, int m_rho, const BigInt& nu_bar) {
  Rational rhs = d_plus + d_minus + Rational(3LL * m_rho) -
                 Rational(24) * (Rational(ratarith::mod_inverse(g.eps_plus, g.k_plus),
                                          BigInt(g.k_plus)) +
                                 Rational(ratarith::mod_inverse(g.eps_minus, g.k_minus),
                                          BigInt(g.k_minus)));
  Rational diff = Rational(nu_bar) - rhs;
  if (!diff.is_integer()) return false;
  return diff.to_integer() % 24 == 0;
}

}  // namespace etcs::nu
