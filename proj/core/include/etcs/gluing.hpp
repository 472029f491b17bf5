#pragma once

#include <string>
#include <vector>

#include "etcs/rational.hpp"

namespace etcs::gluing {

// One torus matching: orders k+/k- of the cyclic groups, the residues
// eps+/eps- (stored as canonical representatives in [0, k)), and the gluing
// matrix (m p; n q) of determinant -k+*k-.
struct GluingData {
  long long k_plus = 1;
  long long k_minus = 1;
  long long eps_plus = 0;
  long long eps_minus = 0;
  long long m = 0, p = 0, n = 0, q = 0;

  friend bool operator==(const GluingData&, const GluingData&) = default;
  friend auto operator<=>(const GluingData&, const GluingData&) = default;

  std::string str() const;
};

// Accepts signed eps on input; stores the canonical residue.
GluingData make_gluing(long long k_plus, long long k_minus, long long eps_plus,
                       long long eps_minus, long long m, long long p, long long n,
                       long long q);

// Signed representative in (-k/2, k/2], the form used in printed tables.
long long eps_signed(long long eps, long long k);

struct Verdict {
  bool ok = true;
  std::vector<std::string> violations;  // failed conditions by equation tag
};

// Checks every defining relation of a torus matching: determinant (1.7),
// congruences (1.8a)/(1.8b), primitivity gcds (1.9a)/(1.9b), the formal gcd
// consequences (3.1a)/(3.1b), and the sign condition (3.2).
Verdict validate(const GluingData& g);

// Completion of partial data: given k+, eps+ and a matrix with determinant
// -k+*k- satisfying (1.8a), (1.9a), (3.2), there is a unique matching; this
// returns (k-, eps-).  Throws std::domain_error naming the violated equation.
struct EpsMinusResult {
  long long k_minus;
  long long eps_minus;
};
EpsMinusResult derive_eps_minus(long long k_plus, long long eps_plus, long long m,
                                long long p, long long n, long long q);

// Exact derived geometry.  For a right-angle matching (m = q = 0) the circle
// ratios are free; they are reported as 1 with right_angle set.
struct GluingGeometry {
  Rational cos2_theta;
  Rational s_plus_sq;
  Rational s_minus_sq;
  bool right_angle = false;
  double theta = 0.0;        // in (0, pi) when n > 0
  double rho_over_pi = 0.0;  // rho = pi - 2*theta
};
GluingGeometry geometry(const GluingData& g);

// pi_1 of the glued manifold is Z/p.
long long fundamental_group(const GluingData& g);

// The unique connected ell-fold covering space (requires ell | p).
GluingData covering(const GluingData& g, long long ell);

// Orbit of g under the group H = (Z/2)^3 generated by the side swap, the
// orientation flip and the rotation.  Every element is valid gluing data for
// an isometric manifold (possibly with reversed orientation).
GluingData swap_sides(const GluingData& g);
GluingData orientation_flip(const GluingData& g);
GluingData rotate_half(const GluingData& g);
std::vector<GluingData> symmetry_orbit(const GluingData& g);

// Passage to the dual torus: same k and same angle but in general a
// non-isometric manifold.
GluingData t_dual(const GluingData& g);

// The angle-changing transformation theta -> pi/2 - theta.  Valid gluing
// data, but generally incompatible with the K3 matching of the original, so
// the result carries a distinct type and is never fed into table assembly.
struct QuarterTurn {
  GluingData data;
};
QuarterTurn quarter_turn(const GluingData& g);

// Canonical H-orbit representative: n, p > 0, m >= 0, q <= 0; when
// k+ = k- additionally m + q <= 0 (side swap); for right angles eps+ is
// flip-reduced into [1, k/2].  Ties broken lexicographically.
GluingData normalize(const GluingData& g);

// All valid gluing data in the normalized cone, without identifying the
// H-orbit pairs related by the side swap.  Used by the example assembly,
// which applies the swap convention per configuration.
std::vector<GluingData> enumerate_gluings_raw(long long k_plus, long long k_minus);

// All H-inequivalent valid gluing data for the given orders, sorted.
std::vector<GluingData> enumerate_gluings(long long k_plus, long long k_minus);

}  // namespace etcs::gluing
