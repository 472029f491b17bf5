#pragma once

#include <complex>
#include <string>
#include <vector>

#include "etcs/gluing.hpp"
#include "etcs/ratarith.hpp"
#include "etcs/rational.hpp"

namespace etcs::hypgeo {

// Boundary point of the upper half-plane: the reduced fraction e/f, with
// f = 0 encoding infinity (then e = 1).
struct CuspPoint {
  BigInt e;
  BigInt f;  // >= 0

  bool is_infinity() const { return f == 0; }
  static CuspPoint infinity() { return {1, 0}; }
  static CuspPoint from_fraction(const Rational& x) { return {x.num(), x.den()}; }
  Rational value() const;  // throws at infinity
  std::string str() const;
  friend bool operator==(const CuspPoint&, const CuspPoint&) = default;
};

CuspPoint make_cusp(BigInt e, BigInt f);  // reduces and normalizes the sign

// Cuspidal angle at e/f between the geodesics towards x and y:
// (x - y)/((f x - e)(f y - e)), with the obvious extensions at infinity.
Rational cusp_angle(const CuspPoint& cusp, const CuspPoint& x, const CuspPoint& y);

// Adiabatic geodesics of the two families: gamma+ is the vertical line with
// real part eps+/k+; gamma- runs between eps+/k+ - n/(k+ m) (infinity when
// m = 0) and eps+/k+ - q/(k+ p).
struct GeodesicEndpoints {
  Rational gamma_plus_re;
  CuspPoint gamma_minus_a;  // adiabatic-limit end
  CuspPoint gamma_minus_b;
};
GeodesicEndpoints geodesic_endpoints(const gluing::GluingData& g);

// Euclidean check that gamma+ and gamma- meet at (eps+ + i s+)/k+ with
// unoriented angle 2*theta (requires m > 0).
bool intersection_angle_check(const gluing::GluingData& g, double tol = 1e-9);

// Whether the geodesic between two reduced fractions is fixed by a
// reflection: |e1 f2 - f1 e2| in {1, 2}.
bool reflection_fixed(const CuspPoint& a, const CuspPoint& b);

// Ideal polygon built from the minus-sign continued fraction of
// a'_0/b'_0 = (m - eps+^* n)/(k+ n); corners are the preimages of the
// convergents under the rotation C = (eps+^* -r; -k+ eps+).
struct IdealPolygon {
  std::vector<CuspPoint> corners;         // a_0/b_0 ... a_l/b_l in the original picture
  std::vector<CuspPoint> prime_corners;   // convergents a'_j/b'_j (last one: infinity)
  std::complex<double> finite_vertex;     // (eps+ + i s+)/k+
  long long ell = 0;
  ratarith::HJExpansion expansion;
  ratarith::ConvergentPair convergents;
};
IdealPolygon build_polygon(const gluing::GluingData& g);

// Exact identity between the total cuspidal angle of the polygon and the
// Dedekind-sum expression; also checks b'_1 == (q + eps-^* n)/k- mod n.
struct PolygonIdentity {
  Rational lhs;
  Rational rhs;
  bool pass = false;
  bool b1_congruence = false;
};
PolygonIdentity polygon_identity_check(const gluing::GluingData& g);

// The ideal-triangle sanity identity: angle sum of (0, 1, infinity) is 3,
// and 3/12 equals the area ratio 1/4.
bool triangle_sanity();

// Unit recovered from the gamma- endpoints: the pair of reduced
// fractions has determinant +-k-, and the unit it determines is -eps- mod k-.
bool endpoint_unit_check(const gluing::GluingData& g);

// Diagnostic SVG of the polygon (corners, geodesic arcs, finite vertex).
std::string polygon_svg(const gluing::GluingData& g);

}  // namespace etcs::hypgeo
