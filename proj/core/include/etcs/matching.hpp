#pragma once

#include <string>
#include <vector>

#include "etcs/blocks.hpp"
#include "etcs/gluing.hpp"
#include "etcs/rational.hpp"

namespace etcs::matching {

// Rank-1 configuration: Gram matrix (n+ h; h n-) of the two polarising
// lattice generators inside the K3 lattice.
struct Configuration {
  long long n_plus = 0;
  long long n_minus = 0;
  long long h = 0;

  Rational cos2_theta() const { return Rational(h * h, n_plus * n_minus); }
  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// Configuration angles of a rank-1 pure-angle configuration: three angles on
// the positive side (+2theta, -2theta, 0) and nineteen zeros on the negative
// side.
struct ConfigAngles {
  std::vector<double> alpha_plus;
  std::vector<double> alpha_minus;
};
ConfigAngles config_angles_rank1(const Configuration& c);

// The integer correction term of the gluing formula, counting negative-side
// configuration angles at or near pi.
int m_rho(int rho_sign, double rho_abs, const std::vector<double>& alpha_minus);

// Third Betti number of the glued manifold from the two blocks.
int b3(const blocks::BlockRecord& z_plus, const blocks::BlockRecord& z_minus,
       bool theta_is_right_angle);

// Torsion of H^3: trivial for primitively embedded rank-1 configurations,
// which covers every catalog example.  The flag records the assumption.
struct CotorsionReport {
  bool trivial = true;
  std::string assumption = "primitive embedding assumed";
};
CotorsionReport cotorsion_h3(const Configuration& c);

// One assembled example: gluing data, configuration, blocks and all derived
// invariants.
struct EtcsExample {
  int row_id = 0;
  gluing::GluingData g;
  Configuration config;
  int z_plus = 0;
  int z_minus = 0;
  int b3 = 0;
  long long pi1_order = 1;
  Rational d_plus;
  Rational d_minus;
  int m_rho = 0;
  BigInt nu_bar;
  int nu_mod48 = 0;
  bool nullbordant = false;
};

// Deterministic full enumeration over a catalog: every section k+ <= k-
// (excluding the trivial pair), every realizable configuration, every
// compatible gluing datum and every ordered block pair.  `workers` > 1
// partitions the sections across threads; the output is identical.
std::vector<EtcsExample> enumerate_examples(const blocks::Catalog& catalog,
                                            int workers = 1);

// Covering-space cross references: for every row with pi1 = Z/p and every
// ell | p, the ell-fold cover is again a table row whenever its gluing data
// and blocks (with the automorphism groups shrunk to the cover's orders)
// appear in the table, possibly with the two sides swapped.
struct CoverEdge {
  int from_row = 0;
  long long ell = 1;
  int to_row = 0;
  bool swapped = false;
};
std::vector<CoverEdge> covering_edges(const blocks::Catalog& catalog,
                                      const std::vector<EtcsExample>& rows);

}  // namespace etcs::matching
