// Command-line front end: enumerates the example table, evaluates nu-bar
// breakdowns, runs the verification suites, and follows coverings/duals.
//
// Exit codes: 0 ok, 1 I/O or configuration problem, 2 invalid mathematical
// input, 3 verification failure.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "etcs/blocks.hpp"
#include "etcs/etafn.hpp"
#include "etcs/gluing.hpp"
#include "etcs/hypgeo.hpp"
#include "etcs/matching.hpp"
#include "etcs/nu.hpp"
#include "etcs/ratarith.hpp"
#include "etcs/table.hpp"

namespace {

using namespace etcs;

blocks::Catalog load_catalog_or_die(const std::string& path) {
  try {
    if (!path.empty()) return blocks::load_catalog_file(path);
    if (const char* env = std::getenv("ETCS_CATALOG"); env && *env)
      return blocks::load_catalog_file(env);
    return blocks::default_catalog();
  } catch (const std::exception& e) {
    std::cerr << "catalog error: " << e.what() << "\n";
    std::exit(1);
  }
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

std::vector<matching::EtcsExample> full_table(const blocks::Catalog& cat) {
  return matching::enumerate_examples(cat);
}

const matching::EtcsExample& row_or_die(const std::vector<matching::EtcsExample>& rows,
                                        int id) {
  if (id < 1 || id > static_cast<int>(rows.size())) {
    std::cerr << "no table row " << id << " (table has " << rows.size() << " rows)\n";
    std::exit(2);
  }
  return rows[static_cast<std::size_t>(id - 1)];
}

// Matches derived gluing data against the table up to the
// swap/flip/rotation symmetries, ignoring which side carries which block.
std::optional<int> find_row(const std::vector<matching::EtcsExample>& rows,
                            const gluing::GluingData& g) {
  for (const auto& cand : gluing::symmetry_orbit(g)) {
    gluing::GluingData norm;
    try {
      norm = gluing::normalize(cand);
    } catch (const std::exception&) {
      continue;
    }
    for (const auto& row : rows) {
      if (row.g == norm) return row.row_id;
      if (gluing::normalize(gluing::swap_sides(row.g)) == norm) return row.row_id;
    }
  }
  return std::nullopt;
}

void print_breakdown(const nu::NuBreakdown& bd) {
  std::cout << "D+            = " << bd.d_plus.str() << "\n"
            << "D-            = " << bd.d_minus.str() << "\n"
            << "3*m_rho       = " << bd.m_rho_term << "\n"
            << "A             = " << bd.a.str() << "\n"
            << "dedekind term = " << bd.dedekind_term.str() << "\n"
            << "nu_bar        = " << bd.nu_bar.str() << "\n";
  auto n48 = nu::nu_mod48(bd.nu_bar.to_integer());
  std::cout << "nu mod 48     = " << n48.nu << "\n"
            << "nullbordant   = " << (n48.nullbordant ? "yes" : "no") << "\n";
}

int cmd_enumerate(const std::string& catalog_path, const std::string& format,
                  const std::string& out_path, const std::string& filter) {
  auto cat = load_catalog_or_die(catalog_path);
  auto rows = full_table(cat);

  if (!filter.empty()) {
    std::map<std::string, long long> wanted;
    std::istringstream is(filter);
    std::string item;
    while (std::getline(is, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) {
        std::cerr << "bad --filter item: " << item << "\n";
        return 1;
      }
      wanted[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
    }
    std::vector<matching::EtcsExample> kept;
    for (const auto& r : rows) {
      bool ok = true;
      for (const auto& [key, val] : wanted) {
        if (key == "kplus")
          ok = ok && r.g.k_plus == val;
        else if (key == "kminus")
          ok = ok && r.g.k_minus == val;
        else if (key == "zplus")
          ok = ok && r.z_plus == val;
        else if (key == "zminus")
          ok = ok && r.z_minus == val;
        else if (key == "pi1")
          ok = ok && r.pi1_order == val;
        else {
          std::cerr << "unknown filter key: " << key << "\n";
          std::exit(1);
        }
      }
      if (ok) kept.push_back(r);
    }
    rows = std::move(kept);
  }

  std::ostringstream body;
  if (format == "csv")
    table::write_csv(body, rows);
  else if (format == "json")
    body << table::to_json(rows) << "\n";
  else {
    std::cerr << "unknown format: " << format << "\n";
    return 1;
  }

  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      return 1;
    }
    out << body.str();
  }
  return 0;
}

int cmd_nu(const std::string& catalog_path, int row_id, const std::string& gluing_csv,
           long long k_plus, long long eps_plus, const std::string& d_plus_s,
           const std::string& d_minus_s, int m_rho, double cross_tol) {
  auto cat = load_catalog_or_die(catalog_path);
  gluing::GluingData g;
  Rational d_plus, d_minus;
  int mr = m_rho;

  if (row_id > 0) {
    auto rows = full_table(cat);
    const auto& row = row_or_die(rows, row_id);
    g = row.g;
    d_plus = row.d_plus;
    d_minus = row.d_minus;
    mr = row.m_rho;
  } else {
    long long vals[4];
    std::istringstream is(gluing_csv);
    std::string item;
    for (auto& v : vals) {
      if (!std::getline(is, item, ',')) {
        std::cerr << "--gluing needs m,p,n,q\n";
        return 2;
      }
      v = std::stoll(item);
    }
    gluing::EpsMinusResult em;
    try {
      em = gluing::derive_eps_minus(k_plus, eps_plus, vals[0], vals[1], vals[2], vals[3]);
      g = gluing::make_gluing(k_plus, em.k_minus, eps_plus, em.eps_minus, vals[0],
                              vals[1], vals[2], vals[3]);
    } catch (const std::exception& e) {
      std::cerr << "invalid gluing data: " << e.what() << "\n";
      return 2;
    }
    auto verdict = gluing::validate(g);
    if (!verdict.ok) {
      std::cerr << "invalid gluing data; violated: ";
      for (const auto& v : verdict.violations) std::cerr << v << " ";
      std::cerr << "\n";
      return 2;
    }
    d_plus = parse_rational(d_plus_s);
    d_minus = parse_rational(d_minus_s);
  }

  std::cout << g.str() << "\n";
  auto bd = nu::nu_bar_exact(g, d_plus, d_minus, mr);
  print_breakdown(bd);
  if (cross_tol > 0) {
    double analytic =
        static_cast<double>(etafn::nu_bar_analytic(g, d_plus, d_minus, mr, 1e-9L));
    double delta = std::abs(analytic - bd.nu_bar.to_double());
    std::cout << "analytic      = " << analytic << " (delta " << delta << ")\n";
    if (delta > cross_tol) {
      std::cerr << "cross-check failed at tolerance " << cross_tol << "\n";
      return 3;
    }
  }
  return 0;
}

int cmd_verify(const std::string& catalog_path, const std::string& suite, double tol) {
  auto cat = load_catalog_or_die(catalog_path);
  int failures = 0;
  auto report = [&failures](const std::string& name, bool ok, const std::string& info) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << (info.empty() ? "" : " ") << info
              << "\n";
    if (!ok) ++failures;
  };

  const bool all = suite == "all";
  if (all || suite == "dedekind") {
    bool ok = true;
    for (long long n = 1; n <= 60 && ok; ++n)
      for (long long k = 0; k < n && ok; ++k) {
        auto s = ratarith::dedekind_sum(k, n);
        ok = ok && ratarith::dedekind_sum(-k, n) == -s &&
             ratarith::dedekind_sum(k + n, n) == s &&
             (Rational(6 * n) * s).is_integer();
      }
    ok = ok && ratarith::dedekind_sum(3, 10) == Rational(0);
    report("dedekind", ok, "oddness/periodicity/integrality n<=60");
  }
  if (all || suite == "eta") {
    auto t3 = etafn::table3_check(static_cast<etafn::Real>(tol > 0 ? tol : 1e-9));
    report("eta.special_values", t3.failures == 0,
           std::to_string(t3.rows) + " rows, " + std::to_string(t3.failures) +
               " failures");
    bool fe = true;
    const etafn::Complex tau(0.31L, 0.77L);
    fe = fe && etafn::functional_equation_check(tau, 0, -1, 1, 0);
    fe = fe && etafn::functional_equation_check(tau, 1, 1, 0, 1);
    fe = fe && etafn::functional_equation_check(tau, 2, 1, 1, 1);
    report("eta.functional_equation", fe, "");
  }
  if (all || suite == "polygon") {
    auto rows = full_table(cat);
    int checked = 0;
    bool ok = true;
    for (const auto& row : rows) {
      if (row.g.m <= 0) continue;
      ++checked;
      auto id = hypgeo::polygon_identity_check(row.g);
      ok = ok && id.pass && id.b1_congruence;
      ok = ok && hypgeo::intersection_angle_check(row.g, tol > 0 ? tol : 1e-9);
    }
    report("polygon", ok, std::to_string(checked) + " rows checked");
  }
  if (all || suite == "congruence") {
    auto rows = full_table(cat);
    int pass = 0;
    for (const auto& row : rows)
      if (nu::congruence_check(row.g, row.d_plus, row.d_minus, row.m_rho, row.nu_bar))
        ++pass;
    report("congruence", pass == static_cast<int>(rows.size()),
           std::to_string(pass) + "/" + std::to_string(rows.size()));
  }
  if (all || suite == "table3") {
    auto t3 = etafn::table3_check(static_cast<etafn::Real>(tol > 0 ? tol : 1e-9));
    for (const auto& msg : t3.messages) std::cout << "  " << msg << "\n";
    report("table3", t3.failures == 0,
           std::to_string(t3.rows) + " rows at tol " + std::to_string(tol > 0 ? tol : 1e-9));
  }
  if (!all && suite != "dedekind" && suite != "eta" && suite != "polygon" &&
      suite != "congruence" && suite != "table3") {
    std::cerr << "unknown suite: " << suite << "\n";
    return 1;
  }
  return failures == 0 ? 0 : 3;
}

int cmd_cover(const std::string& catalog_path, int row_id, long long ell) {
  auto cat = load_catalog_or_die(catalog_path);
  auto rows = full_table(cat);
  const auto& row = row_or_die(rows, row_id);
  gluing::GluingData covered;
  try {
    covered = gluing::covering(row.g, ell);
  } catch (const std::exception& e) {
    std::cerr << "covering failed: " << e.what() << "\n";
    return 2;
  }
  std::cout << "base:  " << row.g.str() << "\n";
  std::cout << "cover: " << covered.str() << "\n";
  if (auto match = find_row(rows, covered))
    std::cout << "matches table row " << *match << "\n";
  else
    std::cout << "no table row matches (blocks may change under the cover)\n";
  return 0;
}

int cmd_tdual(const std::string& catalog_path, int row_id) {
  auto cat = load_catalog_or_die(catalog_path);
  auto rows = full_table(cat);
  const auto& row = row_or_die(rows, row_id);
  auto dual = gluing::t_dual(row.g);
  std::cout << "row:   " << row.g.str() << "\n";
  std::cout << "tdual: " << dual.str() << "\n";
  if (auto match = find_row(rows, dual))
    std::cout << "matches table row " << *match << "\n";
  else
    std::cout << "no table row matches\n";
  return 0;
}

int cmd_covers(const std::string& catalog_path) {
  auto cat = load_catalog_or_die(catalog_path);
  auto rows = full_table(cat);
  auto edges = matching::covering_edges(cat, rows);
  for (const auto& e : edges)
    std::cout << e.from_row << " -> " << e.to_row << " (" << e.ell << "-fold"
              << (e.swapped ? ", sides swapped" : "") << ")\n";
  std::cout << edges.size() << " covering relations\n";
  return 0;
}

int cmd_polygon(const std::string& catalog_path, int row_id, const std::string& svg_path) {
  auto cat = load_catalog_or_die(catalog_path);
  auto rows = full_table(cat);
  const auto& row = row_or_die(rows, row_id);
  if (row.g.m == 0) {
    std::cerr << "row " << row_id << " has theta = pi/2; no polygon\n";
    return 2;
  }
  auto poly = hypgeo::build_polygon(row.g);
  std::cout << "digits:";
  for (const auto& c : poly.expansion.digits) std::cout << ' ' << c.str();
  std::cout << "\ncorners:";
  for (const auto& c : poly.corners) std::cout << ' ' << c.str();
  std::cout << "\n";
  auto id = hypgeo::polygon_identity_check(row.g);
  std::cout << "angle sum = " << id.lhs.str() << ", dedekind side = " << id.rhs.str()
            << " -> " << (id.pass ? "equal" : "MISMATCH") << "\n";
  if (!svg_path.empty()) {
    std::ofstream out(svg_path);
    if (!out) {
      std::cerr << "cannot open " << svg_path << "\n";
      return 1;
    }
    out << hypgeo::polygon_svg(row.g);
  }
  return id.pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of extra-twisted connected sums"};
  app.require_subcommand(1);
  std::string catalog_path;
  app.add_option("--catalog", catalog_path, "catalog file (default: built-in)");

  auto* enumerate = app.add_subcommand("enumerate", "emit the full example table");
  std::string format = "csv", out_path, filter;
  enumerate->add_option("--format", format, "csv|json");
  enumerate->add_option("--out", out_path, "output path (default stdout)");
  enumerate->add_option("--filter", filter, "e.g. kplus=3,kminus=5");

  auto* nu_cmd = app.add_subcommand("nu", "nu-bar breakdown for a row or raw data");
  int row_id = 0, m_rho = 0;
  std::string gluing_csv, d_plus_s = "0", d_minus_s = "0";
  long long k_plus = 1, eps_plus = 0;
  double cross_tol = 0;
  nu_cmd->add_option("--row", row_id, "table row id");
  nu_cmd->add_option("--gluing", gluing_csv, "m,p,n,q");
  nu_cmd->add_option("--kplus", k_plus, "k+ (with --gluing)");
  nu_cmd->add_option("--eps-plus", eps_plus, "eps+ (with --gluing)");
  nu_cmd->add_option("--dplus", d_plus_s, "D+ as a fraction");
  nu_cmd->add_option("--dminus", d_minus_s, "D- as a fraction");
  nu_cmd->add_option("--mrho", m_rho, "m_rho (with --gluing)");
  nu_cmd->add_option("--cross-check", cross_tol, "also run the analytic route");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  double tol = 0;
  verify->add_option("suite", suite, "all|dedekind|eta|polygon|congruence|table3");
  verify->add_option("--tol", tol, "tolerance override");

  auto* cover = app.add_subcommand("cover", "covering space of a table row");
  int cover_row = 0;
  long long ell = 1;
  cover->add_option("--row", cover_row)->required();
  cover->add_option("--ell", ell)->required();

  auto* tdual = app.add_subcommand("tdual", "dual-torus partner of a table row");
  int tdual_row = 0;
  tdual->add_option("--row", tdual_row)->required();

  auto* covers = app.add_subcommand("covers", "covering cross-references between rows");

  auto* polygon = app.add_subcommand("polygon", "ideal polygon of a table row");
  int polygon_row = 0;
  std::string svg_path;
  polygon->add_option("--row", polygon_row)->required();
  polygon->add_option("--svg", svg_path, "write an SVG diagnostic");

  CLI11_PARSE(app, argc, argv);

  try {
    if (enumerate->parsed()) return cmd_enumerate(catalog_path, format, out_path, filter);
    if (nu_cmd->parsed())
      return cmd_nu(catalog_path, row_id, gluing_csv, k_plus, eps_plus, d_plus_s,
                    d_minus_s, m_rho, cross_tol);
    if (verify->parsed()) return cmd_verify(catalog_path, suite, tol);
    if (cover->parsed()) return cmd_cover(catalog_path, cover_row, ell);
    if (tdual->parsed()) return cmd_tdual(catalog_path, tdual_row);
    if (covers->parsed()) return cmd_covers(catalog_path);
    if (polygon->parsed()) return cmd_polygon(catalog_path, polygon_row, svg_path);
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
