#include "etcs/table.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

namespace etcs::table {

const char* kCsvHeader =
    "id,k_plus,k_minus,n_plus,h,n_minus,cos2,z_plus,z_minus,b3,"
    "m,p,n,q,eps_plus,eps_minus,pi1,nu_bar,nu_mod48,nullbordant";

std::string to_csv_row(const matching::EtcsExample& ex) {
  std::ostringstream os;
  os << ex.row_id << ',' << ex.g.k_plus << ',' << ex.g.k_minus << ','
     << ex.config.n_plus << ',' << ex.config.h << ',' << ex.config.n_minus << ','
     << ex.config.cos2_theta().str() << ',' << ex.z_plus << ',' << ex.z_minus << ','
     << ex.b3 << ',' << ex.g.m << ',' << ex.g.p << ',' << ex.g.n << ',' << ex.g.q << ','
     << gluing::eps_signed(ex.g.eps_plus, ex.g.k_plus) << ','
     << gluing::eps_signed(ex.g.eps_minus, ex.g.k_minus) << ',' << ex.pi1_order << ','
     << ex.nu_bar.str() << ',' << ex.nu_mod48 << ',' << (ex.nullbordant ? 1 : 0);
  return os.str();
}

void write_csv(std::ostream& os, const std::vector<matching::EtcsExample>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& ex : rows) os << to_csv_row(ex) << '\n';
}

std::string to_json(const std::vector<matching::EtcsExample>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& ex : rows) {
    nlohmann::json row;
    row["id"] = ex.row_id;
    row["k_plus"] = ex.g.k_plus;
    row["k_minus"] = ex.g.k_minus;
    row["gram"] = {ex.config.n_plus, ex.config.h, ex.config.n_minus};
    row["cos2_theta"] = ex.config.cos2_theta().str();
    row["z_plus"] = ex.z_plus;
    row["z_minus"] = ex.z_minus;
    row["b3"] = ex.b3;
    row["matrix"] = {ex.g.m, ex.g.p, ex.g.n, ex.g.q};
    row["eps_plus"] = gluing::eps_signed(ex.g.eps_plus, ex.g.k_plus);
    row["eps_minus"] = gluing::eps_signed(ex.g.eps_minus, ex.g.k_minus);
    row["pi1"] = ex.pi1_order;
    row["nu_bar"] = ex.nu_bar.str();
    row["nu_mod48"] = ex.nu_mod48;
    row["nullbordant"] = ex.nullbordant;
    arr.push_back(std::move(row));
  }
  return arr.dump(2);
}

}  // namespace etcs::table
