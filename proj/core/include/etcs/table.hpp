#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "etcs/matching.hpp"

namespace etcs::table {

// Versioned CSV header for the example table; exact values are serialized as
// num/den strings, never floats.
extern const char* kCsvHeader;

std::string to_csv_row(const matching::EtcsExample& ex);
void write_csv(std::ostream& os, const std::vector<matching::EtcsExample>& rows);
std::string to_json(const std::vector<matching::EtcsExample>& rows);

}  // namespace etcs::table
