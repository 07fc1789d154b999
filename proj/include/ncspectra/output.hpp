#pragma once
#include "ncspectra/spectrum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ncspectra::output {

//! Flat serialization row for one energy level. Half-integers cross the
//! boundary doubled (j2 = 2j, jz2 = 2j_z); the mode not in use leaves its
//! quantum numbers absent. term is empty for product-basis rows.
struct OutputRecord {
  int n = 1;
  int l = 0;
  std::optional<int> j2;
  std::optional<int> jz2;
  std::optional<int> m;
  std::string term;
  double e0_hartree = 0.0;
  long long shift_coeff_num = 0; //!< delta_e = (num/den) theta_z at unit mass
  long long shift_coeff_den = 1;
  double delta_e_hartree = 0.0;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord to_record(const spectrum::EnergyLevel& level);

//! JSON array of records; field order fixed, absent optionals omitted.
std::string to_json(const std::vector<OutputRecord>& records);
//! Inverse of to_json (field-for-field).
std::vector<OutputRecord> from_json(const std::string& text);

//! Fixed column order with a header row:
//! n,l,j2,jz2,m,term,e0_hartree,shift_coeff_num,shift_coeff_den,delta_e_hartree
//! Absent optionals serialize as empty cells.
std::string to_csv(const std::vector<OutputRecord>& records);

//! Aligned human-readable table, same columns as the CSV.
std::string to_table(const std::vector<OutputRecord>& records);

//! Splitting-report serializations: one row per level (the untouched l=0
//! level plus each split sublevel), then the splitting line.
std::string lamb_to_json(const spectrum::LambReport& rep);
std::string lamb_to_csv(const spectrum::LambReport& rep);
std::string lamb_to_table(const spectrum::LambReport& rep);

} // namespace ncspectra::output
