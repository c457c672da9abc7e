#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intspec/rational.hpp"
#include "intspec/spectrum.hpp"

namespace intspec {

// Published (label, rho) rows for PSL(2, q), q in {3,4,5,7,8,9,11,13,17,19}.
std::optional<std::vector<std::pair<std::string, Rational>>> reference_table(std::uint32_t q);

struct ReferenceComparison {
  bool rows_match = false;       // same multiset of (label, rho) over certified rows
  std::size_t uncertified = 0;   // rows without a certificate
  std::size_t bounded_ok = 0;    // uncertified rows whose [rho, rho_upper] contains a missing entry
  std::vector<std::string> mismatches;
};

// Rows are matched as a multiset keyed by label; duplicate labels are compared as
// sorted value lists.
ReferenceComparison compare_with_reference(const SpectrumReport& s, std::uint32_t q);

} // namespace intspec
