#pragma once

#include <string>
#include <vector>

namespace hadex::cli {

struct SelftestCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Golden checks for the worked examples: the Hamming/Fourier extension,
/// identical columns, the Vandermonde and stairstep families, the
/// three-column single-varying-row matrix and the small mixture fixtures.
std::vector<SelftestCheck> run_selftest();

}  // namespace hadex::cli
