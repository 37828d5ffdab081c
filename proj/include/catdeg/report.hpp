#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "catdeg/monoid.hpp"

namespace catdeg {

/// One scanned integer: the data behind a catenary-degree scatter plot.
/// Non-members carry zero factorizations and catenary 0.
struct ScanRecord {
  std::int64_t element = 0;
  std::int64_t catenary = 0;
  std::int64_t num_factorizations = 0;
  bool is_betti = false;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

/// One record per integer in [0, window].
std::vector<ScanRecord> scan_records(const NumericalMonoid& s, std::int64_t window);

/// Header `element,catenary,num_factorizations,is_betti`, LF endings,
/// booleans as 0/1.
void write_csv(std::ostream& out, std::span<const ScanRecord> rows);

/// Standalone SVG scatter plot (x = element, y = catenary) on an 800x400
/// viewBox. Members are drawn as filled circles, Betti elements in a second
/// color, non-members as light hollow circles. No external resources.
void write_svg(std::ostream& out, std::span<const ScanRecord> rows, const std::string& title);

}  // namespace catdeg
