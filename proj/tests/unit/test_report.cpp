#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>

#include "catdeg/report.hpp"

namespace {

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("scan records") {
  const auto s = catdeg::NumericalMonoid::create({11, 25, 29});
  const auto rows = catdeg::scan_records(s, 200);
  REQUIRE(rows.size() == 201);
  CHECK(rows[0] == catdeg::ScanRecord{0, 0, 1, false});
  CHECK(rows[1] == catdeg::ScanRecord{1, 0, 0, false});  // gap
  CHECK(rows[58].is_betti);
  CHECK(rows[58].catenary == 4);
  CHECK(rows[150].is_betti);
  CHECK(rows[175].catenary == 11);
  CHECK(rows[175].num_factorizations == 3);
  CHECK(std::count_if(rows.begin(), rows.end(), [](auto& r) { return r.is_betti; }) == 3);
}

TEST_CASE("csv layout") {
  const auto s = catdeg::NumericalMonoid::create({3, 5});
  const auto rows = catdeg::scan_records(s, 15);
  std::ostringstream out;
  catdeg::write_csv(out, rows);
  const auto text = out.str();
  CHECK(text.rfind("element,catenary,num_factorizations,is_betti\n", 0) == 0);
  CHECK(count_of(text, "\n") == 17);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.find("\n15,5,2,1\n") != std::string::npos);
  CHECK(text.find("\n7,0,0,0\n") != std::string::npos);

  std::ostringstream single;
  catdeg::write_csv(single, catdeg::scan_records(s, 0));
  CHECK(single.str() == "element,catenary,num_factorizations,is_betti\n0,0,1,0\n");
}

TEST_CASE("svg output") {
  const auto s = catdeg::NumericalMonoid::create({11, 25, 29});
  const auto rows = catdeg::scan_records(s, 300);
  std::ostringstream a;
  std::ostringstream b;
  catdeg::write_svg(a, rows, "catenary degrees of <11,25,29>");
  catdeg::write_svg(b, rows, "catenary degrees of <11,25,29>");
  const auto svg = a.str();
  CHECK(svg == b.str());
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("viewBox=\"0 0 800 400\"") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count_of(svg, "<circle") == rows.size());
  CHECK(count_of(svg, "class=\"betti\"") == 3);
  CHECK(svg.find("&lt;11,25,29&gt;") != std::string::npos);
  CHECK(svg.find("href") == std::string::npos);
  CHECK(count_of(svg, "http://") == 1);  // the xmlns only
}
