#include "catdeg/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "catdeg/error.hpp"
#include "catdeg/kernels.hpp"

namespace catdeg {

std::vector<ScanRecord> scan_records(const NumericalMonoid& s, std::int64_t window) {
  if (window < 0) throw Error(Errc::BadParameters, "window must be nonnegative");
  std::vector<ScanRecord> rows;
  rows.reserve(static_cast<std::size_t>(window) + 1);
  for (const auto& st : kernels::element_stats_parallel(s, 0, window))
    rows.push_back({st.element, st.catenary, st.num_factorizations, st.nabla_components >= 2});
  return rows;
}

void write_csv(std::ostream& out, std::span<const ScanRecord> rows) {
  out << "element,catenary,num_factorizations,is_betti\n";
  for (const auto& r : rows)
    out << r.element << ',' << r.catenary << ',' << r.num_factorizations << ','
        << (r.is_betti ? 1 : 0) << '\n';
}

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 50.0;
constexpr double kRight = 20.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 40.0;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_svg(std::ostream& out, std::span<const ScanRecord> rows, const std::string& title) {
  std::int64_t max_x = 1;
  std::int64_t max_y = 1;
  for (const auto& r : rows) {
    max_x = std::max(max_x, r.element);
    max_y = std::max(max_y, r.catenary);
  }
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](std::int64_t x) { return kLeft + plot_w * static_cast<double>(x) / max_x; };
  auto sy = [&](std::int64_t y) {
    return kHeight - kBottom - plot_h * static_cast<double>(y) / max_y;
  };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 400\" "
         "width=\"800\" height=\"400\">\n"
      << "<title>" << escape_xml(title) << "</title>\n"
      << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"400\" fill=\"white\"/>\n"
      << "<text x=\"400\" y=\"18\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\">"
      << escape_xml(title) << "</text>\n";

  // axes
  out << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(sy(0)) << "\" x2=\""
      << fixed(kWidth - kRight) << "\" y2=\"" << fixed(sy(0)) << "\"/>\n"
      << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(sy(0)) << "\" x2=\""
      << fixed(kLeft) << "\" y2=\"" << fixed(kTop) << "\"/>\n"
      << "</g>\n";

  out << "<g font-family=\"sans-serif\" font-size=\"10\">\n";
  constexpr int kTicks = 5;
  for (int t = 0; t <= kTicks; ++t) {
    const std::int64_t xv = max_x * t / kTicks;
    out << "<text x=\"" << fixed(sx(xv)) << "\" y=\"" << fixed(sy(0) + 14)
        << "\" text-anchor=\"middle\">" << xv << "</text>\n";
  }
  for (std::int64_t yv = 0; yv <= max_y; yv += std::max<std::int64_t>(1, max_y / 8)) {
    out << "<text x=\"" << fixed(kLeft - 6) << "\" y=\"" << fixed(sy(yv) + 3)
        << "\" text-anchor=\"end\">" << yv << "</text>\n";
  }
  out << "<text x=\"" << fixed(kLeft + plot_w / 2) << "\" y=\"" << fixed(kHeight - 6)
      << "\" text-anchor=\"middle\">element</text>\n"
      << "<text x=\"14\" y=\"" << fixed(kTop + plot_h / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " << fixed(kTop + plot_h / 2)
      << ")\">catenary degree</text>\n"
      << "</g>\n";

  out << "<g>\n";
  for (const auto& r : rows) {
    out << "<circle cx=\"" << fixed(sx(r.element)) << "\" cy=\"" << fixed(sy(r.catenary))
        << "\" r=\"2.5\" ";
    if (r.num_factorizations == 0)
      out << "class=\"gap\" fill=\"none\" stroke=\"#cccccc\"";
    else if (r.is_betti)
      out << "class=\"betti\" fill=\"#d62728\"";
    else
      out << "class=\"element\" fill=\"#1f77b4\"";
    out << "/>\n";
  }
  out << "</g>\n</svg>\n";
}

}  // namespace catdeg
