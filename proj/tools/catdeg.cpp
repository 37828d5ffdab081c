// catdeg: factorization invariants of numerical monoids and cyclic block monoids.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "catdeg/blockmonoid.hpp"
#include "catdeg/catenary.hpp"
#include "catdeg/error.hpp"
#include "catdeg/factorization.hpp"
#include "catdeg/families.hpp"
#include "catdeg/kernels.hpp"
#include "catdeg/monoid.hpp"
#include "catdeg/parallel.hpp"
#include "catdeg/report.hpp"
#include "catdeg/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;
using catdeg::NumericalMonoid;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

Json to_json(const catdeg::Factorization& a) { return Json(a.counts); }

Json to_json(std::span<const catdeg::Factorization> z) {
  Json arr = Json::array();
  for (const auto& a : z) arr.push_back(to_json(a));
  return arr;
}

Json betti_json(const catdeg::BettiReport& report) {
  Json out;
  out["betti"] = report.elements();
  Json records = Json::array();
  for (const auto& rec : report.betti) {
    Json r;
    r["element"] = rec.element;
    r["catenary"] = rec.catenary;
    r["components"] = rec.components;
    r["factorizations"] = to_json(rec.factorizations.items);
    records.push_back(std::move(r));
  }
  out["records"] = std::move(records);
  out["search_bound"] = report.search_bound;
  return out;
}

std::string join(const std::vector<std::int64_t>& v, const char* sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

std::string braces(const std::vector<std::int64_t>& v) { return "{" + join(v, ",") + "}"; }

std::string paren(const catdeg::Factorization& a) { return "(" + join(a.counts, ",") + ")"; }

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// Splits "g1 ... gk n" into generators and the trailing element.
std::pair<std::vector<std::int64_t>, std::int64_t> split_element(
    const std::vector<std::int64_t>& args) {
  if (args.size() < 2)
    throw CLI::ValidationError("arguments", "expected generators followed by an element");
  return {{args.begin(), args.end() - 1}, args.back()};
}

int cmd_info(const std::vector<std::int64_t>& gens, bool json) {
  const auto s = NumericalMonoid::create(gens);
  const auto report = catdeg::betti_elements(s);
  if (json) {
    Json out;
    out["generators"] = s.generators();
    out["frobenius"] = s.frobenius();
    out["apery"] = s.apery();
    out["betti"] = report.elements();
    out["betti_catenary"] = report.catenary_degrees();
    out["search_bound"] = report.search_bound;
    emit(out);
  } else {
    std::cout << "generators: " << join(s.generators()) << '\n'
              << "frobenius: " << s.frobenius() << '\n'
              << "apery: " << join(s.apery()) << '\n'
              << "betti: " << join(report.elements()) << '\n'
              << "betti catenary: " << join(report.catenary_degrees()) << '\n';
  }
  return kExitOk;
}

int cmd_catenary(const std::vector<std::int64_t>& args, bool json) {
  const auto [gens, n] = split_element(args);
  const auto s = NumericalMonoid::create(gens);
  const auto z = catdeg::factorizations(s, n);
  if (z.empty())
    throw catdeg::Error(catdeg::Errc::NotAnElement, std::to_string(n) + " is not in the monoid");
  std::int64_t max_d = 0;
  std::int64_t min_d = 0;
  bool first = true;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      const auto d = catdeg::distance(z.items[i], z.items[j]);
      max_d = std::max(max_d, d);
      min_d = first ? d : std::min(min_d, d);
      first = false;
    }
  const auto c = catdeg::catenary_degree(z);
  if (json) {
    Json out;
    out["element"] = n;
    out["factorizations"] = to_json(z.items);
    out["max_distance"] = max_d;
    out["min_distance"] = min_d;
    out["catenary"] = c;
    emit(out);
  } else {
    std::cout << "element: " << n << '\n' << "factorizations: " << z.size() << '\n';
    for (const auto& a : z.items) std::cout << "  " << paren(a) << '\n';
    std::cout << "distance range: " << min_d << ".." << max_d << '\n'
              << "catenary: " << c << '\n';
  }
  return kExitOk;
}

int cmd_factorize(const std::vector<std::int64_t>& args, bool json) {
  const auto [gens, n] = split_element(args);
  const auto s = NumericalMonoid::create(gens);
  const auto z = catdeg::factorizations(s, n);
  if (json) {
    Json out;
    out["element"] = n;
    out["factorizations"] = to_json(z.items);
    Json lengths = Json::array();
    for (const auto& a : z.items) lengths.push_back(catdeg::length(a));
    out["lengths"] = std::move(lengths);
    emit(out);
  } else {
    std::cout << "element: " << n << '\n' << "factorizations: " << z.size() << '\n';
    for (const auto& a : z.items)
      std::cout << "  " << paren(a) << "  length " << catdeg::length(a) << '\n';
  }
  return kExitOk;
}

int cmd_delta(const std::vector<std::int64_t>& args, std::int64_t window, bool json) {
  if (window >= 0) {
    const auto s = NumericalMonoid::create(args);
    const auto ds = catdeg::kernels::delta_union_parallel(s, window);
    if (json) {
      Json out;
      out["window"] = window;
      out["delta_set"] = ds;
      emit(out);
    } else {
      std::cout << "delta set on [0, " << window << "]: " << braces(ds) << '\n';
    }
    return kExitOk;
  }
  const auto [gens, n] = split_element(args);
  const auto s = NumericalMonoid::create(gens);
  const auto z = catdeg::factorizations(s, n);
  const auto ls = catdeg::length_set(z.items);
  const auto ds = catdeg::delta_set(z.items);
  if (json) {
    Json out;
    out["element"] = n;
    out["length_set"] = ls;
    out["delta_set"] = ds;
    emit(out);
  } else {
    std::cout << "length set: " << braces(ls) << '\n' << "delta set: " << braces(ds) << '\n';
  }
  return kExitOk;
}

int cmd_betti(const std::vector<std::int64_t>& gens, bool json) {
  const auto s = NumericalMonoid::create(gens);
  const auto report = catdeg::betti_elements(s);
  if (json) {
    emit(betti_json(report));
  } else {
    std::cout << "search bound: " << report.search_bound << '\n';
    for (const auto& rec : report.betti) {
      std::cout << rec.element << ": catenary " << rec.catenary << ", " << rec.components
                << " components,";
      for (const auto& a : rec.factorizations.items) std::cout << ' ' << paren(a);
      std::cout << '\n';
    }
  }
  return kExitOk;
}

int cmd_scan(const std::vector<std::int64_t>& gens, std::int64_t window,
             const std::string& csv_path, const std::string& svg_path, bool json) {
  const auto s = NumericalMonoid::create(gens);
  if (window < 0) window = catdeg::default_scan_window(s);
  const auto rows = catdeg::scan_records(s, window);
  const auto report = catdeg::betti_elements(s);

  std::set<std::int64_t> values;
  std::size_t sandwich_checked = 0;
  std::size_t sandwich_passed = 0;
  for (const auto& r : rows) {
    if (r.num_factorizations == 0) continue;
    values.insert(r.catenary);
    if (r.catenary == 0) continue;
    ++sandwich_checked;
    std::int64_t lo = -1;
    std::int64_t hi = -1;
    for (const auto& b : report.betti) {
      if (!s.contains(r.element - b.element)) continue;
      lo = lo < 0 ? b.catenary : std::min(lo, b.catenary);
      hi = std::max(hi, b.catenary);
    }
    if (lo >= 0 && lo <= r.catenary && r.catenary <= hi) ++sandwich_passed;
  }
  const std::vector<std::int64_t> cset(values.begin(), values.end());
  const std::int64_t min_nonzero = cset.size() > 1 ? cset[1] : 0;
  const std::int64_t max_c = cset.empty() ? 0 : cset.back();

  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw CLI::ValidationError("--csv", "cannot open " + csv_path);
    catdeg::write_csv(out, rows);
  }
  if (!svg_path.empty()) {
    std::ofstream out(svg_path, std::ios::binary);
    if (!out) throw CLI::ValidationError("--svg", "cannot open " + svg_path);
    std::ostringstream title;
    title << "catenary degrees of <" << join(s.generators(), ",") << ">";
    catdeg::write_svg(out, rows, title.str());
  }

  if (json) {
    Json out;
    out["generators"] = s.generators();
    out["window"] = window;
    out["rows"] = rows.size();
    out["cset"] = cset;
    out["min_nonzero"] = min_nonzero;
    out["max"] = max_c;
    out["betti"] = report.elements();
    out["sandwich_checked"] = sandwich_checked;
    out["sandwich_passed"] = sandwich_passed;
    emit(out);
  } else {
    std::cout << "window: [0, " << window << "]\n"
              << "catenary set: " << braces(cset) << '\n'
              << "min nonzero: " << min_nonzero << "  max: " << max_c << '\n'
              << "betti: " << join(report.elements()) << '\n'
              << "sandwich: " << sandwich_passed << "/" << sandwich_checked << " passed\n";
  }
  return kExitOk;
}

int cmd_block(int n, int witness, std::int64_t sample, bool json) {
  if (witness >= 0) {
    const auto table = catdeg::atoms(n);
    const auto a = catdeg::theorem_fullset_witness(n, witness);
    const auto z = catdeg::factorizations_block(table, a);
    const auto c = catdeg::catenary_degree(z.items);
    // factorizations listed as multisets of atoms (atom multiplicity vectors)
    Json facts = Json::array();
    for (const auto& f : z.items) {
      Json product = Json::array();
      for (std::size_t i = 0; i < f.counts.size(); ++i)
        for (std::int64_t r = 0; r < f.counts[i]; ++r)
          product.push_back(table.atoms[i].multiplicity());
      facts.push_back(std::move(product));
    }
    if (json) {
      Json out;
      out["order"] = n;
      out["j"] = witness;
      out["sequence"] = a.multiplicity();
      out["factorizations"] = std::move(facts);
      out["num_factorizations"] = z.items.size();
      out["catenary"] = c;
      emit(out);
    } else {
      std::cout << "order: " << n << "  j: " << witness << '\n'
                << "sequence multiplicities: " << join(a.multiplicity()) << '\n'
                << "factorizations: " << z.items.size() << '\n'
                << "catenary: " << c << '\n';
    }
    return kExitOk;
  }
  const std::int64_t length = sample >= 0 ? sample : 2 * static_cast<std::int64_t>(n);
  const auto values = catdeg::catenary_set_sample(n, length);
  if (json) {
    Json out;
    out["order"] = n;
    out["max_length"] = length;
    out["cset"] = values;
    emit(out);
  } else {
    std::cout << "catenary degrees over Z_" << n << ", length <= " << length << ": "
              << braces(values) << '\n';
  }
  return kExitOk;
}

int cmd_family(const std::string& kind, const std::vector<std::int64_t>& params, bool json) {
  catdeg::FamilyPrediction p = [&] {
    if (kind == "arithmetic") {
      if (params.size() != 2) throw CLI::ValidationError("family", "arithmetic takes k c");
      return catdeg::arithmetic_family(params[0], params[1]);
    }
    if (kind == "largecat") {
      if (params.size() != 1) throw CLI::ValidationError("family", "largecat takes k");
      return catdeg::largecat_family(params[0]);
    }
    return catdeg::unique_betti_family(params);
  }();
  const auto report = catdeg::betti_elements(p.monoid);
  const auto scan = catdeg::catenary_set_scan(p.monoid, catdeg::prediction_window(p));

  bool ok = true;
  if (!p.predicted_betti.empty()) {
    std::vector<std::int64_t> predicted;
    for (const auto& b : p.predicted_betti) predicted.push_back(b.element);
    ok = ok && predicted == report.elements();
  }
  for (std::int64_t m : p.predicted_cset_members)
    ok = ok && std::binary_search(scan.cset.begin(), scan.cset.end(), m);
  if (p.cset_exact) ok = ok && scan.cset == p.predicted_cset_members;
  for (const auto& sp : p.special_elements) {
    const auto z = catdeg::factorizations(p.monoid, sp.element);
    ok = ok && static_cast<std::int64_t>(z.size()) == sp.num_factorizations &&
         catdeg::catenary_degree(z) == sp.catenary;
  }

  if (json) {
    Json out;
    out["generators"] = p.monoid.generators();
    Json pb = Json::array();
    for (const auto& b : p.predicted_betti) pb.push_back({b.element, b.catenary});
    out["predicted_betti"] = std::move(pb);
    out["predicted_cset"] = p.predicted_cset_members;
    out["cset_exact"] = p.cset_exact;
    Json sp = Json::array();
    for (const auto& e : p.special_elements)
      sp.push_back({{"element", e.element}, {"catenary", e.catenary},
                    {"num_factorizations", e.num_factorizations}});
    out["special_elements"] = std::move(sp);
    out["betti"] = report.elements();
    out["betti_catenary"] = report.catenary_degrees();
    out["cset"] = scan.cset;
    out["matches"] = ok;
    emit(out);
  } else {
    std::cout << "generators: " << join(p.monoid.generators()) << '\n'
              << "predicted catenary set " << (p.cset_exact ? "= " : "contains ")
              << braces(p.predicted_cset_members) << '\n'
              << "observed catenary set: " << braces(scan.cset) << '\n'
              << "betti: " << join(report.elements()) << '\n'
              << "prediction " << (ok ? "holds" : "FAILS") << '\n';
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(std::int64_t k_max, bool json) {
  catdeg::verify::SuiteOptions options;
  options.k_max = k_max;
  const auto results = catdeg::verify::run_default_suite(options);
  bool all = true;
  Json arr = Json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    if (json) {
      arr.push_back({{"name", r.name}, {"claim", r.claim}, {"passed", r.passed},
                     {"detail", r.detail}});
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " -- " << r.claim << " ["
                << r.detail << "]\n";
    }
  }
  if (json) emit({{"passed", all}, {"checks", std::move(arr)}});
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  catdeg::configure_threads_from_env();

  CLI::App app{"Factorization invariants of numerical and block monoids"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit machine-readable JSON");

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Emit JSON"); };

  std::vector<std::int64_t> numbers;
  std::int64_t window = -1;
  std::string csv_path;
  std::string svg_path;
  int order = 0;
  int witness = -1;
  std::int64_t sample = -1;
  std::string kind;
  std::string suite = "paper";
  std::int64_t k_max = 8;

  auto* info = app.add_subcommand("info", "Generators, Frobenius number, Apery set, Betti elements");
  info->add_option("generators", numbers)->required();
  add_json(info);

  auto* catenary = app.add_subcommand("catenary", "Catenary degree of one element");
  catenary->add_option("args", numbers, "generators then element")->required();
  add_json(catenary);

  auto* factorize = app.add_subcommand("factorize", "Factorizations of one element");
  factorize->add_option("args", numbers, "generators then element")->required();
  add_json(factorize);

  auto* delta = app.add_subcommand("delta", "Length and delta sets of an element or window");
  delta->add_option("args", numbers, "generators then element (or generators with --to)")
      ->required();
  delta->add_option("--to", window, "Union of delta sets over [0, W]")->check(CLI::NonNegativeNumber);
  add_json(delta);

  auto* betti = app.add_subcommand("betti", "Betti elements with their catenary degrees");
  betti->add_option("generators", numbers)->required();
  add_json(betti);

  auto* scan = app.add_subcommand("scan", "Catenary degrees of every element up to a window");
  scan->add_option("generators", numbers)->required();
  scan->add_option("--to", window, "Last element scanned (default F + 2 n_k + 200)")
      ->check(CLI::NonNegativeNumber);
  scan->add_option("--csv", csv_path, "Write rows as CSV");
  scan->add_option("--svg", svg_path, "Write a scatter plot as SVG");
  add_json(scan);

  auto* block = app.add_subcommand("block", "Block monoid of the cyclic group Z_n");
  block->add_option("n", order, "group order")->required();
  auto* wopt = block->add_option("--witness", witness, "Witness sequence with catenary degree j");
  auto* sopt = block->add_option("--sample", sample, "Catenary set over sequences of length <= L");
  wopt->excludes(sopt);
  add_json(block);

  auto* family = app.add_subcommand("family", "Explicit monoid families and their predictions");
  family->add_option("kind", kind)->required()->check(
      CLI::IsMember({"arithmetic", "largecat", "unique"}));
  family->add_option("params", numbers, "k c | k | primes...")->required();
  add_json(family);

  auto* verify = app.add_subcommand("verify", "Run the theorem-verification harness");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"paper"}));
  verify->add_option("--k-max", k_max, "Largest k for the large-catenary family")
      ->check(CLI::Range(3, 40));
  add_json(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*info) return cmd_info(numbers, json);
    if (*catenary) return cmd_catenary(numbers, json);
    if (*factorize) return cmd_factorize(numbers, json);
    if (*delta) return cmd_delta(numbers, window, json);
    if (*betti) return cmd_betti(numbers, json);
    if (*scan) return cmd_scan(numbers, window, csv_path, svg_path, json);
    if (*block) return cmd_block(order, witness, sample, json);
    if (*family) return cmd_family(kind, numbers, json);
    if (*verify) return cmd_verify(k_max, json);
  } catch (const catdeg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
