// Command-line front end: compute | series | charpoly | crosscheck | bench
// over the Fubini, Bernoulli, Cauchy and Euler sequence families, with
// exact plain, JSON or CSV output.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fubini/crosscheck.hpp"
#include "fubini/hessenberg.hpp"
#include "fubini/output.hpp"
#include "fubini/series.hpp"

namespace {

using nlohmann::ordered_json;
using namespace fubini;

struct CommonOpts {
  std::string family;
  std::optional<int> m;
  std::optional<int> k;
  std::string format = "plain";
  std::string out;
  bool force = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_force) {
  cmd->add_option("--family", o.family, "family tag")->required();
  cmd->add_option("--m", o.m, "block-size bound for the restricted/associated and modified families");
  cmd->add_option("--k", o.k, "power for gen_fubini");
  cmd->add_option("--format", o.format, "plain, json or csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  cmd->add_option("--out", o.out, "write output to FILE instead of stdout");
  if (with_force) cmd->add_flag("--force", o.force, "override the method n caps");
}

FamilyId family_of(const CommonOpts& o) { return FamilyId::parse(o.family, o.m, o.k); }

// Output sink: stdout or --out FILE.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<Method> parse_methods(const std::string& csv, const FamilyId& family) {
  if (csv.empty()) return methods_for(family);
  std::vector<Method> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto m = method_from_name(item);
    if (!m) throw std::invalid_argument("unknown method: " + item);
    out.push_back(*m);
  }
  return out;
}

ordered_json family_header(const FamilyId& family) {
  ordered_json j;
  j["family"] = family.name();
  if (family.has_m()) j["m"] = family.m;
  if (family.has_k()) j["k"] = family.k;
  return j;
}

int cmd_compute(const CommonOpts& o, int n, std::string method_str) {
  FamilyId family = family_of(o);
  if (method_str.empty())
    method_str = method_name(methods_for(family).front());
  auto method = method_from_name(method_str);
  if (!method) throw std::invalid_argument("unknown method: " + method_str);
  MethodLimits limits = o.force ? MethodLimits::unlimited() : MethodLimits{};
  if (n > limits.cap(*method))
    throw std::invalid_argument("n " + std::to_string(n) + " exceeds the " + method_str + " cap " +
                                std::to_string(limits.cap(*method)) + " (use --force to override)");
  ExactRational value = compute_number(family, n, *method);
  Sink sink(o.out);
  if (o.format == "json") {
    ordered_json j = family_header(family);
    j["n"] = n;
    j["method"] = method_str;
    j["value"] = value_json(family, value);
    sink.stream() << j.dump() << "\n";
  } else if (o.format == "csv") {
    sink.stream() << "family,m,k,n,method,value\n"
                  << family.name() << "," << (family.has_m() ? std::to_string(family.m) : "") << ","
                  << (family.has_k() ? std::to_string(family.k) : "") << "," << n << "," << method_str
                  << "," << value_plain(family, value) << "\n";
  } else {
    sink.stream() << value_plain(family, value) << "\n";
  }
  return 0;
}

int cmd_series(const CommonOpts& o, int order) {
  FamilyId family = family_of(o);
  TruncatedEGF egf = family_egf(family, order);
  Sink sink(o.out);
  if (o.format == "json") {
    ordered_json j = family_header(family);
    j["order"] = order;
    auto coeffs = ordered_json::array();
    for (int i = 0; i <= order; ++i) {
      ordered_json c;
      c["num"] = egf[i].numerator().str();
      c["den"] = egf[i].denominator().str();
      coeffs.push_back(std::move(c));
    }
    j["coefficients"] = coeffs;
    sink.stream() << j.dump() << "\n";
  } else if (o.format == "csv") {
    sink.stream() << "family,m,k,degree,coefficient\n";
    for (int i = 0; i <= order; ++i)
      sink.stream() << family.name() << "," << (family.has_m() ? std::to_string(family.m) : "") << ","
                    << (family.has_k() ? std::to_string(family.k) : "") << "," << i << "," << egf[i].str()
                    << "\n";
  } else {
    for (int i = 0; i <= order; ++i) sink.stream() << egf[i].str() << "\n";
  }
  return 0;
}

int cmd_charpoly(const CommonOpts& o, int n) {
  FamilyId family = family_of(o);
  auto p = char_poly_from_profile(profile_for(family), n);  // det(T_n - xI), ascending
  Sink sink(o.out);
  if (o.format == "json") {
    ordered_json j = family_header(family);
    j["n"] = n;
    j["convention"] = "det(T_n - xI)";
    auto coeffs = ordered_json::array();
    for (int d = n; d >= 0; --d) {
      ordered_json c;
      c["degree"] = d;
      c["num"] = p[static_cast<size_t>(d)].numerator().str();
      c["den"] = p[static_cast<size_t>(d)].denominator().str();
      coeffs.push_back(std::move(c));
    }
    j["coefficients"] = coeffs;
    sink.stream() << j.dump() << "\n";
  } else if (o.format == "csv") {
    sink.stream() << "family,m,k,degree,coefficient\n";
    for (int d = n; d >= 0; --d)
      sink.stream() << family.name() << "," << (family.has_m() ? std::to_string(family.m) : "") << ","
                    << (family.has_k() ? std::to_string(family.k) : "") << "," << d << ","
                    << p[static_cast<size_t>(d)].str() << "\n";
  } else {
    for (int d = n; d >= 0; --d)
      sink.stream() << "x^" << d << ": " << p[static_cast<size_t>(d)].str() << "\n";
  }
  return 0;
}

std::vector<FamilyId> all_families() {
  std::vector<FamilyId> fams;
  fams.push_back(FamilyId::fubini());
  for (int m = 2; m <= 4; ++m) fams.push_back(FamilyId::fubini_restricted(m));
  for (int m = 2; m <= 4; ++m) fams.push_back(FamilyId::fubini_associated(m));
  fams.push_back(FamilyId::bernoulli());
  fams.push_back(FamilyId::cauchy());
  fams.push_back(FamilyId::euler());
  for (int m = 2; m <= 4; ++m) fams.push_back(FamilyId::mod_cauchy_restricted(m));
  for (int m = 2; m <= 4; ++m) fams.push_back(FamilyId::mod_cauchy_associated(m));
  for (int m = 2; m <= 4; ++m) fams.push_back(FamilyId::mod_bernoulli_restricted(m));
  for (int m = 2; m <= 4; ++m) fams.push_back(FamilyId::mod_bernoulli_associated(m));
  fams.push_back(FamilyId::gen_fubini(2));
  fams.push_back(FamilyId::gen_fubini(3));
  return fams;
}

int cmd_crosscheck(const CommonOpts& o, int n_max, const std::string& methods_csv) {
  MethodLimits limits = o.force ? MethodLimits::unlimited() : MethodLimits{};
  std::vector<FamilyId> fams;
  if (o.family == "all") {
    fams = all_families();
  } else {
    fams.push_back(family_of(o));
  }
  Sink sink(o.out);
  bool all_pass = true;
  auto json_reports = ordered_json::array();
  if (o.format == "csv") sink.stream() << "family,m,k,n,method,value,verdict\n";
  for (const FamilyId& family : fams) {
    auto methods = parse_methods(methods_csv, family);
    CrosscheckReport report = crosscheck_family(family, n_max, methods, limits);
    all_pass = all_pass && report.pass;
    if (o.format == "json") {
      json_reports.push_back(ordered_json::parse(report_json(report)));
    } else if (o.format == "csv") {
      for (const auto& cell : report.cells)
        for (const auto& [m, v] : cell.values)
          sink.stream() << family.name() << "," << (family.has_m() ? std::to_string(family.m) : "")
                        << "," << (family.has_k() ? std::to_string(family.k) : "") << "," << cell.n
                        << "," << method_name(m) << "," << value_plain(family, v) << ","
                        << (cell.pass ? "pass" : "FAIL") << "\n";
    } else {
      sink.stream() << report_table(report) << "\n";
    }
    if (!report.pass) std::cerr << "crosscheck divergence: " << report.first_divergence << "\n";
  }
  if (o.format == "json") sink.stream() << json_reports.dump() << "\n";
  return all_pass ? 0 : 2;
}

int cmd_bench(const CommonOpts& o, int n, const std::string& methods_csv) {
  FamilyId family = family_of(o);
  MethodLimits limits = o.force ? MethodLimits::unlimited() : MethodLimits{};
  auto methods = parse_methods(methods_csv, family);
  BenchResult result = bench(family, n, methods, limits);
  Sink sink(o.out);
  std::string value = value_plain(family, result.value);
  std::string value_note =
      value.size() <= 40 ? value : ("(" + std::to_string(value.size()) + "-digit value)");
  if (o.format == "json") {
    ordered_json j = family_header(family);
    j["n"] = n;
    j["value"] = value_json(family, result.value);
    auto timings = ordered_json::array();
    for (const auto& e : result.entries) {
      ordered_json t;
      t["method"] = method_name(e.method);
      t["seconds"] = e.seconds;
      timings.push_back(std::move(t));
    }
    j["timings"] = timings;
    sink.stream() << j.dump() << "\n";
  } else if (o.format == "csv") {
    sink.stream() << "family,m,k,n,method,seconds\n";
    for (const auto& e : result.entries)
      sink.stream() << family.name() << "," << (family.has_m() ? std::to_string(family.m) : "") << ","
                    << (family.has_k() ? std::to_string(family.k) : "") << "," << n << ","
                    << method_name(e.method) << "," << e.seconds << "\n";
  } else {
    sink.stream() << "# " << family.display() << " n=" << n << " value=" << value_note << "\n";
    for (const auto& e : result.entries)
      sink.stream() << method_name(e.method) << "  " << e.seconds << " s\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation and cross-validation of Fubini-type numbers"};
  app.require_subcommand(1);

  CommonOpts compute_opts, series_opts, charpoly_opts, crosscheck_opts, bench_opts;
  int n = 0, order = 0, n_max = 16;
  std::string method_str, methods_csv;

  auto* compute = app.add_subcommand("compute", "one number by one method");
  add_common(compute, compute_opts, true);
  compute->add_option("--n", n, "sequence index")->required();
  compute->add_option("--method", method_str, "computation method");

  auto* series = app.add_subcommand("series", "generating-function coefficients c_0..c_order");
  add_common(series, series_opts, false);
  series->add_option("--order", order, "truncation order")->required();

  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of the family's n x n matrix");
  add_common(charpoly, charpoly_opts, false);
  charpoly->add_option("--n", n, "matrix size")->required();

  auto* crosscheck = app.add_subcommand("crosscheck", "run all methods and compare exactly");
  add_common(crosscheck, crosscheck_opts, true);
  crosscheck->add_option("--n-max", n_max, "check n = 0..n_max (default 16)");
  crosscheck->add_option("--methods", methods_csv, "comma-separated method subset (default: all applicable)");

  auto* bench_cmd = app.add_subcommand("bench", "time the methods at one index (values compared first)");
  add_common(bench_cmd, bench_opts, true);
  bench_cmd->add_option("--n", n, "sequence index")->required();
  bench_cmd->add_option("--methods", methods_csv, "comma-separated method subset (default: all applicable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // argument errors always exit 1
  }

  try {
    if (compute->parsed()) return cmd_compute(compute_opts, n, method_str);
    if (series->parsed()) return cmd_series(series_opts, order);
    if (charpoly->parsed()) return cmd_charpoly(charpoly_opts, n);
    if (crosscheck->parsed()) return cmd_crosscheck(crosscheck_opts, n_max, methods_csv);
    if (bench_cmd->parsed()) return cmd_bench(bench_opts, n, methods_csv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
