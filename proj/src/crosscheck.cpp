#include "fubini/crosscheck.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "fubini/genfubini.hpp"
#include "fubini/hessenberg.hpp"
#include "fubini/kernel.hpp"
#include "fubini/output.hpp"
#include "fubini/series.hpp"
#include "fubini/trudi.hpp"

namespace fubini {

std::string method_name(Method m) {
  switch (m) {
    case Method::definition: return "definition";
    case Method::recurrence: return "recurrence";
    case Method::binomial_sum: return "binomial_sum";
    case Method::dyadic_series: return "dyadic_series";
    case Method::egf: return "egf";
    case Method::determinant: return "determinant";
    case Method::determinant_oracle: return "determinant_oracle";
    case Method::trudi: return "trudi";
    case Method::convolution: return "convolution";
  }
  return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
  for (Method m : {Method::definition, Method::recurrence, Method::binomial_sum,
                   Method::dyadic_series, Method::egf, Method::determinant,
                   Method::determinant_oracle, Method::trudi, Method::convolution})
    if (method_name(m) == name) return m;
  return std::nullopt;
}

std::vector<Method> methods_for(const FamilyId& family) {
  switch (family.tag) {
    case FamilyTag::fubini:
      return {Method::definition, Method::recurrence, Method::binomial_sum, Method::dyadic_series,
              Method::egf, Method::determinant, Method::determinant_oracle, Method::trudi};
    case FamilyTag::fubini_restricted:
    case FamilyTag::fubini_associated:
      return {Method::definition, Method::recurrence, Method::egf, Method::determinant,
              Method::determinant_oracle, Method::trudi};
    case FamilyTag::bernoulli:
    case FamilyTag::cauchy:
    case FamilyTag::euler:
      return {Method::recurrence, Method::egf, Method::determinant, Method::determinant_oracle,
              Method::trudi};
    case FamilyTag::mod_cauchy_restricted:
    case FamilyTag::mod_cauchy_associated:
    case FamilyTag::mod_bernoulli_restricted:
    case FamilyTag::mod_bernoulli_associated:
      return {Method::egf, Method::determinant, Method::determinant_oracle, Method::trudi};
    case FamilyTag::gen_fubini:
      return {Method::egf, Method::convolution, Method::determinant, Method::determinant_oracle};
  }
  return {};
}

int MethodLimits::cap(Method m) const {
  switch (m) {
    case Method::definition: return definition;
    case Method::recurrence: return recurrence;
    case Method::binomial_sum: return binomial_sum;
    case Method::dyadic_series: return dyadic_series;
    case Method::egf: return egf;
    case Method::determinant: return determinant;
    case Method::determinant_oracle: return determinant_oracle;
    case Method::trudi: return trudi;
    case Method::convolution: return convolution;
  }
  return 0;
}

MethodLimits MethodLimits::unlimited() {
  MethodLimits l;
  l.definition = l.recurrence = l.binomial_sum = l.dyadic_series = l.egf = l.determinant =
      l.determinant_oracle = l.trudi = l.convolution = l.brute_minor = 1 << 30;
  return l;
}

namespace {

bool method_applies(const FamilyId& family, Method m) {
  for (Method have : methods_for(family))
    if (have == m) return true;
  return false;
}

ExactRational oracle_determinant(const FamilyId& family, int n) {
  if (family.tag == FamilyTag::gen_fubini) {
    auto matrix = toeplitz_hessenberg(profile_for(FamilyId::fubini()), n + family.k - 1);
    return char_poly(matrix)[static_cast<size_t>(family.k - 1)].abs();
  }
  int size = n;
  if (family.tag == FamilyTag::euler) {
    if (n % 2 != 0) return 0;
    size = n / 2;
  }
  auto matrix = toeplitz_hessenberg(profile_for(family), size);
  return apply_prefactor(family, n, det_fraction_free(matrix));
}

}  // namespace

ExactRational compute_number(const FamilyId& family, int n, Method method) {
  if (!method_applies(family, method))
    throw std::invalid_argument("method " + method_name(method) + " is not available for " + family.display());
  switch (method) {
    case Method::definition:
      switch (family.tag) {
        case FamilyTag::fubini: return ExactRational(fubini_def(n));
        case FamilyTag::fubini_restricted: return ExactRational(restricted_fubini_def(n, family.m));
        default: return ExactRational(associated_fubini_def(n, family.m));
      }
    case Method::recurrence:
      switch (family.tag) {
        case FamilyTag::fubini: return ExactRational(fubini_rec(n));
        case FamilyTag::fubini_restricted: return ExactRational(restricted_fubini_rec(n, family.m));
        case FamilyTag::fubini_associated: return ExactRational(associated_fubini_rec(n, family.m));
        case FamilyTag::bernoulli: return bernoulli_rec(n);
        case FamilyTag::cauchy: return cauchy_rec(n);
        default: return euler_rec(n);
      }
    case Method::binomial_sum: return ExactRational(fubini_binomial_sum(n));
    case Method::dyadic_series: return ExactRational(fubini_dyadic_series(n));
    case Method::egf: return number_from_egf(family, n);
    case Method::determinant: return number_from_determinant(family, n);
    case Method::determinant_oracle: return oracle_determinant(family, n);
    case Method::trudi: return number_via_trudi(family, n);
    case Method::convolution:
      return gen_fubini_via_convolution(family.k, n);
  }
  throw std::logic_error("compute_number: unreachable");
}

const std::vector<KnownValue>& known_values() {
  static const std::vector<KnownValue> table = [] {
    std::vector<KnownValue> kv;
    auto add = [&kv](FamilyId f, int n, const char* value, const char* source) {
      kv.push_back(KnownValue{f, n, ExactRational(std::string(value)), source});
    };
    // Ordered Bell numbers, OEIS A000670.
    {
      const char* fub[] = {"1", "1", "3", "13", "75", "541", "4683", "47293", "545835", "7087261", "102247563"};
      for (int n = 0; n <= 10; ++n) add(FamilyId::fubini(), n, fub[n], "OEIS A000670");
    }
    // Series expansion of 1/(1 - t - t^2/2 - t^3/6): coefficients times n!.
    {
      const char* r3[] = {"1", "1", "3", "13", "74", "530", "4550", "45570", "521640"};
      for (int n = 0; n <= 8; ++n)
        add(FamilyId::fubini_restricted(3), n, r3[n], "series expansion of 1/(1-t-t^2/2-t^3/6)");
    }
    // Series expansion of 1/(1 - (t^3/6 + t^4/24 + ...)): coefficients times n!.
    {
      const struct { int n; const char* v; } a3[] = {
          {0, "1"}, {1, "0"}, {2, "0"}, {3, "1"}, {4, "1"}, {5, "1"}, {6, "21"}, {8, "183"}, {9, "2101"}};
      for (auto& e : a3)
        add(FamilyId::fubini_associated(3), e.n, e.v, "series expansion of 1/(1-(t^3/6+t^4/24+...))");
    }
    // Classical Bernoulli numbers (defining recurrence, hand-checked).
    {
      const struct { int n; const char* v; } b[] = {
          {0, "1"}, {1, "-1/2"}, {2, "1/6"}, {3, "0"}, {4, "-1/30"}, {5, "0"}, {6, "1/42"},
          {8, "-1/30"}, {10, "5/66"}, {12, "-691/2730"}};
      for (auto& e : b) add(FamilyId::bernoulli(), e.n, e.v, "classical value, sum C(n+1,m) B_m = 0");
    }
    // Classical Cauchy numbers (defining recurrence, hand-checked to n = 5).
    {
      const struct { int n; const char* v; } c[] = {
          {0, "1"}, {1, "1/2"}, {2, "-1/6"}, {3, "1/4"}, {4, "-19/30"}, {5, "9/4"}};
      for (auto& e : c) add(FamilyId::cauchy(), e.n, e.v, "classical value, convolution with ln(1+t)/t");
    }
    // Classical Euler (secant) numbers, hand-checked via sum C(2n,2m) E_2m = 0.
    {
      const struct { int n; const char* v; } e10[] = {
          {0, "1"}, {1, "0"}, {2, "-1"}, {3, "0"}, {4, "5"}, {6, "-61"}, {8, "1385"}, {10, "-50521"}};
      for (auto& e : e10) add(FamilyId::euler(), e.n, e.v, "classical value, sum C(2n,2m) E_2m = 0");
    }
    // Powers of the Fubini generating function.
    {
      const char* k2[] = {"1", "2", "4", "22/3", "77/6", "653/30", "6497/180", "74141/1260"};
      for (int j = 0; j <= 7; ++j) add(FamilyId::gen_fubini(2), j, k2[j], "series expansion of (2-e^t)^-2");
      const char* k3[] = {"1", "3", "15/2", "33/2", "269/8", "2601/40", "5809/48"};
      for (int j = 0; j <= 6; ++j) add(FamilyId::gen_fubini(3), j, k3[j], "series expansion of (2-e^t)^-3");
    }
    // Hand recurrence: alpha_3 = alpha_2/2 - alpha_1/3 with alpha_1 = 1/2, alpha_2 = -1/12.
    add(FamilyId::mod_cauchy_restricted(3), 3, "-5/4", "hand recurrence for t/(t - t^2/2 + t^3/3)");
    // Ordered set partitions of a 4-set with blocks of size <= 2: 3*2! + 6*3! + 4!.
    add(FamilyId::fubini_restricted(2), 4, "66", "direct enumeration of ordered partitions");
    return kv;
  }();
  return table;
}

std::optional<ExactRational> known_value_for(const FamilyId& family, int n) {
  for (const auto& kv : known_values())
    if (kv.family == family && kv.n == n) return kv.value;
  return std::nullopt;
}

CrosscheckReport crosscheck_family(const FamilyId& family, int n_max,
                                   const std::vector<Method>& methods,
                                   const MethodLimits& limits) {
  if (n_max < 0) throw std::invalid_argument("crosscheck_family: n_max must be >= 0");
  if (methods.empty()) throw std::invalid_argument("crosscheck_family: no methods requested");
  const auto available = methods_for(family);
  for (Method want : methods)
    if (std::find(available.begin(), available.end(), want) == available.end())
      throw std::invalid_argument("crosscheck_family: method " + method_name(want) +
                                  " is not available for " + family.display());
  // Canonical order, duplicates collapsed.
  std::vector<Method> ordered;
  for (Method m : available)
    if (std::find(methods.begin(), methods.end(), m) != methods.end()) ordered.push_back(m);
  for (Method m : ordered)
    if (n_max > limits.cap(m))
      throw std::invalid_argument("crosscheck_family: n_max " + std::to_string(n_max) + " exceeds the " +
                                  method_name(m) + " cap " + std::to_string(limits.cap(m)));

  CrosscheckReport report;
  report.family = family;
  report.n_max = n_max;
  report.methods = ordered;
  report.pass = true;
  for (int n = 0; n <= n_max; ++n) {
    CrosscheckCell cell;
    cell.n = n;
    for (Method m : ordered) cell.values.emplace_back(m, compute_number(family, n, m));
    cell.known = known_value_for(family, n);
    cell.pass = true;
    const ExactRational& first = cell.values.front().second;
    for (const auto& [m, v] : cell.values) {
      if (v != first) {
        cell.pass = false;
        if (report.first_divergence.empty()) {
          ExactRational diff = v - first;
          report.first_divergence = family.display() + " n=" + std::to_string(n) + ": " +
                                    method_name(cell.values.front().first) + "=" + first.str() + " vs " +
                                    method_name(m) + "=" + v.str() + " (difference " + diff.str() + ")";
        }
      }
    }
    if (cell.pass && cell.known && *cell.known != first) {
      cell.pass = false;
      if (report.first_divergence.empty()) {
        ExactRational diff = first - *cell.known;
        report.first_divergence = family.display() + " n=" + std::to_string(n) + ": computed " + first.str() +
                                  " vs known " + cell.known->str() + " (difference " + diff.str() + ")";
      }
    }
    report.pass = report.pass && cell.pass;
    report.cells.push_back(std::move(cell));
  }
  return report;
}

std::string report_json(const CrosscheckReport& report) {
  nlohmann::ordered_json j;
  j["family"] = report.family.name();
  if (report.family.has_m()) j["m"] = report.family.m;
  if (report.family.has_k()) j["k"] = report.family.k;
  j["n_max"] = report.n_max;
  auto methods = nlohmann::ordered_json::array();
  for (Method m : report.methods) methods.push_back(method_name(m));
  j["methods"] = methods;
  auto cells = nlohmann::ordered_json::array();
  for (const auto& cell : report.cells) {
    nlohmann::ordered_json c;
    c["n"] = cell.n;
    nlohmann::ordered_json values;
    for (const auto& [m, v] : cell.values) values[method_name(m)] = value_json(report.family, v);
    c["values"] = values;
    if (cell.known) c["known"] = value_json(report.family, *cell.known);
    c["pass"] = cell.pass;
    cells.push_back(std::move(c));
  }
  j["cells"] = cells;
  j["pass"] = report.pass;
  if (!report.pass) j["first_divergence"] = report.first_divergence;
  return j.dump();
}

std::string report_table(const CrosscheckReport& report) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"n"};
  for (Method m : report.methods) header.push_back(method_name(m));
  header.push_back("known");
  header.push_back("verdict");
  rows.push_back(header);
  for (const auto& cell : report.cells) {
    std::vector<std::string> row{std::to_string(cell.n)};
    for (const auto& [m, v] : cell.values) row.push_back(v.str());
    row.push_back(cell.known ? cell.known->str() : "-");
    row.push_back(cell.pass ? "pass" : "FAIL");
    rows.push_back(std::move(row));
  }
  std::vector<size_t> width(rows[0].size(), 0);
  for (const auto& row : rows)
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream out;
  out << "# " << report.family.display() << ", n = 0.." << report.n_max << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      out << row[i] << std::string(width[i] - row[i].size(), ' ');
      out << (i + 1 < row.size() ? "  " : "");
    }
    out << "\n";
  }
  out << (report.pass ? "PASS" : "FAIL: " + report.first_divergence) << "\n";
  return out.str();
}

BenchResult bench(const FamilyId& family, int n, const std::vector<Method>& methods,
                  const MethodLimits& limits) {
  if (methods.empty()) throw std::invalid_argument("bench: no methods requested");
  for (Method m : methods) {
    if (!method_applies(family, m))
      throw std::invalid_argument("bench: method " + method_name(m) + " is not available for " + family.display());
    if (n > limits.cap(m))
      throw std::invalid_argument("bench: n " + std::to_string(n) + " exceeds the " + method_name(m) +
                                  " cap " + std::to_string(limits.cap(m)));
  }
  BenchResult result;
  result.family = family;
  result.n = n;
  bool have_value = false;
  for (Method m : methods) {
    auto t0 = std::chrono::steady_clock::now();
    ExactRational v = compute_number(family, n, m);
    auto t1 = std::chrono::steady_clock::now();
    if (!have_value) {
      result.value = v;
      have_value = true;
    } else if (v != result.value) {
      throw std::logic_error("bench: " + method_name(m) + " disagrees: " + v.str() + " vs " +
                             result.value.str());
    }
    result.entries.push_back(BenchEntry{m, std::chrono::duration<double>(t1 - t0).count()});
  }
  return result;
}

}  // namespace fubini
