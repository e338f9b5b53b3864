#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fubini/exact.hpp"
#include "fubini/family.hpp"

namespace fubini {

/// The independent computation routes. Not every method applies to every
/// family; methods_for lists the applicable set.
enum class Method {
  definition,          // sum over Stirling numbers
  recurrence,          // the family's defining recurrence
  binomial_sum,        // Fubini double binomial sum
  dyadic_series,       // Fubini exact dyadic series
  egf,                 // truncated generating-function extraction
  determinant,         // Hessenberg expansion recurrence (+ prefactor)
  determinant_oracle,  // fraction-free elimination on the explicit matrix
  trudi,               // partition-sum expansion
  convolution,         // gen_fubini k-fold convolution
};

std::string method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

std::vector<Method> methods_for(const FamilyId& family);

/// Per-method n caps. Configuration consumed by the CLI and the tests; the
/// partition-sum and brute-force routes grow too fast to run uncapped.
struct MethodLimits {
  int definition = 2000;
  int recurrence = 100000;
  int binomial_sum = 2000;
  int dyadic_series = 2000;
  int egf = 2000;
  int determinant = 100000;
  int determinant_oracle = 100;
  int trudi = 30;
  int convolution = 2000;
  int brute_minor = 9;  // principal-minor enumeration (genfubini checks)

  int cap(Method m) const;
  /// Limits with every cap effectively removed (the --force escape hatch).
  static MethodLimits unlimited();
};

/// Computes the family's number at index n by one method. Throws
/// std::invalid_argument when the method does not apply to the family.
ExactRational compute_number(const FamilyId& family, int n, Method method);

/// A value pinned from an external source or a by-hand derivation;
/// crosscheck verifies every computed cell against these.
struct KnownValue {
  FamilyId family;
  int n = 0;
  ExactRational value;
  std::string source;
};

const std::vector<KnownValue>& known_values();
std::optional<ExactRational> known_value_for(const FamilyId& family, int n);

struct CrosscheckCell {
  int n = 0;
  std::vector<std::pair<Method, ExactRational>> values;  // in canonical method order
  std::optional<ExactRational> known;
  bool pass = false;
};

struct CrosscheckReport {
  FamilyId family;
  int n_max = 0;
  std::vector<Method> methods;
  std::vector<CrosscheckCell> cells;  // n ascending
  bool pass = false;
  std::string first_divergence;  // empty when pass; exact values, never floats
};

/// Runs every requested method for n = 0..n_max, compares all values
/// exactly, and checks cells against the known-value table. Throws
/// std::invalid_argument if n_max exceeds a requested method's cap.
CrosscheckReport crosscheck_family(const FamilyId& family, int n_max,
                                   const std::vector<Method>& methods,
                                   const MethodLimits& limits = {});

/// Report serializations; both are deterministic (family, n, method order).
std::string report_json(const CrosscheckReport& report);
std::string report_table(const CrosscheckReport& report);

struct BenchEntry {
  Method method;
  double seconds = 0.0;
};

struct BenchResult {
  FamilyId family;
  int n = 0;
  ExactRational value;
  std::vector<BenchEntry> entries;
};

/// Times each method at the single index n. All methods must produce the
/// same value (std::logic_error otherwise) before timings are reported.
BenchResult bench(const FamilyId& family, int n, const std::vector<Method>& methods,
                  const MethodLimits& limits = {});

}  // namespace fubini
