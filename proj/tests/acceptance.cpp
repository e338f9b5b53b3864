// Acceptance suite: one pass/fail line per criterion. The CLI binary path
// must be passed as argv[1] (the last criterion spawns it).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

#include "fubini/crosscheck.hpp"
#include "fubini/genfubini.hpp"
#include "fubini/hessenberg.hpp"
#include "fubini/kernel.hpp"
#include "fubini/series.hpp"
#include "fubini/trudi.hpp"

using namespace fubini;
using clock_type = std::chrono::steady_clock;

namespace {

std::string g_cli_path;

struct Check {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::vector<FamilyId> r_profile_families(int max_m) {
  std::vector<FamilyId> fams;
  fams.push_back(FamilyId::fubini());
  for (int m = 1; m <= max_m; ++m) fams.push_back(FamilyId::fubini_restricted(m));
  for (int m = 1; m <= max_m; ++m) fams.push_back(FamilyId::fubini_associated(m));
  fams.push_back(FamilyId::bernoulli());
  fams.push_back(FamilyId::cauchy());
  fams.push_back(FamilyId::euler());
  for (int m = 2; m <= max_m; ++m) {
    fams.push_back(FamilyId::mod_cauchy_restricted(m));
    fams.push_back(FamilyId::mod_cauchy_associated(m));
    fams.push_back(FamilyId::mod_bernoulli_restricted(m));
    fams.push_back(FamilyId::mod_bernoulli_associated(m));
  }
  return fams;
}

// --- criterion 1: the four Fubini methods reproduce the golden sequence ---
void criterion_1(Check& c) {
  auto t0 = clock_type::now();
  const char* golden[] = {"1", "1", "3", "13", "75", "541", "4683",
                          "47293", "545835", "7087261", "102247563"};
  for (int n = 0; n <= 10; ++n) {
    ExactInt expect{std::string(golden[n])};
    c.require(fubini_def(n) == expect, "fubini_def(" + std::to_string(n) + ")");
    c.require(fubini_rec(n) == expect, "fubini_rec(" + std::to_string(n) + ")");
    c.require(fubini_binomial_sum(n) == expect, "fubini_binomial_sum(" + std::to_string(n) + ")");
    c.require(fubini_dyadic_series(n) == expect, "fubini_dyadic_series(" + std::to_string(n) + ")");
  }
  c.require(seconds_since(t0) < 1.0, "runtime exceeded 1 s");
}

// --- criterion 2: determinant representations agree with series/recurrences ---
void criterion_2(Check& c) {
  auto t0 = clock_type::now();
  std::vector<FamilyId> fams = r_profile_families(6);
  for (int k = 1; k <= 6; ++k) fams.push_back(FamilyId::gen_fubini(k));
  for (const auto& family : fams) {
    for (int n = 0; n <= 25; ++n) {
      ExactRational det = number_from_determinant(family, n);
      c.require(det == number_from_egf(family, n),
                family.display() + " n=" + std::to_string(n) + ": determinant vs egf");
      bool has_recurrence = false;
      for (Method m : methods_for(family)) has_recurrence = has_recurrence || m == Method::recurrence;
      if (has_recurrence)
        c.require(det == compute_number(family, n, Method::recurrence),
                  family.display() + " n=" + std::to_string(n) + ": determinant vs recurrence");
    }
  }
  c.require(number_from_determinant(FamilyId::fubini(), 5) == ExactRational(541), "F_5");
  c.require(number_from_determinant(FamilyId::fubini(), 6) == ExactRational(4683), "F_6");
  c.require(number_from_determinant(FamilyId::fubini_restricted(3), 5) == ExactRational(530), "F_{5,<=3}");
  c.require(number_from_determinant(FamilyId::fubini_restricted(3), 6) == ExactRational(4550), "F_{6,<=3}");
  c.require(number_from_determinant(FamilyId::fubini_associated(3), 5) == ExactRational(1), "F_{5,>=3}");
  c.require(number_from_determinant(FamilyId::fubini_associated(3), 6) == ExactRational(21), "F_{6,>=3}");
  c.require(seconds_since(t0) < 10.0, "runtime exceeded 10 s");
}

// --- criterion 3: expansion recurrence equals fraction-free elimination ---
void criterion_3(Check& c) {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9), size(1, 15);
  for (int trial = 0; trial < 100; ++trial) {
    int n = size(rng);
    std::vector<ExactRational> r(static_cast<size_t>(n));
    for (auto& x : r) x = ExactRational(num(rng), den(rng));
    c.require(hessenberg_alphas(r, n).back() == det_fraction_free(toeplitz_hessenberg(r, n)),
              "random profile trial " + std::to_string(trial));
  }
  for (const auto& family : r_profile_families(6)) {
    auto profile = profile_for(family);
    auto alphas = hessenberg_alphas(profile, 25);
    for (int n = 0; n <= 25; ++n)
      c.require(alphas[static_cast<size_t>(n)] == det_fraction_free(toeplitz_hessenberg(profile, n)),
                family.display() + " size " + std::to_string(n));
  }
}

// --- criterion 4: the partition-sum route, plus the worked expansion ---
void criterion_4(Check& c) {
  for (const auto& family : r_profile_families(6))
    for (int n = 0; n <= 22; ++n)
      c.require(number_via_trudi(family, n) == number_from_determinant(family, n),
                family.display() + " n=" + std::to_string(n));
  auto terms = trudi_terms(profile_for(FamilyId::fubini()), 4);
  c.require(terms.size() == 5, "five partitions of 4");
  std::map<std::vector<int>, ExactRational> expected{
      {{4, 0, 0, 0}, ExactRational(1)},     {{2, 1, 0, 0}, ExactRational(3, 2)},
      {{1, 0, 1, 0}, ExactRational(1, 3)},  {{0, 2, 0, 0}, ExactRational(1, 4)},
      {{0, 0, 0, 1}, ExactRational(1, 24)},
  };
  for (const auto& term : terms) {
    auto it = expected.find(term.partition.t);
    c.require(it != expected.end() && term.value == it->second, "term of the F_4 expansion");
  }
}

// --- criterion 5: series inversion and Toeplitz inverses ---
void criterion_5(Check& c) {
  std::mt19937 rng(31415926);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  auto random_rationals = [&](int n) {
    std::vector<ExactRational> v(static_cast<size_t>(n));
    for (auto& x : v) x = ExactRational(num(rng), den(rng));
    return v;
  };
  for (int trial = 0; trial < 20; ++trial) {
    auto r = random_rationals(20);
    c.require(inversion_R_from_alpha(hessenberg_alphas(r, 20)) == r,
              "round trip trial " + std::to_string(trial));
  }
  // Fubini alphas invert to (-1)^{n-1}/n!.
  {
    auto alphas = hessenberg_alphas(profile_for(FamilyId::fubini()), 15);
    auto r = inversion_R_from_alpha(alphas);
    for (int n = 1; n <= 15; ++n)
      c.require(r[static_cast<size_t>(n - 1)] ==
                    ExactRational(ExactInt((n % 2 != 0) ? 1 : -1), factorial(n)),
                "fubini inversion at " + std::to_string(n));
  }
  // Restricted: 0 beyond the band; associated: (-1)^{n-1}/n! from m upward.
  for (int m = 1; m <= 6; ++m) {
    auto rres = inversion_R_from_alpha(hessenberg_alphas(profile_for(FamilyId::fubini_restricted(m)), 15));
    auto rass = inversion_R_from_alpha(hessenberg_alphas(profile_for(FamilyId::fubini_associated(m)), 15));
    for (int n = 1; n <= 15; ++n) {
      ExactRational band(ExactInt((n % 2 != 0) ? 1 : -1), factorial(n));
      c.require(rres[static_cast<size_t>(n - 1)] == (n > m ? ExactRational(0) : band),
                "restricted inversion m=" + std::to_string(m));
      c.require(rass[static_cast<size_t>(n - 1)] == (n >= m ? band : ExactRational(0)),
                "associated inversion m=" + std::to_string(m));
    }
  }
  // Unit lower triangular Toeplitz inverses multiply back to the identity.
  auto check_inverse = [&](const std::vector<ExactRational>& col) {
    auto inv = unit_lower_toeplitz_inverse(col);
    int n = inv.size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        ExactRational acc = 0;
        for (int t = 0; t < n; ++t) {
          ExactRational a = (t <= i) ? col[static_cast<size_t>(i - t)] : ExactRational(0);
          acc += a * inv.at(t, j);
        }
        c.require(acc == ExactRational(i == j ? 1 : 0), "inverse product entry");
      }
  };
  for (int trial = 0; trial < 5; ++trial) {
    auto col = random_rationals(21);
    col[0] = 1;
    check_inverse(col);
  }
  auto f = fubini_rec_upto(20);
  std::vector<ExactRational> fcol(21);
  fcol[0] = 1;
  for (int j = 1; j <= 20; ++j) fcol[static_cast<size_t>(j)] = ExactRational(f[static_cast<size_t>(j)], factorial(j));
  check_inverse(fcol);
}

// --- criterion 6: classical families against their recurrences ---
void criterion_6(Check& c) {
  for (int n = 0; n <= 12; ++n)
    c.require(number_from_determinant(FamilyId::bernoulli(), n) == bernoulli_rec(n),
              "B_" + std::to_string(n));
  for (int n = 0; n <= 10; ++n)
    c.require(number_from_determinant(FamilyId::cauchy(), n) == cauchy_rec(n),
              "c_" + std::to_string(n));
  for (int n = 0; n <= 10; ++n)
    c.require(number_from_determinant(FamilyId::euler(), n) == euler_rec(n),
              "E_" + std::to_string(n));
  c.require(number_from_determinant(FamilyId::bernoulli(), 2) == ExactRational(1, 6), "B_2");
  c.require(number_from_determinant(FamilyId::cauchy(), 2) == ExactRational(-1, 6), "c_2");
  c.require(number_from_determinant(FamilyId::euler(), 4) == ExactRational(5), "E_4");
}

// --- criterion 7: modified families reduce to the classical ones ---
void criterion_7(Check& c) {
  for (int m = 2; m <= 6; ++m)
    for (int n = 0; n <= m - 1; ++n) {
      c.require(number_from_determinant(FamilyId::mod_cauchy_restricted(m), n) == cauchy_rec(n),
                "mod_cauchy_restricted(" + std::to_string(m) + ") at " + std::to_string(n));
      c.require(number_from_determinant(FamilyId::mod_bernoulli_restricted(m), n) == bernoulli_rec(n),
                "mod_bernoulli_restricted(" + std::to_string(m) + ") at " + std::to_string(n));
    }
  for (int n = 0; n <= 20; ++n) {
    c.require(number_from_determinant(FamilyId::mod_cauchy_associated(2), n) == cauchy_rec(n),
              "mod_cauchy_associated(2) at " + std::to_string(n));
    c.require(number_from_determinant(FamilyId::mod_bernoulli_associated(2), n) == bernoulli_rec(n),
              "mod_bernoulli_associated(2) at " + std::to_string(n));
  }
  for (int m = 2; m <= 6; ++m)
    for (int n = 0; n <= 20; ++n)
      for (auto family : {FamilyId::mod_cauchy_restricted(m), FamilyId::mod_cauchy_associated(m),
                          FamilyId::mod_bernoulli_restricted(m), FamilyId::mod_bernoulli_associated(m)})
        c.require(number_from_determinant(family, n) == number_from_egf(family, n),
                  family.display() + " series vs determinant at " + std::to_string(n));
}

// --- criterion 8: characteristic polynomial and minor-sum identities ---
void criterion_8(Check& c) {
  auto t0 = clock_type::now();
  auto p5 = char_poly(toeplitz_hessenberg(profile_for(FamilyId::fubini()), 5));
  const char* expect[] = {"541/120", "-77/6", "33/2", "-12", "5", "-1"};
  for (int d = 0; d <= 5; ++d)
    c.require(p5[static_cast<size_t>(d)] == ExactRational(std::string(expect[d])),
              "p_5 coefficient of degree " + std::to_string(d));
  const char* k2[] = {"1", "2", "4", "22/3", "77/6", "653/30"};
  for (int j = 0; j <= 5; ++j)
    c.require(gen_fubini_coeff(2, j) == ExactRational(std::string(k2[j])),
              "square series at " + std::to_string(j));
  const char* k3[] = {"1", "3", "15/2", "33/2", "269/8"};
  for (int j = 0; j <= 4; ++j)
    c.require(gen_fubini_coeff(3, j) == ExactRational(std::string(k3[j])),
              "cube series at " + std::to_string(j));
  for (int n = 1; n <= 10; ++n)
    for (const auto& row : charpoly_genfubini_check(n))
      c.require(row.match, "charpoly check n=" + std::to_string(n) + " l=" + std::to_string(row.l));
  for (int n = 1; n <= 9; ++n)
    for (int l = 0; l < n; ++l)
      c.require(minor_sum_genfubini_check(n, l).match,
                "minor sums n=" + std::to_string(n) + " l=" + std::to_string(l));
  c.require(seconds_since(t0) < 30.0, "runtime exceeded 30 s");
}

// --- criterion 9: the O(n^2) recurrence reaches n = 500 quickly ---
void criterion_9(Check& c) {
  auto t0 = clock_type::now();
  ExactRational alpha = det_via_recurrence(profile_for(FamilyId::fubini()), 500);
  ExactRational f500 = apply_prefactor(FamilyId::fubini(), 500, alpha);
  double elapsed = seconds_since(t0);
  c.require(f500.is_integer(), "F_500 integral");
  c.require(f500.to_int().str().size() > 1000, "F_500 has > 1000 digits");
  c.require(elapsed < 5.0, "F_500 took " + std::to_string(elapsed) + " s (budget 5 s)");
}

// --- criterion 10: CLI contract ---
struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  CliResult result;
  std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

void criterion_10(Check& c) {
  auto compute = run_cli("compute --family fubini --n 6 --method determinant --format json");
  const std::string expected_json =
      R"({"family":"fubini","n":6,"method":"determinant","value":{"int":"4683"}})" "\n";
  c.require(compute.exit_code == 0, "compute exit code " + std::to_string(compute.exit_code));
  c.require(compute.output == expected_json, "compute JSON bytes: got " + compute.output);
  // Canonical form round-trips through a JSON parser byte-for-byte.
  std::string body = compute.output.substr(0, compute.output.size() - 1);
  c.require(nlohmann::ordered_json::parse(body).dump() == body, "JSON round trip");

  auto series = run_cli("series --family gen_fubini --k 2 --order 5 --format plain");
  c.require(series.exit_code == 0, "series exit code " + std::to_string(series.exit_code));
  c.require(series.output == "1\n2\n4\n22/3\n77/6\n653/30\n", "series bytes: got " + series.output);

  auto crosscheck = run_cli("crosscheck --family fubini_restricted --m 3 --n-max 12");
  c.require(crosscheck.exit_code == 0, "crosscheck exit code " + std::to_string(crosscheck.exit_code));

  auto all = run_cli("crosscheck --family all");
  c.require(all.exit_code == 0, "crosscheck --family all exit code " + std::to_string(all.exit_code));

  auto bad = run_cli("compute --family no_such_family --n 3");
  c.require(bad.exit_code == 1, "unknown family exit code " + std::to_string(bad.exit_code));

  auto capped = run_cli("compute --family fubini --n 35 --method trudi");
  c.require(capped.exit_code == 1, "cap exceeded exit code " + std::to_string(capped.exit_code));
  auto forced = run_cli("compute --family fubini --n 35 --method trudi --force");
  auto forced_ref = run_cli("compute --family fubini --n 35 --method recurrence");
  c.require(forced.exit_code == 0 && forced.output == forced_ref.output, "--force override");

  // csv and json carry identical values for identical queries
  auto vjson = run_cli("compute --family bernoulli --n 12 --method determinant --format json");
  auto vcsv = run_cli("compute --family bernoulli --n 12 --method determinant --format csv");
  auto parsed = nlohmann::ordered_json::parse(vjson.output);
  std::string csv_value = vcsv.output.substr(vcsv.output.rfind(',') + 1);
  csv_value.pop_back();  // newline
  std::string json_value =
      parsed["value"]["num"].get<std::string>() + "/" + parsed["value"]["den"].get<std::string>();
  c.require(csv_value == json_value, "csv value " + csv_value + " vs json " + json_value);

  // --out writes the same bytes to a file
  std::string tmp = "/tmp/fubinidet_acceptance_out.txt";
  auto to_file = run_cli("compute --family fubini --n 6 --method determinant --format json --out " + tmp);
  c.require(to_file.exit_code == 0 && to_file.output.empty(), "--out leaves stdout empty");
  std::string file_content;
  if (FILE* f = std::fopen(tmp.c_str(), "r")) {
    char buf[4096];
    size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) file_content.append(buf, got);
    std::fclose(f);
    std::remove(tmp.c_str());
  }
  c.require(file_content == expected_json, "--out file bytes");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Check&)> run;
  };
  std::vector<Criterion> criteria{
      {1, "fubini golden sequence by four methods (< 1 s)", criterion_1},
      {2, "determinant route equals series/recurrence, n <= 25 (< 10 s)", criterion_2},
      {3, "expansion recurrence equals fraction-free oracle", criterion_3},
      {4, "partition-sum route equals determinant route, n <= 22", criterion_4},
      {5, "series inversion round trip and Toeplitz inverses", criterion_5},
      {6, "classical Bernoulli/Cauchy/Euler determinants", criterion_6},
      {7, "modified families: reductions and series agreement", criterion_7},
      {8, "characteristic polynomial and minor-sum identities (< 30 s)", criterion_8},
      {9, "F_500 by the expansion recurrence (< 5 s)", criterion_9},
      {10, "CLI contract (byte-exact outputs, exit codes)", criterion_10},
  };
  int failures = 0;
  for (auto& criterion : criteria) {
    if (criterion.id == 10 && g_cli_path.empty()) {
      std::cout << "SKIP criterion 10: CLI path not supplied\n";
      ++failures;
      continue;
    }
    Check check;
    auto t0 = clock_type::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.pass = false;
      check.detail = std::string("exception: ") + e.what();
    }
    double secs = seconds_since(t0);
    char line[512];
    std::snprintf(line, sizeof line, "%s criterion %2d: %s [%.2f s]%s%s",
                  check.pass ? "PASS" : "FAIL", criterion.id, criterion.name, secs,
                  check.pass ? "" : " -- ", check.pass ? "" : check.detail.c_str());
    std::cout << line << "\n";
    if (!check.pass) ++failures;
  }
  if (failures == 0) {
    std::cout << "all criteria passed\n";
  } else {
    std::cout << failures << " criteria failed\n";
  }
  return failures == 0 ? 0 : 1;
}
