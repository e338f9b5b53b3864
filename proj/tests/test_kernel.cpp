#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <vector>

#include "fubini/kernel.hpp"

using namespace fubini;

namespace {

// Brute-force enumeration of set partitions of {1..n} (each element joins an
// existing block or opens a new one). Visits the block sizes of every
// partition; the independent oracle for the Stirling and Fubini counts below.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> sizes;
  std::function<void(int)> place = [&](int next) {
    if (next == n) {
      visit(sizes);
      return;
    }
    for (size_t b = 0; b < sizes.size(); ++b) {
      ++sizes[b];
      place(next + 1);
      --sizes[b];
    }
    sizes.push_back(1);
    place(next + 1);
    sizes.pop_back();
  };
  place(0);
}

long count_partitions(int n, int k, int min_block, int max_block) {
  long count = 0;
  for_each_partition(n, [&](const std::vector<int>& sizes) {
    if (static_cast<int>(sizes.size()) != k) return;
    for (int s : sizes)
      if (s < min_block || s > max_block) return;
    ++count;
  });
  return count;
}

// Ordered set partitions with every block size in [min_block, max_block]:
// sum over partitions of k!.
ExactInt count_ordered_partitions(int n, int min_block, int max_block) {
  ExactInt total = 0;
  for_each_partition(n, [&](const std::vector<int>& sizes) {
    for (int s : sizes)
      if (s < min_block || s > max_block) return;
    total += factorial(static_cast<int>(sizes.size()));
  });
  return total;
}

}  // namespace

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == ExactInt(1));
  CHECK(factorial(5) == ExactInt(120));
  CHECK(factorial(10) == ExactInt(3628800));
  CHECK(binomial(4, 2) == ExactInt(6));
  CHECK(binomial(9, 0) == ExactInt(1));
  CHECK(binomial(10, 3) == ExactInt(120));
  CHECK(binomial(5, -1) == ExactInt(0));
  CHECK(binomial(5, 6) == ExactInt(0));
}

TEST_CASE("stirling2 against enumeration") {
  CHECK(stirling2(4, 2) == ExactInt(7));
  CHECK(stirling2(5, 2) == ExactInt(15));
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(stirling2(n, k) == ExactInt(count_partitions(n, k, 1, std::max(n, 1))));
  for (int n = 0; n <= 10; ++n) CHECK(stirling2(n, n) == ExactInt(1));
}

TEST_CASE("restricted and associated stirling2 against enumeration") {
  CHECK(stirling2_restricted(4, 2, 2) == ExactInt(3));  // {12|34},{13|24},{14|23}
  CHECK(stirling2_restricted(5, 2, 3) == ExactInt(10));
  CHECK(stirling2_associated(4, 2, 2) == ExactInt(3));
  CHECK(stirling2_associated(5, 2, 2) == ExactInt(10));
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= 4; ++m)
      for (int k = 0; k <= n; ++k) {
        CHECK(stirling2_restricted(n, k, m) == ExactInt(count_partitions(n, k, 1, m)));
        CHECK(stirling2_associated(n, k, m) == ExactInt(count_partitions(n, k, m, n)));
      }
}

TEST_CASE("pigeonhole zeros") {
  CHECK(stirling2_restricted(7, 2, 3) == ExactInt(0));  // 2*3 < 7
  CHECK(stirling2_associated(5, 3, 2) == ExactInt(0));  // 5 < 2*3
  CHECK(stirling2_restricted(9, 2, 4) == ExactInt(0));
}

TEST_CASE("restricted stirling equals full stirling when m >= n") {
  for (int n = 0; n <= 9; ++n) {
    auto full = stirling2_row(n);
    auto restricted = stirling2_restricted_row(n, std::max(n, 1));
    CHECK(full == restricted);
  }
}

TEST_CASE("fubini methods agree on the sequence and each other up to 60") {
  const char* golden[] = {"1", "1", "3", "13", "75", "541", "4683",
                          "47293", "545835", "7087261", "102247563"};
  for (int n = 0; n <= 10; ++n) {
    ExactInt expect{std::string(golden[n])};
    CHECK(fubini_def(n) == expect);
    CHECK(fubini_rec(n) == expect);
    CHECK(fubini_binomial_sum(n) == expect);
    CHECK(fubini_dyadic_series(n) == expect);
  }
  auto rec = fubini_rec_upto(60);
  for (int n = 0; n <= 60; ++n) {
    CHECK(fubini_def(n) == rec[n]);
    CHECK(fubini_binomial_sum(n) == rec[n]);
    CHECK(fubini_dyadic_series(n) == rec[n]);
  }
}

TEST_CASE("restricted fubini: recurrence equals definition, n <= 40, m <= 10") {
  for (int m = 1; m <= 10; ++m) {
    auto rec = restricted_fubini_rec_upto(40, m);
    for (int n = 0; n <= 40; ++n) CHECK(restricted_fubini_def(n, m) == rec[n]);
  }
}

TEST_CASE("associated fubini: recurrence equals definition, n <= 40, m <= 10") {
  for (int m = 1; m <= 10; ++m) {
    auto rec = associated_fubini_rec_upto(40, m);
    for (int n = 0; n <= 40; ++n) CHECK(associated_fubini_def(n, m) == rec[n]);
  }
}

TEST_CASE("restricted fubini worked values") {
  CHECK(restricted_fubini_rec(5, 3) == ExactInt(530));
  CHECK(restricted_fubini_rec(6, 3) == ExactInt(4550));
  CHECK(restricted_fubini_rec(4, 2) == ExactInt(66));
  CHECK(restricted_fubini_rec(4, 2) == count_ordered_partitions(4, 1, 2));
  for (int n = 0; n <= 7; ++n)
    for (int m = 1; m <= 3; ++m)
      CHECK(restricted_fubini_rec(n, m) == count_ordered_partitions(n, 1, m));
  // m >= n collapses to the plain Fubini numbers
  for (int n = 0; n <= 12; ++n) CHECK(restricted_fubini_rec(n, std::max(n, 1)) == fubini_rec(n));
}

TEST_CASE("associated fubini worked values") {
  CHECK(associated_fubini_rec(5, 3) == ExactInt(1));
  CHECK(associated_fubini_rec(6, 3) == ExactInt(21));
  CHECK(associated_fubini_rec(7, 3) == ExactInt(71));  // pinned by the enumeration below
  CHECK(associated_fubini_rec(7, 3) == count_ordered_partitions(7, 3, 7));
  CHECK(associated_fubini_rec(8, 3) == ExactInt(183));
  CHECK(associated_fubini_rec(9, 3) == ExactInt(2101));
  for (int n = 0; n <= 7; ++n)
    for (int m = 1; m <= 3; ++m)
      CHECK(associated_fubini_rec(n, m) == count_ordered_partitions(n, m, std::max(n, 1)));
  // single block for m <= n < 2m; nothing at all for 0 < n < m
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n < 2 * m; ++n)
      CHECK(associated_fubini_rec(n, m) == ExactInt(n >= m ? 1 : 0));
  // m = 1 collapses to the plain Fubini numbers
  for (int n = 0; n <= 12; ++n) CHECK(associated_fubini_rec(n, 1) == fubini_rec(n));
}

TEST_CASE("monotone sandwich") {
  auto f = fubini_rec_upto(20);
  for (int n = 0; n <= 20; ++n)
    for (int m = 1; m <= 8; ++m) {
      CHECK(restricted_fubini_rec(n, m) <= f[n]);
      CHECK(associated_fubini_rec(n, m) <= f[n]);
    }
}

TEST_CASE("classical bernoulli, cauchy, euler recurrences") {
  CHECK(bernoulli_rec(0) == ExactRational(1));
  CHECK(bernoulli_rec(1) == ExactRational(-1, 2));
  CHECK(bernoulli_rec(2) == ExactRational(1, 6));
  CHECK(bernoulli_rec(12) == ExactRational(-691, 2730));
  for (int n = 3; n <= 21; n += 2) CHECK(bernoulli_rec(n) == ExactRational(0));

  CHECK(cauchy_rec(0) == ExactRational(1));
  CHECK(cauchy_rec(1) == ExactRational(1, 2));
  CHECK(cauchy_rec(2) == ExactRational(-1, 6));
  CHECK(cauchy_rec(3) == ExactRational(1, 4));
  CHECK(cauchy_rec(4) == ExactRational(-19, 30));
  CHECK(cauchy_rec(5) == ExactRational(9, 4));

  CHECK(euler_rec(0) == ExactRational(1));
  CHECK(euler_rec(2) == ExactRational(-1));
  CHECK(euler_rec(4) == ExactRational(5));
  CHECK(euler_rec(6) == ExactRational(-61));
  CHECK(euler_rec(8) == ExactRational(1385));
  CHECK(euler_rec(10) == ExactRational(-50521));
  for (int n = 1; n <= 15; n += 2) CHECK(euler_rec(n) == ExactRational(0));
}

TEST_CASE("dyadic series large index sanity") {
  // Truncation logic must keep working where the starting M is far too small.
  CHECK(fubini_dyadic_series(40) == fubini_rec(40));
}
