#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "planeaut/snf.hpp"

using namespace planeaut;
using Mat = std::vector<std::vector<long long>>;

namespace {

Mat matmul(const Mat& a, const Mat& b) {
  Mat c(a.size(), std::vector<long long>(b[0].size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k)
      for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

long long det(const Mat& m) {
  if (m.size() == 1) return m[0][0];
  if (m.size() == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  long long d = 0;
  for (size_t j = 0; j < m.size(); ++j) {
    Mat minor;
    for (size_t i = 1; i < m.size(); ++i) {
      std::vector<long long> row;
      for (size_t k = 0; k < m.size(); ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    long long term = m[0][j] * det(minor);
    d += (j % 2 == 0) ? term : -term;
  }
  return d;
}

void check_snf(const Mat& a) {
  SnfResult r = smith_normal_form(a);
  CHECK(std::abs(det(r.U)) == 1);
  CHECK(std::abs(det(r.V)) == 1);
  Mat d = matmul(matmul(r.U, a), r.V);
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = 0; j < d[0].size(); ++j) {
      if (i == j && i < r.diag.size()) {
        CHECK(d[i][j] == r.diag[i]);
      } else {
        CHECK(d[i][j] == 0);
      }
    }
  for (size_t i = 0; i + 1 < r.diag.size(); ++i) {
    if (r.diag[i] != 0 && r.diag[i + 1] != 0) CHECK(r.diag[i + 1] % r.diag[i] == 0);
    CHECK(r.diag[i] >= 0);
  }
}

// count solutions of A x = 0 over (Z/N)^2 by brute force
long long brute_solutions(const Mat& a, long long N) {
  long long count = 0;
  for (long long x = 0; x < N; ++x)
    for (long long y = 0; y < N; ++y) {
      bool ok = true;
      for (const auto& row : a)
        if ((row[0] * x + row[1] * y) % N != 0) ok = false;
      if (ok) ++count;
    }
  return count;
}

}  // namespace

TEST_CASE("known invariant factors") {
  SnfResult r1 = smith_normal_form({{4, 0}, {0, 4}, {2, 3}});
  CHECK(r1.diag == std::vector<long long>{1, 4});
  SnfResult r2 = smith_normal_form({{5, 0}, {0, 5}});
  CHECK(r2.diag == std::vector<long long>{5, 5});
  SnfResult r3 = smith_normal_form({{4, 1}, {0, 4}});
  CHECK(r3.diag == std::vector<long long>{1, 16});
  SnfResult r4 = smith_normal_form({{2, 4}});
  CHECK(r4.diag == std::vector<long long>{2});
  CHECK(r4.rank == 1);
  SnfResult r5 = smith_normal_form({{0, 0}, {0, 0}});
  CHECK(r5.rank == 0);
  // Klein quintic lattice: rows (3,1), (-1,4) have index 13
  SnfResult r6 = smith_normal_form({{3, 1}, {-1, 4}});
  CHECK(r6.diag == std::vector<long long>{1, 13});
}

TEST_CASE("transforms are unimodular and diagonalize") {
  check_snf({{4, 0}, {0, 4}, {2, 3}});
  check_snf({{6, 4}, {2, 8}});
  check_snf({{0, 3}, {3, 0}, {1, 1}});
  check_snf({{-1, 6}, {4, 0}, {-1, 3}});
  check_snf({{12}});
  check_snf({{1, 2, 3}, {4, 5, 6}});
}

TEST_CASE("random matrices round trip") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> dims(1, 4);
  std::uniform_int_distribution<long long> val(-9, 9);
  for (int iter = 0; iter < 200; ++iter) {
    size_t r = static_cast<size_t>(dims(rng)), c = static_cast<size_t>(dims(rng));
    Mat a(r, std::vector<long long>(c));
    for (auto& row : a)
      for (auto& x : row) x = val(rng);
    check_snf(a);
  }
}

TEST_CASE("solution counts over Z/N match brute force") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> nrows(1, 4);
  std::uniform_int_distribution<long long> val(-8, 8);
  for (int iter = 0; iter < 100; ++iter) {
    Mat a(static_cast<size_t>(nrows(rng)), std::vector<long long>(2));
    for (auto& row : a)
      for (auto& x : row) x = val(rng);
    SnfResult r = smith_normal_form(a);
    for (long long N : {4, 6, 12}) {
      long long expect = 1;
      for (long long d : r.diag) expect *= std::gcd(d, N) == 0 ? N : std::gcd(d, N);
      for (size_t i = r.diag.size(); i < 2; ++i) expect *= N;
      CHECK(brute_solutions(a, N) == expect);
    }
  }
}
