#include <random>

#include "doctest.h"
#include "sfn/linalg.hpp"

using namespace sfn;

namespace {

SparseMatrix<Rational> from_rows(const std::vector<std::vector<long>>& rows) {
  SparseMatrix<Rational> m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.add(i, j, Rational(rows[i][j]));
  return m;
}

// Fraction-free (Bareiss) elimination on integer matrices.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::vector<std::vector<long>> random_int_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo = -4,
                                                 int hi = 4) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::vector<long>> m(rows, std::vector<long>(cols));
  for (auto& r : m)
    for (auto& x : r) x = d(rng);
  return m;
}

std::size_t oracle_rank(const std::vector<std::vector<long>>& m) {
  std::vector<std::vector<mpz_class>> a;
  for (const auto& r : m) {
    a.emplace_back();
    for (long x : r) a.back().emplace_back(x);
  }
  return bareiss_rank(a);
}

}  // namespace

TEST_CASE("rational canonical form and formatting") {
  Rational a(6, -4);
  CHECK(a.str() == "-3/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("gaussian rationals") {
  GaussianRational z(Rational(3, 5), Rational(4, 5));
  CHECK(z.str() == "3/5+4/5*i");
  CHECK((z * z.conj()) == GaussianRational(1));
  CHECK(z.conj().conj() == z);
  CHECK(GaussianRational::parse("3/5+4/5*i") == z);
  CHECK(GaussianRational::parse("-1/2-3*i") == GaussianRational(Rational(-1, 2), Rational(-3)));
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK((GaussianRational(1) / GaussianRational(Rational(0), Rational(2))) == GaussianRational(Rational(0), Rational(-1, 2)));
}

TEST_CASE("rank examples") {
  CHECK(rank(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
  CHECK(rank(SparseMatrix<Rational>(4, 2)) == 0);
  std::mt19937 rng(7);
  auto m = random_int_matrix(rng, 5, 5);
  m[4] = m[1];
  std::size_t expect = oracle_rank(m);
  CHECK(expect == 4);
  CHECK(rank(from_rows(m)) == expect);
}

TEST_CASE("rank agrees with the Bareiss oracle on random matrices") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
    auto m = random_int_matrix(rng, r, c, -2, 2);
    CHECK(rank(from_rows(m)) == oracle_rank(m));
  }
}

TEST_CASE("kernel basis examples") {
  CHECK(kernel_basis(from_rows({{1, 0}, {0, 1}})).empty());
  CHECK(kernel_basis(SparseMatrix<Rational>(2, 3)).size() == 3);
  auto k = kernel_basis(from_rows({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0].at(0) == -k[0].at(1));
  CHECK(!k[0].empty());
}

TEST_CASE("kernel vectors are exact and complete") {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 1 + rng() % 7, c = 1 + rng() % 10;
    auto m = from_rows(random_int_matrix(rng, r, c, -3, 3));
    auto k = kernel_basis(m);
    CHECK(rank(m) + k.size() == c);
    for (const auto& v : k) CHECK(m.apply(v).empty());
    SparseMatrix<Rational> kk(k.size(), c);
    for (std::size_t i = 0; i < k.size(); ++i) kk.set_row(i, k[i]);
    CHECK(rank(kk) == k.size());
  }
}

TEST_CASE("dense and sparse elimination give the same echelon form") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto m = from_rows(random_int_matrix(rng, 6, 8, -2, 2));
    auto a = dense_row_echelon(m.to_dense()).basis();
    auto b = sparse_row_echelon(m).basis();
    CHECK(a == b);
  }
}

TEST_CASE("echelon form does not depend on insertion order") {
  std::mt19937 rng(9);
  auto rows = random_int_matrix(rng, 7, 9, -3, 3);
  auto m1 = from_rows(rows);
  std::shuffle(rows.begin(), rows.end(), rng);
  auto m2 = from_rows(rows);
  CHECK(sparse_row_echelon(m1).basis() == sparse_row_echelon(m2).basis());
  // entry-by-entry insertion in reverse order
  SparseMatrix<Rational> m3(m1.rows(), m1.cols());
  for (std::size_t r = m1.rows(); r-- > 0;)
    for (std::size_t c = m1.cols(); c-- > 0;) m3.add(r, c, m1.at(r, c));
  CHECK(sparse_row_echelon(m3).basis() == sparse_row_echelon(m1).basis());
}

TEST_CASE("intersections") {
  using V = SparseVector<Rational>;
  std::vector<V> full;
  for (std::size_t i = 0; i < 4; ++i) full.push_back(V::unit(i));
  CHECK(intersect_subspaces<Rational>(4, full, full).size() == 4);
  std::vector<V> a{V::unit(0), V::unit(1)}, b{V::unit(2), V::unit(3)};
  CHECK(intersect_subspaces<Rational>(4, a, b).empty());

  std::mt19937 rng(13);
  for (int t = 0; t < 20; ++t) {
    auto ra = random_int_matrix(rng, 3, 5, -2, 2), rb = random_int_matrix(rng, 3, 5, -2, 2);
    std::vector<V> va, vb;
    for (auto& r : ra) va.push_back(from_rows({r}).row(0));
    for (auto& r : rb) vb.push_back(from_rows({r}).row(0));
    auto both = ra;
    both.insert(both.end(), rb.begin(), rb.end());
    std::size_t expect = oracle_rank(ra) + oracle_rank(rb) - oracle_rank(both);
    auto cap = intersect_subspaces<Rational>(5, va, vb);
    CHECK(cap.size() == expect);
    RowEchelon<Rational> ea(5), eb(5);
    for (auto& v : va) ea.insert(v);
    for (auto& v : vb) eb.insert(v);
    for (auto& v : cap) {
      CHECK(ea.contains(v));
      CHECK(eb.contains(v));
    }
  }
}

TEST_CASE("quotient representatives complete a basis") {
  using V = SparseVector<Rational>;
  std::vector<V> full{V::unit(0), V::unit(1), V::unit(2)};
  CHECK(quotient_representatives<Rational>(3, full).empty());
  CHECK(quotient_representatives<Rational>(2, {}).size() == 2);
  V s = from_rows({{1, 1, 0}}).row(0);
  auto reps = quotient_representatives<Rational>(3, {s});
  CHECK(reps.size() == 2);
  RowEchelon<Rational> e(3);
  e.insert(s);
  for (auto& r : reps) CHECK(e.insert(r));
}

TEST_CASE("coordinatizer") {
  using V = SparseVector<Rational>;
  V a = from_rows({{1, 2, 0}}).row(0), b = from_rows({{0, 1, 1}}).row(0);
  Coordinatizer<Rational> c(3, {a, b});
  V x = Rational(3) * a + Rational(-2) * b;
  auto co = c.coordinates(x);
  CHECK(co.at(0) == Rational(3));
  CHECK(co.at(1) == Rational(-2));
  V y = V::unit(0);
  V out;
  CHECK_FALSE(c.solve(y, out));
  CHECK_THROWS(Coordinatizer<Rational>(3, {a, a}));
}

TEST_CASE("linear algebra over Q(i)") {
  using G = GaussianRational;
  SparseMatrix<G> m(2, 2);
  m.add(0, 0, G(1));
  m.add(0, 1, G::i());
  m.add(1, 0, G::i());
  m.add(1, 1, G(-1));
  CHECK(rank(m) == 1);
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(m.apply(k[0]).empty());
}
