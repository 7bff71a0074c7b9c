#include <random>

#include "doctest.h"
#include "sfn/grassmann.hpp"

using namespace sfn;

namespace {

using G = GrassmannElement;

Gauss phase(long a, long b, long c) { return Gauss(Rational(a, c), Rational(b, c)); }

// Checks every postcondition of the normalization by brute force.
void check_normalization(const RealStructure& rho) {
  const int n = rho.n();
  auto norm = normalize_generators(rho);
  REQUIRE(static_cast<int>(norm.t.size()) == n);
  for (const auto& t : norm.t) CHECK(rho.apply(t) == t);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) CHECK((norm.t[j] * norm.t[k] + norm.t[k] * norm.t[j]).is_zero());
  // linear parts form a basis of G_1/G_2 over C
  std::vector<SparseVector<Gauss>> lin;
  for (const auto& t : norm.t) {
    SparseVector<Gauss> v;
    auto lin1 = t.degree_part(1);
    for (const auto& [m, c] : lin1.terms()) v.add(m, c);
    lin.push_back(v);
  }
  CHECK(span_basis(std::size_t{1} << n, lin).size() == static_cast<std::size_t>(n));
  // monomials in t span the real form
  RealFormIso iso(rho);
  std::vector<SparseVector<Rational>> real;
  for (const auto& m : iso.monomials()) real.push_back(m.realify());
  CHECK(span_basis(std::size_t{2} << n, real).size() == (std::size_t{1} << n));
}

void check_iso(const RealStructure& rho) {
  RealFormIso iso(rho);
  auto basis = real_form_basis(rho);
  for (const auto& a : basis) {
    auto fa = iso(a);
    for (const auto& [m, c] : fa.terms()) CHECK(c.is_real());
    CHECK(iso.inverse(fa) == a);
    for (const auto& b : basis) CHECK(iso(a * b) == fa * iso(b));
  }
}

}  // namespace

TEST_CASE("exterior multiplication") {
  G t1 = G::generator(2, 0), t2 = G::generator(2, 1);
  CHECK(t1 * t2 == G::monomial(2, 3));
  CHECK(t2 * t1 == G::monomial(2, 3, Gauss(-1)));
  CHECK(t1 * t1 == G(2));
  G one = G::unit(2);
  CHECK((one + t1) * (one - t1) == one);
  CHECK(wedge_sign(0b101, 0b010) == -1);
  CHECK(wedge_sign(0b011, 0b100) == 1);
  CHECK((t1 + t2).parity() == Parity::Odd);
  CHECK_THROWS_AS((one + t1).parity(), std::domain_error);
  CHECK(G::monomial(3, 0b101, phase(3, 4, 5)).str() == "(3/5+4/5*i)*th1^th3");
  // associativity on a few mixed elements
  G a = G::unit(3) + G::generator(3, 0, Gauss::i()), b = G::generator(3, 1) + G::monomial(3, 0b110, Gauss(2));
  G c = G::generator(3, 2, Gauss(-1)) + G::monomial(3, 0b011);
  CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("real structures and validation") {
  auto can = rho_bar(2);
  CHECK(can.apply(G::generator(2, 0, Gauss::i())) == G::generator(2, 0, Gauss(0, -1)));
  auto tr = rho_tr(2);
  // rho^2(xi) = rho(i eta) = -i i xi = xi
  CHECK(tr.apply(tr.apply(G::generator(2, 0))) == G::generator(2, 0));
  CHECK(tr.apply(G::unit(2)) == G::unit(2));

  CHECK_THROWS_AS(make_real_structure({G::generator(1, 0, Gauss(2))}), RealStructureError);
  CHECK_THROWS_AS(make_real_structure({G::unit(1)}), RealStructureError);
  CHECK_THROWS_AS(rho_bar(1, {Gauss(1, 1)}), RealStructureError);
  try {
    make_real_structure({G::generator(2, 1), G::generator(2, 1)});
    FAIL("accepted a non-involution");
  } catch (const RealStructureError& e) {
    CHECK(std::string(e.what()).find("th") != std::string::npos);
  }
}

TEST_CASE("real form bases") {
  auto b1 = real_form_basis(rho_bar(1));
  REQUIRE(b1.size() == 2);
  CHECK(b1[0] == G::unit(1));
  CHECK(b1[1] == G::generator(1, 0));

  auto lambda = phase(3, 4, 5);
  auto rho = rho_bar(1, {lambda});
  auto b = real_form_basis(rho);
  REQUIRE(b.size() == 2);
  for (const auto& e : b) CHECK(rho.apply(e) == e);
  // rho(c theta) = conj(c) lambda theta, so c = 1 + lambda is fixed
  G line = G::generator(1, 0, Gauss(1) + lambda);
  CHECK(rho.apply(line) == line);
  std::vector<SparseVector<Rational>> vs{b[0].realify(), b[1].realify(), line.realify()};
  CHECK(span_basis(4, vs).size() == 2);

  std::mt19937_64 rng(3);
  for (int n = 0; n <= 4; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      auto r = random_real_structure(n, rng);
      auto basis = real_form_basis(r);
      CHECK(basis.size() == (std::size_t{1} << n));
      // closed under multiplication and Im = i Re
      std::vector<SparseVector<Rational>> re, all;
      for (const auto& e : basis) re.push_back(e.realify());
      for (const auto& x : basis)
        for (const auto& y : basis) CHECK(r.apply(x * y) == x * y);
      for (const auto& e : basis) {
        all.push_back(e.realify());
        all.push_back((Gauss::i() * e).realify());
        CHECK(r.apply(Gauss::i() * e) == -(Gauss::i() * e));
      }
      CHECK(span_basis(std::size_t{2} << n, all).size() == (std::size_t{2} << n));
    }
}

TEST_CASE("structural subspaces") {
  auto s2 = structural_subspaces(2);
  CHECK(s2.center == std::vector<Mask>{0, 3});
  CHECK(s2.center == s2.even);
  auto s3 = structural_subspaces(3);
  CHECK(s3.center == std::vector<Mask>{0, 3, 5, 6, 7});
  CHECK(s3.odd_minus == std::vector<Mask>{1, 2, 4});
  CHECK(s3.filtration[2] == std::vector<Mask>{3, 5, 6, 7});
  // every element of the center commutes with the generators
  for (int n = 1; n <= 5; ++n) {
    auto s = structural_subspaces(n);
    for (Mask z : s.center)
      for (int j = 0; j < n; ++j) {
        G zz = G::monomial(n, z), g = G::generator(n, j);
        CHECK(zz * g == g * zz);
      }
  }
  // rho(G_1) = G_1
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 4; ++n) {
    auto r = random_real_structure(n, rng);
    auto g1 = structural_subspaces(n).filtration[1];
    for (Mask m : g1) CHECK(r.apply(G::monomial(n, m)).coeff(0).is_zero());
  }
}

TEST_CASE("normalized generators") {
  auto can = normalize_generators(rho_bar(3));
  for (int k = 0; k < 3; ++k) CHECK(can.t[k] == G::generator(3, k));
  check_normalization(rho_tr(2));
  check_normalization(rho_bar(2, {phase(3, 4, 5), phase(5, -12, 13)}));

  std::mt19937_64 rng(2024);
  for (int n = 0; n <= 5; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      INFO("n = " << n << ", trial " << trial);
      auto rho = random_real_structure(n, rng);
      check_normalization(rho);
    }
}

TEST_CASE("real forms are isomorphic") {
  RealFormIso id(rho_bar(2));
  for (Mask m = 0; m < 4; ++m) CHECK(id(G::monomial(2, m)) == G::monomial(2, m));
  check_iso(rho_tr(2));
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 4; ++trial) check_iso(random_real_structure(3, rng));

  // Re_1 -> Re_2 through Lambda_R(n)
  for (int trial = 0; trial < 4; ++trial) {
    auto r1 = random_real_structure(4, rng), r2 = random_real_structure(4, rng);
    RealFormIso i1(r1), i2(r2);
    auto basis = real_form_basis(r1);
    for (std::size_t a = 0; a < basis.size(); a += 3)
      for (std::size_t b = 0; b < basis.size(); b += 5) {
        G x = i2.inverse(i1(basis[a])), y = i2.inverse(i1(basis[b]));
        CHECK(r2.apply(x) == x);
        CHECK(i2.inverse(i1(basis[a] * basis[b])) == x * y);
      }
  }
}
