#include "doctest.h"
#include "sfn/constructors.hpp"
#include "sfn/contact.hpp"
#include "sfn/prolong.hpp"

using namespace sfn;

namespace {

LieSuperAlgebra<Rational> standard_pair(const MatrixPresentation& p) {
  return linear_pair<Rational>(p, standard_module(p.format));
}

SuperDim sd(long e, long o) { return {e, o}; }

// Aligns `other` into `target` and checks that brackets are preserved.
template <class S>
void check_same_algebra(const LieSuperAlgebra<S>& target, const LieSuperAlgebra<S>& other) {
  auto image = align_by_action(target, other);
  CHECK(is_homomorphism(other, target, image));
  std::vector<SparseVector<S>> nonzero;
  for (const auto& v : image) nonzero.push_back(v);
  CHECK(span_basis(target.dim(), nonzero).size() == other.dim());
}

template <class S>
void check_realization(const LieSuperAlgebra<S>& g) {
  auto real = realize_as_vector_fields(g);
  auto md = g.max_degree();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j) {
      if (md && !g.complete() && g.degree(i) + g.degree(j) > *md) continue;
      VectorField<S> want(real.ring);
      for (const auto& [m, c] : g.bracket_basis(i, j)) want += c * real.fields[m];
      INFO(g.basis(i).id << ", " << g.basis(j).id);
      CHECK(bracket(real.fields[i], real.fields[j]) == want);
    }
}

}  // namespace

TEST_CASE("classical prolongations") {
  auto gl2 = generalized_prolong(standard_pair(gl_presentation(2, 0)), 2);
  CHECK(gl2.dims.at(1) == sd(6, 0));
  CHECK(gl2.dims.at(2) == sd(8, 0));
  CHECK(check_super_jacobi(gl2.algebra).ok);

  auto sp2 = generalized_prolong(standard_pair(sp_presentation(2)), 2);
  CHECK(sp2.dims.at(1) == sd(4, 0));
  CHECK(sp2.dims.at(2) == sd(5, 0));

  auto o3 = generalized_prolong(standard_pair(o_presentation(3)), 3);
  CHECK(o3.dims.at(1) == sd(0, 0));
  CHECK(o3.algebra.complete());
  CHECK(o3.dims.count(2) == 0);
}

TEST_CASE("g_0 must be a faithful algebra of derivations") {
  auto p = standard_pair(gl_presentation(2, 0));
  // a central element acting by zero is not faithful
  std::vector<BasisVector> extra{{"c", Parity::Even, 0, {}}};
  p.extend(extra);
  CHECK_THROWS_AS(generalized_prolong(p, 1), AlgebraError);
}

TEST_CASE("Heisenberg: degree zero derivations and prolongation") {
  auto hei = build_hei(2, 0);
  auto der = degree_zero_derivations(hei);
  CHECK(der.sdim_of_degree(0) == sd(4, 0));
  CHECK(check_super_jacobi(der).ok);
  auto pr = generalized_prolong(der, 2);
  CHECK(pr.dims.at(1) == sd(6, 0));
  CHECK(pr.dims.at(2) == sd(9, 0));
  CHECK(check_super_jacobi(pr.algebra).ok);

  auto hei11 = build_hei(2, 1);
  auto der11 = degree_zero_derivations(hei11);
  // c + osp(1|2)
  CHECK(der11.sdim_of_degree(0) == sd(4, 2));
}

TEST_CASE("prolongation of (id, gl(m|n)) is the algebra of vector fields") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; m + n <= 3; ++n) {
      if (m + n == 0) continue;
      INFO("gl(" << m << "|" << n << ")");
      auto pr = generalized_prolong(standard_pair(gl_presentation(m, n)), 3);
      auto va = vect_algebra(m, n, 3, false);
      for (int k = -1; k <= 3; ++k) {
        INFO("degree " << k);
        SuperDim got = pr.dims.count(k) ? pr.dims.at(k) : sd(0, 0);
        CHECK(got == va.algebra.sdim_of_degree(k));
      }
      check_same_algebra(pr.algebra, va.algebra);
    }
}

TEST_CASE("Cartan prolongation through vector fields agrees") {
  for (auto p : {gl_presentation(1, 1), sl_presentation(1, 2), q_presentation(2, QVariant::Pi)}) {
    INFO(p.name);
    auto pair = standard_pair(p);
    auto a = generalized_prolong(pair, 2);
    auto b = cartan_prolong(pair, 2);
    for (int k = -1; k <= 2; ++k) {
      SuperDim x = a.dims.count(k) ? a.dims.at(k) : sd(0, 0);
      SuperDim y = b.dims.count(k) ? b.dims.at(k) : sd(0, 0);
      CHECK(x == y);
    }
    CHECK(check_super_jacobi(b.algebra).ok);
    check_same_algebra(a.algebra, b.algebra);
  }
}

TEST_CASE("svect(1|2) is the prolongation of sl(1|2)") {
  auto pr = generalized_prolong(standard_pair(sl_presentation(1, 2)), 2);
  auto sv = vect_algebra(1, 2, 2, true);
  for (int k = -1; k <= 2; ++k) CHECK(pr.dims.at(k) == sv.algebra.sdim_of_degree(k));
  check_same_algebra(pr.algebra, sv.algebra);
}

TEST_CASE("contact algebras are prolongations of their non-positive parts") {
  for (auto cs : {contact_space_k(0, 1), contact_space_k(0, 2), contact_space_k(0, 3), contact_space_k(1, 1),
                  contact_space_m(1)}) {
    INFO(cs.name());
    auto ca = contact_algebra(cs, 3);
    auto pair = truncate_degree(ca.algebra, 0);
    auto pr = generalized_prolong(pair, 3);
    for (int k = -2; k <= 3; ++k) {
      INFO("degree " << k);
      SuperDim got = pr.dims.count(k) ? pr.dims.at(k) : sd(0, 0);
      CHECK(got == ca.algebra.sdim_of_degree(k));
    }
    check_same_algebra(pr.algebra, ca.algebra);
    auto der = degree_zero_derivations(pair);
    if (cs.kind == ContactKind::K) CHECK(der.sdim_of_degree(0) == pair.sdim_of_degree(0));
  }
}

TEST_CASE("Minkowski superspace") {
  auto red = generalized_prolong(build_minkowski(1, MinkowskiCase::Reduced), 3);
  CHECK(red.dims.at(1) == sd(0, 0));
  auto conf = generalized_prolong(build_minkowski(1, MinkowskiCase::Conformal), 4);
  CHECK(conf.dims.at(1) == sd(0, 4));
  CHECK(conf.dims.at(2) == sd(4, 0));
  CHECK(conf.algebra.complete());
  CHECK(conf.algebra.sdim() == sd(16, 8));
  CHECK(check_super_jacobi(conf.algebra).ok);
  check_same_algebra(conf.algebra, build_minkowski_full(1));

  // der_0 of the negative part contains the conformal g_0
  auto mink = build_minkowski(1, MinkowskiCase::Conformal);
  auto der = degree_zero_derivations(mink);
  RowEchelon<Rational> ech(mink.negative_part().size() * kSlot);
  for (auto i : der.of_degree(0)) ech.insert(action_vector(der, SparseVector<Rational>::unit(i)));
  for (auto i : mink.of_degree(0)) CHECK(ech.contains(action_vector(mink, SparseVector<Rational>::unit(i))));
}

TEST_CASE("complex structure extends to the prolongation") {
  auto pr = generalized_prolong(realified_pair(gl_presentation(1, 1)), 2);
  const auto& g = pr.algebra;
  REQUIRE(g.i_op().size() == g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    SparseVector<Rational> twice;
    for (const auto& [j, c] : g.i_op().at(i)) twice.axpy(c, g.i_op().at(j));
    CHECK(twice == SparseVector<Rational>::unit(i, Rational(-1)));
  }
  auto c = generalized_prolong(standard_pair(gl_presentation(1, 1)), 2);
  auto cx = generalized_prolong(linear_pair<GaussianRational>(gl_presentation(1, 1), standard_module(standard_format(1, 1))), 2);
  for (int k = -1; k <= 2; ++k) {
    CHECK(g.sdim_of_degree(k).even == 2 * cx.algebra.sdim_of_degree(k).even);
    CHECK(g.sdim_of_degree(k).odd == 2 * cx.algebra.sdim_of_degree(k).odd);
    CHECK(cx.algebra.sdim_of_degree(k) == c.algebra.sdim_of_degree(k));
  }
}

TEST_CASE("realization by vector fields is a homomorphism") {
  check_realization(truncate_degree(contact_algebra(contact_space_k(0, 2), 2).algebra, 2));
  check_realization(truncate_degree(contact_algebra(contact_space_m(1), 2).algebra, 2));
  check_realization(generalized_prolong(standard_pair(gl_presentation(1, 1)), 2).algebra);
  check_realization(build_minkowski_full(1));
  auto hei = build_hei(2, 1);
  auto real = realize_as_vector_fields(hei);
  auto negs = hei.negative_part();
  for (std::size_t s = 0; s < negs.size(); ++s)
    CHECK(real.fields[negs[s]].coeff(s) == Polynomial<Rational>::constant(real.ring, Rational(1)));
  auto pair = standard_pair(gl_presentation(1, 2));
  auto flat = realize_as_vector_fields(pair);
  negs = pair.negative_part();
  for (std::size_t s = 0; s < negs.size(); ++s) CHECK(flat.fields[negs[s]] == VectorField<Rational>::partial(flat.ring, s));
}
