#include "doctest.h"
#include "sfn/contact.hpp"

using namespace sfn;
using Poly = Polynomial<Rational>;
using Field = VectorField<Rational>;

namespace {

Poly mono(const ContactSpace& cs, std::initializer_list<const char*> vars) {
  Poly p = Poly::constant(cs.ring, Rational(1));
  for (auto v : vars) p = p * Poly::var(cs.ring, cs.ring->at(v));
  return p;
}

void check_form_preserved(const ContactSpace& cs, int max_weight) {
  for (int w = 0; w <= max_weight; ++w)
    for (const auto& m : cs.ring->monomials_of_weight(w)) {
      Poly f = Poly::monomial(cs.ring, m);
      Field k = contact_field(cs, f);
      Poly factor(cs.ring);
      INFO(cs.name() << " f = " << f.str());
      REQUIRE(preserves_contact_form(cs, k, &factor));
      Poly expect = Rational(2) * f.derivative(cs.time);
      if (cs.kind == ContactKind::M && f.parity() == Parity::Odd) expect = Rational(1) * expect;
      if (cs.kind == ContactKind::M && f.parity() == Parity::Even) expect = Rational(-1) * expect;
      CHECK(factor == expect);
    }
}

}  // namespace

TEST_CASE("K_1 is twice d/dt") {
  auto cs = contact_space_k(0, 2);
  Field k1 = contact_field(cs, Poly::constant(cs.ring, Rational(1)));
  CHECK(k1 == Field::partial(cs.ring, cs.time, Rational(2)));
}

TEST_CASE("contact fields preserve the contact form") {
  check_form_preserved(contact_space_k(0, 1), 4);
  check_form_preserved(contact_space_k(0, 2), 4);
  check_form_preserved(contact_space_k(0, 3), 4);
  check_form_preserved(contact_space_k(1, 1), 3);
  check_form_preserved(contact_space_m(1), 4);
}

TEST_CASE("contact algebras close and satisfy Jacobi") {
  for (auto cs : {contact_space_k(0, 2), contact_space_k(0, 3), contact_space_k(1, 1), contact_space_m(1)}) {
    auto ca = contact_algebra(cs, 2);
    INFO(cs.name());
    CHECK(check_super_jacobi(ca.algebra).ok);
  }
  auto k12 = contact_algebra(contact_space_k(0, 2), 1).algebra;
  CHECK(k12.sdim_of_degree(-2) == SuperDim{1, 0});
  CHECK(k12.sdim_of_degree(-1) == SuperDim{0, 2});
  CHECK(k12.sdim_of_degree(0) == SuperDim{2, 0});
  // [K_xi, K_eta] is a nonzero multiple of K_1
  auto v = k12.bracket_basis(k12.at("xi"), k12.at("eta"));
  REQUIRE(v.nnz() == 1);
  CHECK(v.lead() == k12.at("1"));
}

TEST_CASE("M_tau is a grading operator on m(1)") {
  auto ca = contact_algebra(contact_space_m(1), 1);
  auto& g = ca.algebra;
  auto tau = g.at("tau");
  for (std::size_t i = 0; i < g.dim(); ++i) {
    auto v = g.bracket_basis(tau, i);
    if (g.degree(i) == 0 && v.empty()) continue;
    REQUIRE(v.nnz() == 1);
    CHECK(v.lead() == i);
  }
  CHECK(g.sdim_of_degree(-2) == SuperDim{0, 1});
  CHECK(g.sdim_of_degree(-1) == SuperDim{1, 1});
  CHECK(g.sdim_of_degree(0) == SuperDim{2, 1});
}

TEST_CASE("divergence-free fields") {
  auto v = vect_algebra(1, 2, 1, false);
  auto s = vect_algebra(1, 2, 1, true);
  CHECK(v.algebra.sdim_of_degree(0) == SuperDim{5, 4});
  CHECK(s.algebra.sdim_of_degree(0) == SuperDim{4, 4});
  CHECK(check_super_jacobi(s.algebra).ok);
  for (const auto& f : s.fields) CHECK(divergence(f).is_zero());
}
