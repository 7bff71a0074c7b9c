#include "doctest.h"
#include "sfn/constructors.hpp"

using namespace sfn;
using G = GaussianRational;

namespace {

template <class S>
SparseVector<S> vec(const LieSuperAlgebra<S>& g, std::initializer_list<std::pair<const char*, long>> terms) {
  SparseVector<S> v;
  for (const auto& [id, c] : terms) v.add(g.at(id), S(c));
  return v;
}

// rank of the bracket map g_{-1} x g_{-1} -> g_{-2}
template <class S>
std::size_t bracket_image_rank(const LieSuperAlgebra<S>& g) {
  std::vector<SparseVector<S>> img;
  auto m1 = g.of_degree(-1);
  for (auto a : m1)
    for (auto b : m1) img.push_back(g.bracket_basis(a, b));
  return span_basis(g.dim(), img).size();
}

}  // namespace

TEST_CASE("gl(1|1) odd bracket is the anticommutator") {
  auto g = build_gl<Rational>(1, 1);
  CHECK(g.sdim() == SuperDim{2, 2});
  auto e12 = g.at("E_{1,2}"), e21 = g.at("E_{2,1}");
  CHECK(g.parity(e12) == Parity::Odd);
  CHECK(g.bracket_basis(e12, e21) == vec(g, {{"E_{1,1}", 1}, {"E_{2,2}", 1}}));
  CHECK(g.bracket_basis(e12, e12).empty());
  CHECK(check_super_jacobi(g).ok);
}

TEST_CASE("classical families have the expected dimensions and satisfy Jacobi") {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      if (m + n == 0) continue;
      auto g = build_gl<Rational>(m, n);
      CHECK(g.sdim() == SuperDim{long(m * m + n * n), 2L * m * n});
      auto gc = build_gl<G>(m, n);
      CHECK(gc.sdim() == SuperDim{long(m * m + n * n), 2L * m * n});
      CHECK(check_super_jacobi(gc).ok);
    }
  auto sl21 = matrix_algebra<G>(sl_presentation(2, 1));
  CHECK(sl21.sdim() == SuperDim{4, 4});
  CHECK(check_super_jacobi(sl21).ok);
  for (auto v : {QVariant::J, QVariant::Pi}) {
    auto q = build_q<G>(2, v);
    CHECK(q.sdim() == SuperDim{4, 4});
    CHECK(check_super_jacobi(q).ok);
  }
  CHECK(matrix_algebra<G>(o_presentation(4)).dim() == 6);
  auto sp4 = matrix_algebra<G>(sp_presentation(4));
  CHECK(sp4.dim() == 10);
  CHECK(check_super_jacobi(sp4).ok);
}

TEST_CASE("q_J and q_Pi are intertwined over Q(i)") {
  auto qj = build_q<G>(2, QVariant::J), qp = build_q<G>(2, QVariant::Pi);
  // conjugation by diag(1, i): A -> A, B_J -> -i B_Pi
  auto phi = [&](std::size_t k) {
    G c = qj.parity(k) == Parity::Odd ? -G::i() : G(1);
    return SparseVector<G>::unit(k, c);
  };
  for (std::size_t a = 0; a < qj.dim(); ++a)
    for (std::size_t b = 0; b < qj.dim(); ++b) {
      SparseVector<G> lhs;
      for (const auto& [k, s] : qj.bracket_basis(a, b)) lhs.axpy(s, phi(k));
      CHECK(lhs == qp.bracket(phi(a), phi(b)));
    }
  // over Q the two real forms differ: the odd squares land in A for q_Pi only
  auto rj = build_q<Rational>(1, QVariant::J), rp = build_q<Rational>(1, QVariant::Pi);
  auto bj = rj.at("B_{1,1}"), bp = rp.at("B_{1,1}");
  CHECK(rj.bracket_basis(bj, bj) == vec(rj, {{"A_{1,1}", -2}}));
  CHECK(rp.bracket_basis(bp, bp) == vec(rp, {{"A_{1,1}", 2}}));
}

TEST_CASE("realification doubles the basis and carries i") {
  auto g = build_gl<G>(1, 0);
  auto r = realify(g);
  CHECK(r.sdim() == SuperDim{2, 0});
  CHECK(r.basis(1).id == "iE_{1,1}");
  CHECK(check_super_jacobi(r).ok);

  auto pair = realified_pair(gl_presentation(1, 1));
  CHECK(pair.sdim() == SuperDim{6, 6});
  CHECK(pair.sdim_of_degree(-1) == SuperDim{2, 2});
  CHECK(pair.basis(0).id == "d1");
  CHECK(pair.basis(2).id == "d3");
  CHECK(check_super_jacobi(pair).ok);
  // i squares to -1
  for (const auto& [k, v] : pair.i_op()) {
    SparseVector<Rational> w;
    for (const auto& [m, s] : v) w.axpy(s, pair.i_op().at(m));
    CHECK(w == SparseVector<Rational>::unit(k, Rational(-1)));
  }
  // [E_{1,1}, d1] = d1 and [iE_{1,1}, d1] = i d1 = d3
  CHECK(pair.bracket_basis(pair.at("E_{1,1}"), pair.at("d1")) == SparseVector<Rational>::unit(pair.at("d1")));
  CHECK(pair.bracket_basis(pair.at("iE_{1,1}"), pair.at("d1")) == SparseVector<Rational>::unit(pair.at("d3")));
}

TEST_CASE("heisenberg and antibracket algebras") {
  auto h = build_hei(2, 1);
  CHECK(h.sdim() == SuperDim{3, 1});
  CHECK(h.bracket_basis(h.at("p1"), h.at("q1")) == SparseVector<Rational>::unit(h.at("z")));
  CHECK(h.bracket_basis(h.at("theta"), h.at("theta")) == SparseVector<Rational>::unit(h.at("z")));
  CHECK(check_super_jacobi(h).ok);
  auto h22 = build_hei(2, 2);
  CHECK(h22.bracket_basis(h22.at("eta1"), h22.at("xi1")) == SparseVector<Rational>::unit(h22.at("z")));
  auto ab = build_ab(2);
  CHECK(ab.sdim() == SuperDim{2, 3});
  CHECK(ab.bracket_basis(ab.at("xi1"), ab.at("q1")) == SparseVector<Rational>::unit(ab.at("z"), Rational(-1)));
  CHECK(check_super_jacobi(ab).ok);
}

TEST_CASE("minkowski superalgebras") {
  auto neg = build_minkowski_negative(1);
  CHECK(neg.sdim_of_degree(-2) == SuperDim{4, 0});
  CHECK(neg.sdim_of_degree(-1) == SuperDim{0, 4});
  CHECK(check_super_jacobi(neg).ok);
  // g_{-1} generates g_{-2}
  CHECK(bracket_image_rank(neg) == 4);

  auto conf = build_minkowski(1, MinkowskiCase::Conformal);
  CHECK(conf.sdim_of_degree(0) == SuperDim{8, 0});
  CHECK(conf.cartan().size() == 2);
  CHECK(check_super_jacobi(conf).ok);
  auto red = build_minkowski(1, MinkowskiCase::Reduced);
  CHECK(red.sdim_of_degree(0) == SuperDim{6, 0});
  CHECK(check_super_jacobi(red).ok);

  auto conf2 = build_minkowski(2, MinkowskiCase::Conformal);
  CHECK(conf2.sdim_of_degree(-1) == SuperDim{0, 8});
  CHECK(conf2.sdim_of_degree(0) == SuperDim{11, 0});
  CHECK(check_super_jacobi(conf2).ok);

  auto full = build_minkowski_full(1);
  CHECK(full.sdim() == SuperDim{16, 8});
  CHECK(full.sdim_of_degree(1) == SuperDim{0, 4});
  CHECK(full.sdim_of_degree(2) == SuperDim{4, 0});
  CHECK(check_super_jacobi(full).ok);

  auto mc = build_complexified_minkowski(1);
  CHECK(mc.sdim() == SuperDim{16, 8});
  CHECK(check_super_jacobi(mc).ok);
}

TEST_CASE("a corrupted structure constant is detected") {
  auto g = build_gl<Rational>(2, 1);
  REQUIRE(check_super_jacobi(g).ok);
  auto bad = g;
  auto x = bad.at("E_{1,2}"), y = bad.at("E_{2,1}");
  auto v = bad.bracket_basis(x, y);
  v.add(bad.at("E_{3,3}"), Rational(1));
  bad.set_bracket(x, y, v);
  auto rep = check_super_jacobi(bad);
  CHECK_FALSE(rep.ok);
  CHECK(rep.antisymmetry_violations.empty());
  CHECK_FALSE(rep.jacobi_violations.empty());

  auto skew = g;
  skew.set_bracket_raw(x, y, SparseVector<Rational>());
  CHECK_FALSE(check_super_jacobi(skew).antisymmetry_violations.empty());

  auto notclosed = gl_presentation(2, 0);
  // E_{1,2} and E_{2,1} alone are not closed
  notclosed.elements.pop_back();
  notclosed.elements.erase(notclosed.elements.begin());
  notclosed.cartan.clear();
  CHECK_THROWS_AS(matrix_algebra<Rational>(notclosed), AlgebraError);
}
