#include "sfn/algebra.hpp"

#include <cctype>

namespace sfn {

std::string i_name(const std::string& id) {
  if (id.size() > 1 && id[0] == 'i' && (id[1] == '(' || std::isupper(static_cast<unsigned char>(id[1]))))
    return id.substr(1);
  return "i" + id;
}

LieSuperAlgebra<Rational> realify(const LieSuperAlgebra<GaussianRational>& g) {
  const std::size_t n = g.dim();
  std::vector<BasisVector> basis;
  for (std::size_t a = 0; a < n; ++a) {
    BasisVector b = g.basis(a);
    b.weight.clear();
    basis.push_back(b);
  }
  for (std::size_t a = 0; a < n; ++a) {
    BasisVector b = g.basis(a);
    b.weight.clear();
    b.id = i_name(b.id);
    basis.push_back(b);
  }
  LieSuperAlgebra<Rational> r(g.name() + "^R", std::move(basis));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const auto& c = g.bracket_basis(a, b);
      SparseVector<Rational> xx, xi, ii;
      for (const auto& [k, z] : c) {
        xx.add(k, z.re());
        xx.add(n + k, z.im());
        xi.add(n + k, z.re());
        xi.add(k, -z.im());
      }
      ii = -xx;
      r.set_bracket(a, b, xx);
      r.set_bracket(n + a, n + b, ii);
      r.set_bracket(a, n + b, xi);
      if (a != b) {
        // [i X_a, X_b] = i [X_a, X_b] as well
        r.set_bracket(n + a, b, xi);
      }
    }
  r.set_max_degree(g.max_degree());
  r.set_complete(g.complete());
  for (std::size_t a = 0; a < n; ++a) {
    r.set_i_op(a, SparseVector<Rational>::unit(n + a));
    r.set_i_op(n + a, SparseVector<Rational>::unit(a, Rational(-1)));
  }
  r.set_cartan(g.cartan());
  r.compute_weights();
  return r;
}

LieSuperAlgebra<GaussianRational> complexify(const LieSuperAlgebra<Rational>& g) {
  LieSuperAlgebra<GaussianRational> c(g.name() + "^C", g.basis());
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a; b < g.dim(); ++b) {
      SparseVector<GaussianRational> v;
      for (const auto& [k, s] : g.bracket_basis(a, b)) v.add(k, GaussianRational(s));
      c.set_bracket(a, b, v);
    }
  c.set_max_degree(g.max_degree());
  c.set_complete(g.complete());
  c.set_cartan(g.cartan());
  return c;
}

template <class S>
DenseMatrix<S> inverse(const DenseMatrix<S>& p) {
  const Eigen::Index n = p.rows();
  if (p.cols() != n) throw DimensionMismatch("inverse: matrix is not square");
  DenseMatrix<S> aug(n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      aug(i, j) = p(i, j);
      aug(i, n + j) = S(i == j ? 1 : 0);
    }
  RowEchelon<S> e = dense_row_echelon(aug);
  if (e.rank() != static_cast<std::size_t>(n) || e.rows().rbegin()->first >= static_cast<std::size_t>(n))
    throw std::domain_error("inverse: singular matrix");
  DenseMatrix<S> inv(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) inv(i, j) = S(0);
  for (const auto& [piv, row] : e.rows())
    for (const auto& [c, s] : row)
      if (c >= static_cast<std::size_t>(n)) inv(static_cast<Eigen::Index>(piv), static_cast<Eigen::Index>(c) - n) = s;
  return inv;
}

template DenseMatrix<Rational> inverse(const DenseMatrix<Rational>&);
template DenseMatrix<GaussianRational> inverse(const DenseMatrix<GaussianRational>&);

LieSuperAlgebra<Rational> change_basis(const LieSuperAlgebra<Rational>& g, const DenseMatrix<Rational>& p) {
  const std::size_t n = g.dim();
  if (static_cast<std::size_t>(p.rows()) != n || static_cast<std::size_t>(p.cols()) != n)
    throw DimensionMismatch("change_basis: matrix size differs from algebra dimension");
  DenseMatrix<Rational> q = inverse(p);
  std::vector<SparseVector<Rational>> cols(n);
  std::vector<BasisVector> basis;
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational& s = p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (s.is_zero()) continue;
      cols[j].add(i, s);
      if (!first) first = i;
      if (g.parity(i) != g.parity(*first) || g.basis(i).degree != g.basis(*first).degree)
        throw AlgebraError("change_basis: new basis vector is not homogeneous");
    }
    BasisVector b = g.basis(*first);
    b.id = "f" + std::to_string(j + 1);
    b.weight.clear();
    basis.push_back(b);
  }
  LieSuperAlgebra<Rational> out(g.name() + "'", std::move(basis));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      SparseVector<Rational> v = g.bracket(cols[a], cols[b]);
      SparseVector<Rational> w;
      for (std::size_t i = 0; i < n; ++i) {
        Rational acc(0);
        for (const auto& [k, s] : v) acc += q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) * s;
        w.add(i, acc);
      }
      out.set_bracket(a, b, w);
    }
  out.set_max_degree(g.max_degree());
  out.set_complete(g.complete());
  return out;
}

}  // namespace sfn
