#include <stdexcept>

#include "sfn/cohomology.hpp"

namespace sfn {

namespace {

using Poly = Polynomial<Rational>;
using Field = VectorField<Rational>;

Field frame_image(const TensorField& t, std::size_t b) {
  Field out(t.ring);
  for (std::size_t a = 0; a < t.ring->size(); ++a) out.coeff(a) = t.j[a][b];
  return out;
}

}  // namespace

// J(f d_b) = (-1)^{p(J) p(f)} f J(d_b)
Field apply_tensor(const TensorField& t, const Field& x) {
  Field out(t.ring);
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (x.coeff(b).is_zero()) continue;
    Field img = frame_image(t, b);
    for (Parity pf : {Parity::Even, Parity::Odd}) {
      Poly f = x.coeff(b).parity_part(pf);
      if (f.is_zero()) continue;
      Rational s(t.parity == Parity::Odd && pf == Parity::Odd ? -1 : 1);
      out += s * (f * img);
    }
  }
  return out;
}

int tensor_square_sign(const TensorField& t) {
  int found = 0;
  for (std::size_t b = 0; b < t.ring->size(); ++b) {
    Field jj = apply_tensor(t, apply_tensor(t, Field::partial(t.ring, b)));
    int s = 0;
    if (jj == Field::partial(t.ring, b)) s = 1;
    else if (jj == Field::partial(t.ring, b, Rational(-1))) s = -1;
    if (!s || (found && s != found)) return 0;
    found = s;
  }
  return found;
}

Field nijenhuis_oracle(const TensorField& t, const Field& x, const Field& y, NijenhuisVariant v) {
  if (!tensor_square_sign(t)) throw std::invalid_argument("tensor field does not square to +-1");
  auto j = [&](const Field& f) { return apply_tensor(t, f); };
  if (v == NijenhuisVariant::Even) {
    return bracket(j(x), j(y)) - j(bracket(j(x), y)) - j(bracket(x, j(y))) - bracket(x, y);
  }
  // The odd expression is not bilinear over functions, so it is taken on the
  // coordinate frame and extended: N(f d_a, g d_b) = (-1)^{p(g) p(d_a)} f g N(d_a, d_b).
  const auto& ring = t.ring;
  auto frame = [&](std::size_t a, std::size_t b) {
    Field da = Field::partial(ring, a), db = Field::partial(ring, b);
    Rational s(ring->var(a).parity == Parity::Odd ? -1 : 1);
    return s * bracket(j(da), j(db)) - j(bracket(j(da), db)) - s * j(bracket(da, j(db))) - bracket(da, db);
  };
  Field out(ring);
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x.coeff(a).is_zero()) continue;
    for (std::size_t b = 0; b < y.size(); ++b) {
      if (y.coeff(b).is_zero()) continue;
      Field n = frame(a, b);
      if (n.is_zero()) continue;
      for (Parity pg : {Parity::Even, Parity::Odd}) {
        Poly g = y.coeff(b).parity_part(pg);
        if (g.is_zero()) continue;
        Rational s(pg == Parity::Odd && ring->var(a).parity == Parity::Odd ? -1 : 1);
        out += s * ((x.coeff(a) * g) * n);
      }
    }
  }
  return out;
}

TensorField flat_complex_structure(int p, int q) {
  std::vector<Indeterminate> vars;
  for (int i = 1; i <= 2 * p; ++i) vars.push_back({"x" + std::to_string(i), Parity::Even, 1});
  for (int i = 1; i <= 2 * q; ++i) vars.push_back({"xi" + std::to_string(i), Parity::Odd, 1});
  TensorField t;
  t.ring = std::make_shared<const PolyRing>(std::move(vars));
  std::size_t n = t.ring->size();
  t.j.assign(n, std::vector<Poly>(n, Poly(t.ring)));
  auto half = [&](std::size_t start, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      t.j[start + k + i][start + i] = Poly::constant(t.ring, Rational(1));
      t.j[start + i][start + k + i] = Poly::constant(t.ring, Rational(-1));
    }
  };
  half(0, static_cast<std::size_t>(p));
  half(2 * static_cast<std::size_t>(p), static_cast<std::size_t>(q));
  return t;
}

TensorField flat_pi_symmetry(int n) {
  std::vector<Indeterminate> vars;
  for (int i = 1; i <= n; ++i) vars.push_back({"x" + std::to_string(i), Parity::Even, 1});
  for (int i = 1; i <= n; ++i) vars.push_back({"xi" + std::to_string(i), Parity::Odd, 1});
  TensorField t;
  t.ring = std::make_shared<const PolyRing>(std::move(vars));
  t.parity = Parity::Odd;
  std::size_t m = t.ring->size(), k = static_cast<std::size_t>(n);
  t.j.assign(m, std::vector<Poly>(m, Poly(t.ring)));
  for (std::size_t i = 0; i < k; ++i) {
    t.j[k + i][i] = Poly::constant(t.ring, Rational(1));
    t.j[i][k + i] = Poly::constant(t.ring, Rational(1));
  }
  return t;
}

std::map<std::vector<std::size_t>, Rational> symplectic_obstruction_map(const CochainComplex<Rational>& cx,
                                                                         const Cochain<Rational>& c,
                                                                         const DenseMatrix<Rational>& b) {
  const auto& g = cx.algebra();
  const auto& negs = cx.negatives();
  const std::size_t n = negs.size();
  if (static_cast<std::size_t>(b.rows()) != n || static_cast<std::size_t>(b.cols()) != n)
    throw std::invalid_argument("form size differs from dim V");
  for (auto v : negs)
    if (g.parity(v) != Parity::Even || g.degree(v) != -1) throw std::invalid_argument("V must be even in degree -1");
  if (span_basis(n, [&] {
        std::vector<SparseVector<Rational>> rows;
        for (std::size_t i = 0; i < n; ++i) {
          SparseVector<Rational> r;
          for (std::size_t j = 0; j < n; ++j) r.add(j, b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
          rows.push_back(r);
        }
        return rows;
      }()).size() != n)
    throw std::invalid_argument("degenerate form");
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[negs[i]] = i;
  auto form = [&](const SparseVector<Rational>& x, std::size_t w) {
    Rational acc(0);
    for (const auto& [m, a] : x) {
      auto it = pos.find(m);
      if (it == pos.end()) throw std::invalid_argument("cochain must take values in V");
      acc += a * b(static_cast<Eigen::Index>(it->second), static_cast<Eigen::Index>(w));
    }
    return acc;
  };
  std::map<std::vector<std::size_t>, Rational> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Rational v = form(cx.evaluate(c, {negs[i], negs[j]}), k) + form(cx.evaluate(c, {negs[j], negs[k]}), i) +
                     form(cx.evaluate(c, {negs[k], negs[i]}), j);
        if (!v.is_zero()) out[{i, j, k}] = v;
      }
  return out;
}

DenseMatrix<Rational> standard_symplectic_form(std::size_t n2) {
  DenseMatrix<Rational> b(static_cast<Eigen::Index>(n2), static_cast<Eigen::Index>(n2));
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) b(i, j) = Rational(0);
  std::size_t k = n2 / 2;
  for (std::size_t i = 0; i < k; ++i) {
    b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k + i)) = Rational(1);
    b(static_cast<Eigen::Index>(k + i), static_cast<Eigen::Index>(i)) = Rational(-1);
  }
  return b;
}

}  // namespace sfn
