#include "sfn/constructors.hpp"

namespace sfn {

using G = GaussianRational;

CMatrix zero_matrix(std::size_t rows, std::size_t cols) {
  CMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = G(0);
  return m;
}

CMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j, const G& value) {
  CMatrix m = zero_matrix(n, n);
  m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = value;
  return m;
}

namespace {

CMatrix product(const CMatrix& a, const CMatrix& b) {
  CMatrix out = zero_matrix(static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(b.cols()));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

void flatten_into(const CMatrix& m, SparseVector<Rational>& out) {
  std::vector<SparseVector<Rational>::Entry> e;
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j, ++k) {
      if (!m(i, j).re().is_zero()) e.emplace_back(2 * k, m(i, j).re());
      if (!m(i, j).im().is_zero()) e.emplace_back(2 * k + 1, m(i, j).im());
    }
  out = SparseVector<Rational>::from_sorted(std::move(e));
}

void flatten_into(const CMatrix& m, SparseVector<G>& out) {
  std::vector<SparseVector<G>::Entry> e;
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j, ++k)
      if (!m(i, j).is_zero()) e.emplace_back(k, m(i, j));
  out = SparseVector<G>::from_sorted(std::move(e));
}

template <class S>
SparseVector<S> flatten(const CMatrix& m) {
  SparseVector<S> v;
  flatten_into(m, v);
  return v;
}

template <class S>
std::size_t flat_dim(const CMatrix& m) {
  std::size_t n = static_cast<std::size_t>(m.rows() * m.cols());
  return std::is_same_v<S, Rational> ? 2 * n : n;
}

template <class S>
void install_cartan(LieSuperAlgebra<S>& g, const std::vector<std::string>& ids) {
  std::vector<std::size_t> c;
  for (const auto& id : ids) c.push_back(g.at(id));
  g.set_cartan(c);
  g.compute_weights();
}

}  // namespace

Parity matrix_parity(const std::vector<Parity>& format, const CMatrix& m) {
  std::optional<Parity> p;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      Parity q = format.at(static_cast<std::size_t>(i)) + format.at(static_cast<std::size_t>(j));
      if (p && *p != q) throw AlgebraError("inhomogeneous supermatrix");
      p = q;
    }
  return p.value_or(Parity::Even);
}

Parity vector_parity(const std::vector<Parity>& format, const CMatrix& v) {
  std::optional<Parity> p;
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    if (v(i, 0).is_zero()) continue;
    Parity q = format.at(static_cast<std::size_t>(i));
    if (p && *p != q) throw AlgebraError("inhomogeneous vector");
    p = q;
  }
  return p.value_or(Parity::Even);
}

CMatrix supercommutator(const std::vector<Parity>& format, const CMatrix& a, const CMatrix& b) {
  int s = koszul_sign(matrix_parity(format, a), matrix_parity(format, b));
  CMatrix ab = product(a, b), ba = product(b, a);
  for (Eigen::Index i = 0; i < ab.rows(); ++i)
    for (Eigen::Index j = 0; j < ab.cols(); ++j) ab(i, j) -= G(s) * ba(i, j);
  return ab;
}

template <class S>
LieSuperAlgebra<S> matrix_algebra(const MatrixPresentation& p) {
  std::vector<BasisVector> basis;
  std::vector<SparseVector<S>> flat;
  if (p.elements.empty()) return LieSuperAlgebra<S>(p.name, {});
  std::size_t dim = flat_dim<S>(p.elements[0].m);
  for (const auto& e : p.elements) {
    basis.push_back({e.id, matrix_parity(p.format, e.m), e.degree, {}});
    flat.push_back(flatten<S>(e.m));
  }
  Coordinatizer<S> coords(dim, flat);
  LieSuperAlgebra<S> g(p.name, std::move(basis));
  for (std::size_t i = 0; i < p.elements.size(); ++i)
    for (std::size_t j = i; j < p.elements.size(); ++j) {
      CMatrix c = supercommutator(p.format, p.elements[i].m, p.elements[j].m);
      SparseVector<S> v;
      if (!coords.solve(flatten<S>(c), v))
        throw AlgebraError(p.name + ": span not closed under [" + p.elements[i].id + ", " + p.elements[j].id + "]");
      g.set_bracket(i, j, v);
    }
  install_cartan(g, p.cartan);
  return g;
}

template LieSuperAlgebra<Rational> matrix_algebra(const MatrixPresentation&);
template LieSuperAlgebra<G> matrix_algebra(const MatrixPresentation&);

template <class S>
LieSuperAlgebra<S> linear_pair(const MatrixPresentation& g0, const std::vector<ModuleVector>& module) {
  LieSuperAlgebra<S> alg = matrix_algebra<S>(g0);
  const std::size_t nv = module.size(), n0 = g0.elements.size();
  std::vector<BasisVector> basis;
  std::vector<SparseVector<S>> flat;
  for (const auto& v : module) {
    basis.push_back({v.id, vector_parity(g0.format, v.v), -1, {}});
    flat.push_back(flatten<S>(v.v));
  }
  for (std::size_t i = 0; i < n0; ++i) {
    BasisVector b = alg.basis(i);
    b.degree = 0;
    b.weight.clear();
    basis.push_back(b);
  }
  std::size_t dim = module.empty() ? 0 : flat_dim<S>(module[0].v);
  Coordinatizer<S> coords(dim, flat);
  LieSuperAlgebra<S> g(g0.name.empty() ? "pair" : "(V, " + g0.name + ")", std::move(basis));
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = i; j < n0; ++j)
      g.set_bracket(nv + i, nv + j, alg.bracket_basis(i, j).remap([&](std::size_t k) {
        return static_cast<long long>(nv + k);
      }));
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t a = 0; a < nv; ++a) {
      CMatrix w = product(g0.elements[i].m, module[a].v);
      SparseVector<S> v;
      if (!coords.solve(flatten<S>(w), v))
        throw AlgebraError("module not invariant under " + g0.elements[i].id);
      g.set_bracket(nv + i, a, v);
    }
  install_cartan(g, g0.cartan);
  return g;
}

template LieSuperAlgebra<Rational> linear_pair(const MatrixPresentation&, const std::vector<ModuleVector>&);
template LieSuperAlgebra<G> linear_pair(const MatrixPresentation&, const std::vector<ModuleVector>&);

std::vector<Parity> standard_format(int m, int n) {
  std::vector<Parity> f(static_cast<std::size_t>(m), Parity::Even);
  f.insert(f.end(), static_cast<std::size_t>(n), Parity::Odd);
  return f;
}

std::vector<ModuleVector> standard_module(const std::vector<Parity>& format, const std::string& prefix) {
  std::vector<ModuleVector> out;
  for (std::size_t i = 0; i < format.size(); ++i) {
    CMatrix v = zero_matrix(format.size(), 1);
    v(static_cast<Eigen::Index>(i), 0) = G(1);
    out.push_back({prefix + std::to_string(i + 1), v});
  }
  return out;
}

namespace {
std::string idx2(const std::string& letter, std::size_t i, std::size_t j) {
  return letter + "_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
}
}  // namespace

MatrixPresentation gl_presentation(int m, int n) {
  MatrixPresentation p;
  p.name = "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  p.format = standard_format(m, n);
  std::size_t N = p.format.size();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) p.elements.push_back({idx2("E", i, j), std::nullopt, unit_matrix(N, i, j)});
  for (std::size_t i = 0; i < N; ++i) p.cartan.push_back(idx2("E", i, i));
  return p;
}

MatrixPresentation sl_presentation(int m, int n) {
  MatrixPresentation p;
  p.name = "sl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  p.format = standard_format(m, n);
  std::size_t N = p.format.size();
  for (std::size_t k = 0; k + 1 < N; ++k) {
    // supertraceless diagonal element
    CMatrix h = unit_matrix(N, k, k);
    h(static_cast<Eigen::Index>(k + 1), static_cast<Eigen::Index>(k + 1)) =
        G(-koszul_sign(p.format[k], Parity::Odd) * koszul_sign(p.format[k + 1], Parity::Odd) * 1);
    std::string id = "H_" + std::to_string(k + 1);
    p.elements.push_back({id, std::nullopt, h});
    p.cartan.push_back(id);
  }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) p.elements.push_back({idx2("E", i, j), std::nullopt, unit_matrix(N, i, j)});
  return p;
}

MatrixPresentation q_presentation(int n, QVariant v) {
  MatrixPresentation p;
  p.name = std::string(v == QVariant::J ? "q_J(" : "q_Pi(") + std::to_string(n) + ")";
  p.format = standard_format(n, n);
  std::size_t N = 2 * static_cast<std::size_t>(n), un = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) {
      CMatrix a = unit_matrix(N, i, j);
      a(static_cast<Eigen::Index>(un + i), static_cast<Eigen::Index>(un + j)) = G(1);
      p.elements.push_back({idx2("A", i, j), std::nullopt, a});
    }
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) {
      CMatrix b = unit_matrix(N, i, un + j);
      b(static_cast<Eigen::Index>(un + i), static_cast<Eigen::Index>(j)) = G(v == QVariant::J ? -1 : 1);
      p.elements.push_back({idx2("B", i, j), std::nullopt, b});
    }
  for (std::size_t i = 0; i < un; ++i) p.cartan.push_back(idx2("A", i, i));
  return p;
}

MatrixPresentation o_presentation(int n) {
  MatrixPresentation p;
  p.name = "o(" + std::to_string(n) + ")";
  std::size_t N = static_cast<std::size_t>(n);
  p.format = standard_format(n, 0);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      CMatrix a = unit_matrix(N, i, j);
      a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = G(-1);
      p.elements.push_back({"(" + idx2("E", i, j) + "-" + idx2("E", j, i) + ")", std::nullopt, a});
    }
  return p;
}

MatrixPresentation sp_presentation(int n2) {
  MatrixPresentation p;
  p.name = "sp(" + std::to_string(n2) + ")";
  std::size_t k = static_cast<std::size_t>(n2 / 2), N = 2 * k;
  p.format = standard_format(static_cast<int>(N), 0);
  // (A, B; C, -A^t) with B, C symmetric
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      CMatrix a = unit_matrix(N, i, j);
      a(static_cast<Eigen::Index>(k + j), static_cast<Eigen::Index>(k + i)) = G(-1);
      std::string id = idx2("A", i, j);
      p.elements.push_back({id, std::nullopt, a});
      if (i == j) p.cartan.push_back(id);
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      CMatrix b = unit_matrix(N, i, k + j);
      b(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k + i)) = G(1);
      p.elements.push_back({idx2("B", i, j), std::nullopt, b});
      CMatrix c = unit_matrix(N, k + i, j);
      c(static_cast<Eigen::Index>(k + j), static_cast<Eigen::Index>(i)) = G(1);
      p.elements.push_back({idx2("C", i, j), std::nullopt, c});
    }
  return p;
}

LieSuperAlgebra<Rational> realified_pair(const MatrixPresentation& g0) {
  auto pair = linear_pair<G>(g0, standard_module(g0.format));
  LieSuperAlgebra<Rational> r = realify(pair);
  std::size_t nv = g0.format.size(), n = pair.dim();
  // relabel the module: d_1..d_N then d_{N+1}..d_{2N} for i*d_j
  for (std::size_t j = 0; j < nv; ++j) r.basis_mut(n + j).id = "d" + std::to_string(nv + j + 1);
  r.set_name(g0.name + "^R on R^" + std::to_string(2 * nv));
  // order the realified basis as V, iV, g0, i g0
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < nv; ++j) order.push_back(j);
  for (std::size_t j = 0; j < nv; ++j) order.push_back(n + j);
  for (std::size_t j = nv; j < n; ++j) order.push_back(j);
  for (std::size_t j = nv; j < n; ++j) order.push_back(n + j);
  std::vector<long long> pos(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<long long>(k);
  std::vector<BasisVector> basis;
  for (auto k : order) basis.push_back(r.basis(k));
  LieSuperAlgebra<Rational> out(r.name(), basis);
  auto re = [&](const SparseVector<Rational>& v) { return v.remap([&](std::size_t k) { return pos[k]; }); };
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a; b < order.size(); ++b)
      out.set_bracket(a, b, re(r.bracket_basis(order[a], order[b])));
  for (const auto& [k, v] : r.i_op()) out.set_i_op(static_cast<std::size_t>(pos[k]), re(v));
  std::vector<std::size_t> cartan;
  for (auto h : r.cartan()) cartan.push_back(static_cast<std::size_t>(pos[h]));
  out.set_cartan(cartan);
  out.compute_weights();
  return out;
}

LieSuperAlgebra<Rational> build_hei(int n2, int m) {
  std::vector<BasisVector> b;
  int n = n2 / 2, k = m / 2;
  for (int i = 1; i <= n; ++i) b.push_back({"p" + std::to_string(i), Parity::Even, -1, {}});
  for (int i = 1; i <= n; ++i) b.push_back({"q" + std::to_string(i), Parity::Even, -1, {}});
  for (int j = 1; j <= k; ++j) b.push_back({"xi" + std::to_string(j), Parity::Odd, -1, {}});
  for (int j = 1; j <= k; ++j) b.push_back({"eta" + std::to_string(j), Parity::Odd, -1, {}});
  if (m % 2) b.push_back({"theta", Parity::Odd, -1, {}});
  b.push_back({"z", Parity::Even, -2, {}});
  LieSuperAlgebra<Rational> g("hei(" + std::to_string(n2) + "|" + std::to_string(m) + ")", b);
  std::size_t z = g.dim() - 1;
  auto zv = SparseVector<Rational>::unit(z);
  for (int i = 1; i <= n; ++i) g.set_bracket(g.at("p" + std::to_string(i)), g.at("q" + std::to_string(i)), zv);
  for (int j = 1; j <= k; ++j) g.set_bracket(g.at("xi" + std::to_string(j)), g.at("eta" + std::to_string(j)), zv);
  if (m % 2) g.set_bracket(g.at("theta"), g.at("theta"), zv);
  return g;
}

LieSuperAlgebra<Rational> build_ab(int n) {
  std::vector<BasisVector> b;
  for (int i = 1; i <= n; ++i) b.push_back({"q" + std::to_string(i), Parity::Even, -1, {}});
  for (int i = 1; i <= n; ++i) b.push_back({"xi" + std::to_string(i), Parity::Odd, -1, {}});
  b.push_back({"z", Parity::Odd, -2, {}});
  LieSuperAlgebra<Rational> g("ab(" + std::to_string(n) + ")", b);
  auto zv = SparseVector<Rational>::unit(g.dim() - 1);
  for (int i = 1; i <= n; ++i) g.set_bracket(g.at("q" + std::to_string(i)), g.at("xi" + std::to_string(i)), zv);
  return g;
}

namespace {

struct Blocks {
  std::size_t N;
  std::size_t r1 = 0, r2 = 2, r3;
  explicit Blocks(int n) : N(static_cast<std::size_t>(n)), r3(2 + static_cast<std::size_t>(n)) {}
  std::size_t size() const { return 4 + N; }
  std::vector<Parity> format() const {
    std::vector<Parity> f(size(), Parity::Even);
    for (std::size_t a = 0; a < N; ++a) f[r2 + a] = Parity::Odd;
    return f;
  }
};

void set(CMatrix& m, std::size_t i, std::size_t j, const G& v) {
  m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
}

// 2x2 hermitian basis in (t11, Re t12, Im t12, t22) order, with names.
std::vector<std::pair<std::string, CMatrix>> hermitian_basis(const std::string& L) {
  std::vector<std::pair<std::string, CMatrix>> out;
  CMatrix h = zero_matrix(2, 2);
  h(0, 0) = G(1);
  out.emplace_back(idx2(L, 0, 0), h);
  h = zero_matrix(2, 2);
  h(0, 1) = G(1);
  h(1, 0) = G(1);
  out.emplace_back("(" + idx2(L, 0, 1) + "+" + idx2(L, 1, 0) + ")", h);
  h = zero_matrix(2, 2);
  h(0, 1) = G::i();
  h(1, 0) = -G::i();
  out.emplace_back("i(" + idx2(L, 0, 1) + "-" + idx2(L, 1, 0) + ")", h);
  h = zero_matrix(2, 2);
  h(1, 1) = G(1);
  out.emplace_back(idx2(L, 1, 1), h);
  return out;
}

void add_negative(const Blocks& bl, MatrixPresentation& p) {
  std::size_t S = bl.size();
  for (const auto& [name, h] : hermitian_basis("T")) {
    CMatrix m = zero_matrix(S, S);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) set(m, bl.r3 + a, bl.r1 + b, h(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)));
    p.elements.push_back({name, -2, m});
  }
  for (std::size_t a = 0; a < bl.N; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (int im = 0; im < 2; ++im) {
        G c = im ? G::i() : G(1);
        CMatrix m = zero_matrix(S, S);
        set(m, bl.r2 + a, bl.r1 + b, c);
        set(m, bl.r3 + b, bl.r2 + a, -c.conj());
        p.elements.push_back({(im ? "i" : "") + idx2("Q", a, b), -1, m});
      }
}

void add_positive(const Blocks& bl, MatrixPresentation& p) {
  std::size_t S = bl.size();
  for (std::size_t a = 0; a < bl.N; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (int im = 0; im < 2; ++im) {
        G c = im ? G::i() : G(1);
        CMatrix m = zero_matrix(S, S);
        set(m, bl.r2 + a, bl.r3 + b, c);
        set(m, bl.r1 + b, bl.r2 + a, c.conj());
        p.elements.push_back({(im ? "i" : "") + idx2("R", a, b), 1, m});
      }
  for (const auto& [name, h] : hermitian_basis("U")) {
    CMatrix m = zero_matrix(S, S);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) set(m, bl.r1 + a, bl.r3 + b, h(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)));
    p.elements.push_back({name, 2, m});
  }
}

// (A, B, -A-bar-transpose) on the diagonal blocks.
CMatrix g0_matrix(const Blocks& bl, const CMatrix& A, const CMatrix& B) {
  CMatrix m = zero_matrix(bl.size(), bl.size());
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      set(m, bl.r1 + a, bl.r1 + b, A(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)));
      set(m, bl.r3 + a, bl.r3 + b, -A(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)).conj());
    }
  for (std::size_t a = 0; a < bl.N; ++a)
    for (std::size_t b = 0; b < bl.N; ++b)
      set(m, bl.r2 + a, bl.r2 + b, B(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)));
  return m;
}

void add_g0(const Blocks& bl, MinkowskiCase c, MatrixPresentation& p) {
  std::vector<std::pair<std::string, CMatrix>> as;
  CMatrix h = zero_matrix(2, 2);
  h(0, 0) = G(1);
  h(1, 1) = G(-1);
  CMatrix one = zero_matrix(2, 2);
  one(0, 0) = G(1);
  one(1, 1) = G(1);
  as.emplace_back("(A_{1,1}-A_{2,2})", h);
  if (c == MinkowskiCase::Conformal) as.emplace_back("(A_{1,1}+A_{2,2})", one);
  as.emplace_back("i(A_{1,1}-A_{2,2})", G::i() * h);
  if (c == MinkowskiCase::Conformal) as.emplace_back("i(A_{1,1}+A_{2,2})", G::i() * one);
  for (auto [i, j] : {std::pair<std::size_t, std::size_t>{0, 1}, {1, 0}}) {
    as.emplace_back(idx2("A", i, j), unit_matrix(2, i, j));
    as.emplace_back("i" + idx2("A", i, j), unit_matrix(2, i, j, G::i()));
  }
  for (const auto& [name, A] : as) {
    CMatrix B = zero_matrix(bl.N, bl.N);
    if (c == MinkowskiCase::Conformal) {
      // tr B = tr(A - A-bar-transpose), spread evenly over u(N)
      G t = A(0, 0) + A(1, 1) - A(0, 0).conj() - A(1, 1).conj();
      for (std::size_t a = 0; a < bl.N; ++a) B(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)) = t / G(static_cast<long>(bl.N));
    }
    p.elements.push_back({name, 0, g0_matrix(bl, A, B)});
  }
  if (c == MinkowskiCase::Conformal) {
    // su(N) part of the B block
    CMatrix A0 = zero_matrix(2, 2);
    for (std::size_t a = 0; a + 1 < bl.N; ++a) {
      CMatrix B = zero_matrix(bl.N, bl.N);
      B(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)) = G::i();
      B(static_cast<Eigen::Index>(a + 1), static_cast<Eigen::Index>(a + 1)) = -G::i();
      p.elements.push_back({"i(" + idx2("B", a, a) + "-" + idx2("B", a + 1, a + 1) + ")", 0, g0_matrix(bl, A0, B)});
    }
    for (std::size_t a = 0; a < bl.N; ++a)
      for (std::size_t b = a + 1; b < bl.N; ++b) {
        CMatrix B = zero_matrix(bl.N, bl.N);
        B(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = G(1);
        B(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = G(-1);
        p.elements.push_back({"(" + idx2("B", a, b) + "-" + idx2("B", b, a) + ")", 0, g0_matrix(bl, A0, B)});
        B(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = G::i();
        B(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = G::i();
        p.elements.push_back({"i(" + idx2("B", a, b) + "+" + idx2("B", b, a) + ")", 0, g0_matrix(bl, A0, B)});
      }
  }
  p.cartan.push_back("(A_{1,1}-A_{2,2})");
  if (c == MinkowskiCase::Conformal) p.cartan.push_back("(A_{1,1}+A_{2,2})");
}

// i_op on the Minkowski real bases: X <-> iX by name.
void install_i_op(LieSuperAlgebra<Rational>& g) {
  for (std::size_t k = 0; k < g.dim(); ++k) {
    const std::string& id = g.basis(k).id;
    if (id.size() > 1 && id[0] == 'i') {
      auto partner = g.index_of(id.substr(1));
      if (!partner) continue;
      g.set_i_op(*partner, SparseVector<Rational>::unit(k));
      g.set_i_op(k, SparseVector<Rational>::unit(*partner, Rational(-1)));
    }
  }
}

}  // namespace

MatrixPresentation minkowski_negative_presentation(int N) {
  Blocks bl(N);
  MatrixPresentation p;
  p.name = "m_-(N=" + std::to_string(N) + ")";
  p.format = bl.format();
  add_negative(bl, p);
  return p;
}

MatrixPresentation minkowski_g0_presentation(int N, MinkowskiCase c) {
  Blocks bl(N);
  MatrixPresentation p;
  p.name = std::string(c == MinkowskiCase::Conformal ? "conformal" : "reduced") + " g0(N=" + std::to_string(N) + ")";
  p.format = bl.format();
  add_g0(bl, c, p);
  return p;
}

LieSuperAlgebra<Rational> build_minkowski_negative(int N) {
  auto g = matrix_algebra<Rational>(minkowski_negative_presentation(N));
  install_i_op(g);
  return g;
}

LieSuperAlgebra<Rational> build_minkowski(int N, MinkowskiCase c) {
  Blocks bl(N);
  MatrixPresentation p;
  p.name = std::string("minkowski-") + (c == MinkowskiCase::Conformal ? "conformal" : "reduced") + "(N=" +
           std::to_string(N) + ")";
  p.format = bl.format();
  add_negative(bl, p);
  add_g0(bl, c, p);
  auto g = matrix_algebra<Rational>(p);
  install_i_op(g);
  return g;
}

LieSuperAlgebra<Rational> build_minkowski_full(int N) {
  Blocks bl(N);
  MatrixPresentation p;
  p.name = "minkowski-full(N=" + std::to_string(N) + ")";
  p.format = bl.format();
  add_negative(bl, p);
  add_g0(bl, MinkowskiCase::Conformal, p);
  add_positive(bl, p);
  auto g = matrix_algebra<Rational>(p);
  install_i_op(g);
  return g;
}

LieSuperAlgebra<G> build_complexified_minkowski(int N) {
  Blocks bl(N);
  MatrixPresentation p;
  p.name = "minkowski^C(N=" + std::to_string(N) + ")";
  p.format = bl.format();
  std::size_t S = bl.size();
  auto block = [&](std::size_t i) { return i < bl.r2 ? 0 : (i < bl.r3 ? 1 : 2); };
  auto local = [&](std::size_t i) { return i < bl.r2 ? i : (i < bl.r3 ? i - bl.r2 : i - bl.r3); };
  const char* letters[3][3] = {{"A", "V", "U"}, {"Q", "B", "R"}, {"T", "S", "C"}};
  for (std::size_t i = 0; i < S; ++i)
    for (std::size_t j = 0; j < S; ++j) {
      if (i == j) continue;
      int bi = block(i), bj = block(j);
      p.elements.push_back({idx2(letters[bi][bj], local(i), local(j)), bj - bi, unit_matrix(S, i, j)});
    }
  // supertraceless diagonal: pair every diagonal unit with the first odd one
  std::size_t o = bl.r2;
  for (std::size_t k = 0; k < S; ++k) {
    if (k == o) continue;
    CMatrix m = unit_matrix(S, k, k);
    bool odd = p.format[k] == Parity::Odd;
    set(m, o, o, G(odd ? -1 : 1));
    int bk = block(k);
    p.elements.push_back({idx2(letters[bk][bk], local(k), local(k)) + (odd ? "-" : "+") + idx2("B", 0, 0), 0, m});
  }
  return matrix_algebra<G>(p);
}

}  // namespace sfn
