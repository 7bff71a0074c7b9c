#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "sfn/linalg.hpp"
#include "sfn/superspace.hpp"

namespace sfn {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class S>
class LieSuperAlgebra {
 public:
  using Vec = SparseVector<S>;

  LieSuperAlgebra() = default;
  LieSuperAlgebra(std::string name, std::vector<BasisVector> basis) : name_(std::move(name)) {
    extend(std::move(basis));
  }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  std::size_t dim() const { return basis_.size(); }
  SuperDim sdim() const {
    SuperDim d;
    for (const auto& b : basis_) (b.parity == Parity::Even ? d.even : d.odd)++;
    return d;
  }
  const std::vector<BasisVector>& basis() const { return basis_; }
  const BasisVector& basis(std::size_t i) const { return basis_.at(i); }
  BasisVector& basis_mut(std::size_t i) { return basis_.at(i); }
  Parity parity(std::size_t i) const { return basis_[i].parity; }
  std::vector<Parity> parities() const {
    std::vector<Parity> p;
    for (const auto& b : basis_) p.push_back(b.parity);
    return p;
  }
  int degree(std::size_t i) const {
    if (!basis_[i].degree) throw AlgebraError("algebra " + name_ + " is not graded");
    return *basis_[i].degree;
  }
  bool graded() const {
    for (const auto& b : basis_)
      if (!b.degree) return false;
    return true;
  }
  std::optional<std::size_t> index_of(const std::string& id) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].id == id) return i;
    return std::nullopt;
  }
  std::size_t at(const std::string& id) const {
    auto i = index_of(id);
    if (!i) throw AlgebraError("no basis element '" + id + "' in " + name_);
    return *i;
  }

  // Appends basis vectors; new brackets start at zero.
  void extend(std::vector<BasisVector> more) {
    std::size_t n = basis_.size(), m = n + more.size();
    std::vector<Vec> t(m * m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t[i * m + j] = std::move(table_[i * n + j]);
    table_ = std::move(t);
    for (auto& b : more) basis_.push_back(std::move(b));
  }

  // Sets [e_i, e_j] = v and [e_j, e_i] = -(-1)^{p_i p_j} v.
  void set_bracket(std::size_t i, std::size_t j, Vec v) {
    Vec w = v;
    w.scale(S(-koszul_sign(parity(i), parity(j))));
    if (i == j && !(w == v)) {
      if (parity(i) == Parity::Even && !v.empty())
        throw AlgebraError("nonzero bracket of an even element with itself");
    }
    table_.at(i * dim() + j) = std::move(v);
    if (i != j) table_.at(j * dim() + i) = std::move(w);
  }
  // Only sets the (i, j) entry; used to build deliberately broken tables.
  void set_bracket_raw(std::size_t i, std::size_t j, Vec v) { table_.at(i * dim() + j) = std::move(v); }

  const Vec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vec bracket(const Vec& x, const Vec& y) const {
    Vec out;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y) out.axpy(a * b, bracket_basis(i, j));
    return out;
  }

  Parity parity_of(const Vec& x) const {
    if (x.empty()) return Parity::Even;
    Parity p = parity(x.lead());
    for (const auto& [i, s] : x)
      if (parity(i) != p) throw AlgebraError("inhomogeneous element");
    return p;
  }

  // Truncation: brackets landing above max_degree have been dropped.
  std::optional<int> max_degree() const { return max_degree_; }
  void set_max_degree(std::optional<int> d) { max_degree_ = d; }
  // True when the algebra is known to have no components above max_degree.
  bool complete() const { return complete_; }
  void set_complete(bool c) { complete_ = c; }

  std::vector<std::size_t> of_degree(int d) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i)
      if (basis_[i].degree && *basis_[i].degree == d) out.push_back(i);
    return out;
  }
  std::vector<std::size_t> negative_part() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i)
      if (degree(i) < 0) out.push_back(i);
    return out;
  }
  int min_degree() const {
    int m = 0;
    for (std::size_t i = 0; i < dim(); ++i) m = std::min(m, degree(i));
    return m;
  }
  int top_degree() const {
    int m = 0;
    for (std::size_t i = 0; i < dim(); ++i) m = std::max(m, degree(i));
    return m;
  }
  SuperDim sdim_of_degree(int d) const {
    SuperDim s;
    for (auto i : of_degree(d)) (parity(i) == Parity::Even ? s.even : s.odd)++;
    return s;
  }

  // Designated Cartan elements; their adjoint action must be diagonal.
  const std::vector<std::size_t>& cartan() const { return cartan_; }
  void set_cartan(std::vector<std::size_t> c) { cartan_ = std::move(c); }
  const std::map<std::size_t, Vec>& i_op() const { return i_op_; }
  void set_i_op(std::size_t i, Vec v) { i_op_[i] = std::move(v); }
  void clear_roles() {
    cartan_.clear();
    i_op_.clear();
    for (auto& b : basis_) b.weight.clear();
  }

  // Recomputes basis weights from the Cartan elements; throws when some basis
  // vector is not an eigenvector.
  void compute_weights() {
    for (std::size_t i = 0; i < dim(); ++i) {
      std::vector<Rational> w;
      for (std::size_t h : cartan_) {
        const Vec& v = bracket_basis(h, i);
        if (v.empty()) {
          w.emplace_back(0);
          continue;
        }
        if (v.nnz() != 1 || v.lead() != i)
          throw AlgebraError("Cartan element " + basis_[h].id + " does not act diagonally on " + basis_[i].id);
        w.push_back(real_part(v.lead_value()));
      }
      basis_[i].weight = std::move(w);
    }
  }

  bool operator_equal(const LieSuperAlgebra& o) const {
    if (dim() != o.dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i)
      if (basis_[i].parity != o.basis_[i].parity || basis_[i].degree != o.basis_[i].degree) return false;
    return table_ == o.table_;
  }

 private:
  static Rational real_part(const Rational& r) { return r; }
  static Rational real_part(const GaussianRational& z) {
    if (!z.is_real()) throw AlgebraError("Cartan eigenvalue is not rational");
    return z.re();
  }

  std::string name_;
  std::vector<BasisVector> basis_;
  std::vector<Vec> table_;
  std::optional<int> max_degree_;
  bool complete_ = false;
  std::vector<std::size_t> cartan_;
  std::map<std::size_t, Vec> i_op_;
};

// Weight is positive when its first nonzero entry is positive.
inline int weight_sign(const std::vector<Rational>& w) {
  for (const auto& x : w)
    if (!x.is_zero()) return x.sign();
  return 0;
}

// Root vectors among the given indices: positive (raising) or negative weights.
template <class S>
std::vector<std::size_t> root_vectors(const LieSuperAlgebra<S>& g, const std::vector<std::size_t>& among,
                                      int sign, bool even_only) {
  std::vector<std::size_t> out;
  for (auto i : among) {
    if (even_only && g.parity(i) == Parity::Odd) continue;
    if (weight_sign(g.basis(i).weight) == sign) out.push_back(i);
  }
  return out;
}

struct JacobiReport {
  bool ok = true;
  std::vector<std::tuple<std::size_t, std::size_t>> antisymmetry_violations;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> jacobi_violations;
  std::size_t triples_checked = 0;
};

// Super antisymmetry on all pairs and the super Jacobi identity on all
// triples i <= j <= k. In a truncated algebra a triple is skipped when one of
// its pairwise brackets would land above the truncation degree.
template <class S>
JacobiReport check_super_jacobi(const LieSuperAlgebra<S>& g, std::size_t max_violations = 16) {
  JacobiReport rep;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      SparseVector<S> w = g.bracket_basis(j, i);
      w.scale(S(-koszul_sign(g.parity(i), g.parity(j))));
      if (!(w == g.bracket_basis(i, j))) {
        rep.ok = false;
        if (rep.antisymmetry_violations.size() < max_violations) rep.antisymmetry_violations.emplace_back(i, j);
      }
    }
  auto md = g.max_degree();
  bool trunc = md && !g.complete();
  auto too_high = [&](std::size_t a, std::size_t b) { return trunc && g.degree(a) + g.degree(b) > *md; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        if (too_high(i, j) || too_high(j, k) || too_high(i, k)) continue;
        ++rep.triples_checked;
        int pi = bit(g.parity(i)), pj = bit(g.parity(j)), pk = bit(g.parity(k));
        SparseVector<S> acc;
        auto term = [&](std::size_t a, std::size_t b, std::size_t c, int sign) {
          for (const auto& [m, s] : g.bracket_basis(b, c)) acc.axpy(S(sign) * s, g.bracket_basis(a, m));
        };
        term(i, j, k, (pi * pk) % 2 ? -1 : 1);
        term(j, k, i, (pj * pi) % 2 ? -1 : 1);
        term(k, i, j, (pk * pj) % 2 ? -1 : 1);
        if (!acc.empty()) {
          rep.ok = false;
          if (rep.jacobi_violations.size() < max_violations) rep.jacobi_violations.emplace_back(i, j, k);
        }
      }
  return rep;
}

// Realification of a complex algebra: basis X_a followed by iX_a.
LieSuperAlgebra<Rational> realify(const LieSuperAlgebra<GaussianRational>& g);
// Extension of scalars from Q to Q(i).
LieSuperAlgebra<GaussianRational> complexify(const LieSuperAlgebra<Rational>& g);
// New basis f_j = sum_i P(i, j) e_i; roles are dropped.
LieSuperAlgebra<Rational> change_basis(const LieSuperAlgebra<Rational>& g, const DenseMatrix<Rational>& p);
// Inverse of a square matrix; throws when singular.
template <class S>
DenseMatrix<S> inverse(const DenseMatrix<S>& p);
// Name "iX" for "X" and back.
std::string i_name(const std::string& id);

}  // namespace sfn
