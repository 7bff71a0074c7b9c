#pragma once

// Exact linear algebra over Q and Q(i): sparse vectors, incremental reduced
// row echelon form, kernels, spans, intersections and quotients.

#include <Eigen/Core>

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sfn/scalar.hpp"

namespace Eigen {
template <>
struct NumTraits<sfn::Rational> : GenericNumTraits<sfn::Rational> {
  using Real = sfn::Rational;
  using NonInteger = sfn::Rational;
  using Literal = sfn::Rational;
  using Nested = sfn::Rational;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1,
         ReadCost = 1, AddCost = 8, MulCost = 16 };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
template <>
struct NumTraits<sfn::GaussianRational> : GenericNumTraits<sfn::GaussianRational> {
  using Real = sfn::GaussianRational;
  using NonInteger = sfn::GaussianRational;
  using Literal = sfn::GaussianRational;
  using Nested = sfn::GaussianRational;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1,
         ReadCost = 1, AddCost = 16, MulCost = 48 };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace sfn {

template <class S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class S>
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, S>;

  SparseVector() = default;
  static SparseVector unit(std::size_t i, S value = S(1)) {
    SparseVector v;
    if (!is_zero(value)) v.e_.emplace_back(i, std::move(value));
    return v;
  }
  // Takes ownership of sorted, zero-free entries.
  static SparseVector from_sorted(std::vector<Entry> entries) {
    SparseVector v;
    v.e_ = std::move(entries);
    return v;
  }
  static SparseVector from_map(const std::map<std::size_t, S>& m) {
    SparseVector v;
    for (const auto& [k, s] : m)
      if (!is_zero(s)) v.e_.emplace_back(k, s);
    return v;
  }

  const std::vector<Entry>& entries() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  bool empty() const { return e_.empty(); }
  std::size_t nnz() const { return e_.size(); }
  std::size_t lead() const { return e_.front().first; }
  const S& lead_value() const { return e_.front().second; }

  const S* find(std::size_t i) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), i,
                               [](const Entry& a, std::size_t k) { return a.first < k; });
    if (it == e_.end() || it->first != i) return nullptr;
    return &it->second;
  }
  S at(std::size_t i) const {
    const S* p = find(i);
    return p ? *p : S(0);
  }

  void add(std::size_t i, const S& value) {
    if (is_zero(value)) return;
    auto it = std::lower_bound(e_.begin(), e_.end(), i,
                               [](const Entry& a, std::size_t k) { return a.first < k; });
    if (it != e_.end() && it->first == i) {
      it->second += value;
      if (is_zero(it->second)) e_.erase(it);
    } else {
      e_.insert(it, Entry(i, value));
    }
  }

  void scale(const S& a) {
    if (is_zero(a)) {
      e_.clear();
      return;
    }
    for (auto& [k, s] : e_) s *= a;
  }

  // this += a * w
  void axpy(const S& a, const SparseVector& w) {
    if (is_zero(a) || w.empty()) return;
    std::vector<Entry> out;
    out.reserve(e_.size() + w.e_.size());
    auto i = e_.begin();
    auto j = w.e_.begin();
    while (i != e_.end() || j != w.e_.end()) {
      if (j == w.e_.end() || (i != e_.end() && i->first < j->first)) {
        out.push_back(std::move(*i++));
      } else if (i == e_.end() || j->first < i->first) {
        out.emplace_back(j->first, a * j->second);
        ++j;
      } else {
        S s = i->second + a * j->second;
        if (!is_zero(s)) out.emplace_back(i->first, std::move(s));
        ++i;
        ++j;
      }
    }
    e_ = std::move(out);
  }

  SparseVector& operator+=(const SparseVector& w) { axpy(S(1), w); return *this; }
  SparseVector& operator-=(const SparseVector& w) { axpy(S(-1), w); return *this; }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const S& a, SparseVector v) { v.scale(a); return v; }
  SparseVector operator-() const { SparseVector v = *this; v.scale(S(-1)); return v; }
  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.e_ == b.e_; }

  // Keeps entries whose index satisfies pred, reindexed by map (index -> new index).
  template <class F>
  SparseVector remap(F&& f) const {
    std::map<std::size_t, S> m;
    for (const auto& [k, s] : e_) {
      long long t = f(k);
      if (t >= 0) m[static_cast<std::size_t>(t)] += s;
    }
    return from_map(m);
  }

 private:
  std::vector<Entry> e_;
};

template <class S>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }

  void add(std::size_t r, std::size_t c, const S& v) {
    check(r, c);
    data_[r].add(c, v);
  }
  S at(std::size_t r, std::size_t c) const {
    check(r, c);
    return data_[r].at(c);
  }
  const SparseVector<S>& row(std::size_t r) const { return data_.at(r); }
  void set_row(std::size_t r, SparseVector<S> v) {
    if (!v.empty() && v.entries().back().first >= cols_)
      throw DimensionMismatch("SparseMatrix::set_row: column out of range");
    data_.at(r) = std::move(v);
  }
  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.nnz();
    return n;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows());
    std::vector<std::vector<typename SparseVector<S>::Entry>> buf(cols_);
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, s] : data_[r]) buf[c].emplace_back(r, s);
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c] = SparseVector<S>::from_sorted(std::move(buf[c]));
    return t;
  }

  SparseVector<S> apply(const SparseVector<S>& x) const {
    std::map<std::size_t, S> out;
    for (std::size_t r = 0; r < rows(); ++r) {
      S acc(0);
      bool hit = false;
      for (const auto& [c, s] : data_[r]) {
        const S* xv = x.find(c);
        if (xv) {
          acc += s * *xv;
          hit = true;
        }
      }
      if (hit && !is_zero(acc)) out[r] = acc;
    }
    return SparseVector<S>::from_map(out);
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("SparseMatrix product: inner dimensions differ");
    SparseMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
      SparseVector<S> acc;
      for (const auto& [k, s] : a.data_[r]) acc.axpy(s, b.data_[k]);
      out.data_[r] = std::move(acc);
    }
    return out;
  }

  bool is_zero_matrix() const {
    for (const auto& r : data_)
      if (!r.empty()) return false;
    return true;
  }

  DenseMatrix<S> to_dense() const {
    DenseMatrix<S> m(static_cast<Eigen::Index>(rows()), static_cast<Eigen::Index>(cols_));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = S(0);
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, s] : data_[r]) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = s;
    return m;
  }
  static SparseMatrix from_dense(const DenseMatrix<S>& m) {
    SparseMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        if (!is_zero(m(i, j))) out.data_[i].add(static_cast<std::size_t>(j), m(i, j));
    return out;
  }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= data_.size() || c >= cols_) throw DimensionMismatch("SparseMatrix: index out of range");
  }
  std::size_t cols_ = 0;
  std::vector<SparseVector<S>> data_;
};

// Reduced row echelon form kept up to date under insertion. Every stored row
// has pivot coefficient 1 and vanishes in every other pivot column, so the
// stored rows are the unique RREF basis of the span regardless of insertion
// order.
template <class S>
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::map<std::size_t, SparseVector<S>>& rows() const { return rows_; }
  bool is_pivot(std::size_t c) const { return rows_.count(c) != 0; }

  SparseVector<S> reduce(const SparseVector<S>& v) const {
    SparseVector<S> r = v;
    for (const auto& [c, s] : v) {
      auto it = rows_.find(c);
      if (it != rows_.end()) r.axpy(-s, it->second);
    }
    return r;
  }
  bool contains(const SparseVector<S>& v) const { return reduce(v).empty(); }

  // Returns true when v enlarges the span.
  bool insert(const SparseVector<S>& v) {
    if (!v.empty() && v.entries().back().first >= dim_)
      throw DimensionMismatch("RowEchelon::insert: vector longer than ambient dimension");
    SparseVector<S> r = reduce(v);
    if (r.empty()) return false;
    std::size_t p = r.lead();
    S inv = S(1) / r.lead_value();
    r.scale(inv);
    for (auto& [c, row] : rows_) {
      const S* s = row.find(p);
      if (s) {
        S f = -*s;
        row.axpy(f, r);
      }
    }
    rows_.emplace(p, std::move(r));
    return true;
  }

  std::vector<SparseVector<S>> basis() const {
    std::vector<SparseVector<S>> out;
    out.reserve(rows_.size());
    for (const auto& [c, r] : rows_) out.push_back(r);
    return out;
  }

 private:
  std::size_t dim_;
  std::map<std::size_t, SparseVector<S>> rows_;
};

inline constexpr std::size_t kDenseThreshold = 64;

// Dense Gauss-Jordan: pivot on the lowest-index nonzero row of each column.
template <class S>
RowEchelon<S> dense_row_echelon(const DenseMatrix<S>& m_in) {
  DenseMatrix<S> m = m_in;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    S inv = S(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      S f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  RowEchelon<S> ech(static_cast<std::size_t>(cols));
  for (Eigen::Index i = 0; i < r; ++i) {
    std::vector<typename SparseVector<S>::Entry> e;
    for (Eigen::Index j = 0; j < cols; ++j)
      if (!is_zero(m(i, j))) e.emplace_back(static_cast<std::size_t>(j), m(i, j));
    ech.insert(SparseVector<S>::from_sorted(std::move(e)));
  }
  return ech;
}

template <class S>
RowEchelon<S> sparse_row_echelon(const SparseMatrix<S>& m) {
  RowEchelon<S> ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r));
  return ech;
}

template <class S>
RowEchelon<S> row_echelon(const SparseMatrix<S>& m) {
  if (m.rows() < kDenseThreshold && m.cols() < kDenseThreshold && m.rows() > 0 && m.cols() > 0)
    return dense_row_echelon(m.to_dense());
  return sparse_row_echelon(m);
}

template <class S>
std::size_t rank(const SparseMatrix<S>& m) {
  return row_echelon(m).rank();
}

template <class S>
std::vector<SparseVector<S>> kernel_from_echelon(const RowEchelon<S>& ech) {
  std::size_t n = ech.dim();
  // for each free column, the pivot rows having an entry there
  std::vector<std::vector<std::pair<std::size_t, S>>> hits(n);
  for (const auto& [p, row] : ech.rows())
    for (const auto& [c, s] : row)
      if (c != p) hits[c].emplace_back(p, s);
  std::vector<SparseVector<S>> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (ech.is_pivot(f)) continue;
    std::vector<typename SparseVector<S>::Entry> e;
    for (const auto& [p, s] : hits[f]) e.emplace_back(p, -s);
    e.emplace_back(f, S(1));
    std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(SparseVector<S>::from_sorted(std::move(e)));
  }
  return out;
}

// Canonical kernel basis: one vector per non-pivot column f, with entry 1 at f.
template <class S>
std::vector<SparseVector<S>> kernel_basis(const SparseMatrix<S>& m) {
  return kernel_from_echelon(row_echelon(m));
}

template <class S>
std::vector<SparseVector<S>> span_basis(std::size_t dim, const std::vector<SparseVector<S>>& vs) {
  RowEchelon<S> ech(dim);
  for (const auto& v : vs) ech.insert(v);
  return ech.basis();
}

template <class S>
std::vector<SparseVector<S>> intersect_subspaces(std::size_t dim, const std::vector<SparseVector<S>>& a,
                                                 const std::vector<SparseVector<S>>& b) {
  if (a.empty() || b.empty()) return {};
  // columns are the a_i and -b_j; a kernel vector (x, y) gives sum x_i a_i
  SparseMatrix<S> m(dim, a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& [r, s] : a[i]) m.add(r, i, s);
  for (std::size_t j = 0; j < b.size(); ++j)
    for (const auto& [r, s] : b[j]) m.add(r, a.size() + j, -s);
  RowEchelon<S> out(dim);
  for (const auto& k : kernel_basis(m)) {
    SparseVector<S> v;
    for (const auto& [i, s] : k)
      if (i < a.size()) v.axpy(s, a[i]);
    out.insert(v);
  }
  return out.basis();
}

// Unit vectors e_j for the non-pivot columns j of the RREF of sub.
template <class S>
std::vector<SparseVector<S>> quotient_representatives(std::size_t dim, const std::vector<SparseVector<S>>& sub) {
  RowEchelon<S> ech(dim);
  for (const auto& v : sub) ech.insert(v);
  std::vector<SparseVector<S>> out;
  for (std::size_t j = 0; j < dim; ++j)
    if (!ech.is_pivot(j)) out.push_back(SparseVector<S>::unit(j));
  return out;
}

// Expresses vectors in a fixed independent family.
template <class S>
class Coordinatizer {
 public:
  Coordinatizer() = default;
  Coordinatizer(std::size_t dim, const std::vector<SparseVector<S>>& basis)
      : dim_(dim), count_(basis.size()), ech_(dim + basis.size()) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      SparseVector<S> v = basis[i];
      v.add(dim + i, S(1));
      if (!ech_.insert(v)) throw std::invalid_argument("Coordinatizer: family is not independent");
      // a pivot past dim means the family is dependent
      if (ech_.rows().rbegin()->first >= dim) throw std::invalid_argument("Coordinatizer: family is not independent");
    }
  }

  std::size_t size() const { return count_; }

  // Coordinates of v, or false when v is outside the span.
  bool solve(const SparseVector<S>& v, SparseVector<S>& coords) const {
    SparseVector<S> r = ech_.reduce(v);
    if (!r.empty() && r.lead() < dim_) return false;
    coords = r.remap([&](std::size_t k) { return static_cast<long long>(k - dim_); });
    coords.scale(S(-1));
    return true;
  }
  SparseVector<S> coordinates(const SparseVector<S>& v) const {
    SparseVector<S> c;
    if (!solve(v, c)) throw std::domain_error("Coordinatizer: vector outside the span");
    return c;
  }

 private:
  std::size_t dim_ = 0;
  std::size_t count_ = 0;
  RowEchelon<S> ech_;
};

}  // namespace sfn
