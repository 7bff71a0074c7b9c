#pragma once

// Super-polynomials in even and odd indeterminates, and polynomial vector
// fields sum_i f_i d/dx_i acting by left derivatives.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfn/linalg.hpp"
#include "sfn/superspace.hpp"

namespace sfn {

struct Indeterminate {
  std::string name;
  Parity parity = Parity::Even;
  int weight = 1;
};

using Monomial = std::vector<std::uint8_t>;

class PolyRing {
 public:
  explicit PolyRing(std::vector<Indeterminate> vars) : vars_(std::move(vars)) {}
  std::size_t size() const { return vars_.size(); }
  const Indeterminate& var(std::size_t i) const { return vars_.at(i); }
  const std::vector<Indeterminate>& vars() const { return vars_; }
  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name == name) return i;
    return std::nullopt;
  }
  std::size_t at(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw std::invalid_argument("unknown indeterminate " + name);
    return *i;
  }
  Parity parity(const Monomial& m) const {
    int p = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (vars_[i].parity == Parity::Odd) p += m[i];
    return parity_of(p);
  }
  int weight(const Monomial& m) const {
    int w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) w += m[i] * vars_[i].weight;
    return w;
  }
  // Product of monomials: sign in {-1, 0, 1} and the result.
  int multiply(const Monomial& a, const Monomial& b, Monomial& out) const {
    out.assign(vars_.size(), 0);
    int swaps = 0;
    for (std::size_t j = 0; j < vars_.size(); ++j) {
      if (vars_[j].parity != Parity::Odd || !b[j]) continue;
      if (a[j]) return 0;
      for (std::size_t i = j + 1; i < vars_.size(); ++i)
        if (vars_[i].parity == Parity::Odd && a[i]) ++swaps;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) out[i] = static_cast<std::uint8_t>(a[i] + b[i]);
    return swaps % 2 ? -1 : 1;
  }
  // All monomials of the given weighted degree.
  std::vector<Monomial> monomials_of_weight(int w) const;
  std::string monomial_str(const Monomial& m) const;

 private:
  std::vector<Indeterminate> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

template <class S>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr r) : ring_(std::move(r)) {}
  static Polynomial constant(RingPtr r, S c) {
    Polynomial p(r);
    p.add(Monomial(r->size(), 0), c);
    return p;
  }
  static Polynomial var(RingPtr r, std::size_t i, S c = S(1)) {
    Monomial m(r->size(), 0);
    m[i] = 1;
    Polynomial p(r);
    p.add(m, c);
    return p;
  }
  static Polynomial monomial(RingPtr r, const Monomial& m, S c = S(1)) {
    Polynomial p(r);
    p.add(m, c);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::map<Monomial, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Monomial& m, const S& c) {
    if (sfn::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (sfn::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const S& s, Polynomial p) {
    if (sfn::is_zero(s)) p.terms_.clear();
    for (auto& [m, c] : p.terms_) c *= s;
    return p;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.ring_ ? a.ring_ : b.ring_);
    Monomial m;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        int s = out.ring_->multiply(ma, mb, m);
        if (s) out.add(m, S(s) * ca * cb);
      }
    return out;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  // Left derivative d/dx_i.
  Polynomial derivative(std::size_t i) const {
    Polynomial out(ring_);
    const auto& vars = ring_->vars();
    for (const auto& [m, c] : terms_) {
      if (!m[i]) continue;
      Monomial d = m;
      d[i]--;
      if (vars[i].parity == Parity::Even) {
        out.add(d, S(static_cast<long>(m[i])) * c);
      } else {
        int before = 0;
        for (std::size_t k = 0; k < i; ++k)
          if (vars[k].parity == Parity::Odd) before += m[k];
        out.add(d, before % 2 ? -c : c);
      }
    }
    return out;
  }

  // Parity of a homogeneous polynomial; throws otherwise.
  Parity parity() const {
    if (terms_.empty()) return Parity::Even;
    Parity p = ring_->parity(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (ring_->parity(m) != p) throw std::domain_error("inhomogeneous polynomial");
    return p;
  }
  Polynomial parity_part(Parity p) const {
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_)
      if (ring_->parity(m) == p) out.terms_.emplace(m, c);
    return out;
  }
  // Substitutes x_i -> -x_i in every indeterminate.
  Polynomial negate_vars() const {
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_) {
      int deg = 0;
      for (auto e : m) deg += e;
      out.terms_.emplace(m, deg % 2 ? -c : c);
    }
    return out;
  }

  std::string str() const;

 private:
  void adopt(const Polynomial& o) {
    if (!ring_) ring_ = o.ring_;
  }
  RingPtr ring_;
  std::map<Monomial, S> terms_;
};

template <class S>
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(RingPtr r) : ring_(r), coeff_(r->size(), Polynomial<S>(r)) {}
  static VectorField partial(RingPtr r, std::size_t i, S c = S(1)) {
    VectorField v(r);
    v.coeff_[i] = Polynomial<S>::constant(r, c);
    return v;
  }

  const RingPtr& ring() const { return ring_; }
  const Polynomial<S>& coeff(std::size_t i) const { return coeff_.at(i); }
  Polynomial<S>& coeff(std::size_t i) { return coeff_.at(i); }
  std::size_t size() const { return coeff_.size(); }
  bool is_zero() const {
    for (const auto& c : coeff_)
      if (!c.is_zero()) return false;
    return true;
  }

  VectorField& operator+=(const VectorField& o) {
    adopt(o);
    for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
    return *this;
  }
  VectorField& operator-=(const VectorField& o) {
    adopt(o);
    for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
    return *this;
  }
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const S& s, VectorField v) {
    for (auto& c : v.coeff_) c = s * c;
    return v;
  }
  // f * X, multiplying every coefficient on the left.
  friend VectorField operator*(const Polynomial<S>& f, const VectorField& v) {
    VectorField out(v.ring_);
    for (std::size_t i = 0; i < v.coeff_.size(); ++i) out.coeff_[i] = f * v.coeff_[i];
    return out;
  }
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.coeff_ == b.coeff_; }

  Polynomial<S> apply(const Polynomial<S>& g) const {
    Polynomial<S> out(ring_);
    for (std::size_t i = 0; i < coeff_.size(); ++i)
      if (!coeff_[i].is_zero()) out += coeff_[i] * g.derivative(i);
    return out;
  }

  // Parity of a homogeneous field (coefficient parity plus that of d/dx_i).
  Parity parity() const {
    std::optional<Parity> p;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
      if (coeff_[i].is_zero()) continue;
      Parity q = coeff_[i].parity() + ring_->var(i).parity;
      if (p && *p != q) throw std::domain_error("inhomogeneous vector field");
      p = q;
    }
    return p.value_or(Parity::Even);
  }
  VectorField parity_part(Parity p) const {
    VectorField out(ring_);
    for (std::size_t i = 0; i < coeff_.size(); ++i)
      out.coeff_[i] = coeff_[i].parity_part(p + ring_->var(i).parity);
    return out;
  }
  VectorField negate_vars() const {
    VectorField out(ring_);
    for (std::size_t i = 0; i < coeff_.size(); ++i) out.coeff_[i] = coeff_[i].negate_vars();
    return out;
  }

  std::string str() const;

 private:
  void adopt(const VectorField& o) {
    if (!ring_) {
      ring_ = o.ring_;
      coeff_.assign(o.coeff_.size(), Polynomial<S>(ring_));
    }
  }
  RingPtr ring_;
  std::vector<Polynomial<S>> coeff_;
};

// Super bracket [X, Y] = sum_i (X(g_i) - (-1)^{p(X)p(Y)} Y(f_i)) d_i.
template <class S>
VectorField<S> bracket(const VectorField<S>& x, const VectorField<S>& y) {
  VectorField<S> out(x.ring());
  for (Parity px : {Parity::Even, Parity::Odd}) {
    VectorField<S> xp = x.parity_part(px);
    if (xp.is_zero()) continue;
    for (Parity py : {Parity::Even, Parity::Odd}) {
      VectorField<S> yp = y.parity_part(py);
      if (yp.is_zero()) continue;
      S sign(koszul_sign(px, py));
      for (std::size_t i = 0; i < out.size(); ++i) {
        out.coeff(i) += xp.apply(yp.coeff(i));
        out.coeff(i) -= sign * yp.apply(xp.coeff(i));
      }
    }
  }
  return out;
}

// Assigns stable indices to (monomial, component) pairs so that fields can be
// handed to the linear algebra layer.
template <class S>
class FieldIndexer {
 public:
  std::size_t index(const Monomial& m, std::size_t comp) {
    auto key = std::make_pair(m, comp);
    auto it = idx_.find(key);
    if (it != idx_.end()) return it->second;
    std::size_t k = idx_.size();
    idx_.emplace(key, k);
    return k;
  }
  SparseVector<S> flatten(const VectorField<S>& v) {
    SparseVector<S> out;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (const auto& [m, c] : v.coeff(i).terms()) out.add(index(m, i), c);
    return out;
  }
  std::size_t size() const { return idx_.size(); }
  // Ambient dimension for linear algebra on flattened fields; indices only grow.
  static constexpr std::size_t kAmbient = std::size_t(1) << 40;

 private:
  std::map<std::pair<Monomial, std::size_t>, std::size_t> idx_;
};

template <class S>
std::string coefficient_str(const S& c, bool first) {
  std::string s = c.str();
  bool neg = !s.empty() && s[0] == '-';
  bool compound = s.find_first_of("+-", 1) != std::string::npos;
  if (compound) return (first ? "" : " + ") + std::string("(") + s + ")";
  if (neg) return (first ? "-" : " - ") + s.substr(1);
  return (first ? "" : " + ") + s;
}

template <class S>
std::string Polynomial<S>::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string ms = ring_->monomial_str(m);
    std::string cs = coefficient_str(c, first);
    if (ms == "1") {
      out += cs;
    } else {
      std::string bare = cs;
      // drop a unit coefficient
      if (bare == "1" || bare == " + 1") bare = first ? "" : " + ";
      else if (bare == "-1" || bare == " - 1") bare = first ? "-" : " - ";
      else bare += "*";
      out += bare + ms;
    }
    first = false;
  }
  return out;
}

template <class S>
std::string VectorField<S>::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeff_[i].str() + ")*d_" + ring_->var(i).name;
  }
  return out.empty() ? "0" : out;
}

}  // namespace sfn
