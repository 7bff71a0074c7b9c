#include "sfn/contact.hpp"

#include <map>
#include <tuple>

namespace sfn {

using Poly = Polynomial<Rational>;
using Field = VectorField<Rational>;

std::string ContactSpace::name() const {
  if (kind == ContactKind::M) return "m(" + std::to_string(n) + ")";
  return "k(" + std::to_string(2 * n + 1) + "|" + std::to_string(m) + ")";
}

namespace {
std::string indexed(const std::string& base, int i, int count) {
  return count == 1 ? base : base + std::to_string(i);
}
}  // namespace

ContactSpace contact_space_k(int n, int m) {
  std::vector<Indeterminate> v;
  v.push_back({"t", Parity::Even, 2});
  for (int i = 1; i <= n; ++i) v.push_back({indexed("p", i, n), Parity::Even, 1});
  for (int i = 1; i <= n; ++i) v.push_back({indexed("q", i, n), Parity::Even, 1});
  int k = m / 2;
  for (int j = 1; j <= k; ++j) v.push_back({indexed("xi", j, k), Parity::Odd, 1});
  for (int j = 1; j <= k; ++j) v.push_back({indexed("eta", j, k), Parity::Odd, 1});
  if (m % 2) v.push_back({"theta", Parity::Odd, 1});
  ContactSpace cs;
  cs.kind = ContactKind::K;
  cs.n = n;
  cs.m = m;
  cs.ring = std::make_shared<const PolyRing>(std::move(v));
  cs.time = 0;
  return cs;
}

ContactSpace contact_space_m(int n) {
  std::vector<Indeterminate> v;
  v.push_back({"tau", Parity::Odd, 2});
  for (int i = 1; i <= n; ++i) v.push_back({indexed("q", i, n), Parity::Even, 1});
  for (int i = 1; i <= n; ++i) v.push_back({n == 1 ? "theta" : "xi" + std::to_string(i), Parity::Odd, 1});
  ContactSpace cs;
  cs.kind = ContactKind::M;
  cs.n = n;
  cs.m = n;
  cs.ring = std::make_shared<const PolyRing>(std::move(v));
  cs.time = 0;
  return cs;
}

namespace {

// Euler field on all indeterminates except the time one.
Field euler(const ContactSpace& cs) {
  Field e(cs.ring);
  for (std::size_t i = 0; i < cs.ring->size(); ++i)
    if (i != cs.time) e.coeff(i) = Poly::var(cs.ring, i);
  return e;
}

Field k_field(const ContactSpace& cs, const Poly& f) {
  const auto& r = cs.ring;
  Rational sgn(f.parity() == Parity::Odd ? -1 : 1);
  Field e = euler(cs);
  Field out(r);
  out.coeff(cs.time) = Rational(2) * f - e.apply(f);
  std::size_t p0 = 1, q0 = 1 + static_cast<std::size_t>(cs.n);
  std::size_t x0 = q0 + static_cast<std::size_t>(cs.n), k = static_cast<std::size_t>(cs.m / 2);
  std::size_t y0 = x0 + k;
  // -H_f
  for (std::size_t i = 0; i < static_cast<std::size_t>(cs.n); ++i) {
    out.coeff(q0 + i) -= f.derivative(p0 + i);
    out.coeff(p0 + i) += f.derivative(q0 + i);
  }
  for (std::size_t j = 0; j < k; ++j) {
    out.coeff(y0 + j) += sgn * f.derivative(x0 + j);
    out.coeff(x0 + j) += sgn * f.derivative(y0 + j);
  }
  if (cs.m % 2) {
    std::size_t th = y0 + k;
    out.coeff(th) -= sgn * f.derivative(th);
  }
  out += f.derivative(cs.time) * e;
  return out;
}

Field m_field(const ContactSpace& cs, const Poly& f) {
  const auto& r = cs.ring;
  Rational sgn(f.parity() == Parity::Odd ? -1 : 1);
  Field e = euler(cs);
  Field out(r);
  out.coeff(cs.time) = Rational(2) * f - e.apply(f);
  std::size_t q0 = 1, x0 = 1 + static_cast<std::size_t>(cs.n);
  // -Le_f
  for (std::size_t i = 0; i < static_cast<std::size_t>(cs.n); ++i) {
    out.coeff(x0 + i) -= f.derivative(q0 + i);
    out.coeff(q0 + i) -= sgn * f.derivative(x0 + i);
  }
  out -= sgn * (f.derivative(cs.time) * e);
  return out;
}

}  // namespace

Field contact_field(const ContactSpace& cs, const Poly& f) {
  Field out(cs.ring);
  for (Parity p : {Parity::Even, Parity::Odd}) {
    Poly part = f.parity_part(p);
    if (part.is_zero()) continue;
    out += cs.kind == ContactKind::K ? k_field(cs, part) : m_field(cs, part);
  }
  return out;
}

std::vector<Poly> contact_form(const ContactSpace& cs) {
  const auto& r = cs.ring;
  std::vector<Poly> a(r->size(), Poly(r));
  a[cs.time] = Poly::constant(r, Rational(1));
  if (cs.kind == ContactKind::K) {
    std::size_t p0 = 1, q0 = 1 + static_cast<std::size_t>(cs.n);
    std::size_t x0 = q0 + static_cast<std::size_t>(cs.n), k = static_cast<std::size_t>(cs.m / 2);
    std::size_t y0 = x0 + k;
    for (std::size_t i = 0; i < static_cast<std::size_t>(cs.n); ++i) {
      a[q0 + i] = Poly::var(r, p0 + i, Rational(-1));
      a[p0 + i] = Poly::var(r, q0 + i);
    }
    for (std::size_t j = 0; j < k; ++j) {
      a[y0 + j] = Poly::var(r, x0 + j, Rational(-1));
      a[x0 + j] = Poly::var(r, y0 + j, Rational(-1));
    }
    if (cs.m % 2) a[y0 + k] = Poly::var(r, y0 + k);
  } else {
    std::size_t q0 = 1, x0 = 1 + static_cast<std::size_t>(cs.n);
    for (std::size_t i = 0; i < static_cast<std::size_t>(cs.n); ++i) {
      a[q0 + i] = Poly::var(r, x0 + i);
      a[x0 + i] = Poly::var(r, q0 + i, Rational(-1));
    }
  }
  return a;
}

namespace {

// alpha(Y) = sum_j Y_j alpha_j
Poly pair_form(const std::vector<Poly>& a, const Field& y) {
  Poly out(y.ring());
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!y.coeff(j).is_zero() && !a[j].is_zero()) out += y.coeff(j) * a[j];
  return out;
}

bool preserves_homogeneous(const ContactSpace& cs, const Field& x, Poly* factor) {
  const auto& r = cs.ring;
  auto a = contact_form(cs);
  // (L_X alpha)(d_i) = X(alpha_i) - (-1)^{p(X) p(y_i)} alpha([d_i, X])
  Parity px = x.parity();
  std::vector<Poly> lie(r->size(), Poly(r));
  for (std::size_t i = 0; i < r->size(); ++i) {
    Field di = Field::partial(r, i);
    Field c = bracket(di, x);
    Rational s(koszul_sign(px, r->var(i).parity));
    lie[i] = x.apply(a[i]) + s * pair_form(a, c);
  }
  // lie = F * alpha; F read off the time component where alpha_t = 1
  Poly f = lie[cs.time];
  for (std::size_t i = 0; i < r->size(); ++i)
    if (!(lie[i] == f * a[i])) return false;
  if (factor) *factor = f;
  return true;
}

}  // namespace

bool preserves_contact_form(const ContactSpace& cs, const Field& x, Poly* factor) {
  Poly total(cs.ring);
  for (Parity p : {Parity::Even, Parity::Odd}) {
    Field part = x.parity_part(p);
    if (part.is_zero()) continue;
    Poly f(cs.ring);
    if (!preserves_homogeneous(cs, part, &f)) return false;
    total += f;
  }
  if (factor) *factor = total;
  return true;
}

LieSuperAlgebra<Rational> field_algebra(const std::string& name, const std::vector<BasisVector>& basis,
                                        const std::vector<Field>& fields, int max_degree, bool complete) {
  FieldIndexer<Rational> idx;
  std::vector<SparseVector<Rational>> flat;
  for (const auto& f : fields) flat.push_back(idx.flatten(f));
  Coordinatizer<Rational> coords(FieldIndexer<Rational>::kAmbient, flat);
  LieSuperAlgebra<Rational> g(name, basis);
  for (std::size_t a = 0; a < fields.size(); ++a)
    for (std::size_t b = a; b < fields.size(); ++b) {
      if (*basis[a].degree + *basis[b].degree > max_degree) continue;
      Field c = bracket(fields[a], fields[b]);
      if (c.is_zero()) continue;
      SparseVector<Rational> v;
      if (!coords.solve(idx.flatten(c), v))
        throw AlgebraError(name + ": bracket [" + basis[a].id + ", " + basis[b].id + "] leaves the span");
      g.set_bracket(a, b, v);
    }
  g.set_max_degree(max_degree);
  g.set_complete(complete);
  return g;
}

ContactAlgebra contact_algebra(const ContactSpace& cs, int max_degree) {
  ContactAlgebra out;
  out.space = cs;
  std::vector<BasisVector> basis;
  Parity shift = cs.kind == ContactKind::M ? Parity::Odd : Parity::Even;
  for (int w = 0; w <= max_degree + 2; ++w)
    for (const auto& mono : cs.ring->monomials_of_weight(w)) {
      basis.push_back({cs.ring->monomial_str(mono), cs.ring->parity(mono) + shift, w - 2, {}});
      out.fields.push_back(contact_field(cs, Poly::monomial(cs.ring, mono)));
    }
  out.algebra = field_algebra(cs.name(), basis, out.fields, max_degree);
  std::vector<std::string> cartan{cs.kind == ContactKind::K ? "t" : "tau"};
  std::size_t first = 1, second = 1 + static_cast<std::size_t>(cs.n);
  for (std::size_t i = 0; i < static_cast<std::size_t>(cs.n); ++i) {
    Monomial mono(cs.ring->size(), 0);
    mono[first + i] = mono[second + i] = 1;
    cartan.push_back(cs.ring->monomial_str(mono));
  }
  if (cs.kind == ContactKind::K) {
    std::size_t k = static_cast<std::size_t>(cs.m / 2), x0 = 1 + 2 * static_cast<std::size_t>(cs.n);
    for (std::size_t j = 0; j < k; ++j) {
      Monomial mono(cs.ring->size(), 0);
      mono[x0 + j] = mono[x0 + k + j] = 1;
      cartan.push_back(cs.ring->monomial_str(mono));
    }
  }
  std::vector<std::size_t> c;
  for (const auto& id : cartan)
    if (auto i = out.algebra.index_of(id)) c.push_back(*i);
  out.algebra.set_cartan(c);
  out.algebra.compute_weights();
  return out;
}

Polynomial<Rational> divergence(const Field& x) {
  Poly out(x.ring());
  for (Parity p : {Parity::Even, Parity::Odd}) {
    Field part = x.parity_part(p);
    for (std::size_t i = 0; i < part.size(); ++i) {
      const Poly& c = part.coeff(i);
      if (c.is_zero()) continue;
      Rational s(x.ring()->var(i).parity == Parity::Odd && c.parity() == Parity::Odd ? -1 : 1);
      out += s * c.derivative(i);
    }
  }
  return out;
}

VectAlgebra vect_algebra(int m, int n, int max_degree, bool divergence_free) {
  std::vector<Indeterminate> v;
  for (int i = 1; i <= m + n; ++i) v.push_back({"x" + std::to_string(i), i <= m ? Parity::Even : Parity::Odd, 1});
  VectAlgebra out;
  out.ring = std::make_shared<const PolyRing>(std::move(v));
  const auto& r = out.ring;
  std::vector<BasisVector> basis;
  for (int d = -1; d <= max_degree; ++d)
    for (Parity par : {Parity::Even, Parity::Odd}) {
      std::vector<Field> fs;
      std::vector<std::string> names;
      for (const auto& mono : r->monomials_of_weight(d + 1))
        for (std::size_t i = 0; i < r->size(); ++i) {
          if (r->parity(mono) + r->var(i).parity != par) continue;
          Field f(r);
          f.coeff(i) = Poly::monomial(r, mono);
          fs.push_back(f);
          std::string ms = r->monomial_str(mono);
          names.push_back((ms == "1" ? "" : ms + "*") + "d" + std::to_string(i + 1));
        }
      if (!divergence_free || d < 0) {
        for (std::size_t k = 0; k < fs.size(); ++k) {
          basis.push_back({names[k], par, d, {}});
          out.fields.push_back(fs[k]);
        }
        continue;
      }
      // kernel of the divergence on this block
      std::map<Monomial, std::size_t> rows;
      std::vector<std::tuple<std::size_t, std::size_t, Rational>> trip;
      for (std::size_t k = 0; k < fs.size(); ++k) {
        Poly dv = divergence(fs[k]);
        for (const auto& [mono, c] : dv.terms())
          trip.emplace_back(rows.emplace(mono, rows.size()).first->second, k, c);
      }
      SparseMatrix<Rational> a(rows.size(), fs.size());
      for (const auto& [i, k, c] : trip) a.add(i, k, c);
      int count = 0;
      for (const auto& kv : kernel_basis(a)) {
        Field f(r);
        for (const auto& [k, c] : kv) f += c * fs[k];
        basis.push_back({"s" + std::to_string(d) + (par == Parity::Even ? "e" : "o") + std::to_string(++count), par, d, {}});
        out.fields.push_back(f);
      }
    }
  std::string name = std::string(divergence_free ? "svect(" : "vect(") + std::to_string(m) + "|" + std::to_string(n) + ")";
  out.algebra = field_algebra(name, basis, out.fields, max_degree);
  // diagonal fields of degree 0
  std::vector<std::size_t> cartan;
  for (auto i : out.algebra.of_degree(0)) {
    bool diagonal = true;
    for (std::size_t j = 0; j < r->size() && diagonal; ++j)
      for (const auto& [mono, c] : out.fields[i].coeff(j).terms()) {
        Monomial xj(r->size(), 0);
        xj[j] = 1;
        if (mono != xj) diagonal = false;
      }
    if (diagonal) cartan.push_back(i);
  }
  out.algebra.set_cartan(cartan);
  out.algebra.compute_weights();
  return out;
}

}  // namespace sfn
