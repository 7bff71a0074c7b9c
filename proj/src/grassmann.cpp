#include "sfn/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace sfn {

namespace {

int popcount(Mask m) { return std::popcount(m); }

void check_n(int n) {
  if (n < 0 || n > kMaxGrassmann) throw std::invalid_argument("Grassmann algebra size out of range");
}

void check_same(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.n() != b.n()) throw DimensionMismatch("Grassmann elements of different algebras");
}

bool in_masks(const GrassmannElement& a, const std::vector<Mask>& masks) {
  for (const auto& [m, c] : a.terms())
    if (std::find(masks.begin(), masks.end(), m) == masks.end()) return false;
  return true;
}

}  // namespace

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // one transposition per pair (i in a, j in b) with i > j
  int swaps = 0;
  for (Mask x = b; x; x &= x - 1) {
    Mask low = x & (~x + 1);
    swaps += popcount(a & ~((low << 1) - 1));
  }
  return swaps % 2 ? -1 : 1;
}

GrassmannElement::GrassmannElement(int n) : n_(n) { check_n(n); }

GrassmannElement GrassmannElement::unit(int n, const Gauss& c) { return monomial(n, 0, c); }

GrassmannElement GrassmannElement::generator(int n, int j, const Gauss& c) {
  if (j < 0 || j >= n) throw std::out_of_range("generator index");
  return monomial(n, Mask{1} << j, c);
}

GrassmannElement GrassmannElement::monomial(int n, Mask m, const Gauss& c) {
  GrassmannElement e(n);
  if (m >> n) throw std::out_of_range("monomial outside the algebra");
  e.add(m, c);
  return e;
}

Gauss GrassmannElement::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Gauss(0) : it->second;
}

void GrassmannElement::add(Mask m, const Gauss& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Parity GrassmannElement::parity() const {
  if (terms_.empty()) return Parity::Even;
  int p = popcount(terms_.begin()->first) % 2;
  for (const auto& [m, c] : terms_)
    if (popcount(m) % 2 != p) throw std::domain_error("inhomogeneous Grassmann element");
  return p ? Parity::Odd : Parity::Even;
}

GrassmannElement GrassmannElement::degree_part(int k) const {
  GrassmannElement out(n_);
  for (const auto& [m, c] : terms_)
    if (popcount(m) == k) out.terms_.emplace(m, c);
  return out;
}

GrassmannElement GrassmannElement::restrict_to(const std::vector<Mask>& masks) const {
  GrassmannElement out(n_);
  for (Mask m : masks) {
    auto it = terms_.find(m);
    if (it != terms_.end()) out.terms_.emplace(m, it->second);
  }
  return out;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  check_same(*this, o);
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
  check_same(*this, o);
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  check_same(a, b);
  GrassmannElement out(a.n());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (!s) continue;
      out.add(ma | mb, s > 0 ? ca * cb : -(ca * cb));
    }
  return out;
}

GrassmannElement operator*(const Gauss& c, GrassmannElement a) {
  if (c.is_zero()) return GrassmannElement(a.n());
  for (auto& [m, x] : a.terms_) x *= c;
  return a;
}

GrassmannElement GrassmannElement::operator-() const { return Gauss(-1) * *this; }

GrassmannElement multiply(const GrassmannElement& a, const GrassmannElement& b) { return a * b; }

SparseVector<Rational> GrassmannElement::realify() const {
  SparseVector<Rational> v;
  for (const auto& [m, c] : terms_) {
    v.add(2 * static_cast<std::size_t>(m), c.re());
    v.add(2 * static_cast<std::size_t>(m) + 1, c.im());
  }
  return v;
}

GrassmannElement GrassmannElement::from_real(int n, const SparseVector<Rational>& v) {
  GrassmannElement out(n);
  for (const auto& [k, x] : v) {
    auto m = static_cast<Mask>(k / 2);
    out.add(m, k % 2 ? Gauss(Rational(0), x) : Gauss(x));
  }
  return out;
}

std::string GrassmannElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool one = c == Gauss(1);
    if (!one || m == 0) os << "(" << c.str() << ")";
    if (m == 0) continue;
    if (!one) os << "*";
    bool lead = true;
    for (int j = 0; j < n_; ++j)
      if (m >> j & 1) {
        os << (lead ? "" : "^") << "th" << j + 1;
        lead = false;
      }
  }
  return os.str();
}

GrassmannElement RealStructure::apply(const GrassmannElement& a) const {
  if (a.n() != n_) throw DimensionMismatch("real structure of a different algebra");
  GrassmannElement out(n_);
  for (const auto& [m, c] : a.terms()) out += c.conj() * monomial_images_[m];
  return out;
}

std::string RealStructure::str() const {
  std::ostringstream os;
  for (int j = 0; j < n_; ++j) os << (j ? "; " : "") << "th" << j + 1 << " -> " << images_[j].str();
  return os.str();
}

RealStructure make_real_structure(std::vector<GrassmannElement> images) {
  const int n = static_cast<int>(images.size());
  check_n(n);
  for (int j = 0; j < n; ++j) {
    const auto& im = images[j];
    auto where = " (generator th" + std::to_string(j + 1) + ")";
    if (im.n() != n) throw RealStructureError("image lives in a different algebra" + where);
    if (im.is_zero()) throw RealStructureError("image is zero" + where);
    bool odd = true;
    for (const auto& [m, c] : im.terms()) odd = odd && popcount(m) % 2 == 1;
    if (!odd) throw RealStructureError("image is not odd" + where);
  }
  // the extension is multiplicative iff the images anticommute and square to zero
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k)
      if (!(images[j] * images[k] + images[k] * images[j]).is_zero())
        throw RealStructureError("images of th" + std::to_string(j + 1) + " and th" + std::to_string(k + 1) +
                                 " do not anticommute");
  RealStructure rho;
  rho.n_ = n;
  rho.images_ = std::move(images);
  const Mask top = Mask{1} << n;
  rho.monomial_images_.assign(top, GrassmannElement(n));
  rho.monomial_images_[0] = GrassmannElement::unit(n);
  for (Mask m = 1; m < top; ++m) {
    int j = std::countr_zero(m);
    rho.monomial_images_[m] = rho.images_[j] * rho.monomial_images_[m & (m - 1)];
  }
  for (int j = 0; j < n; ++j)
    if (rho.apply(rho.images_[j]) != GrassmannElement::generator(n, j))
      throw RealStructureError("rho^2 != id on th" + std::to_string(j + 1));
  rho.real_ = SparseMatrix<Rational>(2 * top, 2 * top);
  for (Mask m = 0; m < top; ++m) {
    // columns: Re and Im unit of theta_m
    auto re = rho.monomial_images_[m].realify();
    auto im = (Gauss(Rational(0), Rational(-1)) * rho.monomial_images_[m]).realify();
    for (const auto& [r, x] : re) rho.real_.add(r, 2 * m, x);
    for (const auto& [r, x] : im) rho.real_.add(r, 2 * m + 1, x);
  }
  return rho;
}

RealStructure rho_bar(int n, const std::vector<Gauss>& phases) {
  if (!phases.empty() && static_cast<int>(phases.size()) != n) throw std::invalid_argument("one phase per generator");
  std::vector<GrassmannElement> images;
  for (int j = 0; j < n; ++j) {
    Gauss l = phases.empty() ? Gauss(1) : phases[j];
    if (l.norm2() != Rational(1)) throw RealStructureError("phase of th" + std::to_string(j + 1) + " is not unimodular");
    images.push_back(GrassmannElement::generator(n, j, l));
  }
  return make_real_structure(std::move(images));
}

RealStructure rho_tr(int n) {
  if (n % 2) throw std::invalid_argument("rho_tr needs an even number of generators");
  const int k = n / 2;
  std::vector<GrassmannElement> images(n, GrassmannElement(n));
  for (int j = 0; j < k; ++j) {
    images[j] = GrassmannElement::generator(n, k + j, Gauss::i());
    images[k + j] = GrassmannElement::generator(n, j, Gauss::i());
  }
  return make_real_structure(std::move(images));
}

std::vector<GrassmannElement> real_form_basis(const RealStructure& rho) {
  const auto& r = rho.realified();
  SparseMatrix<Rational> m(r.rows(), r.cols());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    m.set_row(i, r.row(i));
    m.add(i, i, Rational(-1));
  }
  std::vector<GrassmannElement> out;
  for (const auto& v : span_basis(r.cols(), kernel_basis(m))) out.push_back(GrassmannElement::from_real(rho.n(), v));
  if (out.size() != (std::size_t{1} << rho.n())) throw std::logic_error("real form of wrong dimension");
  return out;
}

StructuralSubspaces structural_subspaces(int n) {
  check_n(n);
  StructuralSubspaces s;
  const Mask top = Mask{1} << n;
  s.filtration.resize(n + 1);
  for (Mask m = 0; m < top; ++m) {
    int d = popcount(m);
    for (int k = 0; k <= d; ++k) s.filtration[k].push_back(m);
    if (d % 2 == 0) {
      s.even.push_back(m);
      s.center.push_back(m);
    } else {
      s.odd.push_back(m);
      if (d < n) s.odd_minus.push_back(m);
      if (d == n) s.center.push_back(m);
    }
  }
  return s;
}

Normalization normalize_generators(const RealStructure& rho) {
  const int n = rho.n();
  const auto sub = structural_subspaces(n);
  // Z cap G_2
  std::vector<Mask> zg2;
  for (Mask m : sub.center)
    if (popcount(m) >= 2) zg2.push_back(m);

  // B_1 = Re cap G_1, then x_k whose linear parts are independent
  Normalization out;
  RowEchelon<Rational> lin(2 * static_cast<std::size_t>(n));
  for (const auto& b : real_form_basis(rho)) {
    GrassmannElement x = b - b.degree_part(0);
    if (x.is_zero()) continue;
    SparseVector<Rational> p;
    auto deg1 = x.degree_part(1);
    for (const auto& [m, c] : deg1.terms()) {
      auto j = static_cast<std::size_t>(std::countr_zero(m));
      p.add(2 * j, c.re());
      p.add(2 * j + 1, c.im());
    }
    if (lin.insert(p)) out.x.push_back(x);
    if (static_cast<int>(out.x.size()) == n) break;
  }
  if (static_cast<int>(out.x.size()) != n) throw std::logic_error("real form does not project onto G_1/G_2");

  for (const auto& x : out.x) {
    GrassmannElement z = x.restrict_to(zg2);
    out.y.push_back(x - z);
    GrassmannElement zp = rho.apply(out.y.back()) - out.y.back();
    if (!in_masks(zp, zg2)) throw std::logic_error("rho(y) - y leaves Z cap G_2");
    out.z_prime.push_back(zp);
  }
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (!(out.y[k] * out.z_prime[l] + out.z_prime[k] * out.y[l]).is_zero())
        throw std::logic_error("y_k z'_l + z'_k y_l != 0");
      if (!(out.z_prime[k] * out.z_prime[l]).is_zero()) throw std::logic_error("z'_k z'_l != 0");
    }
  const Gauss half(Rational(1, 2));
  for (int k = 0; k < n; ++k) out.t.push_back(half * (out.y[k] + rho.apply(out.y[k])));
  return out;
}

namespace {

std::vector<GrassmannElement> monomials_of(int n, const std::vector<GrassmannElement>& gens) {
  const Mask top = Mask{1} << n;
  std::vector<GrassmannElement> out(top, GrassmannElement(n));
  out[0] = GrassmannElement::unit(n);
  for (Mask m = 1; m < top; ++m) {
    int j = std::countr_zero(m);
    out[m] = gens[j] * out[m & (m - 1)];
  }
  return out;
}

std::vector<SparseVector<Rational>> realified(const std::vector<GrassmannElement>& es) {
  std::vector<SparseVector<Rational>> out;
  for (const auto& e : es) out.push_back(e.realify());
  return out;
}

}  // namespace

RealFormIso::RealFormIso(const RealStructure& rho)
    : n_(rho.n()),
      gens_(normalize_generators(rho).t),
      monos_(monomials_of(n_, gens_)),
      coords_(std::size_t{2} << n_, realified(monos_)) {}

GrassmannElement RealFormIso::operator()(const GrassmannElement& a) const {
  SparseVector<Rational> c;
  if (!coords_.solve(a.realify(), c)) throw std::domain_error("element is not in the real form");
  GrassmannElement out(n_);
  for (const auto& [m, x] : c) out.add(static_cast<Mask>(m), Gauss(x));
  return out;
}

GrassmannElement RealFormIso::inverse(const GrassmannElement& b) const {
  GrassmannElement out(n_);
  for (const auto& [m, c] : b.terms()) {
    if (!c.is_real()) throw std::domain_error("element of Lambda_R(n) must have real coefficients");
    out += c * monos_[m];
  }
  return out;
}

RealFormIso canonical_iso(const RealStructure& rho) { return RealFormIso(rho); }

RealStructure random_real_structure(int n, std::mt19937_64& rng) {
  check_n(n);
  static const std::vector<Gauss> units{Gauss(1),
                                        Gauss(-1),
                                        Gauss::i(),
                                        Gauss(Rational(3, 5), Rational(4, 5)),
                                        Gauss(Rational(5, 13), Rational(-12, 13)),
                                        Gauss(Rational(-8, 17), Rational(15, 17))};
  auto pick = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
  auto small = [&] { return Gauss(static_cast<long>(pick(5)) - 2, static_cast<long>(pick(5)) - 2); };

  // rho_0: tr on the first 2k generators, bar with random phases on the rest
  const int k = n >= 2 ? static_cast<int>(pick(static_cast<std::size_t>(n / 2) + 1)) : 0;
  std::vector<GrassmannElement> base(n, GrassmannElement(n));
  for (int j = 0; j < k; ++j) {
    base[2 * j] = GrassmannElement::generator(n, 2 * j + 1, Gauss::i());
    base[2 * j + 1] = GrassmannElement::generator(n, 2 * j, Gauss::i());
  }
  for (int j = 2 * k; j < n; ++j) base[j] = GrassmannElement::generator(n, j, units[pick(units.size())]);
  RealStructure rho0 = make_real_structure(base);

  // phi: triangular linear part with unit diagonal phases, plus a cubic tail
  const Mask top = Mask{1} << n;
  std::vector<GrassmannElement> phi(n, GrassmannElement(n));
  for (int j = 0; j < n; ++j) {
    phi[j] = GrassmannElement::generator(n, j, units[pick(units.size())]);
    for (int l = 0; l < j; ++l) phi[j].add(Mask{1} << l, small());
    for (Mask m = 0; m < top; ++m)
      if (popcount(m) == 3 && pick(2)) phi[j].add(m, small());
  }
  auto phi_monos = monomials_of(n, phi);
  Coordinatizer<Gauss> inv(top, [&] {
    std::vector<SparseVector<Gauss>> cols;
    for (const auto& e : phi_monos) {
      SparseVector<Gauss> v;
      for (const auto& [m, c] : e.terms()) v.add(m, c);
      cols.push_back(v);
    }
    return cols;
  }());
  auto apply_phi = [&](const GrassmannElement& a) {
    GrassmannElement out(n);
    for (const auto& [m, c] : a.terms()) out += c * phi_monos[m];
    return out;
  };
  std::vector<GrassmannElement> images;
  for (int j = 0; j < n; ++j) {
    // phi^{-1}(theta_j)
    auto c = inv.coordinates(SparseVector<Gauss>::unit(Mask{1} << j));
    GrassmannElement pre(n);
    for (const auto& [m, x] : c) pre.add(static_cast<Mask>(m), x);
    images.push_back(apply_phi(rho0.apply(pre)));
  }
  return make_real_structure(std::move(images));
}

}  // namespace sfn
