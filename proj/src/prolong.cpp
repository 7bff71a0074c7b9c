#include "sfn/prolong.hpp"

#include "sfn/contact.hpp"

#include <algorithm>
#include <set>

namespace sfn {

namespace {

template <class S>
int min_or_zero_degree(const LieSuperAlgebra<S>& g) {
  return g.dim() == 0 ? 0 : g.min_degree();
}

Weight weight_diff(const Weight& a, const Weight& b) {
  Weight w(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) w[i] = a[i] - b[i];
  return w;
}

// Derivations of degree k from the negative part into g, one block per
// (parity, weight). Each result is an action vector (slot * kSlot + target).
template <class S>
std::vector<SparseVector<S>> derivations_of_degree(const LieSuperAlgebra<S>& g, int k) {
  auto negs = g.negative_part();
  struct Var {
    std::size_t slot, target;
  };
  std::map<std::pair<int, Weight>, std::vector<Var>> blocks;
  for (std::size_t s = 0; s < negs.size(); ++s) {
    std::size_t u = negs[s];
    for (std::size_t t : g.of_degree(g.degree(u) + k)) {
      int pi = bit(g.parity(u) + g.parity(t));
      blocks[{pi, weight_diff(g.basis(t).weight, g.basis(u).weight)}].push_back({s, t});
    }
  }
  std::vector<SparseVector<S>> out;
  for (const auto& [key, vars] : blocks) {
    Parity pi = parity_of(key.first);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> var_of;  // (slot, target) -> column
    for (std::size_t c = 0; c < vars.size(); ++c) var_of[{vars[c].slot, vars[c].target}] = c;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_slot(negs.size());
    for (const auto& v : vars) by_slot[v.slot].push_back({v.target, var_of[{v.slot, v.target}]});

    // rows: (pair index, output basis index)
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
    std::vector<std::tuple<std::size_t, std::size_t, S>> trip;
    auto put = [&](std::size_t pair, const SparseVector<S>& vec, std::size_t col, const S& scale) {
      for (const auto& [m, c] : vec) {
        auto [it, fresh] = row_of.emplace(std::make_pair(pair, m), row_of.size());
        trip.emplace_back(it->second, col, scale * c);
      }
    };
    std::map<std::size_t, std::size_t> slot_of;
    for (std::size_t s = 0; s < negs.size(); ++s) slot_of[negs[s]] = s;
    std::size_t pair = 0;
    for (std::size_t a = 0; a < negs.size(); ++a)
      for (std::size_t b = a; b < negs.size(); ++b, ++pair) {
        std::size_t u = negs[a], w = negs[b];
        // phi([u, w]) - [phi u, w] - (-1)^{pi p(u)} [u, phi w] = 0
        for (const auto& [m, c] : g.bracket_basis(u, w))
          for (const auto& [t, col] : by_slot[slot_of.at(m)]) put(pair, SparseVector<S>::unit(t), col, c);
        for (const auto& [t, col] : by_slot[a]) put(pair, g.bracket_basis(t, w), col, S(-1));
        S sg(-koszul_sign(pi, g.parity(u)));
        for (const auto& [t, col] : by_slot[b]) put(pair, g.bracket_basis(u, t), col, sg);
      }
    SparseMatrix<S> m(row_of.size(), vars.size());
    for (const auto& [r, c, v] : trip) m.add(r, c, v);
    for (const auto& kv : kernel_basis(m)) {
      SparseVector<S> act;
      for (const auto& [col, c] : kv) act.add(vars[col].slot * kSlot + vars[col].target, c);
      out.push_back(std::move(act));
    }
  }
  return out;
}

template <class S>
Parity action_parity(const LieSuperAlgebra<S>& g, const std::vector<std::size_t>& negs, const SparseVector<S>& act) {
  std::size_t e = act.lead();
  return g.parity(negs[e / kSlot]) + g.parity(e % kSlot);
}

template <class S>
SparseVector<S> unpack_slot(const SparseVector<S>& act, std::size_t slot) {
  std::map<std::size_t, S> m;
  for (const auto& [e, c] : act)
    if (e / kSlot == slot) m[e % kSlot] = c;
  return SparseVector<S>::from_map(m);
}

template <class S>
SparseVector<S> apply_i(const LieSuperAlgebra<S>& g, const SparseVector<S>& y) {
  SparseVector<S> out;
  for (const auto& [j, c] : y) out.axpy(c, g.i_op().at(j));
  return out;
}

template <class S>
bool has_full_i_op(const LieSuperAlgebra<S>& g) {
  if (g.i_op().size() != g.dim()) return false;
  return true;
}

}  // namespace

template <class S>
LieSuperAlgebra<S> truncate_degree(const LieSuperAlgebra<S>& g, int max_degree) {
  std::vector<long long> pos(g.dim(), -1);
  std::vector<BasisVector> basis;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.degree(i) <= max_degree) {
      pos[i] = static_cast<long long>(basis.size());
      basis.push_back(g.basis(i));
    }
  auto remap = [&](const SparseVector<S>& v) { return v.remap([&](std::size_t k) { return pos[k]; }); };
  LieSuperAlgebra<S> out(g.name(), basis);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j)
      if (pos[i] >= 0 && pos[j] >= 0 && g.degree(i) + g.degree(j) <= max_degree)
        out.set_bracket(pos[i], pos[j], remap(g.bracket_basis(i, j)));
  std::vector<std::size_t> cartan;
  for (auto h : g.cartan())
    if (pos[h] >= 0) cartan.push_back(pos[h]);
  out.set_cartan(cartan);
  for (const auto& [i, v] : g.i_op())
    if (pos[i] >= 0) out.set_i_op(pos[i], remap(v));
  bool whole = g.top_degree() <= max_degree;
  out.set_max_degree(whole ? g.max_degree() : std::optional<int>(max_degree));
  out.set_complete(whole && g.complete());
  return out;
}

template <class S>
SparseVector<S> action_vector(const LieSuperAlgebra<S>& g, const SparseVector<S>& x) {
  auto negs = g.negative_part();
  SparseVector<S> out;
  for (std::size_t s = 0; s < negs.size(); ++s) {
    SparseVector<S> b = g.bracket(x, SparseVector<S>::unit(negs[s]));
    for (const auto& [t, c] : b) out.add(s * kSlot + t, c);
  }
  return out;
}

template <class S>
LieSuperAlgebra<S> degree_zero_derivations(const LieSuperAlgebra<S>& g) {
  auto negs = g.negative_part();
  std::vector<BasisVector> basis;
  for (auto i : negs) basis.push_back({g.basis(i).id, g.parity(i), g.degree(i), {}});
  LieSuperAlgebra<S> out(g.name() + "_-", basis);
  for (std::size_t a = 0; a < negs.size(); ++a)
    for (std::size_t b = a; b < negs.size(); ++b) {
      SparseVector<S> v = g.bracket_basis(negs[a], negs[b]).remap([&](std::size_t m) {
        return static_cast<long long>(std::find(negs.begin(), negs.end(), m) - negs.begin());
      });
      out.set_bracket(a, b, v);
    }
  auto ders = derivations_of_degree(out, 0);
  std::vector<BasisVector> more;
  for (std::size_t j = 0; j < ders.size(); ++j)
    more.push_back({"D" + std::to_string(j + 1), action_parity(out, out.negative_part(), ders[j]), 0, {}});
  std::size_t n = out.dim();
  out.extend(more);
  for (std::size_t j = 0; j < ders.size(); ++j)
    for (std::size_t s = 0; s < n; ++s) out.set_bracket(n + j, s, unpack_slot(ders[j], s));
  Coordinatizer<S> coords(negs.size() * kSlot, ders);
  for (std::size_t a = 0; a < ders.size(); ++a)
    for (std::size_t b = a; b < ders.size(); ++b) {
      // [Da, Db] acts as Da Db - (-1)^{ab} Db Da
      SparseVector<S> act;
      S sg(koszul_sign(out.parity(n + a), out.parity(n + b)));
      for (std::size_t s = 0; s < n; ++s) {
        SparseVector<S> v = SparseVector<S>::unit(s);
        SparseVector<S> t = out.bracket(SparseVector<S>::unit(n + a), out.bracket(SparseVector<S>::unit(n + b), v));
        t.axpy(-sg, out.bracket(SparseVector<S>::unit(n + b), out.bracket(SparseVector<S>::unit(n + a), v)));
        for (const auto& [m, c] : t) act.add(s * kSlot + m, c);
      }
      SparseVector<S> c;
      if (!coords.solve(act, c)) throw AlgebraError("derivations are not closed under the bracket");
      out.set_bracket(n + a, n + b, c.remap([&](std::size_t k) { return static_cast<long long>(n + k); }));
    }
  out.set_max_degree(0);
  out.set_complete(true);
  out.set_name("der0(" + g.name() + ")");
  return out;
}

template <class S>
ProlongResult<S> generalized_prolong(const LieSuperAlgebra<S>& pair, int max_degree) {
  if (!pair.graded()) throw AlgebraError("prolongation needs a graded pair");
  if (pair.top_degree() > 0) throw AlgebraError("pair has components of positive degree");
  ProlongResult<S> res;
  res.depth = -min_or_zero_degree(pair);
  if (res.depth < 1) throw AlgebraError("pair has no negative part");
  LieSuperAlgebra<S> g = pair;
  g.set_name(pair.name() + "_*");
  g.set_complete(false);
  auto negs = g.negative_part();
  const std::size_t slots = negs.size();
  const bool with_i = has_full_i_op(pair);

  // g_0 must act faithfully by derivations
  auto der0 = derivations_of_degree(g, 0);
  {
    std::vector<SparseVector<S>> acts;
    for (auto i : g.of_degree(0)) acts.push_back(action_vector(g, SparseVector<S>::unit(i)));
    if (span_basis(slots * kSlot, acts).size() != acts.size()) throw AlgebraError("g_0 does not act faithfully on g_-");
    RowEchelon<S> ech(slots * kSlot);
    for (const auto& d : der0) ech.insert(d);
    for (const auto& a : acts)
      if (!ech.contains(a)) throw AlgebraError("g_0 does not act by derivations of g_-");
  }

  for (int d = -res.depth; d <= 0; ++d) res.dims[d] = g.sdim_of_degree(d);
  int zeros = 0;
  int reached = 0;
  for (int k = 1; k <= max_degree; ++k) {
    auto acts = derivations_of_degree(g, k);
    reached = k;
    std::size_t n = g.dim();
    std::vector<BasisVector> more;
    for (std::size_t j = 0; j < acts.size(); ++j)
      more.push_back({"g" + std::to_string(k) + "_" + std::to_string(j + 1), action_parity(g, negs, acts[j]), k, {}});
    g.extend(more);
    for (std::size_t j = 0; j < acts.size(); ++j)
      for (std::size_t s = 0; s < slots; ++s) g.set_bracket(n + j, negs[s], unpack_slot(acts[j], s));
    res.dims[k] = g.sdim_of_degree(k);
    if (acts.empty()) {
      if (++zeros >= res.depth) {
        g.set_complete(true);
        break;
      }
      continue;
    }
    zeros = 0;
    Coordinatizer<S> coords(slots * kSlot, acts);
    auto solve = [&](const SparseVector<S>& act, const char* what) {
      SparseVector<S> c;
      if (!coords.solve(act, c)) throw AlgebraError(std::string("prolongation: ") + what + " leaves g_" + std::to_string(k));
      return c.remap([&](std::size_t q) { return static_cast<long long>(n + q); });
    };
    for (int a = 0; 2 * a <= k; ++a) {
      int b = k - a;
      auto ga = g.of_degree(a), gb = g.of_degree(b);
      for (auto x : ga)
        for (auto y : gb) {
          if (a == b && y < x) continue;
          SparseVector<S> ux = SparseVector<S>::unit(x), uy = SparseVector<S>::unit(y);
          S sg(koszul_sign(g.parity(x), g.parity(y)));
          SparseVector<S> act;
          for (std::size_t s = 0; s < slots; ++s) {
            SparseVector<S> v = SparseVector<S>::unit(negs[s]);
            SparseVector<S> z = g.bracket(ux, g.bracket(uy, v));
            z.axpy(-sg, g.bracket(uy, g.bracket(ux, v)));
            for (const auto& [m, c] : z) act.add(s * kSlot + m, c);
          }
          g.set_bracket(x, y, solve(act, "bracket"));
        }
    }
    if (!g.cartan().empty()) g.compute_weights();
    if (with_i) {
      for (std::size_t j = 0; j < acts.size(); ++j) {
        SparseVector<S> act;
        for (std::size_t s = 0; s < slots; ++s) {
          SparseVector<S> jz = apply_i(g, unpack_slot(acts[j], s));
          for (const auto& [m, c] : jz) act.add(s * kSlot + m, c);
        }
        g.set_i_op(n + j, solve(act, "complex structure"));
      }
    }
  }
  g.set_max_degree(reached);
  if (!g.cartan().empty()) g.compute_weights();
  res.algebra = std::move(g);
  return res;
}

template <class S>
std::vector<SparseVector<S>> align_by_action(const LieSuperAlgebra<S>& target, const LieSuperAlgebra<S>& other) {
  auto tnegs = target.negative_part();
  std::vector<std::size_t> onegs;
  for (auto t : tnegs) {
    std::size_t o = other.at(target.basis(t).id);
    if (other.degree(o) != target.degree(t) || other.parity(o) != target.parity(t))
      throw AlgebraError("negative parts differ at " + target.basis(t).id);
    onegs.push_back(o);
  }
  if (other.negative_part().size() != tnegs.size()) throw AlgebraError("negative parts have different dimensions");
  std::vector<SparseVector<S>> image(other.dim());
  for (std::size_t s = 0; s < tnegs.size(); ++s) image[onegs[s]] = SparseVector<S>::unit(tnegs[s]);
  for (int k = 0; k <= other.top_degree(); ++k) {
    auto tk = target.of_degree(k);
    std::vector<SparseVector<S>> acts;
    for (auto t : tk) acts.push_back(action_vector(target, SparseVector<S>::unit(t)));
    Coordinatizer<S> coords(tnegs.size() * kSlot, acts);
    for (auto y : other.of_degree(k)) {
      SparseVector<S> act;
      for (std::size_t s = 0; s < onegs.size(); ++s)
        for (const auto& [m, c] : other.bracket_basis(y, onegs[s]))
          for (const auto& [t, e] : image[m]) act.add(s * kSlot + t, c * e);
      SparseVector<S> c;
      if (!coords.solve(act, c)) throw AlgebraError("no counterpart for " + other.basis(y).id);
      image[y] = c.remap([&](std::size_t q) { return static_cast<long long>(tk[q]); });
    }
  }
  return image;
}

template <class S>
bool is_homomorphism(const LieSuperAlgebra<S>& from, const LieSuperAlgebra<S>& to,
                     const std::vector<SparseVector<S>>& image) {
  auto limit = [](const LieSuperAlgebra<S>& g) -> std::optional<int> {
    if (g.max_degree() && !g.complete()) return g.max_degree();
    return std::nullopt;
  };
  auto lf = limit(from), lt = limit(to);
  for (std::size_t i = 0; i < from.dim(); ++i)
    for (std::size_t j = i; j < from.dim(); ++j) {
      int d = from.degree(i) + from.degree(j);
      if ((lf && d > *lf) || (lt && d > *lt)) continue;
      SparseVector<S> lhs;
      for (const auto& [m, c] : from.bracket_basis(i, j)) lhs.axpy(c, image[m]);
      if (!(lhs == to.bracket(image[i], image[j]))) return false;
    }
  return true;
}

namespace {

// Coefficients of z / (1 - e^{-z}).
std::vector<Rational> bernoulli_series(std::size_t n) {
  std::vector<Rational> b(n + 1, Rational(0));
  b[0] = Rational(1);
  // sum_{k<=m} C(m+1, k) B_k = 0
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc(0), binom(1);
    for (std::size_t k = 0; k < m; ++k) {
      acc += binom * b[k];
      binom = binom * Rational(static_cast<long>(m + 1 - k)) / Rational(static_cast<long>(k + 1));
    }
    b[m] = -acc / Rational(static_cast<long>(m + 1));
  }
  std::vector<Rational> c(n + 1);
  Rational fact(1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (k) fact = fact * Rational(static_cast<long>(k));
    c[k] = (k % 2 ? -b[k] : b[k]) / fact;
  }
  return c;
}

template <class S>
S lift(const Rational& r);
template <>
Rational lift<Rational>(const Rational& r) {
  return r;
}
template <>
GaussianRational lift<GaussianRational>(const Rational& r) {
  return GaussianRational(r);
}

}  // namespace

template <class S>
Realization<S> realize_as_vector_fields(const LieSuperAlgebra<S>& g) {
  auto negs = g.negative_part();
  std::vector<Indeterminate> vars;
  for (auto a : negs) vars.push_back({g.basis(a).id, g.parity(a), -g.degree(a)});
  Realization<S> out;
  out.ring = std::make_shared<const PolyRing>(std::move(vars));
  const auto& r = out.ring;
  using Poly = Polynomial<S>;
  using Elem = std::vector<Poly>;  // sum_b P_b e_b, coefficients on the left

  auto is_zero_elem = [](const Elem& e) {
    for (const auto& p : e)
      if (!p.is_zero()) return false;
    return true;
  };
  auto ad_x = [&](const Elem& q) {
    Elem o(g.dim(), Poly(r));
    for (std::size_t b = 0; b < g.dim(); ++b) {
      if (q[b].is_zero()) continue;
      for (Parity pq : {Parity::Even, Parity::Odd}) {
        Poly part = q[b].parity_part(pq);
        if (part.is_zero()) continue;
        for (std::size_t s = 0; s < negs.size(); ++s) {
          const auto& br = g.bracket_basis(negs[s], b);
          if (br.empty()) continue;
          Poly xp = Poly::var(r, s, S(koszul_sign(g.parity(negs[s]), pq))) * part;
          for (const auto& [m, c] : br) o[m] += c * xp;
        }
      }
    }
    return o;
  };
  std::size_t depth_bound = static_cast<std::size_t>(g.top_degree() - g.min_degree() + 2);
  auto coeffs = bernoulli_series(depth_bound + 1);
  std::vector<bool> negative(g.dim(), false);
  for (auto a : negs) negative[a] = true;

  for (std::size_t xi = 0; xi < g.dim(); ++xi) {
    Elem cur(g.dim(), Poly(r));
    cur[xi] = Poly::constant(r, S(1));
    Elem y(g.dim(), Poly(r));
    Rational fact(1);
    for (std::size_t n = 0; !is_zero_elem(cur); ++n) {
      if (n) fact = fact * Rational(static_cast<long>(n));
      S c = lift<S>((n % 2 ? Rational(-1) : Rational(1)) / fact);
      for (std::size_t b = 0; b < g.dim(); ++b)
        if (negative[b]) y[b] += c * cur[b];
      cur = ad_x(cur);
    }
    Elem t(g.dim(), Poly(r));
    cur = y;
    for (std::size_t n = 0; !is_zero_elem(cur); ++n) {
      if (n >= coeffs.size()) coeffs = bernoulli_series(2 * n);
      S c = lift<S>(coeffs[n]);
      for (std::size_t b = 0; b < g.dim(); ++b) t[b] += c * cur[b];
      cur = ad_x(cur);
    }
    VectorField<S> v(r);
    for (std::size_t s = 0; s < negs.size(); ++s) v.coeff(s) = t[negs[s]];
    out.fields.push_back(v.negate_vars());
  }
  return out;
}

ProlongResult<Rational> cartan_prolong(const LieSuperAlgebra<Rational>& pair, int max_degree) {
  using Field = VectorField<Rational>;
  if (!pair.graded() || pair.min_degree() != -1 || pair.top_degree() != 0)
    throw AlgebraError("Cartan prolongation needs a depth one pair");
  auto real = realize_as_vector_fields(pair);
  const auto& r = real.ring;
  const std::size_t n = r->size();
  std::vector<BasisVector> basis = pair.basis();
  std::vector<Field> fields = real.fields;
  std::vector<Field> prev;
  for (auto i : pair.of_degree(0)) prev.push_back(real.fields[i]);

  ProlongResult<Rational> res;
  res.dims[-1] = pair.sdim_of_degree(-1);
  res.dims[0] = pair.sdim_of_degree(0);
  bool complete = false;
  int reached = 0;
  for (int k = 1; k <= max_degree; ++k) {
    reached = k;
    FieldIndexer<Rational> idx;
    const std::size_t big = kSlot;
    auto stack = [&](const std::vector<Field>& comps) {
      SparseVector<Rational> v;
      for (std::size_t i = 0; i < comps.size(); ++i)
        for (const auto& [e, c] : idx.flatten(comps[i])) v.add(i * big + e, c);
      return v;
    };
    std::vector<Field> found;
    for (Parity par : {Parity::Even, Parity::Odd}) {
      std::vector<Field> cand;
      std::vector<SparseVector<Rational>> a;
      for (const auto& mono : r->monomials_of_weight(k + 1))
        for (std::size_t i = 0; i < n; ++i) {
          if (r->parity(mono) + r->var(i).parity != par) continue;
          Field f(r);
          f.coeff(i) = Polynomial<Rational>::monomial(r, mono);
          std::vector<Field> comps;
          for (std::size_t j = 0; j < n; ++j) comps.push_back(bracket(Field::partial(r, j), f));
          cand.push_back(f);
          a.push_back(stack(comps));
        }
      if (cand.empty()) continue;
      std::vector<SparseVector<Rational>> b;
      for (const auto& p : prev) {
        // [d_j, D] has parity p(D) + p(x_j)
        for (std::size_t j = 0; j < n; ++j) {
          if (p.parity() != par + r->var(j).parity) continue;
          std::vector<Field> comps(n, Field(r));
          comps[j] = p;
          b.push_back(stack(comps));
        }
      }
      const std::size_t dim = n * big;
      auto meet = intersect_subspaces(dim, a, b);
      Coordinatizer<Rational> coords(dim, a);
      for (const auto& v : meet) {
        Field f(r);
        for (const auto& [j, c] : coords.coordinates(v)) f += c * cand[j];
        found.push_back(f);
      }
    }
    res.dims[k] = {0, 0};
    for (std::size_t j = 0; j < found.size(); ++j) {
      Parity p = found[j].parity();
      (p == Parity::Even ? res.dims[k].even : res.dims[k].odd)++;
      basis.push_back({"g" + std::to_string(k) + "_" + std::to_string(j + 1), p, k, {}});
      fields.push_back(found[j]);
    }
    prev = found;
    if (found.empty()) {
      complete = true;
      break;
    }
  }
  for (auto& b : basis) b.weight.clear();
  res.algebra = field_algebra(pair.name() + "_*", basis, fields, reached, complete);
  res.algebra.set_cartan(pair.cartan());
  if (!pair.cartan().empty()) res.algebra.compute_weights();
  res.depth = 1;
  return res;
}

#define SFN_INSTANTIATE(S)                                                                                       \
  template LieSuperAlgebra<S> truncate_degree(const LieSuperAlgebra<S>&, int);                                  \
  template SparseVector<S> action_vector(const LieSuperAlgebra<S>&, const SparseVector<S>&);                    \
  template LieSuperAlgebra<S> degree_zero_derivations(const LieSuperAlgebra<S>&);                               \
  template ProlongResult<S> generalized_prolong(const LieSuperAlgebra<S>&, int);                               \
  template std::vector<SparseVector<S>> align_by_action(const LieSuperAlgebra<S>&, const LieSuperAlgebra<S>&); \
  template bool is_homomorphism(const LieSuperAlgebra<S>&, const LieSuperAlgebra<S>&,                          \
                                const std::vector<SparseVector<S>>&);                                          \
  template Realization<S> realize_as_vector_fields(const LieSuperAlgebra<S>&);

SFN_INSTANTIATE(Rational)
SFN_INSTANTIATE(GaussianRational)

}  // namespace sfn
