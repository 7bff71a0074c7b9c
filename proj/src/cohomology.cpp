#include "sfn/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace sfn {

namespace {

int sign_of(int e) { return e % 2 ? -1 : 1; }

Weight weight_sub(Weight a, const Weight& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) a[i] = a[i] - b[i];
  return a;
}

// Removes one occurrence of `m`; false when absent.
bool erase_one(std::vector<std::size_t>& v, std::size_t m) {
  auto it = std::find(v.begin(), v.end(), m);
  if (it == v.end()) return false;
  v.erase(it);
  return true;
}

}  // namespace

template <class S>
CochainComplex<S>::CochainComplex(LieSuperAlgebra<S> g) : g_(std::move(g)) {
  if (!g_.graded()) throw AlgebraError("cochains need a graded algebra");
  negs_ = g_.negative_part();
  par_ = g_.parities();
}

template <class S>
int CochainComplex<S>::degree(const CochainTerm& t) const {
  int d = g_.degree(t.target);
  for (auto a : t.args) d -= g_.degree(a);
  return d;
}

template <class S>
Weight CochainComplex<S>::weight(const CochainTerm& t) const {
  Weight w = g_.basis(t.target).weight;
  for (auto a : t.args) w = weight_sub(w, g_.basis(a).weight);
  return w;
}

template <class S>
Parity CochainComplex<S>::parity(const CochainTerm& t) const {
  Parity p = par_[t.target];
  for (auto a : t.args) p = p + par_[a];
  return p;
}

template <class S>
int CochainComplex<S>::max_target_degree(int k, int degree) const {
  return degree - k;
}

template <class S>
std::vector<CochainTerm> CochainComplex<S>::terms(int k, int degree) const {
  std::vector<Parity> np;
  for (auto a : negs_) np.push_back(par_[a]);
  auto md = g_.max_degree();
  bool truncated = md && !g_.complete();
  if (truncated && max_target_degree(k, degree) > *md && k <= 2)
    throw TruncationShortfall("degree " + std::to_string(degree) + " needs " + g_.name() + " through degree " +
                              std::to_string(max_target_degree(k, degree)) + ", truncated at " +
                              std::to_string(*md));
  std::map<int, std::vector<std::size_t>> by_degree;
  std::vector<CochainTerm> out;
  for (auto& idx : super_exterior_indices(np, k)) {
    std::vector<std::size_t> args;
    int s = 0;
    for (auto i : idx) {
      args.push_back(negs_[i]);
      s += g_.degree(negs_[i]);
    }
    int td = degree + s;
    auto it = by_degree.find(td);
    if (it == by_degree.end()) it = by_degree.emplace(td, g_.of_degree(td)).first;
    for (auto t : it->second) out.push_back({args, t});
  }
  return out;
}

template <class S>
SparseVector<S> CochainComplex<S>::evaluate(const Cochain<S>& c, std::vector<std::size_t> args) const {
  int s = sort_with_sign(args, par_, true);
  if (!s) return {};
  auto it = c.values.find(args);
  if (it == c.values.end()) return {};
  SparseVector<S> v = it->second;
  v.scale(S(s));
  return v;
}

// Value of d(coef e_{args, target}) on the sorted list `at`.
template <class S>
SparseVector<S> CochainComplex<S>::d_at(const std::vector<std::size_t>& args, std::size_t target, const S& coef,
                                        const std::vector<std::size_t>& at) const {
  const std::size_t n = at.size();
  int pc = bit(par_[target]);
  for (auto a : args) pc += bit(par_[a]);
  SparseVector<S> out;
  std::vector<int> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + bit(par_[at[i]]);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> rest = at;
    rest.erase(rest.begin() + static_cast<long>(i));
    if (rest != args) continue;
    int pi = bit(par_[at[i]]);
    int e = static_cast<int>(i) + pi * (pc + prefix[i]);
    out.axpy(S(sign_of(e)) * coef, g_.bracket_basis(at[i], target));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& br = g_.bracket_basis(at[i], at[j]);
      if (br.empty()) continue;
      int pi = bit(par_[at[i]]), pj = bit(par_[at[j]]);
      int e = static_cast<int>(i + j) + pi * prefix[i] + pj * prefix[j] + pi * pj;
      for (const auto& [m, b] : br) {
        std::vector<std::size_t> a{m};
        for (std::size_t l = 0; l < n; ++l)
          if (l != i && l != j) a.push_back(at[l]);
        int s = sort_with_sign(a, par_, true);
        if (!s || a != args) continue;
        out.add(target, S(sign_of(e) * s) * b * coef);
      }
    }
  return out;
}

template <class S>
Cochain<S> CochainComplex<S>::coboundary_term(const std::vector<std::size_t>& args, std::size_t target,
                                              const S& coef) const {
  std::set<std::vector<std::size_t>> cand;
  auto push = [&](std::vector<std::size_t> a) {
    if (sort_with_sign(a, par_, true)) cand.insert(std::move(a));
  };
  for (auto x : negs_) {
    auto a = args;
    a.push_back(x);
    push(a);
  }
  std::set<std::size_t> distinct(args.begin(), args.end());
  for (auto m : distinct)
    for (std::size_t p = 0; p < negs_.size(); ++p)
      for (std::size_t q = p; q < negs_.size(); ++q) {
        if (!g_.bracket_basis(negs_[p], negs_[q]).find(m)) continue;
        auto a = args;
        erase_one(a, m);
        a.push_back(negs_[p]);
        a.push_back(negs_[q]);
        push(a);
      }
  Cochain<S> out;
  out.arity = static_cast<int>(args.size()) + 1;
  for (const auto& j : cand) {
    SparseVector<S> v = d_at(args, target, coef, j);
    if (!v.empty()) out.values[j] = std::move(v);
  }
  return out;
}

template <class S>
Cochain<S> CochainComplex<S>::coboundary(const Cochain<S>& c) const {
  Cochain<S> out;
  out.arity = c.arity + 1;
  for (const auto& [args, v] : c.values)
    for (const auto& [t, coef] : v) out.axpy(S(1), coboundary_term(args, t, coef));
  return out;
}

template <class S>
Cochain<S> CochainComplex<S>::act(const SparseVector<S>& h, const Cochain<S>& c) const {
  Cochain<S> out;
  out.arity = c.arity;
  for (const auto& [hb, a] : h) {
    if (g_.degree(hb) != 0) throw AlgebraError("act: " + g_.basis(hb).id + " is not in g_0");
    int ph = bit(par_[hb]);
    for (const auto& [args, v] : c.values)
      for (const auto& [t, coef] : v) {
        int pc = bit(par_[t]);
        for (auto x : args) pc += bit(par_[x]);
        std::set<std::vector<std::size_t>> cand{args};
        std::set<std::size_t> distinct(args.begin(), args.end());
        for (auto m : distinct)
          for (auto x : negs_) {
            if (!g_.bracket_basis(hb, x).find(m)) continue;
            auto b = args;
            erase_one(b, m);
            b.push_back(x);
            if (sort_with_sign(b, par_, true)) cand.insert(b);
          }
        for (const auto& j : cand) {
          SparseVector<S> val;
          if (j == args) val.axpy(a * coef, g_.bracket_basis(hb, t));
          int prefix = 0;
          for (std::size_t i = 0; i < j.size(); ++i) {
            for (const auto& [m, b] : g_.bracket_basis(hb, j[i])) {
              auto r = j;
              r[i] = m;
              int s = sort_with_sign(r, par_, true);
              if (!s || r != args) continue;
              val.add(t, S(-sign_of(ph * (pc + prefix)) * s) * b * a * coef);
            }
            prefix += bit(par_[j[i]]);
          }
          if (val.empty()) continue;
          auto& w = out.values[j];
          w.axpy(S(1), val);
          if (w.empty()) out.values.erase(j);
        }
      }
  }
  return out;
}

template <class S>
Cochain<S> CochainComplex<S>::random_cochain(int k, int degree, Parity parity, std::size_t count,
                                             std::mt19937_64& rng) const {
  std::vector<CochainTerm> pool;
  for (auto& t : terms(k, degree))
    if (this->parity(t) == parity) pool.push_back(std::move(t));
  Cochain<S> c;
  c.arity = k;
  if (pool.empty()) return c;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& t = pool[pick(rng)];
    int v = coef(rng);
    if (v) c.add(t.args, t.target, S(v));
  }
  return c;
}

template <class S>
std::string CochainComplex<S>::term_str(const CochainTerm& t) const {
  std::string out = g_.basis(t.target).id + "⊗";
  if (t.args.empty()) return g_.basis(t.target).id;
  bool first = true;
  for (std::size_t i = 0; i < t.args.size();) {
    std::size_t j = i;
    while (j < t.args.size() && t.args[j] == t.args[i]) ++j;
    if (!first) out += "∧";
    std::string id = g_.basis(t.args[i]).id + "*";
    out += j - i > 1 ? "(" + id + ")^" + std::to_string(j - i) : id;
    first = false;
    i = j;
  }
  return out;
}

namespace {

// Rescales to a primitive integer vector with positive leading coefficient.
std::vector<Rational> primitive(std::vector<Rational> c) {
  if (c.empty()) return c;
  mpz_class l = 1, g = 0;
  for (const auto& x : c) l = lcm(l, x.den());
  for (auto& x : c) {
    x = x * Rational(mpq_class(l));
    g = gcd(g, x.num());
  }
  if (c.front().sign() < 0) g = -g;
  for (auto& x : c) x = x / Rational(mpq_class(g));
  return c;
}
std::vector<GaussianRational> primitive(std::vector<GaussianRational> c) { return c; }

}  // namespace

template <class S>
std::string CochainComplex<S>::str(const Cochain<S>& c) const {
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> keys;
  std::vector<S> coefs;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, S> sorted;
  for (const auto& [args, v] : c.values)
    for (const auto& [t, x] : v) sorted[{t, args}] = x;
  for (const auto& [k, x] : sorted) {
    keys.push_back(k);
    coefs.push_back(x);
  }
  if (keys.empty()) return "0";
  coefs = primitive(coefs);
  std::string out;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    bool first = i == 0;
    if (coefs[i] == S(1)) out += first ? "" : " + ";
    else if (coefs[i] == S(-1)) out += first ? "-" : " - ";
    else out += coefficient_str(coefs[i], first) + "*";
    out += term_str({keys[i].second, keys[i].first});
  }
  return out;
}

// Reduction modulo B^2 and coordinates on the representatives, all in the
// index space of the degree's C^2 terms.
template <class S>
struct H2Degree<S>::Quotient {
  std::map<CochainTerm, std::size_t> index;
  std::vector<CochainTerm> terms;
  RowEchelon<S> boundaries;
  Coordinatizer<S> reps;
  const CochainComplex<S>* cx = nullptr;

  SparseVector<S> flatten(const Cochain<S>& c) const {
    std::map<std::size_t, S> m;
    for (const auto& [args, v] : c.values)
      for (const auto& [t, x] : v) {
        auto it = index.find({args, t});
        if (it == index.end()) throw AlgebraError("cochain term outside the degree");
        m[it->second] = x;
      }
    return SparseVector<S>::from_map(m);
  }
};

template <class S>
SparseVector<S> H2Degree<S>::class_of(const Cochain<S>& c) const {
  SparseVector<S> r = quotient->boundaries.reduce(quotient->flatten(c));
  SparseVector<S> coords;
  if (!quotient->reps.solve(r, coords)) throw AlgebraError("class_of: not a cocycle");
  return coords;
}

template <class S>
bool H2Degree<S>::is_coboundary(const Cochain<S>& c) const {
  return quotient->boundaries.contains(quotient->flatten(c));
}

template <class S>
H2Degree<S> h2_of_degree(const CochainComplex<S>& cx, int degree) {
  H2Degree<S> out;
  out.degree = degree;
  auto q = std::make_shared<typename H2Degree<S>::Quotient>();
  q->terms = cx.terms(2, degree);
  for (std::size_t i = 0; i < q->terms.size(); ++i) q->index[q->terms[i]] = i;
  const std::size_t dim = q->terms.size();
  q->boundaries = RowEchelon<S>(dim);
  q->cx = &cx;

  using Key = std::pair<Weight, int>;
  std::map<Key, std::vector<std::size_t>> c2_blocks;
  for (std::size_t i = 0; i < dim; ++i)
    c2_blocks[{cx.weight(q->terms[i]), bit(cx.parity(q->terms[i]))}].push_back(i);
  std::map<Key, std::vector<CochainTerm>> c1_blocks;
  for (auto& t : cx.terms(1, degree)) {
    Key k{cx.weight(t), bit(cx.parity(t))};
    if (c2_blocks.count(k)) c1_blocks[k].push_back(std::move(t));
  }

  std::vector<SparseVector<S>> all_reps;
  for (const auto& [key, cols] : c2_blocks) {
    typename H2Degree<S>::Block blk;
    blk.weight = key.first;
    blk.parity = parity_of(key.second);
    // Z^2
    std::map<std::pair<std::vector<std::size_t>, std::size_t>, std::size_t> row_of;
    std::vector<std::tuple<std::size_t, std::size_t, S>> trip;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Cochain<S> unit;
      unit.arity = 2;
      unit.add(q->terms[cols[c]].args, q->terms[cols[c]].target, S(1));
      for (const auto& [args, v] : cx.coboundary(unit).values)
        for (const auto& [t, x] : v) {
          auto [it, fresh] = row_of.emplace(std::make_pair(args, t), row_of.size());
          trip.emplace_back(it->second, c, x);
        }
    }
    SparseMatrix<S> d2(row_of.size(), cols.size());
    for (const auto& [r, c, x] : trip) d2.add(r, c, x);
    auto kernel = kernel_basis(d2);
    std::vector<SparseVector<S>> z;
    for (const auto& kv : kernel) z.push_back(kv.remap([&](std::size_t c) { return static_cast<long long>(cols[c]); }));
    // B^2
    RowEchelon<S> b(dim);
    auto it = c1_blocks.find(key);
    if (it != c1_blocks.end())
      for (const auto& t : it->second) {
        Cochain<S> unit;
        unit.arity = 1;
        unit.add(t.args, t.target, S(1));
        SparseVector<S> v = q->flatten(cx.coboundary(unit));
        b.insert(v);
        q->boundaries.insert(v);
      }
    std::vector<SparseVector<S>> residues;
    for (const auto& v : z) residues.push_back(b.reduce(v));
    auto reps = span_basis(dim, residues);
    blk.dim_z = z.size();
    blk.dim_b = b.rank();
    blk.dim_h = reps.size();
    if (blk.dim_z != blk.dim_b + blk.dim_h) throw AlgebraError("coboundaries are not cocycles: d^2 != 0");
    out.dim_z += blk.dim_z;
    out.dim_b += blk.dim_b;
    out.dim_h += blk.dim_h;
    for (auto& r : reps) {
      out.rep_block.push_back(out.blocks.size());
      all_reps.push_back(r);
    }
    out.blocks.push_back(std::move(blk));
  }
  // representatives are reduced against every block's boundaries
  for (auto& r : all_reps) r = q->boundaries.reduce(r);
  q->reps = Coordinatizer<S>(dim, all_reps);
  for (const auto& r : all_reps) {
    Cochain<S> c;
    c.arity = 2;
    for (const auto& [i, x] : r) c.add(q->terms[i].args, q->terms[i].target, x);
    out.reps.push_back(std::move(c));
  }
  out.quotient = q;
  return out;
}

template <class S>
CohomologyReport<S> h2_by_degree(const CochainComplex<S>& cx, int lo, int hi) {
  CohomologyReport<S> rep;
  rep.algebra = cx.algebra().name();
  rep.truncation = cx.algebra().max_degree();
  rep.complete = cx.algebra().complete();
  bool lower_nonzero = false;
  for (int d = lo; d <= hi; ++d) {
    auto h = h2_of_degree(cx, d);
    h.conditional = lower_nonzero;
    if (h.dim_h) lower_nonzero = true;
    rep.degrees.push_back(std::move(h));
  }
  return rep;
}

template <class S>
H2Module<S> g0_action_on_h2(const CochainComplex<S>& cx, const H2Degree<S>& h2, WeightMode mode, bool even_only) {
  const auto& g = cx.algebra();
  H2Module<S> m;
  m.degree = h2.degree;
  auto g0 = g.of_degree(0);
  for (auto h : g0) {
    std::vector<SparseVector<S>> cols;
    for (const auto& r : h2.reps) cols.push_back(h2.class_of(cx.act(SparseVector<S>::unit(h), r)));
    m.action[h] = std::move(cols);
  }
  if (g.cartan().empty() && !g0.empty() && !h2.reps.empty()) {
    bool weighted = false;
    for (const auto& b : h2.blocks) weighted |= !b.weight.empty();
    if (weighted) throw AlgebraError("weights present without Cartan elements");
  }
  auto ops = root_vectors(g, g0, mode == WeightMode::Highest ? 1 : -1, even_only);
  const std::size_t n = h2.reps.size();
  for (std::size_t b = 0; b < h2.blocks.size(); ++b) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if (h2.rep_block[j] == b) cols.push_back(j);
    if (cols.empty()) continue;
    SparseMatrix<S> a(ops.size() * n, cols.size());
    for (std::size_t o = 0; o < ops.size(); ++o)
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, x] : m.action[ops[o]][cols[c]]) a.add(o * n + r, c, x);
    typename H2Module<S>::Extremal e;
    e.weight = h2.blocks[b].weight;
    e.parity = h2.blocks[b].parity;
    for (const auto& kv : kernel_basis(a))
      e.vectors.push_back(kv.remap([&](std::size_t c) { return static_cast<long long>(cols[c]); }));
    if (!e.vectors.empty()) m.extremal.push_back(std::move(e));
  }
  return m;
}

namespace {

template <class S>
SparseVector<S> apply_action(const H2Module<S>& m, const SparseVector<S>& h, const SparseVector<S>& v) {
  SparseVector<S> out;
  for (const auto& [b, c] : h) {
    const auto& cols = m.action.at(b);
    for (const auto& [j, x] : v) out.axpy(c * x, cols[j]);
  }
  return out;
}

template <class S>
SparseVector<S> apply_map(const std::map<std::size_t, SparseVector<S>>& d, const SparseVector<S>& v) {
  SparseVector<S> out;
  for (const auto& [i, c] : v) {
    auto it = d.find(i);
    if (it != d.end()) out.axpy(c, it->second);
  }
  return out;
}

// Even derivation equal to i on g_{-1}, extended to g_- through brackets and
// by zero on g_{>=0}. Empty when the result is not a derivation of g.
template <class S>
std::optional<std::map<std::size_t, SparseVector<S>>> i_derivation(const LieSuperAlgebra<S>& g) {
  using V = SparseVector<S>;
  std::map<std::size_t, V> d;
  int lowest = 0;
  for (std::size_t i = 0; i < g.dim(); ++i) lowest = std::min(lowest, g.degree(i));
  if (lowest == 0) return std::nullopt;
  for (auto x : g.of_degree(-1)) {
    auto it = g.i_op().find(x);
    if (it == g.i_op().end()) return std::nullopt;
    d[x] = it->second;
  }
  for (int k = -2; k >= lowest; --k) {
    RowEchelon<S> ech(g.dim());
    std::vector<V> brackets, images;
    for (auto x : g.of_degree(-1))
      for (auto y : g.of_degree(k + 1)) {
        V b = g.bracket_basis(x, y);
        if (b.empty() || !ech.insert(b)) continue;
        brackets.push_back(b);
        V img = g.bracket(d[x], V::unit(y));
        img.axpy(S(1), g.bracket(V::unit(x), d[y]));
        images.push_back(img);
      }
    auto basis = g.of_degree(k);
    if (brackets.size() != basis.size()) return std::nullopt;
    Coordinatizer<S> co(g.dim(), brackets);
    for (auto e : basis) {
      V img;
      for (const auto& [q, c] : co.coordinates(V::unit(e))) img.axpy(c, images[q]);
      d[e] = img;
    }
  }
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      V rhs = g.bracket(apply_map(d, V::unit(i)), V::unit(j));
      rhs.axpy(S(1), g.bracket(V::unit(i), apply_map(d, V::unit(j))));
      if (apply_map(d, g.bracket_basis(i, j)) != rhs) return std::nullopt;
    }
  return d;
}

// (D c)(x..) = D c(x..) - sum c(.., D x_i, ..) for an even derivation D of degree 0.
template <class S>
Cochain<S> act_derivation(const CochainComplex<S>& cx, const std::map<std::size_t, SparseVector<S>>& d,
                          const Cochain<S>& c, int degree) {
  Cochain<S> out;
  out.arity = c.arity;
  std::set<std::vector<std::size_t>> arglists;
  for (const auto& t : cx.terms(c.arity, degree)) arglists.insert(t.args);
  for (const auto& args : arglists) {
    SparseVector<S> val = apply_map(d, cx.evaluate(c, args));
    for (std::size_t i = 0; i < args.size(); ++i)
      for (const auto& [m, x] : apply_map(d, SparseVector<S>::unit(args[i]))) {
        auto r = args;
        r[i] = m;
        val.axpy(-x, cx.evaluate(c, r));
      }
    if (!val.empty()) out.values[args] = val;
  }
  return out;
}

}  // namespace

template <class S>
void i_pairing(const CochainComplex<S>& cx, const H2Degree<S>& h2, H2Module<S>& m) {
  const auto& g = cx.algebra();
  const std::size_t n = h2.reps.size();
  // operators as columns on the coordinates of H^2
  std::vector<std::vector<SparseVector<S>>> ops;
  for (auto h : g.cartan()) {
    if (!g.i_op().count(h)) continue;
    std::vector<SparseVector<S>> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(apply_action(m, g.i_op().at(h), SparseVector<S>::unit(j)));
    ops.push_back(std::move(cols));
  }
  if (ops.empty()) throw AlgebraError("i_pairing needs i on the Cartan elements of " + g.name());
  // i on g_- may be an outer derivation commuting with g_0, as when g_0 omits
  // the rotation of the odd part
  if (auto d = i_derivation(g)) {
    std::vector<SparseVector<S>> cols;
    for (const auto& r : h2.reps) cols.push_back(h2.class_of(act_derivation(cx, *d, r, h2.degree)));
    ops.push_back(std::move(cols));
  }
  for (auto& e : m.extremal) {
    SparseMatrix<S> a(ops.size() * n, e.vectors.size());
    for (std::size_t o = 0; o < ops.size(); ++o)
      for (std::size_t c = 0; c < e.vectors.size(); ++c) {
        SparseVector<S> img;
        for (const auto& [j, x] : e.vectors[c]) img.axpy(x, ops[o][j]);
        for (const auto& [r, x] : img) a.add(o * n + r, c, x);
      }
    e.i_fixed = kernel_basis(a).size();
    e.i_pairs = (e.vectors.size() - e.i_fixed) / 2;
    e.i_known = true;
  }
}

template <class S>
bool acts_trivially(const CochainComplex<S>& cx, const H2Degree<S>& h2, const SparseVector<S>& h) {
  for (const auto& r : h2.reps)
    if (!h2.is_coboundary(cx.act(h, r))) return false;
  return true;
}

template <class S>
std::vector<SubmoduleInfo> submodule_lattice(const H2Degree<S>& h2, const H2Module<S>& m, std::size_t limit) {
  const std::size_t n = h2.reps.size();
  auto generate = [&](const std::vector<SparseVector<S>>& seeds) {
    RowEchelon<S> span(n);
    std::vector<SparseVector<S>> queue;
    for (const auto& s : seeds)
      if (span.insert(s)) queue.push_back(s);
    while (!queue.empty()) {
      SparseVector<S> v = queue.back();
      queue.pop_back();
      for (const auto& [b, cols] : m.action) {
        SparseVector<S> w;
        for (const auto& [j, x] : v) w.axpy(x, cols[j]);
        if (span.insert(w)) queue.push_back(w);
      }
    }
    std::vector<SparseVector<S>> basis;
    for (const auto& [p, r] : span.rows()) basis.push_back(r);
    return basis;
  };
  std::vector<std::vector<SparseVector<S>>> mods;
  auto add = [&](std::vector<SparseVector<S>> b) {
    if (b.empty()) return false;
    for (const auto& x : mods)
      if (x == b) return false;
    mods.push_back(std::move(b));
    return true;
  };
  for (const auto& e : m.extremal)
    for (const auto& v : e.vectors) add(generate({v}));
  for (bool grew = true; grew && mods.size() < limit;) {
    grew = false;
    std::size_t count = mods.size();
    for (std::size_t i = 0; i < count && mods.size() < limit; ++i)
      for (std::size_t j = i + 1; j < count && mods.size() < limit; ++j) {
        grew |= add(span_basis(n, intersect_subspaces(n, mods[i], mods[j])));
        auto u = mods[i];
        u.insert(u.end(), mods[j].begin(), mods[j].end());
        grew |= add(span_basis(n, u));
      }
  }
  std::vector<SparseVector<S>> even_units, odd_units;
  for (std::size_t j = 0; j < n; ++j)
    (h2.blocks[h2.rep_block[j]].parity == Parity::Even ? even_units : odd_units).push_back(SparseVector<S>::unit(j));
  std::vector<SubmoduleInfo> out;
  for (const auto& b : mods) {
    SubmoduleInfo info;
    info.sdim.even = static_cast<long>(intersect_subspaces(n, b, even_units).size());
    info.sdim.odd = static_cast<long>(intersect_subspaces(n, b, odd_units).size());
    info.whole = b.size() == n;
    for (const auto& e : m.extremal) {
      long c = static_cast<long>(intersect_subspaces(n, b, e.vectors).size());
      if (c) info.content[{e.weight, bit(e.parity)}] += c;
    }
    out.push_back(std::move(info));
  }
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = 0; j < mods.size(); ++j) {
      if (i == j || mods[j].size() >= mods[i].size()) continue;
      RowEchelon<S> ech(n);
      for (const auto& v : mods[i]) ech.insert(v);
      bool inside = true;
      for (const auto& v : mods[j]) inside = inside && ech.contains(v);
      if (inside) out[i].contains.push_back(j);
    }
  return out;
}

#define SFN_INSTANTIATE(S)                                                                                        \
  template class CochainComplex<S>;                                                                              \
  template struct H2Degree<S>;                                                                                   \
  template H2Degree<S> h2_of_degree(const CochainComplex<S>&, int);                                              \
  template CohomologyReport<S> h2_by_degree(const CochainComplex<S>&, int, int);                                 \
  template H2Module<S> g0_action_on_h2(const CochainComplex<S>&, const H2Degree<S>&, WeightMode, bool);          \
  template void i_pairing(const CochainComplex<S>&, const H2Degree<S>&, H2Module<S>&);                                               \
  template bool acts_trivially(const CochainComplex<S>&, const H2Degree<S>&, const SparseVector<S>&);            \
  template std::vector<SubmoduleInfo> submodule_lattice(const H2Degree<S>&, const H2Module<S>&, std::size_t);

SFN_INSTANTIATE(Rational)
SFN_INSTANTIATE(GaussianRational)

}  // namespace sfn
