#include "sfn/scenarios.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "sfn/cohomology.hpp"
#include "sfn/constructors.hpp"
#include "sfn/contact.hpp"
#include "sfn/grassmann.hpp"
#include "sfn/prolong.hpp"

namespace sfn {

using json = nlohmann::json;

namespace {

using Q = Rational;
using Clock = std::chrono::steady_clock;

class Budget {
 public:
  explicit Budget(double seconds)
      : deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds))) {}
  bool expired() const { return Clock::now() >= deadline_; }

 private:
  Clock::time_point deadline_;
};

// Set by a scenario when the budget ran out before all steps were done.
struct Partial {};

std::string sdim_str(const SuperDim& d) { return std::to_string(d.even) + "|" + std::to_string(d.odd); }

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i].str();
  return s + ")";
}

// Weights of g_0 acting on g_-1 by vector fields x_i d_j instead of by
// matrices on the standard module: w -> -reverse(w).
Weight vector_field_weight(const Weight& w) {
  Weight out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

json sdim_by_degree(const LieSuperAlgebra<Q>& g) {
  json out = json::object();
  std::set<int> degs;
  for (std::size_t i = 0; i < g.dim(); ++i) degs.insert(g.degree(i));
  for (int d : degs) out[std::to_string(d)] = sdim_str(g.sdim_of_degree(d));
  return out;
}

json algebra_json(const LieSuperAlgebra<Q>& g) {
  json a;
  a["name"] = g.name();
  a["sdim_by_degree"] = sdim_by_degree(g);
  a["complete"] = g.complete();
  a["truncation"] = g.max_degree() ? json(*g.max_degree()) : json(nullptr);
  return a;
}

struct CohoSpec {
  int lo = 0, hi = 3;
  WeightMode mode = WeightMode::Highest;
  bool even_only = false;
  bool vector_field_weights = false;
  bool lattice = false;
};

Cochain<Q> combine(const H2Degree<Q>& h, const SparseVector<Q>& v) {
  Cochain<Q> c;
  c.arity = 2;
  for (const auto& [j, x] : v) c.axpy(x, h.reps[j]);
  return c;
}

std::string content_str(const std::map<std::string, SuperDim>& content) {
  std::string s;
  for (const auto& [w, d] : content) s += (s.empty() ? "" : " ") + w + ":" + sdim_str(d);
  return s;
}

// Longest chain of proper submodules below the whole module, outermost first.
std::vector<std::size_t> longest_chain(const std::vector<SubmoduleInfo>& lat) {
  std::map<std::size_t, std::vector<std::size_t>> memo;
  std::function<std::vector<std::size_t>(std::size_t)> down = [&](std::size_t i) {
    if (auto it = memo.find(i); it != memo.end()) return it->second;
    std::vector<std::size_t> best;
    for (auto j : lat[i].contains) {
      auto c = down(j);
      c.insert(c.begin(), j);
      if (c.size() > best.size()) best = c;
    }
    return memo[i] = best;
  };
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat[i].whole) return down(i);
  return {};
}

// H^2 by degree with weight, i-pairing and lattice data. Fills the report's
// "cohomology" array and the matching summary tables.
void analyse(const LieSuperAlgebra<Q>& g, const CohoSpec& spec, const Budget& budget, json& report) {
  CochainComplex<Q> cx(g);
  auto& summary = report["summary"];
  json degrees = json::array();
  auto& dims = summary["h2_dims"] = json::object();
  auto& ext = summary["extremal"] = json::object();
  auto& ext_sdim = summary["extremal_sdim"] = json::object();
  auto& pairs = summary["i_pairs"] = json::object();
  auto& fixed = summary["i_fixed"] = json::object();
  auto& wts = summary["weights"] = json::object();
  long total = 0;
  auto wt = [&](const Weight& w) { return weight_str(spec.vector_field_weights ? vector_field_weight(w) : w); };
  for (int d = spec.lo; d <= spec.hi; ++d) {
    if (budget.expired()) {
      report["cohomology"] = degrees;
      throw Partial{};
    }
    auto h = h2_of_degree(cx, d);
    const std::string key = std::to_string(d);
    json e;
    e["degree"] = d;
    e["dim_z"] = h.dim_z;
    e["dim_b"] = h.dim_b;
    e["dim_h"] = h.dim_h;
    e["conditional"] = h.conditional;
    dims[key] = h.dim_h;
    total += static_cast<long>(h.dim_h);
    if (h.dim_h) {
      auto m = g0_action_on_h2(cx, h, spec.mode, spec.even_only);
      bool have_i = true;
      try {
        i_pairing(cx, h, m);
      } catch (const AlgebraError&) {
        have_i = false;
      }
      json blocks = json::array();
      std::size_t np = 0, nf = 0;
      json wlist = json::array();
      for (const auto& x : m.extremal) {
        json b;
        b["weight"] = wt(x.weight);
        b["parity"] = x.parity == Parity::Even ? "even" : "odd";
        b["count"] = x.vectors.size();
        if (have_i) {
          b["i_pairs"] = x.i_pairs;
          b["i_fixed"] = x.i_fixed;
        }
        json reps = json::array();
        for (const auto& v : x.vectors) reps.push_back(cx.str(combine(h, v)));
        b["representatives"] = reps;
        blocks.push_back(b);
        np += x.i_pairs;
        nf += x.i_fixed;
      }
      std::map<std::string, SuperDim> byweight;
      for (const auto& x : m.extremal)
        (x.parity == Parity::Even ? byweight[wt(x.weight)].even : byweight[wt(x.weight)].odd) +=
            static_cast<long>(x.vectors.size());
      for (const auto& [w, sd] : byweight) wlist.push_back(w + " " + sdim_str(sd));
      e["extremal"] = blocks;
      ext[key] = m.extremal_count();
      ext_sdim[key] = sdim_str(m.extremal_sdim());
      wts[key] = wlist;
      if (have_i) {
        pairs[key] = np;
        fixed[key] = nf;
      }
      if (spec.lattice) {
        auto lat = submodule_lattice(h, m);
        json subs = json::array();
        auto content_of = [&](const SubmoduleInfo& s) {
          std::map<std::string, SuperDim> c;
          for (const auto& [k, n] : s.content) (k.second ? c[wt(k.first)].odd : c[wt(k.first)].even) += n;
          return c;
        };
        for (const auto& s : lat) {
          json j;
          j["sdim"] = sdim_str(s.sdim);
          j["content"] = content_str(content_of(s));
          j["contains"] = s.contains;
          j["whole"] = s.whole;
          subs.push_back(j);
        }
        e["submodules"] = subs;
        json chain = json::array();
        for (auto i : longest_chain(lat)) chain.push_back(content_str(content_of(lat[i])));
        summary["submodule_chain"][key] = chain;
        summary["submodule_chain_length"][key] = chain.size();
      }
    }
    degrees.push_back(e);
  }
  summary["h2_total"] = total;
  report["cohomology"] = degrees;
}

CohoSpec coho_spec(const json& p, int lo, int hi) {
  CohoSpec s;
  s.lo = lo;
  s.hi = hi;
  if (p.contains("weight_mode")) s.mode = p["weight_mode"] == "lowest" ? WeightMode::Lowest : WeightMode::Highest;
  if (p.contains("raising")) s.even_only = p["raising"] == "even";
  return s;
}

int ip(const json& p, const char* k) { return p.at(k).get<int>(); }

LieSuperAlgebra<Q> standard_pair(const MatrixPresentation& p) { return linear_pair<Q>(p, standard_module(p.format)); }

LieSuperAlgebra<Q> realified_field_algebra(const LieSuperAlgebra<Q>& g) { return realify(complexify(g)); }

// ---- scenarios ----

void thm31(const json& p, const Budget& b, json& r) {
  int n = ip(p, "n"), m = ip(p, "m");
  if (n + m < 1 || n + m > 3) throw ScenarioError("thm3.1 needs 1 <= n+m <= 3");
  int md = ip(p, "max_degree");
  auto pr = generalized_prolong(realified_pair(gl_presentation(n, m)), md);
  r["algebra"] = algebra_json(pr.algebra);
  auto s = coho_spec(p, 0, md + 1);
  s.vector_field_weights = true;
  r["weight_convention"] = "vector fields";
  analyse(pr.algebra, s, b, r);
}

void thm32(const json& p, const Budget& b, json& r) {
  auto v = p["variant"] == "Pi" ? QVariant::Pi : QVariant::J;
  int md = ip(p, "max_degree");
  auto pr = generalized_prolong(standard_pair(q_presentation(ip(p, "n"), v)), md);
  r["algebra"] = algebra_json(pr.algebra);
  r["summary"]["g1_sdim"] = sdim_str(pr.algebra.sdim_of_degree(1));
  auto s = coho_spec(p, 0, md + 1);
  s.even_only = true;
  s.vector_field_weights = true;
  s.lattice = true;
  r["weight_convention"] = "vector fields";
  r["raising"] = "even";
  analyse(pr.algebra, s, b, r);
}

void thm33c(const json& p, const Budget& b, json& r) {
  auto g = build_minkowski_full(ip(p, "N"));
  r["algebra"] = algebra_json(g);
  analyse(g, coho_spec(p, 0, 3), b, r);
}

void thm33r(const json& p, const Budget& b, json& r) {
  int md = ip(p, "max_degree");
  auto pr = generalized_prolong(build_minkowski(ip(p, "N"), MinkowskiCase::Reduced), md);
  r["algebra"] = algebra_json(pr.algebra);
  r["summary"]["g1_sdim"] = sdim_str(pr.algebra.sdim_of_degree(1));
  analyse(pr.algebra, coho_spec(p, 0, std::min(3, md + 1)), b, r);
}

void thm34v(const json& p, const Budget& b, json& r) {
  int md = ip(p, "max_degree");
  auto g = realified_field_algebra(vect_algebra(1, ip(p, "n"), md, false).algebra);
  r["algebra"] = algebra_json(g);
  analyse(g, coho_spec(p, 0, 2), b, r);
}

// Classes of H^2_1(g_-; svect) that vanish in H^2_1(g_-; vect), for both
// choices of raising operators.
json svect_beyond(int n, int md) {
  auto va = vect_algebra(1, n, md, false), sa = vect_algebra(1, n, md, true);
  std::map<std::pair<std::size_t, Monomial>, std::size_t> slot;
  auto vec = [&](const VectorField<Q>& f) {
    SparseVector<Q> v;
    for (std::size_t j = 0; j < f.size(); ++j)
      for (const auto& [mono, c] : f.coeff(j).terms())
        v.add(slot.emplace(std::make_pair(j, mono), slot.size()).first->second, c);
    return v;
  };
  std::vector<SparseVector<Q>> vb, sb;
  for (const auto& f : va.fields) vb.push_back(vec(f));
  for (const auto& f : sa.fields) sb.push_back(vec(f));
  Coordinatizer<Q> co(slot.size() + 1, vb);
  const std::size_t nv = va.fields.size(), ns = sa.fields.size();
  auto gv = realified_field_algebra(va.algebra), gs = realified_field_algebra(sa.algebra);
  auto phi = [&](std::size_t a) {
    bool im = a >= ns;
    SparseVector<Q> out;
    for (const auto& [k, x] : co.coordinates(sb[im ? a - ns : a])) out.add(im ? nv + k : k, x);
    return out;
  };
  CochainComplex<Q> cv(gv), cs(gs);
  auto hv = h2_of_degree(cv, 1), hs = h2_of_degree(cs, 1);
  SparseMatrix<Q> map(hv.reps.size(), hs.reps.size());
  for (std::size_t j = 0; j < hs.reps.size(); ++j) {
    Cochain<Q> c;
    c.arity = 2;
    for (const auto& [args, val] : hs.reps[j].values) {
      std::vector<std::size_t> a2;
      for (auto x : args) a2.push_back(phi(x).lead());
      for (const auto& [t, x] : val)
        for (const auto& [u, y] : phi(t)) c.add(a2, u, x * y);
    }
    for (const auto& [i, x] : hv.class_of(c)) map.add(i, j, x);
  }
  auto ker = kernel_basis(map);
  json out;
  out["dim_h2_svect"] = hs.dim_h;
  out["dim_h2_vect"] = hv.dim_h;
  out["kernel_dim"] = ker.size();
  out["map_onto"] = hs.dim_h - ker.size() == hv.dim_h;
  for (bool even : {true, false}) {
    auto ms = g0_action_on_h2(cs, hs, WeightMode::Highest, even);
    auto mv = g0_action_on_h2(cv, hv, WeightMode::Highest, even);
    std::vector<SparseVector<Q>> hi;
    for (const auto& e : ms.extremal) hi.insert(hi.end(), e.vectors.begin(), e.vectors.end());
    auto both = ker;
    both.insert(both.end(), hi.begin(), hi.end());
    std::size_t in_kernel = ker.size() + hi.size() - span_basis(hs.reps.size(), both).size();
    const char* key = even ? "even" : "all";
    out["highest_svect"][key] = ms.extremal_count();
    out["highest_vect"][key] = mv.extremal_count();
    out["beyond_highest"][key] = in_kernel;
  }
  return out;
}

void thm34s(const json& p, const Budget& b, json& r) {
  int md = ip(p, "max_degree");
  auto g = realified_field_algebra(vect_algebra(1, 2, md, true).algebra);
  r["algebra"] = algebra_json(g);
  r["raising"] = p["raising"];
  analyse(g, coho_spec(p, 0, 2), b, r);
  if (b.expired()) throw Partial{};
  r["summary"]["versus_vect"] = svect_beyond(2, md);
}

void thm34k(const json& p, const Budget& b, json& r) {
  auto ca = contact_algebra(contact_space_k(0, ip(p, "n")), ip(p, "max_degree"));
  auto g = realified_field_algebra(ca.algebra);
  r["algebra"] = algebra_json(g);
  analyse(g, coho_spec(p, 0, 2), b, r);
}

void thm34m(const json& p, const Budget& b, json& r) {
  auto ca = contact_algebra(contact_space_m(ip(p, "n")), ip(p, "max_degree"));
  auto g = realified_field_algebra(ca.algebra);
  r["algebra"] = algebra_json(g);
  analyse(g, coho_spec(p, 0, 2), b, r);
  CochainComplex<Q> cx(g);
  json trivial = json::object();
  for (const auto& e : r["cohomology"]) {
    if (e["dim_h"] == 0) continue;
    if (b.expired()) throw Partial{};
    auto h = h2_of_degree(cx, e["degree"].get<int>());
    json ids = json::array();
    for (auto i : g.of_degree(0))
      if (acts_trivially(cx, h, SparseVector<Q>::unit(i))) ids.push_back(g.basis(i).id);
    trivial[std::to_string(e["degree"].get<int>())] = ids;
  }
  bool q2 = true;
  for (const auto& [d, ids] : trivial.items())
    for (const char* id : {"q^2", "iq^2"}) q2 = q2 && std::find(ids.begin(), ids.end(), id) != ids.end();
  r["summary"]["trivial_g0"] = trivial;
  r["summary"]["q2_trivial"] = q2 && !trivial.empty();
}

void symplectic(const json& p, const Budget&, json& r) {
  int n = ip(p, "dim");
  if (n % 2) throw ScenarioError("symplectic-example needs an even dim");
  auto pr = generalized_prolong(standard_pair(sp_presentation(n)), 1);
  CochainComplex<Q> cx(pr.algebra);
  auto form = standard_symplectic_form(static_cast<std::size_t>(n));
  auto h = h2_of_degree(cx, 1);
  std::mt19937_64 rng(p["seed"].get<std::uint64_t>());
  std::size_t killed = 0;
  const std::size_t trials = 10;
  for (std::size_t t = 0; t < trials; ++t)
    if (symplectic_obstruction_map(cx, cx.coboundary(cx.random_cochain(1, 1, Parity::Even, 10, rng)), form).empty())
      ++killed;
  std::map<std::vector<std::size_t>, std::size_t> slot;
  std::vector<SparseVector<Q>> images;
  json forms = json::array();
  for (const auto& rep : h.reps) {
    SparseVector<Q> v;
    std::string s;
    for (const auto& [k, x] : symplectic_obstruction_map(cx, rep, form)) {
      v.add(slot.emplace(k, slot.size()).first->second, x);
      s += (s.empty() ? "" : " + ") + x.str() + "*e" + std::to_string(k[0] + 1) + "^e" + std::to_string(k[1] + 1) +
           "^e" + std::to_string(k[2] + 1);
    }
    images.push_back(v);
    forms.push_back(s.empty() ? "0" : s);
  }
  r["algebra"] = algebra_json(pr.algebra);
  r["obstruction_forms"] = forms;
  auto& s = r["summary"];
  s["dim_h2_1"] = h.dim_h;
  s["map_rank_on_h2"] = span_basis(slot.size() + 1, images).size();
  s["coboundaries_tested"] = trials;
  s["coboundaries_killed"] = killed;
}

RealStructure structure_from(const json& p, std::mt19937_64& rng) {
  int n = ip(p, "n");
  const std::string kind = p["structure"];
  if (kind == "bar") return rho_bar(n);
  if (kind == "tr") {
    if (n % 2) throw ScenarioError("structure=tr needs even n");
    return rho_tr(n);
  }
  return random_real_structure(n, rng);
}

void grassmann_normalize(const json& p, const Budget&, json& r) {
  std::mt19937_64 rng(p["seed"].get<std::uint64_t>());
  auto rho = structure_from(p, rng);
  const int n = rho.n();
  auto norm = normalize_generators(rho);
  json gens = json::array(), log = json::array();
  for (const auto& t : norm.t) gens.push_back(t.str());
  bool fixed = true, anti = true;
  for (const auto& t : norm.t) fixed = fixed && rho.apply(t) == t;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) anti = anti && (norm.t[j] * norm.t[k] + norm.t[k] * norm.t[j]).is_zero();
  RealFormIso iso(rho);
  std::vector<SparseVector<Q>> real;
  for (const auto& m : iso.monomials()) real.push_back(m.realify());
  std::size_t span = span_basis(std::size_t{2} << n, real).size();
  log.push_back(std::string("rho(t_k) = t_k: ") + (fixed ? "yes" : "no"));
  log.push_back(std::string("t_j t_k + t_k t_j = 0: ") + (anti ? "yes" : "no"));
  log.push_back("real span of monomials in t: " + std::to_string(span) + " of " + std::to_string(1 << n));
  r["real_structure"] = rho.str();
  r["generators"] = gens;
  r["log"] = log;
  auto& s = r["summary"];
  s["generators_fixed"] = fixed;
  s["generators_anticommute"] = anti;
  s["monomial_span"] = span;
  s["expected_span"] = 1 << n;
}

void grassmann_pairwise(const json& p, const Budget& b, json& r) {
  const int n = ip(p, "n"), pairs = ip(p, "pairs");
  std::mt19937_64 rng(p["seed"].get<std::uint64_t>());
  std::size_t products = 0, failures = 0, done = 0;
  json log = json::array();
  for (int t = 0; t < pairs; ++t) {
    if (b.expired()) {
      r["log"] = log;
      throw Partial{};
    }
    auto r1 = random_real_structure(n, rng), r2 = random_real_structure(n, rng);
    RealFormIso i1(r1), i2(r2);
    auto basis = real_form_basis(r1);
    std::size_t bad = 0;
    for (const auto& a : basis) {
      auto x = i2.inverse(i1(a));
      if (!(r2.apply(x) == x) || !(i1.inverse(i2(x)) == a)) ++bad;
      for (const auto& c : basis) {
        ++products;
        if (!(i2.inverse(i1(a * c)) == x * i2.inverse(i1(c)))) ++bad;
      }
    }
    failures += bad;
    ++done;
    log.push_back("pair " + std::to_string(t + 1) + ": " + std::to_string(basis.size()) + " basis elements, " +
                  std::to_string(bad) + " failures");
  }
  r["log"] = log;
  auto& s = r["summary"];
  s["pairs_checked"] = done;
  s["products_checked"] = products;
  s["failures"] = failures;
}

void prolong_dims(const json& p, const Budget&, json& r) {
  const std::string fam = p["family"];
  const int m = ip(p, "m"), n = ip(p, "n"), md = ip(p, "max_degree");
  LieSuperAlgebra<Q> pair;
  std::optional<LieSuperAlgebra<Q>> oracle;
  if (fam == "gl" || fam == "sl") {
    if (m + n < 1) throw ScenarioError("prolong-dims needs m+n >= 1");
    pair = standard_pair(fam == "gl" ? gl_presentation(m, n) : sl_presentation(m, n));
    oracle = vect_algebra(m, n, md, fam == "sl").algebra;
  } else if (fam == "q_J" || fam == "q_Pi") {
    pair = standard_pair(q_presentation(n, fam == "q_J" ? QVariant::J : QVariant::Pi));
  } else if (fam == "sp") {
    if (n % 2) throw ScenarioError("family sp needs even n");
    pair = standard_pair(sp_presentation(n));
  } else if (fam == "o") {
    pair = standard_pair(o_presentation(n));
  } else if (fam == "hei") {
    if (n % 2) throw ScenarioError("family hei needs even n");
    pair = degree_zero_derivations(build_hei(n, m));
    oracle = contact_algebra(contact_space_k(n / 2, m), md).algebra;
  } else {
    pair = degree_zero_derivations(build_ab(n));
    oracle = contact_algebra(contact_space_m(n), md).algebra;
  }
  auto pr = generalized_prolong(pair, md);
  json dims = json::object();
  for (const auto& [k, d] : pr.dims) dims[std::to_string(k)] = sdim_str(d);
  auto& s = r["summary"];
  s["dims"] = dims;
  s["complete"] = pr.algebra.complete();
  s["jacobi"] = check_super_jacobi(pr.algebra).ok;
  if (oracle) {
    json od = json::object();
    bool match = true;
    for (const auto& [k, d] : pr.dims) {
      od[std::to_string(k)] = sdim_str(oracle->sdim_of_degree(k));
      match = match && oracle->sdim_of_degree(k) == d;
    }
    s["oracle_dims"] = od;
    s["oracle_match"] = match;
  }
  r["algebra"] = algebra_json(pr.algebra);
}

ParamSpec int_param(std::string name, long lo, long hi, long def, std::string help) {
  return {std::move(name), std::move(help), std::to_string(def), {}, lo, hi};
}
ParamSpec choice_param(std::string name, std::vector<std::string> choices, std::string def, std::string help) {
  return {std::move(name), std::move(help), std::move(def), std::move(choices), 0, 0};
}
ParamSpec mode_param(const std::string& def) {
  return choice_param("weight_mode", {"highest", "lowest"}, def, "extremal vectors taken as highest or lowest");
}
ParamSpec raising_param(const std::string& def) {
  return choice_param("raising", {"all", "even"}, def, "raising operators: all root vectors of g_0 or even ones only");
}
ParamSpec seed_param() { return int_param("seed", 0, 1L << 40, 1, "random seed"); }

using Runner = void (*)(const json&, const Budget&, json&);

struct Entry {
  ScenarioInfo info;
  Runner run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {{"thm3.1",
        "H^2 of the prolonged realified gl(n|m;C) on its tautological module (almost complex structures)",
        {int_param("n", 0, 3, 2, "even size"), int_param("m", 0, 3, 0, "odd size"),
         int_param("max_degree", 1, 3, 2, "prolongation degree"), mode_param("lowest"), raising_param("all")}},
       thm31},
      {{"thm3.2", "H^2 of the prolonged q_J(n) or q_Pi(n) on its tautological module (J- and Pi-symmetries)",
        {int_param("n", 1, 3, 2, "size"), choice_param("variant", {"J", "Pi"}, "J", "odd structure"),
         int_param("max_degree", 1, 3, 2, "prolongation degree"), mode_param("highest")}},
       thm32},
      {{"thm3.3-conformal", "H^2 of the complete Minkowski superalgebra, conformal case",
        {int_param("N", 1, 1, 1, "number of odd directions"), mode_param("highest"), raising_param("all")}},
       thm33c},
      {{"thm3.3-reduced", "H^2 of the prolonged Minkowski superspace, reduced case",
        {int_param("N", 1, 1, 1, "number of odd directions"), int_param("max_degree", 1, 4, 3, "prolongation degree"),
         mode_param("highest"), raising_param("all")}},
       thm33r},
      {{"thm3.4-vect", "H^2 of vect(1|n)^R",
        {int_param("n", 1, 2, 2, "odd indeterminates"), int_param("max_degree", 2, 3, 3, "truncation degree"),
         mode_param("highest"), raising_param("all")}},
       thm34v},
      {{"thm3.4-svect", "H^2 of svect(1|2)^R and the classes beyond vect(1|2)^R",
        {int_param("max_degree", 2, 3, 3, "truncation degree"), mode_param("highest"), raising_param("even")}},
       thm34s},
      {{"thm3.4-k", "H^2 of the contact algebra k(1|n)^R",
        {int_param("n", 1, 5, 2, "odd indeterminates"), int_param("max_degree", 1, 3, 2, "truncation degree"),
         mode_param("highest"), raising_param("all")}},
       thm34k},
      {{"thm3.4-m", "H^2 of the odd contact algebra m(n)^R and the g_0 elements acting trivially",
        {int_param("n", 1, 1, 1, "even indeterminates"), int_param("max_degree", 1, 3, 2, "truncation degree"),
         mode_param("highest"), raising_param("all")}},
       thm34m},
      {{"symplectic-example", "structure functions of sp(V) and the 3-form obstruction map",
        {int_param("dim", 2, 4, 4, "dim V"), seed_param()}},
       symplectic},
      {{"grassmann-normalize", "anticommuting real generators of a real form of a Grassmann algebra",
        {int_param("n", 0, 8, 3, "number of generators"),
         choice_param("structure", {"bar", "tr", "random"}, "random", "real structure"), seed_param()}},
       grassmann_normalize},
      {{"grassmann-pairwise-iso", "isomorphisms between real forms of a Grassmann algebra for random pairs",
        {int_param("n", 0, 6, 3, "number of generators"), int_param("pairs", 1, 100, 10, "pairs of structures"),
         seed_param()}},
       grassmann_pairwise},
      {{"prolong-dims", "dimensions of prolongations, compared with vector-field oracles where one exists",
        {choice_param("family", {"gl", "sl", "q_J", "q_Pi", "sp", "o", "hei", "ab"}, "gl", "pair"),
         int_param("m", 0, 4, 1, "even parameter (gl, sl, hei: odd count m)"),
         int_param("n", 0, 4, 1, "size parameter"), int_param("max_degree", 0, 4, 3, "prolongation degree")}},
       prolong_dims},
  };
  return all;
}

const Entry& find_entry(const std::string& id) {
  for (const auto& e : entries())
    if (e.info.id == id) return e;
  throw ScenarioError("unknown scenario '" + id + "'");
}

}  // namespace

const std::vector<ScenarioInfo>& scenario_registry() {
  static const std::vector<ScenarioInfo> infos = [] {
    std::vector<ScenarioInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

std::vector<ScenarioInfo> list_scenarios(const std::string& filter) {
  auto lower = [](std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  };
  const std::string f = lower(filter);
  std::vector<ScenarioInfo> out;
  for (const auto& s : scenario_registry())
    if (lower(s.id).find(f) != std::string::npos || lower(s.summary).find(f) != std::string::npos) out.push_back(s);
  if (out.empty()) return scenario_registry();
  return out;
}

json scenario_schema(const ScenarioInfo& s) {
  json j;
  j["id"] = s.id;
  j["summary"] = s.summary;
  j["params"] = json::array();
  for (const auto& p : s.params) {
    json q;
    q["name"] = p.name;
    q["help"] = p.help;
    q["default"] = p.fallback;
    if (p.choices.empty()) {
      q["min"] = p.lo;
      q["max"] = p.hi;
    } else {
      q["choices"] = p.choices;
    }
    j["params"].push_back(q);
  }
  return j;
}

Params parse_params(const std::vector<std::string>& kv) {
  Params out;
  for (const auto& s : kv) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw ScenarioError("parameter '" + s + "' is not of the form k=v");
    out[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return out;
}

json resolve_params(const ScenarioInfo& s, const Params& given) {
  for (const auto& [k, v] : given)
    if (std::none_of(s.params.begin(), s.params.end(), [&](const ParamSpec& p) { return p.name == k; }))
      throw ScenarioError("scenario " + s.id + " has no parameter '" + k + "'");
  json out = json::object();
  for (const auto& p : s.params) {
    auto it = given.find(p.name);
    const std::string v = it == given.end() ? p.fallback : it->second;
    if (!p.choices.empty()) {
      if (std::find(p.choices.begin(), p.choices.end(), v) == p.choices.end())
        throw ScenarioError("parameter " + p.name + " must be one of its choices, got '" + v + "'");
      out[p.name] = v;
      continue;
    }
    long x = 0;
    std::size_t used = 0;
    try {
      x = std::stol(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != v.size()) throw ScenarioError("parameter " + p.name + " must be an integer, got '" + v + "'");
    if (x < p.lo || x > p.hi)
      throw ScenarioError("parameter " + p.name + " must lie in [" + std::to_string(p.lo) + ", " +
                          std::to_string(p.hi) + "], got " + v);
    out[p.name] = x;
  }
  return out;
}

RunResult run_scenario(const std::string& id, const Params& params, const RunOptions& opt) {
  const auto& e = find_entry(id);
  json p = resolve_params(e.info, params);
  RunResult res;
  auto& r = res.report;
  r["schema_version"] = kReportSchema;
  r["scenario"] = id;
  r["parameters"] = p;
  r["summary"] = json::object();
  auto t0 = Clock::now();
  Budget budget(opt.budget_seconds);
  try {
    e.run(p, budget, r);
    r["status"] = "ok";
  } catch (const Partial&) {
    r["status"] = "partial";
    r["error"] = "time budget exhausted";
    res.status = RunStatus::Partial;
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& ex) {
    r["status"] = "error";
    r["error"] = ex.what();
    res.status = RunStatus::Error;
  }
  if (opt.timing) r["wall_clock_seconds"] = std::chrono::duration<double>(Clock::now() - t0).count();
  return res;
}

std::string render_text(const json& report) {
  std::ostringstream os;
  os << "scenario " << report.value("scenario", "?") << " " << report.value("parameters", json::object()).dump()
     << "\nstatus " << report.value("status", "?") << "\n";
  if (report.contains("error")) os << "error: " << report["error"].get<std::string>() << "\n";
  if (report.contains("algebra")) {
    const auto& a = report["algebra"];
    os << "algebra " << a["name"].get<std::string>() << ", by degree";
    for (const auto& [k, v] : a["sdim_by_degree"].items()) os << " " << k << ":" << v.get<std::string>();
    os << "\n";
  }
  if (report.contains("cohomology"))
    for (const auto& e : report["cohomology"]) {
      os << "  degree " << e["degree"] << ": dim Z " << e["dim_z"] << ", dim B " << e["dim_b"] << ", dim H "
         << e["dim_h"] << (e["conditional"].get<bool>() ? " (conditional)" : "") << "\n";
      if (!e.contains("extremal")) continue;
      for (const auto& b : e["extremal"]) {
        os << "    weight " << b["weight"].get<std::string>() << " " << b["parity"].get<std::string>() << " x"
           << b["count"];
        if (b.contains("i_pairs")) os << ", i-pairs " << b["i_pairs"] << ", i-fixed " << b["i_fixed"];
        os << "\n";
        for (const auto& s : b["representatives"]) os << "      " << s.get<std::string>() << "\n";
      }
      if (e.contains("submodules"))
        for (const auto& s : e["submodules"])
          os << "    submodule " << s["sdim"].get<std::string>() << (s["whole"].get<bool>() ? " (whole)" : "") << ": "
             << s["content"].get<std::string>() << "\n";
    }
  for (const char* k : {"generators", "log", "obstruction_forms"})
    if (report.contains(k))
      for (const auto& s : report[k]) os << "  " << s.get<std::string>() << "\n";
  os << "summary " << report.value("summary", json::object()).dump() << "\n";
  return os.str();
}

std::vector<GoldenRow> compare_golden(const json& golden, const json& report) {
  std::vector<GoldenRow> out;
  for (const auto& c : golden.at("checks")) {
    GoldenRow row;
    row.cite = c.value("cite", "");
    row.pointer = c.at("pointer").get<std::string>();
    row.expected = c.at("expected");
    json::json_pointer ptr(row.pointer);
    if (report.contains(ptr)) {
      row.present = true;
      row.computed = report.at(ptr);
      row.pass = row.computed == row.expected;
    }
    out.push_back(row);
  }
  return out;
}

std::vector<std::pair<std::string, LieSuperAlgebra<Q>>> scenario_algebras() {
  std::vector<std::pair<std::string, LieSuperAlgebra<Q>>> out;
  out.emplace_back("thm3.1", generalized_prolong(realified_pair(gl_presentation(2, 0)), 2).algebra);
  out.emplace_back("thm3.2", generalized_prolong(standard_pair(q_presentation(2, QVariant::J)), 2).algebra);
  out.emplace_back("thm3.3-conformal", build_minkowski_full(1));
  out.emplace_back("thm3.3-reduced", generalized_prolong(build_minkowski(1, MinkowskiCase::Reduced), 3).algebra);
  out.emplace_back("thm3.4-vect", realified_field_algebra(vect_algebra(1, 2, 3, false).algebra));
  out.emplace_back("thm3.4-svect", realified_field_algebra(vect_algebra(1, 2, 3, true).algebra));
  out.emplace_back("thm3.4-k", realified_field_algebra(contact_algebra(contact_space_k(0, 2), 2).algebra));
  out.emplace_back("thm3.4-m", realified_field_algebra(contact_algebra(contact_space_m(1), 2).algebra));
  out.emplace_back("symplectic-example", generalized_prolong(standard_pair(sp_presentation(4)), 1).algebra);
  return out;
}

}  // namespace sfn

namespace sfn {

int run_exit_code(const RunResult& r, const std::vector<GoldenRow>& rows) {
  if (r.status != RunStatus::Ok) return kExitComputation;
  for (const auto& g : rows)
    if (!g.pass) return kExitMismatch;
  return kExitOk;
}

namespace {

json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  return json::parse(in);
}

}  // namespace

RegressResult regress_goldens(const std::filesystem::path& dir, const std::string& suite, const RunOptions& opt,
                              bool allow_known) {
  RegressResult res;
  json index;
  try {
    index = read_json(dir / "index.json");
  } catch (const std::exception& e) {
    res.rows.push_back({suite, "index.json", "", "", "", "missing", nullptr, e.what()});
    res.exit_code = kExitMismatch;
    return res;
  }
  const auto& suites = index.at("suites");
  if (suite != "all" && !suites.contains(suite)) throw ScenarioError("unknown golden suite '" + suite + "'");
  bool mismatch = false, computation = false;
  for (const auto& [name, files] : suites.items()) {
    if (suite != "all" && name != suite) continue;
    for (const auto& f : files) {
      const std::string file = f.get<std::string>();
      json golden;
      try {
        golden = read_json(dir / file);
      } catch (const std::exception&) {
        res.rows.push_back({name, file, "", "", "", "missing", nullptr, nullptr});
        mismatch = true;
        continue;
      }
      const std::string sc = golden.at("scenario");
      Params params;
      const json gp = golden.value("parameters", json::object());
      for (const auto& [k, v] : gp.items())
        params[k] = v.is_string() ? v.get<std::string>() : v.dump();
      auto run = run_scenario(sc, params, opt);
      if (run.status != RunStatus::Ok) {
        computation = true;
        res.rows.push_back({name, file, sc, "", "", "error", nullptr, run.report.value("error", "")});
        continue;
      }
      auto checks = golden.at("checks");
      auto cmp = compare_golden(golden, run.report);
      for (std::size_t i = 0; i < cmp.size(); ++i) {
        RegressRow row{name, file, sc, cmp[i].cite, cmp[i].pointer, "pass", cmp[i].expected, cmp[i].computed};
        if (!cmp[i].present) {
          row.status = "missing";
          mismatch = true;
        } else if (!cmp[i].pass) {
          bool known = checks[i].contains("known_failure");
          row.status = known ? "known-fail" : "FAIL";
          if (!known || !allow_known) mismatch = true;
        }
        res.rows.push_back(row);
      }
    }
  }
  res.exit_code = computation ? kExitComputation : mismatch ? kExitMismatch : kExitOk;
  return res;
}

std::string render_regress(const RegressResult& r) {
  std::ostringstream os;
  std::size_t pass = 0;
  for (const auto& row : r.rows) {
    if (row.status == "pass") ++pass;
    os << std::left << std::setw(11) << row.status << row.suite << "  " << row.file;
    if (!row.pointer.empty()) os << "  " << row.pointer;
    if (!row.cite.empty()) os << "  [" << row.cite << "]";
    if (row.status != "pass") os << "\n           expected " << row.expected.dump() << ", computed " << row.computed.dump();
    os << "\n";
  }
  os << pass << "/" << r.rows.size() << " rows pass\n";
  return os.str();
}

}  // namespace sfn
