// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--only N ...] [--known-failures N ...]
//
// Exits 0 when every failing criterion is listed in --known-failures.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "sfn/cohomology.hpp"
#include "sfn/constructors.hpp"
#include "sfn/contact.hpp"
#include "sfn/grassmann.hpp"
#include "sfn/prolong.hpp"
#include "sfn/scenarios.hpp"

using namespace sfn;
using json = nlohmann::json;
using Q = Rational;

namespace {

// Collects failed expectations of one criterion.
struct Tally {
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    ++checks;
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": expected " << json(want).dump() << ", got " << json(got).dump();
      failures.push_back(os.str());
    }
  }
};

json summary_of(Tally& t, const std::string& id, const Params& p) {
  auto r = run_scenario(id, p);
  t.expect(r.status == RunStatus::Ok, id + " finished");
  return r.report["summary"];
}

json at(const json& j, const std::string& pointer) {
  json::json_pointer ptr(pointer);
  return j.contains(ptr) ? j.at(ptr) : json(nullptr);
}

LieSuperAlgebra<Q> standard_pair(const MatrixPresentation& p) { return linear_pair<Q>(p, standard_module(p.format)); }

void thm31(Tally& t) {
  auto s = summary_of(t, "thm3.1", {{"n", "1"}, {"m", "0"}});
  t.equal(at(s, "/h2_total"), 0, "(1|0) H^2");
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 0}, {0, 1}, {0, 2}, {1, 1}}) {
    const std::string tag = "(" + std::to_string(n) + "|" + std::to_string(m) + ") ";
    s = summary_of(t, "thm3.1", {{"n", std::to_string(n)}, {"m", std::to_string(m)}});
    t.equal(at(s, "/extremal"), json{{"1", 2}}, tag + "lowest weight classes by degree");
    for (const char* d : {"0", "2", "3"}) t.equal(at(s, std::string("/h2_dims/") + d), 0, tag + "H^2 in degree " + d);
    t.equal(at(s, "/i_pairs/1"), 1, tag + "i-pairs");
    if (n == 0 && m == 1) t.equal(at(s, "/h2_total"), 2, tag + "total H^2");
  }
}

void thm32(Tally& t) {
  for (const char* v : {"J", "Pi"}) {
    const std::string q = std::string("q_") + v;
    auto s = summary_of(t, "thm3.2", {{"n", "1"}, {"variant", v}});
    t.equal(at(s, "/h2_total"), 0, q + "(1) H^2");
    s = summary_of(t, "thm3.2", {{"n", "2"}, {"variant", v}});
    for (const char* d : {"0", "1", "3"}) t.equal(at(s, std::string("/h2_dims/") + d), 0, q + "(2) degree " + d);
    t.equal(at(s, "/weights/2"), json{"(1,1) 2|2", "(2,0) 2|2"}, q + "(2) highest weights");
    t.equal(at(s, "/submodule_chain/2"), json{"(1,1):1|1 (2,0):1|1"}, q + "(2) submodule");
    s = summary_of(t, "thm3.2", {{"n", "3"}, {"variant", v}});
    for (const char* d : {"0", "1", "3"}) t.equal(at(s, std::string("/h2_dims/") + d), 0, q + "(3) degree " + d);
    t.equal(at(s, "/weights/2"), json{"(1,1,0) 2|2", "(2,0,0) 2|2", "(2,1,-1) 2|2"}, q + "(3) highest weights");
    t.equal(at(s, "/submodule_chain/2"),
            json{"(1,1,0):1|1 (2,0,0):1|1 (2,1,-1):2|2", "(1,1,0):1|1 (2,0,0):1|1"}, q + "(3) submodule chain");
  }
}

void thm33(Tally& t) {
  auto s = summary_of(t, "thm3.3-conformal", {});
  t.equal(at(s, "/extremal"), json{{"0", 2}, {"3", 2}}, "conformal highest classes by degree");
  t.equal(at(s, "/h2_dims/1"), 0, "conformal degree 1");
  t.equal(at(s, "/h2_dims/2"), 0, "conformal degree 2");
  s = summary_of(t, "thm3.3-reduced", {});
  t.equal(at(s, "/extremal"), json{{"0", 2}, {"1", 2}, {"2", 3}, {"3", 2}}, "reduced highest classes by degree");
  t.equal(at(s, "/g1_sdim"), "0|0", "reduced g_1");
  t.equal(at(s, "/i_fixed"), json{{"0", 0}, {"1", 0}, {"2", 1}, {"3", 0}}, "reduced classes outside i-pairs");
  t.equal(at(s, "/i_pairs"), json{{"0", 1}, {"1", 1}, {"2", 1}, {"3", 1}}, "reduced i-pairs");
}

void thm34(Tally& t) {
  auto k = [&](int n) { return summary_of(t, "thm3.4-k", {{"n", std::to_string(n)}}); };
  t.equal(at(k(1), "/h2_total"), 0, "k(1|1) H^2");
  auto s = k(2);
  t.equal(at(s, "/h2_total"), 4, "k(1|2) classes");
  t.equal(at(s, "/h2_dims/0"), 4, "k(1|2) degree 0 classes");
  s = k(3);
  t.equal(at(s, "/extremal"), json{{"0", 2}}, "k(1|3) highest classes by degree");
  for (int n : {4, 5}) {
    const std::string tag = "k(1|" + std::to_string(n) + ") ";
    s = k(n);
    t.equal(at(s, "/extremal/0"), 6, tag + "highest classes in degree 0");
    t.equal(at(s, "/i_pairs/0"), 3, tag + "i-pairs");
    t.equal(at(s, "/h2_total"), at(s, "/h2_dims/0"), tag + "classes outside degree 0");
  }
  s = summary_of(t, "thm3.4-svect", {{"raising", "even"}});
  t.equal(at(s, "/versus_vect/beyond_highest/even"), 4, "svect(1|2) highest classes beyond vect(1|2)");
  t.equal(at(s, "/versus_vect/map_onto"), true, "vect(1|2) classes persist in svect(1|2)");
  s = summary_of(t, "thm3.4-m", {});
  t.equal(at(s, "/h2_dims/0"), 2, "m(1) degree 0");
  t.equal(at(s, "/h2_dims/1"), 2, "m(1) degree 1");
  t.equal(at(s, "/q2_trivial"), true, "M_{q^2}, iM_{q^2} act trivially");
}

void grassmann(Tally& t) {
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<std::string, RealStructure>> rhos;
    for (int i = 0; i < 25; ++i) rhos.emplace_back("random #" + std::to_string(i), random_real_structure(n, rng));
    rhos.emplace_back("bar", rho_bar(n));
    if (n % 2 == 0) rhos.emplace_back("tr", rho_tr(n));
    const std::size_t full = std::size_t{1} << n;
    for (const auto& [name, rho] : rhos) {
      const std::string tag = "n=" + std::to_string(n) + " " + name + ": ";
      auto norm = normalize_generators(rho);
      t.equal(norm.t.size(), static_cast<std::size_t>(n), tag + "generator count");
      bool fixed = true, anti = true;
      for (const auto& a : norm.t) fixed = fixed && rho.apply(a) == a;
      for (const auto& a : norm.t)
        for (const auto& b : norm.t) anti = anti && (a * b + b * a).is_zero();
      t.expect(fixed, tag + "generators fixed by rho");
      t.expect(anti, tag + "generators anticommute");
      auto iso = canonical_iso(rho);
      std::vector<SparseVector<Q>> real;
      for (const auto& m : iso.monomials()) real.push_back(m.realify());
      t.equal(span_basis(2 * full, real).size(), full, tag + "real span of monomials");
      auto basis = real_form_basis(rho);
      t.equal(basis.size(), full, tag + "real dimension of the fixed algebra");
      std::vector<SparseVector<Q>> images;
      bool mult = true, inv = true;
      for (const auto& a : basis) {
        auto ia = iso(a);
        images.push_back(ia.realify());
        inv = inv && iso.inverse(ia) == a;
        for (const auto& b : basis) mult = mult && iso(a * b) == ia * iso(b);
      }
      t.expect(mult, tag + "canonical_iso multiplicative on basis pairs");
      t.expect(inv && span_basis(2 * full, images).size() == full, tag + "canonical_iso bijective");
    }
    auto s = summary_of(t, "grassmann-pairwise-iso",
                        {{"n", std::to_string(n)}, {"pairs", "10"}, {"seed", std::to_string(100 + n)}});
    t.equal(at(s, "/pairs_checked"), 10, "n=" + std::to_string(n) + " pairs checked");
    t.equal(at(s, "/failures"), 0, "n=" + std::to_string(n) + " composed isomorphisms");
  }
}

void same_algebra(Tally& t, const LieSuperAlgebra<Q>& target, const LieSuperAlgebra<Q>& other, int lo, int hi,
                  const std::string& tag) {
  for (int k = lo; k <= hi; ++k)
    t.equal(other.sdim_of_degree(k).even == target.sdim_of_degree(k).even &&
                other.sdim_of_degree(k).odd == target.sdim_of_degree(k).odd,
            true, tag + " dimension in degree " + std::to_string(k));
  try {
    auto image = align_by_action(target, other);
    t.expect(is_homomorphism(other, target, image), tag + " brackets after alignment");
    t.equal(span_basis(target.dim(), image).size(), other.dim(), tag + " alignment injective");
  } catch (const std::exception& e) {
    t.expect(false, tag + " alignment: " + e.what());
  }
}

// Copy of `h` (a depth-2 algebra with a one-dimensional centre z) whose
// negative part carries the ids and structure constants of `c`.
std::optional<LieSuperAlgebra<Q>> relabel_like(const LieSuperAlgebra<Q>& h, const LieSuperAlgebra<Q>& c,
                                               const std::map<std::string, std::string>& extra) {
  const auto negs = h.negative_part();
  std::vector<std::string> ids(h.dim());
  std::vector<std::size_t> to(h.dim());
  for (auto i : negs) {
    std::string id = h.basis(i).id;
    if (id == "z")
      id = "1";
    else if (auto e = extra.find(id); e != extra.end())
      id = e->second;
    else if (!c.index_of(id) && id.size() > 1 && id.back() == '1')
      id.pop_back();
    auto j = c.index_of(id);
    if (!j) return std::nullopt;
    ids[i] = id;
    to[i] = *j;
  }
  const std::size_t z = h.at("z"), one = c.at("1");
  std::map<std::size_t, Q> s{{z, Q(1)}};
  // s_i s_j a = b for [e_i, e_j] = a z and [f_i, f_j] = b 1
  for (int pass = 0; pass < 3; ++pass)
    for (auto i : negs)
      for (auto j : negs) {
        if (j < i || i == z || j == z) continue;
        Q a = h.bracket_basis(i, j).at(z), b = c.bracket_basis(to[i], to[j]).at(one);
        if (a.is_zero() || b.is_zero()) continue;
        Q r = b / a;
        if (i == j) {
          // only unit squares occur for hei and ab
          if (!s.count(i)) {
            if (!(r == Q(1))) return std::nullopt;
            s[i] = Q(1);
          }
        } else if (s.count(i) && !s.count(j)) {
          s[j] = r / s[i];
        } else if (!s.count(i) && s.count(j)) {
          s[i] = r / s[j];
        } else if (!s.count(i) && pass > 0) {
          s[i] = Q(1);
          s[j] = r;
        }
      }
  DenseMatrix<Q> p = DenseMatrix<Q>::Zero(static_cast<Eigen::Index>(h.dim()), static_cast<Eigen::Index>(h.dim()));
  for (std::size_t i = 0; i < h.dim(); ++i) {
    auto it = s.find(i);
    p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = it == s.end() ? Q(1) : it->second;
  }
  auto out = change_basis(h, p);
  for (std::size_t i = 0; i < h.dim(); ++i) out.basis_mut(i).id = ids[i].empty() ? h.basis(i).id : ids[i];
  out.set_name(h.name());
  for (auto i : negs)
    for (auto j : negs) {
      SparseVector<Q> want;
      for (const auto& [k, x] : c.bracket_basis(to[i], to[j])) want.add(k == one ? z : 0, x);
      if (!(out.bracket_basis(i, j) == want)) return std::nullopt;
    }
  return out;
}

void prolongations(Tally& t) {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; m + n <= 3; ++n) {
      if (m + n == 0) continue;
      const std::string tag = "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
      auto pr = generalized_prolong(standard_pair(gl_presentation(m, n)), 3);
      same_algebra(t, vect_algebra(m, n, 3, false).algebra, pr.algebra, -1, 3, tag);
    }
  auto contact_case = [&](const LieSuperAlgebra<Q>& h, const LieSuperAlgebra<Q>& target,
                          const std::map<std::string, std::string>& extra, const std::string& tag) {
    auto neg = relabel_like(h, target, extra);
    if (!neg) {
      t.expect(false, tag + " negative parts identified");
      return;
    }
    auto pr = generalized_prolong(degree_zero_derivations(*neg), 2);
    same_algebra(t, target, pr.algebra, -2, 2, tag);
  };
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; 2 * n + m <= 4; ++m) {
      if (n + m == 0) continue;
      contact_case(build_hei(2 * n, m), contact_algebra(contact_space_k(n, m), 2).algebra, {},
                   "hei(" + std::to_string(2 * n) + "|" + std::to_string(m) + ")");
    }
  contact_case(build_ab(1), contact_algebra(contact_space_m(1), 2).algebra, {{"q1", "theta"}, {"xi1", "q"}}, "ab(1)");
}

// Block-diagonal change of basis on g_-: a unit triangular product per block of
// equal degree and parity, identity elsewhere.
DenseMatrix<Q> random_negative_basis_change(const LieSuperAlgebra<Q>& g, std::mt19937_64& rng) {
  const auto n = static_cast<Eigen::Index>(g.dim());
  DenseMatrix<Q> p = DenseMatrix<Q>::Identity(n, n);
  std::map<std::pair<int, Parity>, std::vector<std::size_t>> blocks;
  for (auto i : g.negative_part()) blocks[{g.degree(i), g.parity(i)}].push_back(i);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (const auto& [key, idx] : blocks) {
    const auto k = static_cast<Eigen::Index>(idx.size());
    DenseMatrix<Q> l = DenseMatrix<Q>::Identity(k, k), u = DenseMatrix<Q>::Identity(k, k);
    for (Eigen::Index a = 0; a < k; ++a)
      for (Eigen::Index b = 0; b < a; ++b) {
        l(a, b) = Q(coef(rng));
        u(b, a) = Q(coef(rng));
      }
    DenseMatrix<Q> blk = l * u;
    for (Eigen::Index a = 0; a < k; ++a)
      for (Eigen::Index b = 0; b < k; ++b)
        p(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(a)]),
          static_cast<Eigen::Index>(idx[static_cast<std::size_t>(b)])) = blk(a, b);
  }
  return p;
}

std::vector<long> h2_dims(const LieSuperAlgebra<Q>& g, int lo, int hi) {
  CochainComplex<Q> cx(g);
  std::vector<long> out;
  for (int d = lo; d <= hi; ++d) {
    try {
      out.push_back(static_cast<long>(h2_of_degree(cx, d).dim_h));
    } catch (const TruncationShortfall&) {
      out.push_back(-1);
    }
  }
  return out;
}

void gates(Tally& t) {
  std::mt19937_64 rng(7);
  for (const auto& [name, g] : scenario_algebras()) {
    t.expect(check_super_jacobi(g).ok, name + " super Jacobi");
    CochainComplex<Q> cx(g);
    std::size_t tested = 0, bad = 0;
    for (int round = 0; round < 20 && tested < 50; ++round)
      for (int k = 0; k <= 1; ++k)
        for (int d = -1; d <= 2; ++d)
          for (Parity p : {Parity::Even, Parity::Odd}) {
            try {
              auto c = cx.random_cochain(k, d, p, 6, rng);
              if (c.is_zero()) continue;
              ++tested;
              if (!cx.coboundary(cx.coboundary(c)).is_zero()) ++bad;
            } catch (const TruncationShortfall&) {
            }
          }
    t.expect(tested >= 50, name + " random cochains tested: " + std::to_string(tested));
    t.equal(bad, std::size_t{0}, name + " d(d c) = 0");
    auto moved = change_basis(g, random_negative_basis_change(g, rng));
    t.equal(h2_dims(moved, 0, 2), h2_dims(g, 0, 2), name + " H^2 dims after a change of basis of g_-");
  }
  for (int dim : {2, 4}) {
    auto s = summary_of(t, "symplectic-example", {{"dim", std::to_string(dim)}, {"seed", "5"}});
    t.equal(at(s, "/coboundaries_killed"), at(s, "/coboundaries_tested"),
            "dim V = " + std::to_string(dim) + " obstruction map kills coboundaries");
  }
}

void nijenhuis(Tally& t) {
  auto check = [&](const TensorField& j, NijenhuisVariant v, const std::string& tag) {
    std::vector<VectorField<Q>> fields;
    for (int w = 0; w <= 2; ++w)
      for (const auto& mono : j.ring->monomials_of_weight(w))
        for (std::size_t i = 0; i < j.ring->size(); ++i) {
          VectorField<Q> f(j.ring);
          f.coeff(i) = Polynomial<Q>::monomial(j.ring, mono);
          fields.push_back(f);
        }
    std::size_t nonzero = 0;
    for (const auto& x : fields)
      for (const auto& y : fields)
        if (!nijenhuis_oracle(j, x, y, v).is_zero()) ++nonzero;
    t.equal(nonzero, std::size_t{0}, tag + " nonzero values on " + std::to_string(fields.size() * fields.size()) +
                                         " pairs");
  };
  check(flat_complex_structure(1, 0), NijenhuisVariant::Even, "J on R^{2|0}");
  check(flat_complex_structure(1, 1), NijenhuisVariant::Even, "J on R^{2|2}");
  check(flat_pi_symmetry(1), NijenhuisVariant::Odd, "Pi on R^{1|1}");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only, known;
  app.add_option("--only", only, "run only these criteria");
  app.add_option("--known-failures", known, "criteria whose failure does not fail the run");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria = {
      {"almost complex structures, gl(n|m)", thm31},
      {"J- and Pi-symmetries, q(n)", thm32},
      {"Minkowski superspace, N=1", thm33},
      {"stringy superalgebras", thm34},
      {"real forms of Grassmann algebras", grassmann},
      {"prolongation oracles", prolongations},
      {"complex and property gates", gates},
      {"Nijenhuis oracle", nijenhuis},
  };
  const std::set<int> want(only.begin(), only.end()), allowed(known.begin(), known.end());
  int code = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const int id = static_cast<int>(c) + 1;
    if (!want.empty() && !want.count(id)) continue;
    Tally t;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[c].second(t);
    } catch (const std::exception& e) {
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = t.failures.empty();
    std::cout << "criterion " << id << " " << (pass ? "PASS" : "FAIL") << "  " << criteria[c].first << "  ("
              << t.checks << " checks, " << std::fixed << std::setprecision(1) << secs << " s)"
              << (!pass && allowed.count(id) ? "  [known failure]" : "") << "\n";
    for (const auto& f : t.failures) std::cout << "    " << f << "\n";
    if (!pass && !allowed.count(id)) code = 1;
  }
  return code;
}
