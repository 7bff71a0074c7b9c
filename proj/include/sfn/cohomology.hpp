#pragma once

// Chevalley-Eilenberg cochains C^k(g_-; g) of the negative part of a graded
// algebra with values in the whole algebra, H^2 by degree, and the g_0-module
// structure of the result.

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sfn/algebra.hpp"
#include "sfn/prolong.hpp"

namespace sfn {

// Super-alternating k-linear map on g_- stored by its values on sorted
// argument lists (indices into the algebra, odd arguments may repeat).
template <class S>
struct Cochain {
  int arity = 0;
  std::map<std::vector<std::size_t>, SparseVector<S>> values;

  bool is_zero() const {
    for (const auto& [a, v] : values)
      if (!v.empty()) return false;
    return true;
  }
  void add(const std::vector<std::size_t>& args, std::size_t target, const S& c) {
    auto& v = values[args];
    v.add(target, c);
    if (v.empty()) values.erase(args);
  }
  void axpy(const S& a, const Cochain& o) {
    for (const auto& [args, v] : o.values) {
      auto& w = values[args];
      w.axpy(a, v);
      if (w.empty()) values.erase(args);
    }
  }
  friend bool operator==(const Cochain& a, const Cochain& b) { return a.arity == b.arity && a.values == b.values; }
};

struct CochainTerm {
  std::vector<std::size_t> args;
  std::size_t target = 0;
  friend auto operator<=>(const CochainTerm&, const CochainTerm&) = default;
};

template <class S>
class CochainComplex {
 public:
  explicit CochainComplex(LieSuperAlgebra<S> g);

  const LieSuperAlgebra<S>& algebra() const { return g_; }
  const std::vector<std::size_t>& negatives() const { return negs_; }

  // Degree of a term: deg(target) - sum of argument degrees.
  int degree(const CochainTerm& t) const;
  Weight weight(const CochainTerm& t) const;
  Parity parity(const CochainTerm& t) const;

  // All terms of C^k of the given degree. Throws TruncationShortfall when
  // targets above the truncation of an incomplete algebra would be needed.
  std::vector<CochainTerm> terms(int k, int degree) const;
  // Highest target degree C^k of this degree can reach.
  int max_target_degree(int k, int degree) const;

  SparseVector<S> evaluate(const Cochain<S>& c, std::vector<std::size_t> args) const;
  Cochain<S> coboundary(const Cochain<S>& c) const;
  // Action of an element of g_0: (h.c)(x..) = [h, c(x..)] - sum +- c(.., [h, x_i], ..).
  Cochain<S> act(const SparseVector<S>& h, const Cochain<S>& c) const;

  // Random cochain of the given arity with small integer coefficients on
  // `count` terms, homogeneous in degree and parity.
  Cochain<S> random_cochain(int k, int degree, Parity parity, std::size_t count, std::mt19937_64& rng) const;

  std::string term_str(const CochainTerm& t) const;
  // Cochain as "target (x) (a* ^ b*) + ...", coefficients cleared to a primitive integer vector.
  std::string str(const Cochain<S>& c) const;

 private:
  Cochain<S> coboundary_term(const std::vector<std::size_t>& args, std::size_t target, const S& coef) const;
  SparseVector<S> d_at(const std::vector<std::size_t>& args, std::size_t target, const S& coef,
                       const std::vector<std::size_t>& at) const;

  LieSuperAlgebra<S> g_;
  std::vector<std::size_t> negs_;
  std::vector<Parity> par_;
};

// H^2 of one degree, split into blocks of fixed weight and parity.
template <class S>
struct H2Degree {
  struct Block {
    Weight weight;
    Parity parity = Parity::Even;
    std::size_t dim_z = 0, dim_b = 0, dim_h = 0;
  };
  int degree = 0;
  std::size_t dim_z = 0, dim_b = 0, dim_h = 0;
  std::vector<Block> blocks;
  // Canonical representatives: cocycles reduced modulo B^2, in echelon form.
  std::vector<Cochain<S>> reps;
  std::vector<std::size_t> rep_block;
  bool conditional = false;  // a lower degree has nonzero H^2

  // Class of a cocycle as coordinates on `reps`; throws on non-cocycles.
  SparseVector<S> class_of(const Cochain<S>& c) const;
  bool is_coboundary(const Cochain<S>& c) const;

  struct Quotient;
  std::shared_ptr<const Quotient> quotient;
};

template <class S>
H2Degree<S> h2_of_degree(const CochainComplex<S>& cx, int degree);

enum class WeightMode { Highest, Lowest };

// g_0-module data of one degree of H^2.
template <class S>
struct H2Module {
  int degree = 0;
  // action matrices of the g_0 basis on H^2, columns indexed by reps
  std::map<std::size_t, std::vector<SparseVector<S>>> action;
  struct Extremal {
    Weight weight;
    Parity parity = Parity::Even;
    std::vector<SparseVector<S>> vectors;  // coordinates on reps
    std::size_t i_pairs = 0, i_fixed = 0;
    bool i_known = false;
  };
  std::vector<Extremal> extremal;
  std::size_t extremal_count() const {
    std::size_t n = 0;
    for (const auto& e : extremal) n += e.vectors.size();
    return n;
  }
  SuperDim extremal_sdim() const {
    SuperDim d;
    for (const auto& e : extremal) (e.parity == Parity::Even ? d.even : d.odd) += static_cast<long>(e.vectors.size());
    return d;
  }
};

// Highest (or lowest) weight classes with respect to the root vectors of g_0
// among its basis; with even_only only even root vectors are used.
template <class S>
H2Module<S> g0_action_on_h2(const CochainComplex<S>& cx, const H2Degree<S>& h2, WeightMode mode, bool even_only);

// Splits every extremal space into i-pairs and i-fixed lines using the
// action of i h for the Cartan elements h, and of i on g_- when that extends
// to a derivation of g. Throws AlgebraError without i_op.
template <class S>
void i_pairing(const CochainComplex<S>& cx, const H2Degree<S>& h2, H2Module<S>& m);

// True when the element of g_0 acts by zero on H^2 of this degree.
template <class S>
bool acts_trivially(const CochainComplex<S>& cx, const H2Degree<S>& h2, const SparseVector<S>& h);

// Submodules generated by extremal vectors, closed under sums and
// intersections.
struct SubmoduleInfo {
  SuperDim sdim;
  // extremal content by (weight, parity)
  std::map<std::pair<Weight, int>, long> content;
  std::vector<std::size_t> contains;  // indices of proper submodules contained in this one
  bool whole = false;
};
template <class S>
std::vector<SubmoduleInfo> submodule_lattice(const H2Degree<S>& h2, const H2Module<S>& m, std::size_t limit = 64);

// Every computed degree of H^2 in [lo, hi].
template <class S>
struct CohomologyReport {
  std::string algebra;
  std::optional<int> truncation;
  bool complete = false;
  std::vector<H2Degree<S>> degrees;
};
template <class S>
CohomologyReport<S> h2_by_degree(const CochainComplex<S>& cx, int lo, int hi);

// Nijenhuis tensor of a (1,1)-tensor field J, J(d_b) = sum_a J[a][b] d_a.
enum class NijenhuisVariant { Even, Odd };
struct TensorField {
  RingPtr ring;
  std::vector<std::vector<Polynomial<Rational>>> j;  // j[a][b]
  Parity parity = Parity::Even;
};
VectorField<Rational> apply_tensor(const TensorField& t, const VectorField<Rational>& x);
// Checks J^2 = -1 (even or J-symmetry) or +1 (Pi-symmetry) on the frame;
// returns the sign found, or 0.
int tensor_square_sign(const TensorField& t);
VectorField<Rational> nijenhuis_oracle(const TensorField& t, const VectorField<Rational>& x,
                                       const VectorField<Rational>& y, NijenhuisVariant v);
// Constant tensor fields: the standard complex structure on R^{2p|2q}
// (d_k -> d_{k+p}, d_{k+p} -> -d_k on each half) and the odd Pi on R^{n|n}.
TensorField flat_complex_structure(int p, int q);
TensorField flat_pi_symmetry(int n);

// C(u, v, w) = B(c(u, v), w) + B(c(v, w), u) + B(c(w, u), v) for an even V
// in degree -1; returns the values on increasing index triples.
std::map<std::vector<std::size_t>, Rational> symplectic_obstruction_map(const CochainComplex<Rational>& cx,
                                                                         const Cochain<Rational>& c,
                                                                         const DenseMatrix<Rational>& b);
// Standard symplectic form on the negative basis p_1..p_n q_1..q_n of
// sp_presentation(2n).
DenseMatrix<Rational> standard_symplectic_form(std::size_t n2);

}  // namespace sfn
