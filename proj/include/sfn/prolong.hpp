#pragma once

// Tanaka (generalized Cartan) prolongation of a pair (g_-, g_0), degree
// zero derivations, comparison of graded algebras through their action on
// g_-, and the realization by polynomial vector fields.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfn/algebra.hpp"
#include "sfn/polynomial.hpp"

namespace sfn {

using Weight = std::vector<Rational>;

class TruncationShortfall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class S>
struct ProlongResult {
  LieSuperAlgebra<S> algebra;
  int depth = 1;
  std::map<int, SuperDim> dims;  // per degree, -depth..max computed
};

// The part of degree <= max_degree; brackets above it are dropped. Cartan
// elements and the complex structure are kept where they survive.
template <class S>
LieSuperAlgebra<S> truncate_degree(const LieSuperAlgebra<S>& g, int max_degree);

// Coefficients of x -> [x, v] for v running over the negative part, packed
// as one sparse vector (slot * kSlot + target index).
inline constexpr std::size_t kSlot = std::size_t(1) << 24;
template <class S>
SparseVector<S> action_vector(const LieSuperAlgebra<S>& g, const SparseVector<S>& x);

// All grading-preserving derivations of the negative part of `g`, returned
// as the graded algebra g_- + der_0(g_-) with der_0 basis D1, D2, ...
template <class S>
LieSuperAlgebra<S> degree_zero_derivations(const LieSuperAlgebra<S>& g);

// Prolongs the pair g_- + g_0 (all degrees <= 0) through max_degree. The
// degree-k part consists of the derivations g_- -> g of degree k; brackets
// among non-negative parts are computed recursively from their actions.
// New basis vectors are named g<k>_<j>. The result is marked complete when
// `depth` consecutive components vanish.
template <class S>
ProlongResult<S> generalized_prolong(const LieSuperAlgebra<S>& pair, int max_degree);

// Depth-one prolongation through polynomial vector fields: g_k is the set of
// fields D of degree k with [d_i, D] in g_{k-1}. Over Q only.
ProlongResult<Rational> cartan_prolong(const LieSuperAlgebra<Rational>& pair, int max_degree);

// Expresses the non-negative part of `other` in the basis of `target`, both
// sharing the same negative part (matched by id). Returns for every basis
// vector of `other` its image, or throws AlgebraError when an element has no
// counterpart.
template <class S>
std::vector<SparseVector<S>> align_by_action(const LieSuperAlgebra<S>& target, const LieSuperAlgebra<S>& other);

// True when the linear map `image` (basis of `from` -> elements of `to`)
// preserves brackets on all pairs within the common truncation.
template <class S>
bool is_homomorphism(const LieSuperAlgebra<S>& from, const LieSuperAlgebra<S>& to,
                     const std::vector<SparseVector<S>>& image);

// Realization in exponential coordinates on g_-: one field per basis vector,
// with e_a |-> d_a for the negative basis. The ring holds one indeterminate
// per negative basis vector (named after it, weight = -degree).
template <class S>
struct Realization {
  RingPtr ring;
  std::vector<VectorField<S>> fields;
};
template <class S>
Realization<S> realize_as_vector_fields(const LieSuperAlgebra<S>& g);

}  // namespace sfn
