#pragma once

// Contact vector fields K_f on k(2n+1|m) and M_f on m(n), and graded Lie
// superalgebras spanned by families of polynomial vector fields.

#include <string>
#include <vector>

#include "sfn/algebra.hpp"
#include "sfn/polynomial.hpp"

namespace sfn {

enum class ContactKind { K, M };

struct ContactSpace {
  ContactKind kind = ContactKind::K;
  int n = 0;  // K: number of (p, q) pairs; M: number of (q, xi) pairs
  int m = 0;  // K: number of odd indeterminates
  RingPtr ring;
  std::size_t time = 0;  // index of t (K) or tau (M)

  std::string name() const;
};

// Indeterminates t, p_i, q_i, xi_j, eta_j[, theta] for k(2n+1|m);
// tau, q_i, xi_i for m(n). t and tau have weight 2, the rest weight 1.
ContactSpace contact_space_k(int n, int m);
ContactSpace contact_space_m(int n);

// K_f or M_f; f may be inhomogeneous in parity.
VectorField<Rational> contact_field(const ContactSpace& cs, const Polynomial<Rational>& f);

// Coefficients of the contact form (alpha_1 for K, alpha_0 for M) on d y_i.
std::vector<Polynomial<Rational>> contact_form(const ContactSpace& cs);

// Checks L_X(alpha) = F alpha and returns F through `factor`.
bool preserves_contact_form(const ContactSpace& cs, const VectorField<Rational>& x, Polynomial<Rational>* factor);

// Degree of K_f for a monomial f: weight(f) - 2.
inline int contact_degree(const ContactSpace& cs, const Monomial& m) { return cs.ring->weight(m) - 2; }

// Graded algebra with basis X_1..X_r given as vector fields. Brackets landing
// above max_degree are dropped; throws AlgebraError when a bracket within
// range leaves the span.
LieSuperAlgebra<Rational> field_algebra(const std::string& name, const std::vector<BasisVector>& basis,
                                        const std::vector<VectorField<Rational>>& fields, int max_degree,
                                        bool complete = false);

// Contact algebra truncated at max_degree; basis K_f over monomials f,
// named by the monomial ("1", "xi", "t", "xi*eta", ...). Cartan: t and the
// products of dual pairs (p_i q_i, xi_j eta_j; tau and q_i xi_i for M).
struct ContactAlgebra {
  ContactSpace space;
  LieSuperAlgebra<Rational> algebra;
  std::vector<VectorField<Rational>> fields;
};
ContactAlgebra contact_algebra(const ContactSpace& cs, int max_degree);

// Polynomial vector fields on K^{m|n} in the standard grading (deg x = 1,
// degree of a field = polynomial degree - 1), truncated at max_degree.
// With divergence_free only the fields of zero divergence are kept.
struct VectAlgebra {
  RingPtr ring;
  LieSuperAlgebra<Rational> algebra;
  std::vector<VectorField<Rational>> fields;
};
VectAlgebra vect_algebra(int m, int n, int max_degree, bool divergence_free);

Polynomial<Rational> divergence(const VectorField<Rational>& x);

}  // namespace sfn
