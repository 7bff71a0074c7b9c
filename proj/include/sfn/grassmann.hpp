#pragma once

// Complex Grassmann algebras with real structures, and the normalization of
// generators of a real form.

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfn/linalg.hpp"
#include "sfn/scalar.hpp"
#include "sfn/superspace.hpp"

namespace sfn {

using Mask = std::uint32_t;
using Gauss = GaussianRational;

inline constexpr int kMaxGrassmann = 12;

// Element of Lambda_C(n); monomials are bitmasks over the generators.
class GrassmannElement {
 public:
  explicit GrassmannElement(int n = 0);

  static GrassmannElement unit(int n, const Gauss& c = Gauss(1));
  // Generator theta_{j+1}.
  static GrassmannElement generator(int n, int j, const Gauss& c = Gauss(1));
  static GrassmannElement monomial(int n, Mask m, const Gauss& c = Gauss(1));

  int n() const { return n_; }
  const std::map<Mask, Gauss>& terms() const { return terms_; }
  Gauss coeff(Mask m) const;
  void add(Mask m, const Gauss& c);
  bool is_zero() const { return terms_.empty(); }

  // Parity of a homogeneous element; throws std::domain_error otherwise.
  Parity parity() const;
  GrassmannElement degree_part(int k) const;
  // Components of the given monomial masks only.
  GrassmannElement restrict_to(const std::vector<Mask>& masks) const;

  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator*(const Gauss& c, GrassmannElement a);
  GrassmannElement operator-() const;
  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // Coordinates over R: 2m is Re of monomial m, 2m+1 its Im.
  SparseVector<Rational> realify() const;
  static GrassmannElement from_real(int n, const SparseVector<Rational>& v);

  // "(3/5+4/5*i)*th1^th3 + th2"
  std::string str() const;

 private:
  int n_;
  std::map<Mask, Gauss> terms_;
};

GrassmannElement multiply(const GrassmannElement& a, const GrassmannElement& b);
// Sign of theta_a theta_b = sign * theta_{a|b}, 0 when they share a generator.
int wedge_sign(Mask a, Mask b);

class RealStructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Antilinear multiplicative involution given by the images of the generators.
class RealStructure {
 public:
  int n() const { return n_; }
  const std::vector<GrassmannElement>& images() const { return images_; }
  GrassmannElement apply(const GrassmannElement& a) const;
  // Matrix of rho on the 2^{n+1} real coordinates of realify().
  const SparseMatrix<Rational>& realified() const { return real_; }
  std::string str() const;

 private:
  friend RealStructure make_real_structure(std::vector<GrassmannElement> images);
  int n_ = 0;
  std::vector<GrassmannElement> images_;
  std::vector<GrassmannElement> monomial_images_;
  SparseMatrix<Rational> real_;
};

// Validates the images and builds the structure; throws RealStructureError
// naming the failed condition and generator.
RealStructure make_real_structure(std::vector<GrassmannElement> images);

// theta_j -> lambda_j theta_j with |lambda_j| = 1.
RealStructure rho_bar(int n, const std::vector<Gauss>& phases = {});
// n = 2k, theta = (xi, eta): xi_j -> i eta_j, eta_j -> i xi_j.
RealStructure rho_tr(int n);

// Basis over R of the fixed points of rho, in reduced echelon form.
std::vector<GrassmannElement> real_form_basis(const RealStructure& rho);

struct Normalization {
  std::vector<GrassmannElement> x, y, z_prime, t;
};
// Anticommuting real generators t_1..t_n of the real form; the intermediate
// elements of the construction are kept for inspection.
Normalization normalize_generators(const RealStructure& rho);

// The algebra map Re_rho -> Lambda_R(n) sending t_k to theta_k.
class RealFormIso {
 public:
  explicit RealFormIso(const RealStructure& rho);
  const std::vector<GrassmannElement>& generators() const { return gens_; }
  // t_S for every mask S
  const std::vector<GrassmannElement>& monomials() const { return monos_; }
  // Image in Lambda_R(n); throws std::domain_error when a is not fixed by rho.
  GrassmannElement operator()(const GrassmannElement& a) const;
  // Preimage of an element with real coefficients.
  GrassmannElement inverse(const GrassmannElement& b) const;

 private:
  int n_;
  std::vector<GrassmannElement> gens_, monos_;
  Coordinatizer<Rational> coords_;
};

RealFormIso canonical_iso(const RealStructure& rho);

struct StructuralSubspaces {
  std::vector<std::vector<Mask>> filtration;  // G_k, k = 0..n
  std::vector<Mask> even, odd, odd_minus, center;
};
StructuralSubspaces structural_subspaces(int n);

// rho = phi o rho_0 o phi^{-1} for a random automorphism phi and a random
// built-in rho_0 (bar with unit phases, tr, or a mixture).
RealStructure random_real_structure(int n, std::mt19937_64& rng);

}  // namespace sfn
