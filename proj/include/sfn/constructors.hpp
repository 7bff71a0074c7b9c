#pragma once

// Lie superalgebras presented by supermatrices, and the named algebras built
// from them: gl, sl, q_J, q_Pi, hei, ab and the Minkowski superalgebras.

#include <optional>
#include <string>
#include <vector>

#include "sfn/algebra.hpp"

namespace sfn {

using CMatrix = DenseMatrix<GaussianRational>;

CMatrix zero_matrix(std::size_t rows, std::size_t cols);
CMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j, const GaussianRational& value = GaussianRational(1));

struct MatrixElement {
  std::string id;
  std::optional<int> degree;
  CMatrix m;
};

struct ModuleVector {
  std::string id;
  CMatrix v;  // column
};

struct MatrixPresentation {
  std::string name;
  std::vector<Parity> format;
  std::vector<MatrixElement> elements;
  std::vector<std::string> cartan;
};

// Parity of a homogeneous supermatrix in the given format.
Parity matrix_parity(const std::vector<Parity>& format, const CMatrix& m);
Parity vector_parity(const std::vector<Parity>& format, const CMatrix& v);
CMatrix supercommutator(const std::vector<Parity>& format, const CMatrix& a, const CMatrix& b);

// Span of the elements under the supercommutator: the real span when S is
// Rational, the complex span when S is GaussianRational.
template <class S>
LieSuperAlgebra<S> matrix_algebra(const MatrixPresentation& p);

// Graded pair V + g0 with V abelian in degree -1 and [X, v] = X v.
template <class S>
LieSuperAlgebra<S> linear_pair(const MatrixPresentation& g0, const std::vector<ModuleVector>& module);

std::vector<ModuleVector> standard_module(const std::vector<Parity>& format, const std::string& prefix = "d");
std::vector<Parity> standard_format(int m, int n);

MatrixPresentation gl_presentation(int m, int n);
MatrixPresentation sl_presentation(int m, int n);
enum class QVariant { J, Pi };
MatrixPresentation q_presentation(int n, QVariant v);
MatrixPresentation o_presentation(int n);
MatrixPresentation sp_presentation(int n2);

template <class S>
LieSuperAlgebra<S> build_gl(int m, int n) {
  return matrix_algebra<S>(gl_presentation(m, n));
}
template <class S>
LieSuperAlgebra<S> build_q(int n, QVariant v) {
  return matrix_algebra<S>(q_presentation(n, v));
}

// Realified pair (C^{n|m}, g0^R) with the real basis d_1..d_{2(n+m)} ordered
// even | odd | even | odd (the second half is i times the first).
LieSuperAlgebra<Rational> realified_pair(const MatrixPresentation& g0);

// Heisenberg superalgebra on W = (2n|m) with z central in degree -2.
LieSuperAlgebra<Rational> build_hei(int n2, int m);
// Antibracket superalgebra: W = (n|n) with an odd form, z odd central.
LieSuperAlgebra<Rational> build_ab(int n);

enum class MinkowskiCase { Conformal, Reduced };
// g_- of the Minkowski superspace in 2|N|2 format.
MatrixPresentation minkowski_negative_presentation(int N);
MatrixPresentation minkowski_g0_presentation(int N, MinkowskiCase c);
LieSuperAlgebra<Rational> build_minkowski_negative(int N);
// g_- + g_0 as one graded algebra.
LieSuperAlgebra<Rational> build_minkowski(int N, MinkowskiCase c);
// The whole conformal algebra including its R and U blocks.
LieSuperAlgebra<Rational> build_minkowski_full(int N);
LieSuperAlgebra<GaussianRational> build_complexified_minkowski(int N);

}  // namespace sfn
