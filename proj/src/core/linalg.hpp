// Copyright (c) 2026 The cutbddc authors
// SPDX-License-Identifier: Apache-2.0
//
// Minimal dense/sparse symmetric linear algebra used by the solver:
// assembled symmetric sparse matrices (lower-triangle storage), SPD sparse
// Cholesky, a symmetric saddle-point factorization for constrained Neumann
// solves, and a small dense symmetric generalized eigensolver with kernel
// deflation.

#ifndef CUTBDDC_LINALG_HPP
#define CUTBDDC_LINALG_HPP

#include <iosfwd>
#include <memory>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "core/common.hpp"

namespace cutbddc {

using SparseMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

// Symmetric sparse matrix, canonical storage = lower triangle + diagonal.
// Assembly goes through triplets (any of the two mirror entries may be
// added); finalize() merges duplicates, drops explicit zeros and caches a
// full-storage copy for fast mat-vecs.
class SparseSymMatrix {
 public:
  SparseSymMatrix() = default;
  explicit SparseSymMatrix(int n) : n_(n) {}

  int rows() const { return n_; }
  void add(int i, int j, double v);
  void finalize();
  bool finalized() const { return finalized_; }

  const SparseMat& lower() const { return lower_; }
  const SparseMat& full() const { return full_; }
  double diagonal(int i) const { return full_.coeff(i, i); }

  VectorXd apply(const VectorXd& x) const { return full_ * x; }

 private:
  int n_ = 0;
  bool finalized_ = false;
  std::vector<Triplet> pending_;
  SparseMat lower_;
  SparseMat full_;
};

// SPD sparse Cholesky (LDLt with AMD ordering). Non-positive pivots are
// reported with the (original) index of the offending diagonal entry.
class SparseCholesky {
 public:
  explicit SparseCholesky(const SparseSymMatrix& a);
  explicit SparseCholesky(const SparseMat& full);
  VectorXd solve(const VectorXd& b) const;
  int rows() const { return static_cast<int>(ldlt_.rows()); }

 private:
  void factorize(const SparseMat& full);
  Eigen::SimplicialLDLT<SparseMat, Eigen::Lower> ldlt_;
};

VectorXd cholesky_solve(const SparseSymMatrix& a, const VectorXd& b);

// Factorization of the augmented symmetric indefinite system
//   [ A  C^T ] [x] = [b]
//   [ C   0  ] [y]   [d]
// with A symmetric (n x n) and C the constraint rows (m x n). Backed by a
// sparse LU with partial pivoting; the contract is the re-solve residual,
// checked in the tests.
class SaddleFactorization {
 public:
  SaddleFactorization(const SparseSymMatrix& a, const std::vector<std::vector<std::pair<int, double>>>& constraint_rows, const std::string& context = "");

  int n() const { return n_; }
  int n_constraints() const { return m_; }

  // Solves with rhs (b, d); returns the primal part and, if `multipliers`
  // is non-null, the constraint multipliers.
  VectorXd solve(const VectorXd& b, const VectorXd& d, VectorXd* multipliers = nullptr) const;
  VectorXd solve_zero_constraints(const VectorXd& b) const;

 private:
  int n_ = 0;
  int m_ = 0;
  Eigen::SparseLU<SparseMat, Eigen::COLAMDOrdering<int>> lu_;
};

// Largest generalized eigenvalue max x^T B x / x^T D x over the subspace
// where D is definite. Directions with D-eigenvalue below
// kernel_tol * lambda_max(D) are deflated; if everything is deflated the
// element is degenerate and an error is raised.
double dense_generalized_eigs_max(const MatrixXd& b, const MatrixXd& d, double kernel_tol = 1e-12);

// Debug dump in MatrixMarket coordinate format (symmetric lower storage).
void write_matrix_market(const SparseSymMatrix& a, std::ostream& os);
void write_matrix_market(const SparseSymMatrix& a, const std::string& path);

}  // namespace cutbddc

#endif
