// Copyright (c) 2026 The cutbddc authors
// SPDX-License-Identifier: Apache-2.0

#include "core/linalg.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

namespace cutbddc {

void SparseSymMatrix::add(int i, int j, double v) {
  if (finalized_) fail(ErrorCode::Internal, "SparseSymMatrix: add after finalize");
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    fail(ErrorCode::InvalidArgument, "SparseSymMatrix: index out of range");
  if (v == 0.0) return;
  // canonical lower-triangle entry
  if (i < j) std::swap(i, j);
  pending_.emplace_back(i, j, v);
}

void SparseSymMatrix::finalize() {
  lower_.resize(n_, n_);
  lower_.setFromTriplets(pending_.begin(), pending_.end());
  pending_.clear();
  pending_.shrink_to_fit();
  lower_.prune(0.0, 0.0);
  lower_.makeCompressed();
  full_ = lower_.selfadjointView<Eigen::Lower>();
  full_.makeCompressed();
  finalized_ = true;
}

SparseCholesky::SparseCholesky(const SparseSymMatrix& a) { factorize(a.full()); }

SparseCholesky::SparseCholesky(const SparseMat& full) { factorize(full); }

void SparseCholesky::factorize(const SparseMat& full) {
  ldlt_.compute(full);
  bool bad = ldlt_.info() != Eigen::Success;
  int pivot = -1;
  if (!bad) {
    const auto& d = ldlt_.vectorD();
    for (int k = 0; k < d.size(); ++k) {
      if (!(d[k] > 0.0)) {
        bad = true;
        pivot = ldlt_.permutationPinv().indices()[k];
        break;
      }
    }
  }
  if (bad) {
    fail(ErrorCode::Singular,
         "cholesky: matrix is not positive definite (pivot index " + std::to_string(pivot) + ")");
  }
}

VectorXd SparseCholesky::solve(const VectorXd& b) const { return ldlt_.solve(b); }

VectorXd cholesky_solve(const SparseSymMatrix& a, const VectorXd& b) {
  return SparseCholesky(a).solve(b);
}

SaddleFactorization::SaddleFactorization(
    const SparseSymMatrix& a, const std::vector<std::vector<std::pair<int, double>>>& constraint_rows, const std::string& context) {
  n_ = a.rows();
  m_ = static_cast<int>(constraint_rows.size());
  std::vector<Triplet> trips;
  const SparseMat& full = a.full();
  trips.reserve(full.nonZeros() + 2 * m_ * 4);
  for (int k = 0; k < full.outerSize(); ++k)
    for (SparseMat::InnerIterator it(full, k); it; ++it)
      trips.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
  for (int r = 0; r < m_; ++r) {
    for (const auto& [col, v] : constraint_rows[r]) {
      if (col < 0 || col >= n_)
        fail(ErrorCode::InvalidArgument, "saddle: constraint column out of range");
      trips.emplace_back(n_ + r, col, v);
      trips.emplace_back(col, n_ + r, v);
    }
  }
  SparseMat aug(n_ + m_, n_ + m_);
  aug.setFromTriplets(trips.begin(), trips.end());
  aug.makeCompressed();
  lu_.compute(aug);
  if (lu_.info() != Eigen::Success) {
    fail(ErrorCode::Singular, "saddle: singular augmented system" +
                                  (context.empty() ? std::string() : " (" + context + ")") +
                                  "; constraints do not control the operator kernel");
  }
}

VectorXd SaddleFactorization::solve(const VectorXd& b, const VectorXd& d, VectorXd* multipliers) const {
  if (b.size() != n_ || d.size() != m_)
    fail(ErrorCode::InvalidArgument, "saddle: rhs dimension mismatch");
  VectorXd rhs(n_ + m_);
  rhs.head(n_) = b;
  rhs.tail(m_) = d;
  VectorXd sol = lu_.solve(rhs);
  if (multipliers) *multipliers = sol.tail(m_);
  return sol.head(n_);
}

VectorXd SaddleFactorization::solve_zero_constraints(const VectorXd& b) const {
  return solve(b, VectorXd::Zero(m_));
}

double dense_generalized_eigs_max(const MatrixXd& b, const MatrixXd& d, double kernel_tol) {
  if (b.rows() != d.rows() || b.rows() != b.cols() || d.rows() != d.cols())
    fail(ErrorCode::InvalidArgument, "generalized eigs: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<MatrixXd> dsolve(d);
  if (dsolve.info() != Eigen::Success)
    fail(ErrorCode::Internal, "generalized eigs: eigendecomposition of D failed");
  const VectorXd& ev = dsolve.eigenvalues();
  const double lmax = ev.maxCoeff();
  if (!(lmax > 0.0))
    fail(ErrorCode::Degenerate, "generalized eigs: D is numerically zero (degenerate element)");
  std::vector<int> keep;
  for (int k = 0; k < ev.size(); ++k)
    if (ev[k] >= kernel_tol * lmax) keep.push_back(k);
  if (keep.empty())
    fail(ErrorCode::Degenerate, "generalized eigs: all directions deflated (degenerate element)");
  const int m = static_cast<int>(keep.size());
  MatrixXd q(b.rows(), m);
  VectorXd dk(m);
  for (int k = 0; k < m; ++k) {
    q.col(k) = dsolve.eigenvectors().col(keep[k]);
    dk[k] = ev[keep[k]];
  }
  MatrixXd bt = q.transpose() * b * q;
  MatrixXd dt = dk.asDiagonal();
  Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXd> ges(bt, dt, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (ges.info() != Eigen::Success)
    fail(ErrorCode::Internal, "generalized eigs: deflated pencil solve failed");
  return ges.eigenvalues().maxCoeff();
}

void write_matrix_market(const SparseSymMatrix& a, std::ostream& os) {
  const SparseMat& low = a.lower();
  os << "%%MatrixMarket matrix coordinate real symmetric\n";
  os << a.rows() << " " << a.rows() << " " << low.nonZeros() << "\n";
  os.precision(17);
  for (int k = 0; k < low.outerSize(); ++k)
    for (SparseMat::InnerIterator it(low, k); it; ++it)
      os << (it.row() + 1) << " " << (it.col() + 1) << " " << it.value() << "\n";
}

void write_matrix_market(const SparseSymMatrix& a, const std::string& path) {
  std::ofstream os(path);
  if (!os) fail(ErrorCode::Io, "cannot open " + path + " for writing");
  write_matrix_market(a, os);
}

}  // namespace cutbddc
