#pragma once

#include <span>
#include <vector>

#include "waylab/matrix.hpp"

namespace waylab {

struct ToleranceConfig {
  double tol_hermitian = 1e-10;
  double tol_projector = 1e-10;
  double tol_isometry = 1e-10;
  double tol_spectral = 1e-9;
  double tol_defect = 1e-8;

  /// Throws std::invalid_argument unless every tolerance is strictly positive.
  void validate() const;
};

/// Square matrix with ‖M − M†‖_F ≤ tol_hermitian · max(1, ‖M‖_F).
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix m, const ToleranceConfig& tol = {});

  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Matrix m_;
};

/// Hermitian and idempotent: ‖P² − P‖_F ≤ tol_projector.
class Projector {
 public:
  explicit Projector(Matrix m, const ToleranceConfig& tol = {});

  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Matrix m_;
};

/// Rectangular matrix (rows ≥ cols) with U†U = I within tol_isometry.
/// Unlike a unitary, the range need not be the whole codomain.
class Isometry {
 public:
  explicit Isometry(Matrix m, const ToleranceConfig& tol = {});

  const Matrix& matrix() const { return m_; }
  Eigen::Index rows() const { return m_.rows(); }
  Eigen::Index cols() const { return m_.cols(); }

 private:
  Matrix m_;
};

/// Spectral resolution H = Σ λᵢ Qᵢ with distinct (clustered) eigenvalues.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<Projector> projectors;
  std::vector<int> multiplicities;

  Matrix reconstruct() const;
};

/// Eigendecomposition with degeneracy clustering: two neighbouring raw
/// eigenvalues land in the same cluster when their gap is at most
/// tol_spectral · max(1, spectral radius). Each cluster's projector is the
/// sum of its rank-1 eigenprojectors; the reported eigenvalue is the cluster
/// mean. Eigenvalues ascend.
SpectralDecomposition spectral_decompose(const HermitianOperator& h,
                                         const ToleranceConfig& tol = {});

/// UU†, the projector on the range of U. Satisfies RU = U and U†R = U†.
Projector range_projector(const Isometry& u, const ToleranceConfig& tol = {});

/// True iff the projectors are mutually orthogonal and sum to the identity
/// (within tol_projector). Throws on dimension mismatch.
bool is_orthogonal_resolution(std::span<const Projector> ps,
                              const ToleranceConfig& tol = {});

}  // namespace waylab
