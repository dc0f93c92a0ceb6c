#include "waylab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace waylab {

void ToleranceConfig::validate() const {
  const double ts[] = {tol_hermitian, tol_projector, tol_isometry,
                       tol_spectral, tol_defect};
  for (double t : ts) {
    if (!(t > 0.0) || !std::isfinite(t)) {
      throw std::invalid_argument(
          "ToleranceConfig: tolerances must be strictly positive and finite");
    }
  }
}

HermitianOperator::HermitianOperator(Matrix m, const ToleranceConfig& tol)
    : m_(std::move(m)) {
  tol.validate();
  require_finite(m_, "HermitianOperator");
  require_square(m_, "HermitianOperator");
  const double defect = frobenius_norm(m_ - m_.adjoint());
  const double scale = std::max(1.0, frobenius_norm(m_));
  if (defect > tol.tol_hermitian * scale) {
    throw std::invalid_argument(
        "HermitianOperator: matrix is not Hermitian (defect " +
        std::to_string(defect) + ")");
  }
}

Projector::Projector(Matrix m, const ToleranceConfig& tol) : m_(std::move(m)) {
  tol.validate();
  require_finite(m_, "Projector");
  require_square(m_, "Projector");
  const double herm = frobenius_norm(m_ - m_.adjoint());
  const double scale = std::max(1.0, frobenius_norm(m_));
  if (herm > tol.tol_hermitian * scale) {
    throw std::invalid_argument("Projector: matrix is not Hermitian (defect " +
                                std::to_string(herm) + ")");
  }
  const double idem = frobenius_norm(m_ * m_ - m_);
  if (idem > tol.tol_projector) {
    throw std::invalid_argument("Projector: matrix is not idempotent (defect " +
                                std::to_string(idem) + ")");
  }
}

Isometry::Isometry(Matrix m, const ToleranceConfig& tol) : m_(std::move(m)) {
  tol.validate();
  require_finite(m_, "Isometry");
  if (m_.rows() < m_.cols()) {
    throw std::invalid_argument("Isometry: rows (" + std::to_string(m_.rows()) +
                                ") must be >= cols (" +
                                std::to_string(m_.cols()) + ")");
  }
  const Matrix gram = m_.adjoint() * m_;
  const double defect =
      frobenius_norm(gram - Matrix::Identity(m_.cols(), m_.cols()));
  if (defect > tol.tol_isometry) {
    throw std::invalid_argument("Isometry: U†U differs from identity (defect " +
                                std::to_string(defect) + ")");
  }
}

Matrix SpectralDecomposition::reconstruct() const {
  if (projectors.empty()) {
    throw std::invalid_argument("SpectralDecomposition: empty decomposition");
  }
  Matrix sum = Matrix::Zero(projectors[0].dim(), projectors[0].dim());
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    sum += eigenvalues[i] * projectors[i].matrix();
  }
  return sum;
}

SpectralDecomposition spectral_decompose(const HermitianOperator& h,
                                         const ToleranceConfig& tol) {
  tol.validate();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("spectral_decompose: eigensolver failed");
  }
  const Eigen::VectorXd lam = solver.eigenvalues();  // ascending
  const Matrix& vecs = solver.eigenvectors();
  const Eigen::Index n = lam.size();
  const double radius = std::max(std::abs(lam(0)), std::abs(lam(n - 1)));
  const double gap_threshold = tol.tol_spectral * std::max(1.0, radius);

  SpectralDecomposition out;
  Eigen::Index begin = 0;
  while (begin < n) {
    Eigen::Index end = begin + 1;
    while (end < n && lam(end) - lam(end - 1) <= gap_threshold) ++end;
    const Eigen::Index count = end - begin;
    const Matrix block = vecs.middleCols(begin, count);
    out.eigenvalues.push_back(lam.segment(begin, count).mean());
    out.projectors.emplace_back(block * block.adjoint(), tol);
    out.multiplicities.push_back(static_cast<int>(count));
    begin = end;
  }
  return out;
}

Projector range_projector(const Isometry& u, const ToleranceConfig& tol) {
  return Projector(u.matrix() * u.matrix().adjoint(), tol);
}

bool is_orthogonal_resolution(std::span<const Projector> ps,
                              const ToleranceConfig& tol) {
  tol.validate();
  if (ps.empty()) {
    throw std::invalid_argument("is_orthogonal_resolution: empty collection");
  }
  const Eigen::Index dim = ps[0].dim();
  for (const Projector& p : ps) {
    if (p.dim() != dim) {
      throw std::invalid_argument(
          "is_orthogonal_resolution: dimension mismatch");
    }
  }
  Matrix sum = Matrix::Zero(dim, dim);
  for (const Projector& p : ps) sum += p.matrix();
  if (frobenius_norm(sum - Matrix::Identity(dim, dim)) > tol.tol_projector) {
    return false;
  }
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (frobenius_norm(ps[i].matrix() * ps[j].matrix()) > tol.tol_projector) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace waylab
