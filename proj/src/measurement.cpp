#include "waylab/measurement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace waylab {

namespace {

void require_valid_measurement(const KrausMeasurement& m,
                               const ToleranceConfig& tol) {
  const double defect = m.completeness_defect();
  if (defect > tol.tol_projector) {
    throw std::invalid_argument(
        "measurement is not complete: || sum M†M - I || = " +
        std::to_string(defect));
  }
}

void require_dims_match(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch " +
                                std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix m, const ToleranceConfig& tol)
    : m_(std::move(m)) {
  tol.validate();
  require_finite(m_, "DensityMatrix");
  require_square(m_, "DensityMatrix");
  const double scale = std::max(1.0, frobenius_norm(m_));
  if (frobenius_norm(m_ - m_.adjoint()) > tol.tol_hermitian * scale) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  const Complex tr = m_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol.tol_hermitian) {
    throw std::invalid_argument("DensityMatrix: trace differs from 1 by " +
                                std::to_string(std::abs(tr - 1.0)));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol.tol_hermitian) {
    throw std::invalid_argument(
        "DensityMatrix: negative eigenvalue " +
        std::to_string(solver.eigenvalues().minCoeff()));
  }
}

KrausMeasurement::KrausMeasurement(std::vector<Matrix> operators)
    : ops_(std::move(operators)) {
  if (ops_.empty()) {
    throw std::invalid_argument("KrausMeasurement: empty operator list");
  }
  for (const Matrix& m : ops_) {
    require_finite(m, "KrausMeasurement operator");
    require_square(m, "KrausMeasurement operator");
    if (m.rows() != ops_[0].rows()) {
      throw std::invalid_argument("KrausMeasurement: ragged dimensions");
    }
  }
}

double KrausMeasurement::completeness_defect() const {
  const Eigen::Index d = dim();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& m : ops_) sum += m.adjoint() * m;
  return frobenius_norm(sum - Matrix::Identity(d, d));
}

ProjectiveMeasurement::ProjectiveMeasurement(std::vector<Projector> projectors)
    : ps_(std::move(projectors)) {
  if (ps_.empty()) {
    throw std::invalid_argument("ProjectiveMeasurement: empty projector list");
  }
  for (const Projector& p : ps_) {
    if (p.dim() != ps_[0].dim()) {
      throw std::invalid_argument("ProjectiveMeasurement: ragged dimensions");
    }
  }
}

KrausMeasurement ProjectiveMeasurement::as_kraus() const {
  std::vector<Matrix> ops;
  ops.reserve(ps_.size());
  for (const Projector& p : ps_) ops.push_back(p.matrix());
  return KrausMeasurement(std::move(ops));
}

Verdict validate(const KrausMeasurement& m, const ToleranceConfig& tol) {
  tol.validate();
  Verdict v;
  const Eigen::Index d = m.dim();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& op : m.operators()) sum += op.adjoint() * op;
  const Matrix defect_matrix = sum - Matrix::Identity(d, d);
  const double defect = frobenius_norm(defect_matrix);
  v.add_check("completeness", defect, tol.tol_projector);
  if (!v.pass) v.witnesses.emplace_back("completeness_defect", defect_matrix);
  return v;
}

OutcomeDistribution outcome_distribution(const KrausMeasurement& m,
                                         const DensityMatrix& rho,
                                         const ToleranceConfig& tol) {
  tol.validate();
  require_valid_measurement(m, tol);
  require_dims_match(m.dim(), rho.dim(), "outcome_distribution");

  OutcomeDistribution out;
  for (const Matrix& op : m.operators()) {
    const Matrix post = op * rho.matrix() * op.adjoint();
    double p = post.trace().real();
    if (p < 0.0) {
      if (p < -tol.tol_defect) {
        throw std::invalid_argument(
            "outcome_distribution: negative probability " + std::to_string(p));
      }
      p = 0.0;
    }
    out.probabilities.push_back(p);
    if (p >= tol.tol_defect) {
      out.conditional_states.emplace_back(DensityMatrix(post / p, tol));
    } else {
      out.conditional_states.emplace_back(std::nullopt);
    }
  }
  return out;
}

DensityMatrix unconditional_post_state(const KrausMeasurement& m,
                                       const DensityMatrix& rho,
                                       const ToleranceConfig& tol) {
  tol.validate();
  require_valid_measurement(m, tol);
  require_dims_match(m.dim(), rho.dim(), "unconditional_post_state");
  Matrix sum = Matrix::Zero(rho.dim(), rho.dim());
  for (const Matrix& op : m.operators()) {
    sum += op * rho.matrix() * op.adjoint();
  }
  return DensityMatrix(std::move(sum), tol);
}

double expected_value(const HermitianOperator& h, const DensityMatrix& rho,
                      const ToleranceConfig& tol) {
  tol.validate();
  require_dims_match(h.dim(), rho.dim(), "expected_value");
  const Complex tr = (rho.matrix() * h.matrix()).trace();
  if (std::abs(tr.imag()) > tol.tol_defect) {
    throw std::invalid_argument(
        "expected_value: imaginary residue " + std::to_string(tr.imag()) +
        " exceeds tolerance (non-Hermitian input?)");
  }
  return tr.real();
}

std::pair<Matrix, double> conservation_defect(const KrausMeasurement& m,
                                              const HermitianOperator& h) {
  require_dims_match(m.dim(), h.dim(), "conservation_defect");
  Matrix sum = Matrix::Zero(h.dim(), h.dim());
  for (const Matrix& op : m.operators()) {
    sum += op.adjoint() * h.matrix() * op;
  }
  Matrix defect = sum - h.matrix();
  const double norm = frobenius_norm(defect);
  return {std::move(defect), norm};
}

double commutation_defect(const KrausMeasurement& m,
                          const HermitianOperator& h) {
  require_dims_match(m.dim(), h.dim(), "commutation_defect");
  double worst = 0.0;
  for (const Matrix& op : m.operators()) {
    worst = std::max(worst, frobenius_norm(commutator(op, h.matrix())));
  }
  return worst;
}

Verdict theorem1_check(const ProjectiveMeasurement& p,
                       const HermitianOperator& h,
                       const ToleranceConfig& tol) {
  tol.validate();
  if (!is_orthogonal_resolution(p.projectors(), tol)) {
    throw std::invalid_argument(
        "theorem1_check: projectors are not an orthogonal resolution of the "
        "identity");
  }
  const KrausMeasurement kraus = p.as_kraus();
  auto [defect_matrix, cons] = conservation_defect(kraus, h);
  const double comm = commutation_defect(kraus, h);

  const bool conserves = cons <= tol.tol_defect;
  const bool commutes = comm <= tol.tol_defect;

  Verdict v;
  v.add_check("theorem1_biconditional", conserves == commutes ? 0.0 : 1.0, 0.5);
  v.metrics["conservation_defect"] = cons;
  v.metrics["commutation_defect"] = comm;
  v.flags["conserves"] = conserves;
  v.flags["commutes"] = commutes;
  if (!conserves) v.witnesses.emplace_back("conservation_defect", defect_matrix);
  return v;
}

}  // namespace waylab
