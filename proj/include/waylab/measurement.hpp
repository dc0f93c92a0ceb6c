#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "waylab/operators.hpp"
#include "waylab/verdict.hpp"

namespace waylab {

/// Positive semidefinite, trace-1 operator (a mixed state ρ).
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m, const ToleranceConfig& tol = {});

  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Matrix m_;
};

/// A measurement {Mᵢ}. Construction checks structure only (nonempty, square,
/// equal dims, finite entries); completeness Σ MᵢᵀMᵢ = I is reported by
/// validate() and required by the operations that assume a valid measurement.
class KrausMeasurement {
 public:
  explicit KrausMeasurement(std::vector<Matrix> operators);

  const std::vector<Matrix>& operators() const { return ops_; }
  Eigen::Index dim() const { return ops_[0].rows(); }
  std::size_t size() const { return ops_.size(); }

  /// ‖Σ MᵢᵀMᵢ − I‖_F
  double completeness_defect() const;

 private:
  std::vector<Matrix> ops_;
};

/// Measurement whose operators are mutually orthogonal projectors summing to
/// the identity.
class ProjectiveMeasurement {
 public:
  explicit ProjectiveMeasurement(std::vector<Projector> projectors);

  const std::vector<Projector>& projectors() const { return ps_; }
  Eigen::Index dim() const { return ps_[0].dim(); }
  std::size_t size() const { return ps_.size(); }

  KrausMeasurement as_kraus() const;

 private:
  std::vector<Projector> ps_;
};

/// Outcome probabilities p(i) = tr[Mᵢ ρ Mᵢᵀ] and the conditional
/// post-measurement states Mᵢ ρ Mᵢᵀ / p(i). A conditional state is absent
/// where p(i) < tol_defect (normalizing would divide by near-zero).
struct OutcomeDistribution {
  std::vector<double> probabilities;
  std::vector<std::optional<DensityMatrix>> conditional_states;
};

/// Completeness verdict: check "completeness" with defect ‖Σ MᵢᵀMᵢ − I‖_F
/// against tol_projector.
Verdict validate(const KrausMeasurement& m, const ToleranceConfig& tol = {});

OutcomeDistribution outcome_distribution(const KrausMeasurement& m,
                                         const DensityMatrix& rho,
                                         const ToleranceConfig& tol = {});

/// Σᵢ Mᵢ ρ Mᵢᵀ — the post-measurement state when the result is unknown.
DensityMatrix unconditional_post_state(const KrausMeasurement& m,
                                       const DensityMatrix& rho,
                                       const ToleranceConfig& tol = {});

/// tr[ρH]. Throws if the imaginary residue exceeds tol_defect.
double expected_value(const HermitianOperator& h, const DensityMatrix& rho,
                      const ToleranceConfig& tol = {});

/// D = Σᵢ MᵢᵀHMᵢ − H and ‖D‖_F. The measurement conserves the quantity H
/// iff the defect vanishes; equivalently, the expected value of H is
/// unchanged by the unconditional post-measurement map for every state.
std::pair<Matrix, double> conservation_defect(const KrausMeasurement& m,
                                              const HermitianOperator& h);

/// maxᵢ ‖[Mᵢ, H]‖_F
double commutation_defect(const KrausMeasurement& m,
                          const HermitianOperator& h);

/// For a projective measurement, conservation of H and commutation of every
/// projector with H are equivalent. Evaluates both defects and passes iff
/// they fall on the same side of tol_defect. Metrics carry both defect norms;
/// flags carry `conserves` and `commutes`.
Verdict theorem1_check(const ProjectiveMeasurement& p,
                       const HermitianOperator& h,
                       const ToleranceConfig& tol = {});

}  // namespace waylab
