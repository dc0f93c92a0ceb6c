#include "waylab/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace waylab {

bool all_finite(const Matrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Complex& z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

void require_finite(const Matrix& m, const char* what) {
  if (m.rows() < 1 || m.cols() < 1) {
    throw std::invalid_argument(std::string(what) + ": empty matrix");
  }
  if (!all_finite(m)) {
    throw std::invalid_argument(std::string(what) +
                                ": non-finite entry (NaN or Inf)");
  }
}

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix is " +
                                std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected square");
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch " +
                                std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  }
}

void require_factor_dim(Eigen::Index dim, const char* what,
                        Eigen::Index limit) {
  if (dim < 1) {
    throw std::invalid_argument(std::string(what) + ": dimension must be >= 1");
  }
  if (dim > limit) {
    throw std::invalid_argument(std::string(what) + ": dimension " +
                                std::to_string(dim) + " exceeds factor limit " +
                                std::to_string(limit));
  }
}

double frobenius_norm(const Matrix& m) { return m.norm(); }

double operator_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  require_finite(a, "tensor_product lhs");
  require_finite(b, "tensor_product rhs");
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector tensor_product(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  require_square(a, "commutator lhs");
  require_square(b, "commutator rhs");
  require_same_shape(a, b, "commutator");
  return a * b - b * a;
}

}  // namespace waylab
