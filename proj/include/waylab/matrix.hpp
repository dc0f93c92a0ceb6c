#pragma once

#include <complex>

#include <Eigen/Dense>

namespace waylab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// All operators are dense; each tensor factor space is capped at this
// dimension (the tensor product itself may be larger).
inline constexpr Eigen::Index kMaxFactorDim = 64;

bool all_finite(const Matrix& m);

void require_finite(const Matrix& m, const char* what);
void require_square(const Matrix& m, const char* what);
void require_same_shape(const Matrix& a, const Matrix& b, const char* what);
void require_factor_dim(Eigen::Index dim, const char* what,
                        Eigen::Index limit = kMaxFactorDim);

double frobenius_norm(const Matrix& m);

/// Largest singular value.
double operator_norm(const Matrix& m);

/// Kronecker product. Index convention: basis pair (i, k) of the factors
/// maps to flat index i * dim(b) + k, so (a ⊗ b)[(i,k),(j,l)] = a(i,j) b(k,l).
Matrix tensor_product(const Matrix& a, const Matrix& b);

/// Kronecker product of column vectors under the same flat-index convention.
Vector tensor_product(const Vector& a, const Vector& b);

/// ab - ba. Throws std::invalid_argument on dimension mismatch.
Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace waylab
