#pragma once

// Pauli matrices, Kronecker delta, Levi-Civita symbols and the tensor-density
// transformation rule.

#include <complex>
#include <span>
#include <vector>

#include "chrysalis/lattice.hpp"
#include "chrysalis/matrix.hpp"

namespace chrysalis::tensor {

/// 2x2 matrix over Z[i]; Pauli algebra is checked exactly in it.
using ExactMatrix2 = DenseMatrix<lattice::GaussianInt>;

/// Pauli label 1, 2 or 3; anything else throws IndexOutOfRange.
ExactMatrix2 pauli(int i);
ComplexMatrix pauli_numeric(int i);

/// sigma_i^2 = I, {sigma_i, sigma_j} = 2 delta_ij I and
/// sigma_i sigma_j = delta_ij I + i eps_ijk sigma_k, all in exact arithmetic.
bool pauli_identity_check(int i, int j);

int kronecker(int i, int j);

/// +1 / -1 for an even / odd permutation of (0, ..., n-1), 0 when any index
/// repeats. Out-of-range indices throw IndexOutOfRange.
int levi_civita(std::span<const int> p);

enum class IndexPosition { Upper, Lower };

/// Rank-4 symbol with the sign convention eps_{abcd} = -eps^{abcd};
/// the upper-index symbol is the plain permutation sign.
int levi_civita4(std::span<const int> p, IndexPosition pos);

/// sqrt|g| [p] (lower) or [p] / sqrt|g| (upper). Throws SingularMetric on g = 0.
double weighted_epsilon(std::span<const int> p, double g_det, IndexPosition pos);

/// det(A) sum_kl A_ik A_jl T_kl.
Matrix orbit_transform(const Matrix& t, const Matrix& a);

/// det(conj M) == conj(det M) within 1e-12 relative.
bool conj_det_check(const ComplexMatrix& m);

/// eps(x_1, ..., x_n): determinant of the matrix whose rows are the vectors.
double epsilon_of_vectors(const std::vector<std::vector<double>>& vectors);

}  // namespace chrysalis::tensor
