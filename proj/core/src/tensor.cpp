#include "chrysalis/tensor.hpp"

#include <cmath>

namespace chrysalis::tensor {

using lattice::GaussianInt;

ExactMatrix2 pauli(int i) {
  switch (i) {
    case 1: return {{GaussianInt{0}, GaussianInt{1}}, {GaussianInt{1}, GaussianInt{0}}};
    case 2: return {{GaussianInt{0}, GaussianInt{0, -1}}, {GaussianInt{0, 1}, GaussianInt{0}}};
    case 3: return {{GaussianInt{1}, GaussianInt{0}}, {GaussianInt{0}, GaussianInt{-1}}};
    default: fail(ErrorCode::IndexOutOfRange, "Pauli label must be 1, 2 or 3");
  }
}

ComplexMatrix pauli_numeric(int i) {
  const auto p = pauli(i);
  ComplexMatrix m(2, 2);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      m(r, c) = {static_cast<double>(p(r, c).a), static_cast<double>(p(r, c).b)};
  return m;
}

int kronecker(int i, int j) { return i == j ? 1 : 0; }

bool pauli_identity_check(int i, int j) {
  const auto si = pauli(i);
  const auto sj = pauli(j);
  const auto id = ExactMatrix2::identity(2);

  if (!(si * si == id)) return false;
  const GaussianInt two_delta{2 * kronecker(i, j)};
  if (!(si * sj + sj * si == two_delta * id)) return false;

  auto expected = GaussianInt{kronecker(i, j)} * id;
  for (int k = 1; k <= 3; ++k) {
    const int idx[] = {i - 1, j - 1, k - 1};
    const int eps = levi_civita(idx);
    if (eps != 0) expected = expected + GaussianInt{0, eps} * pauli(k);
  }
  return si * sj == expected;
}

int levi_civita(std::span<const int> p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 0 || v >= n) fail(ErrorCode::IndexOutOfRange, "permutation index out of range");
    if (seen[v]) return 0;
    seen[v] = true;
  }
  // Parity from the cycle decomposition: a k-cycle is k - 1 transpositions.
  std::vector<bool> visited(n, false);
  int transpositions = 0;
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    int len = 0;
    for (int at = start; !visited[at]; at = p[at]) {
      visited[at] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

int levi_civita4(std::span<const int> p, IndexPosition pos) {
  if (p.size() != 4) fail(ErrorCode::IndexOutOfRange, "rank-4 symbol needs four indices");
  const int upper = levi_civita(p);
  return pos == IndexPosition::Upper ? upper : -upper;
}

double weighted_epsilon(std::span<const int> p, double g_det, IndexPosition pos) {
  if (g_det == 0.0) fail(ErrorCode::SingularMetric, "metric determinant is zero");
  const double root = std::sqrt(std::abs(g_det));
  const int sign = levi_civita(p);
  return pos == IndexPosition::Lower ? root * sign : sign / root;
}

Matrix orbit_transform(const Matrix& t, const Matrix& a) {
  if (!t.square() || !a.square() || t.rows() != a.rows()) {
    fail(ErrorCode::DimensionMismatch, "orbit transform needs conformable square matrices");
  }
  const double det = determinant(a);
  // A T A^T is the double contraction; scale by det(A).
  return det * (a * t * a.transpose());
}

bool conj_det_check(const ComplexMatrix& m) {
  if (!m.square()) fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  ComplexMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = std::conj(m(i, j));
  const auto lhs = determinant(c);
  const auto rhs = std::conj(determinant(m));
  return std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs));
}

double epsilon_of_vectors(const std::vector<std::vector<double>>& vectors) {
  const std::size_t n = vectors.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (vectors[i].size() != n) fail(ErrorCode::DimensionMismatch, "need n vectors of length n");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = vectors[i][j];
  }
  return determinant(m);
}

}  // namespace chrysalis::tensor
