#pragma once

// BMI problems and their LMI relaxation, symmetric eigen-machinery by cyclic
// Jacobi rotations, operator norms, orthogonal projectors, and a desk-scale
// bilinear maximization oracle.

#include <cstdint>
#include <optional>
#include <vector>

#include "chrysalis/matrix.hpp"

namespace chrysalis::bmi {

using Vector = std::vector<double>;

/// Square matrix with exactly symmetric entries; construction throws NotSymmetric otherwise.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(Matrix m);
  static SymmetricMatrix zero(std::size_t n) { return SymmetricMatrix(Matrix(n, n)); }

  std::size_t dim() const { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

struct Eigensystem {
  Vector values;    // ascending
  Matrix vectors;   // column k pairs with values[k]
  int sweeps = 0;
};

inline constexpr int kMaxJacobiSweeps = 100;
inline constexpr double kFeasibilityTol = 1e-9;

/// Cyclic-by-rows Jacobi sweeps until the off-diagonal Frobenius norm drops
/// below tol. Throws ConvergenceFailure after kMaxJacobiSweeps.
Eigensystem jacobi_eigen(const SymmetricMatrix& m, double tol = 1e-13);

bool psd_check(const SymmetricMatrix& m, double tol = kFeasibilityTol);

struct BmiProblem {
  Vector c;
  SymmetricMatrix f0;
  std::vector<SymmetricMatrix> f;            // m matrices
  std::vector<std::vector<SymmetricMatrix>> g;  // m x m grid, g[j][k] == g[k][j]

  /// Throws DimensionMismatch or NotSymmetric when the shapes disagree.
  void validate() const;
};

struct BmiEvaluation {
  double objective;
  SymmetricMatrix constraint;
  bool feasible;
};

/// c^T x and F0 + sum x_i F_i + sum x_j x_k G_jk.
BmiEvaluation bmi_eval(const BmiProblem& p, const Vector& x);

/// The relaxed constraint F0 + sum x_i F_i + sum W_jk G_jk with w_jk replaced by a free W.
SymmetricMatrix lmi_constraint(const BmiProblem& p, const Vector& x, const SymmetricMatrix& w);

struct LmiLift {
  SymmetricMatrix block;  // [[W, x], [x^T, 1]]
  bool feasible;
};

LmiLift lmi_lift(const Vector& x, const SymmetricMatrix& w);

/// sqrt(lambda_max(M^T M)).
double operator_norm(const Matrix& m);

struct BilinearInstance {
  Matrix a;  // m x n
};

/// sum a_ij x_i y_j; throws InfeasiblePoint when any |x_i| or |y_j| exceeds 1.
double bilinear_value(const BilinearInstance& inst, const Vector& x, const Vector& y);

struct BilinearOptimum {
  double value;
  Vector x;
  Vector y;
};

inline constexpr std::size_t kMaxBruteForceSide = 20;

/// Exact maximum over x in {-1, 1}^m with y_j = sign(sum_i a_ij x_i). Ties go
/// to the lexicographically smallest x (with -1 < +1). Throws TooLarge past 20.
BilinearOptimum bilinear_max_pm1(const BilinearInstance& inst);

/// Alternating +-1 local search from `start`; a heuristic lower bound.
BilinearOptimum bilinear_local_search(const BilinearInstance& inst, Vector start, int max_rounds = 100);

/// Quadratic form Q(x) = B(x, x) of a square bilinear form. Only the symmetric
/// part (A + A^T) / 2 is determined by Q.
class QuadraticForm {
 public:
  explicit QuadraticForm(const BilinearInstance& inst);

  double operator()(const Vector& x) const;
  bool symmetric() const { return symmetric_; }
  Matrix symmetric_part() const;
  /// B(x, y) = (Q(x + y) - Q(x) - Q(y)) / 2 on the symmetric part.
  double polarize(const Vector& x, const Vector& y) const;
  /// The generating form, available only when it is symmetric (otherwise Q
  /// cannot determine it).
  std::optional<BilinearInstance> reconstruct_bilinear() const;

 private:
  Matrix a_;
  bool symmetric_;
};

using ProjectionMatrix = SymmetricMatrix;

/// Orthogonal projector onto span(basis) by modified Gram-Schmidt. Throws
/// RankDeficient on dependent input.
ProjectionMatrix projection_from_basis(const std::vector<Vector>& basis);

Vector apply(const Matrix& m, const Vector& v);
double inner(const Vector& a, const Vector& b);

}  // namespace chrysalis::bmi
