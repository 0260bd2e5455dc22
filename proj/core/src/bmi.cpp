#include "chrysalis/bmi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace chrysalis::bmi {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Mirrors the upper triangle so the result is symmetric bit for bit.
SymmetricMatrix symmetrize_upper(Matrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j) m(j, i) = m(i, j);
  return SymmetricMatrix(std::move(m));
}

void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want) fail(ErrorCode::DimensionMismatch, what);
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(Matrix m) : m_(std::move(m)) {
  if (!m_.square()) fail(ErrorCode::NotSymmetric, "matrix is not square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (m_(i, j) != m_(j, i)) fail(ErrorCode::NotSymmetric, "matrix is not symmetric");
}

Eigensystem jacobi_eigen(const SymmetricMatrix& sym, double tol) {
  if (!(tol > 0.0)) fail(ErrorCode::DegenerateInput, "Jacobi tolerance must be positive");
  Matrix a = sym.matrix();
  const std::size_t n = a.rows();
  Matrix v = Matrix::identity(n);
  constexpr double eps = std::numeric_limits<double>::epsilon();

  int sweep = 0;
  while (off_diagonal_norm(a) >= tol) {
    if (sweep == kMaxJacobiSweeps) fail(ErrorCode::ConvergenceFailure, "Jacobi did not converge");
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        if (std::abs(apq) < 1e-2 * eps * std::min(std::abs(app), std::abs(aqq))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::abs(theta) > 1e150
                             ? 1.0 / (2.0 * theta)
                             : std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = a(r, p);
            const double arq = a(r, q);
            a(r, p) = a(p, r) = c * arp - s * arq;
            a(r, q) = a(q, r) = s * arp + c * arq;
          }
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  Eigensystem out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  out.sweeps = sweep;
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

bool psd_check(const SymmetricMatrix& m, double tol) {
  if (m.dim() == 0) return true;
  return jacobi_eigen(m).values.front() >= -tol;
}

void BmiProblem::validate() const {
  const std::size_t m = c.size();
  const std::size_t n = f0.dim();
  require_dim(f.size(), m, "BMI needs one F_i per variable");
  require_dim(g.size(), m, "BMI needs an m x m grid of G_jk");
  for (const auto& fi : f) require_dim(fi.dim(), n, "F_i dimension differs from F0");
  for (std::size_t j = 0; j < m; ++j) {
    require_dim(g[j].size(), m, "BMI needs an m x m grid of G_jk");
    for (std::size_t k = 0; k < m; ++k) {
      require_dim(g[j][k].dim(), n, "G_jk dimension differs from F0");
      if (!(g[j][k].matrix() == g[k][j].matrix())) fail(ErrorCode::NotSymmetric, "G_jk must equal G_kj");
    }
  }
}

BmiEvaluation bmi_eval(const BmiProblem& p, const Vector& x) {
  p.validate();
  require_dim(x.size(), p.c.size(), "x has the wrong dimension");
  const std::size_t n = p.f0.dim();
  const std::size_t m = x.size();
  double objective = 0.0;
  for (std::size_t i = 0; i < m; ++i) objective += p.c[i] * x[i];

  Matrix acc = p.f0.matrix();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = r; s < n; ++s) {
      double v = acc(r, s);
      for (std::size_t i = 0; i < m; ++i) v += x[i] * p.f[i](r, s);
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) v += x[j] * x[k] * p.g[j][k](r, s);
      acc(r, s) = v;
    }
  }
  auto constraint = symmetrize_upper(std::move(acc));
  const bool feasible = psd_check(constraint, kFeasibilityTol);
  return {objective, std::move(constraint), feasible};
}

SymmetricMatrix lmi_constraint(const BmiProblem& p, const Vector& x, const SymmetricMatrix& w) {
  p.validate();
  const std::size_t m = x.size();
  require_dim(m, p.c.size(), "x has the wrong dimension");
  require_dim(w.dim(), m, "W has the wrong dimension");
  const std::size_t n = p.f0.dim();
  Matrix acc = p.f0.matrix();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = r; s < n; ++s) {
      double v = acc(r, s);
      for (std::size_t i = 0; i < m; ++i) v += x[i] * p.f[i](r, s);
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) v += w(j, k) * p.g[j][k](r, s);
      acc(r, s) = v;
    }
  }
  return symmetrize_upper(std::move(acc));
}

LmiLift lmi_lift(const Vector& x, const SymmetricMatrix& w) {
  const std::size_t m = x.size();
  require_dim(w.dim(), m, "W and x dimensions differ");
  Matrix block(m + 1, m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) block(i, j) = w(i, j);
    block(i, m) = block(m, i) = x[i];
  }
  block(m, m) = 1.0;
  SymmetricMatrix sym(std::move(block));
  const bool feasible = psd_check(sym, kFeasibilityTol);
  return {std::move(sym), feasible};
}

double operator_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  const auto gram = symmetrize_upper(m.transpose() * m);
  return std::sqrt(std::max(0.0, jacobi_eigen(gram).values.back()));
}

double bilinear_value(const BilinearInstance& inst, const Vector& x, const Vector& y) {
  require_dim(x.size(), inst.a.rows(), "x does not match the instance rows");
  require_dim(y.size(), inst.a.cols(), "y does not match the instance columns");
  for (double v : x)
    if (std::abs(v) > 1.0) fail(ErrorCode::InfeasiblePoint, "|x_i| must be <= 1");
  for (double v : y)
    if (std::abs(v) > 1.0) fail(ErrorCode::InfeasiblePoint, "|y_j| must be <= 1");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += inst.a(i, j) * x[i] * y[j];
  return s;
}

namespace {

Vector best_response_y(const Matrix& a, const Vector& x) {
  Vector y(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) col += a(i, j) * x[i];
    y[j] = col < 0.0 ? -1.0 : 1.0;
  }
  return y;
}

Vector best_response_x(const Matrix& a, const Vector& y) {
  Vector x(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) row += a(i, j) * y[j];
    x[i] = row < 0.0 ? -1.0 : 1.0;
  }
  return x;
}

}  // namespace

BilinearOptimum bilinear_max_pm1(const BilinearInstance& inst) {
  const std::size_t m = inst.a.rows();
  const std::size_t n = inst.a.cols();
  if (m > kMaxBruteForceSide || n > kMaxBruteForceSide) fail(ErrorCode::TooLarge, "brute force limited to 20 x 20");
  BilinearOptimum best{-std::numeric_limits<double>::infinity(), {}, {}};
  Vector x(m);
  const std::uint64_t total = std::uint64_t{1} << m;
  // Counting order with bit (m - 1 - i) set meaning x_i = +1 is lexicographic with -1 < +1.
  for (std::uint64_t code = 0; code < total; ++code) {
    for (std::size_t i = 0; i < m; ++i) x[i] = (code >> (m - 1 - i)) & 1U ? 1.0 : -1.0;
    double value = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double col = 0.0;
      for (std::size_t i = 0; i < m; ++i) col += inst.a(i, j) * x[i];
      value += std::abs(col);
    }
    if (value > best.value) best = {value, x, {}};
  }
  best.y = best_response_y(inst.a, best.x);
  return best;
}

BilinearOptimum bilinear_local_search(const BilinearInstance& inst, Vector start, int max_rounds) {
  require_dim(start.size(), inst.a.rows(), "start point does not match the instance rows");
  for (double& v : start) v = v < 0.0 ? -1.0 : 1.0;
  Vector y = best_response_y(inst.a, start);
  double value = bilinear_value(inst, start, y);
  for (int round = 0; round < max_rounds; ++round) {
    Vector x2 = best_response_x(inst.a, y);
    Vector y2 = best_response_y(inst.a, x2);
    const double v2 = bilinear_value(inst, x2, y2);
    if (v2 <= value) break;
    start = std::move(x2);
    y = std::move(y2);
    value = v2;
  }
  return {value, std::move(start), std::move(y)};
}

QuadraticForm::QuadraticForm(const BilinearInstance& inst) : a_(inst.a), symmetric_(true) {
  if (!a_.square()) fail(ErrorCode::DimensionMismatch, "quadratic form needs a square instance");
  for (std::size_t i = 0; i < a_.rows(); ++i)
    for (std::size_t j = i + 1; j < a_.cols(); ++j)
      if (a_(i, j) != a_(j, i)) symmetric_ = false;
}

double QuadraticForm::operator()(const Vector& x) const {
  require_dim(x.size(), a_.rows(), "x has the wrong dimension");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) s += a_(i, j) * x[i] * x[j];
  return s;
}

Matrix QuadraticForm::symmetric_part() const { return 0.5 * (a_ + a_.transpose()); }

double QuadraticForm::polarize(const Vector& x, const Vector& y) const {
  require_dim(x.size(), y.size(), "polarization needs equal dimensions");
  Vector sum(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) sum[i] = x[i] + y[i];
  return 0.5 * ((*this)(sum) - (*this)(x) - (*this)(y));
}

std::optional<BilinearInstance> QuadraticForm::reconstruct_bilinear() const {
  if (!symmetric_) return std::nullopt;
  return BilinearInstance{a_};
}

ProjectionMatrix projection_from_basis(const std::vector<Vector>& basis) {
  if (basis.empty()) fail(ErrorCode::DegenerateInput, "projection needs at least one basis vector");
  const std::size_t n = basis.front().size();
  std::vector<Vector> q;
  for (const auto& v : basis) {
    require_dim(v.size(), n, "basis vectors differ in length");
    Vector u = v;
    const double n0 = std::sqrt(inner(v, v));
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : q) {
        const double c = inner(e, u);
        for (std::size_t i = 0; i < n; ++i) u[i] -= c * e[i];
      }
    }
    const double nu = std::sqrt(inner(u, u));
    if (n0 == 0.0 || nu <= 1e-10 * n0) fail(ErrorCode::RankDeficient, "basis vectors are dependent");
    for (double& x : u) x /= nu;
    q.push_back(std::move(u));
  }
  Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (const auto& e : q) s += e[i] * e[j];
      p(i, j) = s;
    }
  return symmetrize_upper(std::move(p));
}

Vector apply(const Matrix& m, const Vector& v) {
  require_dim(v.size(), m.cols(), "vector does not match matrix columns");
  Vector out(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

double inner(const Vector& a, const Vector& b) {
  require_dim(a.size(), b.size(), "inner product of unequal lengths");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace chrysalis::bmi
