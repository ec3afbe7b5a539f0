#include "tfde/preconditioners.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "tfde/errors.hpp"

namespace tfde {

std::vector<std::size_t> interpolation_nodes(std::size_t n, std::size_t l,
                                             NodeStrategy strategy) {
  if (l < 2 || l > n) {
    throw DomainError("interpolation node count l=" + std::to_string(l) +
                      " must satisfy 2 <= l <= N=" + std::to_string(n));
  }
  std::vector<std::size_t> idx(l);
  switch (strategy) {
    case NodeStrategy::UniformIndex: {
      const double step = static_cast<double>(n - 1) / static_cast<double>(l - 1);
      for (std::size_t s = 0; s < l; ++s)
        idx[s] = static_cast<std::size_t>(std::lround(step * static_cast<double>(s)));
      idx.back() = n - 1;
      break;
    }
  }
  return idx;
}

std::vector<std::vector<double>> hat_functions(std::span<const double> grid,
                                               std::span<const std::size_t> nodes) {
  const std::size_t n = grid.size();
  const std::size_t l = nodes.size();
  if (l < 2 || nodes.front() != 0 || nodes.back() != n - 1)
    throw DomainError("hat_functions: nodes must start at x_1 and end at x_N");
  for (std::size_t s = 1; s < l; ++s) {
    if (nodes[s] <= nodes[s - 1])
      throw DomainError("hat_functions: nodes must be strictly increasing");
  }
  std::vector<std::vector<double>> phi(l, std::vector<double>(n, 0.0));
  for (std::size_t s = 0; s + 1 < l; ++s) {
    const double x0 = grid[nodes[s]];
    const double x1 = grid[nodes[s + 1]];
    for (std::size_t i = nodes[s]; i <= nodes[s + 1]; ++i) {
      const double t = (grid[i] - x0) / (x1 - x0);
      // Shared endpoints are written by both intervals with the same value.
      phi[s][i] = (i == nodes[s + 1]) ? 0.0 : 1.0 - t;
      phi[s + 1][i] = (i == nodes[s]) ? 0.0 : t;
    }
  }
  for (std::size_t s = 0; s < l; ++s) phi[s][nodes[s]] = 1.0;
  return phi;
}

// ---------------------------------------------------------------------------
// TAI

TaiPreconditioner build_tai(const DiscreteSystem& sys, std::size_t l,
                            NodeStrategy strategy) {
  return build_tai(sys, interpolation_nodes(sys.size(), l, strategy));
}

TaiPreconditioner build_tai(const DiscreteSystem& sys,
                            std::vector<std::size_t> node_indices) {
  const std::size_t n = sys.size();
  if (node_indices.size() < 2 || node_indices.size() > n)
    throw DomainError("build_tai: need 2 <= l <= N");
  const auto lambda = sys.tau_of_G.eigenvalues();

  TaiPreconditioner p{n, std::move(node_indices), {}, {}, {}, SineTransformPlan(n)};
  p.phi_diagonals = hat_functions(sys.grid, p.node_indices);
  for (std::size_t idx : p.node_indices) {
    p.nodes.push_back(sys.grid[idx]);
    const double d = sys.D[idx];
    std::vector<double> q(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double denom = 1.0 + lambda[k] * d;
      if (std::abs(denom) < kSingularShiftTol)
        throw SingularShiftError("build_tai: singular node at x_" + std::to_string(idx + 1));
      q[k] = 1.0 / denom;
    }
    p.inv_eig_diagonals.push_back(std::move(q));
  }
  return p;
}

std::vector<double> TaiPreconditioner::apply(std::span<const double> v) const {
  require_length(v.size(), n, "apply_tai");
  const auto w = plan.apply(v);
  std::vector<double> out(n, 0.0), scaled(n), back(n);
  for (std::size_t s = 0; s < l(); ++s) {
    const auto& q = inv_eig_diagonals[s];
    const auto& phi = phi_diagonals[s];
    for (std::size_t k = 0; k < n; ++k) scaled[k] = q[k] * w[k];
    plan.apply(scaled, back);
    for (std::size_t i = 0; i < n; ++i) out[i] += phi[i] * back[i];
  }
  return out;
}

std::vector<double> apply_tai(const TaiPreconditioner& p, std::span<const double> v) {
  return p.apply(v);
}

// ---------------------------------------------------------------------------
// CAI

CaiPreconditioner build_cai(const DiscreteSystem& sys, std::size_t l,
                            NodeStrategy strategy) {
  const std::size_t n = sys.size();
  const auto circ = strang_circulant(sys.G);
  const auto sigma = circ.spectrum();

  CaiPreconditioner p{n, interpolation_nodes(n, l, strategy), {}, {}, {}, circ.plan()};
  p.phi_diagonals = hat_functions(sys.grid, p.node_indices);
  for (std::size_t idx : p.node_indices) {
    p.nodes.push_back(sys.grid[idx]);
    const double d = sys.D[idx];
    std::vector<Complex> q(n);
    for (std::size_t k = 0; k < n; ++k) {
      const Complex denom = 1.0 + sigma[k] * d;
      if (std::abs(denom) < kSingularShiftTol)
        throw SingularShiftError("build_cai: singular node at x_" + std::to_string(idx + 1));
      q[k] = 1.0 / denom;
    }
    p.inv_eig_diagonals.push_back(std::move(q));
  }
  return p;
}

std::vector<double> CaiPreconditioner::apply(std::span<const double> v) const {
  require_length(v.size(), n, "apply_cai");
  const std::vector<Complex> vc(v.begin(), v.end());
  const auto w = plan.forward(vc);
  std::vector<double> out(n, 0.0);
  std::vector<Complex> scaled(n), back(n);
  for (std::size_t s = 0; s < l(); ++s) {
    const auto& q = inv_eig_diagonals[s];
    const auto& phi = phi_diagonals[s];
    for (std::size_t k = 0; k < n; ++k) scaled[k] = q[k] * w[k];
    plan.inverse(scaled, back);
    for (std::size_t i = 0; i < n; ++i) out[i] += phi[i] * back[i].real();
  }
  return out;
}

std::vector<double> apply_cai(const CaiPreconditioner& p, std::span<const double> v) {
  return p.apply(v);
}

// ---------------------------------------------------------------------------
// Row-wise references

namespace {

void require_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw RefusalError(std::string(what) + ": reference operation limited to N <= " +
                       std::to_string(cap) + ", got N=" + std::to_string(n));
  }
}

}  // namespace

std::vector<double> apply_p2_rowwise(const DiscreteSystem& sys, std::span<const double> v,
                                     std::size_t cap) {
  const std::size_t n = sys.size();
  require_cap(n, cap, "apply_p2_rowwise");
  require_length(v.size(), n, "apply_p2_rowwise");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = tau_shifted_solve(sys.tau_of_G, sys.D[i], v)[i];
  return out;
}

DenseMatrix p1_inverse_matrix(const DiscreteSystem& sys, std::size_t cap) {
  const std::size_t n = sys.size();
  require_cap(n, cap, "p1_inverse_matrix");
  const auto N = static_cast<Eigen::Index>(n);
  const auto c = sys.G.first_column();
  Eigen::MatrixXd G(N, N);
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index j = 0; j < N; ++j) G(i, j) = c[static_cast<std::size_t>(std::abs(i - j))];

  DenseMatrix out(n, n);
  for (Eigen::Index i = 0; i < N; ++i) {
    // Row i of K_i^-1 solves K_i^T z = e_i.
    const Eigen::MatrixXd Kt =
        (Eigen::MatrixXd::Identity(N, N) + sys.D[static_cast<std::size_t>(i)] * G).transpose();
    const Eigen::VectorXd z = Kt.partialPivLu().solve(Eigen::VectorXd::Unit(N, i));
    for (Eigen::Index j = 0; j < N; ++j) out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = z(j);
  }
  return out;
}

std::vector<double> apply_p1_rowwise(const DiscreteSystem& sys, std::span<const double> v,
                                     std::size_t cap) {
  require_cap(sys.size(), cap, "apply_p1_rowwise");
  require_length(v.size(), sys.size(), "apply_p1_rowwise");
  return p1_inverse_matrix(sys, cap).multiply(v);
}

DenseMatrix dense_operator(std::size_t n, const std::function<std::vector<double>(
                                              std::span<const double>)>& op) {
  DenseMatrix m(n, n);
  std::vector<double> e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    const auto col = op(e);
    require_length(col.size(), n, "dense_operator");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
    e[j] = 0.0;
  }
  return m;
}

}  // namespace tfde
