#include "tfde/time_march.hpp"

#include <algorithm>
#include <numeric>

#include "tfde/errors.hpp"

namespace tfde {

double MarchResult::average_iterations() const {
  if (steps.empty()) return 0.0;
  double total = 0.0;
  for (const auto& s : steps) total += static_cast<double>(s.iterations);
  return total / static_cast<double>(steps.size());
}

MarchResult time_march(const ProblemConfig& config, const DiscreteSystem& sys,
                       const LinearSolver& solver, const StepObserver& observer,
                       const MarchOptions& options) {
  config.validate();
  const std::size_t n = sys.size();
  require_length(n, config.N, "time_march system order");
  const double dt = config.dt();

  MarchResult out;
  out.solution.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.solution[i] = config.initial(sys.grid[i]);
  out.steps.reserve(config.M);

  const std::vector<double> zero(n, 0.0);
  std::vector<double> f_half(n);
  for (std::size_t j = 0; j < config.M; ++j) {
    const double t_half = (static_cast<double>(j) + 0.5) * dt;
    for (std::size_t i = 0; i < n; ++i) f_half[i] = config.source(sys.grid[i], t_half);
    const auto rhs = step_rhs(sys, out.solution, f_half, dt);

    auto solved = solver(rhs, zero);
    out.steps.push_back(solved.stats);
    if (!solved.stats.converged) {
      if (options.throw_on_failure)
        throw MarchFailure(j, "linear solver did not converge");
      out.completed = false;
      return out;
    }
    out.solution = std::move(solved.x);
    if (observer)
      observer(j, static_cast<double>(j + 1) * dt, out.solution, out.steps.back());
  }
  return out;
}

LinearSolver gmres_solver(const DiscreteSystem& sys, LinearOperator apply_Pinv,
                          GmresConfig cfg) {
  // D = 0 makes A the identity; return rhs untouched so u is carried bit for bit.
  const bool identity = std::all_of(sys.D.begin(), sys.D.end(), [](double d) { return d == 0.0; });
  if (identity) {
    return [](std::span<const double> rhs, std::span<const double>) {
      GmresResult r;
      r.x.assign(rhs.begin(), rhs.end());
      r.stats.converged = true;
      return r;
    };
  }
  return [&sys, P = std::move(apply_Pinv), cfg](std::span<const double> rhs,
                                                std::span<const double> x0) {
    LinearOperator A = [&sys](std::span<const double> v) { return apply_A(sys, v); };
    return gmres(A, P, rhs, x0, cfg);
  };
}

}  // namespace tfde
