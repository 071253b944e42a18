#pragma once

#include <Eigen/Dense>
#include <limits>
#include <vector>

#include "dea/errors.hpp"

namespace dea {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, Equal, GreaterEqual };
enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Dense linear program:  optimize cost.x  subject to  matrix * x (rel) rhs,
/// lower <= x <= upper. Empty `lower` means all zeros; +inf entries in
/// `upper` mean no upper bound (empty `upper` means none at all).
struct LpProblem {
    Sense sense = Sense::Minimize;
    Eigen::VectorXd cost;
    Eigen::MatrixXd matrix;
    std::vector<Relation> relations;
    Eigen::VectorXd rhs;
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;

    int num_vars() const { return static_cast<int>(cost.size()); }
    int num_rows() const { return static_cast<int>(rhs.size()); }

    /// Throws ValidationError on dimension mismatch, non-finite entries,
    /// or a lower bound above its upper bound.
    void validate() const;
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Eigen::VectorXd x;                 // empty unless status == Optimal
    double objective = std::numeric_limits<double>::quiet_NaN();
    int iterations = 0;

    /// Reduced costs of the internal minimization at the final basis, one
    /// per standard-form column (structural first). At an optimum all are
    /// >= -optimality_tol; basic columns are ~0.
    Eigen::VectorXd reduced_costs;
    /// Worst violation of the original rows and bounds at x.
    double max_residual = 0.0;

    bool optimal() const { return status == LpStatus::Optimal; }
};

struct LpOptions {
    double feasibility_tol = 1e-9;
    double optimality_tol = 1e-9;
    int max_iterations = 0;  // 0 = derived from problem size
};

/// Two-phase dense tableau simplex with Bland's anti-cycling rule (ties in
/// the entering choice broken by lowest column index, leaving ties by
/// lowest basic variable index).
LpSolution solve(const LpProblem& problem, const LpOptions& options = {});

/// Optimizes `secondary` over the set of `primary` optima: solves for the
/// primary cost, pins primary.x to its optimum with an extra equality row,
/// then solves for the secondary cost under the problem's sense. Infeasible
/// or unbounded stages propagate.
LpSolution solve_lexicographic(const LpProblem& problem,
                               const Eigen::VectorXd& primary,
                               const Eigen::VectorXd& secondary,
                               const LpOptions& options = {});

} // namespace dea
