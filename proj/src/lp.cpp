#include "dea/lp.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace dea {

namespace {

bool all_finite(const Eigen::Ref<const Eigen::MatrixXd>& m) {
    return m.array().isFinite().all();
}

Relation flipped(Relation r) {
    switch (r) {
    case Relation::LessEqual: return Relation::GreaterEqual;
    case Relation::GreaterEqual: return Relation::LessEqual;
    default: return Relation::Equal;
    }
}

// Equality standard form  min c.xs  s.t.  a xs = b, xs >= 0, b >= 0,
// with x = xs.head(n_struct) + shift.
struct StandardForm {
    Eigen::MatrixXd a;
    Eigen::VectorXd b;
    Eigen::VectorXd shift;
    int n_struct = 0;
    std::vector<int> slack_basis;       // row -> slack column, -1 if none
    std::vector<int> artificial_rows;   // rows lacking a natural basic column
};

StandardForm to_standard_form(const LpProblem& p) {
    const int n = p.num_vars();
    const int r = p.num_rows();

    Eigen::VectorXd shift =
        p.lower.size() ? Eigen::VectorXd(p.lower) : Eigen::VectorXd::Zero(n);

    // Finite upper bounds become explicit rows; problem sizes in this
    // domain keep the dense tableau small either way.
    std::vector<int> bounded_cols;
    if (p.upper.size()) {
        for (int j = 0; j < n; ++j)
            if (std::isfinite(p.upper[j])) bounded_cols.push_back(j);
    }
    const int rows = r + static_cast<int>(bounded_cols.size());

    Eigen::MatrixXd a0(rows, n);
    Eigen::VectorXd b0(rows);
    std::vector<Relation> rel(rows);
    for (int i = 0; i < r; ++i) {
        a0.row(i) = p.matrix.row(i);
        b0[i] = p.rhs[i] - p.matrix.row(i).dot(shift);
        rel[i] = p.relations[i];
    }
    for (int k = 0; k < static_cast<int>(bounded_cols.size()); ++k) {
        const int i = r + k;
        const int j = bounded_cols[k];
        a0.row(i).setZero();
        a0(i, j) = 1.0;
        b0[i] = p.upper[j] - shift[j];
        rel[i] = Relation::LessEqual;
    }

    int n_extra = 0;
    for (int i = 0; i < rows; ++i) {
        if (b0[i] < 0.0) {
            a0.row(i) = -a0.row(i);
            b0[i] = -b0[i];
            rel[i] = flipped(rel[i]);
        }
        if (rel[i] != Relation::Equal) ++n_extra;
    }

    StandardForm sf;
    sf.n_struct = n;
    sf.shift = std::move(shift);
    sf.b = std::move(b0);
    sf.a.setZero(rows, n + n_extra);
    sf.a.leftCols(n) = a0;
    sf.slack_basis.assign(rows, -1);
    int col = n;
    for (int i = 0; i < rows; ++i) {
        switch (rel[i]) {
        case Relation::LessEqual:
            sf.a(i, col) = 1.0;
            sf.slack_basis[i] = col++;
            break;
        case Relation::GreaterEqual:
            sf.a(i, col++) = -1.0;
            sf.artificial_rows.push_back(i);
            break;
        case Relation::Equal:
            sf.artificial_rows.push_back(i);
            break;
        }
    }
    return sf;
}

// Dense tableau over a fixed column set; last column holds the rhs.
// `obj` carries the reduced-cost row of the current phase.
class Tableau {
public:
    Tableau(Eigen::MatrixXd body, Eigen::VectorXd rhs, std::vector<int> basis)
        : rows_(static_cast<int>(rhs.size())),
          cols_(static_cast<int>(body.cols())),
          t_(rows_, cols_ + 1),
          basis_(std::move(basis)) {
        t_.leftCols(cols_) = body;
        t_.col(cols_) = rhs;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<int>& basis() const { return basis_; }
    double rhs(int i) const { return t_(i, cols_); }
    double entry(int i, int j) const { return t_(i, j); }
    const Eigen::RowVectorXd& reduced_costs() const { return obj_; }

    // Price the cost vector through the current basis.
    void set_cost(const Eigen::VectorXd& cost) {
        obj_ = Eigen::RowVectorXd::Zero(cols_ + 1);
        obj_.head(cols_) = cost.transpose();
        for (int i = 0; i < rows_; ++i) {
            const double cb = cost[basis_[i]];
            if (cb != 0.0) obj_ -= cb * t_.row(i);
        }
    }

    // Bland's rule on the minimization reduced costs. `allowed` limits the
    // entering choice (used to keep artificials out in phase 2).
    // Returns {status, pivots done}.
    std::pair<LpStatus, int> iterate(int allowed_cols, double tol, int max_iter) {
        int pivots = 0;
        for (;;) {
            int enter = -1;
            for (int j = 0; j < allowed_cols; ++j) {
                if (obj_[j] < -tol) { enter = j; break; }
            }
            if (enter < 0) return {LpStatus::Optimal, pivots};

            int leave = -1;
            double best = 0.0;
            for (int i = 0; i < rows_; ++i) {
                const double aij = t_(i, enter);
                if (aij <= tol) continue;
                const double ratio = t_(i, cols_) / aij;
                if (leave < 0 || ratio < best - tol ||
                    (ratio < best + tol && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return {LpStatus::Unbounded, pivots};

            pivot(leave, enter);
            if (++pivots > max_iter)
                throw DiagnosticError(
                    "simplex iteration limit exceeded; anti-cycling rule "
                    "failed to terminate");
        }
    }

    void pivot(int r, int c) {
        t_.row(r) /= t_(r, c);
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            const double f = t_(i, c);
            if (f != 0.0) t_.row(i) -= f * t_.row(r);
        }
        const double g = obj_[c];
        if (g != 0.0) obj_ -= g * t_.row(r);
        basis_[r] = c;
    }

    // Pivot basic artificials (columns >= n_real) onto real columns where
    // possible; rows that cannot be repaired are redundant and dropped.
    void drive_out_artificials(int n_real, double tol) {
        std::vector<int> keep;
        keep.reserve(rows_);
        for (int i = 0; i < rows_; ++i) {
            if (basis_[i] < n_real) {
                keep.push_back(i);
                continue;
            }
            int col = -1;
            double mag = tol;
            for (int j = 0; j < n_real; ++j) {
                if (std::abs(t_(i, j)) > mag) {
                    col = j;
                    mag = std::abs(t_(i, j));
                }
            }
            if (col >= 0) {
                pivot(i, col);
                keep.push_back(i);
            }
            // else: zero row over the real columns, drop it
        }
        if (static_cast<int>(keep.size()) != rows_) {
            Eigen::MatrixXd nt(keep.size(), t_.cols());
            std::vector<int> nb(keep.size());
            for (int k = 0; k < static_cast<int>(keep.size()); ++k) {
                nt.row(k) = t_.row(keep[k]);
                nb[k] = basis_[keep[k]];
            }
            t_ = std::move(nt);
            basis_ = std::move(nb);
            rows_ = static_cast<int>(basis_.size());
        }
    }

    Eigen::VectorXd solution(int n_cols) const {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n_cols);
        for (int i = 0; i < rows_; ++i)
            if (basis_[i] < n_cols) x[basis_[i]] = t_(i, cols_);
        return x;
    }

private:
    int rows_;
    int cols_;
    Eigen::MatrixXd t_;
    Eigen::RowVectorXd obj_;
    std::vector<int> basis_;
};

double residual(const LpProblem& p, const Eigen::VectorXd& x) {
    double worst = 0.0;
    for (int i = 0; i < p.num_rows(); ++i) {
        const double lhs = p.matrix.row(i).dot(x);
        double v = 0.0;
        switch (p.relations[i]) {
        case Relation::LessEqual: v = lhs - p.rhs[i]; break;
        case Relation::GreaterEqual: v = p.rhs[i] - lhs; break;
        case Relation::Equal: v = std::abs(lhs - p.rhs[i]); break;
        }
        worst = std::max(worst, v);
    }
    for (int j = 0; j < p.num_vars(); ++j) {
        const double lo = p.lower.size() ? p.lower[j] : 0.0;
        worst = std::max(worst, lo - x[j]);
        if (p.upper.size() && std::isfinite(p.upper[j]))
            worst = std::max(worst, x[j] - p.upper[j]);
    }
    return worst;
}

} // namespace

void LpProblem::validate() const {
    const int n = num_vars();
    const int r = num_rows();
    if (n == 0) throw ValidationError("lp: empty cost vector");
    if (matrix.rows() != r)
        throw ValidationError("lp: matrix row count does not match rhs size");
    if (r > 0 && matrix.cols() != n)
        throw ValidationError("lp: matrix column count does not match cost size");
    if (static_cast<int>(relations.size()) != r)
        throw ValidationError("lp: relation count does not match rhs size");
    if (!all_finite(cost) || (r > 0 && !all_finite(matrix)) || !all_finite(rhs))
        throw ValidationError("lp: non-finite entry in cost, matrix, or rhs");
    if (lower.size() && lower.size() != n)
        throw ValidationError("lp: lower bound size mismatch");
    if (upper.size() && upper.size() != n)
        throw ValidationError("lp: upper bound size mismatch");
    if (lower.size() && !all_finite(lower))
        throw ValidationError("lp: non-finite lower bound");
    for (int j = 0; upper.size() && j < n; ++j) {
        if (std::isnan(upper[j]))
            throw ValidationError("lp: NaN upper bound");
        const double lo = lower.size() ? lower[j] : 0.0;
        if (lo > upper[j])
            throw ValidationError("lp: lower bound above upper bound");
    }
}

LpSolution solve(const LpProblem& problem, const LpOptions& options) {
    problem.validate();

    StandardForm sf = to_standard_form(problem);
    const int rows = static_cast<int>(sf.b.size());
    const int n_real = static_cast<int>(sf.a.cols());
    const int n_art = static_cast<int>(sf.artificial_rows.size());
    const int max_iter = options.max_iterations > 0
                             ? options.max_iterations
                             : 2000 + 200 * (rows + n_real);

    Eigen::VectorXd cost_min = problem.cost;
    if (problem.sense == Sense::Maximize) cost_min = -cost_min;

    LpSolution out;

    // Phase 1 works on the tableau extended with one artificial column per
    // row that has no natural basic slack.
    Eigen::MatrixXd body(rows, n_real + n_art);
    body.leftCols(n_real) = sf.a;
    body.rightCols(n_art).setZero();
    std::vector<int> basis(rows, -1);
    for (int i = 0; i < rows; ++i)
        if (sf.slack_basis[i] >= 0) basis[i] = sf.slack_basis[i];
    for (int k = 0; k < n_art; ++k) {
        body(sf.artificial_rows[k], n_real + k) = 1.0;
        basis[sf.artificial_rows[k]] = n_real + k;
    }

    Tableau tab(std::move(body), sf.b, std::move(basis));

    if (n_art > 0) {
        Eigen::VectorXd phase1_cost = Eigen::VectorXd::Zero(n_real + n_art);
        phase1_cost.tail(n_art).setOnes();
        tab.set_cost(phase1_cost);
        auto [status, pivots] =
            tab.iterate(n_real + n_art, options.optimality_tol, max_iter);
        out.iterations += pivots;
        if (status != LpStatus::Optimal)
            throw DiagnosticError("lp: phase 1 reported unbounded");
        double infeas = 0.0;
        {
            Eigen::VectorXd xs = tab.solution(n_real + n_art);
            infeas = xs.tail(n_art).sum();
        }
        if (infeas > options.feasibility_tol) {
            out.status = LpStatus::Infeasible;
            return out;
        }
        tab.drive_out_artificials(n_real, options.feasibility_tol);
    }

    Eigen::VectorXd phase2_cost = Eigen::VectorXd::Zero(n_real + n_art);
    phase2_cost.head(n_real) = cost_min;
    tab.set_cost(phase2_cost);
    auto [status, pivots] = tab.iterate(n_real, options.optimality_tol, max_iter);
    out.iterations += pivots;
    if (status == LpStatus::Unbounded) {
        out.status = LpStatus::Unbounded;
        return out;
    }

    Eigen::VectorXd xs = tab.solution(n_real);
    out.status = LpStatus::Optimal;
    out.x = xs.head(sf.n_struct) + sf.shift;
    out.objective = problem.cost.dot(out.x);
    out.reduced_costs = tab.reduced_costs().head(n_real).transpose();
    out.max_residual = residual(problem, out.x);
    return out;
}

LpSolution solve_lexicographic(const LpProblem& problem,
                               const Eigen::VectorXd& primary,
                               const Eigen::VectorXd& secondary,
                               const LpOptions& options) {
    if (primary.size() != problem.num_vars() ||
        secondary.size() != problem.num_vars())
        throw ValidationError("lp: lexicographic cost size mismatch");

    LpProblem stage1 = problem;
    stage1.cost = primary;
    LpSolution first = solve(stage1, options);
    if (!first.optimal()) return first;

    LpProblem stage2 = problem;
    stage2.cost = secondary;
    const int r = problem.num_rows();
    stage2.matrix.conservativeResize(r + 1, problem.num_vars());
    stage2.matrix.row(r) = primary.transpose();
    stage2.rhs.conservativeResize(r + 1);
    stage2.rhs[r] = primary.dot(first.x);
    stage2.relations.push_back(Relation::Equal);

    LpSolution second = solve(stage2, options);
    second.iterations += first.iterations;
    if (second.optimal()) second.max_residual = residual(problem, second.x);
    return second;
}

} // namespace dea
