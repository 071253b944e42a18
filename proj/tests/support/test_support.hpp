#pragma once

// Shared test machinery: an independent 2-variable LP oracle (vertex
// enumeration, no simplex involved) and seeded random generators for
// problems and datasets.

#include <Eigen/Dense>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dea/dataset.hpp"
#include "dea/lp.hpp"

namespace testsup {

struct OracleResult {
    double objective;
    Eigen::Vector2d x;
};

// Solves a 2-variable LP by enumerating all pairwise intersections of the
// constraint lines (rows plus bound lines), keeping the feasible ones, and
// picking the best by brute force. Only valid for problems whose feasible
// set is bounded (callers add box bounds). Returns nullopt when no feasible
// vertex exists.
inline std::optional<OracleResult> two_var_oracle(const dea::LpProblem& p) {
    const double tol = 1e-7;
    std::vector<Eigen::Vector2d> lines_n;  // line: n.x == d
    std::vector<double> lines_d;
    for (int i = 0; i < p.num_rows(); ++i) {
        lines_n.push_back(p.matrix.row(i).transpose());
        lines_d.push_back(p.rhs[i]);
    }
    for (int j = 0; j < 2; ++j) {
        Eigen::Vector2d axis = Eigen::Vector2d::Zero();
        axis[j] = 1.0;
        lines_n.push_back(axis);
        lines_d.push_back(p.lower.size() ? p.lower[j] : 0.0);
        if (p.upper.size() && std::isfinite(p.upper[j])) {
            lines_n.push_back(axis);
            lines_d.push_back(p.upper[j]);
        }
    }

    auto feasible = [&](const Eigen::Vector2d& x) {
        for (int i = 0; i < p.num_rows(); ++i) {
            const double lhs = p.matrix.row(i).dot(x);
            switch (p.relations[i]) {
            case dea::Relation::LessEqual:
                if (lhs > p.rhs[i] + tol) return false;
                break;
            case dea::Relation::GreaterEqual:
                if (lhs < p.rhs[i] - tol) return false;
                break;
            case dea::Relation::Equal:
                if (std::abs(lhs - p.rhs[i]) > tol) return false;
                break;
            }
        }
        for (int j = 0; j < 2; ++j) {
            const double lo = p.lower.size() ? p.lower[j] : 0.0;
            if (x[j] < lo - tol) return false;
            if (p.upper.size() && std::isfinite(p.upper[j]) &&
                x[j] > p.upper[j] + tol)
                return false;
        }
        return true;
    };

    std::optional<OracleResult> best;
    const bool maximize = p.sense == dea::Sense::Maximize;
    for (size_t a = 0; a < lines_n.size(); ++a) {
        for (size_t b = a + 1; b < lines_n.size(); ++b) {
            Eigen::Matrix2d m;
            m.row(0) = lines_n[a].transpose();
            m.row(1) = lines_n[b].transpose();
            if (std::abs(m.determinant()) < 1e-10) continue;
            Eigen::Vector2d x =
                m.colPivHouseholderQr().solve(Eigen::Vector2d(lines_d[a], lines_d[b]));
            if (!feasible(x)) continue;
            const double obj = p.cost.dot(x);
            if (!best || (maximize ? obj > best->objective : obj < best->objective))
                best = OracleResult{obj, x};
        }
    }
    return best;
}

// Feasible-and-bounded by construction: a nonnegative witness point fixes
// the rhs side of every row, and box upper bounds keep the optimum finite.
// Entries land in [0, 100].
inline dea::LpProblem random_feasible_lp(std::mt19937& rng) {
    std::uniform_int_distribution<int> nd(2, 6), rd(1, 5), red(0, 2);
    std::uniform_real_distribution<double> entry(0.0, 100.0);
    std::uniform_real_distribution<double> point(0.0, 5.0);
    std::uniform_real_distribution<double> margin(0.0, 20.0);
    std::uniform_real_distribution<double> costd(-10.0, 10.0);

    const int n = nd(rng);
    const int r = rd(rng);
    dea::LpProblem p;
    p.sense = (rng() & 1) ? dea::Sense::Minimize : dea::Sense::Maximize;
    p.cost.resize(n);
    for (int j = 0; j < n; ++j) p.cost[j] = costd(rng);
    p.matrix.resize(r, n);
    p.rhs.resize(r);
    Eigen::VectorXd witness(n);
    for (int j = 0; j < n; ++j) witness[j] = point(rng);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < n; ++j) p.matrix(i, j) = entry(rng);
        const double lhs = p.matrix.row(i).dot(witness);
        switch (red(rng)) {
        case 0:
            p.relations.push_back(dea::Relation::LessEqual);
            p.rhs[i] = lhs + margin(rng);
            break;
        case 1:
            p.relations.push_back(dea::Relation::GreaterEqual);
            p.rhs[i] = std::max(0.0, lhs - margin(rng));
            break;
        default:
            p.relations.push_back(dea::Relation::Equal);
            p.rhs[i] = lhs;
            break;
        }
    }
    p.upper.resize(n);
    for (int j = 0; j < n; ++j) p.upper[j] = witness[j] + margin(rng) + 1.0;
    return p;
}

// Fully random rows; any status can come out. Used for termination checks.
inline dea::LpProblem random_lp(std::mt19937& rng) {
    std::uniform_int_distribution<int> nd(1, 6), rd(1, 6), red(0, 2);
    std::uniform_real_distribution<double> entry(-10.0, 10.0);

    const int n = nd(rng);
    const int r = rd(rng);
    dea::LpProblem p;
    p.sense = (rng() & 1) ? dea::Sense::Minimize : dea::Sense::Maximize;
    p.cost.resize(n);
    p.matrix.resize(r, n);
    p.rhs.resize(r);
    for (int j = 0; j < n; ++j) p.cost[j] = entry(rng);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < n; ++j) p.matrix(i, j) = entry(rng);
        p.rhs[i] = entry(rng);
        p.relations.push_back(static_cast<dea::Relation>(red(rng)));
    }
    return p;
}

inline dea::Dataset random_dataset(std::mt19937& rng, int max_n = 8,
                                   int max_m = 3, int max_s = 3) {
    std::uniform_int_distribution<int> nd(2, max_n), md(1, max_m), sd(1, max_s);
    std::uniform_real_distribution<double> entry(0.5, 10.0);
    const int n = nd(rng);
    const int m = md(rng);
    const int s = sd(rng);
    Eigen::MatrixXd x(m, n), y(s, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = entry(rng);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < n; ++j) y(i, j) = entry(rng);
    std::vector<std::string> names;
    for (int j = 0; j < n; ++j) names.push_back("U" + std::to_string(j + 1));
    return dea::Dataset(std::move(names), std::move(x), std::move(y));
}

} // namespace testsup
