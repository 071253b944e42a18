#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "dea/errors.hpp"

namespace dea {

/// One activity: an input vector of length m and an output vector of
/// length s. Holds observed units as well as projection points.
struct Point {
    Eigen::VectorXd inputs;
    Eigen::VectorXd outputs;
};

/// Observed production data: n named units, an m-by-n input matrix, and an
/// s-by-n output matrix (one column per unit). Immutable after
/// construction; validated invariants:
///   - n, m, s >= 1, all entries finite and >= 0
///   - every unit has a strictly positive input and a strictly positive
///     output (radial models degenerate otherwise)
///   - names are unique.
class Dataset {
public:
    Dataset(std::vector<std::string> names, Eigen::MatrixXd inputs,
            Eigen::MatrixXd outputs);

    int num_dmus() const { return static_cast<int>(names_.size()); }
    int num_inputs() const { return static_cast<int>(inputs_.rows()); }
    int num_outputs() const { return static_cast<int>(outputs_.rows()); }

    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int j) const { return names_[j]; }
    const Eigen::MatrixXd& inputs() const { return inputs_; }
    const Eigen::MatrixXd& outputs() const { return outputs_; }

    Point unit(int j) const;

    /// Index of the named unit, or -1.
    int index_of(const std::string& name) const;

private:
    std::vector<std::string> names_;
    Eigen::MatrixXd inputs_;
    Eigen::MatrixXd outputs_;
};

/// Numerical bands shared across the pipeline. `feasibility` is the LP
/// residual tolerance; `classification` decides theta = 1, zero slack, and
/// the intensity-sum comparison against 1; `support` separates genuine
/// reference weights from simplex noise.
struct Tolerances {
    double feasibility = 1e-9;
    double classification = 1e-6;
    double support = 1e-7;
};

} // namespace dea
