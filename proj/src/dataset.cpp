#include "dea/dataset.hpp"

#include <algorithm>
#include <set>

namespace dea {

Dataset::Dataset(std::vector<std::string> names, Eigen::MatrixXd inputs,
                 Eigen::MatrixXd outputs)
    : names_(std::move(names)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)) {
    const int n = num_dmus();
    if (n < 1) throw ValidationError("dataset: no units");
    if (inputs_.rows() < 1) throw ValidationError("dataset: no input rows");
    if (outputs_.rows() < 1) throw ValidationError("dataset: no output rows");
    if (inputs_.cols() != n || outputs_.cols() != n)
        throw ValidationError("dataset: matrix width does not match unit count");
    if (!inputs_.array().isFinite().all() || !outputs_.array().isFinite().all())
        throw ValidationError("dataset: non-finite entry");
    if ((inputs_.array() < 0.0).any() || (outputs_.array() < 0.0).any())
        throw ValidationError("dataset: negative entry");
    for (int j = 0; j < n; ++j) {
        if (inputs_.col(j).maxCoeff() <= 0.0)
            throw ValidationError("dataset: unit '" + names_[j] +
                                  "' has no positive input");
        if (outputs_.col(j).maxCoeff() <= 0.0)
            throw ValidationError("dataset: unit '" + names_[j] +
                                  "' has no positive output");
    }
    std::set<std::string> seen;
    for (const auto& name : names_) {
        if (!seen.insert(name).second)
            throw ValidationError("dataset: duplicate unit name '" + name + "'");
    }
}

Point Dataset::unit(int j) const {
    return Point{inputs_.col(j), outputs_.col(j)};
}

int Dataset::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

} // namespace dea
