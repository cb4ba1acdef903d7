#pragma once

#include "lmiq/errors.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace lmiq {

struct MetricSet {
    double mse = 0.0;
    double mae = 0.0;
    double rmse = 0.0;
    int n = 0;
};

inline MetricSet metrics(const std::vector<double>& pred, const std::vector<double>& truth) {
    if (pred.size() != truth.size())
        throw Error("metrics: length mismatch " + std::to_string(pred.size()) + " vs " +
                    std::to_string(truth.size()));
    if (pred.empty()) throw Error("metrics: empty input");
    double se = 0.0, ae = 0.0;
    for (size_t i = 0; i < pred.size(); ++i) {
        double d = pred[i] - truth[i];
        se += d * d;
        ae += std::abs(d);
    }
    MetricSet m;
    m.n = static_cast<int>(pred.size());
    m.mse = se / static_cast<double>(m.n);
    m.mae = ae / static_cast<double>(m.n);
    m.rmse = std::sqrt(m.mse);
    return m;
}

} // namespace lmiq
