#pragma once

#include "lmiq/errors.hpp"
#include "lmiq/metrics.hpp"
#include "lmiq/questionnaire.hpp"
#include "lmiq/util.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

namespace lmiq {

using Matrix = std::vector<std::vector<double>>;

enum class FeatureSampling { All, Sqrt };

struct ForestParams {
    int n_estimators = 100;
    int max_depth = 10;
    bool bootstrap = true;
    FeatureSampling features_per_split = FeatureSampling::Sqrt;
    int min_samples_leaf = 1;
    uint64_t seed = 0;
};

// Flat node storage; feature < 0 marks a leaf. Split semantics: samples with
// feature value <= threshold go left.
struct TreeNode {
    int feature = -1;
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double value = 0.0; // leaf: mean of training targets reaching it
    int n = 0;
};

struct Tree {
    std::vector<TreeNode> nodes;

    double predict_row(const std::vector<double>& row) const {
        int cur = 0;
        while (nodes[cur].feature >= 0)
            cur = row[nodes[cur].feature] <= nodes[cur].threshold ? nodes[cur].left
                                                                  : nodes[cur].right;
        return nodes[cur].value;
    }
};

namespace detail {

/// Greedy CART regression builder. At each node every candidate feature's
/// thresholds are the midpoints between consecutive distinct sorted values;
/// the split minimizing total child SSE wins, ties broken by lowest feature
/// index then lowest threshold (features and positions are scanned in
/// ascending order and only strict improvements replace the incumbent).
class TreeBuilder {
public:
    TreeBuilder(const Matrix& X, const std::vector<double>& y, const ForestParams& params,
                std::mt19937_64* rng, std::vector<double>* importance_acc)
        : X_(X), y_(y), params_(params), rng_(rng), importances_(importance_acc) {
        feature_count_ = X.empty() ? 0 : static_cast<int>(X.front().size());
        feature_pool_.resize(feature_count_);
        for (int f = 0; f < feature_count_; ++f) feature_pool_[f] = f;
    }

    Tree build(std::vector<int> sample_indices) {
        Tree tree;
        idx_ = std::move(sample_indices);
        grow(tree, 0, static_cast<int>(idx_.size()), 0);
        return tree;
    }

private:
    struct BestSplit {
        double sse = std::numeric_limits<double>::infinity();
        int feature = -1;
        double threshold = 0.0;
    };

    int grow(Tree& tree, int begin, int end, int depth) {
        const int n = end - begin;
        double sum = 0.0, sumsq = 0.0;
        double ymin = y_[idx_[begin]], ymax = ymin;
        for (int i = begin; i < end; ++i) {
            double v = y_[idx_[i]];
            sum += v;
            sumsq += v * v;
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }

        const int node_id = static_cast<int>(tree.nodes.size());
        tree.nodes.emplace_back();
        tree.nodes[node_id].n = n;
        tree.nodes[node_id].value = sum / n;

        const bool can_split = depth < params_.max_depth && ymin != ymax &&
                               n >= 2 * params_.min_samples_leaf;
        if (!can_split) return node_id;

        BestSplit best = find_best_split(begin, end, sum, sumsq);
        if (best.feature < 0) return node_id;

        if (importances_) {
            double node_sse = sumsq - sum * sum / n;
            (*importances_)[best.feature] += node_sse - best.sse;
        }

        auto mid_it = std::partition(idx_.begin() + begin, idx_.begin() + end, [&](int s) {
            return X_[s][best.feature] <= best.threshold;
        });
        int mid = static_cast<int>(mid_it - idx_.begin());

        tree.nodes[node_id].feature = best.feature;
        tree.nodes[node_id].threshold = best.threshold;
        int left = grow(tree, begin, mid, depth + 1);
        int right = grow(tree, mid, end, depth + 1);
        tree.nodes[node_id].left = left;
        tree.nodes[node_id].right = right;
        return node_id;
    }

    BestSplit find_best_split(int begin, int end, double total_sum, double total_sumsq) {
        const int n = end - begin;
        BestSplit best;
        for (int f : candidate_features()) {
            scratch_.clear();
            for (int i = begin; i < end; ++i)
                scratch_.emplace_back(X_[idx_[i]][f], y_[idx_[i]]);
            // Sort by (x, y) so summation order is fully determined.
            std::sort(scratch_.begin(), scratch_.end());
            if (scratch_.front().first == scratch_.back().first) continue;

            double left_sum = 0.0, left_sumsq = 0.0;
            for (int i = 0; i + 1 < n; ++i) {
                left_sum += scratch_[i].second;
                left_sumsq += scratch_[i].second * scratch_[i].second;
                if (scratch_[i].first == scratch_[i + 1].first) continue;
                const int n_left = i + 1;
                const int n_right = n - n_left;
                if (n_left < params_.min_samples_leaf || n_right < params_.min_samples_leaf)
                    continue;
                double right_sum = total_sum - left_sum;
                double right_sumsq = total_sumsq - left_sumsq;
                double sse = (left_sumsq - left_sum * left_sum / n_left) +
                             (right_sumsq - right_sum * right_sum / n_right);
                if (sse < best.sse) {
                    best.sse = sse;
                    best.feature = f;
                    best.threshold = scratch_[i].first + (scratch_[i + 1].first - scratch_[i].first) / 2.0;
                }
            }
        }
        return best;
    }

    std::vector<int> candidate_features() {
        if (params_.features_per_split == FeatureSampling::All || rng_ == nullptr)
            return feature_pool_original();
        int k = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(feature_count_))));
        k = std::min(k, feature_count_);
        for (int j = 0; j < k; ++j) {
            int r = j + static_cast<int>((*rng_)() % static_cast<uint64_t>(feature_count_ - j));
            std::swap(feature_pool_[j], feature_pool_[r]);
        }
        std::vector<int> out(feature_pool_.begin(), feature_pool_.begin() + k);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> feature_pool_original() const {
        std::vector<int> out(feature_count_);
        for (int f = 0; f < feature_count_; ++f) out[f] = f;
        return out;
    }

    const Matrix& X_;
    const std::vector<double>& y_;
    const ForestParams& params_;
    std::mt19937_64* rng_;
    std::vector<double>* importances_;
    int feature_count_ = 0;
    std::vector<int> idx_;
    std::vector<int> feature_pool_;
    std::vector<std::pair<double, double>> scratch_;
};

inline uint64_t tree_seed(uint64_t forest_seed, int tree_index) {
    return splitmix64(forest_seed ^ splitmix64(static_cast<uint64_t>(tree_index)));
}

} // namespace detail

/// Single CART regression tree on the full data, no bootstrap, all features
/// considered at every node.
inline Tree fit_tree(const Matrix& X, const std::vector<double>& y, const ForestParams& params) {
    if (X.empty() || y.empty() || X.size() != y.size())
        throw Error("fit_tree: empty data or row/target mismatch");
    if (X.front().empty()) throw Error("fit_tree: zero features");
    std::vector<int> idx(X.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    detail::TreeBuilder builder(X, y, params, nullptr, nullptr);
    return builder.build(std::move(idx));
}

/// Bagged CART ensemble. Per-tree RNG is derived from (seed, tree index) so
/// results do not depend on scheduling; importances are the impurity (SSE)
/// decreases summed over all splits of all trees, normalized to sum to one.
class ForestModel {
public:
    static ForestModel fit(const Matrix& X, const std::vector<double>& y,
                           const ForestParams& params, std::string target_name = "",
                           int threads = 1) {
        if (X.size() != y.size() || X.size() < 2)
            throw Error("fit_forest: need at least 2 samples");
        if (X.front().empty()) throw Error("fit_forest: zero features");
        if (params.n_estimators < 1 || params.max_depth < 1)
            throw Error("fit_forest: invalid params");

        ForestModel model;
        model.params_ = params;
        model.target_name_ = std::move(target_name);
        model.feature_count_ = static_cast<int>(X.front().size());
        model.trees_.resize(params.n_estimators);

        const size_t n = X.size();
        std::vector<std::vector<double>> per_tree_importance(
            params.n_estimators, std::vector<double>(model.feature_count_, 0.0));

        parallel_for(static_cast<size_t>(params.n_estimators), threads, [&](size_t t) {
            std::mt19937_64 rng(detail::tree_seed(params.seed, static_cast<int>(t)));
            std::vector<int> idx;
            idx.reserve(n);
            if (params.bootstrap) {
                for (size_t i = 0; i < n; ++i)
                    idx.push_back(static_cast<int>(rng() % n));
            } else {
                for (size_t i = 0; i < n; ++i) idx.push_back(static_cast<int>(i));
            }
            detail::TreeBuilder builder(X, y, params, &rng, &per_tree_importance[t]);
            model.trees_[t] = builder.build(std::move(idx));
        });

        model.importances_.assign(model.feature_count_, 0.0);
        for (const auto& imp : per_tree_importance)
            for (int f = 0; f < model.feature_count_; ++f) model.importances_[f] += imp[f];
        double total = 0.0;
        for (double v : model.importances_) total += v;
        if (total > 0.0)
            for (double& v : model.importances_) v /= total;
        else
            std::fill(model.importances_.begin(), model.importances_.end(), 0.0);
        return model;
    }

    double predict_row(const std::vector<double>& row) const {
        double acc = 0.0;
        for (const auto& tree : trees_) acc += tree.predict_row(row);
        return acc / static_cast<double>(trees_.size());
    }

    std::vector<double> predict(const Matrix& X) const {
        std::vector<double> out;
        out.reserve(X.size());
        for (const auto& row : X) out.push_back(predict_row(row));
        return out;
    }

    const std::vector<double>& importances() const { return importances_; }
    const ForestParams& params() const { return params_; }
    const std::string& target_name() const { return target_name_; }
    int feature_count() const { return feature_count_; }
    const std::vector<Tree>& trees() const { return trees_; }

    nlohmann::json to_json() const {
        nlohmann::json doc;
        doc["target"] = target_name_;
        doc["feature_count"] = feature_count_;
        doc["params"] = {{"n_estimators", params_.n_estimators},
                         {"max_depth", params_.max_depth},
                         {"bootstrap", params_.bootstrap},
                         {"features_per_split",
                          params_.features_per_split == FeatureSampling::Sqrt ? "sqrt" : "all"},
                         {"min_samples_leaf", params_.min_samples_leaf},
                         {"seed", params_.seed}};
        doc["importances"] = importances_;
        doc["trees"] = nlohmann::json::array();
        for (const auto& tree : trees_) doc["trees"].push_back(node_to_json(tree, 0));
        return doc;
    }

    static ForestModel from_json(const nlohmann::json& doc) {
        ForestModel model;
        model.target_name_ = doc.value("target", "");
        model.feature_count_ = doc.at("feature_count").get<int>();
        const auto& p = doc.at("params");
        model.params_.n_estimators = p.at("n_estimators").get<int>();
        model.params_.max_depth = p.at("max_depth").get<int>();
        model.params_.bootstrap = p.at("bootstrap").get<bool>();
        model.params_.features_per_split =
            p.at("features_per_split").get<std::string>() == "sqrt" ? FeatureSampling::Sqrt
                                                                    : FeatureSampling::All;
        model.params_.min_samples_leaf = p.at("min_samples_leaf").get<int>();
        model.params_.seed = p.at("seed").get<uint64_t>();
        model.importances_ = doc.at("importances").get<std::vector<double>>();
        for (const auto& jt : doc.at("trees")) {
            Tree tree;
            node_from_json(jt, tree);
            model.trees_.push_back(std::move(tree));
        }
        return model;
    }

private:
    static nlohmann::json node_to_json(const Tree& tree, int id) {
        const TreeNode& node = tree.nodes[id];
        if (node.feature < 0)
            return nlohmann::json{{"type", "leaf"}, {"value", node.value}, {"n", node.n}};
        return nlohmann::json{{"type", "split"},
                              {"feature", node.feature},
                              {"threshold", node.threshold},
                              {"left", node_to_json(tree, node.left)},
                              {"right", node_to_json(tree, node.right)}};
    }

    static int node_from_json(const nlohmann::json& j, Tree& tree) {
        int id = static_cast<int>(tree.nodes.size());
        tree.nodes.emplace_back();
        if (j.at("type").get<std::string>() == "leaf") {
            tree.nodes[id].value = j.at("value").get<double>();
            tree.nodes[id].n = j.at("n").get<int>();
            return id;
        }
        tree.nodes[id].feature = j.at("feature").get<int>();
        tree.nodes[id].threshold = j.at("threshold").get<double>();
        int left = node_from_json(j.at("left"), tree);
        int right = node_from_json(j.at("right"), tree);
        tree.nodes[id].left = left;
        tree.nodes[id].right = right;
        return id;
    }

    std::vector<Tree> trees_;
    ForestParams params_;
    std::string target_name_;
    int feature_count_ = 0;
    std::vector<double> importances_;
};

inline ForestModel fit_forest(const Matrix& X, const std::vector<double>& y,
                              const ForestParams& params, std::string target_name = "",
                              int threads = 1) {
    return ForestModel::fit(X, y, params, std::move(target_name), threads);
}

struct GridSpec {
    std::vector<int> n_estimators = {100, 200, 300};
    std::vector<int> max_depths = {10, 20, 30};
};

struct GridCell {
    ForestParams params;
    double dev_mse = 0.0;
};

struct GridSearchResult {
    ForestParams best_params;
    ForestModel model; // winner, fit on train only
    double best_dev_mse = 0.0;
    std::vector<GridCell> cells;
};

/// Fits every (n_estimators, max_depth) combination on the training split,
/// scores dev MSE, and keeps strictly the best; scanning n_estimators then
/// max_depth in ascending order means ties resolve to the smaller values.
/// The winner is whatever was fit on train alone; dev never enters training.
inline GridSearchResult grid_search(const Matrix& train_X, const std::vector<double>& train_y,
                                    const Matrix& dev_X, const std::vector<double>& dev_y,
                                    const ForestParams& base, const GridSpec& grid,
                                    std::string target_name = "", int threads = 1) {
    if (grid.n_estimators.empty() || grid.max_depths.empty()) throw Error("grid_search: empty grid");
    if (train_X.empty() || dev_X.empty()) throw Error("grid_search: empty split");

    GridSearchResult result;
    result.best_dev_mse = std::numeric_limits<double>::infinity();
    bool have_best = false;
    for (int n_estimators : grid.n_estimators) {
        for (int max_depth : grid.max_depths) {
            ForestParams params = base;
            params.n_estimators = n_estimators;
            params.max_depth = max_depth;
            ForestModel model = ForestModel::fit(train_X, train_y, params, target_name, threads);
            double dev_mse = metrics(model.predict(dev_X), dev_y).mse;
            result.cells.push_back({params, dev_mse});
            if (!have_best || dev_mse < result.best_dev_mse) {
                have_best = true;
                result.best_dev_mse = dev_mse;
                result.best_params = params;
                result.model = std::move(model);
            }
        }
    }
    return result;
}

/// Top-k questions by importance, descending; ties resolve to the lower
/// ordinal. k past the feature count returns everything.
inline std::vector<std::pair<std::string, double>> importances_topk(const ForestModel& model,
                                                                    const QuestionnaireBank& bank,
                                                                    int k) {
    if (static_cast<size_t>(model.feature_count()) != bank.size())
        throw Error("importances_topk: model/bank width mismatch");
    std::vector<int> order(model.feature_count());
    for (int i = 0; i < model.feature_count(); ++i) order[i] = i;
    const auto& imp = model.importances();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (imp[a] != imp[b]) return imp[a] > imp[b];
        return a < b;
    });
    int take = std::clamp(k, 0, model.feature_count());
    std::vector<std::pair<std::string, double>> out;
    out.reserve(take);
    for (int i = 0; i < take; ++i)
        out.emplace_back(bank.by_ordinal(order[i]).text, imp[order[i]]);
    return out;
}

} // namespace lmiq
