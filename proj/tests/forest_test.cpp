#include "lmiq/forest.hpp"
#include "lmiq/questionnaire.hpp"
#include "cart_oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

using namespace lmiq;
using lmiq::testing::enumerate_split_candidates;
using lmiq::testing::eval_split_exact;
using lmiq::testing::exact_equal;
using lmiq::testing::exact_less;
using lmiq::testing::ExactSse;
using lmiq::testing::random_small_dataset;
using lmiq::testing::SmallDataset;

namespace {

Matrix random_matrix(std::mt19937_64& rng, int n, int p) {
    Matrix X(n, std::vector<double>(p));
    for (auto& row : X)
        for (auto& v : row) v = static_cast<double>(rng() % 100) / 7.0;
    return X;
}

ForestParams plain_tree_params(int max_depth = 32) {
    ForestParams params;
    params.n_estimators = 1;
    params.max_depth = max_depth;
    params.bootstrap = false;
    params.features_per_split = FeatureSampling::All;
    return params;
}

} // namespace

TEST(FitTree, RootSplitMatchesBruteForceOracle) {
    std::mt19937_64 rng(20240614);
    int checked = 0;
    for (int trial = 0; trial < 600; ++trial) {
        SmallDataset d = random_small_dataset(rng);
        Tree tree = fit_tree(d.X, d.y, plain_tree_params());
        const TreeNode& root = tree.nodes.front();

        auto candidates = enumerate_split_candidates(d.X);
        bool y_constant =
            std::all_of(d.y.begin(), d.y.end(), [&](double v) { return v == d.y.front(); });
        if (candidates.empty() || y_constant) {
            EXPECT_LT(root.feature, 0) << "expected a leaf";
            continue;
        }

        ASSERT_GE(root.feature, 0) << "splittable node came back as a leaf";
        ExactSse best = eval_split_exact(d.X, d.y, candidates[0].first, candidates[0].second);
        for (const auto& [f, thr] : candidates) {
            ExactSse sse = eval_split_exact(d.X, d.y, f, thr);
            ASSERT_GT(sse.den, 0);
            if (exact_less(sse, best)) best = sse;
        }
        ExactSse chosen = eval_split_exact(d.X, d.y, root.feature, root.threshold);
        ASSERT_GT(chosen.den, 0) << "chosen threshold does not separate the samples";
        EXPECT_TRUE(exact_equal(chosen, best))
            << "trial " << trial << ": chosen SSE " << chosen.num << "/" << chosen.den
            << " vs optimum " << best.num << "/" << best.den;
        ++checked;
    }
    EXPECT_GE(checked, 500);
}

TEST(FitTree, ConstantTargetIsASingleLeaf) {
    Tree tree = fit_tree({{0}, {1}}, {2, 2}, plain_tree_params());
    ASSERT_EQ(tree.nodes.size(), 1u);
    EXPECT_LT(tree.nodes[0].feature, 0);
    EXPECT_DOUBLE_EQ(tree.nodes[0].value, 2.0);
    EXPECT_EQ(tree.nodes[0].n, 2);
}

TEST(FitTree, DepthOneStepExample) {
    Tree tree = fit_tree({{1}, {2}, {3}, {4}}, {0, 0, 10, 10}, plain_tree_params(1));
    const TreeNode& root = tree.nodes.front();
    ASSERT_GE(root.feature, 0);
    EXPECT_EQ(root.feature, 0);
    EXPECT_DOUBLE_EQ(root.threshold, 2.5);
    EXPECT_DOUBLE_EQ(tree.nodes[root.left].value, 0.0);
    EXPECT_DOUBLE_EQ(tree.nodes[root.right].value, 10.0);
    EXPECT_DOUBLE_EQ(tree.predict_row({2}), 0.0);
    EXPECT_DOUBLE_EQ(tree.predict_row({3}), 10.0);
}

TEST(FitTree, SingleSampleLeaf) {
    Tree tree = fit_tree({{5}}, {7}, plain_tree_params());
    ASSERT_EQ(tree.nodes.size(), 1u);
    EXPECT_DOUBLE_EQ(tree.nodes[0].value, 7.0);
}

TEST(FitTree, UnrestrictedTreeDrivesTrainingErrorToZero) {
    std::mt19937_64 rng(99);
    Matrix X(12, std::vector<double>(2));
    std::vector<double> y(12);
    for (int i = 0; i < 12; ++i) {
        X[i][0] = i; // distinct, so the tree can isolate every sample
        X[i][1] = static_cast<double>(rng() % 5);
        y[i] = static_cast<double>(rng() % 30);
    }
    Tree tree = fit_tree(X, y, plain_tree_params(64));
    for (int i = 0; i < 12; ++i) EXPECT_DOUBLE_EQ(tree.predict_row(X[i]), y[i]);
}

TEST(FitTree, NeverSplitsOnAConstantColumn) {
    Matrix X = {{5, 0}, {5, 1}, {5, 2}, {5, 3}};
    std::vector<double> y = {1, 2, 6, 9};
    Tree tree = fit_tree(X, y, plain_tree_params());
    for (const auto& node : tree.nodes) EXPECT_NE(node.feature, 0);
    EXPECT_DOUBLE_EQ(tree.predict_row({-100, 1.5}), tree.predict_row({100, 1.5}));
}

TEST(FitTree, RejectsEmptyData) {
    EXPECT_THROW(fit_tree({}, {}, plain_tree_params()), Error);
    EXPECT_THROW(fit_tree({{1}}, {1, 2}, plain_tree_params()), Error);
}

TEST(Forest, SingleTreeNoBootstrapDegeneratesToFitTree) {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(rng() % 20);
        int p = 1 + static_cast<int>(rng() % 5);
        Matrix X = random_matrix(rng, n, p);
        std::vector<double> y;
        for (int i = 0; i < n; ++i) y.push_back(static_cast<double>(rng() % 50) / 3.0);

        ForestParams params = plain_tree_params(6);
        Tree tree = fit_tree(X, y, params);
        ForestModel forest = ForestModel::fit(X, y, params);
        for (int i = 0; i < n; ++i) {
            double a = tree.predict_row(X[i]);
            double b = forest.predict_row(X[i]);
            ASSERT_EQ(a, b) << "trial " << trial << " row " << i; // bit-exact
        }
    }
}

TEST(Forest, DeterministicAcrossRunsAndThreadCounts) {
    std::mt19937_64 rng(8);
    Matrix X = random_matrix(rng, 40, 6);
    std::vector<double> y;
    for (int i = 0; i < 40; ++i) y.push_back(static_cast<double>(rng() % 25));

    ForestParams params;
    params.n_estimators = 24;
    params.max_depth = 8;
    params.seed = 17;

    ForestModel a = ForestModel::fit(X, y, params, "t", /*threads=*/1);
    ForestModel b = ForestModel::fit(X, y, params, "t", /*threads=*/4);
    ForestModel c = ForestModel::fit(X, y, params, "t", /*threads=*/1);
    EXPECT_EQ(a.predict(X), b.predict(X));
    EXPECT_EQ(a.predict(X), c.predict(X));
    EXPECT_EQ(a.importances(), b.importances());

    params.seed = 18;
    ForestModel d = ForestModel::fit(X, y, params);
    EXPECT_NE(a.predict(X), d.predict(X));
}

TEST(Forest, ConstantTargetPredictsTheConstant) {
    std::mt19937_64 rng(3);
    Matrix X = random_matrix(rng, 10, 3);
    std::vector<double> y(10, 4.25);
    ForestParams params;
    params.n_estimators = 5;
    ForestModel forest = ForestModel::fit(X, y, params);
    for (const auto& row : X) EXPECT_DOUBLE_EQ(forest.predict_row(row), 4.25);
}

TEST(Forest, ImportancesNormalizedAndNonNegative) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 12 + static_cast<int>(rng() % 20);
        Matrix X = random_matrix(rng, n, 5);
        std::vector<double> y;
        for (int i = 0; i < n; ++i) y.push_back(X[i][1] * 3.0 + static_cast<double>(rng() % 4));
        ForestParams params;
        params.n_estimators = 10;
        params.seed = trial;
        ForestModel forest = ForestModel::fit(X, y, params);
        double total = 0.0;
        for (double v : forest.importances()) {
            EXPECT_GE(v, 0.0);
            total += v;
        }
        EXPECT_NEAR(total, 1.0, 1e-9);
    }
}

TEST(Forest, PlantedInformativeColumnRanksFirst) {
    std::mt19937_64 rng(77);
    const int n = 40;
    Matrix X = random_matrix(rng, n, 3);
    std::vector<double> y;
    for (int i = 0; i < n; ++i)
        y.push_back(10.0 * X[i][2] + static_cast<double>(rng() % 3) * 0.1);

    ForestParams params;
    params.n_estimators = 30;
    params.seed = 5;
    ForestModel forest = ForestModel::fit(X, y, params, "t");

    const char* bank_json = R"({"questions": [
        {"id": "q.1", "domain": "direct", "topic": "T", "text": "first?"},
        {"id": "q.2", "domain": "direct", "topic": "T", "text": "second?"},
        {"id": "q.3", "domain": "direct", "topic": "T", "text": "third?"}]})";
    QuestionnaireBank bank = QuestionnaireBank::parse(bank_json, "tiny");

    auto top = importances_topk(forest, bank, 1);
    ASSERT_EQ(top.size(), 1u);
    EXPECT_EQ(top[0].first, "third?");

    EXPECT_TRUE(importances_topk(forest, bank, 0).empty());
    EXPECT_EQ(importances_topk(forest, bank, 99).size(), 3u);
}

TEST(Forest, JsonRoundTripPreservesPredictions) {
    std::mt19937_64 rng(12);
    Matrix X = random_matrix(rng, 20, 4);
    std::vector<double> y;
    for (int i = 0; i < 20; ++i) y.push_back(static_cast<double>(rng() % 40) / 3.0);
    ForestParams params;
    params.n_estimators = 7;
    params.max_depth = 5;
    params.seed = 3;
    ForestModel forest = ForestModel::fit(X, y, params, "phq8");

    ForestModel reloaded = ForestModel::from_json(forest.to_json());
    EXPECT_EQ(reloaded.target_name(), "phq8");
    EXPECT_EQ(forest.predict(X), reloaded.predict(X));
    EXPECT_EQ(forest.importances(), reloaded.importances());
}

TEST(Forest, HandBuiltLeafEnsembles) {
    // A forest whose two trees are bare leaves predicting 2 and 4 averages to 3.
    nlohmann::json doc = {
        {"target", "t"},
        {"feature_count", 1},
        {"params",
         {{"n_estimators", 2}, {"max_depth", 1}, {"bootstrap", false},
          {"features_per_split", "all"}, {"min_samples_leaf", 1}, {"seed", 0}}},
        {"importances", {0.0}},
        {"trees",
         {{{"type", "leaf"}, {"value", 2.0}, {"n", 1}},
          {{"type", "leaf"}, {"value", 4.0}, {"n", 1}}}}};
    ForestModel forest = ForestModel::from_json(doc);
    EXPECT_DOUBLE_EQ(forest.predict_row({0.0}), 3.0);

    doc["trees"] = {{{"type", "leaf"}, {"value", 3.0}, {"n", 1}}};
    doc["params"]["n_estimators"] = 1;
    ForestModel single = ForestModel::from_json(doc);
    EXPECT_DOUBLE_EQ(single.predict_row({123.0}), 3.0);
    EXPECT_DOUBLE_EQ(single.predict_row({-9.0}), 3.0);
}

TEST(Forest, RejectsDegenerateInputs) {
    ForestParams params;
    EXPECT_THROW(ForestModel::fit({}, {}, params), Error);
    EXPECT_THROW(ForestModel::fit({{1}}, {1}, params), Error);
    params.n_estimators = 0;
    EXPECT_THROW(ForestModel::fit({{1}, {2}}, {1, 2}, params), Error);
}

TEST(GridSearch, SingleCellGridReturnsThatCell) {
    std::mt19937_64 rng(31);
    Matrix X = random_matrix(rng, 20, 3);
    std::vector<double> y;
    for (int i = 0; i < 20; ++i) y.push_back(X[i][0] * 2.0);
    GridSpec grid;
    grid.n_estimators = {50};
    grid.max_depths = {4};
    GridSearchResult result = grid_search(X, y, X, y, ForestParams{}, grid);
    EXPECT_EQ(result.best_params.n_estimators, 50);
    EXPECT_EQ(result.best_params.max_depth, 4);
    EXPECT_EQ(result.cells.size(), 1u);
}

TEST(GridSearch, TiesResolveToSmallerParameters) {
    // Constant target: every cell scores identically, so the first cell
    // (smallest n_estimators, then smallest depth) must win.
    Matrix X = {{0}, {1}, {2}, {3}};
    std::vector<double> y = {5, 5, 5, 5};
    GridSpec grid;
    grid.n_estimators = {100, 200};
    grid.max_depths = {10, 20};
    GridSearchResult result = grid_search(X, y, X, y, ForestParams{}, grid);
    EXPECT_EQ(result.best_params.n_estimators, 100);
    EXPECT_EQ(result.best_params.max_depth, 10);
}

TEST(GridSearch, WinnerIsExhaustivelyOptimalOnDev) {
    std::mt19937_64 rng(63);
    Matrix train = random_matrix(rng, 30, 4);
    Matrix dev = random_matrix(rng, 10, 4);
    auto label = [](const std::vector<double>& row) { return row[0] * 3 + row[2]; };
    std::vector<double> train_y, dev_y;
    for (const auto& r : train) train_y.push_back(label(r));
    for (const auto& r : dev) dev_y.push_back(label(r));

    GridSpec grid;
    grid.n_estimators = {5, 10, 20};
    grid.max_depths = {2, 4, 8};
    ForestParams base;
    base.seed = 9;
    GridSearchResult result = grid_search(train, train_y, dev, dev_y, base, grid);
    ASSERT_EQ(result.cells.size(), 9u);
    for (const auto& cell : result.cells) EXPECT_LE(result.best_dev_mse, cell.dev_mse);
}

TEST(GridSearch, RejectsEmptyGridAndEmptySplits) {
    Matrix X = {{0}, {1}};
    std::vector<double> y = {0, 1};
    GridSpec empty;
    empty.n_estimators = {};
    EXPECT_THROW(grid_search(X, y, X, y, ForestParams{}, empty), Error);
    GridSpec grid;
    EXPECT_THROW(grid_search({}, {}, X, y, ForestParams{}, grid), Error);
}
