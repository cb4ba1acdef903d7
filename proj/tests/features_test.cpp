#include "lmiq/default_bank.hpp"
#include "lmiq/features.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

using namespace lmiq;
namespace fs = std::filesystem;

namespace {

BackendConfig mock_config(int max_parallel = 1) {
    BackendConfig cfg;
    cfg.backend = BackendKind::Mock;
    cfg.mock_seed = 7;
    cfg.max_parallel = max_parallel;
    return cfg;
}

} // namespace

TEST(ExtractLmiq, SplitShapesMatchCorpusArithmetic) {
    Corpus corpus = generate_synthetic(60, 7);
    QuestionnaireBank bank = QuestionnaireBank::load_default();
    Gateway gateway(mock_config());
    SplitMatrices m = extract_lmiq(corpus, bank, full_domain_mask(), gateway);

    EXPECT_EQ(m.at(Split::Train).height(), 36u);
    EXPECT_EQ(m.at(Split::Dev).height(), 12u);
    EXPECT_EQ(m.at(Split::Test).height(), 12u);
    for (const auto& [split, matrix] : m) {
        EXPECT_EQ(matrix.width(), 135u);
        EXPECT_EQ(matrix.subject_ids.size(), matrix.height());
        EXPECT_EQ(matrix.target_phq8.size(), matrix.height());
        for (const auto& row : matrix.rows) {
            ASSERT_EQ(row.size(), 135u);
            for (double v : row) {
                EXPECT_GE(v, 1.0);
                EXPECT_LE(v, 5.0);
            }
        }
    }
    EXPECT_EQ(m.at(Split::Train).column_ids.front(), "mh.agoraphobia.1");
}

TEST(ExtractLmiq, MaskControlsWidthAndEmptyMaskThrows) {
    Corpus corpus = generate_synthetic(6, 2);
    QuestionnaireBank bank = QuestionnaireBank::load_default();
    Gateway gateway(mock_config());
    SplitMatrices m = extract_lmiq(corpus, bank, {Domain::Therapeutic}, gateway);
    EXPECT_EQ(m.at(Split::Train).width(), 15u);
    EXPECT_THROW(extract_lmiq(corpus, bank, {}, gateway), Error);
}

TEST(ExtractLmiq, DeterministicAndOrderedRegardlessOfParallelism) {
    Corpus corpus = generate_synthetic(10, 4);
    QuestionnaireBank bank = QuestionnaireBank::load_default();

    Gateway serial(mock_config(1));
    Gateway wide(mock_config(8));
    SplitMatrices a = extract_lmiq(corpus, bank, full_domain_mask(), serial);
    SplitMatrices b = extract_lmiq(corpus, bank, full_domain_mask(), wide);
    SplitMatrices c = extract_lmiq(corpus, bank, full_domain_mask(), serial);

    for (Split split : {Split::Train, Split::Dev, Split::Test}) {
        EXPECT_EQ(a.at(split).rows, b.at(split).rows);
        EXPECT_EQ(a.at(split).rows, c.at(split).rows);
        EXPECT_EQ(a.at(split).subject_ids, b.at(split).subject_ids);
    }
    // Row order is corpus order within each split.
    std::vector<std::string> expected_train;
    for (const Subject* s : corpus.split_subjects(Split::Train))
        expected_train.push_back(s->subject_id);
    EXPECT_EQ(a.at(Split::Train).subject_ids, expected_train);
}

TEST(ExtractLmiq, MaskedExtractionEqualsColumnSliceOfFullExtraction) {
    fs::path cache = fs::temp_directory_path() / ("lmiq_feat_cache_" + std::to_string(::getpid()));
    fs::remove_all(cache);
    BackendConfig cfg = mock_config();
    cfg.cache_dir = cache;

    Corpus corpus = generate_synthetic(8, 5);
    QuestionnaireBank bank = QuestionnaireBank::load_default();
    Gateway gateway(cfg);

    SplitMatrices full = extract_lmiq(corpus, bank, full_domain_mask(), gateway);
    DomainMask mask = {Domain::MentalHealth, Domain::Direct};
    SplitMatrices masked = extract_lmiq(corpus, bank, mask, gateway);

    std::vector<std::string> ids;
    for (const auto& q : bank.masked(mask).questions()) ids.push_back(q.id);
    for (Split split : {Split::Train, Split::Dev, Split::Test}) {
        FeatureMatrix sliced = full.at(split).select_columns(ids);
        EXPECT_EQ(masked.at(split).rows, sliced.rows);
        EXPECT_EQ(masked.at(split).column_ids, sliced.column_ids);
    }
    fs::remove_all(cache);
}

TEST(ExtractEmbedding, DirectWidthFollowsConfiguredDimension) {
    Corpus corpus = generate_synthetic(6, 3);
    Gateway gateway(mock_config());
    SplitMatrices m = extract_embedding(corpus, EmbeddingMode::Direct, gateway);
    EXPECT_EQ(m.at(Split::Train).width(), 256u);
    EXPECT_EQ(m.at(Split::Train).column_ids.front(), "emb_0");

    BackendConfig small = mock_config();
    small.mock_embed_dim = 32;
    Gateway gateway32(small);
    EXPECT_EQ(extract_embedding(corpus, EmbeddingMode::Direct, gateway32).at(Split::Dev).width(),
              32u);
}

TEST(ExtractEmbedding, IdenticalTranscriptsGiveIdenticalRows) {
    Corpus corpus;
    corpus.name = "clones";
    for (int i = 0; i < 4; ++i) {
        Subject s;
        s.subject_id = "c" + std::to_string(i);
        s.transcript = "Participant: same story every time.\n";
        s.phq8 = i * 3;
        s.pcl_c = 20 + i;
        s.split = i < 2 ? Split::Train : (i == 2 ? Split::Dev : Split::Test);
        corpus.subjects.push_back(s);
    }
    Gateway gateway(mock_config());
    SplitMatrices m = extract_embedding(corpus, EmbeddingMode::AnalyzeFirst, gateway);
    const auto& train = m.at(Split::Train);
    ASSERT_EQ(train.height(), 2u);
    EXPECT_EQ(train.rows[0], train.rows[1]);
    EXPECT_EQ(m.at(Split::Dev).rows[0], train.rows[0]);
}

TEST(ExtractEmbedding, EmptySplitKeepsWidth) {
    Corpus corpus;
    corpus.name = "no-dev";
    for (int i = 0; i < 3; ++i) {
        Subject s;
        s.subject_id = "s" + std::to_string(i);
        s.transcript = "Participant: short note " + std::to_string(i) + ".\n";
        s.phq8 = 4;
        s.pcl_c = 30;
        s.split = i < 2 ? Split::Train : Split::Test;
        corpus.subjects.push_back(s);
    }
    Gateway gateway(mock_config());
    SplitMatrices m = extract_embedding(corpus, EmbeddingMode::Direct, gateway);
    EXPECT_EQ(m.at(Split::Dev).height(), 0u);
    EXPECT_EQ(m.at(Split::Dev).width(), 256u);
}

TEST(FeatureMatrix, CsvHeaderAndSelection) {
    FeatureMatrix m;
    m.subject_ids = {"s1"};
    m.column_ids = {"a", "b"};
    m.rows = {{1.0, 2.0}};
    m.target_phq8 = {3.0};
    m.target_pclc = {20.0};
    std::string csv = m.to_csv();
    EXPECT_EQ(csv, "subject_id,a,b,phq8,pcl_c\ns1,1,2,3,20\n");

    FeatureMatrix sel = m.select_columns({"b"});
    EXPECT_EQ(sel.rows[0], std::vector<double>{2.0});
    EXPECT_THROW(m.select_columns({"zz"}), Error);
}
