#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "instrkit/backend.hpp"
#include "instrkit/corpus.hpp"
#include "instrkit/metrics.hpp"
#include "instrkit/render.hpp"
#include "instrkit/sampler.hpp"

namespace instrkit {

// Classifies each gold mention's recoverability through the render -> parse
// round trip, giving the exact score ceiling an oracle backend can reach.
struct LintReport {
    std::size_t total_mentions = 0;
    std::size_t recovered = 0;          // parsed back to the exact triplet
    std::size_t comma_surfaces = 0;     // surface contains a comma
    std::size_t template_surfaces = 0;  // surface contains " is a/an "
    std::size_t displaced = 0;          // matched at a different span
    std::size_t lost = 0;               // dropped entirely
    double ceiling_f1 = 0.0;
    double ceiling_span_f1 = 0.0;
};

// Renders each sentence's gold target (Main task), parses it back and
// compares with gold. `sentence_indices` selects the sentences to lint.
LintReport lint_round_trip(const Corpus& corpus, LabelStyle label_style,
                           const std::vector<std::size_t>& sentence_indices);
LintReport lint_round_trip(const Corpus& corpus, LabelStyle label_style);

std::string lint_to_json(const LintReport& lint);

// Full-chain configuration: ingest -> sample -> render -> infer -> parse ->
// score, once per seed in {seed .. seed + runs - 1}.
struct PipelineConfig {
    std::string train_path;      // BIO file or corpus JSONL (.jsonl)
    std::string test_path;       // optional; eval falls back to the episode
    TagScheme scheme = TagScheme::BIO;
    std::string corpus_name = "corpus";

    std::uint64_t k = 10;
    std::uint64_t seed = 1;
    std::size_t runs = 3;
    double aux_ratio = 0.0;

    RenderMode mode = RenderMode::Instruction;
    LabelStyle label_style = LabelStyle::NaturalWords;

    BackendConfig backend;

    std::string out_dir;

    void validate() const;
};

struct RunResult {
    std::uint64_t seed = 0;
    Episode episode;
    LintReport lint;
    EvalReport report;
};

struct PipelineResult {
    std::vector<RunResult> runs;
    AggregateReport aggregate;
};

// Runs the chain, writing every intermediate artifact under cfg.out_dir:
// corpus.jsonl (+ corpus_test.jsonl), then per run run_<seed>/{episode.json,
// train_examples.jsonl, eval_examples.jsonl, outputs.jsonl,
// predictions.jsonl, report.json, lint.json} and aggregate.json at the top.
// Identical config -> byte-identical artifacts. Any stage failure surfaces
// as a structured error naming the stage.
PipelineResult run_pipeline(const PipelineConfig& cfg);

// Loads a corpus from a BIO file or, when the path ends in ".jsonl", from
// corpus JSONL.
Corpus load_corpus_any(const std::string& path, TagScheme scheme, std::string name,
                       WarningLog* warnings = nullptr);

}  // namespace instrkit
