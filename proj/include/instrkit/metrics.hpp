#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "instrkit/answer_parser.hpp"
#include "instrkit/corpus.hpp"

namespace instrkit {

struct TypeCounts {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    double f1 = 0.0;
};

// Micro-averaged entity-level scores. Typed counts require exact (l, r, t)
// matches; span counts require only the (l, r) boundaries.
struct EvalReport {
    std::size_t tp = 0, fp = 0, fn = 0;
    std::size_t span_tp = 0, span_fp = 0, span_fn = 0;
    double precision = 0.0, recall = 0.0, f1 = 0.0;
    double span_precision = 0.0, span_recall = 0.0, span_f1 = 0.0;
    std::map<std::string, TypeCounts> per_type;
};

// 2PR/(P+R) with the 0/0 -> 0 convention.
double f1_score(std::size_t tp, std::size_t fp, std::size_t fn);

// Scores predictions against the gold mentions of their sentences. Each
// prediction is matched per sentence by multiset intersection: typed TP on
// exact triplets, span TP on (l, r) pairs. FP/FN are the unmatched remainder.
// Unknown ids throw UnknownSentenceError.
// The OpenMP kernel and its serial reference produce identical output.
EvalReport score(const std::vector<Prediction>& predictions, const Corpus& corpus);
EvalReport score_serial(const std::vector<Prediction>& predictions, const Corpus& corpus);

struct AggregateReport {
    std::size_t runs = 0;
    double mean_f1 = 0.0;
    double std_f1 = 0.0;  // population standard deviation
    double mean_span_f1 = 0.0;
    double std_span_f1 = 0.0;
};

// Mean and population standard deviation over the reports' F1 fields.
// Throws ConfigError on an empty list.
AggregateReport aggregate(const std::vector<EvalReport>& reports);

// JSON with integer counts and six-decimal fixed-point rates.
std::string report_to_json(const EvalReport& report);
EvalReport report_from_json(const std::string& text);
void save_report_json(const EvalReport& report, const std::string& path);

std::string aggregate_to_json(const AggregateReport& agg);
void save_aggregate_json(const AggregateReport& agg, const std::string& path);

// One-line "P/R/F1 spanP/spanR/spanF1" summary.
std::string summary_line(const EvalReport& report);

}  // namespace instrkit
