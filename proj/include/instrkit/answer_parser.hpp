#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "instrkit/corpus.hpp"
#include "instrkit/render.hpp"

namespace instrkit {

// Why a clause of a generated answer was ignored.
enum class DropReason { NoIsA, SurfaceUnmatched, TypeUnknown, Duplicate };

const char* drop_reason_name(DropReason reason);

struct DroppedClause {
    std::string clause;
    DropReason reason;
};

struct PredTriplet {
    int left = 0;
    int right = 0;
    std::string type;
    bool case_fallback = false;  // surface matched only case-insensitively

    bool operator==(const PredTriplet& other) const {
        return left == other.left && right == other.right && type == other.type;
    }
};

// Predicted type of span-only (entity-extraction) triplets. Canonical labels
// cannot contain angle brackets, so this never collides with a real type.
inline constexpr std::string_view kSpanOnlyType = "<span>";

struct Prediction {
    std::string sentence_id;
    std::string raw;
    std::vector<PredTriplet> triplets;
    std::vector<DroppedClause> dropped;
};

// Converts one generated answer into triplets. Never fails: anomalies become
// dropped clauses. Steps: strip one trailing "." (a bare "None" remainder
// means zero triplets); split on ","; per clause find the LAST " is a/an "
// span (absent -> NoIsA); match the prefix as a contiguous token subsequence
// of the sentence, exact case first then case-insensitive, taking the
// LEFTMOST occurrence not overlapping a span consumed by an earlier emitted
// clause (none -> SurfaceUnmatched); invert the suffix to a canonical label
// in the type set (fail -> TypeUnknown); an already-emitted identical
// triplet is dropped as Duplicate. With span_only = true (entity-extraction
// outputs) the " is a/an " and type steps are skipped, each clause is a bare
// surface, and triplets carry kSpanOnlyType.
Prediction parse_output(const std::string& raw, const Sentence& sentence,
                        const TypeSet& type_set, LabelStyle label_style,
                        bool span_only = false);

// Element-wise parse_output over (sentence_id, raw) pairs, order preserved.
// Unknown ids throw UnknownSentenceError.
// The OpenMP kernel and its serial reference produce identical output.
std::vector<Prediction> parse_batch(const std::vector<std::pair<std::string, std::string>>& outputs,
                                    const Corpus& corpus, LabelStyle label_style,
                                    bool span_only = false);
std::vector<Prediction> parse_batch_serial(
    const std::vector<std::pair<std::string, std::string>>& outputs, const Corpus& corpus,
    LabelStyle label_style, bool span_only = false);

// JSONL: {"sentence_id","raw","triplets":[{"left","right","type"}],
//         "dropped":[{"clause","reason"}]}.
std::string predictions_to_jsonl(const std::vector<Prediction>& predictions);
std::vector<Prediction> predictions_from_jsonl(const std::string& text);

void save_predictions_jsonl(const std::vector<Prediction>& predictions, const std::string& path);
std::vector<Prediction> load_predictions_jsonl(const std::string& path);

}  // namespace instrkit
