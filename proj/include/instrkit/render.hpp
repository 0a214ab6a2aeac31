#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "instrkit/corpus.hpp"
#include "instrkit/sampler.hpp"
#include "instrkit/warnings.hpp"

namespace instrkit {

enum class Task { Main, EE, ET };
enum class RenderMode { Instruction, Natural };
enum class LabelStyle { NaturalWords, SyntheticTokens };

// Task instructions. Kept as ordinary constants so alternates can be swapped
// in without touching the rendering logic.
inline constexpr std::string_view kMainInstruction =
    "please extract entities and their types from the input sentence, "
    "all entity types are in options.";
inline constexpr std::string_view kEEInstruction =
    "please extract entity words from the input sentence";
inline constexpr std::string_view kETInstruction =
    "please typing these entity words according to the sentence";

// Zero-entity sentinel target; a generative target cannot be empty.
inline constexpr std::string_view kEmptyTarget = "None.";

struct RenderOptions {
    Task task = Task::Main;
    RenderMode mode = RenderMode::Instruction;
    LabelStyle label_style = LabelStyle::NaturalWords;
};

// One model input/target pair.
struct RenderedExample {
    std::string sentence_id;
    RenderOptions render_options;
    std::string source;
    std::string target;
    std::vector<std::string> options_used;  // labels as surfaced in Options
};

// How a type label is surfaced in sources and targets:
// NaturalWords turns underscores into spaces ("restaurant_name" ->
// "restaurant name"); SyntheticTokens wraps the canonical label in angle
// brackets ("<restaurant_name>").
std::string surface_label(std::string_view etype, LabelStyle style);

// Inverse of surface_label, restricted to members of the type set. Returns
// nullopt when the text does not invert to a known canonical label.
std::optional<std::string> invert_surface_label(std::string_view text, LabelStyle style,
                                                const TypeSet& type_set);

// The special tokens emitted under SyntheticTokens, one per type, for the
// training harness to register ("<label>" in type-set order).
std::vector<std::string> special_tokens(const TypeSet& type_set);

// Model input. Instruction mode lays out labeled lines
// "Sentence: ...\nInstruction: ...\nOptions: ..."; the Options line is
// omitted for EE, and Natural mode is exactly the space-joined tokens. For
// ET the instruction is followed by ": " and the gold surfaces joined by
// ", " in (left, right) order; ET with empty gold throws ConfigError.
std::string render_input(const Sentence& sentence, const std::vector<EntityMention>& gold,
                         const TypeSet& type_set, const RenderOptions& opts);

// Expected model output. Main/ET: "<surface> is a/an <type>" clauses joined
// by ", " and terminated by "."; EE drops the "is a/an <type>" part. The
// article is "an" before a vowel-initial surfaced type. Empty gold renders
// the sentinel "None.".
std::string render_target(const Sentence& sentence, const std::vector<EntityMention>& gold,
                          const RenderOptions& opts);

// Batches rendering over an episode: Main for all episode ids, EE for
// episode.ee_ids, ET for episode.et_ids (ET skips empty-gold sentences with
// a warning). opts_list selects which tasks are rendered and must not repeat
// a task. Output order: episode sentence order, then task order
// Main < EE < ET. Unknown ids throw UnknownSentenceError.
// The OpenMP kernel and its serial reference produce identical output.
std::vector<RenderedExample> render_dataset(const Corpus& corpus, const Episode& episode,
                                            const std::vector<RenderOptions>& opts_list,
                                            WarningLog* warnings = nullptr);
std::vector<RenderedExample> render_dataset_serial(const Corpus& corpus, const Episode& episode,
                                                   const std::vector<RenderOptions>& opts_list,
                                                   WarningLog* warnings = nullptr);

const char* task_name(Task task);
const char* mode_name(RenderMode mode);
const char* label_style_name(LabelStyle style);
Task task_from_name(std::string_view name);
RenderMode mode_from_name(std::string_view name);
LabelStyle label_style_from_name(std::string_view name);

// JSONL: {"sentence_id","task","mode","label_style","source","target","options"}.
std::string examples_to_jsonl(const std::vector<RenderedExample>& examples);
std::vector<RenderedExample> examples_from_jsonl(const std::string& text);

void save_examples_jsonl(const std::vector<RenderedExample>& examples, const std::string& path);
std::vector<RenderedExample> load_examples_jsonl(const std::string& path);

// Sidecar list of synthetic special tokens, one per line.
void save_special_tokens(const TypeSet& type_set, const std::string& path);

}  // namespace instrkit
