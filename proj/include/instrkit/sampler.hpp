#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "instrkit/corpus.hpp"
#include "instrkit/warnings.hpp"

namespace instrkit {

// Knobs for one few-shot episode draw.
struct SampleSpec {
    std::uint64_t k = 1;     // target mention count per entity type
    std::uint64_t seed = 0;
    double aux_ratio = 0.0;  // fraction of the episode drawn for EACH aux task

    // Throws ConfigError when k < 1 or aux_ratio outside [0, 1].
    void validate() const;
};

// A sampled few-shot training subset. sentence_ids are in selection order;
// per_type_counts holds the achieved mention count for every type in the
// corpus type set. ee_ids/et_ids are filled by sample_aux_subset.
struct Episode {
    SampleSpec spec;
    std::vector<std::string> sentence_ids;
    std::map<std::string, std::size_t> per_type_counts;
    std::vector<std::string> ee_ids;
    std::vector<std::string> et_ids;
};

// Greedy per-type sampling: types are visited rarest-first (ties broken
// lexicographically); for each type, unselected sentences containing it are
// drawn uniformly until its running mention count reaches k or no candidate
// remains (a type with fewer than k mentions in the corpus therefore gets
// every sentence containing it). Counts advance for all types of a selected
// sentence. Deterministic for fixed (corpus, spec). A type with zero corpus
// occurrences yields count 0 and a warning.
Episode sample_episode(const Corpus& corpus, const SampleSpec& spec,
                       WarningLog* warnings = nullptr);

struct AuxSubsets {
    std::vector<std::string> ee_ids;
    std::vector<std::string> et_ids;
};

// Draws ceil(aux_ratio * |episode|) ids uniformly without replacement for
// each auxiliary task, from independent sub-streams of the seed; changing
// aux_ratio never perturbs the main episode.
AuxSubsets sample_aux_subset(const Episode& episode, const SampleSpec& spec);

// sample_episode + sample_aux_subset with the subsets stored on the episode.
Episode sample(const Corpus& corpus, const SampleSpec& spec,
               WarningLog* warnings = nullptr);

// JSON: {"k","seed","aux_ratio","sentence_ids","per_type_counts","ee_ids","et_ids"}.
std::string episode_to_json(const Episode& episode);
Episode episode_from_json(const std::string& text);

void save_episode_json(const Episode& episode, const std::string& path);
Episode load_episode_json(const std::string& path);

}  // namespace instrkit
