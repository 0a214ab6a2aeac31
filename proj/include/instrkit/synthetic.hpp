#pragma once

#include <cstdint>
#include <string>

#include "instrkit/corpus.hpp"

namespace instrkit {

// Generator for self-test and benchmark corpora. Tokens within a sentence
// are pairwise distinct lowercase words with no commas, so every mention
// surface occurs exactly once in its sentence and contains no " is a/an "
// substring; parse(render(gold)) then recovers gold exactly, for any subset
// of clauses.
struct SyntheticSpec {
    std::size_t sentence_count = 100;
    int min_tokens = 8;
    int max_tokens = 16;
    int max_mentions = 3;        // 0..max_mentions non-overlapping per sentence
    int max_mention_tokens = 3;  // span length 1..max_mention_tokens
    std::size_t num_types = 6;   // drawn from a fixed pool of 12 labels
    std::uint64_t seed = 1;
};

Corpus make_synthetic_corpus(const SyntheticSpec& spec, std::string name = "synthetic");

}  // namespace instrkit
