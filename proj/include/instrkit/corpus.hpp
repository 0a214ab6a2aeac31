#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "instrkit/warnings.hpp"

namespace instrkit {

// A tokenized sentence. Tokens are non-empty and contain no whitespace.
struct Sentence {
    std::string id;
    std::vector<std::string> tokens;

    // Tokens joined by single spaces.
    std::string text() const;

    bool operator==(const Sentence&) const = default;
};

// One entity occurrence: inclusive token span [left, right] with a type.
struct EntityMention {
    int left = 0;
    int right = 0;
    std::string type;

    auto operator<=>(const EntityMention&) const = default;
};

// Ordered set of canonical entity type labels. Canonical labels use
// underscores as internal separators and contain no comma, whitespace or
// angle brackets.
class TypeSet {
public:
    TypeSet() = default;
    // Validates and keeps the given order; throws ConfigError on a bad label.
    explicit TypeSet(std::vector<std::string> labels);

    const std::vector<std::string>& labels() const { return labels_; }
    bool contains(std::string_view label) const;
    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }

    bool operator==(const TypeSet& other) const { return labels_ == other.labels_; }

    // True iff the label satisfies the canonical-label constraints.
    static bool valid_label(std::string_view label);

private:
    std::vector<std::string> labels_;
};

// Immutable collection of sentences plus gold mentions, indexed by id.
// gold[i] belongs to sentences[i] and is sorted by (left, right).
class Corpus {
public:
    Corpus() = default;
    // Validates invariants (mention bounds, sorted unique gold, types in the
    // type set, unique ids); throws ConfigError on violation.
    Corpus(std::string name, TypeSet type_set, std::vector<Sentence> sentences,
           std::vector<std::vector<EntityMention>> gold);

    const std::string& name() const { return name_; }
    const TypeSet& type_set() const { return type_set_; }
    const std::vector<Sentence>& sentences() const { return sentences_; }
    const std::vector<std::vector<EntityMention>>& gold() const { return gold_; }

    std::size_t size() const { return sentences_.size(); }
    bool empty() const { return sentences_.empty(); }

    // Index of the sentence with this id; throws UnknownSentenceError.
    std::size_t index_of(std::string_view id) const;
    bool has(std::string_view id) const;

    const Sentence& sentence_at(std::size_t i) const { return sentences_[i]; }
    const std::vector<EntityMention>& gold_at(std::size_t i) const { return gold_[i]; }
    const std::vector<EntityMention>& gold_for(std::string_view id) const;

    // Same sentences, gold and type set; the name is not compared.
    bool same_content(const Corpus& other) const;

private:
    std::string name_;
    TypeSet type_set_;
    std::vector<Sentence> sentences_;
    std::vector<std::vector<EntityMention>> gold_;
    std::unordered_map<std::string, std::size_t> by_id_;
};

enum class TagScheme { BIO, IOB1 };

// Parses token-per-line tagged text. Non-blank lines are
// "<token><separator><tag>" with the separator a tab or run of spaces; blank
// lines delimit sentences. Mentions are the maximal B/I runs under the
// scheme; the type set is the sorted set of observed labels; ids are
// "s<ordinal>". Malformed lines raise BioFormatError with the line number.
// Tag-sequence repairs (I without a compatible open run under strict BIO)
// open a new mention and bump the warning counter.
Corpus parse_bio(const std::vector<std::string>& lines, TagScheme scheme,
                 std::string name = "corpus", WarningLog* warnings = nullptr);

// Reads a UTF-8 BIO file and parses it.
Corpus load_bio_file(const std::string& path, TagScheme scheme,
                     std::string name = "", WarningLog* warnings = nullptr);

// Inverse of parse_bio for corpora with non-overlapping mentions: one
// "token<TAB>tag" line per token, blank line after each sentence.
std::vector<std::string> to_bio_lines(const Corpus& corpus);

struct StatsReport {
    std::size_t sentence_count = 0;
    std::size_t mention_count = 0;
    std::size_t type_count = 0;
    std::map<std::string, std::size_t> per_type;
};

StatsReport corpus_stats(const Corpus& corpus);

// The mention's tokens joined by single spaces.
std::string surface_text(const Sentence& sentence, const EntityMention& mention);

// JSONL serialization: one object per sentence,
// {"id": str, "tokens": [str], "entities": [{"left","right","type"}]}.
std::string corpus_to_jsonl(const Corpus& corpus);
Corpus corpus_from_jsonl(const std::string& text, std::string name = "corpus");

void save_corpus_jsonl(const Corpus& corpus, const std::string& path);
Corpus load_corpus_jsonl(const std::string& path, std::string name = "");

}  // namespace instrkit
