#pragma once

// Part-of-speech tagging interface used for noun-site extraction and
// replacement validation. The default tagger is lexicon + suffix driven and
// deterministic; unknown words default to noun, mirroring the backoff
// behavior of classical perceptron taggers on caption-style text.

#include <vector>

#include "cfkit/core/tokenize.hpp"

namespace cfkit::capgen {

enum class PosTag {
    noun,
    verb,
    adjective,
    adverb,
    determiner,
    preposition,
    pronoun,
    conjunction,
    number,
    punctuation,
    other,
};

class PosTagger {
public:
    virtual ~PosTagger() = default;
    /// One tag per token, in token order. May throw TaggerError.
    virtual std::vector<PosTag> tag(const std::vector<Token>& tokens) const = 0;
};

class LexiconTagger : public PosTagger {
public:
    std::vector<PosTag> tag(const std::vector<Token>& tokens) const override;
};

const PosTagger& default_tagger();

} // namespace cfkit::capgen
