#include "cfkit/capgen/tagger.hpp"

#include <cctype>
#include <unordered_map>

namespace cfkit::capgen {

namespace {

const std::unordered_map<std::string, PosTag>& lexicon() {
    static const std::unordered_map<std::string, PosTag> lex = [] {
        std::unordered_map<std::string, PosTag> m;
        auto add = [&m](std::initializer_list<const char*> words, PosTag tag) {
            for (const char* w : words) m.emplace(w, tag);
        };
        add({"a", "an", "the", "this", "that", "these", "those", "every", "each", "some",
             "any", "no", "both"},
            PosTag::determiner);
        add({"of", "on", "in", "at", "by", "with", "from", "to", "under", "over", "near",
             "across", "through", "during", "between", "behind", "above", "below", "around",
             "inside", "outside", "onto", "into", "beside", "against", "along"},
            PosTag::preposition);
        add({"he", "she", "it", "they", "we", "you", "i", "his", "her", "its", "their",
             "our", "your", "them", "him", "us", "me", "who", "which", "s", "t"},
            PosTag::pronoun);
        add({"and", "or", "but", "nor", "so", "yet", "while", "because", "although", "if",
             "when", "as"},
            PosTag::conjunction);
        add({"is", "are", "was", "were", "be", "been", "being", "am", "do", "does", "did",
             "have", "has", "had", "can", "could", "will", "would", "shall", "should", "may",
             "might", "must", "sat", "sit", "sits", "ran", "run", "runs", "walk", "walks",
             "eat", "eats", "ate", "play", "plays", "stand", "stands", "stood", "sleep",
             "sleeps", "slept", "hold", "holds", "held", "ride", "rides", "rode", "lie",
             "lies", "lay", "lounge", "lounges", "go", "goes", "went", "gone", "jump",
             "jumps", "look", "looks", "race", "races", "wear", "wears", "wore"},
            PosTag::verb);
        add({"small", "big", "red", "blue", "green", "old", "young", "dirty", "clean",
             "tall", "short", "bright", "dark", "white", "black", "happy", "sad", "new",
             "good", "bad", "little", "large", "pink", "purple", "snowy", "eating"},
            PosTag::adjective);
        add({"quickly", "very", "quite", "really", "too", "also", "just", "now", "then",
             "here", "there", "not"},
            PosTag::adverb);
        // -ing/-ed words that are ordinarily nouns in captions
        add({"building", "buildings", "painting", "paintings", "ceiling", "clothing",
             "wedding", "morning", "evening", "king", "ring", "wing", "spring", "string",
             "thing", "bed", "bread", "head", "field", "yard", "board", "surfboard",
             "skateboard", "crowd", "food", "wood", "road", "kid", "child", "bird", "hand",
             "ground", "playground", "sand", "stand"},
            PosTag::noun);
        return m;
    }();
    return lex;
}

bool all_digits(const std::string& s) {
    for (unsigned char c : s) {
        if (!std::isdigit(c)) return false;
    }
    return !s.empty();
}

} // namespace

std::vector<PosTag> LexiconTagger::tag(const std::vector<Token>& tokens) const {
    std::vector<PosTag> tags;
    tags.reserve(tokens.size());
    for (const Token& t : tokens) {
        if (!t.is_word) {
            tags.push_back(PosTag::punctuation);
            continue;
        }
        if (all_digits(t.text)) {
            tags.push_back(PosTag::number);
            continue;
        }
        const std::string lower = to_lower(t.text);
        auto it = lexicon().find(lower);
        if (it != lexicon().end()) {
            tags.push_back(it->second);
            continue;
        }
        if (lower.size() >= 4 && lower.ends_with("ly")) {
            tags.push_back(PosTag::adverb);
        } else if (lower.size() >= 5 && lower.ends_with("ing")) {
            tags.push_back(PosTag::verb);
        } else if (lower.size() >= 4 && lower.ends_with("ed")) {
            tags.push_back(PosTag::verb);
        } else {
            tags.push_back(PosTag::noun);
        }
    }
    return tags;
}

const PosTagger& default_tagger() {
    static const LexiconTagger tagger;
    return tagger;
}

} // namespace cfkit::capgen
