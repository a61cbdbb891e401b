#pragma once

// Byte-span tokenizer shared by the caption pipeline and the mock backends.
// Words are maximal ASCII alphanumeric runs; every other non-space byte is a
// single punctuation token. Spans are byte offsets into the input.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace cfkit {

struct Token {
    std::string text;
    std::size_t begin = 0; // byte offset, inclusive
    std::size_t end = 0;   // byte offset, exclusive
    bool is_word = false;
};

inline bool is_word_byte(unsigned char c) { return std::isalnum(c) != 0; }

inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (is_word_byte(c)) {
            std::size_t j = i + 1;
            while (j < text.size() && is_word_byte(static_cast<unsigned char>(text[j]))) ++j;
            tokens.push_back({std::string(text.substr(i, j - i)), i, j, true});
            i = j;
        } else {
            tokens.push_back({std::string(text.substr(i, 1)), i, i + 1, false});
            ++i;
        }
    }
    return tokens;
}

inline std::vector<std::string> word_tokens(std::string_view text) {
    std::vector<std::string> words;
    for (const Token& t : tokenize(text)) {
        if (t.is_word) words.push_back(t.text);
    }
    return words;
}

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace cfkit
