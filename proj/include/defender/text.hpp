#pragma once

#include <string>
#include <unordered_set>
#include <vector>

namespace defender {

inline std::string to_lower_ascii(const std::string& s) {
    std::string out = s;
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

inline bool is_token_byte(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c >= 0x80;  // keep UTF-8 continuation/lead bytes inside tokens
}

/// Lowercased word tokens: split on ASCII non-alphanumerics. '#' is a
/// separator, so hashtag bodies survive as plain tokens.
inline std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (unsigned char c : text) {
        if (is_token_byte(c)) {
            if (c >= 'A' && c <= 'Z') c = static_cast<unsigned char>(c - 'A' + 'a');
            cur.push_back(static_cast<char>(c));
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

/// Lowercased hashtag bodies in order of appearance ("#Flu" -> "flu").
inline std::vector<std::string> extract_hashtags(const std::string& text) {
    std::vector<std::string> out;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '#') continue;
        std::string tag;
        size_t j = i + 1;
        while (j < text.size() && is_token_byte(static_cast<unsigned char>(text[j]))) {
            char c = text[j];
            if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
            tag.push_back(c);
            ++j;
        }
        if (!tag.empty()) out.push_back(tag);
        i = j - 1;
    }
    return out;
}

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

/// Minimal English stopword list; callers may supply their own.
inline const std::unordered_set<std::string>& default_stopwords() {
    static const std::unordered_set<std::string> words = {
        "a",     "about", "after", "again",  "all",   "am",    "an",    "and",   "any",
        "are",   "as",    "at",    "be",     "been",  "but",   "by",    "can",   "cant",
        "could", "did",   "do",    "does",   "dont",  "for",   "from",  "get",   "got",
        "had",   "has",   "have",  "he",     "her",   "here",  "him",   "his",   "how",
        "i",     "if",    "im",    "in",     "into",  "is",    "it",    "its",   "ive",
        "just",  "like",  "me",    "more",   "my",    "no",    "not",   "now",   "of",
        "off",   "on",    "one",   "or",     "our",   "out",   "over",  "so",    "she",
        "some",  "still", "than",  "that",   "the",   "their", "them",  "then",  "there",
        "these", "they",  "this",  "to",     "too",   "up",    "us",    "was",   "we",
        "were",  "what",  "when",  "where",  "which", "who",   "why",   "will",  "with",
        "would", "you",   "your",  "youre",  "been",  "being", "down",  "only",  "very",
        "while", "because", "before", "between", "both", "each", "few", "most",  "other",
        "same",  "such",  "until", "again",  "once",  "during"};
    return words;
}

}  // namespace defender
