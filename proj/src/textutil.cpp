#include "canonform/textutil.hpp"

#include <cctype>

namespace canonform::text {

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string_view trim(std::string_view s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

std::vector<std::string> tokenize(std::string_view s) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : s) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            current += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

bool contains_keyword(std::string_view label, std::string_view keyword) {
    const std::vector<std::string> words = tokenize(label);
    const std::vector<std::string> phrase = tokenize(keyword);
    if (phrase.empty() || words.size() < phrase.size()) return false;
    for (std::size_t i = 0; i + phrase.size() <= words.size(); ++i) {
        bool hit = true;
        for (std::size_t j = 0; j < phrase.size(); ++j) {
            if (words[i + j] != phrase[j]) {
                hit = false;
                break;
            }
        }
        if (hit) return true;
    }
    return false;
}

bool matches_any(std::string_view label, std::span<const std::string> keywords) {
    for (const std::string& k : keywords) {
        if (contains_keyword(label, k)) return true;
    }
    return false;
}

} // namespace canonform::text
