#include "canonform/lexicon.hpp"

#include "canonform/errors.hpp"
#include "canonform/textutil.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace canonform::analytics {

ConstraintLexicon::ConstraintLexicon(
    std::vector<std::pair<std::string, std::vector<std::string>>> types,
    std::vector<std::string> extra_normative)
    : types_(std::move(types)) {
    std::set<std::string> flat(extra_normative.begin(), extra_normative.end());
    for (const auto& [_, keywords] : types_) {
        flat.insert(keywords.begin(), keywords.end());
    }
    normative_.assign(flat.begin(), flat.end());
}

ConstraintLexicon parse_lexicon(std::istream& in) {
    std::vector<std::pair<std::string, std::vector<std::string>>> types;
    std::vector<std::string> extras;
    std::vector<std::string>* current = nullptr;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view s = text::trim(line);
        if (s.empty() || s.front() == '#') continue;
        if (s.front() == '[') {
            if (s.back() != ']' || s.size() < 3) {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": malformed section header '" + std::string(s) + "'");
            }
            const std::string name(text::trim(s.substr(1, s.size() - 2)));
            if (name == "normative") {
                current = &extras;
            } else {
                types.emplace_back(name, std::vector<std::string>{});
                current = &types.back().second;
            }
            continue;
        }
        if (!current) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": keyword before any [section] header");
        }
        // one keyword per line, or several separated by commas
        std::size_t start = 0;
        const std::string text_line(s);
        while (start <= text_line.size()) {
            const std::size_t comma = text_line.find(',', start);
            const std::string_view piece =
                text::trim(std::string_view(text_line).substr(
                    start, comma == std::string::npos ? std::string::npos : comma - start));
            if (!piece.empty()) current->push_back(text::to_lower(piece));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return ConstraintLexicon(std::move(types), std::move(extras));
}

ConstraintLexicon load_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open lexicon file " + path.string());
    return parse_lexicon(in);
}

} // namespace canonform::analytics
