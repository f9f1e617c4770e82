#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace canonform::analytics {

/// Keyword lexicon for the constraint register: named constraint types plus
/// extra normative terms. The effective normative set is the union of every
/// type's keywords and the extras. Matching is case-insensitive whole-word;
/// multi-word keywords match as contiguous phrases.
class ConstraintLexicon {
public:
    ConstraintLexicon() = default;
    ConstraintLexicon(std::vector<std::pair<std::string, std::vector<std::string>>> types,
                      std::vector<std::string> extra_normative);

    const std::vector<std::pair<std::string, std::vector<std::string>>>& types() const {
        return types_;
    }
    /// Union of all type keywords and the extras, deduplicated, sorted.
    const std::vector<std::string>& normative() const { return normative_; }

private:
    std::vector<std::pair<std::string, std::vector<std::string>>> types_;
    std::vector<std::string> normative_;
};

/// Parses the lexicon format: "[TypeName]" sections with one keyword per
/// line (or comma-separated); the "[normative]" section holds the extras.
/// '#' starts a comment. See docs/FORMATS.md.
ConstraintLexicon parse_lexicon(std::istream& in);
ConstraintLexicon load_lexicon(const std::filesystem::path& path);

} // namespace canonform::analytics
