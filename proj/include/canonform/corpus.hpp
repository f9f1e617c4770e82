#pragma once

#include "canonform/braid.hpp"

#include <array>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace canonform::corpus {

enum class Category { Folktales, ReligiousMyths, Superheroes, Franchises };

inline constexpr std::array<Category, 4> kCategories{
    Category::Folktales, Category::ReligiousMyths,
    Category::Superheroes, Category::Franchises};

std::string_view category_name(Category c);    // "Folktales", "ReligiousMyths", ...
std::string_view category_prefix(Category c);  // "FO", "RE", "SU", "FR"
std::optional<Category> category_from_name(std::string_view name);

/// One corpus row: a story encoded into the four functional slots plus an
/// optional order-signature key. Transition logs live in a sidecar file and
/// are looked up by id (see keyderive).
struct StoryRecord {
    std::string id;  // prefix FO|RE|SU|FR + 2 digits
    Category category = Category::Folktales;
    std::string title;
    std::string a;  // focal agent
    std::string b;  // opposing force
    std::string x;  // mediator
    std::string y;  // constraint / legitimating order
    std::optional<braid::KeyArchetype> key;
    /// Unknown CSV columns, preserved verbatim in file order.
    std::vector<std::pair<std::string, std::string>> extras;

    bool operator==(const StoryRecord&) const = default;
};

/// An ordered, id-unique collection of records.
class Corpus {
public:
    Corpus() = default;
    /// Throws ValidationError on duplicate ids or id-prefix/category mismatch.
    explicit Corpus(std::vector<StoryRecord> records,
                    std::vector<std::string> extra_columns = {});

    const std::vector<StoryRecord>& records() const { return records_; }
    const std::vector<std::string>& extra_columns() const { return extra_columns_; }
    std::size_t size() const { return records_.size(); }
    const StoryRecord* find(std::string_view id) const;
    std::size_t category_count(Category c) const;

    bool operator==(const Corpus&) const = default;

private:
    std::vector<StoryRecord> records_;
    std::vector<std::string> extra_columns_;
};

/// True when every category holds exactly 20 records (the balanced design).
bool is_balanced(const Corpus& corpus);

/// Parses delimiter-separated text with the header
/// id,category,title,a,b,x,y,key (extra columns allowed and preserved).
/// Throws ParseError / ValidationError naming the offending row and field.
Corpus parse_corpus(std::istream& in);
Corpus load_corpus(const std::filesystem::path& path);

/// Inverse of parse_corpus; parse(serialize(c)) == c.
void serialize_corpus(const Corpus& corpus, std::ostream& out);
std::string serialize_corpus(const Corpus& corpus);

/// Label normalization: slash-collapse, then case folding, then synonym
/// mapping. Construction rejects synonym maps whose canonical forms are not
/// fixed points of the full pipeline, which is what makes normalize idempotent.
class NormalizationPolicy {
public:
    NormalizationPolicy() = default;
    NormalizationPolicy(bool collapse_slash, bool case_fold,
                        std::map<std::string, std::string> synonyms);

    /// collapse_slash + case_fold + {"royal court" -> "court"}.
    static NormalizationPolicy defaults();
    /// Slash-collapse only; the sensitivity harness's normalization move.
    static NormalizationPolicy slash_only();

    bool collapse_slash() const { return collapse_slash_; }
    bool case_fold() const { return case_fold_; }
    const std::map<std::string, std::string>& synonyms() const { return synonyms_; }

private:
    bool collapse_slash_ = false;
    bool case_fold_ = false;
    std::map<std::string, std::string> synonyms_;
};

/// Takes the first alternative of "A/B" (text before the first slash, trimmed).
std::string collapse_slash_label(std::string_view label);

std::string normalize_label(std::string_view label, const NormalizationPolicy& policy);

/// Normalizes the four slot labels; id, title, and extras are untouched.
StoryRecord normalize(const StoryRecord& record, const NormalizationPolicy& policy);

enum class AdvisoryKind { EmptySlot, IdenticalXY, BoundaryXY };

std::string_view advisory_kind_name(AdvisoryKind k);

struct Advisory {
    std::string id;
    AdvisoryKind kind = AdvisoryKind::EmptySlot;
    std::string message;
};

/// Machine-checkable coding-rule advisories (never errors): empty slots,
/// identical x/y labels, and the mediator/constraint boundary flag. The
/// boundary check fires when x matches a normative keyword and y matches
/// none; pass an empty span to skip it.
std::vector<Advisory> validate_roles(const StoryRecord& record,
                                     std::span<const std::string> normative_keywords = {});

} // namespace canonform::corpus
