#include "canonform/corpus.hpp"

#include "canonform/csv.hpp"
#include "canonform/errors.hpp"
#include "canonform/textutil.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace canonform::corpus {

namespace {

constexpr std::array<std::string_view, 8> kHeader{
    "id", "category", "title", "a", "b", "x", "y", "key"};

bool valid_id(std::string_view id, Category category) {
    if (id.size() != 4) return false;
    if (id.substr(0, 2) != category_prefix(category)) return false;
    return std::isdigit(static_cast<unsigned char>(id[2])) &&
           std::isdigit(static_cast<unsigned char>(id[3]));
}

} // namespace

std::string_view category_name(Category c) {
    switch (c) {
        case Category::Folktales: return "Folktales";
        case Category::ReligiousMyths: return "ReligiousMyths";
        case Category::Superheroes: return "Superheroes";
        case Category::Franchises: return "Franchises";
    }
    return "Folktales";
}

std::string_view category_prefix(Category c) {
    switch (c) {
        case Category::Folktales: return "FO";
        case Category::ReligiousMyths: return "RE";
        case Category::Superheroes: return "SU";
        case Category::Franchises: return "FR";
    }
    return "FO";
}

std::optional<Category> category_from_name(std::string_view name) {
    if (name == "Folktales") return Category::Folktales;
    if (name == "ReligiousMyths" || name == "Religious Myths") return Category::ReligiousMyths;
    if (name == "Superheroes") return Category::Superheroes;
    if (name == "Franchises") return Category::Franchises;
    return std::nullopt;
}

Corpus::Corpus(std::vector<StoryRecord> records, std::vector<std::string> extra_columns)
    : records_(std::move(records)), extra_columns_(std::move(extra_columns)) {
    std::set<std::string_view> ids;
    for (const StoryRecord& r : records_) {
        if (!ids.insert(r.id).second) {
            throw ValidationError("duplicate id '" + r.id + "'");
        }
        if (!valid_id(r.id, r.category)) {
            throw ValidationError("id '" + r.id + "' does not match category " +
                                  std::string(category_name(r.category)) +
                                  " (expected prefix " +
                                  std::string(category_prefix(r.category)) +
                                  " + 2 digits)");
        }
    }
}

const StoryRecord* Corpus::find(std::string_view id) const {
    for (const StoryRecord& r : records_) {
        if (r.id == id) return &r;
    }
    return nullptr;
}

std::size_t Corpus::category_count(Category c) const {
    return static_cast<std::size_t>(std::count_if(
        records_.begin(), records_.end(),
        [c](const StoryRecord& r) { return r.category == c; }));
}

bool is_balanced(const Corpus& corpus) {
    for (Category c : kCategories) {
        if (corpus.category_count(c) != 20) return false;
    }
    return true;
}

Corpus parse_corpus(std::istream& in) {
    const std::vector<csv::Row> rows = csv::read(in);
    if (rows.empty()) throw ParseError("empty corpus file: missing header row");

    const csv::Row& header = rows.front();
    if (header.size() < kHeader.size()) {
        throw ParseError("corpus header must start with id,category,title,a,b,x,y,key");
    }
    for (std::size_t i = 0; i < kHeader.size(); ++i) {
        if (header[i] != kHeader[i]) {
            throw ParseError("corpus header column " + std::to_string(i + 1) +
                             " is '" + header[i] + "', expected '" +
                             std::string(kHeader[i]) + "'");
        }
    }
    std::vector<std::string> extra_columns(header.begin() + kHeader.size(), header.end());

    std::vector<StoryRecord> records;
    records.reserve(rows.size() - 1);
    for (std::size_t n = 1; n < rows.size(); ++n) {
        const csv::Row& row = rows[n];
        const std::string where = "row " + std::to_string(n);
        if (row.size() != header.size()) {
            throw ParseError(where + ": expected " + std::to_string(header.size()) +
                             " fields, got " + std::to_string(row.size()));
        }
        StoryRecord r;
        r.id = row[0];
        const std::optional<Category> category = category_from_name(row[1]);
        if (!category) {
            throw ValidationError(where + ": unknown category '" + row[1] + "'");
        }
        r.category = *category;
        r.title = row[2];
        r.a = row[3];
        r.b = row[4];
        r.x = row[5];
        r.y = row[6];
        if (!row[7].empty()) {
            const std::optional<braid::KeyArchetype> key = braid::archetype_from_name(row[7]);
            if (!key || *key == braid::KeyArchetype::Unclassified) {
                throw ValidationError(where + ": field key must be one of A-E or empty, got '" +
                                      row[7] + "'");
            }
            r.key = *key;
        }
        for (std::size_t i = 0; i < extra_columns.size(); ++i) {
            r.extras.emplace_back(extra_columns[i], row[kHeader.size() + i]);
        }
        records.push_back(std::move(r));
    }

    try {
        return Corpus(std::move(records), std::move(extra_columns));
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("corpus: ") + e.what());
    }
}

Corpus load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open corpus file " + path.string());
    return parse_corpus(in);
}

void serialize_corpus(const Corpus& corpus, std::ostream& out) {
    csv::Row header(kHeader.begin(), kHeader.end());
    header.insert(header.end(), corpus.extra_columns().begin(), corpus.extra_columns().end());
    csv::write_row(out, header);
    for (const StoryRecord& r : corpus.records()) {
        csv::Row row{r.id,
                     std::string(category_name(r.category)),
                     r.title,
                     r.a,
                     r.b,
                     r.x,
                     r.y,
                     r.key ? std::string(braid::archetype_name(*r.key)) : std::string{}};
        for (const auto& [_, value] : r.extras) row.push_back(value);
        csv::write_row(out, row);
    }
}

std::string serialize_corpus(const Corpus& corpus) {
    std::ostringstream out;
    serialize_corpus(corpus, out);
    return out.str();
}

std::string collapse_slash_label(std::string_view label) {
    const std::size_t slash = label.find('/');
    if (slash == std::string_view::npos) return std::string(label);
    return std::string(text::trim(label.substr(0, slash)));
}

NormalizationPolicy::NormalizationPolicy(bool collapse_slash, bool case_fold,
                                         std::map<std::string, std::string> synonyms)
    : collapse_slash_(collapse_slash), case_fold_(case_fold), synonyms_(std::move(synonyms)) {
    for (const auto& [from, to] : synonyms_) {
        std::string canonical = to;
        if (collapse_slash_) canonical = collapse_slash_label(canonical);
        if (case_fold_) canonical = text::to_lower(canonical);
        auto it = synonyms_.find(canonical);
        if (it != synonyms_.end()) canonical = it->second;
        if (canonical != to) {
            throw std::invalid_argument(
                "synonym map is not idempotent: '" + from + "' -> '" + to +
                "' but '" + to + "' is not a canonical form");
        }
    }
}

NormalizationPolicy NormalizationPolicy::defaults() {
    return NormalizationPolicy(true, true, {{"royal court", "court"}});
}

NormalizationPolicy NormalizationPolicy::slash_only() {
    return NormalizationPolicy(true, false, {});
}

std::string normalize_label(std::string_view label, const NormalizationPolicy& policy) {
    std::string out(label);
    if (policy.collapse_slash()) out = collapse_slash_label(out);
    if (policy.case_fold()) out = text::to_lower(out);
    auto it = policy.synonyms().find(out);
    if (it != policy.synonyms().end()) out = it->second;
    return out;
}

StoryRecord normalize(const StoryRecord& record, const NormalizationPolicy& policy) {
    StoryRecord out = record;
    out.a = normalize_label(record.a, policy);
    out.b = normalize_label(record.b, policy);
    out.x = normalize_label(record.x, policy);
    out.y = normalize_label(record.y, policy);
    return out;
}

std::string_view advisory_kind_name(AdvisoryKind k) {
    switch (k) {
        case AdvisoryKind::EmptySlot: return "empty-slot";
        case AdvisoryKind::IdenticalXY: return "x/y-identical";
        case AdvisoryKind::BoundaryXY: return "x/y-boundary";
    }
    return "empty-slot";
}

std::vector<Advisory> validate_roles(const StoryRecord& record,
                                     std::span<const std::string> normative_keywords) {
    std::vector<Advisory> out;
    const std::array<std::pair<std::string_view, const std::string*>, 4> slots{{
        {"a", &record.a}, {"b", &record.b}, {"x", &record.x}, {"y", &record.y}}};
    for (const auto& [name, label] : slots) {
        if (text::trim(*label).empty()) {
            out.push_back({record.id, AdvisoryKind::EmptySlot,
                           "slot " + std::string(name) + " is empty"});
        }
    }
    if (!text::trim(record.x).empty() && record.x == record.y) {
        out.push_back({record.id, AdvisoryKind::IdenticalXY,
                       "x and y carry the identical label '" + record.x + "'"});
    }
    if (!normative_keywords.empty()) {
        const bool x_normative = text::matches_any(record.x, normative_keywords);
        const bool y_normative = text::matches_any(record.y, normative_keywords);
        if (x_normative && !y_normative) {
            out.push_back({record.id, AdvisoryKind::BoundaryXY,
                           "x ('" + record.x + "') names a constraint-type term but y ('" +
                               record.y + "') does not; mediator/constraint may be swapped"});
        }
    }
    return out;
}

} // namespace canonform::corpus
