#pragma once

#include "canonform/corpus.hpp"
#include "canonform/keyderive.hpp"
#include "canonform/lexicon.hpp"

#include <array>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace canonform::analytics {

struct Share {
    std::size_t count = 0;
    std::size_t total = 0;
    double fraction = 0.0;
};

/// Fraction of records whose normalized y matches at least one normative
/// keyword. Throws ValidationError on an empty corpus.
Share normative_share(const corpus::Corpus& corpus, const ConstraintLexicon& lexicon);

/// Per-category variant, skipping empty categories.
std::vector<std::pair<corpus::Category, Share>> normative_share_by_category(
    const corpus::Corpus& corpus, const ConstraintLexicon& lexicon);

/// Category x constraint-type matrix: each cell is the share of the
/// category's records whose y matches that type's keywords. Types can
/// co-occur, so rows need not sum to 1.
struct ConstraintSignature {
    std::vector<std::string> type_names;                 // lexicon order
    std::array<std::vector<double>, 4> shares;           // by Category order
    double at(corpus::Category c, std::size_t type) const {
        return shares[static_cast<std::size_t>(c)][type];
    }
};

ConstraintSignature constraint_signature(const corpus::Corpus& corpus,
                                         const ConstraintLexicon& lexicon);

/// Category x {A..E} counts. Requires a key on every record; throws
/// ValidationError listing the ids that lack one.
struct KeyDistribution {
    std::array<std::array<std::size_t, 5>, 4> counts{};  // [category][archetype]
    std::size_t at(corpus::Category c, braid::KeyArchetype k) const {
        return counts[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
    }
    std::size_t row_total(corpus::Category c) const;
};

KeyDistribution key_distribution(const corpus::Corpus& corpus);

/// Resolves every record's key: the declared key when present, otherwise the
/// key derived from the record's transition log. Throws ValidationError
/// listing ids with neither.
corpus::Corpus resolve_keys(const corpus::Corpus& corpus,
                            const keyderive::TransitionLogSet& logs);

/// Token set for the resemblance baseline: lowercased alphanumeric runs of
/// the four slot labels, deduplicated (slash alternatives all kept).
std::vector<std::string> baseline_tokens(const corpus::StoryRecord& record);

struct JaccardMatrix {
    std::vector<std::string> ids;
    std::vector<std::vector<double>> values;  // symmetric, unit diagonal
    double at(std::size_t i, std::size_t j) const { return values[i][j]; }
};

/// Pairwise |intersection| / |union| of baseline token sets. Throws
/// ValidationError when a record has an empty token set.
JaccardMatrix jaccard_baseline(const corpus::Corpus& corpus);

enum class PerturbationKind { SlashNormalize, SwapXY };

std::string_view perturbation_kind_name(PerturbationKind k);
std::optional<PerturbationKind> perturbation_kind_from_name(std::string_view name);

struct PlanEntry {
    std::string id;
    PerturbationKind kind = PerturbationKind::SlashNormalize;
};

/// Plan file: CSV with header id,perturbation.
std::vector<PlanEntry> parse_plan(std::istream& in);
std::vector<PlanEntry> load_plan(const std::filesystem::path& path);

/// Applies the perturbation to the record's slot labels: SlashNormalize
/// collapses slash alternatives in all four slots; SwapXY exchanges x and y.
corpus::StoryRecord perturb_record(const corpus::StoryRecord& record, PerturbationKind kind);

/// Suffix of the sidecar block holding a story's perturbed transition log,
/// looked up as "<id>.swapxy" when a SwapXY perturbation re-derives its key.
inline constexpr std::string_view kSwapXYLogSuffix = ".swapxy";

struct SensitivityRow {
    std::string id;
    braid::KeyArchetype original = braid::KeyArchetype::Unclassified;
    PerturbationKind kind = PerturbationKind::SlashNormalize;
    braid::KeyArchetype fresh = braid::KeyArchetype::Unclassified;
    bool stable = false;
};

struct SensitivityReport {
    std::vector<SensitivityRow> rows;
    std::size_t stable = 0;
    std::size_t total = 0;
};

/// Re-derives each targeted story's key after its perturbation and reports
/// stability. Keys come from the transition logs when available (the
/// perturbed "<id>.swapxy" block for SwapXY), else from the declared key of
/// the perturbed record. Throws ValidationError on unknown ids or when a
/// targeted record has no key either way.
SensitivityReport sensitivity_test(const corpus::Corpus& corpus,
                                   std::span<const PlanEntry> plan,
                                   const keyderive::TransitionLogSet& logs);

struct AgreementItem {
    std::string id;
    std::string slot;  // "a", "b", "x", or "y"
    std::string coder1;
    std::string coder2;
};

/// Agreement file: CSV with header id,slot,coder1,coder2.
std::vector<AgreementItem> parse_agreement(std::istream& in);
std::vector<AgreementItem> load_agreement(const std::filesystem::path& path);

struct AgreementRow {
    std::string slot;
    std::size_t items = 0;
    double exact = 0.0;
    /// Cohen's kappa on normalized labels; absent when chance agreement is 1.
    std::optional<double> kappa;
};

/// Slot-level exact agreement and unweighted Cohen's kappa on normalized
/// labels. Throws ValidationError when a slot has fewer than 2 items.
std::vector<AgreementRow> agreement_stats(std::span<const AgreementItem> items,
                                          const corpus::NormalizationPolicy& policy);

} // namespace canonform::analytics
