#include "canonform/analytics.hpp"

#include "canonform/csv.hpp"
#include "canonform/errors.hpp"
#include "canonform/textutil.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

namespace canonform::analytics {

using corpus::Category;
using corpus::Corpus;
using corpus::StoryRecord;

namespace {

bool y_matches(const StoryRecord& record, std::span<const std::string> keywords) {
    return text::matches_any(record.y, keywords);
}

} // namespace

Share normative_share(const Corpus& corpus, const ConstraintLexicon& lexicon) {
    if (corpus.size() == 0) {
        throw ValidationError("normative_share: corpus is empty");
    }
    Share share;
    share.total = corpus.size();
    for (const StoryRecord& r : corpus.records()) {
        if (y_matches(r, lexicon.normative())) ++share.count;
    }
    share.fraction = static_cast<double>(share.count) / static_cast<double>(share.total);
    return share;
}

std::vector<std::pair<Category, Share>> normative_share_by_category(
    const Corpus& corpus, const ConstraintLexicon& lexicon) {
    std::vector<std::pair<Category, Share>> out;
    for (Category c : corpus::kCategories) {
        Share share;
        for (const StoryRecord& r : corpus.records()) {
            if (r.category != c) continue;
            ++share.total;
            if (y_matches(r, lexicon.normative())) ++share.count;
        }
        if (share.total == 0) continue;
        share.fraction = static_cast<double>(share.count) / static_cast<double>(share.total);
        out.emplace_back(c, share);
    }
    return out;
}

ConstraintSignature constraint_signature(const Corpus& corpus,
                                         const ConstraintLexicon& lexicon) {
    ConstraintSignature sig;
    for (const auto& [name, _] : lexicon.types()) sig.type_names.push_back(name);
    for (Category c : corpus::kCategories) {
        auto& row = sig.shares[static_cast<std::size_t>(c)];
        row.assign(sig.type_names.size(), 0.0);
        std::size_t total = 0;
        for (const StoryRecord& r : corpus.records()) {
            if (r.category != c) continue;
            ++total;
            for (std::size_t t = 0; t < lexicon.types().size(); ++t) {
                if (y_matches(r, lexicon.types()[t].second)) row[t] += 1.0;
            }
        }
        if (total > 0) {
            for (double& cell : row) cell /= static_cast<double>(total);
        }
    }
    return sig;
}

std::size_t KeyDistribution::row_total(Category c) const {
    std::size_t total = 0;
    for (std::size_t k = 0; k < 5; ++k) total += counts[static_cast<std::size_t>(c)][k];
    return total;
}

KeyDistribution key_distribution(const Corpus& corpus) {
    std::vector<std::string> missing;
    KeyDistribution dist;
    for (const StoryRecord& r : corpus.records()) {
        if (!r.key) {
            missing.push_back(r.id);
            continue;
        }
        dist.counts[static_cast<std::size_t>(r.category)]
                   [static_cast<std::size_t>(*r.key)] += 1;
    }
    if (!missing.empty()) {
        std::string ids;
        for (const std::string& id : missing) {
            if (!ids.empty()) ids += ", ";
            ids += id;
        }
        throw ValidationError("key_distribution: records without a key: " + ids);
    }
    return dist;
}

Corpus resolve_keys(const Corpus& corpus, const keyderive::TransitionLogSet& logs) {
    std::vector<StoryRecord> records = corpus.records();
    std::vector<std::string> missing;
    for (StoryRecord& r : records) {
        if (r.key) continue;
        if (const keyderive::TransitionLog* log = logs.find(r.id)) {
            r.key = keyderive::assign_key(*log);
        } else {
            missing.push_back(r.id);
        }
    }
    if (!missing.empty()) {
        std::string ids;
        for (const std::string& id : missing) {
            if (!ids.empty()) ids += ", ";
            ids += id;
        }
        throw ValidationError("resolve_keys: records with neither a declared key nor a "
                              "transition log: " + ids);
    }
    return Corpus(std::move(records), corpus.extra_columns());
}

std::vector<std::string> baseline_tokens(const StoryRecord& record) {
    std::set<std::string> tokens;
    for (const std::string* label : {&record.a, &record.b, &record.x, &record.y}) {
        for (std::string& t : text::tokenize(*label)) tokens.insert(std::move(t));
    }
    return {tokens.begin(), tokens.end()};
}

JaccardMatrix jaccard_baseline(const Corpus& corpus) {
    JaccardMatrix m;
    std::vector<std::vector<std::string>> token_sets;
    for (const StoryRecord& r : corpus.records()) {
        std::vector<std::string> tokens = baseline_tokens(r);
        if (tokens.empty()) {
            throw ValidationError("jaccard_baseline: record '" + r.id +
                                  "' has an empty token set");
        }
        m.ids.push_back(r.id);
        token_sets.push_back(std::move(tokens));
    }
    const std::size_t n = token_sets.size();
    m.values.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        m.values[i][i] = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<std::string> inter;
            std::set_intersection(token_sets[i].begin(), token_sets[i].end(),
                                  token_sets[j].begin(), token_sets[j].end(),
                                  std::back_inserter(inter));
            const std::size_t unions =
                token_sets[i].size() + token_sets[j].size() - inter.size();
            const double value =
                static_cast<double>(inter.size()) / static_cast<double>(unions);
            m.values[i][j] = value;
            m.values[j][i] = value;
        }
    }
    return m;
}

std::string_view perturbation_kind_name(PerturbationKind k) {
    return k == PerturbationKind::SlashNormalize ? "SlashNormalize" : "SwapXY";
}

std::optional<PerturbationKind> perturbation_kind_from_name(std::string_view name) {
    if (name == "SlashNormalize") return PerturbationKind::SlashNormalize;
    if (name == "SwapXY") return PerturbationKind::SwapXY;
    return std::nullopt;
}

std::vector<PlanEntry> parse_plan(std::istream& in) {
    const std::vector<csv::Row> rows = csv::read(in);
    if (rows.empty() || rows.front() != csv::Row{"id", "perturbation"}) {
        throw ParseError("plan file must start with header id,perturbation");
    }
    std::vector<PlanEntry> plan;
    for (std::size_t n = 1; n < rows.size(); ++n) {
        const csv::Row& row = rows[n];
        if (row.size() != 2) {
            throw ParseError("plan row " + std::to_string(n) + ": expected 2 fields");
        }
        const auto kind = perturbation_kind_from_name(row[1]);
        if (!kind) {
            throw ParseError("plan row " + std::to_string(n) + ": unknown perturbation '" +
                             row[1] + "'");
        }
        plan.push_back(PlanEntry{row[0], *kind});
    }
    return plan;
}

std::vector<PlanEntry> load_plan(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open plan file " + path.string());
    return parse_plan(in);
}

StoryRecord perturb_record(const StoryRecord& record, PerturbationKind kind) {
    if (kind == PerturbationKind::SlashNormalize) {
        return corpus::normalize(record, corpus::NormalizationPolicy::slash_only());
    }
    StoryRecord out = record;
    std::swap(out.x, out.y);
    return out;
}

SensitivityReport sensitivity_test(const Corpus& corpus, std::span<const PlanEntry> plan,
                                   const keyderive::TransitionLogSet& logs) {
    SensitivityReport report;
    for (const PlanEntry& entry : plan) {
        const StoryRecord* record = corpus.find(entry.id);
        if (!record) {
            throw ValidationError("sensitivity_test: unknown id '" + entry.id + "'");
        }

        const keyderive::TransitionLog* original_log = logs.find(entry.id);
        std::optional<braid::KeyArchetype> original = record->key;
        if (!original && original_log) original = keyderive::assign_key(*original_log);
        if (!original) {
            throw ValidationError("sensitivity_test: id '" + entry.id +
                                  "' has neither a declared key nor a transition log");
        }

        const StoryRecord perturbed = perturb_record(*record, entry.kind);
        const keyderive::TransitionLog* fresh_log = original_log;
        if (entry.kind == PerturbationKind::SwapXY) {
            // the fixture ships a perturbed log for swap stress tests
            if (const auto* swapped =
                    logs.find(entry.id + std::string(kSwapXYLogSuffix))) {
                fresh_log = swapped;
            }
        }
        std::optional<braid::KeyArchetype> fresh = perturbed.key;
        if (fresh_log) fresh = keyderive::assign_key(*fresh_log);
        if (!fresh) {
            throw ValidationError("sensitivity_test: id '" + entry.id +
                                  "' has no key after perturbation");
        }

        SensitivityRow row;
        row.id = entry.id;
        row.original = *original;
        row.kind = entry.kind;
        row.fresh = *fresh;
        row.stable = *fresh == *original;
        if (row.stable) ++report.stable;
        ++report.total;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::vector<AgreementItem> parse_agreement(std::istream& in) {
    const std::vector<csv::Row> rows = csv::read(in);
    if (rows.empty() || rows.front() != csv::Row{"id", "slot", "coder1", "coder2"}) {
        throw ParseError("agreement file must start with header id,slot,coder1,coder2");
    }
    std::vector<AgreementItem> items;
    for (std::size_t n = 1; n < rows.size(); ++n) {
        const csv::Row& row = rows[n];
        if (row.size() != 4) {
            throw ParseError("agreement row " + std::to_string(n) + ": expected 4 fields");
        }
        if (row[1] != "a" && row[1] != "b" && row[1] != "x" && row[1] != "y") {
            throw ParseError("agreement row " + std::to_string(n) +
                             ": slot must be one of a,b,x,y, got '" + row[1] + "'");
        }
        items.push_back(AgreementItem{row[0], row[1], row[2], row[3]});
    }
    return items;
}

std::vector<AgreementItem> load_agreement(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open agreement file " + path.string());
    return parse_agreement(in);
}

std::vector<AgreementRow> agreement_stats(std::span<const AgreementItem> items,
                                          const corpus::NormalizationPolicy& policy) {
    std::vector<std::string> slots;
    for (const AgreementItem& item : items) {
        if (std::find(slots.begin(), slots.end(), item.slot) == slots.end()) {
            slots.push_back(item.slot);
        }
    }
    std::sort(slots.begin(), slots.end());

    std::vector<AgreementRow> out;
    for (const std::string& slot : slots) {
        std::size_t n = 0;
        std::size_t agree = 0;
        std::map<std::string, std::size_t> marginal1;
        std::map<std::string, std::size_t> marginal2;
        for (const AgreementItem& item : items) {
            if (item.slot != slot) continue;
            ++n;
            const std::string l1 = corpus::normalize_label(item.coder1, policy);
            const std::string l2 = corpus::normalize_label(item.coder2, policy);
            if (l1 == l2) ++agree;
            ++marginal1[l1];
            ++marginal2[l2];
        }
        if (n < 2) {
            throw ValidationError("agreement_stats: slot '" + slot +
                                  "' has fewer than 2 items");
        }

        AgreementRow row;
        row.slot = slot;
        row.items = n;
        row.exact = static_cast<double>(agree) / static_cast<double>(n);

        // chance agreement from the two coders' marginal label distributions;
        // integer arithmetic so that pe == 1 is detected exactly
        std::size_t pe_numerator = 0;
        for (const auto& [label, c1] : marginal1) {
            auto it = marginal2.find(label);
            if (it != marginal2.end()) pe_numerator += c1 * it->second;
        }
        const std::size_t pe_denominator = n * n;
        if (pe_numerator == pe_denominator) {
            row.kappa = std::nullopt;  // kappa undefined at pe = 1
        } else {
            const double po = row.exact;
            const double pe = static_cast<double>(pe_numerator) /
                              static_cast<double>(pe_denominator);
            row.kappa = (po - pe) / (1.0 - pe);
        }
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace canonform::analytics
