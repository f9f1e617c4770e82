#include "canonform/report.hpp"

#include "canonform/csv.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace canonform::report {

using nlohmann::json;

std::optional<Format> format_from_name(std::string_view name) {
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    if (name == "text") return Format::Text;
    return std::nullopt;
}

std::string format_fraction(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    return buf;
}

namespace {

std::string render_csv(const Table& t) {
    std::ostringstream out;
    csv::write_row(out, t.columns);
    for (const auto& row : t.rows) csv::write_row(out, row);
    return out.str();
}

std::string render_text(const Table& t) {
    std::vector<std::size_t> widths(t.columns.size(), 0);
    for (std::size_t i = 0; i < t.columns.size(); ++i) widths[i] = t.columns[i].size();
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << "  ";
            out << row[i];
            if (i + 1 < row.size()) {
                out << std::string(widths[i] - row[i].size(), ' ');
            }
        }
        out << '\n';
    };
    if (!t.name.empty()) out << "# " << t.name << '\n';
    emit(t.columns);
    for (const auto& row : t.rows) emit(row);
    return out.str();
}

std::string render_json(const Table& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
            obj[t.columns[i]] = row[i];
        }
        rows.push_back(std::move(obj));
    }
    json out{{"table", t.name}, {"rows", std::move(rows)}};
    return out.dump(2) + "\n";
}

json diagnosis_json(const DiagnosisRecord& r) {
    const coherence::Diagnosis& d = r.diagnosis;
    json out{{"morphism", r.morphism},
             {"admissible", r.admissible},
             {"verdict", std::string(coherence::verdict_name(d.verdict))},
             {"note", d.note}};
    if (d.failing_role) {
        out["failing_role"] = std::string(rewrite::role_name(*d.failing_role));
    }
    if (d.reason) {
        out["reason"] = std::string(coherence::failure_reason_name(*d.reason));
    }
    if (d.witness) {
        auto path = [](const coherence::PathEntry& p) {
            return json{{"origin", std::string(rewrite::role_name(p.origin))},
                        {"end_role", std::string(rewrite::role_name(p.end_role))},
                        {"start_label", p.start_label},
                        {"end_label", p.end_label},
                        {"start_valuation",
                         std::string(rewrite::valuation_name(p.start_valuation))},
                        {"end_valuation",
                         std::string(rewrite::valuation_name(p.end_valuation))}};
        };
        out["witness"] = json{{"u_then_eta", path(d.witness->first)},
                              {"eta_then_v", path(d.witness->second)}};
    }
    return out;
}

} // namespace

std::string render(const Table& t, Format format) {
    switch (format) {
        case Format::Csv: return render_csv(t);
        case Format::Text: return render_text(t);
        case Format::Json: return render_json(t);
    }
    return render_csv(t);
}

std::string render_diagnoses(const std::vector<DiagnosisRecord>& records, Format format) {
    if (format == Format::Json) {
        json out = json::array();
        for (const DiagnosisRecord& r : records) out.push_back(diagnosis_json(r));
        return out.dump(2) + "\n";
    }
    if (format == Format::Csv) {
        Table t;
        t.name = "naturality";
        t.columns = {"morphism", "admissible", "verdict", "failing_role", "reason", "note"};
        for (const DiagnosisRecord& r : records) {
            const coherence::Diagnosis& d = r.diagnosis;
            t.rows.push_back(
                {r.morphism, r.admissible ? "true" : "false",
                 std::string(coherence::verdict_name(d.verdict)),
                 d.failing_role ? std::string(rewrite::role_name(*d.failing_role)) : "",
                 d.reason ? std::string(coherence::failure_reason_name(*d.reason)) : "",
                 d.note});
        }
        return render_csv(t);
    }
    std::ostringstream out;
    for (const DiagnosisRecord& r : records) {
        const coherence::Diagnosis& d = r.diagnosis;
        out << r.morphism << ": "
            << (d.verdict == coherence::Verdict::Pass ? "PASS" : "FAIL");
        if (!r.admissible) out << " (inadmissible)";
        if (d.failing_role) {
            out << " [role=" << rewrite::role_name(*d.failing_role)
                << ", reason=" << coherence::failure_reason_name(*d.reason) << "]";
        }
        out << "\n    " << d.note << '\n';
        if (d.witness) {
            auto line = [&](const char* tag, const coherence::PathEntry& p) {
                out << "    " << tag << ": " << rewrite::role_name(p.origin) << " '"
                    << p.start_label << "' (" << rewrite::valuation_name(p.start_valuation)
                    << ") -> " << rewrite::role_name(p.end_role) << " '" << p.end_label
                    << "' (" << rewrite::valuation_name(p.end_valuation) << ")\n";
            };
            line("U-then-eta", d.witness->first);
            line("eta-then-V", d.witness->second);
        }
    }
    return out.str();
}

} // namespace canonform::report
