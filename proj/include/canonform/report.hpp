#pragma once

#include "canonform/coherence.hpp"

#include <string>
#include <vector>

namespace canonform::report {

enum class Format { Csv, Json, Text };

std::optional<Format> format_from_name(std::string_view name);

/// Fixed 4-decimal rendering so emitted tables are byte-stable.
std::string format_fraction(double value);

/// A rectangular table with a stable column order; cells are pre-rendered.
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string render(const Table& table, Format format);

/// Machine-readable rendering of a naturality check outcome.
struct DiagnosisRecord {
    std::string morphism;
    bool admissible = false;
    coherence::Diagnosis diagnosis;
};

std::string render_diagnoses(const std::vector<DiagnosisRecord>& records, Format format);

} // namespace canonform::report
