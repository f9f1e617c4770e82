#pragma once

#include "canonform/rewrite.hpp"

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace canonform::rewrite {

/// Contents of a context file: one context, the configurations it speaks
/// about, and the proposed morphisms between them.
struct ContextFile {
    Context context;
    std::vector<Configuration> configurations;
    std::vector<MorphismCandidate> morphisms;

    const Configuration* find_configuration(std::string_view id) const;
};

/// Parses the JSON context format (see docs/FORMATS.md).
/// Throws ParseError on malformed input or dangling configuration ids.
ContextFile parse_context_file(std::istream& in);
ContextFile load_context_file(const std::filesystem::path& path);

} // namespace canonform::rewrite
