#pragma once

#include <stdexcept>
#include <string>

namespace canonform {

/// Malformed input text (CSV, log, lexicon, context files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structurally well-formed input that violates a schema rule
/// (duplicate id, bad category/prefix pairing, missing key, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace canonform
