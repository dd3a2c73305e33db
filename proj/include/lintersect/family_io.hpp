#ifndef LINTERSECT_FAMILY_IO_HPP
#define LINTERSECT_FAMILY_IO_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lintersect/family.hpp"

namespace lintersect {

/// Malformed family input. line and column are 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

// Canonical JSON:  {"n":3,"sets":[[],[1],[2]]}
// Plain text:      "n 3" then one set per line, elements separated by spaces, "-" for ∅.
// Elements are 1-based and written ascending. Both writers end with a newline.

nlohmann::json family_to_json(const SetFamily& family);
SetFamily family_from_json(const nlohmann::json& doc);

std::string write_family_json(const SetFamily& family);
std::string write_family_text(const SetFamily& family);

SetFamily read_family_json(std::string_view text);
SetFamily read_family_text(std::string_view text);

/// Dispatches on the first non-blank character: '{' selects JSON, anything else text.
/// Structural problems raise ParseError; invariant violations (duplicates, elements
/// outside [n]) raise FamilyError.
SetFamily read_family(std::string_view text);

}  // namespace lintersect

#endif  // LINTERSECT_FAMILY_IO_HPP
