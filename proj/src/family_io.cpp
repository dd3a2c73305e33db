#include "lintersect/family_io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <vector>

namespace lintersect {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(line == 0     ? message
                         : column == 0 ? "line " + std::to_string(line) + ": " + message
                                       : "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                             ": " + message),
      line_(line),
      column_(column) {}

namespace {

SubsetMask mask_from_elements(const std::vector<int>& elements, std::size_t line, std::size_t column) {
  SubsetMask mask;
  for (int e : elements) {
    if (e < 1 || e > kMaxGroundSize) {
      throw ParseError(line, column, "element " + std::to_string(e) + " outside 1.." + std::to_string(kMaxGroundSize));
    }
    if (mask.contains(e)) throw ParseError(line, column, "element " + std::to_string(e) + " repeated within a set");
    mask = mask.with(e);
  }
  return mask;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

nlohmann::json family_to_json(const SetFamily& family) {
  nlohmann::json sets = nlohmann::json::array();
  for (SubsetMask s : family) sets.push_back(s.elements());
  return {{"n", family.n()}, {"sets", std::move(sets)}};
}

SetFamily family_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError(0, 0, "family document must be a JSON object");
  const auto n_it = doc.find("n");
  if (n_it == doc.end() || !n_it->is_number_integer()) throw ParseError(0, 0, "missing integer field \"n\"");
  const auto sets_it = doc.find("sets");
  if (sets_it == doc.end() || !sets_it->is_array()) throw ParseError(0, 0, "missing array field \"sets\"");

  std::vector<SubsetMask> sets;
  sets.reserve(sets_it->size());
  for (std::size_t k = 0; k < sets_it->size(); ++k) {
    const auto& entry = (*sets_it)[k];
    const std::string where = "sets[" + std::to_string(k) + "]";
    if (!entry.is_array()) throw ParseError(0, 0, where + " is not an array");
    std::vector<int> elements;
    for (const auto& e : entry) {
      if (!e.is_number_integer()) throw ParseError(0, 0, where + " holds a non-integer element");
      const auto value = e.get<long long>();
      if (value < 1 || value > kMaxGroundSize) {
        throw ParseError(0, 0, where + ": element " + std::to_string(value) + " out of range");
      }
      elements.push_back(static_cast<int>(value));
    }
    try {
      sets.push_back(mask_from_elements(elements, 0, 0));
    } catch (const ParseError& err) {
      throw ParseError(0, 0, where + ": " + err.what());
    }
  }
  const auto n = n_it->get<long long>();
  if (n < 1 || n > kMaxGroundSize) throw FamilyError("ground-set size out of range: " + std::to_string(n));
  return SetFamily(static_cast<int>(n), std::move(sets));
}

std::string write_family_json(const SetFamily& family) { return family_to_json(family).dump() + "\n"; }

std::string write_family_text(const SetFamily& family) {
  std::string out = "n " + std::to_string(family.n()) + "\n";
  for (SubsetMask s : family) {
    if (s.empty()) {
      out += "-\n";
      continue;
    }
    bool first = true;
    for (int e : s.elements()) {
      if (!first) out += ' ';
      out += std::to_string(e);
      first = false;
    }
    out += '\n';
  }
  return out;
}

SetFamily read_family_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& err) {
    const auto [line, column] = line_column(text, err.byte);
    throw ParseError(line, column, "malformed JSON");
  }
  return family_from_json(doc);
}

SetFamily read_family_text(std::string_view text) {
  std::optional<int> n;
  std::vector<SubsetMask> sets;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    // Tokenize, remembering 1-based columns.
    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    for (std::size_t k = 0; k < line.size();) {
      if (line[k] == ' ' || line[k] == '\t') {
        ++k;
        continue;
      }
      if (line[k] == '#') break;
      const std::size_t start = k;
      while (k < line.size() && line[k] != ' ' && line[k] != '\t') ++k;
      tokens.emplace_back(line.substr(start, k - start), start + 1);
    }
    if (tokens.empty()) continue;

    auto parse_int = [&](std::pair<std::string_view, std::size_t> tok) {
      int value = 0;
      const auto* first = tok.first.data();
      const auto* last = first + tok.first.size();
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr != last) {
        throw ParseError(line_no, tok.second, "expected an integer, got '" + std::string(tok.first) + "'");
      }
      return value;
    };

    if (!n) {
      if (tokens.size() != 2 || tokens[0].first != "n") throw ParseError(line_no, 1, "expected header 'n <int>'");
      n = parse_int(tokens[1]);
      if (*n < 1 || *n > kMaxGroundSize) {
        throw ParseError(line_no, tokens[1].second, "ground-set size out of range: " + std::to_string(*n));
      }
      continue;
    }

    if (tokens.size() == 1 && tokens[0].first == "-") {
      sets.emplace_back();
      continue;
    }
    std::vector<int> elements;
    for (const auto& tok : tokens) {
      const int e = parse_int(tok);
      if (e < 1 || e > *n) {
        throw ParseError(line_no, tok.second, "element " + std::to_string(e) + " outside [" + std::to_string(*n) + "]");
      }
      if (std::find(elements.begin(), elements.end(), e) != elements.end()) {
        throw ParseError(line_no, tok.second, "element " + std::to_string(e) + " repeated within a set");
      }
      elements.push_back(e);
    }
    sets.push_back(mask_from_elements(elements, line_no, tokens.front().second));
  }
  if (!n) throw ParseError(line_no, 0, "missing header 'n <int>'");
  return SetFamily(*n, std::move(sets));
}

SetFamily read_family(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return read_family_json(text);
  return read_family_text(text);
}

}  // namespace lintersect
