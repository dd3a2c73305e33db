#include "lintersect/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "lintersect/bounds.hpp"
#include "lintersect/certificate.hpp"
#include "lintersect/family.hpp"
#include "lintersect/family_io.hpp"
#include "lintersect/generators.hpp"
#include "lintersect/search.hpp"

namespace lintersect::cli {

namespace {

using ojson = nlohmann::ordered_json;

/// Bad command-line values; always exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ParsedSpec {
  IntersectionSpec spec;
  bool had_duplicates = false;
};

ParsedSpec parse_spec(const std::string& text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view item(text.data() + pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = -1;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || value < 0) {
      throw InputError("L must be comma-separated non-negative integers, got '" + text + "'");
    }
    values.push_back(value);
    pos = comma + 1;
  }
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  const bool dup = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
  return {IntersectionSpec::canonical(std::move(values)), dup};
}

IntersectionSpec spec_with_warnings(const std::string& text, std::optional<int> n, std::ostream& err) {
  ParsedSpec parsed = parse_spec(text);
  if (parsed.had_duplicates) err << "warning: duplicate values in L removed: " << parsed.spec.to_string() << "\n";
  if (n) {
    for (int v : parsed.spec.values_at_least(*n)) {
      err << "warning: L value " << v << " >= n = " << *n << " can never be an intersection size\n";
    }
  }
  return parsed.spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
}

SetFamily load_family(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return read_family(text);
  } catch (const ParseError& e) {
    std::string where = path;
    if (e.line() > 0) where += ":" + std::to_string(e.line());
    if (e.column() > 0) where += ":" + std::to_string(e.column());
    throw InputError(where + ": " + e.what());
  } catch (const FamilyError& e) {
    throw InputError(path + ": " + e.what());
  }
}

ojson to_ojson(const nlohmann::json& j) { return ojson::parse(j.dump()); }

ojson big_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

int max_n_from_env(std::ostream& err) {
  const char* raw = std::getenv("LINTERSECT_MAX_N");
  if (raw == nullptr || *raw == '\0') return kDefaultSearchMaxN;
  int value = 0;
  const std::string_view text(raw);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1) {
    throw InputError("LINTERSECT_MAX_N must be a positive integer, got '" + std::string(text) + "'");
  }
  if (value > kMaxGroundSize) {
    err << "warning: LINTERSECT_MAX_N clamped to " << kMaxGroundSize << "\n";
    value = kMaxGroundSize;
  }
  return value;
}

struct Emitter {
  std::ostream& out;
  std::string command;
  ojson inputs;

  int emit(ojson outcome, int exit_code) const {
    ojson report;
    report["command"] = command;
    report["inputs"] = inputs;
    report["outcome"] = std::move(outcome);
    report["exit_code"] = exit_code;
    out << report.dump() << "\n";
    return exit_code;
  }
};

// ---------------------------------------------------------------------------

struct CommonSearchFlags {
  int n = 0;
  std::optional<int> max_card;
  unsigned workers = 1;
  std::uint64_t node_budget = 100'000'000;
  bool deterministic = false;

  SearchLimits limits(int max_n) const {
    SearchLimits l;
    l.max_n = max_n;
    l.max_card = max_card;
    l.workers = deterministic ? 1U : std::max(1U, workers);
    l.node_budget = node_budget;
    return l;
  }
};

int cmd_verify(const std::string& path, const std::string& l_text, std::ostream& out, std::ostream& err) {
  Emitter emitter{out, "verify", {{"file", path}, {"l_values", l_text}}};
  const SetFamily family = load_family(path);
  const IntersectionSpec spec = spec_with_warnings(l_text, family.n(), err);
  emitter.inputs["l_values"] = spec.values();

  ojson outcome;
  outcome["n"] = family.n();
  outcome["m"] = family.size();
  const LIntersectionVerdict li = is_l_intersecting(family, spec);
  outcome["l_intersecting"] = li.holds;
  if (li.violation) {
    const auto& v = *li.violation;
    outcome["violation"] = {{"i", v.i + 1}, {"j", v.j + 1}, {"size", v.size}};
  } else {
    outcome["violation"] = nullptr;
  }

  const auto as_given = check_ordered_indexing(family);
  const auto* given_failure = std::get_if<OrderingFailure>(&as_given);
  outcome["ordered_as_given"] = given_failure == nullptr;
  outcome["ordering_failure"] = given_failure ? ojson(given_failure->describe()) : ojson(nullptr);

  const auto reordered = make_ordered(family);
  const bool orderable = std::holds_alternative<OrderedFamily>(reordered);
  outcome["orderable"] = orderable;
  if (orderable) {
    const auto& ordered = std::get<OrderedFamily>(reordered);
    std::vector<std::size_t> order;
    for (std::size_t idx : ordered.witness.permutation) order.push_back(idx + 1);
    outcome["r"] = ordered.witness.r;
    outcome["order"] = order;
  } else {
    outcome["r"] = nullptr;
    outcome["order"] = nullptr;
    outcome["not_orderable"] = std::get<OrderingFailure>(reordered).describe();
  }

  std::vector<std::string> reasons;
  if (!li.holds) reasons.emplace_back("not-L-intersecting");
  if (!orderable) reasons.emplace_back("not-orderable");
  outcome["reasons"] = reasons;
  outcome["verdict"] = reasons.empty() ? "pass" : "fail";
  return emitter.emit(std::move(outcome), reasons.empty() ? kOk : kPropertyFailure);
}

int cmd_certify(const std::string& path, const std::string& l_text, bool full, bool reorder, std::uint64_t max_cells,
                std::ostream& out, std::ostream& err) {
  Emitter emitter{out, "certify", {{"file", path}, {"l_values", l_text}, {"full", full}, {"reorder", reorder}}};
  SetFamily family = load_family(path);
  const IntersectionSpec spec = spec_with_warnings(l_text, family.n(), err);
  emitter.inputs["l_values"] = spec.values();

  if (reorder) {
    auto ordered = make_ordered(family);
    if (auto* failure = std::get_if<OrderingFailure>(&ordered)) {
      err << "error: " << failure->describe() << "\n";
      return emitter.emit({{"error", to_string(CertifyErrorKind::NotOrdered)}, {"detail", failure->describe()}},
                          kPropertyFailure);
    }
    family = std::move(std::get<OrderedFamily>(ordered).family);
  }

  try {
    const CertificateReport report = certify(family, spec, CertifyOptions{max_cells, full});
    return emitter.emit(to_json(report, full), report.verdict ? kOk : kPropertyFailure);
  } catch (const CertifyError& e) {
    err << "error: " << e.what() << "\n";
    const int code = e.kind() == CertifyErrorKind::TooLarge ? kInputError : kPropertyFailure;
    return emitter.emit({{"error", to_string(e.kind())}, {"detail", e.what()}}, code);
  }
}

int cmd_bound(int n, int s, const std::string& which, std::ostream& out) {
  Emitter emitter{out, "bound", {{"n", n}, {"s", s}, {"which", which}}};
  if (n < 1 || s < 0) throw InputError("bound needs n >= 1 and s >= 0");
  ojson outcome;
  if (which == "fw" || which == "both") outcome["fw"] = big_json(bound_fw(n, s));
  if (which == "ordered" || which == "both") outcome["ordered"] = big_json(bound_ordered(n, s));
  return emitter.emit(std::move(outcome), kOk);
}

int cmd_gen(const std::string& kind, int n, int s, const std::string& path, const std::string& format,
            std::ostream& out) {
  Emitter emitter{out, "gen", {{"kind", kind}, {"n", n}, {"s", s}, {"file", path}, {"format", format}}};
  GeneratedFamily generated = [&] {
    try {
      return kind == "mixed" ? gen_sharp_mixed(n, s) : gen_sharp_no_apex(n, s);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  if (!path.empty()) {
    write_file(path, format == "text" ? write_family_text(generated.family) : write_family_json(generated.family));
  }
  const auto ordered = std::get<OrderingWitness>(check_ordered_indexing(generated.family));
  ojson outcome;
  outcome["family"] = to_ojson(family_to_json(generated.family));
  outcome["l_values"] = generated.spec.values();
  outcome["size"] = generated.family.size();
  outcome["r"] = ordered.r;
  outcome["bound_ordered"] = big_json(bound_ordered(n, s));
  return emitter.emit(std::move(outcome), kOk);
}

int cmd_search(const CommonSearchFlags& flags, const std::string& l_text, bool no_cutoff, int max_n,
               std::ostream& out, std::ostream& err) {
  Emitter emitter{out, "search", {{"n", flags.n}, {"l_values", l_text}}};
  const IntersectionSpec spec = spec_with_warnings(l_text, flags.n, err);
  emitter.inputs["l_values"] = spec.values();
  emitter.inputs["max_card"] = flags.max_card ? ojson(*flags.max_card) : ojson(nullptr);
  emitter.inputs["node_budget"] = flags.node_budget;
  emitter.inputs["analytic_cutoff"] = !no_cutoff;

  SearchLimits limits = flags.limits(max_n);
  limits.analytic_cutoff = !no_cutoff;
  const SearchResult result = max_ordered_family(flags.n, spec, limits);
  if (result.truncated) err << "warning: node budget exhausted; best_size is a lower bound\n";
  return emitter.emit(to_json(result), result.bound_respected ? kOk : kPropertyFailure);
}

std::pair<int, int> parse_size_range(const std::string& text) {
  int lo = 0;
  int hi = 0;
  const auto dash = text.find('-');
  auto parse = [&](std::string_view part, int& value) {
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || value < 0) {
      throw InputError("--l-size expects K or A-B, got '" + text + "'");
    }
  };
  if (dash == std::string::npos) {
    parse(text, lo);
    hi = lo;
  } else {
    parse(std::string_view(text).substr(0, dash), lo);
    parse(std::string_view(text).substr(dash + 1), hi);
  }
  if (hi < lo) throw InputError("--l-size range is empty: '" + text + "'");
  return {lo, hi};
}

int cmd_sweep(const CommonSearchFlags& flags, int n_min, const std::string& l_size,
              const std::vector<std::string>& l_texts, int max_n, std::ostream& out, std::ostream& err) {
  SearchLimits limits = flags.limits(max_n);
  try {
    SweepReport report;
    if (!l_texts.empty()) {
      std::vector<IntersectionSpec> catalog;
      for (const auto& text : l_texts) catalog.push_back(spec_with_warnings(text, std::nullopt, err));
      report = sweep_verify(flags.n, catalog, limits, n_min);
    } else {
      const auto [lo, hi] = parse_size_range(l_size);
      report = sweep_verify_sizes(n_min, flags.n, lo, hi, limits);
    }
    std::size_t truncated = 0;
    for (const auto& row : report.rows) {
      out << to_json(row).dump() << "\n";
      if (row.truncated) ++truncated;
    }
    err << "sweep: " << report.rows.size() << " cases, 0 violations";
    if (truncated > 0) err << ", " << truncated << " truncated";
    err << "\n";
    return kOk;
  } catch (const BoundViolation& v) {
    ojson line = to_json(v.row());
    line["violation"] = true;
    line["family"] = to_ojson(family_to_json(v.family()));
    out << line.dump() << "\n";
    err << "error: " << v.what();
    return kPropertyFailure;
  }
}

int cmd_export(int n, const std::string& l_text, std::optional<int> max_card, const std::string& path, int max_n,
               std::ostream& out, std::ostream& err) {
  const IntersectionSpec spec = spec_with_warnings(l_text, n, err);
  const std::string text = export_dimacs(build_graph(n, spec, max_card, max_n));
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
  return kOk;
}

// Input errors still produce a report for the commands whose stdout is a RunReport.
int input_failure(const std::string& command, const std::string& what, std::ostream& out, std::ostream& err) {
  err << "error: " << what << "\n";
  if (command != "sweep" && command != "export-dimacs") {
    Emitter{out, command, ojson::object()}.emit({{"error", "input-error"}, {"detail", what}}, kInputError);
  }
  return kInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for ordered L-intersecting set families", "lintersect"};
  app.require_subcommand(1);

  // verify / certify
  std::string file;
  std::string l_text;
  bool full = false;
  bool reorder = false;
  std::uint64_t max_cells = CertifyOptions{}.max_cells;
  auto* verify = app.add_subcommand("verify", "Check the L-intersecting and ordered properties of a family file");
  verify->add_option("--file", file, "Family file (JSON or text)")->required();
  verify->add_option("-L", l_text, "Allowed intersection sizes, comma-separated")->required();

  auto* certify_cmd = app.add_subcommand("certify", "Build the polynomial certificate and verify it by exact rank");
  certify_cmd->add_option("--file", file, "Family file (JSON or text)")->required();
  certify_cmd->add_option("-L", l_text, "Allowed intersection sizes, comma-separated")->required();
  certify_cmd->add_flag("--full", full, "Include evaluation and coefficient matrices");
  certify_cmd->add_flag("--reorder", reorder, "Canonicalize the family into ordered form first");
  certify_cmd->add_option("--max-cells", max_cells, "Refuse stacked matrices larger than this");

  // bound
  int n = 0;
  int s = 0;
  std::string which = "both";
  auto* bound = app.add_subcommand("bound", "Print the general and ordered upper bounds");
  bound->add_option("-n", n, "Ground-set size")->required();
  bound->add_option("-s", s, "Size of L")->required();
  bound->add_option("--which", which, "fw, ordered or both")->check(CLI::IsMember({"fw", "ordered", "both"}));

  // gen
  std::string kind = "no-apex";
  std::string format = "json";
  auto* gen = app.add_subcommand("gen", "Generate a sharp ordered family");
  gen->add_option("--kind", kind, "no-apex or mixed")->check(CLI::IsMember({"no-apex", "mixed"}));
  gen->add_option("-n", n, "Ground-set size")->required();
  gen->add_option("-s", s, "Level (L = {0..s-1})")->required();
  gen->add_option("--file", file, "Also write the family to this file");
  gen->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  // search / sweep / export
  CommonSearchFlags flags;
  bool no_cutoff = false;
  int n_min = 1;
  std::string l_size = "1";
  std::vector<std::string> l_catalog;
  auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("--max-card", flags.max_card, "Only consider sets with at most this many elements");
    sub->add_option("--workers", flags.workers, "Parallel workers for root branches");
    sub->add_option("--node-budget", flags.node_budget, "Abort (flagged as truncated) after this many nodes");
    sub->add_flag("--deterministic", flags.deterministic, "Force a single worker");
  };
  auto* search = app.add_subcommand("search", "Find a largest orderable L-intersecting family");
  search->add_option("-n", flags.n, "Ground-set size")->required();
  search->add_option("-L", l_text, "Allowed intersection sizes, comma-separated")->required();
  search->add_flag("--no-cutoff", no_cutoff, "Do not stop early at the ordered bound");
  add_search_flags(search);

  auto* sweep = app.add_subcommand("sweep", "Check the ordered bound for every n up to -n");
  sweep->add_option("-n", flags.n, "Largest ground-set size")->required();
  sweep->add_option("--n-min", n_min, "Smallest ground-set size");
  sweep->add_option("--l-size", l_size, "Sizes of L to enumerate over subsets of {0..n-1}: K or A-B");
  sweep->add_option("-L", l_catalog, "Explicit L (repeatable); overrides --l-size")->take_all();
  add_search_flags(sweep);

  std::optional<int> export_max_card;
  auto* exporter = app.add_subcommand("export-dimacs", "Write the compatibility graph in DIMACS clique format");
  exporter->add_option("-n", n, "Ground-set size")->required();
  exporter->add_option("-L", l_text, "Allowed intersection sizes, comma-separated")->required();
  exporter->add_option("--max-card", export_max_card, "Only include sets with at most this many elements");
  exporter->add_option("--file", file, "Output path (stdout when omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const int max_n = max_n_from_env(err);
    if (verify->parsed()) return cmd_verify(file, l_text, out, err);
    if (certify_cmd->parsed()) return cmd_certify(file, l_text, full, reorder, max_cells, out, err);
    if (bound->parsed()) return cmd_bound(n, s, which, out);
    if (gen->parsed()) return cmd_gen(kind, n, s, file, format, out);
    if (search->parsed()) return cmd_search(flags, l_text, no_cutoff, max_n, out, err);
    if (sweep->parsed()) return cmd_sweep(flags, n_min, l_size, l_catalog, max_n, out, err);
    if (exporter->parsed()) return cmd_export(n, l_text, export_max_card, file, max_n, out, err);
  } catch (const InputError& e) {
    return input_failure(command, e.what(), out, err);
  } catch (const CapExceeded& e) {
    return input_failure(command, e.what(), out, err);
  } catch (const std::invalid_argument& e) {
    return input_failure(command, e.what(), out, err);
  }
  return kInputError;
}

}  // namespace lintersect::cli
