#include "courant_cli/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "courant/complex.hpp"
#include "courant/dirac.hpp"
#include "courant/gallery.hpp"
#include "courant/matched_pair.hpp"
#include "courant/regular.hpp"
#include "courant/spec.hpp"
#include "courant/verify.hpp"

namespace courant::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

/// Bad command-line input that is not tied to a spec position.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string input;
  std::string target;
  std::string first;
  SampleSpec sample;
  bool force = false;
  std::string format = "text";
};

struct Input {
  std::string name;
  SpecDocument doc;
};

/// What a command produced besides its exit code.
struct Outcome {
  std::string target;
  std::vector<VerificationReport> reports;
  /// Canonical spec text or a listing; empty when the command has none.
  std::string result_text;
  json result = nullptr;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Input load(const std::string& input) {
  if (input.empty()) throw UsageError("missing INPUT (a spec file or a gallery name)");
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) return {input, parse_spec(read_file(input))};
  if (auto entry = find_gallery(input)) return {input, parse_spec(entry->text)};
  throw UsageError("`" + input + "` is neither a file nor a gallery entry (see list-gallery)");
}

/// The requested declaration, or the last one of an accepted kind.
std::string resolve_target(const SpecDocument& doc, const std::string& requested,
                           const std::vector<std::string>& kinds, const std::string& command) {
  auto accepted = [&](const Declaration& d) {
    return std::find(kinds.begin(), kinds.end(), declaration_keyword(d)) != kinds.end();
  };
  std::string wanted;
  for (std::size_t i = 0; i < kinds.size(); ++i) wanted += (i ? (i + 1 == kinds.size() ? " or " : ", ") : "") + kinds[i];
  if (!requested.empty()) {
    const auto* d = doc.find(requested);
    if (!d) throw UsageError("no declaration named `" + requested + "`");
    if (!accepted(*d))
      throw UsageError(command + " needs a " + wanted + ", but `" + requested + "` is a " + declaration_keyword(*d));
    return requested;
  }
  for (auto it = doc.declarations.rbegin(); it != doc.declarations.rend(); ++it)
    if (accepted(*it)) return declaration_name(*it);
  throw UsageError(command + " needs a " + wanted + " declaration");
}

std::string keyword_of(const SpecDocument& doc, const std::string& name) { return declaration_keyword(*doc.find(name)); }

// ---------------------------------------------------------------------------
// exact comparisons reported as checks

CheckResult equality_check(const std::string& name, std::optional<Witness> difference) {
  CheckResult c;
  c.name = name;
  c.record(!difference, [&] { return *difference; });
  return c;
}

Witness entry_witness(std::vector<std::pair<std::string, std::string>> inputs, std::string residual) {
  return Witness{WitnessSource::Frame, std::move(inputs), std::move(residual)};
}

/// First entry where two frame-table structures differ; residual is a - b.
template <class S>
std::optional<Witness> table_difference(const S& a, const S& b) {
  if (a.labels() != b.labels() || !same_chart(a.chart(), b.chart()))
    return entry_witness({{"left frame", "[" + [&] {
                             std::string s;
                             for (const auto& l : a.labels()) s += (s.empty() ? "" : ", ") + l;
                             return s;
                           }() + "]"},
                          {"right frame", "[" + [&] {
                             std::string s;
                             for (const auto& l : b.labels()) s += (s.empty() ? "" : ", ") + l;
                             return s;
                           }() + "]"}},
                         "frames differ");
  if constexpr (requires { a.pairing_matrix(); }) {
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = 0; j < a.rank(); ++j)
        if (a.pairing_matrix()(i, j) != b.pairing_matrix()(i, j))
          return entry_witness({{"pairing", a.labels()[i]}, {"with", a.labels()[j]}},
                               (a.pairing_matrix()(i, j) - b.pairing_matrix()(i, j)).str());
  }
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (!(a.anchor_rows()[i] == b.anchor_rows()[i]))
      return entry_witness({{"anchor", a.labels()[i]}}, (a.anchor_rows()[i] - b.anchor_rows()[i]).str());
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j)
      if (!(a.table_entry(i, j) == b.table_entry(i, j)))
        return entry_witness({{"phi", a.labels()[i]}, {"psi", a.labels()[j]}},
                             a.str(a.table_entry(i, j) - b.table_entry(i, j)));
  return std::nullopt;
}

std::optional<Witness> connection_difference(const std::string& which, const Connection& a, const Connection& b,
                                             const CourantStructure& domain, const CourantStructure& acted) {
  if (a.domain_rank() != b.domain_rank() || a.acted_rank() != b.acted_rank())
    return entry_witness({{which, "shape"}}, "connection shapes differ");
  for (std::size_t i = 0; i < a.domain_rank(); ++i)
    for (std::size_t j = 0; j < a.acted_rank(); ++j)
      if (!(a.entry(i, j) == b.entry(i, j)))
        return entry_witness({{which, domain.label(i)}, {"on", acted.label(j)}}, acted.str(a.entry(i, j) - b.entry(i, j)));
  return std::nullopt;
}

std::optional<Witness> pair_difference(const MatchedPairData& a, const MatchedPairData& b) {
  if (auto w = table_difference(a.e1, b.e1)) return w;
  if (auto w = table_difference(a.e2, b.e2)) return w;
  if (auto w = connection_difference("right", a.right, b.right, a.e1, a.e2)) return w;
  return connection_difference("left", a.left, b.left, a.e2, a.e1);
}

// ---------------------------------------------------------------------------
// result documents

SpecDocument result_document(const Chart& chart, const SpecDocument& source) {
  SpecDocument d;
  d.chart = chart;
  d.complex_n = source.complex_n;
  return d;
}

void add_table(SpecDocument& d, const std::string& name, const CourantStructure& e) {
  d.declarations.push_back(StructureDecl{name, StructureDecl::Kind::Table, "", e});
}

void add_pair(SpecDocument& d, const std::string& name, const MatchedPairData& mp) {
  const std::string e1 = name + "_1", e2 = name + "_2";
  add_table(d, e1, mp.e1);
  add_table(d, e2, mp.e2);
  d.declarations.push_back(ConnectionDecl{name + "_right", e1, e2, mp.right.table()});
  d.declarations.push_back(ConnectionDecl{name + "_left", e2, e1, mp.left.table()});
  PairDecl p;
  p.name = name;
  p.kind = PairDecl::Kind::Explicit;
  p.e1 = e1;
  p.e2 = e2;
  p.right = name + "_right";
  p.left = name + "_left";
  d.declarations.push_back(p);
}

/// Prints a result document and makes sure it reads back unchanged.
void set_spec_result(Outcome& o, const SpecDocument& d) {
  o.result_text = print_spec(d);
  if (!(parse_spec(o.result_text) == d)) throw std::logic_error("printed result does not parse back to itself");
  o.result = {{"spec", o.result_text}};
}

// ---------------------------------------------------------------------------
// commands

struct Context {
  const Options& opt;
  const Input& in;
  SpecModel model;
};

RegularData regular_of(const Context& c, const std::string& t) { return c.model.regular.at(t); }

Outcome cmd_check_axioms(Context& c) {
  Outcome o;
  o.target = resolve_target(c.in.doc, c.opt.target, {"structure", "matched-pair", "regular"}, c.opt.command);
  const auto kind = keyword_of(c.in.doc, o.target);
  if (kind == "structure") {
    o.reports.push_back(check_axioms(c.model.structures.at(o.target), c.opt.sample, o.target));
  } else if (kind == "matched-pair") {
    o.reports.push_back(check_axioms(matched_sum(c.model.pairs.at(o.target)), c.opt.sample, o.target + " (matched sum)"));
  } else {
    const auto rd = regular_of(c, o.target);
    if (!c.opt.force) {
      auto compat = check_regular_compat(rd, c.opt.sample, o.target);
      if (!compat.passed()) {
        o.reports.push_back(std::move(compat));
        return o;
      }
    }
    o.reports.push_back(check_axioms(build_regular(rd, c.opt.force), c.opt.sample, o.target + " (built)"));
  }
  return o;
}

Outcome cmd_check_matched_pair(Context& c) {
  Outcome o;
  o.target = resolve_target(c.in.doc, c.opt.target, {"matched-pair"}, c.opt.command);
  const auto& mp = c.model.pairs.at(o.target);
  o.reports.push_back(check_matched_pair(mp, c.opt.sample, o.target));
  const auto& decl = std::get<PairDecl>(*c.in.doc.find(o.target));
  if (decl.kind == PairDecl::Kind::Complex)
    o.reports.push_back(check_sum_isomorphism(mp, c.model.forms.at(decl.twist), o.target + " (sum isomorphism)"));
  return o;
}

Outcome cmd_matched_sum(Context& c) {
  Outcome o;
  o.target = resolve_target(c.in.doc, c.opt.target, {"matched-pair"}, c.opt.command);
  auto d = result_document(c.model.chart, c.in.doc);
  add_table(d, o.target + "_sum", matched_sum(c.model.pairs.at(o.target)));
  set_spec_result(o, d);
  return o;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

Outcome cmd_split(Context& c) {
  Outcome o;
  o.target = resolve_target(c.in.doc, c.opt.target, {"structure", "matched-pair"}, c.opt.command);
  VerificationReport report;
  report.subject = o.target;
  std::optional<SplitResult> sp;
  if (keyword_of(c.in.doc, o.target) == "matched-pair") {
    const auto& mp = c.model.pairs.at(o.target);
    const auto sum = matched_sum(mp);
    std::vector<Section> u, w;
    for (std::size_t i = 0; i < sum.rank(); ++i) (i < mp.e1.rank() ? u : w).push_back(sum.basis(i));
    sp = split(sum, u, mp.e1.labels(), w, mp.e2.labels());
    report.checks.push_back(equality_check("split_of_sum", pair_difference(sp->pair, mp)));
    report.checks.push_back(equality_check("sum_of_split", table_difference(matched_sum(sp->pair), sum)));
  } else {
    const auto& e = c.model.structures.at(o.target);
    std::vector<std::string> first;
    if (!c.opt.first.empty()) {
      first = split_list(c.opt.first);
    } else if (c.model.complex) {
      for (const auto& l : e.labels())
        if (l.find("zb") == std::string::npos) first.push_back(l);
    } else {
      throw UsageError("split of a structure needs --first LABEL,... outside complex charts");
    }
    std::vector<std::string> second;
    for (const auto& l : first)
      if (std::find(e.labels().begin(), e.labels().end(), l) == e.labels().end())
        throw UsageError("`" + l + "` is not a frame label of " + o.target);
    for (const auto& l : e.labels())
      if (std::find(first.begin(), first.end(), l) == first.end()) second.push_back(l);
    std::vector<Section> u, w;
    for (const auto& l : first) u.push_back(e.basis(l));
    for (const auto& l : second) w.push_back(e.basis(l));
    sp = split(e, u, first, w, second);
    auto order = first;
    order.insert(order.end(), second.begin(), second.end());
    report.checks.push_back(equality_check("sum_of_split", table_difference(matched_sum(sp->pair), reorder(e, order))));
  }
  o.reports.push_back(std::move(report));
  auto d = result_document(c.model.chart, c.in.doc);
  add_pair(d, o.target + "_split", sp->pair);
  set_spec_result(o, d);
  return o;
}

Outcome cmd_check_dirac(Context& c) {
  Outcome o;
  o.target = resolve_target(c.in.doc, c.opt.target, {"dirac"}, c.opt.command);
  o.reports.push_back(check_dirac(c.model.dirac.at(o.target), c.opt.sample, o.target));
  return o;
}

Outcome cmd_check_matched_dirac(Context& c) {
  Outcome o;
  o.target = resolve_target(c.in.doc, c.opt.target, {"matched-dirac"}, c.opt.command);
  const auto& decl = c.model.matched_dirac.at(o.target);
  const auto& mp = c.model.pairs.at(decl.pair);
  const auto& d1 = c.model.dirac.at(decl.d1);
  const auto& d2 = c.model.dirac.at(decl.d2);
  o.reports.push_back(check_matched_dirac(mp, d1, d2, c.opt.sample, o.target));
  if (!o.reports.back().passed()) return o;
  const auto lmp = restrict_to_dirac(mp, d1, d2);
  o.reports.push_back(check_lie_matched_pair(lmp, c.opt.sample, o.target + " (Lie algebroids)"));
  VerificationReport eq;
  eq.subject = o.target + " (sum of Lie algebroids)";
  eq.checks.push_back(equality_check(
      "lie_sum_equals_dirac_sum", table_difference(lie_matched_sum(lmp), dirac_to_lie(dirac_direct_sum(mp, d1, d2)))));
  o.reports.push_back(std::move(eq));
  return o;
}

/// Compatibility report; the caller stops unless it passes or --force is set.
bool regular_compat(Context& c, Outcome& o, const RegularData& rd) {
  o.reports.push_back(check_regular_compat(rd, c.opt.sample, o.target));
  return o.reports.back().passed() || c.opt.force;
}

Outcome cmd_build_regular(Context& c) {
  Outcome o;
  o.target = resolve_target(c.in.doc, c.opt.target, {"regular"}, c.opt.command);
  const auto rd = regular_of(c, o.target);
  if (!regular_compat(c, o, rd)) return o;
  auto d = result_document(c.model.chart, c.in.doc);
  add_table(d, o.target + "_built", build_regular(rd, true));
  set_spec_result(o, d);
  return o;
}

Outcome cmd_check_regular(Context& c) {
  Outcome o;
  o.target = resolve_target(c.in.doc, c.opt.target, {"regular"}, c.opt.command);
  const auto rd = regular_of(c, o.target);
  if (!regular_compat(c, o, rd)) return o;
  o.reports.push_back(check_axioms(build_regular(rd, true), c.opt.sample, o.target + " (built)"));
  return o;
}

Outcome cmd_flat_decompose(Context& c) {
  Outcome o;
  o.target = resolve_target(c.in.doc, c.opt.target, {"regular"}, c.opt.command);
  const auto rd = regular_of(c, o.target);
  VerificationReport report;
  report.subject = o.target;
  const bool flat = check_flat(rd);
  report.checks.push_back(equality_check(
      "flat", flat ? std::nullopt : std::optional<Witness>(entry_witness({}, pontryagin_form(rd).str()))));
  if (flat) {
    const auto mp = flat_to_matched_pair(rd);
    const auto sum = reorder(matched_sum(mp), regular_labels(rd));
    report.checks.push_back(equality_check("sum_equals_build", table_difference(sum, build_regular(rd, true))));
    auto d = result_document(c.model.chart, c.in.doc);
    add_pair(d, o.target + "_flat", mp);
    set_spec_result(o, d);
  }
  o.reports.push_back(std::move(report));
  return o;
}

Outcome cmd_audit_normalization(Context& c) {
  Outcome o;
  o.target = resolve_target(c.in.doc, c.opt.target, {"regular"}, c.opt.command);
  VerificationReport report;
  report.subject = o.target;
  try {
    auto audit = normalization_audit(regular_of(c, o.target), c.opt.sample);
    report.checks.push_back(equality_check("unique_lambda", std::nullopt));
    json candidates = json::array();
    std::ostringstream text;
    text << "lambda* = " << audit.lambda.str() << "\n";
    for (const auto& [lambda, ok] : audit.candidates) {
      candidates.push_back({{"lambda", lambda.str()}, {"passes_axioms", ok}});
      text << "  lambda " << lambda.str() << ": " << (ok ? "axioms pass" : "axioms fail") << "\n";
    }
    o.result = {{"lambda", audit.lambda.str()}, {"candidates", std::move(candidates)}};
    o.result_text = text.str();
  } catch (const NoConsistentNormalization& e) {
    report.checks.push_back(equality_check("unique_lambda", entry_witness({}, e.what())));
  } catch (const AmbiguousNormalization& e) {
    report.checks.push_back(equality_check("unique_lambda", entry_witness({}, e.what())));
  }
  o.reports.push_back(std::move(report));
  return o;
}

Outcome cmd_gallery(const Options& opt) {
  auto entry = find_gallery(opt.input);
  if (!entry) throw UsageError("no gallery entry named `" + opt.input + "` (see list-gallery)");
  Outcome o;
  o.result_text = entry->text;
  o.result = {{"name", entry->name}, {"description", entry->description}, {"origin", entry->origin},
              {"spec", entry->text}};
  return o;
}

Outcome cmd_list_gallery() {
  Outcome o;
  json list = json::array();
  std::ostringstream text;
  std::size_t width = std::string("standard-rN").size();
  for (const auto& e : gallery_entries()) width = std::max(width, e.name.size());
  auto line = [&](const std::string& name, const std::string& description, const std::string& origin) {
    text << name << std::string(width - name.size() + 2, ' ') << description << "\n";
    list.push_back({{"name", name}, {"description", description}, {"origin", origin}});
  };
  line("standard-rN", "standard Courant algebroid on R^N for any N >= 0", "the untwisted generalized tangent bundle");
  for (const auto& e : gallery_entries())
    if (e.name != "standard-r3") line(e.name, e.description, e.origin);
  o.result_text = text.str();
  o.result = {{"entries", std::move(list)}};
  return o;
}

// ---------------------------------------------------------------------------
// rendering

bool passed(const Outcome& o) {
  return std::all_of(o.reports.begin(), o.reports.end(), [](const auto& r) { return r.passed(); });
}

std::string render(const Options& opt, const Outcome& o, int exit_code) {
  if (opt.format == "machine") {
    json root;
    root["format_version"] = kFormatVersion;
    root["command"] = opt.command;
    root["input"] = opt.input.empty() ? json(nullptr) : json(opt.input);
    root["target"] = o.target.empty() ? json(nullptr) : json(o.target);
    root["passed"] = exit_code == kPass;
    root["exit_code"] = exit_code;
    json reports = json::array();
    for (const auto& r : o.reports) reports.push_back(json::parse(render_machine(r)));
    root["reports"] = std::move(reports);
    root["result"] = o.result;
    root["error"] = nullptr;
    return root.dump(2) + "\n";
  }
  if (opt.command == "gallery" || opt.command == "list-gallery") return o.result_text;
  std::ostringstream out;
  out << "command: " << opt.command << "\ninput: " << opt.input << "\ntarget: " << o.target << "\n";
  for (const auto& r : o.reports) out << "\n" << render_text(r);
  if (!o.result_text.empty()) out << "\n" << o.result_text;
  out << "\nstatus: " << (exit_code == kPass ? "pass" : "fail") << " (exit " << exit_code << ")\n";
  return out.str();
}

RunResult error_result(const Options& opt, int code, const std::string& kind, const std::string& message,
                       const std::optional<SourceLocation>& loc) {
  RunResult r;
  r.exit_code = code;
  std::string where = loc ? opt.input + ":" + std::to_string(loc->line) + ":" + std::to_string(loc->column) + ": " : "";
  r.err = "courant: " + where + kind + ": " + message + "\n";
  if (opt.format == "machine") {
    json root;
    root["format_version"] = kFormatVersion;
    root["command"] = opt.command;
    root["input"] = opt.input.empty() ? json(nullptr) : json(opt.input);
    root["target"] = nullptr;
    root["passed"] = false;
    root["exit_code"] = code;
    root["reports"] = json::array();
    root["result"] = nullptr;
    root["error"] = {{"kind", kind},
                     {"line", loc ? json(loc->line) : json(nullptr)},
                     {"column", loc ? json(loc->column) : json(nullptr)},
                     {"message", message}};
    r.out = root.dump(2) + "\n";
  }
  return r;
}

Outcome dispatch(const Options& opt) {
  if (opt.command == "gallery") return cmd_gallery(opt);
  if (opt.command == "list-gallery") return cmd_list_gallery();
  const auto in = load(opt.input);
  Context c{opt, in, instantiate(in.doc, opt.force)};
  if (opt.command == "check-axioms") return cmd_check_axioms(c);
  if (opt.command == "check-matched-pair") return cmd_check_matched_pair(c);
  if (opt.command == "matched-sum") return cmd_matched_sum(c);
  if (opt.command == "split") return cmd_split(c);
  if (opt.command == "check-dirac") return cmd_check_dirac(c);
  if (opt.command == "check-matched-dirac") return cmd_check_matched_dirac(c);
  if (opt.command == "build-regular") return cmd_build_regular(c);
  if (opt.command == "check-regular") return cmd_check_regular(c);
  if (opt.command == "flat-decompose") return cmd_flat_decompose(c);
  if (opt.command == "audit-normalization") return cmd_audit_normalization(c);
  throw std::logic_error("unhandled command " + opt.command);
}

struct CommandInfo {
  const char* name;
  const char* help;
};

const CommandInfo kCommands[] = {
    {"check-axioms", "check the Courant axioms of a structure, a matched sum or a built regular structure"},
    {"check-matched-pair", "check the matched-pair conditions (and the sum isomorphism for complex pairs)"},
    {"matched-sum", "print the matched sum of a matched pair as a table structure"},
    {"split", "split a structure along two frames and print the matched pair"},
    {"check-dirac", "check isotropy and integrability of a Dirac structure"},
    {"check-matched-dirac", "check a matched Dirac pair and its Lie algebroids"},
    {"build-regular", "print the regular structure built from regular data"},
    {"check-regular", "check compatibility of regular data and the axioms of the built structure"},
    {"flat-decompose", "write flat regular data as a matched pair and compare sums"},
    {"audit-normalization", "find the unique pairing scale for which the built structure is Courant"},
};

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  Options opt;
  CLI::App app{"Exact symbolic checks for Courant algebroids", "courant"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every command");

  std::uint64_t seed = opt.sample.seed;
  std::size_t samples = opt.sample.count;
  int max_degree = opt.sample.max_degree;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
  };
  for (const auto& info : kCommands) {
    auto* sub = app.add_subcommand(info.name, info.help);
    sub->add_option("input", opt.input, "Spec file path or gallery name")->required();
    sub->add_option("--target", opt.target, "Declaration to act on (default: the last one that fits)");
    sub->add_option("--seed", seed, "Seed of the randomized pass")->capture_default_str();
    sub->add_option("--samples", samples, "Random tuples per check")->capture_default_str();
    sub->add_option("--max-degree", max_degree, "Maximum degree of random coefficients")->capture_default_str();
    sub->add_flag("--force", opt.force, "Build despite failed preconditions");
    if (std::string(info.name) == "split")
      sub->add_option("--first", opt.first, "Comma-separated frame labels of the first factor");
    add_common(sub);
  }
  auto* gallery = app.add_subcommand("gallery", "print a gallery entry as a spec file");
  gallery->add_option("name", opt.input, "Gallery entry")->required();
  add_common(gallery);
  add_common(app.add_subcommand("list-gallery", "list the gallery"));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    return {code, out.str(), err.str()};
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    return {kSpecError, out.str(), err.str()};
  }
  opt.command = app.get_subcommands().front()->get_name();
  opt.sample.seed = seed;
  opt.sample.count = samples;
  opt.sample.max_degree = max_degree;

  try {
    opt.sample.validate();
    Outcome o = dispatch(opt);
    const int code = passed(o) ? kPass : kCheckFailure;
    return {code, render(opt, o, code), ""};
  } catch (const LocatedError& e) {
    return error_result(opt, kSpecError, e.kind, e.detail, e.location);
  } catch (const UsageError& e) {
    return error_result(opt, kSpecError, "usage error", e.what(), std::nullopt);
  } catch (const Error& e) {
    return error_result(opt, kSpecError, "invalid input", e.what(), std::nullopt);
  } catch (const std::exception& e) {
    return error_result(opt, kInternalError, "internal error", e.what(), std::nullopt);
  }
}

}  // namespace courant::cli
