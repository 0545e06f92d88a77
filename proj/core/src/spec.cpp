#include "courant/spec.hpp"

#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace courant {

const std::string& declaration_name(const Declaration& d) {
  return std::visit([](const auto& x) -> const std::string& { return x.name; }, d);
}

const char* declaration_keyword(const Declaration& d) {
  struct Visitor {
    const char* operator()(const FormDecl&) const { return "form"; }
    const char* operator()(const StructureDecl&) const { return "structure"; }
    const char* operator()(const ConnectionDecl&) const { return "connection"; }
    const char* operator()(const PairDecl&) const { return "matched-pair"; }
    const char* operator()(const DiracDecl&) const { return "dirac"; }
    const char* operator()(const MatchedDiracDecl&) const { return "matched-dirac"; }
    const char* operator()(const RegularDecl&) const { return "regular"; }
  };
  return std::visit(Visitor{}, d);
}

const Declaration* SpecDocument::find(const std::string& name) const {
  for (const auto& d : declarations)
    if (declaration_name(d) == name) return &d;
  return nullptr;
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t a = 0;
  while (a < s.size() && is_space(s[a])) ++a;
  std::size_t b = s.size();
  while (b > a && is_space(s[b - 1])) --b;
  if (lead) *lead = a;
  return s.substr(a, b - a);
}

// ---------------------------------------------------------------------------
// lexical helpers

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  SourceLocation at(std::size_t pos) const { return {line_, pos + 1}; }
  SourceLocation here() const { return at(pos_); }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  /// Next whitespace-delimited word, stopping before '='.
  std::string word(std::size_t* start = nullptr) {
    skip_space();
    if (start) *start = pos_;
    std::size_t b = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_]) && text_[pos_] != '=') ++pos_;
    return std::string(text_.substr(b, pos_ - b));
  }

  std::string expect_word(const std::string& what, SourceLocation* loc = nullptr) {
    std::size_t start = 0;
    std::string w = word(&start);
    if (w.empty()) throw SyntaxError(at(start), "expected " + what);
    if (loc) *loc = at(start);
    return w;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) throw SyntaxError(here(), std::string("expected `") + c + "`");
    ++pos_;
  }

  /// Remaining text and the location of its first character.
  std::string_view rest(SourceLocation* loc) {
    skip_space();
    *loc = here();
    std::string_view r = text_.substr(pos_);
    pos_ = text_.size();
    return r;
  }

  void expect_end() {
    skip_space();
    if (pos_ < text_.size()) throw SyntaxError(here(), "unexpected text `" + std::string(text_.substr(pos_)) + "`");
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

SourceLocation shift(SourceLocation loc, std::size_t by) { return {loc.line, loc.column + by}; }

struct Piece {
  std::string_view text;
  SourceLocation loc;
};

/// Splits at depth-0 commas, trimming each piece.
std::vector<Piece> split_commas(std::string_view text, SourceLocation origin) {
  std::vector<Piece> out;
  int depth = 0;
  std::size_t start = 0;
  auto push = [&](std::size_t end) {
    std::size_t lead = 0;
    auto t = trim(text.substr(start, end - start), &lead);
    out.push_back({t, shift(origin, start + lead)});
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      push(i);
      start = i + 1;
    }
  }
  push(text.size());
  return out;
}

struct Entry {
  std::string key;
  SourceLocation key_loc;
  std::string_view value;
  SourceLocation value_loc;
};

/// `{key: expr, ...}` or `0`.
std::vector<Entry> parse_map(std::string_view text, SourceLocation origin) {
  std::size_t lead = 0;
  auto t = trim(text, &lead);
  origin = shift(origin, lead);
  if (t == "0") return {};
  if (t.empty()) throw SyntaxError(origin, "expected `{` or `0`");
  if (t.front() != '{') throw SyntaxError(origin, "expected `{` or `0`");
  if (t.back() != '}') throw SyntaxError(shift(origin, t.size() - 1), "expected `}`");
  auto inner = t.substr(1, t.size() - 2);
  std::vector<Entry> out;
  if (trim(inner).empty()) return out;
  for (const auto& piece : split_commas(inner, shift(origin, 1))) {
    auto colon = piece.text.find(':');
    if (piece.text.empty()) throw SyntaxError(piece.loc, "empty entry");
    if (colon == std::string_view::npos) throw SyntaxError(piece.loc, "expected `key: value`");
    auto key = trim(piece.text.substr(0, colon));
    if (key.empty()) throw SyntaxError(piece.loc, "empty key");
    std::size_t vlead = 0;
    auto value = trim(piece.text.substr(colon + 1), &vlead);
    auto vloc = shift(piece.loc, colon + 1 + vlead);
    if (value.empty()) throw SyntaxError(vloc, "empty value");
    out.push_back({std::string(key), piece.loc, value, vloc});
  }
  return out;
}

std::size_t label_index(const std::vector<std::string>& labels, const Entry& e, const std::string& what) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == e.key) return i;
  throw UnknownName(e.key_loc, "`" + e.key + "` is not a " + what);
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

// ---------------------------------------------------------------------------
// parser

struct RawLine {
  std::string_view text;  // comment stripped
  std::size_t number;
};

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) {
    std::size_t n = 1, start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == '\n') {
        auto line = text.substr(start, i - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        lines_.push_back({line, n++});
        start = i + 1;
      }
    }
  }

  SpecDocument parse() {
    while (next()) {
      Cursor c(line_->text, line_->number);
      SourceLocation kloc;
      std::string keyword = c.expect_word("a keyword", &kloc);
      if (keyword == "chart") {
        parse_chart(c, kloc);
        continue;
      }
      if (!doc_.chart) throw SyntaxError(kloc, "the first statement must be `chart`");
      if (keyword == "form") {
        parse_form(c);
      } else if (keyword == "structure") {
        parse_structure(c);
      } else if (keyword == "connection") {
        parse_connection(c);
      } else if (keyword == "matched-pair") {
        parse_pair(c);
      } else if (keyword == "dirac") {
        parse_dirac(c);
      } else if (keyword == "matched-dirac") {
        parse_matched_dirac(c);
      } else if (keyword == "regular") {
        parse_regular(c);
      } else {
        throw SyntaxError(kloc, "unknown statement `" + keyword + "`");
      }
    }
    if (!doc_.chart) throw SyntaxError({line_count(), 1}, "missing `chart` statement");
    return std::move(doc_);
  }

 private:
  std::size_t line_count() const { return lines_.empty() ? 1 : lines_.back().number; }

  /// Advances to the next non-blank line.
  bool next() {
    while (index_ < lines_.size()) {
      line_ = &lines_[index_++];
      if (!trim(line_->text).empty()) return true;
    }
    return false;
  }

  const Chart& chart() const { return doc_.chart; }
  std::size_t nvars() const { return doc_.chart->dimension(); }
  Field field() const { return doc_.chart->field(); }

  Polynomial poly(std::string_view text, SourceLocation loc) const {
    return parse_polynomial(text, *doc_.chart, loc);
  }

  // -- names --------------------------------------------------------------

  std::string new_name(Cursor& c, SourceLocation* where) {
    std::string name = c.expect_word("a name", where);
    if (names_.count(name)) throw ShapeMismatch(*where, "`" + name + "` is already declared");
    if (name == "0") throw SyntaxError(*where, "`0` is reserved");
    return name;
  }

  void declare(Declaration d, SourceLocation where) {
    names_.insert(declaration_name(d));
    doc_.declarations.push_back(std::move(d));
    doc_.locations.push_back(where);
  }

  template <class T>
  const T& lookup(const std::string& name, SourceLocation loc, const char* kind) const {
    if (const auto* d = doc_.find(name))
      if (const auto* t = std::get_if<T>(d)) return *t;
    throw UnknownName(loc, "no " + std::string(kind) + " named `" + name + "`");
  }

  // -- literals -----------------------------------------------------------

  Section section(std::string_view text, SourceLocation loc, const std::vector<std::string>& labels,
                  const std::string& what) const {
    Section s(labels.size(), nvars());
    std::set<std::size_t> seen;
    for (const auto& e : parse_map(text, loc)) {
      auto i = label_index(labels, e, what);
      if (!seen.insert(i).second) throw ShapeMismatch(e.key_loc, "`" + e.key + "` given twice");
      s[i] = poly(e.value, e.value_loc);
    }
    return s;
  }

  std::size_t coordinate(const std::string& key, SourceLocation loc, const char* prefix) const {
    const std::string p(prefix);
    if (key.rfind(p, 0) == 0) {
      int i = doc_.chart->index_of(key.substr(p.size()));
      if (i >= 0) return static_cast<std::size_t>(i);
    }
    throw UnknownName(loc, "`" + key + "` is not " + p + "<coordinate>");
  }

  VectorField vector_field(std::string_view text, SourceLocation loc) const {
    std::vector<Polynomial> comps(nvars(), Polynomial(nvars()));
    std::set<std::size_t> seen;
    for (const auto& e : parse_map(text, loc)) {
      auto i = coordinate(e.key, e.key_loc, "d/d");
      if (!seen.insert(i).second) throw ShapeMismatch(e.key_loc, "`" + e.key + "` given twice");
      comps[i] = poly(e.value, e.value_loc);
    }
    return VectorField(chart(), std::move(comps));
  }

  DiffForm form(std::string_view text, SourceLocation loc, std::size_t degree) const {
    DiffForm out(chart(), degree);
    std::set<FormIndex> seen;
    for (const auto& e : parse_map(text, loc)) {
      FormIndex idx;
      std::size_t start = 0;
      for (;;) {
        auto caret = e.key.find('^', start);
        auto part = e.key.substr(start, caret == std::string::npos ? std::string::npos : caret - start);
        idx.push_back(static_cast<std::uint32_t>(coordinate(part, shift(e.key_loc, start), "d")));
        if (caret == std::string::npos) break;
        start = caret + 1;
      }
      if (idx.size() != degree)
        throw ShapeMismatch(e.key_loc, "expected a " + std::to_string(degree) + "-fold wedge of differentials");
      FormIndex sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ShapeMismatch(e.key_loc, "repeated differential in `" + e.key + "`");
      if (!seen.insert(sorted).second) throw ShapeMismatch(e.key_loc, "`" + e.key + "` given twice");
      out.add_term(idx, poly(e.value, e.value_loc));
    }
    return out;
  }

  std::size_t parse_size(const std::string& w, SourceLocation loc) const {
    if (w.empty() || w.size() > 6 || !std::all_of(w.begin(), w.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      throw SyntaxError(loc, "expected a non-negative integer");
    return static_cast<std::size_t>(std::stoul(w));
  }

  // -- blocks -------------------------------------------------------------

  /// Calls `body` for each line of a block up to `end`, with a cursor past
  /// the line's keyword.
  void block(SourceLocation opened, const std::function<void(const std::string&, SourceLocation, Cursor&)>& body) {
    for (;;) {
      if (!next()) throw SyntaxError(opened, "block is not closed by `end`");
      Cursor c(line_->text, line_->number);
      SourceLocation kloc;
      std::string keyword = c.expect_word("a keyword", &kloc);
      if (keyword == "end") {
        c.expect_end();
        return;
      }
      body(keyword, kloc, c);
    }
  }

  struct Row {
    std::vector<Piece> entries;
    SourceLocation loc;
  };

  Row row(Cursor& c) {
    SourceLocation loc;
    auto text = c.rest(&loc);
    if (text.empty()) throw SyntaxError(loc, "empty row");
    return Row{split_commas(text, loc), loc};
  }

  PolyMatrix poly_matrix(const std::vector<Row>& rows, std::size_t n_rows, std::size_t n_cols, SourceLocation opened,
                         const std::string& what) const {
    if (rows.size() != n_rows)
      throw ShapeMismatch(rows.empty() ? opened : rows.back().loc,
                          what + " needs " + std::to_string(n_rows) + " rows, got " + std::to_string(rows.size()));
    PolyMatrix m;
    for (const auto& r : rows) {
      if (r.entries.size() != n_cols)
        throw ShapeMismatch(r.loc, what + " rows need " + std::to_string(n_cols) + " entries, got " +
                                       std::to_string(r.entries.size()));
      m.emplace_back();
      for (const auto& e : r.entries) m.back().push_back(poly(e.text, e.loc));
    }
    return m;
  }

  ScalarMatrix scalar_matrix(const std::vector<Row>& rows, std::size_t n, SourceLocation opened,
                             const std::string& what) const {
    if (rows.size() != n)
      throw ShapeMismatch(rows.empty() ? opened : rows.back().loc,
                          what + " needs " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
    ScalarMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].entries.size() != n)
        throw ShapeMismatch(rows[i].loc, what + " rows need " + std::to_string(n) + " entries, got " +
                                             std::to_string(rows[i].entries.size()));
      for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_scalar(rows[i].entries[j].text, field(), rows[i].entries[j].loc);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (m(i, j) != m(j, i))
          throw ShapeMismatch(rows[i].entries[j].loc, what + " is not symmetric: entry (" + std::to_string(i + 1) +
                                                         ", " + std::to_string(j + 1) + ") differs from (" +
                                                         std::to_string(j + 1) + ", " + std::to_string(i + 1) + ")");
    if (!m.inverse()) throw ShapeMismatch(opened, what + " is singular");
    return m;
  }

  // -- labels of declared objects ----------------------------------------

  std::vector<std::string> standard_labels() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < nvars(); ++i) out.push_back(vector_label(*chart(), i));
    for (std::size_t i = 0; i < nvars(); ++i) out.push_back(form_label(*chart(), i));
    return out;
  }

  const std::vector<std::string>& structure_labels(const std::string& name, SourceLocation loc) const {
    auto it = structure_labels_.find(name);
    if (it == structure_labels_.end()) throw UnknownName(loc, "no structure named `" + name + "`");
    return it->second;
  }

  /// Labels of a structure, or of the sum of a matched pair.
  std::vector<std::string> host_labels(const std::string& name, SourceLocation loc) const {
    if (auto it = structure_labels_.find(name); it != structure_labels_.end()) return it->second;
    if (auto it = pair_labels_.find(name); it != pair_labels_.end()) {
      auto out = it->second.first;
      out.insert(out.end(), it->second.second.begin(), it->second.second.end());
      return out;
    }
    throw UnknownName(loc, "no structure or matched pair named `" + name + "`");
  }

  const FormDecl& form_ref(const std::string& name, SourceLocation loc, std::size_t degree) const {
    const auto& f = lookup<FormDecl>(name, loc, "form");
    if (f.form.degree() != degree)
      throw ShapeMismatch(loc, "`" + name + "` must be a " + std::to_string(degree) + "-form");
    return f;
  }

  void require_complex(SourceLocation loc) const {
    if (!doc_.complex_n) throw ShapeMismatch(loc, "needs a `chart complex N` chart");
  }

  // -- statements ---------------------------------------------------------

  void parse_chart(Cursor& c, SourceLocation kloc) {
    if (doc_.chart) throw SyntaxError(kloc, "`chart` may appear only once");
    SourceLocation loc;
    std::string kind = c.expect_word("`rational`, `gaussian` or `complex`", &loc);
    if (kind == "complex") {
      SourceLocation nloc;
      auto n = parse_size(c.expect_word("a dimension", &nloc), nloc);
      c.expect_end();
      if (n == 0) throw ShapeMismatch(nloc, "complex dimension must be positive");
      doc_.chart = ComplexChart::make(n).chart;
      doc_.complex_n = n;
      return;
    }
    Field f;
    if (kind == "rational") {
      f = Field::Rational;
    } else if (kind == "gaussian") {
      f = Field::GaussianRational;
    } else {
      throw SyntaxError(loc, "expected `rational`, `gaussian` or `complex`");
    }
    std::vector<std::string> names;
    while (!c.at_end()) {
      std::size_t start = 0;
      SourceLocation nloc;
      std::string name = c.word(&start);
      nloc = c.at(start);
      if (name.empty()) throw SyntaxError(c.here(), "unexpected `=`");
      bool ok = (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
                std::all_of(name.begin(), name.end(),
                            [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
      if (!ok || name == "i") throw SyntaxError(nloc, "`" + name + "` is not a valid coordinate name");
      if (std::find(names.begin(), names.end(), name) != names.end())
        throw ShapeMismatch(nloc, "coordinate `" + name + "` repeated");
      names.push_back(name);
    }
    doc_.chart = make_chart(std::move(names), f);
  }

  void parse_form(Cursor& c) {
    SourceLocation where;
    std::string name = new_name(c, &where);
    SourceLocation dloc;
    auto degree = parse_size(c.expect_word("a degree", &dloc), dloc);
    c.expect('=');
    SourceLocation vloc;
    auto text = c.rest(&vloc);
    declare(FormDecl{name, form(text, vloc, degree)}, where);
  }

  void parse_structure(Cursor& c) {
    SourceLocation where;
    StructureDecl d;
    d.name = new_name(c, &where);
    c.expect('=');
    SourceLocation kloc;
    std::string kind = c.expect_word("a structure kind", &kloc);
    std::vector<std::string> labels;
    if (kind == "standard") {
      d.kind = StructureDecl::Kind::Standard;
      labels = standard_labels();
    } else if (kind == "twisted" || kind == "complex-standard") {
      d.kind = kind == "twisted" ? StructureDecl::Kind::Twisted : StructureDecl::Kind::ComplexStandard;
      if (kind == "complex-standard") require_complex(kloc);
      SourceLocation floc;
      d.twist = c.expect_word("a form name", &floc);
      form_ref(d.twist, floc, 3);
      labels = kind == "twisted" ? standard_labels()
                                 : make_complex_standard(ComplexChart::wrap(chart()), DiffForm(chart(), 3)).labels();
    } else if (kind == "table") {
      d.kind = StructureDecl::Kind::Table;
      c.expect_end();
      d.table = parse_table(where);
      labels = d.table->labels();
    } else {
      throw SyntaxError(kloc, "expected `standard`, `twisted`, `complex-standard` or `table`");
    }
    c.expect_end();
    structure_labels_[d.name] = labels;
    declare(std::move(d), where);
  }

  CourantStructure parse_table(SourceLocation opened) {
    std::vector<std::string> labels;
    std::optional<SourceLocation> labels_loc;
    std::vector<Row> rows;
    struct Pending {
      std::string a, b;
      SourceLocation aloc, bloc;
      std::string_view value;
      SourceLocation vloc;
      bool bracket;
    };
    std::vector<Pending> pending;
    block(opened, [&](const std::string& kw, SourceLocation kloc, Cursor& c) {
      if (kw == "labels") {
        if (labels_loc) throw SyntaxError(kloc, "`labels` given twice");
        labels_loc = kloc;
        while (!c.at_end()) {
          SourceLocation lloc;
          std::string l = c.expect_word("a label", &lloc);
          if (std::find(labels.begin(), labels.end(), l) != labels.end())
            throw ShapeMismatch(lloc, "label `" + l + "` repeated");
          if (l == "0" || l.find_first_of("{}:,") != std::string::npos)
            throw SyntaxError(lloc, "`" + l + "` is not a valid label");
          labels.push_back(l);
        }
        if (labels.empty()) throw SyntaxError(kloc, "`labels` needs at least one label");
      } else if (kw == "row") {
        rows.push_back(row(c));
      } else if (kw == "anchor" || kw == "bracket") {
        Pending p;
        p.bracket = kw == "bracket";
        p.a = c.expect_word("a label", &p.aloc);
        if (p.bracket) p.b = c.expect_word("a label", &p.bloc);
        c.expect('=');
        p.value = c.rest(&p.vloc);
        pending.push_back(p);
      } else {
        throw SyntaxError(kloc, "expected `labels`, `row`, `anchor`, `bracket` or `end`");
      }
    });
    if (!labels_loc) throw SyntaxError(opened, "table needs `labels`");
    const std::size_t k = labels.size();
    ScalarMatrix g = scalar_matrix(rows, k, *labels_loc, "pairing");
    std::vector<VectorField> anchor(k, VectorField(chart()));
    std::vector<std::vector<Section>> table(k, std::vector<Section>(k, Section(k, nvars())));
    std::set<std::size_t> anchored;
    std::set<std::pair<std::size_t, std::size_t>> bracketed;
    auto index = [&](const std::string& l, SourceLocation loc) {
      auto it = std::find(labels.begin(), labels.end(), l);
      if (it == labels.end()) throw UnknownName(loc, "`" + l + "` is not a frame label");
      return static_cast<std::size_t>(it - labels.begin());
    };
    for (const auto& p : pending) {
      auto i = index(p.a, p.aloc);
      if (!p.bracket) {
        if (!anchored.insert(i).second) throw ShapeMismatch(p.aloc, "anchor of `" + p.a + "` given twice");
        anchor[i] = vector_field(p.value, p.vloc);
      } else {
        auto j = index(p.b, p.bloc);
        if (!bracketed.insert({i, j}).second)
          throw ShapeMismatch(p.aloc, "bracket `" + p.a + " " + p.b + "` given twice");
        table[i][j] = section(p.value, p.vloc, labels, "frame label");
      }
    }
    return CourantStructure(chart(), labels, g, anchor, table);
  }

  void parse_connection(Cursor& c) {
    SourceLocation where;
    ConnectionDecl d;
    d.name = new_name(c, &where);
    c.expect('=');
    SourceLocation dloc, onloc, aloc;
    d.domain = c.expect_word("a structure name", &dloc);
    if (c.expect_word("`on`", &onloc) != "on") throw SyntaxError(onloc, "expected `on`");
    d.acted = c.expect_word("a structure name", &aloc);
    c.expect_end();
    const auto dl = structure_labels(d.domain, dloc);
    const auto al = structure_labels(d.acted, aloc);
    d.table.assign(dl.size(), std::vector<Section>(al.size(), Section(al.size(), nvars())));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    block(where, [&](const std::string& kw, SourceLocation kloc, Cursor& cc) {
      if (kw != "entry") throw SyntaxError(kloc, "expected `entry` or `end`");
      SourceLocation l1, l2, vloc;
      auto a = cc.expect_word("a label", &l1);
      auto b = cc.expect_word("a label", &l2);
      cc.expect('=');
      auto value = cc.rest(&vloc);
      auto i = label_index(dl, Entry{a, l1, {}, {}}, "label of " + d.domain);
      auto j = label_index(al, Entry{b, l2, {}, {}}, "label of " + d.acted);
      if (!seen.insert({i, j}).second) throw ShapeMismatch(l1, "entry `" + a + " " + b + "` given twice");
      d.table[i][j] = section(value, vloc, al, "label of " + d.acted);
    });
    connection_sides_[d.name] = {d.domain, d.acted};
    declare(std::move(d), where);
  }

  void parse_pair(Cursor& c) {
    SourceLocation where;
    PairDecl d;
    d.name = new_name(c, &where);
    c.expect('=');
    SourceLocation loc1;
    std::string first = c.expect_word("structure names or `complex`", &loc1);
    if (first == "complex") {
      require_complex(loc1);
      d.kind = PairDecl::Kind::Complex;
      SourceLocation floc;
      d.twist = c.expect_word("a form name", &floc);
      form_ref(d.twist, floc, 3);
      if (!c.at_end()) {
        SourceLocation oloc;
        if (c.expect_word("`omit-h21`", &oloc) != "omit-h21") throw SyntaxError(oloc, "expected `omit-h21`");
        d.omit_h21 = true;
      }
      c.expect_end();
      auto mp = build_complex_matched_pair(ComplexChart::wrap(chart()), DiffForm(chart(), 3));
      pair_labels_[d.name] = {mp.e1.labels(), mp.e2.labels()};
      declare(std::move(d), where);
      return;
    }
    SourceLocation loc2, rloc, lloc;
    d.e1 = first;
    d.e2 = c.expect_word("a structure name", &loc2);
    d.right = c.expect_word("a connection name or `0`", &rloc);
    d.left = c.expect_word("a connection name or `0`", &lloc);
    c.expect_end();
    const auto l1 = structure_labels(d.e1, loc1);
    const auto l2 = structure_labels(d.e2, loc2);
    auto check_side = [&](const std::string& conn, SourceLocation loc, const std::string& dom,
                          const std::string& acted) {
      if (conn == "0") return;
      lookup<ConnectionDecl>(conn, loc, "connection");
      const auto& sides = connection_sides_.at(conn);
      if (sides.first != dom || sides.second != acted)
        throw ShapeMismatch(loc, "`" + conn + "` must be a connection of " + dom + " on " + acted);
    };
    check_side(d.right, rloc, d.e1, d.e2);
    check_side(d.left, lloc, d.e2, d.e1);
    pair_labels_[d.name] = {l1, l2};
    declare(std::move(d), where);
  }

  void parse_dirac(Cursor& c) {
    SourceLocation where;
    DiracDecl d;
    d.name = new_name(c, &where);
    c.expect('=');
    SourceLocation kloc, hloc;
    std::string kind = c.expect_word("a Dirac kind", &kloc);
    d.host = c.expect_word("a host name", &hloc);
    const std::size_t n = nvars();
    if (kind == "frame") {
      d.kind = DiracDecl::Kind::Frame;
      c.expect_end();
      const auto labels = host_labels(d.host, hloc);
      block(where, [&](const std::string& kw, SourceLocation kl, Cursor& cc) {
        if (kw == "element") {
          SourceLocation lloc, vloc;
          auto l = cc.expect_word("a label", &lloc);
          if (std::find(d.labels.begin(), d.labels.end(), l) != d.labels.end())
            throw ShapeMismatch(lloc, "element `" + l + "` repeated");
          cc.expect('=');
          auto value = cc.rest(&vloc);
          d.labels.push_back(l);
          d.frame.push_back(section(value, vloc, labels, "label of " + d.host));
        } else if (kw == "complement") {
          SourceLocation vloc;
          auto value = cc.rest(&vloc);
          d.complement.push_back(section(value, vloc, labels, "label of " + d.host));
        } else {
          throw SyntaxError(kl, "expected `element`, `complement` or `end`");
        }
      });
      if (2 * d.frame.size() != labels.size() || d.complement.size() != d.frame.size())
        throw ShapeMismatch(where, "a Dirac frame on a rank " + std::to_string(labels.size()) + " host needs " +
                                       std::to_string(labels.size() / 2) + " elements and as many complements");
    } else if (kind == "graph-two-form") {
      d.kind = DiracDecl::Kind::TwoForm;
      structure_labels(d.host, hloc);
      SourceLocation floc;
      d.form = c.expect_word("a form name", &floc);
      form_ref(d.form, floc, 2);
      c.expect_end();
    } else if (kind == "graph-bivector" || kind == "graph-pairing-map") {
      const bool bivector = kind == "graph-bivector";
      d.kind = bivector ? DiracDecl::Kind::Bivector : DiracDecl::Kind::PairingMap;
      c.expect_end();
      const auto labels = structure_labels(d.host, hloc);
      if (labels.size() % 2 != 0) throw ShapeMismatch(hloc, "host rank must be even");
      const std::size_t k = bivector ? n : labels.size() / 2;
      d.matrix = matrix_block(where, k, k, bivector ? "bivector" : "pairing map");
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          if (d.matrix[i][j] != -d.matrix[j][i])
            throw ShapeMismatch(where, std::string(bivector ? "bivector" : "pairing map") + " is not antisymmetric");
    } else if (kind == "port-hamiltonian") {
      d.kind = DiracDecl::Kind::PortHamiltonian;
      if (!pair_labels_.count(d.host)) throw UnknownName(hloc, "no matched pair named `" + d.host + "`");
      SourceLocation floc;
      d.form = c.expect_word("a form name", &floc);
      form_ref(d.form, floc, 2);
      c.expect_end();
      const auto labels = host_labels(d.host, hloc);
      if (labels.size() < 2 * n || (labels.size() - 2 * n) % 2 != 0)
        throw ShapeMismatch(hloc, "host must be TM + T*M + V with V = E + E*");
      d.matrix = matrix_block(where, (labels.size() - 2 * n) / 2, n, "port map");
    } else {
      throw SyntaxError(kloc,
                        "expected `frame`, `graph-two-form`, `graph-bivector`, `graph-pairing-map` or "
                        "`port-hamiltonian`");
    }
    dirac_hosts_[d.name] = d.host;
    declare(std::move(d), where);
  }

  PolyMatrix matrix_block(SourceLocation opened, std::size_t rows, std::size_t cols, const std::string& what) {
    std::vector<Row> rs;
    block(opened, [&](const std::string& kw, SourceLocation kl, Cursor& cc) {
      if (kw != "row") throw SyntaxError(kl, "expected `row` or `end`");
      rs.push_back(row(cc));
    });
    return poly_matrix(rs, rows, cols, opened, what);
  }

  void parse_matched_dirac(Cursor& c) {
    SourceLocation where;
    MatchedDiracDecl d;
    d.name = new_name(c, &where);
    c.expect('=');
    SourceLocation ploc, l1, l2;
    d.pair = c.expect_word("a matched pair name", &ploc);
    d.d1 = c.expect_word("a Dirac name", &l1);
    d.d2 = c.expect_word("a Dirac name", &l2);
    c.expect_end();
    const auto& pair = lookup<PairDecl>(d.pair, ploc, "matched pair");
    lookup<DiracDecl>(d.d1, l1, "Dirac structure");
    lookup<DiracDecl>(d.d2, l2, "Dirac structure");
    std::string e1 = pair.kind == PairDecl::Kind::Explicit ? pair.e1 : "";
    std::string e2 = pair.kind == PairDecl::Kind::Explicit ? pair.e2 : "";
    if (pair.kind == PairDecl::Kind::Complex)
      throw ShapeMismatch(ploc, "matched Dirac pairs need an explicit matched pair");
    if (dirac_hosts_.at(d.d1) != e1) throw ShapeMismatch(l1, "`" + d.d1 + "` must live in " + e1);
    if (dirac_hosts_.at(d.d2) != e2) throw ShapeMismatch(l2, "`" + d.d2 + "` must live in " + e2);
    declare(std::move(d), where);
  }

  void parse_regular(Cursor& c) {
    SourceLocation where;
    RegularDecl d;
    d.name = new_name(c, &where);
    c.expect_end();
    std::optional<SourceLocation> algebra_loc;
    std::vector<Row> rows;
    struct Pending {
      std::string kw, a, b;
      SourceLocation aloc, bloc, vloc;
      std::string_view value;
    };
    std::vector<Pending> pending;
    std::optional<SourceLocation> lambda_loc, twist_loc;
    std::string_view lambda_text;
    block(where, [&](const std::string& kw, SourceLocation kl, Cursor& cc) {
      if (kw == "algebra") {
        if (algebra_loc) throw SyntaxError(kl, "`algebra` given twice");
        algebra_loc = kl;
        while (!cc.at_end()) {
          SourceLocation lloc;
          auto l = cc.expect_word("a label", &lloc);
          if (std::find(d.lie.labels.begin(), d.lie.labels.end(), l) != d.lie.labels.end())
            throw ShapeMismatch(lloc, "label `" + l + "` repeated");
          d.lie.labels.push_back(l);
        }
      } else if (kw == "row") {
        rows.push_back(row(cc));
      } else if (kw == "lie" || kw == "nabla" || kw == "curvature") {
        Pending p;
        p.kw = kw;
        p.a = cc.expect_word("a label", &p.aloc);
        p.b = cc.expect_word("a label", &p.bloc);
        cc.expect('=');
        p.value = cc.rest(&p.vloc);
        pending.push_back(p);
      } else if (kw == "twist") {
        if (twist_loc) throw SyntaxError(kl, "`twist` given twice");
        SourceLocation floc;
        d.twist = cc.expect_word("a form name", &floc);
        cc.expect_end();
        form_ref(d.twist, floc, 3);
        twist_loc = floc;
      } else if (kw == "lambda") {
        if (lambda_loc) throw SyntaxError(kl, "`lambda` given twice");
        SourceLocation vloc;
        lambda_text = cc.rest(&vloc);
        lambda_loc = vloc;
      } else {
        throw SyntaxError(kl, "expected `algebra`, `row`, `lie`, `nabla`, `curvature`, `twist`, `lambda` or `end`");
      }
    });
    if (!algebra_loc) throw SyntaxError(where, "regular data needs `algebra`");
    const std::size_t m = d.lie.rank(), n = nvars();
    d.lie.k = scalar_matrix(rows, m, *algebra_loc, "invariant form");
    d.lie.c.assign(m, std::vector<std::vector<Scalar>>(m, std::vector<Scalar>(m)));
    d.nabla.assign(n, std::vector<Section>(m, Section(m, n)));
    d.curvature.assign(n, std::vector<Section>(n, Section(m, n)));
    if (lambda_loc) d.lambda = parse_scalar(lambda_text, field(), *lambda_loc);

    std::vector<std::string> vectors;
    for (std::size_t i = 0; i < n; ++i) vectors.push_back(vector_label(*chart(), i));
    std::set<std::tuple<std::string, std::size_t, std::size_t>> seen;
    for (const auto& p : pending) {
      const bool on_algebra = p.kw == "lie";
      const auto& first = on_algebra ? d.lie.labels : vectors;
      const auto& second = p.kw == "curvature" ? vectors : d.lie.labels;
      auto i = label_index(first, Entry{p.a, p.aloc, {}, {}}, on_algebra ? "algebra label" : "coordinate field");
      auto j = label_index(second, Entry{p.b, p.bloc, {}, {}},
                           p.kw == "curvature" ? "coordinate field" : "algebra label");
      bool antisym = p.kw != "nabla";
      if (antisym && i == j) throw ShapeMismatch(p.bloc, p.kw + " entries need two different labels");
      auto key = antisym ? std::make_tuple(p.kw, std::min(i, j), std::max(i, j)) : std::make_tuple(p.kw, i, j);
      if (!seen.insert(key).second) throw ShapeMismatch(p.aloc, p.kw + " `" + p.a + " " + p.b + "` given twice");
      Section s = section(p.value, p.vloc, d.lie.labels, "algebra label");
      if (p.kw == "nabla") {
        d.nabla[i][j] = s;
      } else if (p.kw == "curvature") {
        d.curvature[i][j] = s;
        d.curvature[j][i] = -s;
      } else {
        for (std::size_t k = 0; k < m; ++k) {
          if (!s[k].is_constant()) throw ShapeMismatch(p.vloc, "structure constants must be constant");
          d.lie.c[i][j][k] = s[k].constant_term();
          d.lie.c[j][i][k] = -s[k].constant_term();
        }
      }
    }
    declare(std::move(d), where);
  }

  std::vector<RawLine> lines_;
  std::size_t index_ = 0;
  const RawLine* line_ = nullptr;
  SpecDocument doc_;
  std::set<std::string> names_;
  std::map<std::string, std::vector<std::string>> structure_labels_;
  std::map<std::string, std::pair<std::vector<std::string>, std::vector<std::string>>> pair_labels_;
  std::map<std::string, std::pair<std::string, std::string>> connection_sides_;
  std::map<std::string, std::string> dirac_hosts_;
};

// ---------------------------------------------------------------------------
// printer

class SpecPrinter {
 public:
  explicit SpecPrinter(const SpecDocument& doc) : doc_(doc), names_(doc.chart->names()) {}

  std::string print() {
    const auto& c = *doc_.chart;
    if (doc_.complex_n) {
      out_ << "chart complex " << *doc_.complex_n << "\n";
    } else {
      out_ << "chart " << (c.gaussian() ? "gaussian" : "rational");
      for (const auto& n : c.names()) out_ << " " << n;
      out_ << "\n";
    }
    for (const auto& d : doc_.declarations) {
      out_ << "\n";
      std::visit([this](const auto& x) { emit(x); }, d);
    }
    return out_.str();
  }

 private:
  std::string p(const Polynomial& q) const { return q.str(names_); }

  std::string section(const Section& s, const std::vector<std::string>& labels) const {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < s.rank(); ++i)
      if (!s[i].is_zero()) parts.push_back(labels[i] + ": " + p(s[i]));
    return parts.empty() ? "0" : "{" + join(parts, ", ") + "}";
  }

  std::string field(const VectorField& v) const {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < v.dimension(); ++i)
      if (!v[i].is_zero()) parts.push_back("d/d" + names_[i] + ": " + p(v[i]));
    return parts.empty() ? "0" : "{" + join(parts, ", ") + "}";
  }

  std::string form(const DiffForm& f) const {
    std::vector<std::string> parts;
    for (const auto& [idx, coeff] : f.terms()) {
      std::vector<std::string> ds;
      for (auto i : idx) ds.push_back("d" + names_[i]);
      parts.push_back(join(ds, "^") + ": " + p(coeff));
    }
    return parts.empty() ? "0" : "{" + join(parts, ", ") + "}";
  }

  void rows(const ScalarMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::vector<std::string> e;
      for (std::size_t j = 0; j < m.cols(); ++j) e.push_back(m(i, j).str());
      out_ << "  row " << join(e, ", ") << "\n";
    }
  }

  void rows(const PolyMatrix& m) {
    for (const auto& r : m) {
      std::vector<std::string> e;
      for (const auto& q : r) e.push_back(p(q));
      out_ << "  row " << join(e, ", ") << "\n";
    }
  }

  std::vector<std::string> labels_of(const std::string& name) const {
    const auto* d = doc_.find(name);
    if (const auto* s = std::get_if<StructureDecl>(d)) {
      if (s->table) return s->table->labels();
      std::vector<std::string> out;
      if (s->kind == StructureDecl::Kind::ComplexStandard)
        return make_complex_standard(ComplexChart::wrap(doc_.chart), DiffForm(doc_.chart, 3)).labels();
      for (std::size_t i = 0; i < names_.size(); ++i) out.push_back(vector_label(*doc_.chart, i));
      for (std::size_t i = 0; i < names_.size(); ++i) out.push_back(form_label(*doc_.chart, i));
      return out;
    }
    const auto& pr = std::get<PairDecl>(*d);
    auto out = labels_of(pr.e1);
    auto two = labels_of(pr.e2);
    out.insert(out.end(), two.begin(), two.end());
    return out;
  }

  void emit(const FormDecl& d) { out_ << "form " << d.name << " " << d.form.degree() << " = " << form(d.form) << "\n"; }

  void emit(const StructureDecl& d) {
    out_ << "structure " << d.name << " = ";
    switch (d.kind) {
      case StructureDecl::Kind::Standard:
        out_ << "standard\n";
        return;
      case StructureDecl::Kind::Twisted:
        out_ << "twisted " << d.twist << "\n";
        return;
      case StructureDecl::Kind::ComplexStandard:
        out_ << "complex-standard " << d.twist << "\n";
        return;
      case StructureDecl::Kind::Table:
        break;
    }
    const auto& e = *d.table;
    out_ << "table\n  labels " << join(e.labels(), " ") << "\n";
    rows(e.pairing_matrix());
    for (std::size_t i = 0; i < e.rank(); ++i)
      if (!e.anchor_rows()[i].is_zero()) out_ << "  anchor " << e.label(i) << " = " << field(e.anchor_rows()[i]) << "\n";
    for (std::size_t i = 0; i < e.rank(); ++i)
      for (std::size_t j = 0; j < e.rank(); ++j)
        if (!e.table_entry(i, j).is_zero())
          out_ << "  bracket " << e.label(i) << " " << e.label(j) << " = " << section(e.table_entry(i, j), e.labels())
               << "\n";
    out_ << "end\n";
  }

  void emit(const ConnectionDecl& d) {
    out_ << "connection " << d.name << " = " << d.domain << " on " << d.acted << "\n";
    const auto dl = labels_of(d.domain);
    const auto al = labels_of(d.acted);
    for (std::size_t i = 0; i < d.table.size(); ++i)
      for (std::size_t j = 0; j < d.table[i].size(); ++j)
        if (!d.table[i][j].is_zero())
          out_ << "  entry " << dl[i] << " " << al[j] << " = " << section(d.table[i][j], al) << "\n";
    out_ << "end\n";
  }

  void emit(const PairDecl& d) {
    out_ << "matched-pair " << d.name << " = ";
    if (d.kind == PairDecl::Kind::Complex) {
      out_ << "complex " << d.twist << (d.omit_h21 ? " omit-h21" : "") << "\n";
    } else {
      out_ << d.e1 << " " << d.e2 << " " << d.right << " " << d.left << "\n";
    }
  }

  void emit(const DiracDecl& d) {
    out_ << "dirac " << d.name << " = ";
    switch (d.kind) {
      case DiracDecl::Kind::Frame: {
        out_ << "frame " << d.host << "\n";
        const auto labels = labels_of(d.host);
        for (std::size_t i = 0; i < d.frame.size(); ++i)
          out_ << "  element " << d.labels[i] << " = " << section(d.frame[i], labels) << "\n";
        for (const auto& s : d.complement) out_ << "  complement " << section(s, labels) << "\n";
        out_ << "end\n";
        return;
      }
      case DiracDecl::Kind::TwoForm:
        out_ << "graph-two-form " << d.host << " " << d.form << "\n";
        return;
      case DiracDecl::Kind::Bivector:
        out_ << "graph-bivector " << d.host << "\n";
        break;
      case DiracDecl::Kind::PairingMap:
        out_ << "graph-pairing-map " << d.host << "\n";
        break;
      case DiracDecl::Kind::PortHamiltonian:
        out_ << "port-hamiltonian " << d.host << " " << d.form << "\n";
        break;
    }
    rows(d.matrix);
    out_ << "end\n";
  }

  void emit(const MatchedDiracDecl& d) {
    out_ << "matched-dirac " << d.name << " = " << d.pair << " " << d.d1 << " " << d.d2 << "\n";
  }

  void emit(const RegularDecl& d) {
    out_ << "regular " << d.name << "\n  algebra " << join(d.lie.labels, " ") << "\n";
    rows(d.lie.k);
    const std::size_t m = d.lie.rank();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        Section s(m, names_.size());
        for (std::size_t k = 0; k < m; ++k) s[k] = Polynomial::constant(names_.size(), d.lie.c[i][j][k]);
        if (!s.is_zero())
          out_ << "  lie " << d.lie.labels[i] << " " << d.lie.labels[j] << " = " << section(s, d.lie.labels) << "\n";
      }
    std::vector<std::string> vectors;
    for (std::size_t i = 0; i < names_.size(); ++i) vectors.push_back(vector_label(*doc_.chart, i));
    for (std::size_t i = 0; i < d.nabla.size(); ++i)
      for (std::size_t a = 0; a < m; ++a)
        if (!d.nabla[i][a].is_zero())
          out_ << "  nabla " << vectors[i] << " " << d.lie.labels[a] << " = " << section(d.nabla[i][a], d.lie.labels)
               << "\n";
    for (std::size_t i = 0; i < d.curvature.size(); ++i)
      for (std::size_t j = i + 1; j < d.curvature.size(); ++j)
        if (!d.curvature[i][j].is_zero())
          out_ << "  curvature " << vectors[i] << " " << vectors[j] << " = "
               << section(d.curvature[i][j], d.lie.labels) << "\n";
    if (!d.twist.empty()) out_ << "  twist " << d.twist << "\n";
    if (d.lambda != Scalar(2)) out_ << "  lambda " << d.lambda.str() << "\n";
    out_ << "end\n";
  }

  const SpecDocument& doc_;
  std::vector<std::string> names_;
  std::ostringstream out_;
};

}  // namespace

SpecDocument parse_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string print_spec(const SpecDocument& doc) { return SpecPrinter(doc).print(); }

// ---------------------------------------------------------------------------
// instantiation

CourantStructure SpecModel::host(const std::string& name) const {
  if (auto it = structures.find(name); it != structures.end()) return it->second;
  if (auto it = pairs.find(name); it != pairs.end()) return matched_sum(it->second);
  throw Error("no structure or matched pair named " + name);
}

SpecModel instantiate(const SpecDocument& doc, bool force) {
  SpecModel m;
  m.chart = doc.chart;
  if (doc.complex_n) m.complex = ComplexChart::wrap(doc.chart);
  const std::size_t n = doc.chart->dimension();

  struct Builder {
    SpecModel& m;
    bool force;
    std::size_t n;

    void operator()(const FormDecl& d) { m.forms.emplace(d.name, d.form); }

    void operator()(const StructureDecl& d) {
      switch (d.kind) {
        case StructureDecl::Kind::Standard:
          m.structures.emplace(d.name, make_standard(m.chart));
          break;
        case StructureDecl::Kind::Twisted:
          m.structures.emplace(d.name, make_twisted_standard(m.chart, m.forms.at(d.twist), force));
          break;
        case StructureDecl::Kind::ComplexStandard:
          m.structures.emplace(d.name, make_complex_standard(*m.complex, m.forms.at(d.twist), force));
          break;
        case StructureDecl::Kind::Table:
          m.structures.emplace(d.name, *d.table);
          break;
      }
    }

    void operator()(const ConnectionDecl& d) {
      m.connections.emplace(d.name, Connection(m.structures.at(d.domain), m.structures.at(d.acted), d.table));
    }

    void operator()(const PairDecl& d) {
      if (d.kind == PairDecl::Kind::Complex) {
        m.pairs.emplace(d.name, build_complex_matched_pair(*m.complex, m.forms.at(d.twist), {d.omit_h21}));
        return;
      }
      const auto& e1 = m.structures.at(d.e1);
      const auto& e2 = m.structures.at(d.e2);
      Connection right = d.right == "0" ? Connection::trivial(e1, e2) : m.connections.at(d.right);
      Connection left = d.left == "0" ? Connection::trivial(e2, e1) : m.connections.at(d.left);
      m.pairs.emplace(d.name, MatchedPairData{e1, e2, std::move(right), std::move(left)});
    }

    void operator()(const DiracDecl& d) {
      const auto host = m.host(d.host);
      switch (d.kind) {
        case DiracDecl::Kind::Frame:
          m.dirac.emplace(d.name, DiracFrame(host, d.frame, d.complement, d.labels));
          break;
        case DiracDecl::Kind::TwoForm:
          m.dirac.emplace(d.name, graph_of_two_form(host, m.forms.at(d.form)));
          break;
        case DiracDecl::Kind::Bivector:
          m.dirac.emplace(d.name, graph_of_bivector(host, d.matrix));
          break;
        case DiracDecl::Kind::PairingMap:
          m.dirac.emplace(d.name, graph_of_pairing_map(host, d.matrix));
          break;
        case DiracDecl::Kind::PortHamiltonian:
          m.dirac.emplace(d.name, port_hamiltonian_graph(host, m.forms.at(d.form), d.matrix));
          break;
      }
    }

    void operator()(const MatchedDiracDecl& d) { m.matched_dirac.emplace(d.name, d); }

    void operator()(const RegularDecl& d) {
      RegularData rd{m.chart, d.lie, d.nabla, d.curvature,
                     d.twist.empty() ? DiffForm(m.chart, 3) : m.forms.at(d.twist), d.lambda};
      rd.lie.validate();
      rd.validate();
      m.regular.emplace(d.name, std::move(rd));
    }
  };

  Builder b{m, force, n};
  for (std::size_t i = 0; i < doc.declarations.size(); ++i) {
    try {
      std::visit(b, doc.declarations[i]);
    } catch (const LocatedError&) {
      throw;
    } catch (const Error& e) {
      const SourceLocation loc = i < doc.locations.size() ? doc.locations[i] : SourceLocation{};
      throw InvalidData(loc, std::string(declaration_keyword(doc.declarations[i])) + " `" +
                                 declaration_name(doc.declarations[i]) + "`: " + e.what());
    }
  }
  return m;
}

}  // namespace courant
