#include "courant/verify.hpp"

#include <sstream>

#include "json.hpp"

#include "courant/sampling.hpp"

namespace courant {

void SampleSpec::validate() const {
  if (count < 1) throw Error("sample count must be at least 1");
  if (max_degree < 0) throw Error("sample degree must be nonnegative");
}

std::string to_string(WitnessSource s) {
  switch (s) {
    case WitnessSource::Frame:
      return "frame";
    case WitnessSource::Monomial:
      return "monomial";
    case WitnessSource::Random:
      return "random";
  }
  return "frame";
}

void CheckResult::record(bool ok, const std::function<Witness()>& make_witness) {
  ++instances;
  if (ok) return;
  passed = false;
  if (!witness) witness = make_witness();
}

void CheckResult::merge(const CheckResult& other) {
  instances += other.instances;
  if (!other.passed) {
    passed = false;
    if (!witness) witness = other.witness;
  }
}

bool VerificationReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

CheckResult& VerificationReport::add(const std::string& name) {
  checks.push_back(CheckResult{name, true, 0, std::nullopt});
  return checks.back();
}

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
  for (auto c : other.checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  if (!report.subject.empty()) out << "subject: " << report.subject << "\n";
  if (report.sample) {
    out << "sample: seed " << report.sample->seed << ", " << report.sample->count << " random tuples, degree <= "
        << report.sample->max_degree << "\n";
  }
  std::size_t width = 0;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  for (const auto& c : report.checks) {
    out << c.name << std::string(width - c.name.size() + 2, ' ') << (c.passed ? "PASS" : "FAIL") << "  ("
        << c.instances << (c.instances == 1 ? " instance" : " instances") << ")\n";
    if (c.witness) {
      out << "    witness (" << to_string(c.witness->source) << "):\n";
      for (const auto& [role, value] : c.witness->inputs) out << "      " << role << " = " << value << "\n";
      out << "    residual: " << c.witness->residual << "\n";
    }
  }
  out << "result: " << (report.passed() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string render_machine(const VerificationReport& report) {
  using json = nlohmann::ordered_json;
  json root;
  root["subject"] = report.subject;
  root["passed"] = report.passed();
  if (report.sample) {
    root["sample"] = {{"seed", report.sample->seed},
                      {"count", report.sample->count},
                      {"max_degree", report.sample->max_degree}};
  } else {
    root["sample"] = nullptr;
  }
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry;
    entry["name"] = c.name;
    entry["passed"] = c.passed;
    entry["instances"] = c.instances;
    if (c.witness) {
      json inputs = json::array();
      for (const auto& [role, value] : c.witness->inputs) inputs.push_back({{"role", role}, {"value", value}});
      entry["witness"] = {{"source", to_string(c.witness->source)},
                          {"inputs", std::move(inputs)},
                          {"residual", c.witness->residual}};
    } else {
      entry["witness"] = nullptr;
    }
    checks.push_back(std::move(entry));
  }
  root["checks"] = std::move(checks);
  return root.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// tuple checks

Slot Slot::section(std::string role, const CourantStructure& e) {
  Slot s;
  s.role = std::move(role);
  s.bundle = &e;
  s.chart = e.chart();
  for (std::size_t i = 0; i < e.rank(); ++i) s.generators.push_back(e.basis(i));
  s.generator_labels = e.labels();
  s.random = [&e](Sampler& r, int degree) { return r.section(e.rank(), e.chart(), degree); };
  return s;
}

Slot Slot::span(std::string role, const CourantStructure& e, std::vector<Section> generators,
                std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != generators.size()) throw RankMismatch("span slot labels");
  Slot s;
  s.role = std::move(role);
  s.generator_labels = std::move(labels);
  s.bundle = &e;
  s.chart = e.chart();
  s.generators = std::move(generators);
  s.random = [&e, gens = s.generators](Sampler& r, int degree) {
    Section out = e.zero();
    for (const auto& g : gens) out += r.polynomial(e.nvars(), degree, e.chart()->field()) * g;
    return out;
  };
  return s;
}

Slot Slot::function(std::string role, const Chart& chart) {
  Slot s;
  s.role = std::move(role);
  s.chart = chart;
  return s;
}

const Section& section_arg(const Argument& a) { return std::get<Section>(a); }
const Polynomial& function_arg(const Argument& a) { return std::get<Polynomial>(a); }

std::optional<std::string> nonzero(const CourantStructure& e, const Section& s) {
  if (s.is_zero()) return std::nullopt;
  return e.str(s);
}

std::optional<std::string> nonzero(const Chart& chart, const Polynomial& p) {
  if (p.is_zero()) return std::nullopt;
  return p.str(*chart);
}

namespace {

std::vector<Argument> frame_values(const Slot& slot) {
  std::vector<Argument> out;
  if (slot.bundle) {
    for (const auto& g : slot.generators) out.emplace_back(g);
    return out;
  }
  const std::size_t n = slot.chart->dimension();
  for (std::size_t l = 0; l < n; ++l) out.emplace_back(Polynomial::variable(n, l));
  if (out.empty()) out.emplace_back(Polynomial::constant(n, Scalar(1)));
  return out;
}

Witness make_tuple_witness(const std::vector<Slot>& slots, const std::vector<Argument>& args,
                           const std::vector<std::size_t>* frame_idx, std::string residual) {
  Witness w;
  w.source = frame_idx ? WitnessSource::Frame : WitnessSource::Random;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const auto& slot = slots[i];
    std::string value;
    if (frame_idx && !slot.generator_labels.empty()) {
      value = slot.generator_labels[(*frame_idx)[i]];
    } else {
      value = slot.bundle ? slot.bundle->str(section_arg(args[i])) : function_arg(args[i]).str(*slot.chart);
    }
    w.inputs.emplace_back(slot.role, std::move(value));
  }
  w.residual = std::move(residual);
  return w;
}

}  // namespace

void run_tuple_check(CheckResult& out, const std::vector<Slot>& slots, const TupleResidual& residual,
                     const SampleSpec& sample, std::uint64_t salt) {
  std::vector<std::vector<Argument>> values;
  for (const auto& slot : slots) values.push_back(frame_values(slot));
  for (const auto& v : values) {
    if (v.empty()) return;
  }
  std::vector<std::size_t> idx(slots.size(), 0);
  std::vector<Argument> args;
  for (;;) {
    args.clear();
    for (std::size_t s = 0; s < slots.size(); ++s) args.push_back(values[s][idx[s]]);
    auto r = residual(args);
    out.record(!r, [&] { return make_tuple_witness(slots, args, &idx, *r); });
    std::size_t pos = 0;
    while (pos < slots.size() && ++idx[pos] == values[pos].size()) idx[pos++] = 0;
    if (pos == slots.size()) break;
  }

  Sampler rng(sample.seed + 0x9e3779b97f4a7c15ULL * (salt + 101));
  for (std::size_t t = 0; t < sample.count; ++t) {
    args.clear();
    for (const auto& slot : slots) {
      if (slot.bundle) {
        args.emplace_back(slot.random(rng, sample.max_degree));
      } else {
        args.emplace_back(rng.polynomial(slot.chart->dimension(), sample.max_degree + 1, slot.chart->field()));
      }
    }
    auto r = residual(args);
    out.record(!r, [&] { return make_tuple_witness(slots, args, nullptr, *r); });
  }
}

// ---------------------------------------------------------------------------
// residuals

Polynomial polarized_ad_invariance(const CourantStructure& e, const Section& phi, const Section& a,
                                   const Section& b) {
  return e.anchor_apply(phi).apply(e.pairing(a, b)) - e.pairing(e.dorfman(phi, a), b) -
         e.pairing(a, e.dorfman(phi, b));
}

Section jacobi_residual(const CourantStructure& e, const Section& a, const Section& b, const Section& c) {
  return e.dorfman(a, e.dorfman(b, c)) - e.dorfman(e.dorfman(a, b), c) - e.dorfman(b, e.dorfman(a, c));
}

Section leibniz_residual(const CourantStructure& e, const Section& a, const Polynomial& f, const Section& b) {
  return e.dorfman(a, f * b) - e.anchor_apply(a).apply(f) * b - f * e.dorfman(a, b);
}

Section nskew_residual(const CourantStructure& e, const Section& a, const Section& b) {
  return e.dorfman(a, b) + e.dorfman(b, a) - e.d_operator(e.pairing(a, b));
}

VectorField anchor_residual(const CourantStructure& e, const Section& a, const Section& b) {
  return e.anchor_apply(e.dorfman(a, b)) - lie_bracket(e.anchor_apply(a), e.anchor_apply(b));
}

Section d_annihilation_residual(const CourantStructure& e, const Polynomial& f, const Section& a) {
  return e.dorfman(e.d_operator(f), a);
}

const std::vector<std::string>& axiom_check_names() {
  static const std::vector<std::string> names{"jacobi",        "leibniz",         "nskew",
                                              "ad_invariance", "anchor_morphism", "d_annihilation"};
  return names;
}

namespace {

enum Axiom { kJacobi, kLeibniz, kNskew, kAdInvariance, kAnchor, kDAnnihilation };

// One instance of an axiom: sections in slots plus an optional function.
struct Instance {
  std::vector<Section> sections;
  std::optional<Polynomial> function;
};

class AxiomRunner {
 public:
  explicit AxiomRunner(const CourantStructure& e) : e_(e) {}

  // Returns the rendered residual, or nullopt when it vanishes.
  std::optional<std::string> residual(Axiom ax, const Instance& in) const {
    const auto& s = in.sections;
    switch (ax) {
      case kJacobi: {
        auto r = jacobi_residual(e_, s[0], s[1], s[2]);
        return r.is_zero() ? std::nullopt : std::optional(e_.str(r));
      }
      case kLeibniz: {
        auto r = leibniz_residual(e_, s[0], *in.function, s[1]);
        return r.is_zero() ? std::nullopt : std::optional(e_.str(r));
      }
      case kNskew: {
        auto r = nskew_residual(e_, s[0], s[1]);
        return r.is_zero() ? std::nullopt : std::optional(e_.str(r));
      }
      case kAdInvariance: {
        auto r = polarized_ad_invariance(e_, s[0], s[1], s[2]);
        return r.is_zero() ? std::nullopt : std::optional(r.str(*e_.chart()));
      }
      case kAnchor: {
        auto r = anchor_residual(e_, s[0], s[1]);
        return r.is_zero() ? std::nullopt : std::optional(r.str());
      }
      case kDAnnihilation: {
        auto r = d_annihilation_residual(e_, *in.function, s[0]);
        return r.is_zero() ? std::nullopt : std::optional(e_.str(r));
      }
    }
    return std::nullopt;
  }

  Witness witness(Axiom ax, const Instance& in, WitnessSource source, std::string residual) const {
    static const char* roles[] = {"phi", "psi", "chi"};
    Witness w;
    w.source = source;
    auto fn = [&] { w.inputs.emplace_back("f", in.function->str(*e_.chart())); };
    if (ax == kDAnnihilation) fn();
    for (std::size_t i = 0; i < in.sections.size(); ++i) {
      w.inputs.emplace_back(roles[i], e_.str(in.sections[i]));
      if (ax == kLeibniz && i == 0) fn();
    }
    w.residual = std::move(residual);
    return w;
  }

  void run(Axiom ax, const Instance& in, WitnessSource source, CheckResult& out) const {
    auto r = residual(ax, in);
    out.record(!r, [&] { return witness(ax, in, source, *r); });
  }

  static std::size_t arity(Axiom ax) {
    switch (ax) {
      case kJacobi:
      case kAdInvariance:
        return 3;
      case kLeibniz:
      case kNskew:
      case kAnchor:
        return 2;
      case kDAnnihilation:
        return 1;
    }
    return 0;
  }

  static bool needs_function(Axiom ax) { return ax == kLeibniz || ax == kDAnnihilation; }

  // Frame tuples; symmetric slots are enumerated once.
  void frame_pass(Axiom ax, CheckResult& out) const {
    const std::size_t k = e_.rank();
    const std::size_t n = e_.nvars();
    auto b = [&](std::size_t i) { return e_.basis(i); };
    switch (ax) {
      case kJacobi:
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l) run(ax, {{b(i), b(j), b(l)}, {}}, WitnessSource::Frame, out);
        break;
      case kAdInvariance:
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = j; l < k; ++l) run(ax, {{b(i), b(j), b(l)}, {}}, WitnessSource::Frame, out);
        break;
      case kNskew:
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = i; j < k; ++j) run(ax, {{b(i), b(j)}, {}}, WitnessSource::Frame, out);
        break;
      case kAnchor:
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) run(ax, {{b(i), b(j)}, {}}, WitnessSource::Frame, out);
        break;
      case kLeibniz:
        for (const auto& f : generator_functions(n, 1))
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) run(ax, {{b(i), b(j)}, f}, WitnessSource::Frame, out);
        break;
      case kDAnnihilation:
        for (const auto& f : generator_functions(n, 2))
          for (std::size_t i = 0; i < k; ++i) run(ax, {{b(i)}, f}, WitnessSource::Frame, out);
        break;
    }
  }

  // Frame tuples with one slot multiplied by a coordinate monomial. Used
  // only to find a readable witness once the random pass has failed.
  std::optional<Witness> monomial_search(Axiom ax, int max_degree) const {
    const std::size_t k = e_.rank();
    const std::size_t n = e_.nvars();
    const std::size_t m = arity(ax);
    std::vector<Polynomial> multipliers;
    for (const auto& ex : monomials_up_to(n, max_degree)) {
      if (total_degree(ex) == 0) continue;
      multipliers.push_back(Polynomial::monomial(ex, Scalar(1)));
    }
    std::vector<Polynomial> functions = needs_function(ax) ? generator_functions(n, max_degree + 1)
                                                           : std::vector<Polynomial>{Polynomial(n)};
    std::vector<std::size_t> idx(m, 0);
    for (;;) {
      for (std::size_t slot = 0; slot < m; ++slot) {
        for (const auto& mult : multipliers) {
          for (const auto& f : functions) {
            Instance in;
            for (std::size_t s = 0; s < m; ++s) in.sections.push_back(e_.basis(idx[s]));
            in.sections[slot] *= mult;
            if (needs_function(ax)) in.function = f;
            if (auto r = residual(ax, in)) return witness(ax, in, WitnessSource::Monomial, *r);
          }
        }
      }
      std::size_t pos = 0;
      while (pos < m && ++idx[pos] == k) idx[pos++] = 0;
      if (pos == m) break;
    }
    return std::nullopt;
  }

  void random_pass(Axiom ax, const SampleSpec& sample, std::uint64_t salt, CheckResult& out) const {
    Sampler s(sample.seed + 0x9e3779b97f4a7c15ULL * (salt + 1));
    const std::size_t n = e_.nvars();
    for (std::size_t t = 0; t < sample.count; ++t) {
      Instance in;
      if (needs_function(ax)) in.function = s.polynomial(n, sample.max_degree + 1, e_.chart()->field());
      for (std::size_t slot = 0; slot < arity(ax); ++slot) {
        in.sections.push_back(s.section(e_.rank(), e_.chart(), sample.max_degree));
      }
      run(ax, in, WitnessSource::Random, out);
      if (ax == kNskew) {
        // unpolarized form phi <> phi = 1/2 D<phi, phi>
        Instance diag{{in.sections[0], in.sections[0]}, {}};
        run(ax, diag, WitnessSource::Random, out);
      }
    }
  }

 private:
  // Coordinate monomials of degree 1..max_degree, or the constant 1 on a point.
  static std::vector<Polynomial> generator_functions(std::size_t n, int max_degree) {
    std::vector<Polynomial> out;
    for (const auto& ex : monomials_up_to(n, max_degree)) {
      if (total_degree(ex) == 0) continue;
      out.push_back(Polynomial::monomial(ex, Scalar(1)));
    }
    if (out.empty()) out.push_back(Polynomial::constant(n, Scalar(1)));
    return out;
  }

  const CourantStructure& e_;
};

int data_degree(const CourantStructure& e) {
  int d = 0;
  for (const auto& row : e.bracket_table())
    for (const auto& s : row) d = std::max(d, s.max_degree());
  for (const auto& a : e.anchor_rows())
    for (const auto& c : a.components()) d = std::max(d, c.total_degree());
  return d;
}

}  // namespace

VerificationReport check_axioms(const CourantStructure& e, const SampleSpec& sample, const std::string& subject) {
  sample.validate();
  VerificationReport report;
  report.subject = subject;
  report.sample = sample;
  AxiomRunner runner(e);
  const auto& names = axiom_check_names();
  for (std::size_t a = 0; a < names.size(); ++a) {
    auto ax = static_cast<Axiom>(a);
    CheckResult& result = report.add(names[a]);
    runner.frame_pass(ax, result);
    CheckResult random{names[a], true, 0, std::nullopt};
    runner.random_pass(ax, sample, a, random);
    if (result.passed && !random.passed) {
      if (auto w = runner.monomial_search(ax, data_degree(e) + 1)) random.witness = std::move(w);
    }
    result.merge(random);
  }
  return report;
}

}  // namespace courant
