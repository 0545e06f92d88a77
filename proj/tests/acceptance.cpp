// Acceptance run: one line per criterion, exact equality throughout.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "courant/complex.hpp"
#include "courant/dirac.hpp"
#include "courant/gallery.hpp"
#include "courant/regular.hpp"
#include "courant/sampling.hpp"
#include "courant/spec.hpp"
#include "courant_cli/cli.hpp"
#include "oracles.hpp"

using namespace courant;

namespace {

/// Collects failed expectations of one criterion.
struct Ledger {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

SpecModel gallery_model(const std::string& name, bool force = false) {
  return instantiate(parse_spec(find_gallery(name)->text), force);
}

SpecModel edited_model(const std::string& name, const std::string& from, const std::string& to) {
  auto text = find_gallery(name)->text;
  auto at = text.find(from);
  if (at == std::string::npos) throw std::logic_error("edit target missing in " + name);
  text.replace(at, from.size(), to);
  return instantiate(parse_spec(text));
}

using Inputs = std::vector<std::pair<std::string, std::string>>;

bool witness_is(const CheckResult* c, WitnessSource source, const Inputs& inputs, const std::string& residual) {
  return c && !c->passed && c->witness && c->witness->source == source && c->witness->inputs == inputs &&
         c->witness->residual == residual;
}

// ---------------------------------------------------------------------------

void criterion1(Ledger& l) {
  for (const char* g : {"standard-r3", "twisted-r3", "so3-point", "merker-r2"}) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = cli::run({"check-axioms", g, "--format", "machine"});
    const double dt = seconds_since(t0);
    l.expect(r.exit_code == 0, std::string(g) + " exit code");
    auto j = nlohmann::json::parse(r.out);
    const auto& rep = j["reports"][0];
    l.expect(rep["sample"]["count"] == 16 && rep["sample"]["max_degree"] == 2, std::string(g) + " sample");
    std::vector<std::string> names;
    for (const auto& c : rep["checks"]) {
      names.push_back(c["name"]);
      l.expect(c["passed"] == true, std::string(g) + " " + std::string(c["name"]));
    }
    l.expect(names == axiom_check_names(), std::string(g) + " runs all six checks");
    l.expect(dt < 10.0, std::string(g) + " under 10 s");
    l.note(std::string(g) + " " + fmt_seconds(dt));
  }
}

void criterion2(Ledger& l) {
  auto m = gallery_model("nonclosed-r4", true);
  auto rep = check_axioms(m.structures.at("E"));
  l.expect(witness_is(rep.find("jacobi"), WitnessSource::Frame,
                      {{"phi", "{d/dx1: 1}"}, {"psi", "{d/dx2: 1}"}, {"chi", "{d/dx3: 1}"}}, "{dx4: 1}"),
           "nonclosed-r4 Jacobi witness (d/dx1, d/dx2, d/dx3) -> dx4");

  auto cx = gallery_model("complex-c2-h21");
  const auto& h = cx.forms.at("H");
  auto dropped = build_complex_matched_pair(*cx.complex, h, {true});
  auto iso = check_sum_isomorphism(dropped, h);
  l.expect(witness_is(iso.find("bracket"), WitnessSource::Frame, {{"phi", "d/dz1"}, {"psi", "d/dz2"}}, "{dzb1: -1}"),
           "complex-c2-h21 without H^{2,1}: bracket witness (d/dz1, d/dz2) -> -dzb1");
  l.expect(check_sum_isomorphism(cx.pairs.at("P"), h).passed(), "complex-c2-h21 intact passes");
}

void criterion3(Ledger& l) {
  Sampler s(2024);
  std::size_t pass = 0, fail = 0;
  const std::size_t n = 24;
  for (std::size_t k = 0; k < n; ++k) {
    auto cand = random_matched_pair_candidate(s, 2);
    const bool matched = check_matched_pair(cand).passed();
    auto ax = check_axioms(matched_sum(cand));
    const bool jacobi = ax.find("jacobi")->passed;
    l.expect(matched == jacobi, "candidate " + std::to_string(k) + ": matched-pair conditions agree with Jacobi");
    for (const char* a : {"leibniz", "nskew", "ad_invariance"})
      l.expect(ax.find(a)->passed, "candidate " + std::to_string(k) + ": " + a);
    (matched ? pass : fail) += 1;
  }
  l.expect(pass > 0 && fail > 0, "both outcomes occur");
  l.note(std::to_string(n) + " candidates, " + std::to_string(pass) + " matched, " + std::to_string(fail) + " not");
}

void criterion4(Ledger& l) {
  for (const char* g : {"merker-r2", "complex-c2-h21"}) {
    const auto mp = gallery_model(g).pairs.at("P");
    const auto sum = matched_sum(mp);
    std::vector<Section> u, w;
    for (std::size_t i = 0; i < sum.rank(); ++i) (i < mp.e1.rank() ? u : w).push_back(sum.basis(i));
    l.expect(split(sum, u, mp.e1.labels(), w, mp.e2.labels()).pair == mp, std::string(g) + ": split(sum) = mp");
  }
  const auto e = gallery_model("complex-c1").structures.at("E");
  auto sp = split(e, {e.basis("d/dz"), e.basis("dz")}, {"d/dz", "dz"}, {e.basis("d/dzb"), e.basis("dzb")},
                  {"d/dzb", "dzb"});
  l.expect(matched_sum(sp.pair) == reorder(e, {"d/dz", "dz", "d/dzb", "dzb"}), "complex-c1: sum(split(E)) = E");
}

void criterion5(Ledger& l) {
  auto abelian = gallery_model("regular-abelian-r2").regular.at("A");
  auto audit = normalization_audit(abelian);
  std::size_t passing = 0;
  for (const auto& [lambda, ok] : audit.candidates) passing += ok;
  l.expect(passing == 1 && audit.lambda == Scalar(2), "regular-abelian-r2: unique lambda* = 2");
  l.note("lambda* = " + audit.lambda.str());
  auto so3 = gallery_model("regular-so3").regular.at("S");
  for (auto* rd : {&abelian, &so3}) {
    rd->lambda = audit.lambda;
    const auto built = build_regular(*rd);
    l.expect(check_axioms(built).passed(), "build_regular passes check_axioms");
    const auto sum = reorder(matched_sum(flat_to_matched_pair(*rd)), regular_labels(*rd));
    bool same = sum.labels() == built.labels();
    for (std::size_t i = 0; same && i < built.rank(); ++i)
      for (std::size_t j = 0; j < built.rank(); ++j) same = same && sum.table_entry(i, j) == built.table_entry(i, j);
    l.expect(same && sum == built, "flat_to_matched_pair then matched_sum reproduces the bracket table");
  }
}

void criterion6(Ledger& l) {
  for (const char* g : {"complex-c1", "complex-c2-h21"}) {
    auto m = gallery_model(g);
    l.expect(check_sum_isomorphism(m.pairs.at("P"), m.forms.at("H")).passed(), std::string(g) + " sum isomorphism");
  }
  SampleSpec spec;
  spec.count = 32;
  for (std::size_t n : {1, 2}) {
    auto rep = check_dolbeault_flatness(ComplexChart::make(n), spec);
    l.expect(rep.passed(), "Dolbeault curvature vanishes on C^" + std::to_string(n));
    for (const auto& c : rep.checks) l.expect(c.instances == 32, c.name + " ran 32 fields");
  }
}

void criterion7(Ledger& l) {
  auto omega = gallery_model("dirac-graph-omega");
  l.expect(check_dirac(omega.dirac.at("D")).passed(), "dirac-graph-omega passes");
  auto z = edited_model("dirac-graph-omega", "{dx^dy: 1}", "{dx^dy: z}");
  l.expect(witness_is(check_dirac(z.dirac.at("D")).find("integrability"), WitnessSource::Frame,
                      {{"phi", "d/dz"}, {"psi", "d/dy"}, {"chi", "d/dx"}}, "-1"),
           "z dx^dy fails integrability with witness (d/dz, d/dy, d/dx) -> -1");

  l.expect(check_dirac(gallery_model("port-hamiltonian").dirac.at("D")).passed(), "port-hamiltonian passes");
  auto broken = edited_model("port-hamiltonian", "row -2, 1", "row -2, y");
  l.expect(!check_dirac(broken.dirac.at("D")).find("integrability")->passed, "non-parallel A fails integrability");

  std::size_t pairs = 0;
  const std::string constant_l = "row 0, 1\n  row -1, 0";
  for (const auto& replacement : {constant_l, std::string("row 0, 3\n  row -3, 0"), std::string("row 0, 0\n  row 0, 0")}) {
    auto m = edited_model("merker-r2", constant_l, replacement);
    const auto& mp = m.pairs.at("P");
    const auto& d1 = m.dirac.at("D1");
    const auto& d2 = m.dirac.at("D2");
    if (!check_matched_dirac(mp, d1, d2).passed()) {
      l.expect(false, "merker-r2 matched Dirac pair passes");
      continue;
    }
    ++pairs;
    const auto lmp = restrict_to_dirac(mp, d1, d2);
    l.expect(check_lie_matched_pair(lmp).passed(), "extracted Lie algebroids form a matched pair");
    l.expect(lie_matched_sum(lmp) == dirac_to_lie(dirac_direct_sum(mp, d1, d2)), "lie_matched_sum = dirac_to_lie");
  }
  l.note(std::to_string(pairs) + " matched Dirac pairs");
}

void criterion8(Ledger& l) {
  const auto c = make_euclidean_chart(3);
  Sampler s(8);
  const int n = 1000, degree = 3;
  std::size_t dd = 0, cartan = 0, commutator = 0, jacobi = 0;
  for (int k = 0; k < n; ++k) {
    const auto p = static_cast<std::size_t>(s.uniform(0, 3));
    const auto w = s.form(c, p, degree);
    const auto x = s.vector_field(c, degree);
    const auto y = s.vector_field(c, degree);
    const auto z = s.vector_field(c, degree);
    dd += exterior_derivative(exterior_derivative(w)).is_zero();
    const auto lx = oracle::lie_derivative_direct(x, w);
    // On functions the Cartan formula is L_X f = i_X df and both sides of the
    // commutator identity are zero.
    auto cartan_rhs = interior_product(x, exterior_derivative(w));
    if (p > 0) cartan_rhs += exterior_derivative(interior_product(x, w));
    cartan += lx == cartan_rhs && lx == lie_derivative(x, w);
    commutator += p == 0 || lie_derivative(x, interior_product(y, w)) - interior_product(y, lie_derivative(x, w)) ==
                                interior_product(lie_bracket(x, y), w);
    jacobi += (lie_bracket(lie_bracket(x, y), z) + lie_bracket(lie_bracket(y, z), x) + lie_bracket(lie_bracket(z, x), y))
                  .is_zero();
  }
  l.expect(dd == n, "d d = 0");
  l.expect(cartan == n, "L_X = i_X d + d i_X");
  l.expect(commutator == n, "[L_X, i_Y] = i_[X,Y]");
  l.expect(jacobi == n, "vector field Jacobi");
  l.note(std::to_string(n) + " instances each, degree <= 3");
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::function<void(Ledger&)> run;
    double budget;
  };
  const std::vector<Criterion> criteria{
      {1, "axiom suite on standard-r3, twisted-r3, so3-point, merker-r2", criterion1, 0},
      {2, "mutation sensitivity: nonclosed-r4 and dropped H^{2,1}", criterion2, 0},
      {3, "matched-pair conditions agree with Jacobi on generated candidates", criterion3, 0},
      {4, "split / matched_sum round trips", criterion4, 0},
      {5, "regular: unique lambda*, axioms, flat decomposition", criterion5, 0},
      {6, "complex: sum isomorphism and flat Dolbeault connections", criterion6, 0},
      {7, "Dirac and Lie algebroid matched pairs", criterion7, 0},
      {8, "calculus identities on 1000 random instances", criterion8, 60.0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Ledger l;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(l);
    } catch (const std::exception& e) {
      l.failures.push_back(std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    if (c.budget > 0 && dt >= c.budget) l.failures.push_back("over " + fmt_seconds(c.budget));
    const bool ok = l.failures.empty();
    failed += !ok;
    std::ostringstream line;
    line << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  [" << fmt_seconds(dt);
    for (const auto& n : l.notes) line << "; " << n;
    line << "]";
    std::cout << line.str() << "\n";
    for (const auto& f : l.failures) std::cout << "    failed: " << f << "\n";
  }
  std::cout << (failed ? "acceptance: FAIL" : "acceptance: PASS") << "\n";
  return failed ? 1 : 0;
}
