#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "courant/courant.hpp"

namespace courant {

/// Parameters of the randomized pass.
struct SampleSpec {
  static constexpr std::uint64_t kDefaultSeed = 1729;

  std::uint64_t seed = kDefaultSeed;
  std::size_t count = 16;
  int max_degree = 2;

  /// Throws Error unless count >= 1 and max_degree >= 0.
  void validate() const;
};

/// Where a witness came from: a tuple of frame elements, frame elements with
/// coordinate-monomial multipliers, or the randomized pass.
enum class WitnessSource { Frame, Monomial, Random };

std::string to_string(WitnessSource s);

struct Witness {
  WitnessSource source = WitnessSource::Frame;
  /// (role, rendered value), in argument order.
  std::vector<std::pair<std::string, std::string>> inputs;
  /// Rendered nonzero residual.
  std::string residual;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t instances = 0;
  std::optional<Witness> witness;

  /// Counts one instance. On the first failure the witness is built and kept.
  void record(bool ok, const std::function<Witness()>& make_witness);
  /// Folds another run of the same check in; the first witness wins.
  void merge(const CheckResult& other);
};

struct VerificationReport {
  std::string subject;
  std::optional<SampleSpec> sample;
  std::vector<CheckResult> checks;

  bool passed() const;
  /// Nullptr when no check has that name.
  const CheckResult* find(const std::string& name) const;
  CheckResult& add(const std::string& name);
  void append(const VerificationReport& other, const std::string& prefix = {});
};

class Sampler;

/// One argument slot of a tuple check: a section of some bundle or a function
/// on the chart.
struct Slot {
  std::string role;
  /// Bundle of a section slot; null for a function slot.
  const CourantStructure* bundle = nullptr;
  Chart chart;
  /// Values tried in the frame pass.
  std::vector<Section> generators;
  /// Names of the generators in frame witnesses; when empty the sections are rendered.
  std::vector<std::string> generator_labels;
  /// Random value for the randomized pass (degree bound passed in). Unused
  /// for function slots.
  std::function<Section(Sampler&, int)> random;

  /// Frame elements of `e` (witnesses show their labels), random sections of `e`.
  static Slot section(std::string role, const CourantStructure& e);
  /// Given generators, random combinations of them with polynomial coefficients.
  static Slot span(std::string role, const CourantStructure& e, std::vector<Section> generators,
                   std::vector<std::string> labels = {});
  /// Coordinate functions (the constant 1 on a point), random polynomials.
  static Slot function(std::string role, const Chart& chart);
};

using Argument = std::variant<Section, Polynomial>;
/// Rendered nonzero residual, or nullopt when the instance passes.
using TupleResidual = std::function<std::optional<std::string>(const std::vector<Argument>&)>;

/// Runs `residual` on every tuple of generators, then on `sample.count`
/// random tuples. `salt` separates the random streams of different checks.
void run_tuple_check(CheckResult& out, const std::vector<Slot>& slots, const TupleResidual& residual,
                     const SampleSpec& sample, std::uint64_t salt);

const Section& section_arg(const Argument& a);
const Polynomial& function_arg(const Argument& a);

/// nullopt for a zero section, the rendering otherwise.
std::optional<std::string> nonzero(const CourantStructure& e, const Section& s);
std::optional<std::string> nonzero(const Chart& chart, const Polynomial& p);

/// Human-readable rendering.
std::string render_text(const VerificationReport& report);
/// JSON rendering with frozen field names; see docs/machine-report.md.
std::string render_machine(const VerificationReport& report);

/// Names of the checks run by check_axioms, in report order.
const std::vector<std::string>& axiom_check_names();

/// Runs jacobi, leibniz, nskew, ad_invariance, anchor_morphism and
/// d_annihilation on every frame tuple and on `sample.count` random tuples.
VerificationReport check_axioms(const CourantStructure& e, const SampleSpec& sample = {},
                                const std::string& subject = {});

/// rho(phi)<a, b> - <phi <> a, b> - <a, phi <> b>.
Polynomial polarized_ad_invariance(const CourantStructure& e, const Section& phi, const Section& a,
                                   const Section& b);

/// The individual residuals; each is zero on a valid structure.
Section jacobi_residual(const CourantStructure& e, const Section& a, const Section& b, const Section& c);
Section leibniz_residual(const CourantStructure& e, const Section& a, const Polynomial& f, const Section& b);
/// a <> b + b <> a - D<a, b>.
Section nskew_residual(const CourantStructure& e, const Section& a, const Section& b);
VectorField anchor_residual(const CourantStructure& e, const Section& a, const Section& b);
Section d_annihilation_residual(const CourantStructure& e, const Polynomial& f, const Section& a);

}  // namespace courant
