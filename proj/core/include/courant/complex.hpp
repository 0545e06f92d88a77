#pragma once

#include <optional>
#include <vector>

#include "courant/matched_pair.hpp"
#include "courant/verify.hpp"

namespace courant {

/// Polynomial model of C^n: z_1..z_n and their conjugates as 2n independent
/// variables over Q(i), holomorphic ones first. For n = 1 the names are `z`
/// and `zb`, otherwise `z1..zn`, `zb1..zbn`.
struct ComplexChart {
  Chart chart;
  std::size_t n = 0;

  static ComplexChart make(std::size_t n);
  /// Throws InvalidStructure unless the chart has the layout above.
  static ComplexChart wrap(const Chart& chart);

  std::size_t z(std::size_t i) const { return i; }
  std::size_t zbar(std::size_t i) const { return n + i; }
  bool holomorphic_index(std::size_t var) const { return var < n; }

  /// The involution z_j <-> zb_j with conjugated scalars.
  Polynomial conjugate(const Polynomial& p) const;
  VectorField conjugate(const VectorField& x) const;
  DiffForm conjugate(const DiffForm& form) const;

  /// Variable permutation z_j <-> zb_j.
  std::vector<std::size_t> swap_permutation() const;
};

/// Pure type of a vector field or 1-form: (1,0), (0,1), or nullopt when it
/// has both. The zero field counts as both pure types; see is_pure.
std::optional<Bidegree> pure_type(const ComplexChart& cc, const VectorField& x);
std::optional<Bidegree> pure_type(const ComplexChart& cc, const DiffForm& form);

VectorField project(const ComplexChart& cc, const VectorField& x, Bidegree type);
/// For forms of any degree: the component of the given bidegree.
DiffForm project(const ComplexChart& cc, const DiffForm& form, Bidegree type);

/// The connections induced by the Lie bracket, e.g. pr^{0,1}[X, Y] for X of
/// type (1,0) and Y of type (0,1). Throws MixedBidegree unless psi and v are
/// pure of opposite types.
VectorField dolbeault_connection(const ComplexChart& cc, const VectorField& psi, const VectorField& v);
/// pr of L_psi beta onto the type of beta; beta a 1-form.
DiffForm dolbeault_connection(const ComplexChart& cc, const VectorField& psi, const DiffForm& beta);

/// The H-twisted standard structure on (T + T*) (x) C with bidegree tags.
CourantStructure make_complex_standard(const ComplexChart& cc, const DiffForm& h, bool force = false);

struct ComplexPairOptions {
  /// Leave out the H^{2,1}(Y, X, -) term of the E2-connection on E1. Only
  /// useful for mutation tests.
  bool omit_h21 = false;
};

/// E1 = C^{1,0} twisted by H^{3,0}, E2 = C^{0,1} twisted by H^{0,3};
///   right_{X + alpha}(Y + beta) = nabla_X Y + nabla_X beta + H^{1,2}(X, Y, -)
///   left_{Y + beta}(X + alpha)  = nabla_Y X + nabla_Y alpha + H^{2,1}(Y, X, -)
/// Throws NonClosedTwist when dH != 0 over all 2n variables.
MatchedPairData build_complex_matched_pair(const ComplexChart& cc, const DiffForm& h,
                                           const ComplexPairOptions& options = {});

/// Compares matched_sum(mp) with make_complex_standard(H) entrywise after
/// reordering to the matched-sum frame. Checks: pairing, anchor, bracket.
VerificationReport check_sum_isomorphism(const MatchedPairData& mp, const DiffForm& h,
                                         const std::string& subject = {});

/// Curvature of the four Dolbeault-type connections on `sample.count` random
/// polynomial fields per check.
VerificationReport check_dolbeault_flatness(const ComplexChart& cc, const SampleSpec& sample = {},
                                            const std::string& subject = {});

}  // namespace courant
