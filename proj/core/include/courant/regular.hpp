#pragma once

#include <string>
#include <vector>

#include "courant/matched_pair.hpp"
#include "courant/verify.hpp"

namespace courant {

/// Constant quadratic Lie algebra g_1..g_m: [g_i, g_j] = sum_k c[i][j][k] g_k
/// with invariant pairing K.
struct QuadraticLieBundle {
  std::vector<std::string> labels;
  std::vector<std::vector<std::vector<Scalar>>> c;
  ScalarMatrix k;

  std::size_t rank() const { return labels.size(); }
  /// Coordinates of [g_i, g_j].
  std::vector<Scalar> bracket(std::size_t i, std::size_t j) const;
  /// Throws InvalidStructure on a shape error or a singular or asymmetric K.
  /// The algebra axioms are a report check (lie_algebra).
  void validate() const;

  static QuadraticLieBundle abelian(std::vector<std::string> labels, ScalarMatrix k);
  /// so(3) with [g_i, g_j] = eps_ijk g_k and K the identity.
  static QuadraticLieBundle so3(std::vector<std::string> labels = {"g1", "g2", "g3"});

  friend bool operator==(const QuadraticLieBundle&, const QuadraticLieBundle&) = default;
};

/// Data of a standard regular structure on F* + G + F with F the full
/// tangent bundle of the chart.
struct RegularData {
  Chart chart;
  QuadraticLieBundle lie;
  /// nabla[i][a] = nabla_{d/dx_i} g_a, as G-coordinates (rank m sections).
  std::vector<std::vector<Section>> nabla;
  /// curvature[i][j] = R(d/dx_i, d/dx_j), antisymmetric.
  std::vector<std::vector<Section>> curvature;
  DiffForm h;
  /// Scale of the G-block in the total pairing. normalization_audit selects 2
  /// on data with non-zero R or nabla.
  Scalar lambda = Scalar(2);

  /// Zero connection, zero R, zero H.
  static RegularData trivial(const Chart& chart, QuadraticLieBundle lie);

  std::size_t dimension() const { return chart->dimension(); }
  /// Throws InvalidStructure on shape errors or a non-antisymmetric R.
  void validate() const;

  /// The connection extended to arbitrary fields and G-sections.
  Section covariant(const VectorField& x, const Section& r) const;
  /// R(x, y) for arbitrary fields.
  Section curvature_of(const VectorField& x, const VectorField& y) const;
  /// Lie bracket of G-sections, pointwise.
  Section lie_bracket(const Section& r, const Section& s) const;
  /// K(r, s).
  Polynomial k_pairing(const Section& r, const Section& s) const;
};

/// The 4-form C(x1..x4) = 1/4 sum_sigma sgn(sigma) K(R(x_s1, x_s2), R(x_s3, x_s4)).
DiffForm pontryagin_form(const RegularData& rd);

/// Names of the checks run by check_regular_compat, in report order.
const std::vector<std::string>& regular_check_names();

/// Quadratic Lie algebra axioms, metric invariance of nabla, nabla acting by
/// derivations, the Bianchi-type identity, curvature of nabla equal to ad R,
/// and dH = C.
VerificationReport check_regular_compat(const RegularData& rd, const SampleSpec& sample = {},
                                        const std::string& subject = {});

/// Frame labels used by build_regular: dx_i, then the G labels, then d/dx_i.
std::vector<std::string> regular_labels(const RegularData& rd);

/// Rank 2n + m structure with anchor the F-projection, pairing duality plus
/// lambda K, and bracket table
///   d/dx_i <> d/dx_j = H(d/dx_i, d/dx_j, -) + R(d/dx_i, d/dx_j)
///   g_a <> g_b       = P(g_a, g_b) + [g_a, g_b]
///   d/dx_i <> g_a    = -2 Q(d/dx_i, g_a) + nabla_i g_a = -(g_a <> d/dx_i)
/// with <P(r1, r2), y> = 2 K(r2, nabla_y r1), <Q(x, r), y> = K(r, R(x, y)),
/// and every other frame pair zero. Throws IncompatibleData when
/// check_regular_compat fails, unless `force`.
CourantStructure build_regular(const RegularData& rd, bool force = false);

/// Result of normalization_audit: the winning scale and the per-candidate outcomes.
struct NormalizationAudit {
  Scalar lambda;
  std::vector<std::pair<Scalar, bool>> candidates;
};

/// Runs check_axioms on build_regular for lambda in {1/2, 1, 2} and returns
/// the unique passing value. Throws NoConsistentNormalization or
/// AmbiguousNormalization.
NormalizationAudit normalization_audit(const RegularData& rd, const SampleSpec& sample = {});

/// True iff the 4-form C vanishes.
bool check_flat(const RegularData& rd);

/// E1 = twisted standard structure by H, E2 = G with the lambda K pairing and
/// zero anchor; right_{x + xi} r = nabla_x r and left_r (x + xi) = 2 Q(x, r) + 0.
/// Throws NotFlat or IncompatibleData.
MatchedPairData flat_to_matched_pair(const RegularData& rd);

/// The G factor as a structure: labels, pairing lambda K, zero anchor, Lie bracket.
CourantStructure lie_structure(const RegularData& rd);

}  // namespace courant
