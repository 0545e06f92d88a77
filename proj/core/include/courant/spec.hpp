#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "courant/complex.hpp"
#include "courant/dirac.hpp"
#include "courant/expression.hpp"
#include "courant/regular.hpp"

namespace courant {

/// A name that is not declared (or not declared with the right kind) at the
/// point of use.
class UnknownName : public LocatedError {
 public:
  UnknownName(SourceLocation location, const std::string& message)
      : LocatedError(location, "unknown name", message) {}
};

/// Data of the wrong size, an asymmetric pairing entry, a repeated entry and
/// similar inconsistencies.
class ShapeMismatch : public LocatedError {
 public:
  ShapeMismatch(SourceLocation location, const std::string& message)
      : LocatedError(location, "shape mismatch", message) {}
};

/// Declared data that the library rejects when the objects are built (a
/// non-closed twist without --force, a bad complement certificate, ...).
class InvalidData : public LocatedError {
 public:
  InvalidData(SourceLocation location, const std::string& message)
      : LocatedError(location, "invalid data", message) {}
};

struct FormDecl {
  std::string name;
  DiffForm form;
  friend bool operator==(const FormDecl&, const FormDecl&) = default;
};

struct StructureDecl {
  enum class Kind { Standard, Twisted, ComplexStandard, Table };
  std::string name;
  Kind kind = Kind::Standard;
  /// Form name for Twisted and ComplexStandard.
  std::string twist;
  /// Frame data for Table.
  std::optional<CourantStructure> table;
  friend bool operator==(const StructureDecl&, const StructureDecl&) = default;
};

/// Connection of `domain` on `acted`: table[i][j] = nabla_{domain_i} acted_j.
struct ConnectionDecl {
  std::string name;
  std::string domain;
  std::string acted;
  std::vector<std::vector<Section>> table;
  friend bool operator==(const ConnectionDecl&, const ConnectionDecl&) = default;
};

struct PairDecl {
  enum class Kind { Explicit, Complex };
  std::string name;
  Kind kind = Kind::Explicit;
  std::string e1, e2;
  /// Connection names; "0" is the zero connection.
  std::string right = "0", left = "0";
  /// Complex only.
  std::string twist;
  bool omit_h21 = false;
  friend bool operator==(const PairDecl&, const PairDecl&) = default;
};

struct DiracDecl {
  enum class Kind { Frame, TwoForm, Bivector, PairingMap, PortHamiltonian };
  std::string name;
  Kind kind = Kind::Frame;
  /// A structure or a matched pair (whose sum is the host).
  std::string host;
  std::string form;
  PolyMatrix matrix;
  /// Frame only.
  std::vector<std::string> labels;
  std::vector<Section> frame;
  std::vector<Section> complement;
  friend bool operator==(const DiracDecl&, const DiracDecl&) = default;
};

struct MatchedDiracDecl {
  std::string name;
  std::string pair;
  std::string d1, d2;
  friend bool operator==(const MatchedDiracDecl&, const MatchedDiracDecl&) = default;
};

struct RegularDecl {
  std::string name;
  QuadraticLieBundle lie;
  std::vector<std::vector<Section>> nabla;
  std::vector<std::vector<Section>> curvature;
  /// Form name, empty for H = 0.
  std::string twist;
  Scalar lambda = Scalar(2);
  friend bool operator==(const RegularDecl&, const RegularDecl&) = default;
};

using Declaration =
    std::variant<FormDecl, StructureDecl, ConnectionDecl, PairDecl, DiracDecl, MatchedDiracDecl, RegularDecl>;

const std::string& declaration_name(const Declaration& d);
/// "form", "structure", "connection", "matched-pair", "dirac", "matched-dirac" or "regular".
const char* declaration_keyword(const Declaration& d);

/// A parsed spec file: the chart and the declarations in source order.
/// Locations are kept for diagnostics and ignored by ==.
struct SpecDocument {
  Chart chart;
  /// Set when the chart was declared as `chart complex N`.
  std::optional<std::size_t> complex_n;
  std::vector<Declaration> declarations;
  std::vector<SourceLocation> locations;

  const Declaration* find(const std::string& name) const;

  friend bool operator==(const SpecDocument& a, const SpecDocument& b) {
    return same_chart(a.chart, b.chart) && a.complex_n == b.complex_n && a.declarations == b.declarations;
  }
};

/// Parses and validates a spec file; see docs/grammar.md. Throws
/// SyntaxError, UnknownName or ShapeMismatch with the offending position.
SpecDocument parse_spec(std::string_view text);

/// Canonical text; parse_spec(print_spec(d)) == d.
std::string print_spec(const SpecDocument& doc);

/// The built objects of a document, by name.
struct SpecModel {
  Chart chart;
  std::optional<ComplexChart> complex;
  std::map<std::string, DiffForm> forms;
  std::map<std::string, CourantStructure> structures;
  std::map<std::string, Connection> connections;
  std::map<std::string, MatchedPairData> pairs;
  std::map<std::string, DiracFrame> dirac;
  std::map<std::string, MatchedDiracDecl> matched_dirac;
  std::map<std::string, RegularData> regular;

  /// The structure or matched sum named `name`.
  CourantStructure host(const std::string& name) const;
};

/// Builds every declaration. `force` builds twisted structures with a
/// non-closed twist. Library rejections become InvalidData at the
/// declaration.
SpecModel instantiate(const SpecDocument& doc, bool force = false);

}  // namespace courant
