#pragma once

#include <memory>
#include <string>
#include <vector>

#include "courant/error.hpp"
#include "courant/scalar.hpp"

namespace courant {

/// One polynomial coordinate chart: ordered coordinate names and the scalar
/// field. Dimension zero models a point.
class ChartContext {
 public:
  ChartContext(std::vector<std::string> names, Field field);

  std::size_t dimension() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  Field field() const { return field_; }
  bool gaussian() const { return field_ == Field::GaussianRational; }

  /// Index of a coordinate name, or -1.
  int index_of(const std::string& name) const;

  friend bool operator==(const ChartContext& a, const ChartContext& b) {
    return a.field_ == b.field_ && a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  Field field_;
};

using Chart = std::shared_ptr<const ChartContext>;

Chart make_chart(std::vector<std::string> names, Field field = Field::Rational);

/// Charts `x1..xn` (or `x, y, z` for n <= 3 when `xyz` is set).
Chart make_euclidean_chart(std::size_t n, bool xyz = true);

inline bool same_chart(const Chart& a, const Chart& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_chart(const Chart& a, const Chart& b, const char* where) {
  if (!same_chart(a, b)) throw ChartMismatch(where);
}

}  // namespace courant
