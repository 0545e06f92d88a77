#include "courant/chart.hpp"

#include <set>

namespace courant {

ChartContext::ChartContext(std::vector<std::string> names, Field field)
    : names_(std::move(names)), field_(field) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty coordinate name");
    if (n == "i") throw Error("`i` is reserved for the imaginary unit");
    if (!seen.insert(n).second) throw Error("duplicate coordinate name `" + n + "`");
  }
}

int ChartContext::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

Chart make_chart(std::vector<std::string> names, Field field) {
  return std::make_shared<const ChartContext>(std::move(names), field);
}

Chart make_euclidean_chart(std::size_t n, bool xyz) {
  std::vector<std::string> names;
  if (xyz && n <= 3) {
    static const char* kXyz[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(kXyz[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return make_chart(std::move(names), Field::Rational);
}

}  // namespace courant
