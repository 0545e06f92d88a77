#pragma once

#include <cstdint>
#include <random>

#include "courant/calculus.hpp"
#include "courant/courant.hpp"

namespace courant {

/// Deterministic generator of random polynomial data. Uses mt19937_64 (whose
/// output sequence is fixed by the standard) with a plain modulo reduction, so
/// identical seeds produce identical data on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }

  /// Small nonzero-ish integer scalar; gaussian fields also get an imaginary part.
  Scalar scalar(Field field);
  /// Each monomial of total degree <= max_degree is kept with probability 1/2.
  Polynomial polynomial(std::size_t nvars, int max_degree, Field field);
  /// Like polynomial() but retried until nonzero.
  Polynomial nonzero_polynomial(std::size_t nvars, int max_degree, Field field);

  VectorField vector_field(const Chart& chart, int max_degree);
  DiffForm form(const Chart& chart, std::size_t degree, int max_degree);
  Section section(std::size_t rank, const Chart& chart, int max_degree);

 private:
  std::mt19937_64 engine_;
};

/// All exponents of total degree <= max_degree in graded order.
std::vector<Exponent> monomials_up_to(std::size_t nvars, int max_degree);

}  // namespace courant
