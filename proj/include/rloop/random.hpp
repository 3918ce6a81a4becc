#pragma once

// Seeded generators for factors and loops. Integers are drawn with a plain
// modulo so that sequences are identical across standard libraries.

#include <cstdint>
#include <random>
#include <vector>

#include "rloop/factorize.hpp"

namespace rloop {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  long uniform(long lo, long hi) { return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return eng_() % 2 == 1; }
  GR gaussianInt(long lim) { return GR::fromInts(uniform(-lim, lim), 1, uniform(-lim, lim), 1); }
  GR nonzeroGaussianInt(long lim);

 private:
  std::mt19937_64 eng_;
};

// re in [-3,3], im in [1,3]; firstQuadrant moves re to [1,3].
GR random_alpha(Rng& rng, bool firstQuadrant = false);
GR random_imaginary_alpha(Rng& rng);
// Rational rotation (I - A)(I + A)^-1 with A small, integral and antisymmetric.
MatrixC random_rotation(Rng& rng, int n);
Subspace random_isotropic_line(Rng& rng, int n);
Subspace random_lagrangian(Rng& rng, int m, bool real = false);
Subspace random_gl_subspace(Rng& rng, int n);
Subspace random_coassociative(Rng& rng);

SimpleFactorSpec random_spec(Rng& rng, const GroupContext& ctx, const GR& alpha);
// A factor at an imaginary alpha that is twisted on its own.
SimpleFactorSpec random_axis_spec(Rng& rng, const TwistContext& twist, const GR& alpha);

struct RandomLoop {
  MatrixLoop loop;
  std::vector<FactorEntry> factors;
};

// Product of 1..maxFactors simple factors at 1..maxPoles pole pairs; exactly
// maxFactors of them when `exact` is set.
RandomLoop random_loop(Rng& rng, const GroupContext& ctx, int maxFactors, int maxPoles = 2, bool exact = false);
// Product of q-elements and axis factors. With maxQ >= 0 at most that many
// q-elements are drawn; later off-axis picks move to an axis pole.
RandomLoop random_twisted_loop(Rng& rng, const TwistContext& twist, int maxFactors, int maxPoles = 2, int maxQ = -1,
                               bool exact = false);
// A loop with no pole at alpha or conj(alpha).
MatrixLoop random_loop_avoiding(Rng& rng, const GroupContext& ctx, const GR& alpha, int maxFactors = 2);

}  // namespace rloop
