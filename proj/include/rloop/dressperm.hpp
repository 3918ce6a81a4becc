#pragma once

// Dressing a loop by a simple factor, and swapping the order of two simple
// factors with distinct poles.

#include <string>
#include <utility>
#include <vector>

#include "rloop/simplefactor.hpp"

namespace rloop {

struct DressingOutcome {
  MatrixLoop conjugated;          // p h p'^-1
  SimpleFactorSpec rightFactor;   // p'
  std::vector<std::pair<std::string, Subspace>> moved;  // "W'", "L'", "K'"
};

// h must be a member of p's group, holomorphic and invertible at alpha (and
// conj alpha for G2). G2 factors are dressed as (L, K) pairs, K first.
DressingOutcome dress(const SimpleFactorSpec& p, const MatrixLoop& h);

struct Permuted {
  SimpleFactorSpec p2hat;  // pole of p2
  SimpleFactorSpec p1hat;  // pole of p1
};

// p2hat p1 = p1hat p2, asserted exactly before returning.
Permuted permute(const SimpleFactorSpec& p1, const SimpleFactorSpec& p2);

}  // namespace rloop
