#pragma once

// Simple factors p_{alpha,.} for GL, SO, CSp and G2 and the twisted
// q-elements built from them.

#include <string>
#include <vector>

#include "rloop/loops.hpp"

namespace rloop {

enum class FactorVariant { GL, SO, CSp, G2, G2Pair };

std::string variantTag(FactorVariant v);
FactorVariant variantFromTag(const std::string& tag);

struct SimpleFactorSpec {
  FactorVariant variant = FactorVariant::GL;
  GR alpha;
  Subspace W;  // W (GL, CSp), L (SO, G2Pair), C (G2)
  Subspace K;  // second line of a G2Pair

  static SimpleFactorSpec gl(const GR& a, Subspace w) { return {FactorVariant::GL, a, std::move(w), {}}; }
  static SimpleFactorSpec so(const GR& a, Subspace l) { return {FactorVariant::SO, a, std::move(l), {}}; }
  static SimpleFactorSpec csp(const GR& a, Subspace w) { return {FactorVariant::CSp, a, std::move(w), {}}; }
  static SimpleFactorSpec g2(const GR& a, Subspace c) { return {FactorVariant::G2, a, std::move(c), {}}; }
  static SimpleFactorSpec g2pair(const GR& a, Subspace l, Subspace k) {
    return {FactorVariant::G2Pair, a, std::move(l), std::move(k)};
  }

  int ambient() const { return W.ambient(); }
  GroupContext group() const;
  std::string str() const;
  friend bool operator==(const SimpleFactorSpec& a, const SimpleFactorSpec& b) {
    return a.variant == b.variant && a.alpha == b.alpha && a.W == b.W && a.K == b.K;
  }
};

struct SpecValidation {
  bool ok = true;
  std::string clause;
};

SpecValidation validate(const SimpleFactorSpec& spec);
void requireValid(const SimpleFactorSpec& spec);  // throws InvalidSpec

MatrixLoop materialize(const SimpleFactorSpec& spec);
MatrixLoop inverse_closed_form(const SimpleFactorSpec& spec);
// Value at a point that is neither alpha nor conj(alpha).
MatrixC evaluate(const SimpleFactorSpec& spec, const GR& x);

// One piece sum_j mu_alpha^j P_j of a factorwise product, mu_alpha = (l - alpha)/(l - conj alpha).
struct PieceFactor {
  GR alpha;
  std::vector<std::pair<int, MatrixC>> pieces;
  MatrixC eval(const GR& x) const;
  int denDegree() const;
};

// The factor (or its inverse) as a left-to-right product of pieces.
std::vector<PieceFactor> pieceChain(const SimpleFactorSpec& spec, bool inverse = false);

// The (L, K) pair of a G2 factor: K is the hermitian complement of L in C.
SimpleFactorSpec g2AsPair(const SimpleFactorSpec& spec);

struct TwistedQSpec {
  SimpleFactorSpec base;
  TwistContext twist;
};

struct TwistedQ {
  MatrixLoop loop;
  // Left-to-right: loop = materialize(constituents[0]) * materialize(constituents[1]).
  std::vector<SimpleFactorSpec> constituents;
};

TwistedQ make_twisted_q(const TwistedQSpec& spec);
MatrixLoop twistedQInverse(const TwistedQ& q);

// Whether a single factor at an imaginary pole already satisfies the twist.
bool axisFactorTwisted(const SimpleFactorSpec& spec, const TwistContext& twist);

}  // namespace rloop
