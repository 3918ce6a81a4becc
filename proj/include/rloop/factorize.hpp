#pragma once

// Factorization of loops into simple factors by strictly lowering the total
// degree of one pole at a time until the identity is left.

#include <optional>
#include <string>
#include <vector>

#include "rloop/simplefactor.hpp"

namespace rloop {

// One factor of a result. `spec` (or the q-element built from `qspec`) is the
// element the algorithm multiplied by; the factor entering the product is its
// inverse when `inverted` is set.
struct FactorEntry {
  bool twisted = false;
  SimpleFactorSpec spec;
  TwistedQSpec qspec;
  bool inverted = false;
  // Constituents of the q-element, kept once built so they need not be redone.
  std::vector<SimpleFactorSpec> parts;

  static FactorEntry simple(SimpleFactorSpec s, bool inverted) { return {false, std::move(s), {}, inverted, {}}; }
  static FactorEntry q(TwistedQSpec s, bool inverted, std::vector<SimpleFactorSpec> parts = {}) {
    return {true, {}, std::move(s), inverted, std::move(parts)};
  }

  MatrixLoop loop() const;
  std::vector<PieceFactor> chain() const;
  std::string str() const;
};

struct AuditStep {
  GR alpha;
  std::string phase;   // "pole" or "zero"
  std::string branch;
  TotalDegree before, after;
  int zeroBefore = 0, zeroAfter = 0;  // CSp zero phase: order of det at alpha
  int factors = 1;

  bool decreased() const { return phase == "zero" ? zeroAfter < zeroBefore : after < before; }
};

struct FactorizationResult {
  GroupContext group;
  std::optional<TwistContext> twist;
  std::vector<FactorEntry> factors;
  std::vector<AuditStep> steps;
  int budget = 0;
  int iterations = 0;

  MatrixLoop product() const;
};

FactorizationResult factor_csp(const MatrixLoop& g);
FactorizationResult factor_so(const MatrixLoop& g);
FactorizationResult factor_g2(const MatrixLoop& g);
FactorizationResult factor_twisted(const MatrixLoop& g, const TwistContext& twist);
FactorizationResult factorize(const MatrixLoop& g, const GroupContext& ctx);

// g has a simple pole at alpha; returns G2 factors C1 (, C2) with
// p_{alpha,C1} p_{alpha,C2} g' = g and g' holomorphic at alpha.
std::vector<SimpleFactorSpec> split_simple_pole_pair(const MatrixLoop& g, const GR& alpha);

// Exact check that the factors multiply to g. Both sides are rational in
// lambda with known denominators, so agreement at deg + 1 real points (never
// poles) decides equality.
bool verify_product(const FactorizationResult& result, const MatrixLoop& g);
bool chain_equals(const std::vector<PieceFactor>& chain, const MatrixLoop& g);

}  // namespace rloop
