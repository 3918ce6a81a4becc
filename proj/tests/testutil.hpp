#pragma once

#include <string>
#include <vector>

#include "rloop/formsla.hpp"

namespace rloop::test {

inline GR gr(const std::string& s) { return GR::parse(s); }

inline VectorC vec(std::initializer_list<const char*> xs) {
  VectorC v;
  for (const char* x : xs) v.push_back(GR::parse(x));
  return v;
}

inline Subspace span(std::initializer_list<VectorC> vs, int n) { return Subspace::span(std::vector<VectorC>(vs), n); }

// e_i in C^n, 0-based.
inline VectorC e(int n, int i) { return unitVec(n, i); }

inline Polynomial poly(std::initializer_list<const char*> xs) {
  std::vector<GR> c;
  for (const char* x : xs) c.push_back(GR::parse(x));
  return Polynomial(c);
}

}  // namespace rloop::test
