#include "rloop/random.hpp"

#include <algorithm>

#include "rloop/octonion.hpp"

namespace rloop {

GR Rng::nonzeroGaussianInt(long lim) {
  while (true) {
    GR z = gaussianInt(lim);
    if (!z.isZero()) return z;
  }
}

GR random_alpha(Rng& rng, bool firstQuadrant) {
  long re = firstQuadrant ? rng.uniform(1, 3) : rng.uniform(-3, 3);
  return GR::fromInts(re, 1, rng.uniform(1, 3), 1);
}

GR random_imaginary_alpha(Rng& rng) { return GR::fromInts(0, 1, rng.uniform(1, 3), 1); }

MatrixC random_rotation(Rng& rng, int n) {
  MatrixC a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      a(i, j) = GR(static_cast<int>(rng.uniform(-1, 1)));
      a(j, i) = -a(i, j);
    }
  MatrixC id = MatrixC::identity(n);
  return (id - a) * inverse(id + a);
}

// (1 - z.z, i(1 + z.z), 2z) is null for every z in C^(n-2); a random signed
// permutation then spreads it over the coordinates.
Subspace random_isotropic_line(Rng& rng, int n) {
  VectorC z(n - 2);
  GR q;
  for (auto& e : z) {
    e = rng.gaussianInt(1);
    q += e * e;
  }
  VectorC v{GR(1) - q, GR::I() * (GR(1) + q)};
  for (const auto& e : z) v.push_back(GR(2) * e);
  for (int i = n - 1; i > 0; --i) std::swap(v[i], v[rng.uniform(0, i)]);
  for (auto& e : v)
    if (rng.coin()) e = -e;
  if (isZeroVec(v)) return random_isotropic_line(rng, n);
  return Subspace::span({v}, n);
}

Subspace random_lagrangian(Rng& rng, int m, bool real) {
  MatrixC x(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) x(i, j) = real ? GR(static_cast<int>(rng.uniform(-3, 3))) : rng.gaussianInt(3);
  MatrixC s = x + x.transpose();
  std::vector<VectorC> cols;
  for (int j = 0; j < m; ++j) {
    VectorC c(2 * m);
    c[j] = GR(1);
    for (int i = 0; i < m; ++i) c[m + i] = s(i, j);
    cols.push_back(std::move(c));
  }
  return Subspace::span(cols, 2 * m);
}

Subspace random_gl_subspace(Rng& rng, int n) {
  int d = static_cast<int>(rng.uniform(1, n));
  while (true) {
    std::vector<VectorC> vs;
    for (int j = 0; j < d; ++j) {
      VectorC v(n);
      for (auto& e : v) e = rng.gaussianInt(2);
      vs.push_back(std::move(v));
    }
    Subspace w = Subspace::span(vs, n);
    if (w.dim() == d) return w;
  }
}

Subspace random_coassociative(Rng& rng) {
  Subspace l = random_isotropic_line(rng, 7);
  Subspace b = multiplier_plane(l);
  VectorC m = addVec(scaleVec(b.vec(0), rng.gaussianInt(2)), scaleVec(b.vec(1), rng.nonzeroGaussianInt(2)));
  return l + Subspace::span({m}, 7);
}

SimpleFactorSpec random_spec(Rng& rng, const GroupContext& ctx, const GR& alpha) {
  switch (ctx.kind) {
    case GroupKind::GL:
      return SimpleFactorSpec::gl(alpha, random_gl_subspace(rng, ctx.n));
    case GroupKind::SO:
      return SimpleFactorSpec::so(alpha, random_isotropic_line(rng, ctx.n));
    case GroupKind::CSp:
      return SimpleFactorSpec::csp(alpha, random_lagrangian(rng, ctx.n));
    case GroupKind::G2:
      return SimpleFactorSpec::g2(alpha, random_coassociative(rng));
  }
  throw InvalidSpec("unknown group");
}

namespace {

// x + i y with x in the +1 and y in the -1 eigenspace of the diagonal s,
// both of the same length: a null line with s conj(L) = L.
VectorC fixedNullVector(Rng& rng, const std::vector<int>& plus, const std::vector<int>& minus, int n) {
  auto rotated = [&](const std::vector<int>& idx) {
    MatrixC q = random_rotation(rng, static_cast<int>(idx.size()));
    VectorC out(n);
    for (size_t i = 0; i < idx.size(); ++i) out[idx[i]] = q(static_cast<int>(i), 0);
    return out;
  };
  return addVec(rotated(plus), scaleVec(rotated(minus), GR::I()));
}

}  // namespace

SimpleFactorSpec random_axis_spec(Rng& rng, const TwistContext& twist, const GR& alpha) {
  switch (twist.flavor) {
    case TwistFlavor::SOGrassmannian: {
      std::vector<int> plus, minus;
      for (int i = 0; i < twist.n; ++i) (i < twist.k ? plus : minus).push_back(i);
      return SimpleFactorSpec::so(alpha, Subspace::span({fixedNullVector(rng, plus, minus, twist.n)}, twist.n));
    }
    case TwistFlavor::CSpU:
      return SimpleFactorSpec::csp(alpha, random_lagrangian(rng, twist.n, true));
    case TwistFlavor::G2SO4: {
      Subspace m = Subspace::span({fixedNullVector(rng, {4, 5, 6}, {0, 1, 2, 3}, 7)}, 7);
      Subspace b = multiplier_plane(m);
      VectorC v = addVec(scaleVec(b.vec(0), rng.gaussianInt(2)), scaleVec(b.vec(1), rng.nonzeroGaussianInt(2)));
      VectorC sv = twist.s * conjVec(v);
      VectorC nv = addVec(v, sv);
      if (isZeroVec(nv)) nv = scaleVec(subVec(v, sv), GR::I());
      return SimpleFactorSpec::g2(alpha, m + Subspace::span({nv}, 7));
    }
    case TwistFlavor::SOU:
      break;
  }
  throw NoFixedLine("flavor " + twist.tag() + " has no twisted factors on the imaginary axis");
}

namespace {

std::vector<GR> distinctPoles(Rng& rng, int count, bool firstQuadrant, bool allowAxis) {
  std::vector<GR> out;
  while (static_cast<int>(out.size()) < count) {
    GR a = allowAxis && rng.coin() ? random_imaginary_alpha(rng) : random_alpha(rng, firstQuadrant);
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  return out;
}

}  // namespace

RandomLoop random_loop(Rng& rng, const GroupContext& ctx, int maxFactors, int maxPoles, bool exact) {
  auto poles = distinctPoles(rng, static_cast<int>(rng.uniform(1, maxPoles)), false, false);
  int count = exact ? maxFactors : static_cast<int>(rng.uniform(1, maxFactors));
  RandomLoop out{MatrixLoop::identity(ctx.dim()), {}};
  for (int i = 0; i < count; ++i) {
    const GR& a = poles[rng.uniform(0, static_cast<long>(poles.size()) - 1)];
    FactorEntry e = FactorEntry::simple(random_spec(rng, ctx, a), false);
    out.loop = out.loop * e.loop();
    out.factors.push_back(std::move(e));
  }
  return out;
}

RandomLoop random_twisted_loop(Rng& rng, const TwistContext& twist, int maxFactors, int maxPoles, int maxQ,
                               bool exact) {
  const GroupContext ctx = twist.group();
  const bool axisOk = twist.flavor != TwistFlavor::SOU;
  auto poles = distinctPoles(rng, static_cast<int>(rng.uniform(1, maxPoles)), true, axisOk);
  int count = exact ? maxFactors : static_cast<int>(rng.uniform(1, maxFactors));
  RandomLoop out{MatrixLoop::identity(ctx.dim()), {}};
  int qs = 0;
  for (int i = 0; i < count; ++i) {
    GR a = poles[rng.uniform(0, static_cast<long>(poles.size()) - 1)];
    if (!a.isImaginary() && maxQ >= 0 && qs >= maxQ) {
      if (!axisOk) break;
      auto axis = std::find_if(poles.begin(), poles.end(), [](const GR& p) { return p.isImaginary(); });
      if (axis == poles.end()) {
        do a = random_imaginary_alpha(rng);
        while (std::find(poles.begin(), poles.end(), a) != poles.end());
        poles.push_back(a);
      } else {
        a = *axis;
      }
    }
    FactorEntry e;
    if (a.isImaginary()) {
      e = FactorEntry::simple(random_axis_spec(rng, twist, a), false);
      out.loop = out.loop * e.loop();
    } else {
      SimpleFactorSpec base = random_spec(rng, ctx, a);
      TwistedQ q = make_twisted_q({base, twist});
      e = FactorEntry::q({base, twist}, false, q.constituents);
      ++qs;
      out.loop = out.loop * q.loop;
    }
    out.factors.push_back(std::move(e));
  }
  return out;
}

MatrixLoop random_loop_avoiding(Rng& rng, const GroupContext& ctx, const GR& alpha, int maxFactors) {
  int count = static_cast<int>(rng.uniform(1, maxFactors));
  MatrixLoop h = MatrixLoop::identity(ctx.dim());
  for (int i = 0; i < count; ++i) {
    GR b = random_alpha(rng);
    if (b == alpha || b == alpha.conj()) {
      --i;
      continue;
    }
    h = h * materialize(random_spec(rng, ctx, b));
  }
  return h;
}

}  // namespace rloop
