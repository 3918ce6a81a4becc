#include "rloop/simplefactor.hpp"

#include "rloop/octonion.hpp"

namespace rloop {

std::string variantTag(FactorVariant v) {
  switch (v) {
    case FactorVariant::GL:
      return "gl";
    case FactorVariant::SO:
      return "so";
    case FactorVariant::CSp:
      return "csp";
    case FactorVariant::G2:
      return "g2";
    case FactorVariant::G2Pair:
      return "g2pair";
  }
  return "";
}

FactorVariant variantFromTag(const std::string& tag) {
  if (tag == "gl") return FactorVariant::GL;
  if (tag == "so") return FactorVariant::SO;
  if (tag == "csp") return FactorVariant::CSp;
  if (tag == "g2") return FactorVariant::G2;
  if (tag == "g2pair") return FactorVariant::G2Pair;
  throw InvalidSpec("unknown factor variant '" + tag + "'");
}

GroupContext SimpleFactorSpec::group() const {
  switch (variant) {
    case FactorVariant::GL:
      return GroupContext::gl(ambient());
    case FactorVariant::SO:
      return GroupContext::so(ambient());
    case FactorVariant::CSp:
      return GroupContext::csp(ambient() / 2);
    default:
      return GroupContext::g2();
  }
}

std::string SimpleFactorSpec::str() const {
  std::string out = variantTag(variant) + "(alpha=" + alpha.str() + ", " + W.str();
  if (variant == FactorVariant::G2Pair) out += ", " + K.str();
  return out + ")";
}

namespace {

SpecValidation fail(std::string clause) { return {false, std::move(clause)}; }

// (power of mu, projection) pairs; the factor is sum mu^j P.
std::vector<std::pair<int, MatrixC>> pieces(const SimpleFactorSpec& spec) {
  const int n = spec.ambient();
  const MatrixC id = MatrixC::identity(n);
  switch (spec.variant) {
    case FactorVariant::GL:
    case FactorVariant::CSp: {
      MatrixC p = hermitian_projection(spec.W);
      return {{1, p}, {0, id - p}};
    }
    case FactorVariant::SO:
    case FactorVariant::G2: {
      MatrixC p = hermitian_projection(spec.W);
      MatrixC pb = hermitian_projection(spec.W.conj());
      return {{-1, pb}, {0, id - p - pb}, {1, p}};
    }
    case FactorVariant::G2Pair:
      break;
  }
  throw std::logic_error("pieces of a G2 pair");
}

MatrixLoop fromPieces(const std::vector<std::pair<int, MatrixC>>& ps, const GR& alpha, int n) {
  RF mu = RF::mobius(alpha, alpha.conj());
  RF muInv = RF::mobius(alpha.conj(), alpha);
  std::vector<std::pair<RF, MatrixC>> terms;
  for (const auto& [j, p] : ps) terms.emplace_back(j == 1 ? mu : j == -1 ? muInv : RF(1), p);
  return MatrixLoop::weighted(terms, n);
}

}  // namespace

SpecValidation validate(const SimpleFactorSpec& spec) {
  if (spec.alpha.isReal()) return fail("alpha must not be real");
  const int n = spec.ambient();
  switch (spec.variant) {
    case FactorVariant::GL:
      if (n < 1) return fail("empty ambient space");
      break;
    case FactorVariant::SO:
      if (spec.W.dim() != 1) return fail("L must be a line");
      if (!isIsotropic(spec.W, FormContext::bilinear(n))) return fail("L is not isotropic");
      break;
    case FactorVariant::CSp: {
      if (n % 2) return fail("ambient dimension must be even");
      auto rep = isotropic_classify(spec.W, FormContext::symplectic(n / 2));
      if (!rep.lagrangian) return fail("W is not Lagrangian");
      break;
    }
    case FactorVariant::G2:
      if (n != 7) return fail("ambient dimension must be 7");
      if (!coassoc_classify(spec.W).complexCoassociative) return fail("C is not complex coassociative");
      break;
    case FactorVariant::G2Pair: {
      if (n != 7 || spec.K.ambient() != 7) return fail("ambient dimension must be 7");
      if (spec.W.dim() != 1 || spec.K.dim() != 1) return fail("L and K must be lines");
      if (!isIsotropic(spec.W, FormContext::bilinear(7))) return fail("L is not isotropic");
      // conj(L)-perp in the bilinear sense, i.e. hermitian-perpendicular to L.
      if (!spec.W.hermitianComplement().contains(spec.K)) return fail("K is not perpendicular to conj(L)");
      MatrixC perp = MatrixC::identity(7) - hermitian_projection(spec.W) - hermitian_projection(spec.W.conj());
      Subspace c = spec.W + spec.K.image(perp);
      if (!coassoc_classify(c).complexCoassociative)
        return fail("L + pi(K) is not complex coassociative");
      break;
    }
  }
  return {};
}

void requireValid(const SimpleFactorSpec& spec) {
  auto v = validate(spec);
  if (!v.ok) throw InvalidSpec(spec.str() + ": " + v.clause);
}

MatrixLoop materialize(const SimpleFactorSpec& spec) {
  requireValid(spec);
  if (spec.variant == FactorVariant::G2Pair)
    return materialize(SimpleFactorSpec::so(spec.alpha, spec.W)) * materialize(SimpleFactorSpec::so(spec.alpha, spec.K));
  return fromPieces(pieces(spec), spec.alpha, spec.ambient());
}

MatrixLoop inverse_closed_form(const SimpleFactorSpec& spec) {
  requireValid(spec);
  switch (spec.variant) {
    case FactorVariant::GL:
    case FactorVariant::CSp:
      // mu_{conj alpha} = 1/mu_alpha
      return fromPieces(pieces(spec), spec.alpha.conj(), spec.ambient());
    case FactorVariant::SO:
    case FactorVariant::G2: {
      SimpleFactorSpec s = spec;
      s.W = spec.W.conj();
      return fromPieces(pieces(s), spec.alpha, spec.ambient());
    }
    case FactorVariant::G2Pair:
      break;
  }
  return inverse_closed_form(SimpleFactorSpec::so(spec.alpha, spec.K)) *
         inverse_closed_form(SimpleFactorSpec::so(spec.alpha, spec.W));
}

MatrixC evaluate(const SimpleFactorSpec& spec, const GR& x) {
  if (spec.variant == FactorVariant::G2Pair)
    return evaluate(SimpleFactorSpec::so(spec.alpha, spec.W), x) * evaluate(SimpleFactorSpec::so(spec.alpha, spec.K), x);
  GR d = x - spec.alpha.conj();
  if (d.isZero()) throw EvalAtPole("simple factor evaluated at conj(alpha)");
  GR mu = (x - spec.alpha) / d;
  const int n = spec.ambient();
  MatrixC out(n, n);
  for (const auto& [j, p] : pieces(spec)) {
    if (j == -1 && mu.isZero()) throw EvalAtPole("simple factor evaluated at alpha");
    GR w = j == 1 ? mu : j == -1 ? mu.inverse() : GR(1);
    out = out + w * p;
  }
  return out;
}

MatrixC PieceFactor::eval(const GR& x) const {
  GR d = x - alpha.conj();
  if (d.isZero()) throw EvalAtPole("simple factor evaluated at conj(alpha)");
  GR mu = (x - alpha) / d;
  MatrixC out(pieces.front().second.rows(), pieces.front().second.cols());
  for (const auto& [j, p] : pieces) {
    if (j == -1 && mu.isZero()) throw EvalAtPole("simple factor evaluated at alpha");
    out = out + (j == 1 ? mu : j == -1 ? mu.inverse() : GR(1)) * p;
  }
  return out;
}

int PieceFactor::denDegree() const {
  bool pos = false, neg = false;
  for (const auto& [j, p] : pieces) {
    if (p.isZero()) continue;
    pos |= j == 1;
    neg |= j == -1;
  }
  return int(pos) + int(neg);
}

std::vector<PieceFactor> pieceChain(const SimpleFactorSpec& spec, bool inverse) {
  requireValid(spec);
  switch (spec.variant) {
    case FactorVariant::GL:
    case FactorVariant::CSp:
      return {{inverse ? spec.alpha.conj() : spec.alpha, pieces(spec)}};
    case FactorVariant::SO:
    case FactorVariant::G2: {
      SimpleFactorSpec s = spec;
      if (inverse) s.W = spec.W.conj();
      return {{spec.alpha, pieces(s)}};
    }
    case FactorVariant::G2Pair:
      break;
  }
  auto l = pieceChain(SimpleFactorSpec::so(spec.alpha, spec.W), inverse);
  auto k = pieceChain(SimpleFactorSpec::so(spec.alpha, spec.K), inverse);
  if (inverse) std::swap(l, k);
  l.insert(l.end(), k.begin(), k.end());
  return l;
}

SimpleFactorSpec g2AsPair(const SimpleFactorSpec& spec) {
  if (spec.variant == FactorVariant::G2Pair) return spec;
  if (spec.variant != FactorVariant::G2) throw InvalidSpec("not a G2 factor");
  Subspace l = Subspace::span({spec.W.vec(0)}, 7);
  Subspace k = spec.W.intersect(l.hermitianComplement());
  return SimpleFactorSpec::g2pair(spec.alpha, l, k);
}

TwistedQ make_twisted_q(const TwistedQSpec& spec) {
  const GR& a = spec.base.alpha;
  if (a.isReal() || a.isImaginary()) throw AlphaOnAxis("q-element needs alpha off both axes");
  if (spec.twist.group().kind != spec.base.group().kind) throw InvalidSpec("twist flavor does not match the factor");
  requireValid(spec.base);
  const TwistContext& tw = spec.twist;
  TwistedQ q;
  switch (spec.base.variant) {
    case FactorVariant::SO: {
      Subspace m = tw.act(spec.base.W).image(evaluate(spec.base, -a));
      q.constituents = {SimpleFactorSpec::so(-a, m), spec.base};
      break;
    }
    case FactorVariant::CSp: {
      // sigma_c maps p_{alpha,W} to p_{-conj alpha, conj W}.
      GR b = -a.conj();
      Subspace w = spec.base.W.conj().image(evaluate(spec.base, b));
      q.constituents = {SimpleFactorSpec::csp(b, w), spec.base};
      break;
    }
    case FactorVariant::G2:
    case FactorVariant::G2Pair: {
      // q = X h with X^-1 sigma(X) = h sigma(h)^-1. Dress sigma(h)^-1 = p_{-a,V1} p_{-a,V2}
      // past h one line at a time; X is the inverse of the dressed pair.
      SimpleFactorSpec pair = g2AsPair(spec.base);
      MatrixLoop h = materialize(pair);
      Subspace v1 = tw.act(pair.K).conj(), v2 = tw.act(pair.W).conj();
      Subspace v1p = v1.image(h.eval(-a.conj()));
      MatrixLoop h1 = inverse_closed_form(SimpleFactorSpec::so(-a, v1p)) * h * materialize(SimpleFactorSpec::so(-a, v1));
      Subspace v2p = v2.image(h1.eval(-a.conj()));
      q.constituents = {SimpleFactorSpec::g2pair(-a, v2p.conj(), v1p.conj()), pair};
      break;
    }
    case FactorVariant::GL:
      throw InvalidSpec("no twisted q-element for GL factors");
  }
  q.loop = materialize(q.constituents[0]) * materialize(q.constituents[1]);
  if (!isTwisted(q.loop, tw)) throw AlgorithmError("q-element fails the twisting identity: " + spec.base.str());
  return q;
}

MatrixLoop twistedQInverse(const TwistedQ& q) {
  return inverse_closed_form(q.constituents[1]) * inverse_closed_form(q.constituents[0]);
}

bool axisFactorTwisted(const SimpleFactorSpec& spec, const TwistContext& twist) {
  if (!spec.alpha.isImaginary()) return false;
  switch (spec.variant) {
    case FactorVariant::SO:
    case FactorVariant::G2:
      return twist.act(spec.W) == spec.W.conj();
    case FactorVariant::G2Pair:
      return twist.act(spec.W) == spec.W.conj() && twist.act(spec.K) == spec.K.conj();
    case FactorVariant::CSp:
      return spec.W.conj() == spec.W;
    case FactorVariant::GL:
      break;
  }
  return false;
}

}  // namespace rloop
