#include "rloop/dressperm.hpp"

#include "rloop/factorize.hpp"

namespace rloop {

namespace {

// p h p'^-1 for a single line or subspace, with the moved subspace h(alpha)^-1 W.
struct LineDressing {
  MatrixLoop conjugated;
  Subspace moved;
};

LineDressing dressOne(const SimpleFactorSpec& p, const MatrixLoop& h, const MatrixC& hAlphaInv) {
  SimpleFactorSpec q = p;
  q.W = p.W.image(hAlphaInv);
  return {materialize(p) * h * inverse_closed_form(q), q.W};
}

MatrixC invertAt(const MatrixLoop& h, const GR& a) {
  MatrixC v = h.eval(a);
  if (det(v).isZero()) throw SingularAtAlpha("loop is singular at " + a.str());
  return inverse(v);
}

void requireHolomorphic(const MatrixLoop& h, const GR& a) {
  if (h.poleOrder(a) > 0) throw HolomorphyPrecondition("loop has a pole at " + a.str());
}

// Both chains multiply out to rational loops that are finite at infinity; their
// difference has numerator degree at most the sum of the denominator degrees.
bool chainsEqual(const std::vector<PieceFactor>& a, const std::vector<PieceFactor>& b) {
  int deg = 0;
  for (const auto& f : a) deg += f.denDegree();
  for (const auto& f : b) deg += f.denDegree();
  const int n = a.front().pieces.front().second.rows();
  for (int x = 0; x <= deg; ++x) {
    GR pt(x);
    MatrixC l = MatrixC::identity(n), r = MatrixC::identity(n);
    for (const auto& f : a) l = l * f.eval(pt);
    for (const auto& f : b) r = r * f.eval(pt);
    if (!(l == r)) return false;
  }
  return true;
}

std::vector<PieceFactor> join(std::vector<PieceFactor> a, const std::vector<PieceFactor>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

DressingOutcome dress(const SimpleFactorSpec& p, const MatrixLoop& h) {
  requireValid(p);
  const GroupContext ctx = p.group();
  if (h.n() != p.ambient()) throw DimensionMismatch("loop and factor have different sizes");
  auto mem = membership(h, ctx);
  if (!mem.member) throw NotAMember("loop to dress: " + mem.violation);
  const GR& a = p.alpha;
  const bool g2 = ctx.kind == GroupKind::G2;
  requireHolomorphic(h, a);
  if (g2) requireHolomorphic(h, a.conj());
  MatrixC hInv = invertAt(h, a);
  if (g2) invertAt(h, a.conj());

  DressingOutcome out;
  if (!g2) {
    auto d = dressOne(p, h, hInv);
    out.conjugated = std::move(d.conjugated);
    out.rightFactor = p;
    out.rightFactor.W = d.moved;
    out.moved.emplace_back(p.variant == FactorVariant::SO ? "L'" : "W'", d.moved);
  } else {
    SimpleFactorSpec pair = g2AsPair(p);
    auto k = dressOne(SimpleFactorSpec::so(a, pair.K), h, hInv);
    auto l = dressOne(SimpleFactorSpec::so(a, pair.W), k.conjugated, invertAt(k.conjugated, a));
    out.conjugated = std::move(l.conjugated);
    out.rightFactor = SimpleFactorSpec::g2pair(a, l.moved, k.moved);
    out.moved = {{"L'", l.moved}, {"K'", k.moved}};
    auto v = validate(out.rightFactor);
    if (!v.ok) throw IdentityFailure("moved pair fails the pair condition: " + v.clause);
  }

  if (out.conjugated.poleOrder(a) > 0 || (g2 && out.conjugated.poleOrder(a.conj()) > 0))
    throw IdentityFailure("dressed loop still has a pole at " + a.str());
  auto cm = membership(out.conjugated, ctx);
  if (!cm.member) throw IdentityFailure("dressed loop left the group: " + cm.violation);
  return out;
}

Permuted permute(const SimpleFactorSpec& p1, const SimpleFactorSpec& p2) {
  requireValid(p1);
  requireValid(p2);
  const GroupContext c1 = p1.group(), c2 = p2.group();
  if (c1.kind != c2.kind || c1.n != c2.n) throw InvalidSpec("factors belong to different groups");
  const GR& a = p1.alpha;
  const GR& b = p2.alpha;
  if (a == b || a == b.conj()) throw PoleClash("poles coincide: " + a.str() + ", " + b.str());

  Permuted out;
  std::vector<PieceFactor> lhs, rhs;
  if (c1.kind != GroupKind::G2) {
    out.p2hat = p2;
    out.p2hat.W = p2.W.image(evaluate(p1, b));
    out.p1hat = p1;
    out.p1hat.W = p1.W.image(evaluate(p2, a));
    lhs = join(pieceChain(out.p2hat), pieceChain(p1));
    rhs = join(pieceChain(out.p1hat), pieceChain(p2));
  } else {
    SimpleFactorSpec lk = g2AsPair(p1), mn = g2AsPair(p2);
    MatrixLoop pMN = materialize(mn), pLK = materialize(lk);
    // (p_{a,X'} * h)(a) with X = h(a)^-1 X' is p_{a,X'} h p_{a,X}^-1 at a.
    auto starAt = [](const GR& at, const Subspace& xp, const Subspace& x, const MatrixLoop& h) {
      return (materialize(SimpleFactorSpec::so(at, xp)) * h * inverse_closed_form(SimpleFactorSpec::so(at, x))).eval(at);
    };
    Subspace kp = lk.K.image(pMN.eval(a));
    Subspace lp = lk.W.image(starAt(a, kp, lk.K, pMN));
    Subspace np = mn.K.image(pLK.eval(b));
    Subspace mp = mn.W.image(starAt(b, np, mn.K, pLK));
    out.p1hat = SimpleFactorSpec::g2pair(a, lp, kp);
    out.p2hat = SimpleFactorSpec::g2pair(b, mp, np);
    for (const auto* s : {&out.p1hat, &out.p2hat}) {
      auto v = validate(*s);
      if (!v.ok) throw IdentityFailure("moved pair fails the pair condition: " + v.clause);
    }
    lhs = join(pieceChain(out.p1hat), pieceChain(mn));
    rhs = join(pieceChain(out.p2hat), pieceChain(lk));
  }
  if (!chainsEqual(lhs, rhs)) throw IdentityFailure("permuted products differ");
  return out;
}

}  // namespace rloop
