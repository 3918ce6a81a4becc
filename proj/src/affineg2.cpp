#include "rloop/affineg2.hpp"

#include "rloop/errors.hpp"
#include "rloop/octonion.hpp"

namespace rloop {

AffineG2Element AffineG2Element::fromBlocks(const MatrixC& c, const MatrixC& b, const VectorC& x, const VectorC& y) {
  MatrixC m(8, 8);
  m.setBlock(0, 0, c);
  m.setBlock(0, 4, -b.transpose());
  m.setBlock(4, 0, b);
  m.setBlock(4, 4, nu(c));
  m.setBlock(0, 7, MatrixC::fromColumns({x}, 4));
  m.setBlock(4, 7, MatrixC::fromColumns({y}, 3));
  return {m};
}

std::string affineViolation(const MatrixC& m) {
  if (m.rows() != 8 || m.cols() != 8) return "not 8x8";
  for (int j = 0; j < 8; ++j)
    if (!m(7, j).isZero()) return "last row is not zero";
  MatrixC x = m.block(0, 0, 7, 7);
  if (!(x.transpose() == -x)) return "7x7 block is not antisymmetric";
  if (!g2_lie_relations(x)) return "7x7 block is not in g2";
  return {};
}

bool isAffineG2(const MatrixC& m) { return affineViolation(m).empty(); }

MatrixC affineS() {
  std::vector<GR> d(8, GR(1));
  for (int i = 0; i < 4; ++i) d[i] = GR(-1);
  return MatrixC::diagonal(d);
}

std::pair<AffineG2Element, AffineG2Element> hat_involutions(const AffineG2Element& xi) {
  const MatrixC s = affineS();
  return {{xi.m.conj()}, {s * xi.m * s}};
}

bool inPhat(const AffineG2Element& x) { return isAffineG2(x.m) && hat_involutions(x).second.m == -x.m; }
bool inKhat(const AffineG2Element& x) { return isAffineG2(x.m) && hat_involutions(x).second.m == x.m; }

std::vector<AffineG2Element> affineBasis() {
  std::vector<AffineG2Element> out;
  for (const auto& v : nullspace(g2RelationMatrix())) {
    AffineG2Element e = AffineG2Element::zero();
    e.m.setBlock(0, 0, so7FromCoords(v));
    out.push_back(e);
  }
  for (int i = 0; i < 7; ++i) {
    AffineG2Element e = AffineG2Element::zero();
    e.m(i, 7) = GR(1);
    out.push_back(e);
  }
  return out;
}

AffineG2Element affine_bracket(const AffineG2Element& a, const AffineG2Element& b) {
  for (const auto* x : {&a, &b}) {
    auto v = affineViolation(x->m);
    if (!v.empty()) throw ClosureViolation("bracket argument: " + v);
  }
  AffineG2Element out{commutator(a.m, b.m)};
  auto v = affineViolation(out.m);
  if (!v.empty()) throw ClosureViolation("bracket result: " + v);
  return out;
}

AffineG2Element embedP(const MatrixC& a) {
  AffineG2Element e = AffineG2Element::zero();
  e.m.setBlock(0, 4, -a.transpose());
  e.m.setBlock(4, 0, a);
  return e;
}

const TorusData& torus() {
  static const TorusData t = [] {
    TorusData d;
    auto row = [](int a, int b, int c, int e) { return std::vector<GR>{GR(a), GR(b), GR(c), GR(e)}; };
    d.a1 = MatrixC::fromRows({row(1, 0, 0, 0), row(0, 0, 0, 0), row(0, 0, 1, 0)});
    d.a2 = MatrixC::fromRows({row(0, 0, 0, 0), row(0, 0, 0, 1), row(0, 0, 1, 0)});
    d.b1 = embedP(d.a1);
    d.b2 = embedP(d.a2);
    if (!affine_bracket(d.b1, d.b2).m.isZero()) throw AlgorithmError("torus elements do not commute");
    return d;
  }();
  return t;
}

MatrixC abelianB(const AbelianData& d, bool correctedEntry) {
  const GR z;
  return MatrixC::fromRows({{z, d.p1, d.q1 - d.p2, -(d.p3 + d.q2)},
                            {-d.q2, -d.p2, -((correctedEntry ? d.p1 : d.p2) + d.q3), z},
                            {-d.q1, -d.p3, z, d.q3}});
}

VectorC abelianX(const AbelianData& d) { return {d.r1, GR(), d.r3, d.r2}; }

AffineG2Element v_from_pqr(const AbelianData& d, bool correctedEntry) {
  AffineG2Element v = embedP(abelianB(d, correctedEntry));
  v.m.setBlock(0, 7, MatrixC::fromColumns({abelianX(d)}, 4));
  return v;
}

CurvatureCoefficients curvature_coefficients(const AffineG2Element& v) {
  if (!inPhat(v)) throw NotInPhat("v is not in the -1 eigenspace of sigma-hat");
  const TorusData& t = torus();
  MatrixC c1v = commutator(t.b1.m, v.m), c2v = commutator(t.b2.m, v.m);
  return {commutator(t.b1.m, t.b2.m), commutator(t.b1.m, c2v) + commutator(c1v, t.b2.m), commutator(c1v, c2v)};
}

AffineG2Element theta_curvature(const AffineG2Element& v, const GR& lambda) {
  if (!inPhat(v)) throw NotInPhat("v is not in the -1 eigenspace of sigma-hat");
  const TorusData& t = torus();
  MatrixC t1 = lambda * t.b1.m + commutator(t.b1.m, v.m);
  MatrixC t2 = lambda * t.b2.m + commutator(t.b2.m, v.m);
  return {commutator(t1, t2)};
}

bool is_flat(const AffineG2Element& v) {
  auto c = curvature_coefficients(v);
  return c.c2.isZero() && c.c1.isZero() && c.c0.isZero();
}

}  // namespace rloop
