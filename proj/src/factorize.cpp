#include "rloop/factorize.hpp"

#include <algorithm>

#include "rloop/octonion.hpp"

namespace rloop {

MatrixLoop FactorEntry::loop() const {
  if (!twisted) return inverted ? inverse_closed_form(spec) : materialize(spec);
  if (parts.empty()) {
    TwistedQ q = make_twisted_q(qspec);
    return inverted ? twistedQInverse(q) : q.loop;
  }
  if (inverted) return inverse_closed_form(parts[1]) * inverse_closed_form(parts[0]);
  return materialize(parts[0]) * materialize(parts[1]);
}

std::vector<PieceFactor> FactorEntry::chain() const {
  if (!twisted) return pieceChain(spec, inverted);
  const auto ps = parts.empty() ? make_twisted_q(qspec).constituents : parts;
  auto a = pieceChain(ps[inverted ? 1 : 0], inverted);
  auto b = pieceChain(ps[inverted ? 0 : 1], inverted);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string FactorEntry::str() const {
  std::string s = twisted ? "q[" + qspec.twist.tag() + "](" + qspec.base.str() + ")" : spec.str();
  return inverted ? s + "^-1" : s;
}

MatrixLoop FactorizationResult::product() const {
  MatrixLoop p = MatrixLoop::identity(group.dim());
  for (const auto& f : factors) p = p * f.loop();
  return p;
}

namespace {

Subspace firstLine(const Subspace& v) { return Subspace::span({v.vec(0)}, v.ambient()); }

void requireMember(const MatrixLoop& g, const GroupContext& ctx, const TwistContext* tw) {
  auto m = membership(g, ctx);
  if (!m.member) throw NotAMember("not in the " + ctx.tag() + " loop group: " + m.violation);
  if (!isNormalized(g)) throw NotAMember("loop is not normalized at infinity");
  if (!isReal(g, ctx)) throw NotAMember("loop violates the reality condition");
  if (tw && !isTwisted(g, *tw)) throw NotTwisted("loop violates the twisting condition for " + tw->tag());
}

class Factorizer {
 public:
  Factorizer(const MatrixLoop& g, const GroupContext& ctx, const TwistContext* tw) : g_(g), ctx_(ctx), tw_(tw) {
    res_.group = ctx;
    if (tw) res_.twist = *tw;
    res_.budget = budgetFor(g);
  }

  FactorizationResult run() {
    while (true) {
      auto rep = nextRep();
      if (!rep) break;
      switch (ctx_.kind) {
        case GroupKind::CSp:
          processCsp(*rep);
          break;
        case GroupKind::SO:
          processSo(*rep);
          break;
        case GroupKind::G2:
          processG2(*rep);
          break;
        case GroupKind::GL:
          throw InvalidSpec("GL loops are not factored");
      }
    }
    // Pole-free and normalized: anything but Id contradicts Liouville.
    if (!g_.isIdentity()) throw NonIdentityResidual("pole-free residual is not the identity loop");
    res_.iterations = static_cast<int>(res_.steps.size());
    return std::move(res_);
  }

 private:
  MatrixLoop g_;
  GroupContext ctx_;
  const TwistContext* tw_;
  FactorizationResult res_;
  int used_ = 0;

  int budgetFor(const MatrixLoop& g) const {
    int total = 0;
    std::optional<RF> c;
    if (ctx_.kind == GroupKind::CSp) c = cspMultiplier(g);
    for (const auto& p : pole_spectrum(g)) {
      total += 2 * p.degree.k * ctx_.dim();
      if (c) total += ctx_.n * c->zeroOrder(p.alpha.conj());
    }
    return 4 * total;
  }

  std::optional<GR> nextRep() const {
    std::optional<GR> best;
    for (const auto& r : g_.poles()) {
      if (r.isReal()) throw InvalidRealPole("real pole at " + r.str());
      GR rep = tw_ ? GR(Rational(abs(r.re())), Rational(abs(r.im()))) : (sgn(r.im()) > 0 ? r : r.conj());
      if (!best || rep < *best) best = rep;
    }
    return best;
  }

  bool twistedOffAxis(const GR& a) const { return tw_ && !a.isImaginary(); }
  bool twistedAxis(const GR& a) const { return tw_ && a.isImaginary(); }

  void tick() {
    if (++used_ > res_.budget) throw NonTermination("iteration budget of " + std::to_string(res_.budget) + " exhausted");
  }

  // Multiply by the element itself (record its inverse) or by its inverse.
  void apply(const SimpleFactorSpec& s, bool byInverse = false) {
    tick();
    if (twistedOffAxis(s.alpha)) {
      if (byInverse) throw std::logic_error("q-elements are applied directly");
      TwistedQ q = make_twisted_q({s, *tw_});
      g_ = q.loop * g_;
      res_.factors.push_back(FactorEntry::q({s, *tw_}, true, q.constituents));
      lastQ_ = std::move(q);
      return;
    }
    if (tw_ && !axisFactorTwisted(s, *tw_)) throw AlgorithmError("axis factor is not twisted: " + s.str());
    g_ = (byInverse ? inverse_closed_form(s) : materialize(s)) * g_;
    res_.factors.push_back(FactorEntry::simple(s, !byInverse));
  }

  std::optional<TwistedQ> lastQ_;

  void record(AuditStep step) {
    if (!step.decreased())
      throw NonTermination("step at " + step.alpha.str() + " did not lower the total degree: " + step.before.str() +
                           " -> " + step.after.str());
    res_.steps.push_back(std::move(step));
  }

  // ------------------------------------------------------------------ CSp

  int detZero(const GR& a) const {
    auto c = cspMultiplier(g_);
    if (!c) throw AlgorithmError("lost the symplectic multiplier");
    return ctx_.n * c->zeroOrder(a);
  }

  void processCsp(const GR& a) {
    const FormContext form = ctx_.form();
    const auto flavor = twistedAxis(a) ? LagrangianFlavor::Real : LagrangianFlavor::Any;
    std::vector<VectorC> e;
    for (int i = 0; i < ctx_.n; ++i) e.push_back(unitVec(2 * ctx_.n, i));
    const Subspace w0 = Subspace::span(e, 2 * ctx_.n);

    while (true) {
      auto lr = laurent_at(g_, a, 0);
      if (lr.degree.k == 0) break;
      auto c = cspMultiplier(g_);
      AuditStep step{a, "pole", "", lr.degree, {}};
      Subspace w;
      if (c->poleOrder(a) == 2 * lr.degree.k) {
        step.branch = "invertible";
        w = w0;
      } else {
        step.branch = "isotropic";
        w = extend_to_lagrangian(Subspace::columnSpace(lr.expansion.at(-lr.degree.k)), form, flavor);
      }
      apply(SimpleFactorSpec::csp(a, w));
      step.after = total_degree(g_, a);
      record(std::move(step));
    }

    while (true) {
      int z = detZero(a);
      if (z == 0) break;
      MatrixC g0 = g_.eval(a);
      AuditStep step{a, "zero", "", {}, {}, z};
      Subspace w;
      if (g0.isZero()) {
        step.branch = "vanishing";
        w = w0;
      } else {
        step.branch = "lagrangian";
        Subspace u = extend_to_lagrangian(Subspace::columnSpace(g0), form, flavor);
        w = u.conj().image(form.J);
      }
      // p_{a,W}^-1 = p_{conj a,W}; off the axis only the q-element of the latter is twisted.
      if (twistedOffAxis(a))
        apply(SimpleFactorSpec::csp(a.conj(), w));
      else
        apply(SimpleFactorSpec::csp(a, w), true);
      step.after = total_degree(g_, a);
      if (step.after.k != 0) throw AlgorithmError("zero phase created a pole at " + a.str());
      step.zeroAfter = detZero(a);
      record(std::move(step));
    }
  }

  // ------------------------------------------------------------------- SO

  Subspace pickLine(const Subspace& v, const GR& a) const {
    return twistedAxis(a) ? antilinear_fixed_line(v, tw_->s) : firstLine(v);
  }

  void processSo(const GR& a) {
    while (true) {
      auto lr = laurent_at(g_, a, 0);
      if (lr.degree.k == 0) break;
      AuditStep step{a, "pole", "line", lr.degree, {}};
      Subspace l = pickLine(Subspace::columnSpace(lr.expansion.at(-lr.degree.k)), a);
      apply(SimpleFactorSpec::so(a, l));
      step.after = total_degree(g_, a);
      record(std::move(step));
    }
  }

  // ------------------------------------------------------------------- G2

  void processG2(const GR& a) {
    while (true) {
      auto lr = laurent_at(g_, a, 1);
      const int k = lr.degree.k;
      if (k == 0) break;
      if (lr.degree.rank > 2) throw RankSurprise("rank " + std::to_string(lr.degree.rank) + " at a G2 pole");
      AuditStep step{a, "pole", k >= 2 ? "plane" : "pair", lr.degree, {}};
      if (k >= 2)
        stepHighOrder(a, lr.expansion.at(-k), lr.expansion.at(-k + 1));
      else
        step.factors = stepSimplePole(a);
      step.after = total_degree(g_, a);
      record(std::move(step));
    }
  }

  void stepHighOrder(const GR& a, const MatrixC& gk, const MatrixC& gk1) {
    const bool axis = twistedAxis(a);
    Subspace l = pickLine(Subspace::columnSpace(gk), a);
    VectorC lv = l.vec(0);
    if (axis) {
      // A spanning vector with s conj(l) = l, so that the averaged preimage still maps to it.
      VectorC sl = tw_->s * conjVec(lv);
      lv = isZeroVec(addVec(lv, sl)) ? scaleVec(subVec(lv, sl), GR::I()) : addVec(lv, sl);
    }
    auto v = solve(gk, lv);
    if (!v) throw AlgorithmError("no preimage of the chosen line");
    if (axis) {
      VectorC sv = tw_->s * conjVec(*v);
      v = scaleVec(addVec(*v, sv), GR(Rational(1, 2)));
      if (!(gk * *v == lv)) throw AlgorithmError("fixed preimage lost");
    }
    VectorC w = gk1 * *v;
    Subspace b = multiplier_plane(l);
    VectorC b1 = b.vec(0), b2 = b.vec(1);
    GR c1 = bilinearForm(w, b1), c2 = bilinearForm(w, b2);
    Subspace m;
    if (c1.isZero() && c2.isZero())
      m = axis ? antilinear_fixed_line(b, tw_->s) : Subspace::span({b1}, 7);
    else
      m = Subspace::span({subVec(scaleVec(b1, c2), scaleVec(b2, c1))}, 7);
    apply(SimpleFactorSpec::g2(a, l + m));
  }

  int stepSimplePole(const GR& a) {
    if (twistedAxis(a)) {
      // Fixed lines M then N; the pair factor p_{a,N} p_{a,M} is twisted.
      auto lr = laurent_at(g_, a, 0);
      Subspace m = antilinear_fixed_line(Subspace::columnSpace(lr.expansion.at(-1)), tw_->s);
      MatrixLoop g1 = materialize(SimpleFactorSpec::so(a, m)) * g_;
      auto lr1 = laurent_at(g1, a, 0);
      if (lr1.degree.k == 0) throw RankSurprise("simple G2 pole of rank 1");
      Subspace n = antilinear_fixed_line(Subspace::columnSpace(lr1.expansion.at(-1)), tw_->s);
      apply(SimpleFactorSpec::g2pair(a, n, m));
      return 1;
    }
    auto specs = split_simple_pole_pair(g_, a);
    // g = p_{C1} p_{C2} g'; multiply by p_{C1}^-1 = p_{a, conj C1} first.
    SimpleFactorSpec first = SimpleFactorSpec::g2(a, specs[0].W.conj());
    if (!twistedOffAxis(a)) {
      apply(first);
      if (specs.size() == 2) apply(SimpleFactorSpec::g2(a, specs[1].W.conj()));
      return static_cast<int>(specs.size());
    }
    apply(first);
    if (specs.size() == 2) {
      // The q-element left P1 (holomorphic at a) in front of p_{C2}. Dress the
      // lines of C2 through P1 one at a time, then remove the dressed pair.
      MatrixLoop p1 = materialize(lastQ_->constituents[0]);
      SimpleFactorSpec c2 = g2AsPair(specs[1]);
      Subspace lp = c2.W.image(p1.eval(a.conj()));
      MatrixLoop h1 = inverse_closed_form(SimpleFactorSpec::so(a, lp)) * p1 * materialize(SimpleFactorSpec::so(a, c2.W));
      Subspace kp = c2.K.image(h1.eval(a.conj()));
      apply(SimpleFactorSpec::g2pair(a, kp.conj(), lp.conj()));
    }
    return static_cast<int>(specs.size());
  }
};

}  // namespace

std::vector<SimpleFactorSpec> split_simple_pole_pair(const MatrixLoop& g, const GR& alpha) {
  auto lr = laurent_at(g, alpha, 0);
  if (lr.degree.k != 1) throw InvalidSpec("split_simple_pole_pair needs a simple pole at " + alpha.str());
  Subspace l1 = firstLine(Subspace::columnSpace(lr.expansion.at(-1)));
  MatrixLoop g1 = materialize(SimpleFactorSpec::so(alpha, l1)) * g;
  auto lr1 = laurent_at(g1, alpha, 0);
  if (lr1.degree.k == 0) throw RankSurprise("simple G2 pole of rank 1");
  Subspace l2 = firstLine(Subspace::columnSpace(lr1.expansion.at(-1)));
  Subspace l = l1.conj(), k = l2.conj();

  std::vector<SimpleFactorSpec> out;
  if ((l + l.conj()).hermitianComplement().contains(k)) {
    out.push_back(SimpleFactorSpec::g2(alpha, l + k));
  } else {
    Subspace b = multiplier_plane(l);
    VectorC kv = k.vec(0);
    MatrixC sys = MatrixC::fromColumns({mul_im7(conjVec(b.vec(0)), kv), mul_im7(conjVec(b.vec(1)), kv)}, 7);
    auto ns = nullspace(sys);
    if (ns.empty()) throw NoSplittingLine("no line R with conj(R).K = 0");
    VectorC r = addVec(scaleVec(b.vec(0), ns[0][0].conj()), scaleVec(b.vec(1), ns[0][1].conj()));
    Subspace rl = Subspace::span({r}, 7);
    out.push_back(SimpleFactorSpec::g2(alpha, l + rl));
    out.push_back(SimpleFactorSpec::g2(alpha, rl.conj() + k));
  }
  MatrixLoop lhs = MatrixLoop::identity(7);
  for (const auto& s : out) lhs = lhs * materialize(s);
  if (!(lhs == materialize(SimpleFactorSpec::so(alpha, l)) * materialize(SimpleFactorSpec::so(alpha, k))))
    throw AlgorithmError("G2 split does not reproduce p_L p_K");
  return out;
}

FactorizationResult factor_csp(const MatrixLoop& g) {
  if (g.n() % 2) throw DimensionMismatch("CSp loops have even size");
  GroupContext ctx = GroupContext::csp(g.n() / 2);
  requireMember(g, ctx, nullptr);
  return Factorizer(g, ctx, nullptr).run();
}

FactorizationResult factor_so(const MatrixLoop& g) {
  GroupContext ctx = GroupContext::so(g.n());
  requireMember(g, ctx, nullptr);
  return Factorizer(g, ctx, nullptr).run();
}

FactorizationResult factor_g2(const MatrixLoop& g) {
  if (g.n() != 7) throw DimensionMismatch("G2 loops are 7x7");
  GroupContext ctx = GroupContext::g2();
  requireMember(g, ctx, nullptr);
  return Factorizer(g, ctx, nullptr).run();
}

FactorizationResult factor_twisted(const MatrixLoop& g, const TwistContext& twist) {
  GroupContext ctx = twist.group();
  if (g.n() != ctx.dim()) throw DimensionMismatch("loop size does not match the twist flavor");
  requireMember(g, ctx, &twist);
  return Factorizer(g, ctx, &twist).run();
}

FactorizationResult factorize(const MatrixLoop& g, const GroupContext& ctx) {
  switch (ctx.kind) {
    case GroupKind::CSp:
      return factor_csp(g);
    case GroupKind::SO:
      return factor_so(g);
    case GroupKind::G2:
      return factor_g2(g);
    case GroupKind::GL:
      break;
  }
  throw InvalidSpec("GL loops are not factored");
}

bool chain_equals(const std::vector<PieceFactor>& chain, const MatrixLoop& g) {
  int deg = 0;
  for (const auto& p : chain) deg += p.denDegree();
  for (const auto& p : g.poles()) deg += g.poleOrder(p);
  for (int x = 0; x <= deg; ++x) {
    MatrixC m = MatrixC::identity(g.n());
    for (const auto& p : chain) m = m * p.eval(GR(x));
    if (!(m == g.eval(GR(x)))) return false;
  }
  return true;
}

bool verify_product(const FactorizationResult& result, const MatrixLoop& g) {
  try {
    std::vector<PieceFactor> chain;
    for (const auto& f : result.factors) {
      auto c = f.chain();
      chain.insert(chain.end(), c.begin(), c.end());
    }
    return chain_equals(chain, g);
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace rloop
