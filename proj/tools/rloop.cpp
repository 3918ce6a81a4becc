// Command-line front end. Every command reads and writes JSON documents.
// Exit codes: 0 ok, 1 validation failure, 2 algorithm failure, 3 parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rloop/affineg2.hpp"
#include "rloop/dressperm.hpp"
#include "rloop/io.hpp"
#include "rloop/octonion.hpp"
#include "rloop/random.hpp"

using namespace rloop;

namespace {

// Failed checks that are reported as a document rather than thrown.
struct CheckFailed {
  Json doc;
};

Json readDocument(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  return parseJsonText(buf.str());
}

Json poleReport(const MatrixLoop& g) {
  Json out = Json::array();
  for (const auto& p : pole_spectrum(g))
    out.push_back({{"alpha", toJson(p.alpha)}, {"k", p.degree.k}, {"rank", p.degree.rank}});
  return out;
}

Json cmdCheck(const std::string& path) {
  LoopDocument d = loopFromJson(readDocument(path));
  auto mem = membership(d.loop, d.group);
  auto sym = symmetry_check(d.loop, d.group, d.twist ? &*d.twist : nullptr);
  Json j = {{"member", mem.member}, {"normalized", sym.normalized}, {"real", sym.real}};
  if (!mem.member) j["violation"] = mem.violation;
  if (mem.multiplier) j["multiplier"] = toJson(*mem.multiplier);
  if (d.twist) j["twisted"] = sym.twisted;
  bool ok = mem.member && sym.normalized && sym.real && (!d.twist || sym.twisted);
  if (mem.member) j["poles"] = poleReport(d.loop);
  j["ok"] = ok;
  if (!ok) {
    if (!j.contains("violation"))
      j["violation"] = !sym.normalized ? "not the identity at infinity" : !sym.real ? "reality condition fails" : "twisting condition fails";
    throw CheckFailed{j};
  }
  return j;
}

Json cmdFactor(const std::string& path, bool trace) {
  LoopDocument d = loopFromJson(readDocument(path));
  FactorizationResult r = d.twist ? factor_twisted(d.loop, *d.twist) : factorize(d.loop, d.group);
  return toJson(r, trace);
}

Json cmdVerify(const std::string& loopPath, const std::string& resultPath) {
  LoopDocument d = loopFromJson(readDocument(loopPath));
  FactorizationResult r = resultFromJson(readDocument(resultPath));
  if (r.group.kind != d.group.kind || r.group.n != d.group.n) throw InvalidSpec("result and loop are for different groups");
  Json j = {{"verified", verify_product(r, d.loop)}};
  if (!j["verified"].get<bool>()) throw CheckFailed{j};
  return j;
}

Json cmdDress(const std::string& specPath, const std::string& loopPath) {
  SimpleFactorSpec p = specFromJson(readDocument(specPath));
  LoopDocument d = loopFromJson(readDocument(loopPath));
  DressingOutcome o = dress(p, d.loop);
  Json moved = Json::object();
  for (const auto& [name, w] : o.moved) moved[name] = toJson(w);
  return {{"conjugated", toJson(LoopDocument{d.group, std::nullopt, o.conjugated})},
          {"rightFactor", toJson(o.rightFactor)},
          {"moved", moved}};
}

Json cmdPermute(const std::string& p1Path, const std::string& p2Path) {
  Permuted r = permute(specFromJson(readDocument(p1Path)), specFromJson(readDocument(p2Path)));
  return {{"p2hat", toJson(r.p2hat)}, {"p1hat", toJson(r.p1hat)}, {"identity", "p2hat p1 = p1hat p2"}};
}

struct RandomOptions {
  std::string group = "so";
  int n = 3;
  int factors = 2;
  int poles = 2;
  int maxQ = -1;
  std::uint64_t seed = 1;
  std::string twist;
  std::string alpha;
};

Json cmdRandom(const RandomOptions& o) {
  if (o.factors < 1 || o.poles < 1) throw InvalidSpec("--factors and --poles must be positive");
  GroupContext g = GroupContext::fromTag(o.group, o.n);
  Rng rng(o.seed);
  if (o.twist.empty()) return toJson(LoopDocument{g, std::nullopt, random_loop(rng, g, o.factors, o.poles, true).loop});
  TwistContext tw = TwistContext::fromTag(o.twist, g.n);
  if (tw.group().kind != g.kind || tw.group().n != g.n) throw InvalidSpec("twist does not match the group");
  return toJson(LoopDocument{g, tw, random_twisted_loop(rng, tw, o.factors, o.poles, o.maxQ, true).loop});
}

Json cmdRandomSpec(const RandomOptions& o) {
  GroupContext g = GroupContext::fromTag(o.group, o.n);
  Rng rng(o.seed);
  GR a = o.alpha.empty() ? random_alpha(rng) : GR::parse(o.alpha);
  return toJson(random_spec(rng, g, a));
}

Json octaTable() {
  Json rows = Json::array();
  for (const auto& row : octonionTable()) {
    Json r = Json::array();
    for (const auto& u : row) r.push_back((u.sign < 0 ? "-" : "") + (u.unit == 0 ? std::string("1") : "e" + std::to_string(u.unit)));
    rows.push_back(r);
  }
  return rows;
}

VectorC vec7(const std::string& text) {
  VectorC v = parseVector(text);
  if (v.size() != 7) throw DimensionMismatch("expected 7 components");
  return v;
}

Json cmdOcta(const std::string& op, const std::vector<std::string>& vectors) {
  if (op == "table") return {{"table", octaTable()}};
  std::vector<VectorC> vs;
  for (const auto& t : vectors) vs.push_back(vec7(t));
  if (op == "mul") {
    if (vs.size() != 2) throw InvalidSpec("mul takes two vectors");
    return {{"product", toJson(mul_im7(vs[0], vs[1]))}};
  }
  if (op == "multiplier") {
    if (vs.size() != 1) throw InvalidSpec("multiplier takes one vector");
    return {{"plane", toJson(multiplier_plane(Subspace::span(vs, 7)))}};
  }
  if (op == "classify") {
    auto rep = coassoc_classify(Subspace::span(vs, 7));
    Json j = {{"complexCoassociative", rep.complexCoassociative}};
    if (rep.complexCoassociative) j["associativePart"] = toJson(rep.associativePart);
    return j;
  }
  throw InvalidSpec("unknown octa query '" + op + "'");
}

Json cmdAffine(const std::string& op, int a, int b, const std::string& pqr, const std::string& lambda, bool corrected) {
  if (op == "torus") {
    const TorusData& t = torus();
    return {{"a1", toJson(t.a1)}, {"a2", toJson(t.a2)}, {"b1", toJson(t.b1.m)}, {"b2", toJson(t.b2.m)}};
  }
  if (op == "bracket") {
    auto basis = affineBasis();
    if (a < 0 || b < 0 || a >= static_cast<int>(basis.size()) || b >= static_cast<int>(basis.size()))
      throw InvalidSpec("basis index out of range");
    return {{"bracket", toJson(affine_bracket(basis[a], basis[b]).m)}};
  }
  if (op == "curvature") {
    VectorC c = parseVector(pqr);
    if (c.size() != 9) throw DimensionMismatch("--pqr takes p1,p2,p3,q1,q2,q3,r1,r2,r3");
    AbelianData d{c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7], c[8]};
    AffineG2Element v = v_from_pqr(d, corrected);
    Json j = {{"v", toJson(v.m)}, {"inPhat", inPhat(v)}};
    if (!inPhat(v)) throw CheckFailed{j};
    j["curvature"] = toJson(theta_curvature(v, GR::parse(lambda)).m);
    j["flat"] = is_flat(v);
    return j;
  }
  throw InvalidSpec("unknown affine query '" + op + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorization of rational loops into simple factors"};
  app.require_subcommand(1);
  std::string in1, in2, outPath;
  bool trace = false;
  app.add_option("-o,--output", outPath, "Write the document here instead of stdout");

  auto* check = app.add_subcommand("check", "Membership, reality and twist report for a loop");
  check->add_option("loop", in1, "Loop document ('-' for stdin)")->required();
  auto* factor = app.add_subcommand("factor", "Factor a loop into simple factors");
  factor->add_option("loop", in1, "Loop document ('-' for stdin)")->required();
  factor->add_flag("--trace", trace, "Include the audit log");
  auto* verify = app.add_subcommand("verify", "Check that a factorization multiplies out to the loop");
  verify->add_option("loop", in1, "Loop document")->required();
  verify->add_option("result", in2, "Factorization result document")->required();
  auto* dressCmd = app.add_subcommand("dress", "Dress a loop by a simple factor");
  dressCmd->add_option("spec", in1, "Simple factor spec document")->required();
  dressCmd->add_option("loop", in2, "Loop holomorphic at the spec's pole")->required();
  auto* permuteCmd = app.add_subcommand("permute", "Swap two simple factors at distinct poles");
  permuteCmd->add_option("p1", in1, "First factor spec")->required();
  permuteCmd->add_option("p2", in2, "Second factor spec, pole distinct from the first")->required();

  RandomOptions ro;
  auto* random = app.add_subcommand("random", "Random loop as a product of simple or twisted factors");
  auto* randomSpec = app.add_subcommand("random-spec", "Random simple factor spec");
  for (auto* c : {random, randomSpec}) {
    c->add_option("--group", ro.group, "Group tag")->check(CLI::IsMember({"gl", "so", "csp", "g2"}));
    c->add_option("--n", ro.n, "so: matrix size, csp: half size, g2: 7");
    c->add_option("--seed", ro.seed, "RNG seed");
  }
  random->add_option("--factors", ro.factors, "Number of factors (q-elements count once)");
  random->add_option("--poles", ro.poles, "Maximum number of distinct pole pairs");
  random->add_option("--twist", ro.twist, "so-grassmannian:K, so-u, g2-so4 or csp-u");
  random->add_option("--max-q", ro.maxQ, "Cap on q-elements; further factors go to an axis pole");
  randomSpec->add_option("--alpha", ro.alpha, "Pole, e.g. 1+2*i");

  std::string op;
  std::vector<std::string> vectors;
  auto* octa = app.add_subcommand("octa", "Octonion table and plane queries");
  octa->add_option("query", op, "table | mul | multiplier | classify")->required();
  octa->add_option("--vec", vectors, "Comma separated vector in C^7, repeatable");

  int ia = 0, ib = 0;
  std::string pqr = "0,0,0,0,0,0,0,0,0", lambda = "1";
  bool corrected = false;
  auto* affine = app.add_subcommand("affine", "Affine g2 queries");
  affine->add_option("query", op, "torus | bracket | curvature")->required();
  affine->add_option("--a", ia, "Basis index for bracket");
  affine->add_option("--b", ib, "Basis index for bracket");
  affine->add_option("--pqr", pqr, "p1,p2,p3,q1,q2,q3,r1,r2,r3");
  affine->add_option("--lambda", lambda, "Spectral parameter for curvature");
  affine->add_flag("--corrected-entry", corrected, "Use -(p1+q3) in row 2, column 3 of B");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  int code = 0;
  Json out;
  try {
    if (*check) out = cmdCheck(in1);
    else if (*factor) out = cmdFactor(in1, trace);
    else if (*verify) out = cmdVerify(in1, in2);
    else if (*dressCmd) out = cmdDress(in1, in2);
    else if (*permuteCmd) out = cmdPermute(in1, in2);
    else if (*random) out = cmdRandom(ro);
    else if (*randomSpec) out = cmdRandomSpec(ro);
    else if (*octa) out = cmdOcta(op, vectors);
    else if (*affine) out = cmdAffine(op, ia, ib, pqr, lambda, corrected);
  } catch (const CheckFailed& f) {
    out = f.doc;
    code = 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const AlgorithmError& e) {
    std::cerr << "algorithm failure: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "algorithm failure: " << e.what() << "\n";
    return 2;
  }

  if (outPath.empty()) {
    std::cout << dumpJson(out);
  } else {
    std::ofstream f(outPath);
    f << dumpJson(out);
    if (!f) {
      std::cerr << "cannot write '" << outPath << "'\n";
      return 1;
    }
  }
  return code;
}
