#include "rloop/io.hpp"

namespace rloop {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing '") + key + "'");
  return *it;
}

int intField(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer()) bad(where + "." + key, "expected an integer");
  return v.get<int>();
}

std::string stringField(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_string()) bad(where + "." + key, "expected a string");
  return v.get<std::string>();
}

const Json& arrayField(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_array()) bad(where + "." + key, "expected an array");
  return v;
}

Json groupFields(const GroupContext& g, const std::optional<TwistContext>& tw) {
  Json j = {{"group", g.tag()}, {"n", g.n}};
  if (tw) j["twist"] = tw->tag();
  return j;
}

std::pair<GroupContext, std::optional<TwistContext>> groupFromJson(const Json& j) {
  std::string tag = stringField(j, "group", "document");
  int n = intField(j, "n", "document");
  try {
    GroupContext g = GroupContext::fromTag(tag, n);
    std::optional<TwistContext> tw;
    if (j.contains("twist")) {
      tw = TwistContext::fromTag(stringField(j, "twist", "document"), g.n);
      if (tw->group().kind != g.kind || tw->group().n != g.n) bad("document.twist", "does not match the group");
    }
    return {g, tw};
  } catch (const InvalidSpec& e) {
    bad("document.group", e.what());
  }
}

}  // namespace

Json parseJsonText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    int line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON", line, col);
  }
}

std::string dumpJson(const Json& j) { return j.dump(2) + "\n"; }

Json toJson(const GR& z) { return z.str(); }

Json toJson(const RF& f) {
  Json num = Json::array(), den = Json::array();
  for (const auto& c : f.numer().coeffs()) num.push_back(toJson(c));
  for (const auto& d : f.den()) den.push_back({{"root", toJson(d.root)}, {"mult", d.mult}});
  return {{"num", num}, {"den", den}, {"scale", toJson(f.scale())}};
}

Json toJson(const VectorC& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(toJson(x));
  return out;
}

Json toJson(const MatrixC& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) rows.push_back(toJson(m.row(r)));
  return rows;
}

Json toJson(const Subspace& w) {
  Json b = Json::array();
  for (const auto& v : w.vectors()) b.push_back(toJson(v));
  return b;
}

Json toJson(const SimpleFactorSpec& s) {
  Json j = {{"variant", variantTag(s.variant)}, {"alpha", toJson(s.alpha)}, {"n", s.ambient()}, {"W", toJson(s.W)}};
  if (s.variant == FactorVariant::G2Pair) j["K"] = toJson(s.K);
  return j;
}

Json toJson(const LoopDocument& d) {
  Json j = groupFields(d.group, d.twist);
  Json rows = Json::array();
  for (int r = 0; r < d.loop.n(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < d.loop.n(); ++c) row.push_back(toJson(d.loop(r, c)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

Json toJson(const FactorEntry& e) {
  Json j = {{"inverted", e.inverted}};
  if (!e.twisted) {
    j["spec"] = toJson(e.spec);
    return j;
  }
  j["q"] = {{"base", toJson(e.qspec.base)}, {"twist", e.qspec.twist.tag()}};
  if (!e.parts.empty()) {
    Json parts = Json::array();
    for (const auto& p : e.parts) parts.push_back(toJson(p));
    j["parts"] = parts;
  }
  return j;
}

Json toJson(const AuditStep& s) {
  Json j = {{"alpha", toJson(s.alpha)},
            {"phase", s.phase},
            {"branch", s.branch},
            {"before", {s.before.k, s.before.rank}},
            {"after", {s.after.k, s.after.rank}},
            {"factors", s.factors},
            {"decreased", s.decreased()}};
  if (s.phase == "zero") {
    j["zeroBefore"] = s.zeroBefore;
    j["zeroAfter"] = s.zeroAfter;
  }
  return j;
}

Json toJson(const FactorizationResult& r, bool withSteps) {
  Json j = groupFields(r.group, r.twist);
  Json fs = Json::array();
  for (const auto& f : r.factors) fs.push_back(toJson(f));
  j["factors"] = fs;
  j["budget"] = r.budget;
  j["iterations"] = r.iterations;
  j["residual"] = "identity";
  if (withSteps) {
    Json st = Json::array();
    for (const auto& s : r.steps) st.push_back(toJson(s));
    j["steps"] = st;
  }
  return j;
}

GR scalarFromJson(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return GR(j.get<long>());
  if (!j.is_string()) bad(where, "expected a scalar string");
  try {
    return GR::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    bad(where, e.what());
  }
}

RF rfFromJson(const Json& j, const std::string& where) {
  if (j.is_string() || j.is_number_integer()) return RF(scalarFromJson(j, where));
  std::vector<GR> num;
  const Json& nj = arrayField(j, "num", where);
  for (size_t i = 0; i < nj.size(); ++i) num.push_back(scalarFromJson(nj[i], where + ".num[" + std::to_string(i) + "]"));
  std::vector<DenFactor> den;
  const Json& dj = arrayField(j, "den", where);
  for (size_t i = 0; i < dj.size(); ++i) {
    std::string w = where + ".den[" + std::to_string(i) + "]";
    int mult = intField(dj[i], "mult", w);
    if (mult < 1) bad(w, "multiplicity must be positive");
    den.push_back({scalarFromJson(field(dj[i], "root", w), w + ".root"), mult});
  }
  GR scale = j.contains("scale") ? scalarFromJson(j["scale"], where + ".scale") : GR(1);
  return RF::make(Polynomial(num), den, scale);
}

Subspace subspaceFromJson(const Json& j, int n, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a list of vectors");
  std::vector<VectorC> vs;
  for (size_t i = 0; i < j.size(); ++i) {
    std::string w = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n) bad(w, "expected a vector of length " + std::to_string(n));
    VectorC v;
    for (size_t k = 0; k < j[i].size(); ++k) v.push_back(scalarFromJson(j[i][k], w + "[" + std::to_string(k) + "]"));
    vs.push_back(std::move(v));
  }
  return Subspace::span(vs, n);
}

SimpleFactorSpec specFromJson(const Json& j) {
  SimpleFactorSpec s;
  s.variant = variantFromTag(stringField(j, "variant", "spec"));
  s.alpha = scalarFromJson(field(j, "alpha", "spec"), "spec.alpha");
  int n = intField(j, "n", "spec");
  if (n < 1) bad("spec.n", "must be positive");
  s.W = subspaceFromJson(field(j, "W", "spec"), n, "spec.W");
  if (s.variant == FactorVariant::G2Pair) s.K = subspaceFromJson(field(j, "K", "spec"), n, "spec.K");
  return s;
}

LoopDocument loopFromJson(const Json& j) {
  auto [g, tw] = groupFromJson(j);
  const Json& rows = arrayField(j, "entries", "document");
  const int n = g.dim();
  if (static_cast<int>(rows.size()) != n) bad("document.entries", "expected " + std::to_string(n) + " rows");
  MatrixLoop m(n);
  for (int r = 0; r < n; ++r) {
    std::string w = "entries[" + std::to_string(r) + "]";
    if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != n) bad(w, "expected " + std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c) m(r, c) = rfFromJson(rows[r][c], w + "[" + std::to_string(c) + "]");
  }
  return {g, tw, m};
}

FactorEntry entryFromJson(const Json& j, const GroupContext& group) {
  if (!j.is_object()) bad("factor", "expected an object");
  bool inv = j.contains("inverted") && j["inverted"].is_boolean() && j["inverted"].get<bool>();
  if (j.contains("spec")) return FactorEntry::simple(specFromJson(j["spec"]), inv);
  const Json& q = field(j, "q", "factor");
  TwistedQSpec qs{specFromJson(field(q, "base", "factor.q")), TwistContext::fromTag(stringField(q, "twist", "factor.q"), group.n)};
  std::vector<SimpleFactorSpec> parts;
  if (j.contains("parts"))
    for (const auto& p : j["parts"]) parts.push_back(specFromJson(p));
  if (!parts.empty() && parts.size() != 2) bad("factor.parts", "expected two constituents");
  return FactorEntry::q(qs, inv, parts);
}

FactorizationResult resultFromJson(const Json& j) {
  FactorizationResult r;
  std::tie(r.group, r.twist) = groupFromJson(j);
  for (const auto& f : arrayField(j, "factors", "result")) r.factors.push_back(entryFromJson(f, r.group));
  if (j.contains("budget") && j["budget"].is_number_integer()) r.budget = j["budget"].get<int>();
  if (j.contains("iterations") && j["iterations"].is_number_integer()) r.iterations = j["iterations"].get<int>();
  return r;
}

VectorC parseVector(const std::string& text) {
  VectorC out;
  size_t start = 0;
  while (true) {
    size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto first = item.find_first_not_of(" \t"), last = item.find_last_not_of(" \t");
    item = first == std::string::npos ? "" : item.substr(first, last - first + 1);
    out.push_back(GR::parse(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace rloop
