#pragma once

// JSON documents for scalars, loops, factor specs and factorization results.
// Objects are emitted with sorted keys so equal values give identical bytes.

#include <optional>
#include <string>

#include "json.hpp"

#include "rloop/factorize.hpp"

namespace rloop {

using Json = nlohmann::json;

struct LoopDocument {
  GroupContext group;
  std::optional<TwistContext> twist;
  MatrixLoop loop;
};

// Text -> JSON; syntax errors become ParseError with line and column.
Json parseJsonText(const std::string& text);
std::string dumpJson(const Json& j);

Json toJson(const GR& z);
Json toJson(const RF& f);
Json toJson(const Subspace& w);
Json toJson(const MatrixC& m);  // rows
Json toJson(const VectorC& v);
Json toJson(const SimpleFactorSpec& s);
Json toJson(const LoopDocument& d);
Json toJson(const FactorEntry& e);
Json toJson(const AuditStep& s);
Json toJson(const FactorizationResult& r, bool withSteps);

GR scalarFromJson(const Json& j, const std::string& where);
RF rfFromJson(const Json& j, const std::string& where);
Subspace subspaceFromJson(const Json& j, int n, const std::string& where);
SimpleFactorSpec specFromJson(const Json& j);
LoopDocument loopFromJson(const Json& j);
FactorEntry entryFromJson(const Json& j, const GroupContext& group);
FactorizationResult resultFromJson(const Json& j);

// Comma separated scalars, e.g. "1,i,0".
VectorC parseVector(const std::string& text);

}  // namespace rloop
