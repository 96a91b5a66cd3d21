#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scf/singular.hpp"

namespace scf {

// Vector expressions: a sum of terms "coef * op ... op name".
//   coef   scalar in L, Lb (the module's Lambda, Lambda-bar), Delta, I, SQRT2; optional
//   op     d | F0 | Fb0 | u<i>[expr] | NAME:mode (any annihilation mode, e.g. Gmm:1/2)
//   name   a named vector of the module (a3, b15, GpGm_v, ...) or 0
// Operators apply right to left. Example: "-(L+4)*a5 + 2*d a3".
class VectorExprEvaluator {
 public:
  explicit VectorExprEvaluator(const VermaModule& m);
  VermaVector eval(std::string_view expr);

 private:
  VermaVector term(std::string_view text);
  const VermaVector& named(const std::string& name);
  Scalar coef(std::string_view text) const;

  const VermaModule& m_;
  ScalarVars vars_;
  std::map<std::string, VermaVector> cache_;
};

// One printed identity lhs = rhs in a Verma module with Delta given in terms of L.
struct IdentitySpec {
  std::string group;
  AlgebraId alg;
  std::string delta;  // expression in L
  std::string lhs, rhs;
  bool generic = true;        // checked in the generic-Lambda model
  std::vector<int> lambdas;   // concrete Lambda values (Lambda-bar = Lambda for BigN4)
  std::string correction;     // "lhs = rhs" that holds instead, for a known misprint
};

const std::vector<IdentitySpec>& identity_catalog();
std::vector<std::string> identity_groups();

struct IdentityResult {
  const IdentitySpec* spec = nullptr;
  std::string where;  // "generic" or "Lambda=3"
  bool holds = false;
  std::string difference;  // lhs - rhs when it fails
};

std::vector<IdentityResult> check_identity(const IdentitySpec& spec);
// checks "lhs = rhs" written as one string, same instantiations as spec
std::vector<IdentityResult> check_equation(const IdentitySpec& spec, std::string_view equation);

// Verma module for a catalog entry: Lambda concrete or, if nullopt, the generic model.
std::shared_ptr<VermaModule> identity_module(const IdentitySpec& spec, std::optional<int> lambda);

}  // namespace scf
