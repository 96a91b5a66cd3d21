#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scf/verma.hpp"

namespace scf {

// coef * (word applied right to left)
struct WordTerm {
  Scalar coef;
  std::vector<GenMode> word;
};
using OperatorExpr = std::vector<WordTerm>;

// Word syntax: space separated tokens, "d" for L_{-1}, "F0"/"Fb0" for the
// lowering zero modes, any other token is an odd generator at mode -1/2.
std::vector<GenMode> parse_word(AlgebraId id, std::string_view text);

// N2: v Gp_v Gm_v GpGm_v; N3: a1..a8; SmallN4: a1..a16; BigN4: b1..b16
std::vector<std::string> named_vector_names(AlgebraId id);
// 1-based index of a name, throws std::invalid_argument on unknown names
int named_vector_index(AlgebraId id, std::string_view name);

// The operator u_i, with the sl2 highest weights set to lam (and lam_bar).
OperatorExpr u_operator(AlgebraId id, int i, const Scalar& lam, const Scalar& lam_bar);

VermaVector apply_operator(const VermaModule& m, const OperatorExpr& op, const VermaVector& target);

// u_i^{Lambda} v for the module's own highest weight
VermaVector named_vector(const VermaModule& m, std::string_view name);
VermaVector named_vector(const VermaModule& m, int i);

// u_i^{lam'} applied to target; lam_bar' defaults to lam'
VermaVector apply_u(const VermaModule& m, int i, const Scalar& lam_prime, const VermaVector& target,
                    const std::optional<Scalar>& lam_bar_prime = std::nullopt);

// Generators checked by is_singular: all annihilation modes of degree 1/2 and 1.
std::vector<GenMode> singular_check_set(const VermaModule& m);
// The smaller sets that suffice on E0-invariant weight vectors (N3: f_{1/2}, Psi_{1/2};
// SmallN4: F_1, G-+_{1/2}, G--_{1/2}); the full set elsewhere.
std::vector<GenMode> reduced_check_set(const VermaModule& m);

struct SingularCheck {
  bool singular = false;
  std::string reason;              // empty when singular
  std::optional<GenMode> witness;  // a generator with nonzero image
  VermaVector image;
  std::vector<GenMode> checked;
};

// weight vector, E0 (and E0-bar) invariant, killed by every generator of the check set
SingularCheck is_singular(const VermaModule& m, const VermaVector& v, bool reduced = false);

// Basis of the E0 (and E0-bar) invariants, weight space by weight space, for levels 0..level_cutoff2.
std::vector<VermaVector> e0_invariants(const VermaModule& m, int level_cutoff2);

struct SingularReport {
  WeightKey weight;
  Scalar l0;
  std::vector<VermaVector> basis;
  std::vector<GenMode> checked;
};

// Exact singular subspaces of all weight spaces at levels 1/2 .. dpow_cutoff + n_odd/2.
std::vector<SingularReport> find_singular(const VermaModule& m, int dpow_cutoff);

// The singular subspace of one weight space.
std::vector<VermaVector> singular_subspace(const VermaModule& m, const WeightKey& w);

struct LocusEntry {
  WeightKey weight;
  ParamPoly condition;  // primitive polynomial in Delta, zero when the family exists for all Delta
  std::optional<Rational> delta;
  std::vector<VermaVector> family;  // basis at delta
};

struct LocusReport {
  std::vector<LocusEntry> entries;
  // factors of the rank-drop polynomials without rational roots, not analysed further
  std::vector<ParamPoly> residual;
};

// Delta is taken symbolic; Lambda (Lambda-bar) must be concrete.
LocusReport singular_locus(AlgebraId id, const Scalar& lambda, const std::optional<Scalar>& lambda_bar, int dpow_cutoff);

}  // namespace scf
