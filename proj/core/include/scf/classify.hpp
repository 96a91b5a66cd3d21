#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scf/singular.hpp"

namespace scf {

constexpr int kDefaultCutoff2 = 12;

// Levelwise exact bases (keyed by doubled level) of a subspace of a Verma module,
// computed for levels 0..cutoff2.
struct GradedSubspace {
  int cutoff2 = 0;
  std::map<int, Echelon<PBWKey>> levels;

  std::size_t dim(int level2) const;
  bool contains(const VermaVector& v) const;
  VermaVector reduce(const VermaVector& v) const;
  std::vector<VermaVector> basis(int level2) const;
};

// U(g) seeds truncated at cutoff2: closes the span under d, the odd generators of
// degree -1/2, the degree-0 part and the positive generators of degree <= 1.
GradedSubspace submodule_generated(const VermaModule& m, const std::vector<VermaVector>& seeds, int cutoff2);

// Closes the seed set of n under adjoining w with d w in the submodule (levels below
// cutoff2 - 2), keeping it proper. Returns the closure and the adjoined vectors.
struct TorsionResult {
  GradedSubspace base;  // generated by the seeds alone
  GradedSubspace sub;
  std::vector<VermaVector> adjoined;
};
TorsionResult torsion_closure(const VermaModule& m, const std::vector<VermaVector>& seeds, int cutoff2);

// dim (M/N) per doubled level 0..cutoff2
std::vector<std::size_t> quotient_dims(const VermaModule& m, const GradedSubspace& n);

struct RankResult {
  bool stabilized = false;
  int rank = 0;
  int rank_even = 0;
  int rank_odd = 0;
};
// rank read from the two-level windows (2k, 2k+1); needs the last two full windows equal
RankResult rank_of(const VermaModule& m, const GradedSubspace& n);

// C[d]-generators of M/N: PBW keys spanning a complement of N + d M, level by level
std::vector<PBWKey> quotient_generators(const VermaModule& m, const GradedSubspace& n, int max_level2);

struct ReachStep {
  GenMode op;
  VermaVector result;  // reduced modulo N
};
struct Reach {
  PBWKey start;
  bool reached = false;
  std::vector<ReachStep> chain;
};
struct ReachabilityReport {
  bool ok = true;
  std::vector<Reach> items;
};
// BFS from each quotient generator over positive generators (degree2 <= 4) and E0
// until a vector with nonzero image at level 0 appears.
ReachabilityReport reachability_check(const VermaModule& m, const GradedSubspace& n, int max_nodes = 4000);

// True when no level 1..max_level2 of M/N contains a vector killed by E0 and all
// positive generators of degree <= 1.
bool quotient_clean(const VermaModule& m, const GradedSubspace& n, int max_level2);

std::string case_label(AlgebraId id, const Rational& delta, int lambda, std::optional<int> lambda_bar);

struct ClassRow {
  AlgebraId alg;
  Rational delta;
  int lambda = 0;
  std::optional<int> lambda_bar;
  std::string case_label;
  std::vector<std::string> singular;  // descriptions of the singular basis vectors
  std::vector<std::string> torsion;   // descriptions of the adjoined vectors
  RankResult rank;
  bool reachable = false;
  bool clean = false;
  int cutoff2 = kDefaultCutoff2;
};

// Human-readable name of a vector: a named vector, d^k of one, or the PBW expansion.
// With mod given, the comparison is made modulo that subspace.
std::string describe_vector(const VermaModule& m, const VermaVector& v, const GradedSubspace* mod = nullptr);

ClassRow classification_row(AlgebraId id, const Rational& delta, int lambda, std::optional<int> lambda_bar,
                            int cutoff2 = kDefaultCutoff2);

}  // namespace scf
