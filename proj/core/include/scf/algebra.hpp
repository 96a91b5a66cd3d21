#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "scf/exactfield.hpp"
#include "scf/grassmann.hpp"

namespace scf {

enum class AlgebraKind : std::uint8_t { N2, N3, SmallN4, BigN4 };

struct AlgebraId {
  AlgebraKind kind = AlgebraKind::N2;
  int beta = 1;  // only meaningful for SmallN4
  auto operator<=>(const AlgebraId&) const = default;
};

std::string algebra_name(AlgebraId id);
AlgebraId parse_algebra(std::string_view text);

enum class Gen : std::uint8_t {
  L, J, H, E, F, h, e, f, Psi, Gp, Gm, Gpp, Gmp, Gpm, Gmm,
  Lbar, Hbar, Ebar, Fbar, Gpp_bar, Gmp_bar, Gpm_bar, Gmm_bar
};

const char* gen_name(Gen g);
std::optional<Gen> parse_gen(std::string_view name);
int gen_parity(Gen g);
bool gen_half_integer(Gen g);
bool gen_barred(Gen g);
Gen bar_of(Gen g);    // unbarred -> barred copy
Gen unbar_of(Gen g);  // barred -> unbarred label
// a_[n] = a_{n - s}; returns 2s (L: 2, sl2 currents: 0, odd currents: 1, Psi: -1)
int gen_offset2(Gen g);

struct GenMode {
  Gen gen = Gen::L;
  int mode2 = 0;  // twice the mode index, also twice the degree

  int degree2() const { return mode2; }
  int parity() const { return gen_parity(gen); }
  std::string str() const;  // "Gp:-1/2"
  auto operator<=>(const GenMode&) const = default;
};

GenMode parse_genmode(std::string_view text);
std::string half_str(int v2);
int parse_half(std::string_view text);  // "3/2" -> 3, "-1" -> -2

class AlgElement {
 public:
  AlgElement() = default;
  AlgElement(const GenMode& g, const Scalar& c = Scalar(1)) { add(g, c); }

  const std::map<GenMode, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const GenMode& g) const;
  void add(const GenMode& g, const Scalar& c);

  AlgElement& operator+=(const AlgElement& o);
  AlgElement& operator-=(const AlgElement& o);
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator*(const Scalar& c, const AlgElement& x);
  AlgElement operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const AlgElement& a, const AlgElement& b);

  std::string str() const;

 private:
  std::map<GenMode, Scalar> terms_;
};

class Algebra {
 public:
  explicit Algebra(AlgebraId id);

  AlgebraId id() const { return id_; }
  std::string name() const { return algebra_name(id_); }
  int odd_variables() const;  // N of the realization
  const std::vector<Gen>& generators() const { return gens_; }
  bool has(Gen g) const;
  bool has_sl2() const { return id_.kind != AlgebraKind::N2; }
  bool has_bar_sl2() const { return id_.kind == AlgebraKind::BigN4; }

  void validate(const GenMode& g) const;  // throws on bad label / mode parity
  GenMode canonical(const GenMode& g) const;
  AlgElement canonical(const AlgElement& x) const;
  int min_mode2(Gen g) const;
  bool in_annihilation(const GenMode& g) const;

  GElement realize(const GenMode& g) const;
  GElement realize(const AlgElement& x) const;

  // bracket of canonical generators; memoized and thread-safe
  const AlgElement& bracket(const GenMode& a, const GenMode& b) const;
  AlgElement bracket(const AlgElement& a, const AlgElement& b) const;

  // canonical basis elements of the given doubled degree
  std::vector<GenMode> basis_of_degree(int degree2) const;
  // express a homogeneous realized element in the canonical basis
  AlgElement express(const GElement& f) const;

  // the bracket given by closed-form structure constants (not for BigN4)
  AlgElement table_bracket(const GenMode& a, const GenMode& b) const;

 private:
  AlgElement compute_bracket(const GenMode& a, const GenMode& b) const;

  AlgebraId id_;
  std::vector<Gen> gens_;
  mutable std::shared_mutex mu_;
  mutable std::map<std::pair<GenMode, GenMode>, std::unique_ptr<AlgElement>> cache_;
  struct Decomposer;
  mutable std::map<int, std::shared_ptr<const Decomposer>> decomposers_;
};

// The isomorphism SK(1,4) -> barred SK(1,4): L, H, E, F and Gpp, Gmm go to their
// barred copies, Gpm and Gmp are exchanged. Only for SmallN4 generators.
GenMode phi(const GenMode& g);
AlgElement phi(const AlgElement& x);

struct TableCheckReport {
  std::size_t pairs_checked = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Compares the structure-constant tables with contact brackets of the
// realizations for all generator pairs with |mode| <= bound2/2.
// For BigN4 the barred and unbarred copies are compared with the two
// small N=4 tables and mixed brackets are checked for skew-symmetry;
// only annihilation modes are used there.
TableCheckReport check_tables(const Algebra& alg, int bound2);

}  // namespace scf
