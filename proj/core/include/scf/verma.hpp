#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "scf/algebra.hpp"
#include "scf/linalg.hpp"

namespace scf {

// Lambda (and Lambda-bar) are nonnegative integers, or expressions in the
// LambdaSym parameter; in the latter case the F0-strings are not truncated
// and the module is the generic-Lambda model used for symbolic identities.
struct HighestWeight {
  Scalar delta;                      // L0 eigenvalue
  Scalar lambda;                     // H0 eigenvalue (J0 for N2)
  std::optional<Scalar> lambda_bar;  // H0-bar eigenvalue, BigN4 only
};

// Basis vector d^dpow theta_A F0^j F0bar^k v of the Verma module, where
// theta_A is an ordered product of the odd generators of degree -1/2.
struct PBWKey {
  int dpow = 0;
  std::uint8_t mask = 0;
  std::uint8_t j = 0;
  std::uint8_t k = 0;

  int level2() const { return 2 * dpow + __builtin_popcount(mask); }
  int parity() const { return __builtin_popcount(mask) & 1; }
  auto operator<=>(const PBWKey&) const = default;
};

using VermaVector = SparseVec<PBWKey>;

// Weight of a PBW monomial: twice the level, and the H0 / H0-bar weights
// relative to the highest weight (for N2, the J0 charge).
struct WeightKey {
  int level2 = 0;
  int h = 0;
  int hbar = 0;
  auto operator<=>(const WeightKey&) const = default;
};

class VermaModule {
 public:
  VermaModule(std::shared_ptr<const Algebra> alg, HighestWeight hw);
  VermaModule(AlgebraId id, HighestWeight hw);

  const Algebra& algebra() const { return *alg_; }
  std::shared_ptr<const Algebra> algebra_ptr() const { return alg_; }
  const HighestWeight& weight() const { return hw_; }
  bool symbolic_lambda() const { return sym_; }
  // F0-string length bound used for enumeration (Lambda itself when concrete)
  int lambda_int() const { return lam_; }
  int lambda_bar_int() const { return lambar_; }
  // number of F0 (F0-bar) steps kept when enumerating a symbolic-Lambda module
  static constexpr int kSymbolicStringCap = 4;
  int n_odd() const { return static_cast<int>(odd_.size()); }
  const std::vector<GenMode>& odd_negative() const { return odd_; }
  static GenMode d_mode() { return {Gen::L, -2}; }

  VermaVector highest() const { return {{PBWKey{}, Scalar(1)}}; }
  VermaVector basis_vector(const PBWKey& k) const { return {{k, Scalar(1)}}; }

  WeightKey weight_of(const PBWKey& k) const;
  // L0 eigenvalue of a key
  Scalar l0_of(const PBWKey& k) const;
  std::vector<PBWKey> keys_at_level(int level2) const;
  std::map<WeightKey, std::vector<PBWKey>> weight_spaces(int level2) const;
  std::size_t level_dim(int level2) const { return keys_at_level(level2).size(); }

  VermaVector act(const GenMode& x, const VermaVector& v) const;
  VermaVector act(const AlgElement& x, const VermaVector& v) const;
  // applies the generators right to left
  VermaVector apply_word(const std::vector<GenMode>& word, const VermaVector& v) const;

  // annihilation-subalgebra generators with 1 <= degree2 <= max_degree2
  std::vector<GenMode> positive_generators(int max_degree2) const;
  // the degree-0 part acting on the top
  std::vector<GenMode> zero_modes() const;
  // E0 and (BigN4) E0-bar
  std::vector<GenMode> raising_zero_modes() const;
  // F0 and (BigN4) F0-bar
  std::vector<GenMode> lowering_zero_modes() const;

  std::string key_str(const PBWKey& k) const;
  std::string vector_str(const VermaVector& v) const;

  std::size_t memo_size() const;

 private:
  const VermaVector& act_key(const GenMode& x, const PBWKey& k) const;
  VermaVector compute(const GenMode& x, const PBWKey& k) const;
  VermaVector act_top(const GenMode& x, const PBWKey& k) const;
  void add_theta_left(int a, const PBWKey& k, const Scalar& c, VermaVector& out) const;
  void add_d_left(const PBWKey& k, const Scalar& c, VermaVector& out) const;
  int odd_index(const GenMode& x) const;

  struct InsertTerm {
    Scalar coef;
    int ddpow;
    std::uint8_t mask;
  };
  std::vector<InsertTerm> theta_insert(int a, std::uint8_t mask) const;

  std::shared_ptr<const Algebra> alg_;
  HighestWeight hw_;
  int lam_ = 0;
  int lambar_ = 0;
  bool sym_ = false;
  Scalar lam_s_, lambar_s_;
  std::vector<GenMode> odd_;
  std::vector<int> charge_, charge_bar_;
  std::vector<std::vector<Scalar>> pairing_;  // [theta_a, theta_b] = pairing_[a][b] * d
  std::vector<std::vector<std::vector<InsertTerm>>> insert_table_;

  mutable std::shared_mutex mu_;
  mutable std::map<std::pair<GenMode, PBWKey>, std::unique_ptr<VermaVector>> memo_;
};

bool same_weight(const VermaModule& m, const VermaVector& v);

}  // namespace scf
