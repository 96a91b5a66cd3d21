#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scf/exactfield.hpp"

namespace scf {

// Standard: odd generators xi_1..xi_N, bit k-1 for xi_k.
// Split (N even): bit 2(j-1) for xi_j^+, bit 2(j-1)+1 for xi_j^-, order 1+ < 1- < 2+ < 2-.
enum class GBasis : std::uint8_t { Standard, Split };

struct GMonomial {
  int tpow = 0;
  std::uint8_t mask = 0;

  int odd_count() const { return __builtin_popcount(mask); }
  int parity() const { return odd_count() & 1; }
  // twice the degree: 2n + |I| - 2
  int degree2() const { return 2 * tpow + odd_count() - 2; }
  auto operator<=>(const GMonomial&) const = default;
};

class GElement {
 public:
  GElement() = default;
  GElement(int n, GBasis basis = GBasis::Standard) : n_(n), basis_(basis) {}

  static GElement monomial(int n, int tpow, std::uint8_t mask, const Scalar& c = Scalar(1),
                           GBasis basis = GBasis::Standard);
  // product c * t^tpow * xi_{i1} ... xi_{ik} with 1-based labels in any order
  static GElement term(int n, const Scalar& c, int tpow, std::initializer_list<int> xis,
                       GBasis basis = GBasis::Standard);

  int n() const { return n_; }
  GBasis basis() const { return basis_; }
  const std::map<GMonomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const GMonomial& m, const Scalar& c);

  GElement operator-() const;
  GElement& operator+=(const GElement& o);
  GElement& operator-=(const GElement& o);
  friend GElement operator+(GElement a, const GElement& b) { return a += b; }
  friend GElement operator-(GElement a, const GElement& b) { return a -= b; }
  friend GElement operator*(const Scalar& c, const GElement& f);
  // Grassmann product, t powers add
  friend GElement operator*(const GElement& f, const GElement& g);
  friend bool operator==(const GElement& a, const GElement& b);

  GElement shift_t(int k) const;
  GElement d_t() const;
  GElement d_xi(int bit) const;
  GElement euler() const;  // sum xi_i d/dxi_i

  // nullopt when the element is not homogeneous
  std::optional<int> degree2() const;
  std::optional<int> parity() const;

  std::string str() const;

 private:
  void check_compatible(const GElement& o) const;
  int n_ = 0;
  GBasis basis_ = GBasis::Standard;
  std::map<GMonomial, Scalar> terms_;
};

// sign of xi_a * xi_b (both masks) after reordering, 0 if they share a generator
int wedge_sign(std::uint8_t a, std::uint8_t b);

GElement contact_bracket(const GElement& f, const GElement& g);
GElement to_split(const GElement& f);
GElement to_standard(const GElement& f);
// N = 4, standard basis: complementary monomial with xi_I xi_I^* = xi_1 xi_2 xi_3 xi_4
GMonomial hodge_dual(const GMonomial& m, int* sign);
GElement hodge_dual(const GElement& f);

GElement parse_gelement(std::string_view text, int n, GBasis basis = GBasis::Standard);

}  // namespace scf
