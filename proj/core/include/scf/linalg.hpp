#pragma once

#include <map>
#include <utility>
#include <vector>

#include "scf/exactfield.hpp"

namespace scf {

template <class Key>
using SparseVec = std::map<Key, Scalar>;

template <class Key>
void axpy(SparseVec<Key>& y, const Scalar& a, const SparseVec<Key>& x) {
  if (a.is_zero()) return;
  for (const auto& [k, v] : x) {
    auto [it, fresh] = y.try_emplace(k, a * v);
    if (!fresh) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

template <class Key>
SparseVec<Key> scaled(const SparseVec<Key>& x, const Scalar& a) {
  SparseVec<Key> r;
  if (a.is_zero()) return r;
  for (const auto& [k, v] : x) r.emplace(k, a * v);
  return r;
}

// Row echelon basis of a subspace. Every row is normalised so that its
// smallest key (the pivot) has coefficient 1; pivots are distinct.
template <class Key>
class Echelon {
 public:
  SparseVec<Key> reduce(SparseVec<Key> v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto r = rows_.find(it->first);
      if (r == rows_.end()) {
        ++it;
        continue;
      }
      Key k = it->first;
      Scalar c = it->second;
      axpy(v, -c, r->second);
      it = v.upper_bound(k);
    }
    return v;
  }

  // returns true if the dimension grew
  bool insert(const SparseVec<Key>& v) {
    SparseVec<Key> r = reduce(v);
    if (r.empty()) return false;
    Scalar inv = r.begin()->second.inverse();
    for (auto& [k, x] : r) x *= inv;
    Key p = r.begin()->first;
    rows_.emplace(p, std::move(r));
    return true;
  }

  bool contains(const SparseVec<Key>& v) const { return reduce(v).empty(); }
  std::size_t dim() const { return rows_.size(); }
  const std::map<Key, SparseVec<Key>>& rows() const { return rows_; }
  std::vector<SparseVec<Key>> basis() const {
    std::vector<SparseVec<Key>> b;
    for (const auto& [k, r] : rows_) b.push_back(r);
    return b;
  }

 private:
  std::map<Key, SparseVec<Key>> rows_;
};

namespace detail {
template <class Key>
struct AugKey {
  bool tag = false;
  Key key{};
  int idx = 0;
  friend bool operator<(const AugKey& a, const AugKey& b) {
    if (a.tag != b.tag) return !a.tag;
    if (a.tag) return a.idx < b.idx;
    return a.key < b.key;
  }
};
}  // namespace detail

// Basis of {x : sum_j x_j cols[j] = 0}; each result is a coefficient vector of length cols.size().
template <class Key>
std::vector<std::vector<Scalar>> nullspace(const std::vector<SparseVec<Key>>& cols) {
  using AK = detail::AugKey<Key>;
  Echelon<AK> ech;
  std::vector<std::vector<Scalar>> out;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    SparseVec<AK> v;
    for (const auto& [k, x] : cols[j]) v.emplace(AK{false, k, 0}, x);
    v.emplace(AK{true, Key{}, static_cast<int>(j)}, Scalar(1));
    SparseVec<AK> r = ech.reduce(v);
    if (!r.empty() && r.begin()->first.tag) {
      std::vector<Scalar> n(cols.size());
      for (const auto& [k, x] : r) n[k.idx] = x;
      out.push_back(std::move(n));
    } else {
      ech.insert(r);
    }
  }
  return out;
}

// Coordinates of target in the span of cols, nullopt if it is not in the span.
// cols must be linearly independent.
template <class Key>
std::optional<std::vector<Scalar>> solve_in_span(const std::vector<SparseVec<Key>>& cols, const SparseVec<Key>& target) {
  using AK = detail::AugKey<Key>;
  Echelon<AK> ech;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    SparseVec<AK> v;
    for (const auto& [k, x] : cols[j]) v.emplace(AK{false, k, 0}, x);
    v.emplace(AK{true, Key{}, static_cast<int>(j)}, Scalar(1));
    ech.insert(v);
  }
  SparseVec<AK> t;
  for (const auto& [k, x] : target) t.emplace(AK{false, k, 0}, x);
  SparseVec<AK> r = ech.reduce(t);
  std::vector<Scalar> coords(cols.size());
  for (const auto& [k, x] : r) {
    if (!k.tag) return std::nullopt;
    coords[k.idx] = -x;
  }
  return coords;
}

// Fraction-free elimination of a polynomial matrix (rows x cols).
// Returns the generic rank and the last nonzero pivot, which is an
// r x r minor of the input (up to sign).
struct BareissResult {
  int rank = 0;
  ParamPoly last_pivot;
  std::vector<int> pivot_cols;
};
BareissResult bareiss(std::vector<std::vector<ParamPoly>> m);

}  // namespace scf
