#include "scf/classify.hpp"

#include <deque>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace scf {

namespace {

std::map<int, VermaVector> split_levels(const VermaVector& v) {
  std::map<int, VermaVector> out;
  for (const auto& [k, c] : v) out[k.level2()].emplace(k, c);
  return out;
}

int level_of(const VermaVector& v) { return v.empty() ? -1 : v.begin()->first.level2(); }

std::vector<GenMode> closure_generators(const VermaModule& m) {
  std::vector<GenMode> g{VermaModule::d_mode()};
  for (const auto& x : m.odd_negative()) g.push_back(x);
  for (const auto& x : m.zero_modes()) g.push_back(x);
  for (const auto& x : m.positive_generators(2)) g.push_back(x);
  return g;
}

}  // namespace

std::size_t GradedSubspace::dim(int level2) const {
  auto it = levels.find(level2);
  return it == levels.end() ? 0 : it->second.dim();
}

VermaVector GradedSubspace::reduce(const VermaVector& v) const {
  VermaVector out;
  for (const auto& [l, part] : split_levels(v)) {
    auto it = levels.find(l);
    axpy(out, Scalar(1), it == levels.end() ? part : it->second.reduce(part));
  }
  return out;
}

bool GradedSubspace::contains(const VermaVector& v) const { return reduce(v).empty(); }

std::vector<VermaVector> GradedSubspace::basis(int level2) const {
  auto it = levels.find(level2);
  return it == levels.end() ? std::vector<VermaVector>{} : it->second.basis();
}

GradedSubspace submodule_generated(const VermaModule& m, const std::vector<VermaVector>& seeds, int cutoff2) {
  GradedSubspace s;
  s.cutoff2 = cutoff2;
  std::deque<VermaVector> queue;
  auto push = [&](const VermaVector& v) {
    for (const auto& [l, part] : split_levels(v)) {
      if (l > cutoff2) continue;
      auto& e = s.levels[l];
      VermaVector r = e.reduce(part);
      if (r.empty()) continue;
      e.insert(r);
      queue.push_back(std::move(r));
    }
  };
  for (const auto& v : seeds) push(v);
  const auto gens = closure_generators(m);
  while (!queue.empty()) {
    VermaVector v = std::move(queue.front());
    queue.pop_front();
    const int l = level_of(v);
    for (const auto& g : gens) {
      if (l - g.degree2() > cutoff2) continue;
      push(m.act(g, v));
    }
  }
  return s;
}

TorsionResult torsion_closure(const VermaModule& m, const std::vector<VermaVector>& seeds, int cutoff2) {
  TorsionResult res;
  std::vector<VermaVector> cur = seeds;
  res.sub = submodule_generated(m, cur, cutoff2);
  res.base = res.sub;
  const GenMode d = VermaModule::d_mode();
  const VermaVector top = m.highest();
  bool grew = true;
  while (grew) {
    grew = false;
    // level 0 is skipped: anything there generates the whole module
    for (int l = 1; l + 2 <= cutoff2 && !grew; ++l) {
      const auto keys = m.keys_at_level(l);
      std::vector<VermaVector> cols;
      cols.reserve(keys.size());
      for (const auto& k : keys) cols.push_back(res.sub.reduce(m.act(d, m.basis_vector(k))));
      for (const auto& x : nullspace(cols)) {
        VermaVector w;
        for (std::size_t j = 0; j < keys.size(); ++j)
          if (!x[j].is_zero()) w.emplace(keys[j], x[j]);
        if (res.sub.contains(w)) continue;
        auto next = cur;
        next.push_back(w);
        GradedSubspace s = submodule_generated(m, next, cutoff2);
        if (s.contains(top)) continue;
        cur = std::move(next);
        res.sub = std::move(s);
        res.adjoined.push_back(w);
        grew = true;
        break;
      }
    }
  }
  return res;
}

std::vector<std::size_t> quotient_dims(const VermaModule& m, const GradedSubspace& n) {
  std::vector<std::size_t> q;
  for (int l = 0; l <= n.cutoff2; ++l) q.push_back(m.level_dim(l) - n.dim(l));
  return q;
}

RankResult rank_of(const VermaModule& m, const GradedSubspace& n) {
  RankResult r;
  const auto q = quotient_dims(m, n);
  const int last = (n.cutoff2 - 1) / 2;  // last full window (2k, 2k+1)
  if (last < 1) return r;
  auto even = [&](int k) { return static_cast<int>(q[2 * k]); };
  auto odd = [&](int k) { return static_cast<int>(q[2 * k + 1]); };
  r.stabilized = even(last) == even(last - 1) && odd(last) == odd(last - 1);
  // even levels carry even vectors: d and F0 are even, the level-raising odd generators have degree 1/2
  r.rank_even = even(last);
  r.rank_odd = odd(last);
  r.rank = r.rank_even + r.rank_odd;
  return r;
}

std::vector<PBWKey> quotient_generators(const VermaModule& m, const GradedSubspace& n, int max_level2) {
  std::vector<PBWKey> out;
  for (int l = 0; l <= std::min(max_level2, n.cutoff2); ++l) {
    Echelon<PBWKey> e;
    auto it = n.levels.find(l);
    if (it != n.levels.end()) e = it->second;
    if (l >= 2)
      for (auto k : m.keys_at_level(l - 2)) {
        ++k.dpow;
        e.insert(m.basis_vector(k));
      }
    for (const auto& k : m.keys_at_level(l))
      if (e.insert(m.basis_vector(k))) out.push_back(k);
  }
  return out;
}

ReachabilityReport reachability_check(const VermaModule& m, const GradedSubspace& n, int max_nodes) {
  ReachabilityReport rep;
  std::vector<GenMode> ops = m.positive_generators(4);
  for (const auto& x : m.raising_zero_modes()) ops.push_back(x);
  const int max_level2 = std::max(0, n.cutoff2 - 2);
  for (const auto& g : quotient_generators(m, n, max_level2)) {
    Reach item;
    item.start = g;
    struct Node {
      VermaVector v;
      int parent;
      GenMode op;
    };
    std::vector<Node> nodes{{n.reduce(m.basis_vector(g)), -1, {}}};
    std::unordered_set<std::string> seen{m.vector_str(nodes[0].v)};
    using Entry = std::pair<int, int>;  // (level2, node index), lowest level first
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    open.push({g.level2(), 0});
    int found = level_of(nodes[0].v) == 0 ? 0 : -1;
    while (found < 0 && !open.empty() && static_cast<int>(nodes.size()) < max_nodes) {
      const int cur = open.top().second;
      open.pop();
      for (const auto& op : ops) {
        VermaVector w = n.reduce(m.act(op, nodes[cur].v));
        if (w.empty()) continue;
        std::string key = m.vector_str(w);
        if (!seen.insert(key).second) continue;
        const int l = level_of(w);
        nodes.push_back({std::move(w), cur, op});
        const int idx = static_cast<int>(nodes.size()) - 1;
        if (l == 0) {
          found = idx;
          break;
        }
        open.push({l, idx});
      }
    }
    if (found >= 0) {
      item.reached = true;
      for (int i = found; nodes[i].parent >= 0; i = nodes[i].parent)
        item.chain.insert(item.chain.begin(), ReachStep{nodes[i].op, nodes[i].v});
    }
    rep.ok = rep.ok && item.reached;
    rep.items.push_back(std::move(item));
  }
  return rep;
}

bool quotient_clean(const VermaModule& m, const GradedSubspace& n, int max_level2) {
  std::vector<GenMode> gens = m.positive_generators(2);
  for (const auto& x : m.raising_zero_modes()) gens.push_back(x);
  using Key = std::pair<int, PBWKey>;
  for (int l = 1; l <= std::min(max_level2, n.cutoff2); ++l) {
    const auto keys = m.keys_at_level(l);
    std::vector<SparseVec<Key>> cols;
    for (const auto& k : keys) {
      SparseVec<Key> col;
      for (std::size_t gi = 0; gi < gens.size(); ++gi)
        for (const auto& [kk, c] : n.reduce(m.act(gens[gi], m.basis_vector(k))))
          col.emplace(Key{static_cast<int>(gi), kk}, c);
      cols.push_back(std::move(col));
    }
    if (nullspace(cols).size() != n.dim(l)) return false;
  }
  return true;
}

std::string case_label(AlgebraId id, const Rational& delta, int lambda, std::optional<int> lambda_bar) {
  const Rational lam(lambda);
  switch (id.kind) {
    case AlgebraKind::N2:
      if (delta == 0 && lambda == 0) return "trivial";
      if (2 * delta - lam == 0) return "2D-L=0";
      if (2 * delta + lam == 0) return "2D+L=0";
      return "generic";
    case AlgebraKind::N3:
      if (delta == 0 && lambda == 0) return "trivial";
      if (4 * delta - lam == 0) return "4D-L=0";
      if (4 * delta + lam + 2 == 0) return "4D+L+2=0";
      return "generic";
    case AlgebraKind::SmallN4:
      if (delta == 0 && lambda == 0) return "trivial";
      if (2 * delta - lam == 0) return "2D-L=0";
      if (2 * delta + lam + 2 == 0) return "2D+L+2=0";
      return "generic";
    case AlgebraKind::BigN4:
      if (!lambda_bar || *lambda_bar != lambda) return "generic";
      if (delta == 0 && lambda == 0) return "trivial";
      if (2 * delta - lam == 0) return "2D-L=0";
      if (2 * delta + lam + 2 == 0) return "2D+L+2=0";
      return "generic";
  }
  return "generic";
}

std::string describe_vector(const VermaModule& m, const VermaVector& v0, const GradedSubspace* mod) {
  auto red = [&](const VermaVector& x) { return mod ? mod->reduce(x) : x; };
  const VermaVector v = red(v0);
  if (v.empty()) return "0";
  const auto& [k0, c0] = *v.begin();
  for (const auto& name : named_vector_names(m.algebra().id())) {
    VermaVector raw = named_vector(m, name);
    for (int p = 0; p <= 3 && !raw.empty(); ++p, raw = m.act(VermaModule::d_mode(), raw)) {
      VermaVector nv = red(raw);
      auto it = nv.find(k0);
      if (it != nv.end()) {
        Scalar c = c0 / it->second;
        VermaVector diff = v;
        axpy(diff, -c, nv);
        if (diff.empty()) {
          std::string s = name;
          if (p == 1) s = "d " + s;
          if (p > 1) s = "d^" + std::to_string(p) + " " + s;
          if (c.is_one()) return s;
          if ((-c).is_one()) return "-" + s;
          return "(" + c.str() + ") " + s;
        }
      }
    }
  }
  return m.vector_str(v);
}

ClassRow classification_row(AlgebraId id, const Rational& delta, int lambda, std::optional<int> lambda_bar,
                            int cutoff2) {
  if ((id.kind != AlgebraKind::N2 && lambda < 0) || (lambda_bar && *lambda_bar < 0))
    throw std::invalid_argument("Lambda must be nonnegative");
  if ((id.kind == AlgebraKind::BigN4) != lambda_bar.has_value())
    throw std::invalid_argument("Lambda-bar is required for bign4 and only for bign4");
  ClassRow row;
  row.alg = id;
  row.delta = delta;
  row.lambda = lambda;
  row.lambda_bar = lambda_bar;
  row.cutoff2 = cutoff2;
  row.case_label = case_label(id, delta, lambda, lambda_bar);

  std::optional<Scalar> lb;
  if (lambda_bar) lb = Scalar(static_cast<long>(*lambda_bar));
  VermaModule m(id, HighestWeight{Scalar(delta), Scalar(static_cast<long>(lambda)), lb});

  std::vector<VermaVector> seeds;
  for (const auto& rep : find_singular(m, 2))
    for (const auto& v : rep.basis) {
      seeds.push_back(v);
      row.singular.push_back(describe_vector(m, v));
    }
  TorsionResult t = torsion_closure(m, seeds, cutoff2);
  for (const auto& w : t.adjoined) row.torsion.push_back(describe_vector(m, w, &t.base));
  row.rank = rank_of(m, t.sub);
  row.reachable = reachability_check(m, t.sub).ok;
  row.clean = quotient_clean(m, t.sub, std::min(cutoff2 - 2, m.n_odd() + 4));
  return row;
}

}  // namespace scf
