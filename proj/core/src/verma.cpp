#include "scf/verma.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace scf {

namespace {

std::vector<Gen> odd_order(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::N2: return {Gen::Gp, Gen::Gm};
    case AlgebraKind::N3: return {Gen::e, Gen::h, Gen::f};
    default: return {Gen::Gpp, Gen::Gpm, Gen::Gmp, Gen::Gmm};
  }
}

int nonneg_int(const Scalar& s, const char* what) {
  auto v = s.as_integer();
  if (!v || *v < 0 || *v > 64) throw std::invalid_argument(std::string(what) + " must be a nonnegative integer, got " + s.str());
  return static_cast<int>(*v);
}

bool symbolic(const Scalar& s) { return !s.is_constant(); }

}  // namespace

VermaModule::VermaModule(AlgebraId id, HighestWeight hw) : VermaModule(std::make_shared<const Algebra>(id), std::move(hw)) {}

VermaModule::VermaModule(std::shared_ptr<const Algebra> alg, HighestWeight hw) : alg_(std::move(alg)), hw_(std::move(hw)) {
  const AlgebraKind kind = alg_->id().kind;
  if (kind != AlgebraKind::N2) {
    lam_s_ = hw_.lambda;
    if (symbolic(hw_.lambda)) {
      sym_ = true;
      lam_ = kSymbolicStringCap;
    } else {
      lam_ = nonneg_int(hw_.lambda, "Lambda");
    }
  }
  if (kind == AlgebraKind::BigN4) {
    if (!hw_.lambda_bar) throw std::invalid_argument("BigN4 highest weight needs Lambda_bar");
    lambar_s_ = *hw_.lambda_bar;
    if (symbolic(lambar_s_)) {
      if (!sym_) throw std::invalid_argument("symbolic Lambda_bar needs symbolic Lambda");
      lambar_ = kSymbolicStringCap;
    } else {
      if (sym_) throw std::invalid_argument("symbolic Lambda needs symbolic Lambda_bar");
      lambar_ = nonneg_int(lambar_s_, "Lambda_bar");
    }
  } else if (hw_.lambda_bar) {
    throw std::invalid_argument("Lambda_bar is only used for BigN4");
  }
  for (Gen g : odd_order(kind)) odd_.push_back({g, -1});
  const int n = n_odd();
  GenMode cartan = kind == AlgebraKind::N2 ? GenMode{Gen::J, 0} : GenMode{Gen::H, 0};
  for (const auto& th : odd_) {
    const AlgElement& hc = alg_->bracket(cartan, th);
    charge_.push_back(static_cast<int>(*hc.coefficient(th).as_integer()));
    if (kind == AlgebraKind::BigN4) {
      const AlgElement& hb = alg_->bracket({Gen::Hbar, 0}, th);
      charge_bar_.push_back(static_cast<int>(*hb.coefficient(th).as_integer()));
    } else {
      charge_bar_.push_back(0);
    }
  }
  pairing_.assign(n, std::vector<Scalar>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const AlgElement& br = alg_->bracket(odd_[a], odd_[b]);
      for (const auto& [g, c] : br.terms())
        if (!(g == d_mode())) throw std::logic_error("odd negative generators do not close on d");
      pairing_[a][b] = br.coefficient(d_mode());
    }
  insert_table_.assign(n, std::vector<std::vector<InsertTerm>>(1u << n));
  for (int a = 0; a < n; ++a)
    for (unsigned m = 0; m < (1u << n); ++m) insert_table_[a][m] = theta_insert(a, static_cast<std::uint8_t>(m));
}

std::vector<VermaModule::InsertTerm> VermaModule::theta_insert(int a, std::uint8_t mask) const {
  if (mask == 0) return {{Scalar(1), 0, static_cast<std::uint8_t>(1u << a)}};
  int b = __builtin_ctz(mask);
  std::uint8_t rest = static_cast<std::uint8_t>(mask & ~(1u << b));
  if (a < b) return {{Scalar(1), 0, static_cast<std::uint8_t>(mask | (1u << a))}};
  if (a == b) {
    if (pairing_[a][a].is_zero()) return {};
    return {{pairing_[a][a] / Scalar(2), 1, rest}};
  }
  // theta_a theta_b = -theta_b theta_a + c_ab d
  std::vector<InsertTerm> out;
  for (auto& t : theta_insert(a, rest)) out.push_back({-t.coef, t.ddpow, static_cast<std::uint8_t>(t.mask | (1u << b))});
  if (!pairing_[a][b].is_zero()) out.push_back({pairing_[a][b], 1, rest});
  return out;
}

WeightKey VermaModule::weight_of(const PBWKey& k) const {
  WeightKey w{k.level2(), -2 * k.j, -2 * k.k};
  for (int a = 0; a < n_odd(); ++a)
    if (k.mask & (1u << a)) {
      w.h += charge_[a];
      w.hbar += charge_bar_[a];
    }
  return w;
}

Scalar VermaModule::l0_of(const PBWKey& k) const { return hw_.delta + Scalar::rational(k.level2(), 2); }

std::vector<PBWKey> VermaModule::keys_at_level(int level2) const {
  std::vector<PBWKey> out;
  if (level2 < 0) return out;
  const int n = n_odd();
  for (int dpow = 0; 2 * dpow <= level2; ++dpow) {
    int pc = level2 - 2 * dpow;
    if (pc > n) continue;
    for (unsigned m = 0; m < (1u << n); ++m) {
      if (__builtin_popcount(m) != pc) continue;
      for (int j = 0; j <= lam_; ++j)
        for (int k = 0; k <= lambar_; ++k)
          out.push_back({dpow, static_cast<std::uint8_t>(m), static_cast<std::uint8_t>(j), static_cast<std::uint8_t>(k)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<WeightKey, std::vector<PBWKey>> VermaModule::weight_spaces(int level2) const {
  std::map<WeightKey, std::vector<PBWKey>> out;
  for (const auto& k : keys_at_level(level2)) out[weight_of(k)].push_back(k);
  return out;
}

int VermaModule::odd_index(const GenMode& x) const {
  for (int a = 0; a < n_odd(); ++a)
    if (odd_[a] == x) return a;
  return -1;
}

void VermaModule::add_d_left(const PBWKey& k, const Scalar& c, VermaVector& out) const {
  PBWKey r = k;
  ++r.dpow;
  axpy(out, c, VermaVector{{r, Scalar(1)}});
}

void VermaModule::add_theta_left(int a, const PBWKey& k, const Scalar& c, VermaVector& out) const {
  for (const auto& t : insert_table_[a][k.mask]) {
    PBWKey r{k.dpow + t.ddpow, t.mask, k.j, k.k};
    Scalar v = c * t.coef;
    if (v.is_zero()) continue;
    auto [it, fresh] = out.try_emplace(r, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) out.erase(it);
    }
  }
}

VermaVector VermaModule::act(const GenMode& x0, const VermaVector& v) const {
  GenMode x = alg_->canonical(x0);
  VermaVector out;
  if (x == d_mode()) {
    for (const auto& [k, c] : v) add_d_left(k, c, out);
    return out;
  }
  if (int a = odd_index(x); a >= 0) {
    for (const auto& [k, c] : v) add_theta_left(a, k, c, out);
    return out;
  }
  if (!alg_->in_annihilation(x))
    throw std::domain_error(x.str() + " is not in the annihilation subalgebra of " + alg_->name());
  for (const auto& [k, c] : v) axpy(out, c, act_key(x, k));
  return out;
}

VermaVector VermaModule::act(const AlgElement& x, const VermaVector& v) const {
  VermaVector out;
  for (const auto& [g, c] : x.terms()) axpy(out, c, act(g, v));
  return out;
}

VermaVector VermaModule::apply_word(const std::vector<GenMode>& word, const VermaVector& v) const {
  VermaVector r = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = act(*it, r);
  return r;
}

const VermaVector& VermaModule::act_key(const GenMode& x, const PBWKey& k) const {
  auto key = std::make_pair(x, k);
  {
    std::shared_lock lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return *it->second;
  }
  auto val = std::make_unique<VermaVector>(compute(x, k));
  std::unique_lock lock(mu_);
  auto [it, fresh] = memo_.try_emplace(key, std::move(val));
  return *it->second;
}

VermaVector VermaModule::compute(const GenMode& x, const PBWKey& k) const {
  if (k.dpow > 0) {
    // x d w = d (x w) + [x, d] w
    PBWKey k1 = k;
    --k1.dpow;
    VermaVector out;
    for (const auto& [key, c] : act_key(x, k1)) add_d_left(key, c, out);
    const AlgElement& comm = alg_->bracket(x, d_mode());
    if (!comm.is_zero()) axpy(out, Scalar(1), act(comm, basis_vector(k1)));
    return out;
  }
  if (k.mask) {
    // x theta_a w = [x, theta_a] w + (-1)^p(x) theta_a (x w)
    int a = __builtin_ctz(k.mask);
    PBWKey k1 = k;
    k1.mask = static_cast<std::uint8_t>(k.mask & ~(1u << a));
    VermaVector out;
    const AlgElement& comm = alg_->bracket(x, odd_[a]);
    if (!comm.is_zero()) out = act(comm, basis_vector(k1));
    Scalar sign(x.parity() ? -1 : 1);
    for (const auto& [key, c] : act_key(x, k1)) add_theta_left(a, key, sign * c, out);
    return out;
  }
  return act_top(x, k);
}

VermaVector VermaModule::act_top(const GenMode& x, const PBWKey& k) const {
  if (x.mode2 > 0) return {};
  if (x.mode2 < 0) throw std::logic_error("negative mode reached the top: " + x.str());
  VermaVector out;
  auto put = [&](PBWKey r, const Scalar& c) {
    if (!c.is_zero()) out.emplace(r, c);
  };
  switch (x.gen) {
    case Gen::L: put(k, hw_.delta); break;
    case Gen::J: put(k, hw_.lambda); break;
    case Gen::H: put(k, lam_s_ - Scalar(2L * k.j)); break;
    case Gen::Hbar: put(k, lambar_s_ - Scalar(2L * k.k)); break;
    case Gen::E:
      if (k.j > 0) put({0, 0, static_cast<std::uint8_t>(k.j - 1), k.k}, Scalar(long{k.j}) * (lam_s_ - Scalar(k.j - 1L)));
      break;
    case Gen::Ebar:
      if (k.k > 0) put({0, 0, k.j, static_cast<std::uint8_t>(k.k - 1)}, Scalar(long{k.k}) * (lambar_s_ - Scalar(k.k - 1L)));
      break;
    case Gen::F:
      if (sym_ ? k.j < 255 : k.j < lam_) put({0, 0, static_cast<std::uint8_t>(k.j + 1), k.k}, Scalar(1));
      break;
    case Gen::Fbar:
      if (sym_ ? k.k < 255 : k.k < lambar_) put({0, 0, k.j, static_cast<std::uint8_t>(k.k + 1)}, Scalar(1));
      break;
    default: throw std::logic_error("unexpected degree-0 generator " + x.str());
  }
  return out;
}

std::vector<GenMode> VermaModule::positive_generators(int max_degree2) const {
  std::vector<GenMode> out;
  for (int d = 1; d <= max_degree2; ++d)
    for (const auto& g : alg_->basis_of_degree(d))
      if (alg_->in_annihilation(g)) out.push_back(g);
  return out;
}

std::vector<GenMode> VermaModule::zero_modes() const { return alg_->basis_of_degree(0); }

std::vector<GenMode> VermaModule::raising_zero_modes() const {
  std::vector<GenMode> out;
  if (alg_->has_sl2()) out.push_back({Gen::E, 0});
  if (alg_->has_bar_sl2()) out.push_back({Gen::Ebar, 0});
  return out;
}

std::vector<GenMode> VermaModule::lowering_zero_modes() const {
  std::vector<GenMode> out;
  if (alg_->has_sl2()) out.push_back({Gen::F, 0});
  if (alg_->has_bar_sl2()) out.push_back({Gen::Fbar, 0});
  return out;
}

std::string VermaModule::key_str(const PBWKey& k) const {
  std::string s;
  if (k.dpow == 1) s += "d ";
  if (k.dpow > 1) s += "d^" + std::to_string(k.dpow) + " ";
  for (int a = 0; a < n_odd(); ++a)
    if (k.mask & (1u << a)) s += std::string(gen_name(odd_[a].gen)) + " ";
  if (k.j == 1) s += "F0 ";
  if (k.j > 1) s += "F0^" + std::to_string(k.j) + " ";
  if (k.k == 1) s += "F0_bar ";
  if (k.k > 1) s += "F0_bar^" + std::to_string(k.k) + " ";
  return s + "v";
}

std::string VermaModule::vector_str(const VermaVector& v) const {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : v) {
    if (!out.empty()) out += " + ";
    std::string cs = c.str();
    if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
    out += cs + "*[" + key_str(k) + "]";
  }
  return out;
}

std::size_t VermaModule::memo_size() const {
  std::shared_lock lock(mu_);
  return memo_.size();
}

bool same_weight(const VermaModule& m, const VermaVector& v) {
  std::optional<WeightKey> w;
  for (const auto& [k, c] : v) {
    WeightKey wk = m.weight_of(k);
    if (w && !(*w == wk)) return false;
    w = wk;
  }
  return true;
}

}  // namespace scf
