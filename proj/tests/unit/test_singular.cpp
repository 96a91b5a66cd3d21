#include <gtest/gtest.h>

#include <random>

#include "scf/classify.hpp"
#include "scf/identities.hpp"

using namespace scf;

namespace {

const AlgebraId kN2{AlgebraKind::N2, 1}, kN3{AlgebraKind::N3, 1}, kN4{AlgebraKind::SmallN4, 1}, kBig{AlgebraKind::BigN4, 1};
const Scalar kDelta = Scalar::param(Param::Delta);
const Scalar kLam = Scalar::param(Param::LambdaSym);

VermaModule module(AlgebraId id, const Rational& delta, long l, std::optional<long> lb = std::nullopt) {
  HighestWeight w{Scalar(delta), Scalar(l), std::nullopt};
  if (lb) w.lambda_bar = Scalar(*lb);
  return VermaModule(id, w);
}

std::size_t found_dim(const VermaModule& m, int dpow) {
  Echelon<PBWKey> e;
  for (const auto& r : find_singular(m, dpow))
    for (const auto& v : r.basis) e.insert(v);
  return e.dim();
}

bool spans_equal(const std::vector<VermaVector>& a, const std::vector<VermaVector>& b) {
  Echelon<PBWKey> ea, eb;
  for (const auto& v : a) ea.insert(v);
  for (const auto& v : b) eb.insert(v);
  if (ea.dim() != eb.dim()) return false;
  for (const auto& v : b)
    if (!ea.contains(v)) return false;
  return true;
}

// rank over C[d] read from the stable window of per-level dimensions
int window_rank(const std::vector<VermaVector>& vs, int top2) {
  std::map<int, int> dims;
  for (const auto& v : vs) ++dims[v.begin()->first.level2()];
  return dims[top2 - 1] + dims[top2];
}

}  // namespace

TEST(Singular, NamedVectors) {
  VermaModule m = module(kN3, make_rational(1, 2), 2);
  VermaVector a3 = named_vector(m, "a3");
  VermaVector want = scaled(m.act(parse_genmode("h:-1/2"), m.highest()), Scalar(2));
  axpy(want, Scalar(2), m.act(parse_genmode("e:-1/2"), m.act(parse_genmode("F:0"), m.highest())));
  EXPECT_EQ(a3, want);
  EXPECT_TRUE(named_vector(module(kN3, 0, 1), "a4").empty());
  EXPECT_TRUE(named_vector(module(kN3, 0, 1), "a7").empty());
  for (const char* n : {"a3", "a4", "a6", "a7"}) EXPECT_TRUE(named_vector(module(kN3, 0, 0), n).empty()) << n;
  EXPECT_TRUE(named_vector(module(kN4, 0, 1), "a11").empty());
  EXPECT_TRUE(named_vector(module(kBig, 0, 1, 1), "b8").empty());
  EXPECT_TRUE(named_vector(module(kBig, 0, 1, 1), "b11").empty());
  EXPECT_THROW(named_vector(m, "b3"), std::invalid_argument);
  EXPECT_THROW(named_vector(m, "a9"), std::invalid_argument);
}

TEST(Singular, VanishingCounts) {
  auto zeros = [](const VermaModule& m) {
    int n = 0;
    for (const auto& name : named_vector_names(m.algebra().id())) n += named_vector(m, name).empty();
    return n;
  };
  EXPECT_EQ(zeros(module(kN4, 0, 0)), 6);
  EXPECT_EQ(zeros(module(kBig, 0, 0, 0)), 10);
  EXPECT_EQ(zeros(module(kN3, 0, 3)), 0);
}

TEST(Singular, BigN4TopVectorAtZero) {
  VermaModule m = module(kBig, 0, 0, 0);
  VectorExprEvaluator ev(m);
  VermaVector want = ev.eval("Gpp:-1/2 Gpm:-1/2 Gmp:-1/2 Gmm:-1/2 b1 - d Gmp:-1/2 Gpm:-1/2 b1 - d Gpp:-1/2 Gmm:-1/2 b1");
  EXPECT_EQ(named_vector(m, "b16"), want);
}

TEST(Singular, ApplyU) {
  for (long l = 2; l <= 5; ++l) {
    VermaModule m = module(kN3, make_rational(1, 3), l);
    EXPECT_EQ(apply_u(m, 3, Scalar(l + 2), named_vector(m, "a2")), scaled(named_vector(m, "a5"), Scalar(-(l + 4)))) << l;
  }
  for (long l = 1; l <= 3; ++l) {
    VermaModule m = module(kN4, make_rational(1, 3), l);
    EXPECT_EQ(apply_u(m, 4, Scalar(l + 1), named_vector(m, "a2")), scaled(named_vector(m, "a6"), Scalar(l + 2))) << l;
  }
  for (long l = 1; l <= 2; ++l) {
    VermaModule m = module(kBig, make_rational(1, 3), l, l);
    EXPECT_EQ(apply_u(m, 3, Scalar(l + 1), named_vector(m, "b2")), scaled(named_vector(m, "b9"), Scalar(-(l + 2)))) << l;
  }
}

TEST(Singular, IsSingularExamples) {
  VermaModule m = module(kN2, make_rational(1, 2), 1);
  EXPECT_TRUE(is_singular(m, named_vector(m, "Gp_v")).singular);

  VermaModule g(kN2, HighestWeight{kDelta, kLam, std::nullopt});
  auto r = is_singular(g, named_vector(g, "Gp_v"));
  ASSERT_FALSE(r.singular);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, parse_genmode("Gm:1/2"));
  EXPECT_EQ(r.image, scaled(g.highest(), Scalar(2) * kDelta - kLam));

  VermaModule n3 = module(kN3, make_rational(-3, 4), 1);
  EXPECT_TRUE(is_singular(n3, named_vector(n3, "a6")).singular);
  EXPECT_THROW(is_singular(n3, VermaVector{}), std::invalid_argument);

  VermaVector mixed = m.highest();
  axpy(mixed, Scalar(1), named_vector(m, "Gp_v"));
  EXPECT_EQ(is_singular(m, mixed).reason, "not a weight vector");
}

TEST(Singular, FindSingularExamples) {
  VermaModule m = module(kN2, make_rational(-1, 2), 1);
  std::vector<VermaVector> found;
  for (const auto& r : find_singular(m, 3))
    for (const auto& v : r.basis) found.push_back(v);
  EXPECT_TRUE(spans_equal(found, {named_vector(m, "Gm_v"), named_vector(m, "GpGm_v")}));

  VermaModule n4 = module(kN4, -1, 0);
  VectorExprEvaluator ev(n4);
  std::map<int, std::vector<VermaVector>> by_level;
  for (const auto& r : find_singular(n4, 3))
    for (const auto& v : r.basis) by_level[r.weight.level2].push_back(v);
  ASSERT_EQ(by_level.size(), 2u);
  EXPECT_TRUE(spans_equal(by_level[2], {ev.eval("a6"), ev.eval("a7"), ev.eval("a9 - 2*d a1")}));
  EXPECT_TRUE(spans_equal(by_level[3], {ev.eval("a13"), ev.eval("a12 + 2*d a2")}));

  EXPECT_EQ(found_dim(module(kN3, make_rational(1, 3), 2), 3), 0u);
}

TEST(Singular, ReportsCarryCertificates) {
  VermaModule m = module(kN4, 1, 2);
  for (const auto& r : find_singular(m, 2)) {
    EXPECT_FALSE(r.checked.empty());
    for (const auto& v : r.basis) EXPECT_TRUE(is_singular(m, v).singular);
  }
}

TEST(Singular, E0InvariantRanks) {
  VermaModule n3 = module(kN3, make_rational(2, 7), 0);
  EXPECT_EQ(window_rank(e0_invariants(n3, 9), 9), 4);
  VermaModule n4 = module(kN4, make_rational(2, 7), 1);
  EXPECT_EQ(window_rank(e0_invariants(n4, 9), 9), 15);
  VermaModule big = module(kBig, make_rational(2, 7), 0, 0);
  EXPECT_EQ(window_rank(e0_invariants(big, 9), 9), 6);
}

TEST(Singular, Locus) {
  auto rep = singular_locus(kN2, Scalar(1), std::nullopt, 1);
  bool minus_half = false;
  for (const auto& e : rep.entries)
    if (e.delta && *e.delta == make_rational(-1, 2) && e.weight.level2 == 2) {
      minus_half = true;
      VermaModule m = module(kN2, make_rational(-1, 2), 1);
      EXPECT_TRUE(spans_equal(e.family, {named_vector(m, "GpGm_v")}));
    }
  EXPECT_TRUE(minus_half);

  auto check_level1 = [](AlgebraId id, long l, std::optional<long> lb, const Rational& d1, const char* n1,
                         const Rational& d2, const char* n2) {
    std::optional<Scalar> slb;
    if (lb) slb = Scalar(*lb);
    auto r = singular_locus(id, Scalar(l), slb, 0);
    std::map<Rational, std::vector<VermaVector>> at;
    for (const auto& e : r.entries)
      if (e.weight.level2 == 1 && e.delta) at[*e.delta].insert(at[*e.delta].end(), e.family.begin(), e.family.end());
    ASSERT_EQ(at.size(), 2u);
    VermaModule m1 = module(id, d1, l, lb), m2 = module(id, d2, l, lb);
    EXPECT_TRUE(spans_equal(at[d1], {named_vector(m1, n1)}));
    EXPECT_TRUE(spans_equal(at[d2], {named_vector(m2, n2)}));
  };
  check_level1(kN3, 2, std::nullopt, make_rational(1, 2), "a2", -1, "a4");
  check_level1(kBig, 1, 1, make_rational(1, 2), "b2", make_rational(-3, 2), "b5");
}

TEST(Singular, ReducedCheckSetsAgree) {
  struct P {
    AlgebraId id;
    Rational d;
    long l;
  };
  std::mt19937 rng(5);
  for (const P& p : {P{kN3, make_rational(1, 2), 2}, P{kN3, make_rational(-3, 4), 1}, P{kN3, make_rational(2, 7), 3},
                     P{kN4, 1, 2}, P{kN4, -1, 0}, P{kN4, make_rational(-3, 2), 1}}) {
    VermaModule m = module(p.id, p.d, p.l);
    std::vector<VermaVector> cands;
    for (const auto& r : find_singular(m, 1))
      for (const auto& v : r.basis) cands.push_back(v);
    for (const auto& v : e0_invariants(m, 4)) cands.push_back(v);
    std::uniform_int_distribution<int> c(-2, 2);
    for (int level2 = 1; level2 <= 4; ++level2)
      for (const auto& [w, keys] : m.weight_spaces(level2)) {
        VermaVector v;
        for (const auto& k : keys) axpy(v, Scalar(static_cast<long>(c(rng))), m.basis_vector(k));
        if (!v.empty()) cands.push_back(v);
      }
    for (const auto& v : cands) EXPECT_EQ(is_singular(m, v, true).singular, is_singular(m, v, false).singular);
  }
}

TEST(Singular, GeneratedSubmoduleIsProper) {
  struct P {
    AlgebraId id;
    Rational d;
    long l;
    std::optional<long> lb;
  };
  for (const P& p : {P{kN2, make_rational(-1, 2), 1, {}}, P{kN2, 0, 0, {}}, P{kN3, make_rational(-3, 4), 1, {}},
                     P{kN3, -1, 2, {}}, P{kN4, -1, 0, {}}, P{kBig, make_rational(1, 2), 1, 1}}) {
    VermaModule m = module(p.id, p.d, p.l, p.lb);
    for (const auto& r : find_singular(m, 2))
      for (const auto& v : r.basis) {
        auto n = submodule_generated(m, {v}, 6);
        EXPECT_FALSE(n.contains(m.highest())) << algebra_name(p.id) << " " << m.vector_str(v);
      }
  }
}

TEST(Singular, RandomDeltaHasNoSingularVectors) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> num(-40, 40), den(2, 19);
  for (int t = 0; t < 6; ++t) {
    Rational d = make_rational(num(rng), den(rng));
    for (long l = 0; l <= 2; ++l) {
      if (d * 2 == l || d * 2 == -l || d * 4 == l || d * 4 == -(l + 2) || d * 2 == -(l + 2)) continue;
      EXPECT_EQ(found_dim(module(kN2, d, l), 3), 0u);
      EXPECT_EQ(found_dim(module(kN3, d, l), 2), 0u);
      EXPECT_EQ(found_dim(module(kN4, d, l), 1), 0u);
    }
  }
}
