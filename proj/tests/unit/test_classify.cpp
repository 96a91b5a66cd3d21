#include <gtest/gtest.h>

#include "scf/classify.hpp"
#include "scf/identities.hpp"

using namespace scf;

namespace {

const AlgebraId kN2{AlgebraKind::N2, 1}, kN3{AlgebraKind::N3, 1}, kN4{AlgebraKind::SmallN4, 1}, kBig{AlgebraKind::BigN4, 1};

VermaModule module(AlgebraId id, const Rational& delta, long l, std::optional<long> lb = std::nullopt) {
  HighestWeight w{Scalar(delta), Scalar(l), std::nullopt};
  if (lb) w.lambda_bar = Scalar(*lb);
  return VermaModule(id, w);
}

std::vector<VermaVector> singular_seeds(const VermaModule& m) {
  std::vector<VermaVector> out;
  for (const auto& r : find_singular(m, 3))
    for (const auto& v : r.basis) out.push_back(v);
  return out;
}

}  // namespace

TEST(Classify, N2SubmoduleSpan) {
  VermaModule m = module(kN2, make_rational(-1, 2), 1);
  auto n = submodule_generated(m, {named_vector(m, "Gm_v")}, 8);
  EXPECT_EQ(n.dim(0), 0u);
  for (int l = 1; l <= 8; ++l) EXPECT_EQ(n.dim(l), 1u) << l;
  VectorExprEvaluator ev(m);
  EXPECT_TRUE(n.contains(ev.eval("d d GpGm_v")));
  EXPECT_TRUE(n.contains(ev.eval("d d d Gm_v")));
  EXPECT_FALSE(n.contains(ev.eval("Gp_v")));
}

TEST(Classify, N2ZeroWeightContainsDerivative) {
  VermaModule m = module(kN2, 0, 0);
  auto n = submodule_generated(m, {named_vector(m, "Gp_v"), named_vector(m, "Gm_v")}, 6);
  EXPECT_TRUE(n.contains(scaled(m.act(VermaModule::d_mode(), m.highest()), Scalar(2))));
  auto q = quotient_dims(m, n);
  ASSERT_GE(q.size(), 7u);
  EXPECT_EQ(q[0], 1u);
  for (std::size_t l = 1; l < q.size(); ++l) EXPECT_EQ(q[l], 0u) << l;
}

TEST(Classify, N3GeneratorsOfSubmodule) {
  const long l = 2;
  VermaModule m = module(kN3, make_rational(1, 2), l);
  auto n = submodule_generated(m, {named_vector(m, "a2")}, 8);
  VectorExprEvaluator ev(m);
  for (const char* e : {"a2", "a5", "a6 + 4*(L+1)*d a1", "a8 - (2/(L+2))*d a3"}) EXPECT_TRUE(n.contains(ev.eval(e))) << e;
  // the opposite sign on d a3 is not in N
  EXPECT_FALSE(n.contains(ev.eval("a8 + (2/(L+2))*d a3")));
  EXPECT_FALSE(n.contains(m.highest()));
  EXPECT_FALSE(n.contains(ev.eval("a3")));
}

TEST(Classify, TorsionClosure) {
  {
    VermaModule m = module(kN3, -1, 2);
    auto t = torsion_closure(m, singular_seeds(m), 10);
    ASSERT_EQ(t.adjoined.size(), 1u);
    EXPECT_TRUE(t.sub.contains(named_vector(m, "a7")));
    EXPECT_FALSE(t.base.contains(named_vector(m, "a7")));
    EXPECT_TRUE(t.base.contains(m.act(VermaModule::d_mode(), named_vector(m, "a7"))));
  }
  {
    VermaModule m = module(kBig, make_rational(-3, 2), 1, 1);
    auto t = torsion_closure(m, singular_seeds(m), 8);
    ASSERT_EQ(t.adjoined.size(), 1u);
    EXPECT_TRUE(t.sub.contains(named_vector(m, "b15")));
    EXPECT_FALSE(t.base.contains(named_vector(m, "b15")));
  }
  {
    VermaModule m = module(kN2, make_rational(2, 7), 1);
    auto t = torsion_closure(m, {}, 8);
    EXPECT_TRUE(t.adjoined.empty());
    for (int l = 0; l <= 8; ++l) EXPECT_EQ(t.sub.dim(l), 0u);
  }
}

TEST(Classify, GenericN2WindowsSumToFour) {
  VermaModule m = module(kN2, make_rational(2, 7), 1);
  auto q = quotient_dims(m, GradedSubspace{10, {}});
  EXPECT_EQ(q[0] + q[1], 3u);
  for (std::size_t l = 2; l + 1 < q.size(); l += 2) EXPECT_EQ(q[l] + q[l + 1], 4u) << l;
}

struct RowCase {
  AlgebraId id;
  Rational delta;
  int lambda;
  std::optional<int> lambda_bar;
  const char* label;
  int rank;
};

class ClassifyRows : public ::testing::TestWithParam<RowCase> {};

TEST_P(ClassifyRows, RankAndCase) {
  const auto& p = GetParam();
  ClassRow r = classification_row(p.id, p.delta, p.lambda, p.lambda_bar);
  EXPECT_EQ(r.case_label, p.label);
  ASSERT_TRUE(r.rank.stabilized);
  EXPECT_EQ(r.rank.rank, p.rank);
  EXPECT_EQ(r.rank.rank, r.rank.rank_even + r.rank.rank_odd);
  if (p.id.kind != AlgebraKind::N2 && p.rank > 0) {
    EXPECT_EQ(r.rank.rank_even, r.rank.rank_odd);
  }
  EXPECT_TRUE(r.reachable);
  EXPECT_TRUE(r.clean);
}

INSTANTIATE_TEST_SUITE_P(
    Rows, ClassifyRows,
    ::testing::Values(RowCase{kN2, make_rational(1, 2), 1, {}, "2D-L=0", 2},
                      RowCase{kN2, make_rational(7, 3), 1, {}, "generic", 4},
                      RowCase{kN2, make_rational(-1, 2), 1, {}, "2D+L=0", 2},
                      RowCase{kN2, 0, 0, {}, "trivial", 0},
                      RowCase{kN3, 0, 0, {}, "trivial", 0},
                      RowCase{kN3, make_rational(1, 2), 2, {}, "4D-L=0", 8},
                      RowCase{kN3, make_rational(-3, 4), 1, {}, "4D+L+2=0", 12},
                      RowCase{kN3, make_rational(7, 3), 2, {}, "generic", 24},
                      RowCase{kN4, make_rational(-3, 2), 1, {}, "2D+L+2=0", 12},
                      RowCase{kN4, 1, 2, {}, "2D-L=0", 8},
                      RowCase{kBig, make_rational(1, 2), 1, 1, "2D-L=0", 16},
                      RowCase{kBig, make_rational(1, 3), 1, 2, "generic", 96}));

TEST(Classify, Reachability) {
  {
    VermaModule m = module(kN3, make_rational(3, 4), 3);
    auto t = torsion_closure(m, singular_seeds(m), 10);
    auto rep = reachability_check(m, t.sub);
    EXPECT_TRUE(rep.ok);
    EXPECT_FALSE(rep.items.empty());
    for (const auto& it : rep.items) EXPECT_TRUE(it.reached);
  }
  {
    VermaModule m = module(kN4, 1, 2);
    auto t = torsion_closure(m, singular_seeds(m), 8);
    EXPECT_TRUE(reachability_check(m, t.sub).ok);
  }
  {
    VermaModule m = module(kBig, 1, 2, 2);
    auto t = torsion_closure(m, singular_seeds(m), 6);
    auto rep = reachability_check(m, t.sub);
    EXPECT_TRUE(rep.ok);
  }
}

TEST(Classify, QuotientHasNoSingularVector) {
  VermaModule m = module(kN3, -1, 2);
  auto t = torsion_closure(m, singular_seeds(m), 10);
  EXPECT_TRUE(quotient_clean(m, t.sub, 6));
  EXPECT_FALSE(quotient_clean(m, GradedSubspace{10, {}}, 6));
}

TEST(Classify, RowsNameTheirSingularVectors) {
  ClassRow r = classification_row(kN3, make_rational(-3, 4), 1, std::nullopt);
  ASSERT_EQ(r.singular.size(), 1u);
  EXPECT_EQ(r.singular[0], "-a6");
  ClassRow t = classification_row(kN3, -1, 2, std::nullopt);
  ASSERT_EQ(t.torsion.size(), 1u);
  EXPECT_EQ(t.torsion[0], "(1/2) a7");
}

TEST(Classify, CaseLabels) {
  EXPECT_EQ(case_label(kN2, make_rational(1, 2), 1, std::nullopt), "2D-L=0");
  EXPECT_EQ(case_label(kN3, make_rational(-5, 4), 3, std::nullopt), "4D+L+2=0");
  EXPECT_EQ(case_label(kBig, make_rational(1, 2), 1, 2), "generic");
  EXPECT_EQ(case_label(kN4, 0, 0, std::nullopt), "trivial");
}

TEST(Classify, RejectsBadInput) {
  EXPECT_THROW(classification_row(kN3, 0, -1, std::nullopt), std::invalid_argument);
  EXPECT_THROW(classification_row(kBig, 0, 1, -1), std::invalid_argument);
}

TEST(Classify, BigN4GeneratorCoefficient) {
  for (long l = 1; l <= 2; ++l) {
    VermaModule m = module(kBig, make_rational(l, 2), l, l);
    auto n = submodule_generated(m, {named_vector(m, "b2")}, 6);
    VectorExprEvaluator ev(m);
    EXPECT_TRUE(n.contains(ev.eval("b7 + b10 + 4*(L+1)*d b1")));
    EXPECT_FALSE(n.contains(ev.eval("b7 + b10 + 4*(L+2)*d b1")));
  }
}
