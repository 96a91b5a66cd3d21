#include <gtest/gtest.h>

#include <random>

#include "scf/json_io.hpp"

using namespace scf;

namespace {

const AlgebraId kN2{AlgebraKind::N2, 1}, kN3{AlgebraKind::N3, 1}, kBig{AlgebraKind::BigN4, 1};

}  // namespace

TEST(JsonIo, GenModeRoundTrip) {
  for (const char* s : {"L:-1", "Gpp_bar:3/2", "Psi:1/2", "J:0", "e:-1/2"}) {
    GenMode g = parse_genmode(s);
    Json j = to_json(g);
    EXPECT_EQ(genmode_from_json(j), g);
    EXPECT_EQ(genmode_from_json(Json::parse(j.dump())), g);
  }
  EXPECT_EQ(to_json(parse_genmode("Gp:-1/2")).dump(), R"({"gen":"Gp","mode2":-1})");
}

TEST(JsonIo, AlgElementRoundTrip) {
  Algebra n3(kN3);
  AlgElement x = n3.bracket(AlgElement(parse_genmode("h:1/2")), AlgElement(parse_genmode("Psi:1/2")));
  x = x + Scalar::rational(-3, 7) * AlgElement(parse_genmode("L:2")) + Scalar::i() * AlgElement(parse_genmode("e:1/2"));
  EXPECT_EQ(algelement_from_json(Json::parse(to_json(x).dump())), x);
}

TEST(JsonIo, VectorRoundTrip) {
  std::mt19937 rng(9);
  for (AlgebraId id : {kN2, kN3, kBig}) {
    HighestWeight hw{Scalar::rational(2, 7), Scalar(1), std::nullopt};
    if (id.kind == AlgebraKind::BigN4) hw.lambda_bar = Scalar(2);
    VermaModule m(id, hw);
    for (int l = 0; l <= 4; ++l) {
      VermaVector v;
      long c = 1;
      for (const auto& k : m.keys_at_level(l)) axpy(v, Scalar::rational(c++, 3), m.basis_vector(k));
      Json j = vector_to_json(m, v);
      EXPECT_EQ(vector_from_json(m, Json::parse(j.dump())), v) << algebra_name(id) << " " << l;
    }
  }
}

TEST(JsonIo, VectorFieldNames) {
  VermaModule m(kBig, HighestWeight{Scalar(0), Scalar(1), Scalar(1)});
  Json j = vector_to_json(m, m.act(VermaModule::d_mode(), m.highest()));
  ASSERT_EQ(j.size(), 1u);
  for (const char* f : {"dpow", "odd", "f0", "f0bar", "wt", "coeff"}) EXPECT_TRUE(j[0].contains(f)) << f;
  EXPECT_EQ(j[0]["dpow"], 1);
  EXPECT_EQ(j[0]["wt"]["level2"], 2);
}

TEST(JsonIo, RowFields) {
  ClassRow r = classification_row(kN3, make_rational(-3, 4), 1, std::nullopt);
  Json j = to_json(r);
  EXPECT_EQ(j["alg"], "n3");
  EXPECT_EQ(j["delta"], "-3/4");
  EXPECT_TRUE(j["lambda_bar"].is_null());
  EXPECT_EQ(j["rank"]["rank"], 12);
  EXPECT_EQ(j["case"], "4D+L+2=0");
  EXPECT_EQ(Json::parse(j.dump()), j);
  std::string md = rows_markdown({r});
  EXPECT_NE(md.find("4D+L+2=0"), std::string::npos);
  EXPECT_NE(md.find("| 12 |"), std::string::npos);
}

TEST(JsonIo, SingularReportCertificate) {
  VermaModule m(kN2, HighestWeight{Scalar::rational(1, 2), Scalar(1), std::nullopt});
  auto reps = find_singular(m, 1);
  ASSERT_FALSE(reps.empty());
  Json j = to_json(m, reps.front());
  ASSERT_FALSE(j["basis"].empty());
  EXPECT_EQ(j["basis"][0]["certificate"]["singular"], true);
  EXPECT_EQ(j["basis"][0]["certificate"]["checked"], j["checked"].size());
  EXPECT_EQ(vector_from_json(m, j["basis"][0]["vector"]), reps.front().basis[0]);
}

TEST(JsonIo, LambdaTables) {
  Json j = to_json(n2_spec());
  EXPECT_EQ(j["name"], "n2");
  EXPECT_EQ(j["labels"].size(), 4u);
  Json a = to_json(check_conformal_axioms(virasoro_spec()));
  EXPECT_EQ(a["ok"], true);
  EXPECT_EQ(to_json(LambdaPoly(Scalar(0)), {}).size(), 0u);
}
