#include <hyperweyl/weyl.hpp>

#include <gtest/gtest.h>

#include "classical_weyl.hpp"

using namespace hyperweyl;

namespace {

LoweringMonomial mono(const RootDatum& datum, const CoeffAlgebraSpec& spec, const std::string& s) {
  const auto g = parse_gens(datum, spec, s);
  return LoweringMonomial(g.begin(), g.end());
}

std::size_t graded_dim(const std::string& type, const CoeffAlgebraSpec& spec, Weight lambda, FieldSpec field = {}) {
  const auto D = parse_root_datum(type);
  const auto r = relation_closure(D, spec, EvalData::graded(std::move(lambda), field));
  EXPECT_TRUE(r.stabilized);
  return r.dimension;
}

}  // namespace

TEST(Window, DefaultsFollowLambda) {
  const auto A2 = parse_root_datum("A2");
  const auto w = default_window(A2, Weight{{1, 1}});
  EXPECT_EQ(w.max_exponent, (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(w.max_drop.coords, (std::vector<int>{2, 2}));
  EXPECT_EQ(w.slack, 2);
  EXPECT_TRUE(drop_leq(RootVector{{1, 0}}, RootVector{{2, 2}}));
  EXPECT_FALSE(drop_leq(RootVector{{3, 0}}, RootVector{{2, 2}}));
}

TEST(SpanningSet, Examples) {
  const auto A1 = parse_root_datum("A1");
  const auto spec = CoeffAlgebraSpec::polynomial(1);
  // w, (x^- (x) 1) w
  EXPECT_EQ(spanning_set(A1, Weight{{1}}, spec, default_window(A1, Weight{{1}})).size(), 2u);
  EXPECT_EQ(spanning_set(A1, Weight{{0}}, spec, default_window(A1, Weight{{0}})).size(), 1u);
  const auto two = spanning_set(A1, Weight{{2}}, spec, default_window(A1, Weight{{2}}));
  EXPECT_GE(two.size(), 4u);
  for (const auto& m : two)
    for (const auto& g : m) EXPECT_LE(g.b.max_exponent(), 1);
}

TEST(SpanningSet, RejectsBadInputs) {
  const auto A2 = parse_root_datum("A2");
  const auto spec = CoeffAlgebraSpec::polynomial(1);
  EXPECT_THROW(spanning_set(A2, Weight{{1}}, spec, default_window(parse_root_datum("A1"), Weight{{1}})),
               std::invalid_argument);
  EXPECT_THROW(relation_closure(A2, spec, EvalData::graded(Weight{{-1, 1}})), std::invalid_argument);
  EXPECT_THROW(relation_closure(A2, CoeffAlgebraSpec::laurent(), EvalData::graded(Weight{{1, 0}})),
               std::invalid_argument);
}

TEST(WeylModuleG, DimensionsMatchWeylFormula) {
  for (const char* type : {"A1", "A2"}) {
    const auto D = parse_root_datum(type);
    const std::vector<Weight> lambdas = D.rank() == 1 ? std::vector<Weight>{Weight{{0}}, Weight{{1}}, Weight{{3}}}
                                                      : std::vector<Weight>{Weight{{1, 0}}, Weight{{1, 1}}, Weight{{2, 0}}};
    for (const auto& lambda : lambdas)
      for (std::uint32_t p : {0u, 2u, 3u}) {
        const auto r = weyl_module_g(D, lambda, FieldSpec{p});
        EXPECT_EQ(Integer(r.dimension), D.weyl_dimension(lambda)) << type << " p=" << p;
        EXPECT_TRUE(r.stabilized);
        EXPECT_TRUE(character_check(r, D));
      }
  }
}

TEST(WeylModuleG, AdjointCharacterOfA2) {
  const auto A2 = parse_root_datum("A2");
  const auto r = weyl_module_g(A2, Weight{{1, 1}});
  const std::map<Weight, std::size_t> expect{{Weight{{1, 1}}, 1},  {Weight{{2, -1}}, 1},  {Weight{{-1, 2}}, 1},
                                             {Weight{{0, 0}}, 2},  {Weight{{1, -2}}, 1},  {Weight{{-2, 1}}, 1},
                                             {Weight{{-1, -1}}, 1}};
  EXPECT_EQ(r.character, expect);
}

TEST(CharacterCheck, RejectsNonInvariantCharacters) {
  const auto A1 = parse_root_datum("A1");
  EXPECT_TRUE(character_check({{Weight{{1}}, 1}, {Weight{{-1}}, 1}}, Weight{{1}}, A1));
  EXPECT_FALSE(character_check({{Weight{{1}}, 1}}, Weight{{1}}, A1));
  EXPECT_FALSE(character_check({{Weight{{3}}, 1}, {Weight{{-3}}, 1}}, Weight{{1}}, A1));
}

TEST(LocalWeyl, GradedA1IsTwoToTheM) {
  const auto spec = CoeffAlgebraSpec::polynomial(1);
  EXPECT_EQ(graded_dim("A1", spec, Weight{{0}}), 1u);
  EXPECT_EQ(graded_dim("A1", spec, Weight{{1}}), 2u);
  EXPECT_EQ(graded_dim("A1", spec, Weight{{2}}), 4u);
  EXPECT_EQ(graded_dim("A1", spec, Weight{{2}}, FieldSpec{2}), 4u);
  EXPECT_EQ(graded_dim("A1", spec, Weight{{2}}, FieldSpec{3}), 4u);
}

TEST(LocalWeyl, AgreesWithClassicalOracle) {
  const auto spec = CoeffAlgebraSpec::polynomial(1);
  for (const auto& [type, lambda] : std::vector<std::pair<std::string, Weight>>{
           {"A1", Weight{{1}}}, {"A1", Weight{{2}}}, {"A1", Weight{{3}}}, {"A2", Weight{{1, 0}}}}) {
    const auto D = parse_root_datum(type);
    const auto r = relation_closure(D, spec, EvalData::graded(lambda));
    const hyperweyl::testing::ClassicalLocalWeyl oracle(D, lambda, r.degree_bound + 1);
    EXPECT_EQ(r.dimension, oracle.dimension()) << type;
    EXPECT_TRUE(character_check(r, D)) << type;
  }
}

TEST(LocalWeyl, HighestWeightHasMultiplicityOne) {
  const auto A2 = parse_root_datum("A2");
  const auto r = relation_closure(A2, CoeffAlgebraSpec::polynomial(1), EvalData::graded(Weight{{1, 0}}));
  EXPECT_EQ(r.dimension, 3u);
  EXPECT_EQ(r.character.at(Weight{{1, 0}}), 1u);
  EXPECT_EQ(r.character.rbegin()->first, (Weight{{1, 0}}));
}

TEST(LocalWeyl, SpanMembership) {
  const auto A1 = parse_root_datum("A1");
  const auto spec = CoeffAlgebraSpec::polynomial(1);
  const LocalWeylModule one(A1, spec, EvalData::graded(Weight{{1}}), default_window(A1, Weight{{1}}));
  EXPECT_TRUE(one.in_span(mono(A1, spec, "F(a1,t)^(1)"), {}));
  EXPECT_FALSE(one.in_span(mono(A1, spec, "F(a1,1)^(1)"), {}));
  EXPECT_TRUE(one.in_span(mono(A1, spec, "F(a1,1)^(1)"), {mono(A1, spec, "F(a1,1)^(1)")}));

  const LocalWeylModule two(A1, spec, EvalData::graded(Weight{{2}}), default_window(A1, Weight{{2}}));
  EXPECT_FALSE(two.in_span(mono(A1, spec, "F(a1,t)^(1)"), {mono(A1, spec, "F(a1,1)^(1)")}));
  EXPECT_TRUE(two.in_span(mono(A1, spec, "F(a1,1)^(1) F(a1,t)^(1)"), {}));
  EXPECT_TRUE(two.in_span(mono(A1, spec, "F(a1,1)^(3)"), {}));
  EXPECT_THROW((void)two.in_span(mono(A1, spec, "F(a1,t^9)^(1)"), {}), std::out_of_range);
}

TEST(LocalWeyl, EvaluationTables) {
  const auto A1 = parse_root_datum("A1");
  const auto spec = CoeffAlgebraSpec::polynomial(1);
  // Lambda_t(u) = (1 - u)(1 - 2u): two distinct evaluation points
  EvalData two(Weight{{2}}, FieldSpec{});
  two.set(0, Monomial{1}, 1, -3);
  two.set(0, Monomial{1}, 2, 2);
  const auto r = relation_closure(A1, spec, two);
  EXPECT_EQ(r.eval, "table");
  EXPECT_TRUE(r.stabilized);
  EXPECT_EQ(r.dimension, 4u);
  // Lambda_t(u) = (1 - 3u)^2 over F_5
  EvalData same(Weight{{2}}, FieldSpec{5});
  same.set(0, Monomial{1}, 1, -6);
  same.set(0, Monomial{1}, 2, 9);
  EXPECT_EQ(relation_closure(A1, spec, same).dimension, 4u);
  // Lambda_t(u) = 1 - 2u
  EvalData point(Weight{{1}}, FieldSpec{});
  point.set(0, Monomial{1}, 1, -2);
  EXPECT_EQ(relation_closure(A1, spec, point).dimension, 2u);
}

TEST(EvalData, Validation) {
  EXPECT_THROW(EvalData(Weight{{1}}, FieldSpec{4}), std::invalid_argument);
  EvalData e(Weight{{1, 0}}, FieldSpec{3});
  EXPECT_THROW(e.set(0, Monomial{1}, 2, 1), std::invalid_argument);
  EXPECT_THROW(e.set(1, Monomial{1}, 1, 1), std::invalid_argument);
  EXPECT_THROW(e.set(2, Monomial{1}, 1, 1), std::invalid_argument);
  EXPECT_THROW(e.set(0, Monomial{0}, 1, 1), std::invalid_argument);
  EXPECT_THROW(e.set(0, Monomial{1}, 1, Rational(1, 3)), NotIntegralError);
  e.set(0, Monomial{1}, 1, Rational(1, 2));
  EXPECT_FALSE(e.is_graded());
  EXPECT_TRUE(e.has_entries(0, Monomial{1}));
  EXPECT_EQ(e.value(0, Monomial{1}, 1), Rational(1, 2));
  e.set(0, Monomial{1}, 1, 0);
  EXPECT_TRUE(e.is_graded());
}

TEST(Json, ResultRoundTrip) {
  const auto A2 = parse_root_datum("A2");
  const auto r = weyl_module_g(A2, Weight{{1, 1}}, FieldSpec{3});
  const auto j = result_to_json(r);
  EXPECT_EQ(j.at("character").front().at("weight"), nlohmann::json({1, 1}));
  EXPECT_EQ(j.at("character").at(1).at("weight"), nlohmann::json({2, -1}));
  EXPECT_EQ(j.at("character").at(3).at("weight"), nlohmann::json({0, 0}));
  EXPECT_EQ(j.at("character").back().at("weight"), nlohmann::json({-1, -1}));
  const auto back = result_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(result_to_json(back), j);
  EXPECT_EQ(back.character, r.character);
  EXPECT_EQ(back.field.characteristic, 3u);
}

TEST(Json, EvalTableRoundTrip) {
  const auto spec = CoeffAlgebraSpec::polynomial(2);
  const auto j = nlohmann::json::parse(
      R"({"lambda":[2,1],"c":[{"i":1,"b":"t1*t2","r":2,"value":"-7/2"},{"i":2,"b":"t2","r":1,"value":4}],"field":{"char":0}})");
  const auto e = eval_from_json(j, spec);
  EXPECT_EQ(e.value(0, Monomial{1, 1}, 2), Rational(-7, 2));
  EXPECT_EQ(e.value(1, Monomial{0, 1}, 1), 4);
  EXPECT_EQ(eval_from_json(eval_to_json(e), spec).table(), e.table());
  EXPECT_THROW(eval_from_json(nlohmann::json::parse(R"({"lambda":[-1,0]})"), spec), std::invalid_argument);
  EXPECT_THROW(eval_from_json(nlohmann::json::parse(R"({"lambda":[1,0],"c":[{"i":1,"b":"t3","r":1,"value":1}]})"), spec),
               std::invalid_argument);
  EXPECT_THROW(eval_from_json(nlohmann::json::parse("[1]"), spec), std::invalid_argument);
}
