#include <gtest/gtest.h>

#include "nsg/error.hpp"
#include "nsg/expression.hpp"
#include "nsg/report_json.hpp"

namespace nsg {
namespace {

SemigroupPtr sg(std::initializer_list<Int> gens) {
  return share(NumericalSemigroup::from_generators(gens));
}

RelativeIdeal eval(const char* text, const SemigroupPtr& h) {
  return IdealExpression::parse(text).evaluate(h);
}

TEST(Expression, EvaluatesNamedIdeals) {
  auto h = sg({4, 5, 11});
  EXPECT_EQ(eval("K^3", h), naturals_ideal(h));
  EXPECT_EQ(eval("tr(K)", h), maximal_ideal(h));
  EXPECT_EQ(eval("b(K)", h), conductor_ideal(h));
  EXPECT_EQ(eval("B(K)", h), naturals_ideal(h));
  EXPECT_EQ(eval("D(H)", h), canonical_ideal(h));
  EXPECT_EQ(eval("H:N", h), conductor_ideal(h));
  EXPECT_EQ(eval("K:K", sg({2, 3})), unit_ideal(sg({2, 3})));
}

TEST(Expression, PrecedenceAndShifts) {
  auto h = sg({4, 5, 11});
  // Power binds tighter than product, product tighter than quotient.
  EXPECT_EQ(eval("K*K^2", h), power(canonical_ideal(h), 3));
  EXPECT_EQ(eval("K^2:K", h), quotient(power(canonical_ideal(h), 2), canonical_ideal(h)));
  EXPECT_EQ(eval("N:K*K", h), quotient(naturals_ideal(h), power(canonical_ideal(h), 2)));
  EXPECT_EQ(eval("(N:K)*K", h), product(quotient(naturals_ideal(h), canonical_ideal(h)),
                                        canonical_ideal(h)));
  EXPECT_EQ(eval("3*K", h), canonical_ideal(h).shifted(3));
  EXPECT_EQ(eval("-2 * K", h), canonical_ideal(h).shifted(-2));
  EXPECT_EQ(eval(" M ^ 0 ", h), unit_ideal(h));
}

TEST(Expression, RenderingReparses) {
  auto h = sg({5, 7, 9});
  for (const char* text : {"K^3", "tr(K)*M:C", "D(b(K^2)):(N*-3)", "B(M:M)", "(H)"}) {
    auto e = IdealExpression::parse(text);
    auto again = IdealExpression::parse(e.to_string());
    EXPECT_EQ(again.to_string(), e.to_string());
    EXPECT_EQ(again.evaluate(h), e.evaluate(h)) << text;
  }
}

TEST(Expression, ParseErrors) {
  for (const char* bad : {"", "K:", "K^", "K^-1", "X", "tr K", "(K", "K)", "K ? K", "trace(K)"}) {
    try {
      IdealExpression::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Parse) << bad;
    }
  }
}

TEST(Json, ReportSchema) {
  auto r = check_theorem_equivalence(sg({4, 5, 11}));
  auto j = to_json(r);
  for (const char* key : {"generators", "invariants", "classes", "witnesses", "votes"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["classes"]["mcc"], true);
  EXPECT_EQ(j["classes"]["nearly_gorenstein"], true);
  EXPECT_EQ(j["classes"]["almost_gorenstein"], false);
  EXPECT_EQ(j["witnesses"]["power_witness_n"], 3);
  const auto& k = j["witnesses"]["canonical"];
  EXPECT_EQ(k["offset"], 0);
  EXPECT_EQ(k["tail_from"], 8);
  EXPECT_EQ(k["window"], (nlohmann::json{1, 1, 0, 0, 1, 1, 1, 0}));

  auto g = to_json(check_theorem_equivalence(sg({2, 3})));
  EXPECT_TRUE(g["witnesses"]["power_witness_n"].is_null());
}

TEST(Json, RoundTripIsByteIdentical) {
  for (auto h : {sg({2, 3}), sg({3, 4, 5}), sg({4, 5, 11}), sg({6, 7, 8, 17})}) {
    const std::string text = dump(to_json(check_theorem_equivalence(h)));
    EXPECT_EQ(dump(nlohmann::json::parse(text)), text);
  }
  const std::string census = dump(to_json(census_serial(6)));
  EXPECT_EQ(dump(nlohmann::json::parse(census)), census);
}

}  // namespace
}  // namespace nsg
