#include <gtest/gtest.h>

#include "support.hpp"

namespace twistlab {
namespace {

using testing::ids;

std::vector<std::string> member_labels(const algebra& a, const factor_image& f) {
  std::vector<std::string> out;
  for (elem e : f.members) out.push_back(a.label(e));
  return out;
}

std::string failures(const representation_report& r) {
  std::string out;
  for (const auto& v : r.verdicts)
    if (!v.ok) out += v.name + " (" + v.witness + "); ";
  return out;
}

TEST(Images, DiamondAndBox) {
  auto dfg = named_matrix("DFg4").alg;
  EXPECT_EQ(member_labels(dfg, diamond_image(dfg, twist_kind::DFg)), (std::vector<std::string>{"0", "top"}));
  auto cn3 = named_matrix("CN3").alg;
  EXPECT_EQ(member_labels(cn3, diamond_image(cn3, twist_kind::CN)), (std::vector<std::string>{"0", "1/2"}));
  for (const char* name : {"Ff4", "DFf4"}) {
    auto a = named_matrix(name).alg;
    auto b = box_image(a);
    EXPECT_EQ(member_labels(a, b), (std::vector<std::string>{"0", "bot"})) << name;
    for (const auto& v : b.checks) EXPECT_TRUE(v.ok) << name << ": " << v.name;
  }
  EXPECT_THROW(box_image(cn3), signature_error);
}

TEST(Images, DiamondOfTrivialAlgebra) {
  algebra t("one-point", {"*"},
            {operation::unary("neg", {0}), operation::binary("and", {0}), operation::binary("or", {0}),
             operation::constant("top", 0)});
  auto d = diamond_image(t, twist_kind::DF);
  EXPECT_EQ(d.alg.size(), 1u);
  auto r = verify_representation(t, twist_kind::DF);
  EXPECT_TRUE(r.overall) << failures(r);
}

TEST(Representation, TheoremKindsOnTheirMatrices) {
  for (auto [name, k] : {std::pair{"DF3", twist_kind::DF}, std::pair{"CN3", twist_kind::CN},
                         std::pair{"F3", twist_kind::F}, std::pair{"DFg4", twist_kind::DFg},
                         std::pair{"CNg4", twist_kind::CNg}, std::pair{"Fg4", twist_kind::Fg},
                         std::pair{"DFf4", twist_kind::DFf}, std::pair{"Ff4", twist_kind::Ff}}) {
    auto r = verify_representation(named_matrix(name).alg, k);
    EXPECT_TRUE(r.theorem_mode);
    EXPECT_TRUE(r.overall) << name << ": " << failures(r);
    ASSERT_TRUE(r.iota && r.image) << name;
    EXPECT_TRUE(is_injective(r.iota->map));
  }
}

TEST(Representation, IotaOnFf4) {
  auto a = named_matrix("Ff4").alg;
  auto r = verify_representation(a, twist_kind::Ff);
  ASSERT_TRUE(r.overall) << failures(r);
  auto at = [&](const char* l) { return r.image->alg.label(r.iota->map[ids(a, {l})[0]]); };
  EXPECT_EQ(at("0"), "(0,bot)");
  EXPECT_EQ(at("bot"), "(0,0)");
  EXPECT_EQ(at("top"), "(top,bot)");
  EXPECT_EQ(at("1"), "(top,0)");
}

TEST(Representation, MutatedKleeneFails) {
  auto a = reduct(named_matrix("DF3").alg, {"neg", "and", "or", "top"});
  // make 1 & 1/2 = 1: the meet is no longer a lattice operation
  auto ops = a.operations();
  for (auto& o : ops)
    if (o.name == "and") o.table[2 * 3 + 1] = 2;
  algebra bad("mutated", a.labels(), ops);
  auto r = verify_representation(bad, twist_kind::DF);
  EXPECT_FALSE(r.overall);
  EXPECT_NE(r.failure(), nullptr);
}

TEST(Representation, MissingOperationIsSignatureError) {
  auto a = reduct(named_matrix("DF3").alg, {"neg", "and", "or", "top"});
  EXPECT_THROW(verify_representation(a, twist_kind::CN), signature_error);
}

TEST(Representation, ProductOfCenteredKleeneAlgebras) {
  auto df3 = reduct(named_matrix("DF3").alg, {"neg", "and", "or", "top"});
  auto r = verify_representation(direct_product(df3, df3), twist_kind::DF);
  EXPECT_TRUE(r.overall) << failures(r);
  EXPECT_EQ(r.factor1->size(), 4u);
}

TEST(Representation, SquareTwistSubalgebrasAreRepresented) {
  auto t = twist_build({twist_kind::DF, square(), std::nullopt, std::nullopt});
  for (const auto& [s, inc] : enumerate_pi1_full_subalgebras(t)) {
    auto r = verify_representation(s.alg, twist_kind::DF);
    EXPECT_TRUE(r.overall) << s.alg.name() << ": " << failures(r);
    EXPECT_EQ(r.factor1->size(), 4u);
  }
}

TEST(Roundtrip, RecoversFactors) {
  auto kl = relabeled(kleene3(), {"u", "v", "w"}, "kleene-uvw");
  std::vector<twist_spec> specs = {
    {twist_kind::CNg, boolean_power(2), std::nullopt, std::nullopt},
    {twist_kind::CN, boolean_power(2), std::nullopt, std::nullopt},
    {twist_kind::DF, chain(4), std::nullopt, std::nullopt},
    {twist_kind::DFf, kl, m4(), std::nullopt},
    {twist_kind::Ff, boolean_power(1), kl, std::nullopt},
  };
  for (const auto& s : specs) {
    auto r = roundtrip_check(s);
    EXPECT_TRUE(r.overall) << to_string(s.kind) << ": " << failures(r);
  }
  EXPECT_THROW(roundtrip_check({twist_kind::OL, boolean_power(1), std::nullopt, std::nullopt}), error);
}

TEST(Roundtrip, EverySweepInstance) {
  for (auto k : all_twist_kinds()) {
    if (!is_theorem_kind(k)) continue;
    for (const auto& s : sweep_specs(k)) {
      auto r = roundtrip_check(s);
      EXPECT_TRUE(r.overall) << to_string(k) << " " << s.factor1.name() << ": " << failures(r);
    }
  }
}

TEST(Exploration, FindsWitnessOrExhausts) {
  auto ol3 = named_matrix("OL3").alg;
  auto r = verify_representation(ol3, twist_kind::OL);
  EXPECT_FALSE(r.theorem_mode);
  EXPECT_TRUE(r.overall) << r.note;
  ASSERT_TRUE(r.iota);
  EXPECT_TRUE(is_homomorphism(ol3, r.image->alg, r.iota->map));

  auto cnf = verify_representation(named_matrix("CNf4").alg, twist_kind::CNf);
  EXPECT_TRUE(cnf.overall) << cnf.note;

  // DF3 has no OL signature match among OL twists of the same size
  auto df = reduct(named_matrix("DF3").alg, {"neg", "and", "or", "top"});
  auto miss = verify_representation(df, twist_kind::OL);
  EXPECT_FALSE(miss.overall);
  EXPECT_FALSE(miss.note.empty());
}

} // namespace
} // namespace twistlab
