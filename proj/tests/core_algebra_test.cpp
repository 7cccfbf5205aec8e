#include <algorithm>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "support.hpp"

namespace twistlab {
namespace {

using testing::ids;
using testing::naive_eval;
using testing::pick;
using testing::random_algebra;
using testing::random_term;

algebra lattice_reduct(const char* name) { return reduct(named_matrix(name).alg, {"and", "or"}); }

// Lexicographically least failing assignment, found by counting in base n.
std::optional<assignment> brute_counterexample(const algebra& a, const term& l, const term& r, int k) {
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) total *= a.size();
  for (std::size_t code = 0; code < total; ++code) {
    assignment env(std::size_t(k), 0);
    std::size_t c = code;
    for (int i = k - 1; i >= 0; --i) {
      env[std::size_t(i)] = elem(c % a.size());
      c /= a.size();
    }
    if (naive_eval(a, l, env) != naive_eval(a, r, env)) return env;
  }
  return std::nullopt;
}

bool closed_under_all(const algebra& a, const std::vector<bool>& in) {
  for (const auto& o : a.operations()) {
    const std::size_t n = a.size();
    if (o.arity == 0 && !in[o.table[0]]) return false;
    for (elem x = 0; x < n; ++x) {
      if (!in[x]) continue;
      if (o.arity == 1 && !in[o.table[x]]) return false;
      if (o.arity == 2)
        for (elem y = 0; y < n; ++y)
          if (in[y] && !in[o.table[x * n + y]]) return false;
    }
  }
  return true;
}

TEST(Algebra, RejectsMalformedTables) {
  EXPECT_THROW(algebra("e", {}, {}), algebra_error);
  EXPECT_THROW(algebra("d", {"a", "a"}, {}), algebra_error);
  EXPECT_THROW(algebra("r", {"0", "1", "2", "3"}, {operation::binary("and", std::vector<elem>(15, 0))}), algebra_error);
  std::vector<elem> t(16, 0);
  t[7] = 5;
  EXPECT_THROW(algebra("o", {"0", "1", "2", "3"}, {operation::binary("and", t)}), algebra_error);
}

TEST(Algebra, TrivialAlgebraWithConstants) {
  algebra a("one", {"*"}, {operation::constant("top", 0), operation::constant("one", 0), operation::binary("and", {0})});
  EXPECT_EQ(a.size(), 1u);
  EXPECT_EQ(a.constant("top"), 0u);
}

TEST(Algebra, ThreeValuedMatrixSignature) {
  const auto& a = named_matrix("OL3").alg;
  EXPECT_EQ(a.size(), 3u);
  for (const char* op : {"neg", "and", "or", "imp"}) EXPECT_TRUE(a.has(op)) << op;
  EXPECT_THROW(a.op("bogus"), signature_error);
}

TEST(Term, ProjectionAndTableLookups) {
  auto df3 = named_matrix("DF3").alg;
  auto imp = term::apply("imp", {term::variable(0), term::variable(1)});
  auto v = ids(df3, {"1/2", "0"});
  EXPECT_EQ(df3.label(eval_term(df3, imp, {v[0], v[1]})), "1/2");
  EXPECT_EQ(eval_term(df3, term::variable(0), {2}), 2u);
  auto fg4 = named_matrix("Fg4").alg;
  auto w = ids(fg4, {"bot", "0"});
  EXPECT_EQ(fg4.label(eval_term(fg4, imp, {w[0], w[1]})), "top");
}

TEST(Term, ErrorsOnUnknownOperationAndUnboundVariable) {
  auto a = named_matrix("DF3").alg;
  EXPECT_THROW(compiled_term(a, term::apply("nope", {term::variable(0)})), signature_error);
  EXPECT_THROW(compiled_term(a, term::apply("neg", {term::variable(0), term::variable(1)})), signature_error);
  EXPECT_THROW(eval_term(a, term::variable(2), {0}), evaluation_error);
}

TEST(Term, CompiledEvaluatorAgreesWithNaiveRecursion) {
  auto g = testing::rng(1);
  for (int round = 0; round < 200; ++round) {
    auto a = random_algebra(g, 1 + pick(g, 5));
    auto t = random_term(g, a, 3, 6);
    compiled_term c(a, t);
    detail::for_each_assignment(a.size(), 3, [&](const assignment& env) {
      EXPECT_EQ(c(env), naive_eval(a, t, env));
      return true;
    });
  }
}

TEST(Equation, DoubleNegationAndCenterFailure) {
  auto df3 = named_matrix("DF3").alg;
  EXPECT_TRUE(check_equation(df3, parse_equation("~~x = x")).holds);
  auto r = check_equation(df3, parse_equation("x -> x = x | ~x"));
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(describe(df3, r), "x=0");
}

TEST(Equation, PeirceInTwoElementBoolean) {
  EXPECT_TRUE(check_equation(boolean_power(1), parse_equation("(x -> y) -> x = x")).holds);
}

TEST(Equation, AgreesWithBruteForceOnRandomAlgebras) {
  auto g = testing::rng(2);
  for (int round = 0; round < 100; ++round) {
    auto a = random_algebra(g, 1 + pick(g, 5));
    equation eq;
    eq.lhs = random_term(g, a, 3, 3);
    eq.rhs = pick(g, 3) == 0 ? eq.lhs : random_term(g, a, 3, 3);
    eq.variables = {"x", "y", "z"};
    int k = std::max({eq.lhs.arity(), eq.rhs.arity(), 0});
    auto r = check_equation(a, eq);
    auto want = brute_counterexample(a, eq.lhs, eq.rhs, k);
    EXPECT_EQ(r.holds, !want.has_value());
    if (want) {
      ASSERT_TRUE(r.counterexample.has_value());
      EXPECT_EQ(*r.counterexample, *want);
    }
  }
}

TEST(QuasiEquation, CorrectedDffInjectivityHoldsInDff4) {
  auto a = named_matrix("DFf4").alg;
  EXPECT_TRUE(check_quasiequation(a, parse_quasiequation("x & T = y & T, x | T = y | T => x = y")).holds);
}

TEST(QuasiEquation, TrivialAlgebraSatisfiesCollapse) {
  algebra a("one", {"*"}, {operation::constant("top", 0), operation::constant("one", 0)});
  EXPECT_TRUE(check_quasiequation(a, parse_quasiequation("T = 1 => x = y")).holds);
}

TEST(QuasiEquation, CollapsedConstantsViolateDff1) {
  // DFf4 with top renamed onto the element 1
  auto base = named_matrix("DFf4").alg;
  std::vector<operation> ops;
  for (auto o : base.operations()) {
    if (o.name == "top") o.table = {3};
    ops.push_back(o);
  }
  algebra a("collapsed", base.labels(), ops);
  auto r = check_quasiequation(a, parse_quasiequation("T = 1 => x = y"));
  ASSERT_FALSE(r.holds);
  EXPECT_NE((*r.counterexample)[0], (*r.counterexample)[1]);
  EXPECT_FALSE(classify(a, "dff-algebra").holds);
}

TEST(Classify, DfgReductIsDfgAlgebra) {
  auto a = reduct(named_matrix("DFg4").alg, {"neg", "and", "or", "zero", "bot", "top"});
  EXPECT_TRUE(classify(a, "dfg-algebra").holds);
}

TEST(Classify, OlLatticeFailsAbsorption) {
  auto r = classify(lattice_reduct("OL3"), "lattice");
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(describe(named_matrix("OL3").alg, r), "x=1/2, y=0");
}

TEST(Classify, TwoElementBoolean) { EXPECT_TRUE(classify(boolean_power(1), "boolean").holds); }

TEST(Classify, MissingOperationIsSignatureError) {
  EXPECT_THROW(classify(lattice_reduct("CN3"), "de-morgan-lattice"), signature_error);
}

TEST(Classify, KleeneImpliesDeMorgan) {
  std::vector<algebra> pool;
  for (const auto& n : matrix_names()) pool.push_back(named_matrix(n).alg);
  for (const auto& n : builtin_names()) pool.push_back(builtin_algebra(n));
  pool.push_back(direct_product(kleene3(), m4()));
  int kleene = 0;
  for (const auto& a : pool) {
    if (!a.has("neg") || !a.has("and") || !a.has("or")) continue;
    if (classify(a, "kleene-algebra").holds) {
      ++kleene;
      EXPECT_TRUE(classify(a, "de-morgan-lattice").holds) << a.name();
    }
  }
  EXPECT_GT(kleene, 3);
}

TEST(Isomorphism, ConstantIdentificationForCng4) {
  twist_spec s{twist_kind::CNg, boolean_power(1), std::nullopt, std::nullopt};
  auto t = twist_build(s);
  auto m = find_isomorphism(named_matrix("CNg4").alg, t.alg);
  ASSERT_TRUE(m.has_value());
  std::vector<std::string> got;
  for (elem e : m->map) got.push_back(t.alg.label(e));
  EXPECT_EQ(got, (std::vector<std::string>{"(0,1)", "(0,0)", "(1,1)", "(1,0)"}));
}

TEST(Isomorphism, SelfIsIdentity) {
  for (const auto& n : matrix_names()) {
    auto a = named_matrix(n).alg;
    auto m = find_isomorphism(a, a);
    ASSERT_TRUE(m);
    std::vector<elem> id(a.size());
    std::iota(id.begin(), id.end(), 0);
    EXPECT_EQ(m->map, id) << n;
  }
}

TEST(Isomorphism, DifferentImplicationsAreNotIsomorphic) {
  EXPECT_FALSE(find_isomorphism(named_matrix("DF3").alg, named_matrix("F3").alg.renamed("x")));
}

TEST(Isomorphism, SymmetricOnRandomPermutations) {
  auto g = testing::rng(3);
  for (int round = 0; round < 60; ++round) {
    auto a = random_algebra(g, 1 + pick(g, 5));
    std::vector<elem> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), g);
    // b is a relabelled copy: b(perm x) = perm(a x)
    std::vector<operation> ops;
    const std::size_t n = a.size();
    for (const auto& o : a.operations()) {
      operation p{o.name, o.arity, std::vector<elem>(o.table.size())};
      for (elem x = 0; x < n; ++x) {
        if (o.arity == 1) p.table[perm[x]] = perm[o.table[x]];
        if (o.arity == 2)
          for (elem y = 0; y < n; ++y) p.table[perm[x] * n + perm[y]] = perm[o.table[x * n + y]];
      }
      ops.push_back(p);
    }
    algebra b("B", a.labels(), ops);
    auto ab = find_isomorphism(a, b);
    auto ba = find_isomorphism(b, a);
    ASSERT_TRUE(ab && ba);
    EXPECT_TRUE(is_homomorphism(a, b, ab->map));
    EXPECT_TRUE(is_homomorphism(b, a, ba->map));
    auto round_trip = compose(*ba, *ab);
    EXPECT_TRUE(is_injective(round_trip.map));
    EXPECT_TRUE(is_homomorphism(a, a, round_trip.map));
    // a mutated copy is isomorphic in neither direction or in both
    auto c = b;
    auto cops = c.operations();
    cops[1].table[0] = elem((cops[1].table[0] + 1) % n);
    c = algebra("C", c.labels(), cops);
    EXPECT_EQ(find_isomorphism(a, c).has_value(), find_isomorphism(c, a).has_value());
  }
}

TEST(Subalgebra, ClosureOracle) {
  // fixpoint closure by repeated full sweeps
  auto sweep = [](const algebra& a, std::vector<elem> seed) {
    std::vector<bool> in(a.size(), false);
    for (elem e : seed) in[e] = true;
    for (const auto& o : a.operations())
      if (o.arity == 0) in[o.table[0]] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& o : a.operations())
        for (elem x = 0; x < a.size(); ++x)
          for (elem y = 0; y < a.size(); ++y) {
            if (!in[x] || !in[y] || o.arity == 0) continue;
            elem r = o.arity == 1 ? o.table[x] : o.table[x * a.size() + y];
            if (!in[r]) in[r] = grew = true;
          }
    }
    subset s;
    for (elem e = 0; e < a.size(); ++e)
      if (in[e]) s.push_back(e);
    return s;
  };
  auto olg4 = named_matrix("OLg4").alg;
  auto sub = generated_subalgebra(olg4, {0});
  EXPECT_EQ(sub.inclusion.map, sweep(olg4, {0}));
  auto df3 = reduct(named_matrix("DF3").alg, {"neg", "and", "or", "imp"});
  EXPECT_EQ(closure(df3, {2}), (subset{0, 1, 2}));
  auto full = generated_subalgebra(olg4, {0, 1, 2, 3});
  EXPECT_EQ(full.alg.size(), olg4.size());
  auto g = testing::rng(4);
  for (int round = 0; round < 100; ++round) {
    auto a = random_algebra(g, 1 + pick(g, 5));
    subset seed = {elem(pick(g, a.size()))};
    EXPECT_EQ(closure(a, seed), sweep(a, seed));
  }
}

TEST(Subalgebra, SubuniversesMatchSubsetScan) {
  auto g = testing::rng(5);
  for (int round = 0; round < 40; ++round) {
    auto a = random_algebra(g, 1 + pick(g, 5));
    std::set<subset> want;
    for (std::size_t mask = 1; mask < (std::size_t(1) << a.size()); ++mask) {
      std::vector<bool> in(a.size());
      subset s;
      for (elem e = 0; e < a.size(); ++e)
        if (mask >> e & 1) {
          in[e] = true;
          s.push_back(e);
        }
      if (closed_under_all(a, in)) want.insert(s);
    }
    auto got = subuniverses(a);
    EXPECT_EQ(std::set<subset>(got.begin(), got.end()), want);
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), [](const subset& x, const subset& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    }));
  }
}

TEST(Product, TwoChainSquaredIsTheGrid) {
  auto c2 = reduct(chain(2), {"and", "or"});
  auto p = direct_product(c2, c2);
  EXPECT_EQ(p.size(), 4u);
  EXPECT_TRUE(classify(p, "distributive-lattice").holds);
  EXPECT_TRUE(find_isomorphism(p, reduct(square(), {"and", "or"}).renamed("s")).has_value());
}

TEST(Product, TrivialFactorIsNeutral) {
  auto a = named_matrix("CN3").alg;
  algebra one("one", {"*"},
              {operation::unary("neg", {0}), operation::binary("and", {0}), operation::binary("or", {0}),
               operation::binary("imp", {0}), operation::constant("top", 0)});
  EXPECT_TRUE(find_isomorphism(direct_product(a, one), a).has_value());
}

TEST(Product, EquationsArePreserved) {
  auto df3 = named_matrix("DF3").alg;
  auto sq = direct_product(df3, df3);
  EXPECT_EQ(sq.size(), 9u);
  EXPECT_TRUE(check_equation(sq, parse_equation("~~x = x")).holds);

  // library equations that hold in both factors hold in the product and in every generated subalgebra
  std::vector<std::pair<algebra, algebra>> pairs = {
    {named_matrix("DF3").alg, named_matrix("DF3").alg},
    {named_matrix("CN3").alg, named_matrix("F3").alg.renamed("F3'")},
    {named_matrix("CNg4").alg, named_matrix("Fg4").alg},
    {reduct(named_matrix("DFf4").alg, {"neg", "and", "or", "top"}), reduct(named_matrix("OLf4").alg, {"neg", "and", "or", "top"})},
  };
  for (const auto& [a, b] : pairs) {
    auto p = direct_product(a, b);
    for (const auto& cls : class_names())
      for (const auto& l : class_laws(cls)) {
        const auto* eq = std::get_if<equation>(&l.body);
        if (!eq) continue;
        try {
          if (!check_equation(a, *eq).holds || !check_equation(b, *eq).holds) continue;
        } catch (const signature_error&) {
          continue;
        }
        EXPECT_TRUE(check_equation(p, *eq).holds) << l.name << " in " << p.name();
        for (elem s = 0; s < a.size(); ++s)
          EXPECT_TRUE(check_equation(generated_subalgebra(a, {s}).alg, *eq).holds) << l.name;
      }
  }
}

TEST(Morphism, HomomorphismCounterexampleNamesOperation) {
  auto a = named_matrix("DF3").alg;
  auto r = check_homomorphism(a, a, {2, 1, 0});
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.law, "and");
}

} // namespace
} // namespace twistlab
