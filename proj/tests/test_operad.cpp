#include <gtest/gtest.h>

#include <map>
#include <random>
#include <tuple>

#include "helpers.hpp"
#include "manin/fixtures.hpp"
#include "manin/operad.hpp"
#include "manin/perm3.hpp"
#include "oracle.hpp"

using namespace manin;
using testing_support::iv;
using testing_support::ivs;
using testing_support::to_int;
using testing_support::unit;

namespace {

const std::vector<std::string> kFixtures{"as", "com", "lie", "perm", "prelie", "leib", "zinb"};

IntVector act(const OperadPresentation& p, const Perm3& s, const IntVector& v) { return s3_act(p, s, std::span<const Integer>(v)); }

// Monomial (x_a s_q x_b) s_p x_c keyed by (p, q, a, b, c).
using TermKey = std::tuple<std::size_t, std::size_t, int, int, int>;

std::map<TermKey, Integer> collect(const std::vector<MonomialTerm>& terms, const Perm3& relabel) {
  std::map<TermKey, Integer> out;
  for (const auto& t : terms) {
    auto& slot = out[{t.outer_op, t.inner_op, relabel(t.variables[0]), relabel(t.variables[1]), relabel(t.variables[2])}];
    slot += t.coefficient;
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

// Expands (x_a s_q x_b) s_p x_c into E(3) coordinates: the variable order
// (a, b, c) either matches a coset representative, or matches one up to
// swapping the inner pair, which costs e_q -> e_q^(12).
std::map<TermKey, Integer> expand_to_basis(const OperadPresentation& p, const std::map<TermKey, Integer>& terms) {
  const std::size_t n = p.n();
  IntVector v(e3_dim(n), 0);
  for (const auto& [key, c] : terms) {
    const auto [outer, inner, a, b, last] = key;
    for (Coset rho : kCosets) {
      const Perm3 r = representative(rho);
      if (r(3) != last) continue;
      if (r(1) == a && r(2) == b) {
        v[E3Index{rho, outer, inner}.flat(n)] += c;
      } else {
        for (std::size_t t = 1; t <= n; ++t) {
          const Rational m = p.action()(inner - 1, t - 1);
          v[E3Index{rho, outer, t}.flat(n)] += c * m.get_num();
        }
      }
    }
  }
  return collect(monomial_terms(p, v), Perm3::identity());
}

}  // namespace

TEST(Perm3, CompositionIsRightToLeft) {
  // (13)(12): 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1
  EXPECT_EQ(Perm3::t13() * Perm3::t12(), Perm3::c123());
  EXPECT_EQ(Perm3::t23() * Perm3::t12(), Perm3::c132());
  for (const auto& s : Perm3::all()) {
    EXPECT_EQ(s * s.inverse(), Perm3::identity());
    EXPECT_EQ(s.inverse() * s, Perm3::identity());
  }
  EXPECT_THROW(Perm3({1, 1, 2}), Error);
}

TEST(CosetDecompose, Examples) {
  EXPECT_EQ(coset_decompose(Perm3::t13()), (CosetDecomposition{Coset::t13, false}));
  EXPECT_EQ(coset_decompose(Perm3::t12()), (CosetDecomposition{Coset::id, true}));
  EXPECT_EQ(coset_decompose(Perm3::c123()), (CosetDecomposition{Coset::t13, true}));
  EXPECT_EQ(coset_decompose(Perm3::c132()), (CosetDecomposition{Coset::t23, true}));
  EXPECT_EQ(coset_decompose(Perm3::identity()), (CosetDecomposition{Coset::id, false}));
  EXPECT_EQ(coset_decompose(Perm3::t23()), (CosetDecomposition{Coset::t23, false}));
}

TEST(CosetDecompose, RepresentativeTimesTailReproducesSigma) {
  for (const auto& s : Perm3::all()) {
    const auto d = coset_decompose(s);
    EXPECT_EQ(representative(d.rep) * (d.swapped ? Perm3::t12() : Perm3::identity()), s) << s.name();
  }
}

TEST(E3Index, FlatLayout) {
  EXPECT_EQ((E3Index{Coset::id, 1, 1}.flat(2)), 0u);
  EXPECT_EQ((E3Index{Coset::t13, 1, 1}.flat(2)), 4u);
  EXPECT_EQ((E3Index{Coset::t13, 1, 2}.flat(2)), 5u);
  EXPECT_EQ((E3Index{Coset::t23, 2, 2}.flat(2)), 11u);
  for (std::size_t pos = 0; pos < 27; ++pos) EXPECT_EQ(E3Index::from_flat(3, pos).flat(3), pos);
}

TEST(S3Act, Examples) {
  const auto lie = fixtures::load("lie");
  EXPECT_EQ(act(lie, Perm3::t12(), iv({1, 0, 0})), iv({-1, 0, 0}));

  const auto as = fixtures::load("as");
  for (std::size_t p = 1; p <= 2; ++p)
    for (std::size_t q = 1; q <= 2; ++q)
      EXPECT_EQ(act(as, Perm3::t13(), unit(12, E3Index{Coset::id, p, q}.flat(2))),
                unit(12, E3Index{Coset::t13, p, q}.flat(2)));

  // a1 = (x1 x2) x3 relabelled by (123) is (x2 x3) x1, the table entry a6
  EXPECT_EQ(act(as, Perm3::c123(), unit(12, 0)), unit(12, 5));
  const auto expanded = oracle::expand(as.action(), {oracle::L(1, 2, 3, 1)});
  EXPECT_EQ(expanded, unit(12, 5));
}

TEST(S3Act, LengthMismatchThrows) {
  EXPECT_THROW(act(fixtures::load("lie"), Perm3::t12(), iv({1, 0})), DimensionError);
}

TEST(S3ActProperty, GroupLawsOnEveryFixture) {
  for (const auto& name : kFixtures) {
    const auto p = fixtures::load(name);
    const std::size_t d = e3_dim(p.n());
    for (std::size_t k = 0; k < d; ++k) {
      const auto b = unit(d, k);
      EXPECT_EQ(act(p, Perm3::identity(), b), b);
      for (const auto& s : Perm3::all())
        for (const auto& t : Perm3::all())
          EXPECT_EQ(act(p, s, act(p, t, b)), act(p, s * t, b)) << name << ' ' << s.name() << ' ' << t.name();
    }
  }
}

TEST(S3ActProperty, RelabelingConsistency) {
  for (const auto& name : kFixtures) {
    const auto p = fixtures::load(name);
    const std::size_t d = e3_dim(p.n());
    for (std::size_t k = 0; k < d; ++k) {
      const auto b = unit(d, k);
      for (const auto& s : Perm3::all()) {
        const auto lhs = collect(monomial_terms(p, act(p, s, b)), Perm3::identity());
        const auto rhs = expand_to_basis(p, collect(monomial_terms(p, b), s));
        EXPECT_EQ(lhs, rhs) << name << " basis " << k << " sigma " << s.name();
      }
    }
  }
}

TEST(S3Closure, Examples) {
  const auto lie = fixtures::load("lie");
  EXPECT_EQ(s3_closure(lie.action(), ivs({{1, -1, -1}})).rows(), ivs({{1, -1, -1}}));
  for (const auto& s : Perm3::all()) {
    const auto img = act(lie, s, iv({1, -1, -1}));
    EXPECT_TRUE(img == iv({1, -1, -1}) || img == iv({-1, 1, 1}));
  }

  const auto as = fixtures::load("as");
  IntVector assoc(12, 0);
  assoc[0] = 1;
  assoc[7] = -1;
  const auto closed = s3_closure(as.action(), std::vector<IntVector>{assoc});
  EXPECT_EQ(closed.dim(), 6u);
  EXPECT_EQ(closed, as.relations());

  EXPECT_TRUE(s3_closure(as.action(), std::vector<IntVector>{}).empty());
}

TEST(S3ClosureProperty, IdempotentContainingAndInvariant) {
  std::mt19937 rng(99);
  for (const auto& name : kFixtures) {
    const auto p = fixtures::load(name);
    const std::size_t d = e3_dim(p.n());
    for (int trial = 0; trial < 10; ++trial) {
      const auto rows = oracle::random_rows(rng, 1 + rng() % 2, d, 1);
      const auto c = s3_closure(p.action(), rows);
      EXPECT_EQ(s3_closure(p.action(), c.rows()), c);
      for (const auto& r : rows) EXPECT_TRUE(span_contains(c, r));
      for (const auto& r : c.rows())
        for (const auto& s : Perm3::all()) EXPECT_TRUE(span_contains(c, act(p, s, r)));
    }
  }
}

TEST(ValidatePresentation, Examples) {
  const auto as = fixtures::load("as");
  EXPECT_EQ(as.relations().dim(), 6u);

  IntMatrix two(1, 1);
  two(0, 0) = 2;
  EXPECT_THROW(validate_presentation(1, two, {}), InvalidActionError);

  IntMatrix minus(1, 1);
  minus(0, 0) = -1;
  const auto jacobi = oracle::expand(oracle::qmatrix({{-1}}), {oracle::L(1, 1, 2, 3), oracle::L(1, 2, 3, 1), oracle::L(1, 3, 1, 2)});
  EXPECT_EQ(jacobi, iv({1, -1, -1}));
  const auto v = validate_presentation(1, minus, std::vector<IntVector>{jacobi});
  EXPECT_FALSE(v.closure_enlarged());
  EXPECT_TRUE(equal_presentation(v.presentation, fixtures::load("lie")));
}

TEST(ValidatePresentation, Errors) {
  IntMatrix rect(1, 2);
  EXPECT_THROW(validate_presentation(1, rect, {}), InvalidActionError);
  IntMatrix one = IntMatrix::identity(1);
  EXPECT_THROW(validate_presentation(1, one, ivs({{1, 0}})), DimensionError);
}

TEST(ValidatePresentation, ReportsClosureGrowth) {
  IntMatrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  IntVector assoc(12, 0);
  assoc[0] = 1;
  assoc[7] = -1;
  const auto v = validate_presentation(2, swap, std::vector<IntVector>{assoc});
  EXPECT_TRUE(v.closure_enlarged());
  EXPECT_EQ(v.supplied_rank, 1u);
  EXPECT_EQ(v.presentation.relations().dim(), 6u);
}

TEST(ValidatePresentationProperty, FixedPoint) {
  for (const auto& name : kFixtures) {
    const auto p = fixtures::load(name);
    const auto again = validate_presentation(p.n(), p.action(), p.relations().rows(), p.label());
    EXPECT_FALSE(again.closure_enlarged());
    EXPECT_TRUE(equal_presentation(again.presentation, p));
  }
}

TEST(DimSpace3, Examples) {
  EXPECT_EQ(dim_space3(fixtures::load("as")), 6u);
  EXPECT_EQ(dim_space3(fixtures::load("lie")), 2u);
  IntMatrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  EXPECT_EQ(dim_space3(validate_presentation(2, swap, {}).presentation), 12u);
}

TEST(OrbitGenerators, Examples) {
  EXPECT_EQ(orbit_generators(fixtures::load("leib")).size(), 1u);
  EXPECT_EQ(orbit_generators(fixtures::load("lie")).size(), 1u);
  IntMatrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  EXPECT_TRUE(orbit_generators(validate_presentation(2, swap, {}).presentation).empty());
}

TEST(OrbitGeneratorsProperty, GeneratorsCloseToRelations) {
  for (const auto& name : kFixtures) {
    const auto p = fixtures::load(name);
    const auto g = orbit_generators(p);
    EXPECT_EQ(s3_closure(p.action(), g), p.relations()) << name;
    for (const auto& r : g) EXPECT_TRUE(std::find(p.relations().rows().begin(), p.relations().rows().end(), r) != p.relations().rows().end());
  }
}

TEST(ChangeBasis, Examples) {
  const auto as = fixtures::load("as");
  EXPECT_TRUE(equal_presentation(change_basis(as, QMatrix::identity(2)), as));

  const auto b = oracle::qmatrix({{1, 1}, {0, 1}});
  const auto binv = invert(b);
  ASSERT_TRUE(binv);
  EXPECT_TRUE(equal_presentation(change_basis(change_basis(as, b), *binv), as));

  EXPECT_THROW(change_basis(as, oracle::qmatrix({{1, 1}, {1, 1}})), SingularMatrixError);
}

TEST(ChangeBasis, FlipOfSwapAction) {
  // diag(1,-1) [[0,-1],[-1,0]] diag(1,-1)
  const auto flipped = change_basis(fixtures::load("perm"), testing_support::diag({1, -1}));
  EXPECT_EQ(flipped.action(), oracle::qmatrix({{0, -1}, {-1, 0}}));
}

TEST(ChangeBasisProperty, PreservesDimensionAndInvolution) {
  std::mt19937 rng(5);
  for (const auto& name : kFixtures) {
    const auto p = fixtures::load(name);
    for (int trial = 0; trial < 5; ++trial) {
      QMatrix b(p.n(), p.n());
      do {
        for (std::size_t i = 0; i < p.n(); ++i)
          for (std::size_t j = 0; j < p.n(); ++j) b(i, j) = static_cast<int>(rng() % 5) - 2;
      } while (!invert(b));
      const auto q = change_basis(p, b);
      EXPECT_EQ(dim_space3(q), dim_space3(p));
      EXPECT_EQ(multiply(q.action(), q.action()), QMatrix::identity(p.n()));
      for (const auto& r : q.relations().rows())
        for (const auto& s : Perm3::all())
          EXPECT_TRUE(span_contains(q.relations(), clear_denominators(s3_act(q, s, to_rational(r)))));
    }
  }
}

TEST(EqualPresentation, Examples) {
  const auto lie = fixtures::load("lie");
  EXPECT_TRUE(equal_presentation(lie, lie));
  EXPECT_FALSE(equal_presentation(lie, fixtures::load("com")));
  EXPECT_TRUE(equal_presentation(lie, lie.with_label("other")));
}

TEST(MonomialRender, Examples) {
  const auto as = fixtures::load("as");
  EXPECT_EQ(monomial_render(as, unit(12, 0), {"*1", "*2"}), "(x1 *1 x2) *1 x3");
  EXPECT_EQ(monomial_render(as, unit(12, 5)), "(x3 *2 x2) *1 x1");

  const auto lie = fixtures::load("lie");
  EXPECT_EQ(monomial_render(lie, iv({1, -1, -1})), "(x1 * x2) * x3 - (x3 * x2) * x1 - (x1 * x3) * x2");
  EXPECT_EQ(monomial_render(lie, iv({0, 0, 0})), "0");
  EXPECT_EQ(monomial_render(lie, iv({2, 0, -3})), "2 (x1 * x2) * x3 - 3 (x1 * x3) * x2");
  EXPECT_THROW(monomial_render(lie, iv({1, 0})), DimensionError);
}

TEST(MonomialTerms, TableRows) {
  const auto as = fixtures::load("as");
  const auto t = monomial_terms(as, unit(12, E3Index{Coset::t23, 2, 1}.flat(2)));
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].outer_op, 2u);
  EXPECT_EQ(t[0].inner_op, 1u);
  EXPECT_EQ(t[0].variables, (std::array<int, 3>{1, 3, 2}));
}
