#include <gtest/gtest.h>

#include "leibalg/linalg.hpp"
#include "support.hpp"

using namespace leibalg;
using leibalg::testing::all_matrices;
using leibalg::testing::all_vectors;
using leibalg::testing::mat;
using leibalg::testing::random_matrix;
using leibalg::testing::vec;

namespace {

const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);
const Field QQ = Field::rationals();

}  // namespace

TEST(Field, RejectsCharacteristicTwoAndComposites) {
  EXPECT_THROW(Field::prime(2), Error);
  EXPECT_THROW(Field::prime(9), Error);
  EXPECT_THROW(Field::prime(1), Error);
  EXPECT_EQ(Field::prime(7).characteristic(), 7u);
}

TEST(Field, PrimeArithmetic) {
  const Fp a(2, 5), b(4, 5);
  EXPECT_EQ((a + b).residue(5), 1u);
  EXPECT_EQ((a * b).residue(5), 3u);
  EXPECT_EQ((a / b).residue(5), 3u);  // 2 * 4^{-1} = 2 * 4 = 8 = 3
  EXPECT_EQ((-a).residue(5), 3u);
  EXPECT_TRUE(Fp(0) == Fp(5, 5));
  EXPECT_THROW(Fp(1, 3) + Fp(1, 5), Error);
  EXPECT_THROW(Fp(1, 3) / Fp(0, 3), Error);
}

TEST(Field, RationalCanonicalForm) {
  const Rational r = Rational::parse("6/-4");
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ((r + Rational(2)).to_string(), "1/2");
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
}

TEST(Rref, Identity) {
  const auto e = rref(Matrix<Rational>(Matrix<Rational>::Identity(2, 2)));
  EXPECT_TRUE(same(e.reduced, Matrix<Rational>(Matrix<Rational>::Identity(2, 2))));
  EXPECT_EQ(e.pivots, (std::vector<Index>{0, 1}));
}

TEST(Rref, ZeroMatrix) {
  const auto e = rref(mat<Fp>(F3, {{0, 0}, {0, 0}}));
  EXPECT_TRUE(all_zero(e.reduced));
  EXPECT_TRUE(e.pivots.empty());
}

TEST(Rref, HandReducedOverF3) {
  // [[1,1],[2,2]]: R2 <- R2 - 2 R1 gives [[1,1],[0,0]].
  const auto e = rref(mat<Fp>(F3, {{1, 1}, {2, 2}}));
  EXPECT_TRUE(same(e.reduced, mat<Fp>(F3, {{1, 1}, {0, 0}})));
  EXPECT_EQ(e.pivots, (std::vector<Index>{0}));
}

TEST(Rref, Idempotent) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Index r = 1 + t % 4, c = 1 + (t / 4) % 5;
    const auto m3 = random_matrix<Fp>(F3, r, c, rng);
    EXPECT_TRUE(same(rref(rref(m3).reduced).reduced, rref(m3).reduced));
    const auto mq = random_matrix<Rational>(QQ, r, c, rng, -3, 3);
    EXPECT_TRUE(same(rref(rref(mq).reduced).reduced, rref(mq).reduced));
  }
}

TEST(Subspace, IntersectionOfTransverseLinesIsZero) {
  // alpha (0,1,-1) = beta (0,0,1) forces alpha = 0 from the second coordinate.
  const auto a = Subspace<Rational>::span(3, mat<Rational>(QQ, {{0, 1, -1}}));
  const auto b = Subspace<Rational>::span(3, mat<Rational>(QQ, {{0, 0, 1}}));
  EXPECT_TRUE(intersect(a, b).is_zero_space());
}

TEST(Subspace, SumWithZeroAndKernelOfIdentity) {
  const auto v = Subspace<Fp>::span(3, mat<Fp>(F5, {{1, 2, 3}, {0, 1, 4}}));
  EXPECT_EQ(sum(v, Subspace<Fp>(3)), v);
  EXPECT_TRUE(kernel(Matrix<Fp>(Matrix<Fp>::Identity(4, 4))).is_zero_space());
}

TEST(Subspace, CanonicalRepresentation) {
  const auto a = Subspace<Rational>::span(3, mat<Rational>(QQ, {{1, 1, 0}, {0, 1, 1}}));
  const auto b = Subspace<Rational>::span(3, mat<Rational>(QQ, {{1, 2, 1}, {2, 1, -1}}));
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains(vec<Rational>(QQ, {3, 4, 1})));
  EXPECT_FALSE(a.contains(vec<Rational>(QQ, {0, 0, 1})));
  EXPECT_THROW(sum(a, Subspace<Rational>(2)), Error);
}

TEST(Subspace, GrassmannIdentity) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const Index n = 1 + t % 5;
    const auto a = Subspace<Fp>::span(n, random_matrix<Fp>(F3, t % 4, n, rng));
    const auto b = Subspace<Fp>::span(n, random_matrix<Fp>(F3, (t / 3) % 4, n, rng));
    const auto s = sum(a, b), i = intersect(a, b);
    EXPECT_EQ(a.dim() + b.dim(), s.dim() + i.dim());
    EXPECT_TRUE(is_subspace_of(i, a) && is_subspace_of(i, b));
    EXPECT_TRUE(is_subspace_of(a, s) && is_subspace_of(b, s));
  }
}

TEST(Subspace, KernelAndImageRankNullity) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_matrix<Rational>(QQ, 1 + t % 4, 1 + (t / 4) % 4, rng, -1, 1);
    const auto k = kernel(m);
    EXPECT_EQ(k.dim() + image(m).dim(), m.cols());
    for (Index r = 0; r < k.dim(); ++r) EXPECT_TRUE(all_zero(m * k.basis_vector(r)));
  }
}

TEST(SolveLinearMap, ExampleXi) {
  // xi(e2) = a3 with domain span{e2} in F^2 and codomain span{a3} in F^3.
  const auto dom = Subspace<Rational>::span(2, mat<Rational>(QQ, {{0, 1}}));
  const auto cod = Subspace<Rational>::span(3, mat<Rational>(QQ, {{0, 0, 1}}));
  const auto s = solve_linear_map<Rational>({{vec<Rational>(QQ, {0, 1}), vec<Rational>(QQ, {0, 0, 1})}}, dom, cod);
  ASSERT_EQ(s.status, SolveStatus::total);
  EXPECT_TRUE(same((*s.map)(vec<Rational>(QQ, {0, 1})), vec<Rational>(QQ, {0, 0, 1})));
  EXPECT_TRUE(s.map->bijective());
}

TEST(SolveLinearMap, LinearityForcesInconsistency) {
  const auto whole = Subspace<Fp>::whole(2);
  const auto v = vec<Fp>(F5, {1, 2}), w = vec<Fp>(F5, {3, 0});
  const auto s = solve_linear_map<Fp>({{v, w}, {Vector<Fp>(Fp(2, 5) * v), w}}, whole, whole);
  EXPECT_EQ(s.status, SolveStatus::inconsistent);
  EXPECT_FALSE(s.map.has_value());
}

TEST(SolveLinearMap, EmptyPairsUnderdetermined) {
  const auto whole = Subspace<Fp>::whole(2);
  const auto s = solve_linear_map<Fp>({}, whole, whole);
  EXPECT_EQ(s.status, SolveStatus::underdetermined);
  EXPECT_EQ(s.map->domain().dim(), 0);
  EXPECT_EQ(solve_linear_map<Fp>({}, Subspace<Fp>(2), whole).status, SolveStatus::total);
}

// Brute force over every 2x2 matrix over F_3: the pairs are consistent iff
// some matrix satisfies them, and total iff all such matrices agree on F^2.
TEST(SolveLinearMap, MatchesExhaustiveEnumerationOverF3) {
  const auto matrices = all_matrices(F3, 2, 2);
  const auto vectors = all_vectors(F3, 2);
  const auto whole = Subspace<Fp>::whole(2);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, vectors.size() - 1);
  for (int t = 0; t < 400; ++t) {
    std::vector<std::pair<Vector<Fp>, Vector<Fp>>> pairs;
    for (int k = 0; k < t % 4; ++k) pairs.emplace_back(vectors[pick(rng)], vectors[pick(rng)]);
    std::vector<const Matrix<Fp>*> fits;
    for (const auto& m : matrices) {
      bool ok = true;
      for (const auto& [in, out] : pairs) ok = ok && same(Vector<Fp>(m * in), out);
      if (ok) fits.push_back(&m);
    }
    const auto s = solve_linear_map(pairs, whole, whole);
    EXPECT_EQ(s.status == SolveStatus::inconsistent, fits.empty());
    if (fits.empty()) continue;
    EXPECT_EQ(s.status == SolveStatus::total, fits.size() == 1);
    for (Index r = 0; r < s.map->domain().dim(); ++r) {
      const auto b = s.map->domain().basis_vector(r);
      for (const auto* m : fits) EXPECT_TRUE(same((*s.map)(b), Vector<Fp>(*m * b)));
    }
  }
}

TEST(Quotient, ExampleRepresentatives) {
  const auto z = Subspace<Rational>::span(3, mat<Rational>(QQ, {{0, 1, -1}}));
  const auto q = quotient(3, z);
  EXPECT_EQ(q.representatives, (std::vector<Index>{0, 2}));
  EXPECT_TRUE(same(Matrix<Rational>(q.projection * q.section), Matrix<Rational>(Matrix<Rational>::Identity(2, 2))));
  EXPECT_EQ(kernel(q.projection), z);
}

TEST(Quotient, TrivialCases) {
  const auto by_zero = quotient(3, Subspace<Fp>(3));
  EXPECT_TRUE(same(by_zero.projection, Matrix<Fp>(Matrix<Fp>::Identity(3, 3))));
  const auto by_all = quotient(3, Subspace<Fp>::whole(3));
  EXPECT_EQ(by_all.projection.rows(), 0);
  EXPECT_TRUE(by_all.representatives.empty());
}

TEST(Quotient, RoundTripAndKernel) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const Index n = 1 + t % 5;
    const auto sub = Subspace<Fp>::span(n, random_matrix<Fp>(F5, t % 3, n, rng));
    const auto q = quotient(n, sub);
    const Index d = n - sub.dim();
    EXPECT_TRUE(same(Matrix<Fp>(q.projection * q.section), Matrix<Fp>(Matrix<Fp>::Identity(d, d))));
    EXPECT_EQ(kernel(q.projection), sub);
  }
}

TEST(LinearMap, InverseAndCompose) {
  const auto whole = Subspace<Rational>::whole(2);
  const LinearMap<Rational> f(whole, whole, mat<Rational>(QQ, {{1, 2}, {3, 4}}));
  const auto id = compose(f.inverse(), f);
  EXPECT_EQ(id, LinearMap<Rational>::identity(whole));
  const LinearMap<Rational> singular(whole, whole, mat<Rational>(QQ, {{1, 2}, {2, 4}}));
  EXPECT_THROW(singular.inverse(), Error);
}

TEST(LinearMap, AmbientMatrixActsOnDomain) {
  const auto dom = Subspace<Fp>::span(3, mat<Fp>(F5, {{1, 0, 2}, {0, 1, 1}}));
  const auto cod = Subspace<Fp>::whole(2);
  const Matrix<Fp> ambient = mat<Fp>(F5, {{1, 2, 3}, {0, 4, 1}});
  const auto f = LinearMap<Fp>::from_ambient(dom, cod, ambient);
  for (Index r = 0; r < dom.dim(); ++r) {
    const auto b = dom.basis_vector(r);
    EXPECT_TRUE(same(Vector<Fp>(f.ambient_matrix() * b), Vector<Fp>(ambient * b)));
  }
}
