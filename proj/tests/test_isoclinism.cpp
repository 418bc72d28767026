#include <gtest/gtest.h>

#include <chrono>
#include <set>

#include "leibalg/isoclinism.hpp"
#include "support.hpp"

using namespace leibalg;
using leibalg::testing::all_matrices;
using leibalg::testing::g1;
using leibalg::testing::g2;
using leibalg::testing::mat;
using leibalg::testing::random_extension;
using leibalg::testing::vec;

namespace {

const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);
const Field QQ = Field::rationals();

template <class S>
IsoclinismWitness<S> example_witness(const CentralExtension<S>& e1, const CentralExtension<S>& e2) {
  const Field& f = e1.field();
  return {LinearMap<S>(Subspace<S>::whole(2), Subspace<S>::whole(2), Matrix<S>(Matrix<S>::Identity(2, 2))),
          LinearMap<S>(lie_commutator(e1.g()), lie_commutator(e2.g()), mat<S>(f, {{1}}))};
}

/// Matrices of GL(d, F_p) in search order: column 0 is the most significant
/// digit, each column ordered by its code.
std::vector<Matrix<Fp>> general_linear_in_order(const Field& f, Index d) {
  const auto columns = leibalg::testing::all_vectors(f, d);
  const auto count = columns.size();
  std::size_t total = 1;
  for (Index i = 0; i < d; ++i) total *= count;
  std::vector<Matrix<Fp>> out;
  for (std::size_t t = 0; t < total; ++t) {
    Matrix<Fp> m(d, d);
    std::size_t rest = t;
    for (Index c = d - 1; c >= 0; --c) {
      m.col(c) = columns[rest % count];
      rest /= count;
    }
    if (rank(m) == d) out.push_back(m);
  }
  return out;
}

/// First eta in search order that is an algebra isomorphism with an injective derived xi.
std::optional<Matrix<Fp>> brute_first_eta(const CentralExtension<Fp>& e1, const CentralExtension<Fp>& e2) {
  if (e1.q().dim() != e2.q().dim()) return std::nullopt;
  for (const auto& eta : general_linear_in_order(e1.field(), e1.q().dim())) {
    if (!is_bracket_preserving(e1.q(), e2.q(), eta)) continue;
    const auto xi = derive_xi(e1, e2, eta);
    if (xi.status == SolveStatus::total && xi.map->injective()) return eta;
  }
  return std::nullopt;
}

struct Pair {
  CentralExtension<Fp> first;
  CentralExtension<Fp> second;
};

/// Mix of isoclinic-by-construction and unrelated pairs.
std::vector<Pair> sample_pairs(std::uint64_t seed, int count) {
  AlgebraSampler sampler(F3, seed);
  std::vector<Pair> out;
  for (int t = 0; t < count; ++t) {
    const auto kind = t % 4;
    if (kind == 0) {
      auto e = random_extension(sampler, 3);
      const auto change = sampler.invertible(e.q().dim());
      auto moved = backward_extension(e, AlgebraMorphism<Fp>(transport(e.q(), change), e.q(), change)).extension;
      out.push_back({std::move(e), std::move(moved)});
    } else if (kind == 1) {
      const auto g = sampler.mixed(3);
      const auto a = LeibnizAlgebra<Fp>::abelian(F3, 1 + static_cast<Index>(sampler.below(2)));
      out.push_back({canonical_extension(g), canonical_extension(direct_product(g, a))});
    } else if (kind == 2) {
      out.push_back({canonical_extension(sampler.mixed(3)), canonical_extension(sampler.mixed(3))});
    } else {
      auto e = random_extension(sampler, 3);
      auto p = product_with_abelian(e, LeibnizAlgebra<Fp>::abelian(F3, 1)).extension;
      out.push_back({std::move(e), std::move(p)});
    }
  }
  return out;
}

}  // namespace

TEST(Witness, ExampleWitnessPasses) {
  const auto e1 = canonical_extension(g1<Rational>(QQ));
  const auto e2 = canonical_extension(g2<Rational>(QQ));
  const auto r = check_witness(e1, e2, example_witness(e1, e2));
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.surjectivity_automatic());
  EXPECT_TRUE(check_witness(e1, e1, identity_witness(e1)).ok());

  for (const Field& f : {F3, F5}) {
    const auto p1 = canonical_extension(g1<Fp>(f));
    const auto p2 = canonical_extension(g2<Fp>(f));
    EXPECT_TRUE(check_witness(p1, p2, example_witness(p1, p2)).ok());
  }
}

TEST(Witness, ZeroXiFails) {
  const auto e1 = canonical_extension(g1<Rational>(QQ));
  const auto e2 = canonical_extension(g2<Rational>(QQ));
  auto w = example_witness(e1, e2);
  w.xi = LinearMap<Rational>::zero(w.xi.domain(), w.xi.codomain());
  const auto r = check_witness(e1, e2, w);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.xi_injective);
  EXPECT_FALSE(r.diagram_commutes);
  ASSERT_TRUE(r.failing_pair);
  EXPECT_EQ(*r.failing_pair, std::make_pair(Index{0}, Index{0}));
}

TEST(Witness, WrongShapesFail) {
  const auto e1 = canonical_extension(g1<Rational>(QQ));
  const auto e2 = canonical_extension(g2<Rational>(QQ));
  auto w = example_witness(e1, e2);
  w.xi = LinearMap<Rational>::identity(lie_commutator(e1.g()));
  EXPECT_FALSE(check_witness(e1, e2, w).shapes_ok);
}

TEST(DeriveXi, WorkedExample) {
  const auto e1 = canonical_extension(g1<Rational>(QQ));
  const auto e2 = canonical_extension(g2<Rational>(QQ));
  const auto xi = derive_xi(e1, e2, Matrix<Rational>(Matrix<Rational>::Identity(2, 2)));
  ASSERT_EQ(xi.status, SolveStatus::total);
  EXPECT_TRUE(same((*xi.map)(vec<Rational>(QQ, {0, 1})), vec<Rational>(QQ, {0, 0, 1})));
}

TEST(DeriveXi, IdentityOnItself) {
  const auto e = canonical_extension(g2<Rational>(QQ));
  const auto xi = derive_xi(e, e, Matrix<Rational>(Matrix<Rational>::Identity(2, 2)));
  ASSERT_EQ(xi.status, SolveStatus::total);
  EXPECT_EQ(*xi.map, LinearMap<Rational>::identity(lie_commutator(e.g())));
}

TEST(DeriveXi, MatchesScalarBruteForce) {
  // [g1,g1]_Lie and [g2,g2]_Lie are lines, so every candidate xi is a nonzero scalar.
  for (const Field& f : {F3, F5}) {
    const auto e1 = canonical_extension(g1<Fp>(f));
    const auto e2 = canonical_extension(g2<Fp>(f));
    const auto c1 = commutator_map(e1), c2 = commutator_map(e2);
    const auto comm1 = lie_commutator(e1.g()), comm2 = lie_commutator(e2.g());
    std::uint64_t brute = 0;
    for (const auto& eta : general_linear_in_order(f, 2)) {
      bool any = false;
      for (std::uint32_t s = 1; s < f.characteristic() && !any; ++s) {
        const LinearMap<Fp> xi(comm1, comm2, mat<Fp>(f, {{static_cast<long long>(s)}}));
        bool ok = is_bracket_preserving(e1.q(), e2.q(), eta);
        for (Index i = 0; i < 2 && ok; ++i)
          for (Index j = 0; j < 2 && ok; ++j) ok = same(xi(c1.value(i, j)), c2(eta.col(i), eta.col(j)));
        any = ok;
      }
      const auto derived = derive_xi(e1, e2, eta);
      const bool derived_ok = is_bracket_preserving(e1.q(), e2.q(), eta) && derived.status == SolveStatus::total &&
                              derived.map->injective();
      EXPECT_EQ(any, derived_ok);
      brute += any ? 1 : 0;
    }
    SearchOptions all;
    std::uint64_t visited = 0;
    for_each_isoclinism(e1, e2, all, [&](const IsoclinismWitness<Fp>&) {
      ++visited;
      return true;
    });
    EXPECT_EQ(visited, brute);
    EXPECT_GT(brute, 0u);
  }
}

TEST(Search, ExamplePairExhaustsGeneralLinearGroup) {
  const std::vector<std::pair<Field, std::uint64_t>> cases{{F3, 48}, {F5, 480}};
  for (const auto& [f, order] : cases) {
    EXPECT_EQ(general_linear_order(2, f.characteristic()), order);
    const auto e1 = canonical_extension(g1<Fp>(f));
    const auto e2 = canonical_extension(g2<Fp>(f));
    SearchOptions exhaustive;
    exhaustive.prune_brackets = false;
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t found = 0;
    const auto stats = for_each_isoclinism(e1, e2, exhaustive, [&](const IsoclinismWitness<Fp>& w) {
      EXPECT_TRUE(check_witness(e1, e2, w).ok());
      ++found;
      return true;
    });
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_EQ(stats.complete, order);
    EXPECT_EQ(stats.witnesses, found);
    EXPECT_GT(found, 0u);
    EXPECT_LT(seconds, 1.0);

    const auto first = search_isoclinism(e1, e2);
    ASSERT_TRUE(first.witness);
    const auto brute = brute_first_eta(e1, e2);
    ASSERT_TRUE(brute);
    EXPECT_TRUE(same(first.witness->eta.coordinates(), *brute));
  }
}

TEST(Search, ExamplePairFirstWitnessIsTheKnownOne) {
  // Frozen from brute_first_eta: the identity in the bases (e1, e2) and (class of a1, class of a3).
  const auto e1 = canonical_extension(g1<Fp>(F3));
  const auto e2 = canonical_extension(g2<Fp>(F3));
  const auto r = search_isoclinism(e1, e2);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(same(r.witness->eta.coordinates(), mat<Fp>(F3, {{1, 0}, {0, 1}})));
  EXPECT_TRUE(same(r.witness->xi(vec<Fp>(F3, {0, 1})), vec<Fp>(F3, {0, 0, 1})));
}

TEST(Search, BracketPruningKeepsTheWitnessSet) {
  const auto pairs = sample_pairs(61, 40);
  for (const auto& [a, b] : pairs) {
    SearchOptions pruned, plain;
    plain.prune_brackets = false;
    plain.prune_invariants = false;
    std::vector<Matrix<Fp>> x, y;
    for_each_isoclinism(a, b, pruned, [&](const IsoclinismWitness<Fp>& w) {
      x.push_back(w.eta.coordinates());
      return true;
    });
    for_each_isoclinism(a, b, plain, [&](const IsoclinismWitness<Fp>& w) {
      y.push_back(w.eta.coordinates());
      return true;
    });
    ASSERT_EQ(x.size(), y.size());
    for (std::size_t k = 0; k < x.size(); ++k) EXPECT_TRUE(same(x[k], y[k]));
  }
}

TEST(Search, FirstWitnessMatchesBruteForceOnRandomPairs) {
  const auto pairs = sample_pairs(67, 60);
  int found = 0;
  for (const auto& [a, b] : pairs) {
    const auto r = search_isoclinism(a, b);
    const auto brute = brute_first_eta(a, b);
    ASSERT_EQ(r.witness.has_value(), brute.has_value());
    if (!brute) continue;
    ++found;
    EXPECT_TRUE(same(r.witness->eta.coordinates(), *brute));
    EXPECT_TRUE(check_witness(a, b, *r.witness).ok());
  }
  EXPECT_GT(found, 30);
}

TEST(Search, InvariantMismatchAndSelf) {
  const auto e1 = canonical_extension(g1<Fp>(F3));
  const auto flat = extension_by_ideal(LeibnizAlgebra<Fp>::abelian(F3, 2), Subspace<Fp>(2));
  const auto r = search_isoclinism(e1, flat);
  EXPECT_FALSE(r.witness);
  EXPECT_TRUE(r.stats.invariant_mismatch);
  EXPECT_FALSE(algebras_isoclinic(g1<Fp>(F3), LeibnizAlgebra<Fp>::abelian(F3, 2)).witness);

  const auto self = search_isoclinism(e1, e1);
  ASSERT_TRUE(self.witness);
  EXPECT_EQ(self.witness->eta, LinearMap<Fp>::identity(Subspace<Fp>::whole(2)));
}

TEST(Search, RejectsRationalsAndHugeGroups) {
  const auto e = canonical_extension(g1<Rational>(QQ));
  try {
    search_isoclinism(e, e);
    FAIL() << "search over Q accepted";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::search);
  }
  const auto flat5 = extension_by_ideal(LeibnizAlgebra<Fp>::abelian(F3, 5), Subspace<Fp>(5));
  EXPECT_GT(general_linear_order(5, 3), SearchOptions{}.max_gl);
  try {
    search_isoclinism(flat5, flat5);
    FAIL() << "GL(5, F_3) accepted under the default bound";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::search);
  }
  SearchOptions tight;
  tight.max_gl = 47;
  const auto p = canonical_extension(g1<Fp>(F3));
  EXPECT_THROW(search_isoclinism(p, p, tight), Error);
  tight.max_gl = 48;
  EXPECT_TRUE(search_isoclinism(p, p, tight).witness);
}

TEST(Search, GeneralLinearOrder) {
  EXPECT_EQ(general_linear_order(0, 3), 1u);
  EXPECT_EQ(general_linear_order(1, 5), 4u);
  EXPECT_EQ(general_linear_order(3, 3), 11232u);
  EXPECT_EQ(general_linear_order(4, 5), 116064000000u);
  EXPECT_EQ(general_linear_order(40, 7), std::numeric_limits<std::uint64_t>::max());
  for (Index d = 1; d <= 2; ++d)
    EXPECT_EQ(general_linear_in_order(F3, d).size(), general_linear_order(static_cast<std::uint64_t>(d), 3));
}

TEST(AlgebrasIsoclinic, Examples) {
  EXPECT_TRUE(algebras_isoclinic(g1<Fp>(F3), g2<Fp>(F3)).witness);
  EXPECT_TRUE(algebras_isoclinic(LeibnizAlgebra<Fp>::abelian(F3, 3), LeibnizAlgebra<Fp>::abelian(F3, 0)).witness);
  AlgebraSampler sampler(F3, 71);
  for (int t = 0; t < 40; ++t) {
    const auto g = sampler.mixed(3);
    const auto a = LeibnizAlgebra<Fp>::abelian(F3, 1 + static_cast<Index>(sampler.below(2)));
    EXPECT_TRUE(algebras_isoclinic(g, direct_product(g, a)).witness);
  }
}

TEST(Autoclinism, AbelianTrivialAndGroupAxioms) {
  const auto flat = extension_by_ideal(LeibnizAlgebra<Fp>::abelian(F3, 2), Subspace<Fp>(2));
  const auto all = enumerate_autoclinisms(flat);
  EXPECT_EQ(all.size(), 48u);
  for (const auto& w : all) EXPECT_EQ(w.xi.domain().dim(), 0);

  const auto point = canonical_extension(LeibnizAlgebra<Fp>::abelian(F3, 2));
  EXPECT_EQ(enumerate_autoclinisms(point).size(), 1u);

  const auto e = canonical_extension(g1<Fp>(F3));
  const auto group = enumerate_autoclinisms(e);
  ASSERT_FALSE(group.empty());
  auto contains = [&](const IsoclinismWitness<Fp>& w) {
    for (const auto& g : group)
      if (g.eta == w.eta && g.xi == w.xi) return true;
    return false;
  };
  EXPECT_TRUE(contains(identity_witness(e)));
  for (const auto& a : group) {
    EXPECT_TRUE(check_witness(e, e, a).ok());
    EXPECT_TRUE(contains(inverse(a)));
    for (const auto& b : group) EXPECT_TRUE(contains(compose(a, b)));
  }
  // Every autoclinism is an automorphism of q1 = g1.
  std::uint64_t automorphisms = 0;
  for (const auto& m : general_linear_in_order(F3, 2)) automorphisms += is_bracket_preserving(e.q(), e.q(), m);
  EXPECT_LE(group.size(), automorphisms);
}

TEST(Classify, Examples) {
  const std::vector<LeibnizAlgebra<Fp>> catalog{g1<Fp>(F3), g2<Fp>(F3), LeibnizAlgebra<Fp>::abelian(F3, 2),
                                                LeibnizAlgebra<Fp>::abelian(F3, 3)};
  const auto c = classify(catalog);
  ASSERT_EQ(c.classes.size(), 2u);
  EXPECT_EQ(c.classes[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(c.classes[1], (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(c.class_of, (std::vector<std::size_t>{0, 0, 1, 1}));

  EXPECT_EQ(classify({g2<Fp>(F3)}).classes.size(), 1u);
  const auto copies = classify(std::vector<LeibnizAlgebra<Fp>>(4, g1<Fp>(F3)));
  ASSERT_EQ(copies.classes.size(), 1u);
  EXPECT_EQ(copies.classes[0].size(), 4u);
}

TEST(Classify, LieAlgebrasJoinTheZeroClass) {
  // [e1,e2] = e2 = -[e2,e1]: a non-abelian Lie algebra, yet [g,g]_Lie = 0 and Z_Lie(g) = g.
  using E = LeibnizAlgebra<Fp>::Entry;
  const auto lie = LeibnizAlgebra<Fp>::from_brackets(F3, 2, {E{0, 1, vec<Fp>(F3, {0, 1})}, E{1, 0, vec<Fp>(F3, {0, 2})}});
  ASSERT_TRUE(validate(lie).ok);
  EXPECT_FALSE(is_abelian(lie));
  EXPECT_TRUE(lie_commutator(lie).is_zero_space());
  EXPECT_TRUE(algebras_isoclinic(lie, LeibnizAlgebra<Fp>::abelian(F3, 0)).witness);
}

TEST(Classify, PartitionAndWitnessesOnRandomCatalog) {
  AlgebraSampler sampler(F3, 73);
  std::vector<LeibnizAlgebra<Fp>> catalog;
  for (int t = 0; t < 60; ++t) catalog.push_back(sampler.mixed(3));
  const auto c = classify(catalog);
  std::set<std::size_t> seen;
  for (std::size_t k = 0; k < c.classes.size(); ++k)
    for (auto i : c.classes[k]) {
      EXPECT_TRUE(seen.insert(i).second);
      EXPECT_EQ(c.class_of[i], k);
    }
  EXPECT_EQ(seen.size(), catalog.size());
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const auto rep = c.classes[c.class_of[i]].front();
    EXPECT_TRUE(check_witness(canonical_extension(catalog[rep]), canonical_extension(catalog[i]),
                              c.witness_from_representative[i])
                    .ok());
  }
  // Representatives of different classes are not isoclinic.
  for (std::size_t a = 0; a < c.classes.size(); ++a)
    for (std::size_t b = a + 1; b < c.classes.size(); ++b)
      EXPECT_FALSE(algebras_isoclinic(catalog[c.classes[a].front()], catalog[c.classes[b].front()]).witness);
}

TEST(Equivalence, ComposeInvertIdentity) {
  const auto pairs = sample_pairs(79, 60);
  for (const auto& [a, b] : pairs) {
    const auto r = search_isoclinism(a, b);
    if (!r.witness) continue;
    EXPECT_TRUE(check_witness(a, a, identity_witness(a)).ok());
    EXPECT_TRUE(check_witness(b, a, inverse(*r.witness)).ok());
    // a ~ b ~ a composes to an autoclinism of a, and a ~ b ~ b' along an autoclinism of b.
    EXPECT_TRUE(check_witness(a, a, compose(inverse(*r.witness), *r.witness)).ok());
    for (const auto& auto_b : enumerate_autoclinisms(b)) EXPECT_TRUE(check_witness(a, b, compose(auto_b, *r.witness)).ok());
  }
}

TEST(IsoclinicHomomorphism, IdentityPullbackAndProjection) {
  const auto e = canonical_extension(g2<Fp>(F3));
  const auto id = is_isoclinic_homomorphism(e, e, identity_morphism(e));
  EXPECT_TRUE(id.isoclinic);
  ASSERT_TRUE(id.witness);
  EXPECT_TRUE(check_witness(e, e, *id.witness).ok());

  const auto e1 = canonical_extension(g1<Fp>(F3));
  const auto w = search_isoclinism(e1, e).witness;
  ASSERT_TRUE(w);
  const auto dp = diagonal_pullback(e1, e, AlgebraMorphism<Fp>(e1.q(), e.q(), w->eta.coordinates()));
  EXPECT_TRUE(is_isoclinic_homomorphism(dp.extension, e1, dp.first).isoclinic);
  EXPECT_TRUE(is_isoclinic_homomorphism(dp.extension, e, dp.second).isoclinic);

  // g1 x g1 -> g1 onto the first factor, over the trivial kernel: kills (0, e2) in the commutator.
  const auto a = g1<Fp>(F3);
  const auto aa = direct_product(a, a);
  const auto whole = extension_by_ideal(aa, Subspace<Fp>(4));
  const auto target = extension_by_ideal(a, Subspace<Fp>(2));
  const Matrix<Fp> proj = mat<Fp>(F3, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  const ExtensionMorphism<Fp> m{AlgebraMorphism<Fp>(whole.n(), target.n(), Matrix<Fp>(0, 0)),
                                AlgebraMorphism<Fp>(aa, a, proj), AlgebraMorphism<Fp>(whole.q(), target.q(), proj)};
  const auto r = is_isoclinic_homomorphism(whole, target, m);
  EXPECT_FALSE(r.isoclinic);
  EXPECT_FALSE(intersect(m.beta.kernel(), lie_commutator(aa)).is_zero_space());

  ExtensionMorphism<Fp> broken = identity_morphism(e);
  broken.gamma = AlgebraMorphism<Fp>(e.q(), e.q(), Matrix<Fp>(Matrix<Fp>::Zero(2, 2)));
  try {
    is_isoclinic_homomorphism(e, e, broken);
    FAIL() << "non-commuting triple accepted";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::not_homomorphism);
  }
}

TEST(IsoclinicAlgebraHom, Examples) {
  const auto a = g2<Fp>(F3);
  const auto ab = LeibnizAlgebra<Fp>::abelian(F3, 2);
  const AlgebraMorphism<Fp> into(a, direct_product(a, ab), vstack(Matrix<Fp>(Matrix<Fp>::Identity(3, 3)), Matrix<Fp>(Matrix<Fp>::Zero(2, 3))));
  EXPECT_TRUE(is_isoclinic_algebra_hom(into));
  EXPECT_FALSE(is_isoclinic_algebra_hom(AlgebraMorphism<Fp>(a, g1<Fp>(F3), Matrix<Fp>(Matrix<Fp>::Zero(2, 3)))));

  const auto z = quotient_algebra(a, lie_center(a));
  EXPECT_TRUE(is_isoclinic_algebra_hom(z.projection));
  const auto comm = quotient_algebra(a, lie_commutator(a));
  EXPECT_FALSE(is_isoclinic_algebra_hom(comm.projection));
}

TEST(Properties, InducedCanonicalWitnessAndCenterCriterion) {
  const auto pairs = sample_pairs(83, 80);
  int found = 0;
  for (const auto& [a, b] : pairs) {
    const auto r = search_isoclinism(a, b);
    if (!r.witness) continue;
    ++found;
    const auto w = induced_algebra_witness(a, b, *r.witness);
    EXPECT_TRUE(check_witness(canonical_extension(a.g()), canonical_extension(b.g()), w).ok());
    EXPECT_EQ(a.kernel_image() == lie_center(a.g()), b.kernel_image() == lie_center(b.g()));
  }
  EXPECT_GT(found, 40);
}

TEST(Properties, XiRespectsProjectionsAndKernels) {
  const auto pairs = sample_pairs(89, 80);
  for (const auto& [a, b] : pairs) {
    const auto r = search_isoclinism(a, b);
    if (!r.witness) continue;
    const auto& w = *r.witness;
    const auto comm1 = lie_commutator(a.g()), comm2 = lie_commutator(b.g());
    for (Index k = 0; k < comm1.dim(); ++k) {
      const Vector<Fp> x = comm1.basis_vector(k);
      EXPECT_TRUE(same(Vector<Fp>(b.pi().matrix() * w.xi(x)), Vector<Fp>(w.eta.coordinates() * (a.pi().matrix() * x))));
    }
    const auto meet1 = intersect(a.kernel_image(), comm1), meet2 = intersect(b.kernel_image(), comm2);
    EXPECT_EQ(image(w.xi.ambient_matrix(), meet1), meet2);
  }
}

TEST(Properties, PullbackTriplesDecideIsoclinismPerEta) {
  const auto pairs = sample_pairs(97, 60);
  for (const auto& [a, b] : pairs) {
    if (a.q().dim() != b.q().dim() || a.q().dim() > 2) continue;
    for (const auto& eta : general_linear_in_order(F3, a.q().dim())) {
      if (!is_bracket_preserving(a.q(), b.q(), eta)) continue;
      const auto xi = derive_xi(a, b, eta);
      const bool witness = xi.status == SolveStatus::total && xi.map->injective();
      const auto dp = diagonal_pullback(a, b, AlgebraMorphism<Fp>(a.q(), b.q(), eta));
      const auto s1 = is_isoclinic_homomorphism(dp.extension, a, dp.first);
      const auto s2 = is_isoclinic_homomorphism(dp.extension, b, dp.second);
      const bool epis = s1.isoclinic && s2.isoclinic && dp.first.beta.surjective() && dp.second.beta.surjective();
      ASSERT_EQ(witness, epis);
      if (!witness) continue;
      // Both witnesses from the pullback combine into the searched one.
      const auto combined = compose(*s2.witness, inverse(*s1.witness));
      EXPECT_TRUE(check_witness(a, b, combined).ok());
      EXPECT_EQ(combined.xi, *xi.map);
      // [tilde-g, tilde-g]_Lie is the graph of xi.
      const Matrix<Fp> inc = vstack(dp.first.beta.matrix(), dp.second.beta.matrix());
      const auto comm = lie_commutator(dp.extension.g());
      std::vector<Vector<Fp>> graph;
      const auto comm1 = lie_commutator(a.g());
      for (Index k = 0; k < comm1.dim(); ++k) {
        Vector<Fp> v(a.g().dim() + b.g().dim());
        v << comm1.basis_vector(k), (*xi.map)(comm1.basis_vector(k));
        graph.push_back(v);
      }
      EXPECT_EQ(image(inc, comm), Subspace<Fp>::span(a.g().dim() + b.g().dim(), graph));
    }
  }
}
