#include "leibalg/suite.hpp"

#include <chrono>
#include <functional>
#include <set>

#include "leibalg/catalog.hpp"
#include "leibalg/homology.hpp"
#include "leibalg/sampling.hpp"

namespace leibalg {

namespace {

template <class S>
LeibnizAlgebra<S> named(const std::string& name, const Field& f) {
  return std::get<LeibnizAlgebra<S>>(catalog_algebra(name, f));
}

template <class S>
Subspace<S> rows_span(const Field& f, Index ambient, std::initializer_list<std::initializer_list<long long>> rows) {
  Matrix<S> m(static_cast<Index>(rows.size()), ambient);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long long x : row) m(i, j++) = make_scalar<S>(f, x);
    ++i;
  }
  return Subspace<S>::span(ambient, m);
}

/// Tally of named checks; the details keep the first few failures.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failures_;
    if (examples_.size() < 5) examples_.push_back(what);
  }
  std::uint64_t checked() const { return checked_; }
  std::uint64_t failures() const { return failures_; }

  CriterionResult result(int id, std::string name, Json details, bool extra = true) const {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.checked = checked_;
    r.failures = failures_;
    r.passed = failures_ == 0 && checked_ > 0 && extra;
    details["failed_checks"] = examples_;
    r.details = std::move(details);
    return r;
  }

 private:
  std::uint64_t checked_ = 0;
  std::uint64_t failures_ = 0;
  std::vector<std::string> examples_;
};

template <class S>
IsoclinismWitness<S> example_witness(const CentralExtension<S>& e1, const CentralExtension<S>& e2) {
  const Field& f = e1.field();
  Matrix<S> one(1, 1);
  one(0, 0) = make_scalar<S>(f, 1);
  return {LinearMap<S>::identity(Subspace<S>::whole(e1.q().dim())),
          LinearMap<S>(lie_commutator(e1.g()), lie_commutator(e2.g()), one)};
}

template <class S>
bool example_witness_passes(const Field& f) {
  const auto e1 = canonical_extension(named<S>("paper_g1", f));
  const auto e2 = canonical_extension(named<S>("paper_g2", f));
  return check_witness(e1, e2, example_witness(e1, e2)).ok();
}

std::string field_label(const Field& f) { return f.is_rationals() ? "Q" : "F_" + std::to_string(f.characteristic()); }

Subspace<Fp> graph_of(const LinearMap<Fp>& xi, Index first_dim, Index second_dim) {
  std::vector<Vector<Fp>> graph;
  for (Index k = 0; k < xi.domain().dim(); ++k) {
    Vector<Fp> v(first_dim + second_dim);
    v << xi.domain().basis_vector(k), xi(xi.domain().basis_vector(k));
    graph.push_back(v);
  }
  return Subspace<Fp>::span(first_dim + second_dim, graph);
}

}  // namespace

SuiteData prepare_suite(const SuiteConfig& config) {
  SuiteData d;
  d.config = config;
  d.field = Field::prime(config.prime);
  const Field& f = d.field;
  AlgebraSampler sampler(f, config.seed);
  for (Index k = 0; k <= config.max_dim; ++k) d.algebras.push_back(LeibnizAlgebra<Fp>::abelian(f, k));
  d.algebras.push_back(named<Fp>("paper_g1", f));
  d.algebras.push_back(named<Fp>("paper_g2", f));
  for (std::size_t t = 0; t < config.algebras; ++t) d.algebras.push_back(sampler.mixed(config.max_dim));
  d.classes = classify(d.algebras, config.search);

  for (std::size_t t = 0; t < config.pairs; ++t) {
    switch (t % 4) {
      case 0: {
        auto e = random_extension(sampler, config.max_dim);
        const auto change = sampler.invertible(e.q().dim());
        auto moved = backward_extension(e, AlgebraMorphism<Fp>(transport(e.q(), change), e.q(), change)).extension;
        d.pairs.push_back({"backward", std::move(e), std::move(moved), std::nullopt});
        break;
      }
      case 1: {
        const auto g = sampler.mixed(config.max_dim);
        const auto a = LeibnizAlgebra<Fp>::abelian(f, 1 + static_cast<Index>(sampler.below(2)));
        d.pairs.push_back({"abelian_factor", canonical_extension(g), canonical_extension(direct_product(g, a)), std::nullopt});
        break;
      }
      case 2:
        d.pairs.push_back({"unrelated", random_extension(sampler, config.max_dim), random_extension(sampler, config.max_dim),
                           std::nullopt});
        break;
      default: {
        auto e = random_extension(sampler, config.max_dim);
        auto p = product_with_abelian(e, LeibnizAlgebra<Fp>::abelian(f, 1)).extension;
        d.pairs.push_back({"product", std::move(e), std::move(p), std::nullopt});
      }
    }
    auto& pair = d.pairs.back();
    pair.witness = search_isoclinism(pair.first, pair.second, config.search).witness;
  }

  for (const auto& g : d.algebras) {
    d.extensions.push_back(canonical_extension(g));
    d.extensions.push_back(random_extension_of(sampler, g));
  }
  for (const auto& p : d.pairs) {
    d.extensions.push_back(p.first);
    d.extensions.push_back(p.second);
    if (p.witness)
      d.extensions.push_back(
          diagonal_pullback(p.first, p.second, AlgebraMorphism<Fp>(p.first.q(), p.second.q(), p.witness->eta.coordinates()))
              .extension);
  }
  return d;
}

CriterionResult check_example_values() {
  const Field QQ = Field::rationals();
  using R = Rational;
  const auto g1 = named<R>("paper_g1", QQ);
  const auto g2 = named<R>("paper_g2", QQ);
  Tally t;
  Json details;
  const auto z1 = lie_center(g1), z2 = lie_center(g2);
  const auto c1 = lie_commutator(g1), c2 = lie_commutator(g2);
  t.check(z1.is_zero_space(), "Z_Lie(g1) = 0");
  t.check(z2 == rows_span<R>(QQ, 3, {{0, 1, -1}}), "Z_Lie(g2) = span{a2-a3}");
  t.check(c1 == rows_span<R>(QQ, 2, {{0, 1}}), "[g1,g1]_Lie = span{e2}");
  t.check(c2 == rows_span<R>(QQ, 3, {{0, 0, 1}}), "[g2,g2]_Lie = span{a3}");
  const auto q1 = quotient_algebra(g1, z1);
  t.check(q1.algebra == g1 && same(q1.projection.matrix(), Matrix<R>(Matrix<R>::Identity(2, 2))), "q1 = g1");
  const auto q2 = quotient_algebra(g2, z2);
  t.check(q2.algebra.dim() == 2, "dim q2 = 2");
  t.check(q2.representatives == std::vector<Index>{0, 2}, "q2 represented by a1, a3");
  details["lie_center_g1"] = subspace_json(z1, g1);
  details["lie_center_g2"] = subspace_json(z2, g2);
  details["lie_commutator_g1"] = subspace_json(c1, g1);
  details["lie_commutator_g2"] = subspace_json(c2, g2);
  details["q1_basis"] = q1.algebra.names();
  details["q2_basis"] = q2.algebra.names();
  details["q2"] = serialize(q2.algebra);
  return t.result(1, "worked example values", std::move(details));
}

CriterionResult check_example_witness() {
  Tally t;
  Json details;
  t.check(example_witness_passes<Rational>(Field::rationals()), "example witness over Q");
  double seconds = 0;
  Json searches = Json::array();
  for (std::uint32_t p : {3u, 5u}) {
    const Field f = Field::prime(p);
    t.check(example_witness_passes<Fp>(f), "example witness over " + field_label(f));
    const auto e1 = canonical_extension(named<Fp>("paper_g1", f));
    const auto e2 = canonical_extension(named<Fp>("paper_g2", f));
    SearchOptions exhaustive;
    exhaustive.prune_brackets = false;
    std::uint64_t valid = 0;
    const auto start = std::chrono::steady_clock::now();
    const auto stats = for_each_isoclinism(e1, e2, exhaustive, [&](const IsoclinismWitness<Fp>& w) {
      if (check_witness(e1, e2, w).ok()) ++valid;
      return true;
    });
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    seconds += elapsed;
    const auto order = general_linear_order(2, p);
    t.check(stats.complete == order, "all of GL(2, " + field_label(f) + ") visited");
    t.check(stats.witnesses > 0 && valid == stats.witnesses, "witnesses found and checked over " + field_label(f));
    t.check(elapsed < 1.0, "exhaustion over " + field_label(f) + " under 1 s");
    const auto first = search_isoclinism(e1, e2);
    t.check(first.witness.has_value(), "search finds a witness over " + field_label(f));
    Json entry{{"field", field_label(f)}, {"general_linear_order", order}, {"complete", stats.complete},
               {"witnesses", stats.witnesses}};
    if (first.witness) {
      entry["first_eta"] = matrix_json(first.witness->eta.coordinates(), f);
      entry["first_xi"] = matrix_json(first.witness->xi.coordinates(), f);
      entry["first_xi_of_e2"] = format_vector(first.witness->xi(lie_commutator(e1.g()).basis_vector(0)), e2.g().names(), f);
    }
    searches.push_back(std::move(entry));
  }
  details["searches"] = std::move(searches);
  auto r = t.result(2, "worked example witness and exhaustive search", std::move(details));
  r.seconds = seconds;
  return r;
}

CriterionResult check_equivalence(const SuiteData& d) {
  Tally t;
  const auto& c = d.classes;
  std::vector<CentralExtension<Fp>> exts;
  for (const auto& g : d.algebras) exts.push_back(canonical_extension(g));
  std::vector<int> seen(d.algebras.size(), 0);
  for (std::size_t k = 0; k < c.classes.size(); ++k)
    for (auto i : c.classes[k]) {
      ++seen[i];
      t.check(c.class_of[i] == k, "class_of agrees with classes");
    }
  for (std::size_t i = 0; i < seen.size(); ++i) t.check(seen[i] == 1, "algebra " + std::to_string(i) + " in exactly one class");

  std::uint64_t compositions = 0;
  for (const auto& members : c.classes) {
    const auto rep = members.front();
    t.check(check_witness(exts[rep], exts[rep], identity_witness(exts[rep])).ok(), "identity witness");
    for (std::size_t m = 0; m < members.size(); ++m) {
      const auto i = members[m];
      const auto& w = c.witness_from_representative[i];
      t.check(check_witness(exts[rep], exts[i], w).ok(), "witness from representative to " + std::to_string(i));
      t.check(check_witness(exts[i], exts[rep], inverse(w)).ok(), "inverse witness for " + std::to_string(i));
      if (m + 1 < members.size()) {
        const auto j = members[m + 1];
        ++compositions;
        t.check(check_witness(exts[i], exts[j], compose(c.witness_from_representative[j], inverse(w))).ok(),
                "composite " + std::to_string(i) + " -> " + std::to_string(j));
      }
    }
  }
  for (std::size_t a = 0; a < c.classes.size(); ++a)
    for (std::size_t b = a + 1; b < c.classes.size(); ++b) {
      const auto ra = c.classes[a].front(), rb = c.classes[b].front();
      t.check(!search_isoclinism(exts[ra], exts[rb], d.config.search).witness,
              "representatives " + std::to_string(ra) + " and " + std::to_string(rb) + " not isoclinic");
    }
  Json sizes = Json::array();
  for (const auto& members : c.classes) sizes.push_back(members.size());
  Json details{{"algebras", d.algebras.size()}, {"classes", c.classes.size()}, {"class_sizes", sizes},
               {"compositions", compositions}};
  return t.result(3, "isoclinism is an equivalence relation", std::move(details), d.algebras.size() >= 200);
}

CriterionResult check_abelian_class(const SuiteData& d) {
  Tally t;
  const auto zero = d.classes.class_of.front();
  std::uint64_t abelian = 0, in_zero = 0, abelian_outside = 0, non_abelian_inside = 0, relaxed_failures = 0;
  Json example = nullptr;
  for (std::size_t i = 0; i < d.algebras.size(); ++i) {
    const auto& g = d.algebras[i];
    const bool ab = is_abelian(g), inside = d.classes.class_of[i] == zero;
    abelian += ab;
    in_zero += inside;
    if (ab && !inside) ++abelian_outside;
    if (!ab && inside) {
      ++non_abelian_inside;
      if (example.is_null()) example = serialize(g);
    }
    if (has_trivial_lie_commutator(g) != inside) ++relaxed_failures;
    t.check(ab == inside, "algebra " + std::to_string(i) + (ab ? " is abelian" : " is not abelian") +
                              (inside ? " and lies in the zero class" : " and lies outside the zero class"));
  }
  Json details{{"algebras", d.algebras.size()},
               {"abelian", abelian},
               {"in_zero_class", in_zero},
               {"abelian_outside_zero_class", abelian_outside},
               {"non_abelian_in_zero_class", non_abelian_inside},
               {"trivial_lie_commutator_reading_failures", relaxed_failures},
               {"first_non_abelian_in_zero_class", example}};
  return t.result(4, "zero class is exactly the abelian algebras", std::move(details));
}

CriterionResult check_natural(const SuiteData& d) {
  Tally t;
  AlgebraSampler sampler(d.field, d.config.seed + 0x9e3779b97f4a7c15ULL);
  std::uint64_t products = 0, meet_zero = 0, meet_nonzero = 0, covering = 0, not_covering = 0;
  for (std::size_t i = 0; i < d.algebras.size(); ++i) {
    const auto& g = d.algebras[i];
    const auto tag = " (algebra " + std::to_string(i) + ")";
    const Index n = g.dim();
    const auto comm = lie_commutator(g);
    const auto center = lie_center(g);

    const auto a = LeibnizAlgebra<Fp>::abelian(d.field, static_cast<Index>(sampler.below(3)));
    const auto ga = direct_product(g, a);
    ++products;
    t.check(algebras_isoclinic(g, ga, d.config.search).witness.has_value(), "g ~ g x a" + tag);
    const AlgebraMorphism<Fp> into(g, ga, vstack(Matrix<Fp>(Matrix<Fp>::Identity(n, n)), Matrix<Fp>(Matrix<Fp>::Zero(a.dim(), n))));
    t.check(is_isoclinic_algebra_hom(into), "g -> g x a isoclinic" + tag);

    for (const auto& ideal : {random_central_ideal(sampler, g), ideal_closure(g, sampler.subspace(n, 2))}) {
      const bool trivial = intersect(ideal, comm).is_zero_space();
      (trivial ? meet_zero : meet_nonzero) += 1;
      const auto quo = quotient_algebra(g, ideal);
      t.check(is_isoclinic_algebra_hom(quo.projection) == trivial, "nat criterion" + tag);
      t.check(algebras_isoclinic(g, quo.algebra, d.config.search).witness.has_value() == trivial, "g ~ g/n iff trivial meet" + tag);
    }

    const auto seeds = {sampler.subspace(n, 2), sum(sampler.subspace(n, 1), center)};
    for (const auto& seed : seeds) {
      const auto h = subalgebra_closure(g, seed);
      const bool covers = sum(h, center).is_whole();
      (covers ? covering : not_covering) += 1;
      const auto emb = subalgebra(g, h);
      t.check(is_isoclinic_algebra_hom(emb.inclusion) == covers, "embedding criterion" + tag);
      if (covers) t.check(algebras_isoclinic(emb.algebra, g, d.config.search).witness.has_value(), "h ~ g when h + Z = g" + tag);
    }
  }
  Json details{{"products", products},
               {"ideals_meeting_commutator_trivially", meet_zero},
               {"ideals_meeting_commutator_nontrivially", meet_nonzero},
               {"subalgebras_covering_with_center", covering},
               {"subalgebras_not_covering", not_covering}};
  const bool both_sides = meet_zero && meet_nonzero && covering && not_covering;
  return t.result(5, "products, quotients and embeddings", std::move(details), both_sides);
}

CriterionResult check_pullbacks(const SuiteData& d) {
  Tally t;
  std::uint64_t found = 0;
  for (std::size_t k = 0; k < d.pairs.size(); ++k) {
    const auto& p = d.pairs[k];
    if (!p.witness) continue;
    ++found;
    const auto tag = " (pair " + std::to_string(k) + ")";
    const auto dp = diagonal_pullback(p.first, p.second, AlgebraMorphism<Fp>(p.first.q(), p.second.q(), p.witness->eta.coordinates()));
    const auto s1 = is_isoclinic_homomorphism(dp.extension, p.first, dp.first);
    const auto s2 = is_isoclinic_homomorphism(dp.extension, p.second, dp.second);
    t.check(s1.isoclinic, "first projection isoclinic" + tag);
    t.check(s2.isoclinic, "second projection isoclinic" + tag);
    const Matrix<Fp> inc = vstack(dp.first.beta.matrix(), dp.second.beta.matrix());
    const auto comm = image(inc, lie_commutator(dp.extension.g()));
    t.check(comm == graph_of(p.witness->xi, p.first.g().dim(), p.second.g().dim()), "commutator is the graph of xi" + tag);
  }
  Json details{{"pairs", d.pairs.size()}, {"found", found}};
  return t.result(6, "diagonal pullback", std::move(details), found > 0);
}

CriterionResult check_sequences(const SuiteData& d) {
  Tally t;
  std::uint64_t stem = 0, theta_nonzero = 0;
  for (std::size_t k = 0; k < d.extensions.size(); ++k) {
    const auto& e = d.extensions[k];
    const auto tag = " (extension " + std::to_string(k) + ")";
    t.check(validate_extension(e).ok(), "valid extension" + tag);
    t.check(check_sequence_tail(e).exact(), "tail exact" + tag);
    t.check(check_sequence_nine(e).exact(), "commutator sequence exact" + tag);
    const auto theta = theta_image(e);
    t.check(lie_commutator(e.g()).dim() == theta.dim() + lie_commutator(e.q()).dim(), "dimension count" + tag);
    stem += is_stem_extension(e);
    theta_nonzero += !theta.is_zero_space();
  }
  Json details{{"extensions", d.extensions.size()}, {"stem", stem}, {"nonzero_theta_image", theta_nonzero}};
  return t.result(7, "homology sequences", std::move(details));
}

CriterionResult check_commutator_kernels(const SuiteData& d) {
  Tally t;
  std::uint64_t witnesses = 0;
  const auto check = [&](const CentralExtension<Fp>& a, const CentralExtension<Fp>& b, const IsoclinismWitness<Fp>& w,
                         const std::string& tag) {
    ++witnesses;
    const auto comm1 = lie_commutator(a.g()), comm2 = lie_commutator(b.g());
    bool projections = true;
    for (Index k = 0; k < comm1.dim(); ++k) {
      const Vector<Fp> x = comm1.basis_vector(k);
      projections = projections &&
                    same(Vector<Fp>(b.pi().matrix() * w.xi(x)), Vector<Fp>(w.eta.coordinates() * (a.pi().matrix() * x)));
    }
    t.check(projections, "pi2 xi = eta pi1" + tag);
    const auto meet1 = intersect(a.kernel_image(), comm1), meet2 = intersect(b.kernel_image(), comm2);
    t.check(image(w.xi.ambient_matrix(), meet1) == meet2, "xi maps the kernel parts onto each other" + tag);
  };
  for (std::size_t k = 0; k < d.pairs.size(); ++k)
    if (d.pairs[k].witness) check(d.pairs[k].first, d.pairs[k].second, *d.pairs[k].witness, " (pair " + std::to_string(k) + ")");
  for (std::size_t i = 0; i < d.algebras.size(); ++i) {
    const auto rep = d.classes.classes[d.classes.class_of[i]].front();
    if (rep == i) continue;
    check(canonical_extension(d.algebras[rep]), canonical_extension(d.algebras[i]), d.classes.witness_from_representative[i],
          " (algebra " + std::to_string(i) + ")");
  }
  Json details{{"witnesses", witnesses}};
  return t.result(8, "xi on commutators and kernels", std::move(details));
}

std::vector<CriterionResult> run_suite(const SuiteConfig& config) {
  std::vector<CriterionResult> out;
  const auto timed = [&](const std::function<CriterionResult()>& f) {
    const auto start = std::chrono::steady_clock::now();
    auto r = f();
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds == 0) r.seconds = elapsed;
    out.push_back(std::move(r));
  };
  timed(check_example_values);
  timed(check_example_witness);
  const auto data = prepare_suite(config);
  timed([&] { return check_equivalence(data); });
  timed([&] { return check_abelian_class(data); });
  timed([&] { return check_natural(data); });
  timed([&] { return check_pullbacks(data); });
  timed([&] { return check_sequences(data); });
  timed([&] { return check_commutator_kernels(data); });
  return out;
}

Json criterion_json(const CriterionResult& r) {
  return Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"failures", r.failures},
              {"details", r.details}};
}

Json suite_json(const SuiteConfig& config, const std::vector<CriterionResult>& results) {
  Json criteria = Json::array();
  bool all = true;
  for (const auto& r : results) {
    criteria.push_back(criterion_json(r));
    all = all && r.passed;
  }
  Json cfg{{"seed", config.seed},
           {"random_algebras", config.algebras},
           {"pairs", config.pairs},
           {"max_dim", config.max_dim},
           {"field", field_json(Field::prime(config.prime))},
           {"max_gl", config.search.max_gl}};
  return Json{{"config", cfg}, {"criteria", criteria}, {"all_passed", all}};
}

}  // namespace leibalg
