#ifndef LEIBALG_ISOCLINISM_HPP
#define LEIBALG_ISOCLINISM_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <tuple>
#include <vector>

#include "leibalg/extension.hpp"

namespace leibalg {

/// eta : q1 -> q2 on the bases, xi : [g1,g1]_Lie -> [g2,g2]_Lie on the commutators.
template <class S>
struct IsoclinismWitness {
  LinearMap<S> eta;
  LinearMap<S> xi;
};

/// Derives xi from eta through the pairs C1(e_i, e_j) -> C2(eta e_i, eta e_j).
/// The values of C1 span [g1,g1]_Lie, so a consistent answer is always total.
template <class S>
LinearSolve<S> derive_xi(const CentralExtension<S>& e1, const CentralExtension<S>& e2, const Matrix<S>& eta,
                         const CommutatorMap<S>& c1, const CommutatorMap<S>& c2, const Subspace<S>& comm1,
                         const Subspace<S>& comm2) {
  const Index d = e1.q().dim();
  if (eta.rows() != e2.q().dim() || eta.cols() != d) throw Error(ErrorKind::dimension, "derive_xi: eta has the wrong shape");
  std::vector<std::pair<Vector<S>, Vector<S>>> pairs;
  for (Index i = 0; i < d; ++i)
    for (Index j = i; j < d; ++j) pairs.emplace_back(c1.value(i, j), c2(eta.col(i), eta.col(j)));
  return solve_linear_map(pairs, comm1, comm2);
}

template <class S>
LinearSolve<S> derive_xi(const CentralExtension<S>& e1, const CentralExtension<S>& e2, const Matrix<S>& eta) {
  return derive_xi(e1, e2, eta, commutator_map(e1), commutator_map(e2), lie_commutator(e1.g()), lie_commutator(e2.g()));
}

template <class S>
struct WitnessReport {
  bool shapes_ok = false;
  bool eta_bijective = false;
  bool eta_bracket_preserving = false;
  bool xi_injective = false;
  bool xi_surjective = false;
  bool diagram_commutes = false;
  /// First q1 basis pair (i, j) where xi C1 and C2 (eta x eta) disagree.
  std::optional<std::pair<Index, Index>> failing_pair;

  /// Injectivity of xi plus commutativity already force surjectivity.
  bool surjectivity_automatic() const { return xi_injective && diagram_commutes && xi_surjective; }
  bool ok() const {
    return shapes_ok && eta_bijective && eta_bracket_preserving && xi_injective && xi_surjective && diagram_commutes;
  }
};

template <class S>
WitnessReport<S> check_witness(const CentralExtension<S>& e1, const CentralExtension<S>& e2, const IsoclinismWitness<S>& w) {
  WitnessReport<S> r;
  const auto comm1 = lie_commutator(e1.g()), comm2 = lie_commutator(e2.g());
  r.shapes_ok = w.eta.domain() == Subspace<S>::whole(e1.q().dim()) && w.eta.codomain() == Subspace<S>::whole(e2.q().dim()) &&
                w.xi.domain() == comm1 && w.xi.codomain() == comm2;
  if (!r.shapes_ok) return r;
  const Matrix<S>& eta = w.eta.coordinates();
  r.eta_bijective = w.eta.bijective();
  r.eta_bracket_preserving = is_bracket_preserving(e1.q(), e2.q(), eta);
  r.xi_injective = w.xi.injective();
  r.xi_surjective = w.xi.surjective();
  const auto c1 = commutator_map(e1), c2 = commutator_map(e2);
  r.diagram_commutes = true;
  for (Index i = 0; i < e1.q().dim() && r.diagram_commutes; ++i)
    for (Index j = 0; j < e1.q().dim(); ++j)
      if (!same(w.xi(c1.value(i, j)), c2(eta.col(i), eta.col(j)))) {
        r.diagram_commutes = false;
        r.failing_pair = std::make_pair(i, j);
        break;
      }
  return r;
}

template <class S>
IsoclinismWitness<S> identity_witness(const CentralExtension<S>& e) {
  return {LinearMap<S>::identity(Subspace<S>::whole(e.q().dim())), LinearMap<S>::identity(lie_commutator(e.g()))};
}

/// Componentwise: (eta2 eta1, xi2 xi1) for w1 : e1 ~ e2 and w2 : e2 ~ e3.
template <class S>
IsoclinismWitness<S> compose(const IsoclinismWitness<S>& after, const IsoclinismWitness<S>& before) {
  return {compose(after.eta, before.eta), compose(after.xi, before.xi)};
}

template <class S>
IsoclinismWitness<S> inverse(const IsoclinismWitness<S>& w) {
  return {w.eta.inverse(), w.xi.inverse()};
}

/// Quantities that agree on Lie-isoclinic extensions. dim g, dim n and
/// dim Z_Lie(g) are reported but not compared: g and g x a are isoclinic.
struct IsoclinismInvariants {
  Index total_dim = 0;
  Index kernel_dim = 0;
  Index lie_center_dim = 0;
  Index annihilator_dim = 0;
  Index commutator_dim = 0;         // dim [g,g]_Lie
  Index base_dim = 0;               // dim q
  Index base_commutator_dim = 0;    // dim [q,q]_Lie
  Index base_center_dim = 0;        // dim Z_Lie(q)
  Index kernel_commutator_dim = 0;  // dim image(chi) ∩ [g,g]_Lie
  Index commutator_rank = 0;        // rank of x -> C(x, -)

  auto key() const {
    return std::make_tuple(base_dim, commutator_dim, annihilator_dim, base_commutator_dim, base_center_dim,
                           kernel_commutator_dim, commutator_rank);
  }
  bool compatible(const IsoclinismInvariants& o) const { return key() == o.key(); }
};

template <class S>
IsoclinismInvariants isoclinism_invariants(const CentralExtension<S>& e) {
  IsoclinismInvariants inv;
  const auto comm = lie_commutator(e.g());
  inv.total_dim = e.g().dim();
  inv.kernel_dim = e.n().dim();
  inv.lie_center_dim = lie_center(e.g()).dim();
  inv.annihilator_dim = annihilator_ideal(e.g()).dim();
  inv.commutator_dim = comm.dim();
  inv.base_dim = e.q().dim();
  inv.base_commutator_dim = lie_commutator(e.q()).dim();
  inv.base_center_dim = lie_center(e.q()).dim();
  inv.kernel_commutator_dim = intersect(e.kernel_image(), comm).dim();
  const auto c = commutator_map(e);
  const Index d = e.q().dim(), m = e.g().dim();
  Matrix<S> stacked(m * d, d);  // column i lists C(e_i, e_j) for all j
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) stacked.block(j * m, i, m, 1) = c.value(i, j);
  inv.commutator_rank = rank(stacked);
  return inv;
}

constexpr std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

/// |GL(n, F_p)| = prod_{i<n} (p^n - p^i), saturating.
constexpr std::uint64_t general_linear_order(std::uint64_t n, std::uint64_t p) {
  std::uint64_t pn = 1;
  for (std::uint64_t i = 0; i < n; ++i) pn = saturating_mul(pn, p);
  if (pn == std::numeric_limits<std::uint64_t>::max()) return pn;
  std::uint64_t order = 1, pi = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    order = saturating_mul(order, pn - pi);
    pi = saturating_mul(pi, p);
  }
  return order;
}

struct SearchOptions {
  /// Largest |GL(q)| the search accepts; the default admits q-dim 4 over F_5.
  std::uint64_t max_gl = general_linear_order(4, 5);
  /// Reject partial assignments that already violate bracket preservation.
  bool prune_brackets = true;
  /// Compare invariants before searching.
  bool prune_invariants = true;
};

struct SearchStats {
  std::uint64_t nodes = 0;             // partial assignments extended
  std::uint64_t complete = 0;          // invertible eta reached
  std::uint64_t bracket_rejected = 0;  // pruned or rejected for bracket preservation
  std::uint64_t xi_rejected = 0;       // algebra isomorphisms without a consistent xi
  std::uint64_t witnesses = 0;
  bool invariant_mismatch = false;
};

namespace detail {

/// Vector of F_p^n with code sum_i x_i p^i.
inline Vector<Fp> decode(std::uint64_t code, Index n, std::uint32_t p) {
  Vector<Fp> v(n);
  for (Index i = 0; i < n; ++i) {
    v(i) = Fp(static_cast<long long>(code % p), p);
    code /= p;
  }
  return v;
}

/// Basis pairs whose bracket in q1 only involves basis vectors up to index k,
/// grouped by the largest index among i, j and the bracket's support.
inline std::vector<std::vector<std::pair<Index, Index>>> bracket_schedule(const LeibnizAlgebra<Fp>& q) {
  const Index d = q.dim();
  std::vector<std::vector<std::pair<Index, Index>>> out(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      Index top = std::max(i, j);
      const Vector<Fp> b = q.bracket(i, j);
      for (Index k = 0; k < d; ++k)
        if (!is_zero(b(k))) top = std::max(top, k);
      out[static_cast<std::size_t>(top)].emplace_back(i, j);
    }
  return out;
}

}  // namespace detail

/// Visits every witness e1 ~ e2 in increasing order of the image codes of
/// eta(e_1), eta(e_2), ... (first basis vector most significant). The visitor
/// returns false to stop.
inline SearchStats for_each_isoclinism(const CentralExtension<Fp>& e1, const CentralExtension<Fp>& e2,
                                       const SearchOptions& opts,
                                       const std::function<bool(const IsoclinismWitness<Fp>&)>& visit) {
  if (!e1.field().is_prime()) throw Error(ErrorKind::search, "isoclinism search needs a finite field");
  if (e1.field() != e2.field()) throw Error(ErrorKind::field, "isoclinism search across different fields");
  SearchStats stats;
  const Index d = e1.q().dim();
  if (e2.q().dim() != d) {
    stats.invariant_mismatch = true;
    return stats;
  }
  const std::uint32_t p = e1.field().characteristic();
  if (general_linear_order(static_cast<std::uint64_t>(d), p) > opts.max_gl)
    throw Error(ErrorKind::search, "|GL(" + std::to_string(d) + ", F_" + std::to_string(p) +
                                       ")| exceeds the search bound " + std::to_string(opts.max_gl));
  if (opts.prune_invariants && !isoclinism_invariants(e1).compatible(isoclinism_invariants(e2))) {
    stats.invariant_mismatch = true;
    return stats;
  }
  const auto c1 = commutator_map(e1), c2 = commutator_map(e2);
  const auto comm1 = lie_commutator(e1.g()), comm2 = lie_commutator(e2.g());
  const auto schedule = detail::bracket_schedule(e1.q());
  const auto& q1 = e1.q();
  const auto& q2 = e2.q();
  std::uint64_t count = 1;
  for (Index i = 0; i < d; ++i) count *= p;

  Matrix<Fp> eta = Matrix<Fp>::Zero(d, d);
  bool stop = false;
  // Images chosen so far, kept in echelon form to test independence cheaply.
  std::function<void(Index, const Subspace<Fp>&)> extend = [&](Index k, const Subspace<Fp>& chosen) {
    if (k == d) {
      ++stats.complete;
      if (!opts.prune_brackets && !is_bracket_preserving(q1, q2, eta)) {
        ++stats.bracket_rejected;
        return;
      }
      auto xi = derive_xi(e1, e2, eta, c1, c2, comm1, comm2);
      if (xi.status != SolveStatus::total || !xi.map->injective()) {
        ++stats.xi_rejected;
        return;
      }
      ++stats.witnesses;
      IsoclinismWitness<Fp> w{LinearMap<Fp>(Subspace<Fp>::whole(d), Subspace<Fp>::whole(d), eta), *xi.map};
      if (!visit(w)) stop = true;
      return;
    }
    for (std::uint64_t code = 1; code < count && !stop; ++code) {
      const Vector<Fp> v = detail::decode(code, d, p);
      if (chosen.contains(v)) continue;
      ++stats.nodes;
      eta.col(k) = v;
      bool ok = true;
      if (opts.prune_brackets)
        for (const auto& [i, j] : schedule[static_cast<std::size_t>(k)])
          if (!same(Vector<Fp>(eta * q1.bracket(i, j)), q2.bracket(Vector<Fp>(eta.col(i)), Vector<Fp>(eta.col(j))))) {
            ok = false;
            break;
          }
      if (!ok) {
        ++stats.bracket_rejected;
        continue;
      }
      std::vector<Vector<Fp>> gens;
      for (Index r = 0; r < chosen.dim(); ++r) gens.push_back(chosen.basis_vector(r));
      gens.push_back(v);
      extend(k + 1, Subspace<Fp>::span(d, gens));
    }
    eta.col(k).setZero();
  };
  extend(0, Subspace<Fp>(d));
  return stats;
}

struct SearchResult {
  std::optional<IsoclinismWitness<Fp>> witness;
  SearchStats stats;
};

/// First witness in the enumeration order of for_each_isoclinism.
inline SearchResult search_isoclinism(const CentralExtension<Fp>& e1, const CentralExtension<Fp>& e2,
                                      const SearchOptions& opts = {}) {
  SearchResult r;
  r.stats = for_each_isoclinism(e1, e2, opts, [&](const IsoclinismWitness<Fp>& w) {
    r.witness = w;
    return false;
  });
  return r;
}

template <class S>
SearchResult search_isoclinism(const CentralExtension<S>&, const CentralExtension<S>&, const SearchOptions& = {}) {
  throw Error(ErrorKind::search, "isoclinism search over the rationals is not supported (GL is infinite)");
}

inline std::vector<IsoclinismWitness<Fp>> enumerate_autoclinisms(const CentralExtension<Fp>& e, const SearchOptions& opts = {}) {
  std::vector<IsoclinismWitness<Fp>> out;
  for_each_isoclinism(e, e, opts, [&](const IsoclinismWitness<Fp>& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

inline SearchResult algebras_isoclinic(const LeibnizAlgebra<Fp>& a, const LeibnizAlgebra<Fp>& b, const SearchOptions& opts = {}) {
  return search_isoclinism(canonical_extension(a), canonical_extension(b), opts);
}

struct Classification {
  std::vector<std::vector<std::size_t>> classes;  // members in input order; the first is the representative
  std::vector<std::size_t> class_of;
  /// Witness from each algebra's representative to the algebra (identity for representatives).
  std::vector<IsoclinismWitness<Fp>> witness_from_representative;
};

/// Partition by Lie-isoclinism. Each algebra is compared with the
/// representatives of earlier classes that share its invariants.
inline Classification classify(const std::vector<LeibnizAlgebra<Fp>>& catalog, const SearchOptions& opts = {}) {
  Classification out;
  std::vector<CentralExtension<Fp>> exts;
  std::vector<IsoclinismInvariants> invs;
  for (const auto& g : catalog) {
    if (!catalog.empty() && g.field() != catalog.front().field()) throw Error(ErrorKind::field, "classify: mixed fields");
    exts.push_back(canonical_extension(g));
    invs.push_back(isoclinism_invariants(exts.back()));
  }
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    std::optional<std::size_t> found;
    for (std::size_t c = 0; c < out.classes.size() && !found; ++c) {
      const std::size_t rep = out.classes[c].front();
      if (!invs[rep].compatible(invs[i])) continue;
      auto r = search_isoclinism(exts[rep], exts[i], opts);
      if (r.witness) {
        found = c;
        out.witness_from_representative.push_back(*r.witness);
      }
    }
    if (found) {
      out.classes[*found].push_back(i);
      out.class_of.push_back(*found);
    } else {
      out.class_of.push_back(out.classes.size());
      out.classes.push_back({i});
      out.witness_from_representative.push_back(identity_witness(exts[i]));
    }
  }
  return out;
}

template <class S>
struct IsoclinicCheck {
  bool isoclinic = false;
  /// (gamma, beta restricted to [g1,g1]_Lie) when isoclinic.
  std::optional<IsoclinismWitness<S>> witness;
};

/// A homomorphism of extensions is Lie-isoclinic iff gamma is bijective and
/// ker(beta) meets [g1,g1]_Lie trivially; beta then restricts to the xi.
template <class S>
IsoclinicCheck<S> is_isoclinic_homomorphism(const CentralExtension<S>& e1, const CentralExtension<S>& e2,
                                            const ExtensionMorphism<S>& m) {
  if (!is_extension_homomorphism(e1, e2, m))
    throw Error(ErrorKind::not_homomorphism, "is_isoclinic_homomorphism: triple is not a homomorphism of extensions");
  IsoclinicCheck<S> r;
  const auto comm1 = lie_commutator(e1.g());
  r.isoclinic = m.gamma.bijective() && intersect(m.beta.kernel(), comm1).is_zero_space();
  if (r.isoclinic)
    r.witness = IsoclinismWitness<S>{
        LinearMap<S>(Subspace<S>::whole(e1.q().dim()), Subspace<S>::whole(e2.q().dim()), m.gamma.matrix()),
        LinearMap<S>::from_ambient(comm1, lie_commutator(e2.g()), m.beta.matrix())};
  return r;
}

/// ker(beta) ∩ [g,g]_Lie = 0 and image(beta) + Z_Lie(h) = h.
template <class S>
bool is_isoclinic_algebra_hom(const AlgebraMorphism<S>& beta) {
  return intersect(beta.kernel(), lie_commutator(beta.source())).is_zero_space() &&
         sum(beta.image(), lie_center(beta.target())).is_whole();
}

template <class S>
struct CanonicalMorphism {
  CentralExtension<S> source;  // e_g
  CentralExtension<S> target;  // e_h
  ExtensionMorphism<S> morphism;
};

/// (beta on Z_Lie(g), beta, induced map g/Z_Lie(g) -> h/Z_Lie(h)) when beta
/// maps Z_Lie(g) into Z_Lie(h).
template <class S>
std::optional<CanonicalMorphism<S>> induced_canonical_morphism(const AlgebraMorphism<S>& beta) {
  auto eg = canonical_extension(beta.source());
  auto eh = canonical_extension(beta.target());
  const auto zh = eh.kernel_image();
  const Matrix<S> on_center = beta.matrix() * eg.chi().matrix();
  Matrix<S> alpha(eh.n().dim(), eg.n().dim());
  for (Index j = 0; j < on_center.cols(); ++j) {
    if (!zh.contains(on_center.col(j))) return std::nullopt;
    alpha.col(j) = zh.coordinates(on_center.col(j));
  }
  AlgebraMorphism<S> alpha_m(eg.n(), eh.n(), std::move(alpha));
  AlgebraMorphism<S> gamma(eg.q(), eh.q(), Matrix<S>(eh.pi().matrix() * beta.matrix() * eg.section()));
  ExtensionMorphism<S> m{std::move(alpha_m), beta, std::move(gamma)};
  return CanonicalMorphism<S>{std::move(eg), std::move(eh), std::move(m)};
}

/// From (eta, xi) : e1 ~ e2, the witness (eta', xi) : e_{g1} ~ e_{g2} with
/// eta' sending the class of x to the class of any y with pi2 y = eta pi1 x.
template <class S>
IsoclinismWitness<S> induced_algebra_witness(const CentralExtension<S>& e1, const CentralExtension<S>& e2,
                                            const IsoclinismWitness<S>& w) {
  const auto c1 = canonical_extension(e1.g());
  const auto c2 = canonical_extension(e2.g());
  const Matrix<S> eta = c2.pi().matrix() * e2.section() * w.eta.coordinates() * e1.pi().matrix() * c1.section();
  return {LinearMap<S>(Subspace<S>::whole(c1.q().dim()), Subspace<S>::whole(c2.q().dim()), eta), w.xi};
}

}  // namespace leibalg

#endif  // LEIBALG_ISOCLINISM_HPP
