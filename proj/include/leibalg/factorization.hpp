#ifndef LEIBALG_FACTORIZATION_HPP
#define LEIBALG_FACTORIZATION_HPP

#include <string>
#include <vector>

#include "leibalg/isoclinism.hpp"

namespace leibalg {

/// One claimed isoclinic monomorphism or epimorphism and how it checked out.
struct FactorStep {
  std::string name;
  bool homomorphism = false;
  bool isoclinic = false;
  bool injective = false;
  bool surjective = false;
  bool expect_injective = false;
  bool expect_surjective = false;

  bool ok() const {
    return homomorphism && isoclinic && (!expect_injective || injective) && (!expect_surjective || surjective);
  }
};

template <class S>
FactorStep check_step(std::string name, const CentralExtension<S>& from, const CentralExtension<S>& to,
                      const ExtensionMorphism<S>& m, bool expect_injective, bool expect_surjective) {
  FactorStep step;
  step.name = std::move(name);
  step.expect_injective = expect_injective;
  step.expect_surjective = expect_surjective;
  step.homomorphism = is_extension_homomorphism(from, to, m);
  if (!step.homomorphism) return step;
  step.isoclinic = is_isoclinic_homomorphism(from, to, m).isoclinic;
  step.injective = m.beta.injective();
  step.surjective = m.beta.surjective();
  return step;
}

/// The chain (g1) <- (tilde-g) -> (g2), (tilde-g) >-> (g1 x a) ->> nat'(g1 x a) <-< (g2),
/// built from a witness (eta, xi) : e1 ~ e2 with a = tilde-g / [tilde-g, tilde-g]_Lie.
template <class S>
struct IsoclinicFactorization {
  DiagonalPullback<S> pullback;
  LeibnizAlgebra<S> abelian_factor;       // a
  Matrix<S> to_abelian;                   // tilde-g -> a
  ProductExtension<S> product;            // (g1 x a)
  ExtensionMorphism<S> into_product;      // (alpha, beta, id) : (tilde-g) -> (g1 x a)
  Subspace<S> collapsed;                  // beta lambda(n1 x 0) inside g1 x a
  QuotientExtension<S> quotient;          // nat'(g1 x a)
  ExtensionMorphism<S> first_into_quotient;   // nat o mu : (g1) -> nat'(g1 x a)
  ExtensionMorphism<S> second_into_quotient;  // (delta0, delta, eta^{-1}) : (g2) -> nat'(g1 x a)
  std::vector<FactorStep> steps;

  bool ok() const {
    for (const auto& s : steps)
      if (!s.ok()) return false;
    return true;
  }
};

template <class S>
IsoclinicFactorization<S> isoclinic_factorization(const CentralExtension<S>& e1, const CentralExtension<S>& e2,
                                                  const IsoclinismWitness<S>& w) {
  const AlgebraMorphism<S> eta(e1.q(), e2.q(), w.eta.coordinates());
  auto dp = diagonal_pullback(e1, e2, eta);
  const auto& tilde = dp.extension;
  const auto& G = tilde.g();
  auto a_quo = quotient_algebra(G, lie_commutator(G));
  auto prod = product_with_abelian(e1, a_quo.algebra);
  const auto& pe = prod.extension;
  const Index k1 = e1.n().dim(), k2 = e2.n().dim(), m2 = e2.g().dim();
  const Matrix<S>& to_a = a_quo.projection.matrix();
  const Matrix<S>& lambda = tilde.chi().matrix();

  // alpha(n) = (sigma_1 n, class of lambda n), beta(x) = (tau_1 x, class of x).
  const Matrix<S> alpha = vstack(dp.first.alpha.matrix(), Matrix<S>(to_a * lambda));
  const Matrix<S> beta = vstack(dp.first.beta.matrix(), to_a);
  ExtensionMorphism<S> into{AlgebraMorphism<S>(tilde.n(), pe.n(), alpha), AlgebraMorphism<S>(G, pe.g(), beta),
                            AlgebraMorphism<S>::identity(e1.q())};

  // beta lambda (n1 x 0) = {(chi1 n, class of (chi1 n, 0))}.
  const Matrix<S> first_kernel = vstack(Matrix<S>(Matrix<S>::Identity(k1, k1)), Matrix<S>(Matrix<S>::Zero(k2, k1)));
  auto collapsed = image(Matrix<S>(beta * lambda * first_kernel));
  // When a has nonzero (antisymmetric) brackets this subspace can fail to be an ideal.
  if (!is_two_sided_ideal(pe.g(), collapsed))
    throw Error(ErrorKind::not_ideal, "isoclinic_factorization: beta lambda(n1 x 0) is not an ideal of g1 x a");
  auto quo = quotient_extension(pe, collapsed);
  const auto& target = quo.extension;

  auto first = compose(quo.nat, prod.inclusion);

  // delta(h) = nat(beta(x, h)) for any x with eta pi1 x = pi2 h.
  const Matrix<S> eta_inv = w.eta.inverse().coordinates();
  const Matrix<S> lift = vstack(Matrix<S>(e1.section() * eta_inv * e2.pi().matrix()), Matrix<S>(Matrix<S>::Identity(m2, m2)));
  Matrix<S> delta(target.g().dim(), m2);
  for (Index j = 0; j < m2; ++j) delta.col(j) = quo.nat.beta.matrix() * beta * dp.space.coordinates(lift.col(j));
  const Matrix<S> delta_on_kernel = delta * e2.chi().matrix();
  Matrix<S> delta0(target.n().dim(), k2);
  for (Index j = 0; j < k2; ++j) {
    const auto y = particular_solution(target.chi().matrix(), Vector<S>(delta_on_kernel.col(j)));
    if (!y) throw Error(ErrorKind::not_homomorphism, "delta does not map n2 into the kernel of nat'(g1 x a)");
    delta0.col(j) = *y;
  }
  ExtensionMorphism<S> second{AlgebraMorphism<S>(e2.n(), target.n(), std::move(delta0)),
                              AlgebraMorphism<S>(e2.g(), target.g(), std::move(delta)),
                              AlgebraMorphism<S>(e2.q(), target.q(), eta_inv)};

  IsoclinicFactorization<S> f{std::move(dp),
                              a_quo.algebra,
                              to_a,
                              std::move(prod),
                              std::move(into),
                              std::move(collapsed),
                              std::move(quo),
                              std::move(first),
                              std::move(second),
                              {}};
  const auto& pt = f.pullback.extension;
  f.steps.push_back(check_step("(sigma_1, tau_1, id) onto (g1)", pt, e1, f.pullback.first, false, true));
  f.steps.push_back(check_step("(sigma_2, tau_2, eta) onto (g2)", pt, e2, f.pullback.second, false, true));
  f.steps.push_back(check_step("(phi', phi, id) onto (g1)", f.product.extension, e1, f.product.projection, false, true));
  f.steps.push_back(check_step("(mu', mu, id) into (g1 x a)", e1, f.product.extension, f.product.inclusion, true, false));
  f.steps.push_back(check_step("(alpha, beta, id) into (g1 x a)", pt, f.product.extension, f.into_product, true, false));
  f.steps.push_back(check_step("(nat', nat, id) onto nat'(g1 x a)", f.product.extension, f.quotient.extension, f.quotient.nat,
                               false, true));
  f.steps.push_back(check_step("nat o mu into nat'(g1 x a)", e1, f.quotient.extension, f.first_into_quotient, true, false));
  f.steps.push_back(check_step("(delta0, delta, eta^-1) into nat'(g1 x a)", e2, f.quotient.extension, f.second_into_quotient,
                               true, false));
  return f;
}

/// Witness for isoclinic algebras g and q realized as h/n with h a subalgebra
/// of g x a: h = image(beta), n = beta(ker tau_2).
template <class S>
struct SubquotientRealization {
  LeibnizAlgebra<S> ambient;  // g x a
  Subspace<S> h;
  Subspace<S> n;              // inside the ambient coordinates
  bool h_subalgebra = false;
  bool h_plus_center_is_whole = false;
  bool n_ideal_of_h = false;
  bool n_meets_commutator_trivially = false;  // n ∩ [h,h]_Lie = 0
  bool quotient_isomorphic = false;           // h/n -> q induced by tau_2 is an algebra isomorphism

  bool ok() const {
    return h_subalgebra && h_plus_center_is_whole && n_ideal_of_h && n_meets_commutator_trivially && quotient_isomorphic;
  }
};

template <class S>
SubquotientRealization<S> subquotient_realization(const LeibnizAlgebra<S>& g, const LeibnizAlgebra<S>& q,
                                                  const IsoclinismWitness<S>& w) {
  const auto eg = canonical_extension(g);
  const auto eq = canonical_extension(q);
  auto f = isoclinic_factorization(eg, eq, w);
  SubquotientRealization<S> r;
  r.ambient = f.product.extension.g();
  const Matrix<S>& beta = f.into_product.beta.matrix();
  const Matrix<S>& tau2 = f.pullback.second.beta.matrix();
  r.h = image(beta);
  r.n = image(beta, kernel(tau2));
  r.h_subalgebra = is_subalgebra(r.ambient, r.h);
  r.h_plus_center_is_whole = sum(r.h, lie_center(r.ambient)).is_whole();
  if (!r.h_subalgebra) return r;
  const auto sub = subalgebra(r.ambient, r.h);
  std::vector<Vector<S>> n_coords;
  for (Index k = 0; k < r.n.dim(); ++k) n_coords.push_back(r.h.coordinates(r.n.basis_vector(k)));
  const auto n_in_h = Subspace<S>::span(r.h.dim(), n_coords);
  r.n_ideal_of_h = is_two_sided_ideal(sub.algebra, n_in_h);
  r.n_meets_commutator_trivially = intersect(n_in_h, lie_commutator(sub.algebra)).is_zero_space();
  if (!r.n_ideal_of_h) return r;
  // tau_2 o beta^{-1} on h, pushed down to h/n.
  const auto hq = quotient_algebra(sub.algebra, n_in_h);
  Matrix<S> to_q(q.dim(), hq.algebra.dim());
  for (Index c = 0; c < hq.algebra.dim(); ++c) {
    const Vector<S> in_ambient = sub.inclusion.matrix() * hq.section.col(c);
    const auto x = particular_solution(beta, in_ambient);
    to_q.col(c) = tau2 * *x;
  }
  r.quotient_isomorphic = rank(to_q) == q.dim() && to_q.cols() == q.dim() && is_bracket_preserving(hq.algebra, q, to_q);
  return r;
}

}  // namespace leibalg

#endif  // LEIBALG_FACTORIZATION_HPP
