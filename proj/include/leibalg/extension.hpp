#ifndef LEIBALG_EXTENSION_HPP
#define LEIBALG_EXTENSION_HPP

#include <optional>
#include <string>
#include <vector>

#include "leibalg/algebra.hpp"

namespace leibalg {

template <class S>
struct ExtensionReport {
  bool composable = false;     // chi lands in the algebra pi starts from
  bool chi_injective = false;
  bool pi_surjective = false;
  bool exact = false;          // image(chi) = kernel(pi)
  bool lie_central = false;    // image(chi) inside Z_Lie(g)
  /// When not Lie-central: a kernel element and a basis index j with [n, e_j] + [e_j, n] != 0.
  std::optional<std::pair<Vector<S>, Index>> central_violation;

  bool ok() const { return composable && chi_injective && pi_surjective && exact && lie_central; }

  std::string failure() const {
    if (!composable) return "chi and pi are not composable";
    if (!chi_injective) return "chi is not injective";
    if (!pi_surjective) return "pi is not surjective";
    if (!exact) return "image(chi) differs from kernel(pi)";
    if (!lie_central) return "image(chi) is not contained in Z_Lie(g)";
    return "";
  }
};

template <class S>
ExtensionReport<S> check_extension(const AlgebraMorphism<S>& chi, const AlgebraMorphism<S>& pi) {
  ExtensionReport<S> r;
  r.composable = chi.target() == pi.source();
  if (!r.composable) return r;
  r.chi_injective = chi.injective();
  r.pi_surjective = pi.surjective();
  const auto image = chi.image();
  r.exact = image == pi.kernel();
  const auto& g = chi.target();
  r.lie_central = true;
  for (Index k = 0; k < image.dim() && r.lie_central; ++k)
    for (Index j = 0; j < g.dim(); ++j) {
      const Vector<S> n = image.basis_vector(k);
      if (!all_zero(g.symmetric_bracket(n, g.basis_vector(j)))) {
        r.lie_central = false;
        r.central_violation = std::make_pair(n, j);
        break;
      }
    }
  return r;
}

/// Lie-central extension 0 -> n --chi--> g --pi--> q -> 0, validated at
/// construction, together with a fixed linear section of pi.
template <class S>
class CentralExtension {
 public:
  CentralExtension(AlgebraMorphism<S> chi, AlgebraMorphism<S> pi) : chi_(std::move(chi)), pi_(std::move(pi)) {
    validate_or_throw();
    section_ = Matrix<S>(g().dim(), q().dim());
    for (Index k = 0; k < q().dim(); ++k) section_.col(k) = *particular_solution(pi_.matrix(), q().basis_vector(k));
  }

  CentralExtension(AlgebraMorphism<S> chi, AlgebraMorphism<S> pi, Matrix<S> section)
      : chi_(std::move(chi)), pi_(std::move(pi)), section_(std::move(section)) {
    validate_or_throw();
    if (section_.rows() != g().dim() || section_.cols() != q().dim() ||
        !same(Matrix<S>(pi_.matrix() * section_), Matrix<S>(Matrix<S>::Identity(q().dim(), q().dim()))))
      throw Error(ErrorKind::invalid_extension, "section is not a right inverse of pi");
  }

  const LeibnizAlgebra<S>& n() const noexcept { return chi_.source(); }
  const LeibnizAlgebra<S>& g() const noexcept { return chi_.target(); }
  const LeibnizAlgebra<S>& q() const noexcept { return pi_.target(); }
  const AlgebraMorphism<S>& chi() const noexcept { return chi_; }
  const AlgebraMorphism<S>& pi() const noexcept { return pi_; }
  const Matrix<S>& section() const noexcept { return section_; }
  const Field& field() const noexcept { return g().field(); }

  /// image(chi) as a subspace of g.
  Subspace<S> kernel_image() const { return chi_.image(); }

 private:
  void validate_or_throw() const {
    const auto r = check_extension(chi_, pi_);
    if (!r.ok()) throw Error(ErrorKind::invalid_extension, "not a Lie-central extension: " + r.failure());
  }

  AlgebraMorphism<S> chi_;
  AlgebraMorphism<S> pi_;
  Matrix<S> section_{0, 0};
};

template <class S>
ExtensionReport<S> validate_extension(const CentralExtension<S>& e) {
  return check_extension(e.chi(), e.pi());
}

/// (alpha, beta, gamma) between the kernels, totals and bases of two extensions.
template <class S>
struct ExtensionMorphism {
  AlgebraMorphism<S> alpha;
  AlgebraMorphism<S> beta;
  AlgebraMorphism<S> gamma;
};

/// Both squares commute: beta chi1 = chi2 alpha and pi2 beta = gamma pi1.
template <class S>
bool is_extension_homomorphism(const CentralExtension<S>& e1, const CentralExtension<S>& e2,
                               const ExtensionMorphism<S>& m) {
  if (!(m.alpha.source() == e1.n() && m.alpha.target() == e2.n())) return false;
  if (!(m.beta.source() == e1.g() && m.beta.target() == e2.g())) return false;
  if (!(m.gamma.source() == e1.q() && m.gamma.target() == e2.q())) return false;
  return same(Matrix<S>(m.beta.matrix() * e1.chi().matrix()), Matrix<S>(e2.chi().matrix() * m.alpha.matrix())) &&
         same(Matrix<S>(e2.pi().matrix() * m.beta.matrix()), Matrix<S>(m.gamma.matrix() * e1.pi().matrix()));
}

template <class S>
bool is_extension_isomorphism(const CentralExtension<S>& e1, const CentralExtension<S>& e2,
                              const ExtensionMorphism<S>& m) {
  return is_extension_homomorphism(e1, e2, m) && m.alpha.bijective() && m.beta.bijective() && m.gamma.bijective();
}

template <class S>
ExtensionMorphism<S> identity_morphism(const CentralExtension<S>& e) {
  return {AlgebraMorphism<S>::identity(e.n()), AlgebraMorphism<S>::identity(e.g()), AlgebraMorphism<S>::identity(e.q())};
}

template <class S>
ExtensionMorphism<S> compose(const ExtensionMorphism<S>& after, const ExtensionMorphism<S>& before) {
  return {compose(after.alpha, before.alpha), compose(after.beta, before.beta), compose(after.gamma, before.gamma)};
}

/// C(x, y) = [s x, s y] + [s y, s x] for a section s of pi, tabulated on basis pairs of q.
template <class S>
class CommutatorMap {
 public:
  CommutatorMap(const CentralExtension<S>& e, const Matrix<S>& section) : q_dim_(e.q().dim()), g_dim_(e.g().dim()) {
    if (section.rows() != g_dim_ || section.cols() != q_dim_)
      throw Error(ErrorKind::dimension, "commutator_map: section has the wrong shape");
    table_.reserve(static_cast<std::size_t>(q_dim_ * q_dim_));
    for (Index i = 0; i < q_dim_; ++i)
      for (Index j = 0; j < q_dim_; ++j) table_.push_back(e.g().symmetric_bracket(section.col(i), section.col(j)));
  }

  Index base_dim() const noexcept { return q_dim_; }
  const Vector<S>& value(Index i, Index j) const { return table_[static_cast<std::size_t>(i * q_dim_ + j)]; }

  /// Bilinear evaluation on coordinate vectors of q.
  Vector<S> operator()(const Vector<S>& x, const Vector<S>& y) const {
    if (x.size() != q_dim_ || y.size() != q_dim_) throw Error(ErrorKind::dimension, "commutator map: argument length");
    Vector<S> out = Vector<S>::Zero(g_dim_);
    for (Index i = 0; i < q_dim_; ++i) {
      if (is_zero(x(i))) continue;
      for (Index j = 0; j < q_dim_; ++j)
        if (!is_zero(y(j))) out += (x(i) * y(j)) * value(i, j);
    }
    return out;
  }

  Subspace<S> span() const { return Subspace<S>::span(g_dim_, table_); }

  friend bool operator==(const CommutatorMap& a, const CommutatorMap& b) {
    if (a.q_dim_ != b.q_dim_ || a.g_dim_ != b.g_dim_) return false;
    for (std::size_t k = 0; k < a.table_.size(); ++k)
      if (!same(a.table_[k], b.table_[k])) return false;
    return true;
  }

 private:
  Index q_dim_;
  Index g_dim_;
  std::vector<Vector<S>> table_;
};

template <class S>
CommutatorMap<S> commutator_map(const CentralExtension<S>& e) {
  return CommutatorMap<S>(e, e.section());
}

template <class S>
CommutatorMap<S> commutator_map(const CentralExtension<S>& e, const Matrix<S>& section) {
  if (!same(Matrix<S>(e.pi().matrix() * section), Matrix<S>(Matrix<S>::Identity(e.q().dim(), e.q().dim()))))
    throw Error(ErrorKind::invalid_extension, "commutator_map: not a section of pi");
  return CommutatorMap<S>(e, section);
}

/// 0 -> I -> g -> g/I -> 0 for a two-sided ideal I inside Z_Lie(g).
template <class S>
CentralExtension<S> extension_by_ideal(const LeibnizAlgebra<S>& g, const Subspace<S>& ideal) {
  auto quo = quotient_algebra(g, ideal);
  auto sub = subalgebra(g, ideal);
  return CentralExtension<S>(std::move(sub.inclusion), std::move(quo.projection), std::move(quo.section));
}

/// e_g: 0 -> Z_Lie(g) -> g -> g/Z_Lie(g) -> 0.
template <class S>
CentralExtension<S> canonical_extension(const LeibnizAlgebra<S>& g) {
  return extension_by_ideal(g, lie_center(g));
}

template <class S>
struct InducedExtension {
  CentralExtension<S> extension;
  ExtensionMorphism<S> to_source;  // isomorphism of extensions onto the input
};

/// Pullback of e2 along an isomorphism eta : q1 -> q2, realized inside g2 x q1 as
/// {(g, q) : pi2(g) = eta(q)}.
template <class S>
InducedExtension<S> backward_extension(const CentralExtension<S>& e2, const AlgebraMorphism<S>& eta) {
  if (!(eta.target() == e2.q())) throw Error(ErrorKind::dimension, "backward_extension: eta does not land in the base of e2");
  if (!eta.bijective()) throw Error(ErrorKind::not_isomorphism, "backward_extension: eta is not an isomorphism");
  const auto& q1 = eta.source();
  const Index m = e2.g().dim(), d = q1.dim();
  const auto product = direct_product(e2.g(), q1);
  const auto space = kernel(hstack(e2.pi().matrix(), Matrix<S>(-eta.matrix())));
  auto emb = subalgebra(product, space);
  const Matrix<S>& inc = emb.inclusion.matrix();

  Matrix<S> chi(space.dim(), e2.n().dim());
  for (Index j = 0; j < e2.n().dim(); ++j) {
    Vector<S> v = Vector<S>::Zero(m + d);
    v.head(m) = e2.chi().matrix().col(j);
    chi.col(j) = space.coordinates(v);
  }
  AlgebraMorphism<S> chi_m(e2.n(), emb.algebra, std::move(chi));
  AlgebraMorphism<S> pi_m(emb.algebra, q1, Matrix<S>(inc.bottomRows(d)));
  CentralExtension<S> ext(std::move(chi_m), std::move(pi_m));
  ExtensionMorphism<S> iso{AlgebraMorphism<S>::identity(e2.n()), AlgebraMorphism<S>(emb.algebra, e2.g(), Matrix<S>(inc.topRows(m))),
                           eta};
  return {std::move(ext), std::move(iso)};
}

template <class S>
struct ProductExtension {
  CentralExtension<S> extension;     // 0 -> n x a -> g x a -> q -> 0
  ExtensionMorphism<S> projection;   // (phi', phi, id) : (g x a) -> (g)
  ExtensionMorphism<S> inclusion;    // (mu', mu, id) : (g) -> (g x a)
};

/// Product of e with an algebra a whose Lie-commutator is trivial.
template <class S>
ProductExtension<S> product_with_abelian(const CentralExtension<S>& e, const LeibnizAlgebra<S>& a) {
  if (!has_trivial_lie_commutator(a))
    throw Error(ErrorKind::invalid_extension, "product_with_abelian: the factor has a nontrivial Lie-commutator");
  const Index n = e.n().dim(), g = e.g().dim(), k = a.dim();
  const auto na = direct_product(e.n(), a);
  const auto ga = direct_product(e.g(), a);
  AlgebraMorphism<S> chi(na, ga, block_diagonal(e.chi().matrix(), Matrix<S>(Matrix<S>::Identity(k, k))));
  AlgebraMorphism<S> pi(ga, e.q(), hstack(e.pi().matrix(), Matrix<S>(Matrix<S>::Zero(e.q().dim(), k))));
  Matrix<S> section = vstack(e.section(), Matrix<S>(Matrix<S>::Zero(k, e.q().dim())));
  CentralExtension<S> ext(std::move(chi), std::move(pi), std::move(section));

  const Matrix<S> first_n = hstack(Matrix<S>(Matrix<S>::Identity(n, n)), Matrix<S>(Matrix<S>::Zero(n, k)));
  const Matrix<S> first_g = hstack(Matrix<S>(Matrix<S>::Identity(g, g)), Matrix<S>(Matrix<S>::Zero(g, k)));
  ExtensionMorphism<S> proj{AlgebraMorphism<S>(na, e.n(), first_n), AlgebraMorphism<S>(ga, e.g(), first_g),
                            AlgebraMorphism<S>::identity(e.q())};
  ExtensionMorphism<S> inc{AlgebraMorphism<S>(e.n(), na, Matrix<S>(first_n.transpose())),
                           AlgebraMorphism<S>(e.g(), ga, Matrix<S>(first_g.transpose())), AlgebraMorphism<S>::identity(e.q())};
  return {std::move(ext), std::move(proj), std::move(inc)};
}

template <class S>
struct DiagonalPullback {
  CentralExtension<S> extension;  // 0 -> n1 x n2 -> tilde-g -> q1 -> 0
  Subspace<S> space;              // tilde-g inside g1 x g2
  ExtensionMorphism<S> first;     // (sigma_1, tau_1, id)
  ExtensionMorphism<S> second;    // (sigma_2, tau_2, eta)
};

/// tilde-g = {(x, y) in g1 x g2 : eta(pi1 x) = pi2 y} over q1.
template <class S>
DiagonalPullback<S> diagonal_pullback(const CentralExtension<S>& e1, const CentralExtension<S>& e2,
                                      const AlgebraMorphism<S>& eta) {
  if (!(eta.source() == e1.q() && eta.target() == e2.q()))
    throw Error(ErrorKind::dimension, "diagonal_pullback: eta does not connect the two bases");
  if (!eta.bijective()) throw Error(ErrorKind::not_isomorphism, "diagonal_pullback: eta is not an isomorphism");
  const Index m1 = e1.g().dim(), m2 = e2.g().dim(), k1 = e1.n().dim(), k2 = e2.n().dim();
  const auto product = direct_product(e1.g(), e2.g());
  auto space = kernel(hstack(Matrix<S>(eta.matrix() * e1.pi().matrix()), Matrix<S>(-e2.pi().matrix())));
  auto emb = subalgebra(product, space);
  const Matrix<S>& inc = emb.inclusion.matrix();

  const auto nn = direct_product(e1.n(), e2.n());
  const Matrix<S> both_chi = block_diagonal(e1.chi().matrix(), e2.chi().matrix());
  Matrix<S> lambda(space.dim(), k1 + k2);
  for (Index j = 0; j < k1 + k2; ++j) lambda.col(j) = space.coordinates(both_chi.col(j));
  AlgebraMorphism<S> lambda_m(nn, emb.algebra, std::move(lambda));
  AlgebraMorphism<S> rho(emb.algebra, e1.q(), Matrix<S>(e1.pi().matrix() * inc.topRows(m1)));
  CentralExtension<S> ext(std::move(lambda_m), std::move(rho));

  const Matrix<S> sigma1 = hstack(Matrix<S>(Matrix<S>::Identity(k1, k1)), Matrix<S>(Matrix<S>::Zero(k1, k2)));
  const Matrix<S> sigma2 = hstack(Matrix<S>(Matrix<S>::Zero(k2, k1)), Matrix<S>(Matrix<S>::Identity(k2, k2)));
  ExtensionMorphism<S> first{AlgebraMorphism<S>(nn, e1.n(), sigma1), AlgebraMorphism<S>(emb.algebra, e1.g(), Matrix<S>(inc.topRows(m1))),
                             AlgebraMorphism<S>::identity(e1.q())};
  ExtensionMorphism<S> second{AlgebraMorphism<S>(nn, e2.n(), sigma2),
                              AlgebraMorphism<S>(emb.algebra, e2.g(), Matrix<S>(inc.bottomRows(m2))), eta};
  if (!is_extension_homomorphism(ext, e1, first) || !is_extension_homomorphism(ext, e2, second))
    throw Error(ErrorKind::not_homomorphism, "diagonal_pullback: projection squares do not commute");
  return {std::move(ext), std::move(space), std::move(first), std::move(second)};
}

template <class S>
struct QuotientExtension {
  CentralExtension<S> extension;  // 0 -> n / chi^{-1}(I) -> g / I -> q -> 0
  ExtensionMorphism<S> nat;       // (nat', nat, id)
};

/// Divides total algebra and kernel of e by an ideal I of g contained in image(chi).
template <class S>
QuotientExtension<S> quotient_extension(const CentralExtension<S>& e, const Subspace<S>& ideal) {
  if (!is_subspace_of(ideal, e.kernel_image()))
    throw Error(ErrorKind::invalid_extension, "quotient_extension: subspace is not inside image(chi)");
  auto g_quo = quotient_algebra(e.g(), ideal);
  const auto kernel_side = preimage(e.chi().matrix(), ideal);
  auto n_quo = quotient_algebra(e.n(), kernel_side);
  AlgebraMorphism<S> chi(n_quo.algebra, g_quo.algebra,
                         Matrix<S>(g_quo.projection.matrix() * e.chi().matrix() * n_quo.section));
  AlgebraMorphism<S> pi(g_quo.algebra, e.q(), Matrix<S>(e.pi().matrix() * g_quo.section));
  Matrix<S> section = g_quo.projection.matrix() * e.section();
  CentralExtension<S> ext(std::move(chi), std::move(pi), std::move(section));
  ExtensionMorphism<S> nat{std::move(n_quo.projection), std::move(g_quo.projection), AlgebraMorphism<S>::identity(e.q())};
  return {std::move(ext), std::move(nat)};
}

/// Lie-stem: g_Lie and q_Lie are isomorphic. pi induces a surjection g_Lie -> q_Lie
/// with kernel (n + g^ann) / g^ann, so this holds iff image(chi) is inside g^ann.
template <class S>
bool is_stem_extension(const CentralExtension<S>& e) {
  return is_subspace_of(e.kernel_image(), annihilator_ideal(e.g()));
}

}  // namespace leibalg

#endif  // LEIBALG_EXTENSION_HPP
