#ifndef LEIBALG_ALGEBRA_HPP
#define LEIBALG_ALGEBRA_HPP

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "leibalg/linalg.hpp"

namespace leibalg {

/// Finite-dimensional (left) Leibniz algebra given by structure constants:
/// [e_i, e_j] = sum_k c(i, j, k) e_k, stored as left-multiplication matrices
/// L_i whose j-th column is [e_i, e_j].
template <class S>
class LeibnizAlgebra {
 public:
  struct Entry {
    Index left;
    Index right;
    Vector<S> value;
  };

  LeibnizAlgebra() = default;

  LeibnizAlgebra(Field field, std::vector<Matrix<S>> left, std::vector<std::string> names = {})
      : field_(field), left_(std::move(left)), names_(std::move(names)) {
    if (!ScalarTraits<S>::accepts(field_))
      throw Error(ErrorKind::field, "scalar type does not match field " + field_.to_string());
    const auto n = static_cast<Index>(left_.size());
    const S zero = make_scalar<S>(field_, 0);
    for (auto& m : left_) {
      if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::dimension, "structure constants are not cubic");
      for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i) m(i, j) = m(i, j) + zero;
    }
    if (names_.empty())
      for (Index i = 0; i < n; ++i) names_.push_back("e" + std::to_string(i + 1));
    if (static_cast<Index>(names_.size()) != n) throw Error(ErrorKind::dimension, "basis name count differs from dimension");
  }

  static LeibnizAlgebra abelian(Field field, Index n, std::vector<std::string> names = {}) {
    return LeibnizAlgebra(field, std::vector<Matrix<S>>(static_cast<std::size_t>(n), Matrix<S>::Zero(n, n)),
                          std::move(names));
  }

  static LeibnizAlgebra from_brackets(Field field, Index n, const std::vector<Entry>& entries,
                                      std::vector<std::string> names = {}) {
    std::vector<Matrix<S>> left(static_cast<std::size_t>(n), Matrix<S>::Zero(n, n));
    for (const auto& e : entries) {
      if (e.left < 0 || e.left >= n || e.right < 0 || e.right >= n || e.value.size() != n)
        throw Error(ErrorKind::dimension, "bracket entry out of range");
      left[static_cast<std::size_t>(e.left)].col(e.right) += e.value;
    }
    return LeibnizAlgebra(field, std::move(left), std::move(names));
  }

  const Field& field() const noexcept { return field_; }
  Index dim() const noexcept { return static_cast<Index>(left_.size()); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  S scalar(long long k) const { return make_scalar<S>(field_, k); }
  Vector<S> zero_vector() const { return Vector<S>::Constant(dim(), scalar(0)); }
  Vector<S> basis_vector(Index i) const {
    Vector<S> v = zero_vector();
    v(i) = scalar(1);
    return v;
  }

  /// L_i: y -> [e_i, y].
  const Matrix<S>& left(Index i) const {
    check_index(i);
    return left_[static_cast<std::size_t>(i)];
  }
  Vector<S> bracket(Index i, Index j) const {
    check_index(j);
    return left(i).col(j);
  }
  S structure_constant(Index i, Index j, Index k) const { return left(i)(k, j); }

  /// Matrix of y -> [x, y].
  Matrix<S> left_multiplication(const Vector<S>& x) const {
    check(x);
    Matrix<S> m = Matrix<S>::Constant(dim(), dim(), scalar(0));
    for (Index i = 0; i < dim(); ++i)
      if (!is_zero(x(i))) m += x(i) * left(i);
    return m;
  }

  /// Matrix of x -> [x, y].
  Matrix<S> right_multiplication(const Vector<S>& y) const {
    check(y);
    Matrix<S> m(dim(), dim());
    for (Index i = 0; i < dim(); ++i) m.col(i) = left(i) * y;
    return m;
  }

  Vector<S> bracket(const Vector<S>& x, const Vector<S>& y) const {
    check(y);
    return left_multiplication(x) * y;
  }

  /// [x, y] + [y, x].
  Vector<S> symmetric_bracket(const Vector<S>& x, const Vector<S>& y) const { return bracket(x, y) + bracket(y, x); }

  friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
    if (a.field_ != b.field_ || a.dim() != b.dim()) return false;
    for (Index i = 0; i < a.dim(); ++i)
      if (!same(a.left(i), b.left(i))) return false;
    return true;
  }

 private:
  void check_index(Index i) const {
    if (i < 0 || i >= dim()) throw Error(ErrorKind::dimension, "basis index out of range");
  }
  void check(const Vector<S>& v) const {
    if (v.size() != dim()) throw Error(ErrorKind::dimension, "vector length differs from algebra dimension");
  }

  Field field_;
  std::vector<Matrix<S>> left_;
  std::vector<std::string> names_;
};

/// Human-readable linear combination such as "a2-a3" or "2*e1+e2".
template <class S>
std::string format_vector(const Vector<S>& v, const std::vector<std::string>& names, const Field& field) {
  std::string out;
  const S one = make_scalar<S>(field, 1);
  const S minus_one = make_scalar<S>(field, -1);
  for (Index i = 0; i < v.size(); ++i) {
    if (is_zero(v(i))) continue;
    std::string term = names[static_cast<std::size_t>(i)];
    bool negative = false;
    if (!field.is_prime() && v(i) == minus_one) {
      negative = true;
    } else if (!(v(i) == one)) {
      std::string coeff = ScalarTraits<S>::to_string(v(i), field);
      if (coeff.front() == '-') {
        negative = true;
        coeff.erase(0, 1);
      }
      term = coeff + "*" + term;
    }
    if (negative)
      out += "-" + term;
    else
      out += (out.empty() ? "" : "+") + term;
  }
  return out.empty() ? "0" : out;
}

template <class S>
struct LeibnizCheck {
  bool ok = true;
  std::array<Index, 3> triple{0, 0, 0};
  /// [x,[y,z]] - [[x,y],z] + [[x,z],y] at the first failing triple.
  Vector<S> residual;
};

/// Checks [x,[y,z]] = [[x,y],z] - [[x,z],y] on all basis triples, which
/// suffices by trilinearity.
template <class S>
LeibnizCheck<S> validate(const LeibnizAlgebra<S>& alg) {
  const Index n = alg.dim();
  std::vector<Matrix<S>> right;
  right.reserve(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) right.push_back(alg.right_multiplication(alg.basis_vector(k)));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        Vector<S> r = alg.left(i) * alg.bracket(j, k) - right[static_cast<std::size_t>(k)] * alg.bracket(i, j) +
                      right[static_cast<std::size_t>(j)] * alg.bracket(i, k);
        if (!all_zero(r)) return {false, {i, j, k}, std::move(r)};
      }
  return {true, {0, 0, 0}, Vector<S>()};
}

/// phi([e_i, e_j]) = [phi e_i, phi e_j] on all basis pairs.
template <class S>
bool is_bracket_preserving(const LeibnizAlgebra<S>& source, const LeibnizAlgebra<S>& target, const Matrix<S>& m) {
  if (m.rows() != target.dim() || m.cols() != source.dim()) return false;
  for (Index i = 0; i < source.dim(); ++i) {
    const Matrix<S> lhs = m * source.left(i);                       // columns: phi([e_i, e_j])
    const Matrix<S> rhs = target.left_multiplication(m.col(i)) * m;  // columns: [phi e_i, phi e_j]
    if (!same(lhs, rhs)) return false;
  }
  return true;
}

/// Bracket-preserving linear map, checked at construction.
template <class S>
class AlgebraMorphism {
 public:
  AlgebraMorphism() = default;
  AlgebraMorphism(LeibnizAlgebra<S> source, LeibnizAlgebra<S> target, Matrix<S> matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (source_.field() != target_.field()) throw Error(ErrorKind::field, "morphism between algebras over different fields");
    if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
      throw Error(ErrorKind::dimension, "morphism matrix has the wrong shape");
    if (!is_bracket_preserving(source_, target_, matrix_))
      throw Error(ErrorKind::not_homomorphism, "matrix does not preserve the Leibniz bracket");
  }

  static AlgebraMorphism identity(const LeibnizAlgebra<S>& alg) {
    return AlgebraMorphism(alg, alg, Matrix<S>::Identity(alg.dim(), alg.dim()));
  }

  const LeibnizAlgebra<S>& source() const noexcept { return source_; }
  const LeibnizAlgebra<S>& target() const noexcept { return target_; }
  const Matrix<S>& matrix() const noexcept { return matrix_; }

  Vector<S> operator()(const Vector<S>& v) const { return matrix_ * v; }

  Subspace<S> kernel() const { return leibalg::kernel(matrix_); }
  Subspace<S> image() const { return leibalg::image(matrix_); }
  bool injective() const { return rank(matrix_) == source_.dim(); }
  bool surjective() const { return rank(matrix_) == target_.dim(); }
  bool bijective() const { return injective() && surjective(); }

  AlgebraMorphism inverse() const {
    const LinearMap<S> m(Subspace<S>::whole(source_.dim()), Subspace<S>::whole(target_.dim()), matrix_);
    return AlgebraMorphism(target_, source_, m.inverse().coordinates());
  }

 private:
  LeibnizAlgebra<S> source_;
  LeibnizAlgebra<S> target_;
  Matrix<S> matrix_{0, 0};
};

template <class S>
AlgebraMorphism<S> compose(const AlgebraMorphism<S>& after, const AlgebraMorphism<S>& before) {
  if (!(before.target() == after.source())) throw Error(ErrorKind::dimension, "compose: algebras do not match");
  return AlgebraMorphism<S>(before.source(), after.target(), Matrix<S>(after.matrix() * before.matrix()));
}

template <class S>
bool is_two_sided_ideal(const LeibnizAlgebra<S>& alg, const Subspace<S>& space) {
  if (space.ambient_dim() != alg.dim()) throw Error(ErrorKind::dimension, "ideal test: ambient dimension mismatch");
  for (Index r = 0; r < space.dim(); ++r) {
    const Vector<S> h = space.basis_vector(r);
    for (Index j = 0; j < alg.dim(); ++j) {
      if (!space.contains(alg.bracket(h, alg.basis_vector(j)))) return false;
      if (!space.contains(alg.bracket(alg.basis_vector(j), h))) return false;
    }
  }
  return true;
}

template <class S>
bool is_subalgebra(const LeibnizAlgebra<S>& alg, const Subspace<S>& space) {
  if (space.ambient_dim() != alg.dim()) throw Error(ErrorKind::dimension, "subalgebra test: ambient dimension mismatch");
  for (Index r = 0; r < space.dim(); ++r)
    for (Index s = 0; s < space.dim(); ++s)
      if (!space.contains(alg.bracket(space.basis_vector(r), space.basis_vector(s)))) return false;
  return true;
}

/// Least two-sided ideal containing `seed`: add [s, e_j] and [e_j, s] for the
/// current basis until the dimension stops growing.
template <class S>
Subspace<S> ideal_closure(const LeibnizAlgebra<S>& alg, const Subspace<S>& seed) {
  if (seed.ambient_dim() != alg.dim()) throw Error(ErrorKind::dimension, "ideal_closure: ambient dimension mismatch");
  Subspace<S> current = seed;
  while (true) {
    std::vector<Vector<S>> gens;
    for (Index r = 0; r < current.dim(); ++r) {
      const Vector<S> s = current.basis_vector(r);
      gens.push_back(s);
      for (Index j = 0; j < alg.dim(); ++j) {
        gens.push_back(alg.bracket(s, alg.basis_vector(j)));
        gens.push_back(alg.bracket(alg.basis_vector(j), s));
      }
    }
    auto next = Subspace<S>::span(alg.dim(), gens);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

/// Least subalgebra containing `seed`.
template <class S>
Subspace<S> subalgebra_closure(const LeibnizAlgebra<S>& alg, const Subspace<S>& seed) {
  Subspace<S> current = seed;
  while (true) {
    std::vector<Vector<S>> gens;
    for (Index r = 0; r < current.dim(); ++r) {
      gens.push_back(current.basis_vector(r));
      for (Index s = 0; s < current.dim(); ++s) gens.push_back(alg.bracket(current.basis_vector(r), current.basis_vector(s)));
    }
    auto next = Subspace<S>::span(alg.dim(), gens);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

/// [M, N]_Lie: the ideal generated by [m, n] + [n, m].
template <class S>
Subspace<S> lie_commutator(const LeibnizAlgebra<S>& alg, const Subspace<S>& m, const Subspace<S>& n) {
  std::vector<Vector<S>> gens;
  for (Index r = 0; r < m.dim(); ++r)
    for (Index s = 0; s < n.dim(); ++s) gens.push_back(alg.symmetric_bracket(m.basis_vector(r), n.basis_vector(s)));
  return ideal_closure(alg, Subspace<S>::span(alg.dim(), gens));
}

/// [g, g]_Lie.
template <class S>
Subspace<S> lie_commutator(const LeibnizAlgebra<S>& alg) {
  const auto whole = Subspace<S>::whole(alg.dim());
  return lie_commutator(alg, whole, whole);
}

/// Z_Lie(g) = {z : [q, z] + [z, q] = 0 for all q}.
template <class S>
Subspace<S> lie_center(const LeibnizAlgebra<S>& alg) {
  const Index n = alg.dim();
  Matrix<S> sys(n * n, n);
  for (Index j = 0; j < n; ++j) sys.middleRows(j * n, n) = alg.left(j) + alg.right_multiplication(alg.basis_vector(j));
  return kernel(sys);
}

/// g^ann: generated by the squares [x, x]; polarized pairs e_i + e_j make the
/// generating set complete before closure.
template <class S>
Subspace<S> annihilator_ideal(const LeibnizAlgebra<S>& alg) {
  std::vector<Vector<S>> gens;
  for (Index i = 0; i < alg.dim(); ++i) {
    gens.push_back(alg.bracket(i, i));
    for (Index j = i + 1; j < alg.dim(); ++j) {
      const Vector<S> x = alg.basis_vector(i) + alg.basis_vector(j);
      gens.push_back(alg.bracket(x, x));
    }
  }
  return ideal_closure(alg, Subspace<S>::span(alg.dim(), gens));
}

template <class S>
bool is_abelian(const LeibnizAlgebra<S>& alg) {
  for (Index i = 0; i < alg.dim(); ++i)
    if (!all_zero(alg.left(i))) return false;
  return true;
}

/// [g, g]_Lie = 0, i.e. g is a Lie algebra.
template <class S>
bool has_trivial_lie_commutator(const LeibnizAlgebra<S>& alg) {
  return lie_commutator(alg).is_zero_space();
}

template <class S>
struct QuotientAlgebra {
  LeibnizAlgebra<S> algebra;
  AlgebraMorphism<S> projection;
  Matrix<S> section;  // projection.matrix() * section = I
  std::vector<Index> representatives;
};

/// g / I with cosets of the non-pivot basis vectors as basis.
template <class S>
QuotientAlgebra<S> quotient_algebra(const LeibnizAlgebra<S>& alg, const Subspace<S>& ideal) {
  if (!is_two_sided_ideal(alg, ideal)) throw Error(ErrorKind::not_ideal, "quotient_algebra: subspace is not a two-sided ideal");
  auto qs = quotient(alg.dim(), ideal);
  const auto d = static_cast<Index>(qs.representatives.size());
  std::vector<Matrix<S>> left;
  std::vector<std::string> names;
  for (Index a = 0; a < d; ++a) {
    const Index c = qs.representatives[static_cast<std::size_t>(a)];
    left.push_back(qs.projection * alg.left(c) * qs.section);
    names.push_back(alg.names()[static_cast<std::size_t>(c)]);
  }
  LeibnizAlgebra<S> q(alg.field(), std::move(left), std::move(names));
  // The morphism constructor checks projection([x, y]) = [projection x, projection y].
  AlgebraMorphism<S> proj(alg, q, qs.projection);
  return {std::move(q), std::move(proj), std::move(qs.section), std::move(qs.representatives)};
}

/// g_Lie = g / g^ann.
template <class S>
QuotientAlgebra<S> liezation(const LeibnizAlgebra<S>& alg) {
  return quotient_algebra(alg, annihilator_ideal(alg));
}

template <class S>
struct SubalgebraEmbedding {
  LeibnizAlgebra<S> algebra;  // basis = RREF basis of the subspace
  AlgebraMorphism<S> inclusion;
};

template <class S>
SubalgebraEmbedding<S> subalgebra(const LeibnizAlgebra<S>& alg, const Subspace<S>& space) {
  if (!is_subalgebra(alg, space)) throw Error(ErrorKind::not_homomorphism, "subspace is not closed under the bracket");
  const Index k = space.dim();
  std::vector<Matrix<S>> left;
  std::vector<std::string> names;
  for (Index r = 0; r < k; ++r) {
    Matrix<S> l(k, k);
    for (Index s = 0; s < k; ++s) l.col(s) = space.coordinates(alg.bracket(space.basis_vector(r), space.basis_vector(s)));
    left.push_back(std::move(l));
    names.push_back(format_vector(space.basis_vector(r), alg.names(), alg.field()));
  }
  LeibnizAlgebra<S> sub(alg.field(), std::move(left), std::move(names));
  AlgebraMorphism<S> inc(sub, alg, Matrix<S>(space.basis().transpose()));
  return {std::move(sub), std::move(inc)};
}

template <class S>
LeibnizAlgebra<S> direct_product(const LeibnizAlgebra<S>& a, const LeibnizAlgebra<S>& b) {
  if (a.field() != b.field()) throw Error(ErrorKind::field, "direct_product: algebras over different fields");
  std::vector<Matrix<S>> left;
  for (Index i = 0; i < a.dim(); ++i) left.push_back(block_diagonal(a.left(i), Matrix<S>(Matrix<S>::Zero(b.dim(), b.dim()))));
  for (Index i = 0; i < b.dim(); ++i) left.push_back(block_diagonal(Matrix<S>(Matrix<S>::Zero(a.dim(), a.dim())), b.left(i)));
  std::vector<std::string> names = a.names();
  for (const auto& nm : b.names()) {
    std::string candidate = nm;
    while (std::find(names.begin(), names.end(), candidate) != names.end()) candidate += "'";
    names.push_back(candidate);
  }
  return LeibnizAlgebra<S>(a.field(), std::move(left), std::move(names));
}

/// Same algebra in the basis given by the columns of `change` (old coordinates).
template <class S>
LeibnizAlgebra<S> transport(const LeibnizAlgebra<S>& alg, const Matrix<S>& change) {
  const Index n = alg.dim();
  if (change.rows() != n || change.cols() != n || rank(change) != n)
    throw Error(ErrorKind::not_isomorphism, "transport: change of basis is not invertible");
  Matrix<S> inv(n, n);
  for (Index k = 0; k < n; ++k) inv.col(k) = *particular_solution(change, Vector<S>(alg.basis_vector(k)));
  std::vector<Matrix<S>> left;
  for (Index i = 0; i < n; ++i) left.push_back(inv * alg.left_multiplication(change.col(i)) * change);
  return LeibnizAlgebra<S>(alg.field(), std::move(left));
}

}  // namespace leibalg

#endif  // LEIBALG_ALGEBRA_HPP
