#ifndef LEIBALG_LINALG_HPP
#define LEIBALG_LINALG_HPP

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

#include "leibalg/error.hpp"
#include "leibalg/field.hpp"

namespace leibalg {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

template <class Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m.coeff(i, j))) return false;
  return true;
}

/// Shape-aware exact equality (Eigen's operator== asserts on shape mismatch).
template <class A, class B>
bool same(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!(a.coeff(i, j) == b.coeff(i, j))) return false;
  return true;
}

template <class S>
Matrix<S> vstack(const Matrix<S>& top, const Matrix<S>& bottom) {
  if (top.cols() != bottom.cols()) throw Error(ErrorKind::dimension, "vstack: column counts differ");
  Matrix<S> out(top.rows() + bottom.rows(), top.cols());
  out << top, bottom;
  return out;
}

template <class S>
Matrix<S> hstack(const Matrix<S>& left, const Matrix<S>& right) {
  if (left.rows() != right.rows()) throw Error(ErrorKind::dimension, "hstack: row counts differ");
  Matrix<S> out(left.rows(), left.cols() + right.cols());
  out << left, right;
  return out;
}

template <class S>
Matrix<S> block_diagonal(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out = Matrix<S>::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

template <class S>
struct RowEchelon {
  Matrix<S> reduced;  // same shape as the input, zero rows last
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Reduced row-echelon form by Gauss-Jordan elimination. Deterministic: the
/// first nonzero entry at or below the current row is chosen as pivot.
template <class Derived>
RowEchelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using S = typename Derived::Scalar;
  Matrix<S> m = input;
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pick = row;
    while (pick < m.rows() && is_zero(m(pick, col))) ++pick;
    if (pick == m.rows()) continue;
    if (pick != row) m.row(row).swap(m.row(pick));
    const S inv = S(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const S factor = m(r, col);
      for (Index j = col; j < m.cols(); ++j) m(r, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Subspace of F^n stored by its canonical RREF basis (rows are basis
/// vectors), so equal subspaces have identical representations.
template <class S>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Span of the rows of `rows`.
  template <class Derived>
  static Subspace span(Index ambient, const Eigen::MatrixBase<Derived>& rows) {
    if (rows.cols() != ambient) throw Error(ErrorKind::dimension, "span: vector length differs from ambient dimension");
    auto ech = rref(rows);
    Subspace s(ambient);
    s.basis_ = ech.reduced.topRows(ech.rank());
    s.pivots_ = std::move(ech.pivots);
    return s;
  }

  static Subspace span(Index ambient, const std::vector<Vector<S>>& vectors) {
    Matrix<S> rows(static_cast<Index>(vectors.size()), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient) throw Error(ErrorKind::dimension, "span: vector length differs from ambient dimension");
      rows.row(static_cast<Index>(i)) = vectors[i].transpose();
    }
    return span(ambient, rows);
  }

  static Subspace whole(Index ambient) {
    Subspace s(ambient);
    s.basis_ = Matrix<S>::Identity(ambient, ambient);
    for (Index i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
  }

  Index ambient_dim() const noexcept { return ambient_; }
  Index dim() const noexcept { return basis_.rows(); }
  bool is_zero_space() const noexcept { return dim() == 0; }
  bool is_whole() const noexcept { return dim() == ambient_; }

  const Matrix<S>& basis() const noexcept { return basis_; }
  const std::vector<Index>& pivots() const noexcept { return pivots_; }
  Vector<S> basis_vector(Index r) const { return basis_.row(r).transpose(); }

  /// v minus its projection along the pivot coordinates; zero iff v is in the subspace.
  Vector<S> residual(const Vector<S>& v) const {
    check_length(v);
    Vector<S> r = v;
    for (Index k = 0; k < dim(); ++k) {
      const S c = v(pivots_[static_cast<std::size_t>(k)]);
      if (!is_zero(c)) r -= c * basis_.row(k).transpose();
    }
    return r;
  }

  bool contains(const Vector<S>& v) const { return all_zero(residual(v)); }

  /// Coordinates of v with respect to the RREF basis: the entries of v at the pivots.
  Vector<S> coordinates(const Vector<S>& v) const {
    if (!contains(v)) throw Error(ErrorKind::dimension, "coordinates: vector is not in the subspace");
    Vector<S> c(dim());
    for (Index k = 0; k < dim(); ++k) c(k) = v(pivots_[static_cast<std::size_t>(k)]);
    return c;
  }

  /// Ambient vector with the given coordinates.
  Vector<S> from_coordinates(const Vector<S>& c) const {
    if (c.size() != dim()) throw Error(ErrorKind::dimension, "from_coordinates: wrong coordinate count");
    return basis_.transpose() * c;
  }

  /// dim x ambient matrix sending an ambient vector in the subspace to its coordinates.
  Matrix<S> coordinate_selector() const {
    Matrix<S> sel = Matrix<S>::Zero(dim(), ambient_);
    for (Index k = 0; k < dim(); ++k) sel(k, pivots_[static_cast<std::size_t>(k)]) = S(1);
    return sel;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && same(a.basis_, b.basis_);
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  void check_length(const Vector<S>& v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::dimension, "vector length differs from ambient dimension");
  }

  Index ambient_ = 0;
  Matrix<S> basis_{0, 0};
  std::vector<Index> pivots_;
};

template <class S>
void require_same_ambient(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::dimension, "subspaces live in different ambient spaces");
}

template <class S>
Subspace<S> sum(const Subspace<S>& a, const Subspace<S>& b) {
  require_same_ambient(a, b);
  if (b.is_zero_space()) return a;
  if (a.is_zero_space()) return b;
  return Subspace<S>::span(a.ambient_dim(), vstack(a.basis(), b.basis()));
}

/// Zassenhaus intersection: reduce [A A; B 0]; rows with vanishing left half
/// carry a basis of the intersection in their right half.
template <class S>
Subspace<S> intersect(const Subspace<S>& a, const Subspace<S>& b) {
  require_same_ambient(a, b);
  const Index n = a.ambient_dim();
  if (a.is_zero_space() || b.is_zero_space()) return Subspace<S>(n);
  Matrix<S> z = Matrix<S>::Zero(a.dim() + b.dim(), 2 * n);
  z.topLeftCorner(a.dim(), n) = a.basis();
  z.topRightCorner(a.dim(), n) = a.basis();
  z.bottomLeftCorner(b.dim(), n) = b.basis();
  const auto ech = rref(z);
  std::vector<Vector<S>> rows;
  for (Index r = 0; r < ech.rank(); ++r)
    if (ech.pivots[static_cast<std::size_t>(r)] >= n) rows.push_back(ech.reduced.row(r).tail(n).transpose());
  return Subspace<S>::span(n, rows);
}

template <class S>
bool is_subspace_of(const Subspace<S>& a, const Subspace<S>& b) {
  require_same_ambient(a, b);
  for (Index r = 0; r < a.dim(); ++r)
    if (!b.contains(a.basis_vector(r))) return false;
  return true;
}

/// Null space {x : m x = 0} as a subspace of F^{cols}.
template <class Derived>
Subspace<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const auto ech = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vector<S>> rows;
  for (Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vector<S> x = Vector<S>::Zero(m.cols());
    x(f) = S(1);
    for (Index r = 0; r < ech.rank(); ++r) x(ech.pivots[static_cast<std::size_t>(r)]) = -ech.reduced(r, f);
    rows.push_back(std::move(x));
  }
  return Subspace<S>::span(m.cols(), rows);
}

/// Column space as a subspace of F^{rows}.
template <class Derived>
Subspace<typename Derived::Scalar> image(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  return Subspace<S>::span(m.rows(), Matrix<S>(m.transpose()));
}

/// Image of a subspace under an ambient matrix.
template <class S>
Subspace<S> image(const Matrix<S>& m, const Subspace<S>& sub) {
  if (m.cols() != sub.ambient_dim()) throw Error(ErrorKind::dimension, "image: matrix does not act on this subspace");
  return Subspace<S>::span(m.rows(), Matrix<S>(sub.basis() * m.transpose()));
}

/// Preimage {x : m x in target}.
template <class S>
Subspace<S> preimage(const Matrix<S>& m, const Subspace<S>& target) {
  if (m.rows() != target.ambient_dim()) throw Error(ErrorKind::dimension, "preimage: matrix codomain mismatch");
  // x with m x in target  <=>  (complement coords of m x) = 0; use a kernel of [m | -B^T].
  const Index n = m.cols();
  Matrix<S> sys = hstack(m, Matrix<S>(-target.basis().transpose()));
  const auto ker = kernel(sys);
  std::vector<Vector<S>> rows;
  for (Index r = 0; r < ker.dim(); ++r) rows.push_back(ker.basis_vector(r).head(n));
  return Subspace<S>::span(n, rows);
}

/// Some x with a x = b, if any.
template <class S>
std::optional<Vector<S>> particular_solution(const Matrix<S>& a, const Vector<S>& b) {
  if (a.rows() != b.size()) throw Error(ErrorKind::dimension, "particular_solution: shape mismatch");
  Matrix<S> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto ech = rref(aug);
  Vector<S> x = Vector<S>::Zero(a.cols());
  for (Index r = 0; r < ech.rank(); ++r) {
    const Index p = ech.pivots[static_cast<std::size_t>(r)];
    if (p == a.cols()) return std::nullopt;
    x(p) = ech.reduced(r, a.cols());
  }
  return x;
}

/// Linear map between subspaces, stored in the RREF coordinates of both.
template <class S>
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(Subspace<S> domain, Subspace<S> codomain, Matrix<S> coords)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), coords_(std::move(coords)) {
    if (coords_.rows() != codomain_.dim() || coords_.cols() != domain_.dim())
      throw Error(ErrorKind::dimension, "LinearMap: coordinate matrix has the wrong shape");
  }

  /// Restricts an ambient matrix to `domain`; images must land in `codomain`.
  static LinearMap from_ambient(const Subspace<S>& domain, const Subspace<S>& codomain, const Matrix<S>& ambient) {
    if (ambient.cols() != domain.ambient_dim() || ambient.rows() != codomain.ambient_dim())
      throw Error(ErrorKind::dimension, "LinearMap::from_ambient: shape mismatch");
    Matrix<S> coords(codomain.dim(), domain.dim());
    for (Index k = 0; k < domain.dim(); ++k) coords.col(k) = codomain.coordinates(ambient * domain.basis_vector(k));
    return LinearMap(domain, codomain, std::move(coords));
  }

  static LinearMap identity(const Subspace<S>& s) {
    return LinearMap(s, s, Matrix<S>::Identity(s.dim(), s.dim()));
  }

  static LinearMap zero(const Subspace<S>& domain, const Subspace<S>& codomain) {
    return LinearMap(domain, codomain, Matrix<S>::Zero(codomain.dim(), domain.dim()));
  }

  const Subspace<S>& domain() const noexcept { return domain_; }
  const Subspace<S>& codomain() const noexcept { return codomain_; }
  const Matrix<S>& coordinates() const noexcept { return coords_; }

  Vector<S> operator()(const Vector<S>& v) const {
    return codomain_.from_coordinates(coords_ * domain_.coordinates(v));
  }

  /// Ambient matrix acting as this map on the domain and as zero on the
  /// standard coordinates complementary to the domain's pivots.
  Matrix<S> ambient_matrix() const {
    return codomain_.basis().transpose() * coords_ * domain_.coordinate_selector();
  }

  Index rank() const { return leibalg::rank(coords_); }
  bool injective() const { return rank() == domain_.dim(); }
  bool surjective() const { return rank() == codomain_.dim(); }
  bool bijective() const { return injective() && surjective(); }

  LinearMap inverse() const {
    if (!bijective()) throw Error(ErrorKind::not_isomorphism, "LinearMap::inverse: map is not bijective");
    const Index d = domain_.dim();
    Matrix<S> inv(d, d);
    for (Index k = 0; k < d; ++k) {
      Vector<S> e = Vector<S>::Zero(d);
      e(k) = S(1);
      inv.col(k) = *particular_solution(coords_, e);
    }
    return LinearMap(codomain_, domain_, std::move(inv));
  }

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && same(a.coords_, b.coords_);
  }

 private:
  Subspace<S> domain_;
  Subspace<S> codomain_;
  Matrix<S> coords_{0, 0};
};

/// after ∘ before.
template <class S>
LinearMap<S> compose(const LinearMap<S>& after, const LinearMap<S>& before) {
  if (!(before.codomain() == after.domain())) throw Error(ErrorKind::dimension, "compose: spaces do not match");
  return LinearMap<S>(before.domain(), after.codomain(), Matrix<S>(after.coordinates() * before.coordinates()));
}

/// Kernel of a linear map as a subspace of the domain's ambient space.
template <class S>
Subspace<S> kernel(const LinearMap<S>& f) {
  const auto k = kernel(f.coordinates());
  std::vector<Vector<S>> rows;
  for (Index r = 0; r < k.dim(); ++r) rows.push_back(f.domain().from_coordinates(k.basis_vector(r)));
  return Subspace<S>::span(f.domain().ambient_dim(), rows);
}

/// Image of a linear map as a subspace of the codomain's ambient space.
template <class S>
Subspace<S> image(const LinearMap<S>& f) {
  return image(Matrix<S>(f.codomain().basis().transpose() * f.coordinates()));
}

enum class SolveStatus { total, underdetermined, inconsistent };

template <class S>
struct LinearSolve {
  SolveStatus status = SolveStatus::inconsistent;
  /// Defined on the span of the inputs; that span equals the domain iff status is total.
  std::optional<LinearMap<S>> map;
};

/// The unique linear map sending each input vector to its paired output, if
/// one exists.
template <class S>
LinearSolve<S> solve_linear_map(const std::vector<std::pair<Vector<S>, Vector<S>>>& pairs, const Subspace<S>& domain,
                                const Subspace<S>& codomain) {
  const Index n = domain.ambient_dim();
  const Index m = codomain.ambient_dim();
  Matrix<S> rows(static_cast<Index>(pairs.size()), n + m);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [in, out] = pairs[i];
    if (!domain.contains(in)) throw Error(ErrorKind::dimension, "solve_linear_map: input outside the domain");
    if (!codomain.contains(out)) throw Error(ErrorKind::dimension, "solve_linear_map: output outside the codomain");
    rows.row(static_cast<Index>(i)) << in.transpose(), out.transpose();
  }
  const auto ech = rref(rows);
  std::vector<Index> left_rows;
  for (Index r = 0; r < ech.rank(); ++r) {
    if (ech.pivots[static_cast<std::size_t>(r)] >= n) return {SolveStatus::inconsistent, std::nullopt};
    left_rows.push_back(r);
  }
  // Left halves of pivot rows are already a canonical RREF basis of span(inputs).
  Matrix<S> src_rows(static_cast<Index>(left_rows.size()), n);
  Matrix<S> coords(codomain.dim(), static_cast<Index>(left_rows.size()));
  for (std::size_t k = 0; k < left_rows.size(); ++k) {
    const Index r = left_rows[k];
    src_rows.row(static_cast<Index>(k)) = ech.reduced.row(r).head(n);
    coords.col(static_cast<Index>(k)) = codomain.coordinates(ech.reduced.row(r).tail(m).transpose());
  }
  auto source = Subspace<S>::span(n, src_rows);
  const bool total = source.dim() == domain.dim();
  return {total ? SolveStatus::total : SolveStatus::underdetermined,
          LinearMap<S>(total ? domain : source, codomain, std::move(coords))};
}

/// Quotient F^n / sub with cosets represented by the non-pivot standard
/// basis vectors.
template <class S>
struct QuotientStructure {
  Matrix<S> projection;  // (n - k) x n
  Matrix<S> section;     // n x (n - k), projection * section = I
  std::vector<Index> representatives;
};

template <class S>
QuotientStructure<S> quotient(Index ambient, const Subspace<S>& sub) {
  if (sub.ambient_dim() != ambient) throw Error(ErrorKind::dimension, "quotient: ambient dimension mismatch");
  std::vector<bool> is_pivot(static_cast<std::size_t>(ambient), false);
  for (Index p : sub.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
  QuotientStructure<S> q;
  for (Index c = 0; c < ambient; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) q.representatives.push_back(c);
  const auto d = static_cast<Index>(q.representatives.size());
  q.projection = Matrix<S>::Zero(d, ambient);
  q.section = Matrix<S>::Zero(ambient, d);
  // x = sum_r x[pivot_r] b_r + sum_c beta_c e_c  =>  beta_c = x_c - sum_r x[pivot_r] b_r[c]
  for (Index j = 0; j < d; ++j) {
    const Index c = q.representatives[static_cast<std::size_t>(j)];
    q.projection(j, c) = S(1);
    for (Index r = 0; r < sub.dim(); ++r) q.projection(j, sub.pivots()[static_cast<std::size_t>(r)]) = -sub.basis()(r, c);
    q.section(c, j) = S(1);
  }
  return q;
}

}  // namespace leibalg

#endif  // LEIBALG_LINALG_HPP
