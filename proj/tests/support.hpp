#ifndef LEIBALG_TESTS_SUPPORT_HPP
#define LEIBALG_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <vector>

#include "leibalg/extension.hpp"
#include "leibalg/random.hpp"
#include "leibalg/sampling.hpp"

namespace leibalg::testing {

template <class S>
Vector<S> vec(const Field& f, std::initializer_list<long long> xs) {
  Vector<S> v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long long x : xs) v(i++) = make_scalar<S>(f, x);
  return v;
}

template <class S>
Matrix<S> mat(const Field& f, std::initializer_list<std::initializer_list<long long>> rows) {
  const auto r = static_cast<Index>(rows.size());
  const auto c = r ? static_cast<Index>(rows.begin()->size()) : 0;
  Matrix<S> m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long long x : row) m(i, j++) = make_scalar<S>(f, x);
    ++i;
  }
  return m;
}

template <class S>
Matrix<S> random_matrix(const Field& f, Index rows, Index cols, std::mt19937_64& rng, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix<S> m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = make_scalar<S>(f, dist(rng));
  return m;
}

/// All vectors of F_p^n in increasing order of sum_i x_i p^i.
inline std::vector<Vector<Fp>> all_vectors(const Field& f, Index n) {
  const auto p = static_cast<long long>(f.characteristic());
  long long count = 1;
  for (Index i = 0; i < n; ++i) count *= p;
  std::vector<Vector<Fp>> out;
  for (long long code = 0; code < count; ++code) {
    Vector<Fp> v(n);
    long long c = code;
    for (Index i = 0; i < n; ++i) {
      v(i) = Fp(c % p, f.characteristic());
      c /= p;
    }
    out.push_back(v);
  }
  return out;
}

/// All m x n matrices over F_p.
inline std::vector<Matrix<Fp>> all_matrices(const Field& f, Index m, Index n) {
  const auto vs = all_vectors(f, m * n);
  std::vector<Matrix<Fp>> out;
  for (const auto& v : vs) out.push_back(Eigen::Map<const Matrix<Fp>>(v.data(), m, n));
  return out;
}

// The two worked-example algebras.
template <class S>
LeibnizAlgebra<S> g1(const Field& f) {
  using E = typename LeibnizAlgebra<S>::Entry;
  return LeibnizAlgebra<S>::from_brackets(f, 2, {E{0, 0, vec<S>(f, {0, 1})}, E{1, 0, vec<S>(f, {0, 1})}});
}

template <class S>
LeibnizAlgebra<S> g2(const Field& f) {
  using E = typename LeibnizAlgebra<S>::Entry;
  const auto a3 = vec<S>(f, {0, 0, 1});
  return LeibnizAlgebra<S>::from_brackets(f, 3, {E{0, 0, a3}, E{1, 0, a3}, E{2, 0, a3}}, {"a1", "a2", "a3"});
}

using leibalg::random_central_ideal;
using leibalg::random_extension;

}  // namespace leibalg::testing

#endif  // LEIBALG_TESTS_SUPPORT_HPP
