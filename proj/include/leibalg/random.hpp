#ifndef LEIBALG_RANDOM_HPP
#define LEIBALG_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "leibalg/algebra.hpp"

namespace leibalg {

/// Random Leibniz algebras over F_p for property suites. Uses only the raw
/// output of the engine so sequences are identical across standard libraries.
class AlgebraSampler {
 public:
  AlgebraSampler(Field field, std::uint64_t seed) : field_(field), rng_(seed) {
    if (!field_.is_prime()) throw Error(ErrorKind::field, "random algebras need a finite field");
  }

  const Field& field() const noexcept { return field_; }

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

  Fp scalar() { return Fp(static_cast<long long>(below(field_.characteristic())), field_.characteristic()); }
  Fp nonzero_scalar() { return Fp(static_cast<long long>(1 + below(field_.characteristic() - 1)), field_.characteristic()); }

  Vector<Fp> vector(Index n) {
    Vector<Fp> v(n);
    for (Index i = 0; i < n; ++i) v(i) = scalar();
    return v;
  }

  Matrix<Fp> matrix(Index rows, Index cols) {
    Matrix<Fp> m(rows, cols);
    for (Index j = 0; j < cols; ++j)
      for (Index i = 0; i < rows; ++i) m(i, j) = scalar();
    return m;
  }

  Matrix<Fp> invertible(Index n) {
    while (true) {
      Matrix<Fp> m = matrix(n, n);
      if (rank(m) == n) return m;
    }
  }

  Subspace<Fp> subspace(Index ambient, Index max_generators) {
    const auto k = static_cast<Index>(below(static_cast<std::uint64_t>(max_generators) + 1));
    return Subspace<Fp>::span(ambient, matrix(k, ambient));
  }

  /// A valid algebra of the given dimension (at most 3 for fresh tensors).
  LeibnizAlgebra<Fp> algebra(Index dim);

  /// Algebra of dimension at most max_dim, mixing fresh tensors, products and quotients.
  LeibnizAlgebra<Fp> mixed(Index max_dim);

 private:
  const std::vector<LeibnizAlgebra<Fp>>& two_dimensional();
  LeibnizAlgebra<Fp> sparse(Index dim);

  Field field_;
  std::mt19937_64 rng_;
  std::vector<LeibnizAlgebra<Fp>> dim_two_;
};

/// Every Leibniz algebra structure on F_p^2, in increasing order of the tensor code.
std::vector<LeibnizAlgebra<Fp>> all_two_dimensional(const Field& field);

}  // namespace leibalg

#endif  // LEIBALG_RANDOM_HPP
