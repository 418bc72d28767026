#ifndef LEIBALG_SAMPLING_HPP
#define LEIBALG_SAMPLING_HPP

#include "leibalg/extension.hpp"
#include "leibalg/random.hpp"

namespace leibalg {

/// Ideal generated by random vectors of Z_Lie(g); it stays inside Z_Lie(g).
inline Subspace<Fp> random_central_ideal(AlgebraSampler& sampler, const LeibnizAlgebra<Fp>& g) {
  const auto z = lie_center(g);
  if (z.is_zero_space()) return z;
  const auto k = static_cast<Index>(sampler.below(static_cast<std::uint64_t>(z.dim()) + 1));
  const Matrix<Fp> rows = sampler.matrix(k, z.dim()) * z.basis();
  return ideal_closure(g, Subspace<Fp>::span(g.dim(), rows));
}

/// A Lie-central extension of g by a random central ideal.
inline CentralExtension<Fp> random_extension_of(AlgebraSampler& sampler, const LeibnizAlgebra<Fp>& g) {
  return extension_by_ideal(g, random_central_ideal(sampler, g));
}

/// A Lie-central extension of a random algebra by a random central ideal.
inline CentralExtension<Fp> random_extension(AlgebraSampler& sampler, Index max_dim) {
  const auto g = sampler.mixed(max_dim);
  return random_extension_of(sampler, g);
}

}  // namespace leibalg

#endif  // LEIBALG_SAMPLING_HPP
