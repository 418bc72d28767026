#include "leibalg/random.hpp"

namespace leibalg {

std::vector<LeibnizAlgebra<Fp>> all_two_dimensional(const Field& field) {
  const std::uint32_t p = field.characteristic();
  std::uint64_t count = 1;
  for (int i = 0; i < 8; ++i) count *= p;
  std::vector<LeibnizAlgebra<Fp>> out;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<Matrix<Fp>> left(2, Matrix<Fp>(2, 2));
    std::uint64_t c = code;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          left[static_cast<std::size_t>(i)](k, j) = Fp(static_cast<long long>(c % p), p);
          c /= p;
        }
    LeibnizAlgebra<Fp> alg(field, std::move(left));
    if (validate(alg).ok) out.push_back(std::move(alg));
  }
  return out;
}

const std::vector<LeibnizAlgebra<Fp>>& AlgebraSampler::two_dimensional() {
  if (dim_two_.empty()) dim_two_ = all_two_dimensional(field_);
  return dim_two_;
}

LeibnizAlgebra<Fp> AlgebraSampler::sparse(Index dim) {
  while (true) {
    std::vector<LeibnizAlgebra<Fp>::Entry> entries;
    const auto terms = 1 + below(4);
    for (std::uint64_t t = 0; t < terms; ++t) {
      Vector<Fp> v = Vector<Fp>::Zero(dim);
      v(static_cast<Index>(below(static_cast<std::uint64_t>(dim)))) = nonzero_scalar();
      entries.push_back({static_cast<Index>(below(static_cast<std::uint64_t>(dim))),
                         static_cast<Index>(below(static_cast<std::uint64_t>(dim))), std::move(v)});
    }
    auto alg = LeibnizAlgebra<Fp>::from_brackets(field_, dim, entries);
    if (validate(alg).ok) return transport(alg, invertible(dim));
  }
}

LeibnizAlgebra<Fp> AlgebraSampler::algebra(Index dim) {
  if (dim <= 1) return LeibnizAlgebra<Fp>::abelian(field_, dim);
  if (dim == 2 && field_.characteristic() == 3) {
    const auto& all = two_dimensional();
    return all[static_cast<std::size_t>(below(all.size()))];
  }
  if (dim <= 3) return sparse(dim);
  return direct_product(sparse(3), algebra(dim - 3));
}

LeibnizAlgebra<Fp> AlgebraSampler::mixed(Index max_dim) {
  const auto dim = static_cast<Index>(below(static_cast<std::uint64_t>(max_dim) + 1));
  const auto kind = below(10);
  if (kind < 7 || dim < 2) return algebra(dim);
  if (kind < 9) {
    const auto left = 1 + static_cast<Index>(below(static_cast<std::uint64_t>(dim - 1)));
    return direct_product(algebra(left), algebra(dim - left));
  }
  // Quotient of a larger algebra by the ideal generated by one random vector.
  const Index big = std::min<Index>(dim + 1, 3);
  const auto g = algebra(big);
  const auto ideal = ideal_closure(g, Subspace<Fp>::span(big, matrix(1, big)));
  return quotient_algebra(g, ideal).algebra;
}

}  // namespace leibalg
