#ifndef LEIBALG_HOMOLOGY_HPP
#define LEIBALG_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "leibalg/extension.hpp"

namespace leibalg {

/// HL_1^Lie(g), computed as the Liezation g / g^ann.
template <class S>
LeibnizAlgebra<S> hl1_lie(const LeibnizAlgebra<S>& g) {
  return liezation(g).algebra;
}

/// image(theta) = image(chi) ∩ [g,g]_Lie, in the coordinates of n.
template <class S>
Subspace<S> theta_image(const CentralExtension<S>& e) {
  return preimage(e.chi().matrix(), intersect(e.kernel_image(), lie_commutator(e.g())));
}

struct Junction {
  std::string space;
  Index space_dim = 0;
  Index image_dim = 0;   // image of the incoming map
  Index kernel_dim = 0;  // kernel of the outgoing map
  bool exact = false;
};

struct SequenceReport {
  std::vector<Junction> junctions;

  bool exact() const {
    for (const auto& j : junctions)
      if (!j.exact) return false;
    return true;
  }
};

template <class S>
Junction junction(std::string name, Index dim, const Subspace<S>& incoming_image, const Subspace<S>& outgoing_kernel) {
  return {std::move(name), dim, incoming_image.dim(), outgoing_kernel.dim(), incoming_image == outgoing_kernel};
}

/// n -> g_Lie -> q_Lie -> 0, with the first map chi followed by the projection.
template <class S>
SequenceReport check_sequence_tail(const CentralExtension<S>& e) {
  const auto gl = liezation(e.g());
  const auto ql = liezation(e.q());
  const Matrix<S> into = gl.projection.matrix() * e.chi().matrix();
  // pi maps g^ann into q^ann, so it descends; the morphism constructor rechecks the bracket.
  const AlgebraMorphism<S> down(gl.algebra, ql.algebra, Matrix<S>(ql.projection.matrix() * e.pi().matrix() * gl.section));
  const Index dg = gl.algebra.dim(), dq = ql.algebra.dim();
  SequenceReport r;
  r.junctions.push_back(junction("g_Lie", dg, image(into), down.kernel()));
  r.junctions.push_back(junction("q_Lie", dq, down.image(), Subspace<S>::whole(dq)));
  return r;
}

/// [g,g]_Lie -> [q,q]_Lie -> 0 through the restriction of pi, whose kernel must
/// be chi(image(theta)) = image(chi) ∩ [g,g]_Lie.
template <class S>
SequenceReport check_sequence_nine(const CentralExtension<S>& e) {
  const auto comm_g = lie_commutator(e.g());
  const auto comm_q = lie_commutator(e.q());
  SequenceReport r;
  Junction j;
  j.space = "[g,g]_Lie";
  j.space_dim = comm_g.dim();
  if (!is_subspace_of(image(e.pi().matrix(), comm_g), comm_q)) {
    r.junctions.push_back(j);
    return r;
  }
  const auto restricted = LinearMap<S>::from_ambient(comm_g, comm_q, e.pi().matrix());
  const auto theta_in_g = intersect(e.kernel_image(), comm_g);
  r.junctions.push_back(junction("[g,g]_Lie", comm_g.dim(), theta_in_g, kernel(restricted)));
  r.junctions.push_back(junction("[q,q]_Lie", comm_q.dim(), image(restricted), comm_q));
  return r;
}

/// not_stem, or stem with theta not onto n (hence not a cover), or stem with
/// theta onto n, where being a cover also needs injectivity of theta, which
/// depends on HL_2^Lie(q) and is not computed.
enum class StemStatus { not_stem, stem, undecidable_cover };

struct StemCoverReport {
  StemStatus status = StemStatus::not_stem;
  Index kernel_dim = 0;
  Index theta_image_dim = 0;
  bool theta_surjective = false;
};

template <class S>
StemCoverReport is_stem_cover_candidate(const CentralExtension<S>& e) {
  StemCoverReport r;
  r.kernel_dim = e.n().dim();
  r.theta_image_dim = theta_image(e).dim();
  r.theta_surjective = r.theta_image_dim == r.kernel_dim;
  if (!is_stem_extension(e))
    r.status = StemStatus::not_stem;
  else
    r.status = r.theta_surjective ? StemStatus::undecidable_cover : StemStatus::stem;
  return r;
}

inline const char* to_string(StemStatus s) {
  switch (s) {
    case StemStatus::not_stem: return "not_stem";
    case StemStatus::stem: return "stem";
    case StemStatus::undecidable_cover: return "undecidable_cover";
  }
  return "";
}

}  // namespace leibalg

#endif  // LEIBALG_HOMOLOGY_HPP
