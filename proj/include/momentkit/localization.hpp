#ifndef MOMENTKIT_LOCALIZATION_HPP
#define MOMENTKIT_LOCALIZATION_HPP

#include <cstdint>
#include <vector>

#include "momentkit/gkm.hpp"
#include "momentkit/poly.hpp"
#include "momentkit/polytope.hpp"

namespace momentkit {

/// Isolated fixed points with their isotropy weights. The weights at v are
/// the primitive edge directions oriented away from v, one per incident
/// edge, in the order of MomentGraph::incident(v).
struct FixedPointData {
    std::size_t dim = 0;
    std::vector<RationalVec> positions;
    std::vector<std::vector<RationalVec>> weights;
};

/// Orients each alpha_e away from its endpoint using the moment images.
/// Requires exactly dim linearly independent weights per vertex; throws
/// DomainError(not_delzant) otherwise.
FixedPointData fixed_point_data(const MomentGraph& g);

/// Product of the isotropy weights at v, homogeneous of degree dim.
MultiPoly euler_class_at(const FixedPointData& data, std::size_t v);

/// True iff no isotropy weight vanishes at xi.
bool is_generic_point(const FixedPointData& data, const RationalVec& xi);
RationalVec choose_evaluation_point(const FixedPointData& data, std::uint64_t seed);

/// sum_v f_v(xi) / e_v(xi) for a class satisfying the GKM conditions.
/// Throws DomainError(not_gkm) if the class fails them and
/// DomainError(weight_vanishes) if some e_v(xi) = 0.
Rational abbv_pushforward(const MomentGraph& g, const FixedPointData& data, const GKMClass& c,
                          const RationalVec& xi);

/// The class equal to the Euler class at v and zero elsewhere.
GKMClass delta_class(const MomentGraph& g, const FixedPointData& data, std::size_t v);

/// True iff every class in a basis of the degree-k part pushes forward to
/// zero at each sample point. Requires k < dim and at least three samples.
bool pushforward_degree_vanishing(const MomentGraph& g, const FixedPointData& data, unsigned k,
                                  const std::vector<RationalVec>& xi_samples);

/// Volume of a Delzant polytope from its vertices alone:
///   sum_v <v, xi>^n / (n! prod_j <-alpha_{v,j}, xi>)
/// with alpha_{v,j} the primitive edge directions leaving v.
/// Throws DomainError(not_delzant) or DomainError(not_generic).
Rational volume_localization(const Polytope& p, const RationalVec& xi);

}  // namespace momentkit

#endif
