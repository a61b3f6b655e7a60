#ifndef MOMENTKIT_POLAR_HPP
#define MOMENTKIT_POLAR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "momentkit/linalg.hpp"
#include "momentkit/polytope.hpp"

namespace momentkit {

/// A direction xi with <alpha, xi> != 0 for every edge vector alpha of the
/// polytope it was chosen for. It defines "upwards".
struct PolarizingVector {
    RationalVec xi;
};

/// C_v = v + cone(edge vectors at v).
struct TangentCone {
    RationalVec apex;
    std::vector<RationalVec> generators;
};

/// A tangent cone with its upward generators flipped. A point
/// apex + sum c_j g_j belongs to the cone iff c_j >= 0 for closed
/// generators and c_j > 0 for open (flipped) ones. `sign` is
/// (-1)^(number of flipped generators).
struct PolarizedCone {
    RationalVec apex;
    std::vector<RationalVec> generators;
    std::vector<bool> open_flags;
    int sign = 1;

    /// Inverse of the generator matrix; present iff the generators form a
    /// basis of Q^n (simple vertex).
    std::optional<Matrix> inverse;

    std::size_t open_count() const;
};

bool is_polarizing(const Polytope& p, const RationalVec& xi);

/// Seeded search for a polarizing vector with small rational entries.
/// Gives up after 1000 candidates with std::logic_error.
PolarizingVector choose_polarizing_vector(const Polytope& p, std::uint64_t seed);

/// Validates xi against p. Throws DomainError(not_polarizing).
PolarizingVector make_polarizing_vector(const Polytope& p, const RationalVec& xi);

TangentCone tangent_cone(const Polytope& p, std::size_t v);

/// Throws DomainError(not_polarizing) if some edge direction pairs to zero with xi.
PolarizedCone polarize(const VertexFigure& vf, const RationalVec& xi);

/// Polarized cones at every vertex, in vertex order.
std::vector<PolarizedCone> decompose(const Polytope& p, const PolarizingVector& xi);

/// Cone coordinates c with x = apex + sum c_j g_j.
/// Throws DomainError(non_simple_vertex) if the generators are not a basis.
RationalVec cone_coordinates(const PolarizedCone& c, const RationalVec& x);

bool cone_contains(const PolarizedCone& c, const RationalVec& x);

/// sum_v sign_v [x in C_v#]. Equals [x in P] by the polar decomposition
/// identity; this computes the right-hand side on its own.
long signed_indicator_sum(const std::vector<PolarizedCone>& cones, const RationalVec& x);
long signed_indicator_sum(const Polytope& p, const PolarizingVector& xi, const RationalVec& x);

/// Number of integer points of the box inside the cone.
Integer count_cone_lattice_points(const PolarizedCone& c, const IntegerBox& box);

/// sum_v sign_v #(C_v# ∩ box ∩ Z^n). Each cone is counted separately over
/// the box. Throws DomainError(box_too_small) unless the box covers every
/// lattice point of p.
Integer signed_lattice_count(const Polytope& p, const PolarizingVector& xi, const IntegerBox& box);

}  // namespace momentkit

#endif
