#ifndef MOMENTKIT_GKM_HPP
#define MOMENTKIT_GKM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "momentkit/poly.hpp"
#include "momentkit/polytope.hpp"

namespace momentkit {

/// The labelled graph (Gamma, alpha): fixed points with their moment images,
/// invariant spheres as edges, and a weight per edge determined up to sign.
class MomentGraph {
public:
    /// General entry point for hand-built graphs. Checks index ranges, that
    /// weights are nonzero and that at every vertex the incident weights are
    /// pairwise linearly independent. Throws DomainError(invalid_argument).
    static MomentGraph make(std::size_t dim, std::vector<RationalVec> positions,
                            std::vector<Edge> edges, std::vector<LinearForm> weights,
                            std::vector<std::string> labels = {});

    std::size_t dim() const noexcept { return dim_; }
    std::size_t vertex_count() const noexcept { return positions_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<RationalVec>& positions() const noexcept { return positions_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<LinearForm>& weights() const noexcept { return weights_; }
    /// Indices of edges incident to v.
    const std::vector<std::size_t>& incident(std::size_t v) const { return incident_.at(v); }
    std::size_t other_end(std::size_t edge, std::size_t v) const;

    /// Copy with alpha_e replaced by -alpha_e wherever flip[e] is set.
    MomentGraph with_flipped_weights(const std::vector<bool>& flip) const;

private:
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<RationalVec> positions_;
    std::vector<Edge> edges_;
    std::vector<LinearForm> weights_;
    std::vector<std::vector<std::size_t>> incident_;
};

/// 1-skeleton of a Delzant polytope with alpha_e = primitive(w - v) for the
/// edge (v, w), v < w. Throws DomainError(not_delzant) if p is not smooth.
MomentGraph moment_graph(const Polytope& p);

/// A tuple (f_p) of polynomials indexed by graph vertices.
struct GKMClass {
    std::vector<MultiPoly> components;

    /// Common polynomial degree of the components, -1 for the zero class,
    /// nullopt if inhomogeneous.
    std::optional<int> homogeneous_degree() const;

    static GKMClass constant(const MomentGraph& g, const Rational& c);
    /// Componentwise product.
    friend GKMClass operator*(const GKMClass& a, const GKMClass& b);
    /// Multiplication by a single polynomial (module structure over H_T(pt)).
    friend GKMClass operator*(const MultiPoly& f, const GKMClass& a);
};

struct GKMCheck {
    bool ok = true;
    std::vector<std::size_t> failing_edges;
};

/// alpha_e | (f_p - f_q) for every edge e = (p, q).
/// Throws DomainError(invalid_argument) if the component count is wrong.
GKMCheck gkm_check(const MomentGraph& g, const GKMClass& c);

/// Basis of the degree-k part of H*(Gamma, alpha) (polynomial degree k,
/// cohomological degree 2k), from the nullspace of the GKM constraint system.
std::vector<GKMClass> gkm_basis(const MomentGraph& g, unsigned k);

/// dim_Q of the degree-k part: #unknowns - rank of the constraint system.
std::size_t gkm_dimension(const MomentGraph& g, unsigned k);

/// Betti numbers b_{2k}, stored at index k.
struct BettiProfile {
    std::vector<std::size_t> b;

    std::size_t total() const;
    bool palindromic() const;
    friend bool operator==(const BettiProfile&, const BettiProfile&) = default;
};

/// True iff <pos_w - pos_v, xi> != 0 along every edge.
bool is_generic(const MomentGraph& g, const RationalVec& xi);
/// Seeded search for a generic direction; std::logic_error after 1000 tries.
RationalVec choose_generic_direction(const MomentGraph& g, std::uint64_t seed);

/// b_{2k} = number of vertices with exactly k incident edges pointing down
/// (<pos_w - pos_v, xi> < 0). Throws DomainError(not_generic).
BettiProfile betti_numbers(const MomentGraph& g, const RationalVec& xi);

struct FreeModuleCheck {
    bool ok = true;
    BettiProfile betti;
    std::vector<std::size_t> dimensions;  ///< gkm_dimension(g, k), k = 0..k_max
    std::vector<std::size_t> expected;    ///< sum_j b_{2j} C(k-j+n-1, n-1)
};

/// Compares gkm_dimension with the Hilbert function of a free
/// Q[x_1..x_n]-module with b_{2j} generators in degree j, for k <= k_max.
FreeModuleCheck free_module_check(const MomentGraph& g, unsigned k_max, std::uint64_t seed = 0);

/// The degree-1 class of the facet `facet` (an index into p.facets()):
/// at a vertex v on the facet, the primitive direction of the unique edge
/// leaving the facet; zero elsewhere. g must be moment_graph(p).
GKMClass facet_class(const Polytope& p, const MomentGraph& g, std::size_t facet);

/// Ordinary Betti number b_{2k}, available once freeness has been
/// confirmed through degree k. Throws DomainError(free_module_check_failed).
std::size_t restriction_kernel_note(const MomentGraph& g, unsigned k, std::uint64_t seed = 0);

}  // namespace momentkit

#endif
