#ifndef MOMENTKIT_POLYTOPE_HPP
#define MOMENTKIT_POLYTOPE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momentkit/rational.hpp"

namespace momentkit {

/// The closed half-space <normal, x> >= offset; normal points inward.
struct HalfSpace {
    RationalVec normal;
    Rational offset;

    Rational slack(const RationalVec& x) const { return dot(normal, x) - offset; }
    bool contains(const RationalVec& x) const { return slack(x) >= 0; }
    bool on_boundary(const RationalVec& x) const { return slack(x) == 0; }
};

using Edge = std::pair<std::size_t, std::size_t>;

/// A compact, full-dimensional convex polytope given by half-spaces, with
/// its vertex/edge/facet combinatorics derived exactly.
///
/// Vertices are sorted lexicographically; edges are (i, j) with i < j,
/// sorted. `facets()` indexes the half-spaces that support an actual
/// (n-1)-dimensional face; redundant constraints are kept but never appear
/// in `vertex_facets`.
class Polytope {
public:
    /// Builds a polytope from half-space data. Duplicate half-spaces (equal
    /// up to positive scaling) are dropped.
    ///
    /// Throws DomainError with kind `empty`, `unbounded` or `degenerate`
    /// (nonempty but not full-dimensional, or containing a line), and
    /// `invalid_argument` for malformed input.
    static Polytope from_halfspaces(std::size_t dim, std::vector<HalfSpace> halfspaces);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<HalfSpace>& halfspaces() const noexcept { return halfspaces_; }
    const std::vector<std::size_t>& facets() const noexcept { return facets_; }
    const std::vector<RationalVec>& vertices() const noexcept { return vertices_; }
    const std::vector<std::vector<std::size_t>>& vertex_facets() const noexcept {
        return vertex_facets_;
    }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// Neighbouring vertex indices, ascending.
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return neighbors_.at(v); }
    /// Vertex indices lying on the half-space `halfspace_index`, ascending.
    std::vector<std::size_t> vertices_on(std::size_t halfspace_index) const;

private:
    std::size_t dim_ = 0;
    std::vector<HalfSpace> halfspaces_;
    std::vector<std::size_t> facets_;
    std::vector<RationalVec> vertices_;
    std::vector<std::vector<std::size_t>> vertex_facets_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> neighbors_;
};

/// conv{0, s e_1, ..., s e_n}.
Polytope simplex(std::size_t n, const Rational& scale);
/// [0, s]^n.
Polytope cube(std::size_t n, const Rational& scale);
/// Hirzebruch trapezoid conv{(0,0), (a+1,0), (0,1), (1,1)}, a >= 1.
Polytope hirzebruch(unsigned a);
/// k P for k > 0.
Polytope dilate(const Polytope& p, const Rational& k);

struct VertexFigure {
    RationalVec vertex;
    std::vector<std::size_t> neighbors;       ///< adjacent vertex indices
    std::vector<RationalVec> edge_dirs;       ///< w - v per neighbour w
    std::vector<RationalVec> primitive_edge_dirs;
};

VertexFigure vertex_figure(const Polytope& p, std::size_t v);

bool is_simple(const Polytope& p);

struct SmoothnessReport {
    bool simple = false;
    bool smooth = false;
    std::string reason;                         ///< empty when smooth
    std::optional<std::size_t> failing_vertex;  ///< first non-smooth vertex
    Integer failing_det = 0;                    ///< |det| at that vertex
    std::vector<Integer> determinants;          ///< |det| per vertex when simple
};

/// Delzant smoothness: at every vertex the primitive edge vectors form a
/// lattice basis, i.e. |det| = 1. Non-simple input reports "not simple".
SmoothnessReport smoothness(const Polytope& p);
inline bool is_smooth(const Polytope& p) { return smoothness(p).smooth; }

/// Boundary-inclusive membership.
bool contains(const Polytope& p, const RationalVec& x);

/// Exact Euclidean volume by recursive cone-over-facet decomposition.
Rational volume_oracle(const Polytope& p);

/// Per-coordinate inclusive integer ranges.
using IntegerBox = std::vector<std::pair<Integer, Integer>>;

/// Smallest integer box containing p.
IntegerBox bounding_box(const Polytope& p);
bool box_contains(const IntegerBox& box, const Polytope& p);

/// Calls fn(point) for every integer point of the box, in lexicographic order.
template <typename Fn>
void for_each_lattice_point(const IntegerBox& box, Fn&& fn) {
    const std::size_t n = box.size();
    for (const auto& [lo, hi] : box)
        if (lo > hi) return;
    RationalVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = Rational(box[i].first);
    while (true) {
        fn(static_cast<const RationalVec&>(x));
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (x[i] < Rational(box[i].second)) {
                x[i] += 1;
                break;
            }
            x[i] = Rational(box[i].first);
            if (i == 0) return;
        }
        if (n == 0) return;
    }
}

struct LatticePoints {
    std::vector<RationalVec> points;
    std::size_t count = 0;
};

/// Integer points of p by enumerating its bounding box.
LatticePoints lattice_points_oracle(const Polytope& p);

}  // namespace momentkit

#endif
