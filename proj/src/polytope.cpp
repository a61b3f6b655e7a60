#include "momentkit/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "momentkit/error.hpp"
#include "momentkit/linalg.hpp"

namespace momentkit {

namespace {

/// Calls fn(indices) for every k-subset of {0..m-1} in lexicographic order;
/// stops early when fn returns true.
template <typename Fn>
bool for_each_subset(std::size_t m, std::size_t k, Fn&& fn) {
    if (k > m) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (fn(static_cast<const std::vector<std::size_t>&>(idx))) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Basic feasible points of {x : eq_i(x) = 0 for all i, ineq_j(x) >= 0 for all j}:
/// points where the equalities together with some inequalities form a
/// nonsingular n x n system. With `first_only` the search stops at one hit.
std::vector<RationalVec> basic_feasible_points(std::size_t n, const std::vector<HalfSpace>& ineqs,
                                               const std::vector<HalfSpace>& eqs,
                                               bool first_only) {
    std::set<RationalVec> found;
    if (eqs.size() > n) return {};
    const std::size_t need = n - eqs.size();
    for_each_subset(ineqs.size(), need, [&](const std::vector<std::size_t>& idx) {
        Matrix a(n, n);
        RationalVec b(n);
        std::size_t r = 0;
        for (const auto& e : eqs) {
            for (std::size_t c = 0; c < n; ++c) a(r, c) = e.normal[c];
            b[r++] = e.offset;
        }
        for (auto i : idx) {
            for (std::size_t c = 0; c < n; ++c) a(r, c) = ineqs[i].normal[c];
            b[r++] = ineqs[i].offset;
        }
        auto x = solve(a, b);
        if (!x) return false;
        for (const auto& h : ineqs)
            if (!h.contains(*x)) return false;
        for (const auto& e : eqs)
            if (!e.on_boundary(*x)) return false;
        found.insert(std::move(*x));
        return first_only;
    });
    return {found.begin(), found.end()};
}

/// Positive rescaling making the normal a primitive integer vector; used as
/// a key to drop duplicate half-spaces.
std::pair<RationalVec, Rational> normalized(const HalfSpace& h) {
    RationalVec prim = primitive(h.normal);
    std::size_t k = 0;
    while (h.normal[k] == 0) ++k;
    Rational factor = prim[k] / h.normal[k];
    return {std::move(prim), h.offset * factor};
}

/// True iff {d : <normal_i, d> >= 0 for all i} contains a nonzero d. Split
/// by the sign pattern s of d and search for a vertex of the bounded slice
/// {s_i d_i >= 0, sum_i s_i d_i = 1}.
bool has_nonzero_recession_direction(std::size_t n, const std::vector<HalfSpace>& hs) {
    const std::size_t patterns = std::size_t{1} << n;
    for (std::size_t mask = 0; mask < patterns; ++mask) {
        std::vector<HalfSpace> ineqs;
        for (const auto& h : hs) ineqs.push_back({h.normal, 0});
        HalfSpace sum{RationalVec(n), 1};
        for (std::size_t i = 0; i < n; ++i) {
            Rational s = (mask >> i) & 1u ? -1 : 1;
            RationalVec e(n);
            e[i] = s;
            ineqs.push_back({e, 0});
            sum.normal[i] = s;
        }
        if (!basic_feasible_points(n, ineqs, {sum}, true).empty()) return true;
    }
    return false;
}

std::size_t affine_rank(const std::vector<RationalVec>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<RationalVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
    return rank(Matrix::from_rows(diffs));
}

}  // namespace

Polytope Polytope::from_halfspaces(std::size_t dim, std::vector<HalfSpace> halfspaces) {
    if (dim == 0) throw DomainError(ErrorKind::invalid_argument, "dimension must be at least 1");
    if (halfspaces.empty()) throw DomainError(ErrorKind::invalid_argument, "no half-spaces given");

    Polytope p;
    p.dim_ = dim;
    std::set<std::pair<RationalVec, Rational>> seen;
    for (auto& h : halfspaces) {
        if (h.normal.size() != dim) {
            throw DomainError(ErrorKind::invalid_argument,
                              "half-space normal has length " + std::to_string(h.normal.size()) +
                                  ", expected " + std::to_string(dim));
        }
        if (h.normal.is_zero()) throw DomainError(ErrorKind::invalid_argument, "zero normal");
        if (seen.insert(normalized(h)).second) p.halfspaces_.push_back(std::move(h));
    }

    std::vector<RationalVec> normals;
    for (const auto& h : p.halfspaces_) normals.push_back(h.normal);
    const auto lineality = nullspace(Matrix::from_rows(normals));
    if (!lineality.empty()) {
        // Pin the lineality space to get a pointed slice with the same feasibility.
        std::vector<HalfSpace> eqs;
        for (const auto& d : lineality) eqs.push_back({d, 0});
        if (basic_feasible_points(dim, p.halfspaces_, eqs, true).empty())
            throw DomainError(ErrorKind::empty, "no point satisfies all half-spaces");
        throw DomainError(ErrorKind::degenerate, "feasible region contains a line");
    }

    p.vertices_ = basic_feasible_points(dim, p.halfspaces_, {}, false);
    if (p.vertices_.empty()) throw DomainError(ErrorKind::empty, "no point satisfies all half-spaces");
    if (has_nonzero_recession_direction(dim, p.halfspaces_))
        throw DomainError(ErrorKind::unbounded, "feasible region is unbounded");
    if (affine_rank(p.vertices_) < dim)
        throw DomainError(ErrorKind::degenerate, "polytope is not full-dimensional");

    for (std::size_t h = 0; h < p.halfspaces_.size(); ++h) {
        std::vector<RationalVec> on;
        for (const auto& v : p.vertices_)
            if (p.halfspaces_[h].on_boundary(v)) on.push_back(v);
        if (!on.empty() && affine_rank(on) == dim - 1) p.facets_.push_back(h);
    }

    p.vertex_facets_.resize(p.vertices_.size());
    for (std::size_t v = 0; v < p.vertices_.size(); ++v)
        for (auto f : p.facets_)
            if (p.halfspaces_[f].on_boundary(p.vertices_[v])) p.vertex_facets_[v].push_back(f);

    p.neighbors_.resize(p.vertices_.size());
    for (std::size_t i = 0; i < p.vertices_.size(); ++i) {
        for (std::size_t j = i + 1; j < p.vertices_.size(); ++j) {
            std::vector<std::size_t> shared;
            std::set_intersection(p.vertex_facets_[i].begin(), p.vertex_facets_[i].end(),
                                  p.vertex_facets_[j].begin(), p.vertex_facets_[j].end(),
                                  std::back_inserter(shared));
            if (shared.size() + 1 < dim) continue;
            std::vector<RationalVec> rows;
            for (auto f : shared) rows.push_back(p.halfspaces_[f].normal);
            const std::size_t r = rows.empty() ? 0 : rank(Matrix::from_rows(rows));
            if (r == dim - 1) {
                p.edges_.emplace_back(i, j);
                p.neighbors_[i].push_back(j);
                p.neighbors_[j].push_back(i);
            }
        }
    }
    for (auto& nb : p.neighbors_) std::sort(nb.begin(), nb.end());
    return p;
}

std::vector<std::size_t> Polytope::vertices_on(std::size_t halfspace_index) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (halfspaces_.at(halfspace_index).on_boundary(vertices_[v])) out.push_back(v);
    return out;
}

Polytope simplex(std::size_t n, const Rational& scale) {
    if (scale <= 0) throw DomainError(ErrorKind::invalid_argument, "scale must be positive");
    std::vector<HalfSpace> hs;
    for (std::size_t i = 0; i < n; ++i) {
        RationalVec e(n);
        e[i] = 1;
        hs.push_back({e, 0});
    }
    RationalVec all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = -1;
    hs.push_back({all, -scale});
    return Polytope::from_halfspaces(n, std::move(hs));
}

Polytope cube(std::size_t n, const Rational& scale) {
    if (scale <= 0) throw DomainError(ErrorKind::invalid_argument, "scale must be positive");
    std::vector<HalfSpace> hs;
    for (std::size_t i = 0; i < n; ++i) {
        RationalVec e(n);
        e[i] = 1;
        hs.push_back({e, 0});
        hs.push_back({-e, -scale});
    }
    return Polytope::from_halfspaces(n, std::move(hs));
}

Polytope hirzebruch(unsigned a) {
    if (a < 1) throw DomainError(ErrorKind::invalid_argument, "Hirzebruch parameter must be >= 1");
    const long al = static_cast<long>(a);
    std::vector<HalfSpace> hs{
        {RationalVec::from_ints({1, 0}), 0},
        {RationalVec::from_ints({0, 1}), 0},
        {RationalVec::from_ints({0, -1}), -1},
        {RationalVec::from_ints({-1, -al}), Rational(-(al + 1))},
    };
    return Polytope::from_halfspaces(2, std::move(hs));
}

Polytope dilate(const Polytope& p, const Rational& k) {
    if (k <= 0) throw DomainError(ErrorKind::invalid_argument, "dilation factor must be positive");
    std::vector<HalfSpace> hs = p.halfspaces();
    for (auto& h : hs) h.offset *= k;
    return Polytope::from_halfspaces(p.dim(), std::move(hs));
}

VertexFigure vertex_figure(const Polytope& p, std::size_t v) {
    VertexFigure vf;
    vf.vertex = p.vertices().at(v);
    vf.neighbors = p.neighbors(v);
    for (auto w : vf.neighbors) {
        vf.edge_dirs.push_back(p.vertices()[w] - vf.vertex);
        vf.primitive_edge_dirs.push_back(primitive(vf.edge_dirs.back()));
    }
    return vf;
}

bool is_simple(const Polytope& p) {
    for (std::size_t v = 0; v < p.vertices().size(); ++v)
        if (p.neighbors(v).size() != p.dim()) return false;
    return true;
}

SmoothnessReport smoothness(const Polytope& p) {
    SmoothnessReport rep;
    rep.simple = is_simple(p);
    if (!rep.simple) {
        rep.reason = "not simple";
        for (std::size_t v = 0; v < p.vertices().size(); ++v) {
            if (p.neighbors(v).size() != p.dim()) {
                rep.failing_vertex = v;
                break;
            }
        }
        return rep;
    }
    rep.smooth = true;
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
        const auto vf = vertex_figure(p, v);
        Rational det = abs(determinant(Matrix::from_columns(vf.primitive_edge_dirs)));
        rep.determinants.push_back(numerator(det));
        if (det != 1 && rep.smooth) {
            rep.smooth = false;
            rep.reason = "primitive edge vectors do not span the lattice";
            rep.failing_vertex = v;
            rep.failing_det = numerator(det);
        }
    }
    return rep;
}

bool contains(const Polytope& p, const RationalVec& x) {
    if (x.size() != p.dim()) throw DomainError(ErrorKind::invalid_argument, "dimension mismatch");
    return std::all_of(p.halfspaces().begin(), p.halfspaces().end(),
                       [&](const HalfSpace& h) { return h.contains(x); });
}

Rational volume_oracle(const Polytope& p) {
    const std::size_t n = p.dim();
    if (n == 1) {
        const auto& vs = p.vertices();
        return abs(vs.back()[0] - vs.front()[0]);
    }
    const RationalVec& base = p.vertices().front();
    Rational total = 0;
    for (auto f : p.facets()) {
        const HalfSpace& face = p.halfspaces()[f];
        const Rational height = face.slack(base);
        if (height == 0) continue;
        std::size_t k = 0;
        while (face.normal[k] == 0) ++k;
        const Rational& ak = face.normal[k];

        // Facet in coordinates with x_k eliminated via <face.normal, x> = face.offset.
        std::vector<HalfSpace> sub;
        for (auto g : p.facets()) {
            if (g == f) continue;
            const HalfSpace& h = p.halfspaces()[g];
            RationalVec normal(n - 1);
            for (std::size_t i = 0, j = 0; i < n; ++i) {
                if (i == k) continue;
                normal[j++] = h.normal[i] - h.normal[k] * face.normal[i] / ak;
            }
            Rational offset = h.offset - h.normal[k] * face.offset / ak;
            if (normal.is_zero()) {
                if (offset > 0) throw DomainError(ErrorKind::degenerate, "inconsistent facet");
                continue;
            }
            sub.push_back({std::move(normal), std::move(offset)});
        }
        const Polytope projected = Polytope::from_halfspaces(n - 1, std::move(sub));
        total += height * volume_oracle(projected) / abs(ak);
    }
    return total / n;
}

IntegerBox bounding_box(const Polytope& p) {
    IntegerBox box;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        Rational lo = p.vertices().front()[i], hi = lo;
        for (const auto& v : p.vertices()) {
            lo = std::min(lo, v[i]);
            hi = std::max(hi, v[i]);
        }
        box.emplace_back(ceil(lo), floor(hi));
    }
    return box;
}

bool box_contains(const IntegerBox& box, const Polytope& p) {
    // Only the lattice points of p need to be covered.
    if (box.size() != p.dim()) return false;
    const IntegerBox tight = bounding_box(p);
    for (std::size_t i = 0; i < box.size(); ++i)
        if (box[i].first > tight[i].first || box[i].second < tight[i].second) return false;
    return true;
}

LatticePoints lattice_points_oracle(const Polytope& p) {
    LatticePoints out;
    for_each_lattice_point(bounding_box(p), [&](const RationalVec& x) {
        if (contains(p, x)) out.points.push_back(x);
    });
    out.count = out.points.size();
    return out;
}

}  // namespace momentkit
