#include "momentkit/gkm.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "momentkit/error.hpp"
#include "momentkit/linalg.hpp"

namespace momentkit {

MomentGraph MomentGraph::make(std::size_t dim, std::vector<RationalVec> positions,
                              std::vector<Edge> edges, std::vector<LinearForm> weights,
                              std::vector<std::string> labels) {
    MomentGraph g;
    g.dim_ = dim;
    if (edges.size() != weights.size())
        throw DomainError(ErrorKind::invalid_argument, "one weight per edge is required");
    for (const auto& x : positions)
        if (x.size() != dim) throw DomainError(ErrorKind::invalid_argument, "position of wrong length");
    if (labels.empty()) {
        for (std::size_t v = 0; v < positions.size(); ++v) labels.push_back(std::to_string(v));
    } else if (labels.size() != positions.size()) {
        throw DomainError(ErrorKind::invalid_argument, "one label per vertex is required");
    }
    g.incident_.resize(positions.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [p, q] = edges[e];
        if (p >= positions.size() || q >= positions.size() || p == q)
            throw DomainError(ErrorKind::invalid_argument, "bad edge " + std::to_string(e));
        if (weights[e].nvars() != dim || weights[e].is_zero())
            throw DomainError(ErrorKind::invalid_argument, "bad weight on edge " + std::to_string(e));
        g.incident_[p].push_back(e);
        g.incident_[q].push_back(e);
    }
    for (std::size_t v = 0; v < positions.size(); ++v) {
        const auto& inc = g.incident_[v];
        for (std::size_t a = 0; a < inc.size(); ++a) {
            for (std::size_t b = a + 1; b < inc.size(); ++b) {
                if (parallel(weights[inc[a]].coefficients(), weights[inc[b]].coefficients())) {
                    throw DomainError(ErrorKind::invalid_argument,
                                      "weights at vertex " + labels[v] +
                                          " are not pairwise linearly independent");
                }
            }
        }
    }
    g.labels_ = std::move(labels);
    g.positions_ = std::move(positions);
    g.edges_ = std::move(edges);
    g.weights_ = std::move(weights);
    return g;
}

std::size_t MomentGraph::other_end(std::size_t edge, std::size_t v) const {
    const auto& [p, q] = edges_.at(edge);
    return p == v ? q : p;
}

MomentGraph MomentGraph::with_flipped_weights(const std::vector<bool>& flip) const {
    MomentGraph g = *this;
    for (std::size_t e = 0; e < g.weights_.size() && e < flip.size(); ++e)
        if (flip[e]) g.weights_[e] = LinearForm(-g.weights_[e].coefficients());
    return g;
}

MomentGraph moment_graph(const Polytope& p) {
    const auto rep = smoothness(p);
    if (!rep.smooth) throw DomainError(ErrorKind::not_delzant, rep.reason);
    std::vector<LinearForm> weights;
    for (const auto& [v, w] : p.edges())
        weights.emplace_back(primitive(p.vertices()[w] - p.vertices()[v]));
    return MomentGraph::make(p.dim(), p.vertices(), p.edges(), std::move(weights));
}

std::optional<int> GKMClass::homogeneous_degree() const {
    int deg = -1;
    for (const auto& f : components) {
        if (f.is_zero()) continue;
        if (!f.is_homogeneous()) return std::nullopt;
        if (deg == -1) {
            deg = f.degree();
        } else if (deg != f.degree()) {
            return std::nullopt;
        }
    }
    return deg;
}

GKMClass GKMClass::constant(const MomentGraph& g, const Rational& c) {
    return {std::vector<MultiPoly>(g.vertex_count(), MultiPoly::constant(g.dim(), c))};
}

GKMClass operator*(const GKMClass& a, const GKMClass& b) {
    GKMClass out;
    for (std::size_t i = 0; i < a.components.size(); ++i)
        out.components.push_back(a.components[i] * b.components.at(i));
    return out;
}

GKMClass operator*(const MultiPoly& f, const GKMClass& a) {
    GKMClass out;
    for (const auto& c : a.components) out.components.push_back(f * c);
    return out;
}

GKMCheck gkm_check(const MomentGraph& g, const GKMClass& c) {
    if (c.components.size() != g.vertex_count()) {
        throw DomainError(ErrorKind::invalid_argument,
                          "class has " + std::to_string(c.components.size()) +
                              " components, graph has " + std::to_string(g.vertex_count()) +
                              " vertices");
    }
    GKMCheck out;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto& [p, q] = g.edges()[e];
        if (!divides_linear(g.weights()[e], c.components[p] - c.components[q])) {
            out.ok = false;
            out.failing_edges.push_back(e);
        }
    }
    return out;
}

namespace {

/// Unknowns: coefficient of monomial m in f_p at column p * |monomials| + m.
/// Per edge, one row per monomial of the restriction to {alpha_e = 0}.
Matrix gkm_constraints(const MomentGraph& g, const std::vector<Exponent>& monomials) {
    const std::size_t per_vertex = monomials.size();
    Matrix m(0, g.vertex_count() * per_vertex);
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto& [p, q] = g.edges()[e];
        std::vector<MultiPoly> restricted;
        std::map<Exponent, std::size_t> rows;
        for (const auto& mono : monomials) {
            restricted.push_back(restrict_to_hyperplane(g.weights()[e], MultiPoly::monomial(mono, 1)));
            for (const auto& [ex, coeff] : restricted.back().terms()) rows.try_emplace(ex, rows.size());
        }
        std::vector<RationalVec> block(rows.size(), RationalVec(m.cols()));
        for (std::size_t i = 0; i < per_vertex; ++i) {
            for (const auto& [ex, coeff] : restricted[i].terms()) {
                auto& row = block[rows.at(ex)];
                row[p * per_vertex + i] += coeff;
                row[q * per_vertex + i] -= coeff;
            }
        }
        for (const auto& row : block) m.append_row(row);
    }
    return m;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::vector<GKMClass> gkm_basis(const MomentGraph& g, unsigned k) {
    const auto monomials = monomials_of_degree(g.dim(), k);
    const Matrix m = gkm_constraints(g, monomials);
    std::vector<GKMClass> basis;
    std::vector<RationalVec> kernel;
    if (m.rows() == 0) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            RationalVec v(m.cols());
            v[c] = 1;
            kernel.push_back(std::move(v));
        }
    } else {
        kernel = nullspace(m);
    }
    for (const auto& v : kernel) {
        GKMClass c;
        for (std::size_t p = 0; p < g.vertex_count(); ++p) {
            MultiPoly f(g.dim());
            for (std::size_t i = 0; i < monomials.size(); ++i)
                f.add_term(monomials[i], v[p * monomials.size() + i]);
            c.components.push_back(std::move(f));
        }
        basis.push_back(std::move(c));
    }
    return basis;
}

std::size_t gkm_dimension(const MomentGraph& g, unsigned k) {
    const Matrix m = gkm_constraints(g, monomials_of_degree(g.dim(), k));
    return m.cols() - (m.rows() == 0 ? 0 : rank(m));
}

std::size_t BettiProfile::total() const {
    std::size_t s = 0;
    for (auto x : b) s += x;
    return s;
}

bool BettiProfile::palindromic() const {
    for (std::size_t k = 0; k < b.size(); ++k)
        if (b[k] != b[b.size() - 1 - k]) return false;
    return true;
}

bool is_generic(const MomentGraph& g, const RationalVec& xi) {
    if (xi.size() != g.dim()) return false;
    for (const auto& [p, q] : g.edges())
        if (dot(g.positions()[q] - g.positions()[p], xi) == 0) return false;
    return true;
}

RationalVec choose_generic_direction(const MomentGraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 7);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        RationalVec xi(g.dim());
        for (std::size_t i = 0; i < g.dim(); ++i) {
            long a = num(rng), b = den(rng);
            xi[i] = Rational(a, b);
        }
        if (is_generic(g, xi)) return xi;
    }
    throw std::logic_error("no generic direction found in 1000 attempts");
}

BettiProfile betti_numbers(const MomentGraph& g, const RationalVec& xi) {
    if (!is_generic(g, xi))
        throw DomainError(ErrorKind::not_generic, to_string(xi) + " is orthogonal to an edge");
    std::size_t top = g.dim();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) top = std::max(top, g.incident(v).size());
    BettiProfile out;
    out.b.assign(top + 1, 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::size_t down = 0;
        for (auto e : g.incident(v)) {
            const auto w = g.other_end(e, v);
            if (dot(g.positions()[w] - g.positions()[v], xi) < 0) ++down;
        }
        ++out.b[down];
    }
    return out;
}

FreeModuleCheck free_module_check(const MomentGraph& g, unsigned k_max, std::uint64_t seed) {
    FreeModuleCheck out;
    out.betti = betti_numbers(g, choose_generic_direction(g, seed));
    const std::size_t n = g.dim();
    for (unsigned k = 0; k <= k_max; ++k) {
        std::size_t expected = 0;
        for (std::size_t j = 0; j <= k && j < out.betti.b.size(); ++j)
            expected += out.betti.b[j] * binomial(k - j + n - 1, n - 1);
        out.dimensions.push_back(gkm_dimension(g, k));
        out.expected.push_back(expected);
        if (out.dimensions.back() != expected) out.ok = false;
    }
    return out;
}

GKMClass facet_class(const Polytope& p, const MomentGraph& g, std::size_t facet) {
    const std::size_t h = p.facets().at(facet);
    const auto on = p.vertices_on(h);
    GKMClass c;
    c.components.assign(g.vertex_count(), MultiPoly(g.dim()));
    for (auto v : on) {
        for (auto w : p.neighbors(v)) {
            if (std::binary_search(on.begin(), on.end(), w)) continue;
            c.components[v] = MultiPoly::linear(primitive(p.vertices()[w] - p.vertices()[v]));
        }
    }
    return c;
}

std::size_t restriction_kernel_note(const MomentGraph& g, unsigned k, std::uint64_t seed) {
    const auto check = free_module_check(g, k, seed);
    if (!check.ok)
        throw DomainError(ErrorKind::free_module_check_failed,
                          "degree " + std::to_string(k) + " dimensions disagree with Betti numbers");
    return k < check.betti.b.size() ? check.betti.b[k] : 0;
}

}  // namespace momentkit
