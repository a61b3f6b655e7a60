#include "momentkit/localization.hpp"

#include <random>
#include <stdexcept>

#include "momentkit/error.hpp"
#include "momentkit/linalg.hpp"

namespace momentkit {

FixedPointData fixed_point_data(const MomentGraph& g) {
    FixedPointData data;
    data.dim = g.dim();
    data.positions = g.positions();
    data.weights.resize(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        for (auto e : g.incident(v)) {
            const RationalVec& alpha = g.weights()[e].coefficients();
            const Rational orient = dot(alpha, g.positions()[g.other_end(e, v)] - g.positions()[v]);
            if (orient == 0) {
                throw DomainError(ErrorKind::not_delzant,
                                  "edge " + std::to_string(e) + " weight is not along its edge");
            }
            data.weights[v].push_back(orient > 0 ? primitive(alpha) : primitive(-alpha));
        }
        if (data.weights[v].size() != g.dim() ||
            determinant(Matrix::from_columns(data.weights[v])) == 0) {
            throw DomainError(ErrorKind::not_delzant,
                              "vertex " + g.labels()[v] + " needs " + std::to_string(g.dim()) +
                                  " independent isotropy weights");
        }
    }
    return data;
}

MultiPoly euler_class_at(const FixedPointData& data, std::size_t v) {
    MultiPoly e = MultiPoly::constant(data.dim, 1);
    for (const auto& w : data.weights.at(v)) e = e * MultiPoly::linear(w);
    return e;
}

bool is_generic_point(const FixedPointData& data, const RationalVec& xi) {
    if (xi.size() != data.dim) return false;
    for (const auto& ws : data.weights)
        for (const auto& w : ws)
            if (dot(w, xi) == 0) return false;
    return true;
}

RationalVec choose_evaluation_point(const FixedPointData& data, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 7);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        RationalVec xi(data.dim);
        for (std::size_t i = 0; i < data.dim; ++i) {
            long a = num(rng), b = den(rng);
            xi[i] = Rational(a, b);
        }
        if (is_generic_point(data, xi)) return xi;
    }
    throw std::logic_error("no generic evaluation point found in 1000 attempts");
}

Rational abbv_pushforward(const MomentGraph& g, const FixedPointData& data, const GKMClass& c,
                          const RationalVec& xi) {
    const auto check = gkm_check(g, c);
    if (!check.ok) {
        throw DomainError(ErrorKind::not_gkm,
                          "class fails the divisibility condition on edge " +
                              std::to_string(check.failing_edges.front()));
    }
    Rational total = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        Rational euler = 1;
        for (const auto& w : data.weights[v]) euler *= dot(w, xi);
        if (euler == 0) {
            throw DomainError(ErrorKind::weight_vanishes,
                              "an isotropy weight at vertex " + g.labels()[v] + " vanishes at " +
                                  to_string(xi));
        }
        total += c.components[v].evaluate(xi) / euler;
    }
    return total;
}

GKMClass delta_class(const MomentGraph& g, const FixedPointData& data, std::size_t v) {
    GKMClass c;
    c.components.assign(g.vertex_count(), MultiPoly(g.dim()));
    c.components.at(v) = euler_class_at(data, v);
    return c;
}

bool pushforward_degree_vanishing(const MomentGraph& g, const FixedPointData& data, unsigned k,
                                  const std::vector<RationalVec>& xi_samples) {
    if (k >= data.dim)
        throw DomainError(ErrorKind::invalid_argument, "vanishing only holds below degree dim");
    if (xi_samples.size() < 3)
        throw DomainError(ErrorKind::invalid_argument, "at least three evaluation points required");
    for (const auto& c : gkm_basis(g, k))
        for (const auto& xi : xi_samples)
            if (abbv_pushforward(g, data, c, xi) != 0) return false;
    return true;
}

Rational volume_localization(const Polytope& p, const RationalVec& xi) {
    const auto rep = smoothness(p);
    if (!rep.smooth) throw DomainError(ErrorKind::not_delzant, rep.reason);
    const std::size_t n = p.dim();
    Rational factorial = 1;
    for (std::size_t i = 2; i <= n; ++i) factorial *= i;

    Rational total = 0;
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
        const auto vf = vertex_figure(p, v);
        Rational denom = factorial;
        for (const auto& alpha : vf.primitive_edge_dirs) {
            const Rational pairing = -dot(alpha, xi);
            if (pairing == 0)
                throw DomainError(ErrorKind::not_generic, to_string(xi) + " is orthogonal to an edge");
            denom *= pairing;
        }
        Rational height = dot(vf.vertex, xi), power = 1;
        for (std::size_t i = 0; i < n; ++i) power *= height;
        total += power / denom;
    }
    return total;
}

}  // namespace momentkit
