#include "momentkit/polar.hpp"

#include <random>
#include <stdexcept>

#include "momentkit/error.hpp"
#include "momentkit/parallel.hpp"

namespace momentkit {

std::size_t PolarizedCone::open_count() const {
    std::size_t k = 0;
    for (bool f : open_flags) k += f ? 1 : 0;
    return k;
}

bool is_polarizing(const Polytope& p, const RationalVec& xi) {
    if (xi.size() != p.dim()) return false;
    for (const auto& [i, j] : p.edges())
        if (dot(p.vertices()[j] - p.vertices()[i], xi) == 0) return false;
    return true;
}

PolarizingVector choose_polarizing_vector(const Polytope& p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 7);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        RationalVec xi(p.dim());
        for (std::size_t i = 0; i < p.dim(); ++i) {
            long a = num(rng), b = den(rng);
            xi[i] = Rational(a, b);
        }
        if (is_polarizing(p, xi)) return {xi};
    }
    throw std::logic_error("no polarizing vector found in 1000 attempts");
}

PolarizingVector make_polarizing_vector(const Polytope& p, const RationalVec& xi) {
    if (xi.size() != p.dim())
        throw DomainError(ErrorKind::invalid_argument, "xi has the wrong dimension");
    if (!is_polarizing(p, xi))
        throw DomainError(ErrorKind::not_polarizing, to_string(xi) + " is orthogonal to an edge");
    return {xi};
}

TangentCone tangent_cone(const Polytope& p, std::size_t v) {
    auto vf = vertex_figure(p, v);
    return {std::move(vf.vertex), std::move(vf.edge_dirs)};
}

PolarizedCone polarize(const VertexFigure& vf, const RationalVec& xi) {
    PolarizedCone c;
    c.apex = vf.vertex;
    std::size_t flipped = 0;
    for (const auto& alpha : vf.edge_dirs) {
        const Rational pairing = dot(alpha, xi);
        if (pairing == 0) {
            throw DomainError(ErrorKind::not_polarizing,
                              "edge " + to_string(alpha) + " is orthogonal to " + to_string(xi));
        }
        if (pairing > 0) {
            c.generators.push_back(-alpha);
            c.open_flags.push_back(true);
            ++flipped;
        } else {
            c.generators.push_back(alpha);
            c.open_flags.push_back(false);
        }
    }
    c.sign = flipped % 2 == 0 ? 1 : -1;
    if (c.generators.size() == c.apex.size())
        c.inverse = inverse(Matrix::from_columns(c.generators));
    return c;
}

std::vector<PolarizedCone> decompose(const Polytope& p, const PolarizingVector& xi) {
    std::vector<PolarizedCone> cones;
    cones.reserve(p.vertices().size());
    for (std::size_t v = 0; v < p.vertices().size(); ++v)
        cones.push_back(polarize(vertex_figure(p, v), xi.xi));
    return cones;
}

RationalVec cone_coordinates(const PolarizedCone& c, const RationalVec& x) {
    if (!c.inverse) {
        throw DomainError(ErrorKind::non_simple_vertex,
                          "cone at " + to_string(c.apex) + " has " +
                              std::to_string(c.generators.size()) + " dependent generators");
    }
    if (x.size() != c.apex.size()) throw DomainError(ErrorKind::invalid_argument, "dimension mismatch");
    return *c.inverse * (x - c.apex);
}

bool cone_contains(const PolarizedCone& c, const RationalVec& x) {
    const RationalVec coords = cone_coordinates(c, x);
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (c.open_flags[j] ? coords[j] <= 0 : coords[j] < 0) return false;
    }
    return true;
}

long signed_indicator_sum(const std::vector<PolarizedCone>& cones, const RationalVec& x) {
    long sum = 0;
    for (const auto& c : cones)
        if (cone_contains(c, x)) sum += c.sign;
    return sum;
}

long signed_indicator_sum(const Polytope& p, const PolarizingVector& xi, const RationalVec& x) {
    if (!is_simple(p)) throw DomainError(ErrorKind::non_simple_vertex, "polytope is not simple");
    return signed_indicator_sum(decompose(p, xi), x);
}

Integer count_cone_lattice_points(const PolarizedCone& c, const IntegerBox& box) {
    if (!c.inverse) {
        throw DomainError(ErrorKind::non_simple_vertex,
                          "cone at " + to_string(c.apex) + " has dependent generators");
    }
    const std::size_t n = box.size();
    for (const auto& [lo, hi] : box)
        if (lo > hi) return 0;
    const Matrix& inv = *c.inverse;
    const RationalVec shift = inv * c.apex;

    // Scale the affine map x -> inv (x - apex) to integers: s(x) = A x - b.
    Integer scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        scale = lcm(scale, Integer(denominator(shift[r])));
        for (std::size_t col = 0; col < n; ++col)
            scale = lcm(scale, Integer(denominator(inv(r, col))));
    }
    std::vector<std::vector<Integer>> column(n, std::vector<Integer>(n));
    std::vector<Integer> s(n);
    for (std::size_t r = 0; r < n; ++r) {
        Rational acc = -shift[r];
        for (std::size_t col = 0; col < n; ++col) {
            Rational a = inv(r, col) * Rational(scale);
            column[col][r] = numerator(a);
            acc += inv(r, col) * Rational(box[col].first);
        }
        s[r] = numerator(acc * Rational(scale));
    }

    std::vector<Integer> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = box[i].first;
    Integer count = 0;
    while (true) {
        bool inside = true;
        for (std::size_t j = 0; j < n && inside; ++j)
            inside = c.open_flags[j] ? s[j] > 0 : s[j] >= 0;
        if (inside) ++count;

        std::size_t i = n;
        bool advanced = false;
        while (i > 0) {
            --i;
            if (x[i] < box[i].second) {
                ++x[i];
                for (std::size_t r = 0; r < n; ++r) s[r] += column[i][r];
                advanced = true;
                break;
            }
            const Integer span = box[i].second - box[i].first;
            x[i] = box[i].first;
            for (std::size_t r = 0; r < n; ++r) s[r] -= span * column[i][r];
        }
        if (!advanced) break;
    }
    return count;
}

Integer signed_lattice_count(const Polytope& p, const PolarizingVector& xi, const IntegerBox& box) {
    if (!box_contains(box, p))
        throw DomainError(ErrorKind::box_too_small, "box misses lattice points of the polytope");
    if (!is_simple(p)) throw DomainError(ErrorKind::non_simple_vertex, "polytope is not simple");
    const auto cones = decompose(p, xi);
    std::vector<Integer> counts(cones.size());
    parallel_for(cones.size(), [&](std::size_t v) { counts[v] = count_cone_lattice_points(cones[v], box); });
    Integer total = 0;
    for (std::size_t v = 0; v < cones.size(); ++v) total += cones[v].sign * counts[v];
    return total;
}

}  // namespace momentkit
