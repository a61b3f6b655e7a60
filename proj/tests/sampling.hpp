// Test-only point sampler covering every stratum of a polytope plus the
// lines and rays through its boundary.
#ifndef MOMENTKIT_TESTS_SAMPLING_HPP
#define MOMENTKIT_TESTS_SAMPLING_HPP

#include <random>
#include <vector>

#include "momentkit/polytope.hpp"
#include "oracles.hpp"

namespace sampling {

using momentkit::Polytope;
using momentkit::Rational;
using momentkit::RationalVec;

inline Rational random_unit(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(1, 96);
    return Rational(num(rng), 97);
}

/// Positive weights summing to 1.
inline std::vector<Rational> convex_weights(std::mt19937_64& rng, std::size_t k) {
    std::vector<Rational> w(k);
    Rational total = 0;
    for (auto& x : w) {
        x = random_unit(rng);
        total += x;
    }
    for (auto& x : w) x /= total;
    return w;
}

inline RationalVec combination(const Polytope& p, const std::vector<std::size_t>& idx,
                               const std::vector<Rational>& w) {
    RationalVec x(p.dim());
    for (std::size_t i = 0; i < idx.size(); ++i) x += w[i] * p.vertices()[idx[i]];
    return x;
}

/// `count` points cycling through: vertices, edge interiors, facet relative
/// interiors, interior points, points just outside a facet, points on the
/// lines through edges (beyond the endpoints), lattice points of a grown
/// box, and random points of a grown box.
inline std::vector<RationalVec> mixed_points(const Polytope& p, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<RationalVec> out;
    std::vector<std::size_t> all(p.vertices().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const auto box = momentkit::bounding_box(p);
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

    for (std::size_t i = 0; out.size() < count; ++i) {
        switch (i % 8) {
            case 0:
                out.push_back(p.vertices()[pick(p.vertices().size())]);
                break;
            case 1: {
                const auto [a, b] = p.edges()[pick(p.edges().size())];
                out.push_back(combination(p, {a, b}, convex_weights(rng, 2)));
                break;
            }
            case 2: {
                const auto on = p.vertices_on(p.facets()[pick(p.facets().size())]);
                out.push_back(combination(p, on, convex_weights(rng, on.size())));
                break;
            }
            case 3:
                out.push_back(combination(p, all, convex_weights(rng, all.size())));
                break;
            case 4: {
                const auto f = p.facets()[pick(p.facets().size())];
                const auto on = p.vertices_on(f);
                RationalVec x = combination(p, on, convex_weights(rng, on.size()));
                x -= Rational(1, 7 + static_cast<long>(pick(20))) * p.halfspaces()[f].normal;
                out.push_back(x);
                break;
            }
            case 5: {
                const auto [a, b] = p.edges()[pick(p.edges().size())];
                const RationalVec d = p.vertices()[b] - p.vertices()[a];
                Rational t = Rational(static_cast<long>(pick(60)) - 30, 10);
                out.push_back(p.vertices()[a] + t * d);
                break;
            }
            case 6: {
                RationalVec x(p.dim());
                for (std::size_t k = 0; k < p.dim(); ++k) {
                    const long lo = box[k].first.convert_to<long>() - 1;
                    const long hi = box[k].second.convert_to<long>() + 1;
                    x[k] = lo + static_cast<long>(pick(static_cast<std::size_t>(hi - lo + 1)));
                }
                out.push_back(x);
                break;
            }
            default: {
                RationalVec x(p.dim());
                for (std::size_t k = 0; k < p.dim(); ++k) {
                    const Rational lo = Rational(box[k].first) - 2;
                    const Rational span = Rational(box[k].second - box[k].first) + 4;
                    x[k] = lo + span * random_unit(rng);
                }
                out.push_back(x);
                break;
            }
        }
    }
    return out;
}

}  // namespace sampling

#endif
