// Acceptance suite: one PASS/FAIL line per criterion, exact equalities only.
// Exit status is nonzero if any criterion fails or misses its time budget.
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <string>

#include "momentkit/error.hpp"
#include "momentkit/gkm.hpp"
#include "momentkit/io.hpp"
#include "momentkit/localization.hpp"
#include "momentkit/parallel.hpp"
#include "momentkit/polar.hpp"
#include "oracles.hpp"
#include "sampling.hpp"

using namespace momentkit;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

/// Collects the first few failure descriptions from worker threads.
class Failures {
public:
    void add(const std::string& what) {
        std::lock_guard lock(mutex_);
        ++count_;
        if (first_.empty()) first_ = what;
    }
    Outcome outcome(const std::string& summary) const {
        if (count_ == 0) return {true, summary};
        return {false, std::to_string(count_) + " failures, first: " + first_};
    }

private:
    mutable std::mutex mutex_;
    std::size_t count_ = 0;
    std::string first_;
};

std::vector<std::pair<std::string, Polytope>> catalog() {
    std::vector<std::pair<std::string, Polytope>> out;
    for (const auto& spec : catalog_specs()) out.emplace_back(spec, build_from_spec(spec));
    return out;
}

Rational power(long k, std::size_t n) {
    Rational r = 1;
    for (std::size_t i = 0; i < n; ++i) r *= k;
    return r;
}

Outcome pointwise_identity() {
    const auto cat = catalog();
    Failures f;
    std::atomic<std::size_t> checks{0};
    parallel_for(cat.size(), [&](std::size_t i) {
        const auto& [name, p] = cat[i];
        const auto pts = sampling::mixed_points(p, 1000, 1000 + i);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto xi = choose_polarizing_vector(p, seed);
            const auto cones = decompose(p, xi);
            for (const auto& x : pts) {
                const long expected = contains(p, x) ? 1 : 0;
                if (signed_indicator_sum(cones, x) != expected)
                    f.add(name + " at " + to_string(x) + " xi " + to_string(xi.xi));
            }
            checks += pts.size();
        }
    });
    return f.outcome(std::to_string(checks.load()) + " point evaluations on " + std::to_string(cat.size()) +
                     " polytopes");
}

Outcome signed_counting() {
    const auto cat = catalog();
    std::vector<std::pair<std::string, Polytope>> jobs;
    for (const auto& [name, p] : cat)
        for (long k = 1; k <= 10; ++k) jobs.emplace_back(name + " x" + std::to_string(k), dilate(p, k));
    Failures f;
    parallel_for(jobs.size(), [&](std::size_t i) {
        const auto& [name, p] = jobs[i];
        const Integer got = signed_lattice_count(p, choose_polarizing_vector(p, i), bounding_box(p));
        const Integer want = lattice_points_oracle(p).count;
        if (got != want) f.add(name + ": " + got.str() + " != " + want.str());
    });
    const Polytope tri = simplex(2, 1);
    for (long k = 1; k <= 10; ++k) {
        const Polytope kp = dilate(tri, k);
        const Integer got = signed_lattice_count(kp, choose_polarizing_vector(kp, 0), bounding_box(kp));
        if (got != (k + 1) * (k + 2) / 2) f.add("k*simplex(2,1), k = " + std::to_string(k));
    }
    return f.outcome(std::to_string(jobs.size()) + " dilates");
}

Outcome volume() {
    const auto cat = catalog();
    Failures f;
    std::mt19937_64 rng(3);
    for (const auto& [name, p] : cat) {
        const auto g = moment_graph(p);
        const Rational ref = volume_oracle(p);
        int done = 0;
        while (done < 5) {
            const RationalVec xi = oracle::random_nonzero_vec(rng, p.dim());
            if (!is_generic(g, xi)) continue;
            ++done;
            if (volume_localization(p, xi) != ref) f.add(name + " at " + to_string(xi));
        }
        const RationalVec xi = choose_generic_direction(g, 0);
        for (long k = 2; k <= 4; ++k)
            if (volume_localization(dilate(p, k), xi) != power(k, p.dim()) * ref) f.add(name + " dilation");
    }
    Rational fact = 1;
    for (std::size_t n = 1; n <= 3; ++n) {
        fact *= static_cast<long>(n);
        const Polytope s = simplex(n, 1);
        if (volume_localization(s, choose_generic_direction(moment_graph(s), 0)) != 1 / fact)
            f.add("simplex(" + std::to_string(n) + ",1)");
    }
    return f.outcome(std::to_string(cat.size()) + " polytopes x 5 directions");
}

Outcome abbv() {
    const auto cat = catalog();
    Failures f;
    for (const auto& [name, p] : cat) {
        const auto g = moment_graph(p);
        const auto d = fixed_point_data(g);
        std::vector<RationalVec> samples;
        for (std::uint64_t s = 0; s < 4; ++s) samples.push_back(choose_evaluation_point(d, s));
        if (abbv_pushforward(g, d, GKMClass::constant(g, 1), samples[0]) != 0) f.add(name + ": pi(1) != 0");
        for (unsigned k = 0; k < p.dim(); ++k)
            if (!pushforward_degree_vanishing(g, d, k, samples)) f.add(name + ": degree " + std::to_string(k));
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            if (abbv_pushforward(g, d, delta_class(g, d, v), samples[1]) != 1)
                f.add(name + ": delta at vertex " + std::to_string(v));
    }
    return f.outcome(std::to_string(cat.size()) + " moment graphs");
}

Outcome gkm_morse() {
    const auto cat = catalog();
    Failures f;
    parallel_for(cat.size(), [&](std::size_t i) {
        const auto& [name, p] = cat[i];
        const auto g = moment_graph(p);
        const auto ref = betti_numbers(g, choose_generic_direction(g, 0));
        for (std::uint64_t s = 1; s < 5; ++s)
            if (!(betti_numbers(g, choose_generic_direction(g, s)) == ref)) f.add(name + ": xi dependence");
        if (!ref.palindromic()) f.add(name + ": not palindromic");
        if (ref.total() != g.vertex_count()) f.add(name + ": total");
        if (!free_module_check(g, 3).ok) f.add(name + ": free module check");
    });
    auto spot = [&](const Polytope& p, std::vector<std::size_t> want, const std::string& label) {
        const auto g = moment_graph(p);
        if (betti_numbers(g, choose_generic_direction(g, 0)).b != want) f.add(label);
    };
    spot(simplex(2, 1), {1, 1, 1}, "CP2");
    spot(hirzebruch(1), {1, 2, 1}, "hirzebruch(1)");
    spot(cube(3, 1), {1, 3, 3, 1}, "cube(3,1)");
    return f.outcome(std::to_string(cat.size()) + " graphs, k <= 3");
}

Outcome generators() {
    const auto cat = catalog();
    Failures f;
    for (const auto& [name, p] : cat) {
        const auto g = moment_graph(p);
        for (std::size_t k = 0; k < p.facets().size(); ++k)
            if (!gkm_check(g, facet_class(p, g, k)).ok) f.add(name + ": facet " + std::to_string(k));
        if (gkm_dimension(g, 1) != p.facets().size()) f.add(name + ": dim H^2");
    }
    return f.outcome(std::to_string(cat.size()) + " polytopes");
}

Outcome delzant_validation() {
    Failures f;
    for (const auto& [name, p] : catalog())
        if (!is_smooth(p)) f.add(name + " not smooth");
    const Polytope tall = Polytope::from_halfspaces(
        2, {{RationalVec::from_ints({1, 0}), 0}, {RationalVec::from_ints({0, 1}), 0}, {RationalVec::from_ints({-2, -1}), -2}});
    const auto rep = smoothness(tall);
    if (rep.smooth || !rep.failing_vertex || rep.failing_det != 2 ||
        tall.vertices()[*rep.failing_vertex] != RationalVec::from_ints({1, 0}))
        f.add("triangle conv{(0,0),(1,0),(0,2)}");
    const Polytope pyr = Polytope::from_halfspaces(
        3, {{RationalVec::from_ints({0, 0, 1}), 0}, {RationalVec::from_ints({1, 0, -1}), 0},
            {RationalVec::from_ints({0, 1, -1}), 0}, {RationalVec::from_ints({-1, 0, -1}), -2},
            {RationalVec::from_ints({0, -1, -1}), -2}});
    if (is_simple(pyr) || smoothness(pyr).simple) f.add("square pyramid");
    return f.outcome("catalog smooth, triangle det 2 at (1, 0), pyramid not simple");
}

Outcome sign_robustness() {
    const auto cat = catalog();
    Failures f;
    parallel_for(cat.size(), [&](std::size_t i) {
        const auto& [name, p] = cat[i];
        const auto g = moment_graph(p);
        std::mt19937_64 rng(77 + i);
        std::vector<GKMClass> classes;
        for (std::size_t k = 0; k < p.facets().size(); ++k) classes.push_back(facet_class(p, g, k));
        GKMClass bad = classes[0];
        bad.components[0] += MultiPoly::constant(g.dim(), 1);
        classes.push_back(bad);
        classes.push_back(classes[0] * classes.back());
        std::vector<GKMCheck> ref;
        for (const auto& c : classes) ref.push_back(gkm_check(g, c));
        const std::size_t d1 = gkm_dimension(g, 1), d2 = gkm_dimension(g, 2);
        const RationalVec xi = choose_generic_direction(g, 0);
        const auto b = betti_numbers(g, xi);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<bool> flip(g.edges().size());
            for (std::size_t e = 0; e < flip.size(); ++e) flip[e] = rng() & 1u;
            const auto h = g.with_flipped_weights(flip);
            for (std::size_t c = 0; c < classes.size(); ++c) {
                const auto r = gkm_check(h, classes[c]);
                if (r.ok != ref[c].ok || r.failing_edges != ref[c].failing_edges) f.add(name + ": gkm_check");
            }
            if (gkm_dimension(h, 1) != d1 || gkm_dimension(h, 2) != d2) f.add(name + ": gkm_dimension");
            if (!(betti_numbers(h, xi) == b)) f.add(name + ": betti");
        }
    });
    return f.outcome(std::to_string(cat.size()) + " graphs x 20 flip patterns");
}

struct Criterion {
    const char* id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"C1", "pointwise signed cone identity", 30, pointwise_identity},
        {"C2", "signed lattice counting", 60, signed_counting},
        {"C3", "volume by localization", 10, volume},
        {"C4", "push-forward vanishing and normalization", 10, abbv},
        {"C5", "GKM / Morse consistency", 60, gkm_morse},
        {"C6", "GKM generators from facets", 10, generators},
        {"C7", "Delzant validation", 1, delzant_validation},
        {"C8", "weight sign robustness", 30, sign_robustness},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        const bool in_time = secs < c.budget_s;
        const bool pass = o.ok && in_time;
        line << (pass ? "PASS " : "FAIL ") << c.id << " " << c.name << " (" << secs << " s, budget " << c.budget_s
             << " s): " << o.detail;
        if (o.ok && !in_time) line << " [over time budget]";
        std::puts(line.str().c_str());
        std::fflush(stdout);
        failed += pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
