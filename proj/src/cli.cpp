#include "momentkit/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "momentkit/error.hpp"
#include "momentkit/gkm.hpp"
#include "momentkit/io.hpp"
#include "momentkit/localization.hpp"
#include "momentkit/polar.hpp"

namespace momentkit::cli {

namespace {

struct Options {
    std::string input;
    std::string xi;
    std::uint64_t seed = 0;
    int k = 1;
    std::string box = "auto";
    std::string class_file;
    bool json = false;
};

/// Mismatch between a computed value and its brute-force twin.
struct OracleMismatch {};

struct Input {
    std::optional<Polytope> polytope;
    std::optional<MomentGraph> graph;
};

Input load_input(const std::string& source) {
    Input in;
    if (is_builder_spec(source)) {
        in.polytope = build_from_spec(source);
        return in;
    }
    const Json j = read_json_file(source);
    if (j.contains("edges")) {
        in.graph = graph_from_json(j);
    } else {
        in.polytope = polytope_from_json(j);
    }
    return in;
}

const Polytope& require_polytope(const Input& in) {
    if (!in.polytope)
        throw DomainError(ErrorKind::invalid_argument, "this command needs a polytope, not a graph");
    return *in.polytope;
}

MomentGraph require_graph(const Input& in) {
    if (in.graph) return *in.graph;
    return moment_graph(*in.polytope);
}

Json polytope_summary(const Polytope& p) {
    return {{"dim", p.dim()},
            {"vertices", p.vertices().size()},
            {"edges", p.edges().size()},
            {"facets", p.facets().size()}};
}

Json graph_summary(const MomentGraph& g) {
    return {{"dim", g.dim()}, {"vertices", g.vertex_count()}, {"edges", g.edges().size()}};
}

IntegerBox parse_box(const std::string& spec, const Polytope& p) {
    if (spec == "auto") return bounding_box(p);
    IntegerBox box;
    std::stringstream ss(spec);
    std::string range;
    while (std::getline(ss, range, ',')) {
        auto dots = range.find("..");
        if (dots == std::string::npos)
            throw DomainError(ErrorKind::invalid_argument, "box range '" + range + "' is not lo..hi");
        Rational lo = parse_rational(range.substr(0, dots));
        Rational hi = parse_rational(range.substr(dots + 2));
        if (!is_integer(lo) || !is_integer(hi))
            throw DomainError(ErrorKind::invalid_argument, "box bounds must be integers");
        box.emplace_back(numerator(lo), numerator(hi));
    }
    if (box.size() != p.dim())
        throw DomainError(ErrorKind::invalid_argument, "box has the wrong number of ranges");
    return box;
}

Json box_to_json(const IntegerBox& box) {
    Json out = Json::array();
    for (const auto& [lo, hi] : box) out.push_back(lo.str() + ".." + hi.str());
    return out;
}

PolarizingVector polarizing_from(const Options& o, const Polytope& p) {
    if (!o.xi.empty()) return make_polarizing_vector(p, parse_rational_vec(o.xi));
    return choose_polarizing_vector(p, o.seed);
}

void cmd_validate(const Options&, const Input& in, Json& report) {
    const Polytope& p = require_polytope(in);
    report["polytope"] = polytope_summary(p);
    const auto rep = smoothness(p);
    Json result = {{"simple", rep.simple}, {"rational", true}, {"smooth", rep.smooth}};
    if (!rep.smooth) {
        result["reason"] = rep.reason;
        if (rep.failing_vertex) result["vertex"] = to_json(p.vertices()[*rep.failing_vertex]);
        if (rep.simple) result["det"] = rep.failing_det.str();
    }
    if (rep.simple) {
        Json dets = Json::array();
        for (const auto& d : rep.determinants) dets.push_back(d.str());
        result["determinants"] = dets;
    }
    result["delzant"] = rep.smooth;
    report["result"] = result;
}

void cmd_decompose(const Options& o, const Input& in, Json& report) {
    const Polytope& p = require_polytope(in);
    report["polytope"] = polytope_summary(p);
    if (!is_simple(p)) throw DomainError(ErrorKind::non_simple_vertex, "polytope is not simple");
    const auto xi = polarizing_from(o, p);
    const auto cones = decompose(p, xi);
    Json jc = Json::array();
    for (const auto& c : cones) {
        Json gens = Json::array();
        for (const auto& g : c.generators) gens.push_back(to_json(g));
        jc.push_back({{"apex", to_json(c.apex)},
                      {"generators", gens},
                      {"open_flags", c.open_flags},
                      {"sign", c.sign}});
    }
    report["result"] = {{"xi", to_json(xi.xi)}, {"cones", jc}};

    // Identity check at every lattice point of the box grown by one.
    IntegerBox box = bounding_box(p);
    for (auto& [lo, hi] : box) {
        lo -= 1;
        hi += 1;
    }
    std::size_t checked = 0, disagree = 0;
    for_each_lattice_point(box, [&](const RationalVec& x) {
        ++checked;
        if (signed_indicator_sum(cones, x) != (contains(p, x) ? 1 : 0)) ++disagree;
    });
    const Integer signed_count = signed_lattice_count(p, xi, bounding_box(p));
    const auto oracle = lattice_points_oracle(p);
    const bool agree = disagree == 0 && signed_count == oracle.count;
    report["oracle"] = {{"points_checked", checked},
                        {"pointwise_disagreements", disagree},
                        {"signed_lattice_count", signed_count.str()},
                        {"lattice_points_oracle", oracle.count},
                        {"agree", agree}};
    if (!agree) throw OracleMismatch{};
}

void cmd_count(const Options& o, const Input& in, Json& report) {
    const Polytope& p = require_polytope(in);
    report["polytope"] = polytope_summary(p);
    const auto xi = polarizing_from(o, p);
    const IntegerBox box = parse_box(o.box, p);
    const Integer count = signed_lattice_count(p, xi, box);
    const auto oracle = lattice_points_oracle(p);
    report["result"] = {{"xi", to_json(xi.xi)}, {"box", box_to_json(box)}, {"count", count.str()}};
    const bool agree = count == oracle.count;
    report["oracle"] = {{"lattice_points_oracle", oracle.count}, {"agree", agree}};
    if (!agree) throw OracleMismatch{};
}

void cmd_volume(const Options& o, const Input& in, Json& report) {
    const Polytope& p = require_polytope(in);
    report["polytope"] = polytope_summary(p);
    RationalVec xi;
    std::string source = "seed";
    if (!o.xi.empty()) {
        xi = parse_rational_vec(o.xi);
        if (xi.size() != p.dim()) throw DomainError(ErrorKind::invalid_argument, "xi has the wrong dimension");
        source = "user";
        if (!is_polarizing(p, xi)) {
            xi = choose_polarizing_vector(p, o.seed).xi;
            source = "retry";
        }
    } else {
        xi = choose_polarizing_vector(p, o.seed).xi;
    }
    const Rational vol = volume_localization(p, xi);
    const Rational oracle = volume_oracle(p);
    report["result"] = {{"xi", to_json(xi)}, {"xi_source", source}, {"volume", to_json(vol)}};
    report["oracle"] = {{"volume_oracle", to_json(oracle)}, {"agree", vol == oracle}};
    if (vol != oracle) throw OracleMismatch{};
}

Json betti_json(const BettiProfile& b) {
    Json arr = Json::array();
    for (auto x : b.b) arr.push_back(x);
    return arr;
}

void cmd_betti(const Options& o, const Input& in, Json& report) {
    const MomentGraph g = require_graph(in);
    report["graph"] = graph_summary(g);
    RationalVec xi = o.xi.empty() ? choose_generic_direction(g, o.seed) : parse_rational_vec(o.xi);
    const auto betti = betti_numbers(g, xi);
    report["result"] = {{"xi", to_json(xi)}, {"betti", betti_json(betti)}, {"total", betti.total()}};

    const RationalVec other = choose_generic_direction(g, o.seed + 1);
    const auto betti_other = betti_numbers(g, other);
    auto reversed = betti_numbers(g, -xi);
    std::reverse(reversed.b.begin(), reversed.b.end());
    const bool agree = betti_other == betti && reversed == betti && betti.total() == g.vertex_count();
    report["oracle"] = {{"xi_other", to_json(other)},
                        {"betti_other", betti_json(betti_other)},
                        {"betti_reversed_negative_xi", betti_json(reversed)},
                        {"agree", agree}};
    if (!agree && in.polytope) throw OracleMismatch{};
}

void cmd_gkm_check(const Options& o, const Input& in, Json& report) {
    if (o.class_file.empty()) throw DomainError(ErrorKind::invalid_argument, "--class is required");
    const MomentGraph g = require_graph(in);
    report["graph"] = graph_summary(g);
    const GKMClass c = class_from_json(g, read_json_file(o.class_file));
    const auto check = gkm_check(g, c);
    Json failing = Json::array();
    for (auto e : check.failing_edges) {
        failing.push_back({{"edge", e},
                           {"endpoints", {g.labels()[g.edges()[e].first], g.labels()[g.edges()[e].second]}},
                           {"weight", to_json(g.weights()[e].coefficients())}});
    }
    report["result"] = {{"gkm", check.ok}, {"failing_edges", failing}};
}

void cmd_gkm_dim(const Options& o, const Input& in, Json& report) {
    if (o.k < 0) throw DomainError(ErrorKind::invalid_argument, "--k must be non-negative");
    const MomentGraph g = require_graph(in);
    report["graph"] = graph_summary(g);
    const auto k = static_cast<unsigned>(o.k);
    const std::size_t dim = gkm_dimension(g, k);
    report["result"] = {{"k", k}, {"cohomological_degree", 2 * k}, {"dimension", dim}};
    const auto free = free_module_check(g, k, o.seed);
    const bool agree = free.dimensions.back() == free.expected.back();
    report["oracle"] = {{"betti", betti_json(free.betti)},
                        {"free_module_prediction", free.expected.back()},
                        {"agree", agree}};
    // Freeness is only guaranteed for graphs of Delzant polytopes.
    if (!agree && in.polytope) throw OracleMismatch{};
}

void cmd_integrate(const Options& o, const Input& in, Json& report) {
    if (o.class_file.empty()) throw DomainError(ErrorKind::invalid_argument, "--class is required");
    const MomentGraph g = require_graph(in);
    report["graph"] = graph_summary(g);
    const auto data = fixed_point_data(g);
    const GKMClass c = class_from_json(g, read_json_file(o.class_file));
    const RationalVec xi = o.xi.empty() ? choose_evaluation_point(data, o.seed) : parse_rational_vec(o.xi);
    if (xi.size() != g.dim()) throw DomainError(ErrorKind::invalid_argument, "xi has the wrong dimension");
    const Rational value = abbv_pushforward(g, data, c, xi);
    report["result"] = {{"xi", to_json(xi)}, {"pushforward", to_json(value)}};

    // For homogeneous classes of degree <= dim the sum does not depend on xi.
    Json twins = Json::array();
    bool agree = true;
    const auto deg = c.homogeneous_degree();
    const bool constant = deg && *deg <= static_cast<int>(g.dim());
    for (std::uint64_t s = 1; s <= 2; ++s) {
        const RationalVec other = choose_evaluation_point(data, o.seed + s);
        const Rational v = abbv_pushforward(g, data, c, other);
        twins.push_back({{"xi", to_json(other)}, {"pushforward", to_json(v)}});
        if (v != value) agree = false;
    }
    report["oracle"] = {{"evaluations", twins}, {"applies", constant}, {"agree", agree}};
    if (constant && !agree) throw OracleMismatch{};
}

void cmd_catalog(const Options&, Json& report) {
    Json list = Json::array();
    for (const auto& spec : catalog_specs()) {
        const Polytope p = build_from_spec(spec);
        Json entry = {{"spec", spec}};
        entry.update(polytope_summary(p));
        entry["smooth"] = is_smooth(p);
        list.push_back(entry);
    }
    report["result"] = {{"catalog", list}};
}

void render_text(const Json& j, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            out << pad << key << ":\n";
            render_text(value, out, indent + 1);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            out << pad << key << ":\n";
            for (const auto& item : value) {
                out << pad << "  -\n";
                render_text(item, out, indent + 2);
            }
        } else if (value.is_string()) {
            out << pad << key << ": " << value.get<std::string>() << "\n";
        } else {
            out << pad << key << ": " << value.dump() << "\n";
        }
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact localization computations on rational polytopes and GKM graphs", "momentkit"};
    app.require_subcommand(1);
    Options o;

    const auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", o.input, "builder spec (simplex:n:s, cube:n:s, hirzebruch:a) or JSON file")
            ->required();
        sub->add_flag("--json", o.json, "machine-readable JSON output");
    };
    const auto add_xi = [&](CLI::App* sub) {
        sub->add_option("--xi", o.xi, "direction / evaluation point, e.g. \"3,5\" or \"1/2,-3\"");
        sub->add_option("--seed", o.seed, "seed for choosing xi");
    };

    auto* validate = app.add_subcommand("validate", "simple / rational / smooth verdicts");
    add_input(validate);
    auto* decompose_cmd = app.add_subcommand("decompose", "polarized tangent cones");
    add_input(decompose_cmd);
    add_xi(decompose_cmd);
    auto* count = app.add_subcommand("count", "lattice points by signed cone counting");
    add_input(count);
    add_xi(count);
    count->add_option("--box", o.box, "auto or \"lo..hi,lo..hi,...\"");
    auto* volume = app.add_subcommand("volume", "volume by vertex localization");
    add_input(volume);
    add_xi(volume);
    auto* betti = app.add_subcommand("betti", "Betti numbers by Morse counting");
    add_input(betti);
    add_xi(betti);
    auto* gkm_check_cmd = app.add_subcommand("gkm-check", "check the GKM conditions for a class");
    add_input(gkm_check_cmd);
    gkm_check_cmd->add_option("--class", o.class_file, "class JSON file")->required();
    auto* gkm_dim = app.add_subcommand("gkm-dim", "dimension of H^{2k}(Gamma, alpha)");
    add_input(gkm_dim);
    gkm_dim->add_option("--k", o.k, "polynomial degree k (cohomological degree 2k)")->required();
    gkm_dim->add_option("--seed", o.seed, "seed for the Morse direction");
    auto* integrate = app.add_subcommand("integrate", "equivariant integral by fixed-point localization");
    add_input(integrate);
    add_xi(integrate);
    integrate->add_option("--class", o.class_file, "class JSON file")->required();
    auto* catalog = app.add_subcommand("catalog", "list the built-in test catalog");
    catalog->add_flag("--json", o.json, "machine-readable JSON output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    CLI::App* sub = app.get_subcommands().front();
    Json report;
    report["command"] = sub->get_name();
    if (sub != catalog) report["input"] = o.input;
    if (!o.xi.empty()) report["xi_requested"] = o.xi;
    report["seed"] = o.seed;

    int code = ok;
    try {
        if (sub == catalog) {
            cmd_catalog(o, report);
        } else {
            const Input in = load_input(o.input);
            if (sub == validate) cmd_validate(o, in, report);
            else if (sub == decompose_cmd) cmd_decompose(o, in, report);
            else if (sub == count) cmd_count(o, in, report);
            else if (sub == volume) cmd_volume(o, in, report);
            else if (sub == betti) cmd_betti(o, in, report);
            else if (sub == gkm_check_cmd) cmd_gkm_check(o, in, report);
            else if (sub == gkm_dim) cmd_gkm_dim(o, in, report);
            else if (sub == integrate) cmd_integrate(o, in, report);
        }
        report["status"] = "ok";
    } catch (const OracleMismatch&) {
        report["status"] = "oracle_mismatch";
        code = oracle_mismatch;
    } catch (const DomainError& e) {
        const bool usage = e.kind() == ErrorKind::invalid_argument;
        report["status"] = usage ? "usage_error" : "domain_error";
        report["error"] = e.what();
        code = usage ? usage_error : domain_error;
        err << "momentkit: " << e.what() << "\n";
    } catch (const nlohmann::json::exception& e) {
        report["status"] = "usage_error";
        report["error"] = e.what();
        code = usage_error;
        err << "momentkit: " << e.what() << "\n";
    }

    if (o.json) {
        out << report.dump(2) << "\n";
    } else {
        render_text(report, out, 0);
    }
    return code;
}

}  // namespace momentkit::cli
