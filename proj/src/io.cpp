#include "momentkit/io.hpp"

#include <fstream>

#include "momentkit/error.hpp"

namespace momentkit {

namespace {

[[noreturn]] void bad(const std::string& what) { throw DomainError(ErrorKind::invalid_argument, what); }

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    while (true) {
        auto pos = s.find(sep);
        parts.push_back(s.substr(0, pos));
        if (pos == std::string_view::npos) return parts;
        s.remove_prefix(pos + 1);
    }
}

std::size_t parse_count(std::string_view s, std::string_view spec) {
    Rational q = parse_rational(s);
    if (!is_integer(q) || q < 1 || q > 64) bad("bad integer parameter in '" + std::string(spec) + "'");
    return numerator(q).convert_to<std::size_t>();
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RationalVec& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(to_string(x));
    return arr;
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    bad("expected a rational string, got " + j.dump());
}

RationalVec vec_from_json(const Json& j) {
    if (!j.is_array()) bad("expected an array of rationals, got " + j.dump());
    RationalVec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_from_json(j[i]);
    return v;
}

Json polytope_to_json(const Polytope& p) {
    Json hs = Json::array();
    for (const auto& h : p.halfspaces()) hs.push_back({{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}});
    return {{"dim", p.dim()}, {"halfspaces", hs}};
}

Polytope polytope_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("halfspaces"))
        bad("polytope JSON needs \"dim\" and \"halfspaces\"");
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<HalfSpace> hs;
    for (const auto& h : j.at("halfspaces")) {
        if (!h.contains("normal") || !h.contains("offset")) bad("half-space needs \"normal\" and \"offset\"");
        hs.push_back({vec_from_json(h.at("normal")), rational_from_json(h.at("offset"))});
    }
    return Polytope::from_halfspaces(dim, std::move(hs));
}

Json graph_to_json(const MomentGraph& g) {
    Json vertices = Json::array(), edges = Json::array(), weights = Json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        vertices.push_back({{"label", g.labels()[v]}, {"position", to_json(g.positions()[v])}});
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        edges.push_back({g.edges()[e].first, g.edges()[e].second});
        weights.push_back(to_json(g.weights()[e].coefficients()));
    }
    return {{"dim", g.dim()}, {"vertices", vertices}, {"edges", edges}, {"weights", weights}};
}

MomentGraph graph_from_json(const Json& j) {
    for (const char* key : {"dim", "vertices", "edges", "weights"})
        if (!j.contains(key)) bad(std::string("graph JSON needs \"") + key + "\"");
    std::vector<std::string> labels;
    std::vector<RationalVec> positions;
    for (const auto& v : j.at("vertices")) {
        labels.push_back(v.at("label").get<std::string>());
        positions.push_back(vec_from_json(v.at("position")));
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    std::vector<LinearForm> weights;
    for (const auto& w : j.at("weights")) weights.emplace_back(vec_from_json(w));
    return MomentGraph::make(j.at("dim").get<std::size_t>(), std::move(positions), std::move(edges),
                             std::move(weights), std::move(labels));
}

Json class_to_json(const MomentGraph& g, const GKMClass& c) {
    Json out = Json::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        Json terms = Json::object();
        const auto& t = c.components.at(v).terms();
        for (auto it = t.rbegin(); it != t.rend(); ++it) {
            std::string key;
            for (std::size_t i = 0; i < it->first.size(); ++i) key += (i ? "," : "") + std::to_string(it->first[i]);
            terms[key] = to_string(it->second);
        }
        out[g.labels()[v]] = terms;
    }
    return out;
}

GKMClass class_from_json(const MomentGraph& g, const Json& j) {
    if (!j.is_object()) bad("class JSON must be an object keyed by vertex label");
    GKMClass c;
    c.components.assign(g.vertex_count(), MultiPoly(g.dim()));
    for (const auto& [label, terms] : j.items()) {
        std::size_t v = 0;
        while (v < g.vertex_count() && g.labels()[v] != label) ++v;
        if (v == g.vertex_count()) bad("unknown vertex label '" + label + "'");
        for (const auto& [key, coeff] : terms.items()) {
            Exponent e;
            for (auto part : split(key, ',')) {
                Rational x = parse_rational(part);
                if (!is_integer(x) || x < 0) bad("bad exponent '" + key + "'");
                e.push_back(numerator(x).convert_to<unsigned>());
            }
            if (e.size() != g.dim()) bad("exponent '" + key + "' has the wrong length");
            c.components[v].add_term(e, rational_from_json(coeff));
        }
    }
    return c;
}

bool is_builder_spec(std::string_view spec) {
    return spec.starts_with("simplex:") || spec.starts_with("cube:") || spec.starts_with("hirzebruch:");
}

Polytope build_from_spec(std::string_view spec) {
    const auto parts = split(spec, ':');
    if (parts[0] == "hirzebruch" && parts.size() == 2) {
        return hirzebruch(static_cast<unsigned>(parse_count(parts[1], spec)));
    }
    if ((parts[0] == "simplex" || parts[0] == "cube") && parts.size() == 3) {
        const std::size_t n = parse_count(parts[1], spec);
        const Rational scale = parse_rational(parts[2]);
        return parts[0] == "simplex" ? simplex(n, scale) : cube(n, scale);
    }
    bad("unknown builder '" + std::string(spec) + "'");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        bad("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::vector<std::string> catalog_specs() {
    std::vector<std::string> specs;
    for (int n = 1; n <= 3; ++n)
        for (int s = 1; s <= 3; ++s) specs.push_back("simplex:" + std::to_string(n) + ":" + std::to_string(s));
    for (int n = 1; n <= 3; ++n)
        for (int s = 1; s <= 3; ++s) specs.push_back("cube:" + std::to_string(n) + ":" + std::to_string(s));
    for (int a = 1; a <= 3; ++a) specs.push_back("hirzebruch:" + std::to_string(a));
    return specs;
}

}  // namespace momentkit
