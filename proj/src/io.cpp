#include "tourn/io.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace tourn {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field: ") + key);
    return j.at(key);
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw std::invalid_argument("rational must be a \"p/q\" string");
}

MergeDirection direction_from_name(const std::string& s) {
    for (auto d : {MergeDirection::BulkToTransitive, MergeDirection::TransitiveToBulk}) {
        if (merge_direction_name(d) == s) return d;
    }
    throw std::invalid_argument("unknown merge direction: " + s);
}

OrderingKind ordering_kind_from_name(const std::string& s) {
    for (auto k : {OrderingKind::Forest, OrderingKind::Cyclic}) {
        if (ordering_kind_name(k) == s) return k;
    }
    throw std::invalid_argument("unknown ordering name: " + s);
}

}  // namespace

Json vertex_list_json(const std::vector<int>& vertices) {
    Json out = Json::array();
    for (int v : vertices) out.push_back(v + 1);
    return out;
}

std::vector<int> vertex_list_from_json(const Json& j, int n) {
    if (!j.is_array()) throw std::invalid_argument("expected a list of vertices");
    std::vector<int> out;
    std::set<int> seen;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw std::invalid_argument("vertex labels must be integers");
        const auto v = e.get<std::int64_t>();
        if (v < 1 || v > n) throw std::invalid_argument("vertex label out of range: " + std::to_string(v));
        if (!seen.insert(static_cast<int>(v)).second) throw std::invalid_argument("repeated vertex label: " + std::to_string(v));
        out.push_back(static_cast<int>(v) - 1);
    }
    return out;
}

Json to_json(const VertexSet& s) { return vertex_list_json({s.begin(), s.end()}); }

VertexSet vertex_set_from_json(const Json& j, int n) { return VertexSet(vertex_list_from_json(j, n)); }

Json to_json(const Ordering& o) { return vertex_list_json({o.perm().begin(), o.perm().end()}); }

Ordering ordering_from_json(const Json& j, int n) {
    auto perm = vertex_list_from_json(j, n);
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("ordering must list every vertex once");
    return Ordering(std::move(perm));
}

Json to_json(const ChainStructure& chain) {
    Json sets = Json::array();
    for (const auto& s : chain.sets) sets.push_back(to_json(s));
    return {{"w", chain.spec.w}, {"c", chain.spec.c.str()}, {"lambda", chain.spec.lambda.str()}, {"sets", sets}};
}

ChainStructure chain_from_json(const Json& j, int n) {
    ChainStructure chain;
    chain.spec.w = field(j, "w").get<std::vector<int>>();
    chain.spec.c = rational_from_json(field(j, "c"));
    chain.spec.lambda = rational_from_json(field(j, "lambda"));
    chain.spec.validate();
    const auto& sets = field(j, "sets");
    if (!sets.is_array() || sets.size() != chain.spec.w.size()) {
        throw std::invalid_argument("sets must be a list with one entry per w component");
    }
    for (const auto& s : sets) chain.sets.push_back(vertex_set_from_json(s, n));
    return chain;
}

Json to_json(const MergeCertificate& cert) {
    return {{"transitive_part", to_json(cert.transitive_part)},
            {"bulk", to_json(cert.bulk)},
            {"direction", std::string(merge_direction_name(cert.direction))},
            {"bulk_witness", to_json(cert.bulk_witness)},
            {"bulk_witness_exact", cert.bulk_witness_exact},
            {"claimed_gain", cert.claimed_gain}};
}

MergeCertificate merge_from_json(const Json& j, int n) {
    MergeCertificate cert;
    cert.transitive_part = vertex_set_from_json(field(j, "transitive_part"), n);
    cert.bulk = vertex_set_from_json(field(j, "bulk"), n);
    cert.direction = direction_from_name(field(j, "direction").get<std::string>());
    cert.bulk_witness = vertex_set_from_json(field(j, "bulk_witness"), n);
    cert.bulk_witness_exact = j.value("bulk_witness_exact", true);
    cert.claimed_gain = field(j, "claimed_gain").get<int>();
    return cert;
}

Json to_json(const ReplayOutcome& outcome, Pattern pattern) {
    Json out = {{"pattern", std::string(pattern_name(pattern))}};
    if (outcome.is_embedding()) {
        const auto& e = outcome.embedding();
        out["outcome"] = "embedding";
        out["vertices"] = vertex_list_json(e.vertices);
        out["ordering_name"] = std::string(ordering_kind_name(e.ordering));
    } else {
        out["outcome"] = "merge";
        out["sets"] = to_json(outcome.merge());
        out["ordering_name"] = nullptr;
    }
    Json names = Json::array();
    Json detail = Json::array();
    for (const auto& s : outcome.trace) {
        names.push_back(s.name);
        detail.push_back({{"step", s.name}, {"detail", s.detail}});
    }
    out["trace"] = names;
    out["trace_detail"] = detail;
    return out;
}

ReplayOutcome replay_from_json(const Json& j, int n, Pattern* pattern) {
    const Pattern p = parse_pattern(field(j, "pattern").get<std::string>());
    if (pattern) *pattern = p;
    ReplayOutcome out;
    const auto kind = field(j, "outcome").get<std::string>();
    if (kind == "embedding") {
        out.result = PatternEmbedding{p, ordering_kind_from_name(field(j, "ordering_name").get<std::string>()),
                                      vertex_list_from_json(field(j, "vertices"), n)};
    } else if (kind == "merge") {
        out.result = merge_from_json(field(j, "sets"), n);
    } else {
        throw std::invalid_argument("outcome must be \"embedding\" or \"merge\"");
    }
    if (j.contains("trace_detail")) {
        for (const auto& s : j.at("trace_detail")) {
            out.trace.push_back({field(s, "step").get<std::string>(), field(s, "detail").get<std::string>()});
        }
    } else {
        for (const auto& s : field(j, "trace")) out.trace.push_back({s.get<std::string>(), ""});
    }
    return out;
}

Json to_json(const ClassificationRecord& r) {
    Json w = Json::object();
    if (r.galaxy) w["1"] = {{"ordering", to_json(*r.galaxy)}};
    if (r.c5) {
        w["2"] = {{"vertex", r.c5->vertex + 1},
                  {"c5_map", vertex_list_json(r.c5->c5_map)},
                  {"one_in", r.c5->one_in},
                  {"one_out", r.c5->one_out}};
    }
    if (r.homogeneous) w["3"] = {{"set", to_json(*r.homogeneous)}};
    if (r.ordering4) w["4"] = {{"ordering", to_json(r.ordering4->ordering)}, {"reversed", r.ordering4->reversed}};
    if (r.k6_map) w["5"] = {{"k6_map", vertex_list_json(*r.k6_map)}};
    return {{"n", r.cls.n}, {"bits", r.cls.bits}, {"outcomes", r.outcomes()}, {"witnesses", w}};
}

ClassificationRecord classification_from_json(const Json& j) {
    ClassificationRecord r;
    r.cls.n = field(j, "n").get<int>();
    r.cls.bits = field(j, "bits").get<std::string>();
    const int n = r.cls.n;
    (void)Tournament::from_bits(n, r.cls.bits);
    for (int o : field(j, "outcomes").get<std::vector<int>>()) {
        if (o < 1 || o > 5) throw std::invalid_argument("outcome out of range");
        r.holds[static_cast<std::size_t>(o)] = true;
    }
    const auto& w = field(j, "witnesses");
    if (w.contains("1")) r.galaxy = ordering_from_json(field(w.at("1"), "ordering"), n);
    if (w.contains("2")) {
        const auto& c = w.at("2");
        C5Witness c5;
        c5.vertex = field(c, "vertex").get<int>() - 1;
        c5.c5_map = vertex_list_from_json(field(c, "c5_map"), n);
        c5.one_in = field(c, "one_in").get<bool>();
        c5.one_out = field(c, "one_out").get<bool>();
        r.c5 = c5;
    }
    if (w.contains("3")) r.homogeneous = vertex_set_from_json(field(w.at("3"), "set"), n);
    if (w.contains("4")) {
        r.ordering4 = Outcome4Witness{ordering_from_json(field(w.at("4"), "ordering"), n),
                                      field(w.at("4"), "reversed").get<bool>()};
    }
    if (w.contains("5")) r.k6_map = vertex_list_from_json(field(w.at("5"), "k6_map"), n);
    return r;
}

Json to_json(const StarDecomposition& d) {
    Json comps = Json::array();
    for (const auto& c : d.components) {
        Json e = {{"kind", std::string(component_kind_name(c.kind))}, {"vertices", vertex_list_json(c.vertices)}};
        if (c.center >= 0) {
            e["center"] = c.center + 1;
            e["leaves"] = vertex_list_json(c.leaves);
        }
        comps.push_back(e);
    }
    return {{"ordering", to_json(d.ordering)},
            {"components", comps},
            {"is_star_ordering", d.is_star_ordering},
            {"is_galaxy_ordering", d.is_galaxy_ordering},
            {"is_forest_ordering", d.is_forest_ordering}};
}

Json to_json(const MatchingOutcome& m) {
    Json pairs = Json::array();
    for (const auto& [x, y] : m.pairs) pairs.push_back({x + 1, y + 1});
    Json out = {{"matched", m.matched}, {"maximum", m.maximum}, {"pairs", pairs}};
    if (!m.matched) {
        out["cover_x"] = to_json(m.cover_x);
        out["cover_y"] = to_json(m.cover_y);
        out["complete_x"] = to_json(m.complete_x);
        out["complete_y"] = to_json(m.complete_y);
        out["half_sizes"] = m.half_sizes;
    }
    return out;
}

std::string export_dot(const Tournament& t, const std::optional<Ordering>& order) {
    if (order && order->size() != t.size()) throw std::invalid_argument("export_dot: ordering size mismatch");
    std::ostringstream out;
    out << "digraph T {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (int p = 0; p < t.size(); ++p) {
        const int v = order ? order->vertex_at(p) : p;
        out << "  v" << v + 1 << " [label=\"v" << v + 1 << "\"";
        if (order) out << ", position=" << p + 1;
        out << "];\n";
    }
    if (order) {
        // Invisible spine keeps the nodes on one line in position order.
        for (int p = 0; p + 1 < t.size(); ++p) {
            out << "  v" << order->vertex_at(p) + 1 << " -> v" << order->vertex_at(p + 1) + 1
                << " [style=invis, weight=100];\n";
        }
    }
    for (int a = 0; a < t.size(); ++a) {
        for (int b = 0; b < t.size(); ++b) {
            if (a == b || !t.edge(a, b)) continue;
            out << "  v" << a + 1 << " -> v" << b + 1;
            if (order && order->position_of(a) > order->position_of(b)) {
                out << " [backward=true, color=red, constraint=false]";
            } else if (order) {
                out << " [constraint=false]";
            }
            out << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace tourn
