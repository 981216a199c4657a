#include "ugkit/io.hpp"

#include <sstream>

#include "ugkit/error.hpp"

namespace ugkit::io {

namespace {

const json& field(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
    return doc.at(key);
}

std::string as_string(const json& v, const char* what) {
    if (!v.is_string()) throw Error(std::string(what) + " must be a string");
    return v.get<std::string>();
}

std::uint64_t as_positive(const json& v, const char* what) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
        throw Error(std::string(what) + " must be a positive integer");
    return v.get<std::uint64_t>();
}

Rational rational_from(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    throw Error("rationals must be \"p/q\" strings");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw Error("empty item in list \"" + text + "\"");
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

}  // namespace

DocumentKind document_kind(const json& doc) {
    if (!doc.is_object()) throw Error("document must be a JSON object");
    if (doc.contains("kind")) {
        auto k = as_string(doc.at("kind"), "kind");
        if (k == "interval") return DocumentKind::Interval;
        if (k == "discrete") return DocumentKind::Discrete;
        if (k == "graph") return DocumentKind::Graph;
        throw Error("unknown document kind \"" + k + "\"");
    }
    return DocumentKind::Graph;
}

Ultragraph graph_from_json(const json& doc) {
    if (!doc.is_object()) throw Error("graph document must be a JSON object");
    std::vector<std::string> names;
    for (const auto& v : field(doc, "vertices")) names.push_back(as_string(v, "vertex id"));
    std::optional<TailSpec> tail;
    if (doc.contains("tail") && !doc.at("tail").is_null()) {
        const auto& t = doc.at("tail");
        tail = TailSpec{as_string(field(t, "prefix"), "tail prefix"), as_positive(field(t, "start"), "tail start")};
    }
    std::vector<EdgeSpec> edges;
    if (doc.contains("edges")) {
        for (const auto& e : doc.at("edges")) {
            EdgeSpec spec;
            spec.id = as_string(field(e, "id"), "edge id");
            spec.source = as_string(field(e, "source"), "edge source");
            const auto& r = field(e, "range");
            for (const auto& v : field(r, "vertices")) spec.range.push_back(as_string(v, "range vertex"));
            if (r.contains("tail_from") && !r.at("tail_from").is_null())
                spec.tail_from = as_positive(r.at("tail_from"), "tail_from");
            edges.push_back(std::move(spec));
        }
    }
    return make_graph(names, edges, tail);
}

json to_json(const Ultragraph& g, const VertexSet& a) {
    json vs = json::array();
    for (const auto& v : a.explicit_part()) vs.push_back(g.name_of(v));
    json out{{"vertices", vs}};
    out["tail_from"] = a.tail_from() ? json(*a.tail_from()) : json(nullptr);
    return out;
}

json to_json(const Ultragraph& g, const std::set<VertexId>& a) {
    json vs = json::array();
    for (const auto& v : a) vs.push_back(g.name_of(v));
    return vs;
}

json to_json(const Ultragraph& g) {
    json vs = json::array();
    for (const auto& v : g.vertices()) vs.push_back(v.name);
    json es = json::array();
    for (const auto& e : g.edges()) es.push_back({{"id", e.id}, {"source", e.source.name}, {"range", to_json(g, e.range)}});
    json out{{"vertices", vs}, {"edges", es}};
    if (g.tail()) out["tail"] = {{"prefix", g.tail()->prefix}, {"start", g.tail()->start}};
    return out;
}

VertexSet vertex_set_from_json(const Ultragraph& g, const json& doc) {
    std::set<VertexId> members;
    for (const auto& v : field(doc, "vertices")) members.insert(g.resolve(as_string(v, "vertex")));
    std::optional<std::uint64_t> t;
    if (doc.contains("tail_from") && !doc.at("tail_from").is_null()) t = as_positive(doc.at("tail_from"), "tail_from");
    VertexSet out(std::move(members), t);
    if (!g.in_universe(out)) throw Error("vertex set outside the vertex universe");
    return out;
}

VertexSet parse_vertex_list(const Ultragraph& g, const std::string& text) {
    std::string list = text;
    std::optional<std::uint64_t> t;
    if (auto pos = text.find("+tail:"); pos != std::string::npos) {
        list = text.substr(0, pos);
        auto num = text.substr(pos + 6);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos || std::stoull(num) == 0)
            throw Error("malformed tail suffix in \"" + text + "\"");
        t = std::stoull(num);
    }
    std::set<VertexId> members;
    for (const auto& n : split(list, ',')) members.insert(g.resolve(n));
    VertexSet out(std::move(members), t);
    if (!g.in_universe(out)) throw Error("vertex set outside the vertex universe");
    return out;
}

Path parse_edge_list(const std::string& text) {
    Path p{split(text, ',')};
    if (p.edges.empty()) throw Error("empty edge list");
    return p;
}

std::set<std::uint64_t> parse_int_list(const std::string& text) {
    std::set<std::uint64_t> out;
    for (const auto& s : split(text, ',')) {
        if (s.find_first_not_of("0123456789") != std::string::npos) throw Error("malformed integer \"" + s + "\"");
        out.insert(std::stoull(s));
    }
    return out;
}

json to_json(const Interval& iv) { return json::array({to_string(iv.lo), to_string(iv.hi)}); }

Interval interval_from_json(const json& doc) {
    if (!doc.is_array() || doc.size() != 2) throw Error("interval must be a [lo, hi] pair");
    return Interval(rational_from(doc[0]), rational_from(doc[1]));
}

json to_json(const IntervalSet& s) {
    json out = json::array();
    for (const auto& p : s.parts()) out.push_back(to_json(p));
    return out;
}

IntervalSet interval_set_from_json(const json& doc) {
    if (!doc.is_array()) throw Error("interval list must be an array");
    std::vector<Interval> parts;
    for (const auto& p : doc) parts.push_back(interval_from_json(p));
    return IntervalSet(std::move(parts));
}

json to_json(const PiecewiseAffineMap& m) {
    json out = json::array();
    for (const auto& p : m.pieces())
        out.push_back({{"dom", to_json(p.dom)}, {"slope", to_string(p.slope)}, {"offset", to_string(p.offset)}});
    return out;
}

namespace {

std::vector<AffinePiece> pieces_from_json(const json& doc) {
    std::vector<AffinePiece> out;
    for (const auto& p : doc)
        out.push_back(AffinePiece{interval_from_json(field(p, "dom")), rational_from(field(p, "slope")),
                                  rational_from(field(p, "offset"))});
    return out;
}

template <typename T>
std::vector<T> per_edge(const Ultragraph& g, const json& doc, const char* what, T empty,
                        const std::function<T(const json&)>& read) {
    if (!doc.is_object()) throw Error(std::string(what) + " must be an object keyed by edge id");
    std::vector<T> out(g.edge_count(), empty);
    for (const auto& [id, v] : doc.items()) out[g.edge_index(id)] = read(v);
    return out;
}

}  // namespace

IntervalBranchingSystem interval_bs_from_json(const json& doc) {
    IntervalBranchingSystem bs;
    bs.graph = graph_from_json(field(doc, "graph"));
    const auto& g = bs.graph;
    bs.R = per_edge<IntervalSet>(g, field(doc, "R"), "R", {}, interval_set_from_json);
    for (const auto& [name, v] : field(doc, "D").items()) {
        auto id = g.resolve(name);
        if (id.is_tail()) throw Error("tail vertices take their intervals from the tail rule");
        bs.D[id] = interval_set_from_json(v);
    }
    bs.f = per_edge<PiecewiseAffineMap>(g, field(doc, "f"), "f", {},
                                        [](const json& v) { return PiecewiseAffineMap(pieces_from_json(v)); });
    bs.f_tail.assign(g.edge_count(), std::nullopt);
    if (doc.contains("tail_rule") && !doc.at("tail_rule").is_null()) {
        const auto& rule = doc.at("tail_rule");
        const auto& layout = field(rule, "layout");
        bs.tail_layout = TailLayout{as_positive(field(layout, "start"), "layout start"),
                                    field(layout, "base").get<std::uint64_t>()};
        if (rule.contains("edges"))
            for (const auto& [id, t] : rule.at("edges").items())
                bs.f_tail[g.edge_index(id)] = GeometricTail{rational_from(field(t, "top")),
                                                            as_positive(field(t, "first_index"), "first_index"),
                                                            as_positive(field(t, "first_piece"), "first_piece")};
    }
    return bs;
}

json to_json(const IntervalBranchingSystem& bs) {
    const auto& g = bs.graph;
    json R = json::object(), D = json::object(), f = json::object();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        R[g.edge(e).id] = to_json(bs.R[e]);
        f[g.edge(e).id] = to_json(bs.f[e]);
    }
    for (const auto& [v, d] : bs.D) D[g.name_of(v)] = to_json(d);
    json out{{"kind", "interval"}, {"graph", to_json(g)}, {"R", R}, {"D", D}, {"f", f}};
    if (bs.tail_layout) {
        json edges = json::object();
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            if (const auto& t = bs.f_tail[e])
                edges[g.edge(e).id] = {{"top", to_string(t->top)}, {"first_index", t->first_index},
                                       {"first_piece", t->first_piece}};
        out["tail_rule"] = {{"layout", {{"start", bs.tail_layout->start}, {"base", bs.tail_layout->base}}},
                            {"edges", edges}};
    } else {
        out["tail_rule"] = nullptr;
    }
    return out;
}

namespace {

std::set<std::uint64_t> index_set(const json& doc) {
    if (!doc.is_array()) throw Error("index set must be an array");
    std::set<std::uint64_t> out;
    for (const auto& v : doc) out.insert(as_positive(v, "index"));
    return out;
}

json to_json(const std::set<std::uint64_t>& s) {
    json out = json::array();
    for (auto x : s) out.push_back(x);
    return out;
}

}  // namespace

DiscreteBranchingSystem discrete_bs_from_json(const json& doc) {
    DiscreteBranchingSystem bs;
    bs.graph = graph_from_json(field(doc, "graph"));
    const auto& g = bs.graph;
    bs.R = per_edge<std::set<std::uint64_t>>(g, field(doc, "R"), "R", {}, index_set);
    for (const auto& [name, v] : field(doc, "D").items()) bs.D[g.resolve(name)] = index_set(v);
    bs.f = per_edge<std::map<std::uint64_t, std::uint64_t>>(
        g, field(doc, "f"), "f", {}, [](const json& v) {
            std::map<std::uint64_t, std::uint64_t> m;
            for (const auto& pair : v) {
                if (!pair.is_array() || pair.size() != 2) throw Error("f entries must be [n, f(n)] pairs");
                if (!m.emplace(as_positive(pair[0], "index"), as_positive(pair[1], "index")).second)
                    throw Error("f assigns an index twice");
            }
            return m;
        });
    return bs;
}

json to_json(const DiscreteBranchingSystem& bs) {
    const auto& g = bs.graph;
    json R = json::object(), D = json::object(), f = json::object();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        R[g.edge(e).id] = to_json(bs.R[e]);
        json pairs = json::array();
        for (const auto& [a, b] : bs.f[e]) pairs.push_back(json::array({a, b}));
        f[g.edge(e).id] = pairs;
    }
    for (const auto& [v, d] : bs.D) D[g.name_of(v)] = to_json(d);
    return json{{"kind", "discrete"}, {"graph", to_json(g)}, {"R", R}, {"D", D}, {"f", f}};
}

StepFunction step_function_from_json(const json& doc) {
    std::vector<StepPiece> pieces;
    for (const auto& p : field(doc, "pieces")) {
        const auto& v = field(p, "value");
        if (!v.is_number()) throw Error("step value must be a number");
        pieces.push_back(StepPiece{Interval(rational_from(field(p, "from")), rational_from(field(p, "to"))),
                                   v.get<double>()});
    }
    return StepFunction(std::move(pieces));
}

json to_json(const StepFunction& phi) {
    json pieces = json::array();
    for (const auto& p : phi.pieces())
        pieces.push_back({{"from", to_string(p.iv.lo)}, {"to", to_string(p.iv.hi)}, {"value", p.value}});
    return json{{"pieces", pieces}};
}

json to_json(const Ultragraph& g, const G0Decision& d) {
    json out{{"member", d.member}};
    if (d.witness) {
        out["witness"] = {{"intersections", d.witness->intersections},
                          {"finite_part", to_json(g, d.witness->finite_part)}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

json to_json(const Path& p) { return json(p.edges); }

json to_json(const Ultragraph& g, const Exit& x) {
    json out{{"condition", x.condition}, {"index", x.index}};
    out["edge"] = x.edge ? json(*x.edge) : json(nullptr);
    out["sink"] = x.sink ? json(g.name_of(*x.sink)) : json(nullptr);
    return out;
}

json to_json(const Ultragraph&, const ConditionL& c) {
    json v = json::array();
    for (const auto& cy : c.violations) v.push_back(to_json(cy.path));
    return json{{"holds", c.holds}, {"violations", v}};
}

json to_json(const Digraph& d) {
    json arcs = json::array();
    for (std::size_t i = 0; i < d.succ.size(); ++i)
        for (auto j : d.succ[i]) arcs.push_back(json::array({d.nodes[i], d.nodes[j]}));
    return json{{"nodes", d.nodes}, {"arcs", arcs}};
}

json to_json(const Ultragraph& g, const HSCheck& c) {
    json sat = json::array();
    for (const auto& v : c.saturated_witnesses) sat.push_back(g.name_of(v));
    return json{{"hereditary", c.hereditary},
                {"saturated", c.saturated},
                {"hereditary_witnesses", c.hereditary_witnesses},
                {"saturated_witnesses", sat}};
}

json to_json(const Ultragraph& g, const EssentialResult& r) {
    json out{{"essential", r.essential}};
    out["orphan"] = r.orphan ? json(g.name_of(*r.orphan)) : json(nullptr);
    return out;
}

json to_json(const Ultragraph& g, const UniquenessDecomposition& d) {
    return json{{"X1", to_json(g, d.X1)}, {"W1", to_json(g, d.W1.W)}, {"W2", to_json(g, d.W2.W)}, {"disjoint", d.disjoint}};
}

json to_json(const Ultragraph& g, const UniquenessReport& r) {
    json cycles = json::array();
    for (const auto& c : r.no_exit_cycles) cycles.push_back(to_json(c.path));
    json out{{"condition_l", r.condition_l},
             {"no_exit_cycles", cycles},
             {"decomposition", to_json(g, r.decomposition)},
             {"essential", r.essential},
             {"certificate_obligations", r.certificate_obligations}};
    out["orphan"] = r.orphan ? json(g.name_of(*r.orphan)) : json(nullptr);
    return out;
}

json to_json(const BsReport& r) {
    json conds = json::array();
    for (const auto& c : r.conditions) {
        json item{{"condition", c.condition}, {"pass", c.pass}, {"detail", c.detail}};
        if (!c.region.empty()) item["region"] = to_json(c.region);
        if (c.index) item["index"] = *c.index;
        conds.push_back(item);
    }
    return json{{"ok", r.ok()}, {"conditions", conds}};
}

json to_json(const CkReport& r) {
    json rels = json::array();
    for (const auto& x : r.relations)
        rels.push_back({{"relation", x.relation}, {"max_deviation", x.max_deviation}, {"pass", x.pass}, {"witness", x.witness}});
    return json{{"ok", r.ok()}, {"exact", r.exact}, {"family_size", r.family_size}, {"relations", rels}};
}

json to_json(const Ultragraph& g, const Extreme& x) {
    return json{{"set", to_json(g, x.set)}, {"edge", x.edge}, {"kind", x.kind == ExtremeKind::Fin ? "fin" : "ini"}};
}

json to_json(const Ultragraph& g, const PeelTrace& t) {
    json levels = json::array();
    for (const auto& l : t.levels) {
        json xs = json::array();
        for (const auto& x : l.X) xs.push_back(to_json(g, x));
        json remaining{{"vertices", to_json(g, std::set<VertexId>(l.remaining.vertices().begin(), l.remaining.vertices().end()))},
                       {"edges", json::array()}};
        for (const auto& e : l.remaining.edges()) remaining["edges"].push_back(e.id);
        levels.push_back({{"X", xs}, {"Y", l.Y}, {"I", to_json(g, l.I)}, {"remaining", remaining}});
    }
    return json{{"I0", to_json(g, t.I0)}, {"levels", levels}};
}

json to_json(const PermutativityResult& r) {
    json out{{"holds", r.holds}, {"certificate", r.certificate}};
    out["n"] = r.n ? json(*r.n) : json(nullptr);
    return out;
}

json to_json(const L1Report& r) {
    json items = json::array();
    for (std::size_t i = 0; i < r.items.size(); ++i)
        items.push_back({{"item", i + 1}, {"pass", r.items[i].pass}, {"witness", r.items[i].witness}});
    return json{{"ok", r.ok()}, {"items", items}};
}

json to_json(const FaithfulnessResult& r) {
    json out{{"orbit_bound", r.orbit_bound}};
    if (r.witness) out["witness"] = json(std::vector<std::uint64_t>(r.witness->begin(), r.witness->end()));
    else out["witness"] = nullptr;
    return out;
}

}  // namespace ugkit::io
