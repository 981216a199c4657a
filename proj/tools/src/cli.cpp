#include "ugkit_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "ugkit/error.hpp"
#include "ugkit/io.hpp"
#include "ugkit/transfer.hpp"

namespace ugkit::cli {

using nlohmann::json;

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

namespace {

struct Outcome {
    json result;
    bool ok = true;
    std::vector<std::string> witnesses;
};

class Session {
public:
    json load(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error("cannot read " + path);
        std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        inputs_[path] = sha256_hex(bytes);
        try {
            return json::parse(bytes);
        } catch (const json::parse_error& e) {
            throw Error("malformed document " + path + ": " + e.what());
        }
    }

    const json& inputs() const { return inputs_; }

private:
    json inputs_ = json::object();
};

std::uint64_t seed_from_env() {
    const char* raw = std::getenv("UGKIT_SEED");
    if (!raw) return kDefaultSeed;
    std::string s(raw);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw Error("UGKIT_SEED must be a nonnegative integer");
    return std::stoull(s);
}

std::string edge_label(const Path& p) {
    std::string out;
    for (const auto& e : p.edges) out += (out.empty() ? "" : ",") + e;
    return out;
}

std::set<VertexId> finite_vertices(const Ultragraph& g, const std::string& list) {
    auto a = io::parse_vertex_list(g, list);
    if (!a.is_finite()) throw Error("hs operations require finite data");
    return a.explicit_part();
}

void write_file(const std::string& path, const json& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << doc.dump(2) << "\n";
}

void collect_failures(const BsReport& r, Outcome& o) {
    o.ok = r.ok();
    for (const auto& c : r.conditions)
        if (!c.pass) o.witnesses.push_back("condition " + std::to_string(c.condition) + ": " + c.detail);
}

void collect_failures(const CkReport& r, Outcome& o) {
    o.ok = r.ok();
    for (const auto& x : r.relations)
        if (!x.pass) o.witnesses.push_back("relation " + std::to_string(x.relation) + ": " + x.witness);
}

Outcome cmd_validate(Session& s, const std::string& path) {
    auto doc = s.load(path);
    Outcome o;
    switch (io::document_kind(doc)) {
        case io::DocumentKind::Graph: {
            auto g = io::graph_from_json(doc);
            o.result = {{"kind", "graph"}, {"vertices", g.vertices().size()}, {"edges", g.edge_count()},
                        {"finite", g.is_finite()}};
            break;
        }
        case io::DocumentKind::Interval: {
            auto r = validate_bs(io::interval_bs_from_json(doc));
            o.result = {{"kind", "interval"}, {"report", io::to_json(r)}};
            collect_failures(r, o);
            break;
        }
        case io::DocumentKind::Discrete: {
            auto r = validate_bs(io::discrete_bs_from_json(doc));
            o.result = {{"kind", "discrete"}, {"report", io::to_json(r)}};
            collect_failures(r, o);
            break;
        }
    }
    return o;
}

Outcome cmd_g0(Session& s, const std::string& path, const std::string& set) {
    auto g = io::graph_from_json(s.load(path));
    auto a = io::parse_vertex_list(g, set);
    auto d = g0_membership(g, a);
    Outcome o;
    o.result = io::to_json(g, d);
    o.result["set"] = io::to_json(g, a);
    o.ok = d.member;
    if (!d.member) o.witnesses.push_back("no lattice expression produces " + set);
    return o;
}

Outcome cmd_cycles(Session& s, const std::string& path) {
    auto g = io::graph_from_json(s.load(path));
    json cycles = json::array();
    for (const auto& c : enumerate_simple_cycles(g)) {
        json exits = json::array();
        for (const auto& x : cycle_exits(g, c)) exits.push_back(io::to_json(g, x));
        cycles.push_back({{"edges", io::to_json(c.path)}, {"exits", exits}});
    }
    Outcome o;
    o.result = {{"cycles", cycles}, {"composability", io::to_json(composability_graph(g))}};
    return o;
}

Outcome cmd_condition_l(Session& s, const std::string& path) {
    auto g = io::graph_from_json(s.load(path));
    auto c = condition_l(g);
    Outcome o;
    o.result = io::to_json(g, c);
    o.ok = c.holds;
    for (const auto& v : c.violations) o.witnesses.push_back("cycle without exits: " + edge_label(v.path));
    return o;
}

Outcome cmd_closure(Session& s, const std::string& path, const std::string& vertices) {
    auto g = io::graph_from_json(s.load(path));
    auto w0 = finite_vertices(g, vertices);
    auto sh = hs_closure(g, w0);
    Outcome o;
    o.result = {{"seed", io::to_json(g, w0)},
                {"W", io::to_json(g, sh.W)},
                {"check", io::to_json(g, is_hereditary_saturated(g, sh.W))}};
    return o;
}

Outcome cmd_essential(Session& s, const std::string& path, const std::string& vertices) {
    auto g = io::graph_from_json(s.load(path));
    auto sh = hs_closure(g, finite_vertices(g, vertices));
    auto r = is_essential(g, sh);
    Outcome o;
    o.result = io::to_json(g, r);
    o.result["W"] = io::to_json(g, sh.W);
    o.ok = r.essential;
    if (r.orphan) o.witnesses.push_back("no path from " + g.name_of(*r.orphan) + " into W");
    return o;
}

Outcome cmd_uniqueness(Session& s, const std::string& path) {
    auto g = io::graph_from_json(s.load(path));
    auto r = uniqueness_report(g);
    Outcome o;
    o.result = io::to_json(g, r);
    o.ok = r.decomposition.disjoint && r.essential;
    if (!r.decomposition.disjoint) o.witnesses.push_back("W1 and W2 intersect");
    if (r.orphan) o.witnesses.push_back("no path from " + g.name_of(*r.orphan) + " into W1 and W2");
    return o;
}

Outcome cmd_branching(Session& s, const std::string& path, const std::string& out_path,
                      const std::string& degenerate, bool discrete) {
    auto g = io::graph_from_json(s.load(path));
    json doc;
    BsReport report;
    if (discrete) {
        if (!degenerate.empty()) throw Error("--discrete and --degenerate-cycle are exclusive");
        auto bs = build_discrete_bs_from_peeling(g);
        report = validate_bs(bs);
        doc = io::to_json(bs);
    } else {
        auto bs = degenerate.empty() ? build_standard_interval_bs(g)
                                     : build_no_exit_degenerate_bs(g, make_cycle(g, io::parse_edge_list(degenerate)));
        report = validate_bs(bs);
        doc = io::to_json(bs);
    }
    Outcome o;
    o.result = {{"validation", io::to_json(report)}};
    if (out_path.empty()) {
        o.result["system"] = doc;
    } else {
        write_file(out_path, doc);
        o.result["out"] = out_path;
    }
    collect_failures(report, o);
    return o;
}

Outcome cmd_ck_check(Session& s, const std::string& path, double tol, std::uint64_t seed) {
    auto doc = s.load(path);
    CkOptions opts;
    opts.tol = tol;
    opts.seed = seed;
    CkReport r;
    switch (io::document_kind(doc)) {
        case io::DocumentKind::Interval: r = verify_ck_relations(io::interval_bs_from_json(doc), opts); break;
        case io::DocumentKind::Discrete: r = verify_ck_relations(io::discrete_bs_from_json(doc), opts); break;
        case io::DocumentKind::Graph: throw Error("ck-check needs a branching-system document");
    }
    Outcome o;
    o.result = io::to_json(r);
    o.result["tol"] = tol;
    o.result["seed"] = seed;
    collect_failures(r, o);
    return o;
}

Outcome cmd_pf(Session& s, const std::string& path, const std::string& fn, bool compare, bool general, double tol) {
    auto doc = s.load(path);
    if (io::document_kind(doc) != io::DocumentKind::Interval) throw Error("pf needs an interval branching system");
    auto bs = io::interval_bs_from_json(doc);
    auto phi = io::step_function_from_json(s.load(fn));
    const auto mode = general ? PfMode::General : PfMode::Squared;
    auto via = pf_via_rep(bs, phi, mode);
    Outcome o;
    o.result = {{"mode", general ? "general" : "squared"}, {"pf", io::to_json(via)}};
    if (compare) {
        auto input = general ? phi : phi * phi;
        auto F = bs.has_tail_pieces() ? assemble_F(bs, input.support()) : assemble_F(bs);
        auto direct = pf_direct(F, input);
        const double gap = (via - direct).norm1();
        o.result["pf_direct"] = io::to_json(direct);
        o.result["max_l1_gap"] = gap;
        o.result["mass_gap"] = std::abs(via.integral() - input.integral());
        o.ok = gap <= tol;
        if (!o.ok) o.witnesses.push_back("L1 gap " + std::to_string(gap) + " exceeds tolerance");
    }
    return o;
}

Outcome cmd_faithful(Session& s, const std::string& path, const std::string& cycle, const std::string& fset) {
    auto doc = s.load(path);
    if (io::document_kind(doc) != io::DocumentKind::Discrete) throw Error("faithful needs a discrete branching system");
    auto bs = io::discrete_bs_from_json(doc);
    auto fs = io::parse_int_list(fset);
    if (fs.empty() || fs.count(0)) throw Error("--fset must list positive integers");
    auto r = faithfulness_witness(bs, make_cycle(bs.graph, io::parse_edge_list(cycle)), fs);
    Outcome o;
    o.result = io::to_json(r);
    o.result["fset"] = std::vector<std::uint64_t>(fs.begin(), fs.end());
    o.ok = r.witness.has_value();
    if (!o.ok) o.witnesses.push_back("every point returns to itself for some n in the set");
    return o;
}

Outcome cmd_peel(Session& s, const std::string& path) {
    auto g = io::graph_from_json(s.load(path));
    Outcome o;
    o.result = io::to_json(g, peel_sequence(g));
    return o;
}

Outcome cmd_permutative(Session& s, const std::string& path) {
    auto g = io::graph_from_json(s.load(path));
    auto r = permutativity_condition(g);
    Outcome o;
    o.result = io::to_json(r);
    o.ok = r.holds;
    if (r.holds) {
        auto l1 = check_l1_invariants(g, peel_sequence(g));
        o.result["l1"] = io::to_json(l1);
        o.ok = l1.ok();
        for (std::size_t i = 0; i < l1.items.size(); ++i)
            if (!l1.items[i].pass) o.witnesses.push_back("item " + std::to_string(i + 1) + ": " + l1.items[i].witness);
    } else {
        o.witnesses.push_back(r.certificate);
    }
    return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ultragraph toolkit", "ugkit"};
    app.require_subcommand(1);

    std::string file, out_path, vertices, set, cycle, fset, fn, degenerate;
    double tol = 1e-10;
    bool compare = false, general = false, discrete = false;

    auto add = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "Input document")->required();
        return sub;
    };
    auto* validate = add("validate", "Check a graph or branching-system document");
    auto* g0 = add("g0", "Decide membership in the generalized vertex lattice");
    g0->add_option("--set", set, "Vertex list with optional +tail:N suffix")->required();
    auto* cycles = add("cycles", "List simple cycles with their exits");
    auto* cond_l = add("condition-l", "Check that every cycle has an exit");
    auto* closure = add("closure", "Hereditary saturated closure of a vertex set");
    closure->add_option("--vertices", vertices, "Comma-separated vertices")->required();
    auto* essential = add("essential", "Essentiality of the closure of a vertex set");
    essential->add_option("--vertices", vertices, "Comma-separated vertices")->required();
    auto* uniqueness = add("uniqueness", "Uniqueness decomposition and obligations");
    auto* branching = add("branching", "Build a branching system");
    branching->add_option("--out", out_path, "Write the system to FILE");
    branching->add_option("--degenerate-cycle", degenerate, "Place this no-exit cycle first");
    branching->add_flag("--discrete", discrete, "Build the index-set system from peeling");
    auto* ck = add("ck-check", "Verify the Cuntz-Krieger relations");
    ck->add_option("--tol", tol, "Tolerance")->check(CLI::PositiveNumber);
    auto* pf = add("pf", "Perron-Frobenius operator through the representation");
    pf->add_option("--fn", fn, "Step-function document")->required();
    pf->add_flag("--compare", compare, "Compare with the direct transfer operator");
    pf->add_flag("--general", general, "Apply to the function rather than its square");
    pf->add_option("--tol", tol, "Tolerance for --compare")->check(CLI::PositiveNumber);
    auto* faithful = add("faithful", "Search for a wandering set along a cycle");
    faithful->add_option("--cycle", cycle, "Comma-separated cycle edges")->required();
    faithful->add_option("--fset", fset, "Comma-separated positive integers")->required();
    auto* peel = add("peel", "Extreme-vertex peeling trace");
    auto* permutative = add("permutative", "Permutativity condition and peeling invariants");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    auto* sub = app.get_subcommands().front();
    try {
        const auto seed = seed_from_env();
        Session session;
        Outcome o;
        if (sub == validate) o = cmd_validate(session, file);
        else if (sub == g0) o = cmd_g0(session, file, set);
        else if (sub == cycles) o = cmd_cycles(session, file);
        else if (sub == cond_l) o = cmd_condition_l(session, file);
        else if (sub == closure) o = cmd_closure(session, file, vertices);
        else if (sub == essential) o = cmd_essential(session, file, vertices);
        else if (sub == uniqueness) o = cmd_uniqueness(session, file);
        else if (sub == branching) o = cmd_branching(session, file, out_path, degenerate, discrete);
        else if (sub == ck) o = cmd_ck_check(session, file, tol, seed);
        else if (sub == pf) o = cmd_pf(session, file, fn, compare, general, tol);
        else if (sub == faithful) o = cmd_faithful(session, file, cycle, fset);
        else if (sub == peel) o = cmd_peel(session, file);
        else if (sub == permutative) o = cmd_permutative(session, file);

        json report{{"command", sub->get_name()},
                    {"inputs", session.inputs()},
                    {"result", o.result},
                    {"status", o.ok ? "ok" : "fail"}};
        if (!o.ok) report["witnesses"] = o.witnesses;
        out << report.dump(2) << "\n";
        return o.ok ? kOk : kPropertyFailure;
    } catch (const std::exception& e) {
        err << "ugkit " << sub->get_name() << ": " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace ugkit::cli
