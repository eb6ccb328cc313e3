#include "homalg/io.hpp"

#include <charconv>
#include <map>

namespace homalg {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::Malformed, what); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t to_index(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) malformed(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

FieldValue value_from_json(const Json& j, const FieldSpec& spec) {
    if (j.is_string()) return FieldValue::parse(j.get<std::string>(), spec);
    if (j.is_number_integer()) return FieldValue::from_int(j.get<std::int64_t>(), spec);
    malformed("weights must be strings like \"-2/3\" or integers");
}

std::size_t parse_positive(std::string_view s, const char* what) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
        malformed(std::string("bad ") + what + " \"" + std::string(s) + "\"");
    }
    return v;
}

}  // namespace

Json to_json(const FieldSpec& spec) {
    Json j;
    if (spec.is_rationals()) {
        j["type"] = "Q";
    } else {
        j["type"] = "Fp";
        j["p"] = spec.modulus();
    }
    return j;
}

Json to_json(const WeightedGraph& h) {
    Json j;
    j["field"] = to_json(h.spec());
    j["directed"] = h.directed();
    Json alpha = Json::array();
    for (const auto& a : h.alphas()) alpha.push_back(a.to_string());
    j["alpha"] = alpha;
    Json beta = Json::array();
    for (std::size_t i = 0; i < h.size(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < h.size(); ++c) row.push_back(h.beta(i, c).to_string());
        beta.push_back(row);
    }
    j["beta"] = beta;
    return j;
}

Json to_json(const LabeledGraph& g) {
    Json j;
    j["directed"] = g.directed();
    j["k"] = g.k();
    j["n"] = g.n();
    Json labels = Json::array();
    for (std::size_t i = 0; i < g.k(); ++i) labels.push_back(i + 1);
    j["labels"] = labels;
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back(Json::array({e.from + 1, e.to + 1, e.mult}));
    j["edges"] = edges;
    return j;
}

Json to_json(const WitnessResult& w) {
    Json j;
    j["witness"] = to_json(w.graph);
    j["lhs"] = w.lhs.to_string();
    j["rhs"] = w.rhs.to_string();
    j["source"] = w.source;
    return j;
}

Json to_json(const IsoCertificate& cert) {
    Json j;
    if (cert.iso()) {
        j["verdict"] = "iso";
        Json sigma = Json::array();
        for (auto v : cert.sigma) sigma.push_back(v + 1);
        j["sigma"] = sigma;
        return j;
    }
    j["verdict"] = "noniso";
    if (cert.witness) {
        j["witness"] = to_json(cert.witness->graph);
        j["lhs"] = cert.witness->lhs.to_string();
        j["rhs"] = cert.witness->rhs.to_string();
        j["source"] = cert.witness->source;
    } else {
        j["witness"] = nullptr;
        j["note"] = "none found within bound";
    }
    return j;
}

Json to_json(const RankReport& rep) {
    Json j;
    j["k"] = rep.k;
    j["m"] = rep.m;
    j["field"] = to_json(rep.field);
    j["bound"] = rep.bound;
    j["orbits"] = rep.orbits;
    j["rank_N"] = rep.rank_N;
    j["rank_M"] = rep.rank_M;
    j["rank_T3"] = rep.rank_T3;
    j["row_classes"] = rep.row_classes;
    j["nonzero_classes"] = rep.nonzero_classes;
    j["columns_examined"] = rep.columns_examined;
    j["stabilized"] = rep.stabilized;
    j["rows_match_orbits"] = rep.rows_match_orbits;
    j["m_direct_agrees"] = rep.m_direct_agrees;
    j["t2_equals_m"] = rep.t2_equals_m;
    j["holds"] = rep.holds();
    Json basis = Json::array();
    for (const auto& g : rep.basis) basis.push_back(to_json(g));
    j["columns"] = basis;
    return j;
}

Json to_json(const ColumnSpaceReport& rep) {
    Json j;
    j["k"] = rep.k;
    j["orbits"] = rep.orbits;
    j["span_dim"] = rep.span_dim;
    j["joint_rank"] = rep.joint_rank;
    j["invariant"] = rep.invariant;
    j["spans_invariants"] = rep.spans_invariants();
    return j;
}

Json to_json(const ViolationReport& rep) {
    Json j;
    Json spec;
    spec["p"] = rep.spec.p;
    spec["n"] = rep.spec.n;
    spec["ells"] = rep.spec.ells;
    j["spec"] = spec;
    j["k"] = rep.k;
    j["vertices"] = rep.vertices;
    if (rep.k == 0) {
        j["other_ells"] = rep.other_ells;
        j["other_vertices"] = rep.other_vertices;
    }
    Json bound;
    bound["graphs"] = "simple, " + std::to_string(rep.k) + " labels";
    bound["max_unlabeled_vertices"] = rep.max_free;
    bound["graphs_checked"] = rep.graphs_checked;
    j["enumeration"] = bound;
    j["same_type"] = rep.same_type;
    j["hom_equal"] = rep.hom_equal;
    j["collapse_to_K_U"] = rep.collapse_holds;
    Json census;
    census["automorphisms"] = rep.automorphisms;
    census["fix_U_pointwise"] = rep.aut_fixes_U;
    census["preserve_blocks"] = rep.aut_preserves_blocks;
    j["automorphism_census"] = census;
    j["isomorphism_exists"] = rep.iso_exists;
    if (rep.control_witness) {
        j["control_over_Q"] = to_json(*rep.control_witness);
    } else {
        j["control_over_Q"] = nullptr;
    }
    j["violation"] = rep.violation();
    j["note"] = "hom equality is checked on the enumerated graphs only";
    return j;
}

FieldSpec field_from_json(const Json& j) {
    const auto& type = member(j, "type");
    if (!type.is_string()) malformed("field type must be a string");
    const auto t = type.get<std::string>();
    if (t == "Q") return FieldSpec::rationals();
    if (t == "Fp") {
        const auto& p = member(j, "p");
        if (!p.is_number_unsigned()) malformed("field p must be a positive integer");
        try {
            return FieldSpec::prime(p.get<std::uint64_t>());
        } catch (const Error& e) {
            malformed(e.what());
        }
    }
    malformed("unknown field type \"" + t + "\"");
}

WeightedGraph weighted_graph_from_json(const Json& j) {
    const FieldSpec spec = field_from_json(member(j, "field"));
    const auto& dir = member(j, "directed");
    if (!dir.is_boolean()) malformed("directed must be a boolean");
    const auto& alpha = member(j, "alpha");
    const auto& beta = member(j, "beta");
    if (!alpha.is_array() || !beta.is_array()) malformed("alpha and beta must be arrays");
    const std::size_t m = alpha.size();
    if (beta.size() != m) malformed("beta must have one row per vertex");
    std::vector<FieldValue> a, b;
    for (const auto& v : alpha) a.push_back(value_from_json(v, spec));
    for (const auto& row : beta) {
        if (!row.is_array() || row.size() != m) malformed("beta must be square");
        for (const auto& v : row) b.push_back(value_from_json(v, spec));
    }
    return WeightedGraph(spec, dir.get<bool>(), std::move(a), std::move(b));
}

LabeledGraph labeled_graph_from_json(const Json& j) {
    const auto& dir = member(j, "directed");
    if (!dir.is_boolean()) malformed("directed must be a boolean");
    const std::size_t k = to_index(member(j, "k"), "k");
    const std::size_t n = to_index(member(j, "n"), "n");
    const auto& labels = member(j, "labels");
    const auto& edges = member(j, "edges");
    if (!labels.is_array() || labels.size() != k) malformed("labels must list k vertices");
    if (!edges.is_array()) malformed("edges must be an array");
    std::vector<std::size_t> lab;
    for (const auto& v : labels) {
        const auto x = to_index(v, "label vertex");
        if (x < 1 || x > n) malformed("label vertex out of range");
        lab.push_back(x - 1);
    }
    std::vector<Edge> es;
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3) malformed("edges are [u, v] or [u, v, mult]");
        const auto u = to_index(e[0], "edge endpoint");
        const auto v = to_index(e[1], "edge endpoint");
        const std::uint64_t mult = e.size() == 3 ? to_index(e[2], "multiplicity") : 1;
        if (u < 1 || u > n || v < 1 || v > n) malformed("edge endpoint out of range");
        if (mult == 0) continue;
        es.push_back({u - 1, v - 1, mult});
    }
    return LabeledGraph::with_labels(n, dir.get<bool>(), lab, es);
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
}

LabelMap parse_pin(std::string_view text) {
    std::map<std::size_t, std::size_t> entries;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const auto item = text.substr(pos, comma - pos);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) malformed("pin entries look like label:vertex");
        const auto label = parse_positive(item.substr(0, colon), "label");
        const auto vertex = parse_positive(item.substr(colon + 1), "vertex");
        if (!entries.emplace(label, vertex - 1).second) malformed("label pinned twice");
        pos = comma + 1;
    }
    LabelMap out;
    std::size_t expect = 1;
    for (auto [label, vertex] : entries) {
        if (label != expect++) malformed("pinned labels must be exactly 1..k");
        out.targets.push_back(vertex);
    }
    return out;
}

}  // namespace homalg
