#include "polycomb/json_io.hpp"

#include <string>
#include <utility>
#include <vector>

namespace polycomb {

namespace {

[[noreturn]] void bad(const std::string& what, const std::string& detail) {
    throw ValidationError("bad " + what + " JSON: " + detail);
}

std::size_t get_size(const Json& j, const char* key, const char* what) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        bad(what, std::string("missing or non-integer \"") + key + "\"");
    return j[key].get<std::size_t>();
}

Int get_int_string(const Json& j, const char* what) {
    if (!j.is_string()) bad(what, "expected a decimal string, got " + j.dump());
    return parse_decimal(j.get<std::string>());
}

std::vector<Int> get_int_vector(const Json& j, const char* what) {
    if (!j.is_array()) bad(what, "expected an array of decimal strings");
    std::vector<Int> out;
    out.reserve(j.size());
    for (const Json& e : j) out.push_back(get_int_string(e, what));
    return out;
}

Json int_vector_to_json(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(x.str());
    return a;
}

std::string row_bits(const BoolMatrix& m, std::size_t r) {
    std::string s(m.cols, '0');
    for (std::size_t c = 0; c < m.cols; ++c)
        if (m.at(r, c)) s[c] = '1';
    return s;
}

}  // namespace

Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ValidationError("input is not valid JSON");
    return j;
}

// ─── PointSet ───────────────────────────────────────────────────────────────

Json point_set_to_json(const PointSet& x) {
    Json j;
    j["dim"] = x.dim;
    Json pts = Json::array();
    for (const auto& p : x.points) pts.push_back(int_vector_to_json(p));
    j["points"] = std::move(pts);
    return j;
}

PointSet point_set_from_json(const Json& j) {
    const std::size_t dim = get_size(j, "dim", "point-set");
    if (!j.contains("points") || !j["points"].is_array())
        bad("point-set", "missing or non-array \"points\"");
    std::vector<std::vector<Int>> points;
    for (const Json& p : j["points"]) points.push_back(get_int_vector(p, "point-set"));
    return PointSet(dim, std::move(points));
}

// ─── Graph ──────────────────────────────────────────────────────────────────

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.n;
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges) edges.push_back(Json::array({a, b}));
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const Json& j) {
    const std::size_t n = get_size(j, "n", "graph");
    if (!j.contains("edges") || !j["edges"].is_array())
        bad("graph", "missing or non-array \"edges\"");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const Json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
            !e[1].is_number_unsigned())
            bad("graph", "edge must be a pair of vertex indices, got " + e.dump());
        edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return Graph(n, std::move(edges));
}

// ─── BoolMatrix ─────────────────────────────────────────────────────────────

Json bool_matrix_to_json(const BoolMatrix& m) {
    Json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    Json data = Json::array();
    for (std::size_t r = 0; r < m.rows; ++r) data.push_back(row_bits(m, r));
    j["data"] = std::move(data);
    return j;
}

BoolMatrix bool_matrix_from_json(const Json& j) {
    const std::size_t rows = get_size(j, "rows", "bool-matrix");
    const std::size_t cols = get_size(j, "cols", "bool-matrix");
    if (!j.contains("data") || !j["data"].is_array() || j["data"].size() != rows)
        bad("bool-matrix", "\"data\" must be an array of one bitstring per row");
    BoolMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Json& row = j["data"][r];
        if (!row.is_string()) bad("bool-matrix", "row " + std::to_string(r) + " is not a string");
        const std::string s = row.get<std::string>();
        if (s.size() != cols)
            bad("bool-matrix", "row " + std::to_string(r) + " has length " +
                                   std::to_string(s.size()) + ", expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) {
            if (s[c] != '0' && s[c] != '1')
                bad("bool-matrix", "row " + std::to_string(r) + " contains character '" +
                                       std::string(1, s[c]) + "'");
            m.at(r, c) = s[c] == '1';
        }
    }
    return m;
}

// ─── IncidenceStructure ─────────────────────────────────────────────────────

Json incidence_to_json(const IncidenceStructure& inc) {
    Json j;
    j["point_set"] = point_set_to_json(inc.point_set);
    Json facets = Json::array();
    for (const Facet& f : inc.facets) {
        Json fj;
        fj["normal"] = int_vector_to_json(f.normal);
        fj["offset"] = f.offset.str();
        fj["vertex_set"] = f.vertex_set;
        facets.push_back(std::move(fj));
    }
    j["facets"] = std::move(facets);
    j["incidence"] = bool_matrix_to_json(inc.incidence);
    return j;
}

IncidenceStructure incidence_from_json(const Json& j) {
    if (!j.contains("point_set")) bad("incidence-structure", "missing \"point_set\"");
    IncidenceStructure inc{point_set_from_json(j["point_set"]), {}, BoolMatrix(0, 0)};
    if (!j.contains("facets") || !j["facets"].is_array())
        bad("incidence-structure", "missing or non-array \"facets\"");
    for (const Json& fj : j["facets"]) {
        Facet f;
        f.normal = get_int_vector(fj.contains("normal") ? fj["normal"] : Json(),
                                  "incidence-structure");
        if (f.normal.size() != inc.point_set.dim)
            bad("incidence-structure", "facet normal length does not match dim");
        if (!fj.contains("offset")) bad("incidence-structure", "facet missing \"offset\"");
        f.offset = get_int_string(fj["offset"], "incidence-structure");
        if (!fj.contains("vertex_set") || !fj["vertex_set"].is_array())
            bad("incidence-structure", "facet missing \"vertex_set\"");
        for (const Json& v : fj["vertex_set"]) {
            if (!v.is_number_unsigned() || v.get<std::size_t>() >= inc.point_set.size())
                bad("incidence-structure", "facet vertex index out of range");
            f.vertex_set.push_back(v.get<std::size_t>());
        }
        inc.facets.push_back(std::move(f));
    }
    if (!j.contains("incidence")) bad("incidence-structure", "missing \"incidence\"");
    inc.incidence = bool_matrix_from_json(j["incidence"]);
    if (inc.incidence.rows != inc.point_set.size() || inc.incidence.cols != inc.facets.size())
        bad("incidence-structure", "incidence matrix shape does not match points x facets");
    return inc;
}

// ─── LinearDecisionTree ─────────────────────────────────────────────────────

Json ldt_to_json(const LinearDecisionTree& t) {
    Json j;
    Json nodes = Json::array();
    for (const auto& [id, node] : t.nodes) {
        Json nj;
        nj["id"] = id;
        nj["a"] = int_vector_to_json(node.a);
        nj["b"] = node.b.str();
        nj["pos"] = node.pos;
        nj["neg"] = node.neg;
        nodes.push_back(std::move(nj));
    }
    j["nodes"] = std::move(nodes);
    Json leaves = Json::array();
    for (const auto& [id, leaf] : t.leaves) {
        Json lj;
        lj["id"] = id;
        lj["label"] = leaf.label;
        leaves.push_back(std::move(lj));
    }
    j["leaves"] = std::move(leaves);
    j["root"] = t.root;
    return j;
}

LinearDecisionTree ldt_from_json(const Json& j) {
    LinearDecisionTree t;
    if (!j.contains("nodes") || !j["nodes"].is_array())
        bad("decision-tree", "missing or non-array \"nodes\"");
    for (const Json& nj : j["nodes"]) {
        const std::size_t id = get_size(nj, "id", "decision-tree");
        LinearDecisionTree::Node node;
        node.a = get_int_vector(nj.contains("a") ? nj["a"] : Json(), "decision-tree");
        if (!nj.contains("b")) bad("decision-tree", "node missing \"b\"");
        node.b = get_int_string(nj["b"], "decision-tree");
        node.pos = get_size(nj, "pos", "decision-tree");
        node.neg = get_size(nj, "neg", "decision-tree");
        if (!t.nodes.emplace(id, std::move(node)).second)
            bad("decision-tree", "duplicate node id " + std::to_string(id));
    }
    if (!j.contains("leaves") || !j["leaves"].is_array())
        bad("decision-tree", "missing or non-array \"leaves\"");
    for (const Json& lj : j["leaves"]) {
        const std::size_t id = get_size(lj, "id", "decision-tree");
        LinearDecisionTree::Leaf leaf{get_size(lj, "label", "decision-tree")};
        if (t.nodes.count(id) || !t.leaves.emplace(id, leaf).second)
            bad("decision-tree", "duplicate id " + std::to_string(id));
    }
    t.root = get_size(j, "root", "decision-tree");
    return t;
}

}  // namespace polycomb
