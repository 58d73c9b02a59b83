// polycomb CLI: every library operation behind one binary with JSON (machine)
// or text (human) output.
//
// Exit codes: 0 success, 1 usage error (unknown subcommand, bad flags),
// 2 validation error (bad input data or parameters), 3 resource-cap error.
// Results go to stdout, diagnostics to stderr. With a fixed config the
// output for a given argv is byte-identical across runs.
//
// POLYCOMB_CONFIG may name a JSON file:
//   {
//     "caps": {"hull_vertices": 24, "rc_cells": 40,
//              "clique_vertices": 64, "bqp_n": 12},
//     "k_exponent_policy": "paper-d-cubed" | "minimal-valid",
//     "output": "json" | "text",
//     "seed": 2026
//   }
// Every field is optional; unknown fields are rejected.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "polycomb/combinatorics.hpp"
#include "polycomb/exact.hpp"
#include "polycomb/graph.hpp"
#include "polycomb/hull.hpp"
#include "polycomb/json_io.hpp"
#include "polycomb/matrix.hpp"
#include "polycomb/optimize.hpp"
#include "polycomb/pointset.hpp"

#include "oracles.hpp"

namespace {

using namespace polycomb;

// ── Configuration ───────────────────────────────────────────────────────────

struct CliConfig {
    HullConfig hull;                    // hull_vertices -> max_lattice_vertices
    std::size_t rc_cells = 40;
    std::size_t clique_vertices = 64;
    std::size_t bqp_n = 12;
    bool minimal_valid_policy = false;  // default: K = 2^(d^3)
    bool text_output = false;           // default: json
    std::uint64_t seed = 2026;
};

[[noreturn]] void bad_config(const std::string& detail) {
    throw ValidationError("bad config: " + detail);
}

std::size_t config_cap(const Json& obj, const char* key, std::size_t fallback) {
    if (!obj.contains(key)) return fallback;
    const Json& v = obj.at(key);
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
        bad_config(std::string(key) + " must be a positive integer");
    return v.get<std::size_t>();
}

CliConfig load_config() {
    CliConfig cfg;
    const char* path = std::getenv("POLYCOMB_CONFIG");
    if (path == nullptr || *path == '\0') return cfg;

    std::ifstream in(path);
    if (!in) bad_config(std::string("cannot read file ") + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const Json j = parse_json_text(buf.str());
    if (!j.is_object()) bad_config("top level must be an object");

    for (const auto& [key, value] : j.items()) {
        if (key == "caps") {
            if (!value.is_object()) bad_config("caps must be an object");
            for (const auto& [ck, cv] : value.items()) {
                (void)cv;
                if (ck != "hull_vertices" && ck != "rc_cells" &&
                    ck != "clique_vertices" && ck != "bqp_n")
                    bad_config("unknown cap " + ck);
            }
            cfg.hull.max_lattice_vertices =
                config_cap(value, "hull_vertices", cfg.hull.max_lattice_vertices);
            cfg.rc_cells = config_cap(value, "rc_cells", cfg.rc_cells);
            cfg.clique_vertices = config_cap(value, "clique_vertices", cfg.clique_vertices);
            cfg.bqp_n = config_cap(value, "bqp_n", cfg.bqp_n);
        } else if (key == "k_exponent_policy") {
            if (value == "minimal-valid") cfg.minimal_valid_policy = true;
            else if (value == "paper-d-cubed") cfg.minimal_valid_policy = false;
            else bad_config("k_exponent_policy must be paper-d-cubed or minimal-valid");
        } else if (key == "output") {
            if (value == "text") cfg.text_output = true;
            else if (value == "json") cfg.text_output = false;
            else bad_config("output must be json or text");
        } else if (key == "seed") {
            if (!value.is_number_unsigned()) bad_config("seed must be a nonnegative integer");
            cfg.seed = value.get<std::uint64_t>();
        } else {
            bad_config("unknown field " + key);
        }
    }
    return cfg;
}

// ── I/O helpers ─────────────────────────────────────────────────────────────

std::string read_input(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw ValidationError("cannot read input file " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

PointSet load_point_set(const std::string& path) {
    return point_set_from_json(parse_json_text(read_input(path)));
}

std::vector<Int> parse_int_list(const std::string& csv) {
    std::vector<Int> out;
    std::string item;
    std::stringstream ss(csv);
    while (std::getline(ss, item, ',')) out.push_back(parse_decimal(item));
    if (out.empty()) throw ValidationError("empty integer list");
    return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string point_to_text(const std::vector<Int>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) s += ", ";
        s += p[i].str();
    }
    return s + ")";
}

void print_point_set(const CliConfig& cfg, const PointSet& p) {
    if (!cfg.text_output) {
        emit(point_set_to_json(p));
        return;
    }
    std::cout << "dim " << p.dim << ", " << p.size() << " points\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        std::cout << i << ": " << point_to_text(p.points[i]) << '\n';
}

void print_bool_matrix(const CliConfig& cfg, const BoolMatrix& m) {
    if (!cfg.text_output) {
        emit(bool_matrix_to_json(m));
        return;
    }
    std::cout << m.rows << "x" << m.cols << '\n';
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) std::cout << (m.at(i, j) ? '1' : '0');
        std::cout << '\n';
    }
}

std::string index_set_to_text(const std::vector<std::size_t>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) s += ", ";
        s += std::to_string(xs[i]);
    }
    return s + "}";
}

void print_incidence(const CliConfig& cfg, const IncidenceStructure& inc) {
    if (!cfg.text_output) {
        emit(incidence_to_json(inc));
        return;
    }
    std::cout << inc.point_set.size() << " vertices, " << inc.facets.size()
              << " facets in dim " << inc.point_set.dim << '\n';
    for (std::size_t f = 0; f < inc.facets.size(); ++f)
        std::cout << f << ": normal " << point_to_text(inc.facets[f].normal) << " offset "
                  << inc.facets[f].offset.str() << " vertices "
                  << index_set_to_text(inc.facets[f].vertex_set) << '\n';
}

void print_graph(const CliConfig& cfg, const Graph& g) {
    if (!cfg.text_output) {
        emit(graph_to_json(g));
        return;
    }
    std::cout << g.n << " vertices, " << g.edges.size() << " edges\n";
    for (const auto& [a, b] : g.edges) std::cout << "(" << a << ", " << b << ")\n";
}

void print_scalar(const CliConfig& cfg, const char* key, const Json& value,
                  const std::string& text) {
    if (!cfg.text_output) {
        Json j = Json::object();
        j[key] = value;
        emit(j);
        return;
    }
    std::cout << text << '\n';
}

// ── Perturbation parameter selection ────────────────────────────────────────

PerturbParams params_for(const CliConfig& cfg, std::size_t dim,
                         const std::optional<std::size_t>& k_override) {
    if (k_override) {
        PerturbParams p{dim, *k_override};
        p.validate();  // refusal of an insufficient exponent is a validation error
        return p;
    }
    return cfg.minimal_valid_policy ? PerturbParams::minimal_valid(dim)
                                    : PerturbParams::for_dim(dim);
}

// ── Result serializers local to the CLI ─────────────────────────────────────

Json optimization_to_json(const OptimizationResult& r) {
    Json j = Json::object();
    j["value"] = r.value.str();
    j["argmax"] = r.argmax;
    j["evaluations"] = r.evaluations;
    return j;
}

void print_optimization(const CliConfig& cfg, const OptimizationResult& r,
                        const std::vector<Int>* t_values = nullptr) {
    if (!cfg.text_output) {
        Json j = optimization_to_json(r);
        if (t_values != nullptr) {
            Json ts = Json::array();
            for (const auto& t : *t_values) ts.push_back(t.str());
            j["t"] = std::move(ts);
        }
        emit(j);
        return;
    }
    std::cout << "value " << r.value.str() << '\n';
    std::cout << "argmax " << index_set_to_text(r.argmax) << '\n';
    if (t_values != nullptr) {
        std::cout << "t";
        for (const auto& t : *t_values) std::cout << ' ' << t.str();
        std::cout << '\n';
    }
    std::cout << "evaluations " << r.evaluations << '\n';
}

void print_lattice(const CliConfig& cfg, const FaceLattice& lat) {
    if (!cfg.text_output) {
        Json faces = Json::array();
        for (const auto& f : lat.faces) {
            Json jf = Json::object();
            jf["dim"] = f.dim;
            jf["vertex_set"] = f.vertex_set;
            faces.push_back(std::move(jf));
        }
        Json j = Json::object();
        j["faces"] = std::move(faces);
        emit(j);
        return;
    }
    for (const auto& f : lat.faces)
        std::cout << "dim " << f.dim << ": " << index_set_to_text(f.vertex_set) << '\n';
}

void print_direct_type(const CliConfig& cfg, const DirectTypeReport& rep) {
    if (!cfg.text_output) {
        Json j = Json::object();
        j["ok"] = rep.ok;
        j["complete"] = rep.complete;
        j["witness_node"] = rep.witness_node ? Json(*rep.witness_node) : Json(nullptr);
        j["witness_clique"] = rep.witness_clique;
        emit(j);
        return;
    }
    std::cout << (rep.ok ? "direct type: yes" : "direct type: no") << '\n';
    std::cout << (rep.complete ? "clique enumeration: complete"
                               : "clique enumeration: truncated (maximal cliques only)")
              << '\n';
    if (rep.witness_node)
        std::cout << "witness: node " << *rep.witness_node << ", clique "
                  << index_set_to_text(rep.witness_clique) << '\n';
}

// ── Selftest: compact oracle-equivalence suites ─────────────────────────────

bool selftest_optimizer(oracle::Rng& rng) {
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t d = 1 + rng.below(5);
        const std::size_t n = 1 + rng.below(512);
        const GSpec g = (trial % 2 == 0)
                            ? GSpec::identity()
                            : GSpec::affine(Int(1 + rng.below(4)), Int(rng.below(6)));
        std::vector<Int> c(d);
        bool zero = true;
        for (auto& ci : c) {
            ci = rng.range(-static_cast<std::int64_t>(n), static_cast<std::int64_t>(n));
            if (ci != 0) zero = false;
        }
        const OptimizationResult fast = cyclic_max(d, n, c, g);
        const OptimizationResult slow = brute_max(gen_cyclic(d, n, g), c);
        if (fast.value != slow.value) return false;
        if (zero ? fast.argmax != std::vector<std::size_t>{0} : fast.argmax != slow.argmax)
            return false;
    }
    return true;
}

bool selftest_determinants(oracle::Rng& rng) {
    auto random_matrix = [&rng](std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.range(-9, 9);
        return m;
    };
    for (int trial = 0; trial < 20; ++trial) {
        const IntMatrix m = random_matrix(rng.below(5));
        if (det(m) != oracle::det_cofactor(m)) return false;
    }
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        if (!det_sum_decomposition_check(random_matrix(n), random_matrix(n))) return false;
    }
    return true;
}

bool selftest_membership(oracle::Rng& rng) {
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t d = 1 + rng.below(3);
        const std::size_t n = 1 + rng.below(5);
        std::vector<std::vector<Int>> pts;
        while (pts.size() < n) {
            std::vector<Int> p(d);
            for (auto& x : p) x = rng.range(-3, 3);
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
        }
        const PointSet set(d, pts);
        std::vector<Int> q(d);
        for (auto& x : q) x = rng.range(-3, 3);
        if (in_convex_hull(q, set) != oracle::in_hull(set.points, q)) return false;
    }
    return true;
}

bool selftest_clique(oracle::Rng& rng) {
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng.below(9);
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng.below(100) < 50) edges.emplace_back(i, j);
        const Graph g(n, std::move(edges));
        if (clique_number(g) != oracle::clique_exhaustive(g)) return false;
    }
    return true;
}

bool selftest_rectangles(oracle::Rng& rng) {
    for (int trial = 0; trial < 12; ++trial) {
        BoolMatrix m(1 + rng.below(4), 1 + rng.below(4));
        for (auto& v : m.data) v = static_cast<char>(rng.below(100) < 55);
        const std::size_t exact = rc_exact(m);
        if (exact != oracle::rc_exhaustive(m)) return false;
        if (!(fooling_set_bound(m) <= exact && exact <= rc_greedy(m))) return false;
    }
    return true;
}

bool selftest_perturbation(oracle::Rng& rng) {
    std::vector<std::vector<Int>> cube;
    for (std::size_t mask = 0; mask < 8; ++mask)
        cube.push_back({Int(mask & 1), Int((mask >> 1) & 1), Int((mask >> 2) & 1)});
    const PointSet x(3, cube);
    const PerturbParams params = PerturbParams::minimal_valid(3);
    const PointSet y = cyclic_perturb(x, params);
    if (!is_simplicial(facets(y))) return false;
    if (is_simplicial(facets(x))) return false;
    // Rounding the perturbed optimum recovers the exact optimum.
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Int> c(3);
        for (auto& ci : c) ci = rng.range(-20, 20);
        if (round_perturbed_value(brute_max(y, c).value, params) != brute_max(x, c).value)
            return false;
    }
    return true;
}

bool selftest_direct_type() {
    LinearDecisionTree tri;
    tri.nodes[0] = {{Int(1), Int(-1)}, Int(0), 1, 2};
    tri.nodes[1] = {{Int(1), Int(0)}, Int(0), 3, 4};
    tri.nodes[2] = {{Int(0), Int(1)}, Int(0), 5, 6};
    tri.leaves[3] = {1};
    tri.leaves[4] = {0};
    tri.leaves[5] = {2};
    tri.leaves[6] = {0};
    tri.root = 0;
    const PointSet triangle(2, {{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(0), Int(1)}});
    const DirectTypeReport good = is_direct_type(tri, triangle, skeleton_graph(facets(triangle)));
    if (!good.ok || !good.complete) return false;

    LinearDecisionTree split;
    split.nodes[0] = {{Int(1), Int(0), Int(0)}, Int(0), 1, 2};
    split.nodes[1] = {{Int(0), Int(1), Int(0)}, Int(0), 3, 4};
    split.nodes[2] = {{Int(0), Int(1), Int(0)}, Int(0), 5, 6};
    split.leaves[3] = {0};
    split.leaves[4] = {1};
    split.leaves[5] = {2};
    split.leaves[6] = {3};
    split.root = 0;
    const PointSet simplex(3, {{Int(0), Int(0), Int(0)},
                               {Int(1), Int(0), Int(0)},
                               {Int(0), Int(1), Int(0)},
                               {Int(0), Int(0), Int(1)}});
    const DirectTypeReport bad = is_direct_type(split, simplex, skeleton_graph(facets(simplex)));
    return !bad.ok && bad.complete && bad.witness_node == std::optional<std::size_t>{0} &&
           bad.witness_clique == std::vector<std::size_t>{0, 1, 2, 3};
}

int run_selftest(const CliConfig& cfg) {
    oracle::Rng rng(cfg.seed);
    struct Suite {
        const char* name;
        bool passed;
    };
    const Suite suites[] = {
        {"optimizer vs brute force", selftest_optimizer(rng)},
        {"determinant identities", selftest_determinants(rng)},
        {"hull membership vs subset oracle", selftest_membership(rng)},
        {"clique number vs exhaustive", selftest_clique(rng)},
        {"rectangle covers vs exhaustive", selftest_rectangles(rng)},
        {"perturbation round trip", selftest_perturbation(rng)},
        {"direct-type verdicts", selftest_direct_type()},
    };
    bool all = true;
    for (const Suite& s : suites) {
        std::cout << (s.passed ? "ok " : "FAIL ") << s.name << '\n';
        if (!s.passed) all = false;
    }
    return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"exact combinatorial geometry of integer point sets"};
    app.require_subcommand(1);

    // Flag storage shared across subcommands (each is read only by its own).
    std::size_t d = 0, n = 0, index = 0;
    std::string a = "1", b = "0";
    std::string input = "-", graph_path, tree_path, points_path, c_csv;
    std::optional<std::size_t> k_exponent;
    bool use_perturb = false;
    std::size_t max_cliques = std::size_t{1} << 20;

    auto add_g_flags = [&](CLI::App* cmd) {
        cmd->add_option("--a", a, "index map slope g(i) = a*i + b (default 1)");
        cmd->add_option("--b", b, "index map offset (default 0)");
    };

    CLI::App* gen = app.add_subcommand("gen", "generate structured point sets");
    gen->require_subcommand(1);
    CLI::App* gen_cyclic_cmd = gen->add_subcommand("cyclic", "moment-curve point set");
    gen_cyclic_cmd->add_option("--d", d, "dimension")->required();
    gen_cyclic_cmd->add_option("--n", n, "number of points")->required();
    add_g_flags(gen_cyclic_cmd);
    CLI::App* gen_bqp_cmd = gen->add_subcommand("bqp", "quadratic 0/1 lift point set");
    gen_bqp_cmd->add_option("--n", n, "number of binary variables")->required();
    CLI::App* gen_ext_cmd =
        gen->add_subcommand("simplex-ext", "glued truncated-simplex vertex set");
    gen_ext_cmd->add_option("--d", d, "dimension (>= 3)")->required();

    CLI::App* perturb_cmd = app.add_subcommand("perturb", "apply the 0/1 perturbation");
    perturb_cmd->add_option("--input", input, "point-set JSON file, - for stdin");
    perturb_cmd->add_option("--k-exponent", k_exponent,
                            "override the exponent k in K = 2^k (validated)");

    CLI::App* hull = app.add_subcommand("hull", "convex hull queries");
    hull->require_subcommand(1);
    CLI::App* hull_facets = hull->add_subcommand("facets", "facet list with incidence");
    CLI::App* hull_non = hull->add_subcommand("nonincidence", "vertex/facet nonincidence matrix");
    CLI::App* hull_simp = hull->add_subcommand("simplicial", "is every facet a simplex?");
    CLI::App* hull_skel = hull->add_subcommand("skeleton", "vertex-edge graph");
    CLI::App* hull_lat = hull->add_subcommand("lattice", "all proper nonempty faces");
    CLI::App* hull_nb = hull->add_subcommand("neighborliness",
                                             "largest k with every k-subset a face");
    for (CLI::App* cmd : {hull_facets, hull_non, hull_simp, hull_skel, hull_lat, hull_nb})
        cmd->add_option("--input", input, "point-set JSON file, - for stdin");

    CLI::App* opt = app.add_subcommand("opt", "linear optimization over point sets");
    opt->require_subcommand(1);
    CLI::App* opt_brute = opt->add_subcommand("brute", "exhaustive maximum");
    opt_brute->add_option("--input", input, "point-set JSON file, - for stdin");
    opt_brute->add_option("--c", c_csv, "objective, comma-separated integers")->required();
    CLI::App* opt_cyclic = opt->add_subcommand("cyclic", "moment-curve maximum");
    opt_cyclic->add_option("--d", d, "dimension")->required();
    opt_cyclic->add_option("--n", n, "number of points")->required();
    opt_cyclic->add_option("--c", c_csv, "objective, comma-separated integers")->required();
    add_g_flags(opt_cyclic);
    CLI::App* opt_cone = opt->add_subcommand("cone", "does the objective pick this point?");
    opt_cone->add_option("--input", input, "point-set JSON file, - for stdin");
    opt_cone->add_option("--index", index, "point index")->required();
    opt_cone->add_option("--c", c_csv, "objective, comma-separated integers")->required();

    CLI::App* reduce = app.add_subcommand("reduce", "reductions between problems");
    reduce->require_subcommand(1);
    CLI::App* reduce_bqp = reduce->add_subcommand(
        "clique-bqp", "clique number via the quadratic 0/1 lift");
    reduce_bqp->add_option("--graph", graph_path, "graph JSON file, - for stdin")->required();
    reduce_bqp->add_flag("--perturb", use_perturb, "optimize over the perturbed lift");
    reduce_bqp->add_option("--k-exponent", k_exponent,
                           "override the exponent k in K = 2^k (validated)");

    CLI::App* comb = app.add_subcommand("comb", "combinatorial analyses");
    comb->require_subcommand(1);
    CLI::App* comb_clique = comb->add_subcommand("clique", "maximum clique size");
    comb_clique->add_option("--graph", graph_path, "graph JSON file, - for stdin")->required();
    CLI::App* comb_rc = comb->add_subcommand("rc", "exact rectangle cover number");
    comb_rc->add_option("--input", input, "boolean-matrix JSON file, - for stdin");
    CLI::App* comb_fool = comb->add_subcommand("fooling", "fooling-set lower bound");
    comb_fool->add_option("--input", input, "boolean-matrix JSON file, - for stdin");
    CLI::App* comb_dtt = comb->add_subcommand("check-dtt", "direct-type test for a decision tree");
    comb_dtt->add_option("--tree", tree_path, "decision-tree JSON file")->required();
    comb_dtt->add_option("--points", points_path, "point-set JSON file")->required();
    comb_dtt->add_option("--max-cliques", max_cliques, "clique enumeration budget");

    CLI::App* size_cmd = app.add_subcommand("size", "bit length of the largest coordinate");
    size_cmd->add_option("--input", input, "point-set JSON file, - for stdin");
    size_cmd->add_option("--c", c_csv, "objective to include, comma-separated");

    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "run the oracle-equivalence suites");
    (void)selftest_cmd;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        const CliConfig cfg = load_config();

        if (gen_cyclic_cmd->parsed())
            print_point_set(cfg, gen_cyclic(d, n, GSpec::affine(parse_decimal(a), parse_decimal(b))));
        else if (gen_bqp_cmd->parsed())
            print_point_set(cfg, gen_bqp(n, cfg.bqp_n));
        else if (gen_ext_cmd->parsed())
            print_point_set(cfg, gen_simplex_extension(d));
        else if (perturb_cmd->parsed()) {
            const PointSet x = load_point_set(input);
            print_point_set(cfg, cyclic_perturb(x, params_for(cfg, x.dim, k_exponent)));
        } else if (hull_facets->parsed())
            print_incidence(cfg, facets(load_point_set(input), cfg.hull));
        else if (hull_non->parsed())
            print_bool_matrix(cfg, nonincidence_matrix(facets(load_point_set(input), cfg.hull)));
        else if (hull_simp->parsed()) {
            const bool simp = is_simplicial(facets(load_point_set(input), cfg.hull));
            print_scalar(cfg, "simplicial", simp,
                         simp ? "simplicial: yes" : "simplicial: no");
        } else if (hull_skel->parsed())
            print_graph(cfg, skeleton_graph(facets(load_point_set(input), cfg.hull), cfg.hull));
        else if (hull_lat->parsed())
            print_lattice(cfg, face_lattice(facets(load_point_set(input), cfg.hull), cfg.hull));
        else if (hull_nb->parsed()) {
            const std::size_t k =
                neighborliness(facets(load_point_set(input), cfg.hull), cfg.hull);
            print_scalar(cfg, "neighborliness", k, "neighborliness " + std::to_string(k));
        } else if (opt_brute->parsed())
            print_optimization(cfg, brute_max(load_point_set(input), parse_int_list(c_csv)));
        else if (opt_cyclic->parsed()) {
            const GSpec g = GSpec::affine(parse_decimal(a), parse_decimal(b));
            const OptimizationResult r = cyclic_max(d, n, parse_int_list(c_csv), g);
            std::vector<Int> ts;
            for (std::size_t idx : r.argmax) ts.push_back(g(idx + 1));
            print_optimization(cfg, r, &ts);
        } else if (opt_cone->parsed()) {
            const bool in = is_in_cone(load_point_set(input), index, parse_int_list(c_csv));
            print_scalar(cfg, "in_cone", in, in ? "in cone: yes" : "in cone: no");
        } else if (reduce_bqp->parsed()) {
            const Graph g = graph_from_json(parse_json_text(read_input(graph_path)));
            std::optional<PerturbParams> params;
            if (use_perturb) params = params_for(cfg, g.n * (g.n + 1) / 2, k_exponent);
            const Int omega = solve_clique_via_bqp(g, use_perturb, params, cfg.bqp_n);
            print_scalar(cfg, "clique_number", omega.str(), "clique_number " + omega.str());
        } else if (comb_clique->parsed()) {
            const Graph g = graph_from_json(parse_json_text(read_input(graph_path)));
            const std::size_t omega = clique_number(g, cfg.clique_vertices);
            print_scalar(cfg, "clique_number", omega, "clique_number " + std::to_string(omega));
        } else if (comb_rc->parsed()) {
            const BoolMatrix m = bool_matrix_from_json(parse_json_text(read_input(input)));
            const std::size_t rc = rc_exact(m, cfg.rc_cells);
            print_scalar(cfg, "rc", rc, "rc " + std::to_string(rc));
        } else if (comb_fool->parsed()) {
            const BoolMatrix m = bool_matrix_from_json(parse_json_text(read_input(input)));
            const std::size_t f = fooling_set_bound(m, cfg.rc_cells);
            print_scalar(cfg, "fooling_bound", f, "fooling_bound " + std::to_string(f));
        } else if (comb_dtt->parsed()) {
            const LinearDecisionTree t = ldt_from_json(parse_json_text(read_input(tree_path)));
            const PointSet x = load_point_set(points_path);
            const Graph sk = skeleton_graph(facets(x, cfg.hull), cfg.hull);
            print_direct_type(cfg, is_direct_type(t, x, sk, max_cliques));
        } else if (size_cmd->parsed()) {
            std::optional<std::vector<Int>> c;
            if (!c_csv.empty()) c = parse_int_list(c_csv);
            const std::size_t bits = encoding_size(load_point_set(input), c);
            print_scalar(cfg, "encoding_size", bits, "encoding_size " + std::to_string(bits));
        } else if (selftest_cmd->parsed())
            return run_selftest(cfg);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
