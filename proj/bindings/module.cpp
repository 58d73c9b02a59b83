// Python bindings for the polycomb core. Arbitrary-precision integers cross
// the boundary as native Python ints (decimal-string transport, bit exact);
// rationals are returned as (numerator, denominator) pairs where they occur.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "polycomb/combinatorics.hpp"
#include "polycomb/exact.hpp"
#include "polycomb/graph.hpp"
#include "polycomb/hull.hpp"
#include "polycomb/matrix.hpp"
#include "polycomb/optimize.hpp"
#include "polycomb/pointset.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Int <-> Python int, both directions exact at any size.
template <>
struct type_caster<polycomb::Int> {
    PYBIND11_TYPE_CASTER(polycomb::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = polycomb::parse_decimal(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const polycomb::Int& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using namespace polycomb;

IntMatrix matrix_from_rows(const std::vector<std::vector<Int>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw ValidationError("matrix rows must all have the same length");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

BoolMatrix bool_matrix_from_rows(const std::vector<std::string>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    BoolMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw ValidationError("matrix rows must all have the same length");
        for (std::size_t j = 0; j < c; ++j) {
            const char v = rows[i][j];
            if (v != '0' && v != '1')
                throw ValidationError("matrix rows must be strings of 0 and 1");
            m.at(i, j) = static_cast<char>(v - '0');
        }
    }
    return m;
}

std::vector<std::string> bool_matrix_rows(const BoolMatrix& m) {
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < m.rows; ++i) {
        std::string row(m.cols, '0');
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m.at(i, j)) row[j] = '1';
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact combinatorial geometry of integer point sets";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    // ── Point sets and generators ───────────────────────────────────────────

    py::class_<PointSet>(m, "PointSet")
        .def(py::init<std::size_t, std::vector<std::vector<Int>>>(), py::arg("dim"),
             py::arg("points"))
        .def_readonly("dim", &PointSet::dim)
        .def_readonly("points", &PointSet::points)
        .def("__len__", &PointSet::size)
        .def(py::self == py::self)
        .def("__repr__", [](const PointSet& p) {
            return "PointSet(dim=" + std::to_string(p.dim) + ", points=" +
                   std::to_string(p.size()) + ")";
        });

    py::class_<GSpec>(m, "GSpec")
        .def_static("identity", &GSpec::identity)
        .def_static("affine", &GSpec::affine, py::arg("a"), py::arg("b"))
        .def_readonly("a", &GSpec::a)
        .def_readonly("b", &GSpec::b)
        .def("__call__", &GSpec::operator(), py::arg("i"));

    py::class_<PerturbParams>(m, "PerturbParams")
        .def(py::init([](std::size_t dim, std::size_t k_exponent) {
                 return PerturbParams{dim, k_exponent};
             }),
             py::arg("dim"), py::arg("k_exponent"))
        .def_static("for_dim", &PerturbParams::for_dim, py::arg("d"))
        .def_static("minimal_valid", &PerturbParams::minimal_valid, py::arg("d"))
        .def_readonly("dim", &PerturbParams::dim)
        .def_readonly("k_exponent", &PerturbParams::k_exponent)
        .def("K", &PerturbParams::K)
        .def("is_valid", &PerturbParams::is_valid)
        .def("validate", &PerturbParams::validate);

    m.def("minimal_valid_k_exponent", &minimal_valid_k_exponent, py::arg("d"));
    m.def("gen_cyclic", &gen_cyclic, py::arg("d"), py::arg("n_points"),
          py::arg("g") = GSpec::identity());
    m.def("gen_bqp", &gen_bqp, py::arg("n"), py::arg("max_n") = 12);
    m.def("gen_simplex_extension", &gen_simplex_extension, py::arg("d"));
    m.def("point_number", &point_number, py::arg("x"));
    m.def("moment_vector", &moment_vector, py::arg("x"));
    m.def("cyclic_perturb", &cyclic_perturb, py::arg("x_set"),
          py::arg("params") = std::nullopt);
    m.def("round_perturbed_value", &round_perturbed_value, py::arg("v"), py::arg("params"));
    m.def("clique_objective", &clique_objective, py::arg("g"));
    m.def("encoding_size", &encoding_size, py::arg("x_set"), py::arg("c") = std::nullopt);

    // ── Graphs ──────────────────────────────────────────────────────────────

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>(),
             py::arg("n"), py::arg("edges"))
        .def_static("complete", &Graph::complete, py::arg("n"))
        .def_readonly("n", &Graph::n)
        .def_readonly("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent, py::arg("i"), py::arg("j"))
        .def(py::self == py::self);

    // ── Exact linear algebra ────────────────────────────────────────────────

    py::class_<IntMatrix>(m, "IntMatrix")
        .def(py::init(&matrix_from_rows), py::arg("rows"))
        .def_property_readonly("shape",
                               [](const IntMatrix& a) {
                                   return std::make_pair(a.rows(), a.cols());
                               })
        .def("at", [](const IntMatrix& a, std::size_t r, std::size_t c) { return a.at(r, c); },
             py::arg("r"), py::arg("c"));

    m.def("det", &det, py::arg("m"));
    m.def("rank", &rank, py::arg("m"));
    m.def("det_sum_decomposition_check", &det_sum_decomposition_check, py::arg("a"),
          py::arg("b"), py::arg("max_n") = 12);
    m.def("bit_length", &bit_length, py::arg("v"));

    // ── Boolean matrices and rectangle covers ───────────────────────────────

    py::class_<BoolMatrix>(m, "BoolMatrix")
        .def(py::init(&bool_matrix_from_rows), py::arg("rows"))
        .def_readonly("rows", &BoolMatrix::rows)
        .def_readonly("cols", &BoolMatrix::cols)
        .def("row_strings", &bool_matrix_rows)
        .def("at", [](const BoolMatrix& m_, std::size_t r, std::size_t c) {
                 return m_.at(r, c) != 0;
             },
             py::arg("r"), py::arg("c"))
        .def("count_ones", &BoolMatrix::count_ones)
        .def("complement", &BoolMatrix::complement)
        .def(py::self == py::self);

    py::class_<Rectangle>(m, "Rectangle")
        .def_readonly("row_set", &Rectangle::row_set)
        .def_readonly("col_set", &Rectangle::col_set);

    m.def("maximal_rectangles", &maximal_rectangles, py::arg("m"));
    m.def("rc_exact", &rc_exact, py::arg("m"), py::arg("max_cells") = 40);
    m.def("rc_greedy", &rc_greedy, py::arg("m"));
    m.def("fooling_set_bound", &fooling_set_bound, py::arg("m"), py::arg("max_cells") = 40);
    m.def("clique_number", &clique_number, py::arg("g"), py::arg("max_vertices") = 64);

    // ── Hulls ───────────────────────────────────────────────────────────────

    py::class_<HullConfig>(m, "HullConfig")
        .def(py::init([](std::size_t max_lattice_vertices, std::size_t max_facet_dim) {
                 return HullConfig{max_lattice_vertices, max_facet_dim};
             }),
             py::arg("max_lattice_vertices") = 24, py::arg("max_facet_dim") = 8)
        .def_readwrite("max_lattice_vertices", &HullConfig::max_lattice_vertices)
        .def_readwrite("max_facet_dim", &HullConfig::max_facet_dim);

    py::class_<Facet>(m, "Facet")
        .def_readonly("normal", &Facet::normal)
        .def_readonly("offset", &Facet::offset)
        .def_readonly("vertex_set", &Facet::vertex_set)
        .def(py::self == py::self);

    py::class_<IncidenceStructure>(m, "IncidenceStructure")
        .def_readonly("point_set", &IncidenceStructure::point_set)
        .def_readonly("facets", &IncidenceStructure::facets)
        .def_readonly("incidence", &IncidenceStructure::incidence);

    py::class_<FaceLattice::Face>(m, "Face")
        .def_readonly("dim", &FaceLattice::Face::dim)
        .def_readonly("vertex_set", &FaceLattice::Face::vertex_set);

    py::class_<FaceLattice>(m, "FaceLattice")
        .def_readonly("faces", &FaceLattice::faces);

    m.def("affine_rank", &affine_rank, py::arg("x_set"));
    m.def("in_convex_hull", &in_convex_hull, py::arg("p"), py::arg("set"));
    m.def("extreme_points", &extreme_points, py::arg("x_set"));
    m.def("facets", &facets, py::arg("x_set"), py::arg("cfg") = HullConfig{});
    m.def("nonincidence_matrix", &nonincidence_matrix, py::arg("inc"));
    m.def("is_simplicial", &is_simplicial, py::arg("inc"));
    m.def("face_lattice", &face_lattice, py::arg("inc"), py::arg("cfg") = HullConfig{});
    m.def("skeleton_graph", &skeleton_graph, py::arg("inc"), py::arg("cfg") = HullConfig{});
    m.def("neighborliness", &neighborliness, py::arg("inc"), py::arg("cfg") = HullConfig{});

    // ── Optimization ────────────────────────────────────────────────────────

    py::class_<OptimizationResult>(m, "OptimizationResult")
        .def_readonly("value", &OptimizationResult::value)
        .def_readonly("argmax", &OptimizationResult::argmax)
        .def_readonly("evaluations", &OptimizationResult::evaluations)
        .def(py::self == py::self);

    m.def("brute_max", &brute_max, py::arg("x_set"), py::arg("c"));
    m.def("cyclic_max", &cyclic_max, py::arg("d"), py::arg("n_points"), py::arg("c"),
          py::arg("g") = GSpec::identity());
    m.def("is_in_cone", &is_in_cone, py::arg("x_set"), py::arg("idx"), py::arg("c"));
    m.def("solve_clique_via_bqp", &solve_clique_via_bqp, py::arg("g"),
          py::arg("use_perturbation"), py::arg("params") = std::nullopt,
          py::arg("max_n") = 12);

    // ── Linear decision trees ───────────────────────────────────────────────

    py::class_<LinearDecisionTree::Node>(m, "TreeNode")
        .def(py::init([](std::vector<Int> a, Int b, std::size_t pos, std::size_t neg) {
                 return LinearDecisionTree::Node{std::move(a), std::move(b), pos, neg};
             }),
             py::arg("a"), py::arg("b"), py::arg("pos"), py::arg("neg"))
        .def_readonly("a", &LinearDecisionTree::Node::a)
        .def_readonly("b", &LinearDecisionTree::Node::b)
        .def_readonly("pos", &LinearDecisionTree::Node::pos)
        .def_readonly("neg", &LinearDecisionTree::Node::neg);

    py::class_<LinearDecisionTree::Leaf>(m, "TreeLeaf")
        .def(py::init([](std::size_t label) { return LinearDecisionTree::Leaf{label}; }),
             py::arg("label"))
        .def_readonly("label", &LinearDecisionTree::Leaf::label);

    py::class_<LinearDecisionTree>(m, "LinearDecisionTree")
        .def(py::init([](std::map<std::size_t, LinearDecisionTree::Node> nodes,
                         std::map<std::size_t, LinearDecisionTree::Leaf> leaves,
                         std::size_t root) {
                 LinearDecisionTree t;
                 t.nodes = std::move(nodes);
                 t.leaves = std::move(leaves);
                 t.root = root;
                 return t;
             }),
             py::arg("nodes"), py::arg("leaves"), py::arg("root"))
        .def_readonly("root", &LinearDecisionTree::root)
        .def("validate", &LinearDecisionTree::validate,
             py::arg("n_points") = std::nullopt, py::arg("dim") = std::nullopt)
        .def("depth", &LinearDecisionTree::depth);

    py::class_<DirectTypeReport>(m, "DirectTypeReport")
        .def_readonly("ok", &DirectTypeReport::ok)
        .def_readonly("complete", &DirectTypeReport::complete)
        .def_readonly("witness_node", &DirectTypeReport::witness_node)
        .def_readonly("witness_clique", &DirectTypeReport::witness_clique);

    m.def("ldt_evaluate", &ldt_evaluate, py::arg("t"), py::arg("c"));
    m.def("is_direct_type", &is_direct_type, py::arg("t"), py::arg("x_set"),
          py::arg("skeleton"), py::arg("max_cliques") = std::size_t{1} << 20);
}
