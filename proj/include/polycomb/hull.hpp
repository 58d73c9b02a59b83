// Convex hull combinatorics over exact integer points: extreme points, facet
// enumeration, vertex/facet incidence, face lattice, graph (1-skeleton) and
// neighborliness. Everything is exact; facet candidates are enumerated by
// brute force over d-subsets, which is the right tool at the scales this
// library targets (dozens of vertices, dimension <= 8).

#ifndef POLYCOMB_HULL_HPP
#define POLYCOMB_HULL_HPP

#include "polycomb/boolmatrix.hpp"
#include "polycomb/graph.hpp"
#include "polycomb/pointset.hpp"

#include <cstddef>
#include <vector>

namespace polycomb {

// Resource caps for hull operations. Lattice-flavored operations (face
// lattice, skeleton, neighborliness) refuse vertex sets larger than
// max_lattice_vertices; facet enumeration refuses dimensions above
// max_facet_dim. Both are configuration, not hard limits of the algorithms.
struct HullConfig {
    std::size_t max_lattice_vertices = 24;
    std::size_t max_facet_dim = 8;
};

// One facet of a full-dimensional hull: a primitive outward normal (gcd of
// entries 1), its offset, and the sorted indices of the incident points, so
// that normal^T x <= offset holds for every point with equality exactly on
// vertex_set.
struct Facet {
    std::vector<Int> normal;
    Int offset;
    std::vector<std::size_t> vertex_set;

    bool operator==(const Facet& other) const = default;
};

// Vertices plus the full facet list and the vertex-in-facet incidence matrix
// (rows = vertices, columns = facets, in the canonical facet order).
struct IncidenceStructure {
    PointSet point_set;
    std::vector<Facet> facets;
    BoolMatrix incidence;
};

// A face is identified by its (sorted) vertex index set together with its
// affine dimension. The lattice lists all proper nonempty faces, sorted by
// (dimension, vertex set).
struct FaceLattice {
    struct Face {
        std::vector<std::size_t> vertex_set;
        std::size_t dim;
        bool operator==(const Face& other) const = default;
    };
    std::vector<Face> faces;
};

// Affine rank of the set (dimension of its affine hull).
std::size_t affine_rank(const PointSet& x_set);

// Exact convex-combination membership test: is p in conv(set)? Decided by
// rational phase-1 feasibility with Bland's rule (termination guaranteed).
bool in_convex_hull(const std::vector<Int>& p, const PointSet& set);

// The subset of points that are extreme (not in the hull of the others),
// in input order.
PointSet extreme_points(const PointSet& x_set);

// Facet enumeration for a full-dimensional set of extreme points. Throws
// ValidationError naming a witness when some input point is not extreme, or
// reporting the affine rank when the set is not full-dimensional; throws
// ResourceError above the dimension cap. Facets are sorted by vertex set.
IncidenceStructure facets(const PointSet& x_set, const HullConfig& cfg = {});

// Complement of the incidence matrix (vertex NOT on facet).
BoolMatrix nonincidence_matrix(const IncidenceStructure& inc);

// True when every facet has exactly dim vertices.
bool is_simplicial(const IncidenceStructure& inc);

// All proper nonempty faces: intersection closure of facet vertex sets plus
// singletons, each annotated with its affine dimension.
FaceLattice face_lattice(const IncidenceStructure& inc, const HullConfig& cfg = {});

// Graph on vertex indices with an edge per 1-dimensional face. (For a
// 1-dimensional hull the segment itself is the edge.)
Graph skeleton_graph(const IncidenceStructure& inc, const HullConfig& cfg = {});

// Largest k such that every k-subset of vertices is the vertex set of a
// proper face.
std::size_t neighborliness(const IncidenceStructure& inc, const HullConfig& cfg = {});

}  // namespace polycomb

#endif
