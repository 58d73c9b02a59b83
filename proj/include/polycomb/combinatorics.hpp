// Combinatorial complexity measures: clique number, boolean rectangle covers
// of 0/1 matrices (exact minimum, greedy upper bound, fooling-set lower
// bound), and linear decision trees over point sets together with the
// "direct type" structural test that relates tree shape to hull cliques.

#ifndef POLYCOMB_COMBINATORICS_HPP
#define POLYCOMB_COMBINATORICS_HPP

#include "polycomb/boolmatrix.hpp"
#include "polycomb/exact.hpp"
#include "polycomb/graph.hpp"
#include "polycomb/pointset.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace polycomb {

// Size of the largest clique, by branch-and-bound with pivoting.
// Throws ResourceError when the vertex count exceeds the cap.
std::size_t clique_number(const Graph& g, std::size_t max_vertices = 64);

// An all-ones submatrix given by row and column index sets (sorted).
struct Rectangle {
    std::vector<std::size_t> row_set;
    std::vector<std::size_t> col_set;

    bool operator==(const Rectangle& other) const = default;
};

// All maximal 1-rectangles of the matrix (closure family of row supports),
// sorted canonically. Every 1-cell lies in at least one of them.
std::vector<Rectangle> maximal_rectangles(const BoolMatrix& m);

// Minimum number of (maximal) 1-rectangles covering every 1-cell, by set-cover
// branch-and-bound seeded with the greedy solution and pruned with the
// fooling-set bound. Throws ResourceError when the matrix has more than
// max_cells 1-cells (default 40). The all-zero matrix needs 0 rectangles.
std::size_t rc_exact(const BoolMatrix& m, std::size_t max_cells = 40);

// Greedy cover size: repeatedly take the maximal rectangle covering the most
// uncovered 1-cells (ties: first in canonical rectangle order). No cap.
std::size_t rc_greedy(const BoolMatrix& m);

// Largest set of 1-cells that pairwise cannot share a 1-rectangle
// (cells (i,j), (k,l) are incompatible iff m[i][l] = 0 or m[k][j] = 0).
// A lower bound for rc_exact. Same cell cap as rc_exact.
std::size_t fooling_set_bound(const BoolMatrix& m, std::size_t max_cells = 40);

// A linear decision tree over points in Z^d: internal nodes test
// a^T c + b > 0 against a query objective c, leaves name a point index.
// Node and leaf ids share one namespace; the structure must be a tree
// (every non-root id referenced exactly once, all ids reachable).
struct LinearDecisionTree {
    struct Node {
        std::vector<Int> a;
        Int b;
        std::size_t pos = 0;  // id of the child taken when a^T c + b > 0
        std::size_t neg = 0;
    };
    struct Leaf {
        std::size_t label = 0;  // point index
    };

    std::map<std::size_t, Node> nodes;
    std::map<std::size_t, Leaf> leaves;
    std::size_t root = 0;

    // Structural validation; label range is checked against n_points when
    // given. Throws ValidationError on malformed trees.
    void validate(std::optional<std::size_t> n_points = std::nullopt,
                  std::optional<std::size_t> dim = std::nullopt) const;

    // Longest root-to-leaf path measured in internal-node tests.
    std::size_t depth() const;
};

// Walks the tree on objective c and returns the reached leaf's label.
std::size_t ldt_evaluate(const LinearDecisionTree& t, const std::vector<Int>& c);

struct DirectTypeReport {
    bool ok = true;
    bool complete = true;  // false when only maximal cliques were enumerated
    std::optional<std::size_t> witness_node;      // set when ok == false
    std::vector<std::size_t> witness_clique;      // set when ok == false

    bool operator==(const DirectTypeReport& other) const = default;
};

// Tests the direct-type condition: for every internal node f and every clique
// Y of the skeleton, |X_f ∩ Y| - 1 <= max(|X_f+ ∩ Y|, |X_f- ∩ Y|), where X_f
// is the set of leaf labels under f and X_f+/- those under its children.
// Enumerates all cliques up to max_cliques (default 2^20); if that cap is hit
// it falls back to maximal cliques only and reports complete = false.
DirectTypeReport is_direct_type(const LinearDecisionTree& t, const PointSet& x_set,
                                const Graph& skeleton,
                                std::size_t max_cliques = std::size_t{1} << 20);

}  // namespace polycomb

#endif
