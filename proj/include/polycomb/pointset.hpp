// Integer point sets in Z^d and the generators for the structured families the
// library studies:
//
//  * moment-curve ("cyclic") point sets  (g(i), g(i)^2, ..., g(i)^d),
//  * 0/1 quadratic-lift sets whose coordinates are x_ij = x_ii * x_jj,
//  * the cyclic 0/1 perturbation y = K*x + M(x) that makes hulls simplicial
//    while moving each objective value by less than 1/2 after rescaling,
//  * a glued pair of truncated-cube pieces whose skeleton is triangle-free.

#ifndef POLYCOMB_POINTSET_HPP
#define POLYCOMB_POINTSET_HPP

#include "polycomb/exact.hpp"
#include "polycomb/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace polycomb {

// An ordered list of distinct points in Z^dim. Order is deterministic: each
// generator documents the order it emits, and operations that filter a set
// (extreme_points) keep the relative order of the input.
struct PointSet {
    std::size_t dim = 0;
    std::vector<std::vector<Int>> points;

    PointSet() = default;
    PointSet(std::size_t d, std::vector<std::vector<Int>> pts);

    std::size_t size() const { return points.size(); }
    bool operator==(const PointSet& other) const = default;
};

// Index-to-parameter map for moment-curve generators: g(i) = a*i + b with
// a >= 1, b >= 0, so g is strictly increasing on i = 1, 2, ...
// identity() is the a = 1, b = 0 special case.
struct GSpec {
    Int a = 1;
    Int b = 0;

    static GSpec identity() { return GSpec{1, 0}; }
    static GSpec affine(Int a, Int b);

    Int operator()(std::size_t i) const { return a * static_cast<unsigned long>(i) + b; }
    bool is_identity() const { return a == 1 && b == 0; }
};

// Parameters of the cyclic 0/1 perturbation. K = 2^k_exponent must satisfy
// 2^k_exponent > (2^d - 1)^(d(d+1)/2); that margin is exactly what makes every
// (d+1)-subset of a perturbed 0/1 set affinely independent (simplicial hulls).
struct PerturbParams {
    std::size_t dim = 0;
    std::size_t k_exponent = 0;

    // Default choice K = 2^(d^3).
    static PerturbParams for_dim(std::size_t d);
    // Smallest valid exponent for dimension d.
    static PerturbParams minimal_valid(std::size_t d);

    Int K() const { return pow2(k_exponent); }
    bool is_valid() const;
    // Throws ValidationError (with the failed inequality) when invalid.
    void validate() const;
};

// Smallest k with 2^k > (2^d - 1)^(d(d+1)/2).
std::size_t minimal_valid_k_exponent(std::size_t d);

// Bit length of the largest absolute coordinate over the set (and over c, if
// given): ceil(log2(m+1)) with m = 0 mapping to 1. Throws ValidationError for
// an empty set with no c, or when c's length differs from dim.
std::size_t encoding_size(const PointSet& x_set,
                          const std::optional<std::vector<Int>>& c = std::nullopt);

// Moment-curve set { (t, t^2, ..., t^d) : t = g(i), i = 1..n_points },
// emitted in order of i. Throws ValidationError for d = 0.
PointSet gen_cyclic(std::size_t d, std::size_t n_points, const GSpec& g = GSpec::identity());

// The number whose binary digits are the 0/1 vector x (x_1 is the least
// significant bit): n(x) = sum 2^(i-1) x_i. Throws ValidationError if any
// coordinate is not 0 or 1.
Int point_number(const std::vector<Int>& x);

// M(x) = (n(x), n(x)^2, ..., n(x)^d) for a 0/1 vector x of length d.
std::vector<Int> moment_vector(const std::vector<Int>& x);

// The cyclic perturbation y = K*x + M(x), applied pointwise in input order
// (bijective: point i of the result is the image of point i of the input).
// All points must be 0/1 vectors; params must be valid and match dimensions.
// Defaults to PerturbParams::for_dim(x_set.dim).
PointSet cyclic_perturb(const PointSet& x_set,
                        const std::optional<PerturbParams>& params = std::nullopt);

// Rounds v / K to the nearest integer, ties toward zero. Used to read an
// unperturbed objective value back off a perturbed optimum.
Int round_perturbed_value(const Int& v, const PerturbParams& params);

// 0/1 solution set of the unconstrained quadratic program in n binary
// variables: dimension d = n(n+1)/2, coordinates ordered as the n diagonal
// entries x_11..x_nn followed by the strict upper triangle (i,j), i < j, in
// lexicographic order, with x_ij = x_ii * x_jj. One point per assignment of
// the diagonal, in increasing order of the assignment's binary counter
// (x_11 least significant). Throws ResourceError when n exceeds the cap.
PointSet gen_bqp(std::size_t n, std::size_t max_n = 12);

// Objective vector over gen_bqp(n) coordinates whose maximum over the lift
// equals the clique number of g: diagonal weights 1, edge weights 0,
// non-edge weights -2.
std::vector<Int> clique_objective(const Graph& g);

// Integer-scaled vertex set of the centrally-glued truncated-cube pair in
// R^d (d >= 3): the "upper" piece has, for k = 1..d, C(d, k-1) vertices with
// k-1 coordinates equal to (d-k)/(d-k+1) and d-k+1 coordinates equal to 1
// (group k = d being the d unit basis vectors, which lie on the gluing
// hyperplane sum(x) = 1); the lower piece is its mirror image across that
// hyperplane (x -> x - (2(sum(x)-1)/d) * ones). Every coordinate is scaled by
// L = d * (d-1)! so the output is integral. Emits the upper piece first
// (groups in order k = 1..d, positions lexicographic), then the mirrored
// off-hyperplane vertices in the same traversal order. Total count is
// 2^(d+1) - 2 - d.
PointSet gen_simplex_extension(std::size_t d);

}  // namespace polycomb

#endif
