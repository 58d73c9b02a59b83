// Linear optimization over finite point sets, three ways:
//
//  * brute_max — scan every point (the reference oracle),
//  * cyclic_max — maximize c_1 t + ... + c_d t^d over the moment-curve set
//    without touching most points: maintain segments of [1..N] on which
//    successive derivatives keep a (weak) sign, split each segment by binary
//    search, and only ever evaluate at segment endpoints. The evaluation
//    counter is part of the result and stays within
//    2 * d^2 * ceil(log2 N) + 4 * d.
//  * solve_clique_via_bqp — clique number through the quadratic 0/1 lift,
//    optionally through the cyclic perturbation with rounding recovery.

#ifndef POLYCOMB_OPTIMIZE_HPP
#define POLYCOMB_OPTIMIZE_HPP

#include "polycomb/graph.hpp"
#include "polycomb/pointset.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace polycomb {

struct OptimizationResult {
    Int value;
    std::vector<std::size_t> argmax;  // 0-based point indices, ascending
    std::size_t evaluations = 0;

    bool operator==(const OptimizationResult& other) const = default;
};

// A run of consecutive indices lo..hi (1-based, inclusive) of [1..N] on which
// the tracked derivative keeps the stated weak sign on the whole real
// interval [g(lo), g(hi)]. An identically-zero derivative counts as nonneg.
struct SignSegment {
    std::size_t lo = 0;
    std::size_t hi = 0;
    enum class Sign { nonneg, nonpos } sign = Sign::nonneg;

    bool operator==(const SignSegment& other) const = default;
};

// cyclic_max plus the final first-derivative segments, for callers that want
// to inspect or validate the segment structure.
struct CyclicMaxTrace {
    OptimizationResult result;
    std::vector<SignSegment> final_segments;  // signs of f' after all splits
};

// Exhaustive maximum of c^T x over the set; argmax lists all maximizers in
// point order; evaluations = number of points.
OptimizationResult brute_max(const PointSet& x_set, const std::vector<Int>& c);

// Maximum of f(t) = c_1 t + ... + c_d t^d over t = g(1), ..., g(n_points),
// reported as indices into the gen_cyclic(d, n_points, g) point order.
// If c is identically zero the result is value 0 at the first index
// (smallest-t tie-break). argmax lists every maximizing index.
OptimizationResult cyclic_max(std::size_t d, std::size_t n_points,
                              const std::vector<Int>& c,
                              const GSpec& g = GSpec::identity());
CyclicMaxTrace cyclic_max_traced(std::size_t d, std::size_t n_points,
                                 const std::vector<Int>& c,
                                 const GSpec& g = GSpec::identity());

// Is c in the normal cone of the point at position idx, i.e. does idx
// maximize c^T x over the set?
bool is_in_cone(const PointSet& x_set, std::size_t idx, const std::vector<Int>& c);

// Clique number of g computed by maximizing the clique objective over the
// quadratic 0/1 lift; with use_perturbation the lift is first perturbed
// (params default to the minimal valid exponent for the lifted dimension) and
// the optimum is recovered by rounding v / K to the nearest integer.
Int solve_clique_via_bqp(const Graph& g, bool use_perturbation,
                         const std::optional<PerturbParams>& params = std::nullopt,
                         std::size_t max_n = 12);

}  // namespace polycomb

#endif
