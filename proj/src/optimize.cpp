#include "polycomb/optimize.hpp"

#include "polycomb/poly.hpp"

#include <algorithm>
#include <string>

namespace polycomb {

OptimizationResult brute_max(const PointSet& x_set, const std::vector<Int>& c) {
    if (c.size() != x_set.dim)
        throw ValidationError("objective length does not match dimension");
    if (x_set.points.empty())
        throw ValidationError("cannot maximize over an empty point set");
    OptimizationResult res;
    res.evaluations = x_set.size();
    for (std::size_t i = 0; i < x_set.size(); ++i) {
        Int v = 0;
        for (std::size_t j = 0; j < x_set.dim; ++j) v += c[j] * x_set.points[i][j];
        if (i == 0 || v > res.value) {
            res.value = v;
            res.argmax.assign(1, i);
        } else if (v == res.value) {
            res.argmax.push_back(i);
        }
    }
    return res;
}

namespace {

struct Evaluator {
    const GSpec& g;
    std::size_t evaluations = 0;

    Int operator()(const IntPoly& p, std::size_t i) {
        ++evaluations;
        return poly_eval(p, g(i));
    }
};

}  // namespace

CyclicMaxTrace cyclic_max_traced(std::size_t d, std::size_t n_points,
                                 const std::vector<Int>& c, const GSpec& g) {
    if (d == 0) throw ValidationError("moment-curve dimension must be >= 1");
    if (c.size() != d)
        throw ValidationError("objective length " + std::to_string(c.size()) +
                              " does not match dimension " + std::to_string(d));
    if (n_points == 0) throw ValidationError("need at least one index");

    // f(t) = c_1 t + ... + c_d t^d  (zero constant term).
    IntPoly f;
    f.coeffs.assign(d + 1, Int(0));
    for (std::size_t j = 0; j < d; ++j) f.coeffs[j + 1] = c[j];
    const int deg = f.degree();

    CyclicMaxTrace out;
    Evaluator eval{g};

    if (deg <= 0) {  // identically zero objective: value 0 at the smallest t
        eval(f, 1);
        out.result.value = 0;
        out.result.argmax = {0};
        out.result.evaluations = eval.evaluations;
        out.final_segments = {{1, n_points, SignSegment::Sign::nonneg}};
        return out;
    }
    const std::size_t D = static_cast<std::size_t>(deg);

    // Derivatives f^(k) for k = 1..D-1 (f^(D) is a constant whose sign is the
    // sign of the leading coefficient — no evaluation needed).
    std::vector<IntPoly> deriv(D);  // deriv[k] = f^(k), k >= 1 used
    for (std::size_t k = 1; k < D; ++k) deriv[k] = poly_derivative(f, k);

    std::vector<SignSegment> segs{
        {1, n_points,
         c[D - 1] > 0 ? SignSegment::Sign::nonneg : SignSegment::Sign::nonpos}};

    // Refine from level D-1 down to 1. Entering level k, each segment carries
    // the weak sign of f^(k+1) on its real interval, so f^(k) is monotone
    // there: binary search locates the single sign change (if any).
    for (std::size_t k = D - 1; k >= 1; --k) {
        const IntPoly& p = deriv[k];
        std::vector<SignSegment> next;
        next.reserve(segs.size() + 1);
        for (const SignSegment& s : segs) {
            const bool nondecreasing = s.sign == SignSegment::Sign::nonneg;
            if (s.lo == s.hi) {
                const Int v = eval(p, s.lo);
                next.push_back({s.lo, s.hi,
                                v >= 0 ? SignSegment::Sign::nonneg : SignSegment::Sign::nonpos});
                continue;
            }
            const Int vlo = eval(p, s.lo);
            const Int vhi = eval(p, s.hi);
            if (nondecreasing) {
                if (vlo >= 0) {  // nonnegative from the start
                    next.push_back({s.lo, s.hi, SignSegment::Sign::nonneg});
                    continue;
                }
                if (vhi <= 0) {  // never becomes positive
                    next.push_back({s.lo, s.hi, SignSegment::Sign::nonpos});
                    continue;
                }
                // vlo < 0 < vhi: find the largest index with f^(k) <= 0.
                std::size_t a = s.lo, b = s.hi;
                while (b - a > 1) {
                    const std::size_t mid = a + (b - a) / 2;
                    if (eval(p, mid) <= 0) a = mid;
                    else b = mid;
                }
                next.push_back({s.lo, a, SignSegment::Sign::nonpos});
                next.push_back({b, s.hi, SignSegment::Sign::nonneg});
            } else {
                if (vlo <= 0) {
                    next.push_back({s.lo, s.hi, SignSegment::Sign::nonpos});
                    continue;
                }
                if (vhi >= 0) {
                    next.push_back({s.lo, s.hi, SignSegment::Sign::nonneg});
                    continue;
                }
                // vlo > 0 > vhi: find the largest index with f^(k) >= 0.
                std::size_t a = s.lo, b = s.hi;
                while (b - a > 1) {
                    const std::size_t mid = a + (b - a) / 2;
                    if (eval(p, mid) >= 0) a = mid;
                    else b = mid;
                }
                next.push_back({s.lo, a, SignSegment::Sign::nonneg});
                next.push_back({b, s.hi, SignSegment::Sign::nonpos});
            }
        }
        segs = std::move(next);
    }

    // f is (weakly) monotone on each final segment, and strictly monotone on
    // its grid points because f' is not identically zero on a nondegenerate
    // interval. The segment maximum therefore sits at one endpoint — hi when
    // f' >= 0, lo when f' <= 0 — and only those endpoints can be global
    // maximizers.
    bool have = false;
    Int best;
    std::vector<std::size_t> arg;  // 1-based indices
    for (const SignSegment& s : segs) {
        const std::size_t i = s.sign == SignSegment::Sign::nonneg ? s.hi : s.lo;
        const Int v = eval(f, i);
        if (!have || v > best) {
            best = v;
            arg.assign(1, i);
            have = true;
        } else if (v == best) {
            arg.push_back(i);
        }
    }
    std::sort(arg.begin(), arg.end());

    out.result.value = best;
    out.result.argmax.reserve(arg.size());
    for (std::size_t i : arg) out.result.argmax.push_back(i - 1);
    out.result.evaluations = eval.evaluations;
    out.final_segments = std::move(segs);
    return out;
}

OptimizationResult cyclic_max(std::size_t d, std::size_t n_points,
                              const std::vector<Int>& c, const GSpec& g) {
    return cyclic_max_traced(d, n_points, c, g).result;
}

bool is_in_cone(const PointSet& x_set, std::size_t idx, const std::vector<Int>& c) {
    if (idx >= x_set.size()) throw ValidationError("point index out of range");
    if (c.size() != x_set.dim)
        throw ValidationError("objective length does not match dimension");
    Int at = 0;
    for (std::size_t j = 0; j < x_set.dim; ++j) at += c[j] * x_set.points[idx][j];
    for (const auto& p : x_set.points) {
        Int v = 0;
        for (std::size_t j = 0; j < x_set.dim; ++j) v += c[j] * p[j];
        if (v > at) return false;
    }
    return true;
}

Int solve_clique_via_bqp(const Graph& g, bool use_perturbation,
                         const std::optional<PerturbParams>& params, std::size_t max_n) {
    if (g.n == 0) throw ValidationError("clique number needs a non-empty graph");
    const PointSet lift = gen_bqp(g.n, max_n);
    const std::vector<Int> c = clique_objective(g);
    if (!use_perturbation) return brute_max(lift, c).value;

    const PerturbParams p = params.value_or(PerturbParams::minimal_valid(lift.dim));
    const PointSet pert = cyclic_perturb(lift, p);
    const OptimizationResult r = brute_max(pert, c);
    return round_perturbed_value(r.value, p);
}

}  // namespace polycomb
