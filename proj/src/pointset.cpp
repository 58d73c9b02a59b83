#include "polycomb/pointset.hpp"

#include <algorithm>
#include <string>

namespace polycomb {

PointSet::PointSet(std::size_t d, std::vector<std::vector<Int>> pts)
    : dim(d), points(std::move(pts)) {
    if (dim == 0) throw ValidationError("point set dimension must be >= 1");
    for (const auto& p : points)
        if (p.size() != dim)
            throw ValidationError("point has " + std::to_string(p.size()) +
                                  " coordinates, expected " + std::to_string(dim));
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ValidationError("point set contains duplicate points");
}

GSpec GSpec::affine(Int a, Int b) {
    if (a < 1) throw ValidationError("affine index map needs a >= 1 to be increasing");
    if (b < 0) throw ValidationError("affine index map needs b >= 0");
    return GSpec{std::move(a), std::move(b)};
}

std::size_t minimal_valid_k_exponent(std::size_t d) {
    if (d == 0) throw ValidationError("perturbation dimension must be >= 1");
    const Int bound = int_pow(pow2(d) - 1, d * (d + 1) / 2);
    return bit_length(bound);  // smallest k with 2^k > bound
}

PerturbParams PerturbParams::for_dim(std::size_t d) {
    if (d == 0) throw ValidationError("perturbation dimension must be >= 1");
    return PerturbParams{d, d * d * d};
}

PerturbParams PerturbParams::minimal_valid(std::size_t d) {
    return PerturbParams{d, minimal_valid_k_exponent(d)};
}

bool PerturbParams::is_valid() const {
    if (dim == 0) return false;
    return k_exponent >= minimal_valid_k_exponent(dim);
}

void PerturbParams::validate() const {
    if (dim == 0) throw ValidationError("perturbation dimension must be >= 1");
    if (!is_valid())
        throw ValidationError(
            "k_exponent " + std::to_string(k_exponent) + " too small for dimension " +
            std::to_string(dim) + ": need 2^k > (2^d - 1)^(d(d+1)/2), i.e. k >= " +
            std::to_string(minimal_valid_k_exponent(dim)));
}

std::size_t encoding_size(const PointSet& x_set, const std::optional<std::vector<Int>>& c) {
    if (c && c->size() != x_set.dim)
        throw ValidationError("objective length " + std::to_string(c->size()) +
                              " does not match dimension " + std::to_string(x_set.dim));
    if (x_set.points.empty() && !c)
        throw ValidationError("encoding size of an empty point set needs an objective");
    Int m = 0;
    for (const auto& p : x_set.points)
        for (const auto& v : p) m = std::max(m, Int(boost::multiprecision::abs(v)));
    if (c)
        for (const auto& v : *c) m = std::max(m, Int(boost::multiprecision::abs(v)));
    return m == 0 ? 1 : bit_length(m);
}

PointSet gen_cyclic(std::size_t d, std::size_t n_points, const GSpec& g) {
    if (d == 0) throw ValidationError("moment-curve dimension must be >= 1");
    std::vector<std::vector<Int>> pts;
    pts.reserve(n_points);
    for (std::size_t i = 1; i <= n_points; ++i) {
        const Int t = g(i);
        std::vector<Int> p(d);
        Int power = 1;
        for (std::size_t j = 0; j < d; ++j) {
            power *= t;
            p[j] = power;
        }
        pts.push_back(std::move(p));
    }
    return PointSet(d, std::move(pts));
}

Int point_number(const std::vector<Int>& x) {
    Int n = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != 0 && x[i] != 1)
            throw ValidationError("point number is defined on 0/1 vectors only");
        if (x[i] == 1) n += pow2(i);
    }
    return n;
}

std::vector<Int> moment_vector(const std::vector<Int>& x) {
    const Int n = point_number(x);
    std::vector<Int> m(x.size());
    Int power = 1;
    for (std::size_t j = 0; j < x.size(); ++j) {
        power *= n;
        m[j] = power;
    }
    return m;
}

PointSet cyclic_perturb(const PointSet& x_set, const std::optional<PerturbParams>& params) {
    const PerturbParams p = params.value_or(PerturbParams::for_dim(x_set.dim));
    p.validate();
    if (p.dim != x_set.dim)
        throw ValidationError("perturbation parameters are for dimension " +
                              std::to_string(p.dim) + ", point set has dimension " +
                              std::to_string(x_set.dim));
    const Int K = p.K();
    std::vector<std::vector<Int>> out;
    out.reserve(x_set.size());
    for (const auto& x : x_set.points) {
        const std::vector<Int> m = moment_vector(x);  // validates 0/1 entries
        std::vector<Int> y(x_set.dim);
        for (std::size_t j = 0; j < x_set.dim; ++j) y[j] = K * x[j] + m[j];
        out.push_back(std::move(y));
    }
    return PointSet(x_set.dim, std::move(out));
}

Int round_perturbed_value(const Int& v, const PerturbParams& params) {
    params.validate();
    const Int K = params.K();
    const Int a = boost::multiprecision::abs(v);
    // floor((2|v| + K - 1) / (2K)) rounds |v|/K to the nearest integer with
    // exact halves going down, i.e. toward zero once the sign is restored.
    const Int q = (2 * a + K - 1) / (2 * K);
    return v < 0 ? Int(-q) : q;
}

PointSet gen_bqp(std::size_t n, std::size_t max_n) {
    if (n == 0) throw ValidationError("quadratic lift needs n >= 1");
    if (n > max_n)
        throw ResourceError("quadratic lift has 2^" + std::to_string(n) +
                            " points, above the cap of n = " + std::to_string(max_n));
    const std::size_t d = n * (n + 1) / 2;
    std::vector<std::vector<Int>> pts;
    pts.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Int> p;
        p.reserve(d);
        for (std::size_t i = 0; i < n; ++i) p.emplace_back((mask >> i) & 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                p.emplace_back(((mask >> i) & (mask >> j)) & 1);
        pts.push_back(std::move(p));
    }
    return PointSet(d, std::move(pts));
}

std::vector<Int> clique_objective(const Graph& g) {
    if (g.n == 0) throw ValidationError("clique objective needs a non-empty graph");
    std::vector<Int> c;
    c.reserve(g.n * (g.n + 1) / 2);
    for (std::size_t i = 0; i < g.n; ++i) c.emplace_back(1);
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = i + 1; j < g.n; ++j) c.emplace_back(g.adjacent(i, j) ? 0 : -2);
    return c;
}

PointSet gen_simplex_extension(std::size_t d) {
    if (d < 3) throw ValidationError("glued truncated-cube construction needs d >= 3");

    // Upper-piece vertices as exact rationals, groups k = 1..d; within a group
    // the k-1 "truncated" coordinate positions run through all (k-1)-subsets
    // of {0..d-1} in lexicographic order.
    std::vector<std::vector<Rat>> upper;
    std::vector<bool> subset(d);
    for (std::size_t k = 1; k <= d; ++k) {
        const Rat frac(Int(d - k), Int(d - k + 1));
        std::fill(subset.begin(), subset.end(), false);
        std::fill(subset.begin(), subset.begin() + static_cast<long>(k - 1), true);
        // Lexicographic enumeration of position subsets via prev_permutation
        // on the descending indicator vector.
        do {
            std::vector<Rat> v(d, Rat(1));
            for (std::size_t i = 0; i < d; ++i)
                if (subset[i]) v[i] = frac;
            upper.push_back(std::move(v));
        } while (std::prev_permutation(subset.begin(), subset.end()));
    }

    const Int L = Int(d) * factorial(d - 1);
    std::vector<std::vector<Int>> pts;
    auto scaled = [&](const std::vector<Rat>& v) {
        std::vector<Int> p(d);
        for (std::size_t i = 0; i < d; ++i) {
            const Rat s = v[i] * L;
            if (denominator(s) != 1)
                throw ValidationError("internal: scaling by L did not clear denominators");
            p[i] = numerator(s);
        }
        return p;
    };
    for (const auto& v : upper) pts.push_back(scaled(v));
    // Mirror across sum(x) = 1; vertices already on the hyperplane (the basis
    // vectors, coordinate sum exactly 1) are fixed points and appear once.
    for (const auto& v : upper) {
        Rat s = 0;
        for (const auto& x : v) s += x;
        if (s == 1) continue;
        const Rat shift = Rat(2) * (s - 1) / Int(d);
        std::vector<Rat> w(d);
        for (std::size_t i = 0; i < d; ++i) w[i] = v[i] - shift;
        pts.push_back(scaled(w));
    }
    return PointSet(d, std::move(pts));
}

}  // namespace polycomb
