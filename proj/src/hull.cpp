#include "polycomb/hull.hpp"

#include "polycomb/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace polycomb {

std::size_t affine_rank(const PointSet& x_set) {
    if (x_set.points.size() <= 1) return 0;
    IntMatrix diff(x_set.points.size() - 1, x_set.dim);
    for (std::size_t i = 1; i < x_set.points.size(); ++i)
        for (std::size_t j = 0; j < x_set.dim; ++j)
            diff.at(i - 1, j) = x_set.points[i][j] - x_set.points[0][j];
    return rank(diff);
}

// ─── Exact rational feasibility (phase-1 simplex, Bland's rule) ─────────────

namespace {

// Is there lambda >= 0 with sum lambda_i = 1 and sum lambda_i s_i = p?
// Minimizes the sum of artificial variables; the optimum is 0 iff feasible.
// Bland's rule (smallest entering index, smallest-index leaving tie-break)
// guarantees termination.
bool convex_feasible(const std::vector<Int>& p, const PointSet& set) {
    const std::size_t d = set.dim;
    const std::size_t m = set.size();
    if (m == 0) return false;
    const std::size_t rows = d + 1;
    const std::size_t cols = m + rows;  // lambda columns, then artificials

    std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(cols + 1, Rat(0)));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t i = 0; i < m; ++i) t[r][i] = set.points[i][r];
        t[r][cols] = p[r];
    }
    for (std::size_t i = 0; i < m; ++i) t[d][i] = 1;
    t[d][cols] = 1;

    for (std::size_t r = 0; r < rows; ++r) {
        if (t[r][cols] < 0)
            for (auto& v : t[r]) v = -v;
        t[r][m + r] = 1;
    }

    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) basis[r] = m + r;

    // Reduced costs for minimizing the artificial sum: z_j = c_j - sum_r t[r][j]
    // while every basic variable is an artificial (cost 1).
    std::vector<Rat> z(cols, Rat(0));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t r = 0; r < rows; ++r) z[j] -= t[r][j];

    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (z[j] < 0) { enter = j; break; }
        if (enter == cols) break;

        std::size_t leave = rows;
        Rat best;
        for (std::size_t r = 0; r < rows; ++r) {
            if (t[r][enter] <= 0) continue;
            Rat ratio = t[r][cols] / t[r][enter];
            if (leave == rows || ratio < best ||
                (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == rows) break;  // unbounded cannot happen here, but be safe

        const Rat piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            const Rat f = t[r][enter];
            for (std::size_t j = 0; j <= cols; ++j) t[r][j] -= f * t[leave][j];
        }
        const Rat fz = z[enter];
        if (fz != 0)
            for (std::size_t j = 0; j < cols; ++j) z[j] -= fz * t[leave][j];
        basis[leave] = enter;
    }

    Rat artificial_sum = 0;
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] >= m) artificial_sum += t[r][cols];
    return artificial_sum == 0;
}

}  // namespace

bool in_convex_hull(const std::vector<Int>& p, const PointSet& set) {
    if (p.size() != set.dim)
        throw ValidationError("point dimension does not match set dimension");
    return convex_feasible(p, set);
}

PointSet extreme_points(const PointSet& x_set) {
    std::vector<std::vector<Int>> kept;
    for (std::size_t i = 0; i < x_set.size(); ++i) {
        PointSet others(x_set.dim, [&] {
            std::vector<std::vector<Int>> rest;
            rest.reserve(x_set.size() - 1);
            for (std::size_t j = 0; j < x_set.size(); ++j)
                if (j != i) rest.push_back(x_set.points[j]);
            return rest;
        }());
        if (!convex_feasible(x_set.points[i], others)) kept.push_back(x_set.points[i]);
    }
    return PointSet(x_set.dim, std::move(kept));
}

// ─── Facet enumeration ──────────────────────────────────────────────────────

namespace {

// Machine-word fast path: valid when every intermediate value (minors of the
// difference matrix, and dot products against candidate normals) provably
// fits in int64. The bound is computed once per call from Hadamard's
// inequality; the exact big-integer path is the reference behaviour.
struct SmallPath {
    bool usable = false;
    std::vector<std::vector<std::int64_t>> pts;
};

SmallPath small_path_setup(const PointSet& x) {
    SmallPath sp;
    const std::size_t d = x.dim;
    Int coord_bound = 0;
    for (const auto& p : x.points)
        for (const auto& v : p) coord_bound = std::max(coord_bound, Int(boost::multiprecision::abs(v)));
    // Minors of the (d-1) x d difference matrix: Hadamard gives
    // |minor_k| <= k^(k/2) * (2*coord_bound)^k for k <= d-1.
    Int minor_bound = 1;
    for (std::size_t k = 1; k + 1 <= d; ++k) {
        Int h = int_pow(Int(k), (k + 1) / 2) * int_pow(2 * coord_bound, k);
        minor_bound = std::max(minor_bound, h);
    }
    const Int dot_bound = 2 * Int(d) * minor_bound * std::max(coord_bound, Int(1));
    const Int limit = pow2(62);
    if (minor_bound >= limit || dot_bound >= limit) return sp;
    sp.usable = true;
    sp.pts.resize(x.size(), std::vector<std::int64_t>(d));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < d; ++j)
            sp.pts[i][j] = x.points[i][j].convert_to<std::int64_t>();
    return sp;
}

// Fraction-free Bareiss determinant on a small square int64 matrix
// (entries bounded so that no intermediate overflows).
std::int64_t det_i64(std::vector<std::int64_t>& m, std::size_t n) {
    std::int64_t prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv * n + k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[k * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
            m[i * n + k] = 0;
        }
        prev = m[k * n + k];
    }
    return n == 0 ? 1 : (sign > 0 ? m[n * n - 1] : -m[n * n - 1]);
}

template <typename Input, typename Value>
struct CandidateOps;

// Generic candidate evaluation: compute the generalized cross product of the
// d-1 difference rows, orient it outward, gcd-reduce, and collect incident
// vertices. Value is either Int or int64.
template <typename Value, typename GetCoord, typename DetFn>
bool evaluate_candidate(const std::vector<std::size_t>& idx, std::size_t d,
                        std::size_t npts, GetCoord coord, DetFn detfn,
                        std::vector<Value>& normal_out, Value& offset_out) {
    // Difference rows relative to the first chosen point.
    std::vector<Value> diff((d - 1) * d);
    for (std::size_t r = 1; r < d; ++r)
        for (std::size_t j = 0; j < d; ++j)
            diff[(r - 1) * d + j] = coord(idx[r], j) - coord(idx[0], j);

    std::vector<Value> normal(d);
    std::vector<Value> minor((d - 1) * (d - 1));
    bool nonzero = false;
    for (std::size_t skip = 0; skip < d; ++skip) {
        for (std::size_t r = 0; r + 1 < d; ++r) {
            std::size_t c = 0;
            for (std::size_t j = 0; j < d; ++j) {
                if (j == skip) continue;
                minor[r * (d - 1) + c] = diff[r * d + j];
                ++c;
            }
        }
        std::vector<Value> work = minor;
        Value dd = detfn(work, d - 1);
        normal[skip] = (skip % 2 == 0) ? dd : Value(-dd);
        if (normal[skip] != 0) nonzero = true;
    }
    if (!nonzero) return false;  // chosen points affinely dependent

    Value offset = 0;
    for (std::size_t j = 0; j < d; ++j) offset += normal[j] * coord(idx[0], j);

    bool above = false, below = false;
    for (std::size_t i = 0; i < npts; ++i) {
        Value dot = 0;
        for (std::size_t j = 0; j < d; ++j) dot += normal[j] * coord(i, j);
        if (dot > offset) above = true;
        else if (dot < offset) below = true;
        if (above && below) return false;  // not a supporting hyperplane
    }
    if (above) {  // orient outward: normal^T x <= offset for all points
        for (auto& v : normal) v = -v;
        offset = -offset;
    }
    normal_out = std::move(normal);
    offset_out = offset;
    return true;
}

}  // namespace

IncidenceStructure facets(const PointSet& x_set, const HullConfig& cfg) {
    const std::size_t d = x_set.dim;
    const std::size_t n = x_set.size();
    if (d > cfg.max_facet_dim)
        throw ResourceError("facet enumeration capped at dimension " +
                            std::to_string(cfg.max_facet_dim) + ", got " + std::to_string(d));
    if (n < d + 1)
        throw ValidationError("need at least dim+1 points for a full-dimensional hull");

    const std::size_t ar = affine_rank(x_set);
    if (ar != d)
        throw ValidationError("point set is not full-dimensional: affine rank " +
                              std::to_string(ar) + " in dimension " + std::to_string(d));

    const PointSet ext = extreme_points(x_set);
    if (ext.size() != n) {
        for (std::size_t i = 0; i < n; ++i) {
            bool found = false;
            for (const auto& q : ext.points)
                if (q == x_set.points[i]) { found = true; break; }
            if (!found)
                throw ValidationError("point " + std::to_string(i) +
                                      " is not extreme (inside the hull of the others)");
        }
    }

    const SmallPath sp = small_path_setup(x_set);
    std::set<std::pair<std::vector<Int>, Int>> seen;

    std::vector<std::size_t> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    auto advance = [&]() -> bool {
        std::size_t k = d;
        while (k-- > 0) {
            if (idx[k] + (d - k) <= n - 1 + 0) {
                // can advance position k
                ++idx[k];
                for (std::size_t j = k + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    auto record = [&](std::vector<Int> normal, Int offset) {
        Int g = 0;
        for (const auto& v : normal) g = gcd(g, v);
        if (g > 1) {
            for (auto& v : normal) v /= g;
            offset /= g;  // exact: the hyperplane contains integer points
        }
        seen.emplace(std::move(normal), std::move(offset));
    };

    if (n >= d) {
        do {
            if (sp.usable) {
                std::vector<std::int64_t> normal;
                std::int64_t offset;
                if (evaluate_candidate<std::int64_t>(
                        idx, d, n, [&](std::size_t i, std::size_t j) { return sp.pts[i][j]; },
                        [](std::vector<std::int64_t>& m, std::size_t k) { return det_i64(m, k); },
                        normal, offset)) {
                    std::vector<Int> nn(d);
                    for (std::size_t j = 0; j < d; ++j) nn[j] = normal[j];
                    record(std::move(nn), Int(offset));
                }
            } else {
                std::vector<Int> normal;
                Int offset;
                if (evaluate_candidate<Int>(
                        idx, d, n, [&](std::size_t i, std::size_t j) -> const Int& {
                            return x_set.points[i][j];
                        },
                        [](std::vector<Int>& m, std::size_t k) {
                            IntMatrix mm(k, k, std::move(m));
                            return det(mm);
                        },
                        normal, offset)) {
                    record(std::move(normal), std::move(offset));
                }
            }
        } while (advance());
    }

    IncidenceStructure out;
    out.point_set = x_set;
    for (const auto& [normal, offset] : seen) {
        Facet f;
        f.normal = normal;
        f.offset = offset;
        for (std::size_t i = 0; i < n; ++i) {
            Int dot = 0;
            for (std::size_t j = 0; j < d; ++j) dot += normal[j] * x_set.points[i][j];
            if (dot == offset) f.vertex_set.push_back(i);
        }
        out.facets.push_back(std::move(f));
    }
    std::sort(out.facets.begin(), out.facets.end(),
              [](const Facet& a, const Facet& b) { return a.vertex_set < b.vertex_set; });

    out.incidence = BoolMatrix(n, out.facets.size());
    for (std::size_t j = 0; j < out.facets.size(); ++j)
        for (std::size_t v : out.facets[j].vertex_set) out.incidence.at(v, j) = 1;
    return out;
}

BoolMatrix nonincidence_matrix(const IncidenceStructure& inc) {
    return inc.incidence.complement();
}

bool is_simplicial(const IncidenceStructure& inc) {
    for (const auto& f : inc.facets)
        if (f.vertex_set.size() != inc.point_set.dim) return false;
    return true;
}

namespace {

void check_lattice_cap(const IncidenceStructure& inc, const HullConfig& cfg) {
    if (inc.point_set.size() > cfg.max_lattice_vertices)
        throw ResourceError("face lattice capped at " + std::to_string(cfg.max_lattice_vertices) +
                            " vertices, got " + std::to_string(inc.point_set.size()));
}

std::size_t face_dim(const IncidenceStructure& inc, const std::vector<std::size_t>& vs) {
    std::vector<std::vector<Int>> pts;
    pts.reserve(vs.size());
    for (std::size_t v : vs) pts.push_back(inc.point_set.points[v]);
    return affine_rank(PointSet(inc.point_set.dim, std::move(pts)));
}

}  // namespace

FaceLattice face_lattice(const IncidenceStructure& inc, const HullConfig& cfg) {
    check_lattice_cap(inc, cfg);
    std::set<std::vector<std::size_t>> sets;
    for (const auto& f : inc.facets) sets.insert(f.vertex_set);
    for (std::size_t v = 0; v < inc.point_set.size(); ++v) sets.insert({v});

    // Intersection closure: every proper face is an intersection of the facets
    // containing it, so iterating pairwise intersections to a fixpoint yields
    // exactly the proper nonempty faces.
    std::vector<std::vector<std::size_t>> work(sets.begin(), sets.end());
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            std::vector<std::size_t> inter;
            std::set_intersection(work[i].begin(), work[i].end(), work[j].begin(),
                                  work[j].end(), std::back_inserter(inter));
            if (!inter.empty() && sets.insert(inter).second) work.push_back(std::move(inter));
        }
    }

    FaceLattice out;
    for (const auto& vs : sets) out.faces.push_back({vs, face_dim(inc, vs)});
    std::sort(out.faces.begin(), out.faces.end(),
              [](const FaceLattice::Face& a, const FaceLattice::Face& b) {
                  return std::tie(a.dim, a.vertex_set) < std::tie(b.dim, b.vertex_set);
              });
    return out;
}

Graph skeleton_graph(const IncidenceStructure& inc, const HullConfig& cfg) {
    const std::size_t n = inc.point_set.size();
    if (inc.point_set.dim == 1)  // segment: the hull itself is the only edge
        return Graph(n, {{0, 1}});
    const FaceLattice lat = face_lattice(inc, cfg);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& f : lat.faces)
        if (f.dim == 1) edges.emplace_back(f.vertex_set[0], f.vertex_set[1]);
    return Graph(n, std::move(edges));
}

std::size_t neighborliness(const IncidenceStructure& inc, const HullConfig& cfg) {
    const FaceLattice lat = face_lattice(inc, cfg);
    std::set<std::vector<std::size_t>> faces;
    for (const auto& f : lat.faces) faces.insert(f.vertex_set);

    const std::size_t n = inc.point_set.size();
    for (std::size_t k = 1; k + 1 <= n; ++k) {
        // Check every k-subset, bailing out at the first non-face.
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            if (!faces.count(idx)) return k - 1;
            std::size_t pos = k;
            bool moved = false;
            while (pos-- > 0) {
                if (idx[pos] + (k - pos) <= n - 1) {
                    ++idx[pos];
                    for (std::size_t j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                    moved = true;
                    break;
                }
            }
            if (!moved) break;
        }
    }
    return n - 1;
}

}  // namespace polycomb
