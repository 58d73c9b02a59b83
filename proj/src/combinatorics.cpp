#include "polycomb/combinatorics.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <set>
#include <string>

namespace polycomb {

namespace {

using Bits = boost::dynamic_bitset<>;

struct CliqueSearch {
    const std::vector<Bits>& adj;
    std::size_t best = 0;

    void expand(std::size_t r_size, Bits p) {
        if (p.none()) {
            best = std::max(best, r_size);
            return;
        }
        if (r_size + p.count() <= best) return;
        // Pivot on the candidate with the most candidate neighbours; only
        // vertices outside its neighbourhood need to be branched on.
        std::size_t pivot = p.find_first();
        std::size_t best_deg = (p & adj[pivot]).count();
        for (std::size_t v = p.find_next(pivot); v != Bits::npos; v = p.find_next(v)) {
            const std::size_t deg = (p & adj[v]).count();
            if (deg > best_deg) {
                best_deg = deg;
                pivot = v;
            }
        }
        Bits ext = p & ~adj[pivot];
        for (std::size_t v = ext.find_first(); v != Bits::npos; v = ext.find_next(v)) {
            expand(r_size + 1, p & adj[v]);
            p.reset(v);
            if (r_size + p.count() <= best) return;
        }
    }
};

std::vector<Bits> adjacency_bits(const Graph& g) {
    std::vector<Bits> adj(g.n, Bits(g.n));
    for (const auto& [i, j] : g.edges) {
        adj[i].set(j);
        adj[j].set(i);
    }
    return adj;
}

}  // namespace

std::size_t clique_number(const Graph& g, std::size_t max_vertices) {
    if (g.n > max_vertices)
        throw ResourceError("clique search capped at " + std::to_string(max_vertices) +
                            " vertices, got " + std::to_string(g.n));
    if (g.n == 0) return 0;
    CliqueSearch cs{adjacency_bits(g)};
    Bits all(g.n);
    all.set();
    cs.expand(0, all);
    return cs.best;
}

// ─── Rectangle covers ───────────────────────────────────────────────────────

std::vector<Rectangle> maximal_rectangles(const BoolMatrix& m) {
    std::vector<Bits> supports;  // column sets of rows that contain a 1
    std::vector<Bits> all_supports(m.rows, Bits(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c)
            if (m.at(r, c)) all_supports[r].set(c);
        if (all_supports[r].any()) supports.push_back(all_supports[r]);
    }

    // Closure of the row supports under pairwise intersection: every maximal
    // rectangle's column set is an intersection of row supports, so the
    // closure family contains them all.
    std::set<Bits> family(supports.begin(), supports.end());
    std::vector<Bits> work(family.begin(), family.end());
    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Bits inter = work[i] & work[j];
            if (inter.any() && family.insert(inter).second) work.push_back(std::move(inter));
        }

    std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> uniq;
    for (const Bits& j : family) {
        std::vector<std::size_t> rows;
        Bits closed(m.cols);
        closed.set();
        for (std::size_t r = 0; r < m.rows; ++r)
            if (all_supports[r].any() && j.is_subset_of(all_supports[r])) {
                rows.push_back(r);
                closed &= all_supports[r];
            }
        std::vector<std::size_t> cols;
        for (std::size_t c = closed.find_first(); c != Bits::npos; c = closed.find_next(c))
            cols.push_back(c);
        uniq.emplace(std::move(rows), std::move(cols));
    }

    std::vector<Rectangle> out;
    out.reserve(uniq.size());
    for (const auto& [rows, cols] : uniq) out.push_back({rows, cols});
    return out;
}

namespace {

struct CellIndex {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    std::vector<std::vector<std::size_t>> cell_at;  // rows x cols -> index+1, 0 = none
};

CellIndex index_cells(const BoolMatrix& m) {
    CellIndex ci;
    ci.cell_at.assign(m.rows, std::vector<std::size_t>(m.cols, 0));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            if (m.at(r, c)) {
                ci.cells.emplace_back(r, c);
                ci.cell_at[r][c] = ci.cells.size();
            }
    return ci;
}

// Cover masks (over cell indices) of every maximal rectangle.
std::vector<Bits> rectangle_cell_masks(const CellIndex& ci,
                                       const std::vector<Rectangle>& rects) {
    std::vector<Bits> masks;
    masks.reserve(rects.size());
    for (const auto& rect : rects) {
        Bits mask(ci.cells.size());
        for (std::size_t r : rect.row_set)
            for (std::size_t c : rect.col_set) mask.set(ci.cell_at[r][c] - 1);
        masks.push_back(std::move(mask));
    }
    return masks;
}

std::size_t greedy_cover(const std::vector<Bits>& masks, std::size_t n_cells) {
    Bits covered(n_cells);
    std::size_t used = 0;
    while (covered.count() < n_cells) {
        std::size_t best = masks.size(), best_gain = 0;
        for (std::size_t i = 0; i < masks.size(); ++i) {
            const std::size_t gain = (masks[i] & ~covered).count();
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        covered |= masks[best];
        ++used;
    }
    return used;
}

// Fooling-set bound restricted to the cells marked in `alive`.
std::size_t fooling_bound_on(const BoolMatrix& m, const CellIndex& ci, const Bits& alive) {
    std::vector<std::size_t> ids;
    for (std::size_t i = alive.find_first(); i != Bits::npos; i = alive.find_next(i))
        ids.push_back(i);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b) {
            const auto [i, j] = ci.cells[ids[a]];
            const auto [k, l] = ci.cells[ids[b]];
            if (!m.at(i, l) || !m.at(k, j)) edges.emplace_back(a, b);
        }
    Graph g(ids.size(), std::move(edges));
    return clique_number(g, std::max<std::size_t>(g.n, 64));
}

struct CoverSearch {
    const std::vector<Bits>& masks;
    const BoolMatrix& m;
    const CellIndex& ci;
    std::size_t n_cells;
    std::size_t best;

    void dfs(const Bits& covered, std::size_t used, std::size_t depth) {
        if (covered.count() == n_cells) {
            best = std::min(best, used);
            return;
        }
        if (used + 1 >= best) return;
        const Bits remaining = ~covered;

        // Lower bounds: coverage ratio always; fooling-set bound near the root
        // where it prunes the most per unit of work.
        std::size_t max_gain = 0;
        for (const Bits& mk : masks) max_gain = std::max(max_gain, (mk & remaining).count());
        const std::size_t rem = remaining.count();
        std::size_t lb = (rem + max_gain - 1) / max_gain;
        if (depth <= 2) lb = std::max(lb, fooling_bound_on(m, ci, remaining));
        if (used + lb >= best) return;

        // Branch on the uncovered cell with the fewest covering rectangles.
        std::size_t cell = 0, fewest = masks.size() + 1;
        for (std::size_t i = remaining.find_first(); i != Bits::npos; i = remaining.find_next(i)) {
            std::size_t cnt = 0;
            for (const Bits& mk : masks)
                if (mk.test(i)) ++cnt;
            if (cnt < fewest) {
                fewest = cnt;
                cell = i;
            }
        }
        std::vector<std::size_t> options;
        for (std::size_t r = 0; r < masks.size(); ++r)
            if (masks[r].test(cell)) options.push_back(r);
        std::sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) {
            return (masks[a] & remaining).count() > (masks[b] & remaining).count();
        });
        for (std::size_t r : options) dfs(covered | masks[r], used + 1, depth + 1);
    }
};

void check_cell_cap(const BoolMatrix& m, std::size_t max_cells, const char* what) {
    const std::size_t ones = m.count_ones();
    if (ones > max_cells)
        throw ResourceError(std::string(what) + " capped at " + std::to_string(max_cells) +
                            " one-cells, got " + std::to_string(ones));
}

}  // namespace

std::size_t rc_exact(const BoolMatrix& m, std::size_t max_cells) {
    check_cell_cap(m, max_cells, "rectangle cover");
    const CellIndex ci = index_cells(m);
    if (ci.cells.empty()) return 0;
    const std::vector<Rectangle> rects = maximal_rectangles(m);
    const std::vector<Bits> masks = rectangle_cell_masks(ci, rects);

    const std::size_t greedy = greedy_cover(masks, ci.cells.size());
    Bits all(ci.cells.size());
    all.set();
    const std::size_t lower = fooling_bound_on(m, ci, all);
    if (greedy == lower) return greedy;

    CoverSearch cs{masks, m, ci, ci.cells.size(), greedy};
    cs.dfs(Bits(ci.cells.size()), 0, 0);
    return cs.best;
}

std::size_t rc_greedy(const BoolMatrix& m) {
    const CellIndex ci = index_cells(m);
    if (ci.cells.empty()) return 0;
    const std::vector<Rectangle> rects = maximal_rectangles(m);
    return greedy_cover(rectangle_cell_masks(ci, rects), ci.cells.size());
}

std::size_t fooling_set_bound(const BoolMatrix& m, std::size_t max_cells) {
    check_cell_cap(m, max_cells, "fooling-set bound");
    const CellIndex ci = index_cells(m);
    if (ci.cells.empty()) return 0;
    Bits all(ci.cells.size());
    all.set();
    return fooling_bound_on(m, ci, all);
}

// ─── Linear decision trees ──────────────────────────────────────────────────

void LinearDecisionTree::validate(std::optional<std::size_t> n_points,
                                  std::optional<std::size_t> dim) const {
    std::map<std::size_t, std::size_t> refs;  // id -> reference count
    for (const auto& [id, node] : nodes) {
        if (leaves.count(id))
            throw ValidationError("id " + std::to_string(id) + " is both node and leaf");
        ++refs[node.pos];
        ++refs[node.neg];
        if (!nodes.count(node.pos) && !leaves.count(node.pos))
            throw ValidationError("node " + std::to_string(id) + " references missing id " +
                                  std::to_string(node.pos));
        if (!nodes.count(node.neg) && !leaves.count(node.neg))
            throw ValidationError("node " + std::to_string(id) + " references missing id " +
                                  std::to_string(node.neg));
        if (dim && node.a.size() != *dim)
            throw ValidationError("node " + std::to_string(id) + " tests a vector of length " +
                                  std::to_string(node.a.size()) + ", expected " +
                                  std::to_string(*dim));
    }
    if (!nodes.count(root) && !leaves.count(root))
        throw ValidationError("root id " + std::to_string(root) + " does not exist");
    if (refs.count(root))
        throw ValidationError("root is referenced as a child (cycle)");
    for (const auto& [id, n] : refs)
        if (n != 1) throw ValidationError("id " + std::to_string(id) + " referenced " +
                                          std::to_string(n) + " times; a tree needs exactly 1");
    // Reference counts make the structure a forest rooted at `root` plus
    // possible disjoint cycles; reachability from the root excludes the rest.
    std::set<std::size_t> seen;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
        const std::size_t id = stack.back();
        stack.pop_back();
        if (!seen.insert(id).second)
            throw ValidationError("cycle detected at id " + std::to_string(id));
        auto it = nodes.find(id);
        if (it != nodes.end()) {
            stack.push_back(it->second.pos);
            stack.push_back(it->second.neg);
        }
    }
    if (seen.size() != nodes.size() + leaves.size())
        throw ValidationError("tree has ids not reachable from the root");
    if (n_points)
        for (const auto& [id, leaf] : leaves)
            if (leaf.label >= *n_points)
                throw ValidationError("leaf " + std::to_string(id) + " label " +
                                      std::to_string(leaf.label) + " out of range");
}

std::size_t LinearDecisionTree::depth() const {
    struct Rec {
        const LinearDecisionTree& t;
        std::size_t walk(std::size_t id) const {
            auto it = t.nodes.find(id);
            if (it == t.nodes.end()) return 0;
            return 1 + std::max(walk(it->second.pos), walk(it->second.neg));
        }
    };
    return Rec{*this}.walk(root);
}

std::size_t ldt_evaluate(const LinearDecisionTree& t, const std::vector<Int>& c) {
    t.validate(std::nullopt, c.size());
    std::size_t id = t.root;
    while (true) {
        auto leaf = t.leaves.find(id);
        if (leaf != t.leaves.end()) return leaf->second.label;
        const auto& node = t.nodes.at(id);
        Int s = node.b;
        for (std::size_t j = 0; j < c.size(); ++j) s += node.a[j] * c[j];
        id = s > 0 ? node.pos : node.neg;
    }
}

namespace {

struct LabelMasks {
    std::vector<std::size_t> node_ids;                 // ascending
    std::vector<std::uint64_t> under, under_pos, under_neg;
};

std::uint64_t label_mask_walk(const LinearDecisionTree& t, std::size_t id,
                              std::map<std::size_t, std::uint64_t>& memo) {
    auto found = memo.find(id);
    if (found != memo.end()) return found->second;
    auto leaf = t.leaves.find(id);
    std::uint64_t mask;
    if (leaf != t.leaves.end()) {
        mask = std::uint64_t{1} << leaf->second.label;
    } else {
        const auto& node = t.nodes.at(id);
        mask = label_mask_walk(t, node.pos, memo) | label_mask_walk(t, node.neg, memo);
    }
    memo[id] = mask;
    return mask;
}

LabelMasks label_masks(const LinearDecisionTree& t) {
    LabelMasks lm;
    std::map<std::size_t, std::uint64_t> memo;
    label_mask_walk(t, t.root, memo);
    for (const auto& [id, node] : t.nodes) {
        lm.node_ids.push_back(id);
        lm.under.push_back(memo.at(id));
        lm.under_pos.push_back(memo.at(node.pos));
        lm.under_neg.push_back(memo.at(node.neg));
    }
    return lm;
}

inline int popcount64(std::uint64_t x) { return __builtin_popcountll(x); }

struct CliqueScan {
    const std::vector<std::uint64_t>& adj;
    const LabelMasks& lm;
    std::size_t budget;
    bool aborted = false;
    std::optional<std::pair<std::size_t, std::uint64_t>> violation;

    bool check(std::uint64_t y) {
        for (std::size_t i = 0; i < lm.node_ids.size(); ++i) {
            const int lhs = popcount64(lm.under[i] & y) - 1;
            const int rhs = std::max(popcount64(lm.under_pos[i] & y),
                                     popcount64(lm.under_neg[i] & y));
            if (lhs > rhs) {
                violation = {lm.node_ids[i], y};
                return false;
            }
        }
        return true;
    }

    // Every clique, in lexicographic order of ascending vertex lists.
    bool all_cliques(std::uint64_t y, std::uint64_t candidates, std::size_t from) {
        for (std::size_t v = from; v < adj.size(); ++v) {
            if (!((candidates >> v) & 1)) continue;
            const std::uint64_t y2 = y | (std::uint64_t{1} << v);
            if (budget == 0) {
                aborted = true;
                return false;
            }
            --budget;
            if (!check(y2)) return false;
            if (!all_cliques(y2, candidates & adj[v], v + 1)) return false;
        }
        return true;
    }

    // Maximal cliques only (pivoted enumeration), fallback when the full
    // enumeration exceeds the budget.
    bool maximal_cliques(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (p == 0 && x == 0) return check(r);
        std::uint64_t px = p | x;
        std::size_t pivot = 0;
        int best = -1;
        for (std::size_t v = 0; v < adj.size(); ++v)
            if ((px >> v) & 1) {
                const int deg = popcount64(p & adj[v]);
                if (deg > best) {
                    best = deg;
                    pivot = v;
                }
            }
        std::uint64_t ext = p & ~adj[pivot];
        for (std::size_t v = 0; v < adj.size(); ++v) {
            if (!((ext >> v) & 1)) continue;
            const std::uint64_t bit = std::uint64_t{1} << v;
            if (!maximal_cliques(r | bit, p & adj[v], x & adj[v])) return false;
            p &= ~bit;
            x |= bit;
        }
        return true;
    }
};

}  // namespace

DirectTypeReport is_direct_type(const LinearDecisionTree& t, const PointSet& x_set,
                                const Graph& skeleton, std::size_t max_cliques) {
    t.validate(x_set.size(), x_set.dim);
    if (skeleton.n != x_set.size())
        throw ValidationError("skeleton has " + std::to_string(skeleton.n) +
                              " vertices, point set has " + std::to_string(x_set.size()));
    if (x_set.size() > 64)
        throw ResourceError("direct-type check supports at most 64 points");

    std::vector<std::uint64_t> adj(skeleton.n, 0);
    for (const auto& [i, j] : skeleton.edges) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
    }

    const LabelMasks lm = label_masks(t);
    DirectTypeReport rep;

    CliqueScan scan{adj, lm, max_cliques, false, std::nullopt};
    const std::uint64_t all =
        skeleton.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << skeleton.n) - 1;
    const bool clean = scan.all_cliques(0, all, 0);
    if (!clean && scan.aborted) {
        CliqueScan fallback{adj, lm, 0, false, std::nullopt};
        rep.complete = false;
        if (!fallback.maximal_cliques(0, all, 0)) {
            rep.ok = false;
            const auto& [node, y] = *fallback.violation;
            rep.witness_node = node;
            for (std::size_t v = 0; v < skeleton.n; ++v)
                if ((y >> v) & 1) rep.witness_clique.push_back(v);
        }
        return rep;
    }
    if (!clean) {
        rep.ok = false;
        const auto& [node, y] = *scan.violation;
        rep.witness_node = node;
        for (std::size_t v = 0; v < skeleton.n; ++v)
            if ((y >> v) & 1) rep.witness_clique.push_back(v);
    }
    return rep;
}

}  // namespace polycomb
