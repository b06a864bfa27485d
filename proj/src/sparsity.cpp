#include "spherig/sparsity.hpp"

#include <algorithm>
#include <omp.h>

namespace spherig {

namespace {

void check_edge_cap(const ColouredGraph& g, const OracleOptions& opts) {
    if (g.edge_count() > opts.edge_cap)
        throw capacity_error("edge count " + std::to_string(g.edge_count()) +
                             " exceeds the brute-force cap " + std::to_string(opts.edge_cap) +
                             "; raise it with --edge-cap if the runtime is acceptable");
}

long subset_bound(const ColouredGraph& g, EdgeMask f, int d) {
    // d=1: r_1 + min{k(F), |V(F)|-2}; d=2: r_2 + k(F).
    if (d == 1) return rank_r1(g, f) + h_d(g, f, 1);
    return rank_r2(g, f) + colour_count(g, f);
}

struct Violation {
    int size = 1 << 30;
    EdgeMask mask = 0;
    long bound = 0;
    bool better_than(const Violation& o) const {
        return size < o.size || (size == o.size && mask < o.mask);
    }
};

Violation scan_violations(const ColouredGraph& g, int d, bool parallel) {
    const EdgeMask full = g.full_edge_mask();
    Violation best;
    if (full == 0) return best;
#pragma omp parallel if (parallel)
    {
        Violation local;
#pragma omp for schedule(static)
        for (long long m = 1; m <= static_cast<long long>(full); ++m) {
            const EdgeMask f = static_cast<EdgeMask>(m);
            const int sz = popcount(f);
            if (sz >= local.size) continue;
            const long bound = subset_bound(g, f, d);
            if (sz > bound) {
                Violation v{sz, f, bound};
                if (v.better_than(local)) local = v;
            }
        }
#pragma omp critical
        if (local.better_than(best)) best = local;
    }
    return best;
}

bool graph_is_sparse(const ColouredGraph& g, int d, const OracleOptions& opts) {
    OracleOptions o = opts;
    return scan_violations(g, d, o.parallel).size > g.edge_count();
}

SparsityVerdict check_impl(const ColouredGraph& g, int d, const OracleOptions& opts,
                           bool parallel) {
    if (d != 1 && d != 2) throw scope_error("sparsity families exist for d in {1,2} only");
    check_edge_cap(g, opts);
    SparsityVerdict v;
    v.edge_total = g.edge_count();
    v.base_count = base_edge_count(g, d);
    const Violation viol = scan_violations(g, d, parallel);
    v.sparse = viol.size > g.edge_count();
    if (!v.sparse) {
        v.status = SparsityStatus::Dependent;
        v.witness = viol.mask;
        v.witness_bound = viol.bound;
    }
    if (g.edge_count() > 0) v.family_value_E = family_bound(g, g.full_edge_mask(), d);

    const long n = g.n(), k = g.colour_count();
    if (d == 2 && n < k + 3) {
        // The base cardinality 2n-3+k is only meaningful for n >= k+3; fall
        // back to matroid maximality and report both counts.
        v.regime_flagged = true;
        if (v.sparse) {
            bool maximal = true;
            for (int a = 1; a <= g.n() && maximal; ++a)
                for (int b = a + 1; b <= g.n() && maximal; ++b) {
                    if (g.has_edge(a, b)) continue;
                    auto edges = g.edges();
                    edges.emplace_back(a, b);
                    std::vector<int> cols;
                    for (int w = 1; w <= g.n(); ++w) cols.push_back(g.colour(w));
                    ColouredGraph ext(g.n(), std::move(edges), std::move(cols),
                                      g.colour_names());
                    OracleOptions o2 = opts;
                    o2.edge_cap = opts.edge_cap + 1;
                    o2.parallel = parallel;
                    if (graph_is_sparse(ext, d, o2)) maximal = false;
                }
            v.tight = maximal;
        }
    } else {
        v.tight = v.sparse && v.edge_total == v.base_count;
    }
    if (v.sparse) v.status = v.tight ? SparsityStatus::Tight : SparsityStatus::Sparse;
    return v;
}

}  // namespace

SparsityVerdict sparsity_check(const ColouredGraph& g, int d, const OracleOptions& opts) {
    return check_impl(g, d, opts, opts.parallel);
}

SparsityVerdict sparsity_check_serial(const ColouredGraph& g, int d,
                                      const OracleOptions& opts) {
    return check_impl(g, d, opts, false);
}

bool is_sparse_induced(const ColouredGraph& g, int d) {
    const int n = g.n();
    for (VertexMask x = 1; x < (VertexMask(1) << n); ++x) {
        EdgeMask f = 0;
        for (int i = 0; i < g.edge_count(); ++i)
            if ((g.edge_endpoints_mask(i) & ~x) == 0) f |= EdgeMask(1) << i;
        if (f == 0) continue;
        if (popcount(f) > subset_bound(g, f, d)) return false;
    }
    return true;
}

std::vector<EdgeMask> minimal_c_tight_sets(const ColouredGraph& g, int d, int colour,
                                           const OracleOptions& opts) {
    check_edge_cap(g, opts);
    if (!sparsity_check(g, d, opts).sparse)
        throw precondition_error(
            "minimal tight sets are only well defined on sparse hosts");
    if (colour < 0 || colour >= g.colour_count()) return {};
    const EdgeMask full = g.full_edge_mask();
    std::vector<EdgeMask> tight;
    for (EdgeMask f = 1; f <= full && full; ++f) {
        VertexMask vm = vertex_span(g, f);
        bool has_colour = false;
        for (VertexMask t = vm; t; t &= t - 1)
            if (g.colour(__builtin_ctzll(t) + 1) == colour) { has_colour = true; break; }
        if (!has_colour) continue;
        if (popcount(f) == rank_rd(g, f, d) + colour_count(g, f)) tight.push_back(f);
    }
    std::sort(tight.begin(), tight.end(),
              [](EdgeMask a, EdgeMask b) {
                  return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
              });
    std::vector<EdgeMask> minimal;
    for (EdgeMask f : tight) {
        bool dominated = false;
        for (EdgeMask m : minimal)
            if ((m & ~f) == 0) { dominated = true; break; }
        if (!dominated) minimal.push_back(f);
    }
    return minimal;
}

std::optional<EdgeMask> minimal_c_tight_set(const ColouredGraph& g, int d, int colour,
                                            const OracleOptions& opts) {
    auto mins = minimal_c_tight_sets(g, d, colour, opts);
    if (mins.empty()) return std::nullopt;
    if (mins.size() > 1)
        throw internal_error("two distinct inclusionwise-minimal tight sets found on a "
                             "sparse host; uniqueness guarantee violated");
    return mins[0];
}

namespace {

long matroid_rank_impl(const ColouredGraph& g, int d, const OracleOptions& opts,
                       bool parallel) {
    check_edge_cap(g, opts);
    const EdgeMask full = g.full_edge_mask();
    const long e = g.edge_count();
    long best = e;  // F = empty
    if (full == 0) return 0;
#pragma omp parallel if (parallel)
    {
        long local = e;
#pragma omp for schedule(static)
        for (long long m = 1; m <= static_cast<long long>(full); ++m) {
            const EdgeMask f = static_cast<EdgeMask>(m);
            const long val = e - popcount(f) + f_d(g, f, d);
            if (val < local) local = val;
        }
#pragma omp critical
        if (local < best) best = local;
    }
    return best;
}

}  // namespace

long matroid_rank(const ColouredGraph& g, int d, const OracleOptions& opts) {
    return matroid_rank_impl(g, d, opts, opts.parallel);
}

long matroid_rank_serial(const ColouredGraph& g, int d, const OracleOptions& opts) {
    return matroid_rank_impl(g, d, opts, false);
}

long matroid_rank_induced(const ColouredGraph& g, int d) {
    const int n = g.n();
    const long e = g.edge_count();
    long best = e;
    for (VertexMask x = 1; x < (VertexMask(1) << n); ++x) {
        EdgeMask f = 0;
        for (int i = 0; i < g.edge_count(); ++i)
            if ((g.edge_endpoints_mask(i) & ~x) == 0) f |= EdgeMask(1) << i;
        if (f == 0) continue;
        best = std::min(best, e - popcount(f) + f_d(g, f, d));
    }
    return best;
}

namespace {

struct CoverCandidate {
    VertexMask verts;
    long weight;  // |E(X)| - (2|X|-3), kept only when positive
};

struct CoverSearch {
    const std::vector<CoverCandidate>& cand;
    bool coloured;
    const ColouredGraph* g;
    long best_val;
    std::vector<int> best_pick;
    std::vector<int> pick;

    long colours_in(VertexMask x) const {
        std::uint64_t cm = 0;
        while (x) {
            const int v = __builtin_ctzll(x) + 1;
            if (g->colour(v) >= 0) cm |= std::uint64_t(1) << g->colour(v);
            x &= x - 1;
        }
        return popcount(cm);
    }

    void consider(long weight_sum, VertexMask covered) {
        const long val =
            g->edge_count() - weight_sum + (coloured ? colours_in(covered) : 0);
        if (val < best_val ||
            (val == best_val && pick < best_pick)) {
            best_val = val;
            best_pick = pick;
        }
    }

    void dfs(std::size_t from, long weight_sum, VertexMask covered) {
        consider(weight_sum, covered);
        for (std::size_t i = from; i < cand.size(); ++i) {
            bool ok = true;
            for (int idx : pick)
                if (popcount(cand[static_cast<std::size_t>(idx)].verts & cand[i].verts) > 1) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick.push_back(static_cast<int>(i));
            dfs(i + 1, weight_sum + cand[i].weight, covered | cand[i].verts);
            pick.pop_back();
        }
    }
};

CoverResult cover_impl(const ColouredGraph& g, bool coloured, const OracleOptions& opts,
                       bool parallel) {
    if (g.n() > opts.cover_cap)
        throw capacity_error("vertex count " + std::to_string(g.n()) +
                             " exceeds the cover enumeration cap " +
                             std::to_string(opts.cover_cap) + " (--cover-cap)");
    if (coloured && g.colour_count() > 2)
        throw scope_error(
            "the restricted-cover formula only holds for k <= 2 colours; with three "
            "or more it can overshoot (see fixtures/fig1b.json)");

    // Only members inducing more than 2|X|-3 edges can lower a cover's
    // value; 1-thin members never share an induced edge, so the objective
    // decomposes over members.
    std::vector<CoverCandidate> cand;
    for (VertexMask x = 1; x < (VertexMask(1) << g.n()); ++x) {
        const int sz = popcount(x);
        if (sz < 3) continue;
        long induced = 0;
        for (int i = 0; i < g.edge_count(); ++i)
            if ((g.edge_endpoints_mask(i) & ~x) == 0) ++induced;
        const long w = induced - (2 * sz - 3);
        if (w > 0) cand.push_back({x, w});
    }
    std::sort(cand.begin(), cand.end(),
              [](const CoverCandidate& a, const CoverCandidate& b) {
                  return a.verts < b.verts;
              });

    CoverResult best;
    best.value = g.edge_count();
    std::vector<int> best_pick;
    long best_val = g.edge_count();
#pragma omp parallel if (parallel)
    {
        CoverSearch local{cand, coloured, &g, g.edge_count(), {}, {}};
        local.consider(0, 0);
#pragma omp for schedule(dynamic)
        for (long long first = 0; first < static_cast<long long>(cand.size()); ++first) {
            local.pick.assign(1, static_cast<int>(first));
            local.dfs(static_cast<std::size_t>(first) + 1,
                      cand[static_cast<std::size_t>(first)].weight,
                      cand[static_cast<std::size_t>(first)].verts);
            local.pick.clear();
        }
#pragma omp critical
        if (local.best_val < best_val ||
            (local.best_val == best_val && local.best_pick < best_pick)) {
            best_val = local.best_val;
            best_pick = local.best_pick;
        }
    }
    best.value = best_val;
    for (int idx : best_pick) {
        best.big_members.push_back(cand[static_cast<std::size_t>(idx)].verts);
        best.restriction |= cand[static_cast<std::size_t>(idx)].verts;
    }
    return best;
}

}  // namespace

CoverResult cover_rank_uncoloured(const ColouredGraph& g, const OracleOptions& opts) {
    return cover_impl(g, false, opts, opts.parallel);
}

CoverResult cover_rank(const ColouredGraph& g, const OracleOptions& opts) {
    return cover_impl(g, true, opts, opts.parallel);
}

CoverResult cover_rank_serial(const ColouredGraph& g, const OracleOptions& opts) {
    return cover_impl(g, true, opts, false);
}

}  // namespace spherig
