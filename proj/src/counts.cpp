#include "spherig/counts.hpp"

#include <algorithm>

namespace spherig {

int rank_r1(const ColouredGraph& g, EdgeMask f) { return g.n() - component_count(g, f); }

namespace {

constexpr int kMaxArcs = 2 * kMaxVertices + 8;

// Lee/Streinu (2,3)-pebble game, allocation free. Vertices are 1..n with
// n <= kMaxVertices; state is rebuilt per call, which is cheap at the
// subset-enumeration scale this serves.
struct PebbleGame {
    int n = 0;
    int pebbles[kMaxVertices + 1];
    int head[kMaxVertices + 1];  // first out-arc per vertex
    int nxt[kMaxArcs];
    int to[kMaxArcs];
    int src[kMaxArcs];
    int arc_cnt = 0;
    int seen_stamp[kMaxVertices + 1];
    int stamp = 0;
    int parent_arc[kMaxVertices + 1];

    void init(int nverts) {
        n = nverts;
        arc_cnt = 0;
        stamp = 0;
        for (int v = 0; v <= n; ++v) {
            pebbles[v] = 2;
            head[v] = -1;
            seen_stamp[v] = 0;
        }
    }

    void attach(int u, int e) {
        src[e] = u;
        nxt[e] = head[u];
        head[u] = e;
    }

    void detach(int u, int e) {
        if (head[u] == e) {
            head[u] = nxt[e];
            return;
        }
        for (int p = head[u]; p != -1; p = nxt[p])
            if (nxt[p] == e) {
                nxt[p] = nxt[e];
                return;
            }
    }

    // DFS from root for a vertex holding a free pebble; the two endpoints
    // of the pending edge are not valid pebble sources. On success the
    // search path is reversed and root gains the pebble.
    bool collect(int root, int a, int b) {
        ++stamp;
        seen_stamp[root] = stamp;
        parent_arc[root] = -1;
        int stack[kMaxVertices + 1];
        int sp = 0;
        stack[sp++] = root;
        int found = -1;
        while (sp > 0 && found < 0) {
            const int u = stack[--sp];
            for (int e = head[u]; e != -1; e = nxt[e]) {
                const int w = to[e];
                if (seen_stamp[w] == stamp) continue;
                seen_stamp[w] = stamp;
                parent_arc[w] = e;
                if (w != a && w != b && pebbles[w] > 0) {
                    found = w;
                    break;
                }
                stack[sp++] = w;
            }
        }
        if (found < 0) return false;
        for (int w = found; parent_arc[w] != -1;) {
            const int e = parent_arc[w];
            const int u = src[e];  // arc e currently points u -> w
            detach(u, e);
            to[e] = u;
            attach(w, e);
            w = u;
        }
        --pebbles[found];
        ++pebbles[root];
        return true;
    }

    bool insert_edge(int u, int v) {
        while (pebbles[u] < 2 && collect(u, u, v)) {}
        while (pebbles[v] < 2 && collect(v, u, v)) {}
        if (pebbles[u] + pebbles[v] < 4) return false;
        --pebbles[u];
        to[arc_cnt] = v;
        attach(u, arc_cnt);
        ++arc_cnt;
        return true;
    }
};

thread_local PebbleGame tl_game;

}  // namespace

int rank_r2(const ColouredGraph& g, EdgeMask f) {
    PebbleGame& game = tl_game;
    game.init(g.n());
    int rank = 0;
    while (f) {
        const int i = __builtin_ctzll(f);
        auto [u, v] = g.edge(i);
        if (game.insert_edge(u, v)) ++rank;
        f &= f - 1;
    }
    return rank;
}

int rank_rd(const ColouredGraph& g, EdgeMask f, int d) {
    if (d == 1) return rank_r1(g, f);
    if (d == 2) return rank_r2(g, f);
    throw scope_error("r_d is implemented for d in {1,2} only");
}

long h_d(const ColouredGraph& g, EdgeMask f, int d) {
    return std::min<long>(colour_count(g, f), vertex_span_size(g, f) - (d + 1));
}

long g_d(const ColouredGraph& g, EdgeMask f, int d) {
    if (vertex_span_size(g, f) < d + 1)
        throw precondition_error(
            "g_d requires |V(F)| >= d+1; the count is undefined below that");
    return rank_rd(g, f, d) + h_d(g, f, d);
}

long f_d(const ColouredGraph& g, EdgeMask f, int d) {
    if (f == 0) return 0;
    return rank_rd(g, f, d) + colour_count(g, f);
}

long family_bound(const ColouredGraph& g, EdgeMask f, int d) {
    if (d == 1) return g_d(g, f, 1);
    return f_d(g, f, 2);
}

long base_edge_count(const ColouredGraph& g, int d) {
    const long n = g.n(), k = g.colour_count();
    if (d == 1) return n - 1 + std::min(k, n - 2);
    return 2 * n - 3 + k;
}

long full_rd_rank(int n, int d) { return static_cast<long>(d) * n - d * (d + 1) / 2; }

}  // namespace spherig
