#pragma once

#include "spherig/graph.hpp"

namespace spherig {

// Count-function parameters; the d-dimensional generic rigidity rank r_d is
// only implemented for d in {1, 2}.
struct CountParams {
    int d = 1;
    CountParams() = default;
    explicit CountParams(int dim) : d(dim) {
        if (d != 1 && d != 2) throw scope_error("count oracles support d in {1,2} only");
    }
};

// r_1(F) = n - omega(F): graphic matroid rank.
int rank_r1(const ColouredGraph& g, EdgeMask f);

// r_2(F): generic 2-dimensional rigidity matroid rank, computed by the
// (2,3)-pebble game (size of a maximal F' <= F with |F''| <= 2|V(F'')|-3
// for all nonempty F'' <= F').
int rank_r2(const ColouredGraph& g, EdgeMask f);

int rank_rd(const ColouredGraph& g, EdgeMask f, int d);

// h_d(F) = min{k(F), |V(F)|-(d+1)}; may be negative when |V(F)| < d+1.
long h_d(const ColouredGraph& g, EdgeMask f, int d);

// g_d(F) = r_d(F) + h_d(F); only defined when |V(F)| >= d+1.
long g_d(const ColouredGraph& g, EdgeMask f, int d);

// f_d(F) = r_d(F) + k(F); no vertex-count proviso. f_d(empty) = 0.
long f_d(const ColouredGraph& g, EdgeMask f, int d);

// Per-subset sparsity bound of the characterising count family:
// d=1 -> g_1 bound, d=2 -> f_2 bound.
long family_bound(const ColouredGraph& g, EdgeMask f, int d);

// Global edge count of a base of the characterising matroid:
// d=1: n-1+min{k, n-2} for all n >= 2; d=2: 2n-3+k, meaningful for n >= k+3.
long base_edge_count(const ColouredGraph& g, int d);

// Rank a rigid graph attains: d*n - C(d+1,2) (used by the max-rank lemma check).
long full_rd_rank(int n, int d);

}  // namespace spherig
