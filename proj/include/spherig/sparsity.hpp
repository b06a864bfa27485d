#pragma once

#include <optional>
#include <vector>

#include "spherig/counts.hpp"
#include "spherig/graph.hpp"

namespace spherig {

struct OracleOptions {
    int edge_cap = 22;   // brute force enumerates 2^|E| subsets
    int cover_cap = 8;   // cover enumeration is over vertex subsets
    bool parallel = true;
};

enum class SparsityStatus { Sparse, Tight, Dependent };

// Verdict of the characterising count family (g_1 for d=1, f_2 for d=2).
struct SparsityVerdict {
    SparsityStatus status = SparsityStatus::Sparse;
    bool sparse = false;
    bool tight = false;
    // Minimum-cardinality (then lexicographically first) violating subset,
    // present iff dependent; always satisfies |F| > bound(F).
    EdgeMask witness = 0;
    long witness_bound = 0;
    long edge_total = 0;      // |E|
    long base_count = 0;      // edge count of a base: the certifying global count
    long family_value_E = 0;  // g_1(E) resp. f_2(E), reported alongside
    // d=2 with n < k+3: the two global counts diverge and the tight flag is
    // decided by matroid maximality instead; both counts are reported.
    bool regime_flagged = false;
};

// Exact brute force over all nonempty F of E (capped). d=1 checks the g_1
// counts, d=2 the f_2 counts.
SparsityVerdict sparsity_check(const ColouredGraph& g, int d,
                               const OracleOptions& opts = {});
SparsityVerdict sparsity_check_serial(const ColouredGraph& g, int d,
                                      const OracleOptions& opts = {});

// Fast path over induced subsets only: a violating subset stays violating
// under its induced closure, so this decides sparsity; acceptance runs use
// the full enumeration above regardless.
bool is_sparse_induced(const ColouredGraph& g, int d);

// All inclusionwise-minimal (c,d)-tight sets (|F| = r_d(F)+k(F), colour c
// spanned), by exhaustive subset search. Host must be sparse.
std::vector<EdgeMask> minimal_c_tight_sets(const ColouredGraph& g, int d, int colour,
                                           const OracleOptions& opts = {});

// The unique minimal one, or nullopt; throws internal_error if the
// uniqueness guarantee is violated.
std::optional<EdgeMask> minimal_c_tight_set(const ColouredGraph& g, int d, int colour,
                                            const OracleOptions& opts = {});

// Rank of E in the matroid induced by f_d: min over F of |E-F| + f_d(F),
// with f_d(empty) = 0.
long matroid_rank(const ColouredGraph& g, int d, const OracleOptions& opts = {});
long matroid_rank_serial(const ColouredGraph& g, int d, const OracleOptions& opts = {});

// Same value via induced minimisers only (the minimiser can always be taken
// induced); linear-size enumeration used as the bulk fast path.
long matroid_rank_induced(const ColouredGraph& g, int d);

struct CoverResult {
    long value = 0;
    // Members of the best cover with >= 3 vertices (vertex masks); every
    // remaining edge is covered by its own endpoint pair.
    std::vector<VertexMask> big_members;
    VertexMask restriction = 0;  // the X of the X-restricted formulation
};

// Uncoloured thin-cover rank: min over 1-thin covers of sum(2|Xi|-3).
CoverResult cover_rank_uncoloured(const ColouredGraph& g, const OracleOptions& opts = {});

// Coloured variant (k <= 2): min over X and X-restricted 1-thin covers of
// sum(2|Xi|-3) + k(X).
CoverResult cover_rank(const ColouredGraph& g, const OracleOptions& opts = {});
CoverResult cover_rank_serial(const ColouredGraph& g, const OracleOptions& opts = {});

}  // namespace spherig
