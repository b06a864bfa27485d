#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spherig/graph.hpp"
#include "spherig/matrix.hpp"
#include "spherig/moves.hpp"
#include "spherig/sampling.hpp"

namespace spherig {

// Exact realisation on concentric spheres: coloured vertices on the sphere
// of their colour's radius, uncoloured vertices on the unit sphere.
struct Framework {
    ColouredGraph graph;
    int d = 1;
    std::vector<Rational> radii;       // one per colour id
    std::vector<RatVec> positions;     // 1-based; positions[0] unused

    const RatVec& pos(int v) const { return positions[static_cast<std::size_t>(v)]; }
    Rational radius_of(int v) const {
        const int c = graph.colour(v);
        return c < 0 ? Rational(1) : radii[static_cast<std::size_t>(c)];
    }
};

// Throws if a sphere equation fails or a position is zero.
void validate_framework(const Framework& f);

Framework sample_framework(const ColouredGraph& g, int d, ParamStream& stream,
                           int param_bits = 32);

// Same positions scaled onto the unit sphere, colouring dropped (the
// fixed-sphere comparison object).
Framework project_to_unit_sphere(const Framework& f);

// Assembled constraint matrix: edge rows, then one sphere row per vertex
// carrying (p(v), ..., -1 at the colour column), so the kernel is literally
// the motion space. Shape (|E|+n) x ((d+1)n+k).
RationalMatrix build_rigidity_matrix(const Framework& f);

struct RigidityBundle {
    RationalMatrix matrix;
    long rank = 0;
    std::vector<RatVec> kernel;
    long trivial_dim = 0;  // exact span rank of the constructed trivial family
};

RigidityBundle analyze_bundle(const Framework& f);

// Trivial motions: skew-symmetric actions (S p, r' = 0) plus the admissible
// uniform translations with their induced radius rates. Every vector is in
// the kernel of the rigidity matrix (verified exactly when verify is set).
// Requires the positions to span R^{d+1} linearly.
std::vector<RatVec> trivial_motion_basis(const Framework& f, bool verify = true);

long trivial_dimension(const Framework& f);

// C(d+1,2) + max(0, (d+1)-(n-k)): the generic value.
long trivial_dimension_formula(int n, int k, int d);

// (d+1)n - C(d+1,2) + min{k, n-(d+1)}: the rigidity rank.
long rigid_rank_formula(int n, int k, int d);

// Exact rank by eliminating the sphere rows first (they are always
// independent); equals rank(build_rigidity_matrix(f)).
long geometric_rank(const Framework& f);

struct AnalyzeOptions {
    int trials = 3;
    std::uint64_t seed = 0;
    int param_bits = 32;
    bool want_witness = false;
    bool early_exit = true;  // stop once the rank provably cannot grow
};

struct Verdict {
    int d = 1, n = 0, k = 0;
    long rows = 0, cols = 0;
    long rank = 0;
    long expected_rigid_rank = 0;
    long trivial_dim = 0;
    long kernel_dim = 0;
    bool independent = false, rigid = false, isostatic = false;
    long nontrivial_motions = 0;
    std::vector<long> trial_ranks;
    bool early_exit = false;
    bool rank_stable = true;  // all computed trial ranks agree
    std::optional<RatVec> witness;  // an exact nontrivial motion, when flexible
    std::vector<std::string> col_labels;
};

// Samples `trials` random frameworks and takes the max rank; flexible
// verdicts can carry an exact nontrivial kernel vector from the first
// max-rank trial.
Verdict analyze(const ColouredGraph& g, int d, const AnalyzeOptions& opts = {});

struct MoveDescription {
    enum class Type { ZeroExtension, OneExtension };
    Type type = Type::ZeroExtension;
    std::vector<int> attach;
    std::pair<int, int> removed_edge{0, 0};  // 1-extension only
    ColourSpec colour;
};

ColouredGraph apply_move(const ColouredGraph& g, int d, const MoveDescription& move);

struct PreservationReport {
    Verdict base;
    Verdict extended;
    bool preserved = false;
};

// Applies the move to an isostatic base and re-analyzes.
PreservationReport check_extension_preservation(const ColouredGraph& g, int d,
                                                const MoveDescription& move,
                                                const AnalyzeOptions& opts = {});

// One-degree-of-freedom filter: does some nontrivial motion have r' = 0 at
// v's colour and at every neighbour's colour? Decided exactly by kernel
// intersection. v must be coloured, non-colour-isolated, of degree > d, and
// both (G,p) and (G-v,p) must have exactly one nontrivial dof.
bool motion_filter_check(const Framework& f, int v);

}  // namespace spherig
