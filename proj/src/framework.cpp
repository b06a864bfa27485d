#include "spherig/framework.hpp"

#include <algorithm>
#include <map>

namespace spherig {

void validate_framework(const Framework& f) {
    const ColouredGraph& g = f.graph;
    if (f.d != 1 && f.d != 2) throw scope_error("frameworks support d in {1,2} only");
    if (static_cast<int>(f.positions.size()) != g.n() + 1)
        throw input_error("framework needs one position per vertex");
    if (static_cast<int>(f.radii.size()) != g.colour_count())
        throw input_error("framework needs one radius per colour");
    for (const auto& r : f.radii)
        if (r <= 0) throw input_error("radii must be positive");
    for (int v = 1; v <= g.n(); ++v) {
        const RatVec& p = f.pos(v);
        if (static_cast<int>(p.size()) != f.d + 1)
            throw input_error("position of vertex " + std::to_string(v) +
                              " has wrong dimension");
        if (is_zero_vec(p)) throw input_error("zero position at vertex " + std::to_string(v));
        const Rational r = f.radius_of(v);
        if (norm2(p) != r * r)
            throw input_error("vertex " + std::to_string(v) +
                              " is not on its sphere (exact check failed)");
    }
}

Framework sample_framework(const ColouredGraph& g, int d, ParamStream& stream,
                           int param_bits) {
    Framework f;
    f.graph = g;
    f.d = d;
    for (int c = 0; c < g.colour_count(); ++c) f.radii.push_back(sample_radius(stream, param_bits));
    f.positions.resize(static_cast<std::size_t>(g.n()) + 1);
    for (int v = 1; v <= g.n(); ++v)
        f.positions[static_cast<std::size_t>(v)] =
            sample_sphere_point(d + 1, f.radius_of(v), stream, param_bits);
    return f;
}

Framework project_to_unit_sphere(const Framework& f) {
    Framework out;
    std::vector<int> no_colours;
    std::vector<std::pair<int, int>> edges = f.graph.edges();
    out.graph = ColouredGraph(f.graph.n(), std::move(edges), std::move(no_colours));
    out.d = f.d;
    out.positions.resize(f.positions.size());
    for (int v = 1; v <= f.graph.n(); ++v) {
        const Rational r = f.radius_of(v);
        RatVec p = f.pos(v);
        for (auto& x : p) x /= r;
        out.positions[static_cast<std::size_t>(v)] = std::move(p);
    }
    return out;
}

namespace {

std::size_t block_col(int v, int coord, int d) {
    return static_cast<std::size_t>(v - 1) * (d + 1) + static_cast<std::size_t>(coord);
}

}  // namespace

RationalMatrix build_rigidity_matrix(const Framework& f) {
    const ColouredGraph& g = f.graph;
    const int d = f.d, n = g.n(), k = g.colour_count();
    const std::size_t rows = static_cast<std::size_t>(g.edge_count() + n);
    const std::size_t cols = static_cast<std::size_t>((d + 1) * n + k);
    RationalMatrix m(rows, cols);

    static const char* axes = "xyz";
    for (int v = 1; v <= n; ++v)
        for (int c = 0; c <= d; ++c)
            m.col_labels.push_back("v" + std::to_string(v) + "." + axes[c]);
    for (int c = 0; c < k; ++c) m.col_labels.push_back("r:" + g.colour_names()[static_cast<std::size_t>(c)]);

    std::size_t row = 0;
    for (const auto& [u, v] : g.edges()) {
        for (int c = 0; c <= d; ++c) {
            const Rational diff = f.pos(u)[static_cast<std::size_t>(c)] -
                                  f.pos(v)[static_cast<std::size_t>(c)];
            m.at(row, block_col(u, c, d)) = diff;
            m.at(row, block_col(v, c, d)) = -diff;
        }
        m.row_labels.push_back("e:" + std::to_string(u) + "-" + std::to_string(v));
        ++row;
    }
    for (int v = 1; v <= n; ++v) {
        for (int c = 0; c <= d; ++c)
            m.at(row, block_col(v, c, d)) = f.pos(v)[static_cast<std::size_t>(c)];
        if (g.is_coloured(v))
            m.at(row, static_cast<std::size_t>((d + 1) * n + g.colour(v))) = -1;
        m.row_labels.push_back("s:" + std::to_string(v));
        ++row;
    }
    return m;
}

long trivial_dimension_formula(int n, int k, int d) {
    return static_cast<long>(d + 1) * d / 2 + std::max(0, (d + 1) - (n - k));
}

long rigid_rank_formula(int n, int k, int d) {
    return static_cast<long>(d + 1) * n - static_cast<long>(d + 1) * d / 2 +
           std::min<long>(k, n - (d + 1));
}

std::vector<RatVec> trivial_motion_basis(const Framework& f, bool verify) {
    const ColouredGraph& g = f.graph;
    const int d = f.d, n = g.n(), k = g.colour_count();
    const std::size_t cols = static_cast<std::size_t>((d + 1) * n + k);

    {
        RationalMatrix pts(static_cast<std::size_t>(n), static_cast<std::size_t>(d + 1));
        for (int v = 1; v <= n; ++v)
            for (int c = 0; c <= d; ++c)
                pts.at(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(c)) =
                    f.pos(v)[static_cast<std::size_t>(c)];
        if (rank(pts) < static_cast<std::size_t>(d + 1))
            throw precondition_error(
                "positions do not span the ambient space; trivial motions degenerate");
    }

    std::vector<RatVec> basis;
    // Rotations: p'(v) = S p(v) for each elementary skew S, r' = 0.
    for (int a = 0; a <= d; ++a)
        for (int b = a + 1; b <= d; ++b) {
            RatVec vec(cols, Rational(0));
            for (int v = 1; v <= n; ++v) {
                vec[block_col(v, a, d)] = f.pos(v)[static_cast<std::size_t>(b)];
                vec[block_col(v, b, d)] = -f.pos(v)[static_cast<std::size_t>(a)];
            }
            basis.push_back(std::move(vec));
        }

    // Translations: p'(v) = x for all v, constrained so that p(v).x is
    // constant on each colour class and zero on uncoloured vertices; the
    // induced rates are r'(c) = p(v_c).x.
    std::vector<int> rep(static_cast<std::size_t>(k), 0);
    std::vector<RatVec> constraint_rows;
    for (int v = 1; v <= n; ++v) {
        const int c = g.colour(v);
        if (c < 0) {
            constraint_rows.push_back(f.pos(v));
        } else if (rep[static_cast<std::size_t>(c)] == 0) {
            rep[static_cast<std::size_t>(c)] = v;
        } else {
            RatVec row(static_cast<std::size_t>(d + 1));
            const int vc = rep[static_cast<std::size_t>(c)];
            for (int i = 0; i <= d; ++i)
                row[static_cast<std::size_t>(i)] = f.pos(vc)[static_cast<std::size_t>(i)] -
                                                   f.pos(v)[static_cast<std::size_t>(i)];
            constraint_rows.push_back(std::move(row));
        }
    }
    std::vector<RatVec> xs;
    if (constraint_rows.empty()) {
        for (int i = 0; i <= d; ++i) {
            RatVec x(static_cast<std::size_t>(d + 1), Rational(0));
            x[static_cast<std::size_t>(i)] = 1;
            xs.push_back(std::move(x));
        }
    } else {
        xs = kernel_basis(from_rows(constraint_rows));
    }
    for (const RatVec& x : xs) {
        RatVec vec(cols, Rational(0));
        for (int v = 1; v <= n; ++v)
            for (int i = 0; i <= d; ++i)
                vec[block_col(v, i, d)] = x[static_cast<std::size_t>(i)];
        for (int c = 0; c < k; ++c)
            vec[static_cast<std::size_t>((d + 1) * n + c)] =
                dot(f.pos(rep[static_cast<std::size_t>(c)]), x);
        basis.push_back(std::move(vec));
    }

    if (verify) {
        const RationalMatrix m = build_rigidity_matrix(f);
        for (const RatVec& vec : basis)
            if (!is_zero_vec(matvec(m, vec)))
                throw internal_error("trivial motion outside the kernel");
    }
    return basis;
}

long trivial_dimension(const Framework& f) {
    return static_cast<long>(span_rank(trivial_motion_basis(f, false)));
}

RigidityBundle analyze_bundle(const Framework& f) {
    validate_framework(f);
    RigidityBundle b;
    b.matrix = build_rigidity_matrix(f);
    b.rank = static_cast<long>(rank(b.matrix));
    b.kernel = kernel_basis(b.matrix);
    b.trivial_dim = trivial_dimension(f);
    return b;
}

long geometric_rank(const Framework& f) {
    const ColouredGraph& g = f.graph;
    const int d = f.d, n = g.n(), k = g.colour_count();

    // The n sphere rows are always independent (block-diagonal nonzero
    // positions); eliminate them first and rank the reduced edge rows.
    std::vector<int> pivot_coord(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        int pc = -1;
        for (int c = 0; c <= d; ++c)
            if (f.pos(v)[static_cast<std::size_t>(c)] != 0) { pc = c; break; }
        if (pc < 0) throw input_error("zero position at vertex " + std::to_string(v));
        pivot_coord[static_cast<std::size_t>(v)] = pc;
    }
    // Column layout: per vertex the d non-pivot coordinates, then colours.
    std::vector<std::size_t> col_base(static_cast<std::size_t>(n) + 1, 0);
    std::size_t nc = 0;
    for (int v = 1; v <= n; ++v) {
        col_base[static_cast<std::size_t>(v)] = nc;
        nc += static_cast<std::size_t>(d);
    }
    const std::size_t colour_base = nc;
    nc += static_cast<std::size_t>(k);

    RationalMatrix red(static_cast<std::size_t>(g.edge_count()), nc);
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto [u, v] = g.edge(i);
        for (int side = 0; side < 2; ++side) {
            const int a = side == 0 ? u : v;
            const int b = side == 0 ? v : u;
            const int pc = pivot_coord[static_cast<std::size_t>(a)];
            const Rational lambda = (f.pos(a)[static_cast<std::size_t>(pc)] -
                                     f.pos(b)[static_cast<std::size_t>(pc)]) /
                                    f.pos(a)[static_cast<std::size_t>(pc)];
            std::size_t cidx = col_base[static_cast<std::size_t>(a)];
            for (int c = 0; c <= d; ++c) {
                if (c == pc) continue;
                red.at(static_cast<std::size_t>(i), cidx++) =
                    (f.pos(a)[static_cast<std::size_t>(c)] -
                     f.pos(b)[static_cast<std::size_t>(c)]) -
                    lambda * f.pos(a)[static_cast<std::size_t>(c)];
            }
            if (g.is_coloured(a))
                red.at(static_cast<std::size_t>(i),
                       colour_base + static_cast<std::size_t>(g.colour(a))) += lambda;
        }
    }
    return n + static_cast<long>(rank(red));
}

Verdict analyze(const ColouredGraph& g, int d, const AnalyzeOptions& opts) {
    if (d != 1 && d != 2) throw scope_error("analysis supports d in {1,2} only");
    if (g.n() < d + 1)
        throw precondition_error("analysis needs n >= d+1 (got n=" + std::to_string(g.n()) +
                                 ", d=" + std::to_string(d) + ")");
    Verdict v;
    v.d = d;
    v.n = g.n();
    v.k = g.colour_count();
    v.rows = g.edge_count() + g.n();
    v.cols = static_cast<long>(d + 1) * g.n() + g.colour_count();
    v.expected_rigid_rank = rigid_rank_formula(v.n, v.k, d);
    v.trivial_dim = trivial_dimension_formula(v.n, v.k, d);

    const long rank_ceiling = std::min(v.expected_rigid_rank, std::min(v.rows, v.cols));
    long best = 0;
    int best_trial = -1;
    for (int t = 0; t < opts.trials; ++t) {
        ParamStream stream = ParamStream::for_trial(opts.seed, static_cast<std::uint64_t>(t));
        Framework fw = sample_framework(g, d, stream, opts.param_bits);
        const long r = geometric_rank(fw);
        if (r > v.expected_rigid_rank)
            throw internal_error("rank exceeds the rigidity ceiling; matrix builder bug");
        v.trial_ranks.push_back(r);
        if (r > best) {
            best = r;
            best_trial = t;
        }
        if (opts.early_exit && best == rank_ceiling && t + 1 < opts.trials) {
            v.early_exit = true;
            break;
        }
    }
    for (long r : v.trial_ranks)
        if (r != best) v.rank_stable = false;
    v.rank = best;
    v.kernel_dim = v.cols - v.rank;
    v.independent = (v.rank == v.rows);
    v.rigid = (v.rank == v.expected_rigid_rank);
    v.isostatic = v.independent && v.rigid;
    v.nontrivial_motions = v.kernel_dim - v.trivial_dim;

    if (opts.want_witness && !v.rigid) {
        ParamStream stream =
            ParamStream::for_trial(opts.seed, static_cast<std::uint64_t>(best_trial));
        Framework fw = sample_framework(g, d, stream, opts.param_bits);
        RationalMatrix m = build_rigidity_matrix(fw);
        v.col_labels = m.col_labels;
        const auto kernel = kernel_basis(m);
        auto trivials = trivial_motion_basis(fw, true);
        RationalMatrix triv = from_rows(trivials);
        const auto pivots = rref_inplace(triv);
        for (const RatVec& kv : kernel) {
            RatVec rem = reduce_against_rref(triv, pivots, kv);
            if (!is_zero_vec(rem)) {
                v.witness = primitive_integer_form(rem);
                break;
            }
        }
        if (!v.witness)
            throw internal_error("flexible verdict but no kernel vector outside the "
                                 "trivial space");
    }
    return v;
}

ColouredGraph apply_move(const ColouredGraph& g, int d, const MoveDescription& move) {
    if (move.type == MoveDescription::Type::ZeroExtension)
        return zero_extension(g, d, move.attach, move.colour);
    return one_extension(g, d, move.removed_edge, move.attach, move.colour);
}

PreservationReport check_extension_preservation(const ColouredGraph& g, int d,
                                                const MoveDescription& move,
                                                const AnalyzeOptions& opts) {
    PreservationReport rep;
    rep.base = analyze(g, d, opts);
    if (!rep.base.isostatic)
        throw precondition_error("extension-preservation check expects an isostatic base");
    ColouredGraph extended = apply_move(g, d, move);
    rep.extended = analyze(extended, d, opts);
    rep.preserved = rep.extended.isostatic;
    return rep;
}

namespace {

// Sub-framework on G - v; radii are matched by colour name because colour
// ids renumber after the removal.
Framework subframework_without(const Framework& f, int v) {
    Framework out;
    out.graph = remove_vertex(f.graph, v);
    out.d = f.d;
    out.radii.resize(static_cast<std::size_t>(out.graph.colour_count()));
    for (int c = 0; c < out.graph.colour_count(); ++c) {
        const std::string& name = out.graph.colour_names()[static_cast<std::size_t>(c)];
        const auto& old_names = f.graph.colour_names();
        const auto it = std::find(old_names.begin(), old_names.end(), name);
        out.radii[static_cast<std::size_t>(c)] =
            f.radii[static_cast<std::size_t>(it - old_names.begin())];
    }
    out.positions.push_back({});
    for (int u = 1; u <= f.graph.n(); ++u)
        if (u != v) out.positions.push_back(f.pos(u));
    return out;
}

long nontrivial_dof(const Framework& f) {
    RigidityBundle b = analyze_bundle(f);
    return static_cast<long>(b.kernel.size()) - b.trivial_dim;
}

}  // namespace

bool motion_filter_check(const Framework& f, int v) {
    const ColouredGraph& g = f.graph;
    validate_framework(f);
    if (v < 1 || v > g.n()) throw input_error("vertex " + std::to_string(v) + " not in graph");
    if (!g.is_coloured(v) || g.colour_isolated(v))
        throw precondition_error("filter vertex must be coloured and not colour-isolated");
    if (g.degree(v) <= f.d)
        throw precondition_error("filter vertex must have degree greater than d");

    const long dof_g = nontrivial_dof(f);
    if (dof_g != 1)
        throw precondition_error("(G,p) must have exactly one nontrivial dof, has " +
                                 std::to_string(dof_g));
    const long dof_sub = nontrivial_dof(subframework_without(f, v));
    if (dof_sub != 1)
        throw precondition_error("(G-v,p) must have exactly one nontrivial dof, has " +
                                 std::to_string(dof_sub));

    // Colour columns forced to vanish: chi(v) and every neighbour's colour.
    const int d = f.d, n = g.n(), k = g.colour_count();
    std::vector<std::size_t> zero_cols;
    std::vector<bool> used(static_cast<std::size_t>(k), false);
    auto add_colour = [&](int u) {
        const int c = g.colour(u);
        if (c >= 0 && !used[static_cast<std::size_t>(c)]) {
            used[static_cast<std::size_t>(c)] = true;
            zero_cols.push_back(static_cast<std::size_t>((d + 1) * n + c));
        }
    };
    add_colour(v);
    for (int u : g.neighbours(v)) add_colour(u);

    RationalMatrix m = build_rigidity_matrix(f);
    const std::size_t base_rows = m.rows;
    RationalMatrix stacked(m.rows + zero_cols.size(), m.cols);
    stacked.a.assign(m.a.begin(), m.a.end());
    stacked.a.resize(stacked.rows * stacked.cols, Rational(0));
    for (std::size_t i = 0; i < zero_cols.size(); ++i)
        stacked.at(base_rows + i, zero_cols[i]) = 1;
    const long dim_kz = static_cast<long>(m.cols) - static_cast<long>(rank(stacked));

    const auto trivials = trivial_motion_basis(f, false);
    RationalMatrix coeff(zero_cols.size(), trivials.size());
    for (std::size_t j = 0; j < trivials.size(); ++j)
        for (std::size_t i = 0; i < zero_cols.size(); ++i)
            coeff.at(i, j) = trivials[j][zero_cols[i]];
    const long null_coeff = static_cast<long>(trivials.size()) - static_cast<long>(rank(coeff));
    const long dep = static_cast<long>(trivials.size()) -
                     static_cast<long>(span_rank(trivials));
    const long dim_tz = null_coeff - dep;

    return dim_kz > dim_tz;
}

}  // namespace spherig
