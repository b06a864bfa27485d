#include "spherig/moves.hpp"

#include <algorithm>
#include <set>

namespace spherig {

int zero_move_degree(const ColouredGraph& h, int v, int d) {
    if (h.colour_count() >= h.n() - (d + 1)) return d + 1;
    return h.colour_isolated(v) ? d + 1 : d;
}

int one_move_degree(const ColouredGraph& h, int v, int d) {
    return h.colour_isolated(v) ? d + 2 : d + 1;
}

namespace {

// Builds g plus one vertex n+1 coloured per spec, adjacent to `attach`.
ColouredGraph with_new_vertex(const ColouredGraph& g, const std::vector<int>& attach,
                              const ColourSpec& colour) {
    std::set<int> uniq(attach.begin(), attach.end());
    if (uniq.size() != attach.size())
        throw input_error("attachment list repeats a vertex (duplicate edge insertion)");
    for (int a : attach)
        if (a < 1 || a > g.n())
            throw input_error("attachment vertex " + std::to_string(a) + " not in graph");

    const int nv = g.n() + 1;
    auto edges = g.edges();
    for (int a : attach) edges.emplace_back(a, nv);

    std::vector<int> colours;
    for (int v = 1; v <= g.n(); ++v) colours.push_back(g.colour(v));
    auto names = g.colour_names();
    switch (colour.kind) {
        case ColourSpec::Kind::Uncoloured:
            colours.push_back(-1);
            break;
        case ColourSpec::Kind::Existing:
            if (colour.existing_id < 0 || colour.existing_id >= g.colour_count())
                throw input_error("colour id " + std::to_string(colour.existing_id) +
                                  " is not in use (colour-isolation misclassification)");
            colours.push_back(colour.existing_id);
            break;
        case ColourSpec::Kind::Fresh: {
            std::string name = colour.fresh_name;
            if (name.empty()) {
                int i = static_cast<int>(names.size()) + 1;
                while (std::find(names.begin(), names.end(), "c" + std::to_string(i)) !=
                       names.end())
                    ++i;
                name = "c" + std::to_string(i);
            } else if (std::find(names.begin(), names.end(), name) != names.end()) {
                throw input_error("fresh colour name '" + name +
                                  "' already in use (colour-isolation misclassification)");
            }
            colours.push_back(static_cast<int>(names.size()));
            names.push_back(name);
            break;
        }
    }
    return ColouredGraph(nv, std::move(edges), std::move(colours), std::move(names));
}

}  // namespace

ColouredGraph zero_extension(const ColouredGraph& g, int d, const std::vector<int>& attach,
                             const ColourSpec& colour) {
    ColouredGraph h = with_new_vertex(g, attach, colour);
    const int v = h.n();
    const int need = zero_move_degree(h, v, d);
    if (static_cast<int>(attach.size()) != need)
        throw input_error("0-extension degree rule: the new vertex must have degree " +
                          std::to_string(need) + ", got " + std::to_string(attach.size()));
    return h;
}

ColouredGraph zero_reduction(const ColouredGraph& g, int d, int v) {
    if (v < 1 || v > g.n()) throw input_error("vertex " + std::to_string(v) + " not in graph");
    const int need = zero_move_degree(g, v, d);
    if (g.degree(v) != need)
        throw input_error("0-reduction degree rule: vertex " + std::to_string(v) +
                          " must have degree " + std::to_string(need) + ", has " +
                          std::to_string(g.degree(v)));
    return remove_vertex(g, v);
}

ColouredGraph one_extension(const ColouredGraph& g, int d, std::pair<int, int> removed,
                            const std::vector<int>& attach, const ColourSpec& colour) {
    if (!g.has_edge(removed.first, removed.second))
        throw input_error("1-extension must subdivide an existing edge; [" +
                          std::to_string(removed.first) + "," +
                          std::to_string(removed.second) + "] is absent");
    if (std::find(attach.begin(), attach.end(), removed.first) == attach.end() ||
        std::find(attach.begin(), attach.end(), removed.second) == attach.end())
        throw input_error("1-extension attachment list must contain both endpoints of the "
                          "removed edge");
    const std::pair<int, int> rem{std::min(removed.first, removed.second),
                                  std::max(removed.first, removed.second)};
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges())
        if (e != rem) edges.push_back(e);
    std::vector<int> cols;
    for (int v = 1; v <= g.n(); ++v) cols.push_back(g.colour(v));
    ColouredGraph without(g.n(), std::move(edges), std::move(cols), g.colour_names());

    ColouredGraph h = with_new_vertex(without, attach, colour);
    const int v = h.n();
    const int need = one_move_degree(h, v, d);
    if (static_cast<int>(attach.size()) != need)
        throw input_error("1-extension degree rule: the new vertex must have degree " +
                          std::to_string(need) + ", got " + std::to_string(attach.size()));
    return h;
}

ColouredGraph one_reduction(const ColouredGraph& g, int d, int v, std::pair<int, int> ij) {
    if (v < 1 || v > g.n()) throw input_error("vertex " + std::to_string(v) + " not in graph");
    const int need = one_move_degree(g, v, d);
    if (g.degree(v) != need)
        throw input_error("1-reduction degree rule: vertex " + std::to_string(v) +
                          " must have degree " + std::to_string(need) + ", has " +
                          std::to_string(g.degree(v)));
    auto [i, j] = ij;
    if (i == j) throw input_error("1-reduction needs two distinct neighbours");
    if (!g.has_edge(v, i) || !g.has_edge(v, j))
        throw input_error("1-reduction pair must be neighbours of the removed vertex");
    if (g.has_edge(i, j))
        throw input_error("duplicate edge insertion: [" + std::to_string(i) + "," +
                          std::to_string(j) + "] already exists");
    ColouredGraph h = remove_vertex(g, v);
    auto shift = [v](int x) { return x > v ? x - 1 : x; };
    auto edges = h.edges();
    edges.emplace_back(shift(i), shift(j));
    std::vector<int> cols;
    for (int u = 1; u <= h.n(); ++u) cols.push_back(h.colour(u));
    return ColouredGraph(h.n(), std::move(edges), std::move(cols), h.colour_names());
}

std::optional<std::pair<int, int>> find_admissible_one_reduction(
    const ColouredGraph& g, int d, int v, const OracleOptions& opts) {
    const int need = one_move_degree(g, v, d);
    if (g.degree(v) != need)
        throw precondition_error("vertex " + std::to_string(v) +
                                 " does not satisfy the 1-reduction degree rule");
    if (!sparsity_check(g, d, opts).tight)
        throw precondition_error("admissible 1-reduction search expects a tight host");
    const auto nbrs = g.neighbours(v);
    for (std::size_t a = 0; a < nbrs.size(); ++a)
        for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
            const int i = nbrs[a], j = nbrs[b];
            if (g.has_edge(i, j)) continue;
            ColouredGraph reduced = one_reduction(g, d, v, {i, j});
            if (sparsity_check(reduced, d, opts).sparse) return std::make_pair(i, j);
        }
    return std::nullopt;
}

}  // namespace spherig
