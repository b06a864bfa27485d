#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spherig/graph.hpp"
#include "spherig/sparsity.hpp"

namespace spherig {

// Colour given to the vertex added by an extension.
struct ColourSpec {
    enum class Kind { Uncoloured, Existing, Fresh };
    Kind kind = Kind::Uncoloured;
    int existing_id = -1;      // when Existing
    std::string fresh_name;    // when Fresh; empty picks the next free name

    static ColourSpec uncoloured() { return {}; }
    static ColourSpec existing(int id) { return {Kind::Existing, id, ""}; }
    static ColourSpec fresh(std::string name = "") {
        return {Kind::Fresh, -1, std::move(name)};
    }
};

// Degree a vertex must have to be removable by a 0-reduction, evaluated on
// the graph that still contains it: d+1 when k >= n-(d+1); otherwise d for
// uncoloured / non-colour-isolated vertices and d+1 for colour-isolated ones.
int zero_move_degree(const ColouredGraph& h, int v, int d);

// Degree rule of the 1-reduction: d+1 for uncoloured or non-colour-isolated
// vertices, d+2 for colour-isolated ones.
int one_move_degree(const ColouredGraph& h, int v, int d);

ColouredGraph zero_extension(const ColouredGraph& g, int d, const std::vector<int>& attach,
                             const ColourSpec& colour);

ColouredGraph zero_reduction(const ColouredGraph& g, int d, int v);

// Removes edge (a,b) and adds a new vertex adjacent to `attach`, which must
// contain a and b.
ColouredGraph one_extension(const ColouredGraph& g, int d, std::pair<int, int> removed,
                            const std::vector<int>& attach, const ColourSpec& colour);

// Removes v and inserts the new edge {i,j} between two of its former
// neighbours; rejects the insertion if the edge already exists.
ColouredGraph one_reduction(const ColouredGraph& g, int d, int v, std::pair<int, int> ij);

// Smallest (lexicographic) neighbour pair whose 1-reduction leaves a sparse
// graph, or nullopt. Host must be tight and v must satisfy the degree rule.
std::optional<std::pair<int, int>> find_admissible_one_reduction(
    const ColouredGraph& g, int d, int v, const OracleOptions& opts = {});

}  // namespace spherig
