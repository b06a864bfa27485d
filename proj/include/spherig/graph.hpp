#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spherig/errors.hpp"

namespace spherig {

inline constexpr int kMaxVertices = 60;

// Subsets of edges are bitmasks over the host graph's edge indexing, and
// subsets of vertices bitmasks over ids (bit v-1 for vertex v).
using EdgeMask = std::uint64_t;
using VertexMask = std::uint64_t;

inline int popcount(std::uint64_t m) { return __builtin_popcountll(m); }

// Simple graph with a partial vertex colouring. Vertices are the dense set
// {1,...,n}; an uncoloured vertex has colour() == -1, never a sentinel
// colour, so colour counts are computable by set image. Colour ids are the
// dense set {0,...,k-1} of colours actually assigned.
class ColouredGraph {
public:
    ColouredGraph() = default;
    ColouredGraph(int n, std::vector<std::pair<int, int>> edges,
                  std::vector<int> colour_of_vertex,
                  std::vector<std::string> colour_names = {});

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }

    // -1 for uncoloured.
    int colour(int v) const { return colour_[static_cast<std::size_t>(v)]; }
    bool is_coloured(int v) const { return colour(v) >= 0; }
    int colour_count() const { return static_cast<int>(colour_names_.size()); }  // k
    const std::vector<std::string>& colour_names() const { return colour_names_; }
    std::vector<int> colour_class(int c) const;
    bool colour_isolated(int v) const;

    int degree(int v) const;
    std::vector<int> neighbours(int v) const;
    bool has_edge(int u, int v) const;
    int edge_index(int u, int v) const;  // -1 if absent

    EdgeMask full_edge_mask() const {
        return edge_count() == 0 ? 0 : ((EdgeMask(1) << edge_count()) - 1);
    }
    VertexMask edge_endpoints_mask(int i) const;

    bool operator==(const ColouredGraph& o) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;       // u < v, sorted lexicographically
    std::vector<int> colour_;                      // 1-based; colour_[0] unused
    std::vector<std::string> colour_names_;
};

// --- subgraph statistics on an edge subset F of a host graph ---

VertexMask vertex_span(const ColouredGraph& g, EdgeMask f);
int vertex_span_size(const ColouredGraph& g, EdgeMask f);

// k(F): number of distinct colours among V(F); uncoloured contributes nothing.
int colour_count(const ColouredGraph& g, EdgeMask f);

// omega(F): components of (V, F) on the FULL vertex set; isolated vertices
// count as components.
int component_count(const ColouredGraph& g, EdgeMask f);

// Components of the induced graph (V(F), F). Both conventions appear in the
// literature; call sites name the one they use.
int component_count_induced(const ColouredGraph& g, EdgeMask f);

bool is_connected(const ColouredGraph& g);

// Copy with vertex v removed; higher ids shift down to keep {1,...,n} dense.
ColouredGraph remove_vertex(const ColouredGraph& g, int v);

// --- serialized interchange format ---
// {"vertices":[{"id":1,"colour":"c1"},{"id":2}],"edges":[[1,2]]}

ColouredGraph parse_graph(const std::string& text);
std::string serialize_graph(const ColouredGraph& g, int indent = -1);
ColouredGraph load_graph_file(const std::string& path);

}  // namespace spherig
