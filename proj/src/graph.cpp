#include "spherig/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace spherig {

ColouredGraph::ColouredGraph(int n, std::vector<std::pair<int, int>> edges,
                             std::vector<int> colour_of_vertex,
                             std::vector<std::string> colour_names)
    : n_(n), edges_(std::move(edges)) {
    if (n < 0 || n > kMaxVertices)
        throw input_error("vertex count out of range (0.." + std::to_string(kMaxVertices) + ")");
    colour_.assign(static_cast<std::size_t>(n) + 1, -1);
    for (auto& e : edges_) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first == e.second)
            throw input_error("loop edge [" + std::to_string(e.first) + "," +
                              std::to_string(e.second) + "] is not allowed");
        if (e.first < 1 || e.second > n)
            throw input_error("edge references unknown vertex " +
                              std::to_string(e.first < 1 ? e.first : e.second));
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1])
            throw input_error("duplicate edge [" + std::to_string(edges_[i].first) + "," +
                              std::to_string(edges_[i].second) + "]");

    if (static_cast<int>(colour_of_vertex.size()) != n && !colour_of_vertex.empty())
        throw input_error("colouring must assign every vertex or none");

    // Renumber so the colour set in use is exactly the image of the colouring.
    std::map<int, int> remap;
    std::vector<int> order;
    for (int v = 1; v <= n; ++v) {
        int c = colour_of_vertex.empty() ? -1 : colour_of_vertex[static_cast<std::size_t>(v) - 1];
        if (c >= 0 && !remap.count(c)) {
            remap[c] = static_cast<int>(order.size());
            order.push_back(c);
        }
        colour_[static_cast<std::size_t>(v)] = c < 0 ? -1 : remap[c];
    }
    if (colour_names.empty()) {
        for (std::size_t i = 0; i < order.size(); ++i)
            colour_names_.push_back("c" + std::to_string(i + 1));
    } else {
        for (int old_id : order) {
            if (old_id >= static_cast<int>(colour_names.size()))
                throw input_error("colour id without a name");
            colour_names_.push_back(colour_names[static_cast<std::size_t>(old_id)]);
        }
    }
}

std::vector<int> ColouredGraph::colour_class(int c) const {
    std::vector<int> out;
    for (int v = 1; v <= n_; ++v)
        if (colour(v) == c) out.push_back(v);
    return out;
}

bool ColouredGraph::colour_isolated(int v) const {
    if (!is_coloured(v)) return false;
    for (int u = 1; u <= n_; ++u)
        if (u != v && colour(u) == colour(v)) return false;
    return true;
}

int ColouredGraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges_)
        if (e.first == v || e.second == v) ++d;
    return d;
}

std::vector<int> ColouredGraph::neighbours(int v) const {
    std::vector<int> out;
    for (const auto& e : edges_) {
        if (e.first == v) out.push_back(e.second);
        if (e.second == v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool ColouredGraph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int ColouredGraph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it != edges_.end() && *it == std::make_pair(u, v))
        return static_cast<int>(it - edges_.begin());
    return -1;
}

VertexMask ColouredGraph::edge_endpoints_mask(int i) const {
    const auto& e = edges_[static_cast<std::size_t>(i)];
    return (VertexMask(1) << (e.first - 1)) | (VertexMask(1) << (e.second - 1));
}

VertexMask vertex_span(const ColouredGraph& g, EdgeMask f) {
    VertexMask vm = 0;
    while (f) {
        int i = __builtin_ctzll(f);
        vm |= g.edge_endpoints_mask(i);
        f &= f - 1;
    }
    return vm;
}

int vertex_span_size(const ColouredGraph& g, EdgeMask f) { return popcount(vertex_span(g, f)); }

int colour_count(const ColouredGraph& g, EdgeMask f) {
    VertexMask vm = vertex_span(g, f);
    std::uint64_t colours = 0;
    while (vm) {
        int v = __builtin_ctzll(vm) + 1;
        int c = g.colour(v);
        if (c >= 0) colours |= std::uint64_t(1) << c;
        vm &= vm - 1;
    }
    return popcount(colours);
}

namespace {

struct UnionFind {
    int parent[kMaxVertices + 1];
    void init(int n) {
        for (int i = 0; i <= n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

int component_count(const ColouredGraph& g, EdgeMask f) {
    UnionFind uf;
    uf.init(g.n());
    int comps = g.n();
    while (f) {
        int i = __builtin_ctzll(f);
        auto [u, v] = g.edge(i);
        if (uf.unite(u, v)) --comps;
        f &= f - 1;
    }
    return comps;
}

int component_count_induced(const ColouredGraph& g, EdgeMask f) {
    return component_count(g, f) - (g.n() - vertex_span_size(g, f));
}

bool is_connected(const ColouredGraph& g) {
    if (g.n() <= 1) return true;
    return component_count(g, g.full_edge_mask()) == 1;
}

ColouredGraph remove_vertex(const ColouredGraph& g, int v) {
    if (v < 1 || v > g.n()) throw input_error("vertex " + std::to_string(v) + " not in graph");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges()) {
        if (e.first == v || e.second == v) continue;
        edges.emplace_back(e.first > v ? e.first - 1 : e.first,
                           e.second > v ? e.second - 1 : e.second);
    }
    std::vector<int> colours;
    for (int u = 1; u <= g.n(); ++u)
        if (u != v) colours.push_back(g.colour(u));
    return ColouredGraph(g.n() - 1, std::move(edges), std::move(colours), g.colour_names());
}

ColouredGraph parse_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw parse_error("graph object needs 'vertices' and 'edges' fields");
    if (!j["vertices"].is_array() || !j["edges"].is_array())
        throw parse_error("'vertices' and 'edges' must be arrays");

    const auto& jverts = j["vertices"];
    const int n = static_cast<int>(jverts.size());
    std::vector<int> colour_ids(static_cast<std::size_t>(n), -1);
    std::vector<std::string> names;
    std::map<std::string, int> name_to_id;
    std::set<int> seen_ids;
    for (const auto& jv : jverts) {
        if (!jv.is_object() || !jv.contains("id") || !jv["id"].is_number_integer())
            throw parse_error("each vertex needs an integer 'id'");
        int id = jv["id"].get<int>();
        if (id < 1 || id > n)
            throw parse_error("vertex ids must form the dense set 1..n; got " +
                              std::to_string(id) + " with n=" + std::to_string(n));
        if (!seen_ids.insert(id).second)
            throw parse_error("duplicate vertex id " + std::to_string(id));
        if (jv.contains("colour")) {
            if (!jv["colour"].is_string()) throw parse_error("'colour' must be a string");
            std::string name = jv["colour"].get<std::string>();
            auto it = name_to_id.find(name);
            if (it == name_to_id.end()) {
                it = name_to_id.emplace(name, static_cast<int>(names.size())).first;
                names.push_back(name);
            }
            colour_ids[static_cast<std::size_t>(id) - 1] = it->second;
        }
    }

    std::vector<std::pair<int, int>> edges;
    for (const auto& je : j["edges"]) {
        if (!je.is_array() || je.size() != 2 || !je[0].is_number_integer() ||
            !je[1].is_number_integer())
            throw parse_error("each edge must be a pair of vertex ids");
        int u = je[0].get<int>(), v = je[1].get<int>();
        if (u == v) throw input_error("loop edge [" + std::to_string(u) + "," +
                                      std::to_string(v) + "] is not allowed");
        if (u < 1 || u > n || v < 1 || v > n)
            throw input_error("edge references unknown vertex " +
                              std::to_string(u < 1 || u > n ? u : v));
        edges.emplace_back(u, v);
    }
    return ColouredGraph(n, std::move(edges), std::move(colour_ids), std::move(names));
}

std::string serialize_graph(const ColouredGraph& g, int indent) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (int v = 1; v <= g.n(); ++v) {
        nlohmann::json jv;
        jv["id"] = v;
        if (g.is_coloured(v))
            jv["colour"] = g.colour_names()[static_cast<std::size_t>(g.colour(v))];
        j["vertices"].push_back(jv);
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges()) j["edges"].push_back({e.first, e.second});
    return j.dump(indent);
}

ColouredGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

}  // namespace spherig
