#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treedecomp/errors.hpp"

namespace treedecomp {

// Bipartition side, shared between host graphs (A/B) and pattern trees
// (T_A/T_B). compatible(v,t) is side equality.
enum class Side : char { A = 0, B = 1 };

inline Side other_side(Side s) { return s == Side::A ? Side::B : Side::A; }

struct Edge {
    int u = -1;
    int v = -1;

    int other(int w) const { return w == u ? v : u; }
    bool joins(int x, int y) const { return (u == x && v == y) || (u == y && v == x); }
};

// Simple undirected bipartite host graph. Vertices carry stable string
// names mapped to dense indices in first-appearance order; everything
// downstream works with indices. Immutable after load_graph.
class Graph {
  public:
    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& name(int v) const { return names_[v]; }
    // -1 if the name is unknown.
    int index_of(const std::string& name) const;

    Side side(int v) const { return side_[v]; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<int>& incident(int v) const { return incidence_[v]; }
    int degree(int v) const { return static_cast<int>(incidence_[v].size()); }

    // -1 if no such edge.
    int edge_between(int u, int v) const;

    friend Graph load_graph(const std::vector<std::pair<std::string, std::string>>& edge_list);

  private:
    std::vector<std::string> names_;
    std::vector<Side> side_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incidence_;  // vertex -> edge ids, insertion order
};

// Builds a Graph from named pairs. Rejects self-loops, duplicate pairs
// and odd cycles (NotBipartiteError carries one witness cycle). The
// first vertex of each connected component lands in class A.
Graph load_graph(const std::vector<std::pair<std::string, std::string>>& edge_list);

// Global minimum edge cut, computed as n-1 unit-capacity max-flows from
// vertex 0. Returns 0 iff the graph is disconnected. Throws TooSmallError
// for graphs with fewer than 2 vertices.
int edge_connectivity(const Graph& g);

// An edge colouring: assignment edge id -> colour in {1..m}, total.
struct Colouring {
    std::vector<int> colour_of;  // indexed by edge id; 0 means unset

    int operator()(int edge_id) const { return colour_of[edge_id]; }
    bool total(const Graph& g) const {
        if (static_cast<int>(colour_of.size()) != g.edge_count()) return false;
        for (int c : colour_of)
            if (c <= 0) return false;
        return true;
    }
};

// |{e incident to v : col(e) = i}|.
int colour_degree(const Graph& g, const Colouring& col, int v, int colour);

// Dense (vertex, colour) -> count table; colours 1..m.
class ColourDegreeTable {
  public:
    ColourDegreeTable(const Graph& g, const Colouring& col, int num_colours);

    int degree(int v, int colour) const { return counts_[v * (num_colours_ + 1) + colour]; }
    int num_colours() const { return num_colours_; }

  private:
    int num_colours_;
    std::vector<int> counts_;
};

}  // namespace treedecomp
