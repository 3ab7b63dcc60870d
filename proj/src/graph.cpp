#include "treedecomp/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <unordered_map>

namespace treedecomp {

int Graph::index_of(const std::string& name) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (names_[v] == name) return v;
    return -1;
}

int Graph::edge_between(int u, int v) const {
    for (int e : incidence_[u])
        if (edges_[e].joins(u, v)) return e;
    return -1;
}

namespace {

// Reconstructs the odd cycle witnessing non-bipartiteness: both endpoints
// of the offending edge got the same colour, so the two root paths plus
// the edge close an odd cycle through their lowest common ancestor.
std::vector<std::string> witness_cycle(const Graph& g, const std::vector<int>& parent,
                                       const std::vector<int>& depth, int u, int v) {
    std::vector<int> pu, pv;
    int x = u, y = v;
    while (depth[x] > depth[y]) {
        pu.push_back(x);
        x = parent[x];
    }
    while (depth[y] > depth[x]) {
        pv.push_back(y);
        y = parent[y];
    }
    while (x != y) {
        pu.push_back(x);
        pv.push_back(y);
        x = parent[x];
        y = parent[y];
    }
    std::vector<std::string> cycle;
    cycle.push_back(g.name(x));
    for (auto it = pu.rbegin(); it != pu.rend(); ++it) cycle.push_back(g.name(*it));
    std::reverse(pv.begin(), pv.end());
    for (auto it = pv.rbegin(); it != pv.rend(); ++it) cycle.push_back(g.name(*it));
    cycle.push_back(g.name(x));  // close the walk
    return cycle;
}

}  // namespace

Graph load_graph(const std::vector<std::pair<std::string, std::string>>& edge_list) {
    Graph g;
    std::unordered_map<std::string, int> index;
    auto intern = [&](const std::string& name) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(g.names_.size());
        index.emplace(name, id);
        g.names_.push_back(name);
        g.incidence_.emplace_back();
        return id;
    };

    std::map<std::pair<int, int>, int> seen;
    for (const auto& [a, b] : edge_list) {
        if (a.empty() || b.empty()) throw FormatError("empty vertex name in edge list");
        int u = intern(a);
        int v = intern(b);
        if (u == v) throw SelfLoopError("self-loop at vertex '" + a + "'");
        auto key = std::minmax(u, v);
        if (seen.count(key))
            throw DuplicateEdgeError("duplicate edge '" + a + " " + b + "'");
        int e = static_cast<int>(g.edges_.size());
        seen.emplace(key, e);
        g.edges_.push_back(Edge{u, v});
        g.incidence_[u].push_back(e);
        g.incidence_[v].push_back(e);
    }

    // 2-colour each component by BFS; the lowest-index vertex goes to A.
    const int n = g.vertex_count();
    g.side_.assign(n, Side::A);
    std::vector<int> colour(n, -1), parent(n, -1), depth(n, 0);
    for (int s = 0; s < n; ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e : g.incidence_[u]) {
                int v = g.edges_[e].other(u);
                if (colour[v] == -1) {
                    colour[v] = 1 - colour[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    q.push(v);
                } else if (colour[v] == colour[u]) {
                    throw NotBipartiteError("graph is not bipartite",
                                            witness_cycle(g, parent, depth, u, v));
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) g.side_[v] = colour[v] == 0 ? Side::A : Side::B;
    return g;
}

namespace {

// Unit-capacity max-flow from s to t via BFS augmentation. Residual
// capacities live per directed arc: arc 2e is u->v, arc 2e+1 is v->u.
int max_flow_unit(const Graph& g, int s, int t) {
    const int n = g.vertex_count();
    std::vector<int> cap(2 * g.edge_count(), 1);
    int flow = 0;
    for (;;) {
        std::vector<int> prev_arc(n, -1);
        std::vector<char> seen(n, 0);
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty() && !seen[t]) {
            int u = q.front();
            q.pop_front();
            for (int e : g.incident(u)) {
                int arc = 2 * e + (g.edge(e).u == u ? 0 : 1);
                int v = g.edge(e).other(u);
                if (!seen[v] && cap[arc] > 0) {
                    seen[v] = 1;
                    prev_arc[v] = arc;
                    q.push_back(v);
                }
            }
        }
        if (!seen[t]) return flow;
        for (int v = t; v != s;) {
            int arc = prev_arc[v];
            cap[arc] -= 1;
            cap[arc ^ 1] += 1;
            int e = arc / 2;
            v = (arc % 2 == 0) ? g.edge(e).u : g.edge(e).v;
        }
        ++flow;
    }
}

}  // namespace

int edge_connectivity(const Graph& g) {
    if (g.vertex_count() < 2) throw TooSmallError("edge_connectivity needs >= 2 vertices");
    int best = g.edge_count() + 1;
    for (int t = 1; t < g.vertex_count(); ++t) best = std::min(best, max_flow_unit(g, 0, t));
    return best;
}

int colour_degree(const Graph& g, const Colouring& col, int v, int colour) {
    if (v < 0 || v >= g.vertex_count()) throw UnknownVertexError("unknown vertex index");
    int count = 0;
    for (int e : g.incident(v)) {
        if (e >= static_cast<int>(col.colour_of.size()) || col.colour_of[e] <= 0)
            throw UncolouredEdgeError("edge " + std::to_string(e) + " has no colour");
        if (col.colour_of[e] == colour) ++count;
    }
    return count;
}

ColourDegreeTable::ColourDegreeTable(const Graph& g, const Colouring& col, int num_colours)
    : num_colours_(num_colours), counts_(g.vertex_count() * (num_colours + 1), 0) {
    for (int e = 0; e < g.edge_count(); ++e) {
        int c = col.colour_of.at(e);
        if (c <= 0 || c > num_colours) throw UncolouredEdgeError("edge colour out of range");
        counts_[g.edge(e).u * (num_colours_ + 1) + c] += 1;
        counts_[g.edge(e).v * (num_colours_ + 1) + c] += 1;
    }
}

}  // namespace treedecomp
