#include "treedecomp/tree.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace treedecomp {

int LabelledTree::index_of(const std::string& name) const {
    for (int t = 0; t <= m_; ++t)
        if (names_[t] == name) return t;
    return -1;
}

bool LabelledTree::in_subtree(int j, int i) const {
    while (j > i) j = parent_[j];
    return j == i;
}

LabelledTree label_tree(const std::vector<std::pair<std::string, std::string>>& edges,
                        const std::string& root) {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
    auto intern = [&](const std::string& name) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(names.size());
        index.emplace(name, id);
        names.push_back(name);
        return id;
    };

    std::vector<std::vector<int>> adj;  // input-order adjacency
    for (const auto& [a, b] : edges) {
        if (a.empty() || b.empty()) throw FormatError("empty vertex name in tree edge list");
        int u = intern(a);
        int v = intern(b);
        if (u == v) throw NotATreeError("self-loop in tree input");
        adj.resize(names.size());
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    adj.resize(names.size());

    const int n = static_cast<int>(names.size());
    const int m = static_cast<int>(edges.size());
    if (n == 0) throw NotATreeError("empty tree input");
    if (m != n - 1) throw NotATreeError("edge count differs from vertex count - 1");

    auto rit = index.find(root);
    if (rit == index.end()) throw RootUnknownError("root vertex '" + root + "' not in tree");

    // BFS from the root; children in input order. label[v] = t-index.
    std::vector<int> label(n, -1), order;
    std::vector<int> parent_vertex(n, -1);
    std::queue<int> q;
    q.push(rit->second);
    label[rit->second] = 0;
    order.push_back(rit->second);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u]) {
            if (label[v] != -1) continue;
            label[v] = static_cast<int>(order.size());
            order.push_back(v);
            parent_vertex[v] = u;
            q.push(v);
        }
    }
    if (static_cast<int>(order.size()) != n)
        throw NotATreeError("tree input is disconnected");

    LabelledTree t;
    t.m_ = m;
    t.names_.resize(n);
    t.side_.resize(n);
    t.parent_.assign(n, -1);
    t.incident_.assign(n, {});
    for (int v = 0; v < n; ++v) t.names_[label[v]] = names[v];
    for (int i = 1; i <= m; ++i) {
        int v = order[i];
        int p = label[parent_vertex[v]];
        t.parent_[i] = p;
        t.incident_[i].push_back(i);
        t.incident_[p].push_back(i);
    }
    for (auto& s : t.incident_) std::sort(s.begin(), s.end());
    for (int i = 0; i <= m; ++i)
        t.side_[i] = (i == 0) ? Side::A
                              : (t.side_[t.parent_[i]] == Side::A ? Side::B : Side::A);

    bool tb_has_leaf = false;
    for (int i = 0; i <= m; ++i)
        if (t.side_[i] == Side::B && t.incident_[i].size() == 1) tb_has_leaf = true;
    if (m >= 1 && !tb_has_leaf)
        throw NoLeafInTBError("rooting at '" + root + "' leaves T_B without a leaf");
    return t;
}

LabelledTree auto_root(const std::vector<std::pair<std::string, std::string>>& edges) {
    std::vector<std::string> names;
    for (const auto& [a, b] : edges) {
        if (std::find(names.begin(), names.end(), a) == names.end()) names.push_back(a);
        if (std::find(names.begin(), names.end(), b) == names.end()) names.push_back(b);
    }
    for (const auto& name : names) {
        try {
            return label_tree(edges, name);
        } catch (const NoLeafInTBError&) {
        }
    }
    throw NoLeafInTBError("no rooting leaves a leaf in T_B");
}

TreeSplit split(const LabelledTree& t, int i) {
    const int m = t.edge_count();
    if (i < 1 || i > m) throw IndexOutOfRangeError("split index out of range");
    TreeSplit s;
    s.index = i;
    s.vertex_in_minus.assign(m + 1, 0);
    for (int j = 0; j <= m; ++j) s.vertex_in_minus[j] = t.in_subtree(j, i) ? 0 : 1;
    for (int j = 1; j <= m; ++j) {
        // e_j lies on the t_i side iff its child endpoint t_j does.
        if (t.in_subtree(j, i))
            s.plus_edges.push_back(j);
        else
            s.minus_edges.push_back(j);
    }
    return s;
}

}  // namespace treedecomp
