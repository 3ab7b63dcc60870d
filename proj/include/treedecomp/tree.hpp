#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treedecomp/errors.hpp"
#include "treedecomp/graph.hpp"

namespace treedecomp {

// The pattern tree with BFS labels t_0..t_m and edge labels e_1..e_m,
// where e_i joins t_i to its parent t_{i'} and i' < i. T_A is the class
// of the root; T_B must contain a leaf. Immutable after label_tree.
class LabelledTree {
  public:
    int edge_count() const { return m_; }
    int vertex_count() const { return m_ + 1; }

    const std::string& name(int t) const { return names_[t]; }
    int index_of(const std::string& name) const;

    // Parent vertex index i' of edge e_i (also the parent of vertex t_i).
    int parent(int i) const {
        if (i < 1 || i > m_) throw IndexOutOfRangeError("edge index out of range");
        return parent_[i];
    }

    Side side(int t) const {
        if (t < 0 || t > m_) throw UnknownTreeVertexError("tree vertex out of range");
        return side_[t];
    }

    // S(t): labels of the edges incident with t_j, ascending.
    const std::vector<int>& incident_colours(int t) const {
        if (t < 0 || t > m_) throw UnknownTreeVertexError("tree vertex out of range");
        return incident_[t];
    }

    int degree(int t) const { return static_cast<int>(incident_colours(t).size()); }
    bool is_leaf(int t) const { return degree(t) == 1; }

    // Endpoint of e_i carrying the given side (each tree edge joins T_A to T_B).
    int endpoint_on_side(int i, Side s) const {
        return side_[i] == s ? i : parent_[i];
    }

    // True iff t_j lies in the subtree rooted at t_i (descendant-or-self).
    bool in_subtree(int j, int i) const;

    friend LabelledTree label_tree(const std::vector<std::pair<std::string, std::string>>& edges,
                                   const std::string& root);

  private:
    int m_ = 0;
    std::vector<std::string> names_;        // by label
    std::vector<Side> side_;                // by label
    std::vector<int> parent_;               // parent_[i] = i'(i), parent_[0] = -1
    std::vector<std::vector<int>> incident_;
};

// E(T) split by deleting e_i: minus spans the t_0-side component, plus
// the complement (always containing e_i).
struct TreeSplit {
    int index = 0;
    std::vector<int> minus_edges;  // ascending edge labels
    std::vector<int> plus_edges;   // ascending edge labels
    std::vector<char> vertex_in_minus;  // by vertex label; t_{i'} is in minus
};

// BFS labelling from the named root; children visited in input order.
// Throws NotATree, RootUnknown, NoLeafInTB.
LabelledTree label_tree(const std::vector<std::pair<std::string, std::string>>& edges,
                        const std::string& root);

// Lowest-input-index root whose labelling leaves a leaf in T_B.
LabelledTree auto_root(const std::vector<std::pair<std::string, std::string>>& edges);

TreeSplit split(const LabelledTree& t, int i);

}  // namespace treedecomp
