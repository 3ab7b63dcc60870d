#pragma once

#include <vector>

namespace treedecomp {

// Image record of a homomorphism h: V(T) -> V(G) together with the
// induced edge bijection. image[j] is the graph vertex playing t_j;
// edge_of[i] is the graph edge playing e_i (index 0 unused).
struct PseudoCopy {
    std::vector<int> image;
    std::vector<int> edge_of;

    int tree_size() const { return static_cast<int>(image.size()) - 1; }

    friend bool operator==(const PseudoCopy& a, const PseudoCopy& b) {
        return a.image == b.image && a.edge_of == b.edge_of;
    }
};

// Largest i such that v_0..v_i are pairwise distinct; m when the image
// is injective (i.e. the copy is isomorphic to T).
int goodness(const PseudoCopy& h);

inline bool is_isomorphic(const PseudoCopy& h) { return goodness(h) == h.tree_size(); }

}  // namespace treedecomp
