#include "treedecomp/colouring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "treedecomp/rng.hpp"

namespace treedecomp {

std::vector<EquitableViolation> verify_equitable(const Graph& g, const LabelledTree& t,
                                                 const Colouring& col) {
    if (!col.total(g)) throw UncolouredEdgeError("colouring is not total on E(G)");
    ColourDegreeTable table(g, col, t.edge_count());
    std::vector<EquitableViolation> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int tv = 0; tv <= t.edge_count(); ++tv) {
            if (!compatible(g.side(v), t.side(tv))) continue;
            const auto& s = t.incident_colours(tv);
            for (std::size_t a = 0; a < s.size(); ++a) {
                for (std::size_t b = a + 1; b < s.size(); ++b) {
                    int dj = table.degree(v, s[a]);
                    int dk = table.degree(v, s[b]);
                    if (dj != dk)
                        out.push_back({v, tv, s[a], s[b], dj, dk});
                }
            }
        }
    }
    return out;
}

namespace {

struct SearchState {
    const Graph& g;
    const LabelledTree& t;
    std::vector<int> order;            // edge ids, search order
    std::vector<int> assignment;       // edge id -> colour (0 = unset)
    std::vector<int> counts;           // v * (m+1) + c -> partial colour degree
    std::vector<int> uncoloured_at;    // v -> # uncoloured incident edges
    std::vector<int> ceiling;          // v * (m+1) + c -> balance ceiling, or INT_MAX
    std::uint64_t nodes = 0;
    std::uint64_t budget;

    int count(int v, int c) const { return counts[v * (t.edge_count() + 1) + c]; }
};

// Exact equitability check at a fully coloured vertex.
bool vertex_ok(const SearchState& st, int v) {
    const auto& t = st.t;
    for (int tv = 0; tv <= t.edge_count(); ++tv) {
        if (!compatible(st.g.side(v), t.side(tv))) continue;
        const auto& s = t.incident_colours(tv);
        for (std::size_t a = 1; a < s.size(); ++a)
            if (st.count(v, s[a]) != st.count(v, s[0])) return false;
    }
    return true;
}

bool search(SearchState& st, std::size_t pos, bool& out_of_budget) {
    if (++st.nodes > st.budget) {
        out_of_budget = true;
        return false;
    }
    if (pos == st.order.size()) return true;
    const int e = st.order[pos];
    const Edge& ed = st.g.edge(e);
    const int m = st.t.edge_count();
    for (int c = 1; c <= m; ++c) {
        bool ok = true;
        for (int v : {ed.u, ed.v}) {
            if (st.count(v, c) + 1 > st.ceiling[v * (m + 1) + c]) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        st.assignment[e] = c;
        for (int v : {ed.u, ed.v}) {
            st.counts[v * (m + 1) + c] += 1;
            st.uncoloured_at[v] -= 1;
        }
        ok = true;
        for (int v : {ed.u, ed.v})
            if (st.uncoloured_at[v] == 0 && !vertex_ok(st, v)) ok = false;
        if (ok && search(st, pos + 1, out_of_budget)) return true;
        st.assignment[e] = 0;
        for (int v : {ed.u, ed.v}) {
            st.counts[v * (m + 1) + c] -= 1;
            st.uncoloured_at[v] += 1;
        }
        if (out_of_budget) return false;
    }
    return false;
}

}  // namespace

FindResult find_equitable(const Graph& g, const LabelledTree& t, std::uint64_t node_budget) {
    const int m = t.edge_count();
    SearchState st{g, t, {}, {}, {}, {}, {}, 0, node_budget};
    st.order.resize(g.edge_count());
    std::iota(st.order.begin(), st.order.end(), 0);
    std::stable_sort(st.order.begin(), st.order.end(), [&](int a, int b) {
        int da = std::min(g.degree(g.edge(a).u), g.degree(g.edge(a).v));
        int db = std::min(g.degree(g.edge(b).u), g.degree(g.edge(b).v));
        if (da != db) return da < db;
        return a < b;
    });
    st.assignment.assign(g.edge_count(), 0);
    st.counts.assign(g.vertex_count() * (m + 1), 0);
    st.uncoloured_at.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) st.uncoloured_at[v] = g.degree(v);

    // Each colour c has a unique compatible tree endpoint per side, so
    // the balance ceiling deg(v)/|S(t)| is a per-(v,c) constant.
    st.ceiling.assign(g.vertex_count() * (m + 1), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int c = 1; c <= m; ++c) {
            int tv = t.endpoint_on_side(c, g.side(v));
            st.ceiling[v * (m + 1) + c] = g.degree(v) / t.degree(tv);
        }
    }

    FindResult res;
    bool out_of_budget = false;
    bool found = search(st, 0, out_of_budget);
    res.nodes_visited = st.nodes;
    if (found) {
        res.status = SearchStatus::sat;
        res.colouring.colour_of = st.assignment;
    } else {
        res.status = out_of_budget ? SearchStatus::budget_exhausted : SearchStatus::unsat;
    }
    return res;
}

SynthInstance synth_instance(const LabelledTree& t, int copies, int a_pool, int b_pool,
                             std::uint64_t seed) {
    const int m = t.edge_count();
    if (copies < 1) throw ParameterOutOfRangeError("copies must be >= 1");
    if (a_pool < 1 || b_pool < 1) throw ParameterOutOfRangeError("pools must be >= 1");

    int need_a = 0, need_b = 0;
    for (int j = 0; j <= m; ++j) (t.side(j) == Side::A ? need_a : need_b) += 1;
    if (need_a > a_pool || need_b > b_pool)
        throw EmbeddingFailedError("pool smaller than a tree class");

    auto pool_name = [](Side s, int k) {
        return (s == Side::A ? std::string("a") : std::string("b")) + std::to_string(k);
    };

    // Global simplicity check by name pair.
    std::vector<std::pair<std::string, std::string>> pairs;
    std::set<std::pair<int, int>> used;  // (a-index, b-index)
    std::vector<std::vector<int>> images;  // per copy, tree label -> pool index (signed by side)

    constexpr int kRetries = 100;
    for (int k = 0; k < copies; ++k) {
        bool placed = false;
        for (int attempt = 0; attempt < kRetries && !placed; ++attempt) {
            Rng rng(derive_seed(seed, SeedDomain::synth, static_cast<std::uint64_t>(k),
                                static_cast<std::uint64_t>(attempt)));
            std::vector<int> perm_a = rng.permutation(a_pool);
            std::vector<int> perm_b = rng.permutation(b_pool);
            std::vector<int> img(m + 1);
            int na = 0, nb = 0;
            for (int j = 0; j <= m; ++j)
                img[j] = t.side(j) == Side::A ? perm_a[na++] : perm_b[nb++];
            bool clash = false;
            std::set<std::pair<int, int>> mine;
            for (int i = 1; i <= m && !clash; ++i) {
                int ja = t.endpoint_on_side(i, Side::A);
                int jb = t.endpoint_on_side(i, Side::B);
                auto key = std::make_pair(img[ja], img[jb]);
                if (used.count(key) || mine.count(key)) clash = true;
                mine.insert(key);
            }
            if (clash) continue;
            used.insert(mine.begin(), mine.end());
            images.push_back(img);
            for (int i = 1; i <= m; ++i) {
                int ja = t.endpoint_on_side(i, Side::A);
                int jb = t.endpoint_on_side(i, Side::B);
                pairs.emplace_back(pool_name(Side::A, img[ja]), pool_name(Side::B, img[jb]));
            }
            placed = true;
        }
        if (!placed)
            throw EmbeddingFailedError("could not embed copy " + std::to_string(k) +
                                       " without duplicating an edge");
    }

    SynthInstance inst;
    inst.graph = load_graph(pairs);
    inst.colouring.colour_of.resize(inst.graph.edge_count());
    for (int k = 0; k < copies; ++k)
        for (int i = 1; i <= m; ++i) inst.colouring.colour_of[k * m + (i - 1)] = i;

    for (int k = 0; k < copies; ++k) {
        PseudoCopy h;
        h.image.resize(m + 1);
        h.edge_of.assign(m + 1, -1);
        for (int j = 0; j <= m; ++j)
            h.image[j] = inst.graph.index_of(pool_name(t.side(j), images[k][j]));
        for (int i = 1; i <= m; ++i) h.edge_of[i] = k * m + (i - 1);
        inst.planted.push_back(std::move(h));
    }
    return inst;
}

}  // namespace treedecomp
