#include "csfkit/clawtest.hpp"

#include "csfkit/errors.hpp"

#include <vector>

namespace csf {

namespace {

bool connected_within(const Graph& g, uint64_t keep) {
    if (keep == 0) return true;
    uint64_t start = keep & -keep;
    uint64_t seen = start, frontier = start;
    while (frontier) {
        uint64_t next = 0;
        while (frontier) {
            int v = __builtin_ctzll(frontier);
            frontier &= frontier - 1;
            next |= g.neighbours(v) & keep;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == keep;
}

// Walks edge subsets in index order with a rollback union-find, cutting any
// branch whose component count falls under four (it can never recover).
// Leaves with exactly four components get the quotient degree test.
struct ContractionSearch {
    const Graph& g;
    const std::vector<std::pair<int, int>>& edges;
    int n, m;
    std::vector<int> parent, csize;
    int components;
    uint64_t chosen = 0;
    std::optional<EdgeSubset> found;

    explicit ContractionSearch(const Graph& graph)
        : g(graph), edges(graph.edges()), n(graph.vertex_count()), m((int)edges.size()),
          parent(n), csize(n, 1), components(n) {
        for (int v = 0; v < n; ++v) parent[v] = v;
    }

    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }

    bool quotient_is_claw() const {
        int label[4], nlab = 0;
        int deg[4] = {0, 0, 0, 0};
        bool seen[4][4] = {};
        int cross = 0;
        for (auto& [u, v] : edges) {
            int ru = find(u), rv = find(v);
            if (ru == rv) continue;
            int iu = -1, iv = -1;
            for (int i = 0; i < nlab; ++i) {
                if (label[i] == ru) iu = i;
                if (label[i] == rv) iv = i;
            }
            if (iu < 0) label[iu = nlab++] = ru;
            if (iv < 0) label[iv = nlab++] = rv;
            if (seen[iu][iv]) continue;
            seen[iu][iv] = seen[iv][iu] = true;
            ++deg[iu];
            ++deg[iv];
            ++cross;
        }
        if (cross != 3) return false;
        int ones = 0, threes = 0;
        for (int i = 0; i < 4; ++i) {
            if (deg[i] == 1) ++ones;
            if (deg[i] == 3) ++threes;
        }
        return threes == 1 && ones == 3;
    }

    void walk(int k) {
        if (found) return;
        if (components < 4) return;
        if (k == m) {
            if (components == 4 && quotient_is_claw()) found = EdgeSubset{chosen};
            return;
        }
        walk(k + 1); // exclude

        if (found) return;
        int a = find(edges[k].first), b = find(edges[k].second);
        if (a != b) {
            if (csize[a] < csize[b]) std::swap(a, b);
            parent[b] = a;
            csize[a] += csize[b];
            --components;
            chosen |= uint64_t(1) << k;
            walk(k + 1);
            chosen &= ~(uint64_t(1) << k);
            ++components;
            csize[a] -= csize[b];
            parent[b] = b;
        } else {
            chosen |= uint64_t(1) << k;
            walk(k + 1);
            chosen &= ~(uint64_t(1) << k);
        }
    }
};

} // namespace

ClawFreeCheck is_claw_free(const Graph& g) {
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        std::vector<int> nb;
        for (uint64_t rest = g.neighbours(v); rest;) {
            int u = __builtin_ctzll(rest);
            rest &= rest - 1;
            nb.push_back(u);
        }
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                for (size_t k = j + 1; k < nb.size(); ++k) {
                    if (g.has_edge(nb[i], nb[k]) || g.has_edge(nb[j], nb[k])) continue;
                    return {false, std::array<int, 4>{v, nb[i], nb[j], nb[k]}};
                }
            }
    }
    return {true, std::nullopt};
}

ContractionCheck contracts_to_claw(const Graph& g, int edge_cap) {
    if (g.edge_count() > edge_cap)
        throw capacity_error("contraction search over " + std::to_string(g.edge_count()) +
                             " edges exceeds the cap of " + std::to_string(edge_cap));
    if (g.vertex_count() < 4) return {false, std::nullopt};
    ContractionSearch s(g);
    s.walk(0);
    if (s.found) return {true, s.found};
    return {false, std::nullopt};
}

IndependentTripleCheck is_ccf_bv(const Graph& g) {
    if (!is_connected(g)) return {true, std::nullopt};
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.has_edge(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (g.has_edge(a, c) || g.has_edge(b, c)) continue;
                uint64_t keep = ((n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1)) &
                                ~(uint64_t(1) << a | uint64_t(1) << b | uint64_t(1) << c);
                if (connected_within(g, keep))
                    return {false, std::array<int, 3>{a, b, c}};
            }
        }
    return {true, std::nullopt};
}

ClawReport claw_report(const Graph& g) {
    ClawFreeCheck cf = is_claw_free(g);
    IndependentTripleCheck bv = is_ccf_bv(g);
    return {cf.claw_free, cf.witness, bv.ccf, bv.witness};
}

} // namespace csf
