#include "csfkit/errors.hpp"
#include "csfkit/graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace csf {

namespace {

// Lexicographically least upper-triangle bit string over all vertex orders
// listing degrees in non-decreasing sequence.  String bit k is kept at
// uint64 bit 63-k so prefixes compare numerically; n <= 10 means at most 45
// bits.  Branches are cut as soon as their prefix exceeds the best string.
struct CanonSearch {
    int n = 0; // at most 10, and the loops repeat that bound explicitly
    uint64_t rows[10] = {};
    int deg[10] = {};
    int want[10] = {};
    int perm[10] = {};
    uint64_t best = ~uint64_t(0);

    uint64_t run() {
        for (int v = 0; v < n && v < 10; ++v) deg[v] = __builtin_popcountll(rows[v]);
        for (int v = 0; v < n && v < 10; ++v) want[v] = deg[v];
        std::sort(want, want + std::min(n, 10));
        dfs(0, 0, 0, 0);
        return best;
    }

    void dfs(int pos, uint64_t used, uint64_t cur, int curlen) {
        if (pos >= n || pos >= 10) {
            if (cur < best) best = cur;
            return;
        }
        for (int v = 0; v < n && v < 10; ++v) {
            if ((used >> v) & 1 || deg[v] != want[pos]) continue;
            uint64_t ncur = cur;
            int nlen = curlen + pos;
            if (pos) {
                uint64_t add = 0;
                for (int j = 0; j < pos; ++j) add = add << 1 | ((rows[v] >> perm[j]) & 1);
                ncur |= add << (64 - nlen);
            }
            uint64_t mask = nlen ? ~uint64_t(0) << (64 - nlen) : 0;
            if (ncur > (best & mask)) continue;
            perm[pos] = v;
            dfs(pos + 1, used | uint64_t(1) << v, ncur, nlen);
        }
    }
};

Graph graph_from_canon_bits(int n, uint64_t bits) {
    Graph g(n);
    int k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if ((bits >> (63 - k)) & 1) g.add_edge(u, v);
    return g;
}

} // namespace

std::string canonical_form(const Graph& g) {
    if (g.vertex_count() > 10)
        throw capacity_error("canonical_form handles at most 10 vertices");
    CanonSearch s;
    s.n = g.vertex_count();
    for (int v = 0; v < s.n; ++v) s.rows[v] = g.neighbours(v);
    return to_graph6(graph_from_canon_bits(s.n, s.run()));
}

std::vector<Graph> enumerate_connected(int n) {
    if (n < 1) throw std::domain_error("enumerate_connected needs n >= 1");
    if (n > 7)
        throw capacity_error(
            "enumerate_connected is built in up to 7 vertices; supply a graph6 corpus for more");

    std::pair<int, int> pairs[21];
    int nb = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs[nb++] = {u, v};

    std::unordered_set<uint64_t> canon;
    const uint64_t full = (uint64_t(1) << n) - 1;
    for (uint64_t mask = 0; mask < (uint64_t(1) << nb); ++mask) {
        uint64_t rows[10] = {};
        for (uint64_t rest = mask; rest;) {
            int k = __builtin_ctzll(rest);
            rest &= rest - 1;
            rows[pairs[k].first] |= uint64_t(1) << pairs[k].second;
            rows[pairs[k].second] |= uint64_t(1) << pairs[k].first;
        }
        uint64_t seen = 1, frontier = 1;
        while (frontier) {
            uint64_t next = 0;
            while (frontier) {
                int v = __builtin_ctzll(frontier);
                frontier &= frontier - 1;
                next |= rows[v];
            }
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen != full) continue;

        CanonSearch s;
        s.n = n;
        std::copy(rows, rows + n, s.rows);
        canon.insert(s.run());
    }

    std::vector<uint64_t> sorted(canon.begin(), canon.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Graph> out;
    out.reserve(sorted.size());
    for (uint64_t bits : sorted) out.push_back(graph_from_canon_bits(n, bits));
    return out;
}

} // namespace csf
