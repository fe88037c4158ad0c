#include "csfkit/graph.hpp"

#include "csfkit/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace csf {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
    if (n < 0 || n > 62) throw std::domain_error("vertex count must be in 0..62");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::domain_error("vertex out of range");
}

int Graph::edge_count() const { return (int)edges().size(); }

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::domain_error("loops are not allowed");
    if (has_edge(u, v)) return;
    adj_[u] |= uint64_t(1) << v;
    adj_[v] |= uint64_t(1) << u;
    edges_valid_ = false;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
}

uint64_t Graph::neighbours(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const { return __builtin_popcountll(neighbours(v)); }

const std::vector<std::pair<int, int>>& Graph::edges() const {
    if (!edges_valid_) {
        edges_.clear();
        for (int v = 1; v < n_; ++v) {
            uint64_t below = adj_[v] & ((uint64_t(1) << v) - 1);
            while (below) {
                int u = __builtin_ctzll(below);
                below &= below - 1;
                edges_.emplace_back(u, v);
            }
        }
        std::sort(edges_.begin(), edges_.end());
        edges_valid_ = true;
    }
    return edges_;
}

Graph make_path(int n) {
    if (n < 1) throw std::domain_error("path needs at least one vertex");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 1) throw std::domain_error("cycle needs at least one vertex");
    if (n <= 2) return make_complete(n);
    Graph g = make_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph make_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::domain_error("both parts need at least one vertex");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph make_claw() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    return g;
}

Graph make_saltire(int a, int b) {
    if (a < 2 || b < 2) throw std::domain_error("saltire needs a, b >= 2");
    Graph g = make_cycle(a + b);
    g.add_edge(0, a);
    g.add_edge(1, a + 1);
    return g;
}

Graph make_augmented_saltire(int a, int b) {
    if (a < 2 || b < 3) throw std::domain_error("augmented saltire needs a >= 2, b >= 3");
    Graph g = make_saltire(a, b);
    g.add_edge(0, a + 1);
    return g;
}

Graph make_triangular_tower(int a, int b, int c) {
    if (a < 2 || b < 2 || c < 2) throw std::domain_error("triangular tower needs a, b, c >= 2");
    Graph g(a + b + c);
    for (int i = 0; i + 1 < a; ++i) g.add_edge(i, i + 1);
    for (int i = a; i + 1 < a + b; ++i) g.add_edge(i, i + 1);
    for (int i = a + b; i + 1 < a + b + c; ++i) g.add_edge(i, i + 1);
    // triangle on the first vertices of the paths, triangle on the last
    g.add_edge(0, a);
    g.add_edge(a, a + b);
    g.add_edge(a + b, 0);
    g.add_edge(a - 1, a + b - 1);
    g.add_edge(a + b - 1, a + b + c - 1);
    g.add_edge(a + b + c - 1, a - 1);
    return g;
}

Graph make_ak33() {
    Graph g = make_cycle(6);
    g.add_edge(1, 4);
    g.add_edge(2, 5);
    g.add_edge(0, 3);
    g.add_edge(2, 4);
    return g;
}

namespace {

struct UnionFind {
    std::vector<int> parent, size;

    explicit UnionFind(int n) : parent(n), size(n, 1) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

void check_subset(const Graph& g, const EdgeSubset& s) {
    int m = g.edge_count();
    if (m < 64 && (s.bits >> m) != 0)
        throw std::domain_error("edge subset has bits beyond the edge list");
}

} // namespace

Partition component_partition(const Graph& g, const EdgeSubset& s) {
    check_subset(g, s);
    UnionFind uf(g.vertex_count());
    const auto& es = g.edges();
    for (int k = 0; k < (int)es.size(); ++k)
        if (s.contains(k)) uf.unite(es[k].first, es[k].second);
    std::vector<int> sizes;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (uf.find(v) == v) sizes.push_back(uf.size[v]);
    return Partition::from_unsorted(std::move(sizes));
}

Graph contract_simplify(const Graph& g, const EdgeSubset& s) {
    check_subset(g, s);
    int n = g.vertex_count();
    UnionFind uf(n);
    const auto& es = g.edges();
    for (int k = 0; k < (int)es.size(); ++k)
        if (s.contains(k)) uf.unite(es[k].first, es[k].second);
    std::vector<int> label(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (uf.find(v) == v) label[v] = next++;
    Graph out(next);
    for (const auto& [u, v] : es) {
        int ru = uf.find(u), rv = uf.find(v);
        if (ru != rv) out.add_edge(label[ru], label[rv]);
    }
    return out;
}

Graph delete_vertices(const Graph& g, const std::vector<int>& vs) {
    int n = g.vertex_count();
    std::vector<bool> drop(n, false);
    for (int v : vs) {
        if (v < 0 || v >= n) throw std::domain_error("vertex out of range");
        if (drop[v]) throw std::domain_error("duplicate vertex in deletion set");
        drop[v] = true;
    }
    std::vector<int> label(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!drop[v]) label[v] = next++;
    Graph out(next);
    for (const auto& [u, v] : g.edges())
        if (!drop[u] && !drop[v]) out.add_edge(label[u], label[v]);
    return out;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    uint64_t seen = 1, frontier = 1;
    while (frontier) {
        uint64_t next = 0;
        while (frontier) {
            int v = __builtin_ctzll(frontier);
            frontier &= frontier - 1;
            next |= g.neighbours(v);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    int na = a.vertex_count(), nb = b.vertex_count();
    if (na + nb > 62) throw capacity_error("disjoint union exceeds 62 vertices");
    Graph out(na + nb);
    for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
    for (const auto& [u, v] : b.edges()) out.add_edge(na + u, na + v);
    return out;
}

} // namespace csf
