#pragma once

#include "csfkit/partition.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace csf {

// Simple undirected graph on at most 62 labelled vertices (the single-byte
// graph6 range).  Adjacency rows are 64-bit sets; the edge list is derived
// lazily in lexicographic order (0,1),(0,2),(1,2),(0,3),...
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const;

    // Loops are rejected; adding an existing edge is a no-op.
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    uint64_t neighbours(int v) const;
    int degree(int v) const;

    // Sorted so that the pair (u,v), u < v, at index k is the edge bit k of
    // an EdgeSubset.
    const std::vector<std::pair<int, int>>& edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<uint64_t> adj_;
    mutable std::vector<std::pair<int, int>> edges_; // cache
    mutable bool edges_valid_ = true;
};

// Subset of a graph's edges; bit k refers to g.edges()[k].
struct EdgeSubset {
    uint64_t bits = 0;

    bool contains(int k) const { return (bits >> k) & 1; }
    int count() const { return __builtin_popcountll(bits); }
    bool operator==(const EdgeSubset&) const = default;
};

// --- generators ------------------------------------------------------------

Graph make_path(int n);  // n >= 1
Graph make_cycle(int n); // n >= 1; cycles on 1 or 2 vertices alias complete graphs
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_claw(); // star with centre 0

// Cycle v_0..v_{a+b-1} plus the crossing chords v_0 v_a and v_1 v_{a+1};
// a, b >= 2.  The (2,2) member is K_4.
Graph make_saltire(int a, int b);

// Saltire plus the extra chord v_0 v_{a+1}; a >= 2, b >= 3.
Graph make_augmented_saltire(int a, int b);

// Three vertex-disjoint paths of a, b, c vertices (a,b,c >= 2) whose first
// vertices are joined in a triangle and whose last vertices are joined in a
// triangle.
Graph make_triangular_tower(int a, int b, int c);

// The 6-cycle v_0..v_5 with chords v_1 v_4, v_2 v_5, v_0 v_3 and v_2 v_4:
// K_{3,3} on parts {0,2,4}/{1,3,5} plus one edge inside a part.
Graph make_ak33();

// --- operations ------------------------------------------------------------

// Component sizes of the spanning subgraph (V, s) as a partition of |V|.
Partition component_partition(const Graph& g, const EdgeSubset& s);

// Contracts every edge of s and simplifies (drops loops and parallel
// edges).  Resulting vertices are numbered by smallest original vertex.
Graph contract_simplify(const Graph& g, const EdgeSubset& s);

// Induced subgraph on V minus vs; vs must list distinct existing vertices.
Graph delete_vertices(const Graph& g, const std::vector<int>& vs);

// Graphs on 0 or 1 vertices count as connected.
bool is_connected(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

// --- graph6 ----------------------------------------------------------------

// One graph6 record, optionally prefixed by ">>graph6<<"; n <= 62.
// Malformed input raises parse_error with the byte offset.
Graph from_graph6(std::string_view record);
std::string to_graph6(const Graph& g);

// --- isomorphism-scale utilities (small n only) -----------------------------

// Canonical graph6 string: the lexicographically least upper-triangle bit
// string over all orderings that sort vertices by degree.  Two graphs on at
// most 10 vertices are isomorphic iff their canonical forms agree; larger
// inputs raise capacity_error.
std::string canonical_form(const Graph& g);

// One representative per isomorphism class of connected graphs on n
// vertices, sorted by canonical form; 1 <= n <= 7 (beyond that, supply a
// graph6 corpus instead).
std::vector<Graph> enumerate_connected(int n);

} // namespace csf
