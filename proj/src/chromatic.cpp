#include "csfkit/chromatic.hpp"

#include "csfkit/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>
#include <vector>

namespace csf {

namespace {

// Depth-first walk over edge subsets in edge-index order, keeping a
// union-find that can roll back.  A component closes once no undecided edge
// touches it; in targeted mode a branch dies the moment a closed component's
// size is not an admissible sub-sum.  Workers split the space by fixing the
// first forced_len edge decisions.
struct SubsetWalker {
    int n = 0, m = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> finishers; // vertices whose last edge is k

    std::vector<char> allowed; // by component size; empty = no pruning
    uint64_t forced = 0;
    int forced_len = 0;

    std::vector<int> parent, csize, open;
    std::vector<int> scratch;
    std::map<std::vector<int>, long long> counts;
    uint64_t leaves = 0;

    void init(const Graph& g) {
        n = g.vertex_count();
        edges = g.edges();
        m = (int)edges.size();
        finishers.assign(std::max(m, 1), {});
        std::vector<int> last(n, -1);
        for (int k = 0; k < m; ++k) {
            last[edges[k].first] = k;
            last[edges[k].second] = k;
        }
        for (int v = 0; v < n; ++v)
            if (last[v] >= 0) finishers[last[v]].push_back(v);
        parent.resize(n);
        csize.resize(n);
        open.resize(n);
    }

    bool size_ok(int s) const { return allowed.empty() || allowed[s]; }

    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }

    void run() {
        for (int v = 0; v < n; ++v) {
            parent[v] = v;
            csize[v] = 1;
            open[v] = 1;
        }
        // vertices no edge touches are closed from the start
        bool touched_ok = true;
        std::vector<char> touched(n, 0);
        for (auto& [u, v] : edges) touched[u] = touched[v] = 1;
        for (int v = 0; v < n; ++v)
            if (!touched[v]) {
                open[v] = 0;
                if (!size_ok(1)) touched_ok = false;
            }
        if (!touched_ok) return;
        walk(0, 0);
    }

    void walk(int k, int parity) {
        if (k == m) {
            ++leaves;
            scratch.clear();
            for (int v = 0; v < n; ++v)
                if (parent[v] == v) scratch.push_back(csize[v]);
            std::sort(scratch.begin(), scratch.end(), std::greater<int>());
            counts[scratch] += parity ? -1 : 1;
            return;
        }
        bool lo = true, hi = true;
        if (k < forced_len) {
            if ((forced >> k) & 1)
                lo = false;
            else
                hi = false;
        }
        if (lo) branch(k, parity, false);
        if (hi) branch(k, parity, true);
    }

    void branch(int k, int parity, bool include) {
        int merged_child = -1, merged_parent = -1;
        if (include) {
            int a = find(edges[k].first), b = find(edges[k].second);
            if (a != b) {
                if (csize[a] < csize[b]) std::swap(a, b);
                parent[b] = a;
                csize[a] += csize[b];
                open[a] += open[b];
                merged_child = b;
                merged_parent = a;
            }
        }
        bool ok = true;
        int done = 0;
        for (int v : finishers[k]) {
            int r = find(v);
            --open[r];
            ++done;
            if (open[r] == 0 && !size_ok(csize[r])) {
                ok = false;
                break;
            }
        }
        if (ok) walk(k + 1, include ? parity ^ 1 : parity);
        for (int i = 0; i < done; ++i) ++open[find(finishers[k][i])];
        if (merged_child >= 0) {
            parent[merged_child] = merged_child;
            csize[merged_parent] -= csize[merged_child];
            open[merged_parent] -= open[merged_child];
        }
    }
};

// Runs the walk, splitting the first few edge decisions across workers.
void walk_all(const Graph& g, const std::vector<char>& allowed, int workers,
              std::map<std::vector<int>, long long>& counts, uint64_t& leaves) {
    int m = g.edge_count();
    int split = 0;
    if (workers > 1 && m >= 12) {
        while ((1 << split) < 4 * workers && split < m - 1) ++split;
    }
    uint64_t nprefix = uint64_t(1) << split;
    std::vector<SubsetWalker> walkers(workers);
    auto job = [&](int w) {
        walkers[w].init(g);
        walkers[w].allowed = allowed;
        walkers[w].forced_len = split;
        for (uint64_t p = w; p < nprefix; p += workers) {
            walkers[w].forced = p;
            walkers[w].run();
        }
    };
    if (workers <= 1) {
        job(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(job, w);
        for (auto& t : threads) t.join();
    }
    counts.clear();
    leaves = 0;
    for (auto& w : walkers) {
        leaves += w.leaves;
        for (auto& [sizes, c] : w.counts) {
            auto [it, fresh] = counts.emplace(sizes, c);
            if (!fresh) it->second += c;
        }
    }
}

void check_edge_cap(const Graph& g, int cap) {
    if (g.edge_count() > cap)
        throw capacity_error("graph has " + std::to_string(g.edge_count()) +
                             " edges, over the cap of " + std::to_string(cap) +
                             " (raise --edge-cap to override)");
}

} // namespace

CsfResult csf_power(const Graph& g, const CsfOptions& opts) {
    check_edge_cap(g, opts.edge_cap);
    std::map<std::vector<int>, long long> counts;
    uint64_t leaves = 0;
    walk_all(g, {}, std::max(opts.workers, 1), counts, leaves);
    SymExpr x(Basis::power, g.vertex_count());
    for (auto& [sizes, c] : counts) x.add_term(Partition(sizes), Coeff(c));
    return {to_graph6(g), std::move(x), std::nullopt, leaves};
}

CsfResult csf_elementary(const Graph& g, const CsfOptions& opts) {
    CsfResult r = csf_power(g, opts);
    SymExpr e = expand_to_e(r.power);
    for (auto& [idx, c] : e.terms())
        if (!is_integer(c))
            throw std::logic_error("chromatic expansion produced a non-integer coefficient at e_" +
                                   idx.to_string());
    r.elementary = std::move(e);
    return r;
}

Coeff e_coefficient_targeted(const Graph& g, const Partition& mu, const CsfOptions& opts) {
    if (mu.weight() != g.vertex_count())
        throw std::domain_error("target index must partition the vertex count");
    check_edge_cap(g, opts.edge_cap);

    int n = g.vertex_count();
    std::vector<char> sums(n + 1, 0); // achievable sub-sums of mu's parts
    sums[0] = 1;
    for (int p : mu.parts())
        for (int s = n; s >= p; --s)
            if (sums[s - p]) sums[s] = 1;

    std::map<std::vector<int>, long long> counts;
    uint64_t leaves = 0;
    walk_all(g, sums, 1, counts, leaves);

    Coeff total = 0;
    for (const Partition& lam : coarsenings_of(mu)) {
        auto it = counts.find(lam.parts());
        if (it == counts.end() || it->second == 0) continue;
        SymExpr p_lam = SymExpr::single(Basis::power, lam, 1);
        total += coefficient_of(expand_to_e(p_lam), mu) * it->second;
    }
    return total;
}

long long count_proper_colourings(const Graph& g, int m, long long budget) {
    if (m < 0) throw std::domain_error("colour count must be non-negative");
    int n = g.vertex_count();
    long long worst = 1;
    for (int i = 0; i < n; ++i) {
        if (m != 0 && worst > budget / std::max(m, 1))
            throw capacity_error("colouring search would exceed the budget of " +
                                 std::to_string(budget));
        worst *= m;
    }
    if (n == 0) return 1;
    if (m == 0) return 0;

    std::vector<int> colour(n, 0);
    long long count = 0;
    // assign vertices in order, checking edges to earlier vertices only
    std::vector<uint64_t> below(n);
    for (int v = 0; v < n; ++v)
        below[v] = g.neighbours(v) & ((uint64_t(1) << v) - 1);
    int v = 0;
    while (v >= 0) {
        if (++colour[v] > m) {
            colour[v] = 0;
            --v;
            continue;
        }
        bool ok = true;
        for (uint64_t rest = below[v]; rest;) {
            int u = __builtin_ctzll(rest);
            rest &= rest - 1;
            if (colour[u] == colour[v]) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (v == n - 1)
            ++count;
        else
            ++v;
    }
    return count;
}

BigInt colourings_from_power(const SymExpr& power, int m) {
    if (power.basis() != Basis::power)
        throw std::invalid_argument("colourings_from_power expects the power basis");
    Coeff total = 0;
    for (auto& [lam, c] : power.terms()) {
        BigInt pw = 1;
        for (int i = 0; i < lam.length(); ++i) pw *= m;
        total += c * pw;
    }
    if (!is_integer(total)) throw std::logic_error("colouring specialisation came out fractional");
    return numerator(total);
}

} // namespace csf
