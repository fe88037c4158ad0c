#pragma once

#include "csfkit/graph.hpp"
#include "csfkit/symfunc.hpp"

#include <cstdint>
#include <optional>

namespace csf {

struct CsfOptions {
    int edge_cap = 30;
    int workers = 1;
};

struct CsfResult {
    std::string graph6;
    SymExpr power;
    std::optional<SymExpr> elementary;
    uint64_t subset_count_evaluated = 0;
};

// Signed edge-subset expansion X_G = sum over S of (-1)^|S| p_(parts of S),
// where the partition lists component sizes of the spanning subgraph (V,S).
// Graphs with more than edge_cap edges are refused.
CsfResult csf_power(const Graph& g, const CsfOptions& opts = {});

// csf_power followed by the change to the elementary basis.  Every
// coefficient must come out an integer; a fractional one would mean the
// transition is wrong, so it trips a logic_error.
CsfResult csf_elementary(const Graph& g, const CsfOptions& opts = {});

// Coefficient of e_mu in X_G without a full expansion.  Only p_lam with lam
// a coarsening of mu can contribute, so the subset walk abandons a branch as
// soon as a component closes whose size is not a sum of any sub-multiset of
// mu's parts.  weight(mu) must equal the vertex count.
Coeff e_coefficient_targeted(const Graph& g, const Partition& mu, const CsfOptions& opts = {});

// Exact count of proper colourings with palette 1..m, by direct search.
// Refuses when the m^n worst case exceeds the budget.
long long count_proper_colourings(const Graph& g, int m, long long budget = 100000000);

// sum of c_lam * m^len(lam) over a power-basis expansion; for X_G this equals
// the number of proper m-colourings.
BigInt colourings_from_power(const SymExpr& power, int m);

} // namespace csf
