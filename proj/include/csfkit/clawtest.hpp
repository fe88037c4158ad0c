#pragma once

#include "csfkit/graph.hpp"

#include <array>
#include <optional>

namespace csf {

struct ClawFreeCheck {
    bool claw_free;
    // centre followed by three pairwise non-adjacent neighbours
    std::optional<std::array<int, 4>> witness;
};

ClawFreeCheck is_claw_free(const Graph& g);

struct ContractionCheck {
    bool contracts;
    // edge subset whose contraction (after simplification) is the claw
    std::optional<EdgeSubset> witness;
};

// Search over edge subsets whose component partition has exactly four parts;
// branches drop below four components for good, so anything smaller is cut.
// Graphs with more than edge_cap edges are refused.
ContractionCheck contracts_to_claw(const Graph& g, int edge_cap = 30);

struct IndependentTripleCheck {
    bool ccf; // claw-contractible-free
    // when not ccf: an independent triple whose deletion leaves g connected
    std::optional<std::array<int, 3>> witness;
};

// Deletion criterion: a connected graph has no contraction to the claw iff
// removing any three pairwise non-adjacent vertices disconnects it
// (vacuously true without such a triple).  Disconnected input counts as
// claw-contractible-free: no contraction of it is connected, so none is the
// claw.
IndependentTripleCheck is_ccf_bv(const Graph& g);

struct ClawReport {
    bool claw_free;
    std::optional<std::array<int, 4>> claw_witness;
    bool ccf;
    std::optional<std::array<int, 3>> ccf_witness;
};

ClawReport claw_report(const Graph& g);

} // namespace csf
