#pragma once

#include "csfkit/numeric.hpp"
#include "csfkit/partition.hpp"

#include <string>
#include <utility>
#include <vector>

namespace csf {

// One verified coefficient identity instance.
struct LemmaCheck {
    std::string lemma; // item id, e.g. "3.3" or "3.8.2"
    int n = 0;
    Partition index;    // basis index whose coefficient is compared
    std::string target; // e.g. "[p_(6)] X(SA 3,3)"
    Coeff expected;
    Coeff computed;
    bool pass = false;
};

// Item ids in suite order.  Multi-graph lemmas carry a sub-index: 3.8.1/3.8.2
// state power-basis coefficients of X(AS n,n) and 3.8.3/3.8.4 of X(AS n,n+1);
// 3.10.1 targets X(AS n,n) and 3.10.2 targets X(AS n,n+1).
const std::vector<std::string>& lemma_ids();

// "3.8" -> its four items, "all" -> everything; unknown ids raise
// std::domain_error.
std::vector<std::string> expand_lemma_selector(const std::string& id);

// Smallest n the statement covers: 1 for the pure basis-transition identities
// (3.4, 3.9, 4.4), 3 for the graph-coefficient identities.
int lemma_min_n(const std::string& id);

// Default n range run by the suite; chosen to finish in seconds.
std::pair<int, int> lemma_default_range(const std::string& id);

// The predicted (index, coefficient) rows for one item at one n.
std::vector<std::pair<Partition, Coeff>> closed_form(const std::string& id, int n);

// Recomputes each row from scratch (subset expansion or basis transition,
// never the closed form) and compares.
std::vector<LemmaCheck> brute_force_check(const std::string& id, int n);

} // namespace csf
