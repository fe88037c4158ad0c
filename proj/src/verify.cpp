#include "csfkit/verify.hpp"

#include "csfkit/chromatic.hpp"
#include "csfkit/graph.hpp"
#include "csfkit/symfunc.hpp"

#include <stdexcept>

namespace csf {

namespace {

int sign_pow(long long exponent) { return exponent % 2 == 0 ? 1 : -1; }

Partition two_parts(int a, int b) { return Partition::from_unsorted({a, b}); }

// What a single item verifies.
enum class Route {
    power_coeff,   // coefficient in csf_power of a family graph
    elem_coeff,    // coefficient in the e-expansion of the graph, targeted walk
    transition,    // coefficient of e_(target) in expand_to_e(p_(index))
};

struct Item {
    const char* id;
    Route route;
    char family; // 'S' saltire (n,n), 'A' augmented (n,n), 'B' augmented (n,n+1), 'T' tower (n,n,n); ' ' for transitions
};

const Item kItems[] = {
    {"3.3", Route::power_coeff, 'S'},
    {"3.4", Route::transition, 'S'},
    {"3.5", Route::elem_coeff, 'S'},
    {"3.8.1", Route::power_coeff, 'A'},
    {"3.8.2", Route::power_coeff, 'A'},
    {"3.8.3", Route::power_coeff, 'B'},
    {"3.8.4", Route::power_coeff, 'B'},
    {"3.9", Route::transition, 'B'},
    {"3.10.1", Route::elem_coeff, 'A'},
    {"3.10.2", Route::elem_coeff, 'B'},
    {"4.3", Route::power_coeff, 'T'},
    {"4.4", Route::transition, 'T'},
    {"4.5", Route::elem_coeff, 'T'},
};

const Item& item_for(const std::string& id) {
    for (const Item& it : kItems)
        if (id == it.id) return it;
    throw std::domain_error("unknown lemma id: " + id);
}

// Rows of (index partition, predicted coefficient).  For the transition
// items the index names the power sum whose e_(target) coefficient is taken.
std::vector<std::pair<Partition, Coeff>> rows_for(const std::string& id, int n) {
    long long N = n;
    if (id == "3.3")
        return {{Partition({2 * n}), Coeff(-3 * N * N + 4 * N - 2)},
                {two_parts(n, n), Coeff(2 * N - 1)}};
    if (id == "3.4")
        return {{Partition({2 * n}), Coeff(N)}, {two_parts(n, n), Coeff(N * N)}};
    if (id == "3.5")
        return {{two_parts(n, n), Coeff(-N * (N - 1) * (N - 2))}};
    if (id == "3.8.1")
        return {{Partition({2 * n}), Coeff(-4 * N * N + 6 * N - 2)}};
    if (id == "3.8.2")
        return {{two_parts(n, n), Coeff(3 * N - 3)}};
    if (id == "3.8.3")
        return {{Partition({2 * n + 1}), Coeff(4 * N * N - 2 * N)}};
    if (id == "3.8.4")
        return {{two_parts(n + 1, n), Coeff(-7 * N + 4)}};
    if (id == "3.9")
        return {{Partition({2 * n + 1}), Coeff(-(2 * N + 1))},
                {two_parts(n + 1, n), Coeff(-N * (N + 1))}};
    if (id == "3.10.1")
        return {{two_parts(n, n), Coeff(-N * (N - 1) * (N - 2))}};
    if (id == "3.10.2")
        return {{two_parts(n + 1, n), Coeff(-N * (N - 1) * (N - 2))}};
    if (id == "4.3")
        return {{Partition({3 * n}), Coeff(sign_pow(3 * N + 3) * (12 * N * N - 12 * N + 2))},
                {two_parts(2 * n, n), Coeff(sign_pow(3 * N) * (4 * N * N + 6 * N - 7))},
                {Partition({n, n, n}), Coeff(sign_pow(3 * N - 3) * (3 * N - 2))}};
    if (id == "4.4")
        return {{Partition({3 * n}), Coeff(sign_pow(3 * N - 3) * N)},
                {two_parts(2 * n, n), Coeff(sign_pow(3 * N - 3) * N * N)},
                {Partition({n, n, n}), Coeff(sign_pow(3 * N - 3) * N * N * N)}};
    if (id == "4.5")
        return {{Partition({n, n, n}), Coeff(-N * (N - 1) * (N - 1) * (N - 2))}};
    throw std::domain_error("unknown lemma id: " + id);
}

Graph family_graph(char family, int n) {
    switch (family) {
    case 'S': return make_saltire(n, n);
    case 'A': return make_augmented_saltire(n, n);
    case 'B': return make_augmented_saltire(n, n + 1);
    case 'T': return make_triangular_tower(n, n, n);
    }
    throw std::logic_error("bad family tag");
}

std::string family_label(char family, int n) {
    switch (family) {
    case 'S': return "X(SA " + std::to_string(n) + "," + std::to_string(n) + ")";
    case 'A': return "X(AS " + std::to_string(n) + "," + std::to_string(n) + ")";
    case 'B': return "X(AS " + std::to_string(n) + "," + std::to_string(n + 1) + ")";
    case 'T': {
        std::string s = std::to_string(n);
        return "X(TT " + s + "," + s + "," + s + ")";
    }
    }
    throw std::logic_error("bad family tag");
}

// e-index the transition items target.
Partition transition_target(const std::string& id, int n) {
    if (id == "3.4") return two_parts(n, n);
    if (id == "3.9") return two_parts(n + 1, n);
    return Partition({n, n, n}); // 4.4
}

} // namespace

const std::vector<std::string>& lemma_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const Item& it : kItems) v.push_back(it.id);
        return v;
    }();
    return ids;
}

std::vector<std::string> expand_lemma_selector(const std::string& id) {
    if (id == "all") return lemma_ids();
    std::vector<std::string> out;
    for (const Item& it : kItems)
        if (id == it.id || std::string(it.id).rfind(id + ".", 0) == 0) out.push_back(it.id);
    if (out.empty()) throw std::domain_error("unknown lemma id: " + id);
    return out;
}

int lemma_min_n(const std::string& id) {
    return item_for(id).route == Route::transition ? 1 : 3;
}

std::pair<int, int> lemma_default_range(const std::string& id) {
    const Item& it = item_for(id);
    if (it.route == Route::transition) return {1, 6};
    if (it.family == 'T') return {3, 5};
    return {3, 6};
}

std::vector<std::pair<Partition, Coeff>> closed_form(const std::string& id, int n) {
    if (n < lemma_min_n(id))
        throw std::domain_error("lemma " + id + " needs n >= " + std::to_string(lemma_min_n(id)));
    return rows_for(id, n);
}

std::vector<LemmaCheck> brute_force_check(const std::string& id, int n) {
    const Item& it = item_for(id);
    auto rows = closed_form(id, n);
    std::vector<LemmaCheck> out;

    switch (it.route) {
    case Route::power_coeff: {
        Graph g = family_graph(it.family, n);
        SymExpr x = csf_power(g).power;
        for (auto& [index, expected] : rows) {
            Coeff computed = coefficient_of(x, index);
            out.push_back({id, n, index, "[p_" + index.to_string() + "] " + family_label(it.family, n),
                           expected, computed, computed == expected});
        }
        break;
    }
    case Route::elem_coeff: {
        Graph g = family_graph(it.family, n);
        for (auto& [index, expected] : rows) {
            Coeff computed = e_coefficient_targeted(g, index);
            out.push_back({id, n, index, "[e_" + index.to_string() + "] " + family_label(it.family, n),
                           expected, computed, computed == expected});
        }
        break;
    }
    case Route::transition: {
        Partition target = transition_target(id, n);
        for (auto& [index, expected] : rows) {
            SymExpr p = SymExpr::single(Basis::power, index, 1);
            Coeff computed = coefficient_of(expand_to_e(p), target);
            out.push_back({id, n, index,
                           "[e_" + target.to_string() + "] p_" + index.to_string(), expected,
                           computed, computed == expected});
        }
        break;
    }
    }
    return out;
}

} // namespace csf
