#pragma once

#include "csfkit/numeric.hpp"
#include "csfkit/partition.hpp"

#include <map>
#include <optional>
#include <string>

namespace csf {

enum class Basis { power, elementary };

char basis_letter(Basis b);

// Linear combination of basis elements indexed by partitions of one fixed
// weight.  Zero coefficients are never stored.  Treat as a value type; all
// mutation happens through add_term while an expression is being built.
class SymExpr {
public:
    SymExpr(Basis basis, int degree);
    static SymExpr single(Basis basis, Partition index, Coeff c);

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    // Keyed ascending lexicographically, which is also rendering order.
    const std::map<Partition, Coeff>& terms() const { return terms_; }

    // Accumulates; drops the term if the total hits zero.  The index must
    // have weight == degree().
    void add_term(const Partition& index, const Coeff& c);

    bool operator==(const SymExpr&) const = default;

private:
    Basis basis_;
    int degree_;
    std::map<Partition, Coeff> terms_;
};

// Coefficient of the basis element indexed by mu (0 if absent).  The weight
// of mu must match expr.degree().
Coeff coefficient_of(const SymExpr& expr, const Partition& mu);

SymExpr add(const SymExpr& a, const SymExpr& b);

// Product in the same basis; indices concatenate and re-sort, so
// p_(3) * p_(3) = p_(3,3).  Bases must match.
SymExpr multiply(const SymExpr& a, const SymExpr& b);

// The power sum p_i written in the elementary basis:
//   p_i = sum over mu of i, mu = (1^m1,...,i^mi), of
//         (-1)^(i - len(mu)) * i * (len(mu)-1)! / prod(mj!) * e_mu.
// Results are memoised; i >= 1.
SymExpr power_in_e(int i);

// Rewrites a power-basis expression in the elementary basis by expanding
// each p_lam = prod power_in_e(lam_j).
SymExpr expand_to_e(const SymExpr& expr);

struct EPositivity {
    bool positive;
    // When not positive: the first negative index met scanning partitions in
    // descending lexicographic order.
    std::optional<Partition> witness;
};

// Requires the elementary basis.
EPositivity is_e_positive(const SymExpr& expr);

// "e_(2,1,1) - 2e_(2,2) + 5e_(3,1) + 4e_(4)"; the zero expression is "0".
std::string to_string(const SymExpr& expr);

} // namespace csf
