#include "csfkit/symfunc.hpp"

#include <mutex>
#include <stdexcept>

namespace csf {

char basis_letter(Basis b) { return b == Basis::power ? 'p' : 'e'; }

SymExpr::SymExpr(Basis basis, int degree) : basis_(basis), degree_(degree) {
    if (degree < 0) throw std::domain_error("negative degree");
}

SymExpr SymExpr::single(Basis basis, Partition index, Coeff c) {
    SymExpr e(basis, index.weight());
    e.add_term(index, c);
    return e;
}

void SymExpr::add_term(const Partition& index, const Coeff& c) {
    if (index.weight() != degree_)
        throw std::invalid_argument("term weight does not match expression degree");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Coeff coefficient_of(const SymExpr& expr, const Partition& mu) {
    if (mu.weight() != expr.degree())
        throw std::domain_error("coefficient index weight does not match degree");
    auto it = expr.terms().find(mu);
    return it == expr.terms().end() ? Coeff(0) : it->second;
}

SymExpr add(const SymExpr& a, const SymExpr& b) {
    if (a.basis() != b.basis()) throw std::invalid_argument("basis mismatch in add");
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in add");
    SymExpr out = a;
    for (const auto& [idx, c] : b.terms()) out.add_term(idx, c);
    return out;
}

SymExpr multiply(const SymExpr& a, const SymExpr& b) {
    if (a.basis() != b.basis()) throw std::invalid_argument("basis mismatch in multiply");
    SymExpr out(a.basis(), a.degree() + b.degree());
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            std::vector<int> parts = ia.parts();
            parts.insert(parts.end(), ib.parts().begin(), ib.parts().end());
            out.add_term(Partition::from_unsorted(std::move(parts)), ca * cb);
        }
    return out;
}

SymExpr power_in_e(int i) {
    if (i < 1) throw std::domain_error("power_in_e requires i >= 1");
    static std::mutex mu_lock;
    static std::map<int, SymExpr> memo;
    std::lock_guard<std::mutex> lock(mu_lock);
    auto it = memo.find(i);
    if (it != memo.end()) return it->second;

    SymExpr out(Basis::elementary, i);
    for (const Partition& mu : enumerate_partitions(i)) {
        int len = mu.length();
        Coeff c(BigInt(i) * factorial(len - 1));
        for (auto [part, mult] : mu.multiplicities()) c /= factorial(mult);
        if ((i - len) % 2 != 0) c = -c;
        out.add_term(mu, c);
    }
    memo.emplace(i, out);
    return out;
}

SymExpr expand_to_e(const SymExpr& expr) {
    if (expr.basis() != Basis::power)
        throw std::invalid_argument("expand_to_e expects a power-basis expression");
    SymExpr out(Basis::elementary, expr.degree());
    for (const auto& [lam, c] : expr.terms()) {
        SymExpr prod = SymExpr::single(Basis::elementary, Partition(), 1);
        for (int part : lam.parts()) prod = multiply(prod, power_in_e(part));
        for (const auto& [idx, pc] : prod.terms()) out.add_term(idx, c * pc);
    }
    return out;
}

EPositivity is_e_positive(const SymExpr& expr) {
    if (expr.basis() != Basis::elementary)
        throw std::invalid_argument("is_e_positive expects an elementary-basis expression");
    // Map order is ascending lex, so walk backwards for the
    // descending-lex-first witness.
    for (auto it = expr.terms().rbegin(); it != expr.terms().rend(); ++it)
        if (it->second < 0) return {false, it->first};
    return {true, std::nullopt};
}

std::string to_string(const SymExpr& expr) {
    if (expr.terms().empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [idx, c] : expr.terms()) {
        Coeff a = c < 0 ? Coeff(-c) : c;
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (a != 1) s += coeff_to_string(a);
        s += basis_letter(expr.basis());
        s += "_";
        s += idx.to_string();
    }
    return s;
}

} // namespace csf
