#include "csfkit/numeric.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace csf {

BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of negative argument");
    static std::mutex mu;
    static std::vector<BigInt> table{1};
    std::lock_guard<std::mutex> lock(mu);
    while ((int)table.size() <= n) table.push_back(table.back() * (int)table.size());
    return table[n];
}

std::string coeff_to_string(const Coeff& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

} // namespace csf
