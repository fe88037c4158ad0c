#pragma once

#include "csfkit/errors.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace csf {

// Integer partition: weakly decreasing positive parts.  The empty partition
// (weight 0) is allowed and renders as "()".
class Partition {
public:
    Partition() = default;
    // Throws std::domain_error unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    // Sorts a bag of positive part sizes into canonical order.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return (int)parts_.size(); }
    int weight() const;
    std::map<int, int> multiplicities() const;

    bool operator==(const Partition&) const = default;
    // Ascending lexicographic on the part vector; iterate a
    // std::map<Partition, ...> to get rendering order, reverse for the
    // descending order used when enumerating.
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;         // "(3,2,1)"
    std::string to_compact_string() const; // "(3,2^2,1)"

    // Accepts both plain and exponent forms, exponent entries in any order:
    // "(3,2,2,1)", "(3,2^2,1)", "(1^2,2^2,3)" all denote the same partition.
    static Partition parse(std::string_view text);

private:
    std::vector<int> parts_;
};

// All partitions of n in descending lexicographic order:
// (n), (n-1,1), ..., (1^n).  enumerate_partitions(0) == {()}.
std::vector<Partition> enumerate_partitions(int n);

// True iff every part of lam is the sum of one block of a partition of the
// multiset of mu's parts, i.e. lam is obtained from mu by merging parts.
bool is_coarsening(const Partition& lam, const Partition& mu);

// All lam with is_coarsening(lam, mu), descending lexicographic.
std::vector<Partition> coarsenings_of(const Partition& mu);

} // namespace csf
