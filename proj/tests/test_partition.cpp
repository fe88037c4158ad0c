#include <doctest.h>

#include "csfkit/partition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

using csf::Partition;

namespace {

// Independent partition generator: recursive first-part descent, no sharing
// with enumerate_partitions (which iterates an explicit stack).
void gen_parts(int remaining, int max_part, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_parts(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> all_partitions_oracle(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    gen_parts(n, n == 0 ? 1 : n, cur, out);
    return out;
}

// Oracle for the coarsening test: try every assignment of mu's parts to
// lam's slots directly, permutation style.
bool coarsens_oracle(const std::vector<int>& lam, const std::vector<int>& mu) {
    std::vector<int> assign(mu.size(), -1);
    std::vector<int> need(lam.begin(), lam.end());
    auto rec = [&](auto&& self, size_t i) -> bool {
        if (i == mu.size()) {
            return std::all_of(need.begin(), need.end(), [](int v) { return v == 0; });
        }
        for (size_t s = 0; s < need.size(); ++s) {
            if (need[s] < mu[i]) continue;
            // avoid revisiting equal parts in the same position set
            if (i > 0 && mu[i] == mu[i - 1] && assign[i - 1] > (int)s) continue;
            need[s] -= mu[i];
            assign[i] = (int)s;
            if (self(self, i + 1)) {
                need[s] += mu[i];
                return true;
            }
            need[s] += mu[i];
            assign[i] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace

TEST_CASE("partition construction and accessors") {
    Partition p({3, 2, 2, 1});
    CHECK(p.weight() == 8);
    CHECK(p.length() == 4);
    CHECK(p.to_string() == "(3,2,2,1)");
    CHECK(p.to_compact_string() == "(3,2^2,1)");

    auto m = p.multiplicities();
    CHECK(m.at(2) == 2);
    CHECK(m.at(3) == 1);

    CHECK_THROWS_AS(Partition({2, 3}), std::domain_error);
    CHECK_THROWS_AS(Partition({0}), std::domain_error);
    CHECK_THROWS_AS(Partition({-1}), std::domain_error);

    CHECK(Partition::from_unsorted({1, 3, 2}) == Partition({3, 2, 1}));
    CHECK(Partition().weight() == 0);
    CHECK(Partition().to_string() == "()");
}

TEST_CASE("partition parsing accepts plain and compact forms") {
    CHECK(Partition::parse("(3,2,1)") == Partition({3, 2, 1}));
    CHECK(Partition::parse("(3,2^2,1)") == Partition({3, 2, 2, 1}));
    CHECK(Partition::parse("( 4 , 1^3 )") == Partition({4, 1, 1, 1}));
    CHECK(Partition::parse("(1,2,3)") == Partition({3, 2, 1}));
    CHECK(Partition::parse("()") == Partition());

    CHECK_THROWS_AS(Partition::parse("(3,,1)"), csf::parse_error);
    CHECK_THROWS_AS(Partition::parse("3,2"), csf::parse_error);
    CHECK_THROWS_AS(Partition::parse("(3,0)"), csf::parse_error);
    CHECK_THROWS_AS(Partition::parse("(2^0)"), csf::parse_error);
    try {
        Partition::parse("(3,x)");
        CHECK(false);
    } catch (const csf::parse_error& e) {
        CHECK(e.offset() == 3);
    }
}

TEST_CASE("enumerate_partitions matches an independent generator") {
    // p(n) for n = 0..12
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) {
        auto got = csf::enumerate_partitions(n);
        auto want = all_partitions_oracle(n);
        REQUIRE((int)got.size() == counts[n]);
        REQUIRE(got.size() == want.size());
        for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].parts() == want[i]);
    }
    CHECK_THROWS_AS(csf::enumerate_partitions(-1), std::domain_error);
}

TEST_CASE("enumerate_partitions is descending lex") {
    auto ps = csf::enumerate_partitions(6);
    CHECK(ps.front() == Partition({6}));
    CHECK(ps.back() == Partition({1, 1, 1, 1, 1, 1}));
    for (size_t i = 1; i < ps.size(); ++i) {
        CHECK(std::lexicographical_compare(ps[i].parts().begin(), ps[i].parts().end(),
                                           ps[i - 1].parts().begin(), ps[i - 1].parts().end()));
    }
}

TEST_CASE("is_coarsening agrees with assignment oracle") {
    for (int n = 1; n <= 9; ++n) {
        auto ps = csf::enumerate_partitions(n);
        for (const auto& lam : ps)
            for (const auto& mu : ps)
                CHECK(csf::is_coarsening(lam, mu) == coarsens_oracle(lam.parts(), mu.parts()));
    }
    // weight mismatch is just "no"
    CHECK_FALSE(csf::is_coarsening(Partition({3}), Partition({2})));
}

TEST_CASE("is_coarsening hand cases") {
    CHECK(csf::is_coarsening(Partition({6}), Partition({3, 3})));
    CHECK(csf::is_coarsening(Partition({4, 2}), Partition({2, 2, 1, 1})));
    CHECK_FALSE(csf::is_coarsening(Partition({3, 3}), Partition({4, 1, 1})));
    CHECK(csf::is_coarsening(Partition({3, 3}), Partition({3, 2, 1})));
    CHECK(csf::is_coarsening(Partition({5, 1}), Partition({3, 2, 1})));
    CHECK_FALSE(csf::is_coarsening(Partition({2, 2, 2}), Partition({3, 3})));
    CHECK(csf::is_coarsening(Partition({4}), Partition({4})));
}

TEST_CASE("coarsenings_of lists exactly the coarser partitions") {
    auto cs = csf::coarsenings_of(Partition({2, 1, 1}));
    std::set<std::vector<int>> got;
    for (const auto& c : cs) got.insert(c.parts());
    std::set<std::vector<int>> want = {{2, 1, 1}, {2, 2}, {3, 1}, {4}};
    CHECK(got == want);
}
