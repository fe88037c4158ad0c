#include "csfkit/partition.hpp"

#include "csfkit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace csf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::domain_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::domain_error("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::string Partition::to_compact_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size();) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (i) s += ",";
        s += std::to_string(parts_[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s + ")";
}

Partition Partition::parse(std::string_view text) {
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    auto fail = [&](const std::string& msg) {
        throw parse_error("partition: " + msg, i);
    };
    auto number = [&](const char* what) -> long {
        long v = 0;
        bool any = false;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) {
            v = v * 10 + (text[i] - '0');
            any = true;
            ++i;
            if (v > 1000000) fail("value out of range");
        }
        if (!any) fail(std::string("expected ") + what);
        return v;
    };

    skip();
    if (i >= text.size() || text[i] != '(') fail("expected '('");
    ++i;
    std::vector<int> parts;
    skip();
    if (i < text.size() && text[i] == ')') {
        ++i;
    } else {
        for (;;) {
            skip();
            long part = number("part size");
            if (part < 1) fail("parts must be positive");
            long mult = 1;
            skip();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip();
                mult = number("multiplicity");
                if (mult < 1) fail("multiplicity must be positive");
            }
            if (parts.size() + (size_t)mult > 100000) fail("too many parts");
            parts.insert(parts.end(), (size_t)mult, (int)part);
            skip();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            fail("expected ',' or ')'");
        }
    }
    skip();
    if (i != text.size()) fail("trailing characters");
    return from_unsorted(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::domain_error("cannot partition a negative number");
    std::vector<Partition> out;
    std::vector<int> prefix;
    // Largest first part first gives descending lexicographic order.
    std::function<void(int, int)> gen = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            out.push_back(Partition(prefix));
            return;
        }
        for (int k = std::min(remaining, maxpart); k >= 1; --k) {
            prefix.push_back(k);
            gen(remaining - k, k);
            prefix.pop_back();
        }
    };
    gen(n, n);
    return out;
}

namespace {

// Matches each part of lam against a block of mu's parts, largest lam part
// first.  Memoised on (lam index, remaining multiplicities); the lam index
// alone determines the prefix already matched.
struct CoarsenSearch {
    const std::vector<int>& lam;
    std::vector<int> vals;   // distinct mu part sizes, descending
    std::vector<int> counts; // remaining multiplicity per value
    std::map<std::pair<int, std::vector<int>>, bool> memo;

    bool match(int i) {
        if (i == (int)lam.size()) return true; // weights agreed up front
        auto key = std::make_pair(i, counts);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool ok = pick(i, 0, lam[i]);
        memo.emplace(std::move(key), ok);
        return ok;
    }

    bool pick(int i, int j, int need) {
        if (need == 0) return match(i + 1);
        if (j == (int)vals.size()) return false;
        int most = std::min(counts[j], need / vals[j]);
        for (int use = most; use >= 0; --use) {
            counts[j] -= use;
            bool ok = pick(i, j + 1, need - use * vals[j]);
            counts[j] += use;
            if (ok) return true;
        }
        return false;
    }
};

} // namespace

bool is_coarsening(const Partition& lam, const Partition& mu) {
    if (lam.weight() != mu.weight()) return false;
    CoarsenSearch s{lam.parts(), {}, {}, {}};
    for (auto [val, cnt] : mu.multiplicities()) {
        s.vals.push_back(val);
        s.counts.push_back(cnt);
    }
    std::reverse(s.vals.begin(), s.vals.end());
    std::reverse(s.counts.begin(), s.counts.end());
    return s.match(0);
}

std::vector<Partition> coarsenings_of(const Partition& mu) {
    std::vector<Partition> out;
    for (const Partition& lam : enumerate_partitions(mu.weight()))
        if (is_coarsening(lam, mu)) out.push_back(lam);
    return out;
}

} // namespace csf
