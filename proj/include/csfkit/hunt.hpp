#pragma once

#include "csfkit/numeric.hpp"
#include "csfkit/partition.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace csf {

struct Corpus {
    std::string label;              // "builtin:6" or a file path
    std::string hash;               // "fnv1a64:................"
    std::vector<std::string> lines; // one graph6 record each
};

// Canonical representatives of all connected graphs on n vertices, 1 <= n <= 7.
Corpus corpus_builtin(int n);

// Loads a graph6 file (one record per line; ">>graph6<<" headers and blank
// lines are dropped).  The hash covers the raw file bytes.
Corpus corpus_from_file(const std::string& path);

enum class HuntFilter { ccf, not_ccf, claw_free, not_claw_free, epos, not_epos };

// Comma-separated names: ccf, not-ccf, claw-free, not-claw-free, epos, not-epos.
std::vector<HuntFilter> parse_filters(const std::string& csv);

struct SearchRecord {
    uint64_t index = 0; // 0-based position in the corpus
    std::string graph6;
    int n = 0;
    int m = 0;
    bool connected = false;
    bool claw_free = false;
    bool ccf = false;
    bool e_positive = false;
    std::optional<Partition> witness;        // when not e-positive
    std::optional<Coeff> witness_coefficient;
    bool skipped = false; // malformed line or over-capacity graph
    std::string error;
};

struct HuntTallies {
    uint64_t scanned = 0;
    uint64_t ccf = 0;
    uint64_t claw_free = 0;
    uint64_t hits = 0;
    uint64_t skipped = 0;

    bool operator==(const HuntTallies&) const = default;
};

struct HuntOptions {
    std::vector<HuntFilter> filters;
    std::string checkpoint_path; // empty: no checkpoint file
    bool resume = false;         // pick up from checkpoint_path if present
    uint64_t checkpoint_interval = 10000;
    int workers = 1;
    int edge_cap = 30;
    // Stop after this many lines processed in this run (staged runs, tests).
    std::optional<uint64_t> stop_after;
};

// Called in corpus order with every hit and every skipped record.
using RecordSink = std::function<void(const SearchRecord&)>;

// Scans the corpus: connectivity first, then the deletion criterion and the
// claw scan, and the chromatic expansion only for graphs still in play.
// Disconnected lines are counted as scanned and nothing else.  Work within a
// batch is striped across workers; records are committed in corpus order, so
// any worker count produces identical output.
HuntTallies hunt(const Corpus& corpus, const HuntOptions& opts, const RecordSink& sink);

} // namespace csf
