#include "csfkit/hunt.hpp"

#include "csfkit/chromatic.hpp"
#include "csfkit/clawtest.hpp"
#include "csfkit/errors.hpp"
#include "csfkit/graph.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace csf {

namespace {

std::string fnv1a64(const std::string& bytes) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return std::string("fnv1a64:") + buf;
}

struct CheckpointData {
    std::string corpus_hash;
    int64_t last_index = -1;
    HuntTallies tallies;
};

CheckpointData load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read checkpoint " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    CheckpointData cp;
    cp.corpus_hash = j.at("corpus_hash").get<std::string>();
    cp.last_index = j.at("last_index").get<int64_t>();
    const auto& t = j.at("tallies");
    cp.tallies.scanned = t.at("scanned").get<uint64_t>();
    cp.tallies.ccf = t.at("ccf").get<uint64_t>();
    cp.tallies.claw_free = t.at("claw_free").get<uint64_t>();
    cp.tallies.hits = t.at("hits").get<uint64_t>();
    cp.tallies.skipped = t.at("skipped").get<uint64_t>();
    return cp;
}

void store_checkpoint(const std::string& path, const CheckpointData& cp) {
    nlohmann::json j = {
        {"corpus_hash", cp.corpus_hash},
        {"last_index", cp.last_index},
        {"tallies",
         {{"scanned", cp.tallies.scanned},
          {"ccf", cp.tallies.ccf},
          {"claw_free", cp.tallies.claw_free},
          {"hits", cp.tallies.hits},
          {"skipped", cp.tallies.skipped}}},
    };
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
        out << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path); // atomic swap-in
}

// Cheap predicates always run (they feed the tallies); the chromatic
// expansion only runs when no structural filter has already rejected the
// graph, since a conjunction that fails early fails regardless of the
// e-positivity fields.
void evaluate_line(const std::string& line, uint64_t index, int edge_cap,
                   const std::vector<HuntFilter>& filters, SearchRecord& rec) {
    rec = SearchRecord{};
    rec.index = index;
    rec.graph6 = line;
    try {
        Graph g = from_graph6(line);
        rec.n = g.vertex_count();
        rec.m = g.edge_count();
        rec.connected = is_connected(g);
        if (!rec.connected) return;
        rec.ccf = is_ccf_bv(g).ccf;
        rec.claw_free = is_claw_free(g).claw_free;
        for (HuntFilter f : filters) {
            if (f == HuntFilter::ccf && !rec.ccf) return;
            if (f == HuntFilter::not_ccf && rec.ccf) return;
            if (f == HuntFilter::claw_free && !rec.claw_free) return;
            if (f == HuntFilter::not_claw_free && rec.claw_free) return;
        }
        CsfResult r = csf_elementary(g, {edge_cap, 1});
        EPositivity ep = is_e_positive(*r.elementary);
        rec.e_positive = ep.positive;
        if (ep.witness) {
            rec.witness = ep.witness;
            rec.witness_coefficient = coefficient_of(*r.elementary, *ep.witness);
        }
    } catch (const parse_error& e) {
        rec.skipped = true;
        rec.error = std::string("line ") + std::to_string(index + 1) + ": " + e.what();
    } catch (const capacity_error& e) {
        rec.skipped = true;
        rec.error = std::string("line ") + std::to_string(index + 1) + ": " + e.what();
    }
}

bool passes(const SearchRecord& rec, const std::vector<HuntFilter>& filters) {
    if (rec.skipped || !rec.connected) return false;
    for (HuntFilter f : filters) {
        switch (f) {
        case HuntFilter::ccf:
            if (!rec.ccf) return false;
            break;
        case HuntFilter::not_ccf:
            if (rec.ccf) return false;
            break;
        case HuntFilter::claw_free:
            if (!rec.claw_free) return false;
            break;
        case HuntFilter::not_claw_free:
            if (rec.claw_free) return false;
            break;
        case HuntFilter::epos:
            if (!rec.e_positive) return false;
            break;
        case HuntFilter::not_epos:
            if (rec.e_positive) return false;
            break;
        }
    }
    return true;
}

} // namespace

Corpus corpus_builtin(int n) {
    Corpus c;
    c.label = "builtin:" + std::to_string(n);
    std::string joined;
    for (const Graph& g : enumerate_connected(n)) {
        c.lines.push_back(to_graph6(g));
        if (c.lines.size() > 1) joined += '\n';
        joined += c.lines.back();
    }
    c.hash = fnv1a64(joined);
    return c;
}

Corpus corpus_from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read corpus " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string bytes = buf.str();

    Corpus c;
    c.label = path;
    c.hash = fnv1a64(bytes);
    size_t pos = 0;
    while (pos < bytes.size()) {
        size_t eol = bytes.find('\n', pos);
        if (eol == std::string::npos) eol = bytes.size();
        std::string line = bytes.substr(pos, eol - pos);
        pos = eol + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        c.lines.push_back(std::move(line));
    }
    return c;
}

std::vector<HuntFilter> parse_filters(const std::string& csv) {
    std::vector<HuntFilter> out;
    size_t pos = 0, offset = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        std::string name = csv.substr(pos, comma - pos);
        offset = pos;
        pos = comma + 1;
        if (name.empty() && csv.empty()) break;
        if (name == "ccf")
            out.push_back(HuntFilter::ccf);
        else if (name == "not-ccf")
            out.push_back(HuntFilter::not_ccf);
        else if (name == "claw-free")
            out.push_back(HuntFilter::claw_free);
        else if (name == "not-claw-free")
            out.push_back(HuntFilter::not_claw_free);
        else if (name == "epos")
            out.push_back(HuntFilter::epos);
        else if (name == "not-epos")
            out.push_back(HuntFilter::not_epos);
        else
            throw parse_error("unknown filter '" + name + "'", offset);
        if (comma == csv.size()) break;
    }
    return out;
}

HuntTallies hunt(const Corpus& corpus, const HuntOptions& opts, const RecordSink& sink) {
    uint64_t start = 0;
    HuntTallies tallies;

    bool checkpointing = !opts.checkpoint_path.empty();
    if (checkpointing && opts.resume && std::filesystem::exists(opts.checkpoint_path)) {
        CheckpointData cp = load_checkpoint(opts.checkpoint_path);
        if (cp.corpus_hash != corpus.hash)
            throw std::runtime_error("checkpoint is for a different corpus: checkpoint has " +
                                     cp.corpus_hash + ", corpus is " + corpus.hash);
        start = (uint64_t)(cp.last_index + 1);
        tallies = cp.tallies;
    }

    uint64_t end = corpus.lines.size();
    if (opts.stop_after && start + *opts.stop_after < end) end = start + *opts.stop_after;

    uint64_t batch = std::max<uint64_t>(opts.checkpoint_interval, 1);
    int workers = std::max(opts.workers, 1);

    for (uint64_t lo = start; lo < end; lo += batch) {
        uint64_t hi = std::min(lo + batch, end);
        std::vector<SearchRecord> recs(hi - lo);

        auto stripe = [&](int w) {
            for (uint64_t i = lo + w; i < hi; i += workers)
                evaluate_line(corpus.lines[i], i, opts.edge_cap, opts.filters, recs[i - lo]);
        };
        if (workers == 1) {
            stripe(0);
        } else {
            std::vector<std::thread> threads;
            for (int w = 0; w < workers; ++w) threads.emplace_back(stripe, w);
            for (auto& t : threads) t.join();
        }

        for (SearchRecord& rec : recs) {
            ++tallies.scanned;
            if (rec.skipped) {
                ++tallies.skipped;
                sink(rec);
                continue;
            }
            if (rec.connected && rec.ccf) ++tallies.ccf;
            if (rec.connected && rec.claw_free) ++tallies.claw_free;
            if (passes(rec, opts.filters)) {
                ++tallies.hits;
                sink(rec);
            }
        }
        if (checkpointing)
            store_checkpoint(opts.checkpoint_path,
                             {corpus.hash, (int64_t)hi - 1, tallies});
    }
    return tallies;
}

} // namespace csf
