/*
 * csfkit: exact chromatic symmetric functions of small graphs.
 *
 *   csfkit csf sa:3,3 --basis e          expansion of X_G in one basis
 *   csfkit check tt:3,3,3 --format json  claw / contraction / positivity report
 *   csfkit verify --all --n 3..5         coefficient identities against brute force
 *   csfkit hunt --builtin 6 --filters ccf,not-epos --out hits.jsonl
 *
 * Exit codes: 0 ok, 1 failed check or skipped record, 2 usage or parse
 * error, 3 capacity refusal.
 */

#include "csfkit/chromatic.hpp"
#include "csfkit/clawtest.hpp"
#include "csfkit/errors.hpp"
#include "csfkit/graph.hpp"
#include "csfkit/hunt.hpp"
#include "csfkit/symfunc.hpp"
#include "csfkit/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

namespace {

using nlohmann::json;

int parse_int(const std::string& s, size_t offset_base) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw csf::parse_error("expected an integer, got '" + s + "'", offset_base);
    return value;
}

std::vector<int> parse_int_list(const std::string& s, size_t offset_base) {
    std::vector<int> out;
    size_t pos = 0;
    while (true) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        out.push_back(parse_int(tok, offset_base + pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

csf::Graph parse_graph_spec(const std::string& spec) {
    if (spec == "claw") return csf::make_claw();
    if (spec == "ak33") return csf::make_ak33();
    size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw csf::parse_error("unknown graph spec '" + spec + "'", 0);
    std::string family = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    size_t off = colon + 1;
    if (family == "g6") return csf::from_graph6(rest);
    std::vector<int> a = parse_int_list(rest, off);
    auto want = [&](size_t k) {
        if (a.size() != k)
            throw csf::parse_error("graph family '" + family + "' takes " + std::to_string(k) +
                                       " parameter(s)",
                                   off);
    };
    if (family == "path") return want(1), csf::make_path(a[0]);
    if (family == "cycle") return want(1), csf::make_cycle(a[0]);
    if (family == "complete") return want(1), csf::make_complete(a[0]);
    if (family == "kbip") return want(2), csf::make_complete_bipartite(a[0], a[1]);
    if (family == "sa") return want(2), csf::make_saltire(a[0], a[1]);
    if (family == "as") return want(2), csf::make_augmented_saltire(a[0], a[1]);
    if (family == "tt") return want(3), csf::make_triangular_tower(a[0], a[1], a[2]);
    throw csf::parse_error("unknown graph family '" + family + "'", 0);
}

json int_json(const csf::BigInt& v) {
    if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
        return v.convert_to<int64_t>();
    return v.str();
}

json coeff_json(const csf::Coeff& c) {
    return json{{"num", int_json(numerator(c))}, {"den", int_json(denominator(c))}};
}

json expr_json(const csf::SymExpr& e) {
    json terms = json::array();
    for (const auto& [idx, c] : e.terms())
        terms.push_back(json{{"partition", idx.parts()},
                             {"num", int_json(numerator(c))},
                             {"den", int_json(denominator(c))}});
    return terms;
}

int run_csf(const std::string& spec, const std::string& basis, const std::string& format,
            int edge_cap, int workers) {
    csf::Graph g = parse_graph_spec(spec);
    csf::CsfOptions opts{edge_cap, workers};
    csf::CsfResult r =
        basis == "e" ? csf::csf_elementary(g, opts) : csf::csf_power(g, opts);
    const csf::SymExpr& expr = basis == "e" ? *r.elementary : r.power;
    if (format == "json") {
        json out{{"graph6", r.graph6},
                 {"basis", basis},
                 {"terms", expr_json(expr)},
                 {"subsets_evaluated", r.subset_count_evaluated}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << csf::to_string(expr) << "\n";
    }
    return 0;
}

int run_check(const std::string& spec, const std::string& format, int edge_cap) {
    csf::Graph g = parse_graph_spec(spec);
    csf::ClawReport rep = csf::claw_report(g);
    csf::CsfResult r = csf::csf_elementary(g, {edge_cap, 1});
    csf::EPositivity ep = csf::is_e_positive(*r.elementary);

    if (format == "json") {
        json out{{"graph6", r.graph6},
                 {"claw_free", rep.claw_free},
                 {"claw_witness", nullptr},
                 {"ccf", rep.ccf},
                 {"ccf_witness_kind", nullptr},
                 {"ccf_witness", nullptr},
                 {"e_positive", ep.positive},
                 {"witness_partition", nullptr},
                 {"witness_coefficient", nullptr}};
        if (rep.claw_witness)
            out["claw_witness"] = {{"centre", (*rep.claw_witness)[0]},
                                   {"leaves",
                                    {(*rep.claw_witness)[1], (*rep.claw_witness)[2],
                                     (*rep.claw_witness)[3]}}};
        if (rep.ccf_witness) {
            out["ccf_witness_kind"] = "independent_triple";
            out["ccf_witness"] = *rep.ccf_witness;
        }
        if (ep.witness) {
            out["witness_partition"] = ep.witness->parts();
            out["witness_coefficient"] = coeff_json(coefficient_of(*r.elementary, *ep.witness));
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "graph: " << r.graph6 << "\n";
        std::cout << "claw_free: " << (rep.claw_free ? "yes" : "no");
        if (rep.claw_witness)
            std::cout << " (centre " << (*rep.claw_witness)[0] << ", leaves "
                      << (*rep.claw_witness)[1] << " " << (*rep.claw_witness)[2] << " "
                      << (*rep.claw_witness)[3] << ")";
        std::cout << "\n";
        std::cout << "ccf: " << (rep.ccf ? "yes" : "no");
        if (rep.ccf_witness)
            std::cout << " (deleting independent triple " << (*rep.ccf_witness)[0] << " "
                      << (*rep.ccf_witness)[1] << " " << (*rep.ccf_witness)[2]
                      << " leaves it connected)";
        std::cout << "\n";
        std::cout << "e_positive: " << (ep.positive ? "yes" : "no");
        if (ep.witness)
            std::cout << " (coefficient of e_" << ep.witness->to_string() << " is "
                      << csf::coeff_to_string(coefficient_of(*r.elementary, *ep.witness)) << ")";
        std::cout << "\n";
    }
    return 0;
}

std::pair<int, int> parse_n_range(const std::string& text) {
    size_t dots = text.find("..");
    if (dots == std::string::npos) {
        int v = parse_int(text, 0);
        return {v, v};
    }
    int lo = parse_int(text.substr(0, dots), 0);
    int hi = parse_int(text.substr(dots + 2), dots + 2);
    if (lo > hi) throw csf::parse_error("empty n range '" + text + "'", 0);
    return {lo, hi};
}

int run_verify(const std::vector<std::string>& selectors, bool all, const std::string& n_range,
               const std::string& format) {
    std::vector<std::string> ids;
    if (all || selectors.empty()) {
        ids = csf::lemma_ids();
    } else {
        for (const std::string& sel : selectors)
            for (const std::string& id : csf::expand_lemma_selector(sel)) ids.push_back(id);
    }
    std::optional<std::pair<int, int>> range;
    if (!n_range.empty()) range = parse_n_range(n_range);

    std::vector<csf::LemmaCheck> checks;
    for (const std::string& id : ids) {
        auto [lo, hi] = range ? *range : csf::lemma_default_range(id);
        int min_n = csf::lemma_min_n(id);
        if (range && hi < min_n)
            throw std::domain_error("lemma " + id + " needs n >= " + std::to_string(min_n));
        lo = std::max(lo, min_n);
        for (int n = lo; n <= hi; ++n)
            for (csf::LemmaCheck& c : csf::brute_force_check(id, n)) checks.push_back(std::move(c));
    }

    size_t passed = 0;
    for (const csf::LemmaCheck& c : checks)
        if (c.pass) ++passed;

    if (format == "json") {
        json rows = json::array();
        for (const csf::LemmaCheck& c : checks)
            rows.push_back(json{{"lemma", c.lemma},
                                {"n", c.n},
                                {"index", c.index.parts()},
                                {"target", c.target},
                                {"expected", coeff_json(c.expected)},
                                {"computed", coeff_json(c.computed)},
                                {"pass", c.pass}});
        json out{{"checks", rows}, {"passed", passed}, {"total", checks.size()}};
        std::cout << out.dump() << "\n";
    } else {
        for (const csf::LemmaCheck& c : checks) {
            std::ostringstream line;
            line << std::left << std::setw(7) << c.lemma << " n=" << std::setw(3) << c.n
                 << std::setw(30) << c.target << " expected " << std::setw(10)
                 << csf::coeff_to_string(c.expected) << " computed " << std::setw(10)
                 << csf::coeff_to_string(c.computed) << (c.pass ? " pass" : " FAIL");
            std::cout << line.str() << "\n";
        }
        std::cout << "verify: " << checks.size() << " checks, " << passed << " passed\n";
    }
    return passed == checks.size() ? 0 : 1;
}

json record_json(const csf::SearchRecord& rec) {
    json out{{"graph6", rec.graph6}, {"n", rec.n},           {"m", rec.m},
             {"claw_free", rec.claw_free}, {"ccf", rec.ccf}, {"e_positive", rec.e_positive}};
    if (rec.witness) {
        out["witness_partition"] = rec.witness->parts();
        out["witness_coefficient"] = coeff_json(*rec.witness_coefficient);
    }
    return out;
}

int run_hunt(std::optional<int> builtin_n, const std::string& corpus_path,
             const std::string& filters_csv, const std::string& out_path,
             const std::string& checkpoint_path, bool resume, uint64_t interval, int workers,
             int edge_cap, int64_t stop_after, const std::string& format) {
    if (builtin_n.has_value() == !corpus_path.empty())
        throw std::invalid_argument("hunt needs exactly one of --builtin or --corpus");
    csf::Corpus corpus =
        builtin_n ? csf::corpus_builtin(*builtin_n) : csf::corpus_from_file(corpus_path);

    csf::HuntOptions opts;
    opts.filters = csf::parse_filters(filters_csv);
    opts.checkpoint_path = checkpoint_path;
    opts.resume = resume;
    opts.checkpoint_interval = interval;
    opts.workers = workers;
    opts.edge_cap = edge_cap;
    if (stop_after >= 0) opts.stop_after = (uint64_t)stop_after;

    std::ofstream out_file;
    bool to_file = !out_path.empty() && out_path != "-";
    if (to_file) {
        out_file.open(out_path, std::ios::app);
        if (!out_file) throw std::runtime_error("cannot open " + out_path);
    }
    std::ostream& records = to_file ? out_file : std::cout;

    csf::HuntTallies tallies = csf::hunt(corpus, opts, [&](const csf::SearchRecord& rec) {
        if (rec.skipped) {
            std::cerr << "skip: " << rec.error << "\n";
            return;
        }
        records << record_json(rec).dump() << "\n";
    });

    std::ostream& summary = to_file ? std::cout : std::cerr;
    if (format == "json") {
        json out{{"corpus", corpus.label},   {"corpus_hash", corpus.hash},
                 {"scanned", tallies.scanned}, {"ccf", tallies.ccf},
                 {"claw_free", tallies.claw_free}, {"hits", tallies.hits},
                 {"skipped", tallies.skipped}};
        summary << out.dump() << "\n";
    } else {
        summary << "hunt " << corpus.label << ": scanned=" << tallies.scanned
                << " ccf=" << tallies.ccf << " claw_free=" << tallies.claw_free
                << " hits=" << tallies.hits << " skipped=" << tallies.skipped << "\n";
    }
    return tallies.skipped == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chromatic symmetric functions of small graphs"};
    app.require_subcommand(1);

    std::function<int()> action;

    std::string graph_spec, basis = "p", format = "text";
    int edge_cap = 30;
    int workers = (int)std::max(1u, std::thread::hardware_concurrency());

    auto* cmd_csf = app.add_subcommand("csf", "expand X_G in the power or elementary basis");
    cmd_csf->add_option("graph", graph_spec, "graph spec, e.g. sa:3,3 tt:3,3,3 claw g6:Bw")
        ->required();
    cmd_csf->add_option("--basis", basis, "p or e")->check(CLI::IsMember({"p", "e"}))
        ->envname("CSFKIT_BASIS");
    cmd_csf->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("CSFKIT_FORMAT");
    cmd_csf->add_option("--edge-cap", edge_cap, "refuse graphs with more edges")
        ->envname("CSFKIT_EDGE_CAP");
    cmd_csf->add_option("--workers", workers, "worker threads for the subset walk")
        ->envname("CSFKIT_WORKERS");
    cmd_csf->callback([&] { action = [&] { return run_csf(graph_spec, basis, format, edge_cap, workers); }; });

    auto* cmd_check = app.add_subcommand("check", "claw, contraction and e-positivity report");
    cmd_check->add_option("graph", graph_spec, "graph spec")->required();
    cmd_check->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("CSFKIT_FORMAT");
    cmd_check->add_option("--edge-cap", edge_cap, "refuse graphs with more edges")
        ->envname("CSFKIT_EDGE_CAP");
    cmd_check->callback([&] { action = [&] { return run_check(graph_spec, format, edge_cap); }; });

    std::vector<std::string> lemma_selectors;
    bool verify_all = false;
    std::string n_range;

    auto* cmd_verify = app.add_subcommand("verify", "check coefficient identities against brute force");
    cmd_verify->add_option("lemmas", lemma_selectors, "lemma ids, e.g. 3.3 3.8 4.5");
    cmd_verify->add_flag("--all", verify_all, "run every identity");
    cmd_verify->add_option("--n", n_range, "n or lo..hi (default: per-lemma range)");
    cmd_verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("CSFKIT_FORMAT");
    cmd_verify->callback(
        [&] { action = [&] { return run_verify(lemma_selectors, verify_all, n_range, format); }; });

    std::optional<int> builtin_n;
    std::string corpus_path, filters_csv, out_path, checkpoint_path;
    bool resume = false;
    uint64_t interval = 10000;
    int64_t stop_after = -1;

    auto* cmd_hunt = app.add_subcommand("hunt", "scan a corpus for filtered graphs");
    cmd_hunt->add_option("--builtin", builtin_n, "scan all connected graphs on N <= 7 vertices");
    cmd_hunt->add_option("--corpus", corpus_path, "graph6 file, one record per line");
    cmd_hunt->add_option("--filters", filters_csv,
                         "comma-separated: ccf, not-ccf, claw-free, not-claw-free, epos, not-epos");
    cmd_hunt->add_option("--out", out_path, "JSONL output file (default: stdout)");
    cmd_hunt->add_option("--checkpoint", checkpoint_path, "checkpoint JSON path");
    cmd_hunt->add_flag("--continue", resume, "resume from the checkpoint if present");
    cmd_hunt->add_option("--checkpoint-interval", interval, "records per checkpoint write")
        ->envname("CSFKIT_CHECKPOINT_INTERVAL");
    cmd_hunt->add_option("--workers", workers, "worker threads")->envname("CSFKIT_WORKERS");
    cmd_hunt->add_option("--edge-cap", edge_cap, "skip graphs with more edges")
        ->envname("CSFKIT_EDGE_CAP");
    cmd_hunt->add_option("--stop-after", stop_after, "stop after this many records this run");
    cmd_hunt->add_option("--format", format, "text or json summary")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("CSFKIT_FORMAT");
    cmd_hunt->callback([&] {
        action = [&] {
            return run_hunt(builtin_n, corpus_path, filters_csv, out_path, checkpoint_path, resume,
                            interval, workers, edge_cap, stop_after, format);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const csf::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const csf::capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
