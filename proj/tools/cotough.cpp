// cotough: toughness, prism-hamiltonicity, and spanning k-walk certificates
// for P4-free graphs. Certificates go to stdout as JSON; diagnostics to
// stderr. Exit codes: 0 property holds / success, 1 property fails (with
// witness), 2 I/O or parse error, 3 precondition violation (e.g. an induced
// P4), 4 internal verification failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cotough/generate.hpp"
#include "cotough/json_io.hpp"
#include "cotough/oracle.hpp"
#include "cotough/prism_walks.hpp"
#include "cotough/sbep.hpp"
#include "cotough/toughness.hpp"
#include "cotough/util.hpp"

using namespace cotough;
using nlohmann::json;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GraphFormat detect_format(const std::string& text, const std::string& requested) {
    if (requested == "graph6") return GraphFormat::graph6;
    if (requested == "edge_list") return GraphFormat::edge_list;
    // auto: a graph6 line only uses bytes 63..126; an edge_list header starts
    // with a digit (< 63)
    for (char c : text) {
        if (isspace(static_cast<unsigned char>(c))) continue;
        return (c >= 63 && c <= 126 && !isdigit(static_cast<unsigned char>(c)))
                   ? GraphFormat::graph6
                   : GraphFormat::edge_list;
    }
    throw ParseError("empty input");
}

Graph load_graph(const std::string& path, const std::string& format) {
    const std::string text = read_input(path);
    std::vector<std::string> warnings;
    Graph g = parse_graph(text, detect_format(text, format), &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    return g;
}

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

std::string digest_of(const std::string& g6) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(g6)));
    return std::string(buf);
}

// ---------------------------------------------------------------------------

int cmd_recognize(const std::string& input, const std::string& format) {
    const Graph g = load_graph(input, format);
    auto r = recognize(g);
    json out;
    if (std::holds_alternative<Cotree>(r)) {
        const Cotree& t = std::get<Cotree>(r);
        out["cograph"] = true;
        out["cotree_text"] = cotree_to_text(t);
        out["cotree"] = to_json(t);
        print_json(out);
        return kExitHolds;
    }
    out["cograph"] = false;
    out["p4"] = to_json(std::get<P4Witness>(r))["p4"];
    print_json(out);
    return kExitFails;
}

int cmd_toughness(const std::string& input, const std::string& format, bool use_oracle) {
    const Graph g = load_graph(input, format);
    const ToughnessResult r = toughness_exact(g);
    json out = to_json(r);
    bool mismatch = false;
    if (use_oracle) {
        if (g.vertex_count() <= 10) {
            const ToughnessResult o = oracle::oracle_toughness(g);
            const bool agree =
                o.value == r.value && (r.value.is_infinite() || *o.witness == *r.witness);
            out["oracle"] = agree ? "agree" : "disagree";
            mismatch = !agree;
        } else {
            out["oracle"] = "skipped (n > 10)";
        }
    }
    print_json(out);
    return mismatch ? kExitInternal : kExitHolds;
}

int cmd_prism_ham(const std::string& input, const std::string& format, bool emit_sbep,
                  bool emit_2walk, bool verify) {
    const Graph g = load_graph(input, format);
    if (g.vertex_count() < 2)
        throw std::invalid_argument("prism-ham: need at least two vertices");

    auto res = spanning_sbep(g);
    if (std::holds_alternative<NotTough>(res)) {
        const VertexSet& w = std::get<NotTough>(res).witness;
        json out;
        out["prism_hamiltonian"] = false;
        json wit;
        const auto comps = components_after_removal(g, w);
        wit["tough_set"] = to_json(w);
        wit["components"] = comps.size();
        wit["ratio"] = Rational(w.size(), static_cast<long long>(comps.size())).str();
        out["witness"] = std::move(wit);
        if (verify) {
            bool ok = comps.size() >= 2 &&
                      Rational(w.size(), static_cast<long long>(comps.size())) < Rational(1, 2);
            if (ok && g.vertex_count() <= 9)
                ok = !oracle::oracle_prism_hamiltonian(g).holds;
            out["verified"] = ok;
            print_json(out);
            return ok ? kExitFails : kExitInternal;
        }
        print_json(out);
        return kExitFails;
    }

    const SbepGraph& sg = std::get<SbepGraph>(res);
    const PrismCycle pc = prism_cycle_from_sbep(g, sg);
    const KWalk walk2 = two_walk_from_prism_cycle(pc);
    json out;
    out["prism_hamiltonian"] = true;
    out["prism_cycle"] = to_json(pc);
    if (emit_sbep) out["sbep"] = to_json(sg);
    if (emit_2walk) out["two_walk"] = to_json(walk2);
    if (verify) {
        bool ok = validate_sbep(g, sg) && sbep_vertices(sg) == full_vertex_set(g.vertex_count()) &&
                  validate_prism_cycle(g, pc) && prism_cycle_uses_single_block_verticals(sg, pc) &&
                  validate_k_walk(g, walk2);
        if (ok && g.vertex_count() <= 9) ok = oracle::oracle_prism_hamiltonian(g).holds;
        out["verified"] = ok;
        print_json(out);
        return ok ? kExitHolds : kExitInternal;
    }
    print_json(out);
    return kExitHolds;
}

int cmd_k_walk(const std::string& input, const std::string& format, int k, bool verify) {
    const Graph g = load_graph(input, format);
    auto res = find_k_walk(g, k);
    if (std::holds_alternative<NotTough>(res)) {
        const VertexSet& w = std::get<NotTough>(res).witness;
        json out;
        out["spanning_k_walk"] = false;
        out["k"] = k;
        json wit;
        const auto comps = components_after_removal(g, w);
        wit["tough_set"] = to_json(w);
        wit["components"] = comps.size();
        wit["ratio"] = Rational(w.size(), static_cast<long long>(comps.size())).str();
        out["witness"] = std::move(wit);
        if (verify) {
            bool ok = comps.size() >= 2 &&
                      Rational(w.size(), static_cast<long long>(comps.size())) < Rational(1, k);
            if (ok && g.vertex_count() * k <= 18) ok = !oracle::oracle_k_walk(g, k).holds;
            out["verified"] = ok;
            print_json(out);
            return ok ? kExitFails : kExitInternal;
        }
        print_json(out);
        return kExitFails;
    }
    const KWalk& w = std::get<KWalk>(res);
    json out;
    out["spanning_k_walk"] = true;
    out["certificate"] = to_json(w);
    if (verify) {
        bool ok = validate_k_walk(g, w);
        if (ok && g.vertex_count() * k <= 18) ok = oracle::oracle_k_walk(g, k).holds;
        out["verified"] = ok;
        print_json(out);
        return ok ? kExitHolds : kExitInternal;
    }
    print_json(out);
    return kExitHolds;
}

int cmd_gen(int n, int count, std::uint64_t seed, double join_bias, bool allow_disconnected) {
    RandomCographOptions opt;
    opt.join_bias_ppm = static_cast<int>(join_bias * 1000000);
    opt.connected = !allow_disconnected;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i)
        std::cout << emit_graph(random_cograph(n, rng, opt), GraphFormat::graph6) << "\n";
    return kExitHolds;
}

int cmd_verify(const std::string& input, const std::string& format, const std::string& property,
               int k) {
    const Graph g = load_graph(input, format);
    json out;
    out["property"] = property;
    bool holds;
    if (property == "ham-cycle" || property == "ham-path") {
        auto v = oracle::oracle_hamiltonian(
            g, property == "ham-cycle" ? oracle::HamKind::cycle : oracle::HamKind::path);
        holds = v.holds;
        if (v.vertex_sequence) out["witness"] = *v.vertex_sequence;
    } else if (property == "prism-ham") {
        auto v = oracle::oracle_prism_hamiltonian(g);
        holds = v.holds;
        if (v.prism_cycle) out["witness"] = to_json(*v.prism_cycle)["cycle"];
    } else if (property == "k-walk") {
        auto v = oracle::oracle_k_walk(g, k);
        holds = v.holds;
        out["k"] = k;
        if (v.walk) out["witness"] = to_json(*v.walk);
    } else if (property == "toughness") {
        const auto r = oracle::oracle_toughness(g);
        out["toughness"] = r.value.str();
        if (!r.value.is_infinite()) out["tough_set"] = to_json(*r.witness);
        print_json(out);
        return kExitHolds;
    } else if (property == "sbep-spanning") {
        holds = oracle::oracle_sbep_spanning(g).holds;
    } else {
        throw std::invalid_argument("verify: unknown property " + property);
    }
    out["holds"] = holds;
    print_json(out);
    return holds ? kExitHolds : kExitFails;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepStats {
    int reports = 0;
    int discrepancies = 0;
};

void sweep_one(const Graph& g, int index, const std::string& kind, int k, bool timings,
               SweepStats& stats) {
    const std::string g6 = emit_graph(g, GraphFormat::graph6);
    const int n = g.vertex_count();
    json rep;
    rep["index"] = index;
    rep["graph6"] = g6;
    rep["digest"] = digest_of(g6);
    rep["kind"] = kind;
    const auto t0 = std::chrono::steady_clock::now();

    bool ok = true;
    std::string oracle_status = "skipped";
    json result, witness;

    if (kind == "recognize") {
        auto r = recognize(g);
        const bool is_cograph = std::holds_alternative<Cotree>(r);
        result["cograph"] = is_cograph;
        if (is_cograph) {
            witness["cotree"] = cotree_to_text(std::get<Cotree>(r));
            ok = realize_cotree(std::get<Cotree>(r), n).same_adjacency(g);
        } else {
            witness = to_json(std::get<P4Witness>(r));
            ok = false;
        }
        if (n <= 8) {
            oracle_status = (is_cograph == is_p4_free_oracle(g)) ? "ok" : "mismatch";
        }
    } else if (kind == "toughness") {
        const auto r = toughness_exact(g);
        result["toughness"] = r.value.str();
        witness = to_json(r);
        if (n <= 10) {
            const auto o = oracle::oracle_toughness(g);
            oracle_status = (o.value == r.value) ? "ok" : "mismatch";
        }
    } else if (kind == "prism") {
        auto res = spanning_sbep(g);
        const bool built = std::holds_alternative<SbepGraph>(res);
        result["prism_hamiltonian"] = built;
        if (built) {
            const auto& sg = std::get<SbepGraph>(res);
            const auto pc = prism_cycle_from_sbep(g, sg);
            const auto w2 = two_walk_from_prism_cycle(pc);
            witness = to_json(pc);
            ok = validate_sbep(g, sg) && sbep_vertices(sg) == full_vertex_set(n) &&
                 validate_prism_cycle(g, pc) && prism_cycle_uses_single_block_verticals(sg, pc) &&
                 validate_k_walk(g, w2);
        } else {
            const auto& w = std::get<NotTough>(res).witness;
            witness["tough_set"] = to_json(w);
            const auto comps = components_after_removal(g, w);
            ok = comps.size() >= 2 &&
                 Rational(w.size(), static_cast<long long>(comps.size())) < Rational(1, 2);
        }
        if (n <= 9)
            oracle_status = (oracle::oracle_prism_hamiltonian(g).holds == built) ? "ok" : "mismatch";
    } else if (kind == "kwalk") {
        auto res = find_k_walk(g, k);
        const bool built = std::holds_alternative<KWalk>(res);
        result["spanning_k_walk"] = built;
        result["k"] = k;
        if (built) {
            witness = to_json(std::get<KWalk>(res));
            ok = validate_k_walk(g, std::get<KWalk>(res));
        } else {
            witness["tough_set"] = to_json(std::get<NotTough>(res).witness);
        }
        if (n * k <= 18)
            oracle_status = (oracle::oracle_k_walk(g, k).holds == built) ? "ok" : "mismatch";
    } else {
        throw std::invalid_argument("sweep: unknown kind " + kind);
    }

    rep["result"] = std::move(result);
    rep["witness"] = std::move(witness);
    rep["check"] = ok ? "ok" : "fail";
    rep["oracle"] = oracle_status;
    if (timings)
        rep["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    print_json(rep);
    ++stats.reports;
    if (!ok || oracle_status == "mismatch") ++stats.discrepancies;
}

int cmd_sweep(int nmax, const std::string& kinds_csv, std::uint64_t seed, int random_count,
              int random_min, int random_max, int k, bool timings) {
    std::vector<std::string> kinds;
    std::stringstream ss(kinds_csv);
    std::string item;
    while (std::getline(ss, item, ',')) kinds.push_back(item);

    SweepStats stats;
    int index = 0;
    for (int n = 1; n <= nmax; ++n)
        for (const Cotree& t : enumerate_connected_cotrees(n)) {
            const Graph g = realize_cotree(t, n);
            for (const auto& kind : kinds) {
                if (kind == "prism" && n < 2) continue;
                sweep_one(g, index, kind, k, timings, stats);
            }
            ++index;
        }

    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_count; ++i) {
        const int span = random_max - random_min + 1;
        const int n = random_min + static_cast<int>(rand_below(rng, span));
        const Graph g = random_cograph(n, rng);
        for (const auto& kind : kinds) sweep_one(g, index, kind, k, timings, stats);
        ++index;
    }

    std::cerr << "sweep: " << stats.reports << " reports, " << stats.discrepancies
              << " discrepancies\n";
    return stats.discrepancies == 0 ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certificates for toughness, prism-hamiltonicity and spanning k-walks of P4-free graphs"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "auto";
    int k = 2;
    bool use_oracle = false, emit_sbep = false, emit_2walk = false, verify = false;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "input file (graph6 or edge list), - for stdin");
        sub->add_option("--format", format, "input format: auto|graph6|edge_list")
            ->check(CLI::IsMember({"auto", "graph6", "edge_list"}));
    };

    auto* rec = app.add_subcommand("recognize", "cotree certificate or induced-P4 witness");
    add_input(rec);

    auto* tough = app.add_subcommand("toughness", "exact toughness with an optimal tough-set");
    add_input(tough);
    tough->add_flag("--oracle", use_oracle, "cross-check against the exhaustive oracle (n <= 10)");

    auto* ph = app.add_subcommand("prism-ham", "prism-hamiltonicity certificate bundle");
    add_input(ph);
    ph->add_flag("--emit-sbep", emit_sbep, "include the spanning SBEP certificate");
    ph->add_flag("--emit-2walk", emit_2walk, "include the projected spanning 2-walk");
    ph->add_flag("--verify", verify, "re-run all validators (and oracles when small enough)");

    auto* kw = app.add_subcommand("k-walk", "spanning k-walk certificate");
    add_input(kw);
    kw->add_option("-k,--k", k, "walk multiplicity")->check(CLI::PositiveNumber);
    kw->add_flag("--verify", verify, "re-run validators (and the oracle when small enough)");

    int gen_n = 8, gen_count = 1;
    std::uint64_t seed = 0;
    double join_bias = 0.5;
    bool allow_disconnected = false;
    auto* gen = app.add_subcommand("gen", "seeded random cographs as graph6 lines");
    gen->add_option("n", gen_n, "vertex count")->required()->check(CLI::PositiveNumber);
    gen->add_option("--count", gen_count, "how many graphs");
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--join-bias", join_bias, "probability an internal cotree node is a join")
        ->check(CLI::Range(0.0, 1.0));
    gen->add_flag("--allow-disconnected", allow_disconnected, "do not force a join root");

    std::string property = "prism-ham";
    auto* ver = app.add_subcommand("verify", "brute-force oracle verdict for a property");
    add_input(ver);
    ver->add_option("--property", property,
                    "ham-cycle|ham-path|prism-ham|k-walk|toughness|sbep-spanning")
        ->required();
    ver->add_option("-k,--k", k, "walk multiplicity for k-walk");

    int nmax = 6, random_count = 0, random_min = 10, random_max = 16;
    std::string kinds = "recognize,toughness,prism,kwalk";
    bool timings = false;
    auto* sw = app.add_subcommand("sweep", "exhaustive + random batch runs with oracle checks");
    sw->add_option("--nmax", nmax, "exhaustive sweep over connected cographs up to this size");
    sw->add_option("--kinds", kinds, "comma list: recognize,toughness,prism,kwalk");
    sw->add_option("--seed", seed, "RNG seed for the random part");
    sw->add_option("--random-count", random_count, "number of random cographs to add");
    sw->add_option("--random-min", random_min, "smallest random size");
    sw->add_option("--random-max", random_max, "largest random size");
    sw->add_option("-k,--k", k, "walk multiplicity for the kwalk kind");
    sw->add_flag("--timings", timings, "include wall_ms in reports (breaks byte determinism)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rec->parsed()) return cmd_recognize(input, format);
        if (tough->parsed()) return cmd_toughness(input, format, use_oracle);
        if (ph->parsed()) return cmd_prism_ham(input, format, emit_sbep, emit_2walk, verify);
        if (kw->parsed()) return cmd_k_walk(input, format, k, verify);
        if (gen->parsed()) return cmd_gen(gen_n, gen_count, seed, join_bias, allow_disconnected);
        if (ver->parsed()) return cmd_verify(input, format, property, k);
        if (sw->parsed())
            return cmd_sweep(nmax, kinds, seed, random_count, random_min, random_max, k, timings);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NotCographError& e) {
        json out;
        out["error"] = "not_p4_free";
        out["p4"] = to_json(e.witness)["p4"];
        print_json(out);
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitParse;
}
