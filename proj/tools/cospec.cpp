// cospec: characteristic polynomials, cospectral mates and DAS censuses of generalized pineapples.

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cospec/classifier.hpp"
#include "cospec/closed_forms.hpp"
#include "cospec/graph_io.hpp"
#include "cospec/json_io.hpp"
#include "cospec/oracle.hpp"
#include "cospec/spectra.hpp"

namespace {

using namespace cospec;

enum Exit { ok = 0, usage = 2, verification = 3, io = 4 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

IntRange parse_range(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("bad range '" + text + "': expected a:b or a single integer"); };
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            throw bad();
        }
        if (used != s.size()) throw bad();
        return static_cast<Int>(v);
    };
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        Int v = to_int(text);
        return {v, v};
    }
    IntRange r{to_int(text.substr(0, colon)), to_int(text.substr(colon + 1))};
    if (r.lo > r.hi) throw bad();
    return r;
}

unsigned parse_jobs(const std::string& text) {
    if (text == "auto") return std::max(1u, std::thread::hardware_concurrency());
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || v < 1) throw std::invalid_argument("bad --jobs value '" + text + "': expected a positive integer or auto");
    return static_cast<unsigned>(v);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.close();
    if (!out) throw IoError("failed writing '" + path + "'");
}

std::string pineapple_name(const PineappleParams& p) {
    return "K_{" + std::to_string(p.p) + "," + std::to_string(p.k) + "}^{" + std::to_string(p.q) + "}";
}

std::string render_classification(const Classification& c, const std::string& format) {
    if (format == "json") return to_json(c).dump(2) + "\n";
    if (format == "csv") return census_csv_header() + "\n" + census_csv_row({c.params, c}) + "\n";
    std::ostringstream out;
    out << pineapple_name(c.params) << ": " << (c.das() ? "DAS" : "non-DAS") << ", " << c.mates.size()
        << (c.mates.size() == 1 ? " mate" : " mates") << "\n";
    for (const auto& m : c.mates)
        out << "  " << family_name(m.spec.family) << "  " << to_string(m.spec) << "  [order " << m.realized_order
            << (m.verified ? ", verified" : "") << "]\n";
    return out.str();
}

struct Options {
    Int p = 0, k = 0, q = 0;
    std::string format = "text";
    std::string out;
    std::string k_range, q_range;
    std::string jobs;
    std::string family;
    Int indep = 0, clique = 0, n = 0, t = 0, m = 0, base = 0, isolated = 0;
    std::string type;
    Int order = 0;
    std::string orders;
    Int cap = default_scan_cap;
};

int cmd_poly(const Options& o) {
    PineappleParams params{o.p, o.k, o.q};
    params.validate();
    auto f = pineapple_poly(params);
    if (o.format == "json") {
        std::cout << to_json(f).dump() << "\n";
    } else {
        std::cout << f.to_string() << "\n";
        std::cout << f.expand().to_string() << "\n";
    }
    return ok;
}

int cmd_mates(const Options& o) {
    PineappleParams params{o.p, o.k, o.q};
    params.validate();
    std::cout << render_classification(enumerate_mates(params), o.format);
    return ok;
}

int cmd_census(const Options& o, unsigned jobs) {
    auto table = census(o.p, parse_range(o.k_range), parse_range(o.q_range), jobs);
    auto csv = census_csv(table);
    if (!o.out.empty()) write_output(o.out, csv);
    else if (o.format == "csv") std::cout << csv;
    std::cout << "DAS=" << table.das_count() << " non-DAS=" << table.non_das_count() << "\n";
    return ok;
}

int cmd_verify(const Options& o) {
    PineappleParams params{o.p, o.k, o.q};
    params.validate();
    std::vector<std::pair<std::string, bool>> checks;
    auto g = make_pineapple(params);
    auto f = char_poly(g);
    auto closed = pineapple_poly(params);
    checks.emplace_back("char_poly equals the factored closed form", f == closed.expand());
    checks.emplace_back("multiplicity of 0 is q-1", integer_root_multiplicity(f, 0) == static_cast<unsigned>(params.q - 1));
    checks.emplace_back("multiplicity of -1 is p-2", integer_root_multiplicity(f, -1) == static_cast<unsigned>(params.p - 2));
    auto a = IntMatrix::adjacency(g);
    checks.emplace_back("rank A = p+1", rank_over_rationals(a) == static_cast<std::size_t>(params.p + 1));
    checks.emplace_back("rank(I+A) = q+2", rank_over_rationals(IntMatrix::identity(g.order()) + a) == static_cast<std::size_t>(params.q + 2));
    std::vector<std::vector<std::size_t>> parts(3);
    for (Int v = 0; v < params.p + params.q; ++v) parts[v < params.k ? 0 : v < params.p ? 1 : 2].push_back(static_cast<std::size_t>(v));
    bool quotient_ok = false;
    try {
        auto qm = quotient_matrix(g, parts);
        quotient_ok = poly_divides(char_poly(qm), f) && char_poly(qm) == closed.cubic;
    } catch (const NonEquitablePartition&) {
        quotient_ok = false;
    }
    checks.emplace_back("quotient matrix is equitable and its char_poly divides", quotient_ok);
    auto prof = root_profile(closed.cubic);
    checks.emplace_back("cubic has two positive roots and one below -1",
                        prof.positive == 2 && prof.below_minus_one == 1 && prof.between == 0);
    checks.emplace_back("trace and edge-count coefficients",
                        f.coeff(g.order() - 1) == 0 && f.coeff(g.order() - 2) == -static_cast<long>(g.edge_count()));

    auto cls = enumerate_mates(params, ClassifyOptions{false});
    MateVerifier verifier(params);
    for (const auto& m : cls.mates) checks.emplace_back("mate " + to_string(m.spec), verifier.check(m.spec).is_mate());

    bool all = true;
    for (const auto& [name, pass] : checks) {
        all = all && pass;
        std::cout << (pass ? "PASS " : "FAIL ") << name << "\n";
    }
    std::cout << pineapple_name(params) << ": " << (cls.das() ? "DAS" : "non-DAS") << ", " << cls.mates.size() << " mate(s)\n";
    return all ? ok : verification;
}

int cmd_graph(const Options& o) {
    std::optional<Graph> g;
    auto need = [](bool c, const std::string& msg) {
        if (!c) throw std::invalid_argument(msg);
    };
    auto a = o.isolated;
    need(a >= 0, "--isolated must be nonnegative");
    if (o.family == "pineapple") {
        PineappleParams params{o.p, o.k, o.q};
        params.validate();
        g = make_pineapple(params);
    } else if (o.family == "complete") {
        need(o.n >= 1, "--n must be positive");
        g = make_complete(static_cast<std::size_t>(o.n));
    } else if (o.family == "cs") {
        need(o.indep >= 1 && o.clique >= 1, "--indep and --clique must be positive");
        g = make_complete_split(static_cast<std::size_t>(o.indep), static_cast<std::size_t>(o.clique));
    } else if (o.family == "twocomponent") {
        g = realize(FamilySpec::two_component(o.t, o.m, o.n, 0));
    } else if (o.family == "mixedext") {
        std::vector<Int> type;
        std::stringstream ss(o.type);
        std::string item;
        while (std::getline(ss, item, ',')) type.push_back(parse_range(item).lo);
        need(o.base == 0 || o.base == static_cast<Int>(type.size()), "--base does not match the length of --type");
        g = make_mixed_extension(MixedExtension(type));
    } else {
        throw std::invalid_argument("unknown family '" + o.family + "'");
    }
    if (a > 0) g = disjoint_union({*g}, static_cast<std::size_t>(a));
    auto fmt = o.format == "graph6" ? GraphFormat::graph6 : GraphFormat::edge_list;
    std::string text = export_graph(*g, fmt);
    if (!text.empty()) text += "\n";
    write_output(o.out, text);
    return ok;
}

int cmd_scan(const Options& o) {
    IntRange r = o.orders.empty() ? IntRange{o.order, o.order} : parse_range(o.orders);
    FamilyScanner scanner(o.cap);
    bool passed = true;
    nlohmann::json reports = nlohmann::json::array();
    for (Int n = r.lo; n <= r.hi; ++n) {
        auto rep = scanner.scan(n);
        passed = passed && rep.passed();
        if (o.format == "json") {
            reports.push_back(to_json(rep));
            continue;
        }
        std::cout << rep.params_range << ": " << rep.specs_checked << " specs, " << rep.pineapples_checked
                  << " pineapples, " << rep.found.size() << " cospectral pairs, " << rep.missed_by_classifier.size()
                  << " missed, " << rep.spurious_in_classifier.size() << " spurious\n";
        for (const auto& h : rep.found) std::cout << "  " << pineapple_name(h.params) << "  " << to_string(h.spec) << "\n";
        for (const auto& h : rep.missed_by_classifier) std::cout << "  MISSED " << pineapple_name(h.params) << "  " << to_string(h.spec) << "\n";
        for (const auto& h : rep.spurious_in_classifier) std::cout << "  SPURIOUS " << pineapple_name(h.params) << "  " << to_string(h.spec) << "\n";
    }
    if (o.format == "json") std::cout << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
    return passed ? ok : verification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spectra and cospectral mates of generalized pineapple graphs K_{p,k}^q"};
    app.require_subcommand(1);
    app.footer("Environment: COSPEC_JOBS sets the default worker count for census (positive integer or auto).\n"
               "Exit codes: 0 success, 2 usage or parameter error, 3 verification failure, 4 I/O error.");
    Options o;
    const char* env_jobs = std::getenv("COSPEC_JOBS");
    o.jobs = env_jobs ? env_jobs : "1";

    auto add_pkq = [&](CLI::App* sub) {
        sub->add_option("--p", o.p, "clique size p")->required();
        sub->add_option("--k", o.k, "attachment count k (1 <= k <= p-2)")->required();
        sub->add_option("--q", o.q, "pendant independent set size q (>= 1)")->required();
    };

    auto* poly = app.add_subcommand("poly", "factored and expanded characteristic polynomial of K_{p,k}^q");
    add_pkq(poly);
    poly->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* mates = app.add_subcommand("mates", "all cospectral mates and the DAS verdict");
    add_pkq(mates);
    mates->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

    auto* cen = app.add_subcommand("census", "classify every (k,q) in a grid for fixed p; writes CSV");
    cen->add_option("--p", o.p, "clique size p")->required();
    cen->add_option("--k", o.k_range, "k range a:b (inclusive)")->required();
    cen->add_option("--q", o.q_range, "q range a:b (inclusive)")->required();
    cen->add_option("--out", o.out, "CSV output path");
    cen->add_option("--format", o.format, "csv prints the table to stdout when --out is absent")
        ->check(CLI::IsMember({"text", "csv"}));
    cen->add_option("--jobs", o.jobs, "worker threads (positive integer or auto)");

    auto* ver = app.add_subcommand("verify", "run the spectral identities and mate verification for one triple");
    add_pkq(ver);

    auto* gr = app.add_subcommand("graph", "export a structured graph as graph6 or an edge list");
    gr->add_option("--family", o.family, "pineapple, complete, cs, twocomponent or mixedext")
        ->required()
        ->check(CLI::IsMember({"pineapple", "complete", "cs", "twocomponent", "mixedext"}));
    gr->add_option("--p", o.p);
    gr->add_option("--k", o.k);
    gr->add_option("--q", o.q);
    gr->add_option("--n", o.n, "order of K_n, or independent-set size for twocomponent");
    gr->add_option("--indep", o.indep, "independent-set size of CS");
    gr->add_option("--clique", o.clique, "clique size of CS");
    gr->add_option("--t", o.t, "complete component size for twocomponent");
    gr->add_option("--m", o.m, "split-graph clique size for twocomponent");
    gr->add_option("--base", o.base, "path length of a mixed extension");
    gr->add_option("--type", o.type, "comma-separated signed type tuple, e.g. 1,2,-4,2,1");
    gr->add_option("--isolated", o.isolated, "extra isolated vertices");
    gr->add_option("--out", o.out, "output path (stdout if absent)");
    o.format = "edgelist";
    gr->add_option("--format", o.format, "graph6 or edgelist")->check(CLI::IsMember({"graph6", "edgelist"}));

    auto* sc = app.add_subcommand("scan", "brute-force structured scan certifying classifier completeness");
    sc->add_option("--order", o.order, "single realized order");
    sc->add_option("--orders", o.orders, "order range a:b");
    sc->add_option("--cap", o.cap, "largest permitted order (>= 5)");
    sc->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    // The graph subcommand defaults to edgelist; the others to text.
    app.parse_complete_callback([&] {
        if (!gr->parsed() && o.format == "edgelist") o.format = "text";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (poly->parsed()) return cmd_poly(o);
        if (mates->parsed()) return cmd_mates(o);
        if (cen->parsed()) return cmd_census(o, parse_jobs(o.jobs));
        if (ver->parsed()) return cmd_verify(o);
        if (gr->parsed()) return cmd_graph(o);
        if (sc->parsed()) {
            if (o.order == 0 && o.orders.empty()) throw std::invalid_argument("scan needs --order or --orders");
            return cmd_scan(o);
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return verification;
    } catch (const std::logic_error& e) {
        // invalid_argument and out_of_range are parameter errors; other logic errors are internal inconsistencies.
        if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e) ||
            dynamic_cast<const std::length_error*>(&e)) {
            std::cerr << "error: " << e.what() << "\n";
            return usage;
        }
        std::cerr << "verification failure: " << e.what() << "\n";
        return verification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return verification;
    }
    return usage;
}
