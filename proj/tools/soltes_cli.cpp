// soltes: construct the H graph families, compute Wiener indices and
// vertex-deletion spectra, verify the reference tables, and sweep the
// parameter space for new tuples.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "soltes/analysis.hpp"
#include "soltes/edge_list.hpp"
#include "soltes/family.hpp"
#include "soltes/search.hpp"
#include "soltes/verify_tables.hpp"

#ifndef SOLTES_DATA_DIR
#define SOLTES_DATA_DIR "data"
#endif

namespace {

using namespace soltes;

bool looks_like_selector(const std::string& input) {
    if (input == "example497" || input == "example497-joined") return true;
    static const char* kPrefixes[] = {"prop2:", "prop2matching:", "prop3:", "prop4:", "h:"};
    for (const char* p : kPrefixes)
        if (input.rfind(p, 0) == 0) return true;
    return false;
}

// Either a family selector (graph built in memory, role metadata known) or
// an edge-list file (role metadata only when the file records a selector).
struct Input {
    Graph graph;
    std::optional<HGraph> h;
};

Input resolve_input(const std::string& input) {
    if (looks_like_selector(input)) {
        HGraph h = build_H(parse_selector(input));
        return {h.graph, std::move(h)};
    }
    EdgeListData data = load_edge_list(input);
    std::optional<HGraph> h = try_read_h_graph(data);
    return {std::move(data.graph), std::move(h)};
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

void print_spectrum(std::ostream& out, const DeltaSpectrum& spectrum, bool csv) {
    if (csv) {
        out << "# order," << spectrum.order << "\n";
        out << "# disconnecting," << spectrum.disconnecting << "\n";
        out << "m,count,r_m,r_m_decimal\n";
        for (const auto& [m, count] : spectrum.counts) {
            Rational r = r_m(spectrum, m);
            out << m << "," << count << "," << r.to_string() << "," << r.to_decimal3()
                << "\n";
        }
        return;
    }
    out << "order " << spectrum.order << ", disconnecting vertices "
        << spectrum.disconnecting << "\n";
    for (const auto& [m, count] : spectrum.counts) {
        Rational r = r_m(spectrum, m);
        out << "  delta " << m << ": " << count << " vertices, R_" << m << " = "
            << r.to_string() << " (" << r.to_decimal3() << ")\n";
    }
}

int run_construct(const std::string& selector, const std::string& out_path) {
    HGraph h = build_H(parse_selector(selector));
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    write_h_graph(out, h);
    return 0;
}

int run_wiener(const std::string& input, int threads) {
    Input resolved = resolve_input(input);
    std::cout << wiener(resolved.graph, threads) << "\n";
    return 0;
}

int run_spectrum(const std::string& input, bool orbit, bool csv, int threads,
                 const std::string& out_path) {
    Input resolved = resolve_input(input);
    DeltaSpectrum spectrum;
    if (orbit) {
        if (!resolved.h)
            throw std::invalid_argument(
                "--orbit needs a family selector or a file with construction metadata");
        spectrum = delta_spectrum_orbit(*resolved.h, threads);
    } else {
        spectrum = delta_spectrum(resolved.graph, threads);
    }
    std::ofstream file;
    print_spectrum(open_output(file, out_path), spectrum, csv);
    return 0;
}

int run_verify(std::vector<std::string> selectors, bool all, const std::string& fixture,
               std::int64_t cap, int threads, bool csv) {
    if (!all && selectors.empty())
        throw std::invalid_argument("verify needs --all or at least one selector");
    std::vector<ExpectedRow> rows = load_expected_rows(fixture);
    if (!all) {
        for (const auto& s : selectors) {
            bool known = false;
            for (const auto& row : rows) known |= (s == row.selector());
            if (!known)
                throw std::invalid_argument("selector '" + s + "' has no fixture row");
        }
    }
    int checked = 0, failed = 0, skipped = 0;
    if (csv) std::cout << "check,status,detail\n";
    auto report = [&](const std::string& label, const std::vector<std::string>& failures) {
        ++checked;
        if (csv) {
            std::cout << "\"" << label << "\"," << (failures.empty() ? "ok" : "fail") << ",\"";
            for (std::size_t i = 0; i < failures.size(); ++i)
                std::cout << (i ? "; " : "") << failures[i];
            std::cout << "\"\n";
            failed += failures.empty() ? 0 : 1;
            return;
        }
        if (failures.empty()) {
            std::cout << "ok   " << label << "\n";
        } else {
            ++failed;
            std::cout << "FAIL " << label << "\n";
            for (const auto& f : failures) std::cout << "     " << f << "\n";
        }
    };

    for (const auto& row : rows) {
        if (!all) {
            bool wanted = false;
            for (const auto& s : selectors) wanted |= (s == row.selector());
            if (!wanted) continue;
        }
        RowOutcome outcome = check_row(row, threads, cap);
        if (outcome.skipped) {
            ++skipped;
            if (csv)
                std::cout << "\"" << row.selector() << "\",skip,\"order " << row.order
                          << " above cap " << cap << "\"\n";
            else
                std::cout << "skip " << row.selector() << " (order " << row.order
                          << " above cap " << cap << ")\n";
            continue;
        }
        std::ostringstream label;
        label << row.selector() << " order=" << row.order << " W=" << row.wiener
              << " m=" << row.m << " R=" << Rational(row.r_num, row.r_den).to_string() << " ("
              << row.r_decimal << ")";
        report(label.str(), outcome.failures);
    }

    if (all) {
        for (const auto& row : rows) {
            if (row.family != "prop2" || row.param % 2 == 0) continue;
            if (row.order > cap) {
                ++skipped;
                continue;
            }
            report("prop2matching:m=" + std::to_string(row.param) + " (" +
                       std::to_string(row.param + 7) + "-regular)",
                   check_matching_corollary(row, threads));
        }
        for (const auto& row : rows) {
            if (row.family != "prop2" || row.param != 0) continue;
            for (int s = 1; s <= 2; ++s)
                report("prop2:m=0 with " + std::to_string(s) + " inserted gadget edge(s)",
                       check_insertion_corollary(row, s, threads));
        }
    }

    if (!csv)
        std::cout << checked << " checks, " << failed << " failures, " << skipped
                  << " skipped\n";
    return failed == 0 ? 0 : 1;
}

int run_search(std::int64_t m, Range n_range, Range k_range, Range n0_range, int max_l,
               bool verify, std::int64_t cap, int threads, bool show_skipped,
               const std::string& out_path) {
    SweepResult result = sweep(m, n_range, k_range, n0_range, max_l);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    out << sweep_csv_header() << "\n";
    for (const auto& hit : result.hits) out << sweep_csv_row(hit) << "\n";
    if (show_skipped)
        for (const auto& skip : result.skipped)
            std::cerr << "skipped n=" << skip.n << ",k=" << skip.k << ",n0=" << skip.n0
                      << ",t0=" << skip.t0 << ": " << skip.reason << "\n";
    if (!verify) return 0;

    int failed = 0;
    for (const auto& hit : result.hits) {
        if (!hit.realization || hit.order() > cap) continue;
        HitReport report = verify_hit(hit, threads, cap);
        if (report.passed()) {
            std::cerr << "verified n=" << hit.n << ",k=" << hit.k << ",n0=" << hit.n0
                      << ",t0=" << hit.t0 << " R=" << report.instance.r_at_delta.to_string()
                      << " (" << report.instance.r_at_delta.to_decimal3() << ")\n";
        } else {
            ++failed;
            std::cerr << "verification FAILED for n=" << hit.n << ",k=" << hit.k
                      << ",n0=" << hit.n0 << ",t0=" << hit.t0 << "\n";
            for (const auto& f : report.failures) std::cerr << "  " << f << "\n";
            for (const auto& f : report.instance.failures) std::cerr << "  " << f << "\n";
        }
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wiener-index vertex-deletion toolkit for H(n,k,l,n0,t0) graph families"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --threads after the subcommand
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = hardware)");

    auto* construct = app.add_subcommand("construct", "build a family member as an edge list");
    std::string selector, out_path;
    construct->add_option("selector", selector,
                          "prop2:m=N | prop2matching:m=N | prop3:k=N | prop4:k=N | "
                          "example497 | example497-joined | h:n=..,k=..,f=..")
        ->required();
    construct->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* wiener_cmd = app.add_subcommand("wiener", "exact Wiener index of a graph");
    std::string input;
    wiener_cmd->add_option("input", input, "edge-list file or family selector")->required();

    auto* spectrum_cmd =
        app.add_subcommand("delta-spectrum", "delta value of every vertex deletion");
    std::string spectrum_input, spectrum_out, spectrum_format = "table";
    bool orbit = false;
    spectrum_cmd->add_option("input", spectrum_input, "edge-list file or family selector")
        ->required();
    spectrum_cmd->add_flag("--orbit", orbit, "use orbit representatives (family input only)");
    spectrum_cmd->add_option("--format", spectrum_format, "csv or table")
        ->check(CLI::IsMember({"csv", "table"}));
    spectrum_cmd->add_option("-o,--output", spectrum_out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "check reference values of the named families");
    std::vector<std::string> verify_selectors;
    std::string fixture = std::string(SOLTES_DATA_DIR) + "/expected_families.csv";
    std::string verify_format = "table";
    std::int64_t cap = 5000;
    bool verify_all = false;
    verify->add_flag("--all", verify_all, "verify every fixture row plus the corollaries");
    verify->add_option("selectors", verify_selectors, "family selectors to verify");
    verify->add_option("--fixture", fixture, "expected-values CSV");
    verify->add_option("--cap", cap, "skip instances larger than this");
    verify->add_option("--format", verify_format, "csv or table")
        ->check(CLI::IsMember({"csv", "table"}));

    auto* search = app.add_subcommand("search", "sweep (n,k,n0) for tuples with delta = m");
    std::int64_t target_m = 0;
    Range n_range{3, 130}, k_range{2, 11}, n0_range{1, 20};
    int max_l = 0;
    bool search_verify = false, show_skipped = false;
    std::string search_out;
    std::int64_t search_cap = 5000;
    search->add_option("-m,--m", target_m, "target delta value")->required();
    search->add_option("--n-min", n_range.lo, "minimum cycle length (default 3)");
    search->add_option("--n-max", n_range.hi, "maximum cycle length")->required();
    search->add_option("--k-min", k_range.lo, "minimum cycle count (default 2)");
    search->add_option("--k-max", k_range.hi, "maximum cycle count")->required();
    search->add_option("--n0-min", n0_range.lo, "minimum gadget order (default 1)");
    search->add_option("--n0-max", n0_range.hi, "maximum gadget order")->required();
    search->add_option("--max-l", max_l, "attachments per position (0 = unrestricted)");
    search->add_flag("--verify", search_verify, "brute-force verify realized hits under --cap");
    search->add_option("--cap", search_cap, "verification size cap");
    search->add_flag("--show-skipped", show_skipped, "report out-of-window tuples on stderr");
    search->add_option("-o,--output", search_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(construct)) return run_construct(selector, out_path);
        if (app.got_subcommand(wiener_cmd)) return run_wiener(input, threads);
        if (app.got_subcommand(spectrum_cmd))
            return run_spectrum(spectrum_input, orbit, spectrum_format == "csv", threads,
                                spectrum_out);
        if (app.got_subcommand(verify))
            return run_verify(verify_selectors, verify_all, fixture, cap, threads,
                              verify_format == "csv");
        if (app.got_subcommand(search))
            return run_search(target_m, n_range, k_range, n0_range, max_l, search_verify,
                              search_cap, threads, show_skipped, search_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
