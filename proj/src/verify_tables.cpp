#include "soltes/verify_tables.hpp"

#include <fstream>
#include <sstream>

namespace soltes {

std::string ExpectedRow::selector() const {
    if (family == "example497" || family == "example497-joined") return family;
    const char* key = (family == "prop3" || family == "prop4") ? "k" : "m";
    return family + ":" + key + "=" + std::to_string(param);
}

std::vector<ExpectedRow> load_expected_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open fixture: " + path);
    std::vector<ExpectedRow> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#' || line.starts_with("family,")) continue;
        std::istringstream fields(line);
        ExpectedRow row;
        std::string item;
        auto next = [&](const char* what) {
            if (!std::getline(fields, item, ','))
                throw std::invalid_argument("fixture line " + std::to_string(lineno) +
                                            ": missing field " + what);
            return item;
        };
        row.family = next("family");
        row.param = std::stoi(next("param"));
        row.n = std::stoi(next("n"));
        row.k = std::stoi(next("k"));
        row.l = std::stoi(next("l"));
        row.n0 = std::stoi(next("n0"));
        row.t0 = std::stoll(next("t0"));
        row.order = std::stoll(next("order"));
        row.wiener = std::stoll(next("wiener"));
        row.m = std::stoll(next("m"));
        row.r_num = std::stoll(next("r_num"));
        row.r_den = std::stoll(next("r_den"));
        row.r_decimal = next("r_decimal");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("fixture has no rows: " + path);
    return rows;
}

namespace {

template <typename T>
void expect_eq(std::vector<std::string>& failures, const char* what, const T& got,
               const T& want) {
    if (got == want) return;
    std::ostringstream out;
    out << what << ": got " << got << ", expected " << want;
    failures.push_back(out.str());
}

void check_decimal(std::vector<std::string>& failures, const Rational& value,
                   const std::string& reference) {
    if (value.to_decimal3() == reference) return;
    if (value.to_decimal3_truncated() == reference) return;
    failures.push_back("R rendering: " + value.to_string() + " renders to " +
                       value.to_decimal3() + ", reference prints " + reference);
}

}  // namespace

RowOutcome check_row(const ExpectedRow& row, int threads, std::int64_t cap) {
    RowOutcome outcome;
    outcome.row = row;
    HParams params = parse_selector(row.selector());
    expect_eq(outcome.failures, "n", params.n, row.n);
    expect_eq(outcome.failures, "k", params.k, row.k);
    expect_eq(outcome.failures, "l", params.l(), row.l);
    expect_eq(outcome.failures, "n0", params.n0(), row.n0);
    if (params.order() > cap) {
        outcome.skipped = true;
        return outcome;
    }
    HGraph h = build_H(params);
    expect_eq(outcome.failures, "t0", h.t0, row.t0);
    outcome.report = verify_instance(h, threads, cap);
    for (const auto& f : outcome.report.failures) outcome.failures.push_back(f);
    expect_eq(outcome.failures, "order", outcome.report.order, row.order);
    expect_eq(outcome.failures, "wiener", outcome.report.wiener_bfs, row.wiener);
    expect_eq(outcome.failures, "cycle delta", outcome.report.delta_bfs, row.m);
    expect_eq(outcome.failures, "R", outcome.report.r_at_delta, Rational(row.r_num, row.r_den));
    check_decimal(outcome.failures, outcome.report.r_at_delta, row.r_decimal);
    return outcome;
}

std::vector<std::string> check_matching_corollary(const ExpectedRow& base_row, int threads) {
    std::vector<std::string> failures;
    const int m = base_row.param;
    HGraph h = build_H(named_family(Family::Prop2Matching, m));
    for (Vertex v = 0; v < h.graph.order(); ++v) {
        if (h.graph.degree(v) != m + 7) {
            failures.push_back("vertex " + std::to_string(v) + " has degree " +
                               std::to_string(h.graph.degree(v)) + ", not " +
                               std::to_string(m + 7));
            break;
        }
    }
    expect_eq(failures, "matching wiener", wiener(h.graph, threads),
              base_row.wiener - std::int64_t{1} * base_row.n * base_row.l / 2);
    expect_eq(failures, "matching cycle delta", delta_of_vertex(h.graph, 0, threads),
              std::int64_t{m});
    DeltaSpectrum spectrum = delta_spectrum_orbit(h, threads);
    expect_eq(failures, "matching R_m", r_m(spectrum, m),
              Rational(base_row.r_num, base_row.r_den));
    return failures;
}

std::vector<std::string> check_insertion_corollary(const ExpectedRow& base_row, int s,
                                                   int threads) {
    std::vector<std::string> failures;
    static const std::vector<std::pair<int, int>> kCanonicalEdges = {{0, 1}, {2, 3}};
    if (s < 1 || s > static_cast<int>(kCanonicalEdges.size()))
        throw std::invalid_argument("insertion corollary implemented for s in {1,2}");
    std::vector<std::pair<int, int>> extra(kCanonicalEdges.begin(),
                                           kCanonicalEdges.begin() + s);
    HParams params = parse_selector(base_row.selector());
    HGraph h = build_H({params.n, params.k,
                        FSpec::empty_plus_edges(params.l(), std::move(extra))});
    expect_eq(failures, "insertion wiener", wiener(h.graph, threads),
              base_row.wiener - std::int64_t{1} * base_row.n * s);
    expect_eq(failures, "insertion cycle delta", delta_of_vertex(h.graph, 0, threads),
              base_row.m);
    DeltaSpectrum spectrum = delta_spectrum_orbit(h, threads);
    expect_eq(failures, "insertion R_m", r_m(spectrum, base_row.m),
              Rational(base_row.r_num, base_row.r_den));
    return failures;
}

}  // namespace soltes
