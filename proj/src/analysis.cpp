#include "soltes/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

namespace soltes {

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    std::int64_t g = std::gcd(numerator < 0 ? -numerator : numerator, denominator);
    if (g == 0) g = 1;
    num = numerator / g;
    den = denominator / g;
}

bool Rational::operator<(const Rational& other) const {
    return static_cast<__int128>(num) * other.den < static_cast<__int128>(other.num) * den;
}

std::string Rational::to_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

std::ostream& operator<<(std::ostream& out, const Rational& r) { return out << r.to_string(); }

namespace {

std::string format_milli(std::int64_t milli, bool negative) {
    std::ostringstream out;
    if (negative && milli != 0) out << "-";
    out << milli / 1000 << ".";
    std::int64_t frac = milli % 1000;
    out << frac / 100 << frac / 10 % 10 << frac % 10;
    return out.str();
}

}  // namespace

std::string Rational::to_decimal3() const {
    std::int64_t a = num < 0 ? -num : num;
    std::int64_t milli = (2000 * a + den) / (2 * den);  // round half up
    return format_milli(milli, num < 0);
}

std::string Rational::to_decimal3_truncated() const {
    std::int64_t a = num < 0 ? -num : num;
    return format_milli(1000 * a / den, num < 0);
}

std::int64_t DeltaSpectrum::total() const {
    std::int64_t sum = disconnecting;
    for (const auto& [m, count] : counts) sum += count;
    return sum;
}

std::ostream& operator<<(std::ostream& out, const DeltaSpectrum& spectrum) {
    out << "{";
    bool first = true;
    for (const auto& [m, count] : spectrum.counts) {
        if (!first) out << ", ";
        first = false;
        out << m << ": " << count;
    }
    return out << "} disconnecting=" << spectrum.disconnecting
               << " order=" << spectrum.order;
}

std::int64_t delta_of_vertex(const Graph& g, Vertex v, int threads) {
    std::int64_t whole = wiener(g, threads);
    Graph reduced = delete_vertex(g, v);
    try {
        return whole - wiener(reduced, threads);
    } catch (const DisconnectedError&) {
        std::ostringstream msg;
        msg << "vertex " << v << " is a cut vertex: delta is undefined";
        throw CutVertexError(v, msg.str());
    }
}

namespace {

// delta of one deletion against a precomputed W(G); nullopt for cut vertices
std::optional<std::int64_t> delta_or_cut(const Graph& g, std::int64_t whole, Vertex v) {
    Graph reduced = delete_vertex(g, v);
    try {
        return whole - wiener(reduced, 1);
    } catch (const DisconnectedError&) {
        return std::nullopt;
    }
}

// Deterministic merge of per-deletion results; parallel over the deleted
// vertices, each task single-threaded.
DeltaSpectrum spectrum_over(const Graph& g, const std::vector<Vertex>& victims,
                            const std::vector<std::int64_t>& multipliers, int threads) {
    if (!is_connected(g)) throw DisconnectedError("delta spectrum needs a connected graph");
    const std::int64_t whole = wiener(g, threads);

    std::vector<std::optional<std::int64_t>> deltas(victims.size());
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(victims.size())));
    if (threads == 1 || victims.size() <= 1) {
        for (std::size_t i = 0; i < victims.size(); ++i)
            deltas[i] = delta_or_cut(g, whole, victims[i]);
    } else {
        std::atomic<std::size_t> cursor{0};
        auto work = [&] {
            for (std::size_t i = cursor.fetch_add(1); i < victims.size();
                 i = cursor.fetch_add(1))
                deltas[i] = delta_or_cut(g, whole, victims[i]);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    DeltaSpectrum spectrum;
    spectrum.order = g.order();
    for (std::size_t i = 0; i < victims.size(); ++i) {
        if (deltas[i])
            spectrum.counts[*deltas[i]] += multipliers[i];
        else
            spectrum.disconnecting += multipliers[i];
    }
    return spectrum;
}

}  // namespace

DeltaSpectrum delta_spectrum(const Graph& g, int threads) {
    std::vector<Vertex> victims(g.order());
    for (Vertex v = 0; v < g.order(); ++v) victims[v] = v;
    std::vector<std::int64_t> ones(victims.size(), 1);
    return spectrum_over(g, victims, ones, threads);
}

DeltaSpectrum delta_spectrum_orbit(const HGraph& h, int threads) {
    validate(h);
    const int n = h.params.n, k = h.params.k, n0 = h.params.n0();
    std::vector<Vertex> victims;
    std::vector<std::int64_t> multipliers;
    victims.push_back(0);  // cycle representative
    multipliers.push_back(std::int64_t{1} * k * n);
    for (int f = 0; f < n0; ++f) {
        victims.push_back(h.gadget_vertex(0, f));
        multipliers.push_back(n);
    }
    return spectrum_over(h.graph, victims, multipliers, threads);
}

Rational r_m(const DeltaSpectrum& spectrum, std::int64_t m) {
    if (spectrum.order <= 0) throw std::invalid_argument("spectrum of an empty graph");
    auto it = spectrum.counts.find(m);
    std::int64_t count = it == spectrum.counts.end() ? 0 : it->second;
    return {count, spectrum.order};
}

std::string InstanceReport::summary() const {
    std::ostringstream out;
    out << selector << ": order=" << order << " W=" << wiener_bfs << " tr=" << tr_bfs
        << " delta=" << delta_bfs << " R=" << r_at_delta.to_string() << " ("
        << r_at_delta.to_decimal3() << ")"
        << " bound=" << orbit_bound.to_string();
    if (passed()) {
        out << " [ok]";
    } else {
        for (const auto& f : failures) out << "\n  mismatch: " << f;
    }
    return out.str();
}

InstanceReport verify_instance(const HGraph& h, int threads, std::int64_t cap) {
    if (h.graph.order() > cap)
        throw std::invalid_argument("order " + std::to_string(h.graph.order()) +
                                    " exceeds the verification cap " + std::to_string(cap));
    validate(h);
    const std::int64_t n = h.params.n, k = h.params.k, n0 = h.params.n0();

    InstanceReport report;
    report.selector = selector_string(h.params);
    report.order = h.graph.order();
    report.wiener_bfs = wiener(h.graph, threads);
    report.tr_bfs = transmission(h.graph, 0);
    report.tr_formula = tr_closed_form(n, k, n0, h.t0);
    report.delta_formula = delta_closed_form(n, k, n0, h.t0);
    report.delta_bfs = delta_of_vertex(h.graph, 0, threads);
    report.spectrum = delta_spectrum_orbit(h, threads);
    report.r_at_delta = r_m(report.spectrum, report.delta_bfs);
    report.orbit_bound = Rational(k, k + n0);

    auto mismatch = [&report](const std::string& what, std::int64_t got, std::int64_t want) {
        std::ostringstream out;
        out << what << ": bfs " << got << " vs formula " << want;
        report.failures.push_back(out.str());
    };
    if (report.tr_bfs != report.tr_formula)
        mismatch("cycle transmission", report.tr_bfs, report.tr_formula);
    if (report.delta_bfs != report.delta_formula)
        mismatch("cycle delta", report.delta_bfs, report.delta_formula);
    if (report.spectrum.total() != report.order)
        report.failures.push_back("spectrum does not cover the graph");
    if (report.r_at_delta < report.orbit_bound)
        report.failures.push_back("R_m " + report.r_at_delta.to_string() +
                                  " fell below the orbit bound " +
                                  report.orbit_bound.to_string());
    return report;
}

}  // namespace soltes
