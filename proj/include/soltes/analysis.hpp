#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "soltes/family.hpp"
#include "soltes/graph.hpp"

namespace soltes {

/// Exact fraction over int64, always reduced with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t numerator, std::int64_t denominator);

    bool operator==(const Rational&) const = default;
    bool operator<(const Rational& other) const;

    std::string to_string() const;  // "4/7"
    /// Three decimals, round half up: 6/11 -> "0.545".
    std::string to_decimal3() const;
    /// Three decimals, truncated toward zero: 11/21 -> "0.523".
    std::string to_decimal3_truncated() const;
};

std::ostream& operator<<(std::ostream& out, const Rational& r);

/// Raised by delta_of_vertex when G - v is disconnected; delta is undefined
/// for cut vertices.
class CutVertexError : public std::runtime_error {
public:
    CutVertexError(Vertex v, const std::string& what) : std::runtime_error(what), vertex(v) {}
    Vertex vertex;
};

/// Exact map m -> number of vertices with delta_v = m, with cut vertices
/// tallied separately (they never enter any count).
struct DeltaSpectrum {
    std::map<std::int64_t, std::int64_t> counts;
    std::int64_t disconnecting = 0;
    std::int64_t order = 0;

    std::int64_t total() const;
    bool operator==(const DeltaSpectrum&) const = default;
};

std::ostream& operator<<(std::ostream& out, const DeltaSpectrum& spectrum);

/// W(G) - W(G - v), both sides by full BFS. Throws CutVertexError when the
/// deletion disconnects the graph and DisconnectedError when g itself is
/// disconnected.
std::int64_t delta_of_vertex(const Graph& g, Vertex v, int threads = 1);

/// Brute-force spectrum: one deletion plus APSP per vertex.
DeltaSpectrum delta_spectrum(const Graph& g, int threads = 1);

/// Spectrum computed from orbit representatives only: one cycle vertex
/// (multiplier kn) and each gadget-internal index of one copy (multiplier
/// n). Equals delta_spectrum(h.graph) by the construction's symmetry.
DeltaSpectrum delta_spectrum_orbit(const HGraph& h, int threads = 1);

/// counts[m] / order in lowest terms; 0/1 when m is absent.
Rational r_m(const DeltaSpectrum& spectrum, std::int64_t m);

/// One verified construction: every closed form checked against BFS.
struct InstanceReport {
    std::string selector;
    std::int64_t order = 0;
    std::int64_t wiener_bfs = 0;
    std::int64_t tr_bfs = 0;
    std::int64_t tr_formula = 0;
    std::int64_t delta_bfs = 0;      // cycle representative, brute force
    std::int64_t delta_formula = 0;
    DeltaSpectrum spectrum;          // orbit-reduced
    Rational r_at_delta;             // R_m at m = delta_bfs
    Rational orbit_bound;            // k / (k + n0)
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
    std::string summary() const;
};

/// Builds the report for one HGraph: W, tr and delta of the cycle
/// representative by BFS against the closed forms, the orbit spectrum, R_m
/// and the k/(k+n0) bound. Mismatches land in `failures`, they do not
/// throw. Throws std::invalid_argument when the order exceeds `cap`.
InstanceReport verify_instance(const HGraph& h, int threads = 1, std::int64_t cap = 5000);

}  // namespace soltes
