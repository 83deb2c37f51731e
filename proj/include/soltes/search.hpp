#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "soltes/analysis.hpp"
#include "soltes/family.hpp"

namespace soltes {

struct Range {
    int lo = 0;
    int hi = 0;  // inclusive
};

/// One feasible parameter tuple found by the sweep: delta(n,k,n0,t0) = m
/// exactly, ranked by the orbit lower bound k/(k+n0).
struct SweepHit {
    int n = 0;
    int k = 0;
    int n0 = 0;
    std::int64_t t0 = 0;
    std::int64_t m = 0;
    Rational bound;                  // k / (k + n0)
    std::optional<FSpec> realization;

    std::int64_t order() const { return std::int64_t{1} * n * (k + n0); }
};

/// Tuples the sweep rejected with the reason (non-integral t0 solutions are
/// skipped silently; these are integral solutions outside the realizable
/// window).
struct SweepSkip {
    int n = 0;
    int k = 0;
    int n0 = 0;
    std::int64_t t0 = 0;
    std::string reason;
};

struct SweepResult {
    std::vector<SweepHit> hits;      // bound descending, ties by smaller order
    std::vector<SweepSkip> skipped;
};

/// For every (n,k,n0) cell, solves the delta closed form for t0 (delta is
/// affine in t0 with coefficient n) and keeps integral solutions inside the
/// realizable window [2*n0 - min(max_l, n0), n0 + n0*(n0-1)/2]. Each hit
/// carries a gadget realization when one exists: the forced empty gadget
/// when t0 = n0, otherwise a single-attachment broom search. max_l bounds
/// the attachments per position; 0 means unrestricted (n0 per cell).
SweepResult sweep(std::int64_t m, Range n_range, Range k_range, Range n0_range, int max_l = 0);

struct RealizeResult {
    std::optional<FSpec> gadget;
    std::string note;  // why nothing was found, when empty
};

/// Searches the broom family (star center with `a` pendant leaves and a
/// pendant path of `b` vertices off the center or off one leaf,
/// a + b + 1 = n0, attachment at the center) for a gadget with the target
/// t0. Enumeration order: b increasing, center before leaf; first match
/// wins. Only l = 1 is handled. Throws std::invalid_argument when t0 lies
/// below the analytic minimum 2*n0 - l.
RealizeResult realize_gadget(int n0, int l, std::int64_t t0);

struct HitReport {
    SweepHit hit;
    std::int64_t realized_t0 = 0;    // t0_of(realization), by BFS
    InstanceReport instance;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty() && instance.passed(); }
};

/// Builds H from the hit's realization and cross-checks everything: the
/// BFS t0 of the gadget, the closed forms against BFS, and exact R_m.
HitReport verify_hit(const SweepHit& hit, int threads = 1, std::int64_t cap = 5000);

/// CSV row: n,k,n0,t0,m,bound_num,bound_den,realized,order. `realized` is
/// the gadget string or empty.
std::string sweep_csv_header();
std::string sweep_csv_row(const SweepHit& hit);

}  // namespace soltes
