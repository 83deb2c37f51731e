#include "soltes/search.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace soltes {

namespace {

// Broom with a leaves and a path of b vertices off the center (or off leaf
// 1 when at_leaf). Attachment is the center; a + b + 1 vertices total.
FSpec broom(int a, int b, bool at_leaf) {
    std::vector<std::pair<int, int>> edges;
    for (int leaf = 1; leaf <= a; ++leaf) edges.emplace_back(0, leaf);
    int prev = at_leaf ? 1 : 0;
    for (int p = a + 1; p <= a + b; ++p) {
        edges.emplace_back(prev, p);
        prev = p;
    }
    return FSpec::custom(a + b + 1, std::move(edges), {0});
}

std::int64_t broom_center_transmission(std::int64_t a, std::int64_t b, bool at_leaf) {
    // leaves at distance 1; path at 1..b (center) or 2..b+1 (leaf)
    return a + (at_leaf ? b * (b + 3) / 2 : b * (b + 1) / 2);
}

// t0 with delta(n,k,n0,t0) == m, or nullopt when not integral
std::optional<std::int64_t> solve_t0(std::int64_t m, std::int64_t n, std::int64_t k,
                                     std::int64_t n0) {
    std::int64_t correction = (n % 2 == 0) ? 4 * (2 * n0 + 8) : (k + 11 * n0 + 34);
    std::int64_t rhs = 4 * m + n * n * (n0 - k + 2) + correction - 4 * n * (2 * k + n0 + 2);
    if (rhs % (4 * n) != 0) return std::nullopt;
    return rhs / (4 * n);
}

}  // namespace

RealizeResult realize_gadget(int n0, int l, std::int64_t t0) {
    if (n0 < 1 || l < 1) throw std::invalid_argument("realize_gadget needs n0 >= 1, l >= 1");
    if (t0 < 2 * n0 - l) {
        std::ostringstream msg;
        msg << "t0 = " << t0 << " below the analytic minimum " << 2 * n0 - l << " for n0 = "
            << n0 << ", l = " << l;
        throw std::invalid_argument(msg.str());
    }
    if (l != 1) return {std::nullopt, "only single-attachment gadgets are searched (l = 1)"};
    const std::int64_t want = t0 - n0;  // transmission of the center inside F
    for (int b = 0; b < n0; ++b) {
        int a = n0 - 1 - b;
        if (broom_center_transmission(a, b, false) == want) return {broom(a, b, false), ""};
        if (a >= 1 && b >= 1 && broom_center_transmission(a, b, true) == want)
            return {broom(a, b, true), ""};
    }
    return {std::nullopt, "no broom on " + std::to_string(n0) + " vertices has center transmission " +
                              std::to_string(want)};
}

SweepResult sweep(std::int64_t m, Range n_range, Range k_range, Range n0_range, int max_l) {
    SweepResult result;
    for (int n = std::max(3, n_range.lo); n <= n_range.hi; ++n) {
        for (int k = std::max(2, k_range.lo); k <= k_range.hi; ++k) {
            for (int n0 = std::max(1, n0_range.lo); n0 <= n0_range.hi; ++n0) {
                auto t0 = solve_t0(m, n, k, n0);
                if (!t0) continue;
                const int l = max_l <= 0 ? n0 : std::min(max_l, n0);
                const std::int64_t lower = 2 * n0 - l;
                const std::int64_t upper =
                    n0 + std::int64_t{1} * n0 * (n0 - 1) / 2;  // path-end maximum
                if (*t0 < lower) {
                    result.skipped.push_back(
                        {n, k, n0, *t0, "t0 below minimum " + std::to_string(lower)});
                    continue;
                }
                if (*t0 > upper) {
                    result.skipped.push_back(
                        {n, k, n0, *t0, "t0 above path-end maximum " + std::to_string(upper)});
                    continue;
                }
                SweepHit hit{n, k, n0, *t0, m, Rational(k, k + n0), std::nullopt};
                if (*t0 == n0) {
                    // forced: every gadget vertex adjacent to the cycle layer
                    hit.realization = FSpec::empty(n0);
                } else if (*t0 >= 2 * n0 - 1) {
                    hit.realization = realize_gadget(n0, 1, *t0).gadget;
                }
                // otherwise only l > 1 could work; emitted unrealized
                result.hits.push_back(std::move(hit));
            }
        }
    }
    std::sort(result.hits.begin(), result.hits.end(), [](const SweepHit& a, const SweepHit& b) {
        if (a.bound != b.bound) return b.bound < a.bound;
        if (a.order() != b.order()) return a.order() < b.order();
        return std::tie(a.n, a.k, a.n0) < std::tie(b.n, b.k, b.n0);
    });
    return result;
}

HitReport verify_hit(const SweepHit& hit, int threads, std::int64_t cap) {
    if (!hit.realization)
        throw std::invalid_argument("verify_hit needs a realized gadget");
    HitReport report;
    report.hit = hit;
    report.realized_t0 = t0_of(*hit.realization);
    if (report.realized_t0 != hit.t0) {
        std::ostringstream msg;
        msg << "gadget t0 by BFS is " << report.realized_t0 << " but the hit requires "
            << hit.t0;
        report.failures.push_back(msg.str());
    }
    if (hit.realization->order != hit.n0)
        report.failures.push_back("gadget order " + std::to_string(hit.realization->order) +
                                  " differs from n0 = " + std::to_string(hit.n0));
    HGraph h = build_H({hit.n, hit.k, *hit.realization});
    report.instance = verify_instance(h, threads, cap);
    if (report.instance.delta_bfs != hit.m)
        report.failures.push_back("realized graph has cycle delta " +
                                  std::to_string(report.instance.delta_bfs) + ", wanted " +
                                  std::to_string(hit.m));
    return report;
}

std::string sweep_csv_header() { return "n,k,n0,t0,m,bound_num,bound_den,realized,order"; }

std::string sweep_csv_row(const SweepHit& hit) {
    std::ostringstream out;
    out << hit.n << "," << hit.k << "," << hit.n0 << "," << hit.t0 << "," << hit.m << ","
        << hit.bound.num << "," << hit.bound.den << ","
        << (hit.realization ? hit.realization->to_string() : "") << "," << hit.order();
    return out.str();
}

}  // namespace soltes
