#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "soltes/edge_list.hpp"
#include "soltes/graph.hpp"

namespace soltes {

/// Shape of the gadget graph F replicated at every cycle position.
enum class FKind {
    Empty,            // l isolated vertices, all attached
    EmptyPlusEdges,   // Empty plus caller-chosen edges inside F
    PerfectMatching,  // Empty plus the canonical matching (0,1)(2,3)...
    StarPath,         // star center with k-1 leaves, path of 8 off one leaf
    StarCycle,        // star center with k-1 leaves, center on a 14-cycle
    PathCenter3,      // P3 attached at its middle vertex
    Custom,
};

/// Gadget description: order, internal edges, and which vertices attach to
/// the cycle layer. Construct through the factories; they validate and fix
/// the canonical internal layout of the named variants.
struct FSpec {
    FKind kind = FKind::Empty;
    int param = 0;  // l for the Empty variants, k for the star variants
    int order = 0;  // n0
    std::vector<std::pair<int, int>> edges;
    std::vector<int> attachments;  // l distinct ids in 0..order-1

    static FSpec empty(int l);
    static FSpec empty_plus_edges(int l, std::vector<std::pair<int, int>> extra);
    static FSpec perfect_matching(int l);
    static FSpec star_path(int k);
    static FSpec star_cycle(int k);
    static FSpec path_center3();
    static FSpec custom(int n0, std::vector<std::pair<int, int>> edges,
                        std::vector<int> attachments);

    /// Copy with extra internal edges (kind becomes Custom).
    FSpec with_extra_edges(const std::vector<std::pair<int, int>>& extra) const;

    int l() const { return static_cast<int>(attachments.size()); }

    /// The gadget together with an apex vertex (id = order) adjacent to all
    /// attachments; the subgraph a cycle vertex sees locally.
    Graph gadget_plus_apex() const;

    std::string to_string() const;
    static FSpec parse(const std::string& text);

    bool operator==(const FSpec&) const = default;
};

/// t0: transmission of the apex in gadget_plus_apex(), computed by BFS.
/// Throws DisconnectedError when some gadget vertex is unreachable.
std::int64_t t0_of(const FSpec& fspec);

struct HParams {
    int n = 0;  // cycle length, >= 3
    int k = 0;  // number of cycles, >= 2
    FSpec fspec;

    int n0() const { return fspec.order; }
    int l() const { return fspec.l(); }
    std::int64_t order() const { return std::int64_t{1} * n * (k + n0()); }

    bool operator==(const HParams&) const = default;
};

/// A constructed H graph plus the role metadata the construction fixes.
///
/// Vertex layout: cycle vertex (c, i) has id c*n + i (cycle-major), and
/// gadget copy i's internal vertex f has id k*n + i*n0 + f.
struct HGraph {
    Graph graph;
    HParams params;
    std::int64_t t0 = 0;

    int cycle_vertex_count() const { return params.k * params.n; }
    bool is_cycle_vertex(Vertex v) const { return v < cycle_vertex_count(); }
    /// Cycle copy 0..k-1 (cycle vertices only).
    int cycle_index(Vertex v) const { return static_cast<int>(v) / params.n; }
    /// Gadget-internal index 0..n0-1 (gadget vertices only).
    int f_index(Vertex v) const { return (v - cycle_vertex_count()) % params.n0(); }
    /// Position 0..n-1 around the cycles, for any vertex.
    int position_of(Vertex v) const {
        return is_cycle_vertex(v) ? v % params.n : (v - cycle_vertex_count()) / params.n0();
    }
    std::vector<Vertex> cycle_vertices() const;
    Vertex gadget_vertex(int position, int f) const {
        return cycle_vertex_count() + position * params.n0() + f;
    }
};

/// Builds H from its parameters; checks the construction invariants and
/// that the result is connected.
HGraph build_H(const HParams& params);

/// Structural consistency of role metadata against the stored graph.
/// Throws std::invalid_argument on any mismatch.
void validate(const HGraph& h);

// ---- closed forms -------------------------------------------------------

/// Transmission of a cycle vertex from the construction parameters alone.
std::int64_t tr_closed_form(std::int64_t n, std::int64_t k, std::int64_t n0, std::int64_t t0);

/// Delta of a cycle vertex from the parameters alone. Evaluated as a
/// 4-scaled integer; a non-integral quotient (unrealizable tuple) throws
/// NonIntegralDeltaError carrying the residue.
std::int64_t delta_closed_form(std::int64_t n, std::int64_t k, std::int64_t n0, std::int64_t t0);

class NonIntegralDeltaError : public std::runtime_error {
public:
    NonIntegralDeltaError(std::int64_t four_delta, int residue)
        : std::runtime_error("delta is not an integer: 4*delta = " +
                             std::to_string(four_delta) + " leaves residue " +
                             std::to_string(residue)),
          four_delta(four_delta),
          residue(residue) {}
    std::int64_t four_delta;
    int residue;
};

struct CaseSums {
    std::int64_t case1 = 0;  // pairs inside the broken cycle path
    std::int64_t case2 = 0;  // path vertex x gadget copy at the deleted position
    std::int64_t case3 = 0;  // path vertex x gadget copies elsewhere
    std::int64_t total() const { return case1 + case2 + case3; }
};

/// The three distance-increase sums for deleting one cycle vertex; requires
/// n >= 5. Satisfies delta == tr_closed_form - total().
CaseSums case_sums(std::int64_t n, std::int64_t n0);

// ---- named families ------------------------------------------------------

enum class Family {
    Prop2,            // n=16m+95, k=m+6, empty gadget of l=m+5
    Prop2Matching,    // same with a perfect matching inside F (odd m)
    Prop3,            // n=2k+24, star-path gadget, n0=k+8
    Prop4,            // n=(4k+59)/3 with k=3i+1, star-cycle gadget, n0=k+13
    Example497,       // H(71,4,1,3,5)
    Example497Joined, // same with the two gadget leaves joined
};

/// The exact parameter quintuple of a named family member. Throws
/// std::invalid_argument on parity/divisibility violations.
HParams named_family(Family family, int param);

/// CLI selector grammar: prop2:m=N | prop2matching:m=N | prop3:k=N |
/// prop4:k=N | example497 | example497-joined | h:n=..,k=..,f=<fspec>
/// (f consumes the rest of the selector).
HParams parse_selector(const std::string& selector);
std::string selector_string(const HParams& params);

/// Serialization: edge-list format plus one `c` line per cycle vertex and a
/// construct comment that makes the file round-trippable into an HGraph.
void write_h_graph(std::ostream& out, const HGraph& h);

/// Rebuilds the HGraph recorded in an edge-list file, when possible. The
/// reconstruction is validated against the stored edges; a tampered file
/// yields std::nullopt just like a plain graph file.
std::optional<HGraph> try_read_h_graph(const EdgeListData& data);

}  // namespace soltes
