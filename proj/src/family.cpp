#include "soltes/family.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace soltes {

namespace {

void check_positive(int value, const char* what) {
    if (value <= 0)
        throw std::invalid_argument(std::string(what) + " must be positive, got " +
                                    std::to_string(value));
}

std::vector<int> iota_ids(int count) {
    std::vector<int> ids(count);
    for (int i = 0; i < count; ++i) ids[i] = i;
    return ids;
}

FSpec make_validated(FKind kind, int param, int n0, std::vector<std::pair<int, int>> edges,
                     std::vector<int> attachments) {
    check_positive(n0, "gadget order");
    if (attachments.empty()) throw std::invalid_argument("gadget needs at least one attachment");
    std::vector<int> sorted = attachments;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("attachment list contains duplicates");
    if (sorted.front() < 0 || sorted.back() >= n0)
        throw std::invalid_argument("attachment id outside the gadget");
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n0 || v >= n0 || u == v) {
            std::ostringstream msg;
            msg << "gadget edge (" << u << "," << v << ") invalid for order " << n0;
            throw std::invalid_argument(msg.str());
        }
    }
    return FSpec{kind, param, n0, std::move(edges), std::move(attachments)};
}

}  // namespace

FSpec FSpec::empty(int l) {
    return make_validated(FKind::Empty, l, l, {}, iota_ids(l));
}

FSpec FSpec::empty_plus_edges(int l, std::vector<std::pair<int, int>> extra) {
    return make_validated(FKind::EmptyPlusEdges, l, l, std::move(extra), iota_ids(l));
}

FSpec FSpec::perfect_matching(int l) {
    if (l < 2 || l % 2 != 0)
        throw std::invalid_argument("perfect matching needs even l >= 2, got " +
                                    std::to_string(l));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < l; i += 2) edges.emplace_back(i, i + 1);
    return make_validated(FKind::PerfectMatching, l, l, std::move(edges), iota_ids(l));
}

FSpec FSpec::star_path(int k) {
    if (k < 2) throw std::invalid_argument("star-path gadget needs k >= 2");
    // 0 = center (the attachment), 1..k-1 = leaves, path of 8 off leaf 1.
    std::vector<std::pair<int, int>> edges;
    for (int leaf = 1; leaf < k; ++leaf) edges.emplace_back(0, leaf);
    int prev = 1;
    for (int p = k; p < k + 8; ++p) {
        edges.emplace_back(prev, p);
        prev = p;
    }
    return make_validated(FKind::StarPath, k, k + 8, std::move(edges), {0});
}

FSpec FSpec::star_cycle(int k) {
    if (k < 2) throw std::invalid_argument("star-cycle gadget needs k >= 2");
    // 0 = center (the attachment), 1..k-1 = leaves, 14-cycle through the
    // center via vertices k..k+12.
    std::vector<std::pair<int, int>> edges;
    for (int leaf = 1; leaf < k; ++leaf) edges.emplace_back(0, leaf);
    int prev = 0;
    for (int c = k; c < k + 13; ++c) {
        edges.emplace_back(prev, c);
        prev = c;
    }
    edges.emplace_back(prev, 0);
    return make_validated(FKind::StarCycle, k, k + 13, std::move(edges), {0});
}

FSpec FSpec::path_center3() {
    return make_validated(FKind::PathCenter3, 0, 3, {{0, 1}, {0, 2}}, {0});
}

FSpec FSpec::custom(int n0, std::vector<std::pair<int, int>> edges,
                    std::vector<int> attachments) {
    return make_validated(FKind::Custom, 0, n0, std::move(edges), std::move(attachments));
}

FSpec FSpec::with_extra_edges(const std::vector<std::pair<int, int>>& extra) const {
    std::vector<std::pair<int, int>> all = edges;
    all.insert(all.end(), extra.begin(), extra.end());
    return make_validated(FKind::Custom, 0, order, std::move(all), attachments);
}

Graph FSpec::gadget_plus_apex() const {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (const auto& [u, v] : edges) e.emplace_back(u, v);
    for (int a : attachments) e.emplace_back(a, order);
    return Graph::from_edges(order + 1, e);
}

std::int64_t t0_of(const FSpec& fspec) {
    Graph local = fspec.gadget_plus_apex();
    try {
        return transmission(local, fspec.order);
    } catch (const DisconnectedError&) {
        throw DisconnectedError("gadget plus apex is disconnected: " + fspec.to_string());
    }
}

// ---- FSpec text form -------------------------------------------------------

namespace {

std::string pairs_to_string(const std::vector<std::pair<int, int>>& pairs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) out << ";";
        out << pairs[i].first << "-" << pairs[i].second;
    }
    return out.str();
}

std::string ids_to_string(const std::vector<int>& ids) {
    std::ostringstream out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out << ";";
        out << ids[i];
    }
    return out.str();
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
    std::vector<std::pair<int, int>> pairs;
    if (text.empty()) return pairs;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ';')) {
        auto dash = item.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("bad edge pair '" + item + "' (want u-v)");
        pairs.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    }
    return pairs;
}

std::vector<int> parse_ids(const std::string& text) {
    std::vector<int> ids;
    if (text.empty()) return ids;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ';')) ids.push_back(std::stoi(item));
    return ids;
}

// key=value fields separated by commas, applied in order
std::vector<std::pair<std::string, std::string>> parse_fields(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> fields;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad field '" + item + "' (want key=value)");
        fields.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return fields;
}

int single_int_field(const std::string& text, const std::string& key, const std::string& what) {
    auto fields = parse_fields(text);
    if (fields.size() != 1 || fields[0].first != key)
        throw std::invalid_argument("expected " + what + ":" + key + "=N, got '" + text + "'");
    return std::stoi(fields[0].second);
}

}  // namespace

std::string FSpec::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case FKind::Empty:
            out << "empty:l=" << param;
            break;
        case FKind::EmptyPlusEdges:
            out << "empty+edges:l=" << param << ",e=" << pairs_to_string(edges);
            break;
        case FKind::PerfectMatching:
            out << "matching:l=" << param;
            break;
        case FKind::StarPath:
            out << "starpath:k=" << param;
            break;
        case FKind::StarCycle:
            out << "starcycle:k=" << param;
            break;
        case FKind::PathCenter3:
            out << "p3center";
            break;
        case FKind::Custom:
            out << "custom:n0=" << order << ",a=" << ids_to_string(attachments)
                << ",e=" << pairs_to_string(edges);
            break;
    }
    return out.str();
}

FSpec FSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (head == "p3center") {
        if (!rest.empty()) throw std::invalid_argument("p3center takes no parameters");
        return path_center3();
    }
    if (head == "empty") return empty(single_int_field(rest, "l", "empty"));
    if (head == "matching") return perfect_matching(single_int_field(rest, "l", "matching"));
    if (head == "starpath") return star_path(single_int_field(rest, "k", "starpath"));
    if (head == "starcycle") return star_cycle(single_int_field(rest, "k", "starcycle"));
    if (head == "empty+edges") {
        int l = -1;
        std::vector<std::pair<int, int>> extra;
        for (const auto& [key, value] : parse_fields(rest)) {
            if (key == "l")
                l = std::stoi(value);
            else if (key == "e")
                extra = parse_pairs(value);
            else
                throw std::invalid_argument("empty+edges: unknown field '" + key + "'");
        }
        if (l < 0) throw std::invalid_argument("empty+edges needs l=");
        return empty_plus_edges(l, std::move(extra));
    }
    if (head == "custom") {
        int n0 = -1;
        std::vector<int> att;
        std::vector<std::pair<int, int>> edges;
        for (const auto& [key, value] : parse_fields(rest)) {
            if (key == "n0")
                n0 = std::stoi(value);
            else if (key == "a")
                att = parse_ids(value);
            else if (key == "e")
                edges = parse_pairs(value);
            else
                throw std::invalid_argument("custom: unknown field '" + key + "'");
        }
        if (n0 < 0) throw std::invalid_argument("custom needs n0=");
        return custom(n0, std::move(edges), std::move(att));
    }
    throw std::invalid_argument("unknown gadget kind '" + head + "'");
}

// ---- construction ----------------------------------------------------------

HGraph build_H(const HParams& params) {
    if (params.n < 3) throw std::invalid_argument("cycle length n must be >= 3");
    if (params.k < 2) throw std::invalid_argument("cycle count k must be >= 2");
    const int n = params.n, k = params.k, n0 = params.n0();

    // Computes t0 and rejects gadgets that would leave H disconnected.
    std::int64_t t0 = t0_of(params.fspec);

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(k) * n +
                  static_cast<std::size_t>(n) * k * params.l() +
                  static_cast<std::size_t>(n) * params.fspec.edges.size());
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < n; ++i)
            edges.emplace_back(c * n + i, c * n + (i + 1) % n);
    const int gadget_base = k * n;
    for (int i = 0; i < n; ++i) {
        const int base = gadget_base + i * n0;
        for (int c = 0; c < k; ++c)
            for (int a : params.fspec.attachments) edges.emplace_back(c * n + i, base + a);
        for (const auto& [u, v] : params.fspec.edges) edges.emplace_back(base + u, base + v);
    }

    HGraph h{Graph::from_edges(static_cast<int>(params.order()), edges), params, t0};
    if (!is_connected(h.graph))
        throw std::invalid_argument("construction produced a disconnected graph");
    return h;
}

std::vector<Vertex> HGraph::cycle_vertices() const {
    std::vector<Vertex> ids(cycle_vertex_count());
    for (int i = 0; i < cycle_vertex_count(); ++i) ids[i] = i;
    return ids;
}

void validate(const HGraph& h) {
    const int n = h.params.n, l = h.params.l();
    if (h.graph.order() != h.params.order())
        throw std::invalid_argument("role metadata inconsistent: order mismatch");
    for (Vertex v = 0; v < h.cycle_vertex_count(); ++v) {
        if (h.graph.degree(v) != l + 2)
            throw std::invalid_argument("role metadata inconsistent: cycle vertex " +
                                        std::to_string(v) + " has degree " +
                                        std::to_string(h.graph.degree(v)));
        int c = h.cycle_index(v), i = h.position_of(v);
        if (!h.graph.has_edge(v, c * n + (i + 1) % n))
            throw std::invalid_argument("role metadata inconsistent: cycle edge missing at " +
                                        std::to_string(v));
        for (int a : h.params.fspec.attachments)
            if (!h.graph.has_edge(v, h.gadget_vertex(i, a)))
                throw std::invalid_argument(
                    "role metadata inconsistent: attachment edge missing at " +
                    std::to_string(v));
    }
    if (t0_of(h.params.fspec) != h.t0)
        throw std::invalid_argument("role metadata inconsistent: stored t0 is stale");
}

// ---- closed forms ----------------------------------------------------------

std::int64_t tr_closed_form(std::int64_t n, std::int64_t k, std::int64_t n0, std::int64_t t0) {
    std::int64_t quarter = (n % 2 == 0) ? n * n / 4 : (n * n - 1) / 4;
    return quarter * (k + n0) + n * (2 * k + t0 - 2);
}

std::int64_t delta_closed_form(std::int64_t n, std::int64_t k, std::int64_t n0,
                               std::int64_t t0) {
    std::int64_t correction = (n % 2 == 0) ? 4 * (2 * n0 + 8) : (k + 11 * n0 + 34);
    std::int64_t four_delta = 4 * n * (2 * k + t0 + n0 + 2) - n * n * (n0 - k + 2) - correction;
    int residue = static_cast<int>(((four_delta % 4) + 4) % 4);
    if (residue != 0) throw NonIntegralDeltaError(four_delta, residue);
    return four_delta / 4;
}

CaseSums case_sums(std::int64_t n, std::int64_t n0) {
    if (n < 5) throw std::invalid_argument("case sums need n >= 5");
    CaseSums sums;
    if (n % 2 == 0) {
        sums.case1 = (n * n - 8 * n + 16) / 2;
        sums.case3 = n0 * (n * n - 6 * n + 8) / 2;
    } else {
        sums.case1 = (n * n - 8 * n + 17) / 2;
        sums.case3 = n0 * (n * n - 6 * n + 9) / 2;
    }
    sums.case2 = 2 * n0 * (n - 1);
    return sums;
}

// ---- named families --------------------------------------------------------

HParams named_family(Family family, int param) {
    switch (family) {
        case Family::Prop2:
            if (param < 0) throw std::invalid_argument("prop2 needs m >= 0");
            return {16 * param + 95, param + 6, FSpec::empty(param + 5)};
        case Family::Prop2Matching:
            if (param < 1 || param % 2 == 0)
                throw std::invalid_argument("prop2matching needs odd m >= 1 (even l)");
            return {16 * param + 95, param + 6, FSpec::perfect_matching(param + 5)};
        case Family::Prop3:
            if (param < 2) throw std::invalid_argument("prop3 needs k >= 2");
            return {2 * param + 24, param, FSpec::star_path(param)};
        case Family::Prop4:
            if (param < 4 || param % 3 != 1)
                throw std::invalid_argument("prop4 needs k >= 4 with k = 1 (mod 3), got k=" +
                                            std::to_string(param));
            return {(4 * param + 59) / 3, param, FSpec::star_cycle(param)};
        case Family::Example497:
            return {71, 4, FSpec::path_center3()};
        case Family::Example497Joined:
            return {71, 4, FSpec::path_center3().with_extra_edges({{1, 2}})};
    }
    throw std::invalid_argument("unknown family");
}

HParams parse_selector(const std::string& selector) {
    if (selector == "example497") return named_family(Family::Example497, 0);
    if (selector == "example497-joined") return named_family(Family::Example497Joined, 0);
    auto colon = selector.find(':');
    std::string head = selector.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : selector.substr(colon + 1);
    if (head == "prop2")
        return named_family(Family::Prop2, single_int_field(rest, "m", "prop2"));
    if (head == "prop2matching")
        return named_family(Family::Prop2Matching, single_int_field(rest, "m", "prop2matching"));
    if (head == "prop3")
        return named_family(Family::Prop3, single_int_field(rest, "k", "prop3"));
    if (head == "prop4")
        return named_family(Family::Prop4, single_int_field(rest, "k", "prop4"));
    if (head == "h") {
        // n=..,k=..,f=<rest of the selector, may itself contain , and :>
        int n = -1, k = -1;
        std::string cursor = rest;
        for (int field = 0; field < 2; ++field) {
            auto comma = cursor.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("h selector needs n=, k=, f=");
            std::string item = cursor.substr(0, comma);
            cursor = cursor.substr(comma + 1);
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("h selector: bad field '" + item + "'");
            std::string key = item.substr(0, eq);
            int value = std::stoi(item.substr(eq + 1));
            if (key == "n")
                n = value;
            else if (key == "k")
                k = value;
            else
                throw std::invalid_argument("h selector: unexpected field '" + key + "'");
        }
        if (!cursor.starts_with("f="))
            throw std::invalid_argument("h selector: missing trailing f=<gadget>");
        if (n < 0 || k < 0) throw std::invalid_argument("h selector needs both n= and k=");
        return {n, k, FSpec::parse(cursor.substr(2))};
    }
    throw std::invalid_argument("unknown selector '" + selector + "'");
}

std::string selector_string(const HParams& params) {
    std::ostringstream out;
    out << "h:n=" << params.n << ",k=" << params.k << ",f=" << params.fspec.to_string();
    return out.str();
}

void write_h_graph(std::ostream& out, const HGraph& h) {
    write_edge_list(out, h.graph, h.cycle_vertices(), selector_string(h.params));
}

std::optional<HGraph> try_read_h_graph(const EdgeListData& data) {
    if (data.construct_selector.empty()) return std::nullopt;
    HGraph rebuilt;
    try {
        rebuilt = build_H(parse_selector(data.construct_selector));
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (rebuilt.graph != data.graph) return std::nullopt;
    if (data.cycle_marks != rebuilt.cycle_vertices()) return std::nullopt;
    return rebuilt;
}

}  // namespace soltes
