#include "linked/connectivity.hpp"

#include "linked/error.hpp"

#include <algorithm>

namespace linked {

std::string_view to_string(ConnectivityMode mode) { return mode == ConnectivityMode::Strong ? "strong" : "weak"; }

ConnectivityMode parse_mode(std::string_view text) {
    if (text == "strong")
        return ConnectivityMode::Strong;
    if (text == "weak")
        return ConnectivityMode::Weak;
    fail(ErrorKind::InvalidArgument, "unknown connectivity mode '" + std::string(text) + "' (expected strong or weak)");
}

ConnectivityGraph ConnectivityGraph::from_edges(std::size_t m, std::span<const Edge> edges, ConnectivityMode mode) {
    ConnectivityGraph g;
    g.mode_ = mode;
    g.adjacency_.resize(m);
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= m || static_cast<std::size_t>(v) >= m)
            fail(ErrorKind::InvalidArgument,
                 "edge {" + std::to_string(u) + "," + std::to_string(v) + "} has an endpoint outside 0.." + std::to_string(m) + "-1");
        if (u == v)
            fail(ErrorKind::InvalidArgument, "self-loop on vertex " + std::to_string(u));
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    // Lexicographic edge order hands every vertex x its smaller neighbours
    // (edges (u,x)) before its larger ones (edges (x,v)), each ascending, so the
    // lists come out sorted.
    for (auto [u, v] : g.edges_) {
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    return g;
}

bool ConnectivityGraph::has_edge(CandidateId u, CandidateId v) const {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= m() || static_cast<std::size_t>(v) >= m())
        return false;
    const auto& list = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<CandidateId, CandidateId>> top_pair_set(const Election& e) {
    if (e.m() < 2)
        fail(ErrorKind::TooFewCandidates, "connectivity needs at least two candidates (m=" + std::to_string(e.m()) + ")");
    std::vector<std::pair<CandidateId, CandidateId>> pairs;
    pairs.reserve(e.votes().size());
    for (const auto& wv : e.votes())
        pairs.push_back(top_two(wv.vote));
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

ConnectivityGraph build_graph(const Election& e, ConnectivityMode mode) {
    const auto pairs = top_pair_set(e);
    std::vector<Edge> edges;
    for (auto [a, b] : pairs) {
        if (mode == ConnectivityMode::Weak) {
            edges.emplace_back(a, b);
        } else if (a < b && std::binary_search(pairs.begin(), pairs.end(), std::pair{b, a})) {
            edges.emplace_back(a, b);
        }
    }
    return ConnectivityGraph::from_edges(e.m(), edges, mode);
}

ConnectivityGraph relabel(const ConnectivityGraph& g, std::span<const CandidateId> sigma) {
    if (sigma.size() != g.m())
        fail(ErrorKind::NotAPermutation, "relabelling has length " + std::to_string(sigma.size()) + ", graph has " + std::to_string(g.m()) + " vertices");
    std::vector<char> hit(g.m(), 0);
    for (CandidateId s : sigma) {
        if (s < 0 || static_cast<std::size_t>(s) >= g.m() || hit[static_cast<std::size_t>(s)])
            fail(ErrorKind::NotAPermutation, "relabelling is not a permutation of 0..m-1");
        hit[static_cast<std::size_t>(s)] = 1;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges())
        edges.emplace_back(sigma[static_cast<std::size_t>(u)], sigma[static_cast<std::size_t>(v)]);
    return ConnectivityGraph::from_edges(g.m(), edges, g.mode());
}

namespace {

std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string export_dot(const ConnectivityGraph& g, std::span<const std::string> names) {
    if (names.size() != g.m())
        fail(ErrorKind::InvalidArgument, "export_dot: " + std::to_string(names.size()) + " names for " + std::to_string(g.m()) + " vertices");
    std::string out = "graph {\n";
    // Isolated vertices would otherwise vanish from the drawing.
    for (std::size_t v = 0; v < g.m(); ++v)
        if (g.degree(static_cast<CandidateId>(v)) == 0)
            out += "  " + quote(names[v]) + ";\n";
    for (auto [u, v] : g.edges())
        out += "  " + quote(names[static_cast<std::size_t>(u)]) + " -- " + quote(names[static_cast<std::size_t>(v)]) + ";\n";
    out += "}\n";
    return out;
}

} // namespace linked
