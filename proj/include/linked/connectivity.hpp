#ifndef LINKED_CONNECTIVITY_HPP
#define LINKED_CONNECTIVITY_HPP

#include "linked/election.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace linked {

// Strong: {a,b} is an edge iff some vote starts a>b and some vote starts b>a.
// Weak:   {a,b} is an edge iff some vote starts a>b or b>a. This is the
//         single-witness relaxation used for beta-domain recognition; it is
//         not checked against any published definition of weak connectedness.
enum class ConnectivityMode { Strong, Weak };

std::string_view to_string(ConnectivityMode mode);
ConnectivityMode parse_mode(std::string_view text);

using Edge = std::pair<CandidateId, CandidateId>; // always first < second

// Undirected simple graph on candidate ids 0..m-1. Adjacency lists are sorted
// and symmetric; the edge list is sorted ascending with u < v.
class ConnectivityGraph {
public:
    ConnectivityGraph() = default;

    // Accepts edges in either orientation; duplicates are merged. Throws
    // InvalidArgument on self-loops or out-of-range endpoints.
    static ConnectivityGraph from_edges(std::size_t m, std::span<const Edge> edges,
                                        ConnectivityMode mode = ConnectivityMode::Strong);

    std::size_t m() const { return adjacency_.size(); }
    ConnectivityMode mode() const { return mode_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const CandidateId> neighbors(CandidateId v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::size_t degree(CandidateId v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
    bool has_edge(CandidateId u, CandidateId v) const;

    bool operator==(const ConnectivityGraph&) const = default;

private:
    std::vector<std::vector<CandidateId>> adjacency_;
    std::vector<Edge> edges_;
    ConnectivityMode mode_ = ConnectivityMode::Strong;
};

// Distinct (first, second) pairs over all votes, sorted ascending.
std::vector<std::pair<CandidateId, CandidateId>> top_pair_set(const Election& e);

ConnectivityGraph build_graph(const Election& e, ConnectivityMode mode);

// Image of g under the vertex relabelling v -> sigma[v].
ConnectivityGraph relabel(const ConnectivityGraph& g, std::span<const CandidateId> sigma);

std::string export_dot(const ConnectivityGraph& g, std::span<const std::string> names);

} // namespace linked

#endif
