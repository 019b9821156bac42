#ifndef LINKED_RECOGNITION_HPP
#define LINKED_RECOGNITION_HPP

#include "linked/connectivity.hpp"
#include "linked/election.hpp"

#include <optional>
#include <span>
#include <vector>

namespace linked {

// Candidate ordering claimed to be linked: the first two are adjacent and each
// later entry has at least two neighbours among the entries before it.
struct LinkedOrder {
    std::vector<CandidateId> order;

    bool operator==(const LinkedOrder&) const = default;
};

// Result of growing a seed edge by repeatedly absorbing any vertex with at
// least two absorbed neighbours (2-neighbour bootstrap percolation).
//
// Invariants: counters[v] == |N(v) ∩ reached| for every v; in_set[v] iff v is
// in reached; reached[i] for i >= 2 had counter >= 2 when it was absorbed.
struct ClosureState {
    Edge seed;
    std::vector<CandidateId> reached; // insertion order, seed first
    std::vector<char> in_set;
    std::vector<int> counters;

    bool spans_all() const { return reached.size() == in_set.size(); }
};

// Ties between absorbable vertices go to the lowest id. Throws SeedNotEdge if
// {a,b} is not an edge of g.
ClosureState greedy_closure(const ConnectivityGraph& g, CandidateId a, CandidateId b);

// Same closure with an explicit tie-break: among absorbable vertices the one
// with the smallest rank[v] goes first. `rank` must have one entry per vertex.
ClosureState greedy_closure(const ConnectivityGraph& g, CandidateId a, CandidateId b,
                            std::span<const std::size_t> rank);

enum class Verdict { Linked, NotLinked };

std::string_view to_string(Verdict v);

struct StuckSeed {
    Edge seed;
    std::vector<CandidateId> reached; // maximal closed set, insertion order
};

struct RecognitionResult {
    Verdict verdict = Verdict::NotLinked;
    std::optional<LinkedOrder> witness;  // set iff Linked
    std::vector<StuckSeed> certificate;  // one entry per seed tried, iff NotLinked

    bool linked() const { return verdict == Verdict::Linked; }
    bool operator==(const RecognitionResult&) const;
};

enum class SeedPolicy {
    EdgesOnly, // seeds are the edges of g, ascending
    AllPairs,  // every unordered pair u<v; non-adjacent seeds can never certify
};

struct RecognizeOptions {
    SeedPolicy seeds = SeedPolicy::EdgesOnly;
    // Worker threads for seed evaluation; 0 picks hardware concurrency. The
    // result is identical to the single-threaded one.
    unsigned threads = 1;
};

// Linked iff some seed closes to all of C. The witness is the insertion order
// of the first successful seed in ascending (u,v) order. A one-vertex graph is
// treated as linked with the singleton order. Throws InvalidArgument for m=0.
RecognitionResult recognize(const ConnectivityGraph& g, const RecognizeOptions& options = {});

// Checks the linked condition for `order` against g. Throws NotAPermutation if
// `order` is not a permutation of 0..m-1.
bool verify_witness(const ConnectivityGraph& g, std::span<const CandidateId> order);
inline bool verify_witness(const ConnectivityGraph& g, const LinkedOrder& w) { return verify_witness(g, w.order); }

// recognize(build_graph(e, mode)); a single-candidate election is linked.
RecognitionResult recognize_election(const Election& e, ConnectivityMode mode, const RecognizeOptions& options = {});

} // namespace linked

#endif
