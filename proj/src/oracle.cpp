#include "linked/oracle.hpp"

#include "linked/error.hpp"

#include <numeric>

namespace linked {

namespace {

struct Search {
    const ConnectivityGraph& g;
    std::vector<CandidateId> prefix;
    std::vector<char> used;

    bool extend() {
        const std::size_t depth = prefix.size();
        const auto m = static_cast<CandidateId>(g.m());
        if (depth == g.m())
            return true;
        for (CandidateId v = 0; v < m; ++v) {
            if (used[static_cast<std::size_t>(v)] || !fits(v))
                continue;
            used[static_cast<std::size_t>(v)] = 1;
            prefix.push_back(v);
            if (extend())
                return true;
            prefix.pop_back();
            used[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    }

    // Can v occupy the next position?
    bool fits(CandidateId v) const {
        const std::size_t depth = prefix.size();
        if (depth == 0)
            return true;
        if (depth == 1)
            return g.has_edge(prefix[0], v);
        int earlier = 0;
        for (CandidateId u : prefix)
            if (g.has_edge(u, v) && ++earlier == 2)
                return true;
        return false;
    }
};

} // namespace

BruteForceResult brute_force_linked(const ConnectivityGraph& g, std::size_t cap) {
    if (g.m() == 0)
        fail(ErrorKind::InvalidArgument, "brute force needs at least one vertex");
    if (g.m() > cap)
        fail(ErrorKind::InstanceTooLarge,
             "brute force limited to " + std::to_string(cap) + " candidates (got " + std::to_string(g.m()) + ")");
    Search s{g, {}, std::vector<char>(g.m(), 0)};
    s.prefix.reserve(g.m());
    BruteForceResult r;
    if (s.extend()) {
        r.linked = true;
        r.witness = LinkedOrder{std::move(s.prefix)};
    }
    return r;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0)
        fail(ErrorKind::InvalidArgument, "Rng::below needs a positive bound");
    // reject the incomplete top block so every residue is equally likely
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

Election gen_impartial_culture(std::size_t m, std::uint64_t n, std::uint64_t rng_seed) {
    if (m == 0)
        fail(ErrorKind::EmptyCandidateSet, "impartial culture needs at least one candidate");
    Rng rng(rng_seed);
    std::vector<CandidateId> base(m);
    std::iota(base.begin(), base.end(), 0);
    std::vector<WeightedVote> votes;
    votes.reserve(static_cast<std::size_t>(n));
    for (std::uint64_t i = 0; i < n; ++i) {
        std::vector<CandidateId> ranking = base;
        rng.shuffle(ranking);
        votes.push_back({Vote{std::move(ranking)}, 1});
    }
    return Election::create(default_names(m), std::move(votes));
}

Election gen_edge_realizing(const ConnectivityGraph& target, std::vector<std::string> names) {
    const std::size_t m = target.m();
    if (m < 2)
        fail(ErrorKind::TooFewCandidates, "edge-realising profiles need at least two candidates");
    if (names.empty())
        names = default_names(m);
    std::vector<WeightedVote> votes;
    votes.reserve(2 * target.edge_count());
    for (auto [u, v] : target.edges()) {
        for (auto [first, second] : {std::pair{u, v}, std::pair{v, u}}) {
            std::vector<CandidateId> ranking{first, second};
            ranking.reserve(m);
            for (CandidateId c = 0; c < static_cast<CandidateId>(m); ++c)
                if (c != u && c != v)
                    ranking.push_back(c);
            votes.push_back({Vote{std::move(ranking)}, 1});
        }
    }
    return Election::create(std::move(names), std::move(votes));
}

Election generate(const GeneratorSpec& spec) {
    if (spec.model == GeneratorModel::ImpartialCulture)
        return gen_impartial_culture(spec.m, spec.n, spec.rng_seed);
    if (!spec.target)
        fail(ErrorKind::InvalidArgument, "edge-realising generation needs a target graph");
    if (spec.m != 0 && spec.m != spec.target->m())
        fail(ErrorKind::InvalidArgument, "candidate count " + std::to_string(spec.m) + " does not match the target graph (" +
                                             std::to_string(spec.target->m()) + " vertices)");
    return gen_edge_realizing(*spec.target);
}

ConnectivityGraph gen_random_graph(std::size_t m, double edge_probability, std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    std::vector<Edge> edges;
    for (CandidateId u = 0; u < static_cast<CandidateId>(m); ++u)
        for (CandidateId v = u + 1; v < static_cast<CandidateId>(m); ++v)
            if (rng.unit() < edge_probability)
                edges.emplace_back(u, v);
    return ConnectivityGraph::from_edges(m, edges);
}

ConnectivityGraph graph_from_mask(std::size_t m, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (CandidateId u = 0; u < static_cast<CandidateId>(m); ++u)
        for (CandidateId v = u + 1; v < static_cast<CandidateId>(m); ++v, ++bit)
            if (bit < 64 && ((mask >> bit) & 1u))
                edges.emplace_back(u, v);
    return ConnectivityGraph::from_edges(m, edges);
}

} // namespace linked
