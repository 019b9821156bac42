#include "linked/recognition.hpp"

#include "linked/error.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <queue>
#include <thread>

namespace linked {

std::string_view to_string(Verdict v) { return v == Verdict::Linked ? "linked" : "not linked"; }

bool RecognitionResult::operator==(const RecognitionResult& other) const {
    if (verdict != other.verdict || witness != other.witness || certificate.size() != other.certificate.size())
        return false;
    for (std::size_t i = 0; i < certificate.size(); ++i)
        if (certificate[i].seed != other.certificate[i].seed || certificate[i].reached != other.certificate[i].reached)
            return false;
    return true;
}

namespace {

void check_vertex(const ConnectivityGraph& g, CandidateId v) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.m())
        fail(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(g.m()) + "-1");
}

// Worklist closure. Absorbing v bumps each neighbour's counter; a vertex
// becomes absorbable the moment its counter reaches 2 and stays so. The heap
// holds exactly the absorbable vertices not yet absorbed, keyed by rank.
// rank == nullptr means rank[v] = v.
void run_closure(const ConnectivityGraph& g, CandidateId a, CandidateId b, const std::size_t* rank, ClosureState& st) {
    const std::size_t m = g.m();
    st.seed = {std::min(a, b), std::max(a, b)};
    st.reached.clear();
    st.reached.reserve(m);
    st.in_set.assign(m, 0);
    st.counters.assign(m, 0);

    using Item = std::pair<std::size_t, CandidateId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;

    auto absorb = [&](CandidateId v) {
        st.in_set[static_cast<std::size_t>(v)] = 1;
        st.reached.push_back(v);
        for (CandidateId w : g.neighbors(v)) {
            const auto wi = static_cast<std::size_t>(w);
            if (++st.counters[wi] == 2 && !st.in_set[wi])
                ready.emplace(rank ? rank[wi] : wi, w);
        }
    };

    absorb(a);
    absorb(b);
    while (!ready.empty()) {
        const CandidateId v = ready.top().second;
        ready.pop();
        absorb(v);
    }
}

std::vector<Edge> seeds_for(const ConnectivityGraph& g, SeedPolicy policy) {
    if (policy == SeedPolicy::EdgesOnly)
        return g.edges();
    std::vector<Edge> seeds;
    const auto m = static_cast<CandidateId>(g.m());
    seeds.reserve(g.m() * (g.m() - 1) / 2);
    for (CandidateId u = 0; u < m; ++u)
        for (CandidateId v = u + 1; v < m; ++v)
            seeds.emplace_back(u, v);
    return seeds;
}

// A seed certifies only if its closure covers everything and the first two
// entries are adjacent (always true for edge seeds).
bool certifies(const ConnectivityGraph& g, const ClosureState& st) {
    return st.spans_all() && g.has_edge(st.seed.first, st.seed.second);
}

RecognitionResult recognize_sequential(const ConnectivityGraph& g, const std::vector<Edge>& seeds) {
    RecognitionResult result;
    ClosureState st;
    for (const Edge& seed : seeds) {
        run_closure(g, seed.first, seed.second, nullptr, st);
        if (certifies(g, st)) {
            result.verdict = Verdict::Linked;
            result.witness = LinkedOrder{std::move(st.reached)};
            result.certificate.clear();
            return result;
        }
        result.certificate.push_back({seed, st.reached});
    }
    return result;
}

// Workers pull seed indices from a shared counter. `first_success` only ever
// decreases, so seeds beyond it are skipped; the lowest successful index wins
// regardless of completion order.
RecognitionResult recognize_parallel(const ConnectivityGraph& g, const std::vector<Edge>& seeds, unsigned threads) {
    const std::size_t count = seeds.size();
    std::vector<std::vector<CandidateId>> reached(count);
    std::vector<char> success(count, 0);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_success{count};

    auto worker = [&] {
        ClosureState st;
        while (true) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count || i > first_success.load(std::memory_order_relaxed))
                return;
            run_closure(g, seeds[i].first, seeds[i].second, nullptr, st);
            success[i] = certifies(g, st) ? 1 : 0;
            reached[i] = st.reached;
            if (success[i]) {
                std::size_t cur = first_success.load(std::memory_order_relaxed);
                while (i < cur && !first_success.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
                }
            }
        }
    };

    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    pool.clear(); // joins

    RecognitionResult result;
    const std::size_t winner = first_success.load();
    if (winner < count) {
        result.verdict = Verdict::Linked;
        result.witness = LinkedOrder{std::move(reached[winner])};
        return result;
    }
    result.certificate.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        result.certificate.push_back({seeds[i], std::move(reached[i])});
    return result;
}

} // namespace

ClosureState greedy_closure(const ConnectivityGraph& g, CandidateId a, CandidateId b) {
    check_vertex(g, a);
    check_vertex(g, b);
    if (!g.has_edge(a, b))
        fail(ErrorKind::SeedNotEdge, "seed {" + std::to_string(a) + "," + std::to_string(b) + "} is not an edge");
    ClosureState st;
    run_closure(g, a, b, nullptr, st);
    return st;
}

ClosureState greedy_closure(const ConnectivityGraph& g, CandidateId a, CandidateId b, std::span<const std::size_t> rank) {
    check_vertex(g, a);
    check_vertex(g, b);
    if (!g.has_edge(a, b))
        fail(ErrorKind::SeedNotEdge, "seed {" + std::to_string(a) + "," + std::to_string(b) + "} is not an edge");
    if (rank.size() != g.m())
        fail(ErrorKind::InvalidArgument, "tie-break rank needs one entry per vertex");
    ClosureState st;
    run_closure(g, a, b, rank.data(), st);
    return st;
}

RecognitionResult recognize(const ConnectivityGraph& g, const RecognizeOptions& options) {
    if (g.m() == 0)
        fail(ErrorKind::InvalidArgument, "cannot recognise a graph with no vertices");
    if (g.m() == 1) {
        RecognitionResult r;
        r.verdict = Verdict::Linked;
        r.witness = LinkedOrder{{0}};
        return r;
    }
    const auto seeds = seeds_for(g, options.seeds);
    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, seeds.size()));
    if (threads <= 1)
        return recognize_sequential(g, seeds);
    return recognize_parallel(g, seeds, threads);
}

bool verify_witness(const ConnectivityGraph& g, std::span<const CandidateId> order) {
    const std::size_t m = g.m();
    if (order.size() != m)
        fail(ErrorKind::NotAPermutation, "order has " + std::to_string(order.size()) + " entries, graph has " + std::to_string(m) + " vertices");
    std::vector<std::size_t> position(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        const CandidateId v = order[i];
        if (v < 0 || static_cast<std::size_t>(v) >= m || position[static_cast<std::size_t>(v)] != m)
            fail(ErrorKind::NotAPermutation, "order is not a permutation of 0.." + std::to_string(m) + "-1");
        position[static_cast<std::size_t>(v)] = i;
    }
    if (m < 2)
        return true;
    if (!g.has_edge(order[0], order[1]))
        return false;
    for (std::size_t i = 2; i < m; ++i) {
        int earlier = 0;
        for (CandidateId w : g.neighbors(order[i]))
            if (position[static_cast<std::size_t>(w)] < i)
                ++earlier;
        if (earlier < 2)
            return false;
    }
    return true;
}

RecognitionResult recognize_election(const Election& e, ConnectivityMode mode, const RecognizeOptions& options) {
    if (e.m() == 1) {
        RecognitionResult r;
        r.verdict = Verdict::Linked;
        r.witness = LinkedOrder{{0}};
        return r;
    }
    return recognize(build_graph(e, mode), options);
}

} // namespace linked
