#ifndef LINKED_ORACLE_HPP
#define LINKED_ORACLE_HPP

#include "linked/connectivity.hpp"
#include "linked/election.hpp"
#include "linked/recognition.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace linked {

inline constexpr std::size_t default_oracle_cap = 8;

struct BruteForceResult {
    bool linked = false;
    std::optional<LinkedOrder> witness; // lexicographically first linked order
};

// Exhaustive search over orders, abandoning a prefix as soon as it violates
// the linked condition. Shares nothing with the greedy closure. Throws
// InstanceTooLarge when g.m() > cap and InvalidArgument when m = 0.
BruteForceResult brute_force_linked(const ConnectivityGraph& g, std::size_t cap = default_oracle_cap);

// Deterministic 64-bit generator used by every generator below. The sequence
// is mt19937_64's (fixed by the standard); bounded draws and shuffles are done
// here rather than through <random> distributions, whose output differs
// between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    // Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);
    // Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[static_cast<std::size_t>(below(i))]);
    }

private:
    std::mt19937_64 engine_;
};

enum class GeneratorModel { ImpartialCulture, EdgeRealizing };

struct GeneratorSpec {
    GeneratorModel model = GeneratorModel::ImpartialCulture;
    std::size_t m = 0;                       // candidate count
    std::uint64_t n = 0;                     // ImpartialCulture: vote count
    std::optional<ConnectivityGraph> target; // EdgeRealizing: graph to realise
    std::uint64_t rng_seed = 0;
};

// n independent uniform rankings, each stored with multiplicity 1. Candidates
// get default_names(m).
Election gen_impartial_culture(std::size_t m, std::uint64_t n, std::uint64_t rng_seed);

// Two votes per edge {u,v}: u>v>rest and v>u>rest, rest ascending. The strong
// graph of the result is exactly `target`. Names default to default_names(m).
Election gen_edge_realizing(const ConnectivityGraph& target, std::vector<std::string> names = {});

// Dispatches on spec.model; throws InvalidArgument on an inconsistent spec.
Election generate(const GeneratorSpec& spec);

// G(m, p) random graph.
ConnectivityGraph gen_random_graph(std::size_t m, double edge_probability, std::uint64_t rng_seed);

// Graph whose edge set is the bits of `mask` over the pairs (u,v), u<v, in
// lexicographic order (bit 0 = {0,1}, bit 1 = {0,2}, ...).
ConnectivityGraph graph_from_mask(std::size_t m, std::uint64_t mask);

} // namespace linked

#endif
