#ifndef LINKED_ELECTION_HPP
#define LINKED_ELECTION_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace linked {

using CandidateId = int;

struct Candidate {
    CandidateId id;
    std::string name;

    bool operator==(const Candidate&) const = default;
};

// A complete strict ranking, most preferred first.
struct Vote {
    std::vector<CandidateId> ranking;

    bool operator==(const Vote&) const = default;
    auto operator<=>(const Vote&) const = default;
};

struct WeightedVote {
    Vote vote;
    std::uint64_t multiplicity = 1;

    bool operator==(const WeightedVote&) const = default;
};

// Unvalidated vote as read from a source; `line` is only used for diagnostics.
struct RawVote {
    std::vector<std::string> ranking;
    std::uint64_t multiplicity = 1;
    std::size_t line = 0;
};

// Candidate set plus a multiset of votes. Immutable once built; the only way
// to obtain one is through validation, so every instance is well formed.
class Election {
public:
    // Validates id-based votes against `names`. Throws LinkedError listing
    // every violation.
    static Election create(std::vector<std::string> names, std::vector<WeightedVote> votes);

    const std::vector<Candidate>& candidates() const { return candidates_; }
    const std::vector<WeightedVote>& votes() const { return votes_; }
    std::size_t m() const { return candidates_.size(); }
    std::uint64_t n() const { return n_; }
    const std::string& name(CandidateId id) const { return candidates_[static_cast<std::size_t>(id)].name; }
    std::vector<std::string> names() const;

    bool operator==(const Election&) const = default;

private:
    Election() = default;
    friend Election validate_election(std::vector<std::string>, std::vector<RawVote>, std::size_t);

    std::vector<Candidate> candidates_;
    std::vector<WeightedVote> votes_;
    std::uint64_t n_ = 0;
};

// Builds an Election from candidate names and name-based rankings. Names are
// whitespace-trimmed. `header_line` tags candidate-level diagnostics.
Election validate_election(std::vector<std::string> names, std::vector<RawVote> votes,
                           std::size_t header_line = 0);

// First and second entries of a ranking.
std::pair<CandidateId, CandidateId> top_two(const Vote& vote);

// "a".."z" for up to 26 candidates, otherwise "c0".."c{m-1}".
std::vector<std::string> default_names(std::size_t m);

std::string trim(std::string_view s);

} // namespace linked

#endif
