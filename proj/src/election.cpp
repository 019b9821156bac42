#include "linked/election.hpp"

#include "linked/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace linked {

std::string trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; };
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(s[b]))
        ++b;
    while (e > b && is_space(s[e - 1]))
        --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> default_names(std::size_t m) {
    std::vector<std::string> names;
    names.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        names.push_back(m <= 26 ? std::string(1, static_cast<char>('a' + i)) : "c" + std::to_string(i));
    return names;
}

namespace {

// Checks the candidate list; appends problems to `diags`.
void check_names(std::vector<std::string>& names, std::size_t line, std::vector<Diagnostic>& diags) {
    if (names.empty()) {
        diags.push_back({ErrorKind::EmptyCandidateSet, line, 0, "election has no candidates"});
        return;
    }
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < names.size(); ++i) {
        names[i] = trim(names[i]);
        if (names[i].empty()) {
            diags.push_back({ErrorKind::EmptyCandidateName, line, 0, "candidate " + std::to_string(i + 1) + " has an empty name"});
            continue;
        }
        auto [it, inserted] = seen.emplace(names[i], i);
        if (!inserted)
            diags.push_back({ErrorKind::DuplicateCandidateName, line, 0, "candidate name '" + names[i] + "' appears more than once"});
    }
}

// `ranking` must be a permutation of 0..m-1.
void check_ranking(const std::vector<CandidateId>& ranking, std::size_t m, std::size_t line, std::size_t index,
                   std::vector<Diagnostic>& diags) {
    const std::string where = "vote " + std::to_string(index + 1);
    std::vector<char> present(m, 0);
    bool repeated = false;
    for (CandidateId c : ranking) {
        if (c < 0 || static_cast<std::size_t>(c) >= m) {
            diags.push_back({ErrorKind::UnknownCandidate, line, 0, where + ": candidate id " + std::to_string(c) + " out of range"});
            return;
        }
        if (present[static_cast<std::size_t>(c)])
            repeated = true;
        present[static_cast<std::size_t>(c)] = 1;
    }
    if (repeated || ranking.size() != m) {
        std::string msg = where + ": ranking must list each of the " + std::to_string(m) + " candidates exactly once";
        if (repeated)
            msg += " (repeated candidate)";
        else
            msg += " (got " + std::to_string(ranking.size()) + ")";
        diags.push_back({ErrorKind::IncompleteRanking, line, 0, std::move(msg)});
    }
}

} // namespace

Election validate_election(std::vector<std::string> names, std::vector<RawVote> votes, std::size_t header_line) {
    std::vector<Diagnostic> diags;
    check_names(names, header_line, diags);

    std::unordered_map<std::string, CandidateId> index;
    for (std::size_t i = 0; i < names.size(); ++i)
        index.emplace(names[i], static_cast<CandidateId>(i));

    Election e;
    e.votes_.reserve(votes.size());
    for (std::size_t vi = 0; vi < votes.size(); ++vi) {
        const RawVote& raw = votes[vi];
        if (raw.multiplicity == 0)
            diags.push_back({ErrorKind::ZeroMultiplicity, raw.line, 0, "vote " + std::to_string(vi + 1) + " has multiplicity 0"});
        Vote v;
        v.ranking.reserve(raw.ranking.size());
        bool known = true;
        for (const auto& token : raw.ranking) {
            auto it = index.find(trim(token));
            if (it == index.end()) {
                diags.push_back({ErrorKind::UnknownCandidate, raw.line, 0, "vote " + std::to_string(vi + 1) + ": unknown candidate '" + trim(token) + "'"});
                known = false;
                continue;
            }
            v.ranking.push_back(it->second);
        }
        if (known)
            check_ranking(v.ranking, names.size(), raw.line, vi, diags);
        if (e.n_ + raw.multiplicity < e.n_)
            diags.push_back({ErrorKind::InvalidArgument, raw.line, 0, "total vote count overflows 64 bits"});
        e.votes_.push_back({std::move(v), raw.multiplicity});
        e.n_ += raw.multiplicity;
    }
    if (!diags.empty())
        throw LinkedError(std::move(diags));

    e.candidates_.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
        e.candidates_.push_back({static_cast<CandidateId>(i), std::move(names[i])});
    return e;
}

Election Election::create(std::vector<std::string> names, std::vector<WeightedVote> votes) {
    std::vector<Diagnostic> diags;
    check_names(names, 0, diags);
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < votes.size(); ++i) {
        if (votes[i].multiplicity == 0)
            diags.push_back({ErrorKind::ZeroMultiplicity, 0, 0, "vote " + std::to_string(i + 1) + " has multiplicity 0"});
        check_ranking(votes[i].vote.ranking, names.size(), 0, i, diags);
        if (n + votes[i].multiplicity < n)
            diags.push_back({ErrorKind::InvalidArgument, 0, 0, "total vote count overflows 64 bits"});
        n += votes[i].multiplicity;
    }
    if (!diags.empty())
        throw LinkedError(std::move(diags));

    Election e;
    e.candidates_.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
        e.candidates_.push_back({static_cast<CandidateId>(i), std::move(names[i])});
    e.votes_ = std::move(votes);
    e.n_ = n;
    return e;
}

std::vector<std::string> Election::names() const {
    std::vector<std::string> out;
    out.reserve(candidates_.size());
    for (const auto& c : candidates_)
        out.push_back(c.name);
    return out;
}

std::pair<CandidateId, CandidateId> top_two(const Vote& vote) {
    if (vote.ranking.size() < 2)
        fail(ErrorKind::TooFewCandidates, "a vote needs at least two candidates to have a top two");
    return {vote.ranking[0], vote.ranking[1]};
}

} // namespace linked
