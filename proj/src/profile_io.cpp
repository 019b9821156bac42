#include "linked/profile_io.hpp"

#include "linked/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

namespace linked {

namespace {

constexpr std::size_t max_alternatives = std::size_t{1} << 20;

struct Line {
    std::size_t number; // 1-based
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back({number++, line});
        if (end == text.size())
            break;
        start = end + 1;
    }
    return lines;
}

std::size_t first_non_space(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
        ++i;
    return i;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

// Parses an unsigned decimal integer occupying all of `token` (after trimming).
std::optional<std::uint64_t> parse_count(std::string_view token) {
    std::string t = trim(token);
    if (t.empty())
        return std::nullopt;
    for (char c : t)
        if (c < '0' || c > '9')
            return std::nullopt;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        return std::nullopt;
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

[[noreturn]] void syntax(std::size_t line, std::size_t column, std::string message) {
    fail(ErrorKind::SyntaxError, std::move(message), line, column);
}

} // namespace

Election parse_native(std::string_view text) {
    std::optional<std::vector<std::string>> names;
    std::size_t header_line = 0;
    std::vector<RawVote> votes;

    for (const Line& line : split_lines(text)) {
        const std::size_t indent = first_non_space(line.text);
        std::string_view body = line.text.substr(indent);
        if (trim(body).empty() || body.front() == '#')
            continue;

        if (starts_with(body, "candidates:")) {
            if (names)
                syntax(line.number, indent + 1, "duplicate 'candidates:' header (first on line " + std::to_string(header_line) + ")");
            if (!votes.empty())
                syntax(line.number, indent + 1, "'candidates:' header must precede every ranking line");
            std::string_view list = body.substr(std::string_view("candidates:").size());
            names.emplace();
            header_line = line.number;
            if (trim(list).empty())
                continue; // validation reports the empty candidate set
            for (std::string_view part : split(list, ',')) {
                if (part.find('>') != std::string_view::npos)
                    syntax(line.number, static_cast<std::size_t>(part.data() - line.text.data()) + 1,
                           "candidate name may not contain '>'");
                names->push_back(trim(part));
            }
            continue;
        }

        const std::size_t colon = body.find(':');
        if (colon == std::string_view::npos)
            syntax(line.number, indent + 1, "expected 'candidates:' header or '<count>: <ranking>' line");
        auto count = parse_count(body.substr(0, colon));
        if (!count)
            syntax(line.number, indent + 1, "vote count must be a non-negative decimal integer");
        if (!names)
            syntax(line.number, indent + 1, "ranking line before the 'candidates:' header");

        RawVote vote;
        vote.multiplicity = *count;
        vote.line = line.number;
        for (std::string_view part : split(body.substr(colon + 1), '>')) {
            std::string name = trim(part);
            if (name.empty())
                syntax(line.number, static_cast<std::size_t>(part.data() - line.text.data()) + 1,
                       "empty candidate name in ranking");
            vote.ranking.push_back(std::move(name));
        }
        votes.push_back(std::move(vote));
    }

    if (!names)
        syntax(1, 1, "missing 'candidates:' header");
    return validate_election(std::move(*names), std::move(votes), header_line);
}

Election parse_preflib_soc(std::string_view text) {
    std::optional<std::size_t> declared;
    std::size_t declared_line = 0;
    std::vector<std::pair<std::size_t, std::string>> named; // (1-based id, name)
    std::vector<std::size_t> named_lines;
    std::vector<RawVote> votes;
    std::vector<std::vector<std::size_t>> vote_ids;

    for (const Line& line : split_lines(text)) {
        const std::size_t indent = first_non_space(line.text);
        std::string_view body = line.text.substr(indent);
        if (trim(body).empty())
            continue;

        if (body.front() == '#') {
            std::string meta = trim(body.substr(1));
            std::string_view mv = meta;
            if (starts_with(mv, "NUMBER ALTERNATIVES:")) {
                auto k = parse_count(mv.substr(std::string_view("NUMBER ALTERNATIVES:").size()));
                if (!k)
                    syntax(line.number, indent + 1, "NUMBER ALTERNATIVES must be a non-negative integer");
                if (*k > max_alternatives)
                    fail(ErrorKind::UnsupportedProfile, "more than " + std::to_string(max_alternatives) + " alternatives", line.number);
                if (declared && *declared != *k)
                    fail(ErrorKind::InconsistentMetadata,
                         "NUMBER ALTERNATIVES redeclared as " + std::to_string(*k) + " (was " + std::to_string(*declared) + ")",
                         line.number);
                declared = static_cast<std::size_t>(*k);
                declared_line = line.number;
            } else if (starts_with(mv, "ALTERNATIVE NAME")) {
                std::string_view rest = mv.substr(std::string_view("ALTERNATIVE NAME").size());
                const std::size_t colon = rest.find(':');
                if (colon == std::string_view::npos)
                    syntax(line.number, indent + 1, "expected '# ALTERNATIVE NAME <i>: <name>'");
                auto id = parse_count(rest.substr(0, colon));
                if (!id || *id == 0)
                    syntax(line.number, indent + 1, "alternative number must be a positive integer");
                named.emplace_back(static_cast<std::size_t>(*id), trim(rest.substr(colon + 1)));
                named_lines.push_back(line.number);
            }
            continue;
        }

        if (body.find('{') != std::string_view::npos || body.find('}') != std::string_view::npos)
            fail(ErrorKind::UnsupportedProfile, "ties are not supported; only strict complete orders", line.number);
        const std::size_t colon = body.find(':');
        if (colon == std::string_view::npos)
            syntax(line.number, indent + 1, "expected '<count>: <id>,<id>,...'");
        auto count = parse_count(body.substr(0, colon));
        if (!count)
            syntax(line.number, indent + 1, "vote count must be a non-negative decimal integer");
        if (!declared)
            fail(ErrorKind::InconsistentMetadata, "data line before '# NUMBER ALTERNATIVES:' declaration", line.number);

        std::vector<std::size_t> ids;
        for (std::string_view part : split(body.substr(colon + 1), ',')) {
            auto id = parse_count(part);
            if (!id)
                syntax(line.number, static_cast<std::size_t>(part.data() - line.text.data()) + 1,
                       "alternative id must be a positive integer");
            ids.push_back(static_cast<std::size_t>(std::min<std::uint64_t>(*id, SIZE_MAX)));
        }
        if (ids.size() < *declared)
            fail(ErrorKind::UnsupportedProfile,
                 "incomplete ranking (" + std::to_string(ids.size()) + " of " + std::to_string(*declared) + " alternatives)",
                 line.number);
        if (ids.size() > *declared)
            fail(ErrorKind::InconsistentMetadata,
                 "ranking lists " + std::to_string(ids.size()) + " alternatives but " + std::to_string(*declared) + " are declared",
                 line.number);
        for (std::size_t id : ids)
            if (id == 0 || id > *declared)
                fail(ErrorKind::UnknownCandidate, "alternative " + std::to_string(id) + " outside 1.." + std::to_string(*declared),
                     line.number);
        RawVote vote;
        vote.multiplicity = *count;
        vote.line = line.number;
        votes.push_back(std::move(vote));
        vote_ids.push_back(std::move(ids));
    }

    if (!declared)
        fail(ErrorKind::InconsistentMetadata, "missing '# NUMBER ALTERNATIVES:' declaration", 1);

    std::vector<std::string> names(*declared);
    std::vector<char> has_name(*declared, 0);
    for (std::size_t i = 0; i < *declared; ++i)
        names[i] = std::to_string(i + 1);
    for (std::size_t k = 0; k < named.size(); ++k) {
        const auto& [id, name] = named[k];
        if (id > *declared)
            fail(ErrorKind::InconsistentMetadata,
                 "ALTERNATIVE NAME " + std::to_string(id) + " exceeds NUMBER ALTERNATIVES " + std::to_string(*declared), named_lines[k]);
        if (has_name[id - 1])
            fail(ErrorKind::InconsistentMetadata, "alternative " + std::to_string(id) + " named twice", named_lines[k]);
        has_name[id - 1] = 1;
        names[id - 1] = name;
    }

    for (std::size_t v = 0; v < votes.size(); ++v)
        for (std::size_t id : vote_ids[v])
            votes[v].ranking.push_back(names[id - 1]);
    return validate_election(std::move(names), std::move(votes), declared_line);
}

std::string write_native(const Election& e) {
    std::ostringstream out;
    out << "candidates: ";
    for (std::size_t i = 0; i < e.m(); ++i) {
        const std::string& name = e.candidates()[i].name;
        if (name.find_first_of(",>\n") != std::string::npos || trim(name) != name || name.empty())
            fail(ErrorKind::InvalidArgument, "candidate name '" + name + "' cannot be written in the native format");
        out << (i ? ", " : "") << name;
    }
    out << '\n';
    for (const auto& wv : e.votes()) {
        out << wv.multiplicity << ':';
        for (std::size_t i = 0; i < wv.vote.ranking.size(); ++i)
            out << (i ? " > " : " ") << e.name(wv.vote.ranking[i]);
        out << '\n';
    }
    return out.str();
}

Election parse_profile(std::string_view text, ProfileFormat format) {
    return format == ProfileFormat::Native ? parse_native(text) : parse_preflib_soc(text);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorKind::IoError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad())
        fail(ErrorKind::IoError, "error reading '" + path + "'");
    return ss.str();
}

} // namespace linked
