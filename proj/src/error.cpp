#include "linked/error.hpp"

#include <algorithm>

namespace linked {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DuplicateCandidateName: return "DuplicateCandidateName";
    case ErrorKind::EmptyCandidateName: return "EmptyCandidateName";
    case ErrorKind::IncompleteRanking: return "IncompleteRanking";
    case ErrorKind::UnknownCandidate: return "UnknownCandidate";
    case ErrorKind::EmptyCandidateSet: return "EmptyCandidateSet";
    case ErrorKind::ZeroMultiplicity: return "ZeroMultiplicity";
    case ErrorKind::TooFewCandidates: return "TooFewCandidates";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnsupportedProfile: return "UnsupportedProfile";
    case ErrorKind::InconsistentMetadata: return "InconsistentMetadata";
    case ErrorKind::SeedNotEdge: return "SeedNotEdge";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

std::string format_diagnostic(const Diagnostic& d) {
    std::string out;
    if (d.line > 0) {
        out += "line " + std::to_string(d.line);
        if (d.column > 0)
            out += ":" + std::to_string(d.column);
        out += ": ";
    }
    out += to_string(d.kind);
    out += ": ";
    out += d.message;
    return out;
}

namespace {

std::string join_messages(const std::vector<Diagnostic>& diags) {
    std::string out;
    for (const auto& d : diags) {
        if (!out.empty())
            out += "; ";
        out += format_diagnostic(d);
    }
    return out;
}

} // namespace

LinkedError::LinkedError(Diagnostic d) : LinkedError(std::vector<Diagnostic>{std::move(d)}) {}

LinkedError::LinkedError(std::vector<Diagnostic> diags)
    : std::runtime_error(join_messages(diags)), diags_(std::move(diags)) {
    if (diags_.empty())
        diags_.push_back({ErrorKind::InvalidArgument, 0, 0, "unspecified error"});
}

bool LinkedError::has(ErrorKind kind) const {
    return std::any_of(diags_.begin(), diags_.end(), [kind](const Diagnostic& d) { return d.kind == kind; });
}

void fail(ErrorKind kind, std::string message, std::size_t line, std::size_t column) {
    throw LinkedError(Diagnostic{kind, line, column, std::move(message)});
}

} // namespace linked
