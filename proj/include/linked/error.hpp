#ifndef LINKED_ERROR_HPP
#define LINKED_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace linked {

enum class ErrorKind {
    DuplicateCandidateName,
    EmptyCandidateName,
    IncompleteRanking,
    UnknownCandidate,
    EmptyCandidateSet,
    ZeroMultiplicity,
    TooFewCandidates,
    SyntaxError,
    UnsupportedProfile,
    InconsistentMetadata,
    SeedNotEdge,
    NotAPermutation,
    InstanceTooLarge,
    InvalidArgument,
    IoError,
};

std::string_view to_string(ErrorKind kind);

// line/column are 1-based; 0 means "not tied to a source position".
struct Diagnostic {
    ErrorKind kind;
    std::size_t line = 0;
    std::size_t column = 0;
    std::string message;
};

std::string format_diagnostic(const Diagnostic& d);

// Every failure raised by the library is a LinkedError carrying one or more
// diagnostics. Validation collects all violations before throwing.
class LinkedError : public std::runtime_error {
public:
    explicit LinkedError(Diagnostic d);
    explicit LinkedError(std::vector<Diagnostic> diags);

    ErrorKind kind() const { return diags_.front().kind; }
    const std::vector<Diagnostic>& diagnostics() const { return diags_; }
    bool has(ErrorKind kind) const;

private:
    std::vector<Diagnostic> diags_;
};

[[noreturn]] void fail(ErrorKind kind, std::string message, std::size_t line = 0, std::size_t column = 0);

} // namespace linked

#endif
