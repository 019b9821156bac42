#include "linked/error.hpp"
#include "linked/oracle.hpp"
#include "linked/profile_io.hpp"

#include <doctest.h>

using namespace linked;

namespace {

LinkedError error_of(auto&& fn) {
    try {
        fn();
    } catch (const LinkedError& e) {
        return e;
    }
    FAIL("expected LinkedError");
    return LinkedError(Diagnostic{ErrorKind::InvalidArgument, 0, 0, ""});
}

} // namespace

TEST_CASE("native: basic profile") {
    auto e = parse_native("candidates: a, b\n1: a > b\n1: b > a");
    CHECK(e.m() == 2);
    CHECK(e.n() == 2);
    CHECK(e.votes()[0].vote.ranking == std::vector<CandidateId>{0, 1});
    CHECK(e.votes()[1].vote.ranking == std::vector<CandidateId>{1, 0});
}

TEST_CASE("native: multiplicity prefix") {
    auto e = parse_native("candidates: a, b\n3: a > b");
    CHECK(e.n() == 3);
    REQUIRE(e.votes().size() == 1);
    CHECK(e.votes()[0].multiplicity == 3);
}

TEST_CASE("native: header is required and must come first") {
    auto err = error_of([] { parse_native("1: a > b"); });
    CHECK(err.kind() == ErrorKind::SyntaxError);
    CHECK(err.diagnostics()[0].line == 1);

    err = error_of([] { parse_native("candidates: a, b\n1: a > b\ncandidates: a, b"); });
    CHECK(err.kind() == ErrorKind::SyntaxError);
    CHECK(err.diagnostics()[0].line == 3);

    CHECK(error_of([] { parse_native(""); }).kind() == ErrorKind::SyntaxError);
}

TEST_CASE("native: comments, blank lines, CRLF and whitespace") {
    auto e = parse_native("# profile\r\n\r\n  candidates:x ,  y,z  \r\n# votes\r\n 2 :z>  y >x\r\n");
    CHECK(e.names() == std::vector<std::string>{"x", "y", "z"});
    CHECK(e.votes()[0].vote.ranking == std::vector<CandidateId>{2, 1, 0});
    CHECK(e.votes()[0].multiplicity == 2);
}

TEST_CASE("native: syntax errors carry positions") {
    auto err = error_of([] { parse_native("candidates: a, b\nx: a > b"); });
    CHECK(err.kind() == ErrorKind::SyntaxError);
    CHECK(err.diagnostics()[0].line == 2);

    err = error_of([] { parse_native("candidates: a, b\n1: a >  > b"); });
    CHECK(err.kind() == ErrorKind::SyntaxError);
    CHECK(err.diagnostics()[0].column == 7);

    err = error_of([] { parse_native("candidates: a, b\nwhat"); });
    CHECK(err.kind() == ErrorKind::SyntaxError);
}

TEST_CASE("native: validation errors come with line numbers") {
    auto err = error_of([] { parse_native("candidates: a, b, c\n\n1: a > b"); });
    CHECK(err.kind() == ErrorKind::IncompleteRanking);
    CHECK(err.diagnostics()[0].line == 3);

    err = error_of([] { parse_native("candidates: a, a"); });
    CHECK(err.kind() == ErrorKind::DuplicateCandidateName);
    CHECK(err.diagnostics()[0].line == 1);

    CHECK(error_of([] { parse_native("candidates:"); }).kind() == ErrorKind::EmptyCandidateSet);
    CHECK(error_of([] { parse_native("candidates: a, b\n0: a > b"); }).kind() == ErrorKind::ZeroMultiplicity);
    CHECK(error_of([] { parse_native("candidates: a, b\n1: a > q"); }).kind() == ErrorKind::UnknownCandidate);
    CHECK(error_of([] { parse_native("candidates: a, b\n99999999999999999999999: a > b"); }).kind() == ErrorKind::SyntaxError);
}

TEST_CASE("soc: basic profile") {
    auto e = parse_preflib_soc("# NUMBER ALTERNATIVES: 2\n1: 1,2\n1: 2,1");
    CHECK(e.m() == 2);
    CHECK(e.n() == 2);
    CHECK(e.names() == std::vector<std::string>{"1", "2"});
    CHECK(e.votes()[1].vote.ranking == std::vector<CandidateId>{1, 0});
}

TEST_CASE("soc: multiplicity and names") {
    auto e = parse_preflib_soc("# FILE NAME: x.soc\n# DATA TYPE: soc\n# NUMBER ALTERNATIVES: 3\n"
                               "# ALTERNATIVE NAME 1: Alice\n# ALTERNATIVE NAME 2: Bob\n# ALTERNATIVE NAME 3: Carol\n"
                               "# NUMBER VOTERS: 2\n# NUMBER UNIQUE ORDERS: 1\n2: 1,2,3\n");
    REQUIRE(e.votes().size() == 1);
    CHECK(e.votes()[0].multiplicity == 2);
    CHECK(e.n() == 2);
    CHECK(e.names() == std::vector<std::string>{"Alice", "Bob", "Carol"});
}

TEST_CASE("soc: rejected inputs") {
    CHECK(error_of([] { parse_preflib_soc("# NUMBER ALTERNATIVES: 3\n1: {1,2},3"); }).kind() == ErrorKind::UnsupportedProfile);
    CHECK(error_of([] { parse_preflib_soc("# NUMBER ALTERNATIVES: 3\n1: 1,2"); }).kind() == ErrorKind::UnsupportedProfile);
    CHECK(error_of([] { parse_preflib_soc("# NUMBER ALTERNATIVES: 2\n1: 1,2,3"); }).kind() == ErrorKind::InconsistentMetadata);
    CHECK(error_of([] { parse_preflib_soc("1: 1,2"); }).kind() == ErrorKind::InconsistentMetadata);
    CHECK(error_of([] { parse_preflib_soc("# NUMBER ALTERNATIVES: 2\n# ALTERNATIVE NAME 3: c\n1: 1,2"); }).kind() ==
          ErrorKind::InconsistentMetadata);
    CHECK(error_of([] { parse_preflib_soc("# NUMBER ALTERNATIVES: 2\n# NUMBER ALTERNATIVES: 3\n"); }).kind() ==
          ErrorKind::InconsistentMetadata);
    CHECK(error_of([] { parse_preflib_soc("# NUMBER ALTERNATIVES: 2\n1: 1,1"); }).kind() == ErrorKind::IncompleteRanking);
    CHECK(error_of([] { parse_preflib_soc("# NUMBER ALTERNATIVES: 2\n1: 1,5"); }).kind() == ErrorKind::UnknownCandidate);
    CHECK(error_of([] { parse_preflib_soc("# NUMBER ALTERNATIVES: 2\n1: 1;2"); }).kind() == ErrorKind::SyntaxError);
    CHECK(error_of([] { parse_preflib_soc("# NUMBER ALTERNATIVES: 0\n"); }).kind() == ErrorKind::EmptyCandidateSet);
}

TEST_CASE("write_native format") {
    auto e = Election::create({"a", "b"}, {{Vote{{0, 1}}, 1}, {Vote{{1, 0}}, 1}});
    CHECK(write_native(e) == "candidates: a, b\n1: a > b\n1: b > a\n");
    CHECK(write_native(Election::create({"a", "b"}, {})) == "candidates: a, b\n");
}

TEST_CASE("write_native refuses names the grammar cannot express") {
    auto e = Election::create({"a>b", "c"}, {});
    CHECK(error_of([&] { write_native(e); }).kind() == ErrorKind::InvalidArgument);
}

TEST_CASE("property: parse_native(write_native(e)) == e") {
    Rng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 1 + rng.below(30);
        auto ic = gen_impartial_culture(m, rng.below(15), rng.next());
        // spread multiplicities so the prefix matters
        std::vector<WeightedVote> votes = ic.votes();
        for (auto& wv : votes)
            wv.multiplicity = 1 + rng.below(1000);
        auto e = Election::create(ic.names(), votes);
        CHECK(parse_native(write_native(e)) == e);
    }
}

TEST_CASE("parse_profile dispatch") {
    CHECK(parse_profile("candidates: a\n1: a", ProfileFormat::Native).m() == 1);
    CHECK(parse_profile("# NUMBER ALTERNATIVES: 1\n1: 1", ProfileFormat::Soc).m() == 1);
}

TEST_CASE("read_file on a missing path") {
    CHECK(error_of([] { read_file("/nonexistent/definitely/missing.txt"); }).kind() == ErrorKind::IoError);
}
