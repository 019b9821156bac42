#ifndef LINKED_PROFILE_IO_HPP
#define LINKED_PROFILE_IO_HPP

#include "linked/election.hpp"

#include <string>
#include <string_view>

namespace linked {

// Native line format:
//
//   # comment
//   candidates: a, b, c
//   3: a > b > c
//   1: c > b > a
//
// Exactly one header, before any ranking line. Whitespace around tokens is
// ignored. Blank lines are skipped.
Election parse_native(std::string_view text);

// PrefLib strict complete orders (.soc). Recognised metadata:
// "# NUMBER ALTERNATIVES: k" (required) and "# ALTERNATIVE NAME i: name";
// other "#" lines are ignored. Data lines are "<count>: <id>,<id>,...", with
// 1-based alternative ids. Alternatives without a declared name are named by
// their 1-based number.
Election parse_preflib_soc(std::string_view text);

std::string write_native(const Election& e);

enum class ProfileFormat { Native, Soc };

Election parse_profile(std::string_view text, ProfileFormat format);

// Reads a whole file; throws LinkedError(IoError) when it cannot be opened.
std::string read_file(const std::string& path);

} // namespace linked

#endif
