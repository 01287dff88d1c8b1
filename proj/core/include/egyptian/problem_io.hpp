#pragma once

#include <string>
#include <string_view>

#include "egyptian/problem.hpp"

namespace egyptian {

/// Read and validate a problem file. Format:
/// {
///   "version": 1,
///   "n": 2,
///   "numerators": [["1"], ["1"]],
///   "denominators": [{"kind": "naturals"}, {"kind": "naturals"}]
/// }
/// Descriptor objects: {"kind":"naturals"} | {"kind":"arithmetic","first":"1/2",
/// "step":"1/2"} | {"kind":"geometric","first":"2","ratio":"2"} |
/// {"kind":"polynomial","coeffs":["1","0","0"]} (leading coefficient first) |
/// {"kind":"primes"} | {"kind":"with-prefix","prefix":["3/7"],"tail":{...}}.
/// Throws validation_error on anything malformed.
Problem load_problem(const std::string& path);

Problem parse_problem_text(std::string_view text);

/// Stable single-line serialization of the problem: sorted keys, canonical
/// rational strings. Equal problems produce equal text.
std::string canonical_problem_text(const Problem& p);

/// FNV-1a 64-bit digest of canonical_problem_text, as 16 lowercase hex
/// digits. Identifies the problem in result records and certificates.
std::string problem_hash(const Problem& p);

}  // namespace egyptian
