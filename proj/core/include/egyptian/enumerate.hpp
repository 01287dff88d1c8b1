#pragma once

#include "egyptian/problem.hpp"

namespace egyptian {

/// Thrown when a metered search hits its node budget in a context that has no
/// in-band way to report partial results.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Pigeonhole bound: a sum of `remaining` terms a/b with a <= a_star equal to
/// t > 0 forces min b <= remaining * a_star / t.
Rational min_denominator_bound(const Rational& t, std::size_t remaining, const Rational& a_star);

struct EnumerateResult {
    std::vector<Representation> reps;  // canonical order
    SearchStats stats;
};

/// Complete enumeration of all tuples ((a_1,b_1),...,(a_n,b_n)) with
/// sum a_i/b_i == c. Terminates for every c: the recursive pigeonhole bound
/// chain caps each branch. c <= 0 yields the empty list (all terms are
/// positive). workers > 1 splits root branches across threads; the result is
/// identical for any worker count.
EnumerateResult enumerate_representations(const Problem& p, const Rational& c,
                                          unsigned workers = 1);

std::uint64_t count_representations(const Problem& p, const Rational& c);

}  // namespace egyptian
