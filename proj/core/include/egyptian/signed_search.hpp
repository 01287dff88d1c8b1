#pragma once

#include "egyptian/enumerate.hpp"

namespace egyptian {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

struct SignedEnumerateResult {
    std::vector<SignedRepresentation> reps;  // canonical order; complete iff Finite
    Classification classification;
    SearchStats stats;
};

/// Signed enumeration with sign choices eps_i in {+1,-1}. Outcomes:
///  - Finite: the search provably completed; reps is the full solution set.
///    Guaranteed for n == 1, for n == 2 with c != 0, and whenever no
///    zero-residual interior state is reachable (in particular when
///    j_set_membership says No).
///  - Infinite: a zero-sum pair family over the two remaining positions was
///    detected and joined to a completed partial assignment; the witness's
///    members are genuine representations, verifiable one by one.
///  - BudgetExhausted: the node budget ran out, or a zero-residual state
///    could not be either closed or proven infinite; reps holds what was
///    found. Never loops forever.
SignedEnumerateResult enumerate_signed(const Problem& p, const Rational& c,
                                       std::uint64_t budget = kDefaultBudget);

/// Is the set of signed zero-sum pairs over positions (i, j) infinite?
/// Yes only with a verifiable family (common weights over a provably infinite
/// denominator intersection, or a proportional family b_j = rho*b_i on
/// scaling-closed descriptors). No only when every weight pair's solution set
/// is provably finite. Unknown otherwise; never No in the presence of an
/// undecided family.
TriBool classify_signed_zero_pair(const Problem& p, std::size_t i, std::size_t j);

/// Membership of c in the union of signed value sets over all sub-tuples of
/// size <= n-2 (empty for n <= 2, hence No). Yes as soon as one sub-tuple
/// provably represents c; No when all sub-searches complete without a hit;
/// Unknown when budget runs out first.
TriBool j_set_membership(const Problem& p, const Rational& c,
                         std::uint64_t budget = kDefaultBudget);

}  // namespace egyptian
