#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "egyptian/problem.hpp"

namespace egyptian {

/// Raised when the requested form provably does not exist (for example a
/// two-term distinct unit sum of value 1).
struct infeasible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultRewriteBudget = 10'000;

/// Multiset of unit-fraction denominators, kept sorted ascending. The value
/// is the sum of the reciprocals; repeated entries are meaningful.
class UnitFractionSum {
public:
    UnitFractionSum() = default;
    explicit UnitFractionSum(std::vector<BigInt> denominators);

    const std::vector<BigInt>& denominators() const { return dens_; }
    std::size_t size() const { return dens_.size(); }
    bool empty() const { return dens_.empty(); }
    Rational value() const;
    bool distinct() const;

    bool operator==(const UnitFractionSum&) const = default;

private:
    std::vector<BigInt> dens_;  // ascending, every entry >= 1
};

/// 1/b = 1/(b+1) + 1/(b(b+1)), the splitting identity. Requires b >= 1.
std::pair<BigInt, BigInt> split_unit(const BigInt& b);

/// Rewrite s into a sum of the same value and length with all denominators
/// distinct. Repeated pairs are rewritten largest-first; a merge that loses a
/// slot is repaired by splitting the largest denominator. When the local
/// rewrites stall, an exhaustive bounded search over distinct forms of the
/// right length takes over. Throws infeasible_error if no such form exists
/// and budget_error when the step budget runs out first.
UnitFractionSum to_distinct(const UnitFractionSum& s,
                            std::uint64_t budget = kDefaultRewriteBudget);

/// Grow s to exactly target terms by splitting the largest denominator,
/// keeping the value; the result is made distinct. target < s.size() is an
/// error.
UnitFractionSum extend_length(const UnitFractionSum& s, std::size_t target,
                              std::uint64_t budget = kDefaultRewriteBudget);

/// Greedy expansion of a positive rational: repeatedly take the largest unit
/// fraction not exceeding the remainder. Distinct whenever r < 1.
UnitFractionSum greedy_expand(const Rational& r);

/// a/b becomes a copies of 1/b. Every weight and denominator must be a
/// positive integer.
UnitFractionSum weighted_to_unit_sum(const Representation& rep);

/// Full pipeline: flatten a weighted representation to unit fractions, then
/// make the denominators distinct at the same length.
UnitFractionSum weighted_rep_to_egyptian(const Representation& rep,
                                         std::uint64_t budget = kDefaultRewriteBudget);

/// Parse "1/2 + 1/3 + 1/6". A term p/q contributes p copies of q; a bare
/// integer p contributes p copies of 1.
UnitFractionSum parse_unit_sum(std::string_view text);

/// Inverse of parse for unit terms: "1/2 + 1/3 + 1/6", ascending.
std::string format_unit_sum(const UnitFractionSum& s);

}  // namespace egyptian
