#pragma once

#include "egyptian/denominator_set.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace egyptian {

/// A position-indexed instance: position i draws a weight from numerators[i]
/// and a denominator from denominators[i].
class Problem {
  public:
    Problem(std::vector<NumeratorSet> numerators, std::vector<DenominatorSet> denominators);

    std::size_t n() const { return numerators_.size(); }
    const NumeratorSet& numerators(std::size_t i) const { return numerators_[i]; }
    const DenominatorSet& denominators(std::size_t i) const { return denominators_[i]; }
    /// max over all positions of max(A_i); the pigeonhole bound uses it.
    const Rational& a_star() const { return a_star_; }

  private:
    std::vector<NumeratorSet> numerators_;
    std::vector<DenominatorSet> denominators_;
    Rational a_star_;
};

/// One term of a representation: weight a drawn at denominator b.
struct Term {
    Rational a, b;
    friend bool operator==(const Term&, const Term&) = default;
};

struct SignedTerm {
    Rational a, b;
    int epsilon = 1;  // +1 or -1
    friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

/// Position-ordered tuples; entry i belongs to problem position i.
using Representation = std::vector<Term>;
using SignedRepresentation = std::vector<SignedTerm>;

Rational value_of(const Representation& r);
Rational value_of(const SignedRepresentation& r);

/// Canonical output order: lexicographic by (b_1, a_1, b_2, a_2, ...), signed
/// terms additionally by epsilon with +1 first.
bool canonical_less(const Representation& x, const Representation& y);
bool canonical_less(const SignedRepresentation& x, const SignedRepresentation& y);

/// Strictly increasing subset of positions [0, n).
class IndexTuple {
  public:
    IndexTuple(std::vector<std::size_t> indices, std::size_t n);
    const std::vector<std::size_t>& indices() const { return indices_; }
    std::size_t n() const { return n_; }
    IndexTuple complement() const;

  private:
    std::vector<std::size_t> indices_;
    std::size_t n_;
};

/// Restriction of p to the positions of t (in order).
Problem subproblem(const Problem& p, const IndexTuple& t);

/// An infinite family of signed representations: fixed terms at every
/// position except two, where a zero-sum pair (a_i, b, +1), (a_j, rho*b, -1)
/// ranges over infinitely many b.
struct InfiniteFamily {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, SignedTerm>> fixed;  // completed positions
    std::size_t pos_i = 0, pos_j = 0;
    Rational a_i, a_j;
    int eps_i = 1;  // eps_j is the negation
    Rational rho;   // b_j = rho * b_i
    /// Family parameter domain: b_i ranges over members of base_i whose scaled
    /// image lies in base_j, strictly above floor_b.
    DenominatorSet base_i, base_j;
    Rational floor_b;

    /// k-th member (k >= 1), materialized on demand.
    SignedRepresentation member(std::size_t k) const;
};

enum class Outcome { Finite, Infinite, BudgetExhausted };

/// Result of a signed enumeration: Finite carries the complete count,
/// Infinite a verifiable witness family, BudgetExhausted whatever was found
/// before the node budget ran out.
struct Classification {
    Outcome outcome = Outcome::Finite;
    std::uint64_t count = 0;  // Finite: complete; BudgetExhausted: found so far
    std::optional<InfiniteFamily> witness;
};

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t budget_limit = 0;
    bool truncated = false;
    /// Largest denominator bound any node branched under (Finite runs only
    /// visit bounded nodes, so a cap above this certifies box-completeness).
    std::optional<Rational> max_bound;
};

}  // namespace egyptian
