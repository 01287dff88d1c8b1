#pragma once

#include "egyptian/rational.hpp"

#include <memory>
#include <vector>

namespace egyptian {

/// Conservative three-valued answer for questions about infinite sets.
/// Yes and No are only returned with a proof; everything else is Unknown.
enum class TriBool { Yes, No, Unknown };

const char* to_string(TriBool t);

struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Finite set of positive rational weights, kept sorted ascending and
/// duplicate-free.
class NumeratorSet {
  public:
    explicit NumeratorSet(std::vector<Rational> values);

    const std::vector<Rational>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    const Rational& min() const { return values_.front(); }
    const Rational& max() const { return values_.back(); }
    bool contains(const Rational& v) const;

    friend bool operator==(const NumeratorSet&, const NumeratorSet&) = default;

  private:
    std::vector<Rational> values_;
};

/// Symbolic description of an infinite, strictly increasing, discrete set of
/// positive rationals. Never materialized; queries walk the description.
///
/// Kinds:
///   naturals            1, 2, 3, ...
///   arithmetic(f, s)    f, f+s, f+2s, ...          (f > 0, s > 0)
///   geometric(f, r)     f, f*r, f*r^2, ...         (f > 0, r > 1)
///   polynomial(coeffs)  p(1), p(2), p(3), ...      integer coeffs,
///                       leading-first, leading > 0, degree >= 1
///   primes              2, 3, 5, 7, ...
///   with_prefix(P, T)   finite strictly increasing prefix P, then tail T;
///                       max(P) < min(T) so the whole sequence increases
class DenominatorSet {
  public:
    enum class Kind { Naturals, Arithmetic, Geometric, Polynomial, Primes, WithPrefix };

    static DenominatorSet naturals();
    static DenominatorSet arithmetic(Rational first, Rational step);
    static DenominatorSet geometric(Rational first, Rational ratio);
    static DenominatorSet polynomial(std::vector<BigInt> coeffs);
    static DenominatorSet primes();
    static DenominatorSet with_prefix(std::vector<Rational> prefix, DenominatorSet tail);

    Kind kind() const { return kind_; }
    const Rational& first() const { return first_; }    // Arithmetic, Geometric
    const Rational& step() const { return step_; }      // Arithmetic
    const Rational& ratio() const { return step_; }     // Geometric
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const std::vector<Rational>& prefix() const { return prefix_; }
    const DenominatorSet& tail() const { return *tail_; }

    /// Least element of the set.
    Rational min_element() const;
    /// Exact membership.
    bool contains(const Rational& q) const;
    /// Smallest element strictly greater than x. Always exists.
    Rational first_greater(const Rational& x) const;
    /// Smallest element >= x.
    Rational first_at_least(const Rational& x) const;
    /// All elements <= bound, ascending. bound < min gives {}.
    std::vector<Rational> elements_upto(const Rational& bound) const;

    /// True when every element is provably a positive integer.
    bool integer_valued() const;

    /// Structural equality (same kind and parameters).
    friend bool operator==(const DenominatorSet& a, const DenominatorSet& b);

    /// Stable one-line description, also used for canonical hashing.
    std::string describe() const;

  private:
    DenominatorSet(Kind k) : kind_(k) {}

    Kind kind_;
    Rational first_, step_;
    std::vector<BigInt> coeffs_;
    std::vector<Rational> prefix_;
    std::shared_ptr<const DenominatorSet> tail_;

    Rational poly_eval(const BigInt& m) const;
};

/// Can the intersection of the two sets be proven infinite (Yes), proven
/// finite (No), or neither (Unknown)? Symmetric in its arguments.
TriBool infinite_common_intersection(const DenominatorSet& a, const DenominatorSet& b);

/// Classification of S = { b in d1 : rho*b in d2 } for a fixed positive ratio
/// rho. Drives zero-family detection in the signed engine.
struct ScaledSolutions {
    TriBool infinite = TriBool::Unknown;
    /// When infinite == No this is the complete solution set (ascending).
    /// Otherwise it holds the provably-present members discovered cheaply
    /// (prefix hits), also ascending.
    std::vector<Rational> finite_members;
    /// When infinite == Yes the solutions contain the progression
    /// ap_first + k*ap_step (k >= 0) unless ap_step == 0, in which case the
    /// family comes from a non-AP proof and members are found by walking d1.
    Rational ap_first, ap_step;
};

ScaledSolutions scaled_solution_set(const DenominatorSet& d1, const DenominatorSet& d2,
                                    const Rational& rho);

/// Smallest b > after with b in d1 and rho*b in d2, searching d1 upward.
/// Requires the family to actually contain arbitrarily large members (callers
/// hold a ScaledSolutions proof); walk_limit guards against defects.
Rational next_scaled_member(const DenominatorSet& d1, const DenominatorSet& d2,
                            const Rational& rho, const Rational& after,
                            std::size_t walk_limit = 1u << 20);

}  // namespace egyptian
