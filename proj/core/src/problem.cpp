#include "egyptian/problem.hpp"

#include <algorithm>

namespace egyptian {

Problem::Problem(std::vector<NumeratorSet> numerators, std::vector<DenominatorSet> denominators)
    : numerators_(std::move(numerators)), denominators_(std::move(denominators)) {
    if (numerators_.empty()) throw validation_error("problem needs at least one position");
    if (numerators_.size() != denominators_.size())
        throw validation_error("numerator and denominator lists must have equal length");
    a_star_ = numerators_[0].max();
    for (const NumeratorSet& s : numerators_)
        a_star_ = std::max(a_star_, s.max());
}

Rational value_of(const Representation& r) {
    Rational v;
    for (const Term& t : r) v += t.a / t.b;
    return v;
}

Rational value_of(const SignedRepresentation& r) {
    Rational v;
    for (const SignedTerm& t : r) {
        Rational w = t.a / t.b;
        v += t.epsilon < 0 ? -w : w;
    }
    return v;
}

bool canonical_less(const Representation& x, const Representation& y) {
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
        if (x[i].b != y[i].b) return x[i].b < y[i].b;
        if (x[i].a != y[i].a) return x[i].a < y[i].a;
    }
    return x.size() < y.size();
}

bool canonical_less(const SignedRepresentation& x, const SignedRepresentation& y) {
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
        if (x[i].b != y[i].b) return x[i].b < y[i].b;
        if (x[i].a != y[i].a) return x[i].a < y[i].a;
        if (x[i].epsilon != y[i].epsilon) return x[i].epsilon > y[i].epsilon;  // +1 first
    }
    return x.size() < y.size();
}

IndexTuple::IndexTuple(std::vector<std::size_t> indices, std::size_t n)
    : indices_(std::move(indices)), n_(n) {
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] >= n_) throw validation_error("index tuple entry out of range");
        if (i > 0 && indices_[i] <= indices_[i - 1])
            throw validation_error("index tuple must be strictly increasing");
    }
}

IndexTuple IndexTuple::complement() const {
    std::vector<std::size_t> out;
    std::size_t next = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (next < indices_.size() && indices_[next] == i) {
            ++next;
        } else {
            out.push_back(i);
        }
    }
    return IndexTuple(std::move(out), n_);
}

Problem subproblem(const Problem& p, const IndexTuple& t) {
    if (t.n() != p.n()) throw validation_error("index tuple sized for a different problem");
    std::vector<NumeratorSet> nums;
    std::vector<DenominatorSet> dens;
    for (std::size_t i : t.indices()) {
        nums.push_back(p.numerators(i));
        dens.push_back(p.denominators(i));
    }
    return Problem(std::move(nums), std::move(dens));
}

SignedRepresentation InfiniteFamily::member(std::size_t k) const {
    if (k == 0) throw validation_error("family members are 1-indexed");
    SignedRepresentation rep(n);
    for (const auto& [pos, term] : fixed) rep[pos] = term;
    Rational b = floor_b;
    for (std::size_t i = 0; i < k; ++i) b = next_scaled_member(base_i, base_j, rho, b);
    rep[pos_i] = SignedTerm{a_i, b, eps_i};
    rep[pos_j] = SignedTerm{a_j, rho * b, -eps_i};
    return rep;
}

}  // namespace egyptian
