#include "builders.hpp"

namespace egyptian::testing {

Problem unit_problem(std::size_t n) {
    std::vector<NumeratorSet> ns;
    std::vector<DenominatorSet> ds;
    for (std::size_t i = 0; i < n; ++i) {
        ns.push_back(NumeratorSet({Rational(1)}));
        ds.push_back(DenominatorSet::naturals());
    }
    return Problem(std::move(ns), std::move(ds));
}

NumeratorSet nums(std::initializer_list<long long> values) {
    std::vector<Rational> v;
    for (long long x : values) v.push_back(Rational(x));
    return NumeratorSet(std::move(v));
}

DenominatorSet random_descriptor(std::mt19937_64& rng) {
    switch (rng() % 6) {
        case 0: return DenominatorSet::naturals();
        case 1: {
            // halves, naturals shifted, every third, ...
            static const Rational firsts[] = {Rational(1, 2), Rational(1), Rational(2),
                                              Rational(3, 2)};
            static const Rational steps[] = {Rational(1, 2), Rational(1), Rational(2)};
            return DenominatorSet::arithmetic(firsts[rng() % 4], steps[rng() % 3]);
        }
        case 2: {
            static const Rational firsts[] = {Rational(1), Rational(2), Rational(3)};
            static const Rational ratios[] = {Rational(2), Rational(3)};
            return DenominatorSet::geometric(firsts[rng() % 3], ratios[rng() % 2]);
        }
        case 3: {
            switch (rng() % 3) {
                case 0: return DenominatorSet::polynomial({BigInt(1), BigInt(1)});  // m + 1
                case 1: return DenominatorSet::polynomial({BigInt(2), BigInt(1)});  // 2m + 1
                default: return DenominatorSet::polynomial({BigInt(1), BigInt(0), BigInt(0)});  // m^2
            }
        }
        case 4: return DenominatorSet::primes();
        default: {
            // prefix strictly below the tail minimum
            DenominatorSet tail = DenominatorSet::arithmetic(Rational(2), Rational(1));
            std::vector<Rational> prefix;
            if (rng() % 2) prefix.push_back(Rational(1, 3));
            prefix.push_back(Rational(1 + static_cast<long long>(rng() % 2), 2));  // 1/2 or 1
            return DenominatorSet::with_prefix(std::move(prefix), std::move(tail));
        }
    }
}

Problem random_problem(std::mt19937_64& rng, std::size_t max_n) {
    std::size_t n = 1 + rng() % max_n;
    std::vector<NumeratorSet> ns;
    std::vector<DenominatorSet> ds;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t k = 1 + rng() % 3;
        std::vector<Rational> vals;
        while (vals.size() < k) {
            Rational v(1 + static_cast<long long>(rng() % 5));
            if (rng() % 4 == 0) v = v / Rational(2);  // some non-integer weights
            bool dup = false;
            for (const Rational& w : vals) dup |= (w == v);
            if (!dup) vals.push_back(v);
        }
        ns.push_back(NumeratorSet(std::move(vals)));
        ds.push_back(random_descriptor(rng));
    }
    return Problem(std::move(ns), std::move(ds));
}

Rational random_target(std::mt19937_64& rng, long long cap) {
    long long p = 1 + static_cast<long long>(rng() % cap);
    long long q = 1 + static_cast<long long>(rng() % cap);
    return Rational(p, q);
}

}  // namespace egyptian::testing
