#include "doctest.h"
#include "egyptian/denominator_set.hpp"

#include <initializer_list>
#include <vector>

using egyptian::BigInt;
using egyptian::DenominatorSet;
using egyptian::NumeratorSet;
using egyptian::Rational;
using egyptian::TriBool;
using egyptian::validation_error;

namespace {

Rational rat(long long p, long long q = 1) { return Rational(BigInt(p), BigInt(q)); }

std::vector<Rational> rats(std::initializer_list<long long> vs) {
    std::vector<Rational> out;
    for (long long v : vs) out.push_back(rat(v));
    return out;
}

}  // namespace

TEST_SUITE("sets") {

TEST_CASE("numerator sets sort, dedupe, and validate positivity") {
    NumeratorSet a({rat(3), rat(1), rat(3)});
    CHECK(a.size() == 2);
    CHECK(a.min() == rat(1));
    CHECK(a.max() == rat(3));
    CHECK(a.contains(rat(3)));
    CHECK_FALSE(a.contains(rat(2)));

    CHECK_THROWS_AS(NumeratorSet({}), validation_error);
    CHECK_THROWS_AS(NumeratorSet({rat(0)}), validation_error);
    CHECK_THROWS_AS(NumeratorSet({rat(-1), rat(2)}), validation_error);
}

TEST_CASE("elements_upto enumerates the bounded truncation") {
    CHECK(DenominatorSet::naturals().elements_upto(rat(4)) == rats({1, 2, 3, 4}));

    DenominatorSet half = DenominatorSet::arithmetic(rat(1, 2), rat(1, 2));
    std::vector<Rational> expect = {rat(1, 2), rat(1), rat(3, 2), rat(2)};
    CHECK(half.elements_upto(rat(2)) == expect);

    DenominatorSet geo = DenominatorSet::geometric(rat(2), rat(2));
    CHECK(geo.elements_upto(rat(20)) == rats({2, 4, 8, 16}));

    DenominatorSet squares = DenominatorSet::polynomial({BigInt(1), BigInt(0), BigInt(0)});
    CHECK(squares.elements_upto(rat(17)) == rats({1, 4, 9, 16}));

    CHECK(DenominatorSet::primes().elements_upto(rat(12)) == rats({2, 3, 5, 7, 11}));

    DenominatorSet pref = DenominatorSet::with_prefix({rat(3, 7)}, DenominatorSet::naturals());
    std::vector<Rational> pre_expect = {rat(3, 7), rat(1), rat(2)};
    CHECK(pref.elements_upto(rat(2)) == pre_expect);

    CHECK(DenominatorSet::naturals().elements_upto(rat(1, 2)).empty());
}

TEST_CASE("prefix consistency of truncations") {
    DenominatorSet sets[] = {
        DenominatorSet::naturals(),
        DenominatorSet::arithmetic(rat(1, 2), rat(1, 2)),
        DenominatorSet::geometric(rat(2), rat(2)),
        DenominatorSet::polynomial({BigInt(1), BigInt(1)}),
        DenominatorSet::primes(),
        DenominatorSet::with_prefix({rat(3, 7)}, DenominatorSet::naturals()),
    };
    for (const DenominatorSet& d : sets) {
        std::vector<Rational> small = d.elements_upto(rat(7));
        std::vector<Rational> big = d.elements_upto(rat(19));
        REQUIRE(small.size() <= big.size());
        for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i] == big[i]);
        for (std::size_t i = small.size(); i < big.size(); ++i) CHECK(big[i] > rat(7));
    }
}

TEST_CASE("min_element") {
    CHECK(DenominatorSet::naturals().min_element() == rat(1));
    CHECK(DenominatorSet::primes().min_element() == rat(2));
    DenominatorSet pref = DenominatorSet::with_prefix({rat(3, 7)}, DenominatorSet::naturals());
    CHECK(pref.min_element() == rat(3, 7));
}

TEST_CASE("contains") {
    CHECK_FALSE(DenominatorSet::naturals().contains(rat(5, 2)));
    CHECK(DenominatorSet::arithmetic(rat(1, 2), rat(1, 2)).contains(rat(3, 2)));
    CHECK_FALSE(DenominatorSet::primes().contains(rat(9)));
    CHECK(DenominatorSet::primes().contains(rat(97)));
    CHECK(DenominatorSet::geometric(rat(2), rat(2)).contains(rat(1024)));
    CHECK_FALSE(DenominatorSet::geometric(rat(2), rat(2)).contains(rat(12)));
    DenominatorSet squares = DenominatorSet::polynomial({BigInt(1), BigInt(0), BigInt(0)});
    CHECK(squares.contains(rat(144)));
    CHECK_FALSE(squares.contains(rat(145)));
}

TEST_CASE("first_greater and first_at_least agree with the element list") {
    DenominatorSet d = DenominatorSet::with_prefix({rat(3, 7)}, DenominatorSet::primes());
    CHECK(d.first_greater(rat(0)) == rat(3, 7));
    CHECK(d.first_greater(rat(3, 7)) == rat(2));
    CHECK(d.first_at_least(rat(3, 7)) == rat(3, 7));
    CHECK(d.first_at_least(rat(4)) == rat(5));
    CHECK(d.first_greater(rat(7)) == rat(11));

    DenominatorSet geo = DenominatorSet::geometric(rat(3), rat(2));
    CHECK(geo.first_greater(rat(3)) == rat(6));
    CHECK(geo.first_at_least(rat(13)) == rat(24));
}

TEST_CASE("descriptor validation") {
    CHECK_THROWS_AS(DenominatorSet::arithmetic(rat(0), rat(1)), validation_error);
    CHECK_THROWS_AS(DenominatorSet::arithmetic(rat(1), rat(0)), validation_error);
    CHECK_THROWS_AS(DenominatorSet::geometric(rat(2), rat(1)), validation_error);
    CHECK_THROWS_AS(DenominatorSet::polynomial({BigInt(-1), BigInt(0)}), validation_error);
    CHECK_THROWS_AS(DenominatorSet::polynomial({BigInt(5)}), validation_error);
    // decreasing at small m: p(m) = m^2 - 3m
    CHECK_THROWS_AS(DenominatorSet::polynomial({BigInt(1), BigInt(-3), BigInt(0)}),
                    validation_error);
    // prefix must stay below the tail and strictly increase
    CHECK_THROWS_AS(DenominatorSet::with_prefix({rat(3)}, DenominatorSet::naturals()),
                    validation_error);
    CHECK_THROWS_AS(
        DenominatorSet::with_prefix({rat(1, 2), rat(1, 2)}, DenominatorSet::primes()),
        validation_error);
}

TEST_CASE("infinite_common_intersection is conservative") {
    DenominatorSet nat = DenominatorSet::naturals();
    DenominatorSet odds = DenominatorSet::arithmetic(rat(1), rat(2));
    DenominatorSet evens = DenominatorSet::arithmetic(rat(2), rat(2));
    DenominatorSet geo = DenominatorSet::geometric(rat(2), rat(2));

    CHECK(infinite_common_intersection(nat, nat) == TriBool::Yes);
    CHECK(infinite_common_intersection(odds, evens) == TriBool::No);
    CHECK(infinite_common_intersection(DenominatorSet::primes(), geo) == TriBool::Unknown);

    // symmetry on a few mixed pairs
    DenominatorSet pairs[] = {nat, odds, evens, geo, DenominatorSet::primes()};
    for (const DenominatorSet& a : pairs)
        for (const DenominatorSet& b : pairs)
            CHECK(infinite_common_intersection(a, b) == infinite_common_intersection(b, a));

    // identical descriptors are always Yes
    for (const DenominatorSet& a : pairs)
        CHECK(infinite_common_intersection(a, a) == TriBool::Yes);

    // compatible integer progressions
    DenominatorSet every6 = DenominatorSet::arithmetic(rat(4), rat(6));
    CHECK(infinite_common_intersection(evens, every6) == TriBool::Yes);
}

TEST_CASE("scaled solution sets") {
    using egyptian::ScaledSolutions;
    DenominatorSet nat = DenominatorSet::naturals();

    // { b : 2b is a natural } over naturals is all of them
    ScaledSolutions all = scaled_solution_set(nat, nat, rat(2));
    CHECK(all.infinite == TriBool::Yes);

    // { b natural : b/2 is an odd natural } = 2, 6, 10, ...
    DenominatorSet odds = DenominatorSet::arithmetic(rat(1), rat(2));
    ScaledSolutions half_odd = scaled_solution_set(nat, odds, rat(1, 2));
    CHECK(half_odd.infinite == TriBool::Yes);

    // geometric pairs under a nontrivial ratio are not decided; conservatism
    // means Unknown rather than a claimed family
    DenominatorSet geo = DenominatorSet::geometric(rat(2), rat(2));
    ScaledSolutions geo_sol = scaled_solution_set(geo, geo, rat(2));
    CHECK(geo_sol.infinite == TriBool::Unknown);

    if (half_odd.infinite == TriBool::Yes) {
        Rational b = egyptian::next_scaled_member(nat, odds, rat(1, 2), rat(0));
        CHECK(b == rat(2));
        CHECK(egyptian::next_scaled_member(nat, odds, rat(1, 2), b) == rat(6));
    }
}

TEST_CASE("describe is stable and distinguishes parameters") {
    DenominatorSet a = DenominatorSet::arithmetic(rat(1, 2), rat(1, 2));
    DenominatorSet b = DenominatorSet::arithmetic(rat(1, 2), rat(1, 3));
    CHECK(a.describe() == DenominatorSet::arithmetic(rat(1, 2), rat(1, 2)).describe());
    CHECK(a.describe() != b.describe());
    CHECK(DenominatorSet::naturals().describe() != DenominatorSet::primes().describe());
}

}  // TEST_SUITE
