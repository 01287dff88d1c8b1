#include "egyptian/unit_sum.hpp"

#include <algorithm>
#include <cctype>

#include "egyptian/enumerate.hpp"

namespace egyptian {

namespace {

void insert_sorted(std::vector<BigInt>& d, const BigInt& x) {
    d.insert(std::upper_bound(d.begin(), d.end(), x), x);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

BigInt parse_positive_int(std::string_view s) {
    s = trim(s);
    if (s.empty()) throw validation_error("empty number in unit sum");
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw validation_error("bad number in unit sum: '" + std::string(s) + "'");
    BigInt v{std::string(s)};
    if (v < 1) throw validation_error("unit sum terms must be positive");
    return v;
}

/// Complete bounded search for the lexicographically first ascending tuple of
/// k distinct unit fractions summing to t, all denominators > prev.
struct DistinctSearch {
    std::uint64_t& steps;
    std::uint64_t budget;
    const std::vector<BigInt>& diagnostic;

    void charge() {
        if (++steps > budget)
            throw budget_error("distinct rewrite budget exhausted on " +
                               format_unit_sum(UnitFractionSum(diagnostic)));
    }

    bool run(const Rational& t, std::size_t k, const BigInt& prev, std::vector<BigInt>& acc) {
        charge();
        if (k == 1) {
            if (t.num() == 1 && t.den() > prev) {
                acc.push_back(t.den());
                return true;
            }
            return false;
        }
        BigInt b = prev + 1;
        BigInt least = t.reciprocal().floor() + 1;  // 1/b < t, strictly
        if (least > b) b = least;
        // k distinct terms starting at b sum to strictly less than k/b
        for (; Rational(BigInt(k), b) > t; ++b) {
            acc.push_back(b);
            if (run(t - Rational(1, b), k - 1, b, acc)) return true;
            acc.pop_back();
        }
        return false;
    }
};

}  // namespace

UnitFractionSum::UnitFractionSum(std::vector<BigInt> denominators)
    : dens_(std::move(denominators)) {
    for (const BigInt& b : dens_)
        if (b < 1) throw validation_error("unit fraction denominators must be positive");
    std::sort(dens_.begin(), dens_.end());
}

Rational UnitFractionSum::value() const {
    Rational v;
    for (const BigInt& b : dens_) v += Rational(BigInt(1), b);
    return v;
}

bool UnitFractionSum::distinct() const {
    return std::adjacent_find(dens_.begin(), dens_.end()) == dens_.end();
}

std::pair<BigInt, BigInt> split_unit(const BigInt& b) {
    if (b < 1) throw validation_error("split_unit needs b >= 1");
    return {b + 1, b * (b + 1)};
}

UnitFractionSum to_distinct(const UnitFractionSum& s, std::uint64_t budget) {
    std::vector<BigInt> d = s.denominators();
    const std::size_t target = d.size();
    if (target == 0) return s;
    const Rational v0 = s.value();
    std::uint64_t steps = 0;
    auto charge = [&] {
        if (++steps > budget)
            throw budget_error("distinct rewrite budget exhausted on " +
                               format_unit_sum(UnitFractionSum(d)));
    };
    for (;;) {
        // largest duplicated value; d stays sorted ascending throughout
        std::size_t dup = d.size();
        for (std::size_t i = d.size(); i-- > 1;) {
            if (d[i] == d[i - 1]) {
                dup = i;
                break;
            }
        }
        if (dup == d.size()) {
            if (d.size() == target) return UnitFractionSum(std::move(d));
            // distinct but a merge lost slots; split the largest to regain one
            charge();
            if (d.back() == 1) {
                // d is exactly {1}; 1/1 only splits into repeats
                if (target - d.size() == 1)
                    throw infeasible_error("no distinct form at this length");
                d = {BigInt(2), BigInt(3), BigInt(6)};
                continue;
            }
            auto [x, y] = split_unit(d.back());
            d.pop_back();
            insert_sorted(d, x);
            insert_sorted(d, y);
            continue;
        }
        charge();
        BigInt b = d[dup];
        if (b == 1) break;  // 1/1 + 1/1 has no unit rewrite; search directly
        d.erase(d.begin() + (dup - 1), d.begin() + (dup + 1));
        if (b == 2) {
            insert_sorted(d, BigInt(1));
        } else if (b % 2 == 0) {
            // 2/b = 1/k with b = 2k, then split to keep the slot count
            BigInt k = b / 2;
            insert_sorted(d, k + 1);
            insert_sorted(d, k * (k + 1));
        } else {
            // 2/(2k+1) = 1/(k+1) + 1/((k+1)(2k+1))
            BigInt k = (b - 1) / 2;
            insert_sorted(d, k + 1);
            insert_sorted(d, (k + 1) * b);
        }
    }
    DistinctSearch search{steps, budget, d};
    std::vector<BigInt> acc;
    if (search.run(v0, target, BigInt(0), acc)) return UnitFractionSum(std::move(acc));
    throw infeasible_error("no distinct form at this length");
}

UnitFractionSum extend_length(const UnitFractionSum& s, std::size_t target,
                              std::uint64_t budget) {
    if (s.empty()) throw validation_error("cannot extend an empty sum");
    if (target < s.size()) throw validation_error("target length is shorter than the sum");
    std::vector<BigInt> d = s.denominators();
    while (d.size() < target) {
        if (d.size() == 1 && d[0] == 1) {
            if (target == 2) throw infeasible_error("no distinct form at this length");
            d = {BigInt(2), BigInt(3), BigInt(6)};
            continue;
        }
        auto [x, y] = split_unit(d.back());
        d.pop_back();
        insert_sorted(d, x);
        insert_sorted(d, y);
    }
    UnitFractionSum out(std::move(d));
    return out.distinct() ? out : to_distinct(out, budget);
}

UnitFractionSum greedy_expand(const Rational& r) {
    if (r.sign() <= 0) throw validation_error("greedy expansion needs a positive value");
    std::vector<BigInt> d;
    Rational t = r;
    while (!t.is_zero()) {
        BigInt b = t.reciprocal().ceil();
        d.push_back(b);
        t -= Rational(BigInt(1), b);
    }
    return UnitFractionSum(std::move(d));
}

UnitFractionSum weighted_to_unit_sum(const Representation& rep) {
    if (rep.empty()) throw validation_error("empty representation");
    std::vector<BigInt> d;
    for (const Term& t : rep) {
        if (!t.a.is_integer() || t.a.sign() <= 0 || !t.b.is_integer() || t.b.sign() <= 0)
            throw validation_error("flattening needs positive integer weights and denominators");
        if (t.a.num() > 1'000'000) throw validation_error("weight too large to flatten");
        for (BigInt i = 0; i < t.a.num(); ++i) d.push_back(t.b.num());
    }
    return UnitFractionSum(std::move(d));
}

UnitFractionSum weighted_rep_to_egyptian(const Representation& rep, std::uint64_t budget) {
    return to_distinct(weighted_to_unit_sum(rep), budget);
}

UnitFractionSum parse_unit_sum(std::string_view text) {
    std::vector<BigInt> d;
    std::size_t start = 0;
    for (;;) {
        std::size_t plus = text.find('+', start);
        std::string_view term =
            text.substr(start, (plus == std::string_view::npos ? text.size() : plus) - start);
        term = trim(term);
        if (term.empty()) throw validation_error("empty term in unit sum");
        std::size_t slash = term.find('/');
        BigInt p, q;
        if (slash == std::string_view::npos) {
            p = parse_positive_int(term);
            q = 1;
        } else {
            p = parse_positive_int(term.substr(0, slash));
            q = parse_positive_int(term.substr(slash + 1));
        }
        if (p > 1'000'000) throw validation_error("term count too large in unit sum");
        for (BigInt i = 0; i < p; ++i) d.push_back(q);
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    return UnitFractionSum(std::move(d));
}

std::string format_unit_sum(const UnitFractionSum& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += " + ";
        out += "1/" + s.denominators()[i].str();
    }
    return out;
}

}  // namespace egyptian
