#include "egyptian/denominator_set.hpp"

#include <algorithm>

namespace egyptian {

namespace {

using Kind = DenominatorSet::Kind;

bool ap_like(const DenominatorSet& d) {
    return d.kind() == Kind::Naturals || d.kind() == Kind::Arithmetic;
}

Rational ap_first(const DenominatorSet& d) {
    return d.kind() == Kind::Naturals ? Rational(1) : d.first();
}

Rational ap_step(const DenominatorSet& d) {
    return d.kind() == Kind::Naturals ? Rational(1) : d.step();
}

/// Innermost non-prefix descriptor; prefix elements accumulate into *prefix.
const DenominatorSet& strip_prefix(const DenominatorSet& d, std::vector<Rational>* prefix) {
    if (d.kind() != Kind::WithPrefix) return d;
    if (prefix)
        prefix->insert(prefix->end(), d.prefix().begin(), d.prefix().end());
    return strip_prefix(d.tail(), prefix);
}

BigInt egcd(BigInt a, BigInt b, BigInt& x, BigInt& y) {
    BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        BigInt q = a / b;
        BigInt r = a - q * b;
        a = b;
        b = r;
        BigInt nx = x0 - q * x1, ny = y0 - q * y1;
        x0 = x1;
        y0 = y1;
        x1 = nx;
        y1 = ny;
    }
    x = x0;
    y = y0;
    return a;
}

struct ApFamily {
    bool solvable = false;
    Rational first, step;  // solutions first + k*step, k >= 0
};

/// Solves { b in AP(f1, s1) : rho*b in AP(f2, s2) }. Over rationals the
/// solution set is either empty or itself an infinite AP: solution lattices in
/// (m, k) are unbounded in both coordinates.
ApFamily solve_ap_pair(const Rational& f1, const Rational& s1, const Rational& f2,
                       const Rational& s2, const Rational& rho) {
    // m*(rho*s1) - k*s2 = f2 - rho*f1, integers m, k >= 0.
    Rational alpha = rho * s1, beta = s2, gamma = f2 - rho * f1;
    BigInt L = boost::multiprecision::lcm(boost::multiprecision::lcm(alpha.den(), beta.den()),
                                          gamma.den());
    BigInt A = (alpha * Rational(L)).num();
    BigInt B = (beta * Rational(L)).num();
    BigInt C = (gamma * Rational(L)).num();
    BigInt x, y;
    BigInt g = egcd(A, B, x, y);
    if (g < 0) { g = -g; x = -x; y = -y; }
    if (C % g != 0) return {};
    BigInt scale = C / g;
    BigInt m0 = x * scale;      // A*m0 - B*k0 = C
    BigInt k0 = -y * scale;
    BigInt dm = B / g, dk = A / g;  // both > 0
    // smallest t with m0 + t*dm >= 0 and k0 + t*dk >= 0
    BigInt t = Rational(-m0, dm).ceil();
    BigInt t2 = Rational(-k0, dk).ceil();
    if (t2 > t) t = t2;
    ApFamily fam;
    fam.solvable = true;
    fam.first = f1 + s1 * Rational(m0 + t * dm);
    fam.step = s1 * Rational(dm);
    return fam;
}

}  // namespace

TriBool infinite_common_intersection(const DenominatorSet& a, const DenominatorSet& b) {
    if (a == b) return TriBool::Yes;
    const DenominatorSet& ta = strip_prefix(a, nullptr);
    const DenominatorSet& tb = strip_prefix(b, nullptr);
    if (ta == tb) return TriBool::Yes;
    if (ap_like(ta) && ap_like(tb)) {
        ApFamily fam = solve_ap_pair(ap_first(ta), ap_step(ta), ap_first(tb), ap_step(tb),
                                     Rational(1));
        return fam.solvable ? TriBool::Yes : TriBool::No;
    }
    // An infinite integer-valued set meets the naturals in all of itself.
    if (ta.kind() == Kind::Naturals && tb.integer_valued()) return TriBool::Yes;
    if (tb.kind() == Kind::Naturals && ta.integer_valued()) return TriBool::Yes;
    return TriBool::Unknown;
}

ScaledSolutions scaled_solution_set(const DenominatorSet& d1, const DenominatorSet& d2,
                                    const Rational& rho) {
    if (rho.sign() <= 0) throw validation_error("scaling ratio must be positive");
    ScaledSolutions out;

    std::vector<Rational> p1, p2;
    const DenominatorSet& t1 = strip_prefix(d1, &p1);
    const DenominatorSet& t2 = strip_prefix(d2, &p2);

    // Explicit hits through either prefix; the t1 x t2 core is handled below.
    for (const Rational& b : p1)
        if (d2.contains(rho * b)) out.finite_members.push_back(b);
    for (const Rational& q : p2) {
        Rational b = q / rho;
        if (t1.contains(b)) out.finite_members.push_back(b);
    }

    if (ap_like(t1) && ap_like(t2)) {
        ApFamily fam = solve_ap_pair(ap_first(t1), ap_step(t1), ap_first(t2), ap_step(t2), rho);
        if (fam.solvable) {
            out.infinite = TriBool::Yes;
            out.ap_first = fam.first;
            out.ap_step = fam.step;
        } else {
            out.infinite = TriBool::No;
        }
    } else if (rho == Rational(1)) {
        TriBool icc = infinite_common_intersection(t1, t2);
        out.infinite = icc == TriBool::Yes ? TriBool::Yes : TriBool::Unknown;
    } else {
        out.infinite = TriBool::Unknown;
    }

    std::sort(out.finite_members.begin(), out.finite_members.end());
    out.finite_members.erase(std::unique(out.finite_members.begin(), out.finite_members.end()),
                             out.finite_members.end());
    return out;
}

Rational next_scaled_member(const DenominatorSet& d1, const DenominatorSet& d2,
                            const Rational& rho, const Rational& after, std::size_t walk_limit) {
    Rational b = d1.first_greater(after);
    for (std::size_t i = 0; i < walk_limit; ++i) {
        if (d2.contains(rho * b)) return b;
        b = d1.first_greater(b);
    }
    throw std::logic_error("family walk exhausted without a member; classification defect");
}

}  // namespace egyptian
