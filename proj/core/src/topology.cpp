#include "egyptian/topology.hpp"

#include <algorithm>

namespace egyptian {

namespace {

struct LexFloor {
    Rational b;
    std::size_t pos = 0;
};

bool lex_after(const Rational& b, std::size_t pos, const LexFloor& f) {
    if (b != f.b) return b > f.b;
    return pos > f.pos;
}

Rational lex_least(const DenominatorSet& d, std::size_t pos, const LexFloor& f) {
    return pos > f.pos ? d.first_at_least(f.b) : d.first_greater(f.b);
}

struct stop_budget {};

/// Branch-and-bound maximizer of the value set within (0, c).
struct PredecessorSearch {
    const Problem& p;
    const Rational c;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    Rational best;
    Representation best_witness;
    bool have_best = false;
    std::vector<Term> partial;
    std::vector<bool> assigned;

    PredecessorSearch(const Problem& prob, Rational target, std::uint64_t b)
        : p(prob), c(std::move(target)), budget(b), partial(prob.n()), assigned(prob.n(), false) {}

    void tick() {
        if (++nodes > budget) throw stop_budget{};
    }

    void offer(const Rational& v, const Representation& w) {
        // strictly-better only: ties keep the first witness in search order
        if (!have_best || v > best) {
            best = v;
            best_witness = w;
            have_best = true;
        }
    }

    /// Deterministic seed: push every denominator high enough that the least
    /// weights already sum below c. Doubling sweep guards the edge cases.
    void seed() {
        for (int k = 0; k < 64; ++k) {
            Representation w(p.n());
            Rational v;
            Rational scale = Rational(BigInt(1) << k);
            bool ok = true;
            for (std::size_t i = 0; i < p.n(); ++i) {
                Rational threshold =
                    Rational(BigInt(p.n())) * p.numerators(i).max() * scale / c;
                Rational b = p.denominators(i).first_greater(threshold);
                w[i] = Term{p.numerators(i).min(), b};
                v += w[i].a / w[i].b;
                if (v >= c) {
                    ok = false;
                    break;
                }
            }
            if (ok && v.sign() > 0) {
                offer(v, w);
                return;
            }
        }
        throw std::logic_error("predecessor seed failed; descriptor not unbounded?");
    }

    void search(const Rational& s, std::size_t remaining, const LexFloor& floor) {
        tick();
        if (remaining == 0) {
            if (s < c) offer(s, partial);
            return;
        }
        if (s >= c) return;  // every completion adds positive terms
        // Attainable maximum of this subtree: least admissible denominators,
        // largest weights.
        Rational ub = s;
        std::vector<std::size_t> open;
        for (std::size_t j = 0; j < p.n(); ++j) {
            if (assigned[j]) continue;
            open.push_back(j);
            ub += p.numerators(j).max() / lex_least(p.denominators(j), j, floor);
        }
        if (have_best && ub <= best) return;
        if (ub < c) {
            // the subtree maximum is feasible; take it and close the node
            Representation w = partial;
            for (std::size_t j : open) {
                w[j] = Term{p.numerators(j).max(), lex_least(p.denominators(j), j, floor)};
            }
            offer(ub, w);
            return;
        }
        if (open.size() == 1) {
            std::size_t j = open[0];
            const DenominatorSet& dj = p.denominators(j);
            for (const Rational& a : p.numerators(j).values()) {
                // least admissible b with s + a/b < c maximizes the value
                Rational b = dj.first_greater(a / (c - s));
                Rational least = lex_least(dj, j, floor);
                if (b < least) b = least;
                Rational v = s + a / b;
                if (v < c) {
                    Representation w = partial;
                    w[j] = Term{a, b};
                    offer(v, w);
                }
            }
            return;
        }
        for (std::size_t j : open) {
            const DenominatorSet& dj = p.denominators(j);
            Rational b = lex_least(dj, j, floor);
            // below this no completion through j can stay under c
            Rational trim = p.numerators(j).min() / (c - s);
            if (b <= trim) b = dj.first_greater(trim);
            for (;; b = dj.first_greater(b)) {
                tick();
                if (have_best && best > s) {
                    // candidates beating the incumbent keep min denominator
                    // under the pigeonhole cap; b ascends, so stop past it
                    Rational cap = min_denominator_bound(best - s, open.size(), p.a_star());
                    if (b > cap) break;
                }
                for (const Rational& a : p.numerators(j).values()) {
                    if (s + a / b >= c) continue;
                    partial[j] = Term{a, b};
                    assigned[j] = true;
                    search(s + a / b, remaining - 1, LexFloor{b, j});
                    assigned[j] = false;
                }
            }
        }
    }
};

/// Sound and complete emptiness check of the open interval (lo, hi): either
/// returns a representation whose value lies inside, or proves none exists.
/// Every reachable prefix with sum >= lo yields an explicit element below hi
/// (denominators can always grow), so the search only branches while its
/// prefix sums stay below lo, where the pigeonhole chain caps candidates.
struct EmptinessSweep {
    const Problem& p;
    const Rational lo, hi;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<Term> partial;
    std::vector<bool> assigned;
    std::optional<Representation> violation;
    Rational violation_value;
    std::vector<std::pair<Rational, Rational>> trace;  // per depth

    EmptinessSweep(const Problem& prob, Rational l, Rational h, std::uint64_t b)
        : p(prob), lo(std::move(l)), hi(std::move(h)), budget(b), partial(prob.n()),
          assigned(prob.n(), false) {}

    void tick() {
        if (++nodes > budget) throw stop_budget{};
    }

    void note(std::size_t depth, const Rational& residual, const Rational& bound) {
        if (trace.size() <= depth) trace.resize(depth + 1, {residual, bound});
        if (residual < trace[depth].first) trace[depth].first = residual;
        if (bound > trace[depth].second) trace[depth].second = bound;
    }

    bool run() {
        sweep(Rational(0), p.n(), LexFloor{}, 0);
        return !violation.has_value();
    }

    void found(Representation w) {
        violation_value = value_of(w);
        violation = std::move(w);
    }

    void sweep(const Rational& s, std::size_t remaining, const LexFloor& floor,
               std::size_t depth) {
        if (violation) return;
        tick();
        if (s >= hi) return;  // completions only grow
        if (remaining == 0) {
            if (s > lo) found(partial);
            return;
        }
        if (s >= lo) {
            // Any completion with small enough terms lands in (s, hi), which
            // sits inside [lo, hi): build one explicitly. Growing b past both
            // the slice threshold and the lex floor keeps every term strictly
            // under its share of hi - s, so the total always fits.
            Representation w = partial;
            Rational budget_each = (hi - s) / Rational(BigInt(remaining));
            for (std::size_t j = 0; j < p.n(); ++j) {
                if (assigned[j]) continue;
                Rational amin = p.numerators(j).min();
                Rational threshold = amin / budget_each;
                Rational least = lex_least(p.denominators(j), j, floor);
                Rational b = p.denominators(j).first_greater(threshold);
                if (b < least) b = least;
                w[j] = Term{amin, b};
            }
            found(std::move(w));
            return;
        }
        // s < lo from here on
        if (remaining == 1) {
            for (std::size_t j = 0; j < p.n(); ++j) {
                if (assigned[j]) continue;
                const DenominatorSet& dj = p.denominators(j);
                for (const Rational& a : p.numerators(j).values()) {
                    // value in (lo, hi) iff b in (a/(hi-s), a/(lo-s))
                    Rational b = dj.first_greater(a / (hi - s));
                    Rational least = lex_least(dj, j, floor);
                    if (b < least) b = least;
                    for (; b * (lo - s) < a; b = dj.first_greater(b)) {
                        tick();
                        Rational v = s + a / b;
                        if (v < hi) {
                            Representation w = partial;
                            w[j] = Term{a, b};
                            found(std::move(w));
                            return;
                        }
                        // v >= hi: b still too small, keep growing
                    }
                }
            }
            return;
        }
        Rational t_min = lo - s;
        Rational bound = min_denominator_bound(t_min, remaining, p.a_star());
        note(depth, t_min, bound);
        for (std::size_t j = 0; j < p.n(); ++j) {
            if (assigned[j]) continue;
            const DenominatorSet& dj = p.denominators(j);
            for (Rational b = lex_least(dj, j, floor); b <= bound; b = dj.first_greater(b)) {
                for (const Rational& a : p.numerators(j).values()) {
                    if (s + a / b >= hi) continue;  // overshoot, larger a only worse
                    partial[j] = Term{a, b};
                    assigned[j] = true;
                    sweep(s + a / b, remaining - 1, LexFloor{b, j}, depth + 1);
                    assigned[j] = false;
                    if (violation) return;
                }
            }
        }
    }
};

}  // namespace

std::optional<PredecessorResult> predecessor(const Problem& p, const Rational& c,
                                             std::uint64_t budget) {
    if (c.sign() <= 0) throw validation_error("predecessor needs c > 0");
    PredecessorSearch s(p, c, budget);
    try {
        s.seed();
        s.search(Rational(0), p.n(), LexFloor{});
    } catch (const stop_budget&) {
        throw budget_error("predecessor search exceeded its node budget");
    }
    if (!s.have_best) return std::nullopt;
    PredecessorResult r;
    r.value = s.best;
    r.witness = s.best_witness;
    r.nodes_expanded = s.nodes;
    return r;
}

GapCertificate gap_below(const Problem& p, const Rational& c, std::uint64_t budget) {
    GapCertificate cert;
    cert.c = c;
    auto pred = predecessor(p, c, budget);
    if (!pred) {
        cert.delta = c;
        return cert;
    }
    cert.predecessor = pred->value;
    cert.witness = pred->witness;
    cert.delta = c - pred->value;
    cert.nodes_expanded = pred->nodes_expanded;

    // Never emit unverified: an independent bounded sweep must confirm that
    // (pred, c) holds no value.
    EmptinessSweep sweep(p, pred->value, c, budget);
    bool empty;
    try {
        empty = sweep.run();
    } catch (const stop_budget&) {
        throw budget_error("gap verification exceeded its node budget");
    }
    cert.nodes_expanded += sweep.nodes;
    cert.bound_trace = sweep.trace;
    if (!empty)
        throw std::logic_error("gap certificate failed verification: value found at " +
                               rat_format(sweep.violation_value));
    cert.c_in_e = !enumerate_representations(p, c).reps.empty();
    return cert;
}

AvoidResult find_avoiding_subinterval(const Problem& p, const Rational& u, const Rational& v,
                                      std::uint64_t budget) {
    if (u.sign() < 0 || u >= v) throw validation_error("need 0 <= u < v");
    AvoidResult res;
    EmptinessSweep sweep(p, u, v, budget);
    bool empty;
    try {
        empty = sweep.run();
    } catch (const stop_budget&) {
        res.nodes_expanded = sweep.nodes;
        return res;  // Unknown
    }
    res.nodes_expanded = sweep.nodes;
    if (empty) {
        res.status = AvoidStatus::Certified;
        res.lo = u;
        res.hi = v;
        return res;
    }
    Rational e = sweep.violation_value;
    std::uint64_t remaining = budget > sweep.nodes ? budget - sweep.nodes : 0;
    GapCertificate gap;
    try {
        gap = gap_below(p, e, remaining == 0 ? 1 : remaining);
    } catch (const budget_error&) {
        return res;  // Unknown
    }
    res.nodes_expanded += gap.nodes_expanded;
    res.status = AvoidStatus::Certified;
    res.lo = gap.predecessor && *gap.predecessor > u ? *gap.predecessor : u;
    res.hi = e;
    res.bounding_element = sweep.violation;
    return res;
}

std::vector<std::pair<Rational, SignedRepresentation>> signed_probe(const Problem& p,
                                                                    const Rational& u,
                                                                    const Rational& v,
                                                                    const Rational& cap) {
    if (u >= v) throw validation_error("signed_probe needs u < v");
    if (cap.sign() <= 0) throw validation_error("signed_probe needs a positive cap");
    std::vector<std::pair<Rational, SignedRepresentation>> out;
    std::vector<std::vector<Rational>> elems(p.n());
    for (std::size_t i = 0; i < p.n(); ++i) elems[i] = p.denominators(i).elements_upto(cap);
    SignedRepresentation partial(p.n());
    auto rec = [&](auto&& self, std::size_t i, const Rational& acc) -> void {
        if (i == p.n()) {
            if (acc > u && acc < v) out.emplace_back(acc, partial);
            return;
        }
        for (const Rational& b : elems[i])
            for (const Rational& a : p.numerators(i).values())
                for (int eps : {+1, -1}) {
                    partial[i] = SignedTerm{a, b, eps};
                    Rational term = a / b;
                    self(self, i + 1, eps > 0 ? acc + term : acc - term);
                }
    };
    rec(rec, 0, Rational(0));
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return canonical_less(x.second, y.second);
    });
    return out;
}

}  // namespace egyptian
