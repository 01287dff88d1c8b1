#include "egyptian/enumerate.hpp"

#include <algorithm>
#include <thread>

namespace egyptian {

Rational min_denominator_bound(const Rational& t, std::size_t remaining, const Rational& a_star) {
    if (t.sign() <= 0) throw validation_error("min_denominator_bound needs a positive residual");
    if (remaining == 0) throw validation_error("min_denominator_bound needs remaining >= 1");
    return Rational(BigInt(remaining)) * a_star / t;
}

namespace {

// Lexicographic floor on (denominator, position). Assigned pairs strictly
// increase along a search path, so every tuple is visited exactly once, in
// the order of its sorted (b, position) sequence.
struct LexFloor {
    Rational b;       // 0 = unconstrained (all elements are positive)
    std::size_t pos = 0;
};

bool lex_after(const Rational& b, std::size_t pos, const LexFloor& f) {
    if (b != f.b) return b > f.b;
    return pos > f.pos;
}

// Least element of d admissible at position pos under floor f.
Rational lex_least(const DenominatorSet& d, std::size_t pos, const LexFloor& f) {
    return pos > f.pos ? d.first_at_least(f.b) : d.first_greater(f.b);
}

struct Searcher {
    const Problem& p;
    std::vector<Representation>* out;
    SearchStats stats;
    std::vector<Term> partial;
    std::vector<bool> assigned;

    explicit Searcher(const Problem& prob, std::vector<Representation>* sink)
        : p(prob), out(sink), partial(prob.n()), assigned(prob.n(), false) {}

    void note_bound(const Rational& b) {
        if (!stats.max_bound || *stats.max_bound < b) stats.max_bound = b;
    }

    // Upper bound on the achievable remaining sum; exact when every remaining
    // position takes its least admissible denominator and largest weight.
    Rational max_achievable(const LexFloor& floor) const {
        Rational s;
        for (std::size_t j = 0; j < p.n(); ++j) {
            if (assigned[j]) continue;
            s += p.numerators(j).max() / lex_least(p.denominators(j), j, floor);
        }
        return s;
    }

    void emit() { out->push_back(partial); }

    void search(const Rational& t, std::size_t remaining, const LexFloor& floor) {
        ++stats.nodes_expanded;
        // t > 0 here; callers handle t <= 0.
        if (remaining == 1) {
            for (std::size_t j = 0; j < p.n(); ++j) {
                if (assigned[j]) continue;
                for (const Rational& a : p.numerators(j).values()) {
                    Rational b = a / t;
                    if (!lex_after(b, j, floor)) continue;
                    if (!p.denominators(j).contains(b)) continue;
                    partial[j] = Term{a, b};
                    assigned[j] = true;
                    emit();
                    assigned[j] = false;
                }
            }
            return;
        }
        if (max_achievable(floor) < t) return;
        Rational bound = min_denominator_bound(t, remaining, p.a_star());
        note_bound(bound);
        for (std::size_t j = 0; j < p.n(); ++j) {
            if (assigned[j]) continue;
            const DenominatorSet& dj = p.denominators(j);
            Rational b = lex_least(dj, j, floor);
            // No weight fits below min(A_j)/t: a/b would overshoot t.
            Rational trim = p.numerators(j).min() / t;
            if (b < trim) b = dj.first_at_least(trim);
            for (; b <= bound; b = dj.first_greater(b)) {
                for (const Rational& a : p.numerators(j).values()) {
                    Rational term = a / b;
                    if (term > t) continue;   // overshoot
                    if (term == t) continue;  // remaining >= 2 positive terms still owed
                    partial[j] = Term{a, b};
                    assigned[j] = true;
                    search(t - term, remaining - 1, LexFloor{b, j});
                    assigned[j] = false;
                }
            }
        }
    }
};

struct RootBranch {
    std::size_t j;
    Rational a, b, residual;
};

}  // namespace

EnumerateResult enumerate_representations(const Problem& p, const Rational& c, unsigned workers) {
    EnumerateResult result;
    if (c.sign() <= 0) {
        result.stats.nodes_expanded = 1;
        return result;
    }
    if (workers <= 1 || p.n() == 1) {
        Searcher s(p, &result.reps);
        s.search(c, p.n(), LexFloor{});
        result.stats = s.stats;
    } else {
        // Expand the root once, then farm complete subtrees out to threads.
        // The union of subtree results is order-free, so worker count cannot
        // change the canonical output.
        std::vector<RootBranch> branches;
        LexFloor floor{};
        Rational bound = min_denominator_bound(c, p.n(), p.a_star());
        for (std::size_t j = 0; j < p.n(); ++j) {
            const DenominatorSet& dj = p.denominators(j);
            Rational trim = p.numerators(j).min() / c;
            Rational b = lex_least(dj, j, floor);
            if (b < trim) b = dj.first_at_least(trim);
            for (; b <= bound; b = dj.first_greater(b)) {
                for (const Rational& a : p.numerators(j).values()) {
                    Rational term = a / b;
                    // n >= 2 on this path, so an exact hit still owes terms.
                    if (term >= c) continue;
                    branches.push_back(RootBranch{j, a, b, c - term});
                }
            }
        }
        std::vector<std::vector<Representation>> per_worker(workers);
        std::vector<SearchStats> per_stats(workers);
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                Searcher s(p, &per_worker[w]);
                for (std::size_t idx = w; idx < branches.size(); idx += workers) {
                    const RootBranch& rb = branches[idx];
                    s.partial[rb.j] = Term{rb.a, rb.b};
                    s.assigned[rb.j] = true;
                    s.search(rb.residual, p.n() - 1, LexFloor{rb.b, rb.j});
                    s.assigned[rb.j] = false;
                }
                per_stats[w] = s.stats;
            });
        }
        for (auto& t : threads) t.join();
        result.stats.nodes_expanded = 1;
        result.stats.max_bound = bound;
        for (unsigned w = 0; w < workers; ++w) {
            auto& chunk = per_worker[w];
            result.reps.insert(result.reps.end(), std::make_move_iterator(chunk.begin()),
                               std::make_move_iterator(chunk.end()));
            result.stats.nodes_expanded += per_stats[w].nodes_expanded;
            if (per_stats[w].max_bound &&
                (!result.stats.max_bound || *result.stats.max_bound < *per_stats[w].max_bound))
                result.stats.max_bound = per_stats[w].max_bound;
        }
    }
    std::sort(result.reps.begin(), result.reps.end(),
              [](const Representation& x, const Representation& y) { return canonical_less(x, y); });
    return result;
}

std::uint64_t count_representations(const Problem& p, const Rational& c) {
    return enumerate_representations(p, c).reps.size();
}

}  // namespace egyptian
