#include "egyptian/signed_search.hpp"

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

struct ZeroFamily {
    Rational a_i, a_j, rho;  // b_j = rho * b_i
    ScaledSolutions sols;
};

/// All (a_i, a_j) zero-pair families for positions (i, j), common weights
/// first so the canonical witness prefers the diagonal family.
std::vector<ZeroFamily> zero_pair_families(const Problem& p, std::size_t i, std::size_t j) {
    std::vector<ZeroFamily> fams;
    const auto& ai = p.numerators(i).values();
    const auto& aj = p.numerators(j).values();
    for (const Rational& a : ai)
        if (p.numerators(j).contains(a))
            fams.push_back({a, a, Rational(1),
                            scaled_solution_set(p.denominators(i), p.denominators(j), Rational(1))});
    for (const Rational& x : ai)
        for (const Rational& y : aj) {
            if (x == y) continue;
            Rational rho = y / x;
            fams.push_back({x, y, rho,
                            scaled_solution_set(p.denominators(i), p.denominators(j), rho)});
        }
    return fams;
}

// Cap on the per-family probe walk when a zero-pair family is undecided; the
// global node budget applies on top of it.
constexpr std::size_t kZeroWalkCap = 4096;

struct stop_infinite {};
struct stop_budget {};

struct SignedSearcher {
    const Problem& p;
    std::uint64_t budget;
    std::vector<SignedRepresentation> out;
    SearchStats stats;
    std::optional<InfiniteFamily> witness;
    std::vector<SignedTerm> partial;
    std::vector<bool> assigned;

    SignedSearcher(const Problem& prob, std::uint64_t b)
        : p(prob), budget(b), partial(prob.n()), assigned(prob.n(), false) {
        stats.budget_limit = b;
    }

    void tick() {
        if (++stats.nodes_expanded > budget) throw stop_budget{};
    }

    void note_bound(const Rational& b) {
        if (!stats.max_bound || *stats.max_bound < b) stats.max_bound = b;
    }

    void emit() { out.push_back(partial); }

    Rational max_achievable(const LexFloor& floor) const {
        Rational s;
        for (std::size_t j = 0; j < p.n(); ++j) {
            if (assigned[j]) continue;
            s += p.numerators(j).max() / lex_least(p.denominators(j), j, floor);
        }
        return s;
    }

    std::vector<std::size_t> open_positions() const {
        std::vector<std::size_t> r;
        for (std::size_t j = 0; j < p.n(); ++j)
            if (!assigned[j]) r.push_back(j);
        return r;
    }

    void emit_pair(std::size_t i, std::size_t j, const Rational& a_i, const Rational& a_j,
                   const Rational& b_i, const Rational& b_j) {
        for (int eps : {+1, -1}) {
            partial[i] = SignedTerm{a_i, b_i, eps};
            partial[j] = SignedTerm{a_j, b_j, -eps};
            assigned[i] = assigned[j] = true;
            emit();
            assigned[i] = assigned[j] = false;
        }
    }

    /// Residual hit zero with exactly two open positions: either prove the
    /// zero-pair family infinite, enumerate its finitely many members, or
    /// probe within budget and give up on completeness.
    void zero_pair_node(std::size_t i, std::size_t j, const LexFloor& floor) {
        auto fams = zero_pair_families(p, i, j);
        for (const ZeroFamily& f : fams) {
            if (f.sols.infinite != TriBool::Yes) continue;
            std::vector<std::pair<std::size_t, SignedTerm>> fixed;
            for (std::size_t q = 0; q < p.n(); ++q)
                if (assigned[q]) fixed.emplace_back(q, partial[q]);
            witness = InfiniteFamily{p.n(),   std::move(fixed),
                                     i,       j,
                                     f.a_i,   f.a_j,
                                     +1,      f.rho,
                                     p.denominators(i), p.denominators(j),
                                     Rational(0)};
            throw stop_infinite{};
        }
        bool undecided = false;
        for (const ZeroFamily& f : fams) {
            if (f.sols.infinite == TriBool::No) {
                for (const Rational& b : f.sols.finite_members) {
                    tick();
                    Rational bj = f.rho * b;
                    if (!lex_after(b, i, floor) || !lex_after(bj, j, floor)) continue;
                    emit_pair(i, j, f.a_i, f.a_j, b, bj);
                }
            } else {
                // Undecided family: probe members in ascending order. Found
                // ones are genuine; completeness is gone either way.
                undecided = true;
                Rational b = lex_least(p.denominators(i), i, floor);
                for (std::size_t step = 0; step < kZeroWalkCap; ++step) {
                    tick();
                    Rational bj = f.rho * b;
                    if (p.denominators(j).contains(bj) && lex_after(bj, j, floor))
                        emit_pair(i, j, f.a_i, f.a_j, b, bj);
                    b = p.denominators(i).first_greater(b);
                }
            }
        }
        if (undecided) stats.truncated = true;
    }

    /// Residual zero, three or more open positions: no pigeonhole bound
    /// exists, so walk candidates in ascending (b, position) order until the
    /// budget stops us. Completeness is unattainable on this path.
    void zero_walk(const std::vector<std::size_t>& open, const LexFloor& floor) {
        stats.truncated = true;
        LexFloor cursor = floor;
        for (;;) {
            // smallest admissible (b, j) above the cursor
            std::size_t best_j = p.n();
            Rational best_b;
            for (std::size_t j : open) {
                Rational b = lex_least(p.denominators(j), j, cursor);
                if (best_j == p.n() || b < best_b || (b == best_b && j < best_j)) {
                    best_j = j;
                    best_b = b;
                }
            }
            tick();
            for (const Rational& a : p.numerators(best_j).values()) {
                for (int eps : {+1, -1}) {
                    Rational term = a / best_b;
                    partial[best_j] = SignedTerm{a, best_b, eps};
                    assigned[best_j] = true;
                    search(eps > 0 ? -term : term, LexFloor{best_b, best_j});
                    assigned[best_j] = false;
                }
            }
            cursor = LexFloor{best_b, best_j};
        }
    }

    void search(const Rational& t, const LexFloor& floor) {
        tick();
        auto open = open_positions();
        if (open.empty()) {
            if (t.is_zero()) emit();
            return;
        }
        if (t.is_zero()) {
            if (open.size() == 1) return;  // single signed terms are nonzero
            if (open.size() == 2) {
                zero_pair_node(open[0], open[1], floor);
                return;
            }
            zero_walk(open, floor);
            return;
        }
        if (open.size() == 1) {
            // exact solve: eps*a/b == t
            std::size_t j = open[0];
            int eps = t.sign();
            for (const Rational& a : p.numerators(j).values()) {
                Rational b = a / t.abs();
                if (!lex_after(b, j, floor)) continue;
                if (!p.denominators(j).contains(b)) continue;
                partial[j] = SignedTerm{a, b, eps};
                assigned[j] = true;
                emit();
                assigned[j] = false;
            }
            return;
        }
        if (max_achievable(floor) < t.abs()) return;
        Rational bound = min_denominator_bound(t.abs(), open.size(), p.a_star());
        note_bound(bound);
        for (std::size_t j : open) {
            const DenominatorSet& dj = p.denominators(j);
            for (Rational b = lex_least(dj, j, floor); b <= bound; b = dj.first_greater(b)) {
                for (const Rational& a : p.numerators(j).values()) {
                    Rational term = a / b;
                    for (int eps : {+1, -1}) {
                        partial[j] = SignedTerm{a, b, eps};
                        assigned[j] = true;
                        search(eps > 0 ? t - term : t + term, LexFloor{b, j});
                        assigned[j] = false;
                    }
                }
            }
        }
    }
};

}  // namespace

SignedEnumerateResult enumerate_signed(const Problem& p, const Rational& c, std::uint64_t budget) {
    SignedSearcher s(p, budget);
    bool infinite = false;
    try {
        s.search(c, LexFloor{});
    } catch (const stop_infinite&) {
        infinite = true;
    } catch (const stop_budget&) {
        s.stats.truncated = true;
    }
    SignedEnumerateResult result;
    std::sort(s.out.begin(), s.out.end(),
              [](const SignedRepresentation& x, const SignedRepresentation& y) {
                  return canonical_less(x, y);
              });
    result.reps = std::move(s.out);
    result.stats = s.stats;
    if (infinite) {
        result.classification.outcome = Outcome::Infinite;
        result.classification.witness = std::move(s.witness);
        result.classification.count = result.reps.size();
    } else if (s.stats.truncated) {
        result.classification.outcome = Outcome::BudgetExhausted;
        result.classification.count = result.reps.size();
    } else {
        result.classification.outcome = Outcome::Finite;
        result.classification.count = result.reps.size();
    }
    return result;
}

TriBool classify_signed_zero_pair(const Problem& p, std::size_t i, std::size_t j) {
    if (i >= p.n() || j >= p.n() || i == j)
        throw validation_error("classify_signed_zero_pair needs two distinct positions");
    bool unknown = false;
    for (const ZeroFamily& f : zero_pair_families(p, i, j)) {
        if (f.sols.infinite == TriBool::Yes) return TriBool::Yes;
        if (f.sols.infinite == TriBool::Unknown) unknown = true;
    }
    return unknown ? TriBool::Unknown : TriBool::No;
}

TriBool j_set_membership(const Problem& p, const Rational& c, std::uint64_t budget) {
    if (p.n() <= 2) return TriBool::No;
    std::uint64_t used = 0;
    bool unknown = false;
    for (std::size_t s = 1; s + 2 <= p.n(); ++s) {
        // all position subsets of size s, lexicographic
        std::vector<std::size_t> idx(s);
        for (std::size_t k = 0; k < s; ++k) idx[k] = k;
        for (;;) {
            Problem sub = subproblem(p, IndexTuple(idx, p.n()));
            std::uint64_t slice = budget > used ? budget - used : 0;
            if (slice == 0) return TriBool::Unknown;
            SignedEnumerateResult r = enumerate_signed(sub, c, slice);
            used += r.stats.nodes_expanded;
            if (r.classification.outcome == Outcome::Infinite || !r.reps.empty())
                return TriBool::Yes;
            if (r.classification.outcome == Outcome::BudgetExhausted) unknown = true;
            // advance combination
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == p.n() - s + (k - 1)) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t m = k; m < s; ++m) idx[m] = idx[m - 1] + 1;
        }
    }
    return unknown ? TriBool::Unknown : TriBool::No;
}

}  // namespace egyptian
