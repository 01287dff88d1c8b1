#pragma once

#include "egyptian/enumerate.hpp"

namespace egyptian {

/// Evidence that (c - delta, c) contains no value of the unsigned problem.
/// predecessor/witness are absent only if no value lies below c at all, in
/// which case delta == c. bound_trace[k] = (least residual-to-beat, largest
/// candidate bound) seen at depth k of the verification sweep; a third party
/// can re-run the bounded search from these numbers alone.
struct GapCertificate {
    Rational c;
    std::optional<Rational> predecessor;
    std::optional<Representation> witness;
    Rational delta;
    bool c_in_e = false;
    std::uint64_t nodes_expanded = 0;
    std::vector<std::pair<Rational, Rational>> bound_trace;
};

struct PredecessorResult {
    Rational value;
    Representation witness;
    std::uint64_t nodes_expanded = 0;
};

/// Largest value of the problem strictly inside (0, c), with one witness
/// (the first found in canonical search order). Requires c > 0. The optional
/// is empty only when no value lies below c; for these unbounded denominator
/// sets that never happens for c > 0, but the contract keeps the case.
/// Throws budget_error instead of looping if the guard budget trips.
std::optional<PredecessorResult> predecessor(const Problem& p, const Rational& c,
                                             std::uint64_t budget = 1'000'000);

/// Certified gap directly below c. The certificate is verified internally by
/// an independent bounded emptiness sweep before being returned; a defect
/// throws std::logic_error rather than emitting an unverified certificate.
GapCertificate gap_below(const Problem& p, const Rational& c, std::uint64_t budget = 1'000'000);

enum class AvoidStatus { Certified, Unknown };

/// A subinterval of (u, v) certified to avoid every value of the problem.
/// If the deterministic sweep proves (u, v) itself empty, that is returned;
/// otherwise the first value e found in (u, v) is bounded from below by its
/// own gap certificate and (max(u, pred(e)), e) is returned. Unknown when the
/// node budget runs out first.
struct AvoidResult {
    AvoidStatus status = AvoidStatus::Unknown;
    Rational lo, hi;
    std::optional<Representation> bounding_element;  // representation of hi
    std::uint64_t nodes_expanded = 0;
};

AvoidResult find_avoiding_subinterval(const Problem& p, const Rational& u, const Rational& v,
                                      std::uint64_t budget = 1'000'000);

/// Exhaustive box probe of the signed value set: all signed representations
/// with every denominator <= cap whose value lies in the open interval
/// (u, v), sorted by (value, representation). The signed set carries no gap
/// certificates, so probing is all this returns.
std::vector<std::pair<Rational, SignedRepresentation>> signed_probe(const Problem& p,
                                                                    const Rational& u,
                                                                    const Rational& v,
                                                                    const Rational& cap);

}  // namespace egyptian
