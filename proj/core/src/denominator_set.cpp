#include "egyptian/denominator_set.hpp"

#include <algorithm>
#include <sstream>

namespace egyptian {

const char* to_string(TriBool t) {
    switch (t) {
        case TriBool::Yes: return "yes";
        case TriBool::No: return "no";
        default: return "unknown";
    }
}

NumeratorSet::NumeratorSet(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty()) throw validation_error("numerator set must be nonempty");
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    if (values_.front().sign() <= 0)
        throw validation_error("numerator values must be positive");
}

bool NumeratorSet::contains(const Rational& v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

namespace {

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (BigInt i = 3; i * i <= n; i += 2)
        if (n % i == 0) return false;
    return true;
}

}  // namespace

DenominatorSet DenominatorSet::naturals() {
    return DenominatorSet(Kind::Naturals);
}

DenominatorSet DenominatorSet::arithmetic(Rational first, Rational step) {
    if (first.sign() <= 0) throw validation_error("arithmetic first term must be positive");
    if (step.sign() <= 0) throw validation_error("arithmetic step must be positive");
    DenominatorSet d(Kind::Arithmetic);
    d.first_ = std::move(first);
    d.step_ = std::move(step);
    return d;
}

DenominatorSet DenominatorSet::geometric(Rational first, Rational ratio) {
    if (first.sign() <= 0) throw validation_error("geometric first term must be positive");
    if (ratio <= Rational(1)) throw validation_error("geometric ratio must exceed 1");
    DenominatorSet d(Kind::Geometric);
    d.first_ = std::move(first);
    d.step_ = std::move(ratio);
    return d;
}

DenominatorSet DenominatorSet::polynomial(std::vector<BigInt> coeffs) {
    if (coeffs.size() < 2) throw validation_error("polynomial degree must be at least 1");
    if (coeffs.front() <= 0) throw validation_error("polynomial leading coefficient must be positive");
    DenominatorSet d(Kind::Polynomial);
    d.coeffs_ = std::move(coeffs);
    if (d.poly_eval(1) <= 0) throw validation_error("polynomial must be positive at m = 1");
    // Monotonicity is checked on a bounded index range; beyond it the positive
    // leading coefficient carries the argument.
    Rational prev = d.poly_eval(1);
    for (int m = 2; m <= 10000; ++m) {
        Rational cur = d.poly_eval(m);
        if (cur <= prev)
            throw validation_error("polynomial values must be strictly increasing");
        prev = std::move(cur);
    }
    return d;
}

DenominatorSet DenominatorSet::primes() {
    return DenominatorSet(Kind::Primes);
}

DenominatorSet DenominatorSet::with_prefix(std::vector<Rational> prefix, DenominatorSet tail) {
    if (prefix.empty()) throw validation_error("with-prefix needs at least one prefix element");
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (prefix[i].sign() <= 0) throw validation_error("prefix elements must be positive");
        if (i > 0 && prefix[i] <= prefix[i - 1])
            throw validation_error("prefix must be strictly increasing");
    }
    if (prefix.back() >= tail.min_element())
        throw validation_error("prefix must stay below the tail's least element");
    DenominatorSet d(Kind::WithPrefix);
    d.prefix_ = std::move(prefix);
    d.tail_ = std::make_shared<DenominatorSet>(std::move(tail));
    return d;
}

Rational DenominatorSet::poly_eval(const BigInt& m) const {
    BigInt acc = 0;
    for (const BigInt& c : coeffs_) acc = acc * m + c;
    return Rational(acc);
}

Rational DenominatorSet::min_element() const {
    switch (kind_) {
        case Kind::Naturals: return Rational(1);
        case Kind::Arithmetic:
        case Kind::Geometric: return first_;
        case Kind::Polynomial: return poly_eval(1);
        case Kind::Primes: return Rational(2);
        case Kind::WithPrefix: return prefix_.front();
    }
    throw std::logic_error("unreachable");
}

bool DenominatorSet::contains(const Rational& q) const {
    if (q.sign() <= 0) return false;
    switch (kind_) {
        case Kind::Naturals:
            return q.is_integer();
        case Kind::Arithmetic: {
            if (q < first_) return false;
            Rational k = (q - first_) / step_;
            return k.is_integer();
        }
        case Kind::Geometric: {
            Rational e = first_;
            while (e < q) e *= step_;
            return e == q;
        }
        case Kind::Polynomial: {
            if (!q.is_integer()) return false;
            // p is increasing on the supported range; binary search the index.
            BigInt lo = 1, hi = 2;
            while (poly_eval(hi) < q) {
                lo = hi;
                hi *= 2;
            }
            while (lo <= hi) {
                BigInt mid = (lo + hi) / 2;
                Rational v = poly_eval(mid);
                if (v == q) return true;
                if (v < q) lo = mid + 1;
                else hi = mid - 1;
            }
            return false;
        }
        case Kind::Primes:
            return q.is_integer() && is_prime(q.num());
        case Kind::WithPrefix:
            return std::binary_search(prefix_.begin(), prefix_.end(), q) || tail_->contains(q);
    }
    throw std::logic_error("unreachable");
}

Rational DenominatorSet::first_greater(const Rational& x) const {
    switch (kind_) {
        case Kind::Naturals: {
            if (x < Rational(1)) return Rational(1);
            return Rational(x.floor() + 1);
        }
        case Kind::Arithmetic: {
            if (x < first_) return first_;
            BigInt k = ((x - first_) / step_).floor() + 1;
            return first_ + step_ * Rational(k);
        }
        case Kind::Geometric: {
            Rational e = first_;
            while (e <= x) e *= step_;
            return e;
        }
        case Kind::Polynomial: {
            if (x < poly_eval(1)) return poly_eval(1);
            BigInt lo = 1, hi = 2;
            while (poly_eval(hi) <= x) {
                lo = hi;
                hi *= 2;
            }
            // invariant: p(lo) <= x < p(hi)
            while (hi - lo > 1) {
                BigInt mid = (lo + hi) / 2;
                if (poly_eval(mid) <= x) lo = mid;
                else hi = mid;
            }
            return poly_eval(hi);
        }
        case Kind::Primes: {
            BigInt c = x < Rational(2) ? BigInt(2) : x.floor() + 1;
            while (!is_prime(c)) ++c;
            return Rational(c);
        }
        case Kind::WithPrefix: {
            auto it = std::upper_bound(prefix_.begin(), prefix_.end(), x);
            if (it != prefix_.end()) return *it;
            return tail_->first_greater(x);
        }
    }
    throw std::logic_error("unreachable");
}

Rational DenominatorSet::first_at_least(const Rational& x) const {
    if (contains(x)) return x;
    return first_greater(x);
}

std::vector<Rational> DenominatorSet::elements_upto(const Rational& bound) const {
    if (bound.sign() < 0) throw validation_error("elements_upto bound must be nonnegative");
    std::vector<Rational> out;
    Rational e = min_element();
    while (e <= bound) {
        out.push_back(e);
        e = first_greater(e);
    }
    return out;
}

bool DenominatorSet::integer_valued() const {
    switch (kind_) {
        case Kind::Naturals:
        case Kind::Primes:
        case Kind::Polynomial: return true;  // integer coeffs, positive values
        case Kind::Arithmetic: return first_.is_integer() && step_.is_integer();
        case Kind::Geometric: return first_.is_integer() && step_.is_integer();
        case Kind::WithPrefix: {
            for (const Rational& p : prefix_)
                if (!p.is_integer()) return false;
            return tail_->integer_valued();
        }
    }
    throw std::logic_error("unreachable");
}

bool operator==(const DenominatorSet& a, const DenominatorSet& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case DenominatorSet::Kind::Naturals:
        case DenominatorSet::Kind::Primes: return true;
        case DenominatorSet::Kind::Arithmetic:
        case DenominatorSet::Kind::Geometric:
            return a.first_ == b.first_ && a.step_ == b.step_;
        case DenominatorSet::Kind::Polynomial: return a.coeffs_ == b.coeffs_;
        case DenominatorSet::Kind::WithPrefix:
            return a.prefix_ == b.prefix_ && *a.tail_ == *b.tail_;
    }
    return false;
}

std::string DenominatorSet::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Naturals: os << "naturals"; break;
        case Kind::Arithmetic: os << "arithmetic(" << first_ << "," << step_ << ")"; break;
        case Kind::Geometric: os << "geometric(" << first_ << "," << step_ << ")"; break;
        case Kind::Polynomial: {
            os << "polynomial(";
            for (std::size_t i = 0; i < coeffs_.size(); ++i)
                os << (i ? "," : "") << coeffs_[i].str();
            os << ")";
            break;
        }
        case Kind::Primes: os << "primes"; break;
        case Kind::WithPrefix: {
            os << "with-prefix(";
            for (std::size_t i = 0; i < prefix_.size(); ++i)
                os << (i ? "," : "") << prefix_[i];
            os << ";" << tail_->describe() << ")";
            break;
        }
    }
    return os.str();
}

}  // namespace egyptian
