#pragma once

#include "sl2comod/rational.hpp"

#include <stdexcept>
#include <string>

namespace sl2comod {

enum class RingKind { Integers, Rationals, LocalizedAtPrime, InvertedInteger };

// A base ring A with Z <= A <= Q: the integers, the rationals, the local ring
// Z_(p) of fractions with denominator prime to p, or Z[1/m] where exactly the
// primes dividing m are inverted. Elements are represented as exact rationals;
// the ring decides membership and invertibility.
class BaseRing {
  public:
    static BaseRing integers() { return BaseRing(RingKind::Integers, 0); }
    static BaseRing rationals() { return BaseRing(RingKind::Rationals, 0); }

    static BaseRing localized_at_prime(const Int& p) {
        if (!is_prime(p)) throw std::invalid_argument("localized_at_prime: " + p.str() + " is not prime");
        return BaseRing(RingKind::LocalizedAtPrime, p);
    }

    static BaseRing inverted_integer(const Int& m) {
        if (m < 2) throw std::invalid_argument("inverted_integer: m must be >= 2");
        return BaseRing(RingKind::InvertedInteger, m);
    }

    RingKind kind() const noexcept { return kind_; }

    // The prime p for Z_(p), or the inverted integer m for Z[1/m].
    const Int& parameter() const noexcept { return param_; }

    // Membership of an exact rational in the ring.
    bool contains(const Rational& q) const {
        switch (kind_) {
            case RingKind::Integers: return is_integer(q);
            case RingKind::Rationals: return true;
            case RingKind::LocalizedAtPrime: return den(q) % param_ != 0;
            case RingKind::InvertedInteger: return supported_on_param(den(q));
        }
        throw std::logic_error("BaseRing::contains: bad kind");
    }

    bool is_unit(const Rational& q) const {
        if (q == 0 || !contains(q)) return false;
        return contains(Rational(1) / q);
    }

    bool is_field() const noexcept { return kind_ == RingKind::Rationals; }

    // True when the identity map Q -> Q restricts to a ring map *this -> other,
    // i.e. *this is a subring of other. This is the existence test for
    // canonical base change.
    bool subring_of(const BaseRing& other) const {
        switch (kind_) {
            case RingKind::Integers: return true;
            case RingKind::Rationals: return other.kind_ == RingKind::Rationals;
            case RingKind::LocalizedAtPrime:
                return other.kind_ == RingKind::Rationals ||
                       (other.kind_ == RingKind::LocalizedAtPrime && other.param_ == param_);
            case RingKind::InvertedInteger:
                switch (other.kind_) {
                    case RingKind::Rationals: return true;
                    case RingKind::InvertedInteger: return other.supported_on_param(param_);
                    case RingKind::LocalizedAtPrime: return param_ % other.param_ != 0;
                    case RingKind::Integers: return false;
                }
        }
        throw std::logic_error("BaseRing::subring_of: bad kind");
    }

    bool operator==(const BaseRing& o) const noexcept { return kind_ == o.kind_ && param_ == o.param_; }
    bool operator!=(const BaseRing& o) const noexcept { return !(*this == o); }

    std::string name() const {
        switch (kind_) {
            case RingKind::Integers: return "Z";
            case RingKind::Rationals: return "Q";
            case RingKind::LocalizedAtPrime: return "Z_(" + param_.str() + ")";
            case RingKind::InvertedInteger: return "Z[1/" + param_.str() + "]";
        }
        throw std::logic_error("BaseRing::name: bad kind");
    }

    static bool is_prime(const Int& p) {
        if (p < 2) return false;
        if (p < 4) return true;
        if (p % 2 == 0) return false;
        for (Int d = 3; d * d <= p; d += 2)
            if (p % d == 0) return false;
        return true;
    }

  private:
    BaseRing(RingKind kind, Int param) : kind_(kind), param_(std::move(param)) {}

    // True iff every prime factor of n divides param_ (no factorization needed:
    // repeatedly strip common factors with param_).
    bool supported_on_param(Int n) const {
        n = abs_int(n);
        if (n == 0) return false;
        while (n != 1) {
            Int g = sl2comod::gcd(n, param_);
            if (g == 1) return false;
            while (n % g == 0) n /= g;
        }
        return true;
    }

    RingKind kind_;
    Int param_;
};

}  // namespace sl2comod
