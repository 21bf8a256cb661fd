#pragma once

// The two supported base valued fields, both with value group Z and residue
// field F_p:
//   PAdicRationals      Q with v(p) = 1
//   TAdicFunctionField  F_p(t) with v(t) = 1
// Each is a policy type: the element type plus valuation, residue and lift.

#include "minpair/core.hpp"
#include "minpair/fields.hpp"
#include "minpair/ordvals.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace minpair {

enum class BaseKind { Qp, Fpt };

class PAdicRationals {
   public:
    using elem = Rational;
    static constexpr BaseKind kind = BaseKind::Qp;
    static constexpr bool defectless = true;

    explicit PAdicRationals(std::uint64_t p) : p_(p) {
        if (!is_prime(static_cast<long long>(p))) throw Error(ErrorKind::Precondition, "p must be prime");
    }

    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t characteristic() const noexcept { return 0; }
    std::string name() const { return "Qp"; }
    friend bool operator==(const PAdicRationals& a, const PAdicRationals& b) { return a.p_ == b.p_; }

    elem zero() const { return Rational(0); }
    elem one() const { return Rational(1); }
    elem from_int(long long c) const { return Rational(c); }
    elem uniformizer() const { return Rational(static_cast<long long>(p_)); }
    elem pi_power(long long k) const {
        Rational r = power(uniformizer(), static_cast<unsigned long long>(k < 0 ? -k : k));
        return k < 0 ? inverse(r) : r;
    }

    /// ord_p; nullopt for zero.
    std::optional<long long> ord(const elem& x) const {
        if (x == 0) return std::nullopt;
        return ord_int(numer(x)) - ord_int(denom(x));
    }
    OrderedValue valuation(const elem& x) const {
        auto o = ord(x);
        return o ? OrderedValue(Rational(*o)) : OrderedValue::infinity();
    }

    Fp residue(const elem& x) const {
        auto o = ord(x);
        if (!o) return Fp(0, p_);
        if (*o < 0) throw Error(ErrorKind::Precondition, "residue of an element of negative value");
        if (*o > 0) return Fp(0, p_);
        const Integer P(p_);
        Integer n = numer(x) % P, d = denom(x) % P;
        return Fp(to_ll(n), p_) * Fp(to_ll(d), p_).inv();
    }

    elem lift(const Fp& c) const { return Rational(static_cast<long long>(c.value())); }

   private:
    long long ord_int(Integer z) const {
        long long k = 0;
        const Integer P(p_);
        while (z % P == 0) {
            z /= P;
            ++k;
        }
        return k;
    }
    std::uint64_t p_;
};

class TAdicFunctionField {
   public:
    using elem = RationalFunction<Fp>;
    static constexpr BaseKind kind = BaseKind::Fpt;
    static constexpr bool defectless = true;

    explicit TAdicFunctionField(std::uint64_t p) : p_(p) {
        if (!is_prime(static_cast<long long>(p))) throw Error(ErrorKind::Precondition, "p must be prime");
    }

    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t characteristic() const noexcept { return p_; }
    std::string name() const { return "Fpt"; }
    friend bool operator==(const TAdicFunctionField& a, const TAdicFunctionField& b) { return a.p_ == b.p_; }

    elem zero() const { return elem(Fp(0, p_)); }
    elem one() const { return from_int(1); }
    elem from_int(long long c) const { return elem(FpPoly::constant(Fp(c, p_))); }
    elem from_poly(const std::vector<long long>& coeffs) const { return elem(fp_poly(coeffs, p_)); }
    elem uniformizer() const { return elem(FpPoly::x(Fp(0, p_))); }
    elem pi_power(long long k) const {
        elem r(FpPoly::monomial(Fp(1, p_), static_cast<std::size_t>(k < 0 ? -k : k)));
        return k < 0 ? inverse(r) : r;
    }

    std::optional<long long> ord(const elem& x) const {
        if (is_zero(x)) return std::nullopt;
        return static_cast<long long>(x.num().low_order()) - static_cast<long long>(x.den().low_order());
    }
    OrderedValue valuation(const elem& x) const {
        auto o = ord(x);
        return o ? OrderedValue(Rational(*o)) : OrderedValue::infinity();
    }

    Fp residue(const elem& x) const {
        auto o = ord(x);
        if (!o) return Fp(0, p_);
        if (*o < 0) throw Error(ErrorKind::Precondition, "residue of an element of negative value");
        if (*o > 0) return Fp(0, p_);
        return x.num()[0] * x.den()[0].inv();
    }

    elem lift(const Fp& c) const { return from_int(static_cast<long long>(c.value())); }

   private:
    std::uint64_t p_;
};

template <class B>
concept BaseField = requires(const B& b, const typename B::elem& x, const Fp& c) {
    { b.valuation(x) } -> std::convertible_to<OrderedValue>;
    { b.ord(x) } -> std::convertible_to<std::optional<long long>>;
    { b.residue(x) } -> std::convertible_to<Fp>;
    { b.lift(c) } -> std::convertible_to<typename B::elem>;
    { b.pi_power(1LL) } -> std::convertible_to<typename B::elem>;
    { b.zero() } -> std::convertible_to<typename B::elem>;
};

template <BaseField B>
OrderedValue base_valuation(const B& base, const typename B::elem& x) { return base.valuation(x); }

template <BaseField B>
Fp base_residue(const B& base, const typename B::elem& x) { return base.residue(x); }

/// The value group vK = Z of either base, in the given ambient rank.
inline ValueGroup base_value_group(std::size_t rank) {
    return ValueGroup(rank, {OrderedValue(Rational(1)).embedded(rank)});
}

}  // namespace minpair
