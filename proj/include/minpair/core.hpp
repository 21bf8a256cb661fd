#pragma once

// Exact number types, the ring/field protocol used by every polynomial
// template, and the structured error type thrown across the library.

#include <boost/multiprecision/gmp.hpp>

#include <concepts>
#include <cstdint>
#include <regex>
#include <stdexcept>
#include <string>
#include <utility>

namespace minpair {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

enum class ErrorKind {
    Parse,
    RankMismatch,
    DomainMismatch,
    NotSubgroup,
    Certification,
    Precondition,
    InternalConsistency,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse: return "parse";
        case ErrorKind::RankMismatch: return "rank_mismatch";
        case ErrorKind::DomainMismatch: return "domain_mismatch";
        case ErrorKind::NotSubgroup: return "not_subgroup";
        case ErrorKind::Certification: return "certification";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::InternalConsistency: return "internal_consistency";
    }
    return "unknown";
}

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

// ---------------------------------------------------------------------------
// Ring protocol.  Elements may carry runtime context (a prime, a modulus), so
// constants are always produced "like" an existing element.

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& x) { return x == 0; }
inline Rational inverse(const Rational& x) {
    if (x == 0) throw Error(ErrorKind::Precondition, "division by zero");
    return Rational(1) / x;
}
inline Rational from_int_like(const Rational&, long long c) { return Rational(c); }

namespace detail {
// Lets classes with an is_zero() member reach the free function through ADL.
template <class R>
bool coeff_is_zero(const R& x) { return is_zero(x); }
}  // namespace detail

template <class R>
concept Ring = requires(const R& a, const R& b, long long c) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { zero_like(a) } -> std::convertible_to<R>;
    { one_like(a) } -> std::convertible_to<R>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { from_int_like(a, c) } -> std::convertible_to<R>;
};

template <class F>
concept Field = Ring<F> && requires(const F& a) {
    { inverse(a) } -> std::convertible_to<F>;
};

template <Field F>
F exact_div(const F& a, const F& b) {
    return a * inverse(b);
}

template <Ring R>
R power(R base, unsigned long long e) {
    R acc = one_like(base);
    while (e > 0) {
        if (e & 1ULL) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Rational helpers

inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Integer parse_integer(const std::string& s) {
    static const std::regex re(R"(^\s*[+-]?\d+\s*$)");
    if (!std::regex_match(s, re)) throw Error(ErrorKind::Parse, "not an integer: '" + s + "'");
    std::string t;
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '+') t.push_back(c);
    return Integer(t);
}

/// Parses "a", "-a" or "a/b".  Zero denominators are rejected.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    Integer n = parse_integer(s.substr(0, slash));
    Integer d = parse_integer(s.substr(slash + 1));
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
    return Rational(n, d);
}

inline std::string format_rational(const Rational& r) {
    if (denom(r) == 1) return numer(r).str();
    return numer(r).str() + "/" + denom(r).str();
}

inline Integer floor_div(const Rational& r) {
    Integer n = numer(r), d = denom(r);
    Integer q = n / d;
    if (q * d != n && n < 0) q -= 1;
    return q;
}

inline Integer ceil_div(const Rational& r) { return -floor_div(-r); }

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

inline long long to_ll(const Integer& z) { return z.convert_to<long long>(); }

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace minpair
