#pragma once

// Dense univariate polynomials over an exact coefficient ring.

#include "minpair/core.hpp"

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace minpair {

template <Ring R>
class Poly {
   public:
    using coeff_type = R;

    /// The zero polynomial over the ring that `like` belongs to.
    explicit Poly(const R& like) : zero_(zero_like(like)) {}
    Poly(std::vector<R> coeffs, const R& like) : coeffs_(std::move(coeffs)), zero_(zero_like(like)) { trim(); }

    static Poly constant(const R& c) { return Poly(std::vector<R>{c}, c); }
    static Poly x(const R& like) { return monomial(one_like(like), 1); }
    static Poly monomial(const R& c, std::size_t deg) {
        std::vector<R> v(deg + 1, zero_like(c));
        v[deg] = c;
        return Poly(std::move(v), c);
    }

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const R& zero() const { return zero_; }
    R one() const { return one_like(zero_); }

    R operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : zero_; }
    const std::vector<R>& coeffs() const { return coeffs_; }
    const R& leading() const {
        if (coeffs_.empty()) throw Error(ErrorKind::Precondition, "leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == one(); }

    R eval(const R& x) const {
        R acc = zero_;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        std::vector<R> v;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(coeffs_[i] * from_int_like(zero_, static_cast<long long>(i)));
        return Poly(std::move(v), zero_);
    }

    /// Multiplication by X^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<R> v(k, zero_);
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Poly(std::move(v), zero_);
    }

    /// Number of leading zero coefficients from the low end (the X-adic order).
    std::size_t low_order() const {
        std::size_t k = 0;
        while (k < coeffs_.size() && detail::coeff_is_zero(coeffs_[k])) ++k;
        return k;
    }

    Poly operator-() const {
        auto v = coeffs_;
        for (auto& c : v) c = -c;
        return Poly(std::move(v), zero_);
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<R> v(std::max(a.coeffs_.size(), b.coeffs_.size()), a.zero_);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = v[i] + b.coeffs_[i];
        return Poly(std::move(v), a.zero_);
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.zero_);
        std::vector<R> v(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (detail::coeff_is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(v), a.zero_);
    }
    friend Poly operator*(const R& c, const Poly& a) {
        auto v = a.coeffs_;
        for (auto& x : v) x = c * x;
        return Poly(std::move(v), a.zero_);
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    std::string str(const std::string& var = "X") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long i = degree(); i >= 0; --i) {
            const R& c = coeffs_[static_cast<std::size_t>(i)];
            if (detail::coeff_is_zero(c)) continue;
            std::ostringstream cs;
            cs << c;
            std::string t = cs.str();
            const bool neg = t.size() > 1 && t[0] == '-' && t.find_first_of(" +", 1) == std::string::npos;
            if (neg) t.erase(0, 1);
            if (t.find_first_of(" +-", 0) != std::string::npos) t = "(" + t + ")";
            os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            first = false;
            if (i == 0 || t != "1") os << t << (i > 0 ? "*" : "");
            if (i > 0) os << var;
            if (i > 1) os << "^" << i;
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

   private:
    void trim() {
        while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
    R zero_;
};

template <Ring R>
Poly<R> zero_like(const Poly<R>& p) { return Poly<R>(p.zero()); }
template <Ring R>
Poly<R> one_like(const Poly<R>& p) { return Poly<R>::constant(p.one()); }
template <Ring R>
bool is_zero(const Poly<R>& p) { return p.is_zero(); }
template <Ring R>
Poly<R> from_int_like(const Poly<R>& p, long long c) { return Poly<R>::constant(from_int_like(p.zero(), c)); }

// ---------------------------------------------------------------------------
// Division

template <Field F>
struct DivMod {
    Poly<F> quot;
    Poly<F> rem;
};

template <Field F>
DivMod<F> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw Error(ErrorKind::Precondition, "polynomial division by zero");
    const F lc_inv = inverse(b.leading());
    std::vector<F> rem = a.coeffs();
    const long db = b.degree();
    const long da = a.degree();
    std::vector<F> quot(da >= db ? static_cast<std::size_t>(da - db + 1) : 0, a.zero());
    for (long i = da; i >= db; --i) {
        const F& top = rem[static_cast<std::size_t>(i)];
        if (is_zero(top)) continue;
        F q = top * lc_inv;
        quot[static_cast<std::size_t>(i - db)] = q;
        for (long k = 0; k <= db; ++k) {
            auto idx = static_cast<std::size_t>(i - db + k);
            rem[idx] = rem[idx] - q * b[static_cast<std::size_t>(k)];
        }
    }
    rem.resize(static_cast<std::size_t>(std::max<long>(db, 0)), a.zero());
    return {Poly<F>(std::move(quot), a.zero()), Poly<F>(std::move(rem), a.zero())};
}

template <Field F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) { return divmod(a, b).rem; }

template <Field F>
Poly<F> monic(const Poly<F>& a) {
    if (a.is_zero()) return a;
    return inverse(a.leading()) * a;
}

template <Field F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

template <Field F>
struct ExtGcd {
    Poly<F> g, s, t;  // s*a + t*b = g, g monic
};

template <Field F>
ExtGcd<F> ext_gcd(Poly<F> a, Poly<F> b) {
    Poly<F> s0 = Poly<F>::constant(a.one()), s1(a.zero());
    Poly<F> t0(a.zero()), t1 = Poly<F>::constant(a.one());
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        auto s2 = s0 - q * s1;
        auto t2 = t0 - q * t1;
        s0 = std::move(s1), s1 = std::move(s2);
        t0 = std::move(t1), t1 = std::move(t2);
    }
    if (a.is_zero()) return {a, s0, t0};
    F inv = inverse(a.leading());
    return {inv * a, inv * s0, inv * t0};
}

/// Exact division of polynomials over a field; throws if the remainder is nonzero.
template <Field F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(ErrorKind::InternalConsistency, "inexact polynomial division");
    return q;
}

/// lc(b)^(deg a - deg b + 1) * a  mod b, using ring operations only.
template <Ring R>
Poly<R> pseudo_remainder(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw Error(ErrorKind::Precondition, "pseudo-division by zero");
    const long db = b.degree();
    long da = a.degree();
    if (da < db) return a;
    const R lc = b.leading();
    std::vector<R> rem = a.coeffs();
    for (long i = da; i >= db; --i) {
        R top = rem[static_cast<std::size_t>(i)];
        for (auto& c : rem) c = c * lc;
        if (is_zero(top)) continue;
        for (long k = 0; k <= db; ++k) {
            auto idx = static_cast<std::size_t>(i - db + k);
            rem[idx] = rem[idx] - top * b[static_cast<std::size_t>(k)];
        }
    }
    rem.resize(static_cast<std::size_t>(db), a.zero());
    return Poly<R>(std::move(rem), a.zero());
}

template <Ring R>
Poly<R> divide_coeffs(const Poly<R>& a, const R& d) {
    std::vector<R> v;
    for (const auto& c : a.coeffs()) v.push_back(exact_div(c, d));
    return Poly<R>(std::move(v), a.zero());
}

/// Resultant by the subresultant pseudo-remainder sequence.  Works over any
/// integral domain providing exact_div.
template <Ring R>
R resultant(Poly<R> a, Poly<R> b) {
    if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::Precondition, "resultant of two zero polynomials");
    if (a.is_zero() || b.is_zero()) return a.zero();
    const R one = a.one();
    R s = one;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
    }
    if (b.degree() == 0) return s * power(b.leading(), static_cast<unsigned long long>(a.degree()));
    R g = one, h = one;
    for (;;) {
        const long delta = a.degree() - b.degree();
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
        Poly<R> r = pseudo_remainder(a, b);
        a = std::move(b);
        b = divide_coeffs(r, g * power(h, static_cast<unsigned long long>(delta)));
        g = a.leading();
        // h <- h^(1-delta) g^delta
        if (delta == 0) {
            // h unchanged
        } else {
            h = exact_div(power(g, static_cast<unsigned long long>(delta)), power(h, static_cast<unsigned long long>(delta - 1)));
        }
        if (b.is_zero()) return a.zero();
        if (b.degree() == 0) break;
    }
    const long da = a.degree();
    // h <- lc(b)^deg(a) * h^(1 - deg a)
    R lb = b.leading();
    R res = exact_div(power(lb, static_cast<unsigned long long>(da)), power(h, static_cast<unsigned long long>(da - 1)));
    return s * res;
}

/// Coefficients c_i of f = sum c_i (X - a)^i, i.e. the coefficients of f(Y + a).
template <Ring R>
Poly<R> taylor_shift(const Poly<R>& f, const R& a) {
    std::vector<R> c = f.coeffs();
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t k = n - 1; k-- > i;) c[k] = c[k] + a * c[k + 1];
    return Poly<R>(std::move(c), a);
}

/// f(g) mod m.
template <Field F>
Poly<F> compose_mod(const Poly<F>& f, const Poly<F>& g, const Poly<F>& m) {
    if (!m.is_monic()) throw Error(ErrorKind::Precondition, "compose_mod needs a monic modulus");
    Poly<F> acc(f.zero());
    const Poly<F> gm = g % m;
    for (long i = f.degree(); i >= 0; --i) acc = (acc * gm + Poly<F>::constant(f[static_cast<std::size_t>(i)])) % m;
    return acc;
}

/// f(g) without reduction.
template <Ring R>
Poly<R> compose(const Poly<R>& f, const Poly<R>& g) {
    Poly<R> acc(f.zero());
    for (long i = f.degree(); i >= 0; --i) acc = acc * g + Poly<R>::constant(f[static_cast<std::size_t>(i)]);
    return acc;
}

}  // namespace minpair
