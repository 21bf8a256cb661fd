#pragma once

// Coefficient domains beyond the rationals: prime fields, quotient rings
// F[X]/(m) with m irreducible (so they are fields), and rational functions
// over a field.

#include "minpair/core.hpp"
#include "minpair/poly.hpp"

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace minpair {

// ---------------------------------------------------------------------------
// Prime field F_p

class Fp {
   public:
    Fp() = default;
    Fp(long long value, std::uint64_t p) : p_(p) {
        if (p < 2) throw Error(ErrorKind::Precondition, "prime field needs p >= 2");
        long long r = value % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        v_ = static_cast<std::uint64_t>(r);
    }

    std::uint64_t value() const noexcept { return v_; }
    std::uint64_t prime() const noexcept { return p_; }

    friend Fp operator+(Fp a, Fp b) { return Fp::raw((a.v_ + b.v_) % a.p_, a.p_); }
    friend Fp operator-(Fp a, Fp b) { return Fp::raw((a.v_ + a.p_ - b.v_) % a.p_, a.p_); }
    friend Fp operator*(Fp a, Fp b) { return Fp::raw((a.v_ * b.v_) % a.p_, a.p_); }
    friend Fp operator-(Fp a) { return Fp::raw((a.p_ - a.v_) % a.p_, a.p_); }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

    Fp inv() const {
        if (v_ == 0) throw Error(ErrorKind::Precondition, "inverse of zero in F_p");
        // Fermat
        std::uint64_t e = p_ - 2, b = v_, acc = 1;
        while (e) {
            if (e & 1) acc = acc * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return raw(acc, p_);
    }

   private:
    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp x;
        x.v_ = v;
        x.p_ = p;
        return x;
    }
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 2;
};

inline Fp zero_like(const Fp& a) { return Fp(0, a.prime()); }
inline Fp one_like(const Fp& a) { return Fp(1, a.prime()); }
inline bool is_zero(const Fp& a) { return a.value() == 0; }
inline Fp inverse(const Fp& a) { return a.inv(); }
inline Fp from_int_like(const Fp& a, long long c) { return Fp(c, a.prime()); }

using FpPoly = Poly<Fp>;

inline FpPoly fp_poly(const std::vector<long long>& coeffs, std::uint64_t p) {
    std::vector<Fp> v;
    for (auto c : coeffs) v.emplace_back(c, p);
    return FpPoly(std::move(v), Fp(0, p));
}

/// X^(p^k) mod m by repeated p-th powering.
inline FpPoly frobenius_power(const FpPoly& m, std::size_t k) {
    const Fp z = m.zero();
    FpPoly x = FpPoly::x(z) % m;
    for (std::size_t i = 0; i < k; ++i) {
        FpPoly base = x, acc = FpPoly::constant(one_like(z));
        std::uint64_t e = z.prime();
        while (e) {
            if (e & 1) acc = (acc * base) % m;
            base = (base * base) % m;
            e >>= 1;
        }
        x = acc;
    }
    return x;
}

/// Ben-Or irreducibility test over F_p.
inline bool is_irreducible(const FpPoly& m) {
    if (m.degree() < 1) return false;
    if (m.degree() == 1) return true;
    const FpPoly x = FpPoly::x(m.zero());
    for (long k = 1; 2 * k <= m.degree(); ++k) {
        FpPoly g = gcd(m, frobenius_power(m, static_cast<std::size_t>(k)) - x);
        if (g.degree() > 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Quotient ring F[X]/(m)

template <Field F>
struct QuotientRing {
    Poly<F> modulus;
    std::string var = "a";
};

template <Field F>
class QElem {
   public:
    using ring_type = QuotientRing<F>;

    QElem(Poly<F> rep, std::shared_ptr<const ring_type> ring) : rep_(std::move(rep)), ring_(std::move(ring)) {
        if (rep_.degree() >= ring_->modulus.degree()) rep_ = rep_ % ring_->modulus;
    }

    static QElem from_base(const F& c, std::shared_ptr<const ring_type> ring) {
        return QElem(Poly<F>::constant(c), std::move(ring));
    }
    /// The image of X (the adjoined root).
    static QElem generator(std::shared_ptr<const ring_type> ring) {
        const auto& z = ring->modulus.zero();
        return QElem(Poly<F>::x(z), std::move(ring));
    }

    const Poly<F>& rep() const { return rep_; }
    const std::shared_ptr<const ring_type>& ring() const { return ring_; }

    friend QElem operator+(const QElem& a, const QElem& b) { return QElem(a.rep_ + b.rep_, a.ring_, 0); }
    friend QElem operator-(const QElem& a, const QElem& b) { return QElem(a.rep_ - b.rep_, a.ring_, 0); }
    friend QElem operator-(const QElem& a) { return QElem(-a.rep_, a.ring_, 0); }
    friend QElem operator*(const QElem& a, const QElem& b) { return QElem(a.rep_ * b.rep_, a.ring_); }
    friend bool operator==(const QElem& a, const QElem& b) { return a.rep_ == b.rep_; }
    friend std::ostream& operator<<(std::ostream& os, const QElem& a) { return os << a.rep_.str(a.ring_->var); }

    QElem inv() const {
        if (rep_.is_zero()) throw Error(ErrorKind::Precondition, "inverse of zero in quotient ring");
        auto eg = ext_gcd(rep_, ring_->modulus);
        if (eg.g.degree() != 0) throw Error(ErrorKind::Precondition, "quotient modulus is not irreducible: element is a zero divisor");
        return QElem(eg.s, ring_);
    }

   private:
    // Sums never raise degree; skip the reduction.
    QElem(Poly<F> rep, std::shared_ptr<const ring_type> ring, int) : rep_(std::move(rep)), ring_(std::move(ring)) {}

    Poly<F> rep_;
    std::shared_ptr<const ring_type> ring_;
};

template <Field F>
QElem<F> zero_like(const QElem<F>& a) { return QElem<F>(Poly<F>(a.rep().zero()), a.ring()); }
template <Field F>
QElem<F> one_like(const QElem<F>& a) { return QElem<F>(Poly<F>::constant(a.rep().one()), a.ring()); }
template <Field F>
bool is_zero(const QElem<F>& a) { return a.rep().is_zero(); }
template <Field F>
QElem<F> inverse(const QElem<F>& a) { return a.inv(); }
template <Field F>
QElem<F> from_int_like(const QElem<F>& a, long long c) {
    return QElem<F>(Poly<F>::constant(from_int_like(a.rep().zero(), c)), a.ring());
}

/// Embeds a polynomial over F into polynomials over F[X]/(m).
template <Field F>
Poly<QElem<F>> lift_to(const Poly<F>& f, const std::shared_ptr<const QuotientRing<F>>& ring) {
    std::vector<QElem<F>> v;
    for (const auto& c : f.coeffs()) v.push_back(QElem<F>::from_base(c, ring));
    return Poly<QElem<F>>(std::move(v), QElem<F>::from_base(f.zero(), ring));
}

using Fq = QElem<Fp>;

/// F_p[y]/(m), m checked irreducible.
inline std::shared_ptr<const QuotientRing<Fp>> make_finite_field(const FpPoly& modulus, std::string var = "y") {
    if (!modulus.is_monic()) throw Error(ErrorKind::Precondition, "finite field modulus must be monic");
    if (!is_irreducible(modulus)) throw Error(ErrorKind::Certification, "modulus " + modulus.str() + " is reducible over F_p");
    return std::make_shared<const QuotientRing<Fp>>(QuotientRing<Fp>{modulus, std::move(var)});
}

/// All elements of F_p[y]/(m) in lexicographic coefficient order.
inline std::vector<Fq> enumerate_field(const std::shared_ptr<const QuotientRing<Fp>>& ring) {
    const auto p = ring->modulus.zero().prime();
    const auto f = static_cast<std::size_t>(ring->modulus.degree());
    std::size_t total = 1;
    for (std::size_t i = 0; i < f; ++i) total *= p;
    std::vector<Fq> out;
    out.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<long long> digits;
        std::size_t r = idx;
        for (std::size_t i = 0; i < f; ++i) {
            digits.push_back(static_cast<long long>(r % p));
            r /= p;
        }
        out.emplace_back(fp_poly(digits, p), ring);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rational functions over a field, kept reduced with monic denominator.

template <Field F>
class RationalFunction {
   public:
    explicit RationalFunction(const F& like) : num_(like), den_(Poly<F>::constant(one_like(like))) {}
    explicit RationalFunction(Poly<F> num) : num_(std::move(num)), den_(Poly<F>::constant(num_.one())) {}
    RationalFunction(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }

    /// max(deg num, deg den): the degree of the field extension F(t) / F(r).
    long degree() const { return std::max(num_.degree(), den_.degree()); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_, 0); }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r) {
        if (r.den_.degree() == 0 && r.den_ == Poly<F>::constant(r.den_.one())) return os << r.num_.str("t");
        auto wrap = [](std::string x) { return x.find(' ') == std::string::npos ? x : "(" + x + ")"; };
        return os << wrap(r.num_.str("t")) << "/" << wrap(r.den_.str("t"));
    }

    RationalFunction inv() const {
        if (num_.is_zero()) throw Error(ErrorKind::Precondition, "inverse of zero rational function");
        return RationalFunction(den_, num_);
    }

    F eval_at_zero_num() const { return num_[0]; }
    F eval_at_zero_den() const { return den_[0]; }

   private:
    RationalFunction(Poly<F> num, Poly<F> den, int) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_.is_zero()) throw Error(ErrorKind::Precondition, "rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<F>::constant(num_.one());
            return;
        }
        auto g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        F lc = inverse(den_.leading());
        num_ = lc * num_;
        den_ = lc * den_;
    }

    Poly<F> num_;
    Poly<F> den_;
};

template <Field F>
RationalFunction<F> zero_like(const RationalFunction<F>& a) { return RationalFunction<F>(a.num().zero()); }
template <Field F>
RationalFunction<F> one_like(const RationalFunction<F>& a) { return RationalFunction<F>(Poly<F>::constant(a.num().one())); }
template <Field F>
bool is_zero(const RationalFunction<F>& a) { return a.num().is_zero(); }
template <Field F>
RationalFunction<F> inverse(const RationalFunction<F>& a) { return a.inv(); }
template <Field F>
RationalFunction<F> from_int_like(const RationalFunction<F>& a, long long c) {
    return RationalFunction<F>(Poly<F>::constant(from_int_like(a.num().zero(), c)));
}

}  // namespace minpair
