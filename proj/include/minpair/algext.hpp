#pragma once

// Algebraic elements a over a base field K, restricted to the class where the
// base valuation provably extends uniquely to K(a) with ef = [K(a):K]:
// polynomials with a one-sided Newton polygon whose residual polynomial is
// irreducible (Ore-regular of level one).  Purely inseparable binomials over
// F_p(t) belong to this class when v(c) is prime to p.
//
// Valuations on K(a) come from the norm: v(g(a)) = v(Res(Q, g)) / n.

#include "minpair/basefield.hpp"
#include "minpair/fields.hpp"
#include "minpair/newton.hpp"
#include "minpair/ordvals.hpp"
#include "minpair/poly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace minpair {

struct OreCertificate {
    std::vector<Segment> polygon;
    long e = 1;
    long f = 1;
    long h = 0;             // v(a) = h / e
    FpPoly residual;        // monic irreducible of degree f over F_p
    bool inseparable = false;
    long inseparable_degree = 1;

    OreCertificate() : residual(Fp(0, 2)) {}
};

using DistanceMultiset = std::vector<ValueMultiplicity>;

inline long total_multiplicity(const DistanceMultiset& d) {
    long n = 0;
    for (const auto& x : d) n += x.mult;
    return n;
}

/// Sorts by decreasing value and merges equal values.
inline DistanceMultiset normalize_multiset(DistanceMultiset d) {
    std::sort(d.begin(), d.end(), [](const auto& a, const auto& b) { return b.value < a.value; });
    DistanceMultiset out;
    for (auto& x : d) {
        if (!out.empty() && out.back().value == x.value) out.back().mult += x.mult;
        else out.push_back(std::move(x));
    }
    return out;
}

inline std::string multiset_str(const DistanceMultiset& d) {
    std::string s = "{";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + d[i].value.str() + " x" + std::to_string(d[i].mult);
    return s + "}";
}

template <BaseField B>
class AlgebraicElement {
   public:
    using K = typename B::elem;
    using KPoly = Poly<K>;
    using KA = QElem<K>;

    const B& base() const { return base_; }
    const KPoly& minpoly() const { return Q_; }
    long degree() const { return Q_.degree(); }
    const OreCertificate& certificate() const { return cert_; }
    const std::shared_ptr<const QuotientRing<K>>& ring() const { return ring_; }
    const std::shared_ptr<const QuotientRing<Fp>>& residue_field() const { return residue_field_; }
    bool is_inseparable() const { return cert_.inseparable; }

    /// v(a); infinite only for a = 0.
    OrderedValue value() const { return value_; }

    /// vK(a) = (1/e) Z in the requested ambient rank.
    ValueGroup value_group(std::size_t rank = 1) const {
        return ValueGroup(rank, {OrderedValue(Rational(1, cert_.e)).embedded(rank)});
    }

    KA generator() const { return KA::generator(ring_); }
    KA embed(const K& c) const { return KA::from_base(c, ring_); }
    KA element(const KPoly& g) const { return KA(g, ring_); }
    Poly<KA> lift_poly(const KPoly& g) const { return lift_to(g, ring_); }

    /// v(g(a)) for a polynomial of degree < n.
    OrderedValue valuation(const KPoly& g) const {
        if (g.degree() >= degree())
            throw Error(ErrorKind::Precondition, "elem_valuation needs deg g < deg Q; reduce first");
        if (g.is_zero()) return OrderedValue::infinity();
        K r = resultant(Q_, g);
        auto o = base_.ord(r);
        if (!o) throw Error(ErrorKind::InternalConsistency, "zero norm of a nonzero element");
        return OrderedValue(Rational(*o, degree()));
    }
    OrderedValue valuation(const KA& x) const { return valuation(x.rep()); }

    Fq lift_source_zero() const { return Fq(FpPoly(Fp(0, base_.p())), residue_field_); }

    /// Lift of a residue class: y maps to the unit a^e / pi^h when f > 1.
    KA lift(const Fq& c) const {
        KA acc = embed(base_.zero());
        const auto& coeffs = c.rep().coeffs();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (is_zero(coeffs[k])) continue;
            acc = acc + embed(base_.lift(coeffs[k])) * unit_powers_.at(k);
        }
        return acc;
    }

    /// Residue of x with v(x) >= 0, by search over the residue field.
    Fq residue(const KA& x) const {
        OrderedValue vx = valuation(x);
        const OrderedValue zero = OrderedValue::zero(1);
        if (vx < zero) throw Error(ErrorKind::Precondition, "residue of an element of negative value " + vx.str());
        if (vx > zero) return lift_source_zero();
        for (const auto& c : residue_elements_)
            if (valuation(x - lift(c)) > zero) return c;
        throw Error(ErrorKind::InternalConsistency, "no residue class found; certification is inconsistent");
    }

    const DistanceMultiset& distances() const { return distances_; }

    /// A monomial c X^m (m < e) with v(c a^m) = delta, for delta in vK(a).
    KPoly monomial_with_value(const OrderedValue& delta) const {
        if (delta.is_infinite() || delta.rank() != 1) throw Error(ErrorKind::Precondition, "monomial target must be finite rank 1");
        const Rational d = delta[0];
        if (value_.is_infinite()) {
            if (denom(d) != 1) throw Error(ErrorKind::Precondition, "target not in vK(a)");
            return KPoly::constant(base_.pi_power(to_ll(numer(d))));
        }
        for (long m = 0; m < cert_.e; ++m) {
            Rational vc = d - Rational(m) * value_[0];
            if (denom(vc) == 1) return KPoly::monomial(base_.pi_power(to_ll(numer(vc))), static_cast<std::size_t>(m));
        }
        throw Error(ErrorKind::Precondition, "value " + delta.str() + " is not in vK(a)");
    }

    template <BaseField BB>
    friend AlgebraicElement<BB> certify(const BB& base, const Poly<typename BB::elem>& Q);

   private:
    AlgebraicElement(B base, KPoly Q) : base_(std::move(base)), Q_(std::move(Q)), residue_field_(nullptr) {}

    void build_distances();

    B base_;
    KPoly Q_;
    OreCertificate cert_;
    OrderedValue value_;
    std::shared_ptr<const QuotientRing<K>> ring_;
    std::shared_ptr<const QuotientRing<Fp>> residue_field_;
    std::vector<KA> unit_powers_;
    std::vector<Fq> residue_elements_;
    DistanceMultiset distances_;
};

namespace detail {

template <class K>
bool is_binomial(const Poly<K>& Q) {
    for (long i = 1; i < Q.degree(); ++i)
        if (!is_zero(Q[static_cast<std::size_t>(i)])) return false;
    return true;
}

inline bool is_power_of(long n, long p) {
    if (n < 1) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace detail

/// Certifies unique extension and ef = n; throws ErrorKind::Certification otherwise.
template <BaseField B>
AlgebraicElement<B> certify(const B& base, const Poly<typename B::elem>& Q) {
    using K = typename B::elem;
    if (Q.degree() < 1) throw Error(ErrorKind::Certification, "minimal polynomial must have degree >= 1");
    if (!Q.is_monic()) throw Error(ErrorKind::Certification, "minimal polynomial must be monic");
    const long n = Q.degree();
    const auto p = base.p();
    AlgebraicElement<B> a(base, Q);
    OreCertificate& cert = a.cert_;

    std::vector<OrderedValue> values;
    for (long i = 0; i <= n; ++i) values.push_back(base.valuation(Q[static_cast<std::size_t>(i)]));

    if (n == 1) {
        cert.e = cert.f = 1;
        a.value_ = values[0];
        cert.h = values[0].is_finite() ? to_ll(numer(values[0][0])) : 0;
        if (values[0].is_finite()) cert.polygon = newton_polygon(values);
        cert.residual = fp_poly({0, 1}, p);
    } else {
        if (is_zero(Q[0])) throw Error(ErrorKind::Certification, "reducible: X divides " + Q.str());
        cert.polygon = newton_polygon(values);
        if (cert.polygon.size() != 1)
            throw Error(ErrorKind::Certification,
                        "extension not certified unique: Newton polygon " + polygon_str(cert.polygon) + " has several slopes");
        const Rational va = values[0][0] / Rational(n);  // value of every root
        cert.e = to_ll(denom(va));
        cert.h = to_ll(numer(va));
        cert.f = n / cert.e;
        a.value_ = OrderedValue(va);
        // residual polynomial R(y) = sum_k res(q_{n-ke} / pi^{kh}) y^{f-k}
        std::vector<Fp> r(static_cast<std::size_t>(cert.f + 1), Fp(0, p));
        for (long k = 0; k <= cert.f; ++k) {
            const K& qi = Q[static_cast<std::size_t>(n - k * cert.e)];
            r[static_cast<std::size_t>(cert.f - k)] = base.residue(qi * base.pi_power(-k * cert.h));
        }
        cert.residual = FpPoly(std::move(r), Fp(0, p));
        if (!cert.residual.is_monic() || cert.residual.degree() != cert.f)
            throw Error(ErrorKind::InternalConsistency, "residual polynomial has wrong shape");
        if (!is_irreducible(cert.residual))
            throw Error(ErrorKind::Certification, "extension not certified unique: residual polynomial " +
                                                      cert.residual.str("y") + " is reducible; polygon " +
                                                      polygon_str(cert.polygon));
    }
    long field_size = 1;
    for (long i = 0; i < cert.f; ++i) field_size *= static_cast<long>(p);
    if (field_size > 64) throw Error(ErrorKind::Certification, "residue field of size " + std::to_string(field_size) + " exceeds 64");

    if (base.characteristic() != 0 && Q.derivative().is_zero()) {
        if (!detail::is_binomial(Q) || !detail::is_power_of(n, static_cast<long>(p)))
            throw Error(ErrorKind::Certification, "inseparable polynomial that is not a binomial X^(p^m) - c");
        cert.inseparable = true;
        cert.inseparable_degree = n;
    }
    if (cert.e * cert.f != n) throw Error(ErrorKind::InternalConsistency, "ef != n");

    a.ring_ = std::make_shared<const QuotientRing<K>>(QuotientRing<K>{Q, "a"});
    a.residue_field_ = make_finite_field(cert.f == 1 ? fp_poly({0, 1}, p) : cert.residual, "y");
    // powers of the unit u = a^e / pi^h
    {
        auto u = cert.f == 1 ? a.embed(base.one()) : power(a.generator(), static_cast<unsigned long long>(cert.e)) * a.embed(base.pi_power(-cert.h));
        auto acc = a.embed(base.one());
        for (long k = 0; k < std::max<long>(cert.f, 1); ++k) {
            a.unit_powers_.push_back(acc);
            acc = acc * u;
        }
    }
    a.residue_elements_ = enumerate_field(a.residue_field_);
    a.build_distances();
    return a;
}

template <BaseField B>
void AlgebraicElement<B>::build_distances() {
    // Q(a + Y) = prod (Y - (a_i - a)); the zero roots are a itself and its
    // inseparable copies, the rest are read off the Newton polygon in Y.
    auto shifted = taylor_shift(lift_poly(Q_), generator());
    const auto m = static_cast<long>(shifted.low_order());
    if (m != cert_.inseparable_degree)
        throw Error(ErrorKind::InternalConsistency, "multiplicity of a as a root of Q is " + std::to_string(m));
    DistanceMultiset d{{OrderedValue::infinity(), m}};
    if (shifted.degree() > m) {
        std::vector<OrderedValue> values;
        for (long i = m; i <= shifted.degree(); ++i) values.push_back(valuation(shifted[static_cast<std::size_t>(i)]));
        for (auto& rv : root_values(newton_polygon(values))) d.push_back(std::move(rv));
    }
    distances_ = normalize_multiset(std::move(d));
    if (total_multiplicity(distances_) != degree()) throw Error(ErrorKind::InternalConsistency, "distance multiset has wrong size");
}

template <BaseField B>
OrderedValue elem_valuation(const AlgebraicElement<B>& a, const Poly<typename B::elem>& g) { return a.valuation(g); }

template <BaseField B>
Fq elem_residue(const AlgebraicElement<B>& a, const QElem<typename B::elem>& x) { return a.residue(x); }

template <BaseField B>
const DistanceMultiset& conjugate_distances(const AlgebraicElement<B>& a) { return a.distances(); }

/// Largest finite v(a - sigma a); nullopt when a has no other separable conjugate.
template <BaseField B>
std::optional<OrderedValue> kras(const AlgebraicElement<B>& a) {
    std::optional<OrderedValue> best;
    for (const auto& d : a.distances())
        if (d.value.is_finite() && (!best || *best < d.value)) best = d.value;
    return best;
}

/// Multiset {v(b_k - a_i)} over all roots a_i of Qa and b_k of Qb, read from
/// the Newton polygon in Z of Res_Y(Qa(Y), Qb(Y + Z)).
template <BaseField B>
DistanceMultiset cross_distances(const B& base, const Poly<typename B::elem>& Qa, const Poly<typename B::elem>& Qb) {
    using K = typename B::elem;
    using KZ = Poly<K>;
    const K z0 = base.zero();
    const KZ Z = KZ::x(z0);
    auto constants = [&](const Poly<K>& f) {
        std::vector<KZ> v;
        for (const auto& c : f.coeffs()) v.push_back(KZ::constant(c));
        return Poly<KZ>(std::move(v), KZ(z0));
    };
    Poly<KZ> A = constants(Qa);
    Poly<KZ> Bz = taylor_shift(constants(Qb), Z);
    KZ res = resultant(A, Bz);
    if (res.is_zero()) throw Error(ErrorKind::InternalConsistency, "cross resultant vanished identically");
    const auto m = static_cast<long>(res.low_order());
    DistanceMultiset d;
    if (m > 0) d.push_back({OrderedValue::infinity(), m});
    if (res.degree() > m) {
        std::vector<OrderedValue> values;
        for (long i = m; i <= res.degree(); ++i) values.push_back(base.valuation(res[static_cast<std::size_t>(i)]));
        for (auto& rv : root_values(newton_polygon(values))) d.push_back(std::move(rv));
    }
    return normalize_multiset(std::move(d));
}

}  // namespace minpair
