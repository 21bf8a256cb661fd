#pragma once

// The valuation v_{a,gamma} on K[X] and K(X) attached to a pair (a, gamma),
// its value groups and residue field.
//
// Residues are taken in K(a)v(t) with t the residue of f(X)(X - a)^E, where f
// has degree < n and v f = -E gamma.  A v-unit N/D is reduced by expanding
// both in powers of (X - a), keeping the terms of minimal value, and using
// (X - a)^E = t / f(a) on the graded level.

#include "minpair/minpair.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace minpair {

struct GradedResidue {
    RationalFunction<Fq> value;

    long degree() const { return value.degree(); }
    bool is_constant() const { return value.degree() <= 0; }
    std::string str() const {
        std::ostringstream os;
        os << "(" << value.num().str("t") << ")/(" << value.den().str("t") << ")";
        return os.str();
    }
    friend bool operator==(const GradedResidue&, const GradedResidue&) = default;
    friend GradedResidue operator*(const GradedResidue& a, const GradedResidue& b) { return {a.value * b.value}; }
};

struct ValueGroups {
    ValueGroup vKX;
    ValueGroup vKaX;
    Integer lambda;
};

template <BaseField B>
class GaussValuation {
   public:
    using K = typename B::elem;
    using KPoly = Poly<K>;
    using KA = QElem<K>;

    explicit GaussValuation(MinimalPair<B> pair) : pair_(std::move(pair)), vKX_(1, {}), vKaX_(1, {}) { build(); }

    const MinimalPair<B>& pair() const { return pair_; }
    const AlgebraicElement<B>& elem() const { return *pair_.a; }
    const OrderedValue& gamma() const { return pair_.gamma; }
    std::size_t rank() const { return pair_.gamma.rank(); }

    long j() const { return j_; }
    const OrderedValue& vQ() const { return vQ_; }
    const OrderedValue& alpha() const { return alpha_; }
    /// Only defined in the residue-transcendental case.
    std::optional<long> e() const { return e_; }
    std::optional<long> E() const { return E_; }
    long lambda() const { return lambda_; }
    const ValueGroup& vKX() const { return vKX_; }
    const ValueGroup& vKaX() const { return vKaX_; }

    const KPoly& f_poly() const { return require(f_, "f"); }
    const KPoly& g_poly() const { return require(g_, "g"); }
    const KPoly& h_poly() const { return require(h_, "h"); }
    /// Why the residue machinery is unavailable, if it is.
    const std::optional<std::string>& reduction_error() const { return reduction_error_; }

    /// Coefficients c_i of F = sum c_i (X - a)^i.
    std::vector<KA> expand(const KPoly& F) const {
        auto c = taylor_shift(elem().lift_poly(F), elem().generator());
        return c.coeffs();
    }

    OrderedValue term_value(const KA& c, std::size_t i) const {
        OrderedValue v = elem().valuation(c);
        if (v.is_infinite()) return v;
        return v.embedded(rank()) + static_cast<long long>(i) * gamma();
    }

    OrderedValue eval(const KPoly& F) const {
        OrderedValue best = OrderedValue::infinity();
        auto c = expand(F);
        for (std::size_t i = 0; i < c.size(); ++i) {
            auto v = term_value(c[i], i);
            if (v < best) best = v;
        }
        return best;
    }

    OrderedValue eval(const KPoly& N, const KPoly& D) const {
        if (D.is_zero()) throw Error(ErrorKind::Precondition, "zero denominator");
        return eval(N) - eval(D);
    }

    /// Residue of the v-unit N/D in K(a)v(t).
    GradedResidue reduce(const KPoly& N, const KPoly& D) const {
        if (N.is_zero() || D.is_zero()) throw Error(ErrorKind::Precondition, "graded_reduce of zero or with zero denominator");
        auto sN = support(N), sD = support(D);
        if (!(sN.value == sD.value))
            throw Error(ErrorKind::Precondition,
                        "graded_reduce needs a v-unit; values " + sN.value.str() + " and " + sD.value.str() + " differ");
        const auto& F = elem().residue_field();
        if (rank() == 2) {
            if (sN.idx.size() != 1 || sD.idx.size() != 1 || sN.idx[0] != sD.idx[0])
                throw Error(ErrorKind::InternalConsistency, "value-transcendental support is not a single common index");
            KA q = sN.coeffs[sN.idx[0]] * inverse(sD.coeffs[sD.idx[0]]);
            Fq c = elem().residue(q);
            return {RationalFunction<Fq>(Poly<Fq>::constant(c))};
        }
        if (reduction_error_) throw Error(ErrorKind::InternalConsistency, *reduction_error_);
        const long E = *E_;
        const long r = static_cast<long>(sN.idx[0]) % E;
        for (const auto* s : {&sN, &sD})
            for (auto i : s->idx)
                if (static_cast<long>(i) % E != r)
                    throw Error(ErrorKind::InternalConsistency, "minimal support not periodic modulo E = " + std::to_string(E));
        const KA fa = elem().element(*f_);
        const KA d = sN.coeffs[sN.idx[0]] * inverse(power(fa, static_cast<unsigned long long>((static_cast<long>(sN.idx[0]) - r) / E)));
        auto initial_form = [&](const Support& s) {
            Fq zero(FpPoly(Fp(0, elem().base().p())), F);
            std::vector<Fq> coeffs;
            for (auto i : s.idx) {
                const auto k = static_cast<std::size_t>((static_cast<long>(i) - r) / E);
                if (coeffs.size() <= k) coeffs.resize(k + 1, zero);
                coeffs[k] = elem().residue(s.coeffs[i] * inverse(d * power(fa, k)));
            }
            return Poly<Fq>(std::move(coeffs), zero);
        };
        return {RationalFunction<Fq>(initial_form(sN), initial_form(sD))};
    }

    /// s = residue of g Q^e, as a rational function of t.
    GradedResidue s() const {
        if (rank() == 2) throw Error(ErrorKind::Precondition, "s is only defined for residue-transcendental pairs");
        if (reduction_error_) throw Error(ErrorKind::InternalConsistency, *reduction_error_);
        KPoly N = *g_ * power(elem().minpoly(), static_cast<unsigned long long>(*e_));
        return reduce(N, KPoly::constant(elem().base().one()));
    }

    /// [K(a,X)v : K(X)v]
    long residue_degree() const {
        if (rank() == 2) return 1;
        auto sv = s();
        if (sv.is_constant()) throw Error(ErrorKind::InternalConsistency, "s = " + sv.str() + " is constant");
        return sv.degree();
    }

    std::string t_definition() const {
        if (rank() == 2) return "none (residue field K(a)v)";
        std::string f = f_ ? f_->str() : "unavailable";
        return "t = (f(X)(X-a)^" + std::to_string(*E_) + ")v, f = " + f;
    }

   private:
    struct Support {
        OrderedValue value;
        std::vector<std::size_t> idx;
        std::vector<KA> coeffs;
    };

    Support support(const KPoly& F) const {
        Support s;
        s.coeffs = expand(F);
        for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
            auto v = term_value(s.coeffs[i], i);
            if (v.is_infinite()) continue;
            if (s.idx.empty() || v < s.value) {
                s.value = v;
                s.idx = {i};
            } else if (v == s.value) {
                s.idx.push_back(i);
            }
        }
        return s;
    }

    const KPoly& require(const std::optional<KPoly>& p, const char* name) const {
        if (!p) throw Error(ErrorKind::Precondition, std::string(name) + "_poly is not available" +
                                                          (reduction_error_ ? ": " + *reduction_error_ : std::string()));
        return *p;
    }

    KPoly search(const OrderedValue& target, const char* name) const {
        KPoly p = elem().monomial_with_value(target);
        if (!(eval(p) == target.embedded(rank())))
            throw Error(ErrorKind::InternalConsistency, std::string(name) + " = " + p.str() + " has value " + eval(p).str() +
                                                            ", expected " + target.str());
        return p;
    }

    void build() {
        const auto& a = elem();
        const auto r = rank();
        j_ = compute_j(pair_);
        vQ_ = eval(a.minpoly());
        alpha_ = OrderedValue::zero(r);
        for (const auto& d : a.distances()) {
            auto v = detail::lift_rank(d.value, gamma());
            if (v < gamma()) alpha_ = alpha_ + d.mult * v;
        }
        if (!(vQ_ == static_cast<long long>(j_) * gamma() + alpha_))
            throw Error(ErrorKind::InternalConsistency,
                        "vQ = " + vQ_.str() + " but j*gamma + alpha = " + (static_cast<long long>(j_) * gamma() + alpha_).str());

        ValueGroup vKa = a.value_group(r);
        vKaX_ = vKa.with(gamma());
        vKX_ = vKa.with(vQ_);
        std::optional<Integer> idx;
        try {
            idx = group_index(vKaX_, vKX_);
        } catch (const Error& err) {
            throw Error(ErrorKind::InternalConsistency, std::string("vK(X) is not inside vK(a,X): ") + err.what());
        }
        if (!idx) throw Error(ErrorKind::InternalConsistency, "vK(X) has infinite index in vK(a,X)");
        lambda_ = to_ll(*idx);

        if (r != 1) return;
        auto em = least_multiple_in(vQ_, vKa);
        auto Em = least_multiple_in(gamma(), vKa);
        if (!em || !Em) throw Error(ErrorKind::InternalConsistency, "vQ or gamma is not torsion modulo vK(a)");
        e_ = to_ll(*em);
        E_ = to_ll(*Em);
        g_ = search(-(*e_ * vQ_), "g");
        h_ = alpha_ == OrderedValue::zero(1) ? KPoly::constant(a.base().one()) : search(-(*E_ * alpha_), "h");
        KPoly f = search(-(*E_ * gamma()), "f");
        // f(X) must reduce to the constant f(a): its constant term strictly dominates
        auto c = expand(f);
        for (std::size_t i = 1; i < c.size(); ++i)
            if (!(term_value(c[0], 0) < term_value(c[i], i))) {
                reduction_error_ = "f(X) = " + f.str() + " is not dominated by f(a); (a, gamma) is not a minimal pair";
                return;
            }
        f_ = std::move(f);
    }

    MinimalPair<B> pair_;
    long j_ = 0;
    OrderedValue vQ_, alpha_;
    std::optional<long> e_, E_;
    long lambda_ = 0;
    ValueGroup vKX_, vKaX_;
    std::optional<KPoly> f_, g_, h_;
    std::optional<std::string> reduction_error_;
};

template <BaseField B>
OrderedValue vg_eval(const GaussValuation<B>& gv, const Poly<typename B::elem>& F) { return gv.eval(F); }

template <BaseField B>
OrderedValue vg_eval_rat(const GaussValuation<B>& gv, const Poly<typename B::elem>& N, const Poly<typename B::elem>& D) {
    return gv.eval(N, D);
}

template <BaseField B>
OrderedValue vg_eval_rat(const GaussValuation<B>& gv, const RationalFunction<typename B::elem>& R) {
    return gv.eval(R.num(), R.den());
}

template <BaseField B>
ValueGroups value_groups(const GaussValuation<B>& gv) {
    return {gv.vKX(), gv.vKaX(), Integer(gv.lambda())};
}

/// The generator t, i.e. the residue of f(X)(X - a)^E.  Fails when no f of
/// degree < n reduces to a constant, which happens only for non-minimal pairs.
template <BaseField B>
GradedResidue residue_generator_t(const GaussValuation<B>& gv) {
    if (gv.rank() != 1) throw Error(ErrorKind::Precondition, "t exists only for residue-transcendental pairs");
    if (gv.reduction_error()) throw Error(ErrorKind::InternalConsistency, *gv.reduction_error());
    Fq zero(FpPoly(Fp(0, gv.elem().base().p())), gv.elem().residue_field());
    return {RationalFunction<Fq>(Poly<Fq>(std::vector<Fq>{zero, one_like(zero)}, zero))};
}

template <BaseField B>
GradedResidue graded_reduce(const GaussValuation<B>& gv, const Poly<typename B::elem>& N, const Poly<typename B::elem>& D) {
    return gv.reduce(N, D);
}

template <BaseField B>
GradedResidue graded_reduce(const GaussValuation<B>& gv, const RationalFunction<typename B::elem>& R) {
    return gv.reduce(R.num(), R.den());
}

template <BaseField B>
long residue_degree(const GaussValuation<B>& gv) { return gv.residue_degree(); }

}  // namespace minpair
