#pragma once

// Randomized property harness.  Scenarios are generated by rejection sampling
// so that every one certifies; a failure is therefore a theorem-level or
// implementation failure, never an input problem.

#include "minpair/oracles.hpp"
#include "minpair/scenario.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace minpair {

using Rng = std::mt19937_64;

struct PropertyTally {
    long passed = 0;
    long failed = 0;
    std::vector<std::string> failures;  // first few, with the scenario

    void record(bool ok, const std::function<std::string()>& describe) {
        if (ok) {
            ++passed;
            return;
        }
        ++failed;
        if (failures.size() < 3) failures.push_back(describe());
    }
};

struct ProptestSummary {
    std::uint64_t seed = 0;
    long count = 0;
    long generated = 0;
    long rejected = 0;
    std::map<std::string, PropertyTally> properties;
    std::map<std::string, long> shapes;  // "j=2 lambda=1 resdeg=2" -> count

    bool all_passed() const {
        for (const auto& [_, t] : properties)
            if (t.failed) return false;
        return true;
    }
    long checks(const std::string& name) const {
        auto it = properties.find(name);
        return it == properties.end() ? 0 : it->second.passed + it->second.failed;
    }
    std::string str() const {
        std::ostringstream os;
        os << "seed " << seed << ", " << count << " scenarios (" << rejected << " rejected while sampling)\n";
        for (const auto& [name, t] : properties) {
            os << "  " << name << ": " << t.passed << " passed, " << t.failed << " failed\n";
            for (const auto& f : t.failures) os << "    " << f << "\n";
        }
        if (!shapes.empty()) {
            os << "  coverage:";
            for (const auto& [k, v] : shapes) os << " [" << k << "]x" << v;
            os << "\n";
        }
        if (properties.empty()) os << "  (no properties run)\n";
        else os << (all_passed() ? "all properties passed" : "PROPERTY FAILURES") << "\n";
        return os.str();
    }
};

// ---------------------------------------------------------------------------
// random elements

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// A random element of valuation >= 0 (possibly zero) for each base.
inline Rational random_integral(const PAdicRationals& K, Rng& rng) {
    long den = uniform(rng, 1, 4);
    while (den % static_cast<long>(K.p()) == 0) ++den;
    return Rational(uniform(rng, -6, 6), den);
}

inline RationalFunction<Fp> random_integral(const TAdicFunctionField& K, Rng& rng) {
    auto poly = [&](long deg) {
        std::vector<long long> c;
        for (long i = 0; i <= deg; ++i) c.push_back(uniform(rng, 0, static_cast<long>(K.p()) - 1));
        return fp_poly(c, K.p());
    };
    auto den = poly(uniform(rng, 0, 1));
    den = den + FpPoly::constant(Fp(1, K.p())) - FpPoly::constant(den[0]);  // den(0) = 1
    return RationalFunction<Fp>(poly(uniform(rng, 0, 2)), den);
}

template <BaseField B>
typename B::elem random_elem(const B& K, Rng& rng) {
    auto x = random_integral(K, rng);
    return x * K.pi_power(uniform(rng, -2, 2));
}

template <BaseField B>
Poly<typename B::elem> random_poly(const B& K, Rng& rng, long maxdeg) {
    const long d = uniform(rng, 0, maxdeg);
    std::vector<typename B::elem> c;
    for (long i = 0; i <= d; ++i) c.push_back(random_elem(K, rng));
    if (is_zero(c.back())) c.back() = K.one();
    return Poly<typename B::elem>(std::move(c), K.zero());
}

inline json coeff_json(const Rational& x) { return format_rational(x); }

inline json coeff_json(const RationalFunction<Fp>& x) {
    auto list = [](const FpPoly& p) {
        json a = json::array();
        for (const auto& c : p.coeffs()) a.push_back(c.value());
        if (a.empty()) a.push_back(0);
        return a;
    };
    if (x.den().degree() == 0) return list(x.num());
    return json{{"num", list(x.num())}, {"den", list(x.den())}};
}

template <class K>
std::vector<json> poly_json(const Poly<K>& f) {
    std::vector<json> out;
    for (const auto& c : f.coeffs()) out.push_back(coeff_json(c));
    return out;
}

// ---------------------------------------------------------------------------
// random certified polynomials

/// A monic polynomial with one-sided Newton polygon of slope -h/e and a
/// random irreducible residual polynomial; may still fail certification
/// (e.g. inseparable non-binomials), in which case the caller resamples.
template <BaseField B>
Poly<typename B::elem> random_ore(const B& K, Rng& rng) {
    using Elem = typename B::elem;
    const auto p = static_cast<long>(K.p());
    const long n = uniform(rng, 1, 4);
    std::vector<long> es;
    for (long e = 1; e <= n; ++e)
        if (n % e == 0) {
            long size = 1;
            for (long i = 0; i < n / e; ++i) size *= p;
            if (size <= 64) es.push_back(e);
        }
    const long e = es[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(es.size()) - 1))];
    const long f = n / e;
    long h = e == 1 ? uniform(rng, 0, 2) : uniform(rng, 1, 2 * e - 1);
    while (std::gcd(h, e) != 1) ++h;

    FpPoly R(Fp(0, K.p()));
    for (int tries = 0; tries < 200; ++tries) {
        std::vector<long long> c;
        for (long i = 0; i < f; ++i) c.push_back(uniform(rng, 0, p - 1));
        if (c[0] == 0) c[0] = uniform(rng, 1, p - 1);
        c.push_back(1);
        R = fp_poly(c, K.p());
        if (is_irreducible(R)) break;
    }
    std::vector<Elem> q(static_cast<std::size_t>(n + 1), K.zero());
    q[static_cast<std::size_t>(n)] = K.one();
    for (long i = 0; i < n; ++i) {
        const long dist = n - i;
        if (dist % e == 0) {
            const long k = dist / e;
            const Fp rk = R[static_cast<std::size_t>(f - k)];
            Elem unit = K.lift(rk) + K.uniformizer() * random_integral(K, rng);
            q[static_cast<std::size_t>(i)] = unit * K.pi_power(k * h);
        } else {
            const long above = floor_div(Rational(dist * h, e)).convert_to<long>() + 1;
            q[static_cast<std::size_t>(i)] = random_integral(K, rng) * K.pi_power(above);
        }
    }
    return Poly<Elem>(std::move(q), K.zero());
}

inline Poly<RationalFunction<Fp>> random_binomial(const TAdicFunctionField& K, Rng& rng) {
    const long p = static_cast<long>(K.p());
    long n = p;
    if (p == 2 && uniform(rng, 0, 1)) n = 4;
    long k = uniform(rng, 1, 2 * n);
    while (k % p == 0) ++k;
    auto unit = K.one() + K.uniformizer() * random_integral(K, rng);
    std::vector<RationalFunction<Fp>> c(static_cast<std::size_t>(n + 1), K.zero());
    c[0] = -(unit * K.pi_power(k));
    c[static_cast<std::size_t>(n)] = K.one();
    return Poly<RationalFunction<Fp>>(std::move(c), K.zero());
}

inline OrderedValue random_gamma(const OrderedValue& va, Rng& rng) {
    const long den = uniform(rng, 1, 6);
    const Rational x = (va.is_finite() ? va[0] : Rational(0)) + Rational(uniform(rng, 1, 3 * den), den);
    if (uniform(rng, 0, 3) == 0) return OrderedValue(x, Rational(uniform(rng, 0, 1) ? 1 : -1));
    return OrderedValue(x);
}

// ---------------------------------------------------------------------------
// property checks on one pair

template <BaseField B>
struct UnitPair {
    Poly<typename B::elem> N, D;
};

/// A random v-unit N/D: shift D by a monomial and a power of Q so the values agree.
template <BaseField B>
UnitPair<B> random_unit(const GaussValuation<B>& gv, Rng& rng, long maxdeg = 3) {
    const auto& a = gv.elem();
    auto N = random_poly(a.base(), rng, maxdeg);
    auto D = random_poly(a.base(), rng, maxdeg);
    const OrderedValue delta = gv.eval(N) - gv.eval(D);
    ValueGroup vKa = a.value_group(gv.rank());
    long k = 0;
    bool found = false;
    if (gv.rank() == 1) {
        for (k = 0; k < *gv.e(); ++k)
            if (vKa.contains(delta - k * gv.vQ())) {
                found = true;
                break;
            }
    } else {
        const Rational q = delta[1] / gv.vQ()[1];
        if (denom(q) == 1) {
            k = to_ll(numer(q));
            found = vKa.contains(delta - k * gv.vQ());
        }
    }
    if (!found) throw Error(ErrorKind::InternalConsistency, "value " + delta.str() + " is not in vK(a) + Z vQ");
    const OrderedValue w = delta - k * gv.vQ();
    D = D * a.monomial_with_value(OrderedValue(w[0]));
    if (k >= 0) D = D * power(a.minpoly(), static_cast<unsigned long long>(k));
    else N = N * power(a.minpoly(), static_cast<unsigned long long>(-k));
    if (!(gv.eval(N) == gv.eval(D))) throw Error(ErrorKind::InternalConsistency, "random unit construction missed");
    return {std::move(N), std::move(D)};
}

/// Multiplicativity, ultrametric inequality and restriction to K for vg_eval.
template <BaseField B>
bool valuation_axioms_hold(const GaussValuation<B>& gv, Rng& rng, std::string* why) {
    const auto& K = gv.elem().base();
    auto F = random_poly(K, rng, 3), G = random_poly(K, rng, 3);
    auto c = random_elem(K, rng);
    const auto vF = gv.eval(F), vG = gv.eval(G);
    const bool mult = gv.eval(F * G) == vF + vG;
    const bool ultra = gv.eval(F + G) >= min(vF, vG);
    const bool restr = gv.eval(Poly<typename B::elem>::constant(c)) == detail::lift_rank(K.valuation(c), gv.gamma());
    if (why && !(mult && ultra && restr)) *why = "F=" + F.str() + " G=" + G.str() + " c=" + Poly<typename B::elem>::constant(c).str();
    return mult && ultra && restr;
}

template <BaseField B>
bool graded_multiplicative(const GaussValuation<B>& gv, Rng& rng, std::string* why) {
    auto u1 = random_unit(gv, rng), u2 = random_unit(gv, rng);
    auto r1 = gv.reduce(u1.N, u1.D), r2 = gv.reduce(u2.N, u2.D);
    auto r12 = gv.reduce(u1.N * u2.N, u1.D * u2.D);
    const bool ok = r12 == r1 * r2 && gv.reduce(u1.D, u1.N) * r1 == GradedResidue{one_like(r1.value)};
    if (why && !ok) *why = "N1/D1=" + u1.N.str() + " / " + u1.D.str() + ", N2/D2=" + u2.N.str() + " / " + u2.D.str();
    return ok;
}

/// elem_valuation multiplicative and ultrametric, elem_residue multiplicative on units.
template <BaseField B>
bool element_axioms_hold(const AlgebraicElement<B>& a, Rng& rng, std::string* why) {
    auto red = [&](const Poly<typename B::elem>& g) { return g % a.minpoly(); };
    auto x = red(random_poly(a.base(), rng, a.degree() - 1)), y = red(random_poly(a.base(), rng, a.degree() - 1));
    const auto vx = a.valuation(x), vy = a.valuation(y);
    bool ok = a.valuation(red(x * y)) == vx + vy && a.valuation(x + y) >= min(vx, vy);
    if (vx.is_finite() && vy.is_finite()) {
        // scale to units and compare residues
        auto ux = a.element(x) * a.element(a.monomial_with_value(-vx));
        auto uy = a.element(y) * a.element(a.monomial_with_value(-vy));
        ok = ok && a.residue(ux * uy) == a.residue(ux) * a.residue(uy);
    }
    if (why && !ok) *why = "x=" + x.str() + " y=" + y.str();
    return ok;
}

// ---------------------------------------------------------------------------
// the harness

namespace detail {

template <BaseField B>
void run_one(const B& K, Rng& rng, ProptestSummary& sum) {
    using KPoly = Poly<typename B::elem>;
    std::shared_ptr<const AlgebraicElement<B>> a;
    KPoly Q(K.zero());
    for (int tries = 0; !a; ++tries) {
        if (tries > 1000) throw Error(ErrorKind::InternalConsistency, "could not sample a certified polynomial");
        if constexpr (std::is_same_v<B, TAdicFunctionField>) Q = uniform(rng, 0, 3) == 0 ? random_binomial(K, rng) : random_ore(K, rng);
        else Q = random_ore(K, rng);
        try {
            a = std::make_shared<const AlgebraicElement<B>>(certify(K, Q));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Certification) throw;
            ++sum.rejected;
        }
    }
    OrderedValue gamma = random_gamma(a->value(), rng);
    // half the time sit exactly on a conjugate distance above v(a), so j > 1
    std::vector<OrderedValue> close;
    for (const auto& d : a->distances())
        if (d.value.is_finite() && a->value().is_finite() && d.value > a->value()) close.push_back(d.value);
    if (!close.empty() && uniform(rng, 0, 1)) {
        const auto& d = close[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(close.size()) - 1))];
        gamma = uniform(rng, 0, 3) == 0 ? OrderedValue(d[0], Rational(-1)) : d;
    }
    // partner Q(X - c) with v(c) > gamma: the root a + c is within gamma of a
    const long vc = floor_div(gamma[0]).convert_to<long>() + 1;
    const auto c = K.pi_power(vc) * (K.one() + K.uniformizer() * random_integral(K, rng));
    KPoly partner = compose(Q, KPoly(std::vector<typename B::elem>{-c, K.one()}, K.zero()));

    Scenario sc;
    sc.id = "random-" + std::to_string(sum.generated);
    sc.base = B::kind;
    sc.p = K.p();
    sc.Q = poly_json(Q);
    sc.gamma = gamma;
    sc.equivalent.push_back({"shifted", poly_json(partner), {}});
    ++sum.generated;
    const std::string sc_text = scenario_to_json(sc).dump();
    auto describe = [&](const std::string& extra) { return [=] { return sc_text + (extra.empty() ? "" : " :: " + extra); }; };

    AnalysisReport r;
    try {
        r = analyze_with(K, sc);
    } catch (const Error& e) {
        sum.properties["analyze"].record(false, describe(e.what()));
        return;
    }
    sum.properties["analyze"].record(true, describe(""));
    sum.shapes["j=" + std::to_string(r.j) + " lambda=" + std::to_string(r.lambda) + " resdeg=" +
               (r.residue_degree ? std::to_string(*r.residue_degree) : "-")]++;
    for (const auto& v : r.verdicts) {
        if (v.status == Status::Skipped && v.name != "thm_1_2") continue;
        sum.properties[v.name].record(v.status == Status::Pass, describe(v.details));
    }

    sum.properties["oracle_distances"].record(a->distances() == oracle::resultant_distances(K, Q),
                                              describe(multiset_str(a->distances())));
    sum.properties["ic_degree_equals_j"].record(r.ic_degree == r.j, describe(""));
    auto pair = make_minimal_pair(a, gamma);
    const OrderedValue bigger = gamma + OrderedValue(Rational(uniform(rng, 1, 6), uniform(rng, 1, 6))).embedded(gamma.rank());
    auto pair2 = make_minimal_pair(a, bigger);
    sum.properties["j_monotone"].record(compute_j(pair) >= compute_j(pair2), describe("gamma' = " + bigger.str()));
    if (a->is_inseparable()) sum.properties["j_inseparable_full"].record(compute_j(pair) == a->degree(), describe(""));

    GaussValuation<B> gv(pair);
    std::string why;
    for (int i = 0; i < 5; ++i) {
        why.clear();
        sum.properties["vg_axioms"].record(valuation_axioms_hold(gv, rng, &why), describe(why));
    }
    why.clear();
    sum.properties["elem_axioms"].record(element_axioms_hold(*a, rng, &why), describe(why));
    why.clear();
    sum.properties["graded_multiplicative"].record(graded_multiplicative(gv, rng, &why), describe(why));
}

}  // namespace detail

inline ProptestSummary run_proptest(std::uint64_t seed, long count) {
    ProptestSummary sum;
    sum.seed = seed;
    sum.count = count;
    Rng rng(seed);
    const std::uint64_t primes[] = {2, 3, 5};
    for (long i = 0; i < count; ++i) {
        const auto p = primes[uniform(rng, 0, 2)];
        if (uniform(rng, 0, 3) == 0) detail::run_one(TAdicFunctionField(p), rng, sum);
        else detail::run_one(PAdicRationals(p), rng, sum);
    }
    return sum;
}

}  // namespace minpair
