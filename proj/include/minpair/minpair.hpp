#pragma once

// Pairs of definition (a, gamma): minimality certificates, the count j of
// conjugates within gamma of a, the value-transcendental lift, and equivalence.

#include "minpair/algext.hpp"

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

namespace minpair {

enum class CertKind { KrasnerSufficient, ValueBound, BruteForceChecked, UserAsserted };
enum class MinimalityStatus { Certified, Refuted, Unknown };

inline const char* to_string(CertKind k) {
    switch (k) {
        case CertKind::KrasnerSufficient: return "KrasnerSufficient";
        case CertKind::ValueBound: return "ValueBound";
        case CertKind::BruteForceChecked: return "BruteForceChecked";
        case CertKind::UserAsserted: return "UserAsserted";
    }
    return "?";
}

inline const char* to_string(MinimalityStatus s) {
    switch (s) {
        case MinimalityStatus::Certified: return "certified";
        case MinimalityStatus::Refuted: return "refuted";
        case MinimalityStatus::Unknown: return "unknown";
    }
    return "?";
}

struct MinimalityResult {
    MinimalityStatus status = MinimalityStatus::Unknown;
    std::optional<CertKind> kind;
    std::string detail;
    std::optional<std::string> witness;
    std::vector<std::string> warnings;

    bool certified() const { return status == MinimalityStatus::Certified; }
};

enum class MinimalityMode { Auto, Krasner, BruteForce, Assert };

/// A candidate approximant b, given by a polynomial it is a root of.  Elements
/// of K are passed as X - c.
template <BaseField B>
struct Candidate {
    Poly<typename B::elem> Q;
    std::string label;
};

template <BaseField B>
Candidate<B> base_candidate(const B& base, const typename B::elem& c, std::string label = {}) {
    Poly<typename B::elem> Q(std::vector<typename B::elem>{-c, base.one()}, base.zero());
    if (label.empty()) {
        std::ostringstream os;
        os << c;
        label = os.str();
    }
    return {std::move(Q), std::move(label)};
}

namespace detail {

inline void check_gamma(const OrderedValue& gamma) {
    if (gamma.is_infinite()) throw Error(ErrorKind::Precondition, "gamma must be finite");
    if (gamma.rank() == 2 && gamma[1] == 0)
        throw Error(ErrorKind::Precondition, "rank-2 gamma needs a nonzero second coordinate");
    if (gamma.rank() != 1 && gamma.rank() != 2) throw Error(ErrorKind::RankMismatch, "gamma must have rank 1 or 2");
}

// a value of vKbar compared against gamma of either rank
inline OrderedValue lift_rank(const OrderedValue& v, const OrderedValue& gamma) {
    return v.is_infinite() ? v : v.embedded(gamma.rank());
}

/// max over roots b of Qb of v(a - b).
template <BaseField B>
OrderedValue best_distance(const AlgebraicElement<B>& a, const Poly<typename B::elem>& Qb) {
    if (Qb.degree() == 1) {
        // v(a - b) = v((X + q0)(a)) for monic X + q0
        auto x = Poly<typename B::elem>(std::vector<typename B::elem>{Qb[0], a.base().one()}, a.base().zero());
        if (a.degree() == 1) {
            auto diff = Qb[0] - a.minpoly()[0];
            return a.base().valuation(diff);
        }
        return a.valuation(x);
    }
    auto d = cross_distances(a.base(), a.minpoly(), Qb);
    return d.front().value;  // sorted decreasing
}

}  // namespace detail

/// Decides (MP2) where possible.  Order of arguments: Krasner radius, declared
/// candidates, then the value bound gamma > v(a).
template <BaseField B>
MinimalityResult check_minimality(const AlgebraicElement<B>& a, const OrderedValue& gamma,
                                  const std::type_identity_t<std::optional<std::vector<Candidate<B>>>>& candidates = std::nullopt,
                                  MinimalityMode mode = MinimalityMode::Auto) {
    detail::check_gamma(gamma);
    MinimalityResult r;
    if (mode == MinimalityMode::Assert) {
        r.status = MinimalityStatus::Certified;
        r.kind = CertKind::UserAsserted;
        r.detail = "minimality asserted by the scenario, not checked";
        return r;
    }
    if (a.degree() == 1) {
        r.status = MinimalityStatus::Certified;
        r.kind = CertKind::KrasnerSufficient;
        r.detail = "degree 1";
        return r;
    }
    auto kr = kras(a);
    const bool try_krasner = mode != MinimalityMode::BruteForce;
    if (try_krasner && !a.is_inseparable() && kr && detail::lift_rank(*kr, gamma) < gamma) {
        r.status = MinimalityStatus::Certified;
        r.kind = CertKind::KrasnerSufficient;
        r.detail = "gamma " + gamma.str() + " > kras " + kr->str();
        return r;
    }
    if (candidates && mode != MinimalityMode::Krasner) {
        std::vector<std::string> checked;
        for (const auto& c : *candidates) {
            if (!c.Q.is_monic() || c.Q.degree() < 1) {
                r.warnings.push_back("candidate " + c.label + " skipped: polynomial must be monic of degree >= 1");
                continue;
            }
            if (c.Q.degree() >= a.degree()) {
                r.warnings.push_back("candidate " + c.label + " skipped: degree " + std::to_string(c.Q.degree()) +
                                     " is not below " + std::to_string(a.degree()));
                continue;
            }
            OrderedValue d = detail::lift_rank(detail::best_distance(a, c.Q), gamma);
            if (d >= gamma) {
                r.status = MinimalityStatus::Refuted;
                r.witness = c.label;
                r.detail = "v(a - " + c.label + ") = " + d.str() + " >= gamma " + gamma.str();
                return r;
            }
            checked.push_back(c.label);
        }
        if (!checked.empty()) {
            r.status = MinimalityStatus::Certified;
            r.kind = CertKind::BruteForceChecked;
            r.detail = std::to_string(checked.size()) + " candidates, all at distance < gamma";
            return r;
        }
    }
    // Any b with v(a - b) >= gamma > v(a) has v(b) = v(a) and the residue of
    // b^e / pi^h equals that of a^e / pi^h, so e(b) >= e and f(b) >= f.
    if (mode != MinimalityMode::BruteForce && a.value().is_finite() && detail::lift_rank(a.value(), gamma) < gamma) {
        r.status = MinimalityStatus::Certified;
        r.kind = CertKind::ValueBound;
        r.detail = "gamma " + gamma.str() + " > v(a) = " + a.value().str();
        return r;
    }
    r.status = MinimalityStatus::Unknown;
    r.detail = "no certificate applies";
    return r;
}

template <BaseField B>
struct MinimalPair {
    std::shared_ptr<const AlgebraicElement<B>> a;
    OrderedValue gamma;
    MinimalityResult certificate;

    bool residue_transcendental() const { return gamma.rank() == 1; }
    bool value_transcendental() const { return gamma.rank() == 2; }
    const AlgebraicElement<B>& elem() const { return *a; }
};

/// Builds a pair; throws ErrorKind::Certification unless minimality is
/// certified or asserted.
template <BaseField B>
MinimalPair<B> make_minimal_pair(std::shared_ptr<const AlgebraicElement<B>> a, OrderedValue gamma,
                         MinimalityMode mode = MinimalityMode::Auto,
                         const std::type_identity_t<std::optional<std::vector<Candidate<B>>>>& candidates = std::nullopt) {
    auto cert = check_minimality(*a, gamma, candidates, mode);
    if (!cert.certified()) {
        std::string msg = "pair (" + a->minpoly().str() + ", " + gamma.str() + ") is not certified minimal: " + cert.detail;
        if (cert.witness) msg += " (witness " + *cert.witness + ")";
        throw Error(ErrorKind::Certification, msg);
    }
    return {std::move(a), std::move(gamma), std::move(cert)};
}

/// Number of conjugates a_i (a included, with multiplicity) with v(a - a_i) >= gamma.
template <BaseField B>
long compute_j(const MinimalPair<B>& pair) {
    long j = 0;
    for (const auto& d : pair.a->distances())
        if (detail::lift_rank(d.value, pair.gamma) >= pair.gamma) j += d.mult;
    return j;
}

template <BaseField B>
MinimalPair<B> lift_pair(const MinimalPair<B>& pair) {
    if (pair.gamma.rank() != 1) throw Error(ErrorKind::RankMismatch, "lift_pair expects a rank-1 gamma");
    return {pair.a, OrderedValue(pair.gamma[0], Rational(-1)), pair.certificate};
}

struct Equivalence {
    bool equivalent = false;
    bool conjugate_choice_sensitive = false;
    OrderedValue max_distance;
    DistanceMultiset cross;
};

/// v(a - a') >= gamma up to the choice of conjugates: tested as max over all
/// root pairs.  Flagged when only some of the pairs reach gamma.
template <BaseField B>
Equivalence pairs_equivalent(const MinimalPair<B>& p1, const MinimalPair<B>& p2) {
    if (!(p1.a->base() == p2.a->base())) throw Error(ErrorKind::DomainMismatch, "pairs live over different base fields");
    if (p1.gamma.rank() != p2.gamma.rank() || !(p1.gamma == p2.gamma))
        throw Error(ErrorKind::Precondition, "pairs_equivalent needs equal gamma");
    Equivalence eq;
    eq.cross = cross_distances(p1.a->base(), p1.a->minpoly(), p2.a->minpoly());
    eq.max_distance = eq.cross.front().value;
    eq.equivalent = detail::lift_rank(eq.max_distance, p1.gamma) >= p1.gamma;
    if (eq.equivalent)
        eq.conjugate_choice_sensitive = detail::lift_rank(eq.cross.back().value, p1.gamma) < p1.gamma;
    return eq;
}

}  // namespace minpair
