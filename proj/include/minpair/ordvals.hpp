#pragma once

// Values in the lexicographically ordered group Q^k (k = 1 or 2) with a
// distinguished infinity, and finitely generated value groups inside Q^k.

#include "minpair/core.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace minpair {

class OrderedValue {
   public:
    OrderedValue() = default;  // infinity
    explicit OrderedValue(Rational x) : coords_{std::move(x)}, finite_(true) {}
    explicit OrderedValue(std::vector<Rational> coords) : coords_(std::move(coords)), finite_(true) {
        if (coords_.empty() || coords_.size() > 2)
            throw Error(ErrorKind::RankMismatch, "value rank must be 1 or 2");
    }
    OrderedValue(Rational x, Rational y) : OrderedValue(std::vector<Rational>{std::move(x), std::move(y)}) {}

    static OrderedValue infinity() { return OrderedValue(); }
    static OrderedValue zero(std::size_t rank) { return OrderedValue(std::vector<Rational>(rank, Rational(0))); }

    bool is_infinite() const noexcept { return !finite_; }
    bool is_finite() const noexcept { return finite_; }
    std::size_t rank() const noexcept { return coords_.size(); }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_.at(i); }

    /// The embedding x -> (x, 0) into the next rank.
    OrderedValue embedded(std::size_t rank) const {
        if (!finite_) return *this;
        if (rank < coords_.size()) throw Error(ErrorKind::RankMismatch, "cannot embed into a smaller rank");
        auto c = coords_;
        c.resize(rank, Rational(0));
        return OrderedValue(std::move(c));
    }

    friend OrderedValue operator+(const OrderedValue& a, const OrderedValue& b) {
        if (!a.finite_ || !b.finite_) return infinity();
        check_rank(a, b);
        auto c = a.coords_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
        return OrderedValue(std::move(c));
    }
    friend OrderedValue operator-(const OrderedValue& a) {
        if (!a.finite_) throw Error(ErrorKind::Precondition, "negation of infinity");
        auto c = a.coords_;
        for (auto& x : c) x = -x;
        return OrderedValue(std::move(c));
    }
    friend OrderedValue operator-(const OrderedValue& a, const OrderedValue& b) { return a + (-b); }
    friend OrderedValue operator*(const Integer& m, const OrderedValue& a) { return Rational(m) * a; }
    friend OrderedValue operator*(long long m, const OrderedValue& a) { return Rational(m) * a; }
    friend OrderedValue operator*(const Rational& m, const OrderedValue& a) {
        if (!a.finite_) return a;
        auto c = a.coords_;
        for (auto& x : c) x *= m;
        return OrderedValue(std::move(c));
    }

    friend std::strong_ordering compare(const OrderedValue& a, const OrderedValue& b) {
        if (!a.finite_ || !b.finite_) {
            if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
            return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        check_rank(a, b);
        for (std::size_t i = 0; i < a.coords_.size(); ++i) {
            if (a.coords_[i] < b.coords_[i]) return std::strong_ordering::less;
            if (a.coords_[i] > b.coords_[i]) return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }
    friend std::strong_ordering operator<=>(const OrderedValue& a, const OrderedValue& b) { return compare(a, b); }
    friend bool operator==(const OrderedValue& a, const OrderedValue& b) { return compare(a, b) == 0; }

    std::string str() const {
        if (!finite_) return "inf";
        if (coords_.size() == 1) return format_rational(coords_[0]);
        std::string s = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ",";
            s += format_rational(coords_[i]);
        }
        return s + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const OrderedValue& v) { return os << v.str(); }

   private:
    static void check_rank(const OrderedValue& a, const OrderedValue& b) {
        if (a.coords_.size() != b.coords_.size())
            throw Error(ErrorKind::RankMismatch,
                        "rank " + std::to_string(a.rank()) + " vs rank " + std::to_string(b.rank()));
    }

    std::vector<Rational> coords_;
    bool finite_ = false;
};

inline const OrderedValue& min(const OrderedValue& a, const OrderedValue& b) { return b < a ? b : a; }

// ---------------------------------------------------------------------------
// Integer lattices

namespace lattice {

using Row = std::vector<Integer>;

/// Row echelon (Hermite) form of the integer span of `rows`: positive pivots,
/// strictly increasing pivot columns, zero rows dropped.
inline std::vector<Row> hermite_form(std::vector<Row> rows, std::size_t cols) {
    std::vector<Row> out;
    for (std::size_t c = 0; c < cols && !rows.empty(); ++c) {
        // Euclid on column c until at most one row has a nonzero entry there.
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
            if (best == rows.size()) break;
            bool reduced = false;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == best || rows[i][c] == 0) continue;
                Integer q = rows[i][c] / rows[best][c];
                for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= q * rows[best][k];
                reduced = true;
            }
            bool single = true;
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (i != best && rows[i][c] != 0) single = false;
            if (single) {
                Row pivot = rows[best];
                if (pivot[c] < 0)
                    for (auto& x : pivot) x = -x;
                out.push_back(std::move(pivot));
                rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
                break;
            }
            if (!reduced) break;
        }
        rows.erase(std::remove_if(rows.begin(), rows.end(),
                                  [](const Row& r) { return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; }); }),
                   rows.end());
    }
    return out;
}

inline std::size_t pivot_col(const Row& r) {
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0) return i;
    return r.size();
}

/// Reduces v against an echelon basis; true iff v lies in the lattice.
inline bool contains(const std::vector<Row>& basis, Row v) {
    std::size_t b = 0;
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (b < basis.size() && pivot_col(basis[b]) == c) {
            const Integer& piv = basis[b][c];
            if (v[c] % piv != 0) return false;
            Integer q = v[c] / piv;
            for (std::size_t k = 0; k < v.size(); ++k) v[k] -= q * basis[b][k];
            ++b;
        } else if (v[c] != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace lattice

/// A finitely generated subgroup of Q^k.
class ValueGroup {
   public:
    explicit ValueGroup(std::size_t rank, std::vector<OrderedValue> gens = {}) : rank_(rank), gens_(std::move(gens)) {
        if (rank_ < 1 || rank_ > 2) throw Error(ErrorKind::RankMismatch, "value group rank must be 1 or 2");
        for (const auto& g : gens_) {
            if (g.is_infinite()) throw Error(ErrorKind::Precondition, "infinite generator");
            if (g.rank() != rank_) throw Error(ErrorKind::RankMismatch, "generator " + g.str() + " has wrong rank");
        }
    }

    std::size_t rank() const noexcept { return rank_; }
    const std::vector<OrderedValue>& generators() const { return gens_; }

    ValueGroup with(const OrderedValue& g) const {
        auto gens = gens_;
        gens.push_back(g);
        return ValueGroup(rank_, std::move(gens));
    }

    /// Common denominator of all generator coordinates.
    Integer denominator() const {
        Integer d = 1;
        for (const auto& g : gens_)
            for (const auto& x : g.coords()) d = boost::multiprecision::lcm(d, denom(x));
        return d;
    }

    /// Hermite basis of the group scaled by `scale` into Z^k.
    std::vector<lattice::Row> scaled_basis(const Integer& scale) const {
        std::vector<lattice::Row> rows;
        for (const auto& g : gens_) {
            lattice::Row r;
            for (const auto& x : g.coords()) {
                Rational y = x * Rational(scale);
                if (denom(y) != 1) throw Error(ErrorKind::InternalConsistency, "scale does not clear denominators");
                r.push_back(numer(y));
            }
            rows.push_back(std::move(r));
        }
        return lattice::hermite_form(std::move(rows), rank_);
    }

    bool contains(const OrderedValue& v) const {
        if (v.is_infinite()) return false;
        if (v.rank() != rank_) throw Error(ErrorKind::RankMismatch, "membership test across ranks");
        Integer d = denominator();
        lattice::Row r;
        for (const auto& x : v.coords()) {
            Rational y = x * Rational(d);
            if (denom(y) != 1) return false;
            r.push_back(numer(y));
        }
        return lattice::contains(scaled_basis(d), std::move(r));
    }

    /// Dimension of the Q-span.
    std::size_t rational_rank() const { return scaled_basis(denominator()).size(); }

    std::string str() const {
        std::string s = "<";
        for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].str();
        return s + ">";
    }

   private:
    std::size_t rank_;
    std::vector<OrderedValue> gens_;
};

inline bool group_membership(const ValueGroup& g, const OrderedValue& v) { return g.contains(v); }

/// Index (g : h) for h a subgroup of g; nullopt means infinite index.
inline std::optional<Integer> group_index(const ValueGroup& g, const ValueGroup& h) {
    if (g.rank() != h.rank()) throw Error(ErrorKind::RankMismatch, "group_index across ranks");
    for (const auto& x : h.generators())
        if (!g.contains(x)) throw Error(ErrorKind::NotSubgroup, "generator " + x.str() + " of h is not in g = " + g.str());
    Integer d = boost::multiprecision::lcm(g.denominator(), h.denominator());
    auto bg = g.scaled_basis(d);
    auto bh = h.scaled_basis(d);
    if (bg.size() != bh.size()) return std::nullopt;
    // Same span, so the pivot columns agree; the index is the ratio of pivot products.
    Integer pg = 1, ph = 1;
    for (const auto& r : bg) pg *= r[lattice::pivot_col(r)];
    for (const auto& r : bh) ph *= r[lattice::pivot_col(r)];
    if (ph % pg != 0) throw Error(ErrorKind::InternalConsistency, "non-integral lattice index");
    return ph / pg;
}

/// Least m >= 1 with m*v in g, or nullopt when v is not torsion modulo g.
inline std::optional<Integer> least_multiple_in(const OrderedValue& v, const ValueGroup& g) {
    if (v.is_infinite()) throw Error(ErrorKind::Precondition, "least_multiple_in of infinity");
    auto bound = group_index(g.with(v), g);
    if (!bound) return std::nullopt;
    for (Integer m = 1; m <= *bound; ++m)
        if (g.contains(m * v)) return m;
    throw Error(ErrorKind::InternalConsistency, "no multiple of " + v.str() + " within the index bound");
}

}  // namespace minpair
