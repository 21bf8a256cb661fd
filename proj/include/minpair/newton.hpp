#pragma once

// Newton polygons of polynomials with rational coefficient values.

#include "minpair/ordvals.hpp"

#include <optional>
#include <string>
#include <vector>

namespace minpair {

struct Segment {
    Rational slope;
    long length = 0;
    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Lower convex hull of (i, values[i]) over finite entries, as segments from
/// left to right.  values[0] and values.back() must be finite.
inline std::vector<Segment> newton_polygon(const std::vector<OrderedValue>& values) {
    if (values.empty() || values.front().is_infinite() || values.back().is_infinite())
        throw Error(ErrorKind::Precondition, "newton_polygon needs finite end points");
    struct Pt {
        long x;
        Rational y;
    };
    std::vector<Pt> hull;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].is_infinite()) continue;
        if (values[i].rank() != 1) throw Error(ErrorKind::RankMismatch, "newton_polygon expects rank-1 values");
        Pt p{static_cast<long>(i), values[i][0]};
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull.back();
            // drop b unless it lies strictly below segment a-p
            Rational lhs = (b.y - a.y) * Rational(p.x - a.x);
            Rational rhs = (p.y - a.y) * Rational(b.x - a.x);
            if (lhs >= rhs) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }
    std::vector<Segment> segs;
    for (std::size_t k = 1; k < hull.size(); ++k) {
        long len = hull[k].x - hull[k - 1].x;
        segs.push_back({(hull[k].y - hull[k - 1].y) / Rational(len), len});
    }
    return segs;
}

inline std::string polygon_str(const std::vector<Segment>& segs) {
    std::string s = "[";
    for (std::size_t i = 0; i < segs.size(); ++i)
        s += (i ? ", " : "") + std::string("(") + format_rational(segs[i].slope) + " x " + std::to_string(segs[i].length) + ")";
    return s + "]";
}

/// Root valuations with multiplicity: each segment of slope s and length l
/// contributes l roots of value -s.
struct ValueMultiplicity {
    OrderedValue value;
    long mult = 0;
    friend bool operator==(const ValueMultiplicity&, const ValueMultiplicity&) = default;
};

inline std::vector<ValueMultiplicity> root_values(const std::vector<Segment>& segs) {
    std::vector<ValueMultiplicity> out;
    for (const auto& s : segs) out.push_back({OrderedValue(-s.slope), s.length});
    return out;
}

}  // namespace minpair
