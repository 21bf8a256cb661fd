#pragma once

// Independent recomputations used to cross-check the main code paths.

#include "minpair/algext.hpp"

namespace minpair::oracle {

/// Conjugate distances of a root of Q from Res_Y(Q(Y), Q(Y + Z)).  The roots
/// in Z are a_k - a_i over all ordered pairs, so each distance appears n times.
template <BaseField B>
DistanceMultiset resultant_distances(const B& base, const Poly<typename B::elem>& Q) {
    DistanceMultiset all = cross_distances(base, Q, Q);
    const long n = Q.degree();
    for (auto& d : all) {
        if (d.mult % n != 0) throw Error(ErrorKind::InternalConsistency, "resultant multiplicity not divisible by n");
        d.mult /= n;
    }
    return all;
}

}  // namespace minpair::oracle
