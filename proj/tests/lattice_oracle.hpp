#pragma once

// Brute-force coset enumeration for full-rank sublattices of Z^k (k <= 2).
// Kept independent of the Hermite-form code it is used to check.

#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<long long>;

inline long long mod(long long a, long long m) { return ((a % m) + m) % m; }

/// Some positive M with M*Z^k inside the lattice spanned by gens (full rank assumed).
inline long long annihilator(const std::vector<Vec>& gens, std::size_t k) {
    if (k == 1) {
        long long g = 0;
        for (const auto& v : gens) g = std::gcd(g, std::llabs(v[0]));
        return g;
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            long long d = gens[i][0] * gens[j][1] - gens[i][1] * gens[j][0];
            if (d != 0) return std::llabs(d);
        }
    return 0;
}

/// |L / M Z^k| by closure of the generators in (Z/M)^k.
inline long long points_mod(const std::vector<Vec>& gens, std::size_t k, long long M) {
    std::set<Vec> seen{Vec(k, 0)};
    std::vector<Vec> frontier{Vec(k, 0)};
    while (!frontier.empty()) {
        Vec cur = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            Vec nxt(k);
            for (std::size_t i = 0; i < k; ++i) nxt[i] = mod(cur[i] + g[i], M);
            if (seen.insert(nxt).second) frontier.push_back(nxt);
        }
    }
    return static_cast<long long>(seen.size());
}

/// (G : H) for full-rank integer lattices H inside G.
inline long long coset_index(const std::vector<Vec>& G, const std::vector<Vec>& H, std::size_t k) {
    long long M = annihilator(H, k);
    return points_mod(G, k, M) / points_mod(H, k, M);
}

}  // namespace oracle
