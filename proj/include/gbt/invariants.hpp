#pragma once
// Numerical invariants: multidegree hypersurfaces in a product of three
// elliptic curves, adjunction genus, Riemann-Hurwitz for free quotients.

#include <array>
#include <string>

#include "algebra.hpp"

namespace gbt {

struct SurfaceInvariants {
    long long K2 = 0;
    long long e = 0;
    long long chi = 0;
    long long quotient_K2 = 0;
    long long quotient_e = 0;
    long long quotient_chi = 0;
};

/// X of multidegree (d1,d2,d3) in E1 x E2 x E3: K_X = X|_X, so
/// K^2 = X^3 = 6 d1 d2 d3, e = c2 = 6 d1 d2 d3 (normal bundle = K_X), and
/// chi = (K^2 + e)/12. A free quotient of order n divides all three.
inline SurfaceInvariants surface_invariants(const std::array<int, 3>& d, long long n) {
    for (int x : d)
        if (x < 1) throw ContractViolation("multidegree entries must be positive");
    if (n < 1) throw ContractViolation("group order must be positive");
    SurfaceInvariants r;
    r.K2 = 6LL * d[0] * d[1] * d[2];
    r.e = r.K2;
    if ((r.K2 + r.e) % 12 != 0) throw Error("chi is not integral for this multidegree");
    r.chi = (r.K2 + r.e) / 12;
    if (r.K2 % n || r.e % n || r.chi % n)
        throw Error("invariants are not divisible by the group order " + std::to_string(n));
    r.quotient_K2 = r.K2 / n;
    r.quotient_e = r.e / n;
    r.quotient_chi = r.chi / n;
    return r;
}

/// Genus of a smooth curve of bidegree (d1,d2) on an abelian surface
/// E x E': 2g - 2 = C^2 = 2 d1 d2.
inline int adjunction_genus(int d1, int d2) {
    if (d1 < 1 || d2 < 1) throw ContractViolation("bidegree entries must be positive");
    return d1 * d2 + 1;
}

/// Genus of C/H from |H| e(C/H) = e(C) + sum_{h != 1} |Fix_C(h)|.
inline int quotient_genus(int genus, int order, long long fixed_points_total) {
    if (order < 1) throw ContractViolation("group order must be positive");
    long long euler = 2 - 2LL * genus + fixed_points_total;
    if (euler % order) throw Error("Riemann-Hurwitz: Euler characteristic not divisible by |H|");
    long long eq = euler / order;
    if ((2 - eq) % 2 || 2 - eq < 0) throw Error("Riemann-Hurwitz: non-integral or negative genus");
    return static_cast<int>((2 - eq) / 2);
}

}  // namespace gbt
