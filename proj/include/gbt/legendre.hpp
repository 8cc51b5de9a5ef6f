#pragma once
// Symbolic Legendre values at quarter-torsion points and the induced action
// on P^1.

#include <array>

#include "symvalue.hpp"
#include "torus.hpp"

namespace gbt {

class UnsupportedPoint : public Error {
public:
    using Error::Error;
};

/// Sign choice per factor: L_j(1/4 + tau_j/4) = sign_j * i * b_j.
struct Convention {
    std::array<int, 3> sign{1, 1, 1};

    static Convention all(int s) { return {{s, s, s}}; }
    /// The 8 conventions indexed by bits (bit j set means sign_j = -1).
    static Convention from_index(int k) {
        Convention c;
        for (int j = 0; j < 3; ++j) c.sign[j] = (k >> j) & 1 ? -1 : 1;
        return c;
    }
    friend bool operator==(const Convention&, const Convention&) = default;
};

/// L_j(z) for z of order dividing 4; j is 0-based. Values:
///   q = 0: 1, 0, -1, 0          q = 2: a, inf, -a, inf
///   q = 1: b, cib, -b, -cib     q = 3: b, -cib, -b, cib   (index p)
inline SymValue legendre_value(int j, const TorsionPoint& z, const Convention& conv = {}) {
    if (j < 0 || j > 2) throw ContractViolation("factor index must be 0..2");
    if (4 % z.order() != 0)
        throw UnsupportedPoint("Legendre value needs a quarter-torsion point, got " + z.str());
    TorsionPoint w = z.reduced().at_level(4);
    LaurentPoly bj = b(j + 1);
    LaurentPoly ci = GaussianRational(0, conv.sign[j]) * bj;
    switch (w.q) {
        case 0: {
            static const int v[4] = {1, 0, -1, 0};
            return SymValue::of(LaurentPoly(v[w.p]));
        }
        case 2: {
            if (w.p % 2) return SymValue::infinity();
            return SymValue::of(w.p == 0 ? a(j + 1) : -a(j + 1));
        }
        case 1: {
            const LaurentPoly v[4] = {bj, ci, -bj, -ci};
            return SymValue::of(v[w.p]);
        }
        default: {
            const LaurentPoly v[4] = {bj, -ci, -bj, ci};
            return SymValue::of(v[w.p]);
        }
    }
}

inline std::array<SymValue, 3> legendre_values(const Triple& z, const Convention& conv = {}) {
    return {legendre_value(0, z[0], conv), legendre_value(1, z[1], conv), legendre_value(2, z[2], conv)};
}

/// Action on L-values of factor j: swap is x -> a_j/x, flip is x -> -x.
/// (After dividing by b_j the swap becomes (s:t) -> (t:s).)
inline SymValue apply_p1(int j, const P1Action& h, const SymValue& v) {
    SymValue r = v;
    if (h.swap) r = SymValue(a(j + 1) * r.den, r.num);
    if (h.flip) r = SymValue(-r.num, r.den);
    return r;
}

/// Preimages among quarter-torsion points of an L-value on factor j.
inline std::vector<TorsionPoint> legendre_preimages(int j, const SymValue& v, const Convention& conv = {},
                                                    const Specialization& spec = {}) {
    std::vector<TorsionPoint> out;
    for (const auto& z : all_points(4))
        if (legendre_value(j, z, conv).substitute(spec) == v) out.push_back(z);
    return out;
}

/// The branch values +-1, +-a_j of factor j.
inline std::array<SymValue, 4> branch_values(int j) {
    return {SymValue::of(1), SymValue::of(-1), SymValue::of(a(j + 1)), SymValue::of(-a(j + 1))};
}

}  // namespace gbt
