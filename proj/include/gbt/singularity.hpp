#pragma once
// Singular loci, bad parameter sets and free-action certificates.

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "hypersurface.hpp"

namespace gbt {

/// All 4096 quarter-torsion triples in canonical order.
inline const std::vector<Triple>& quarter_torsion_triples() {
    static const std::vector<Triple> all = [] {
        std::vector<Triple> v;
        auto pts = all_points(4);
        for (const auto& x : pts)
            for (const auto& y : pts)
                for (const auto& z : pts) v.push_back({x, y, z});
        return v;
    }();
    return all;
}

inline bool in_F0(const Triple& z) {
    return z[0].is_two_torsion() && z[1].is_two_torsion() && z[2].is_two_torsion();
}

/// Relation b1 b2 b3 = v for a monomial value v = c b^e.
inline Relation relation_from_b_value(const SymValue& v) {
    if (!v.is_monomial() || !v.params_free()) throw ContractViolation("not a monomial value: " + v.str());
    auto [e, c] = v.affine().monomial();
    Relation r;
    for (int k = 0; k < 3; ++k) r.exponents[k] = 1 - e[k];
    r.value = c;
    return r.normalized();
}

/// A parameter value (nu, mu) or, for the b family, a relation on b.
struct BadValue {
    std::optional<SymValue> value;
    std::optional<Relation> relation;
    std::vector<Triple> points;

    std::string str() const {
        if (relation) return relation->str();
        if (value) return value->str();
        return "?";
    }
    Specialization specialization(const Family& f) const {
        if (relation) return relation->to_specialization();
        return f.parameter_specialization(*value);
    }
};

namespace detail {

template <class Key>
void bucket(std::vector<BadValue>& out, const Key& key, const Triple& z) {
    for (auto& bv : out) {
        bool same;
        if constexpr (std::is_same_v<Key, Relation>)
            same = bv.relation && *bv.relation == key;
        else
            same = bv.value && *bv.value == key;
        if (same) {
            bv.points.push_back(z);
            return;
        }
    }
    BadValue bv;
    if constexpr (std::is_same_v<Key, Relation>)
        bv.relation = key;
    else
        bv.value = key;
    bv.points.push_back(z);
    out.push_back(bv);
}

inline void sort_bad(std::vector<BadValue>& v) {
    std::stable_sort(v.begin(), v.end(), [](const BadValue& a, const BadValue& b) { return a.str() < b.str(); });
}

/// Family whose parameter vanishing conditions produce bad values; the
/// unspecialized b family is lifted to the mu family and mu = v is read as
/// b1 b2 b3 = v.
inline Family sweep_family(const Family& f) {
    if (f.kind() == FamilyKind::B && f.spec().empty()) return Family::make(FamilyKind::Mu, {}, f.convention());
    return f;
}

inline void add_condition(const Family& f, const Family& sf, const Condition& c, const Triple& z,
                          std::vector<BadValue>& out, std::vector<Triple>& always) {
    if (c.kind == Condition::Kind::IdenticallyZero) {
        always.push_back(z);
    } else if (c.kind == Condition::Kind::ZeroIff && sf.admissible(c.value)) {
        if (f.kind() == FamilyKind::B && sf.kind() == FamilyKind::Mu)
            bucket(out, relation_from_b_value(c.value), z);
        else
            bucket(out, c.value, z);
    }
}

}  // namespace detail

struct BadSet {
    FamilyKind family = FamilyKind::B;
    std::string group;
    /// Parameter values (nu or mu); empty for the b family.
    std::vector<BadValue> values;
    /// Monomial relations on b: for the b family directly, for the mu family
    /// under mu := b1 b2 b3.
    std::vector<Relation> relations;
    /// Points fixed by some element and lying on X for every parameter.
    std::vector<Triple> always;
    /// Elements of G with positive-dimensional fixed locus on T.
    std::vector<GroupElement> curve_type;

    bool empty() const { return values.empty() && relations.empty() && always.empty() && curve_type.empty(); }
};

/// Union over the point-type elements of G of the parameter values putting
/// one of their fixed points on X.
inline BadSet bad_parameter_set(const Family& f, const Subgroup& G) {
    BadSet bs;
    bs.family = f.kind();
    bs.group = G.name();
    Family sf = detail::sweep_family(f);
    std::vector<BadValue> rels;
    for (GroupElement g : G.elements()) {
        if (g.is_identity()) continue;
        TFixedLocus t = fixed_locus_on_T(g);
        if (t.empty()) continue;
        if (t.dimension() > 0) {
            bs.curve_type.push_back(g);
            continue;
        }
        for (const auto& z : t.points()) {
            Condition c = sf.solve(sf.evaluate(z));
            if (f.kind() == FamilyKind::B)
                detail::add_condition(f, sf, c, z, rels, bs.always);
            else
                detail::add_condition(f, sf, c, z, bs.values, bs.always);
        }
    }
    if (f.kind() == FamilyKind::Mu)
        for (const auto& v : bs.values)
            if (v.value->is_monomial()) detail::bucket(rels, relation_from_b_value(*v.value), v.points.front());
    detail::sort_bad(bs.values);
    detail::sort_bad(rels);
    for (const auto& r : rels) bs.relations.push_back(*r.relation);
    return bs;
}

struct SmoothnessReport {
    FamilyKind family = FamilyKind::B;
    std::string spec;
    /// Singular for every parameter value (or, specialized, simply singular).
    std::vector<Triple> singular_points;
    bool generic_smooth = true;
    /// Admissible bad values for which the group still acts freely.
    std::vector<BadValue> bad;
    /// Bad values at which the group does not act freely.
    std::vector<BadValue> non_free;
    /// Exact re-sweep of each bad value with its specialization applied.
    std::vector<bool> reverified;
};

/// Singular points of X on the quarter-torsion triples of T.
inline std::vector<Triple> singular_points(const Family& f) {
    std::vector<Triple> out;
    for (const auto& z : quarter_torsion_triples())
        if (is_singular(f, z)) out.push_back(z);
    return out;
}

/// Sweeps all quarter-torsion triples. Bad values lying in the bad set of
/// `group` are reported separately as non-free.
inline SmoothnessReport singular_locus(const Family& f, const std::optional<Subgroup>& group = std::nullopt,
                                      bool reverify = true) {
    SmoothnessReport r;
    r.family = f.kind();
    r.spec = f.spec().str();
    Family sf = detail::sweep_family(f);
    std::vector<BadValue> all;
    for (const auto& z : quarter_torsion_triples())
        detail::add_condition(f, sf, singular_condition(sf, z), z, all, r.singular_points);
    r.generic_smooth = r.singular_points.empty();
    detail::sort_bad(all);

    std::optional<BadSet> nf;
    if (group) nf = bad_parameter_set(f, *group);
    for (auto& bv : all) {
        bool non_free = false;
        if (nf) {
            if (bv.relation)
                non_free = std::find(nf->relations.begin(), nf->relations.end(), *bv.relation) != nf->relations.end() &&
                           f.kind() == FamilyKind::B;
            else
                non_free = std::any_of(nf->values.begin(), nf->values.end(),
                                       [&](const BadValue& x) { return *x.value == *bv.value; });
        }
        (non_free ? r.non_free : r.bad).push_back(bv);
    }
    for (const auto& bv : r.bad) {
        if (!reverify) break;
        Family g = f.with_spec(f.spec().merged(bv.specialization(f)));
        r.reverified.push_back(singular_points(g) == bv.points);
    }
    return r;
}

struct FreenessWitness {
    GroupElement element;
    std::string evidence;
    std::optional<Triple> point;
};

struct FreenessCertificate {
    enum class Verdict { Free, FreeIffAvoids, NotFree };
    std::string group;
    FamilyKind family = FamilyKind::B;
    std::string spec;
    Verdict verdict = Verdict::Free;
    BadSet bad;
    std::vector<FreenessWitness> witnesses;

    bool free() const { return verdict == Verdict::Free; }
    std::string verdict_str() const {
        switch (verdict) {
            case Verdict::Free: return "free";
            case Verdict::FreeIffAvoids: return "free iff parameter avoids bad set";
            case Verdict::NotFree: return "not free";
        }
        return "";
    }
};

class NotFree : public Error {
public:
    using Error::Error;
};

inline FreenessCertificate certify_free_action(const Family& f, const Subgroup& G) {
    if (!G.is_subgroup_of(groups::G0())) throw ContractViolation("certify_free_action: group must lie in G0");
    FreenessCertificate c;
    c.group = G.name();
    c.family = f.kind();
    c.spec = f.spec().str();
    c.bad = bad_parameter_set(f, G);
    bool not_free = false;
    for (GroupElement g : G.elements()) {
        if (g.is_identity()) continue;
        TFixedLocus t = fixed_locus_on_T(g);
        if (t.empty()) {
            c.witnesses.push_back({g, "no fixed points on T", std::nullopt});
            continue;
        }
        if (t.dimension() > 0) {
            c.witnesses.push_back({g, "fixed curve or surface on T meets the ample divisor X", std::nullopt});
            not_free = true;
            continue;
        }
        std::optional<Triple> hit;
        int special = 0;
        for (const auto& z : t.points()) {
            Condition cond = f.solve(f.evaluate(z));
            if (cond.kind == Condition::Kind::IdenticallyZero && !hit) hit = z;
            if (cond.kind == Condition::Kind::ZeroIff && f.admissible(cond.value)) ++special;
        }
        if (hit) {
            not_free = true;
            c.witnesses.push_back({g, "fixes a point of X", hit});
        } else {
            c.witnesses.push_back({g,
                                   std::to_string(t.points().size()) + " fixed points on T, none on X" +
                                       (special ? " (" + std::to_string(special) + " for special parameters)" : ""),
                                   std::nullopt});
        }
    }
    bool has_special = !c.bad.values.empty() || (f.kind() == FamilyKind::B && !c.bad.relations.empty());
    c.verdict = not_free ? FreenessCertificate::Verdict::NotFree
                         : has_special ? FreenessCertificate::Verdict::FreeIffAvoids : FreenessCertificate::Verdict::Free;
    return c;
}

struct FixingElements {
    std::vector<GroupElement> generic;
    std::vector<GroupElement> special_only;
};

/// Elements of the ambient group with fixed points on X: generically, or only
/// for special parameters / curve moduli.
inline FixingElements which_elements_fix_on_X(const Family& f, const Subgroup& ambient) {
    FixingElements r;
    for (const auto& [g, t] : enumerate_fixing_elements(ambient)) {
        Locus l = locus_on_X(f, ProductSet::from(t));
        if (!l.empty())
            r.generic.push_back(g);
        else if (!l.special.empty())
            r.special_only.push_back(g);
    }
    auto by_label = [](GroupElement a, GroupElement b) {
        auto ia = table1_index(a), ib = table1_index(b);
        if (ia && ib) return *ia < *ib;
        if (ia || ib) return bool(ia);
        return a < b;
    };
    std::sort(r.generic.begin(), r.generic.end(), by_label);
    std::sort(r.special_only.begin(), r.special_only.end(), by_label);
    return r;
}

}  // namespace gbt
