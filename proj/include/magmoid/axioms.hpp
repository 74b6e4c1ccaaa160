#ifndef MAGMOID_AXIOMS_HPP
#define MAGMOID_AXIOMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magmoid/core.hpp"

namespace magmoid {

// Small element sets as bitmasks; orders stay <= 8 throughout.
using ElemSet = std::uint16_t;

inline bool set_has(ElemSet s, int x) { return (s >> x) & 1; }
inline int set_size(ElemSet s) { return __builtin_popcount(static_cast<unsigned>(s)); }

inline std::vector<int> set_elements(ElemSet s, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (set_has(s, i)) out.push_back(i);
    return out;
}

// An equation (A)=(B) between product expressions asserts that both sides
// are defined and equal; a conditional whose antecedent is undefined is true.
inline bool both_defined_equal(int a, int b) { return a != undef && a == b; }

// ---------------------------------------------------------------------------
// Associativity

struct AssocFlags {
    bool TA = false, A1 = false, A2 = false, A3 = false;
    bool S1 = false, S2 = false, S3 = false;
};

inline AssocFlags associativity_flags(const Magmoid& m) {
    const int n = m.order();
    AssocFlags f;
    f.TA = f.A1 = f.A2 = f.A3 = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int xy = m.cell(x, y);
                int yz = m.cell(y, z);
                int left = xy == undef ? undef : m.cell(xy, z);    // ((xy)z)
                int right = yz == undef ? undef : m.cell(x, yz);   // (x(yz))
                bool eq = both_defined_equal(left, right);
                if (!(right == undef || eq)) f.A1 = false;
                if (!(left == undef || eq)) f.A2 = false;
                if (!(xy == undef || yz == undef || eq)) f.A3 = false;
                if (!eq) f.TA = false;
            }
    f.S1 = f.A1 && f.A3;
    f.S2 = f.A2 && f.A3;
    f.S3 = f.S1 && f.S2;
    return f;
}

inline bool axiom_by_name(const AssocFlags& f, const std::string& name, bool* found = nullptr) {
    if (found) *found = true;
    if (name == "TA") return f.TA;
    if (name == "A1") return f.A1;
    if (name == "A2") return f.A2;
    if (name == "A3") return f.A3;
    if (name == "S1") return f.S1;
    if (name == "S2") return f.S2;
    if (name == "S3") return f.S3;
    if (found) *found = false;
    return false;
}

struct GeneralAssocReport {
    int value = undef;                 // common value of the defined shapes
    int shapes = 0;                    // Catalan count for the chain length
    std::vector<bool> defined;         // per shape, in generation order
    int defined_count = 0;
    bool all_defined_agree = true;
};

// Law of general associativity: under A1 and A2, all parenthesizations of a
// chain with defined subproducts agree.
inline GeneralAssocReport general_assoc_check(const Magmoid& m, const std::vector<int>& chain) {
    if (chain.size() < 2 || chain.size() > 6)
        throw std::invalid_argument("general_assoc_check: chain length must be in [2,6]");
    AssocFlags f = associativity_flags(m);
    if (!(f.A1 && f.A2))
        throw std::invalid_argument("general_assoc_check: magmoid does not satisfy A1 and A2");
    GeneralAssocReport rep;
    auto shapes = all_parenthesizations(chain);
    rep.shapes = static_cast<int>(shapes.size());
    rep.defined.resize(shapes.size(), false);
    for (size_t i = 0; i < shapes.size(); ++i) {
        int v = eval_expr(m, shapes[i]);
        if (v == undef) continue;
        rep.defined[i] = true;
        ++rep.defined_count;
        if (rep.value == undef)
            rep.value = v;
        else if (rep.value != v)
            rep.all_defined_agree = false;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Units

struct UnitReport {
    ElemSet globalLeft = 0;      // {epsilon}_P
    ElemSet globalRight = 0;     // {varepsilon}_P
    ElemSet globalTwoSided = 0;  // {e}_P
    std::vector<ElemSet> localLeft;       // {lambda}_x
    std::vector<ElemSet> localRight;      // {rho}_x
    std::vector<ElemSet> twistedLeft;     // {phi}_x   = {lambda}_x /\ {varepsilon}_P
    std::vector<ElemSet> twistedRight;    // {psi}_x   = {rho}_x /\ {epsilon}_P
    std::vector<ElemSet> effectiveLeft;   // {ell}_x   = {lambda}_x /\ {e}_P
    std::vector<ElemSet> effectiveRight;  // {r}_x     = {rho}_x /\ {e}_P
};

// A global unit condition holding vacuously counts as satisfied.
inline UnitReport units(const Magmoid& m) {
    const int n = m.order();
    UnitReport u;
    u.localLeft.assign(n, 0);
    u.localRight.assign(n, 0);
    for (int e = 0; e < n; ++e) {
        bool left = true, right = true;
        for (int x = 0; x < n; ++x) {
            int ex = m.cell(e, x);
            int xe = m.cell(x, e);
            if (ex != undef && ex != x) left = false;
            if (xe != undef && xe != x) right = false;
        }
        if (left) u.globalLeft |= ElemSet(1) << e;
        if (right) u.globalRight |= ElemSet(1) << e;
    }
    u.globalTwoSided = u.globalLeft & u.globalRight;
    for (int x = 0; x < n; ++x)
        for (int c = 0; c < n; ++c) {
            if (m.cell(c, x) == x) u.localLeft[x] |= ElemSet(1) << c;
            if (m.cell(x, c) == x) u.localRight[x] |= ElemSet(1) << c;
        }
    u.twistedLeft.resize(n);
    u.twistedRight.resize(n);
    u.effectiveLeft.resize(n);
    u.effectiveRight.resize(n);
    for (int x = 0; x < n; ++x) {
        u.twistedLeft[x] = u.localLeft[x] & u.globalRight;
        u.twistedRight[x] = u.localRight[x] & u.globalLeft;
        u.effectiveLeft[x] = u.localLeft[x] & u.globalTwoSided;
        u.effectiveRight[x] = u.localRight[x] & u.globalTwoSided;
    }
    return u;
}

inline ElemSet idempotents(const Magmoid& m) {
    ElemSet s = 0;
    for (int i = 0; i < m.order(); ++i)
        if (m.cell(i, i) == i) s |= ElemSet(1) << i;
    return s;
}

// ---------------------------------------------------------------------------
// Inverses

enum class InverseKind { RightPre, LeftPre, Pre };  // I+, I*, I

inline const char* inverse_kind_name(InverseKind k) {
    switch (k) {
        case InverseKind::RightPre: return "I+";
        case InverseKind::LeftPre: return "I*";
        default: return "I";
    }
}

inline std::optional<InverseKind> inverse_kind_from_name(const std::string& s) {
    if (s == "I+") return InverseKind::RightPre;
    if (s == "I*") return InverseKind::LeftPre;
    if (s == "I") return InverseKind::Pre;
    return std::nullopt;
}

struct InverseReport {
    // For each x, the set of partners under the relation.
    std::vector<ElemSet> J;           // pseudoinverses
    std::vector<ElemSet> Iplus;       // right preinverses
    std::vector<ElemSet> Istar;       // left preinverses
    std::vector<ElemSet> I;           // two-sided preinverses
    std::vector<ElemSet> strongJ;
    std::vector<ElemSet> strongIplus;
    std::vector<ElemSet> strongIstar;
    std::vector<ElemSet> strongI;

    const std::vector<ElemSet>& plain(InverseKind k) const {
        switch (k) {
            case InverseKind::RightPre: return Iplus;
            case InverseKind::LeftPre: return Istar;
            default: return I;
        }
    }
    const std::vector<ElemSet>& strong(InverseKind k) const {
        switch (k) {
            case InverseKind::RightPre: return strongIplus;
            case InverseKind::LeftPre: return strongIstar;
            default: return strongI;
        }
    }
};

// The strong variants use the stated pairing of unit sets verbatim: strong
// right preinverse -> both products global right units; strong left
// preinverse -> both global left units; strong pseudo/preinverse -> both
// global two-sided units.
inline InverseReport inverse_report(const Magmoid& m) {
    const int n = m.order();
    UnitReport u = units(m);
    InverseReport r;
    r.J.assign(n, 0);
    r.Iplus.assign(n, 0);
    r.Istar.assign(n, 0);
    r.I.assign(n, 0);
    r.strongJ.assign(n, 0);
    r.strongIplus.assign(n, 0);
    r.strongIstar.assign(n, 0);
    r.strongI.assign(n, 0);
    for (int x = 0; x < n; ++x)
        for (int b = 0; b < n; ++b) {
            int xb = m.cell(x, b);
            int bx = m.cell(b, x);
            int xb_x = xb == undef ? undef : m.cell(xb, x);   // ((x xbar) x)
            int x_bx = bx == undef ? undef : m.cell(x, bx);   // (x (xbar x))
            int bx_b = bx == undef ? undef : m.cell(bx, b);   // ((xbar x) xbar)
            int b_xb = xb == undef ? undef : m.cell(b, xb);   // (xbar (x xbar))
            bool j = xb_x == x && x_bx == x;
            bool ip = xb_x == x && bx_b == b;
            bool is = x_bx == x && b_xb == b;
            ElemSet bit = ElemSet(1) << b;
            if (j) r.J[x] |= bit;
            if (ip) r.Iplus[x] |= bit;
            if (is) r.Istar[x] |= bit;
            if (ip && is) r.I[x] |= bit;
            if (xb == undef || bx == undef) continue;
            bool bothTwoSided = set_has(u.globalTwoSided, xb) && set_has(u.globalTwoSided, bx);
            bool bothRight = set_has(u.globalRight, xb) && set_has(u.globalRight, bx);
            bool bothLeft = set_has(u.globalLeft, xb) && set_has(u.globalLeft, bx);
            if (j && bothTwoSided) r.strongJ[x] |= bit;
            if (ip && bothRight) r.strongIplus[x] |= bit;
            if (is && bothLeft) r.strongIstar[x] |= bit;
            if (ip && is && bothTwoSided) r.strongI[x] |= bit;
        }
    return r;
}

// ---------------------------------------------------------------------------
// Canonical local units

struct CanonicalUnits {
    InverseKind kind;
    std::vector<ElemSet> left;   // {(x xinv) : xinv in kind{}_x}
    std::vector<ElemSet> right;  // {(xinv x) : ...}
    bool uniqueLeft = true;
    bool uniqueRight = true;
};

struct MissingInverseError : std::runtime_error {
    int element;
    MissingInverseError(int e, const std::string& kind)
        : std::runtime_error("element index " + std::to_string(e) + " has no inverse of kind " +
                             kind),
          element(e) {}
};

inline CanonicalUnits canonical_local_units(const Magmoid& m, InverseKind kind) {
    const int n = m.order();
    InverseReport inv = inverse_report(m);
    const auto& rel = inv.plain(kind);
    CanonicalUnits cu;
    cu.kind = kind;
    cu.left.assign(n, 0);
    cu.right.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        if (rel[x] == 0) throw MissingInverseError(x, inverse_kind_name(kind));
        for (int b = 0; b < n; ++b) {
            if (!set_has(rel[x], b)) continue;
            cu.left[x] |= ElemSet(1) << m.cell(x, b);
            cu.right[x] |= ElemSet(1) << m.cell(b, x);
        }
        if (set_size(cu.left[x]) > 1) cu.uniqueLeft = false;
        if (set_size(cu.right[x]) > 1) cu.uniqueRight = false;
    }
    return cu;
}

}  // namespace magmoid

#endif
