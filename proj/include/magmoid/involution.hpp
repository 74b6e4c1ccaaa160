#ifndef MAGMOID_INVOLUTION_HPP
#define MAGMOID_INVOLUTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "magmoid/axioms.hpp"
#include "magmoid/core.hpp"

namespace magmoid {

// A candidate * operation: a (possibly partial) self-map on the elements of
// a subject magmoid.
struct Involution {
    std::vector<int> map;  // n entries, undef allowed
    bool total = true;     // when set, every element must be mapped

    int star(int x) const { return map[static_cast<size_t>(x)]; }
};

inline Involution involution_from_magmoid(const Magmoid& m, bool total = true) {
    if (!m.has_involution()) throw std::invalid_argument("magmoid carries no involution clause");
    return Involution{m.involution, total};
}

inline Involution identity_involution(const Magmoid& m, bool total = true) {
    Involution inv;
    inv.map.resize(m.order());
    for (int i = 0; i < m.order(); ++i) inv.map[i] = i;
    inv.total = total;
    return inv;
}

struct InvolutionViolation {
    enum Kind { NotTotal, NotInvolutive, NotAntihomomorphic } kind;
    int x = undef, y = undef;  // the offending element or pair
};

// Checks (x*)* = x and (xy)* = (y* x*). In the partial case both laws are
// required only where the involved images exist; totality is enforced only
// when the flag demands it.
inline std::vector<InvolutionViolation> involution_violations(const Magmoid& m,
                                                              const Involution& inv) {
    const int n = m.order();
    std::vector<InvolutionViolation> out;
    if (static_cast<int>(inv.map.size()) != n)
        throw std::invalid_argument("involution map size mismatch");
    for (int x = 0; x < n; ++x) {
        int sx = inv.star(x);
        if (sx == undef) {
            if (inv.total) out.push_back({InvolutionViolation::NotTotal, x});
            continue;
        }
        int ssx = inv.star(sx);
        if (ssx != undef && ssx != x) out.push_back({InvolutionViolation::NotInvolutive, x});
        if (inv.total && ssx == undef) out.push_back({InvolutionViolation::NotTotal, sx});
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xy = m.cell(x, y);
            if (xy == undef) continue;
            int sx = inv.star(x), sy = inv.star(y);
            if (sx == undef || sy == undef) continue;  // partial case: law not triggered
            int sxy = inv.star(xy);
            int rhs = m.cell(sy, sx);
            if (sxy == undef || rhs == undef || sxy != rhs)
                out.push_back({InvolutionViolation::NotAntihomomorphic, x, y});
        }
    return out;
}

inline bool validate_involution(const Magmoid& m, const Involution& inv) {
    return involution_violations(m, inv).empty();
}

// Fixed points of the map.
inline ElemSet unities(const Magmoid& m, const Involution& inv) {
    if (!validate_involution(m, inv)) throw std::invalid_argument("invalid involution");
    ElemSet s = 0;
    for (int x = 0; x < m.order(); ++x)
        if (inv.star(x) == x) s |= ElemSet(1) << x;
    return s;
}

// The unique x+ with ((x x+) x) = (x (x+ x)) = x, ((x+ x) x+) = (x+ (x x+)) = x+
// and (x x+), (x+ x) unities, when it exists. The subject must be a
// semigroupoid, which makes the preinverse unique.
inline std::optional<int> involution_preinverse(const Magmoid& m, const Involution& inv, int x) {
    if (!validate_involution(m, inv)) throw std::invalid_argument("invalid involution");
    if (!associativity_flags(m).S3)
        throw std::invalid_argument("involution_preinverse: subject is not a semigroupoid");
    ElemSet fixed = 0;
    for (int e = 0; e < m.order(); ++e)
        if (inv.star(e) == e) fixed |= ElemSet(1) << e;
    std::optional<int> found;
    for (int p = 0; p < m.order(); ++p) {
        int xp = m.cell(x, p), px = m.cell(p, x);
        if (xp == undef || px == undef) continue;
        if (!set_has(fixed, xp) || !set_has(fixed, px)) continue;
        if (m.cell(xp, x) != x || m.cell(x, px) != x) continue;
        if (m.cell(px, p) != p || m.cell(p, xp) != p) continue;
        if (found)
            throw std::logic_error("multiple involution preinverses in a semigroupoid");
        found = p;
    }
    return found;
}

inline constexpr int involution_search_order_guard = 6;

// All self-maps satisfying the involution laws, in deterministic order
// (lexicographic over the map vector, undef first in the partial search).
inline std::vector<Involution> find_involutions(const Magmoid& m, bool total = true) {
    const int n = m.order();
    if (total && n > involution_search_order_guard)
        throw OrderGuardError("find_involutions: order exceeds guard of 6");
    if (!total && n > 4)
        throw OrderGuardError("find_involutions: partial search order exceeds guard of 4");
    std::vector<Involution> out;
    std::vector<int> map(n, total ? 0 : undef);
    const int lo = total ? 0 : undef;
    while (true) {
        Involution cand{map, total};
        if (involution_violations(m, cand).empty()) out.push_back(cand);
        int i = n - 1;
        while (i >= 0 && map[i] == n - 1) map[i--] = lo;
        if (i < 0) break;
        ++map[i];
    }
    return out;
}

}  // namespace magmoid

#endif
