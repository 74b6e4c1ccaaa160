#ifndef MAGMOID_CLASSIFIER_HPP
#define MAGMOID_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "magmoid/axioms.hpp"
#include "magmoid/core.hpp"

namespace magmoid {

struct ClassificationReport {
    bool total = false;
    bool semigroupoidLeft = false, semigroupoidRight = false, semigroupoidTwoSided = false;
    bool prepoloid = false, pregroupoid = false;
    bool skewPrepoloidLeft = false, skewPrepoloidRight = false;
    bool skewPregroupoidLeft = false, skewPregroupoidRight = false;
    bool poloid = false, groupoid = false;
    bool skewPoloidLeft = false, skewPoloidRight = false;
    bool skewGroupoidLeft = false, skewGroupoidRight = false;
    bool semigroup = false, monoid = false, group = false;
    bool regularSemigroup = false, inverseSemigroup = false;
    bool biUnital = false, leftUnital = false;

    bool uniqueLocalUnits = false;
    bool uniquePreinversesRight = false;  // I+
    bool uniquePreinversesLeft = false;   // I*
    bool uniquePreinverses = false;       // I
    bool uniqueCanonicalLocalUnitsLeft = false;   // over I, when all inverses exist
    bool uniqueCanonicalLocalUnitsRight = false;
    bool uniqueEffectiveUnits = false;

    int identity = undef;  // the two-sided identity, when monoid/group
};

namespace detail {

inline bool all_nonempty(const std::vector<ElemSet>& sets) {
    for (ElemSet s : sets)
        if (s == 0) return false;
    return true;
}

inline bool all_singleton(const std::vector<ElemSet>& sets) {
    for (ElemSet s : sets)
        if (set_size(s) != 1) return false;
    return true;
}

}  // namespace detail

inline ClassificationReport classify(const Magmoid& m) {
    const int n = m.order();
    ClassificationReport c;
    AssocFlags ax = associativity_flags(m);
    UnitReport u = units(m);
    InverseReport inv = inverse_report(m);

    c.total = m.total();
    c.semigroupoidLeft = ax.S1;
    c.semigroupoidRight = ax.S2;
    c.semigroupoidTwoSided = ax.S3;

    bool localBoth = detail::all_nonempty(u.localLeft) && detail::all_nonempty(u.localRight);
    c.prepoloid = ax.S3 && localBoth;
    c.pregroupoid = c.prepoloid && detail::all_nonempty(inv.I);
    c.skewPrepoloidLeft = ax.S1 && detail::all_nonempty(u.localLeft);
    c.skewPrepoloidRight = ax.S2 && detail::all_nonempty(u.localRight);
    c.skewPregroupoidLeft = c.skewPrepoloidLeft && detail::all_nonempty(inv.Iplus);
    c.skewPregroupoidRight = c.skewPrepoloidRight && detail::all_nonempty(inv.Istar);

    c.poloid = ax.S3 && detail::all_nonempty(u.effectiveLeft) &&
               detail::all_nonempty(u.effectiveRight);
    c.groupoid = c.poloid && detail::all_nonempty(inv.strongI);
    c.skewPoloidLeft = ax.S1 && detail::all_singleton(u.twistedLeft);
    c.skewPoloidRight = ax.S2 && detail::all_singleton(u.twistedRight);

    // Skew-groupoid: beyond the existence of strong one-sided preinverses,
    // all such preinverses x', x'' of x must satisfy (xx')=(xx'') and
    // (x'x)=(x''x).
    auto skew_groupoid = [&](bool skewPoloid, const std::vector<ElemSet>& strongRel) {
        if (!skewPoloid || !detail::all_nonempty(strongRel)) return false;
        for (int x = 0; x < n; ++x) {
            int left = undef, right = undef;
            for (int b = 0; b < n; ++b) {
                if (!set_has(strongRel[x], b)) continue;
                int xb = m.cell(x, b), bx = m.cell(b, x);
                if (left == undef) left = xb;
                if (right == undef) right = bx;
                if (xb != left || bx != right) return false;
            }
        }
        return true;
    };
    c.skewGroupoidLeft = skew_groupoid(c.skewPoloidLeft, inv.strongIplus);
    c.skewGroupoidRight = skew_groupoid(c.skewPoloidRight, inv.strongIstar);

    c.semigroup = c.total && ax.S3;
    if (c.semigroup) {
        for (int e = 0; e < n && c.identity == undef; ++e) {
            bool id = true;
            for (int x = 0; x < n; ++x)
                if (m.cell(e, x) != x || m.cell(x, e) != x) {
                    id = false;
                    break;
                }
            if (id) c.identity = e;
        }
        c.monoid = c.identity != undef;
        if (c.monoid) {
            c.group = true;
            for (int x = 0; x < n && c.group; ++x) {
                bool has = false;
                for (int y = 0; y < n; ++y)
                    if (m.cell(x, y) == c.identity && m.cell(y, x) == c.identity) has = true;
                c.group = has;
            }
        }
    }
    c.regularSemigroup = c.semigroup && detail::all_nonempty(inv.J);

    c.uniqueLocalUnits = detail::all_singleton(u.localLeft) && detail::all_singleton(u.localRight);
    c.uniquePreinversesRight = detail::all_singleton(inv.Iplus);
    c.uniquePreinversesLeft = detail::all_singleton(inv.Istar);
    c.uniquePreinverses = detail::all_singleton(inv.I);
    c.inverseSemigroup = c.regularSemigroup && c.uniquePreinverses;

    if (detail::all_nonempty(inv.I)) {
        CanonicalUnits cu = canonical_local_units(m, InverseKind::Pre);
        c.uniqueCanonicalLocalUnitsLeft = cu.uniqueLeft;
        c.uniqueCanonicalLocalUnitsRight = cu.uniqueRight;
    }
    c.uniqueEffectiveUnits =
        detail::all_singleton(u.effectiveLeft) && detail::all_singleton(u.effectiveRight);

    // Finite structures: a choice function exists iff every set is nonempty.
    c.biUnital = ax.S3 && localBoth;
    c.leftUnital = c.skewPrepoloidLeft;

    return c;
}

// Flag lookup by snake_case name, for CLI filters and output.
inline std::vector<std::pair<std::string, bool>> classification_flags(
    const ClassificationReport& c) {
    return {
        {"total", c.total},
        {"left_semigroupoid", c.semigroupoidLeft},
        {"right_semigroupoid", c.semigroupoidRight},
        {"semigroupoid", c.semigroupoidTwoSided},
        {"prepoloid", c.prepoloid},
        {"pregroupoid", c.pregroupoid},
        {"left_skew_prepoloid", c.skewPrepoloidLeft},
        {"right_skew_prepoloid", c.skewPrepoloidRight},
        {"left_skew_pregroupoid", c.skewPregroupoidLeft},
        {"right_skew_pregroupoid", c.skewPregroupoidRight},
        {"poloid", c.poloid},
        {"groupoid", c.groupoid},
        {"left_skew_poloid", c.skewPoloidLeft},
        {"right_skew_poloid", c.skewPoloidRight},
        {"left_skew_groupoid", c.skewGroupoidLeft},
        {"right_skew_groupoid", c.skewGroupoidRight},
        {"semigroup", c.semigroup},
        {"monoid", c.monoid},
        {"group", c.group},
        {"regular_semigroup", c.regularSemigroup},
        {"inverse_semigroup", c.inverseSemigroup},
        {"bi_unital", c.biUnital},
        {"left_unital", c.leftUnital},
        {"unique_local_units", c.uniqueLocalUnits},
        {"unique_right_preinverses", c.uniquePreinversesRight},
        {"unique_left_preinverses", c.uniquePreinversesLeft},
        {"unique_preinverses", c.uniquePreinverses},
        {"unique_canonical_local_units_left", c.uniqueCanonicalLocalUnitsLeft},
        {"unique_canonical_local_units_right", c.uniqueCanonicalLocalUnitsRight},
        {"unique_effective_units", c.uniqueEffectiveUnits},
    };
}

// ---------------------------------------------------------------------------
// Structure maps

struct StructureMaps {
    std::vector<std::vector<int>> sFunctions;  // all total s with (s(x) x) = x
    std::vector<std::vector<int>> tFunctions;  // all total t with (x t(x)) = x
    std::optional<std::vector<int>> iFunction;  // x -> x^-1 when unique per element
};

inline StructureMaps structure_maps(const Magmoid& m, InverseKind kind = InverseKind::Pre) {
    const int n = m.order();
    UnitReport u = units(m);
    InverseReport inv = inverse_report(m);
    StructureMaps sm;

    auto enumerate_choices = [n](const std::vector<ElemSet>& sets,
                                 std::vector<std::vector<int>>& out) {
        for (ElemSet s : sets)
            if (s == 0) return;  // no total map exists
        std::vector<int> pick(n);
        for (int x = 0; x < n; ++x) pick[x] = set_elements(sets[x], n).front();
        while (true) {
            out.push_back(pick);
            int x = n - 1;
            for (; x >= 0; --x) {
                auto opts = set_elements(sets[static_cast<size_t>(x)], n);
                auto it = std::find(opts.begin(), opts.end(), pick[x]);
                if (it + 1 != opts.end()) {
                    pick[x] = *(it + 1);
                    break;
                }
                pick[x] = opts.front();
            }
            if (x < 0) break;
        }
    };
    enumerate_choices(u.localLeft, sm.sFunctions);
    enumerate_choices(u.localRight, sm.tFunctions);

    const auto& rel = inv.plain(kind);
    bool uniq = detail::all_singleton(rel);
    if (uniq) {
        std::vector<int> i(n);
        for (int x = 0; x < n; ++x) i[x] = set_elements(rel[x], n).front();
        sm.iFunction = std::move(i);
    }
    return sm;
}

// ---------------------------------------------------------------------------

struct CommutingIdempotentsResult {
    bool holds = true;
    int i = undef, j = undef;  // counterexample pair when !holds
};

// For all idempotents i, j with (ij) defined: (ji) defined and (ij) = (ji).
inline CommutingIdempotentsResult commuting_idempotents(const Magmoid& m) {
    ElemSet idem = idempotents(m);
    const int n = m.order();
    for (int i = 0; i < n; ++i) {
        if (!set_has(idem, i)) continue;
        for (int j = 0; j < n; ++j) {
            if (!set_has(idem, j)) continue;
            int ij = m.cell(i, j);
            if (ij == undef) continue;
            if (m.cell(j, i) != ij) return {false, i, j};
        }
    }
    return {};
}

}  // namespace magmoid

#endif
