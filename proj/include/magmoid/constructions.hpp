#ifndef MAGMOID_CONSTRUCTIONS_HPP
#define MAGMOID_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "magmoid/axioms.hpp"
#include "magmoid/classifier.hpp"
#include "magmoid/core.hpp"

namespace magmoid {

enum class RestrictionMode {
    Prepoloid,
    Pregroupoid,
    SkewPrepoloidLeft,
    SkewPrepoloidRight,
    SkewPregroupoidLeft,
    SkewPregroupoidRight,
};

inline const char* restriction_mode_name(RestrictionMode mode) {
    switch (mode) {
        case RestrictionMode::Prepoloid: return "prepoloid";
        case RestrictionMode::Pregroupoid: return "pregroupoid";
        case RestrictionMode::SkewPrepoloidLeft: return "skew-prepoloid-left";
        case RestrictionMode::SkewPrepoloidRight: return "skew-prepoloid-right";
        case RestrictionMode::SkewPregroupoidLeft: return "skew-pregroupoid-left";
        default: return "skew-pregroupoid-right";
    }
}

inline std::optional<RestrictionMode> restriction_mode_from_name(const std::string& s) {
    if (s == "prepoloid") return RestrictionMode::Prepoloid;
    if (s == "pregroupoid") return RestrictionMode::Pregroupoid;
    if (s == "skew-prepoloid-left") return RestrictionMode::SkewPrepoloidLeft;
    if (s == "skew-prepoloid-right") return RestrictionMode::SkewPrepoloidRight;
    if (s == "skew-pregroupoid-left") return RestrictionMode::SkewPregroupoidLeft;
    if (s == "skew-pregroupoid-right") return RestrictionMode::SkewPregroupoidRight;
    return std::nullopt;
}

struct RestrictionHypothesisError : std::runtime_error {
    int element;
    RestrictionHypothesisError(int e, const std::string& what_)
        : std::runtime_error(what_), element(e) {}
};

namespace detail {

inline Magmoid transpose_table(const Magmoid& m) {
    Magmoid t = m;
    for (int x = 0; x < m.order(); ++x)
        for (int y = 0; y < m.order(); ++y) t.set_cell(x, y, m.cell(y, x));
    return t;
}

// (x.y) defined iff {rho}_x and {lambda}_y share a member (existential form).
inline Magmoid restrict_prepoloid(const Magmoid& m) {
    UnitReport u = units(m);
    for (int x = 0; x < m.order(); ++x) {
        if (u.localLeft[x] == 0)
            throw RestrictionHypothesisError(
                x, "element '" + m.elements[x] + "' has no local left unit");
        if (u.localRight[x] == 0)
            throw RestrictionHypothesisError(
                x, "element '" + m.elements[x] + "' has no local right unit");
    }
    Magmoid r = m;
    for (int x = 0; x < m.order(); ++x)
        for (int y = 0; y < m.order(); ++y)
            if ((u.localRight[x] & u.localLeft[y]) == 0) r.set_cell(x, y, undef);
    return r;
}

// (x.y) defined iff some canonical right unit of x equals some canonical
// left unit of y, over inverses of the given kind.
inline Magmoid restrict_canonical(const Magmoid& m, InverseKind kind) {
    CanonicalUnits cu = canonical_local_units(m, kind);  // throws when inverses are missing
    Magmoid r = m;
    for (int x = 0; x < m.order(); ++x)
        for (int y = 0; y < m.order(); ++y)
            if ((cu.right[x] & cu.left[y]) == 0) r.set_cell(x, y, undef);
    return r;
}

// (x.y) defined iff (x lambda_y) = x for some local left unit lambda_y of y.
inline Magmoid restrict_skew_left(const Magmoid& m) {
    UnitReport u = units(m);
    for (int x = 0; x < m.order(); ++x)
        if (u.localLeft[x] == 0)
            throw RestrictionHypothesisError(
                x, "element '" + m.elements[x] + "' has no local left unit");
    Magmoid r = m;
    for (int x = 0; x < m.order(); ++x)
        for (int y = 0; y < m.order(); ++y) {
            bool keep = false;
            for (int l = 0; l < m.order(); ++l)
                if (set_has(u.localLeft[y], l) && m.cell(x, l) == x) keep = true;
            if (!keep) r.set_cell(x, y, undef);
        }
    return r;
}

// (x.y) defined iff (x lam_y) = x for some canonical local left unit
// lam_y = (y y^-1) over right preinverses of y.
inline Magmoid restrict_skew_groupoid_left(const Magmoid& m) {
    CanonicalUnits cu = canonical_local_units(m, InverseKind::RightPre);
    Magmoid r = m;
    for (int x = 0; x < m.order(); ++x)
        for (int y = 0; y < m.order(); ++y) {
            bool keep = false;
            for (int l = 0; l < m.order(); ++l)
                if (set_has(cu.left[y], l) && m.cell(x, l) == x) keep = true;
            if (!keep) r.set_cell(x, y, undef);
        }
    return r;
}

}  // namespace detail

// The restricted binary operation: same carrier, (x.y) = (xy) wherever the
// mode's definedness rule keeps the cell. Right-handed skew modes are the
// left-right duals: transpose, apply the left rule, transpose back.
inline Magmoid restrict(const Magmoid& m, RestrictionMode mode) {
    Magmoid r;
    switch (mode) {
        case RestrictionMode::Prepoloid:
            r = detail::restrict_prepoloid(m);
            break;
        case RestrictionMode::Pregroupoid:
            r = detail::restrict_canonical(m, InverseKind::Pre);
            break;
        case RestrictionMode::SkewPrepoloidLeft:
            r = detail::restrict_skew_left(m);
            break;
        case RestrictionMode::SkewPrepoloidRight:
            r = detail::transpose_table(detail::restrict_skew_left(detail::transpose_table(m)));
            break;
        case RestrictionMode::SkewPregroupoidLeft:
            r = detail::restrict_skew_groupoid_left(m);
            break;
        case RestrictionMode::SkewPregroupoidRight:
            r = detail::transpose_table(
                detail::restrict_skew_groupoid_left(detail::transpose_table(m)));
            break;
    }
    r.provenance = "restriction of '" + m.name + "', mode " + restriction_mode_name(mode);
    return r;
}

struct RestrictionTheoremReport {
    bool hypothesisSatisfied = false;
    std::string hypothesis;          // human-readable description
    bool conclusionHolds = false;    // the concluded class, when hypothesis holds
    bool unitIdentificationHolds = false;
    std::string concludedClass;
    std::optional<Magmoid> restricted;
};

// Checks the restriction theorem matching the mode: builds the restriction
// under the theorem's uniqueness hypothesis, classifies it, and verifies the
// accompanying unit identification (ell_x = lambda_x, phi_x = lam_x, ...).
inline RestrictionTheoremReport verify_restriction_theorem(const Magmoid& m,
                                                           RestrictionMode mode) {
    RestrictionTheoremReport rep;
    ClassificationReport c = classify(m);
    UnitReport u = units(m);
    const int n = m.order();

    auto canonical_units_or_null = [&](InverseKind kind) -> std::optional<CanonicalUnits> {
        try {
            return canonical_local_units(m, kind);
        } catch (const MissingInverseError&) {
            return std::nullopt;
        }
    };

    bool hyp = false;
    std::optional<CanonicalUnits> cu;
    switch (mode) {
        case RestrictionMode::Prepoloid:
            rep.hypothesis = "prepoloid with unique local units";
            rep.concludedClass = "poloid";
            hyp = c.prepoloid && c.uniqueLocalUnits;
            break;
        case RestrictionMode::Pregroupoid:
            rep.hypothesis = "pregroupoid with unique canonical local units";
            rep.concludedClass = "groupoid";
            cu = canonical_units_or_null(InverseKind::Pre);
            hyp = c.pregroupoid && cu && cu->uniqueLeft && cu->uniqueRight;
            break;
        case RestrictionMode::SkewPrepoloidLeft:
            rep.hypothesis = "left skew-prepoloid with unique local left units";
            rep.concludedClass = "left skew-poloid";
            hyp = c.skewPrepoloidLeft && detail::all_singleton(u.localLeft);
            break;
        case RestrictionMode::SkewPrepoloidRight:
            rep.hypothesis = "right skew-prepoloid with unique local right units";
            rep.concludedClass = "right skew-poloid";
            hyp = c.skewPrepoloidRight && detail::all_singleton(u.localRight);
            break;
        case RestrictionMode::SkewPregroupoidLeft:
            rep.hypothesis = "left skew-pregroupoid with unique right preinverses";
            rep.concludedClass = "left skew-groupoid";
            cu = canonical_units_or_null(InverseKind::RightPre);
            hyp = c.skewPregroupoidLeft && c.uniquePreinversesRight && cu && cu->uniqueLeft;
            break;
        case RestrictionMode::SkewPregroupoidRight:
            rep.hypothesis = "right skew-pregroupoid with unique left preinverses";
            rep.concludedClass = "right skew-groupoid";
            cu = canonical_units_or_null(InverseKind::LeftPre);
            hyp = c.skewPregroupoidRight && c.uniquePreinversesLeft && cu && cu->uniqueRight;
            break;
    }
    rep.hypothesisSatisfied = hyp;
    if (!hyp) return rep;

    Magmoid r = restrict(m, mode);
    rep.restricted = r;
    ClassificationReport rc = classify(r);
    UnitReport ru = units(r);

    auto expected_left = [&](int x) -> ElemSet {
        if (mode == RestrictionMode::Prepoloid || mode == RestrictionMode::SkewPrepoloidLeft)
            return u.localLeft[x];
        if (mode == RestrictionMode::SkewPrepoloidRight) return 0;  // right-handed: no left claim
        return cu ? cu->left[x] : 0;
    };
    auto expected_right = [&](int x) -> ElemSet {
        if (mode == RestrictionMode::Prepoloid || mode == RestrictionMode::SkewPrepoloidRight)
            return u.localRight[x];
        if (mode == RestrictionMode::SkewPrepoloidLeft) return 0;
        if (mode == RestrictionMode::Pregroupoid) return cu->right[x];
        if (mode == RestrictionMode::SkewPregroupoidRight) return cu->right[x];
        return 0;  // SkewPregroupoidLeft: no right claim
    };

    bool unitsOk = true;
    switch (mode) {
        case RestrictionMode::Prepoloid:
        case RestrictionMode::Pregroupoid:
            rep.conclusionHolds =
                mode == RestrictionMode::Prepoloid ? rc.poloid : rc.groupoid;
            for (int x = 0; x < n; ++x) {
                if (ru.effectiveLeft[x] != expected_left(x)) unitsOk = false;
                if (ru.effectiveRight[x] != expected_right(x)) unitsOk = false;
            }
            break;
        case RestrictionMode::SkewPrepoloidLeft:
        case RestrictionMode::SkewPregroupoidLeft:
            rep.conclusionHolds = mode == RestrictionMode::SkewPrepoloidLeft
                                      ? rc.skewPoloidLeft
                                      : rc.skewGroupoidLeft;
            for (int x = 0; x < n; ++x)
                if (ru.twistedLeft[x] != expected_left(x)) unitsOk = false;
            break;
        case RestrictionMode::SkewPrepoloidRight:
        case RestrictionMode::SkewPregroupoidRight:
            rep.conclusionHolds = mode == RestrictionMode::SkewPrepoloidRight
                                      ? rc.skewPoloidRight
                                      : rc.skewGroupoidRight;
            for (int x = 0; x < n; ++x)
                if (ru.twistedRight[x] != expected_right(x)) unitsOk = false;
            break;
    }
    rep.unitIdentificationHolds = unitsOk;
    return rep;
}

}  // namespace magmoid

#endif
