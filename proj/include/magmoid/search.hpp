#ifndef MAGMOID_SEARCH_HPP
#define MAGMOID_SEARCH_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "magmoid/axioms.hpp"
#include "magmoid/classifier.hpp"
#include "magmoid/constructions.hpp"
#include "magmoid/core.hpp"

namespace magmoid {

// ---------------------------------------------------------------------------
// Enumeration of all magmoids of a given order

struct EnumSpec {
    int order = 1;
    bool uptoIso = false;
    std::string filter;  // axiom or classification flag name; empty = none
    bool countOnly = false;
};

inline constexpr int enumerate_order_guard = 3;   // exhaustive modes
inline constexpr int pruned_order_guard = 4;      // backtracking modes

namespace detail {

inline std::uint64_t ipow_u64(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline std::vector<std::string> default_elements(int n) {
    std::vector<std::string> e;
    for (int i = 0; i < n; ++i) e.push_back("e" + std::to_string(i));
    return e;
}

// Decodes a table code into a magmoid: base (n+1) digits, first row-major
// cell most significant, digit 0 = undefined. Ascending codes therefore give
// ascending row-major encodings.
inline Magmoid decode_magmoid(int n, std::uint64_t code) {
    Magmoid m = make_magmoid("m" + std::to_string(code), default_elements(n));
    const int cells = n * n;
    for (int i = cells - 1; i >= 0; --i) {
        m.table[static_cast<size_t>(i)] = static_cast<int>(code % (n + 1)) - 1;
        code /= static_cast<std::uint64_t>(n + 1);
    }
    return m;
}

inline std::uint64_t encode_magmoid(const Magmoid& m) {
    std::uint64_t code = 0;
    for (int c : m.table) code = code * static_cast<std::uint64_t>(m.order() + 1) +
                                 static_cast<std::uint64_t>(c + 1);
    return code;
}

}  // namespace detail

// Predicate for a filter name: an associativity axiom (TA, A1..A3, S1..S3)
// or any classification flag name. Throws on an unknown name.
inline std::function<bool(const Magmoid&)> filter_predicate(const std::string& name) {
    if (name.empty()) return [](const Magmoid&) { return true; };
    bool isAxiom = false;
    axiom_by_name(AssocFlags{}, name, &isAxiom);
    if (isAxiom)
        return [name](const Magmoid& m) { return axiom_by_name(associativity_flags(m), name); };
    // Probe the flag list once to validate the name.
    ClassificationReport probe;
    bool known = false;
    for (const auto& [flag, value] : classification_flags(probe)) {
        (void)value;
        if (flag == name) known = true;
    }
    if (!known) throw std::invalid_argument("unknown filter '" + name + "'");
    return [name](const Magmoid& m) {
        for (const auto& [flag, value] : classification_flags(classify(m)))
            if (flag == name) return value;
        return false;
    };
}

// Visits every magmoid matching the spec in ascending encoding order and
// returns the count. The code range is partitioned across workers; matches
// are re-emitted in ascending order regardless of the worker count.
inline std::uint64_t enumerate(const EnumSpec& spec,
                               const std::function<void(const Magmoid&)>& fn = nullptr,
                               int workers = 1) {
    const int n = spec.order;
    if (n < 1 || n > enumerate_order_guard)
        throw OrderGuardError("enumerate: exhaustive modes require 1 <= order <= 3");
    if (workers < 1) workers = 1;
    auto pred = filter_predicate(spec.filter);
    const std::uint64_t total = detail::ipow_u64(static_cast<std::uint64_t>(n + 1), n * n);

    auto matches_spec = [&](const Magmoid& m) {
        if (spec.uptoIso && cell_encoding(m) != canonical_form(m).key) return false;
        return pred(m);
    };

    // codes start at 1: code 0 is the empty operation, which is not a magmoid
    std::vector<std::vector<std::uint64_t>> found(static_cast<size_t>(workers));
    std::vector<std::uint64_t> counts(static_cast<size_t>(workers), 0);
    auto work = [&](int w) {
        std::uint64_t lo = 1 + (total - 1) * static_cast<std::uint64_t>(w) / workers;
        std::uint64_t hi = 1 + (total - 1) * static_cast<std::uint64_t>(w + 1) / workers;
        for (std::uint64_t code = lo; code < hi; ++code) {
            Magmoid m = detail::decode_magmoid(n, code);
            if (!matches_spec(m)) continue;
            ++counts[static_cast<size_t>(w)];
            if (fn && !spec.countOnly) found[static_cast<size_t>(w)].push_back(code);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    std::uint64_t count = 0;
    for (int w = 0; w < workers; ++w) {
        count += counts[static_cast<size_t>(w)];
        if (fn && !spec.countOnly)
            for (std::uint64_t code : found[static_cast<size_t>(w)])
                fn(detail::decode_magmoid(n, code));
    }
    return count;
}

inline std::string count_line(int order, const std::string& mode, const std::string& filter,
                              std::uint64_t value) {
    std::ostringstream out;
    out << "count order=" << order << " mode=" << mode << " filter="
        << (filter.empty() ? "none" : filter) << " value=" << value;
    return out.str();
}

// ---------------------------------------------------------------------------
// Pruned backtracking generator (associativity filters; allows order 4)

namespace detail {

inline constexpr int unassigned = -2;

// Conclusive violation of an associativity condition on a partially assigned
// table: only triples whose relevant cells are all decided can refute.
inline bool partial_violates(const std::string& axiom, const std::vector<int>& t, int n) {
    const bool needA1 = axiom == "A1" || axiom == "S1" || axiom == "S3" || axiom == "TA";
    const bool needA2 = axiom == "A2" || axiom == "S2" || axiom == "S3" || axiom == "TA";
    const bool needA3 = axiom == "A3" || axiom == "S1" || axiom == "S2" || axiom == "S3";
    const bool needTA = axiom == "TA";
    auto cell = [&](int x, int y) { return t[static_cast<size_t>(x) * n + y]; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int xy = cell(x, y);
                int yz = cell(y, z);
                // left = ((xy)z), right = (x(yz)); unassigned propagates as unknown
                int left = xy == unassigned ? unassigned : (xy == undef ? undef : cell(xy, z));
                int right = yz == unassigned ? unassigned : (yz == undef ? undef : cell(x, yz));
                bool leftKnown = left != unassigned, rightKnown = right != unassigned;
                bool eqRefuted =
                    (leftKnown && left == undef) || (rightKnown && right == undef) ||
                    (leftKnown && rightKnown && left != right);
                if (needTA && eqRefuted) return true;
                if (needA1 && rightKnown && right != undef && eqRefuted) return true;
                if (needA2 && leftKnown && left != undef && eqRefuted) return true;
                if (needA3 && xy != unassigned && xy != undef && yz != unassigned &&
                    yz != undef && eqRefuted)
                    return true;
            }
    return false;
}

}  // namespace detail

// Backtracking enumeration of magmoids satisfying an associativity axiom,
// pruned by conclusive partial violations; emits in ascending encoding
// order. The only exhaustive path to order 4.
inline std::uint64_t enumerate_pruned(int n, const std::string& axiom,
                                      const std::function<void(const Magmoid&)>& fn = nullptr) {
    if (n < 1 || n > pruned_order_guard)
        throw OrderGuardError("enumerate_pruned: requires 1 <= order <= 4");
    bool known = false;
    axiom_by_name(AssocFlags{}, axiom, &known);
    if (!known) throw std::invalid_argument("enumerate_pruned: unknown axiom '" + axiom + "'");

    const int cells = n * n;
    std::vector<int> t(static_cast<size_t>(cells), detail::unassigned);
    std::uint64_t count = 0;
    auto emit = [&]() {
        if (std::all_of(t.begin(), t.end(), [](int c) { return c == undef; })) return;
        ++count;
        if (fn) {
            Magmoid m = make_magmoid("p" + std::to_string(count), detail::default_elements(n));
            m.table = t;
            fn(m);
        }
    };
    std::function<void(int)> place = [&](int i) {
        if (i == cells) {
            emit();
            return;
        }
        for (int v = undef; v < n; ++v) {
            t[static_cast<size_t>(i)] = v;
            if (!detail::partial_violates(axiom, t, n)) place(i + 1);
        }
        t[static_cast<size_t>(i)] = detail::unassigned;
    };
    place(0);
    return count;
}

// ---------------------------------------------------------------------------
// Proposition catalog

// Everything the propositions quantify over, computed once per magmoid.
struct Analysis {
    Magmoid m;
    AssocFlags ax;
    UnitReport u;
    InverseReport inv;
    ClassificationReport cls;
};

inline Analysis analyze(const Magmoid& m) {
    return Analysis{m, associativity_flags(m), units(m), inverse_report(m), classify(m)};
}

struct PropCheck {
    bool applicable = false;
    bool pass = true;
    std::string detail;  // violating tuple, when !pass
};

struct Proposition {
    std::string name;
    std::function<PropCheck(const Analysis&)> fn;
};

namespace detail {

inline int sole(ElemSet s) { return set_elements(s, 16).front(); }

inline std::string tuple2(const Magmoid& m, int x, int y) {
    return "x=" + m.elements[x] + " y=" + m.elements[y];
}

// Conclusion side of a restriction statement: restricts and classifies,
// optionally checking a unit identification.
inline bool restriction_concludes(const Magmoid& m, RestrictionMode mode) {
    Magmoid r = restrict(m, mode);
    ClassificationReport c = classify(r);
    switch (mode) {
        case RestrictionMode::Prepoloid: return c.poloid;
        case RestrictionMode::Pregroupoid: return c.groupoid;
        case RestrictionMode::SkewPrepoloidLeft: return c.skewPoloidLeft;
        case RestrictionMode::SkewPregroupoidLeft: return c.skewGroupoidLeft;
        case RestrictionMode::SkewPrepoloidRight: return c.skewPoloidRight;
        default: return c.skewGroupoidRight;
    }
}

}  // namespace detail

// The named checks of the proposition catalog. Each entry pairs a structural
// hypothesis with a conclusion; inapplicable structures are counted as
// not-applicable, never as passes. "mutated-P6.3" is the built-in
// falsifiability self-test: P6.3 with the uniqueness hypothesis dropped, so
// it must produce counterexamples.
inline const std::vector<Proposition>& proposition_catalog() {
    static const std::vector<Proposition> catalog = [] {
        std::vector<Proposition> c;
        auto add = [&](std::string name, std::function<PropCheck(const Analysis&)> fn) {
            c.push_back({std::move(name), std::move(fn)});
        };
        auto idem = [](const Analysis& a) { return idempotents(a.m); };

        // --- idempotents (5.x)
        add("P5.1", [idem](const Analysis& a) {
            ElemSet is = idem(a);
            if (is == 0) return PropCheck{};
            PropCheck r{true, true, ""};
            for (int i = 0; i < a.m.order(); ++i)
                if (set_has(is, i) &&
                    !(set_has(a.u.localLeft[i], i) && set_has(a.u.localRight[i], i))) {
                    r.pass = false;
                    r.detail = "i=" + a.m.elements[i];
                }
            return r;
        });
        add("C5.1", [idem](const Analysis& a) {
            if (!a.cls.uniqueLocalUnits) return PropCheck{};
            ElemSet is = idem(a);
            if (is == 0) return PropCheck{};
            PropCheck r{true, true, ""};
            for (int i = 0; i < a.m.order(); ++i)
                if (set_has(is, i) && (detail::sole(a.u.localLeft[i]) != i ||
                                       detail::sole(a.u.localRight[i]) != i)) {
                    r.pass = false;
                    r.detail = "i=" + a.m.elements[i];
                }
            return r;
        });
        add("P5.2", [idem](const Analysis& a) {
            ElemSet is = idem(a);
            if (is == 0) return PropCheck{};
            PropCheck r{true, true, ""};
            for (int i = 0; i < a.m.order(); ++i)
                if (set_has(is, i) && !(set_has(a.inv.Iplus[i], i) && set_has(a.inv.Istar[i], i) &&
                                        set_has(a.inv.I[i], i))) {
                    r.pass = false;
                    r.detail = "i=" + a.m.elements[i];
                }
            return r;
        });
        add("C5.2", [idem](const Analysis& a) {
            bool up = a.cls.uniquePreinversesRight, ul = a.cls.uniquePreinversesLeft,
                 ut = a.cls.uniquePreinverses;
            if (!(up || ul || ut)) return PropCheck{};
            ElemSet is = idem(a);
            if (is == 0) return PropCheck{};
            PropCheck r{true, true, ""};
            for (int i = 0; i < a.m.order(); ++i) {
                if (!set_has(is, i)) continue;
                if ((up && detail::sole(a.inv.Iplus[i]) != i) ||
                    (ul && detail::sole(a.inv.Istar[i]) != i) ||
                    (ut && detail::sole(a.inv.I[i]) != i)) {
                    r.pass = false;
                    r.detail = "i=" + a.m.elements[i];
                }
            }
            return r;
        });
        add("P5.3", [idem](const Analysis& a) {
            // three hypothesis routes; check each that applies
            struct Route {
                bool hyp;
                const std::vector<ElemSet>* rel;
            };
            Route routes[] = {
                {a.ax.S1 && detail::all_singleton(a.inv.Iplus), &a.inv.Iplus},
                {a.ax.S2 && detail::all_singleton(a.inv.Istar), &a.inv.Istar},
                {a.ax.S3 && detail::all_singleton(a.inv.I), &a.inv.I},
            };
            PropCheck r;
            for (const Route& route : routes) {
                if (!route.hyp) continue;
                r.applicable = true;
                ElemSet made = 0;
                for (int x = 0; x < a.m.order(); ++x) {
                    int xi = detail::sole((*route.rel)[x]);
                    int xxv = a.m.cell(x, xi), vxx = a.m.cell(xi, x);
                    if (xxv == undef || a.m.cell(xxv, xxv) != xxv || vxx == undef ||
                        a.m.cell(vxx, vxx) != vxx) {
                        r.pass = false;
                        r.detail = "x=" + a.m.elements[x];
                        return r;
                    }
                    if (xxv == vxx) made |= ElemSet(1) << xxv;
                }
                ElemSet is = idem(a);
                if ((is & made) != is) {
                    r.pass = false;
                    r.detail = "idempotent not of the form (xx^-1)=(x^-1x)";
                }
            }
            return r;
        });

        // --- prepoloids (6.1 - 6.11)
        add("P6.1", [](const Analysis& a) {
            if (!a.cls.prepoloid) return PropCheck{};
            PropCheck r{true, true, ""};
            for (int x = 0; x < a.m.order(); ++x)
                for (int y = 0; y < a.m.order(); ++y)
                    if ((a.u.localRight[x] & a.u.localLeft[y]) != 0 && a.m.cell(x, y) == undef) {
                        r.pass = false;
                        r.detail = detail::tuple2(a.m, x, y);
                    }
            return r;
        });
        auto p62 = [](const Analysis& a, bool mutated) {
            PropCheck r;
            if (!a.cls.prepoloid || !a.cls.uniqueLocalUnits) return r;
            (void)mutated;
            r.applicable = true;
            for (int x = 0; x < a.m.order(); ++x) {
                int lx = detail::sole(a.u.localLeft[x]), rx = detail::sole(a.u.localRight[x]);
                bool ok = a.m.cell(lx, lx) == lx && detail::sole(a.u.localLeft[lx]) == lx &&
                          detail::sole(a.u.localRight[lx]) == lx && a.m.cell(rx, rx) == rx &&
                          detail::sole(a.u.localLeft[rx]) == rx &&
                          detail::sole(a.u.localRight[rx]) == rx;
                if (!ok) {
                    r.pass = false;
                    r.detail = "x=" + a.m.elements[x];
                }
            }
            return r;
        };
        add("P6.2", [p62](const Analysis& a) { return p62(a, false); });
        add("P6.3", [](const Analysis& a) {
            PropCheck r;
            if (!a.cls.prepoloid || !a.cls.uniqueLocalUnits) return r;
            r.applicable = true;
            for (int x = 0; x < a.m.order(); ++x)
                for (int y = 0; y < a.m.order(); ++y) {
                    int xy = a.m.cell(x, y);
                    if (xy == undef) continue;
                    if (a.u.localLeft[xy] != a.u.localLeft[x] ||
                        a.u.localRight[xy] != a.u.localRight[y]) {
                        r.pass = false;
                        r.detail = detail::tuple2(a.m, x, y);
                    }
                }
            return r;
        });
        add("P6.4", [](const Analysis& a) {
            if (!a.ax.S3) return PropCheck{};
            PropCheck r{true, true, ""};
            bool allJ = detail::all_nonempty(a.inv.J);
            bool allI = detail::all_nonempty(a.inv.I);
            if (allJ != allI) {
                r.pass = false;
                r.detail = allJ ? "pseudoinverses without preinverses"
                                : "preinverses without pseudoinverses";
            }
            return r;
        });
        add("L6.5", [idem](const Analysis& a) {
            PropCheck r;
            if (!a.cls.pregroupoid || !a.cls.uniquePreinverses) return r;
            r.applicable = true;
            ElemSet is = idem(a);
            for (int i = 0; i < a.m.order(); ++i)
                for (int j = 0; j < a.m.order(); ++j) {
                    if (!set_has(is, i) || !set_has(is, j)) continue;
                    int ij = a.m.cell(i, j);
                    if (ij == undef) continue;
                    int ji = a.m.cell(j, i);
                    if (a.m.cell(ij, ij) != ij || ji == undef || a.m.cell(ji, ji) != ji) {
                        r.pass = false;
                        r.detail = detail::tuple2(a.m, i, j);
                    }
                }
            return r;
        });
        add("P6.6", [](const Analysis& a) {
            if (!a.cls.pregroupoid) return PropCheck{};
            PropCheck r{true, true, ""};
            CommutingIdempotentsResult ci = commuting_idempotents(a.m);
            if (a.cls.uniquePreinverses != ci.holds) {
                r.pass = false;
                r.detail = ci.holds ? "commuting idempotents, non-unique preinverses"
                                    : detail::tuple2(a.m, ci.i, ci.j);
            }
            return r;
        });
        add("P6.7", [](const Analysis& a) {
            // needs unique local units on top of the stated hypothesis
            PropCheck r;
            if (!a.cls.pregroupoid || !a.cls.uniquePreinverses || !a.cls.uniqueLocalUnits)
                return r;
            r.applicable = true;
            for (int x = 0; x < a.m.order(); ++x) {
                int lx = detail::sole(a.u.localLeft[x]), rx = detail::sole(a.u.localRight[x]);
                if (detail::sole(a.inv.I[lx]) != lx || detail::sole(a.inv.I[rx]) != rx) {
                    r.pass = false;
                    r.detail = "x=" + a.m.elements[x];
                }
            }
            return r;
        });
        add("P6.8", [](const Analysis& a) {
            PropCheck r;
            if (!a.cls.pregroupoid || !a.cls.uniquePreinverses) return r;
            r.applicable = true;
            for (int x = 0; x < a.m.order(); ++x) {
                int xi = detail::sole(a.inv.I[x]);
                if (detail::sole(a.inv.I[xi]) != x) {
                    r.pass = false;
                    r.detail = "x=" + a.m.elements[x];
                }
            }
            return r;
        });
        add("P6.9", [](const Analysis& a) {
            PropCheck r;
            if (!a.cls.pregroupoid || !a.cls.uniquePreinverses) return r;
            r.applicable = true;
            for (int x = 0; x < a.m.order(); ++x)
                for (int y = 0; y < a.m.order(); ++y) {
                    int xy = a.m.cell(x, y);
                    if (xy == undef) continue;
                    int yi = detail::sole(a.inv.I[y]), xi = detail::sole(a.inv.I[x]);
                    if (a.m.cell(yi, xi) != detail::sole(a.inv.I[xy])) {
                        r.pass = false;
                        r.detail = detail::tuple2(a.m, x, y);
                    }
                }
            return r;
        });
        auto canon_two_sided = [](const Analysis& a) -> std::optional<CanonicalUnits> {
            if (!detail::all_nonempty(a.inv.I)) return std::nullopt;
            return canonical_local_units(a.m, InverseKind::Pre);
        };
        add("P6.10", [canon_two_sided](const Analysis& a) {
            PropCheck r;
            if (!a.cls.pregroupoid) return r;
            auto cu = canon_two_sided(a);
            if (!cu || !cu->uniqueLeft || !cu->uniqueRight) return r;
            r.applicable = true;
            for (int x = 0; x < a.m.order(); ++x) {
                int lx = detail::sole(cu->left[x]), rx = detail::sole(cu->right[x]);
                bool ok = a.m.cell(lx, lx) == lx && detail::sole(cu->left[lx]) == lx &&
                          detail::sole(cu->right[lx]) == lx && a.m.cell(rx, rx) == rx &&
                          detail::sole(cu->right[rx]) == rx && detail::sole(cu->left[rx]) == rx;
                if (!ok) {
                    r.pass = false;
                    r.detail = "x=" + a.m.elements[x];
                }
            }
            return r;
        });
        add("P6.11", [canon_two_sided](const Analysis& a) {
            // needs unique local units on top of unique canonical ones:
            // the two-element meet semilattice has unique canonical local
            // units yet its top element breaks both equations
            PropCheck r;
            if (!a.cls.pregroupoid || !a.cls.uniqueLocalUnits) return r;
            auto cu = canon_two_sided(a);
            if (!cu || !cu->uniqueLeft || !cu->uniqueRight) return r;
            r.applicable = true;
            for (int x = 0; x < a.m.order(); ++x)
                for (int y = 0; y < a.m.order(); ++y) {
                    int xy = a.m.cell(x, y);
                    if (xy == undef) continue;
                    if (cu->left[xy] != cu->left[x] || cu->right[xy] != cu->right[y]) {
                        r.pass = false;
                        r.detail = detail::tuple2(a.m, x, y);
                    }
                }
            return r;
        });

        // --- skew-prepoloids (6.12 - 6.18)
        add("P6.12", [](const Analysis& a) {
            if (!a.cls.skewPrepoloidLeft) return PropCheck{};
            PropCheck r{true, true, ""};
            for (int x = 0; x < a.m.order(); ++x)
                for (int y = 0; y < a.m.order(); ++y)
                    for (int l = 0; l < a.m.order(); ++l)
                        if (set_has(a.u.localLeft[y], l) && a.m.cell(x, l) != undef &&
                            a.m.cell(x, y) == undef) {
                            r.pass = false;
                            r.detail = detail::tuple2(a.m, x, y);
                        }
            return r;
        });
        add("P6.13", [](const Analysis& a) {
            PropCheck r;
            if (!a.cls.skewPrepoloidLeft || !detail::all_singleton(a.u.localLeft)) return r;
            r.applicable = true;
            for (int x = 0; x < a.m.order(); ++x) {
                int lx = detail::sole(a.u.localLeft[x]);
                if (a.m.cell(lx, lx) != lx || detail::sole(a.u.localLeft[lx]) != lx) {
                    r.pass = false;
                    r.detail = "x=" + a.m.elements[x];
                }
            }
            return r;
        });
        add("P6.14", [](const Analysis& a) {
            PropCheck r;
            if (!a.cls.skewPrepoloidLeft || !detail::all_singleton(a.u.localLeft)) return r;
            r.applicable = true;
            for (int x = 0; x < a.m.order(); ++x)
                for (int y = 0; y < a.m.order(); ++y) {
                    int xy = a.m.cell(x, y);
                    if (xy != undef && a.u.localLeft[xy] != a.u.localLeft[x]) {
                        r.pass = false;
                        r.detail = detail::tuple2(a.m, x, y);
                    }
                }
            return r;
        });
        add("P6.15", [](const Analysis& a) {
            // needs unique local left units on top of the stated hypothesis
            PropCheck r;
            if (!a.cls.skewPregroupoidLeft || !a.cls.uniquePreinversesRight ||
                !detail::all_singleton(a.u.localLeft))
                return r;
            r.applicable = true;
            for (int x = 0; x < a.m.order(); ++x) {
                int lx = detail::sole(a.u.localLeft[x]);
                if (detail::sole(a.inv.Iplus[lx]) != lx) {
                    r.pass = false;
                    r.detail = "x=" + a.m.elements[x];
                }
            }
            return r;
        });
        add("P6.16", [](const Analysis& a) {
            PropCheck r;
            if (!a.cls.skewPregroupoidLeft || !a.cls.uniquePreinversesRight) return r;
            r.applicable = true;
            for (int x = 0; x < a.m.order(); ++x) {
                int xi = detail::sole(a.inv.Iplus[x]);
                if (detail::sole(a.inv.Iplus[xi]) != x) {
                    r.pass = false;
                    r.detail = "x=" + a.m.elements[x];
                }
            }
            return r;
        });
        auto canon_right_pre = [](const Analysis& a) -> std::optional<CanonicalUnits> {
            if (!detail::all_nonempty(a.inv.Iplus)) return std::nullopt;
            return canonical_local_units(a.m, InverseKind::RightPre);
        };
        add("P6.17", [canon_right_pre](const Analysis& a) {
            PropCheck r;
            if (!a.cls.skewPregroupoidLeft) return r;
            auto cu = canon_right_pre(a);
            if (!cu || !cu->uniqueLeft) return r;
            r.applicable = true;
            for (int x = 0; x < a.m.order(); ++x) {
                int lx = detail::sole(cu->left[x]);
                if (a.m.cell(lx, lx) != lx || detail::sole(cu->left[lx]) != lx) {
                    r.pass = false;
                    r.detail = "x=" + a.m.elements[x];
                }
            }
            return r;
        });
        add("P6.18", [canon_right_pre](const Analysis& a) {
            // needs unique local left units on top of unique canonical ones
            // (same semilattice counterexample as for the two-sided claim)
            PropCheck r;
            if (!a.cls.skewPregroupoidLeft || !detail::all_singleton(a.u.localLeft)) return r;
            auto cu = canon_right_pre(a);
            if (!cu || !cu->uniqueLeft) return r;
            r.applicable = true;
            for (int x = 0; x < a.m.order(); ++x)
                for (int y = 0; y < a.m.order(); ++y) {
                    int xy = a.m.cell(x, y);
                    if (xy != undef && cu->left[xy] != cu->left[x]) {
                        r.pass = false;
                        r.detail = detail::tuple2(a.m, x, y);
                    }
                }
            return r;
        });

        // --- poloids (7.1 - 7.12)
        add("P7.1", [](const Analysis& a) {
            if (!a.cls.poloid) return PropCheck{};
            PropCheck r{true, true, ""};
            for (int e = 0; e < a.m.order(); ++e)
                for (int f = 0; f < a.m.order(); ++f)
                    if (set_has(a.u.globalTwoSided, e) && set_has(a.u.globalTwoSided, f) &&
                        a.m.cell(e, f) != undef && e != f) {
                        r.pass = false;
                        r.detail = detail::tuple2(a.m, e, f);
                    }
            return r;
        });
        add("P7.2", [](const Analysis& a) {
            if (!a.cls.poloid) return PropCheck{};
            PropCheck r{true, true, ""};
            if (!detail::all_singleton(a.u.effectiveLeft) ||
                !detail::all_singleton(a.u.effectiveRight)) {
                r.pass = false;
                r.detail = "non-unique effective units";
            }
            return r;
        });
        add("P7.3", [](const Analysis& a) {
            if (!a.cls.poloid) return PropCheck{};
            PropCheck r{true, true, ""};
            for (int x = 0; x < a.m.order(); ++x)
                for (int y = 0; y < a.m.order(); ++y) {
                    bool defined = a.m.cell(x, y) != undef;
                    bool match = (a.u.effectiveRight[x] & a.u.effectiveLeft[y]) != 0;
                    if (defined != match) {
                        r.pass = false;
                        r.detail = detail::tuple2(a.m, x, y);
                    }
                }
            return r;
        });
        add("P7.4", [](const Analysis& a) {
            if (!a.cls.poloid) return PropCheck{};
            PropCheck r{true, true, ""};
            for (int e = 0; e < a.m.order(); ++e)
                if (set_has(a.u.globalTwoSided, e) &&
                    !(a.m.cell(e, e) == e && detail::sole(a.u.effectiveLeft[e]) == e &&
                      detail::sole(a.u.effectiveRight[e]) == e)) {
                    r.pass = false;
                    r.detail = "e=" + a.m.elements[e];
                }
            return r;
        });
        add("C7.5", [](const Analysis& a) {
            if (!a.cls.poloid) return PropCheck{};
            PropCheck r{true, true, ""};
            for (int x = 0; x < a.m.order(); ++x) {
                int lx = detail::sole(a.u.effectiveLeft[x]);
                int rx = detail::sole(a.u.effectiveRight[x]);
                bool ok = a.m.cell(lx, lx) == lx && detail::sole(a.u.effectiveLeft[lx]) == lx &&
                          detail::sole(a.u.effectiveRight[lx]) == lx &&
                          a.m.cell(rx, rx) == rx && detail::sole(a.u.effectiveLeft[rx]) == rx &&
                          detail::sole(a.u.effectiveRight[rx]) == rx;
                if (!ok) {
                    r.pass = false;
                    r.detail = "x=" + a.m.elements[x];
                }
            }
            return r;
        });
        add("P7.6", [](const Analysis& a) {
            if (!a.cls.poloid) return PropCheck{};
            PropCheck r{true, true, ""};
            for (int x = 0; x < a.m.order(); ++x)
                for (int y = 0; y < a.m.order(); ++y) {
                    int xy = a.m.cell(x, y);
                    if (xy == undef) continue;
                    if (a.u.effectiveLeft[xy] != a.u.effectiveLeft[x] ||
                        a.u.effectiveRight[xy] != a.u.effectiveRight[y]) {
                        r.pass = false;
                        r.detail = detail::tuple2(a.m, x, y);
                    }
                }
            return r;
        });
        add("P7.7", [](const Analysis& a) {
            if (!a.cls.poloid) return PropCheck{};
            PropCheck r{true, true, ""};
            for (int x = 0; x < a.m.order(); ++x)
                if ((a.inv.strongJ[x] & ~a.inv.strongI[x]) != 0) {
                    r.pass = false;
                    r.detail = "x=" + a.m.elements[x];
                }
            return r;
        });
        add("P7.8", [](const Analysis& a) {
            if (!a.cls.poloid) return PropCheck{};
            PropCheck r{true, true, ""};
            for (int x = 0; x < a.m.order(); ++x)
                if (set_size(a.inv.strongJ[x]) > 1) {
                    r.pass = false;
                    r.detail = "x=" + a.m.elements[x];
                }
            return r;
        });
        add("C7.9", [](const Analysis& a) {
            if (!a.cls.groupoid) return PropCheck{};
            PropCheck r{true, true, ""};
            if (!detail::all_singleton(a.inv.strongI)) {
                r.pass = false;
                r.detail = "non-unique strong preinverses";
            }
            return r;
        });
        add("P7.10", [](const Analysis& a) {
            if (!a.cls.groupoid) return PropCheck{};
            PropCheck r{true, true, ""};
            for (int e = 0; e < a.m.order(); ++e)
                if (set_has(a.u.globalTwoSided, e) && detail::sole(a.inv.strongI[e]) != e) {
                    r.pass = false;
                    r.detail = "e=" + a.m.elements[e];
                }
            return r;
        });
        add("P7.11", [](const Analysis& a) {
            if (!a.cls.groupoid) return PropCheck{};
            PropCheck r{true, true, ""};
            for (int x = 0; x < a.m.order(); ++x) {
                int xi = detail::sole(a.inv.strongI[x]);
                if (detail::sole(a.inv.strongI[xi]) != x) {
                    r.pass = false;
                    r.detail = "x=" + a.m.elements[x];
                }
            }
            return r;
        });
        add("P7.12", [](const Analysis& a) {
            if (!a.cls.groupoid) return PropCheck{};
            PropCheck r{true, true, ""};
            for (int x = 0; x < a.m.order(); ++x)
                for (int y = 0; y < a.m.order(); ++y) {
                    int xy = a.m.cell(x, y);
                    if (xy == undef) continue;
                    int yi = detail::sole(a.inv.strongI[y]);
                    int xi = detail::sole(a.inv.strongI[x]);
                    if (a.m.cell(yi, xi) != detail::sole(a.inv.strongI[xy])) {
                        r.pass = false;
                        r.detail = detail::tuple2(a.m, x, y);
                    }
                }
            return r;
        });

        // --- skew-poloids and skew-groupoids (7.13 - 7.18)
        auto phi_pool = [](const Analysis& a) {
            ElemSet s = 0;
            for (int x = 0; x < a.m.order(); ++x) s |= a.u.twistedLeft[x];
            return s;
        };
        add("P7.13", [phi_pool](const Analysis& a) {
            if (!a.cls.skewPoloidLeft) return PropCheck{};
            PropCheck r{true, true, ""};
            ElemSet pool = phi_pool(a);
            for (int p = 0; p < a.m.order(); ++p)
                for (int q = 0; q < a.m.order(); ++q) {
                    if (!set_has(pool, p) || !set_has(pool, q)) continue;
                    int pq = a.m.cell(p, q), qp = a.m.cell(q, p);
                    if (pq != undef && pq == qp && p != q) {
                        r.pass = false;
                        r.detail = detail::tuple2(a.m, p, q);
                    }
                }
            return r;
        });
        add("P7.14", [](const Analysis& a) {
            if (!a.cls.skewPoloidLeft) return PropCheck{};
            PropCheck r{true, true, ""};
            for (int x = 0; x < a.m.order(); ++x)
                for (int y = 0; y < a.m.order(); ++y) {
                    int phi = detail::sole(a.u.twistedLeft[y]);
                    bool defined = a.m.cell(x, y) != undef;
                    bool viaPhi = a.m.cell(x, phi) != undef;
                    bool viaPhiEq = a.m.cell(x, phi) == x;
                    if (defined != viaPhi || (defined && !viaPhiEq)) {
                        r.pass = false;
                        r.detail = detail::tuple2(a.m, x, y);
                    }
                }
            return r;
        });
        add("P7.15", [](const Analysis& a) {
            if (!a.cls.skewPoloidLeft) return PropCheck{};
            PropCheck r{true, true, ""};
            for (int x = 0; x < a.m.order(); ++x) {
                int phi = detail::sole(a.u.twistedLeft[x]);
                if (a.m.cell(phi, phi) != phi || detail::sole(a.u.twistedLeft[phi]) != phi) {
                    r.pass = false;
                    r.detail = "x=" + a.m.elements[x];
                }
            }
            return r;
        });
        add("P7.16", [](const Analysis& a) {
            if (!a.cls.skewPoloidLeft) return PropCheck{};
            PropCheck r{true, true, ""};
            for (int x = 0; x < a.m.order(); ++x)
                for (int y = 0; y < a.m.order(); ++y) {
                    int xy = a.m.cell(x, y);
                    if (xy != undef && a.u.twistedLeft[xy] != a.u.twistedLeft[x]) {
                        r.pass = false;
                        r.detail = detail::tuple2(a.m, x, y);
                    }
                }
            return r;
        });
        add("P7.17", [](const Analysis& a) {
            if (!a.cls.skewGroupoidLeft) return PropCheck{};
            PropCheck r{true, true, ""};
            if (!detail::all_singleton(a.inv.strongIplus)) {
                r.pass = false;
                r.detail = "non-unique strong right preinverses";
            }
            return r;
        });
        add("P7.18", [phi_pool](const Analysis& a) {
            if (!a.cls.skewGroupoidLeft || !detail::all_singleton(a.inv.strongIplus))
                return PropCheck{};
            PropCheck r{true, true, ""};
            ElemSet pool = phi_pool(a);
            for (int p = 0; p < a.m.order(); ++p)
                if (set_has(pool, p) && detail::sole(a.inv.strongIplus[p]) != p) {
                    r.pass = false;
                    r.detail = "phi=" + a.m.elements[p];
                }
            for (int x = 0; x < a.m.order(); ++x) {
                int xi = detail::sole(a.inv.strongIplus[x]);
                if (detail::sole(a.inv.strongIplus[xi]) != x) {
                    r.pass = false;
                    r.detail = "x=" + a.m.elements[x];
                }
            }
            return r;
        });

        // --- restriction lemmas and theorems (8.x)
        auto restriction_prop = [](RestrictionMode mode,
                                   std::function<bool(const Analysis&)> hyp, bool checkUnits) {
            return [mode, hyp, checkUnits](const Analysis& a) {
                PropCheck r;
                if (!hyp(a)) return r;
                r.applicable = true;
                if (checkUnits) {
                    RestrictionTheoremReport rep = verify_restriction_theorem(a.m, mode);
                    if (!rep.hypothesisSatisfied || !rep.conclusionHolds ||
                        !rep.unitIdentificationHolds) {
                        r.pass = false;
                        r.detail = "restriction conclusion fails";
                    }
                } else if (!detail::restriction_concludes(a.m, mode)) {
                    r.pass = false;
                    r.detail = "restriction conclusion fails";
                }
                return r;
            };
        };
        auto hypPrepoloidUnique = [](const Analysis& a) {
            return a.cls.prepoloid && a.cls.uniqueLocalUnits;
        };
        auto hypPregroupoidCanon = [](const Analysis& a) {
            return a.cls.pregroupoid && a.cls.uniqueCanonicalLocalUnitsLeft &&
                   a.cls.uniqueCanonicalLocalUnitsRight;
        };
        auto hypSkewPrepoloidUnique = [](const Analysis& a) {
            return a.cls.skewPrepoloidLeft && detail::all_singleton(a.u.localLeft);
        };
        auto hypSkewPregroupoidCanon = [canon_right_pre](const Analysis& a) {
            // unique canonical left units alone are not enough: the left-zero
            // semigroup satisfies them yet restricts to itself, where strong
            // right preinverses disagree; unique right preinverses close the gap
            if (!a.cls.skewPregroupoidLeft || !a.cls.uniquePreinversesRight) return false;
            auto cu = canon_right_pre(a);
            return cu && cu->uniqueLeft;
        };
        add("L8.1", restriction_prop(RestrictionMode::Prepoloid, hypPrepoloidUnique, true));
        add("L8.2", restriction_prop(RestrictionMode::Pregroupoid, hypPregroupoidCanon, true));
        add("L8.3",
            restriction_prop(RestrictionMode::SkewPrepoloidLeft, hypSkewPrepoloidUnique, true));
        add("L8.4", restriction_prop(RestrictionMode::SkewPregroupoidLeft,
                                     hypSkewPregroupoidCanon, true));
        add("T8.1", restriction_prop(RestrictionMode::Prepoloid, hypPrepoloidUnique, false));
        add("T8.2", restriction_prop(RestrictionMode::Pregroupoid, hypPregroupoidCanon, false));
        add("C8.2", restriction_prop(
                        RestrictionMode::Pregroupoid,
                        [](const Analysis& a) {
                            return a.cls.regularSemigroup && a.cls.uniqueCanonicalLocalUnitsLeft &&
                                   a.cls.uniqueCanonicalLocalUnitsRight;
                        },
                        false));
        add("T8.3", restriction_prop(
                        RestrictionMode::Pregroupoid,
                        [](const Analysis& a) {
                            return a.cls.pregroupoid && a.cls.uniquePreinverses;
                        },
                        false));
        add("C8.3", restriction_prop(
                        RestrictionMode::Pregroupoid,
                        [](const Analysis& a) { return a.cls.inverseSemigroup; }, false));
        add("T8.4", restriction_prop(RestrictionMode::SkewPrepoloidLeft, hypSkewPrepoloidUnique,
                                     false));
        add("T8.5", restriction_prop(RestrictionMode::SkewPregroupoidLeft,
                                     hypSkewPregroupoidCanon, false));
        add("T8.6", restriction_prop(
                        RestrictionMode::SkewPregroupoidLeft,
                        [](const Analysis& a) {
                            return a.cls.skewPregroupoidLeft && a.cls.uniquePreinversesRight;
                        },
                        false));

        // --- the falsifiability self-test: P6.3 with uniqueness dropped
        add("mutated-P6.3", [](const Analysis& a) {
            PropCheck r;
            if (!a.cls.prepoloid) return r;
            r.applicable = true;
            for (int x = 0; x < a.m.order(); ++x)
                for (int y = 0; y < a.m.order(); ++y) {
                    int xy = a.m.cell(x, y);
                    if (xy == undef) continue;
                    if (a.u.localLeft[xy] != a.u.localLeft[x] ||
                        a.u.localRight[xy] != a.u.localRight[y]) {
                        r.pass = false;
                        r.detail = detail::tuple2(a.m, x, y);
                        return r;
                    }
                }
            return r;
        });
        return c;
    }();
    return catalog;
}

inline const Proposition* find_proposition(const std::string& name) {
    for (const auto& p : proposition_catalog())
        if (p.name == name) return &p;
    return nullptr;
}

// ---------------------------------------------------------------------------
// Exhaustive proposition verification

struct PropWitness {
    std::uint64_t code = 0;  // table code, for deterministic ordering
    int order = 0;
    std::string magmoidText;
    std::string detail;
};

struct PropResult {
    std::string name;
    std::uint64_t hypothesisCount = 0;
    std::uint64_t passCount = 0;
    std::uint64_t failureCount = 0;
    std::vector<PropWitness> witnesses;
};

// Runs the selected propositions over every labeled magmoid of order 1 to
// maxOrder. Empty selection = the whole catalog except the built-in
// mutation. Deterministic for any worker count.
inline std::vector<PropResult> verify_propositions(int maxOrder,
                                                   const std::vector<std::string>& names = {},
                                                   int workers = 1, int witnessCap = 3) {
    if (maxOrder < 1 || maxOrder > enumerate_order_guard)
        throw OrderGuardError("verify_propositions: requires 1 <= order <= 3");
    if (workers < 1) workers = 1;
    std::vector<const Proposition*> props;
    if (names.empty()) {
        for (const auto& p : proposition_catalog())
            if (p.name != "mutated-P6.3") props.push_back(&p);
    } else {
        for (const auto& name : names) {
            const Proposition* p = find_proposition(name);
            if (!p) throw std::invalid_argument("unknown proposition '" + name + "'");
            props.push_back(p);
        }
    }

    std::vector<std::vector<PropResult>> partial(
        static_cast<size_t>(workers),
        [&] {
            std::vector<PropResult> init;
            for (const auto* p : props) init.push_back(PropResult{p->name});
            return init;
        }());

    for (int n = 1; n <= maxOrder; ++n) {
        const std::uint64_t total = detail::ipow_u64(static_cast<std::uint64_t>(n + 1), n * n);
        auto work = [&](int w) {
            std::uint64_t lo = 1 + (total - 1) * static_cast<std::uint64_t>(w) / workers;
            std::uint64_t hi = 1 + (total - 1) * static_cast<std::uint64_t>(w + 1) / workers;
            auto& results = partial[static_cast<size_t>(w)];
            for (std::uint64_t code = lo; code < hi; ++code) {
                Magmoid m = detail::decode_magmoid(n, code);
                Analysis a = analyze(m);
                for (size_t i = 0; i < props.size(); ++i) {
                    PropCheck chk = props[i]->fn(a);
                    if (!chk.applicable) continue;
                    ++results[i].hypothesisCount;
                    if (chk.pass) {
                        ++results[i].passCount;
                    } else {
                        ++results[i].failureCount;
                        results[i].witnesses.push_back(
                            PropWitness{code, n, serialize_magmoid(m), chk.detail});
                    }
                }
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
            for (auto& t : pool) t.join();
        }
    }

    std::vector<PropResult> merged;
    for (size_t i = 0; i < props.size(); ++i) {
        PropResult r{props[i]->name};
        for (int w = 0; w < workers; ++w) {
            const auto& part = partial[static_cast<size_t>(w)][i];
            r.hypothesisCount += part.hypothesisCount;
            r.passCount += part.passCount;
            r.failureCount += part.failureCount;
            for (const auto& wit : part.witnesses) r.witnesses.push_back(wit);
        }
        std::sort(r.witnesses.begin(), r.witnesses.end(),
                  [](const PropWitness& a, const PropWitness& b) {
                      return a.order != b.order ? a.order < b.order : a.code < b.code;
                  });
        if (static_cast<int>(r.witnesses.size()) > witnessCap)
            r.witnesses.resize(static_cast<size_t>(witnessCap));
        merged.push_back(std::move(r));
    }
    return merged;
}

}  // namespace magmoid

#endif
