#ifndef MAGMOID_HEAPOID_HPP
#define MAGMOID_HEAPOID_HPP

#include <sstream>
#include <string>
#include <vector>

#include "magmoid/axioms.hpp"
#include "magmoid/core.hpp"
#include "magmoid/involution.hpp"

namespace magmoid {

// A finite partial ternary operation (x,y,z) -> [xyz].
struct TernaryTable {
    std::string name;
    std::vector<std::string> elements;
    std::vector<int> cells;  // n^3 entries, index (x*n + y)*n + z; undef when absent
    std::string provenance;

    int order() const { return static_cast<int>(elements.size()); }
    int cell(int x, int y, int z) const {
        const int n = order();
        return cells[static_cast<size_t>((x * n + y)) * n + z];
    }
    void set_cell(int x, int y, int z, int v) {
        const int n = order();
        cells[static_cast<size_t>((x * n + y)) * n + z] = v;
    }
    bool total() const {
        for (int c : cells)
            if (c == undef) return false;
        return true;
    }
};

// [xyz] := (x y* z), defined iff y* is defined and ((x y*) z) is defined.
// The subject must be a two-sided semigroupoid so the nested product is
// unambiguous: when either association's antecedent fires, both agree.
inline TernaryTable ternary_from_involution(const Magmoid& m, const Involution& inv) {
    if (!validate_involution(m, inv)) throw std::invalid_argument("invalid involution");
    if (!associativity_flags(m).S3)
        throw std::invalid_argument("ternary_from_involution: subject is not a semigroupoid");
    const int n = m.order();
    TernaryTable t;
    t.name = m.name + "_heap";
    t.elements = m.elements;
    t.cells.assign(static_cast<size_t>(n) * n * n, undef);
    t.provenance = "ternary derived from '" + m.name + "' via its involution";
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int sy = inv.star(y);
            if (sy == undef) continue;
            int xy = m.cell(x, sy);
            if (xy == undef) continue;
            for (int z = 0; z < n; ++z) t.set_cell(x, y, z, m.cell(xy, z));
        }
    return t;
}

struct HeapLawFlags {
    bool semiheapoid = false;  // lh1 (partial)
    bool heapoid = false;      // lh1 + lh2 (partial)
    bool preheapoid = false;   // lh1 + lh4 + lh5 (partial)
    bool semiheap = false;     // lh1, total
    bool heap = false;         // lh1 + lh2, total
    bool preheap = false;      // lh1 + lh4 + lh5, total
    // First witnesses against the individual laws, empty when none.
    std::vector<int> lh1_witness;  // x,y,z,u,v
    std::vector<int> lh2_witness;  // x,y
    std::vector<int> lh4_witness;  // x,y,z
    std::vector<int> lh5_witness;  // x
};

// Partial laws hold with "when all terms are defined" semantics; the total
// names additionally require a total table.
inline HeapLawFlags check_heap_laws(const TernaryTable& t) {
    const int n = t.order();
    HeapLawFlags f;
    auto tt = [&](int a, int b, int c) { return t.cell(a, b, c); };
    auto nested = [&](int inner, int a, int b) {  // [<inner> a b] guarded
        return inner == undef ? undef : tt(inner, a, b);
    };

    bool lh1 = true;
    for (int x = 0; x < n && lh1; ++x)
        for (int y = 0; y < n && lh1; ++y)
            for (int z = 0; z < n && lh1; ++z)
                for (int u = 0; u < n && lh1; ++u)
                    for (int v = 0; v < n && lh1; ++v) {
                        // [[xyz]uv] = [x[uzy]v] = [xy[zuv]]
                        int a = nested(tt(x, y, z), u, v);
                        int inner_b = tt(u, z, y);
                        int b = inner_b == undef ? undef : tt(x, inner_b, v);
                        int inner_c = tt(z, u, v);
                        int c = inner_c == undef ? undef : tt(x, y, inner_c);
                        bool ok = true;
                        if (a != undef && b != undef && a != b) ok = false;
                        if (a != undef && c != undef && a != c) ok = false;
                        if (b != undef && c != undef && b != c) ok = false;
                        if (!ok) {
                            lh1 = false;
                            f.lh1_witness = {x, y, z, u, v};
                        }
                    }

    bool lh2 = true;
    for (int x = 0; x < n && lh2; ++x)
        for (int y = 0; y < n && lh2; ++y) {
            int a = tt(x, x, y), b = tt(y, x, x);
            if ((a != undef && a != y) || (b != undef && b != y)) {
                lh2 = false;
                f.lh2_witness = {x, y};
            }
        }

    bool lh4 = true;
    for (int x = 0; x < n && lh4; ++x)
        for (int y = 0; y < n && lh4; ++y)
            for (int z = 0; z < n && lh4; ++z) {
                // [yy[zzx]] = [zz[yyx]] and [[xyy]zz] = [[xzz]yy]
                int inner1 = tt(z, z, x);
                int lhs = inner1 == undef ? undef : tt(y, y, inner1);
                int inner2 = tt(y, y, x);
                int rhs = inner2 == undef ? undef : tt(z, z, inner2);
                int inner3 = tt(x, y, y);
                int lhs2 = inner3 == undef ? undef : tt(inner3, z, z);
                int inner4 = tt(x, z, z);
                int rhs2 = inner4 == undef ? undef : tt(inner4, y, y);
                if ((lhs != undef && rhs != undef && lhs != rhs) ||
                    (lhs2 != undef && rhs2 != undef && lhs2 != rhs2)) {
                    lh4 = false;
                    f.lh4_witness = {x, y, z};
                }
            }

    bool lh5 = true;
    for (int x = 0; x < n && lh5; ++x) {
        int a = tt(x, x, x);
        if (a != undef && a != x) {
            lh5 = false;
            f.lh5_witness = {x};
        }
    }

    bool total = t.total();
    f.semiheapoid = lh1;
    f.heapoid = lh1 && lh2;
    f.preheapoid = lh1 && lh4 && lh5;
    f.semiheap = total && f.semiheapoid;
    f.heap = total && f.heapoid;
    f.preheap = total && f.preheapoid;
    return f;
}

inline std::string serialize_ternary(const TernaryTable& t) {
    std::ostringstream out;
    if (!t.provenance.empty()) out << "# " << t.provenance << "\n";
    out << "heapoid " << t.name << "\n";
    out << "elements:";
    for (const auto& e : t.elements) out << ' ' << e;
    out << "\n";
    const int n = t.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int v = t.cell(x, y, z);
                if (v == undef) continue;
                out << "cell " << t.elements[x] << ' ' << t.elements[y] << ' ' << t.elements[z]
                    << ": " << t.elements[v] << "\n";
            }
    return out.str();
}

}  // namespace magmoid

#endif
