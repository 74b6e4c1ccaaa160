#ifndef MAGMOID_CORE_HPP
#define MAGMOID_CORE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace magmoid {

// Undefined cell / undefined product outcome. Kept as a plain sentinel so
// that table cells and evaluation results use the same representation.
inline constexpr int undef = -1;

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct EmptyOperationError : std::runtime_error {
    EmptyOperationError() : std::runtime_error("empty operation: every cell is undefined") {}
};

struct OrderGuardError : std::runtime_error {
    explicit OrderGuardError(const std::string& msg) : std::runtime_error(msg) {}
};

// A finite set with a partial binary operation, stored as a dense partial
// Cayley table. Elements are interned to indices 0..n-1 in declaration
// order; all set outputs elsewhere are emitted in index order.
struct Magmoid {
    std::string name;
    std::vector<std::string> elements;
    std::vector<int> table;       // n*n cells, row-major; undef when absent
    std::vector<int> involution;  // empty when none; else n entries, undef allowed
    std::string provenance;       // emitted as a comment, ignored by comparisons

    int order() const { return static_cast<int>(elements.size()); }

    int cell(int x, int y) const { return table[static_cast<size_t>(x) * elements.size() + y]; }
    void set_cell(int x, int y, int v) { table[static_cast<size_t>(x) * elements.size() + y] = v; }

    bool total() const {
        return std::all_of(table.begin(), table.end(), [](int c) { return c != undef; });
    }

    int element_index(const std::string& id) const {
        for (size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == id) return static_cast<int>(i);
        return -1;
    }

    bool has_involution() const { return !involution.empty(); }

    friend bool operator==(const Magmoid& a, const Magmoid& b) {
        return a.name == b.name && a.elements == b.elements && a.table == b.table &&
               a.involution == b.involution;
    }
};

inline Magmoid make_magmoid(std::string name, std::vector<std::string> elements) {
    Magmoid m;
    m.name = std::move(name);
    m.elements = std::move(elements);
    m.table.assign(m.elements.size() * m.elements.size(), undef);
    return m;
}

// xy, or undef when the pair is outside the effective domain.
inline int product(const Magmoid& m, int x, int y) {
    if (x < 0 || y < 0 || x >= m.order() || y >= m.order())
        throw std::out_of_range("unknown element index");
    return m.cell(x, y);
}

// Left-to-right product of a chain under left association; undef as soon as
// any subproduct is undefined.
inline int product_chain(const Magmoid& m, const std::vector<int>& xs) {
    if (xs.empty()) return undef;
    int acc = xs[0];
    for (size_t i = 1; i < xs.size(); ++i) {
        if (acc == undef) return undef;
        acc = m.cell(acc, xs[i]);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Parenthesized product expressions

// A fully parenthesized product over a sequence of elements. Leaves hold
// element indices; an internal node is one application of the operation.
struct ProductExpr {
    int leaf = undef;                       // valid when no children
    std::vector<ProductExpr> children;      // size 0 (leaf) or 2

    bool is_leaf() const { return children.empty(); }

    static ProductExpr make_leaf(int e) {
        ProductExpr x;
        x.leaf = e;
        return x;
    }
    static ProductExpr make_node(ProductExpr l, ProductExpr r) {
        ProductExpr x;
        x.children.push_back(std::move(l));
        x.children.push_back(std::move(r));
        return x;
    }

    void leaves(std::vector<int>& out) const {
        if (is_leaf())
            out.push_back(leaf);
        else {
            children[0].leaves(out);
            children[1].leaves(out);
        }
    }
};

// Innermost-first, left child before right child; the whole expression is
// undef as soon as any subproduct is undefined.
inline int eval_expr(const Magmoid& m, const ProductExpr& e) {
    if (e.is_leaf()) {
        if (e.leaf < 0 || e.leaf >= m.order()) throw std::out_of_range("unknown element index");
        return e.leaf;
    }
    int l = eval_expr(m, e.children[0]);
    if (l == undef) return undef;
    int r = eval_expr(m, e.children[1]);
    if (r == undef) return undef;
    return m.cell(l, r);
}

// All parenthesization shapes of the chain xs[lo..hi), Catalan many.
inline std::vector<ProductExpr> all_parenthesizations(const std::vector<int>& xs, size_t lo,
                                                      size_t hi) {
    std::vector<ProductExpr> out;
    if (hi - lo == 1) {
        out.push_back(ProductExpr::make_leaf(xs[lo]));
        return out;
    }
    for (size_t mid = lo + 1; mid < hi; ++mid) {
        auto lefts = all_parenthesizations(xs, lo, mid);
        auto rights = all_parenthesizations(xs, mid, hi);
        for (const auto& l : lefts)
            for (const auto& r : rights) out.push_back(ProductExpr::make_node(l, r));
    }
    return out;
}

inline std::vector<ProductExpr> all_parenthesizations(const std::vector<int>& xs) {
    return all_parenthesizations(xs, 0, xs.size());
}

// ---------------------------------------------------------------------------
// File format

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline bool valid_id(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

inline std::string strip_comment(const std::string& s) {
    auto pos = s.find('#');
    return pos == std::string::npos ? s : s.substr(0, pos);
}

}  // namespace detail

// Parses the magmoid file format:
//   magmoid <name>
//   elements: <id> ...
//   row <id>: <cell> ... <cell>       (one per element; cell = id or '-')
//   involution: <id>-><id> ...        (optional)
inline Magmoid parse_magmoid(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    auto next_line = [&](std::vector<std::string>& toks) -> bool {
        while (std::getline(in, raw)) {
            ++lineno;
            toks = detail::split_ws(detail::strip_comment(raw));
            if (!toks.empty()) return true;
        }
        return false;
    };

    std::vector<std::string> toks;
    if (!next_line(toks) || toks[0] != "magmoid" || toks.size() != 2)
        throw ParseError(lineno, "expected 'magmoid <name>'");
    Magmoid m;
    m.name = toks[1];

    if (!next_line(toks) || toks[0] != "elements:" || toks.size() < 2)
        throw ParseError(lineno, "expected 'elements: <id> ...'");
    for (size_t i = 1; i < toks.size(); ++i) {
        if (!detail::valid_id(toks[i])) throw ParseError(lineno, "invalid element id '" + toks[i] + "'");
        if (m.element_index(toks[i]) >= 0)
            throw ParseError(lineno, "duplicate element '" + toks[i] + "'");
        m.elements.push_back(toks[i]);
    }
    const int n = m.order();
    m.table.assign(static_cast<size_t>(n) * n, undef);

    std::vector<bool> row_seen(n, false);
    for (int r = 0; r < n; ++r) {
        if (!next_line(toks)) throw ParseError(lineno, "expected a 'row' line");
        if (toks[0] == "row" && toks.size() >= 2 && !toks[1].empty() && toks[1].back() == ':') {
            // allow "row x:" with the colon attached
            toks[1].pop_back();
        } else if (toks[0] != "row") {
            throw ParseError(lineno, "expected 'row <id>: <cells>'");
        }
        int x = m.element_index(toks[1]);
        if (x < 0) throw ParseError(lineno, "unknown element '" + toks[1] + "' in row header");
        if (row_seen[x]) throw ParseError(lineno, "duplicate row for '" + toks[1] + "'");
        row_seen[x] = true;
        if (static_cast<int>(toks.size()) != n + 2)
            throw ParseError(lineno, "expected " + std::to_string(n) + " cells");
        for (int y = 0; y < n; ++y) {
            const std::string& c = toks[static_cast<size_t>(y) + 2];
            if (c == "-") continue;
            int v = m.element_index(c);
            if (v < 0) throw ParseError(lineno, "unknown element '" + c + "' in a cell");
            m.set_cell(x, y, v);
        }
    }

    if (next_line(toks)) {
        if (toks[0] != "involution:") throw ParseError(lineno, "unexpected line after rows");
        m.involution.assign(n, undef);
        for (size_t i = 1; i < toks.size(); ++i) {
            auto arrow = toks[i].find("->");
            if (arrow == std::string::npos)
                throw ParseError(lineno, "expected '<id>-><id>' pair");
            int a = m.element_index(toks[i].substr(0, arrow));
            int b = m.element_index(toks[i].substr(arrow + 2));
            if (a < 0 || b < 0) throw ParseError(lineno, "unknown element in involution pair");
            m.involution[a] = b;
        }
        if (next_line(toks)) throw ParseError(lineno, "unexpected trailing line");
    }

    if (std::all_of(m.table.begin(), m.table.end(), [](int c) { return c == undef; }))
        throw EmptyOperationError();
    return m;
}

inline std::string serialize_magmoid(const Magmoid& m) {
    std::ostringstream out;
    if (!m.provenance.empty()) out << "# " << m.provenance << "\n";
    out << "magmoid " << m.name << "\n";
    out << "elements:";
    for (const auto& e : m.elements) out << ' ' << e;
    out << "\n";
    for (int x = 0; x < m.order(); ++x) {
        out << "row " << m.elements[x] << ":";
        for (int y = 0; y < m.order(); ++y) {
            int v = m.cell(x, y);
            out << ' ' << (v == undef ? "-" : m.elements[v]);
        }
        out << "\n";
    }
    if (m.has_involution()) {
        out << "involution:";
        for (int x = 0; x < m.order(); ++x)
            if (m.involution[x] != undef)
                out << ' ' << m.elements[x] << "->" << m.elements[m.involution[x]];
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Canonical forms and isomorphism

inline constexpr int canonical_order_guard = 8;

// Row-major cell encoding with undefined strictly below any element index.
inline std::vector<int> cell_encoding(const Magmoid& m) {
    std::vector<int> enc(m.table.size());
    for (size_t i = 0; i < m.table.size(); ++i) enc[i] = m.table[i] + 1;  // undef -> 0
    return enc;
}

// Relabel by permutation sigma: element i of m becomes sigma[i] of the result.
inline Magmoid relabel(const Magmoid& m, const std::vector<int>& sigma) {
    const int n = m.order();
    Magmoid r = m;
    for (int i = 0; i < n; ++i) r.elements[sigma[i]] = m.elements[i];
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int v = m.cell(x, y);
            r.table[static_cast<size_t>(sigma[x]) * n + sigma[y]] = v == undef ? undef : sigma[v];
        }
    if (m.has_involution())
        for (int x = 0; x < n; ++x) {
            int v = m.involution[x];
            r.involution[sigma[x]] = v == undef ? undef : sigma[v];
        }
    return r;
}

struct CanonicalForm {
    std::vector<int> key;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Lexicographically minimal encoding over all n! relabelings of the table.
// The involution, when present, does not take part in the key.
inline CanonicalForm canonical_form(const Magmoid& m) {
    const int n = m.order();
    if (n > canonical_order_guard)
        throw OrderGuardError("canonical_form: order exceeds guard of 8");
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<int> best;
    std::vector<int> enc(static_cast<size_t>(n) * n);
    do {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int v = m.cell(x, y);
                enc[static_cast<size_t>(sigma[x]) * n + sigma[y]] = v == undef ? 0 : sigma[v] + 1;
            }
        if (best.empty() || enc < best) best = enc;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return CanonicalForm{std::move(best)};
}

// Some bijection of carriers mapping defined cells onto defined cells with
// matching values, or nullopt. Involutions are ignored, as in canonical_form.
inline std::optional<std::vector<int>> isomorphism_witness(const Magmoid& a, const Magmoid& b) {
    const int n = a.order();
    if (n > canonical_order_guard || b.order() > canonical_order_guard)
        throw OrderGuardError("are_isomorphic: order exceeds guard of 8");
    if (b.order() != n) return std::nullopt;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y) {
                int v = a.cell(x, y);
                int w = b.cell(sigma[x], sigma[y]);
                ok = (v == undef) ? (w == undef) : (w == sigma[v]);
            }
        if (ok) return sigma;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
}

inline bool are_isomorphic(const Magmoid& a, const Magmoid& b) {
    return isomorphism_witness(a, b).has_value();
}

}  // namespace magmoid

#endif
