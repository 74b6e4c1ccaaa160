#ifndef MAGMOID_PINV_HPP
#define MAGMOID_PINV_HPP

#include <cmath>
#include <initializer_list>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace magmoid {

// A small dense real matrix; shapes stay within 3x3. This is a test harness
// for the involution machinery, not a linear-algebra library.
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}
    Matrix(std::initializer_list<std::initializer_list<double>> init) {
        rows = static_cast<int>(init.size());
        cols = rows ? static_cast<int>(init.begin()->size()) : 0;
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols)
                throw std::invalid_argument("ragged matrix literal");
            a.insert(a.end(), row.begin(), row.end());
        }
    }

    double& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    Matrix transpose() const {
        Matrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }
};

inline std::optional<Matrix> mat_mul(const Matrix& m, const Matrix& n) {
    if (m.cols != n.rows) return std::nullopt;
    Matrix p(m.rows, n.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int k = 0; k < m.cols; ++k) {
            double v = m.at(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < n.cols; ++j) p.at(i, j) += v * n.at(k, j);
        }
    return p;
}

inline double max_norm_diff(const Matrix& m, const Matrix& n) {
    if (m.rows != n.rows || m.cols != n.cols) return std::numeric_limits<double>::infinity();
    double d = 0;
    for (size_t i = 0; i < m.a.size(); ++i) d = std::max(d, std::abs(m.a[i] - n.a[i]));
    return d;
}

inline bool approx_equal(const Matrix& m, const Matrix& n, double tol) {
    return m.rows == n.rows && m.cols == n.cols && max_norm_diff(m, n) <= tol;
}

inline bool is_symmetric(const Matrix& m, double tol) {
    return m.rows == m.cols && approx_equal(m, m.transpose(), tol);
}

namespace detail {

// Inverse by Gaussian elimination with partial pivoting; sizes <= 3.
inline std::optional<Matrix> mat_inverse(const Matrix& m, double tol) {
    if (m.rows != m.cols) return std::nullopt;
    const int n = m.rows;
    Matrix a = m;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i) inv.at(i, i) = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a.at(r, col)) > std::abs(a.at(piv, col))) piv = r;
        if (std::abs(a.at(piv, col)) <= tol) return std::nullopt;
        for (int j = 0; j < n; ++j) {
            std::swap(a.a[static_cast<size_t>(col) * n + j], a.a[static_cast<size_t>(piv) * n + j]);
            std::swap(inv.a[static_cast<size_t>(col) * n + j],
                      inv.a[static_cast<size_t>(piv) * n + j]);
        }
        double d = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            double f = a.at(r, col);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

// Full-rank decomposition A = F G with F (p x r), G (r x q), r = rank A.
inline void full_rank_decomposition(const Matrix& m, double tol, Matrix& f, Matrix& g) {
    Matrix red = m;  // row-reduce a copy, remember pivot columns
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < red.cols && row < red.rows; ++col) {
        int piv = row;
        for (int r = row + 1; r < red.rows; ++r)
            if (std::abs(red.at(r, col)) > std::abs(red.at(piv, col))) piv = r;
        if (std::abs(red.at(piv, col)) <= tol) continue;
        for (int j = 0; j < red.cols; ++j)
            std::swap(red.a[static_cast<size_t>(row) * red.cols + j],
                      red.a[static_cast<size_t>(piv) * red.cols + j]);
        double d = red.at(row, col);
        for (int j = 0; j < red.cols; ++j) red.at(row, j) /= d;
        for (int r = 0; r < red.rows; ++r) {
            if (r == row) continue;
            double fac = red.at(r, col);
            if (fac == 0.0) continue;
            for (int j = 0; j < red.cols; ++j) red.at(r, j) -= fac * red.at(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    const int rank = static_cast<int>(pivot_cols.size());
    f = Matrix(m.rows, rank);
    for (int i = 0; i < m.rows; ++i)
        for (int k = 0; k < rank; ++k) f.at(i, k) = m.at(i, pivot_cols[k]);
    g = Matrix(rank, m.cols);
    for (int k = 0; k < rank; ++k)
        for (int j = 0; j < m.cols; ++j) g.at(k, j) = red.at(k, j);
}

}  // namespace detail

struct PenroseError : std::runtime_error {
    explicit PenroseError(const std::string& msg) : std::runtime_error(msg) {}
};

inline bool penrose_conditions_hold(const Matrix& a, const Matrix& p, double tol) {
    auto ap = mat_mul(a, p), pa = mat_mul(p, a);
    if (!ap || !pa) return false;
    auto apa = mat_mul(*ap, a), pap = mat_mul(*pa, p);
    return apa && pap && approx_equal(*apa, a, tol) && approx_equal(*pap, p, tol) &&
           is_symmetric(*ap, tol) && is_symmetric(*pa, tol);
}

// ---------------------------------------------------------------------------
// Matrix fixture: a finite transpose-closed window into the semigroupoid of
// all matrices, where (MN) is defined exactly when inner dimensions agree.

struct MatrixFixture {
    std::vector<Matrix> members;
    double tol = 1e-9;

    int find(const Matrix& m) const {
        for (size_t i = 0; i < members.size(); ++i)
            if (approx_equal(members[i], m, tol)) return static_cast<int>(i);
        return -1;
    }

    // Adds m and its transpose, deduplicating; returns the index of m.
    int add(const Matrix& m) {
        int i = find(m);
        if (i < 0) {
            members.push_back(m);
            i = static_cast<int>(members.size()) - 1;
        }
        if (find(m.transpose()) < 0) members.push_back(m.transpose());
        return i;
    }

    bool transpose_closed() const {
        for (const auto& m : members)
            if (find(m.transpose()) < 0) return false;
        return true;
    }

    // The unities under transpose: the symmetric members.
    std::vector<int> unity_indices() const {
        std::vector<int> out;
        for (size_t i = 0; i < members.size(); ++i)
            if (is_symmetric(members[i], tol)) out.push_back(static_cast<int>(i));
        return out;
    }

    // The unique member X with (AXA)=A, (XAX)=X and AX, XA symmetric, if any.
    std::optional<int> involution_preinverse(int a_idx) const {
        const Matrix& a = members[static_cast<size_t>(a_idx)];
        std::optional<int> found;
        for (size_t i = 0; i < members.size(); ++i) {
            if (!penrose_conditions_hold(a, members[i], tol)) continue;
            if (found && !approx_equal(members[*found], members[i], tol))
                return std::nullopt;  // non-unique; should not happen
            if (!found) found = static_cast<int>(i);
        }
        return found;
    }

    // Matrix inversion restricted to the invertible square members: checks
    // that it behaves as a partial involution ((X^-1)^-1 = X and, where the
    // product is defined, (XY)^-1 = Y^-1 X^-1).
    bool inversion_is_partial_involution() const {
        for (const auto& x : members) {
            auto xi = detail::mat_inverse(x, tol);
            if (!xi) continue;
            auto xii = detail::mat_inverse(*xi, tol);
            if (!xii || !approx_equal(*xii, x, tol)) return false;
            for (const auto& y : members) {
                auto yi = detail::mat_inverse(y, tol);
                if (!yi) continue;
                auto xy = mat_mul(x, y);
                if (!xy) continue;
                auto xyi = detail::mat_inverse(*xy, tol);
                auto rhs = mat_mul(*yi, *xi);
                if (!xyi || !rhs || !approx_equal(*xyi, *rhs, tol)) return false;
            }
        }
        return true;
    }
};

struct MoorePenroseResult {
    Matrix pinv;
    MatrixFixture fixture;  // contains A, A^T, A^+ and the derived unities
};

// A^+ via full-rank decomposition: A = FG, A^+ = G^T (G G^T)^-1 (F^T F)^-1 F^T.
// All four Penrose conditions are verified within tolerance before return,
// and A^+ is confirmed to be the involution preinverse inside the fixture.
inline MoorePenroseResult moore_penrose(const Matrix& a, double tol = 1e-9) {
    if (a.rows < 1 || a.cols < 1 || a.rows > 3 || a.cols > 3)
        throw std::invalid_argument("moore_penrose: shape must be within 3x3");
    Matrix f, g;
    detail::full_rank_decomposition(a, tol, f, g);
    Matrix pinv;
    if (f.cols == 0) {
        pinv = a.transpose();  // zero matrix: A^+ = A^T = 0
    } else {
        auto ggt = mat_mul(g, g.transpose());
        auto ftf = mat_mul(f.transpose(), f);
        auto ggt_inv = detail::mat_inverse(*ggt, tol);
        auto ftf_inv = detail::mat_inverse(*ftf, tol);
        if (!ggt_inv || !ftf_inv) throw PenroseError("degenerate full-rank factors");
        pinv = *mat_mul(*mat_mul(g.transpose(), *ggt_inv), *mat_mul(*ftf_inv, f.transpose()));
    }
    if (!penrose_conditions_hold(a, pinv, tol))
        throw PenroseError("Penrose conditions fail beyond tolerance");

    MoorePenroseResult res;
    res.pinv = pinv;
    res.fixture.tol = tol;
    int ai = res.fixture.add(a);
    res.fixture.add(pinv);
    res.fixture.add(*mat_mul(a, pinv));
    res.fixture.add(*mat_mul(pinv, a));
    auto confirmed = res.fixture.involution_preinverse(ai);
    if (!confirmed || !approx_equal(res.fixture.members[static_cast<size_t>(*confirmed)], pinv, tol))
        throw PenroseError("computed pseudoinverse is not the fixture's involution preinverse");
    return res;
}

}  // namespace magmoid

#endif
