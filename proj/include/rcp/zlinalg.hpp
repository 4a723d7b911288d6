#pragma once

#include "rcp/intmat.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

// Exact integer linear algebra: column-style Hermite normal form with a
// unimodular transform, Smith normal form, integer system solving, saturated
// kernel lattices, and lattice equality. Everything acts on the right of the
// matrix because the unknown does in every problem instance.

namespace rcp {

inline Int int_gcd(Int a, Int b) {
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        Int t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

// g = gcd(a,b) = p*a + q*b. When a divides b the coefficients are (sign a, 0)
// so eliminations leave the pivot row/column untouched.
inline void ext_gcd(const Int &a, const Int &b, Int &g, Int &p, Int &q) {
    if (a != 0 && b % a == 0) {
        g = a < 0 ? Int(-a) : a;
        p = a < 0 ? -1 : 1;
        q = 0;
        return;
    }
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int quot = old_r / r;
        Int tmp = old_r - quot * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_s - quot * s;
        old_s = std::move(s);
        s = std::move(tmp);
        tmp = old_t - quot * t;
        old_t = std::move(t);
        t = std::move(tmp);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    g = std::move(old_r);
    p = std::move(old_s);
    q = std::move(old_t);
}

// Column-style Hermite normal form: M * U = H with U unimodular. H is in
// column echelon form: the first `rank` columns are nonzero, the pivot (first
// nonzero entry) of each is positive and strictly lower than the previous
// pivot's row is impossible (pivot rows increase with the column index), and
// in every pivot row the entries of the earlier columns are reduced into
// [0, pivot). Canonical for the column lattice of M.
struct HNFDecomposition {
    IntMat H;
    IntMat U;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows; // one per pivot column

    // Exact integer solution of M*x = b, if any, using H and U.
    std::optional<IntVec> solve(const IntVec &b) const {
        const std::size_t r = H.rows(), c = H.cols();
        if (b.size() != r)
            throw std::invalid_argument("rhs dimension mismatch");
        IntVec y(c, Int(0));
        std::size_t piv = 0;
        for (std::size_t row = 0; row < r; ++row) {
            Int s = b[row];
            for (std::size_t j = 0; j < piv; ++j)
                s -= H(row, j) * y[j];
            if (piv < rank && pivot_rows[piv] == row) {
                if (s % H(row, piv) != 0)
                    return std::nullopt;
                y[piv] = s / H(row, piv);
                ++piv;
            } else if (s != 0) {
                return std::nullopt;
            }
        }
        IntVec x(U.rows(), Int(0));
        for (std::size_t i = 0; i < U.rows(); ++i) {
            Int s = 0;
            for (std::size_t j = 0; j < rank; ++j)
                s += U(i, j) * y[j];
            x[i] = std::move(s);
        }
        return x;
    }

    // Basis of the saturated integer kernel lattice {x : M*x = 0}: the
    // transform columns matching the zero columns of H. Part of a basis of
    // Z^cols, hence primitive.
    std::vector<IntVec> kernel() const {
        std::vector<IntVec> basis;
        for (std::size_t j = rank; j < H.cols(); ++j)
            basis.push_back(U.col(j));
        return basis;
    }
};

inline HNFDecomposition hnf(const IntMat &m) {
    HNFDecomposition d;
    d.H = m;
    d.U = IntMat::identity(m.cols());
    IntMat &H = d.H;
    IntMat &U = d.U;
    const std::size_t rows = m.rows(), cols = m.cols();

    std::size_t piv = 0;
    for (std::size_t row = 0; row < rows && piv < cols; ++row) {
        // clear row entries right of the pivot column with gcd column ops
        std::size_t j0 = piv;
        for (std::size_t j = piv; j < cols; ++j)
            if (H(row, j) != 0) {
                j0 = j;
                break;
            }
        if (H(row, j0) == 0)
            continue;
        if (j0 != piv) {
            H.swap_cols(j0, piv);
            U.swap_cols(j0, piv);
        }
        for (std::size_t j = piv + 1; j < cols; ++j) {
            if (H(row, j) == 0)
                continue;
            Int g, p, q;
            ext_gcd(H(row, piv), H(row, j), g, p, q);
            Int a = H(row, piv) / g, b = H(row, j) / g;
            // [piv j] <- [piv j] * [[p, -b],[q, a]], det = p*a + q*b = 1
            H.combine_cols(piv, j, p, q, -b, a);
            U.combine_cols(piv, j, p, q, -b, a);
        }
        if (H(row, piv) < 0) {
            H.negate_col(piv);
            U.negate_col(piv);
        }
        // reduce earlier columns at this pivot row into [0, pivot)
        const Int &pval = H(row, piv);
        for (std::size_t j = 0; j < piv; ++j) {
            Int r = H(row, j) % pval;
            if (r < 0)
                r += pval;
            Int f = (r - H(row, j)) / pval;
            H.add_col_multiple(j, piv, f);
            U.add_col_multiple(j, piv, f);
        }
        d.pivot_rows.push_back(row);
        ++piv;
    }
    d.rank = piv;
    return d;
}

inline std::size_t rank(const IntMat &m) { return hnf(m).rank; }

struct IntegerSolution {
    IntVec particular;
    std::vector<IntVec> kernel_basis;
};

// Particular integer solution of a*x = b plus a saturated kernel basis, or
// nullopt when no integer solution exists. The result is verified by
// substitution before returning.
inline std::optional<IntegerSolution> solve_integer(const IntMat &a,
                                                    const IntVec &b) {
    HNFDecomposition d = hnf(a);
    auto x = d.solve(b);
    if (!x)
        return std::nullopt;
    IntegerSolution sol{std::move(*x), d.kernel()};
    if (a.mul(sol.particular) != b)
        throw std::logic_error("solve_integer: certificate failed");
    for (const auto &k : sol.kernel_basis)
        if (!is_zero(a.mul(k)))
            throw std::logic_error("solve_integer: kernel vector not annihilated");
    return sol;
}

inline std::vector<IntVec> kernel_lattice(const IntMat &a) {
    return hnf(a).kernel();
}

// Nonzero columns of the canonical HNF, as a matrix: a canonical form of the
// column lattice.
inline IntMat lattice_canonical(const IntMat &generators) {
    HNFDecomposition d = hnf(generators);
    IntMat c(generators.rows(), d.rank);
    for (std::size_t j = 0; j < d.rank; ++j)
        for (std::size_t i = 0; i < generators.rows(); ++i)
            c(i, j) = d.H(i, j);
    return c;
}

inline bool lattice_equal(const IntMat &gen1, const IntMat &gen2) {
    if (gen1.rows() != gen2.rows())
        throw std::invalid_argument("ambient dimension mismatch");
    return lattice_canonical(gen1) == lattice_canonical(gen2);
}

inline bool lattice_equal(const std::vector<IntVec> &basis1,
                          const std::vector<IntVec> &basis2, std::size_t dim) {
    return lattice_equal(from_columns(basis1, dim), from_columns(basis2, dim));
}

// Smith normal form, diagonal entries only (d1 | d2 | ...). Used to
// cross-check HNF ranks.
inline std::vector<Int> snf_diagonal(IntMat a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<Int> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // find a nonzero entry at/after (t,t)
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows && !found; ++i)
            for (std::size_t j = t; j < cols && !found; ++j)
                if (a(i, j) != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found)
            break;
        // move it to (t,t)
        if (pi != t)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a(t, j), a(pi, j));
        if (pj != t)
            a.swap_cols(pj, t);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0)
                    continue;
                clean = false;
                Int g, p, q;
                ext_gcd(a(t, t), a(i, t), g, p, q);
                Int x = a(t, t) / g, y = a(i, t) / g;
                for (std::size_t j = t; j < cols; ++j) {
                    Int vt = a(t, j), vi = a(i, j);
                    a(t, j) = p * vt + q * vi;
                    a(i, j) = -y * vt + x * vi;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0)
                    continue;
                clean = false;
                Int g, p, q;
                ext_gcd(a(t, t), a(t, j), g, p, q);
                Int x = a(t, t) / g, y = a(t, j) / g;
                a.combine_cols(t, j, p, q, -y, x);
            }
        }
        if (a(t, t) < 0)
            a.negate_col(t);
        diag.push_back(a(t, t));
        ++t;
    }
    // enforce the divisibility chain
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j)
            if (diag[j] % diag[i] != 0) {
                Int g = int_gcd(diag[i], diag[j]);
                Int l = diag[i] / g * diag[j];
                diag[i] = g;
                diag[j] = l;
            }
    return diag;
}

inline std::size_t rank_via_snf(const IntMat &a) {
    return snf_diagonal(a).size();
}

} // namespace rcp
