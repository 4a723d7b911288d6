#pragma once

#include "rcp/diagram.hpp"
#include "rcp/intmat.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace rcp {

enum class Family { definite, alternating };
enum class Counting { single, double_ };

struct Rule {
    Family family = Family::definite;
    Counting counting = Counting::single;

    static Rule d1() { return {Family::definite, Counting::single}; }
    static Rule d2() { return {Family::definite, Counting::double_}; }
    static Rule a1() { return {Family::alternating, Counting::single}; }
    static Rule a2() { return {Family::alternating, Counting::double_}; }

    std::string name() const {
        std::string s(family == Family::definite ? "d" : "a");
        return s + (counting == Counting::single ? "1" : "2");
    }
    friend bool operator==(const Rule &, const Rule &) = default;
};

inline std::optional<Rule> rule_from_name(const std::string &s) {
    if (s == "d1")
        return Rule::d1();
    if (s == "d2")
        return Rule::d2();
    if (s == "a1")
        return Rule::a1();
    if (s == "a2")
        return Rule::a2();
    return std::nullopt;
}

inline std::vector<Rule> all_rules() {
    return {Rule::d1(), Rule::d2(), Rule::a1(), Rule::a2()};
}

// Region choice matrix with its labels: rows are crossings in id order,
// columns are regions in canonical order.
struct LabeledMatrix {
    IntMat mat;
    std::vector<int> row_ids; // crossing ids
    std::vector<int> col_ids; // region ids
};

// The corner sign of the alternating rules: +1 on quadrants 0 and 2 (swept
// counterclockwise from an under-ray to an over-ray), -1 on 1 and 3. This is
// independent of orientation; it is pinned by the requirement that A_a2
// annihilates every Alexander numbering under the left = right + 1 rule.
inline int corner_sign(int quadrant) { return (quadrant & 1) ? -1 : +1; }

inline LabeledMatrix region_choice_matrix(const LinkDiagram &d,
                                          const Rule &rule) {
    if (d.n() == 0)
        throw DiagramError("region choice matrices need n >= 1");
    LabeledMatrix out;
    out.mat = IntMat(d.n(), d.region_count());
    for (const Crossing &c : d.crossings())
        out.row_ids.push_back(c.id);
    for (int r = 0; r < d.region_count(); ++r)
        out.col_ids.push_back(r);
    for (std::size_t i = 0; i < d.crossings().size(); ++i) {
        const Crossing &c = d.crossings()[i];
        // collect, per incident region, the corner count and shared sign
        for (int q = 0; q < 4; ++q) {
            int r = d.region_at(c.id, q);
            int s = corner_sign(q);
            Int &e = out.mat(i, r);
            switch (rule.family) {
            case Family::definite:
                if (rule.counting == Counting::double_)
                    e += 1;
                else
                    e = 1;
                break;
            case Family::alternating:
                if (rule.counting == Counting::double_)
                    e += s;
                else
                    e = s; // twice-touching corners share their sign
                break;
            }
        }
    }
    return out;
}

inline IntMat mod2_reduce(const IntMat &m) {
    IntMat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = ((m(i, j) % 2) + 2) % 2;
    return out;
}

// --- comparison up to one simultaneous row/column permutation -------------

namespace detail {

inline std::vector<Int> sorted_signature(const IntMat &m, bool row,
                                         std::size_t k) {
    std::vector<Int> v;
    if (row)
        for (std::size_t j = 0; j < m.cols(); ++j)
            v.push_back(m(k, j));
    else
        for (std::size_t i = 0; i < m.rows(); ++i)
            v.push_back(m(i, k));
    std::sort(v.begin(), v.end());
    return v;
}

// Backtracking search for a row permutation rho and column permutation tau
// with a[i][j] == b[rho(i)][tau(j)] for every matrix pair simultaneously.
struct PermMatcher {
    const std::vector<const IntMat *> &as, &bs;
    std::size_t R, C;
    std::vector<int> row_map, col_map; // a-index -> b-index
    std::vector<char> row_used, col_used;

    bool cell_ok(std::size_t ia, std::size_t ja, std::size_t ib,
                 std::size_t jb) const {
        for (std::size_t m = 0; m < as.size(); ++m)
            if ((*as[m])(ia, ja) != (*bs[m])(ib, jb))
                return false;
        return true;
    }

    bool assign_rows(std::size_t i) {
        if (i == R)
            return assign_cols(0);
        for (std::size_t b = 0; b < R; ++b) {
            if (row_used[b])
                continue;
            bool sig_ok = true;
            for (std::size_t m = 0; m < as.size() && sig_ok; ++m)
                sig_ok = sorted_signature(*as[m], true, i) ==
                         sorted_signature(*bs[m], true, b);
            if (!sig_ok)
                continue;
            row_map[i] = static_cast<int>(b);
            row_used[b] = 1;
            if (assign_rows(i + 1))
                return true;
            row_used[b] = 0;
        }
        return false;
    }

    bool assign_cols(std::size_t j) {
        if (j == C)
            return true;
        for (std::size_t b = 0; b < C; ++b) {
            if (col_used[b])
                continue;
            bool ok = true;
            for (std::size_t i = 0; i < R && ok; ++i)
                ok = cell_ok(i, j, row_map[i], b);
            if (!ok)
                continue;
            col_map[j] = static_cast<int>(b);
            col_used[b] = 1;
            if (assign_cols(j + 1))
                return true;
            col_used[b] = 0;
        }
        return false;
    }
};

} // namespace detail

struct PermutationWitness {
    std::vector<int> row_map; // index in a -> index in b
    std::vector<int> col_map;
};

// One simultaneous row/column permutation carrying every as[m] to bs[m].
inline std::optional<PermutationWitness>
simultaneous_permutation(const std::vector<const IntMat *> &as,
                         const std::vector<const IntMat *> &bs) {
    if (as.size() != bs.size() || as.empty())
        throw std::invalid_argument("matrix list mismatch");
    std::size_t R = as[0]->rows(), C = as[0]->cols();
    for (std::size_t m = 0; m < as.size(); ++m)
        if (as[m]->rows() != R || as[m]->cols() != C || bs[m]->rows() != R ||
            bs[m]->cols() != C)
            return std::nullopt;
    detail::PermMatcher pm{as, bs, R, C,
                           std::vector<int>(R), std::vector<int>(C),
                           std::vector<char>(R, 0), std::vector<char>(C, 0)};
    if (!pm.assign_rows(0))
        return std::nullopt;
    return PermutationWitness{pm.row_map, pm.col_map};
}

inline bool permutation_equivalent(const IntMat &a, const IntMat &b) {
    return simultaneous_permutation({&a}, {&b}).has_value();
}

// apply a witness: result[i][j] = a[row_map^{-1}... ] such that
// result == b when the witness maps a to b.
inline IntMat apply_permutation(const IntMat &a, const PermutationWitness &w) {
    IntMat out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(w.row_map[i], w.col_map[j]) = a(i, j);
    return out;
}

} // namespace rcp
