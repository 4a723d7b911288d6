#pragma once

#include "rcp/diagram.hpp"
#include "rcp/matrices.hpp"
#include "rcp/numbering.hpp"
#include "rcp/zlinalg.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

// Solving the integral region choice problems and the constructive results:
// kernel transforms, special solutions from splicing, kernel bases, and the
// two-component image bases.

namespace rcp {

// integral scores on the crossings (the c of A u + c = 0)
struct ScoreVector {
    std::map<int, Int> values; // crossing id -> score

    IntVec dense(const LinkDiagram &d) const {
        IntVec out(d.n(), Int(0));
        std::set<int> known;
        for (const Crossing &c : d.crossings())
            known.insert(c.id);
        for (const auto &[cid, v] : values)
            if (!known.count(cid))
                throw DiagramError("score for unknown crossing " +
                                   std::to_string(cid));
        for (std::size_t i = 0; i < d.crossings().size(); ++i) {
            auto it = values.find(d.crossings()[i].id);
            if (it != values.end())
                out[i] = it->second;
        }
        return out;
    }

    static ScoreVector from_dense(const LinkDiagram &d, const IntVec &v) {
        ScoreVector s;
        for (std::size_t i = 0; i < d.crossings().size(); ++i)
            s.values[d.crossings()[i].id] = v[i];
        return s;
    }
};

struct ProblemInstance {
    const LinkDiagram *diagram;
    Rule rule;
    ScoreVector scores;
};

struct Solution {
    NumberingVector u;
    bool certificate = false; // residual A u + c recomputed to zero
};

inline std::optional<Solution> solve(const ProblemInstance &inst) {
    const LinkDiagram &d = *inst.diagram;
    if (d.n() == 0)
        throw DiagramError("solve needs n >= 1");
    LabeledMatrix A = region_choice_matrix(d, inst.rule);
    IntVec b = vec_neg(inst.scores.dense(d));
    auto sol = solve_integer(A.mat, b);
    if (!sol)
        return std::nullopt;
    Solution out;
    out.u.values = sol->particular;
    out.certificate = A.mat.mul(out.u.values) == b;
    return out;
}

// Lemma-style transform: region R gets (-1)^{c_R} u_R.
inline NumberingVector flip_by_checkerboard(const NumberingVector &v,
                                            const NumberingVector &coloring) {
    if (v.size() != coloring.size())
        throw DiagramError("flip: dimension mismatch");
    NumberingVector out = v;
    for (std::size_t r = 0; r < v.size(); ++r)
        if (coloring.values[r] % 2 != 0)
            out.values[r] = -out.values[r];
    return out;
}

namespace detail {

inline IntVec unit_vector(std::size_t dim, std::size_t at) {
    IntVec e(dim, Int(0));
    e[at] = 1;
    return e;
}

inline std::size_t row_of_crossing(const LinkDiagram &d, int crossing_id) {
    for (std::size_t i = 0; i < d.crossings().size(); ++i)
        if (d.crossings()[i].id == crossing_id)
            return i;
    throw DiagramError("no crossing with id " + std::to_string(crossing_id));
}

} // namespace detail

// v_x with A_{family,2}(D) v_x = e_x for a self-crossing x, built by the
// splice construction: componentwise numbering of the smoothed diagram
// normalized along the left smoothing arc, pulled back, scaled by the
// crossing sign; the definite variant is the checkerboard flip with color 0
// at the quadrant-0 region of x.
inline NumberingVector special_solution_double(const LinkDiagram &d, int x,
                                               Family family) {
    if (d.n() == 0)
        throw DiagramError("special solution needs n >= 1");
    if (!d.is_self_crossing(x))
        throw DiagramError("crossing " + std::to_string(x) +
                           " joins two link components");
    auto [dx, rec] = d.splice(x);
    int comp = dx.arc_component(rec.gamma1);
    int base = dx.arc_right(rec.gamma1);
    NumberingVector u = componentwise_alexander(dx, comp, base);
    if (u[dx.arc_left(rec.gamma1)] != 1)
        throw std::logic_error("splice arcs misoriented");
    NumberingVector v;
    v.values.resize(d.region_count());
    for (int r = 0; r < d.region_count(); ++r)
        v.values[r] = u[rec.region_map[r]];
    if (rec.sign < 0)
        for (Int &w : v.values)
            w = -w;
    if (family == Family::definite) {
        NumberingVector col = checkerboard_with(d, d.region_at(x, 0), 0);
        v = flip_by_checkerboard(v, col);
    }
    // certificate
    Rule rule{family, Counting::double_};
    IntMat A = region_choice_matrix(d, rule).mat;
    if (A.mul(v.values) !=
        detail::unit_vector(d.n(), detail::row_of_crossing(d, x)))
        throw std::logic_error("special solution certificate failed");
    return v;
}

// v_y with A_{family,1}(D) v_y = e_y for a reducible crossing y, obtained by
// the general integer solver (existence is guaranteed).
inline NumberingVector special_solution_single_reducible(const LinkDiagram &d,
                                                         int y,
                                                         Family family) {
    if (!d.reducible_crossings().count(y))
        throw DiagramError("crossing " + std::to_string(y) +
                           " is not reducible");
    Rule rule{family, Counting::single};
    IntMat A = region_choice_matrix(d, rule).mat;
    auto sol = solve_integer(
        A, detail::unit_vector(d.n(), detail::row_of_crossing(d, y)));
    if (!sol)
        throw std::logic_error("reducible special solution must exist");
    NumberingVector v;
    v.values = sol->particular;
    return v;
}

// v_xy supported on two inter-component crossings of a connected
// two-component diagram. The x-component of A_a2 v_xy is normalized to the
// sign of x; the realized pattern (+1, s) reports the y-component as
// s * sign(y).
struct PairSolution {
    NumberingVector v;
    std::pair<int, int> pattern; // (s_x, s_y), s_x always +1
};

inline PairSolution pair_solution_two_component(const LinkDiagram &d, int x,
                                                int y) {
    if (d.d() != 1 || d.l() != 2)
        throw DiagramError("needs a connected two-component diagram");
    if (x == y)
        throw DiagramError("crossings must be distinct");
    if (d.is_self_crossing(x) || d.is_self_crossing(y))
        throw DiagramError("both crossings must join the two components");
    auto [dx, recx] = d.splice(x);
    auto [dxy, recy] = dx.splice(y);
    ArcRef g1 = recx.gamma1;
    if (!g1.is_loop)
        g1 = recy.arc_map.at(g1.id);
    int comp = dxy.arc_component(g1);
    int base = recy.region_map[dx.arc_right(recx.gamma1)];
    NumberingVector u = componentwise_alexander(dxy, comp, base);
    NumberingVector v;
    v.values.resize(d.region_count());
    for (int r = 0; r < d.region_count(); ++r)
        v.values[r] = u[recy.region_map[recx.region_map[r]]];

    IntMat A = region_choice_matrix(d, Rule::a2()).mat;
    IntVec img = A.mul(v.values);
    std::size_t ix = detail::row_of_crossing(d, x),
                iy = detail::row_of_crossing(d, y);
    Int ex = d.crossing(x).sign, ey = d.crossing(y).sign;
    if (img[ix] != ex && img[ix] != -ex)
        throw std::logic_error("pair solution: bad x component");
    if (img[ix] == -ex) {
        for (Int &w : v.values)
            w = -w;
        img = A.mul(v.values);
    }
    for (std::size_t i = 0; i < img.size(); ++i)
        if (i != ix && i != iy && img[i] != 0)
            throw std::logic_error("pair solution: support too large");
    int sy;
    if (img[iy] == ey)
        sy = +1;
    else if (img[iy] == -ey)
        sy = -1;
    else
        throw std::logic_error("pair solution: bad y component");
    return {std::move(v), {+1, sy}};
}

// Basis of the kernel for the double counting rules: the standard kernel
// solutions for the alternating family, their checkerboard flips for the
// definite one. Verified against the HNF kernel lattice.
inline std::vector<NumberingVector> kernel_basis(const LinkDiagram &d,
                                                 const Rule &rule) {
    if (rule.counting != Counting::double_)
        throw DiagramError("standard kernel bases exist for the double "
                           "counting rules; use the kernel lattice instead");
    if (d.n() == 0)
        throw DiagramError("kernel basis needs n >= 1");
    std::vector<NumberingVector> basis = standard_kernel_basis_vectors(d);
    if (rule.family == Family::definite) {
        NumberingVector col = checkerboard(d);
        for (NumberingVector &v : basis)
            v = flip_by_checkerboard(v, col);
    }
    IntMat A = region_choice_matrix(d, rule).mat;
    std::vector<IntVec> vecs;
    for (const NumberingVector &v : basis) {
        if (!is_zero(A.mul(v.values)))
            throw std::logic_error("standard kernel vector not annihilated");
        vecs.push_back(v.values);
    }
    if (!lattice_equal(from_columns(vecs, d.region_count()),
                       from_columns(kernel_lattice(A), d.region_count())))
        throw std::logic_error("standard kernel basis does not span");
    return basis;
}

// Image basis of the homomorphism on a connected two-component diagram:
// unit score vectors at the self-crossings, support-two vectors pairing each
// remaining inter-component crossing with a fixed one.
struct ImageBasis {
    std::vector<ScoreVector> vectors;
    std::vector<NumberingVector> witnesses; // preimages, aligned with vectors
    int paired_crossing = 0;                // the x_n of the construction
    int self_count = 0;                     // k
};

inline ImageBasis image_basis_two_component(const LinkDiagram &d,
                                            Family family) {
    if (d.d() != 1 || d.l() != 2)
        throw DiagramError("needs a connected two-component diagram");
    if (d.n() < 2)
        throw DiagramError("a connected two-component diagram has >= 2 "
                           "crossings");
    std::vector<int> self, inter;
    for (const Crossing &c : d.crossings())
        (d.is_self_crossing(c.id) ? self : inter).push_back(c.id);
    // x_n: prefer a crossing where component 2 crosses component 1 from the
    // right to the left, i.e. sign * (component 1 on top ? +1 : -1) = +1
    auto rho = [&](int cid) {
        const Crossing &c = d.crossing(cid);
        bool comp1_over = d.edges().at(c.slots[1]).component == 1;
        return c.sign * (comp1_over ? +1 : -1);
    };
    int xn = -1;
    for (int cid : inter)
        if (rho(cid) > 0)
            xn = std::max(xn, cid);
    if (xn < 0)
        xn = *std::max_element(inter.begin(), inter.end());

    Rule dbl{family, Counting::double_};
    IntMat A = region_choice_matrix(d, dbl).mat;
    ImageBasis out;
    out.paired_crossing = xn;
    out.self_count = static_cast<int>(self.size());

    NumberingVector coloring; // definite normalization at x_n
    if (family == Family::definite) {
        int q0 = d.region_at(xn, 0);
        coloring = checkerboard_with(d, q0, d.crossing(xn).sign > 0 ? 0 : 1);
    }
    for (int cid : self) {
        NumberingVector v = special_solution_double(d, cid, family);
        out.vectors.push_back(
            ScoreVector::from_dense(d, A.mul(v.values)));
        out.witnesses.push_back(std::move(v));
    }
    for (int cid : inter) {
        if (cid == xn)
            continue;
        PairSolution p = pair_solution_two_component(d, xn, cid);
        NumberingVector v = std::move(p.v);
        if (family == Family::definite)
            v = flip_by_checkerboard(v, coloring);
        IntVec img = A.mul(v.values);
        // support {cid, xn}, and the x_n component of the definite vectors
        // is exactly 1
        std::size_t in = detail::row_of_crossing(d, xn),
                    ii = detail::row_of_crossing(d, cid);
        for (std::size_t j = 0; j < img.size(); ++j)
            if (j != in && j != ii && img[j] != 0)
                throw std::logic_error("image basis: stray support");
        if (family == Family::definite && img[in] != 1)
            throw std::logic_error("image basis: x_n component not 1");
        if (img[ii] != 1 && img[ii] != -1)
            throw std::logic_error("image basis: unit coefficient expected");
        out.vectors.push_back(ScoreVector::from_dense(d, img));
        out.witnesses.push_back(std::move(v));
    }
    // the n-1 vectors generate the image lattice exactly
    std::vector<IntVec> cols;
    for (const ScoreVector &s : out.vectors)
        cols.push_back(s.dense(d));
    IntMat B = from_columns(cols, d.n());
    if (rank(B) != static_cast<std::size_t>(d.n() - 1))
        throw std::logic_error("image basis: not independent");
    if (!lattice_equal(B, A))
        throw std::logic_error("image basis: lattice mismatch");
    return out;
}

inline bool image_membership(const LinkDiagram &d, const Rule &rule,
                             const ScoreVector &c) {
    if (d.n() == 0)
        throw DiagramError("membership needs n >= 1");
    IntMat A = region_choice_matrix(d, rule).mat;
    bool member = solve_integer(A, c.dense(d)).has_value();
    if (d.d() == 1 && d.l() == 2 && d.n() >= 2) {
        // cross-check against the two-component image basis
        ImageBasis basis = image_basis_two_component(d, rule.family);
        std::vector<IntVec> cols;
        for (const ScoreVector &s : basis.vectors)
            cols.push_back(s.dense(d));
        bool via_basis =
            solve_integer(from_columns(cols, d.n()), c.dense(d)).has_value();
        if (via_basis != member)
            throw std::logic_error("membership cross-check failed");
    }
    return member;
}

// Kernel solution with two prescribed coordinates (the arc-fixing lemmas,
// realized by an integer solve with pinned rows).
inline std::optional<NumberingVector>
kernel_solution_pinned(const LinkDiagram &d, const Rule &rule, int region_a,
                       const Int &value_a, int region_b, const Int &value_b) {
    IntMat A = region_choice_matrix(d, rule).mat;
    IntMat aug(A.rows() + 2, A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            aug(i, j) = A(i, j);
    aug(A.rows(), region_a) = 1;
    aug(A.rows() + 1, region_b) = 1;
    IntVec b(A.rows() + 2, Int(0));
    b[A.rows()] = value_a;
    b[A.rows() + 1] = value_b;
    auto sol = solve_integer(aug, b);
    if (!sol)
        return std::nullopt;
    NumberingVector v;
    v.values = sol->particular;
    return v;
}

// Single-rule solution assembled from a double-rule one, following the
// surjectivity argument: u = w + sum_j w_j sum_{y in X_j} s_{yj} v_y with
// X_j the reducible crossings touched twice by region j and s_{yj} the shared
// corner sign (always +1 in the definite family). Satisfies A_1 u = A_2 w.
inline NumberingVector transfer_double_to_single(const LinkDiagram &d,
                                                 Family family,
                                                 const NumberingVector &w) {
    IntMat A1 = region_choice_matrix(d, {family, Counting::single}).mat;
    IntMat A2 = region_choice_matrix(d, {family, Counting::double_}).mat;
    std::map<int, NumberingVector> vy;
    for (int y : d.reducible_crossings())
        vy.emplace(y, special_solution_single_reducible(d, y, family));
    NumberingVector u = w;
    for (int j = 0; j < d.region_count(); ++j) {
        if (w.values[j] == 0)
            continue;
        const Region &reg = d.regions()[j];
        for (auto &[cid, mult] : reg.touches()) {
            if (mult != 2 || !vy.count(cid))
                continue;
            std::size_t row = detail::row_of_crossing(d, cid);
            Int s = A2(row, j) - A1(row, j); // the shared corner sign
            for (std::size_t r = 0; r < u.size(); ++r)
                u.values[r] += w.values[j] * s * vy.at(cid).values[r];
        }
    }
    if (A1.mul(u.values) != A2.mul(w.values))
        throw std::logic_error("double-to-single transfer failed");
    return u;
}

} // namespace rcp
