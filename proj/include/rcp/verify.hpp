#pragma once

#include "rcp/choice.hpp"
#include "rcp/corpus.hpp"
#include "rcp/moves.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

// Property suites behind `verify`: every theorem-backed identity the library
// promises, run over a diagram or a move walk.

namespace rcp {

struct VerifyReport {
    struct Item {
        std::string name;
        bool ok;
        std::string detail;
    };
    std::vector<Item> items;
    bool all_ok = true;

    void add(const std::string &name, bool ok, const std::string &detail = "") {
        items.push_back({name, ok, detail});
        all_ok = all_ok && ok;
    }
    void run(const std::string &name, const std::function<void()> &body) {
        try {
            body();
            add(name, true);
        } catch (const std::exception &ex) {
            add(name, false, ex.what());
        }
    }
};

inline void verify_diagram(const LinkDiagram &d, VerifyReport &rep,
                           unsigned long long seed = 0) {
    rep.run("diagram-invariants", [&] { d.validate(); });

    rep.run("matrix-row-sums", [&] {
        IntMat d2 = region_choice_matrix(d, Rule::d2()).mat;
        IntMat a2 = region_choice_matrix(d, Rule::a2()).mat;
        for (std::size_t i = 0; i < d2.rows(); ++i) {
            Int s2 = 0, sa = 0;
            for (std::size_t j = 0; j < d2.cols(); ++j) {
                s2 += d2(i, j);
                sa += a2(i, j);
            }
            if (s2 != 4 || sa != 0)
                throw std::logic_error("row sum violated");
        }
    });

    rep.run("mod2-reduction", [&] {
        if (mod2_reduce(region_choice_matrix(d, Rule::d1()).mat) !=
                mod2_reduce(region_choice_matrix(d, Rule::a1()).mat) ||
            mod2_reduce(region_choice_matrix(d, Rule::d2()).mat) !=
                mod2_reduce(region_choice_matrix(d, Rule::a2()).mat))
            throw std::logic_error("mod 2 mismatch");
    });

    rep.run("irreducible-iff-equal", [&] {
        bool eq = region_choice_matrix(d, Rule::d1()).mat ==
                  region_choice_matrix(d, Rule::d2()).mat;
        if (eq != !d.is_reducible())
            throw std::logic_error("single/double equality mismatch");
    });

    rep.run("rank-theorem", [&] {
        for (const Rule &rule : all_rules()) {
            IntMat A = region_choice_matrix(d, rule).mat;
            if (rank(A) != static_cast<std::size_t>(d.n() + d.d() - d.l()))
                throw std::logic_error("rank != n+d-l for " + rule.name());
            if (kernel_lattice(A).size() !=
                static_cast<std::size_t>(d.l() + 1))
                throw std::logic_error("kernel rank != l+1 for " +
                                       rule.name());
        }
    });

    rep.run("kernel-bases", [&] {
        kernel_basis(d, Rule::a2());
        kernel_basis(d, Rule::d2());
    });

    rep.run("image-equality", [&] {
        for (Family f : {Family::definite, Family::alternating}) {
            IntMat A1 = region_choice_matrix(d, {f, Counting::single}).mat;
            IntMat A2 = region_choice_matrix(d, {f, Counting::double_}).mat;
            if (!lattice_equal(A1, A2))
                throw std::logic_error("image single != double");
        }
    });

    rep.run("kernel-flips", [&] {
        NumberingVector col = checkerboard(d);
        for (Counting cnt : {Counting::single, Counting::double_}) {
            IntMat Aa = region_choice_matrix(d, {Family::alternating, cnt}).mat;
            IntMat Ad = region_choice_matrix(d, {Family::definite, cnt}).mat;
            for (const IntVec &k : kernel_lattice(Aa)) {
                NumberingVector v;
                v.values = k;
                if (!is_zero(Ad.mul(flip_by_checkerboard(v, col).values)))
                    throw std::logic_error("flip left kernel");
            }
            for (const IntVec &k : kernel_lattice(Ad)) {
                NumberingVector v;
                v.values = k;
                if (!is_zero(Aa.mul(flip_by_checkerboard(v, col).values)))
                    throw std::logic_error("flip left kernel");
            }
        }
    });

    rep.run("special-solutions", [&] {
        for (const Crossing &c : d.crossings())
            if (d.is_self_crossing(c.id)) {
                special_solution_double(d, c.id, Family::alternating);
                special_solution_double(d, c.id, Family::definite);
            }
        for (int y : d.reducible_crossings()) {
            special_solution_single_reducible(d, y, Family::alternating);
            special_solution_single_reducible(d, y, Family::definite);
        }
    });

    rep.run("transfer-identity", [&] {
        // A_2 r_j - A_1 r_j = sum over twice-touching reducible crossings of
        // the shared corner sign times e_y, and the assembled single-rule
        // solution solves whenever the double rule does
        std::mt19937_64 rng(seed * 7919 + 13);
        std::uniform_int_distribution<int> cd(-3, 3);
        for (Family f : {Family::definite, Family::alternating}) {
            IntMat A1 = region_choice_matrix(d, {f, Counting::single}).mat;
            IntMat A2 = region_choice_matrix(d, {f, Counting::double_}).mat;
            for (int j = 0; j < d.region_count(); ++j) {
                IntVec diff(d.n(), Int(0));
                for (std::size_t i = 0; i < A1.rows(); ++i)
                    diff[i] = A2(i, j) - A1(i, j);
                for (auto &[cid, mult] : d.regions()[j].touches()) {
                    if (mult != 2)
                        continue;
                    NumberingVector vy =
                        special_solution_single_reducible(d, cid, f);
                    std::size_t row = 0;
                    for (std::size_t i = 0; i < A1.rows(); ++i)
                        if (d.crossings()[i].id == cid)
                            row = i;
                    Int s = A2(row, j) - A1(row, j);
                    IntVec img = A1.mul(vy.values);
                    for (std::size_t i = 0; i < img.size(); ++i)
                        diff[i] -= s * img[i];
                }
                if (!is_zero(diff))
                    throw std::logic_error("transfer identity violated");
            }
            ScoreVector c;
            for (const Crossing &cr : d.crossings())
                c.values[cr.id] = cd(rng);
            auto w = solve({&d, {f, Counting::double_}, c});
            if (w) {
                NumberingVector u = transfer_double_to_single(d, f, w->u);
                if (A1.mul(u.values) != vec_neg(c.dense(d)))
                    throw std::logic_error("assembled solution wrong");
            }
        }
    });

    if (d.l() == 1) {
        rep.run("knot-surjectivity", [&] {
            std::mt19937_64 rng(seed * 31337 + 5);
            std::uniform_int_distribution<int> cd(-9, 9);
            for (int trial = 0; trial < 10; ++trial) {
                ScoreVector c;
                for (const Crossing &cr : d.crossings())
                    c.values[cr.id] = cd(rng);
                for (const Rule &rule : all_rules()) {
                    auto sol = solve({&d, rule, c});
                    if (!sol || !sol->certificate)
                        throw std::logic_error("knot instance unsolvable");
                }
            }
        });
    }

    if (d.d() == 1 && d.l() == 2 && d.n() >= 2) {
        rep.run("two-component-image-basis", [&] {
            image_basis_two_component(d, Family::alternating);
            image_basis_two_component(d, Family::definite);
            for (const Crossing &cx : d.crossings())
                for (const Crossing &cy : d.crossings())
                    if (cx.id != cy.id && !d.is_self_crossing(cx.id) &&
                        !d.is_self_crossing(cy.id))
                        pair_solution_two_component(d, cx.id, cy.id);
        });
    }
}

inline VerifyReport verify_entry(const CorpusEntry &e,
                                 unsigned long long seed = 0) {
    VerifyReport rep;
    rep.run("expected-data", [&] {
        // re-runs the load-time verification, including golden matrices
        builtin(e.name);
    });
    verify_diagram(e.diagram, rep, seed);
    return rep;
}

inline VerifyReport verify_walk(unsigned long long seed, int steps) {
    VerifyReport rep;
    WalkResult w = random_walk(builtin("kink_sum(2)").diagram, seed, steps, 14);
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
        const WalkStep &st = w.steps[i];
        std::ostringstream name;
        name << "step " << i << " " << move_name(st.spec.kind);
        std::string detail;
        for (const std::string &f : st.report.failures)
            detail += f + "; ";
        rep.add(name.str(), st.report.ok, detail);
    }
    return rep;
}

inline VerifyReport verify_all(unsigned long long seed = 0) {
    VerifyReport rep;
    for (const std::string &name : builtin_names()) {
        VerifyReport sub = verify_entry(builtin(name), seed);
        for (auto &item : sub.items)
            rep.add(name + ": " + item.name, item.ok, item.detail);
    }
    for (unsigned long long s : {seed + 1, seed + 2}) {
        VerifyReport sub = verify_walk(s, 12);
        rep.add("walk seed " + std::to_string(s), sub.all_ok);
    }
    return rep;
}

} // namespace rcp
