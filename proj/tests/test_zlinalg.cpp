#include "rcp/zlinalg.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace rcp;

namespace {

// Reference region choice matrices of the standard figure-eight and
// (2,4)-torus diagrams, frozen as pure linear-algebra fixtures (the diagram
// pipeline reproduces them in test_matrices).
const IntMat kFig8Definite{{1, 1, 1, 0, 0, 1},
                           {1, 1, 0, 0, 1, 1},
                           {0, 1, 1, 1, 1, 0},
                           {0, 0, 1, 1, 1, 1}};

const IntMat kFig8Alternating{{-1, 1, -1, 0, 0, 1},
                              {-1, 1, 0, 0, -1, 1},
                              {0, 1, -1, 1, -1, 0},
                              {0, 0, -1, 1, -1, 1}};

const IntMat kTorusDefinite{{1, 1, 1, 1, 0, 0},
                            {0, 1, 1, 1, 1, 0},
                            {0, 1, 1, 0, 1, 1},
                            {1, 1, 1, 0, 0, 1}};

const IntMat kTorusAlternating{{-1, 1, 1, -1, 0, 0},
                               {0, 1, 1, -1, -1, 0},
                               {0, 1, 1, 0, -1, -1},
                               {-1, 1, 1, 0, 0, -1}};

IntVec iv(std::initializer_list<long long> xs) {
    IntVec v;
    for (auto x : xs)
        v.emplace_back(x);
    return v;
}

void check_decomposition(const IntMat &m) {
    HNFDecomposition d = hnf(m);
    REQUIRE(m.mul(d.U) == d.H);
    // |det U| = 1, via SNF of U (all invariant factors 1)
    auto divs = snf_diagonal(d.U);
    REQUIRE(divs.size() == m.cols());
    for (const Int &x : divs)
        REQUIRE(x == 1);
    // echelon shape: pivot rows strictly increase, pivots positive, and the
    // earlier columns are reduced in every pivot row
    for (std::size_t j = 0; j < d.rank; ++j) {
        std::size_t pr = d.pivot_rows[j];
        if (j > 0)
            REQUIRE(pr > d.pivot_rows[j - 1]);
        REQUIRE(d.H(pr, j) > 0);
        for (std::size_t i = 0; i < pr; ++i)
            REQUIRE(d.H(i, j) == 0);
        for (std::size_t j2 = 0; j2 < j; ++j2) {
            REQUIRE(d.H(pr, j2) >= 0);
            REQUIRE(d.H(pr, j2) < d.H(pr, j));
        }
    }
    for (std::size_t j = d.rank; j < m.cols(); ++j)
        REQUIRE(d.H.col_is_zero(j));
}

IntMat random_matrix(std::mt19937_64 &rng, int max_r, int max_c, int lo,
                     int hi) {
    std::uniform_int_distribution<int> rd(1, max_r), cd(1, max_c),
        ed(lo, hi);
    IntMat m(rd(rng), cd(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = ed(rng);
    return m;
}

} // namespace

TEST_CASE("hnf of identity") {
    IntMat id = IntMat::identity(3);
    HNFDecomposition d = hnf(id);
    REQUIRE(d.rank == 3);
    REQUIRE(d.H == id);
    check_decomposition(id);
}

TEST_CASE("ranks of the worked-example matrices") {
    REQUIRE(rank(kFig8Definite) == 4);
    REQUIRE(rank(kFig8Alternating) == 4);
    REQUIRE(rank(kTorusDefinite) == 3);
    REQUIRE(rank(kTorusAlternating) == 3);
    // row identity r1 - r2 + r3 - r4 = 0 on the torus matrix
    for (std::size_t j = 0; j < 6; ++j)
        REQUIRE(kTorusDefinite(0, j) - kTorusDefinite(1, j) +
                    kTorusDefinite(2, j) - kTorusDefinite(3, j) ==
                0);
}

TEST_CASE("hnf invariants on random matrices") {
    std::mt19937_64 rng(12345);
    for (int t = 0; t < 60; ++t) {
        IntMat m = random_matrix(rng, 7, 9, -9, 9);
        check_decomposition(m);
        REQUIRE(rank(m) == rank_via_snf(m));
    }
}

TEST_CASE("solve_integer on the definite figure-eight example") {
    IntVec c = iv({1, -1, 3, 2});
    auto sol = solve_integer(kFig8Definite, vec_neg(c));
    REQUIRE(sol.has_value());
    REQUIRE(kFig8Definite.mul(sol->particular) == vec_neg(c));
    // a known reference solution also satisfies the system
    IntVec reference = iv({2, -1, -2, 0, 0, 0});
    REQUIRE(kFig8Definite.mul(reference) == vec_neg(c));
    // kernel basis has l+1 = 2 vectors for a knot diagram matrix
    REQUIRE(sol->kernel_basis.size() == 2);
}

TEST_CASE("solve_integer on the alternating figure-eight example") {
    IntVec c = iv({1, -1, 3, 2});
    auto sol = solve_integer(kFig8Alternating, vec_neg(c));
    REQUIRE(sol.has_value());
    IntVec reference = iv({-2, -1, 2, 0, 0, 0});
    REQUIRE(kFig8Alternating.mul(reference) == vec_neg(c));
}

TEST_CASE("solve_integer trivial and unsolvable cases") {
    IntVec zero = iv({0, 0, 0, 0});
    auto sol = solve_integer(kFig8Definite, zero);
    REQUIRE(sol.has_value());
    REQUIRE(is_zero(sol->particular));

    // (2,4)-torus: c = (1,0,0,-1) violates c1-c2+c3-c4 = 0
    IntVec bad = iv({1, 0, 0, -1});
    REQUIRE(!solve_integer(kTorusDefinite, vec_neg(bad)).has_value());
    REQUIRE(!solve_integer(kTorusAlternating, vec_neg(bad)).has_value());
    // and a score vector satisfying the functional is solvable
    IntVec good = iv({1, 2, 3, 2});
    REQUIRE(solve_integer(kTorusDefinite, vec_neg(good)).has_value());
    REQUIRE(solve_integer(kTorusAlternating, vec_neg(good)).has_value());
}

TEST_CASE("kernel lattice sizes") {
    REQUIRE(kernel_lattice(kFig8Alternating).size() == 2);
    REQUIRE(kernel_lattice(kTorusAlternating).size() == 3);
    IntMat z(3, 5);
    auto k = kernel_lattice(z);
    REQUIRE(k.size() == 5);
    REQUIRE(lattice_equal(from_columns(k, 5), IntMat::identity(5)));
}

TEST_CASE("kernel vectors are annihilated and saturated") {
    std::mt19937_64 rng(777);
    for (int t = 0; t < 40; ++t) {
        IntMat m = random_matrix(rng, 6, 8, -4, 4);
        auto ker = kernel_lattice(m);
        REQUIRE(ker.size() == m.cols() - rank(m));
        for (const auto &v : ker)
            REQUIRE(is_zero(m.mul(v)));
        if (!ker.empty()) {
            // saturation: the kernel generators extend to a basis of Z^c, so
            // their own SNF divisors are all 1
            auto divs = snf_diagonal(from_columns(ker, m.cols()));
            for (const Int &x : divs)
                REQUIRE(x == 1);
        }
    }
}

TEST_CASE("lattice equality") {
    REQUIRE(lattice_equal(IntMat{{2, 0}, {0, 1}}, IntMat{{0, 2}, {1, 0}}));
    REQUIRE(!lattice_equal(IntMat{{2}, {0}}, IntMat{{1}, {0}}));
    REQUIRE(lattice_equal(kFig8Definite, kFig8Definite));
    // adding a column already in the lattice changes nothing
    IntMat gen1{{1, 0}, {0, 3}};
    IntMat gen2{{1, 0, 1}, {0, 3, 3}};
    REQUIRE(lattice_equal(gen1, gen2));
}

TEST_CASE("solver agrees with a small brute-force search") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> ed(-3, 3), xd(-2, 2), coin(0, 1);
    for (int t = 0; t < 50; ++t) {
        std::uniform_int_distribution<int> rd(1, 3), cd(1, 4);
        int r = rd(rng), c = cd(rng);
        IntMat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                m(i, j) = ed(rng);
        IntVec b(r, Int(0));
        if (coin(rng)) {
            IntVec x(c);
            for (int j = 0; j < c; ++j)
                x[j] = xd(rng);
            b = m.mul(x);
        } else {
            for (int i = 0; i < r; ++i)
                b[i] = ed(rng);
        }
        // exhaustive over [-4,4]^c (c <= 4 here)
        bool brute = false;
        std::vector<int> x(c, -4);
        while (true) {
            IntVec xv(c);
            for (int j = 0; j < c; ++j)
                xv[j] = x[j];
            if (m.mul(xv) == b) {
                brute = true;
                break;
            }
            int j = 0;
            while (j < c && x[j] == 4)
                x[j++] = -4;
            if (j == c)
                break;
            ++x[j];
        }
        bool solver = solve_integer(m, b).has_value();
        if (brute)
            REQUIRE(solver);
        if (!solver)
            REQUIRE(!brute);
    }
}
