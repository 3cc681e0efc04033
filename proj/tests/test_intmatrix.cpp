#include <doctest.h>

#include <random>

#include "knroot/intmatrix.hpp"
#include "oracles.hpp"

using namespace knroot;

namespace {

IntMatrix mat(std::size_t r, std::size_t c, std::initializer_list<long long> vals) {
    IntMatrix m(r, c);
    auto it = vals.begin();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Int(*it++);
    return m;
}

bool is_row_hnf(const IntMatrix& h) {
    // Staircase with positive pivots; entries above each pivot in [0, pivot).
    std::size_t last_col = 0;
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t piv = h.cols();
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h.at(i, j) != 0) {
                piv = j;
                break;
            }
        if (piv == h.cols()) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row) return false;
        if (i > 0 && piv <= last_col) return false;
        if (h.at(i, piv) <= 0) return false;
        for (std::size_t k = 0; k < i; ++k)
            if (h.at(k, piv) < 0 || h.at(k, piv) >= h.at(i, piv)) return false;
        last_col = piv;
    }
    return true;
}

IntMatrix random_matrix(std::mt19937_64& eng, std::size_t maxdim) {
    std::uniform_int_distribution<int> dim(1, static_cast<int>(maxdim));
    std::uniform_int_distribution<int> entry(-10, 10);
    IntMatrix m(dim(eng), dim(eng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(eng);
    return m;
}

}  // namespace

TEST_CASE("hnf: identity and zero") {
    IntMatrix id = IntMatrix::identity(3);
    auto r = hnf(id);
    CHECK(r.h == id);
    CHECK(r.u == id);

    IntMatrix z = IntMatrix::zero(2, 3);
    auto rz = hnf(z);
    CHECK(rz.h == z);
    CHECK(rz.u == IntMatrix::identity(2));
}

TEST_CASE("hnf: [[2,4],[6,8]] has first pivot 2 and matches the naive oracle") {
    IntMatrix m = mat(2, 2, {2, 4, 6, 8});
    auto r = hnf(m);
    CHECK(r.u * m == r.h);
    CHECK(is_row_hnf(r.h));
    CHECK(r.h.at(0, 0) == 2);
    CHECK(abs(oracles::bareiss_det(r.u)) == 1);
    CHECK(r.h == oracles::naive_hnf(m));
}

TEST_CASE("snf: frozen examples") {
    SUBCASE("[[2,4],[6,8]] -> diag(2,4) via the minor-gcd oracle") {
        IntMatrix m = mat(2, 2, {2, 4, 6, 8});
        // d1 = gcd of all entries, d1*d2 = |det|.
        Int d1 = gcd_vec({2, 4, 6, 8});
        Int det = oracles::bareiss_det(m);
        auto r = snf(m);
        CHECK(r.d.at(0, 0) == d1);
        CHECK(r.d.at(0, 0) * r.d.at(1, 1) == abs(det));
        CHECK(r.d.at(1, 1) == 4);
        CHECK(r.u * m * r.v == r.d);
    }
    SUBCASE("n*I_k stays diagonal") {
        IntMatrix m = mat(3, 3, {5, 0, 0, 0, 5, 0, 0, 0, 5});
        auto r = snf(m);
        CHECK(r.d == m);
    }
    SUBCASE("[[1]]") {
        IntMatrix m = mat(1, 1, {1});
        auto r = snf(m);
        CHECK(r.d.at(0, 0) == 1);
    }
}

TEST_CASE("snf: random matrices satisfy the full contract") {
    std::mt19937_64 eng(42);
    for (int iter = 0; iter < 300; ++iter) {
        IntMatrix m = random_matrix(eng, 6);
        auto r = snf(m);
        CHECK(r.u * m * r.v == r.d);
        CHECK(abs(oracles::bareiss_det(r.u)) == 1);
        CHECK(abs(oracles::bareiss_det(r.v)) == 1);
        const std::size_t nmin = std::min(m.rows(), m.cols());
        for (std::size_t i = 0; i < nmin; ++i) {
            CHECK(r.d.at(i, i) >= 0);
            if (i + 1 < nmin && r.d.at(i + 1, i + 1) != 0) {
                if (r.d.at(i, i) != 0) CHECK(r.d.at(i + 1, i + 1) % r.d.at(i, i) == 0);
                else CHECK(r.d.at(i + 1, i + 1) == 0);  // zeros only after zeros
            }
        }
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (i != j) CHECK(r.d.at(i, j) == 0);
    }
}

TEST_CASE("hnf: random matrices satisfy the full contract") {
    std::mt19937_64 eng(2025);
    for (int iter = 0; iter < 300; ++iter) {
        IntMatrix m = random_matrix(eng, 6);
        auto r = hnf(m);
        CHECK(r.u * m == r.h);
        CHECK(abs(oracles::bareiss_det(r.u)) == 1);
        CHECK(is_row_hnf(r.h));
    }
}

TEST_CASE("hnf/snf: deterministic (same input -> same output)") {
    std::mt19937_64 eng(7);
    for (int iter = 0; iter < 20; ++iter) {
        IntMatrix m = random_matrix(eng, 5);
        auto a = hnf(m), b = hnf(m);
        CHECK(a.h == b.h);
        CHECK(a.u == b.u);
        auto s = snf(m), t = snf(m);
        CHECK(s.d == t.d);
        CHECK(s.u == t.u);
        CHECK(s.v == t.v);
    }
}

TEST_CASE("solve_integral: frozen examples") {
    IntMatrix two_i2 = mat(2, 2, {2, 0, 0, 2});
    auto x = solve_integral(two_i2, {4, 6});
    REQUIRE(x.has_value());
    CHECK(*x == IntVec{2, 3});

    CHECK_FALSE(solve_integral(two_i2, {1, 0}).has_value());

    IntMatrix m = mat(2, 2, {2, 4, 6, 8});
    auto y = solve_integral(m, {2, 6});
    REQUIRE(y.has_value());
    CHECK(m * *y == IntVec{2, 6});
    CHECK(*y == IntVec{1, 0});
}

TEST_CASE("solve_integral: agreement with rational-elimination oracle") {
    std::mt19937_64 eng(99);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int iter = 0; iter < 200; ++iter) {
        // Square systems so that the oracle's basic solution is the unique one.
        std::uniform_int_distribution<int> dim(1, 4);
        std::size_t n = dim(eng);
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(eng);
        if (oracles::bareiss_det(m) == 0) continue;
        IntVec b(n);
        for (Int& x : b) x = entry(eng);
        bool lib = solve_integral(m, b).has_value();
        bool orc = oracles::has_integral_solution(m, b);
        CHECK(lib == orc);
        if (lib) CHECK(m * *solve_integral(m, b) == b);
    }
}
