#include <doctest.h>

#include "oracles.hpp"
#include "weylkit/phase_space.hpp"

using namespace weylkit;

TEST_SUITE_BEGIN("phase_space");

TEST_CASE("construction rejects invalid parameters") {
    CHECK_THROWS_AS(FinitePhaseSpace(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FinitePhaseSpace(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(FinitePhaseSpace(5, 0), std::invalid_argument);
    FinitePhaseSpace sp(5, 2);
    CHECK(sp.point_count() == 625);
    CHECK(sp.hilbert_dim() == 25);
    // total measure of Xi equals N^d
    CHECK(sp.point_count() * sp.weight() == doctest::Approx(25.0));
}

TEST_CASE("symplectic form: pinned value and structure") {
    FinitePhaseSpace sp(5, 1);
    // sigma((1,2),(3,4)) = 2*3 - 4*1 = 2
    CHECK(symplectic_form(sp, sp.point({1}, {2}), sp.point({3}, {4})) == 2);

    for (long i = 0; i < sp.point_count(); ++i) {
        const auto X = sp.decode(i);
        CHECK(symplectic_form(sp, X, X) == 0);
        CHECK(symplectic_form(sp, sp.point({0}, {0}), X) == 0);
        // antisymmetry mod N
        for (long j = 0; j < sp.point_count(); ++j) {
            const int s = symplectic_form(sp, i, j);
            const int t = symplectic_form(sp, j, i);
            CHECK((s + t) % 5 == 0);
        }
    }
}

TEST_CASE("symplectic form is nondegenerate for N <= 7") {
    for (int N : {3, 5, 7}) {
        FinitePhaseSpace sp(N, 1);
        for (long i = 1; i < sp.point_count(); ++i) {
            bool hit = false;
            for (long j = 0; j < sp.point_count() && !hit; ++j) {
                hit = symplectic_form(sp, i, j) != 0;
            }
            CHECK(hit);
        }
    }
}

TEST_CASE("index arithmetic round trips") {
    FinitePhaseSpace sp(7, 2);
    auto gen = oracles::rng(11);
    std::uniform_int_distribution<long> pick(0, sp.point_count() - 1);
    for (int rep = 0; rep < 50; ++rep) {
        const long i = pick(gen);
        const long j = pick(gen);
        CHECK(sp.encode(sp.decode(i)) == i);
        CHECK(sp.add(i, sp.neg(i)) == 0);
        CHECK(sp.sub(sp.add(i, j), j) == i);
    }
}

TEST_CASE("fourier: trivial symbols") {
    FinitePhaseSpace sp(5, 1);

    SymbolGrid zero(sp, Side::OnXi);
    CHECK(sym_fourier(zero).values.norm() == 0.0);

    // indicator of the origin -> constant N^-d
    SymbolGrid delta(sp, Side::OnXi);
    delta.values(0) = 1.0;
    const SymbolGrid hat = sym_fourier(delta);
    for (long ip = 0; ip < sp.point_count(); ++ip) {
        CHECK(std::abs(hat.values(ip) - cd(sp.weight(), 0.0)) < 1e-14);
    }

    // constant 1 on Xi* -> N^d at the origin
    SymbolGrid one(sp, Side::OnXiStar);
    one.values.setOnes();
    const SymbolGrid chk = inv_sym_fourier(one);
    CHECK(std::abs(chk.values(0) - cd(5.0, 0.0)) < 1e-12);
    for (long ix = 1; ix < sp.point_count(); ++ix) {
        CHECK(std::abs(chk.values(ix)) < 1e-12);
    }
}

TEST_CASE("fourier: unitarity, inversion, and agreement with the direct path") {
    for (int N : {5, 7}) {
        FinitePhaseSpace sp(N, 1);
        auto gen = oracles::rng(101 + N);
        for (int rep = 0; rep < 5; ++rep) {
            const SymbolGrid b = oracles::random_symbol(gen, sp, Side::OnXi);
            const SymbolGrid bh = sym_fourier(b);

            // Parseval for the weighted 2-norm
            CHECK(weighted_norm(bh) == doctest::Approx(weighted_norm(b)).epsilon(1e-12));

            // round trips in both orders
            const SymbolGrid back = inv_sym_fourier(bh);
            CHECK((back.values - b.values).norm() < 1e-12 * b.values.norm());
            SymbolGrid a = oracles::random_symbol(gen, sp, Side::OnXiStar);
            const SymbolGrid fwd = sym_fourier(inv_sym_fourier(a));
            CHECK((fwd.values - a.values).norm() < 1e-12 * a.values.norm());

            // fast path vs direct summation vs test oracle
            const SymbolGrid direct = sym_fourier_direct(b);
            CHECK((bh.values - direct.values).norm() < 1e-10);
            const SymbolGrid oracle = oracles::brute_hat(b);
            CHECK((bh.values - oracle.values).norm() < 1e-10);
            const SymbolGrid dchk = inv_sym_fourier_direct(a);
            const SymbolGrid ochk = oracles::brute_check(a);
            CHECK((dchk.values - ochk.values).norm() < 1e-10);
            CHECK((inv_sym_fourier(a).values - dchk.values).norm() < 1e-10);
        }
    }
}

TEST_CASE("fourier in two degrees of freedom") {
    FinitePhaseSpace sp(3, 2);
    auto gen = oracles::rng(77);
    const SymbolGrid b = oracles::random_symbol(gen, sp, Side::OnXi);
    const SymbolGrid bh = sym_fourier(b);
    const SymbolGrid oracle = oracles::brute_hat(b);
    CHECK((bh.values - oracle.values).norm() < 1e-10);
    CHECK((inv_sym_fourier(bh).values - b.values).norm() < 1e-12 * b.values.norm());
}

TEST_CASE("side and space mismatches are rejected") {
    FinitePhaseSpace sp(5, 1);
    SymbolGrid a(sp, Side::OnXiStar);
    CHECK_THROWS_AS(sym_fourier(a), std::invalid_argument);
    SymbolGrid b(sp, Side::OnXi);
    CHECK_THROWS_AS(inv_sym_fourier(b), std::invalid_argument);
    FinitePhaseSpace sp2(7, 1);
    SymbolGrid c(sp2, Side::OnXiStar);
    CHECK_THROWS_AS(weighted_inner(a, c), std::invalid_argument);
}

TEST_SUITE_END();
