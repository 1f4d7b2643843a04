#include <catch2/catch_amalgamated.hpp>

#include "symmspace/conical.hpp"

using namespace symmspace;

TEST_CASE("normalization at the left endpoint") {
    for (double s : {0.5, 1.0, 2.0}) {
        REQUIRE(conical_p(s, 0, 1.0) == 1.0);
        REQUIRE(conical_p(s, 1, 1.0) == 0.0);
        // continuity from the right
        REQUIRE(conical_p(s, 0, 1.0 + 1e-10) == Catch::Approx(1.0).margin(1e-9));
    }
}

TEST_CASE("frozen multiprecision oracle values") {
    // independent arbitrary-precision associated-Legendre evaluations
    struct Row {
        double s, u, val;
        int m;
    };
    const Row rows[] = {
        {0.5, 1.5, 0.89157693375600336, 0},  {1.0, 2.0, 0.55641354893507601, 0},
        {2.0, 3.0, -0.29898526782409453, 0}, {1.0, 2.0, -0.54331907599601738, 1},
        {1.0, 2.0, 0.55922472295979246, 2},  {0.5, 4.0, -0.54089627460504677, 3},
        {2.0, 10.0, 0.28886052500255976, 1}, {1.0, 40.0, -0.11987960403620469, 0},
        {1.0, 2.0, 0.4346552607968139, -1},  {1.0, 2.0, 0.13765531642087199, -2},
    };
    for (const auto& r : rows)
        REQUIRE(conical_p(r.s, r.m, r.u) == Catch::Approx(r.val).epsilon(1e-10));
}

TEST_CASE("series and ODE march agree across the handoff point") {
    for (double s : {0.5, 2.0}) {
        for (int m : {0, 1, 3}) {
            auto lo = conical_detail::series(s, m, 0.34);
            auto hi = conical_march(s, m, {0.34 + 1e-9});
            REQUIRE(hi[0][0] == Catch::Approx(lo[0]).margin(1e-10));
            REQUIRE(hi[0][1] == Catch::Approx(lo[1]).margin(1e-9));
        }
    }
}

TEST_CASE("Mehler-Dirichlet integral oracle at m = 0") {
    for (double s : {0.5, 1.0, 2.0}) {
        for (double chi : {0.2, 0.7, 1.5, 3.0}) {
            double md = mehler_dirichlet(s, chi);
            double pm = conical_march(s, 0, {chi})[0][0];
            REQUIRE(pm == Catch::Approx(md).margin(2e-9));
        }
    }
}

TEST_CASE("Legendre ODE residual in the u variable") {
    const double h = 1e-4;
    for (double s : {0.5, 1.0, 2.0}) {
        for (int m : {0, 1, 2}) {
            for (double u : {1.5, 2.5, 6.0}) {
                auto c = conical_pair_u(s, m, u);
                auto l = conical_pair_u(s, m, u - h);
                auto r = conical_pair_u(s, m, u + h);
                auto l2 = conical_pair_u(s, m, u - 2.0 * h);
                auto r2 = conical_pair_u(s, m, u + 2.0 * h);
                // Richardson-extrapolated central difference of dp/du
                double d2 = (4.0 * (r[1] - l[1]) / (2.0 * h) -
                             (r2[1] - l2[1]) / (4.0 * h)) / 3.0;
                REQUIRE(std::abs(legendre_ode_residual(s, m, u, c[0], c[1], d2)) < 1e-8);
            }
        }
    }
}

TEST_CASE("raising recurrence d/dchi P^m = m coth(chi) P^m + P^{m+1}") {
    for (double s : {0.5, 2.0}) {
        for (int m : {0, 1, 2}) {
            for (double chi : {0.5, 1.3, 2.4}) {
                auto pm = conical_march(s, m, {chi})[0];
                auto pm1 = conical_march(s, m + 1, {chi})[0];
                double rhs = m * (std::cosh(chi) / std::sinh(chi)) * pm[0] + pm1[0];
                REQUIRE(pm[1] == Catch::Approx(rhs).epsilon(1e-9).margin(1e-10));
            }
        }
    }
}

TEST_CASE("lowering recurrence down to order m - 1") {
    // (d/dchi + m coth chi) P^m = -((m - 1/2)^2 + s^2) P^{m-1}
    // the minus sign is (nu + m)(nu - m + 1) on the critical line
    for (double s : {0.5, 1.0}) {
        for (int m : {1, 2, 3}) {
            for (double chi : {0.6, 1.8}) {
                auto pm = conical_march(s, m, {chi})[0];
                auto pml = conical_march(s, m - 1, {chi})[0];
                double lhs = pm[1] + m * (std::cosh(chi) / std::sinh(chi)) * pm[0];
                double fac = -((m - 0.5) * (m - 0.5) + s * s);
                REQUIRE(lhs == Catch::Approx(fac * pml[0]).epsilon(1e-9).margin(1e-10));
            }
        }
    }
}

TEST_CASE("order product helper") {
    REQUIRE(conical_order_product(1.0, 0) == 1.0);
    REQUIRE(conical_order_product(1.0, 1) == Catch::Approx(1.25));
    REQUIRE(conical_order_product(1.0, 2) == Catch::Approx(1.25 * 3.25));
    REQUIRE(conical_order_product(1.0, -2) == Catch::Approx(1.0 / (1.25 * 3.25)));
}

TEST_CASE("Frobenius exponent near u = 1") {
    // regular branch scales like (u-1)^{m/2}
    for (int m : {1, 2}) {
        double s = 1.0;
        double u1 = 1.0 + 1e-4, u2 = 1.0 + 4e-4;
        double p1 = conical_p(s, m, u1), p2 = conical_p(s, m, u2);
        double slope = std::log(std::abs(p2 / p1)) / std::log(4.0);
        REQUIRE(slope == Catch::Approx(m / 2.0).margin(1e-3));
    }
}

TEST_CASE("oscillatory u^{-1/2} envelope at large argument") {
    double s = 1.0;
    double lo = 1e9, hi = 0.0;
    std::vector<double> chis;
    for (int k = 0; k < 60; ++k) chis.push_back(5.0 + 0.05 * k);
    auto vals = conical_march(s, 0, chis);
    for (size_t k = 0; k < chis.size(); ++k) {
        double env = std::abs(vals[k][0]) * std::sqrt(std::cosh(chis[k]));
        lo = std::min(lo, env);
        hi = std::max(hi, env);
    }
    // neither grows nor decays: the modulated amplitude stays order one
    REQUIRE(hi < 5.0);
    REQUIRE(hi > 0.2);
    // and it oscillates: sign changes occur in the window
    int flips = 0;
    for (size_t k = 0; k + 1 < chis.size(); ++k)
        if (vals[k][0] * vals[k + 1][0] < 0.0) ++flips;
    REQUIRE(flips >= 1);
}

TEST_CASE("determinism of the march") {
    auto a = conical_march(1.3, 2, {0.5, 1.5, 2.5});
    auto b = conical_march(1.3, 2, {0.5, 1.5, 2.5});
    for (int k = 0; k < 3; ++k) {
        REQUIRE(a[k][0] == b[k][0]);
        REQUIRE(a[k][1] == b[k][1]);
    }
}

TEST_CASE("input validation") {
    REQUIRE_THROWS(conical_p(1.0, 0, 0.5));
    REQUIRE_THROWS(conical_march(1.0, 0, {-0.1}));
    REQUIRE_THROWS(conical_march(1.0, -1, {1.0}));
}
