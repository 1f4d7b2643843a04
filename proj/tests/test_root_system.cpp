#include <catch2/catch_amalgamated.hpp>

#include "symmspace/haar.hpp"
#include "symmspace/root_system.hpp"

using namespace symmspace;

TEST_CASE("root counts and simple root combinations") {
    for (int d = 2; d <= 5; ++d) {
        auto rs = RestrictedRootSystem::make(d);
        REQUIRE(static_cast<int>(rs.roots.size()) == d * (d - 1));
        REQUIRE(static_cast<int>(rs.positives.size()) == d * (d - 1) / 2);
        REQUIRE(static_cast<int>(rs.simples.size()) == rs.rank());
        // each positive root is a nonnegative integer combination of simples:
        // eps_i - eps_j = sum_{k=i}^{j-1} simple_k
        for (const auto& p : rs.positives) {
            Eigen::VectorXd acc = Eigen::VectorXd::Zero(d);
            int i = 0, j = 0;
            for (int k = 0; k < d; ++k) {
                if (p(k) > 0.5) i = k;
                if (p(k) < -0.5) j = k;
            }
            for (int k = i; k < j; ++k) acc += rs.simples[k];
            REQUIRE((acc - p).cwiseAbs().maxCoeff() < 1e-15);
        }
    }
}

TEST_CASE("rho in eps coordinates") {
    Eigen::VectorXd r2 = rho(2).entries();
    REQUIRE(r2(0) == Catch::Approx(0.5));
    REQUIRE(r2(1) == Catch::Approx(-0.5));

    // hand oracle: sum the positive roots directly
    for (int d : {3, 4}) {
        auto rs = RestrictedRootSystem::make(d);
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(d);
        for (const auto& p : rs.positives) acc += p;
        REQUIRE((0.5 * acc - rho(d).entries()).cwiseAbs().maxCoeff() < 1e-14);
    }
    Eigen::VectorXd r4 = rho(4).entries();
    REQUIRE(r4(0) == Catch::Approx(1.5));
    REQUIRE(r4(3) == Catch::Approx(-1.5));
}

TEST_CASE("rho pairing identity") {
    // rho(H) = (1/2) sum_{i<j} (t_i - t_j)
    HaarSampler rng(21);
    for (int d : {2, 3, 4}) {
        SpectralParameter r = rho(d);
        for (int t = 0; t < 100; ++t) {
            Eigen::VectorXd v(d);
            for (int i = 0; i < d; ++i) v(i) = rng.gaussian_scalar();
            CartanVector h = CartanVector::project(v);
            double direct = 0.0;
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) direct += 0.5 * (h(i) - h(j));
            REQUIRE(r.pair(h) == Catch::Approx(direct).margin(1e-12));
        }
    }
}

TEST_CASE("weyl orbits") {
    REQUIRE(weyl_orbit(SpectralParameter::zero(3)).size() == 1);

    Eigen::VectorXd l2(2);
    l2 << 0.7, -0.7;
    REQUIRE(weyl_orbit(SpectralParameter(l2)).size() == 2);

    Eigen::VectorXd l3(3);
    l3 << 1.0, 0.2, -1.2;
    REQUIRE(weyl_orbit(SpectralParameter(l3)).size() == 6);
}

TEST_CASE("dominant representative generates the same orbit") {
    HaarSampler rng(22);
    for (int t = 0; t < 20; ++t) {
        Eigen::VectorXd v(4);
        for (int i = 0; i < 4; ++i) v(i) = rng.gaussian_scalar();
        v.array() -= v.mean();
        SpectralParameter lam(v);
        auto o1 = weyl_orbit(lam);
        auto o2 = weyl_orbit(lam.dominant());
        REQUIRE(o1.size() == o2.size());
        for (size_t k = 0; k < o1.size(); ++k)
            REQUIRE((o1[k].entries() - o2[k].entries()).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("dual norm normalizations") {
    // casimir-matched floors
    REQUIRE(dual_norm_sq(rho(2), Normalization::casimir_matched) == Catch::Approx(0.25));
    REQUIRE(dual_norm_sq(rho(3), Normalization::casimir_matched) ==
            Catch::Approx(1.0 / 3.0));
    // killing at d = 3: dual of 6 Tr applied to (1,0,-1) gives 2/6
    REQUIRE(dual_norm_sq(rho(3), Normalization::killing) == Catch::Approx(1.0 / 3.0));
    // killing at d = 2 differs from the d = 2 ODE floor; the discrepancy is
    // carried openly
    REQUIRE(dual_norm_sq(rho(2), Normalization::killing) == Catch::Approx(0.125));
    REQUIRE(dual_norm_sq(rho(2), Normalization::trace) == Catch::Approx(0.5));
}

TEST_CASE("regularity of Cartan vectors") {
    Eigen::VectorXd v(3);
    v << 1.0, 0.0, -1.0;
    REQUIRE(CartanVector(v).regular());
    Eigen::VectorXd w(3);
    w << 0.5, 0.5, -1.0;
    REQUIRE_FALSE(CartanVector(w).regular());
}
