#include <catch2/catch_amalgamated.hpp>

#include "symmspace/mehler_fock.hpp"

using namespace symmspace;

namespace {

double f_exp(double u) { return std::exp(-(u - 1.0)); }
double f_ratio(double u) { return std::exp(-2.0 * (u - 1.0)) / (1.0 + u); }
double f_hump(double u) { return (u - 1.0) * std::exp(-(u - 1.0)); }

}  // namespace

TEST_CASE("composite Gauss-Legendre quadrature") {
    std::vector<double> x, w;
    mf_detail::composite(0.0, 3.0, 6, 12, x, w);
    double mono = 0.0, expo = 0.0;
    for (size_t k = 0; k < x.size(); ++k) {
        mono += w[k] * x[k] * x[k] * x[k];
        expo += w[k] * std::exp(-x[k]);
    }
    REQUIRE(mono == Catch::Approx(81.0 / 4.0).epsilon(1e-13));
    REQUIRE(expo == Catch::Approx(1.0 - std::exp(-3.0)).epsilon(1e-13));
}

TEST_CASE("kernel Laplace integral against the Bessel oracle") {
    // int_1^inf e^{-p u} P_{-1/2+is}(u) du = sqrt(2/(pi p)) Re K_{is}(p),
    // frozen reference values
    struct Row {
        double p, s, val;
    };
    const Row rows[] = {
        {1.0, 0.7, 0.28023777192466819},
        {2.0, 1.5, 0.039885392289165339},
        {0.5, 2.0, 0.018620534397610236},
    };
    std::vector<double> u, w;
    mf_detail::composite(1.0, 80.0, 64, 24, u, w);
    std::vector<double> chi(u.size());
    for (size_t j = 0; j < u.size(); ++j) chi[j] = std::acosh(u[j]);
    for (const Row& r : rows) {
        auto pv = conical_march(r.s, 0, chi);
        double acc = 0.0;
        for (size_t j = 0; j < u.size(); ++j) acc += w[j] * std::exp(-r.p * u[j]) * pv[j][0];
        REQUIRE(acc == Catch::Approx(r.val).epsilon(1e-7));
    }
}

TEST_CASE("forward prefactor at order zero is s tanh(pi s)") {
    MehlerFockTransform tr;
    for (double s : {0.3, 1.0, 2.7})
        REQUIRE(tr.forward_prefactor(s) == Catch::Approx(s * std::tanh(M_PI * s)).epsilon(1e-13));
}

TEST_CASE("gamma weight recurrences") {
    double s = 1.3;
    double g0 = mf_detail::gamma_half_sq(0, s);
    REQUIRE(g0 == Catch::Approx(M_PI / std::cosh(M_PI * s)).epsilon(1e-13));
    REQUIRE(mf_detail::gamma_half_sq(1, s) == Catch::Approx(g0 / (0.25 + s * s)).epsilon(1e-13));
    REQUIRE(mf_detail::gamma_half_sq(-1, s) == Catch::Approx(g0 * (0.25 + s * s)).epsilon(1e-13));
}

TEST_CASE("round trips and Plancherel on decaying test functions") {
    MehlerFockTransform tr;
    for (auto* f : {&f_exp, &f_ratio, &f_hump}) {
        REQUIRE(tr.roundtrip_u_error(*f) < 1e-3);
        REQUIRE(tr.roundtrip_s_error(tr.forward(*f)) < 1e-3);
        REQUIRE(tr.plancherel_ratio(*f) == Catch::Approx(1.0).epsilon(0.01));
        REQUIRE(tr.spectral_tail(*f) < 1e-6);
    }
}

TEST_CASE("linearity at zero") {
    MehlerFockTransform tr;
    Eigen::VectorXd zu = Eigen::VectorXd::Zero(tr.u_nodes().size());
    Eigen::VectorXd zs = Eigen::VectorXd::Zero(tr.s_nodes().size());
    REQUIRE(tr.forward(zu).cwiseAbs().maxCoeff() == 0.0);
    REQUIRE(tr.inverse(zs).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("grid validation") {
    MehlerFockGrid g;
    g.s_min = 0.0;
    REQUIRE_THROWS(MehlerFockTransform(g));
    g = MehlerFockGrid();
    g.u_max = 0.5;
    REQUIRE_THROWS(MehlerFockTransform(g));
}

TEST_CASE("literal gamma weight is the square root of the default") {
    MehlerFockGrid g;
    g.weight = MehlerFockWeight::literal_gamma;
    MehlerFockTransform lit(g), sq;
    double s = 0.9;
    double w_lit = lit.forward_prefactor(s) / (s / M_PI * std::sinh(M_PI * s));
    double w_sq = sq.forward_prefactor(s) / (s / M_PI * std::sinh(M_PI * s));
    REQUIRE(w_lit * w_lit == Catch::Approx(w_sq).epsilon(1e-12));
}
