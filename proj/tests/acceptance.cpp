// End-to-end acceptance gate: one pass/fail line per criterion, nonzero exit
// if any criterion fails. Tolerances are pinned here on purpose; loosening
// them is a release decision, not a test tweak.

#include <cstdio>
#include <string>

#include "symmspace/basis2.hpp"
#include "symmspace/generators.hpp"
#include "symmspace/io.hpp"
#include "symmspace/mehler_fock.hpp"
#include "symmspace/spherical.hpp"

using namespace symmspace;

namespace {

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail, double secs) {
    std::printf("criterion %2d [%s]: %s (%s, %.1f s)\n", id, name, pass ? "PASS" : "FAIL",
                detail.c_str(), secs);
    if (!pass) ++failures;
}

std::string fmt(const char* key, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s=%.2e", key, v);
    return buf;
}

Eigen::VectorXd away_from_axis(HaarSampler& rng) {
    while (true) {
        MetricPoint q = random_spd(rng, 2);
        double u = 0.5 * (q.matrix()(0, 0) + q.matrix()(1, 1));
        double v = 0.5 * (q.matrix()(0, 0) - q.matrix()(1, 1));
        double w = q.matrix()(0, 1);
        if (std::hypot(v, w) > 0.1 * u) return q.coords();
    }
}

void criterion_algebra() {
    WallTimer t;
    double worst = 0.0;
    for (int d : {2, 3, 4}) {
        AlgebraReport rep = verify_algebra(d, 100, 2026);
        worst = std::max({worst, rep.max_residual_lie, rep.max_residual_covariance,
                          rep.max_residual_scaling});
    }
    report(1, "operator algebra", worst < 1e-9, fmt("max_residual", worst), t.seconds());
}

void criterion_eigenfunctions() {
    WallTimer t;
    double worst = 0.0;
    HaarSampler rng(31, 7);
    for (int d : {2, 3}) {
        WaveFunction psi0 = singlet(d);
        FirstOrderOperator zero = cplx(0.0) * trace_T(d);
        for (int k = 0; k < 3; ++k) {
            Eigen::VectorXd x = random_spd(rng, d).coords();
            Jet2 j0 = psi0(x);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    worst = std::max(
                        worst, operator_residual(generator_T(a, b, d), zero, j0, x));
        }
        for (int k = 0; k < 5; ++k) {
            cplx r(rng.gaussian_scalar(), rng.gaussian_scalar());
            WaveFunction psi = det_power(d, r);
            MetricPoint q = random_spd(rng, d);
            Eigen::VectorXd x = q.coords();
            Eigen::MatrixXd qinv = q.matrix().inverse();
            cplx val = psi(x).value;
            // momentum on a determinant power: p^{cb} q^r = -2 i r q^{cb} q^r
            for (int c = 0; c < d; ++c)
                for (int b = 0; b < d; ++b) {
                    cplx got = apply(momentum(c, b, d), psi(x), x).value;
                    cplx want = -2.0 * I_UNIT * r * qinv(c, b) * val;
                    worst = std::max(worst, std::abs(got - want) / std::abs(val));
                }
            // trace generator eigenvalue on the scaling states
            double rr = rng.gaussian_scalar();
            WaveFunction sc = scaling_state(d, rr);
            cplx got = apply(trace_T(d), sc(x), x).value;
            worst = std::max(worst, std::abs(got - rr * sc(x).value) / std::abs(sc(x).value));
        }
    }
    report(2, "singlet/scaling states", worst < 1e-10, fmt("max_residual", worst), t.seconds());
}

void criterion_decompositions() {
    WallTimer t;
    double worst = 0.0, worst_h = 0.0;
    HaarSampler rng(32, 7);
    for (int d = 2; d <= 5; ++d) {
        for (int k = 0; k < 250; ++k) {
            GroupElement g = random_sl(rng, d);
            IwasawaFactors iw = iwasawa(g);
            CartanFactors ca = cartan(g);
            worst = std::max(
                {worst, (iw.reconstruct() - g.matrix()).norm() / g.matrix().norm(),
                 (ca.reconstruct() - g.matrix()).norm() / g.matrix().norm()});
            MetricPoint q = random_spd(rng, d);
            Eigen::MatrixXd qs =
                q.matrix() * std::pow(q.matrix().determinant(), -1.0 / d);
            PolarFactors po = polar(MetricPoint(qs));
            worst = std::max(worst, (po.reconstruct() - qs).norm() / qs.norm());
        }
        for (int k = 0; k < 20; ++k)
            worst_h = std::max(
                worst_h, h_function(rng.next(d, true)).entries().cwiseAbs().maxCoeff());
    }
    report(3, "decomposition round trips", worst < 1e-11 && worst_h < 1e-12,
           fmt("reconstruct", worst) + " " + fmt("h_orthogonal", worst_h), t.seconds());
}

void criterion_spherical_properties() {
    WallTimer t;
    Eigen::VectorXd l2(2), l3(3);
    l2 << 1.0, -1.0;
    l3 << 0.6, 0.0, -0.6;
    SphericalEvaluator ev2 = SphericalEvaluator::so2_gauss(SpectralParameter(l2));
    bool identity_ok = ev2.value(GroupElement::identity(2)) == cplx(1.0, 0.0);
    PropertyReport r2 = check_properties(SpectralParameter(l2), 512, 30);
    bool d2_ok = identity_ok && r2.conjugation_symmetry < 1e-8 && r2.bi_invariance < 1e-8 &&
                 r2.functional_equation < 1e-8 && r2.boundedness_excess < 1e-10 &&
                 r2.gram_min_eigenvalue > -1e-8 && r2.weyl_invariance < 1e-10;
    PropertyReport r3 = check_properties(SpectralParameter(l3), 100000, 8);
    bool d3_ok = r3.ok(1e-8);
    report(4, "spherical properties",
           d2_ok && d3_ok,
           fmt("d2_bi", r2.bi_invariance) + " " + fmt("d2_fe", r2.functional_equation) + " " +
               fmt("d3_fe", r3.functional_equation) + " " + fmt("d3_3sigma", r3.error_scale),
           t.seconds());
}

void criterion_conical_crosscheck() {
    WallTimer t;
    double worst = 0.0;
    for (double s : {0.5, 1.0, 2.0})
        for (int k = 1; k <= 30; ++k) worst = std::max(worst, spherical_conical_gap(s, 0.1 * k));
    report(5, "spherical vs conical", worst < 1e-5, fmt("max_gap", worst), t.seconds());
}

void criterion_casimir_spectrum() {
    WallTimer t;
    double worst = 0.0;
    HaarSampler rng(33, 7);
    const BasisLabelCompact labels[] = {{0.8, 1.0, 0}, {-0.4, 0.5, 1}, {1.3, 2.0, -2}};
    for (const auto& lab : labels) {
        WaveFunction psi = basis_compact(lab);
        double eig = 0.25 + lab.s * lab.s;
        for (int k = 0; k < 20; ++k) {
            Eigen::VectorXd x = away_from_axis(rng);
            MetricPoint q = MetricPoint::from_coords(x, 2);
            cplx val = psi(x).value;
            worst = std::max(worst,
                             std::abs(casimir2_apply(2, psi, q) - eig * val) / std::abs(val));
        }
    }
    SphericalEvaluator ev = SphericalEvaluator::haar_mc(SpectralParameter::zero(3), 100000);
    Eigen::VectorXd tg(3);
    tg << 0.8, 0.1, -0.9;
    RadialCheckReport rep = radial_laplacian_check(ev, {tg});
    double floor_gap = std::abs(rep.mean_measured_eigenvalue + 1.0 / 3.0);
    report(6, "Casimir spectrum", worst < 1e-6 && floor_gap < 5e-2,
           fmt("c2_residual", worst) + " " + fmt("d3_floor_gap", floor_gap), t.seconds());
}

void criterion_ladder() {
    WallTimer t;
    double worst_coef = 0.0, worst_env = 0.0;
    for (double s : {0.5, 1.0, 2.0})
        for (int m = -2; m <= 2; ++m)
            for (int dir : {+1, -1}) {
                LadderResult lr = ladder_apply(BasisLabelCompact{0.0, s, m}, dir);
                double want = std::sqrt((m + 0.5 * dir) * (m + 0.5 * dir) + s * s);
                worst_coef = std::max(worst_coef, std::abs(std::abs(lr.coefficient) - want));
            }
    // enveloping identity L- L+ = C2 + L0(L0 + 1) on generic chart germs
    FirstOrderOperator l0 = so21_l0(), lp = so21_lplus(), lm = so21_lminus();
    for (double a : {0.3, -0.7})
        for (double b : {0.5, 1.1}) {
            WaveFunction psi = [a, b](const Eigen::VectorXd& x) {
                Jet2 chi = Jet2::variable(2, 0, x(0)), th = Jet2::variable(2, 1, x(1));
                return exp(a * chi + cplx(0.2, b) * th);
            };
            Eigen::VectorXd x(2);
            x << 0.9, 0.4;
            Jet2 j = psi(x);
            cplx lhs = apply_pair(lm, lp, j, x);
            cplx rhs = so21_casimir_apply(psi, x) + apply_pair(l0, l0, j, x) +
                       apply(l0, j, x).value;
            worst_env = std::max(worst_env, std::abs(lhs - rhs) / std::abs(j.value));
        }
    report(7, "ladder coefficients", worst_coef < 1e-5 && worst_env < 1e-10,
           fmt("coef", worst_coef) + " " + fmt("enveloping", worst_env), t.seconds());
}

void criterion_mehler_fock() {
    WallTimer t;
    MehlerFockTransform tr;
    auto f1 = [](double u) { return std::exp(-(u - 1.0)); };
    auto f2 = [](double u) { return std::exp(-2.0 * (u - 1.0)) / (1.0 + u); };
    auto f3 = [](double u) { return (u - 1.0) * std::exp(-(u - 1.0)); };
    double worst_rt = 0.0, worst_pl = 0.0;
    for (auto f : {std::function<double(double)>(f1), std::function<double(double)>(f2),
                   std::function<double(double)>(f3)}) {
        worst_rt = std::max({worst_rt, tr.roundtrip_u_error(f),
                             tr.roundtrip_s_error(tr.forward(f))});
        worst_pl = std::max(worst_pl, std::abs(tr.plancherel_ratio(f) - 1.0));
    }
    report(8, "Mehler-Fock transform", worst_rt < 1e-3 && worst_pl < 0.01,
           fmt("roundtrip", worst_rt) + " " + fmt("plancherel_gap", worst_pl), t.seconds());
}

void criterion_sekiguchi() {
    WallTimer t;
    // Delta_2 against the explicit second-order radial operator at d = 2
    SekiguchiFamily fam2(2);
    RadialFn f2 = [](const Eigen::VectorXd& x) {
        return cplx(std::exp(0.3 * x(0) - 0.2 * x(1) + 0.05 * x(0) * x(1)), 0.0);
    };
    double worst_d2 = 0.0;
    for (double tau : {0.9, 1.7}) {
        Eigen::VectorXd x(2);
        x << 0.3 + tau / 2.0, 0.3 - tau / 2.0;
        cplx d1d2 = fd::mixed(f2, x, {0, 1}, 1e-3);
        cplx dd = fd::d1(f2, x, 0, 1e-3) - fd::d1(f2, x, 1, 1e-3);
        double cth = std::cosh(tau) / std::sinh(tau);
        cplx expect = d1d2 - 0.5 * cth * dd - 0.25 * f2(x);
        worst_d2 = std::max(worst_d2, std::abs(fam2.apply(2, f2, x) - expect));
    }
    // commutativity at d = 3 with Richardson extrapolation over the FD step
    RadialFn f3 = [](const Eigen::VectorXd& x) {
        double e2 = x(0) * x(1) + x(0) * x(2) + x(1) * x(2);
        double e3 = x(0) * x(1) * x(2);
        return cplx(std::exp(0.2 * e2 + 0.1 * e3), 0.0);
    };
    Eigen::VectorXd x3(3);
    x3 << 1.0, 0.15, -1.15;
    auto comm = [&](double h) {
        SekiguchiFamily fam(3, h);
        RadialFn a = [&](const Eigen::VectorXd& y) { return fam.apply(2, f3, y); };
        RadialFn b = [&](const Eigen::VectorXd& y) { return fam.apply(3, f3, y); };
        return fam.apply(3, a, x3) - fam.apply(2, b, x3);
    };
    double comm_resid = std::abs((16.0 * comm(1e-2) - comm(2e-2)) / 15.0);
    // Harish-Chandra isomorphism on exponentials
    double worst_hc = 0.0;
    HaarSampler rng(34, 7);
    for (int d : {2, 3})
        for (int k = 0; k < 5; ++k) {
            Eigen::VectorXd mu(d), tt(d);
            for (int i = 0; i < d; ++i) {
                mu(i) = rng.gaussian_scalar();
                tt(i) = 0.5 * rng.gaussian_scalar();
            }
            mu.array() -= mu.mean();
            worst_hc = std::max(worst_hc, hc_isomorphism_residual(d, mu, tt));
        }
    report(9, "Sekiguchi family", worst_d2 < 1e-6 && comm_resid < 1e-4 && worst_hc < 1e-8,
           fmt("d2_match", worst_d2) + " " + fmt("commutator", comm_resid) + " " +
               fmt("hc", worst_hc),
           t.seconds());
}

void criterion_kinetic() {
    WallTimer t;
    HaarSampler rng(35, 7);
    double worst_d2 = 0.0;
    const BasisLabelCompact labels[] = {{0.8, 1.0, 0}, {-0.4, 0.5, 1}, {1.3, 2.0, -2}};
    for (const auto& lab : labels) {
        WaveFunction psi = basis_compact(lab);
        double eig = 2.0 * (0.25 + lab.s * lab.s);
        for (int k = 0; k < 5; ++k) {
            Eigen::VectorXd x = away_from_axis(rng);
            MetricPoint q = MetricPoint::from_coords(x, 2);
            cplx val = psi(x).value;
            worst_d2 = std::max(worst_d2,
                                std::abs(kinetic_apply(2, psi, q) - eig * val) / std::abs(val));
        }
    }
    double worst_d3 = 0.0;
    for (int k = 0; k < 5; ++k) {
        Eigen::VectorXcd alpha(sym_dim(3));
        for (int i = 0; i < alpha.size(); ++i)
            alpha(i) = cplx(0.3 * rng.gaussian_scalar(), 0.3 * rng.gaussian_scalar());
        WaveFunction psi = test_wavefunction(3, alpha, cplx(0.2 * rng.gaussian_scalar(), 0.1));
        MetricPoint q = random_spd(rng, 3);
        Eigen::VectorXd x = q.coords();
        Jet2 j = psi(x);
        FirstOrderOperator tt = trace_T(3);
        cplx want = 2.0 * casimir2_apply(3, psi, q) - apply_pair(tt, tt, j, x) / 6.0;
        cplx got = kinetic_apply(3, psi, q);
        worst_d3 = std::max(worst_d3, std::abs(got - want) / std::abs(j.value));
    }
    report(10, "kinetic identity", worst_d2 < 1e-6 && worst_d3 < 1e-9,
           fmt("d2", worst_d2) + " " + fmt("d3", worst_d3), t.seconds());
}

}  // namespace

int main() {
    criterion_algebra();
    criterion_eigenfunctions();
    criterion_decompositions();
    criterion_spherical_properties();
    criterion_conical_crosscheck();
    criterion_casimir_spectrum();
    criterion_ladder();
    criterion_mehler_fock();
    criterion_sekiguchi();
    criterion_kinetic();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
