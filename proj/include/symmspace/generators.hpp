#pragma once

// The quantum gl(d,R) generators realized as first-order operators on
// wavefunctions of the metric, plus the quadratic (kinetic/Casimir)
// compositions evaluated exactly through jets.

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <vector>

#include "symmspace/first_order.hpp"
#include "symmspace/haar.hpp"
#include "symmspace/metric.hpp"

namespace symmspace {

inline constexpr cplx I_UNIT{0.0, 1.0};

// Multiplication by the chart coordinate q_ab.
inline FirstOrderOperator position_op(int a, int b, int d) {
    const int n = sym_dim(d);
    const int idx = sym_index(a, b, d);
    return multiplication_op(n, [n, idx](const Eigen::VectorXd& x) {
        return Jet2::variable(n, idx, x(idx));
    });
}

// p^{ab} = -i (1 + delta_ab) d/dq_ab in the independent-entry chart. The
// factor 2 on the diagonal reproduces the canonical commutator
// [p^{ab}, q_cd] = -i (delta_ac delta_bd + delta_ad delta_bc).
inline FirstOrderOperator momentum(int a, int b, int d) {
    if (a < 0 || a >= d || b < 0 || b >= d) throw std::out_of_range("momentum: index");
    const int n = sym_dim(d);
    const int idx = sym_index(a, b, d);
    const cplx coef = -I_UNIT * (a == b ? 2.0 : 1.0);
    FirstOrderOperator r;
    r.n = n;
    r.coeffs = [n, idx, coef](const Eigen::VectorXd&) {
        OperatorCoeffs c;
        c.scalar = Jet2(n);
        c.vec.assign(n, Jet2(n));
        c.vec[idx] = Jet2::constant(n, coef);
        return c;
    };
    return r;
}

// T_a^b = q_ac p^{cb} - i (d+1)/2 delta_ab  (hbar = 1).
inline FirstOrderOperator generator_T(int a, int b, int d) {
    if (a < 0 || a >= d || b < 0 || b >= d) throw std::out_of_range("generator_T: index");
    const int n = sym_dim(d);
    FirstOrderOperator r;
    r.n = n;
    r.coeffs = [a, b, d, n](const Eigen::VectorXd& x) {
        OperatorCoeffs co;
        co.scalar = Jet2::constant(n, a == b ? -I_UNIT * ((d + 1) / 2.0) : cplx(0.0));
        co.vec.assign(n, Jet2(n));
        for (int c = 0; c < d; ++c) {
            int deriv = sym_index(c, b, d);
            int qac = sym_index(a, c, d);
            cplx w = -I_UNIT * (c == b ? 2.0 : 1.0);
            co.vec[deriv] = co.vec[deriv] + w * Jet2::variable(n, qac, x(qac));
        }
        return co;
    };
    return r;
}

// Trace element TT = sum_a T_a^a; commutes with all generators.
inline FirstOrderOperator trace_T(int d) {
    FirstOrderOperator r = generator_T(0, 0, d);
    for (int a = 1; a < d; ++a) r = r + generator_T(a, a, d);
    return r;
}

// Traceless combination carrying sl(d,R).
inline FirstOrderOperator traceless_T(int a, int b, int d) {
    FirstOrderOperator r = generator_T(a, b, d);
    if (a == b) r = r - cplx(1.0 / d) * trace_T(d);
    return r;
}

// --- built-in analytic wavefunctions ------------------------------------

// psi(q) = det(q)^r, exact germs.
inline WaveFunction det_power(int d, cplx r) {
    return [d, r](const Eigen::VectorXd& x) {
        MetricPoint q = MetricPoint::from_coords(x, d);
        return pow(det_jet(q.matrix_jets()), r);
    };
}

// Singlet psi_0 = q^{-(d+1)/4}, annihilated by every generator.
inline WaveFunction singlet(int d) { return det_power(d, cplx(-(d + 1) / 4.0)); }

// TT eigenfunction psi_r = q^{-(d+1)/4 + i r/(2d)} with TT psi_r = r psi_r.
inline WaveFunction scaling_state(int d, double r) {
    return det_power(d, cplx(-(d + 1) / 4.0, r / (2.0 * d)));
}

// Generic smooth test germ exp(sum alpha_I x_I) * det^rho.
inline WaveFunction test_wavefunction(int d, const Eigen::VectorXcd& alpha, cplx rho) {
    return [d, alpha, rho](const Eigen::VectorXd& x) {
        const int n = sym_dim(d);
        Jet2 lin(n);
        for (int i = 0; i < n; ++i) lin = lin + alpha(i) * Jet2::variable(n, i, x(i));
        return exp(lin) * pow(det_jet(MetricPoint::from_coords(x, d).matrix_jets()), rho);
    };
}

// --- quadratic operators -------------------------------------------------

// Value of the kinetic part T_a^b T_b^a - (1/2) TT^2 applied to psi at q.
inline cplx kinetic_apply(int d, const WaveFunction& psi, const MetricPoint& q) {
    Eigen::VectorXd x = q.coords();
    Jet2 j = psi(x);
    cplx acc = 0.0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            acc += apply_pair(generator_T(a, b, d), generator_T(b, a, d), j, x);
    FirstOrderOperator tt = trace_T(d);
    acc -= 0.5 * apply_pair(tt, tt, j, x);
    return acc;
}

// Value of C_2 = (1/2) calT_a^b calT_b^a applied to psi at q.
inline cplx casimir2_apply(int d, const WaveFunction& psi, const MetricPoint& q) {
    Eigen::VectorXd x = q.coords();
    Jet2 j = psi(x);
    cplx acc = 0.0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            acc += apply_pair(traceless_T(a, b, d), traceless_T(b, a, d), j, x);
    return 0.5 * acc;
}

// --- algebra verification ------------------------------------------------

struct AlgebraReport {
    int dim = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    double max_residual_lie = 0.0;        // [T,T] relations
    double max_residual_covariance = 0.0; // [T, q_cd] transformation law
    double max_residual_scaling = 0.0;    // [calT, q^r] = 0 and [TT, q^r]
    bool ok(double tol) const {
        return max_residual_lie < tol && max_residual_covariance < tol &&
               max_residual_scaling < tol;
    }
};

namespace detail {

inline double jet1_norm(const Jet1& a) {
    double m = std::abs(a.value);
    for (int i = 0; i < a.grad.size(); ++i) m = std::max(m, std::abs(a.grad(i)));
    return m;
}

inline double jet1_dist(const Jet1& a, const Jet1& b) {
    double m = std::abs(a.value - b.value);
    for (int i = 0; i < a.grad.size(); ++i) m = std::max(m, std::abs(a.grad(i) - b.grad(i)));
    return m;
}

}  // namespace detail

// Residual of (A - B) psi at x, relative to the larger of the two sides.
inline double operator_residual(const FirstOrderOperator& a, const FirstOrderOperator& b,
                                const Jet2& psi, const Eigen::VectorXd& x) {
    Jet1 fa = apply(a, psi, x), fb = apply(b, psi, x);
    double scale = std::max({detail::jet1_norm(fa), detail::jet1_norm(fb), 1.0});
    return detail::jet1_dist(fa, fb) / scale;
}

inline AlgebraReport verify_algebra(int d, int trials, std::uint64_t seed = 12345) {
    AlgebraReport rep;
    rep.dim = d;
    rep.trials = trials;
    rep.seed = seed;
    HaarSampler rng(seed, 7);
    const int n = sym_dim(d);

    std::vector<std::vector<FirstOrderOperator>> T(d, std::vector<FirstOrderOperator>(d));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) T[a][b] = generator_T(a, b, d);

    for (int t = 0; t < trials; ++t) {
        MetricPoint q = random_spd(rng, d);
        Eigen::VectorXd x = q.coords();
        Eigen::VectorXcd alpha(n);
        for (int i = 0; i < n; ++i)
            alpha(i) = cplx(0.3 * rng.gaussian_scalar(), 0.3 * rng.gaussian_scalar());
        cplx rho(0.2 * rng.gaussian_scalar(), 0.2 * rng.gaussian_scalar());
        Jet2 psi = test_wavefunction(d, alpha, rho)(x);

        // (i) gl(d,R) relations
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c)
                    for (int e = 0; e < d; ++e) {
                        FirstOrderOperator lhs = commutator(T[a][b], T[c][e]);
                        FirstOrderOperator rhs =
                            (a == e ? I_UNIT * T[c][b] : cplx(0.0) * T[c][b]) -
                            (b == c ? I_UNIT * T[a][e] : cplx(0.0) * T[a][e]);
                        rep.max_residual_lie =
                            std::max(rep.max_residual_lie, operator_residual(lhs, rhs, psi, x));
                    }

        // (ii) covariant transformation of q_cd
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c)
                    for (int e = c; e < d; ++e) {
                        FirstOrderOperator lhs = commutator(T[a][b], position_op(c, e, d));
                        FirstOrderOperator rhs =
                            (b == c ? -I_UNIT * position_op(a, e, d)
                                    : cplx(0.0) * position_op(a, e, d)) +
                            (b == e ? -I_UNIT * position_op(c, a, d)
                                    : cplx(0.0) * position_op(c, a, d));
                        rep.max_residual_covariance = std::max(
                            rep.max_residual_covariance, operator_residual(lhs, rhs, psi, x));
                    }

        // (iii) scaling laws for q^r
        cplx r(0.4 * rng.gaussian_scalar(), 0.4 * rng.gaussian_scalar());
        FirstOrderOperator qr = multiplication_op(n, [d, r](const Eigen::VectorXd& xx) {
            return pow(det_jet(MetricPoint::from_coords(xx, d).matrix_jets()), r);
        });
        FirstOrderOperator zero = cplx(0.0) * qr;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                FirstOrderOperator lhs = commutator(traceless_T(a, b, d), qr);
                rep.max_residual_scaling =
                    std::max(rep.max_residual_scaling, operator_residual(lhs, zero, psi, x));
            }
        FirstOrderOperator lhs_tt = commutator(trace_T(d), qr);
        FirstOrderOperator rhs_tt = (-2.0 * d * r * I_UNIT) * qr;
        rep.max_residual_scaling =
            std::max(rep.max_residual_scaling, operator_residual(lhs_tt, rhs_tt, psi, x));
    }
    return rep;
}

// --- d = 1 dilatation toy ------------------------------------------------

// phi_r(q) = q^{ir} / sqrt(2 pi q) on the half line, as a 1-variable germ.
inline WaveFunction d1_phi(double r) {
    return [r](const Eigen::VectorXd& x) {
        Jet2 q = Jet2::variable(1, 0, x(0));
        return pow(q, cplx(-0.5, r)) * cplx(1.0 / std::sqrt(2.0 * M_PI));
    };
}

// t_hat = -i (q d/dq + 1/2), the standard-CCR dilatation of the d = 1 toy.
inline FirstOrderOperator d1_dilatation() {
    FirstOrderOperator r;
    r.n = 1;
    r.coeffs = [](const Eigen::VectorXd& x) {
        OperatorCoeffs c;
        c.scalar = Jet2::constant(1, cplx(0.0, -0.5));
        c.vec.assign(1, -I_UNIT * Jet2::variable(1, 0, x(0)));
        return c;
    };
    return r;
}

// Window-regularized overlap of phi_r, phi_s: a Gaussian window of width
// sigma in t = ln q turns the delta-normalization into a Gaussian of width
// ~1/sigma in (r - s). Normalized so that r = s gives exactly 1.
inline double d1_overlap(double r, double s, double sigma, int nodes = 4001) {
    double tmax = 8.0 * sigma;
    double h = 2.0 * tmax / (nodes - 1);
    cplx acc = 0.0;
    for (int k = 0; k < nodes; ++k) {
        double t = -tmax + k * h;
        double w = (k == 0 || k == nodes - 1) ? 0.5 : 1.0;
        acc += w * std::exp(cplx(0.0, -(r - s) * t)) * std::exp(-t * t / (2.0 * sigma * sigma));
    }
    double norm = 0.0;
    for (int k = 0; k < nodes; ++k) {
        double t = -tmax + k * h;
        double w = (k == 0 || k == nodes - 1) ? 0.5 : 1.0;
        norm += w * std::exp(-t * t / (2.0 * sigma * sigma));
    }
    return std::abs(acc) / norm;
}

}  // namespace symmspace
