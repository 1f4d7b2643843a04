#pragma once

// The two explicit GL(2,R) bases. Compact basis psi_{r,s,m} diagonalizes
// (TT, L0, C2):
//   psi = N_m q^{-3/4 + ir/4} e^{im theta} P^m_{-1/2+is}((q11+q22)/(2 sqrt q))
// with e^{i theta} = (V + iW)/|V + iW|, V = (q11-q22)/2, W = q12, and
// N_m = prod_{k<m}((k+1/2)^2+s^2)^{-1/2} chosen so that the ladder
// coefficients come out as sqrt((m +- 1/2)^2 + s^2). Noncompact basis
// diagonalizes (TT, calT, C2):
//   psi = q^{-3/4 + ir/4} (q11/q22)^{it/2} f(q12/sqrt q)
// with f the even solution of -(1+x^2)f'' - 2xf' + (-lambda + t^2/(1+x^2))f = 0,
// f(0) = 1, f'(0) = 0 (a Legendre function of imaginary argument and order).

#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "symmspace/conical.hpp"
#include "symmspace/generators.hpp"
#include "symmspace/so21.hpp"

namespace symmspace {

struct BasisLabelCompact {
    double r;
    double s;
    int m;
};

struct BasisLabelNoncompact {
    double r;
    double s;
    double t;
};

// N_m for the ladder-matched normalization.
inline double compact_norm_constant(double s, int m) {
    return 1.0 / std::sqrt(conical_order_product(s, m));
}

// Germ of P^m_{-1/2+is} over a u-germ; second derivative closed by the
// Legendre equation, so the jet is exact to the accuracy of (P, P').
inline Jet2 conical_jet(double s, int m, const Jet2& u) {
    const double uu = u.value.real();
    const int ma = std::abs(m);
    auto pv = conical_pair_u(s, ma, uu);
    const double lam = 0.25 + s * s;
    const double p2 =
        (2.0 * uu * pv[1] + (lam + double(ma) * ma / (1.0 - uu * uu)) * pv[0]) /
        (1.0 - uu * uu);
    Jet2 j = lift(pv[0], pv[1], p2, u);
    if (m < 0) {
        double fac = ((ma % 2 == 0) ? 1.0 : -1.0) / conical_order_product(s, ma);
        j = fac * j;
    }
    return j;
}

inline WaveFunction basis_compact(const BasisLabelCompact& lab, bool normalized = true) {
    return [lab, normalized](const Eigen::VectorXd& x) {
        MetricPoint q = MetricPoint::from_coords(x, 2);
        auto mj = q.matrix_jets();
        Jet2 q11 = mj[0][0], q12 = mj[0][1], q22 = mj[1][1];
        Jet2 detj = det_jet(mj);
        Jet2 u = (0.5 * (q11 + q22)) / sqrt(detj);
        Jet2 pref = pow(detj, cplx(-0.75, lab.r / 4.0));
        Jet2 out = pref * conical_jet(lab.s, lab.m, u);
        if (lab.m != 0) {
            Jet2 v = 0.5 * (q11 - q22), w = q12;
            Jet2 rho2 = v * v + w * w;
            if (std::abs(rho2.value) < 1e-20)
                throw std::domain_error("basis_compact: phase undefined at chi = 0");
            out = out * ipow((v + I_UNIT * w) / sqrt(rho2), lab.m);
        }
        if (normalized) out = compact_norm_constant(lab.s, lab.m) * out;
        return out;
    };
}

// The same state restricted to the unit hyperboloid in the (chi, theta)
// chart: N_m e^{im theta} P^m(cosh chi).
inline WaveFunction compact_chart_state(double s, int m, bool normalized = true) {
    double scale = normalized ? compact_norm_constant(s, m) : 1.0;
    int ma = std::abs(m);
    double extra = 1.0;
    if (m < 0) extra = ((ma % 2 == 0) ? 1.0 : -1.0) / conical_order_product(s, ma);
    return chart_state(m, [s, ma, scale, extra](double chi) {
        auto pv = conical_march(s, ma, {chi})[0];
        double cth = std::cosh(chi) / std::sinh(chi);
        double sh = std::sinh(chi);
        double lam = 0.25 + s * s;
        double p2 = -cth * pv[1] - (lam - double(ma) * ma / (sh * sh)) * pv[0];
        double c = scale * extra;
        return std::array<double, 3>{c * pv[0], c * pv[1], c * p2};
    });
}

struct LadderResult {
    BasisLabelCompact to;
    cplx coefficient;
    double fit_residual;
};

// Applies L+- through jets and fits the proportionality constant against the
// m +- 1 state over deterministic sample points on the hyperboloid.
inline LadderResult ladder_apply(const BasisLabelCompact& lab, int direction) {
    if (direction != 1 && direction != -1)
        throw std::invalid_argument("ladder_apply: direction must be +-1");
    FirstOrderOperator op = direction > 0 ? so21_lplus() : so21_lminus();
    WaveFunction from = compact_chart_state(lab.s, lab.m);
    WaveFunction to = compact_chart_state(lab.s, lab.m + direction);

    std::vector<Eigen::Vector2d> pts;
    for (int k = 0; k < 12; ++k)
        pts.emplace_back(0.4 + 0.22 * k, 0.3 + 0.5 * k);
    cplx num = 0.0;
    double den = 0.0;
    std::vector<std::pair<cplx, cplx>> rows;
    for (const auto& p : pts) {
        Eigen::VectorXd x = p;
        cplx a = apply(op, from(x), x).value;
        cplx t = to(x).value;
        num += std::conj(t) * a;
        den += std::norm(t);
        rows.emplace_back(a, t);
    }
    cplx c = num / den;
    double scale = 0.0, resid = 0.0;
    for (const auto& [a, t] : rows) {
        scale = std::max(scale, std::abs(a));
        resid = std::max(resid, std::abs(a - c * t));
    }
    return LadderResult{BasisLabelCompact{lab.r, lab.s, lab.m + direction}, c,
                        resid / std::max(scale, 1e-300)};
}

// (f, f', f'') of the noncompact radial profile at x, marched from 0.
inline std::array<double, 3> noncompact_profile(double s, double t, double x) {
    const double lam = 0.25 + s * s;
    auto f2 = [lam, t](double f, double fp, double xx) {
        return (-2.0 * xx * fp + (-lam + t * t / (1.0 + xx * xx)) * f) / (1.0 + xx * xx);
    };
    const double ax = std::abs(x);
    std::array<double, 2> y{1.0, 0.0};
    if (ax > 1e-14) {
        namespace ode = boost::numeric::odeint;
        using state = std::array<double, 2>;
        auto rhs = [f2](const state& y, state& dy, double xx) {
            dy[0] = y[1];
            dy[1] = f2(y[0], y[1], xx);
        };
        auto stepper =
            ode::make_controlled<ode::runge_kutta_fehlberg78<state>>(1e-13, 1e-13);
        state yy{1.0, 0.0};
        ode::integrate_adaptive(stepper, rhs, yy, 0.0, ax, ax / 64.0);
        y = {yy[0], yy[1]};
    }
    // even profile: f(-x) = f(x)
    double fp = (x < 0.0) ? -y[1] : y[1];
    return {y[0], fp, f2(y[0], fp, x)};
}

inline WaveFunction basis_noncompact(const BasisLabelNoncompact& lab) {
    return [lab](const Eigen::VectorXd& xc) {
        MetricPoint q = MetricPoint::from_coords(xc, 2);
        auto mj = q.matrix_jets();
        Jet2 q11 = mj[0][0], q12 = mj[0][1], q22 = mj[1][1];
        Jet2 detj = det_jet(mj);
        Jet2 xr = q12 / sqrt(detj);
        Jet2 pref = pow(detj, cplx(-0.75, lab.r / 4.0));
        Jet2 ratio = exp(cplx(0.0, lab.t / 2.0) * (log(q11) - log(q22)));
        auto fv = noncompact_profile(lab.s, lab.t, xr.value.real());
        return pref * ratio * lift(fv[0], fv[1], fv[2], xr);
    };
}

// calT = (T_1^1 - T_2^2)/2 on the d = 2 metric chart.
inline FirstOrderOperator noncompact_cartan_op() {
    return cplx(0.5) * (generator_T(0, 0, 2) - generator_T(1, 1, 2));
}

}  // namespace symmspace
