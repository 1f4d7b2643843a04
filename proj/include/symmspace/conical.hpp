#pragma once

// Conical (Mehler) functions P^m_{-1/2+is}(u) on u in (1, inf) for integer
// order m: Frobenius series near u = 1, ODE marching in the geodesic
// variable chi = acosh(u), and the classical Mehler-Dirichlet integral as an
// independent oracle for m = 0.
//
// Conventions: P^m denotes the associated Legendre function of the first
// kind on the cut (1, inf) (not the Ferrers function), real valued for real
// s. For m >= 0,
//   d/dchi P^m = m coth(chi) P^m + P^{m+1}
//   (d/dchi + m coth(chi)) P^m = -((m-1/2)^2 + s^2) P^{m-1}
// and P^{-m} = (-1)^m P^m / prod_{k<m} ((k+1/2)^2 + s^2).

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace symmspace {

// prod_{k=0}^{m-1} ((k+1/2)^2 + s^2); ratio of adjacent-order
// normalizations, also |Gamma(nu+m+1)/Gamma(nu-m+1)| on the critical line.
inline double conical_order_product(double s, int m) {
    if (m == 0) return 1.0;
    if (m < 0) return 1.0 / conical_order_product(s, -m);
    double p = 1.0;
    for (int k = 0; k < m; ++k) p *= (k + 0.5) * (k + 0.5) + s * s;
    return p;
}

namespace conical_detail {

// Value and chi-derivative of P^m_{-1/2+is}(cosh chi) by the series at
// u = 1, usable for chi up to about 0.5. m >= 0.
inline std::array<double, 2> series(double s, int m, double chi) {
    const double u = std::cosh(chi);
    const double w = (u - 1.0) / 2.0;
    // g_k = d^k P_nu / du^k as series in w; we need g_m and g_{m+1}
    auto g = [&](int k) {
        double sum = 0.0, term_scale = std::pow(0.5, k);
        double aj = 1.0;       // a_j = prod_{l<j}((l+1/2)^2+s^2) / (j!)^2
        double fall = 1.0;     // j!/(j-k)! at j = k
        for (int l = 1; l <= k; ++l) fall *= l;
        // start at j = k
        for (int l = 0; l < k; ++l) aj *= ((l + 0.5) * (l + 0.5) + s * s);
        double kfact = 1.0;
        for (int l = 1; l <= k; ++l) kfact *= l;
        aj /= kfact * kfact;
        double wp = 1.0;
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        double maxterm = 0.0;
        for (int j = k; j < k + 400; ++j) {
            double term = sign * aj * fall * term_scale * wp;
            sum += term;
            maxterm = std::max(maxterm, std::abs(term));
            if (std::abs(term) < 1e-18 * std::max(1.0, maxterm) && j > k + 3) break;
            // advance j -> j+1
            aj *= ((j + 0.5) * (j + 0.5) + s * s) / ((j + 1.0) * (j + 1.0));
            fall *= (j + 1.0) / (j + 1.0 - k);
            wp *= w;
            sign = -sign;
        }
        return sum;
    };
    const double sh = std::sinh(chi);
    const double gm = g(m), gm1 = g(m + 1);
    const double pm = std::pow(sh, m) * gm;
    const double pm1 = std::pow(sh, m + 1) * gm1;
    // d/dchi P^m = m coth chi P^m + P^{m+1}; at m = 0 the coth term is absent
    double dp = (m > 0 ? m * (std::cosh(chi) / sh) * pm : 0.0) + pm1;
    return {pm, dp};
}

}  // namespace conical_detail

// Values and chi-derivatives of P^m_{-1/2+is}(cosh chi) at an ascending list
// of chi > 0 targets, one ODE sweep. m >= 0.
inline std::vector<std::array<double, 2>> conical_march(double s, int m,
                                                        const std::vector<double>& chi_sorted) {
    if (m < 0) throw std::invalid_argument("conical_march: m must be >= 0");
    std::vector<std::array<double, 2>> out(chi_sorted.size());
    if (chi_sorted.empty()) return out;
    const double chi_series_max = 0.35;
    size_t first_ode = 0;
    while (first_ode < chi_sorted.size() && chi_sorted[first_ode] <= chi_series_max) {
        if (chi_sorted[first_ode] <= 0.0)
            throw std::invalid_argument("conical_march: chi must be positive");
        out[first_ode] = conical_detail::series(s, m, chi_sorted[first_ode]);
        ++first_ode;
    }
    if (first_ode == chi_sorted.size()) return out;

    namespace ode = boost::numeric::odeint;
    using state = std::array<double, 2>;
    const double lam = 0.25 + s * s;
    auto rhs = [s, m, lam](const state& y, state& dy, double chi) {
        const double cth = std::cosh(chi) / std::sinh(chi);
        const double sh = std::sinh(chi);
        dy[0] = y[1];
        dy[1] = -cth * y[1] - (lam - double(m) * m / (sh * sh)) * y[0];
    };
    double chi0 = chi_series_max;
    auto y0arr = conical_detail::series(s, m, chi0);
    state y{y0arr[0], y0arr[1]};
    auto stepper = ode::make_controlled<ode::runge_kutta_fehlberg78<state>>(1e-13, 1e-13);
    for (size_t k = first_ode; k < chi_sorted.size(); ++k) {
        double target = chi_sorted[k];
        ode::integrate_adaptive(stepper, rhs, y, chi0, target, (target - chi0) / 64.0 + 1e-12);
        chi0 = target;
        out[k] = {y[0], y[1]};
    }
    return out;
}

// Single value P^m_{-1/2+is}(u), u >= 1, any integer m.
inline double conical_p(double s, int m, double u) {
    if (u < 1.0) throw std::invalid_argument("conical_p: u < 1");
    if (m < 0) {
        int ma = -m;
        double sign = (ma % 2 == 0) ? 1.0 : -1.0;
        return sign * conical_p(s, ma, u) / conical_order_product(s, ma);
    }
    if (u == 1.0) return m == 0 ? 1.0 : 0.0;
    double chi = std::acosh(u);
    return conical_march(s, m, {chi})[0][0];
}

// Value and u-derivative, any integer m >= 0.
inline std::array<double, 2> conical_pair_u(double s, int m, double u) {
    double chi = std::acosh(u);
    auto v = conical_march(s, m, {chi})[0];
    return {v[0], v[1] / std::sinh(chi)};
}

// Independent m = 0 oracle: Mehler-Dirichlet representation
//   P_{-1/2+is}(cosh chi) = (2/pi) int_0^chi cos(s t) / sqrt(2 cosh chi - 2 cosh t) dt
// with the endpoint square-root removed by t = chi - w^2.
inline double mehler_dirichlet(double s, double chi, int panels = 16, int nodes = 24) {
    // Gauss-Legendre nodes on [-1,1]
    static const double gl_x[] = {
        -0.995556969790498, -0.976663921459518, -0.942974571228974, -0.894991997878275,
        -0.833442628760834, -0.759259263037358, -0.673566368473468, -0.577662930241223,
        -0.473002731445715, -0.361172305809388, -0.243866883720988, -0.122864692610710,
        0.0,                0.122864692610710,  0.243866883720988,  0.361172305809388,
        0.473002731445715,  0.577662930241223,  0.673566368473468,  0.759259263037358,
        0.833442628760834,  0.894991997878275,  0.942974571228974,  0.976663921459518,
        0.995556969790498};
    static const double gl_w[] = {
        0.011393798501026, 0.026354986615032, 0.040939156701306, 0.054904695975835,
        0.068038333812357, 0.080140700335001, 0.091028261982964, 0.100535949067051,
        0.108519624474264, 0.114858259145712, 0.119455763535785, 0.122242442990310,
        0.123176053726715, 0.122242442990310, 0.119455763535785, 0.114858259145712,
        0.108519624474264, 0.100535949067051, 0.091028261982964, 0.080140700335001,
        0.068038333812357, 0.054904695975835, 0.040939156701306, 0.026354986615032,
        0.011393798501026};
    (void)nodes;
    const double wmax = std::sqrt(chi);
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        double a = wmax * p / panels, b = wmax * (p + 1) / panels;
        double mid = (a + b) / 2.0, half = (b - a) / 2.0;
        for (int k = 0; k < 25; ++k) {
            double w = mid + half * gl_x[k];
            double t = chi - w * w;
            double den = 2.0 * (std::cosh(chi) - std::cosh(t));
            double integrand;
            if (den <= 0.0 || w < 1e-12) {
                integrand = 2.0 / std::sqrt(2.0 * std::sinh(chi));
            } else {
                integrand = std::cos(s * t) * 2.0 * w / std::sqrt(den);
            }
            acc += half * gl_w[k] * integrand;
        }
    }
    return (2.0 / M_PI) * acc;
}

// Residual of the Legendre ODE in the u variable at a point, given value and
// u-derivative from any evaluation path (second derivative from one-sided
// finite differences of the pair would defeat the purpose; instead the
// caller provides three nearby pairs and we difference the derivative).
inline double legendre_ode_residual(double s, int m, double u, double p, double dp_du,
                                    double d2p_du2) {
    double lam = 0.25 + s * s;  // nu(nu+1) = -lam
    return (1.0 - u * u) * d2p_du2 - 2.0 * u * dp_du +
           (-lam - double(m) * m / (1.0 - u * u)) * p;
}

}  // namespace symmspace
