#pragma once

// so(2,1) generators on the unit hyperboloid u^2 - v^2 - w^2 = 1 in the
// geodesic chart u = cosh chi, v = sinh chi cos theta, w = sinh chi sin theta:
//   L1 = -i (cos th d_chi - coth chi sin th d_th)
//   L2 = -i (sin th d_chi + coth chi cos th d_th)
//   L0 = -i d_th
// with [L0,L1] = iL2, [L0,L2] = -iL1, [L1,L2] = -iL0 and ladders
// L+- = L1 +- i L2. Chart coordinates are x = (chi, theta).

#include <cmath>
#include <stdexcept>

#include "symmspace/first_order.hpp"
#include "symmspace/generators.hpp"

namespace symmspace {

inline Jet2 jet_sin(const Jet2& a) {
    return lift(std::sin(a.value), std::cos(a.value), -std::sin(a.value), a);
}

inline Jet2 jet_cos(const Jet2& a) {
    return lift(std::cos(a.value), -std::sin(a.value), -std::cos(a.value), a);
}

inline Jet2 jet_coth(const Jet2& a) {
    cplx c = std::cosh(a.value) / std::sinh(a.value);
    // coth' = 1 - coth^2, coth'' = 2 coth^3 - 2 coth
    return lift(c, 1.0 - c * c, 2.0 * c * c * c - 2.0 * c, a);
}

namespace so21_detail {

inline void check_chi(double chi) {
    if (chi < 1e-8) throw std::domain_error("so21: coth singularity at chi = 0");
}

}  // namespace so21_detail

inline FirstOrderOperator so21_l0() {
    FirstOrderOperator r;
    r.n = 2;
    r.coeffs = [](const Eigen::VectorXd& x) {
        so21_detail::check_chi(x(0));
        OperatorCoeffs c;
        c.scalar = Jet2(2);
        c.vec.assign(2, Jet2(2));
        c.vec[1] = Jet2::constant(2, -I_UNIT);
        return c;
    };
    return r;
}

inline FirstOrderOperator so21_l1() {
    FirstOrderOperator r;
    r.n = 2;
    r.coeffs = [](const Eigen::VectorXd& x) {
        so21_detail::check_chi(x(0));
        Jet2 chi = Jet2::variable(2, 0, x(0)), th = Jet2::variable(2, 1, x(1));
        OperatorCoeffs c;
        c.scalar = Jet2(2);
        c.vec.resize(2);
        c.vec[0] = -I_UNIT * jet_cos(th);
        c.vec[1] = I_UNIT * (jet_coth(chi) * jet_sin(th));
        return c;
    };
    return r;
}

inline FirstOrderOperator so21_l2() {
    FirstOrderOperator r;
    r.n = 2;
    r.coeffs = [](const Eigen::VectorXd& x) {
        so21_detail::check_chi(x(0));
        Jet2 chi = Jet2::variable(2, 0, x(0)), th = Jet2::variable(2, 1, x(1));
        OperatorCoeffs c;
        c.scalar = Jet2(2);
        c.vec.resize(2);
        c.vec[0] = -I_UNIT * jet_sin(th);
        c.vec[1] = -I_UNIT * (jet_coth(chi) * jet_cos(th));
        return c;
    };
    return r;
}

inline FirstOrderOperator so21_lplus() { return so21_l1() + I_UNIT * so21_l2(); }
inline FirstOrderOperator so21_lminus() { return so21_l1() - I_UNIT * so21_l2(); }

struct SO21Generators {
    FirstOrderOperator L0, L1, L2, Lplus, Lminus;
};

inline SO21Generators so21_generators() {
    return SO21Generators{so21_l0(), so21_l1(), so21_l2(), so21_lplus(), so21_lminus()};
}

// e^{im theta} f(chi) as a chart germ; f supplies (value, f', f'') at chi.
inline WaveFunction chart_state(int m, std::function<std::array<double, 3>(double)> f) {
    return [m, f = std::move(f)](const Eigen::VectorXd& x) {
        Jet2 chi = Jet2::variable(2, 0, x(0)), th = Jet2::variable(2, 1, x(1));
        auto v = f(x(0));
        return exp((I_UNIT * double(m)) * th) * lift(v[0], v[1], v[2], chi);
    };
}

// C2 = L1^2 + L2^2 - L0^2 applied to a chart germ.
inline cplx so21_casimir_apply(const WaveFunction& psi, const Eigen::VectorXd& x) {
    Jet2 j = psi(x);
    FirstOrderOperator l0 = so21_l0(), l1 = so21_l1(), l2 = so21_l2();
    return apply_pair(l1, l1, j, x) + apply_pair(l2, l2, j, x) - apply_pair(l0, l0, j, x);
}

// --- bridge to the metric chart ------------------------------------------

// Jets of (chi, theta) over the d = 2 metric chart at q, with
// cosh chi = (q11 + q22) / (2 sqrt(det q)), theta = atan2(2 q12, q11 - q22).
struct HyperboloidJets {
    Jet2 chi;
    Jet2 theta;
    Jet2 detq;
};

namespace so21_detail {

// componentwise imaginary part; valid for R-linear post-maps of germs with
// real chart coordinates
inline Jet2 jet_imag(const Jet2& a) {
    Jet2 r(a.vars());
    r.value = a.value.imag();
    for (int i = 0; i < a.vars(); ++i) r.grad(i) = a.grad(i).imag();
    for (int i = 0; i < a.vars(); ++i)
        for (int j = 0; j < a.vars(); ++j) r.hess(i, j) = a.hess(i, j).imag();
    return r;
}

}  // namespace so21_detail

inline HyperboloidJets hyperboloid_jets(const MetricPoint& q) {
    if (q.dim() != 2) throw std::invalid_argument("hyperboloid_jets: d = 2 only");
    auto mj = q.matrix_jets();
    Jet2 q11 = mj[0][0], q12 = mj[0][1], q22 = mj[1][1];
    Jet2 detj = det_jet(mj);
    Jet2 u = (0.5 * (q11 + q22)) / sqrt(detj);
    cplx uv = u.value;
    if (std::abs(uv - 1.0) < 1e-12)
        throw std::domain_error("hyperboloid_jets: chi = 0 chart boundary");
    // acosh lift
    cplx du = 1.0 / std::sqrt(uv * uv - 1.0);
    Jet2 chi = lift(std::acosh(uv.real()), du, -uv * du * du * du, u);
    Jet2 z = 0.5 * (q11 - q22) + I_UNIT * q12;
    Jet2 theta = so21_detail::jet_imag(log(z));
    return HyperboloidJets{chi, theta, detj};
}

}  // namespace symmspace
