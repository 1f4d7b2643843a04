#pragma once

// First-order differential operators c0(x) + sum_I c^I(x) d/dx_I over an
// n-dimensional real chart, with commutators computed on the coefficients
// (never by differencing operator outputs).

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <vector>

#include "symmspace/jet.hpp"

namespace symmspace {

// Value and gradient: what survives of a Jet2 after one first-order operator.
struct Jet1 {
    cplx value{0.0, 0.0};
    Eigen::VectorXcd grad;

    Jet1() = default;
    explicit Jet1(int n) : grad(Eigen::VectorXcd::Zero(n)) {}
};

struct OperatorCoeffs {
    Jet2 scalar;             // c0 as a germ
    std::vector<Jet2> vec;   // c^I as germs, one per chart coordinate
};

struct FirstOrderOperator {
    int n = 0;
    std::function<OperatorCoeffs(const Eigen::VectorXd&)> coeffs;
};

using WaveFunction = std::function<Jet2(const Eigen::VectorXd&)>;

// (A psi) with exact value and gradient.
inline Jet1 apply(const FirstOrderOperator& op, const Jet2& psi, const Eigen::VectorXd& x) {
    OperatorCoeffs c = op.coeffs(x);
    const int n = op.n;
    Jet1 r(n);
    r.value = c.scalar.value * psi.value;
    r.grad = c.scalar.value * psi.grad + psi.value * c.scalar.grad;
    for (int i = 0; i < n; ++i) {
        r.value += c.vec[i].value * psi.grad(i);
        r.grad += c.vec[i].value * psi.hess.col(i) + psi.grad(i) * c.vec[i].grad;
    }
    return r;
}

// Value of A applied to a function known only through its Jet1 (used for
// second-order compositions A(B psi)).
inline cplx apply_value(const FirstOrderOperator& op, const Jet1& phi, const Eigen::VectorXd& x) {
    OperatorCoeffs c = op.coeffs(x);
    cplx v = c.scalar.value * phi.value;
    for (int i = 0; i < op.n; ++i) v += c.vec[i].value * phi.grad(i);
    return v;
}

// Value of (A B psi) at x, exact through jets.
inline cplx apply_pair(const FirstOrderOperator& a, const FirstOrderOperator& b, const Jet2& psi,
                       const Eigen::VectorXd& x) {
    return apply_value(a, apply(b, psi, x), x);
}

inline FirstOrderOperator operator+(const FirstOrderOperator& a, const FirstOrderOperator& b) {
    FirstOrderOperator r;
    r.n = a.n;
    r.coeffs = [a, b](const Eigen::VectorXd& x) {
        OperatorCoeffs ca = a.coeffs(x), cb = b.coeffs(x);
        OperatorCoeffs rc;
        rc.scalar = ca.scalar + cb.scalar;
        rc.vec.reserve(ca.vec.size());
        for (size_t i = 0; i < ca.vec.size(); ++i) rc.vec.push_back(ca.vec[i] + cb.vec[i]);
        return rc;
    };
    return r;
}

inline FirstOrderOperator operator*(cplx s, const FirstOrderOperator& a) {
    FirstOrderOperator r;
    r.n = a.n;
    r.coeffs = [s, a](const Eigen::VectorXd& x) {
        OperatorCoeffs c = a.coeffs(x);
        c.scalar = s * c.scalar;
        for (auto& v : c.vec) v = s * v;
        return c;
    };
    return r;
}

inline FirstOrderOperator operator*(const FirstOrderOperator& a, cplx s) { return s * a; }

inline FirstOrderOperator operator-(const FirstOrderOperator& a, const FirstOrderOperator& b) {
    return a + (cplx(-1.0) * b);
}

// Identity (multiplication by 1) on an n-dimensional chart.
inline FirstOrderOperator identity_op(int n) {
    FirstOrderOperator r;
    r.n = n;
    r.coeffs = [n](const Eigen::VectorXd&) {
        OperatorCoeffs c;
        c.scalar = Jet2::constant(n, 1.0);
        c.vec.assign(n, Jet2(n));
        return c;
    };
    return r;
}

// Multiplication operator by a germ-valued function.
inline FirstOrderOperator multiplication_op(int n, std::function<Jet2(const Eigen::VectorXd&)> f) {
    FirstOrderOperator r;
    r.n = n;
    r.coeffs = [n, f = std::move(f)](const Eigen::VectorXd& x) {
        OperatorCoeffs c;
        c.scalar = f(x);
        c.vec.assign(n, Jet2(n));
        return c;
    };
    return r;
}

// Exact commutator of two first-order operators:
//   [A,B] = (a.grad b0 - b.grad a0) + (a.grad b^J - b.grad a^J) d_J
// where a.grad is the directional derivative sum_I a^I d_I. The resulting
// coefficient germs carry exact values and gradients (Hessians of the new
// coefficients would need third derivatives of the inputs and are zeroed).
inline FirstOrderOperator commutator(const FirstOrderOperator& a, const FirstOrderOperator& b) {
    FirstOrderOperator r;
    r.n = a.n;
    const int n = a.n;
    r.coeffs = [a, b, n](const Eigen::VectorXd& x) {
        OperatorCoeffs ca = a.coeffs(x), cb = b.coeffs(x);
        auto directional = [n](const std::vector<Jet2>& coef, const Jet2& f) {
            // jet of sum_I coef^I d_I f (value and gradient exact)
            Jet2 g(n);
            for (int i = 0; i < n; ++i) {
                g.value += coef[i].value * f.grad(i);
                g.grad += coef[i].value * f.hess.col(i) + f.grad(i) * coef[i].grad;
            }
            return g;
        };
        OperatorCoeffs rc;
        rc.scalar = directional(ca.vec, cb.scalar) - directional(cb.vec, ca.scalar);
        rc.vec.reserve(n);
        for (int j = 0; j < n; ++j)
            rc.vec.push_back(directional(ca.vec, cb.vec[j]) - directional(cb.vec, ca.vec[j]));
        return rc;
    };
    return r;
}

}  // namespace symmspace
