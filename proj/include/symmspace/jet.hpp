#pragma once

// Second-order jets (value, gradient, Hessian) over n real coordinates with
// complex values. Products of two first-order differential operators applied
// to a jet are exact to roundoff, which is what the operator-algebra layer
// relies on.

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace symmspace {

using cplx = std::complex<double>;

struct Jet2 {
    cplx value{0.0, 0.0};
    Eigen::VectorXcd grad;
    Eigen::MatrixXcd hess;

    Jet2() = default;

    explicit Jet2(int n)
        : grad(Eigen::VectorXcd::Zero(n)), hess(Eigen::MatrixXcd::Zero(n, n)) {}

    int vars() const { return static_cast<int>(grad.size()); }

    static Jet2 constant(int n, cplx v) {
        Jet2 j(n);
        j.value = v;
        return j;
    }

    // The i-th coordinate as a function germ at x_i.
    static Jet2 variable(int n, int i, double x) {
        Jet2 j(n);
        j.value = x;
        j.grad(i) = 1.0;
        return j;
    }

    Jet2 operator-() const {
        Jet2 r(*this);
        r.value = -r.value;
        r.grad = -r.grad;
        r.hess = -r.hess;
        return r;
    }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r(a);
    r.value += b.value;
    r.grad += b.grad;
    r.hess += b.hess;
    return r;
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
    Jet2 r(a);
    r.value -= b.value;
    r.grad -= b.grad;
    r.hess -= b.hess;
    return r;
}

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r(a.vars());
    r.value = a.value * b.value;
    r.grad = a.value * b.grad + b.value * a.grad;
    r.hess = a.value * b.hess + b.value * a.hess + a.grad * b.grad.transpose() +
             b.grad * a.grad.transpose();
    return r;
}

inline Jet2 operator*(cplx s, const Jet2& a) {
    Jet2 r(a);
    r.value *= s;
    r.grad *= s;
    r.hess *= s;
    return r;
}

inline Jet2 operator*(const Jet2& a, cplx s) { return s * a; }
inline Jet2 operator*(double s, const Jet2& a) { return cplx(s, 0.0) * a; }
inline Jet2 operator*(const Jet2& a, double s) { return cplx(s, 0.0) * a; }

inline Jet2 operator+(const Jet2& a, cplx s) {
    Jet2 r(a);
    r.value += s;
    return r;
}
inline Jet2 operator+(cplx s, const Jet2& a) { return a + s; }
inline Jet2 operator-(const Jet2& a, cplx s) { return a + (-s); }

// Chain rule through a scalar C^2 function given its value and first two
// derivatives at a.value.
inline Jet2 lift(cplx f0, cplx f1, cplx f2, const Jet2& a) {
    Jet2 r(a.vars());
    r.value = f0;
    r.grad = f1 * a.grad;
    r.hess = f1 * a.hess + f2 * (a.grad * a.grad.transpose());
    return r;
}

inline Jet2 pow(const Jet2& a, cplx p) {
    cplx f0 = std::pow(a.value, p);
    cplx f1 = p * std::pow(a.value, p - 1.0);
    cplx f2 = p * (p - 1.0) * std::pow(a.value, p - 2.0);
    return lift(f0, f1, f2, a);
}

inline Jet2 exp(const Jet2& a) {
    cplx e = std::exp(a.value);
    return lift(e, e, e, a);
}

inline Jet2 log(const Jet2& a) {
    cplx v = a.value;
    return lift(std::log(v), 1.0 / v, -1.0 / (v * v), a);
}

inline Jet2 sqrt(const Jet2& a) {
    cplx rt = std::sqrt(a.value);
    return lift(rt, 0.5 / rt, -0.25 / (rt * a.value), a);
}

inline Jet2 inv(const Jet2& a) {
    cplx v = a.value;
    return lift(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v), a);
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * inv(b); }
inline Jet2 operator/(const Jet2& a, cplx s) { return a * (1.0 / s); }

// Integer power by repeated multiplication (valid at zero and negative
// arguments where the branch of pow() would be ambiguous).
inline Jet2 ipow(const Jet2& a, int m) {
    if (m < 0) return inv(ipow(a, -m));
    Jet2 r = Jet2::constant(a.vars(), 1.0);
    Jet2 base = a;
    int e = m;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// Composition: `outer` carries value/grad/hess of g with respect to its m
// arguments; `inner[k]` is the jet of the k-th argument over the base chart.
inline Jet2 compose(const Jet2& outer, const std::vector<Jet2>& inner) {
    if (outer.vars() != static_cast<int>(inner.size()))
        throw std::invalid_argument("compose: arity mismatch");
    const int n = inner.empty() ? 0 : inner[0].vars();
    Jet2 r(n);
    r.value = outer.value;
    for (int k = 0; k < outer.vars(); ++k) {
        r.grad += outer.grad(k) * inner[k].grad;
        r.hess += outer.grad(k) * inner[k].hess;
        for (int l = 0; l < outer.vars(); ++l)
            r.hess += outer.hess(k, l) * (inner[k].grad * inner[l].grad.transpose());
    }
    return r;
}

// Determinant of a matrix of jets by Laplace expansion along the first row.
// Dimensions here are small (d <= 6), so the factorial cost is irrelevant.
inline Jet2 det_jet(const std::vector<std::vector<Jet2>>& m) {
    const int d = static_cast<int>(m.size());
    if (d == 1) return m[0][0];
    const int n = m[0][0].vars();
    Jet2 acc = Jet2::constant(n, 0.0);
    for (int j = 0; j < d; ++j) {
        std::vector<std::vector<Jet2>> minor;
        minor.reserve(d - 1);
        for (int r = 1; r < d; ++r) {
            std::vector<Jet2> row;
            row.reserve(d - 1);
            for (int c = 0; c < d; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Jet2 term = m[0][j] * det_jet(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace symmspace
