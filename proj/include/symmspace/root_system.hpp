#pragma once

// Restricted root data for sl(d,R): roots eps_i - eps_j, positive/simple
// roots, Weyl orbit (S_d on coordinates), rho, and the dual norms carried in
// three normalizations side by side.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

namespace symmspace {

// Element of the Cartan subalgebra a (trace-zero real d-vector).
class CartanVector {
  public:
    explicit CartanVector(const Eigen::VectorXd& t, double tol = 1e-12) : t_(t) {
        if (std::abs(t.sum()) > tol * std::max(1.0, t.cwiseAbs().maxCoeff()))
            throw std::invalid_argument("CartanVector: trace not zero");
    }

    static CartanVector project(const Eigen::VectorXd& t) {
        return CartanVector(t - Eigen::VectorXd::Constant(t.size(), t.mean()));
    }

    int dim() const { return static_cast<int>(t_.size()); }
    const Eigen::VectorXd& entries() const { return t_; }
    double operator()(int i) const { return t_(i); }

    bool regular(double tol = 1e-12) const {
        for (int i = 0; i < dim(); ++i)
            for (int j = i + 1; j < dim(); ++j)
                if (std::abs(t_(i) - t_(j)) <= tol) return false;
        return true;
    }

  private:
    Eigen::VectorXd t_;
};

// Element of the dual a* in eps-coordinates (also trace-zero).
class SpectralParameter {
  public:
    explicit SpectralParameter(const Eigen::VectorXd& v, double tol = 1e-10) : v_(v) {
        if (std::abs(v.sum()) > tol * std::max(1.0, v.cwiseAbs().maxCoeff()))
            throw std::invalid_argument("SpectralParameter: trace not zero");
    }

    static SpectralParameter zero(int d) { return SpectralParameter(Eigen::VectorXd::Zero(d)); }

    int dim() const { return static_cast<int>(v_.size()); }
    const Eigen::VectorXd& entries() const { return v_; }
    double operator()(int i) const { return v_(i); }

    // Pairing lambda(H) = sum_i lambda_i t_i.
    double pair(const CartanVector& h) const { return v_.dot(h.entries()); }

    // Canonical dominant representative: weakly decreasing entries.
    SpectralParameter dominant() const {
        Eigen::VectorXd s = v_;
        std::sort(s.data(), s.data() + s.size(), std::greater<double>());
        return SpectralParameter(s);
    }

  private:
    Eigen::VectorXd v_;
};

struct RestrictedRootSystem {
    int dim;
    std::vector<Eigen::VectorXd> roots;      // all eps_i - eps_j, i != j
    std::vector<Eigen::VectorXd> positives;  // i < j
    std::vector<Eigen::VectorXd> simples;    // eps_k - eps_{k+1}

    static RestrictedRootSystem make(int d) {
        if (d < 2) throw std::invalid_argument("RestrictedRootSystem: d >= 2 required");
        RestrictedRootSystem rs;
        rs.dim = d;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                if (i == j) continue;
                Eigen::VectorXd a = Eigen::VectorXd::Zero(d);
                a(i) = 1.0;
                a(j) = -1.0;
                rs.roots.push_back(a);
                if (i < j) rs.positives.push_back(a);
            }
        for (int k = 0; k + 1 < d; ++k) {
            Eigen::VectorXd a = Eigen::VectorXd::Zero(d);
            a(k) = 1.0;
            a(k + 1) = -1.0;
            rs.simples.push_back(a);
        }
        return rs;
    }

    int rank() const { return dim - 1; }
};

// rho = (1/2) sum of positive roots; in eps-coordinates
// ((d-1)/2, (d-3)/2, ..., -(d-1)/2).
inline SpectralParameter rho(int d) {
    if (d < 2) throw std::invalid_argument("rho: d >= 2 required");
    Eigen::VectorXd v(d);
    for (int i = 0; i < d; ++i) v(i) = (d - 1 - 2.0 * i) / 2.0;
    return SpectralParameter(v);
}

// All distinct S_d permutations of the entries.
inline std::vector<SpectralParameter> weyl_orbit(const SpectralParameter& lambda) {
    Eigen::VectorXd s = lambda.entries();
    std::sort(s.data(), s.data() + s.size());
    std::vector<SpectralParameter> orbit;
    do {
        orbit.emplace_back(s);
    } while (std::next_permutation(s.data(), s.data() + s.size()));
    return orbit;
}

enum class Normalization { killing, trace, casimir_matched };

// Scale factor c such that |lambda|^2 = c * sum_i lambda_i^2.
//
// killing: dual of <X,Y> = 2d Tr(XY).  trace: dual of Tr(XY).
// casimir_matched: the normalization under which the radial Casimir check
// -Delta phi = (|lambda|^2 + |rho|^2) phi reproduces the explicit d = 2
// eigenvalue 1/4 + s^2 and the d = 3 spectrum floor 1/3. Those two floors do
// not come from one bilinear form: the d = 2 value corresponds to the dual
// of 2 Tr (geodesic arc length in the conical coordinate), every d >= 3
// value to the Killing dual. The conversion constant is exposed here rather
// than hidden in the operators.
inline double norm_scale(Normalization n, int d) {
    switch (n) {
        case Normalization::killing:
            return 1.0 / (2.0 * d);
        case Normalization::trace:
            return 1.0;
        case Normalization::casimir_matched:
            return d == 2 ? 0.5 : 1.0 / (2.0 * d);
    }
    throw std::invalid_argument("norm_scale: unknown normalization");
}

inline double dual_norm_sq(const SpectralParameter& lambda, Normalization n) {
    return norm_scale(n, lambda.dim()) * lambda.entries().squaredNorm();
}

}  // namespace symmspace
