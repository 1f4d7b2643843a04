#pragma once

// Generalized Mehler-Fock transform of order m on [1, inf):
//   F(s) = (s/pi) sinh(pi s) W(m, s) int_1^inf P^m_{-1/2+is}(u) f(u) du
//   f(u) = int_0^inf P^m_{-1/2+is}(u) F(s) ds
// with W(m, s) = |Gamma(1/2 - m + i s)|^2 by default. At m = 0 the forward
// prefactor collapses to s tanh(pi s) and Plancherel reads
//   int_1^inf |f|^2 du = int_0^inf |F(s)|^2 / (s tanh(pi s)) ds.
// The unsquared-gamma weight is kept as a switch; it does not invert.
//
// Discretization: composite Gauss-Legendre in both u and s, with the kernel
// P^m_{-1/2+is}(u) tabulated once per transform object (one ODE sweep per
// spectral node over the sorted u grid).

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "symmspace/conical.hpp"

namespace symmspace {

enum class MehlerFockWeight { squared_gamma, literal_gamma };

struct MehlerFockGrid {
    int m = 0;
    double s_min = 1e-3;
    double s_max = 12.0;
    int s_panels = 64;
    int s_gauss = 32;
    double u_max = 40.0;
    int u_panels = 40;
    int u_gauss = 20;
    MehlerFockWeight weight = MehlerFockWeight::squared_gamma;
};

namespace mf_detail {

// nodes/weights for Gauss-Legendre on [-1, 1], computed by Newton on the
// Legendre recurrence
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

inline void composite(double a, double b, int panels, int order, std::vector<double>& nodes,
                      std::vector<double>& weights) {
    std::vector<double> x, w;
    gauss_legendre(order, x, w);
    nodes.clear();
    weights.clear();
    double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h;
        for (int k = 0; k < order; ++k) {
            nodes.push_back(lo + 0.5 * h * (x[k] + 1.0));
            weights.push_back(0.5 * h * w[k]);
        }
    }
}

// |Gamma(1/2 - m + i s)|^2 via |Gamma(1/2 + i s)|^2 = pi / cosh(pi s) and the
// recurrence Gamma(z + 1) = z Gamma(z); no complex gamma needed for integer m
inline double gamma_half_sq(int m, double s) {
    double g = M_PI / std::cosh(M_PI * s);
    if (m > 0)
        for (int k = 1; k <= m; ++k) g /= (k - 0.5) * (k - 0.5) + s * s;
    else
        for (int k = 0; k < -m; ++k) g *= (k + 0.5) * (k + 0.5) + s * s;
    return g;
}

}  // namespace mf_detail

class MehlerFockTransform {
  public:
    explicit MehlerFockTransform(const MehlerFockGrid& grid = MehlerFockGrid())
        : grid_(grid) {
        if (grid.s_min <= 0.0 || grid.s_max <= grid.s_min || grid.u_max <= 1.0)
            throw std::invalid_argument("MehlerFockTransform: bad grid");
        mf_detail::composite(grid.s_min, grid.s_max, grid.s_panels, grid.s_gauss, s_, sw_);
        mf_detail::composite(1.0, grid.u_max, grid.u_panels, grid.u_gauss, u_, uw_);

        // chi grid (ascending, strictly positive since u > 1 at all nodes)
        std::vector<double> chi(u_.size());
        for (size_t j = 0; j < u_.size(); ++j) chi[j] = std::acosh(u_[j]);
        const int ma = std::abs(grid.m);
        kernel_.resize(s_.size(), u_.size());
        for (size_t i = 0; i < s_.size(); ++i) {
            auto row = conical_march(s_[i], ma, chi);
            double fac = 1.0;
            if (grid.m < 0)
                fac = ((ma % 2 == 0) ? 1.0 : -1.0) / conical_order_product(s_[i], ma);
            for (size_t j = 0; j < u_.size(); ++j) kernel_(i, j) = fac * row[j][0];
        }
    }

    const MehlerFockGrid& grid() const { return grid_; }
    const std::vector<double>& s_nodes() const { return s_; }
    const std::vector<double>& u_nodes() const { return u_; }

    double forward_prefactor(double s) const {
        double w = mf_detail::gamma_half_sq(grid_.m, s);
        if (grid_.weight == MehlerFockWeight::literal_gamma) w = std::sqrt(w);
        return s / M_PI * std::sinh(M_PI * s) * w;
    }

    // F on the s grid from samples of f on the u grid
    Eigen::VectorXd forward(const Eigen::VectorXd& f_u) const {
        if (f_u.size() != static_cast<Eigen::Index>(u_.size()))
            throw std::invalid_argument("forward: sample count");
        Eigen::VectorXd integ =
            kernel_ * (f_u.array() * Eigen::Map<const Eigen::ArrayXd>(uw_.data(), uw_.size()))
                          .matrix();
        for (size_t i = 0; i < s_.size(); ++i) integ(i) *= forward_prefactor(s_[i]);
        return integ;
    }

    Eigen::VectorXd forward(const std::function<double(double)>& f) const {
        return forward(sample_u(f));
    }

    // f on the u grid from samples of F on the s grid
    Eigen::VectorXd inverse(const Eigen::VectorXd& F_s) const {
        if (F_s.size() != static_cast<Eigen::Index>(s_.size()))
            throw std::invalid_argument("inverse: sample count");
        return kernel_.transpose() *
               (F_s.array() * Eigen::Map<const Eigen::ArrayXd>(sw_.data(), sw_.size()))
                   .matrix();
    }

    Eigen::VectorXd sample_u(const std::function<double(double)>& f) const {
        Eigen::VectorXd v(u_.size());
        for (size_t j = 0; j < u_.size(); ++j) v(j) = f(u_[j]);
        return v;
    }

    Eigen::VectorXd sample_s(const std::function<double(double)>& F) const {
        Eigen::VectorXd v(s_.size());
        for (size_t i = 0; i < s_.size(); ++i) v(i) = F(s_[i]);
        return v;
    }

    // relative L2(du) error of inverse(forward(f)) against f
    double roundtrip_u_error(const std::function<double(double)>& f) const {
        Eigen::VectorXd f0 = sample_u(f);
        Eigen::VectorXd f1 = inverse(forward(f0));
        return l2_u(f1 - f0) / l2_u(f0);
    }

    // relative L2 error (spectral weight) of forward(inverse(F)) against F,
    // for F already in the range of the forward map
    double roundtrip_s_error(const Eigen::VectorXd& F) const {
        Eigen::VectorXd F1 = forward(inverse(F));
        return l2_s(F1 - F) / l2_s(F);
    }

    // int |f|^2 du  /  int |F|^2 / (s tanh(pi s)) ds; equals 1 at m = 0 with
    // the squared-gamma weight
    double plancherel_ratio(const std::function<double(double)>& f) const {
        Eigen::VectorXd f0 = sample_u(f);
        Eigen::VectorXd F = forward(f0);
        double nf = 0.0, nF = 0.0;
        for (size_t j = 0; j < u_.size(); ++j) nf += uw_[j] * f0(j) * f0(j);
        for (size_t i = 0; i < s_.size(); ++i)
            nF += sw_[i] * F(i) * F(i) / (s_[i] * std::tanh(M_PI * s_[i]));
        return nf / nF;
    }

    // decay diagnostic: |F| at the last spectral node relative to its peak
    double spectral_tail(const std::function<double(double)>& f) const {
        Eigen::VectorXd F = forward(sample_u(f));
        return std::abs(F(F.size() - 1)) / F.cwiseAbs().maxCoeff();
    }

  private:
    double l2_u(const Eigen::VectorXd& v) const {
        double n = 0.0;
        for (size_t j = 0; j < u_.size(); ++j) n += uw_[j] * v(j) * v(j);
        return std::sqrt(n);
    }

    double l2_s(const Eigen::VectorXd& v) const {
        double n = 0.0;
        for (size_t i = 0; i < s_.size(); ++i)
            n += sw_[i] * v(i) * v(i) / (s_[i] * std::tanh(M_PI * s_[i]));
        return std::sqrt(n);
    }

    MehlerFockGrid grid_;
    std::vector<double> s_, sw_, u_, uw_;
    Eigen::MatrixXd kernel_;
};

}  // namespace symmspace
