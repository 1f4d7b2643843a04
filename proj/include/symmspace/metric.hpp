#pragma once

// Points of the cone of positive-definite symmetric matrices, SL/GL group
// elements acting on them, and the invariant measure density.

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "symmspace/jet.hpp"

namespace symmspace {

// Chart of independent entries of a symmetric d x d matrix: upper triangle in
// row-major order, (0,0),(0,1),...,(0,d-1),(1,1),... All derivative
// bookkeeping in the library uses this chart.
inline int sym_dim(int d) { return d * (d + 1) / 2; }

inline int sym_index(int i, int j, int d) {
    if (i > j) std::swap(i, j);
    return i * d - i * (i - 1) / 2 + (j - i);
}

inline std::pair<int, int> sym_pair(int idx, int d) {
    for (int i = 0; i < d; ++i) {
        int row = d - i;
        if (idx < row) return {i, i + idx};
        idx -= row;
    }
    throw std::out_of_range("sym_pair: index out of range");
}

class MetricPoint {
  public:
    MetricPoint(const Eigen::MatrixXd& q, double positivity_tol = 1e-12)
        : m_((q + q.transpose()) / 2.0) {
        if (q.rows() != q.cols()) throw std::invalid_argument("MetricPoint: not square");
        if ((q - q.transpose()).cwiseAbs().maxCoeff() >
            1e-12 * std::max(1.0, q.cwiseAbs().maxCoeff()))
            throw std::invalid_argument("MetricPoint: not symmetric");
        if (!m_.allFinite()) throw std::invalid_argument("MetricPoint: non-finite entries");
        check_positive(positivity_tol);
    }

    static MetricPoint identity(int d) { return MetricPoint(Eigen::MatrixXd::Identity(d, d)); }

    static MetricPoint from_coords(const Eigen::VectorXd& c, int d) {
        Eigen::MatrixXd q(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) q(i, j) = q(j, i) = c(sym_index(i, j, d));
        return MetricPoint(q);
    }

    int dim() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXd& matrix() const { return m_; }
    double operator()(int i, int j) const { return m_(i, j); }
    double det() const { return m_.determinant(); }

    Eigen::VectorXd coords() const {
        const int d = dim();
        Eigen::VectorXd c(sym_dim(d));
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) c(sym_index(i, j, d)) = m_(i, j);
        return c;
    }

    // Coordinate germs x_I at this point, one jet per independent entry.
    std::vector<Jet2> coord_jets() const {
        const int d = dim(), n = sym_dim(d);
        std::vector<Jet2> js;
        js.reserve(n);
        for (int idx = 0; idx < n; ++idx) {
            auto [i, j] = sym_pair(idx, d);
            js.push_back(Jet2::variable(n, idx, m_(i, j)));
        }
        return js;
    }

    // Jet of the matrix entries (full matrix, symmetric off-diagonals share
    // the same chart coordinate).
    std::vector<std::vector<Jet2>> matrix_jets() const {
        const int d = dim(), n = sym_dim(d);
        std::vector<std::vector<Jet2>> m(d, std::vector<Jet2>(d, Jet2(n)));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                m[i][j] = Jet2::variable(n, sym_index(i, j, d), m_(i, j));
        return m;
    }

    // d = 2 aliases: U = (q11+q22)/2, V = (q11-q22)/2, W = q12.
    double U() const { return (m_(0, 0) + m_(1, 1)) / 2.0; }
    double V() const { return (m_(0, 0) - m_(1, 1)) / 2.0; }
    double W() const { return m_(0, 1); }

  private:
    void check_positive(double tol) const {
        // Sylvester's criterion: all leading principal minors positive.
        const int d = dim();
        double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
        double bound = tol;
        for (int k = 1; k <= d; ++k) {
            double minor = m_.topLeftCorner(k, k).determinant();
            if (minor <= bound) throw std::invalid_argument("MetricPoint: not positive definite");
            bound *= scale;
        }
    }

    Eigen::MatrixXd m_;
};

// Whether a symmetric matrix passes the positivity acceptance used by
// MetricPoint, without throwing.
inline bool sylvester_positive(const Eigen::MatrixXd& q, double tol = 1e-12) {
    const int d = static_cast<int>(q.rows());
    double scale = std::max(1.0, q.cwiseAbs().maxCoeff());
    double bound = tol;
    for (int k = 1; k <= d; ++k) {
        if (q.topLeftCorner(k, k).determinant() <= bound) return false;
        bound *= scale;
    }
    return true;
}

class GroupElement {
  public:
    explicit GroupElement(const Eigen::MatrixXd& g, bool unimodular = false)
        : g_(g), unimodular_(unimodular) {
        if (g.rows() != g.cols()) throw std::invalid_argument("GroupElement: not square");
        double dg = g.determinant();
        if (dg == 0.0 || !std::isfinite(dg))
            throw std::invalid_argument("GroupElement: singular matrix");
        if (unimodular && std::abs(dg - 1.0) > 1e-12)
            throw std::invalid_argument("GroupElement: det != 1");
    }

    static GroupElement identity(int d) {
        return GroupElement(Eigen::MatrixXd::Identity(d, d), true);
    }

    // Rescale to det = +1 (requires positive determinant for odd-d roots; for
    // det < 0 and even d there is no real unimodular rescaling).
    static GroupElement special(const Eigen::MatrixXd& g) {
        double dg = g.determinant();
        if (dg <= 0.0 && g.rows() % 2 == 0)
            throw std::invalid_argument("GroupElement::special: det <= 0");
        double scale = std::pow(std::abs(dg), -1.0 / g.rows());
        Eigen::MatrixXd h = (dg < 0 ? -scale : scale) * g;
        return GroupElement(h, true);
    }

    int dim() const { return static_cast<int>(g_.rows()); }
    const Eigen::MatrixXd& matrix() const { return g_; }
    bool unimodular() const { return unimodular_; }
    double det() const { return g_.determinant(); }

    GroupElement inverse() const { return GroupElement(g_.inverse(), unimodular_); }

    GroupElement operator*(const GroupElement& o) const {
        return GroupElement(g_ * o.g_, unimodular_ && o.unimodular_);
    }

  private:
    Eigen::MatrixXd g_;
    bool unimodular_;
};

// Covariant action q -> g q g^T.
inline MetricPoint act(const GroupElement& g, const MetricPoint& q) {
    if (g.dim() != q.dim()) throw std::invalid_argument("act: dimension mismatch");
    Eigen::MatrixXd r = g.matrix() * q.matrix() * g.matrix().transpose();
    return MetricPoint(r);
}

// Density of the GL(d,R)-invariant measure relative to prod dq_ab.
inline double measure_density(const MetricPoint& q) {
    double det = q.det();
    if (det <= 0.0) throw std::invalid_argument("measure_density: det <= 0");
    return std::pow(det, -(q.dim() + 1) / 2.0);
}

}  // namespace symmspace
