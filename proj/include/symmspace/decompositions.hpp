#pragma once

// Iwasawa g = O exp(H) N, Cartan g = O1 exp(a+) O2, and polar
// q = o exp(2a) o~ factorizations for SL(d,R) and unit-determinant metric
// points. Backed by Eigen's QR/SVD/eigendecomposition with the sign
// conventions fixed so the factors land in the advertised subgroups.

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "symmspace/metric.hpp"
#include "symmspace/root_system.hpp"

namespace symmspace {

struct IwasawaFactors {
    GroupElement O;   // orthogonal
    CartanVector H;   // log of the diagonal part
    GroupElement N;   // unit upper triangular

    Eigen::MatrixXd reconstruct() const {
        Eigen::VectorXd a = H.entries().array().exp();
        return O.matrix() * a.asDiagonal() * N.matrix();
    }
};

struct CartanFactors {
    GroupElement O1;      // special orthogonal
    CartanVector aplus;   // weakly decreasing, closed positive chamber
    GroupElement O2;      // special orthogonal

    Eigen::MatrixXd reconstruct() const {
        Eigen::VectorXd a = aplus.entries().array().exp();
        return O1.matrix() * a.asDiagonal() * O2.matrix();
    }
};

struct PolarFactors {
    GroupElement o;     // special orthogonal
    CartanVector a;     // decreasing; q = o exp(2a) o~

    Eigen::MatrixXd reconstruct() const {
        Eigen::VectorXd e = (2.0 * a.entries()).array().exp();
        return o.matrix() * e.asDiagonal() * o.matrix().transpose();
    }
};

// Unique orthogonal/positive-diagonal/unit-triangular factorization
// (Gram-Schmidt on columns, computed via Householder QR plus sign fixing).
inline IwasawaFactors iwasawa(const GroupElement& g) {
    const int d = g.dim();
    if (std::abs(g.det() - 1.0) > 1e-8) throw std::invalid_argument("iwasawa: det g != 1");
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g.matrix());
    Eigen::MatrixXd O = qr.householderQ();
    Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j)
        if (R(j, j) < 0.0) {
            O.col(j) = -O.col(j);
            R.row(j) = -R.row(j);
        }
    Eigen::VectorXd h(d);
    for (int j = 0; j < d; ++j) {
        if (R(j, j) <= 0.0) throw std::invalid_argument("iwasawa: singular input");
        h(j) = std::log(R(j, j));
    }
    Eigen::MatrixXd N = Eigen::MatrixXd::Identity(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) N(i, j) = R(i, j) / R(i, i);
    // det g = 1 forces sum h = 0 up to roundoff; project exactly
    return IwasawaFactors{GroupElement(O), CartanVector::project(h), GroupElement(N, true)};
}

// H-function of the Iwasawa decomposition.
inline CartanVector h_function(const GroupElement& g) { return iwasawa(g).H; }

// Cartan decomposition via SVD, signs absorbed so both factors are special
// orthogonal. For coinciding singular values any valid factorization is
// produced.
inline CartanFactors cartan(const GroupElement& g) {
    const int d = g.dim();
    if (std::abs(g.det() - 1.0) > 1e-8) throw std::invalid_argument("cartan: det g != 1");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(g.matrix(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::MatrixXd U = svd.matrixU();
    Eigen::MatrixXd V = svd.matrixV();
    if (U.determinant() < 0.0) {
        // det U = det V since the singular values are positive with product 1
        U.col(d - 1) = -U.col(d - 1);
        V.col(d - 1) = -V.col(d - 1);
    }
    Eigen::VectorXd a = svd.singularValues().array().log();
    return CartanFactors{GroupElement(U, true), CartanVector::project(a),
                         GroupElement(V.transpose(), true)};
}

// Polar decomposition of a unit-determinant metric point: q = o exp(2a) o~
// with a canonicalized to decreasing order.
inline PolarFactors polar(const MetricPoint& q) {
    const int d = q.dim();
    if (std::abs(q.det() - 1.0) > 1e-8) throw std::invalid_argument("polar: det q != 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q.matrix());
    // Eigen sorts ascending; flip to decreasing exponents
    Eigen::VectorXd mu(d);
    Eigen::MatrixXd o(d, d);
    for (int j = 0; j < d; ++j) {
        mu(j) = es.eigenvalues()(d - 1 - j);
        o.col(j) = es.eigenvectors().col(d - 1 - j);
    }
    if (o.determinant() < 0.0) o.col(d - 1) = -o.col(d - 1);
    Eigen::VectorXd a = 0.5 * mu.array().log();
    return PolarFactors{GroupElement(o, true), CartanVector::project(a)};
}

}  // namespace symmspace
