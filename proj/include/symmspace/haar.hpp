#pragma once

// Reproducible Haar sampling on O(d)/SO(d). A draw is a pure function of
// (seed, stream, draw index), so parallel streams never share state.

#include <Eigen/Dense>
#include <cstdint>

#include "symmspace/metric.hpp"

namespace symmspace {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline double uniform01(std::uint64_t& state) {
    return (splitmix64(state) >> 11) * 0x1.0p-53;
}

}  // namespace detail

class HaarSampler {
  public:
    explicit HaarSampler(std::uint64_t seed, std::uint64_t stream_id = 0)
        : seed_(seed), stream_(stream_id) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }
    std::uint64_t index() const { return index_; }

    // Next Haar-distributed orthogonal matrix; with restrict_so, Haar on SO(d).
    GroupElement next(int d, bool restrict_so = false) { return at(index_++, d, restrict_so); }

    // Draw by explicit index, independent of sampler state.
    GroupElement at(std::uint64_t draw_index, int d, bool restrict_so = false) const {
        std::uint64_t state = mix(seed_, stream_, draw_index);
        Eigen::MatrixXd a(d, d);
        double spare = 0.0;
        bool have_spare = false;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) a(i, j) = gaussian(state, spare, have_spare);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
        Eigen::MatrixXd q = qr.householderQ();
        Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
        // Positive-diagonal sign convention; without it the distribution is
        // not Haar.
        for (int j = 0; j < d; ++j)
            if (r(j, j) < 0.0) q.col(j) = -q.col(j);
        if (restrict_so && q.determinant() < 0.0) q.col(d - 1) = -q.col(d - 1);
        return GroupElement(q, restrict_so || q.determinant() > 0.0);
    }

    double gaussian_scalar() {
        std::uint64_t state = mix(seed_, stream_, index_++);
        double spare = 0.0;
        bool have_spare = false;
        return gaussian(state, spare, have_spare);
    }

  private:
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream, std::uint64_t idx) {
        std::uint64_t s = seed;
        std::uint64_t a = detail::splitmix64(s);
        s ^= stream * 0xda942042e4dd58b5ULL;
        a ^= detail::splitmix64(s);
        s ^= idx + 0x165667b19e3779f9ULL;
        a ^= detail::splitmix64(s);
        return a;
    }

    static double gaussian(std::uint64_t& state, double& spare, bool& have_spare) {
        if (have_spare) {
            have_spare = false;
            return spare;
        }
        double u1 = 0.0;
        do {
            u1 = detail::uniform01(state);
        } while (u1 <= 0.0);
        double u2 = detail::uniform01(state);
        double r = std::sqrt(-2.0 * std::log(u1));
        spare = r * std::sin(2.0 * M_PI * u2);
        have_spare = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t index_ = 0;
};

// Random SPD matrix q = a a^T + eps I, for test-point generation.
inline MetricPoint random_spd(HaarSampler& rng, int d, double spread = 1.0) {
    Eigen::MatrixXd a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a(i, j) = spread * rng.gaussian_scalar();
    Eigen::MatrixXd q = a * a.transpose() + 0.1 * Eigen::MatrixXd::Identity(d, d);
    return MetricPoint(q);
}

// Random SL(d,R) element exp-free: gaussian matrix rescaled to det +1.
inline GroupElement random_sl(HaarSampler& rng, int d, double spread = 1.0) {
    while (true) {
        Eigen::MatrixXd a(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) a(i, j) = spread * rng.gaussian_scalar();
        double det = a.determinant();
        if (std::abs(det) < 1e-6) continue;
        if (det < 0.0) a.col(0) = -a.col(0);
        return GroupElement::special(a);
    }
}

}  // namespace symmspace
