#pragma once

#include <cstdint>
#include <random>

#include "laxmarkov/linalg.hpp"

namespace laxmarkov {

/// Seeded RNG for experiments.  The mapping from the mt19937_64 bit stream to
/// doubles is spelled out here instead of going through <random> distributions,
/// so a fixed seed gives bit-identical output everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(gen_() % range);
    }

    Matrix matrix(int n, double lo, double hi) {
        Matrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = uniform(lo, hi);
        return a;
    }

    /// Random matrix with integer entries; useful as a probabilistic
    /// polynomial-identity check over the matrix entries.
    Matrix integer_matrix(int n, int lo, int hi) {
        Matrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = uniform_int(lo, hi);
        return a;
    }

    Matrix diagonal_matrix(int n, double lo, double hi) {
        Matrix a = Matrix::Zero(n, n);
        for (int i = 0; i < n; ++i) a(i, i) = uniform(lo, hi);
        return a;
    }

    Vector vector(int n, double lo, double hi) {
        Vector v(n);
        for (int i = 0; i < n; ++i) v(i) = uniform(lo, hi);
        return v;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace laxmarkov
