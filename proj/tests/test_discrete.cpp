#include <doctest.h>

#include <cmath>
#include <random>

#include "discrete.hpp"

using namespace secbc;

namespace {

std::vector<double> identity(size_t n) {
    std::vector<double> t(n * n, 0.0);
    for (size_t i = 0; i < n; ++i)
        t[i * n + i] = 1.0;
    return t;
}

std::vector<double> uniform_row(size_t n) { return std::vector<double>(n, 1.0 / n); }

// Deterministic outputs y = f(x), z = g(x).
std::vector<double> deterministic_pipe(size_t nx, size_t ny, size_t nz, auto f, auto g) {
    std::vector<double> t(nx * ny * nz, 0.0);
    for (size_t x = 0; x < nx; ++x)
        t[x * ny * nz + f(x) * nz + g(x)] = 1.0;
    return t;
}

} // namespace

TEST_CASE("noiseless main channel against an erasure tap leaks the erasure rate") {
    for (double e : {0.1, 0.35, 0.8}) {
        DiscreteJoint ch;
        ch.nq = 1;
        ch.nu = 2;
        ch.nx = 2;
        ch.ny = 2;
        ch.nz = 3;
        ch.pq = {1.0};
        ch.pu_given_q = uniform_row(2);
        ch.px_given_u = identity(2);
        // y copies x; z copies x with probability 1-e, erases otherwise.
        ch.pyz_given_x.assign(2 * 2 * 3, 0.0);
        for (size_t x = 0; x < 2; ++x) {
            ch.pyz_given_x[x * 6 + x * 3 + x] = 1.0 - e;
            ch.pyz_given_x[x * 6 + x * 3 + 2] = e;
        }
        const RateTriple rt = dm_rate_point(std::vector<DiscreteJoint>{ch});
        CHECK(rt.r01 == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(rt.r02 == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(rt.r1 == doctest::Approx(e).epsilon(1e-10));
    }
}

TEST_CASE("identical outputs carry no secrecy") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const size_t nx = 3, ny = 4;
        DiscreteJoint ch;
        ch.nq = 2;
        ch.nu = nx;
        ch.nx = nx;
        ch.ny = ny;
        ch.nz = ny;
        ch.pq = {0.3, 0.7};
        ch.pu_given_q.resize(2 * nx);
        for (size_t q = 0; q < 2; ++q) {
            double sum = 0.0;
            for (size_t i = 0; i < nx; ++i)
                sum += (ch.pu_given_q[q * nx + i] = u(rng) + 0.05);
            for (size_t i = 0; i < nx; ++i)
                ch.pu_given_q[q * nx + i] /= sum;
        }
        ch.px_given_u = identity(nx);
        ch.pyz_given_x.assign(nx * ny * ny, 0.0);
        for (size_t x = 0; x < nx; ++x) {
            std::vector<double> row(ny);
            double sum = 0.0;
            for (size_t y = 0; y < ny; ++y)
                sum += (row[y] = u(rng) + 0.05);
            for (size_t y = 0; y < ny; ++y)
                ch.pyz_given_x[x * ny * ny + y * ny + y] = row[y] / sum;
        }
        const RateTriple rt = dm_rate_point(std::vector<DiscreteJoint>{ch});
        CHECK(rt.r1 == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(std::fabs(rt.r1) < 1e-12);
    }
}

TEST_CASE("deterministic pipes reproduce the joint-coding common capacity") {
    // Two subchannels with link capacities (3,4) and (7,5) bits.
    DiscreteJoint one;
    one.nq = one.nu = one.nx = 16;
    one.ny = 8;
    one.nz = 16;
    one.pq = uniform_row(16);
    one.pu_given_q = identity(16);
    one.px_given_u = identity(16);
    one.pyz_given_x = deterministic_pipe(16, 8, 16, [](size_t x) { return x % 8; },
                                         [](size_t x) { return x; });

    DiscreteJoint two;
    two.nq = two.nu = two.nx = 128;
    two.ny = 128;
    two.nz = 32;
    two.pq = uniform_row(128);
    two.pu_given_q = identity(128);
    two.px_given_u = identity(128);
    two.pyz_given_x = deterministic_pipe(128, 128, 32, [](size_t x) { return x; },
                                         [](size_t x) { return x % 32; });

    const RateTriple rt = dm_rate_point(std::vector<DiscreteJoint>{one, two});
    CHECK(rt.r01 == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(rt.r02 == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(std::min(rt.r01, rt.r02) == doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("degraded taps keep the leak difference nonnegative") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const size_t nx = 3, ny = 3, nz = 3;
        DiscreteJoint ch;
        ch.nq = 1;
        ch.nu = nx;
        ch.nx = nx;
        ch.ny = ny;
        ch.nz = nz;
        ch.pq = {1.0};
        ch.pu_given_q = uniform_row(nx);
        ch.px_given_u = identity(nx);

        // z is a stochastic function of y, so the tap is a degraded copy.
        std::vector<double> py(nx * ny), pz_given_y(ny * nz);
        for (size_t x = 0; x < nx; ++x) {
            double sum = 0.0;
            for (size_t y = 0; y < ny; ++y)
                sum += (py[x * ny + y] = u(rng) + 0.02);
            for (size_t y = 0; y < ny; ++y)
                py[x * ny + y] /= sum;
        }
        for (size_t y = 0; y < ny; ++y) {
            double sum = 0.0;
            for (size_t z = 0; z < nz; ++z)
                sum += (pz_given_y[y * nz + z] = u(rng) + 0.02);
            for (size_t z = 0; z < nz; ++z)
                pz_given_y[y * nz + z] /= sum;
        }
        ch.pyz_given_x.assign(nx * ny * nz, 0.0);
        for (size_t x = 0; x < nx; ++x)
            for (size_t y = 0; y < ny; ++y)
                for (size_t z = 0; z < nz; ++z)
                    ch.pyz_given_x[x * ny * nz + y * nz + z] =
                        py[x * ny + y] * pz_given_y[y * nz + z];

        const RateTriple rt = dm_rate_point(std::vector<DiscreteJoint>{ch});
        CHECK(rt.r1 >= -1e-12);
    }
}

TEST_CASE("malformed distributions are rejected") {
    DiscreteJoint ch;
    ch.nq = 1;
    ch.nu = 2;
    ch.nx = 2;
    ch.ny = 2;
    ch.nz = 2;
    ch.pq = {1.0};
    ch.pu_given_q = {0.5, 0.6};  // does not sum to one
    ch.px_given_u = identity(2);
    ch.pyz_given_x = deterministic_pipe(2, 2, 2, [](size_t x) { return x; },
                                        [](size_t x) { return x; });
    CHECK_THROWS_AS(dm_rate_point(std::vector<DiscreteJoint>{ch}), error);

    ch.pu_given_q = {1.2, -0.2};  // negative entry
    CHECK_THROWS_AS(dm_rate_point(std::vector<DiscreteJoint>{ch}), error);
}
