#include "discrete.hpp"

#include <cmath>
#include <string>

namespace secbc {

namespace {

void check_rows(const std::vector<double>& table, size_t rows, size_t cols, const char* name) {
    if (table.size() != rows * cols)
        fail(errc::invalid_argument, std::string(name) + ": table size does not match alphabets");
    for (size_t r = 0; r < rows; ++r) {
        double sum = 0.0;
        for (size_t c = 0; c < cols; ++c) {
            const double p = table[r * cols + c];
            if (!(p >= 0.0))
                fail(errc::invalid_argument, std::string(name) + ": negative probability");
            sum += p;
        }
        if (std::fabs(sum - 1.0) > 1e-12)
            fail(errc::invalid_argument, std::string(name) + ": row does not sum to 1");
    }
}

// I(A;B) from an unnormalized-safe joint table, with 0 log 0 := 0.
double mutual_information(std::span<const double> joint, size_t na, size_t nb) {
    std::vector<double> pa(na, 0.0), pb(nb, 0.0);
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j) {
            pa[i] += joint[i * nb + j];
            pb[j] += joint[i * nb + j];
        }
    double mi = 0.0;
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j) {
            const double p = joint[i * nb + j];
            if (p > 0.0)
                mi += p * std::log2(p / (pa[i] * pb[j]));
        }
    return mi;
}

struct SubchannelRates {
    double iqy, iqz, iuy_q, iuz_q;
};

SubchannelRates evaluate(const DiscreteJoint& ch) {
    // Output channels seen from U: p(y|u) and p(z|u). Given U, the pair
    // (Y, Z) is independent of Q, so these suffice for every term below.
    std::vector<double> py_given_x(ch.nx * ch.ny, 0.0), pz_given_x(ch.nx * ch.nz, 0.0);
    for (size_t x = 0; x < ch.nx; ++x)
        for (size_t y = 0; y < ch.ny; ++y)
            for (size_t z = 0; z < ch.nz; ++z) {
                const double p = ch.pyz_given_x[x * ch.ny * ch.nz + y * ch.nz + z];
                py_given_x[x * ch.ny + y] += p;
                pz_given_x[x * ch.nz + z] += p;
            }

    std::vector<double> py_given_u(ch.nu * ch.ny, 0.0), pz_given_u(ch.nu * ch.nz, 0.0);
    for (size_t u = 0; u < ch.nu; ++u)
        for (size_t x = 0; x < ch.nx; ++x) {
            const double px = ch.px_given_u[u * ch.nx + x];
            if (px == 0.0)
                continue;
            for (size_t y = 0; y < ch.ny; ++y)
                py_given_u[u * ch.ny + y] += px * py_given_x[x * ch.ny + y];
            for (size_t z = 0; z < ch.nz; ++z)
                pz_given_u[u * ch.nz + z] += px * pz_given_x[x * ch.nz + z];
        }

    std::vector<double> pqy(ch.nq * ch.ny, 0.0), pqz(ch.nq * ch.nz, 0.0);
    for (size_t q = 0; q < ch.nq; ++q)
        for (size_t u = 0; u < ch.nu; ++u) {
            const double pqu = ch.pq[q] * ch.pu_given_q[q * ch.nu + u];
            if (pqu == 0.0)
                continue;
            for (size_t y = 0; y < ch.ny; ++y)
                pqy[q * ch.ny + y] += pqu * py_given_u[u * ch.ny + y];
            for (size_t z = 0; z < ch.nz; ++z)
                pqz[q * ch.nz + z] += pqu * pz_given_u[u * ch.nz + z];
        }

    SubchannelRates r{};
    r.iqy = mutual_information(pqy, ch.nq, ch.ny);
    r.iqz = mutual_information(pqz, ch.nq, ch.nz);

    r.iuy_q = 0.0;
    r.iuz_q = 0.0;
    std::vector<double> juy(ch.nu * ch.ny), juz(ch.nu * ch.nz);
    for (size_t q = 0; q < ch.nq; ++q) {
        if (ch.pq[q] == 0.0)
            continue;
        for (size_t u = 0; u < ch.nu; ++u) {
            const double pu = ch.pu_given_q[q * ch.nu + u];
            for (size_t y = 0; y < ch.ny; ++y)
                juy[u * ch.ny + y] = pu * py_given_u[u * ch.ny + y];
            for (size_t z = 0; z < ch.nz; ++z)
                juz[u * ch.nz + z] = pu * pz_given_u[u * ch.nz + z];
        }
        r.iuy_q += ch.pq[q] * mutual_information(juy, ch.nu, ch.ny);
        r.iuz_q += ch.pq[q] * mutual_information(juz, ch.nu, ch.nz);
    }
    return r;
}

} // namespace

void DiscreteJoint::validate() const {
    if (nq == 0 || nu == 0 || nx == 0 || ny == 0 || nz == 0)
        fail(errc::invalid_argument, "alphabet sizes must be positive");
    check_rows(pq, 1, nq, "p(q)");
    check_rows(pu_given_q, nq, nu, "p(u|q)");
    check_rows(px_given_u, nu, nx, "p(x|u)");
    check_rows(pyz_given_x, nx, ny * nz, "p(y,z|x)");
}

RateTriple dm_rate_point(std::span<const DiscreteJoint> subchannels) {
    RateTriple rt;
    for (const DiscreteJoint& ch : subchannels) {
        ch.validate();
        const SubchannelRates r = evaluate(ch);
        rt.r01 += r.iqy;
        rt.r02 += r.iqz;
        rt.r1 += r.iuy_q - r.iuz_q;
    }
    return rt;
}

} // namespace secbc
