#ifndef SECBC_DISCRETE_HPP
#define SECBC_DISCRETE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "channel.hpp"

namespace secbc {

// One discrete memoryless subchannel with the Markov structure
// Q -> U -> X -> (Y, Z), described by row-stochastic tables:
//   pq[q], pu_given_q[q][u], px_given_u[u][x], pyz_given_x[x][y*nz + z].
// Rows are validated to sum to one within 1e-12.
struct DiscreteJoint {
    size_t nq = 0, nu = 0, nx = 0, ny = 0, nz = 0;
    std::vector<double> pq;
    std::vector<double> pu_given_q;
    std::vector<double> px_given_u;
    std::vector<double> pyz_given_x;

    void validate() const;
};

// Evaluates the achievable triple for a fixed choice of auxiliaries:
//   r01 = sum I(Q;Y), r02 = sum I(Q;Z), r1 = sum [I(U;Y|Q) - I(U;Z|Q)].
// r1 is reported raw and may be negative for poor auxiliary choices.
RateTriple dm_rate_point(std::span<const DiscreteJoint> subchannels);

} // namespace secbc

#endif
