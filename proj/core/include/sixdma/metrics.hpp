// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "sixdma/channel.hpp"
#include "sixdma/types.hpp"

namespace sixdma {

/// Communication SNR (linear): p_tx * |h_c(v) f|^2 / sigma_c2.
double comm_snr(const ChannelSet& cs, const PhaseVector& v, const Beamformer& f,
                const Scenario& sc);

/// Sensing SNR (linear): p_tx * |h_sr|^2 * |h_st(v) f|^2 / sigma_s2.
double sensing_snr(const ChannelSet& cs, const PhaseVector& v,
                   const Beamformer& f, const Scenario& sc);

/// Normalized coupling between the transmit sensing channel and the
/// communication channel, in [0, 1]; 1 iff they are collinear.
double channel_correlation(const ChannelSet& cs, const PhaseVector& v);

/// Joint coupling-and-gain objective: -|h_sr|^2 * |h_st(v) h_c(v)^H|^2.
/// Always <= 0; more negative is better.
double coupling_fitness(const ChannelSet& cs, const PhaseVector& v);

/// Same value computed straight from the pose through the rank-1 cascade
/// structure, without materializing the N x n_tx channel blocks. This is
/// the swarm-search hot path; it must agree with the ChannelSet route to
/// floating-point accuracy.
double coupling_fitness(const Scenario& sc, const Pose6D& pose,
                        const PhaseVector& v);

/// coupling_fitness at the pose's channels plus
/// tau * sum_X max(0, -n^T u_X)^2 over the BS, UE and target directions.
/// Zero penalty exactly on the half-space-feasible set.
double penalized_fitness(const Pose6D& pose, const PhaseVector& v,
                         const Scenario& sc, double tau);

}  // namespace sixdma
