#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "beamspace/dft.hpp"
#include "beamspace/errors.hpp"
#include "beamspace/rng.hpp"

namespace beamspace {

enum class Domain { antenna, beamspace };

// Dense complex channel matrix, B antennas/beams by U users, tagged with the
// domain its entries live in. A beamspace matrix is the column-wise unitary
// DFT of its antenna-domain counterpart.
struct ChannelMatrix {
    Eigen::MatrixXcd entries;  // B x U
    Domain domain = Domain::antenna;

    Index num_beams() const { return entries.rows(); }
    Index num_users() const { return entries.cols(); }
};

enum class Scenario { los, non_los };

// Geometry + multipath profile for the synthetic ray-sum channel generator.
// LoS: one dominant ray at the user's sector angle plus (paths_per_user - 1)
// weak scattered rays; the dominant ray carries dominant_ratio_db more power
// than the scattered rays combined. Non-LoS: paths_per_user equal-power rays.
// Distances and carrier are recorded as geometry metadata; they do not affect
// the statistics because columns are power-normalized.
struct ChannelProfile {
    Scenario scenario = Scenario::los;
    int paths_per_user = 3;
    double sector_deg = 120.0;
    double min_separation_deg = 1.0;
    double min_distance_m = 10.0;
    double max_distance_m = 110.0;
    double carrier_ghz = 60.0;
    double dominant_ratio_db = 10.0;

    static ChannelProfile los() { return {}; }
    static ChannelProfile non_los() {
        ChannelProfile p;
        p.scenario = Scenario::non_los;
        p.paths_per_user = 8;
        return p;
    }

    void validate() const;
};

// ULA steering vector for half-wavelength spacing: entry b is
// exp(i pi b sin(theta)), b = 0 .. num_antennas-1.
Eigen::VectorXcd steering_vector(Index num_antennas, double theta_rad);

// One antenna-domain channel column as a gain-weighted sum of steering
// vectors. gains and angles_rad must have equal nonzero length.
Eigen::VectorXcd column_from_paths(Index num_antennas,
                                   std::span<const std::complex<double>> gains,
                                   std::span<const double> angles_rad);

// User sector angles (radians) with guaranteed pairwise separation, uniform
// over all feasible placements. Throws PlacementError when
// (num_users - 1) * min_separation exceeds the sector span.
std::vector<double> place_users(Index num_users, double sector_deg,
                                double min_separation_deg, Rng& rng);

// Synthetic antenna-domain channel: B a power of two, U <= B. Deterministic
// in (B, U, profile, seed). Columns satisfy E[ ||h_u||^2 ] = B.
ChannelMatrix generate_channel(Index num_antennas, Index num_users,
                               const ChannelProfile& profile, std::uint64_t seed);

ChannelMatrix to_beamspace(const ChannelMatrix& h);
ChannelMatrix to_antenna(const ChannelMatrix& h);

// Unitary DFT pilot matrix of arbitrary size U (dense construction).
Eigen::MatrixXcd unitary_pilot_matrix(Index num_users);

// Least-squares channel estimate from unitary pilots: Y = H P + N gives
// Hhat = Y P^H. The Y matrix and the returned estimate live in `domain`.
ChannelMatrix ls_channel_estimate(const Eigen::MatrixXcd& y_pilot,
                                  const Eigen::MatrixXcd& pilots,
                                  Domain domain = Domain::antenna);

// Text channel file: header "B U antenna|beamspace", then B rows of U
// "re:im" entries. Written with 17 significant digits so values round-trip.
void save_channel(const std::filesystem::path& path, const ChannelMatrix& h);
ChannelMatrix load_channel(const std::filesystem::path& path);

}  // namespace beamspace
