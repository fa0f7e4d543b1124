#include "beamspace/channel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace beamspace {

namespace {
constexpr double kDegToRad = std::numbers::pi / 180.0;
}

void ChannelProfile::validate() const {
    if (paths_per_user < 1) throw ParameterError("paths_per_user must be >= 1");
    if (sector_deg <= 0.0 || sector_deg > 180.0) throw ParameterError("sector_deg must be in (0, 180]");
    if (min_separation_deg < 0.0) throw ParameterError("min_separation_deg must be >= 0");
    if (min_distance_m <= 0.0 || max_distance_m < min_distance_m)
        throw ParameterError("distance bounds must satisfy 0 < min <= max");
    if (scenario == Scenario::los && dominant_ratio_db < 0.0)
        throw ParameterError("dominant_ratio_db must be >= 0 for LoS profiles");
}

Eigen::VectorXcd steering_vector(Index num_antennas, double theta_rad) {
    if (num_antennas < 1) throw ParameterError("steering vector needs at least one antenna");
    Eigen::VectorXcd a(num_antennas);
    const double phase_step = std::numbers::pi * std::sin(theta_rad);
    for (Index b = 0; b < num_antennas; ++b) {
        const double ph = phase_step * static_cast<double>(b);
        a[b] = {std::cos(ph), std::sin(ph)};
    }
    return a;
}

Eigen::VectorXcd column_from_paths(Index num_antennas,
                                   std::span<const std::complex<double>> gains,
                                   std::span<const double> angles_rad) {
    if (gains.empty() || gains.size() != angles_rad.size())
        throw DimensionError("gains and angles must have equal nonzero length");
    Eigen::VectorXcd h = Eigen::VectorXcd::Zero(num_antennas);
    for (std::size_t l = 0; l < gains.size(); ++l)
        h += gains[l] * steering_vector(num_antennas, angles_rad[l]);
    return h;
}

std::vector<double> place_users(Index num_users, double sector_deg,
                                double min_separation_deg, Rng& rng) {
    if (num_users < 1) throw ParameterError("need at least one user");
    const double span = sector_deg - static_cast<double>(num_users - 1) * min_separation_deg;
    if (span < 0.0)
        throw PlacementError("cannot place " + std::to_string(num_users) + " users with " +
                             std::to_string(min_separation_deg) + " deg separation in a " +
                             std::to_string(sector_deg) + " deg sector");
    // Sorted uniform draws on the shrunk interval, then re-inflated by the
    // separation, give a uniform sample of all feasible placements.
    std::vector<double> u(static_cast<std::size_t>(num_users));
    for (auto& x : u) x = rng.uniform() * span;
    std::sort(u.begin(), u.end());
    std::vector<double> angles(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double deg = -sector_deg / 2.0 + u[i] + static_cast<double>(i) * min_separation_deg;
        angles[i] = deg * kDegToRad;
    }
    return angles;
}

ChannelMatrix generate_channel(Index num_antennas, Index num_users,
                               const ChannelProfile& profile, std::uint64_t seed) {
    if (!is_power_of_two(num_antennas))
        throw ParameterError("antenna count must be a power of two, got " + std::to_string(num_antennas));
    if (num_users < 1 || num_users > num_antennas)
        throw ParameterError("user count must satisfy 1 <= U <= B");
    profile.validate();

    Rng rng(mix_seed(seed, {0x6368616eULL}));  // distinct stream per purpose
    const std::vector<double> user_angles =
        place_users(num_users, profile.sector_deg, profile.min_separation_deg, rng);

    // Path powers sum to 1 per user, so E[||h_u||^2] = B exactly.
    const int num_paths = profile.paths_per_user;
    std::vector<double> powers(static_cast<std::size_t>(num_paths));
    if (profile.scenario == Scenario::los && num_paths > 1) {
        const double ratio = std::pow(10.0, profile.dominant_ratio_db / 10.0);
        powers[0] = ratio / (ratio + 1.0);
        for (int l = 1; l < num_paths; ++l)
            powers[static_cast<std::size_t>(l)] = 1.0 / ((ratio + 1.0) * (num_paths - 1));
    } else {
        std::fill(powers.begin(), powers.end(), 1.0 / num_paths);
    }

    const double half_sector_rad = profile.sector_deg / 2.0 * kDegToRad;
    ChannelMatrix h;
    h.domain = Domain::antenna;
    h.entries.resize(num_antennas, num_users);
    std::vector<std::complex<double>> gains(static_cast<std::size_t>(num_paths));
    std::vector<double> angles(static_cast<std::size_t>(num_paths));
    for (Index u = 0; u < num_users; ++u) {
        for (int l = 0; l < num_paths; ++l) {
            const bool dominant = profile.scenario == Scenario::los && l == 0;
            angles[static_cast<std::size_t>(l)] =
                dominant ? user_angles[static_cast<std::size_t>(u)]
                         : rng.uniform(-half_sector_rad, half_sector_rad);
            gains[static_cast<std::size_t>(l)] = rng.cgaussian(powers[static_cast<std::size_t>(l)]);
        }
        h.entries.col(u) = column_from_paths(num_antennas, gains, angles);
    }
    return h;
}

ChannelMatrix to_beamspace(const ChannelMatrix& h) {
    if (h.domain != Domain::antenna)
        throw DomainError("to_beamspace expects an antenna-domain channel");
    UnitaryDft<double> dft(h.num_beams());
    return {dft.forward_cols(h.entries), Domain::beamspace};
}

ChannelMatrix to_antenna(const ChannelMatrix& h) {
    if (h.domain != Domain::beamspace)
        throw DomainError("to_antenna expects a beamspace-domain channel");
    UnitaryDft<double> dft(h.num_beams());
    return {dft.inverse_cols(h.entries), Domain::antenna};
}

Eigen::MatrixXcd unitary_pilot_matrix(Index num_users) {
    if (num_users < 1) throw ParameterError("pilot matrix needs at least one user");
    Eigen::MatrixXcd p(num_users, num_users);
    const double scale = 1.0 / std::sqrt(static_cast<double>(num_users));
    for (Index r = 0; r < num_users; ++r)
        for (Index c = 0; c < num_users; ++c) {
            const double ang = -2.0 * std::numbers::pi * static_cast<double>(r) *
                               static_cast<double>(c) / static_cast<double>(num_users);
            p(r, c) = scale * std::complex<double>(std::cos(ang), std::sin(ang));
        }
    return p;
}

ChannelMatrix ls_channel_estimate(const Eigen::MatrixXcd& y_pilot,
                                  const Eigen::MatrixXcd& pilots,
                                  Domain domain) {
    if (pilots.rows() != pilots.cols() || pilots.rows() != y_pilot.cols())
        throw DimensionError("pilot matrix must be U x U with U = received columns");
    const Index u = pilots.rows();
    const double dev = (pilots * pilots.adjoint() - Eigen::MatrixXcd::Identity(u, u))
                           .cwiseAbs()
                           .maxCoeff();
    if (dev > 1e-9) throw PilotError("pilot matrix is not unitary");
    return {y_pilot * pilots.adjoint(), domain};
}

void save_channel(const std::filesystem::path& path, const ChannelMatrix& h) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << h.num_beams() << ' ' << h.num_users() << ' '
        << (h.domain == Domain::antenna ? "antenna" : "beamspace") << '\n';
    char buf[64];
    for (Index r = 0; r < h.num_beams(); ++r) {
        for (Index c = 0; c < h.num_users(); ++c) {
            const auto& z = h.entries(r, c);
            std::snprintf(buf, sizeof(buf), "%.17g:%.17g", z.real(), z.imag());
            out << buf << (c + 1 == h.num_users() ? '\n' : ' ');
        }
    }
    if (!out) throw IoError("write to " + path.string() + " failed");
}

ChannelMatrix load_channel(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string header;
    if (!std::getline(in, header)) throw IoError("missing header line in " + path.string());
    std::istringstream hs(header);
    Index rows = 0, cols = 0;
    std::string domain_word;
    if (!(hs >> rows >> cols >> domain_word) || rows < 1 || cols < 1)
        throw IoError("malformed header in " + path.string());
    Domain domain;
    if (domain_word == "antenna")
        domain = Domain::antenna;
    else if (domain_word == "beamspace")
        domain = Domain::beamspace;
    else
        throw IoError("unknown domain '" + domain_word + "' in " + path.string());

    ChannelMatrix h;
    h.domain = domain;
    h.entries.resize(rows, cols);
    std::string token;
    for (Index r = 0; r < rows; ++r) {
        for (Index c = 0; c < cols; ++c) {
            if (!(in >> token))
                throw IoError("truncated channel file " + path.string());
            const auto sep = token.find(':');
            if (sep == std::string::npos)
                throw IoError("malformed entry '" + token + "' in " + path.string());
            std::size_t re_len = 0, im_len = 0;
            double re = 0.0, im = 0.0;
            try {
                re = std::stod(token.substr(0, sep), &re_len);
                im = std::stod(token.substr(sep + 1), &im_len);
            } catch (const std::exception&) {
                throw IoError("malformed entry '" + token + "' in " + path.string());
            }
            if (re_len != sep || im_len != token.size() - sep - 1)
                throw IoError("malformed entry '" + token + "' in " + path.string());
            if (!std::isfinite(re) || !std::isfinite(im))
                throw IoError("non-finite entry in " + path.string());
            h.entries(r, c) = {re, im};
        }
    }
    if (in >> token) throw IoError("trailing data in " + path.string());
    return h;
}

}  // namespace beamspace
