#pragma once

#include <Eigen/Dense>
#include <vector>

#include "beamspace/channel.hpp"
#include "beamspace/errors.hpp"

namespace beamspace {

enum class EqualizerKind { full, columnwise, entrywise };

// Equalization matrix with explicit support.
//   full:       weights is the dense U x B matrix W.
//   columnwise: beam_support holds K distinct beam indices in selection
//               order; weights is the U x K block applied to those beams.
//   entrywise:  row_supports[u] holds K distinct beam indices per row in
//               selection order; weights(u, i) is the coefficient of beam
//               row_supports[u][i] in row u.
struct SparseEqualizer {
    EqualizerKind kind = EqualizerKind::full;
    Index num_beams = 0;  // B
    Eigen::MatrixXcd weights;
    std::vector<Index> beam_support;
    std::vector<std::vector<Index>> row_supports;

    Index num_users() const { return weights.rows(); }
    Index support_size() const;
    // Enforces distinct in-range indices, exact cardinality, finite weights.
    void validate() const;
};

// Sherman-Morrison chain state for (H_Omega^H H_Omega + rho I)^{-1}, grown one
// selected beam at a time from the empty support (inverse = I / rho).
struct RegularizedGram {
    Eigen::MatrixXcd inverse;
    Index support_size = 0;

    static RegularizedGram start(Index num_users, double rho);
    // Account for one more selected beam with conjugated row v = H(b, :)^H.
    void add_row(const Eigen::VectorXcd& v);
};

// Whether greedy refits reuse the rank-one inverse chain or re-factorize the
// regularized Gram matrix at every iteration. Both paths must agree; the
// fresh path exists as the independent reference.
enum class GramUpdate { rank_one, fresh };

// Exact beamspace LMMSE equalizer W = (H^H H + rho I)^{-1} H^H.
// rho = 0 requires full column rank and raises RankError otherwise.
SparseEqualizer lmmse_full(const ChannelMatrix& h, double rho);

// Greedy column-wise selection: the beam b outside `support` maximizing
// ||A conj(h_b)||^2 / (||h_b||^2 + rho), where h_b is the transposed b-th row
// of H. Ties break toward the smallest index.
Index comp_select_beam(const Eigen::MatrixXcd& residual, const ChannelMatrix& h,
                       const std::vector<Index>& support, double rho);

// Column-wise orthogonal matching pursuit: K iterations of select-then-refit
// with the MSE-optimal U x k block recomputed on the grown support.
SparseEqualizer comp(const ChannelMatrix& h, double rho, Index k,
                     GramUpdate mode = GramUpdate::rank_one);

// Largest-columns approximation: one-shot support of the K largest-norm rows
// of H, then a single MSE-optimal refit.
SparseEqualizer lc(const ChannelMatrix& h, double rho, Index k);

// Greedy entry-wise selection for one row problem: the beam maximizing
// |z^H h_b|^2 / (||h_b||^2 + rho) outside the row support.
Index eomp_select_beam(const Eigen::VectorXcd& residual, const ChannelMatrix& h,
                       const std::vector<Index>& support, double rho);

// Entry-wise orthogonal matching pursuit: each equalizer row is grown
// independently by K select-then-refit iterations.
SparseEqualizer eomp(const ChannelMatrix& h, double rho, Index k,
                     GramUpdate mode = GramUpdate::rank_one);

// Largest-entries approximation: per-row one-shot support of the K best
// initial selection scores, then a single refit.
SparseEqualizer le(const ChannelMatrix& h, double rho, Index k);

// Symbol estimates s_hat = W y using only the stored nonzero coefficients.
Eigen::VectorXcd apply_equalizer(const SparseEqualizer& w, const Eigen::VectorXcd& y);

// Scatter the sparse representation into a dense U x B matrix.
Eigen::MatrixXcd densify(const SparseEqualizer& w);

// Regularized MSE objective ||I - W H||_F^2 + rho ||W||_F^2 of a dense W.
double mse_objective(const Eigen::MatrixXcd& w_dense, const ChannelMatrix& h, double rho);

// Per-row objective ||e_u - H^T w||^2 + rho ||w||^2 for a dense length-B row
// vector w (stored as a column).
double row_mse_objective(const Eigen::VectorXcd& w_row_dense, const ChannelMatrix& h,
                         Index user, double rho);

}  // namespace beamspace
