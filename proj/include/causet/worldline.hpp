#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "causet/causal.hpp"

namespace causet {

/// Per-link amplitude model: a chain of k links carries amplitude hop^k.
struct AmplitudeModel {
    std::complex<double> hop{1.0, 0.0};
};

/// How ensemble weights are normalized from chain amplitudes.
enum class WeightRule {
    BornSquared,  ///< w_i = |a_i|^2 / sum |a|^2
    Linear,       ///< w_i = |a_i| / sum |a|
};

/// Exact path counts for every ordered pair: entry (i, j) is the number of
/// link-paths from i to j. Counts are kept in 64-bit words with checked
/// arithmetic and escalate to arbitrary precision on overflow.
class PathCountMatrix {
public:
    PathCountMatrix() = default;

    std::size_t size() const { return n_; }
    /// True when at least one entry exceeded 64 bits.
    bool big() const { return !big_.empty(); }

    mpz_class at(std::size_t i, std::size_t j) const;
    std::optional<std::uint64_t> at_u64(std::size_t i, std::size_t j) const;

private:
    friend PathCountMatrix path_count_matrix(const BitMatrix&);

    std::size_t n_ = 0;
    std::vector<std::uint64_t> small_;  // n*n, row-major; unused when big
    std::vector<mpz_class> big_;        // n*n, row-major; only on overflow
};

/// Counts all link-paths by back-substitution against the unit upper
/// triangular matrix (I - L); the relation must be strictly upper
/// triangular so the series terminates.
PathCountMatrix path_count_matrix(const LinkMatrix& links);
PathCountMatrix path_count_matrix(const BitMatrix& relation);

/// Exact count for one pair without materializing the full matrix.
mpz_class path_count(const BitMatrix& relation, std::size_t i, std::size_t j);

/// Sum over all chains c from i to j of hop^len(c); equals
/// ((I - hop*L)^-1 - I)[i][j]. Terminates exactly (L is nilpotent).
std::complex<double> total_amplitude(const LinkMatrix& links, const AmplitudeModel& model,
                                     std::size_t i, std::size_t j);
std::complex<double> total_amplitude(const BitMatrix& relation, const AmplitudeModel& model,
                                     std::size_t i, std::size_t j);

/// The superposed set of causal chains between two events with their
/// amplitudes and normalized weights.
struct WorldlineEnsemble {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<Chain> chains;
    std::vector<std::complex<double>> amplitudes;
    std::complex<double> total{0.0, 0.0};
    std::vector<double> weights;
    bool truncated = false;

    bool empty() const { return chains.empty(); }
};

/// Enumerates the chains from i to j (up to `cap`, flagged if truncated),
/// assigns amplitudes and weights. No chain at all gives an empty ensemble.
/// When every amplitude vanishes (hop = 0) the weights fall back to uniform
/// so they always form a probability vector over a non-empty chain set.
WorldlineEnsemble build_ensemble(const LinkMatrix& links, const AmplitudeModel& model,
                                 std::size_t i, std::size_t j,
                                 std::size_t cap = default_chain_cap,
                                 WeightRule rule = WeightRule::BornSquared);
WorldlineEnsemble build_ensemble(const BitMatrix& relation, const AmplitudeModel& model,
                                 std::size_t i, std::size_t j,
                                 std::size_t cap = default_chain_cap,
                                 WeightRule rule = WeightRule::BornSquared);

}
