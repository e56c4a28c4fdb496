#include "causet/worldline.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace causet {

namespace {

bool add_checked(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) return false;
    out = a + b;
    return true;
}

void require_strictly_upper(const BitMatrix& m, const char* who) {
    if (!m.strictly_upper_triangular()) {
        throw std::invalid_argument(std::string(who) + ": relation must be strictly upper triangular");
    }
}

}  // namespace

mpz_class PathCountMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw std::out_of_range("PathCountMatrix::at");
    if (!big_.empty()) return big_[i * n_ + j];
    return mpz_class(static_cast<unsigned long>(0)) + small_[i * n_ + j];
}

std::optional<std::uint64_t> PathCountMatrix::at_u64(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw std::out_of_range("PathCountMatrix::at_u64");
    if (big_.empty()) return small_[i * n_ + j];
    const mpz_class& v = big_[i * n_ + j];
    if (v.fits_ulong_p()) return static_cast<std::uint64_t>(v.get_ui());
    return std::nullopt;
}

PathCountMatrix path_count_matrix(const LinkMatrix& links) {
    return path_count_matrix(links.bits);
}

PathCountMatrix path_count_matrix(const BitMatrix& relation) {
    require_strictly_upper(relation, "path_count_matrix");
    const std::size_t n = relation.size();
    PathCountMatrix out;
    out.n_ = n;

    // fast pass: 64-bit with checked adds, rows in reverse topological order
    out.small_.assign(n * n, 0);
    bool overflow = false;
    for (std::size_t ii = n; ii-- > 0 && !overflow;) {
        std::uint64_t* row_i = out.small_.data() + ii * n;
        relation.for_each_in_row(ii, [&](std::size_t k) {
            if (overflow) return;
            if (!add_checked(row_i[k], 1, row_i[k])) {
                overflow = true;
                return;
            }
            const std::uint64_t* row_k = out.small_.data() + k * n;
            for (std::size_t j = k + 1; j < n; ++j) {
                if (!add_checked(row_i[j], row_k[j], row_i[j])) {
                    overflow = true;
                    return;
                }
            }
        });
    }
    if (!overflow) return out;

    // arbitrary-precision fallback
    out.small_.clear();
    out.small_.shrink_to_fit();
    out.big_.assign(n * n, mpz_class(0));
    for (std::size_t ii = n; ii-- > 0;) {
        mpz_class* row_i = out.big_.data() + ii * n;
        relation.for_each_in_row(ii, [&](std::size_t k) {
            row_i[k] += 1;
            const mpz_class* row_k = out.big_.data() + k * n;
            for (std::size_t j = k + 1; j < n; ++j) row_i[j] += row_k[j];
        });
    }
    return out;
}

mpz_class path_count(const BitMatrix& relation, std::size_t i, std::size_t j) {
    require_strictly_upper(relation, "path_count");
    if (i >= j || j >= relation.size()) {
        throw std::invalid_argument("path_count: requires i < j < n");
    }
    // forward DP from i; counts[v] = number of paths i -> v
    std::vector<std::uint64_t> counts(j + 1, 0);
    counts[i] = 1;
    bool overflow = false;
    for (std::size_t v = i; v < j && !overflow; ++v) {
        if (counts[v] == 0) continue;
        relation.for_each_in_row(v, [&](std::size_t s) {
            if (overflow || s > j) return;
            if (!add_checked(counts[s], counts[v], counts[s])) overflow = true;
        });
    }
    if (!overflow) return mpz_class(static_cast<unsigned long>(0)) + counts[j];

    std::vector<mpz_class> big(j + 1, mpz_class(0));
    big[i] = 1;
    for (std::size_t v = i; v < j; ++v) {
        if (big[v] == 0) continue;
        relation.for_each_in_row(v, [&](std::size_t s) {
            if (s <= j) big[s] += big[v];
        });
    }
    return big[j];
}

std::complex<double> total_amplitude(const LinkMatrix& links, const AmplitudeModel& model,
                                     std::size_t i, std::size_t j) {
    return total_amplitude(links.bits, model, i, j);
}

std::complex<double> total_amplitude(const BitMatrix& relation, const AmplitudeModel& model,
                                     std::size_t i, std::size_t j) {
    require_strictly_upper(relation, "total_amplitude");
    if (i >= j || j >= relation.size()) {
        throw std::invalid_argument("total_amplitude: requires i < j < n");
    }
    std::vector<std::complex<double>> acc(j + 1, {0.0, 0.0});
    acc[i] = {1.0, 0.0};
    for (std::size_t v = i; v < j; ++v) {
        if (acc[v] == std::complex<double>{0.0, 0.0}) continue;
        const std::complex<double> carried = acc[v] * model.hop;
        relation.for_each_in_row(v, [&](std::size_t s) {
            if (s <= j) acc[s] += carried;
        });
    }
    return acc[j];
}

WorldlineEnsemble build_ensemble(const LinkMatrix& links, const AmplitudeModel& model,
                                 std::size_t i, std::size_t j, std::size_t cap,
                                 WeightRule rule) {
    return build_ensemble(links.bits, model, i, j, cap, rule);
}

WorldlineEnsemble build_ensemble(const BitMatrix& relation, const AmplitudeModel& model,
                                 std::size_t i, std::size_t j, std::size_t cap,
                                 WeightRule rule) {
    ChainEnumeration enumeration = enumerate_chains(relation, i, j, cap);

    WorldlineEnsemble ensemble;
    ensemble.source = i;
    ensemble.target = j;
    ensemble.truncated = enumeration.truncated;
    ensemble.chains = std::move(enumeration.chains);
    if (ensemble.chains.empty()) return ensemble;

    ensemble.amplitudes.reserve(ensemble.chains.size());
    for (const Chain& chain : ensemble.chains) {
        std::complex<double> a{1.0, 0.0};
        const std::size_t links_in_chain = chain.size() - 1;
        for (std::size_t step = 0; step < links_in_chain; ++step) a *= model.hop;
        ensemble.amplitudes.push_back(a);
        ensemble.total += a;
    }

    double norm = 0.0;
    for (const auto& a : ensemble.amplitudes) {
        norm += rule == WeightRule::BornSquared ? std::norm(a) : std::abs(a);
    }
    ensemble.weights.resize(ensemble.amplitudes.size());
    if (norm > 0.0) {
        for (std::size_t c = 0; c < ensemble.amplitudes.size(); ++c) {
            const auto& a = ensemble.amplitudes[c];
            ensemble.weights[c] =
                (rule == WeightRule::BornSquared ? std::norm(a) : std::abs(a)) / norm;
        }
    } else {
        const double uniform = 1.0 / static_cast<double>(ensemble.weights.size());
        for (double& w : ensemble.weights) w = uniform;
    }
    return ensemble;
}

}
