#pragma once

#include <cstddef>
#include <vector>

#include "causet/bitmatrix.hpp"
#include "causet/geometry.hpp"
#include "causet/sprinkle.hpp"

namespace causet {

/// Causal matrix: bits[i][j] = 1 iff event i causally precedes event j.
/// Strictly upper triangular under the canonical (t, x) sort, transitive.
/// Row/column index i corresponds to events[i]; `events` may be empty for
/// matrices produced by pure order operations.
struct CausalMatrix {
    BitMatrix bits;
    std::vector<Event> events;

    std::size_t size() const { return bits.size(); }
    std::size_t relation_count() const { return bits.count(); }
};

/// Link matrix: the transitive reduction of a causal matrix. bits[i][j] = 1
/// iff i precedes j with no element in between (a covering relation).
struct LinkMatrix {
    BitMatrix bits;

    std::size_t size() const { return bits.size(); }
    std::size_t link_count() const { return bits.count(); }
};

/// A chain: events each linked to the next, stored as ascending indices.
using Chain = std::vector<std::size_t>;

struct ChainEnumeration {
    std::vector<Chain> chains;
    bool truncated = false;
};

inline constexpr std::size_t default_chain_cap = 1'000'000;

CausalMatrix build_causal_matrix(const Sprinkle& sprinkle);
/// `events` must already be in canonical (t, x) order.
CausalMatrix build_causal_matrix(std::vector<Event> events);

/// Transitive reduction via bitset row intersections.
/// Throws std::invalid_argument if the input is not transitive.
LinkMatrix build_link_matrix(const CausalMatrix& causal);

/// Smallest transitive relation containing the links; the inverse of
/// build_link_matrix for matrices that came from a causal matrix.
CausalMatrix transitive_closure(const LinkMatrix& links);

/// Maximum number of links over all chains from i to j; 0 if none.
/// Throws std::invalid_argument unless i < j.
std::size_t longest_chain(const LinkMatrix& links, std::size_t i, std::size_t j);

/// Longest chain in the whole set (maximum link-path length).
std::size_t longest_chain(const LinkMatrix& links);

/// All link-paths from i to j in lexicographic order, truncated at `cap`.
ChainEnumeration enumerate_chains(const LinkMatrix& links, std::size_t i, std::size_t j,
                                  std::size_t cap = default_chain_cap);
/// Same enumeration over an arbitrary strictly-upper-triangular relation
/// (pass a causal matrix's bits to walk relation-chains instead of links).
ChainEnumeration enumerate_chains(const BitMatrix& relation, std::size_t i, std::size_t j,
                                  std::size_t cap = default_chain_cap);

/// Comparison of causal order before and after a boost, matched through the
/// canonical re-sort's index permutation. Pairs within `guard` of the
/// lightcone (on the unboosted events) are skipped.
struct BoostCheckResult {
    std::size_t compared_pairs = 0;
    std::size_t differing_pairs = 0;
    std::size_t guarded_pairs = 0;

    bool identical() const { return differing_pairs == 0; }
};

BoostCheckResult boost_invariance_check(const Sprinkle& sprinkle, double beta,
                                        double guard = lightcone_tolerance);

}
