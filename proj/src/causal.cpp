#include "causet/causal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace causet {

CausalMatrix build_causal_matrix(const Sprinkle& s) {
    return build_causal_matrix(s.events);
}

CausalMatrix build_causal_matrix(std::vector<Event> events) {
    if (!std::is_sorted(events.begin(), events.end(), event_less)) {
        throw std::invalid_argument("build_causal_matrix: events not in canonical order");
    }
    const std::size_t n = events.size();
    CausalMatrix c{BitMatrix(n), std::move(events)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (precedes(c.events[i], c.events[j])) c.bits.set(i, j);
        }
    }
    return c;
}

LinkMatrix build_link_matrix(const CausalMatrix& causal) {
    const BitMatrix& c = causal.bits;
    if (!c.strictly_upper_triangular()) {
        throw std::invalid_argument("build_link_matrix: matrix not strictly upper triangular");
    }
    const std::size_t n = c.size();
    LinkMatrix links{BitMatrix(n)};
    std::vector<std::uint64_t> two_step(c.words_per_row());
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(two_step.begin(), two_step.end(), 0);
        c.for_each_in_row(i, [&](std::size_t k) {
            BitMatrix::or_into(two_step, c.row(k));
        });
        if (!BitMatrix::is_subset(two_step, c.row(i))) {
            throw std::invalid_argument("build_link_matrix: input relation is not transitive");
        }
        // keep exactly the relations with no two-step witness
        auto dst = links.bits.row(i);
        auto src = c.row(i);
        for (std::size_t w = 0; w < dst.size(); ++w) dst[w] = src[w] & ~two_step[w];
    }
    return links;
}

CausalMatrix transitive_closure(const LinkMatrix& links) {
    const BitMatrix& l = links.bits;
    if (!l.strictly_upper_triangular()) {
        throw std::invalid_argument("transitive_closure: matrix not strictly upper triangular");
    }
    const std::size_t n = l.size();
    CausalMatrix closure{BitMatrix(n), {}};
    for (std::size_t ii = n; ii-- > 0;) {
        l.for_each_in_row(ii, [&](std::size_t j) {
            closure.bits.set(ii, j);
            auto dst = closure.bits.row(ii);
            auto src = closure.bits.row(j);
            for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= src[w];
        });
    }
    return closure;
}

std::size_t longest_chain(const LinkMatrix& links, std::size_t i, std::size_t j) {
    if (i >= j || j >= links.size()) {
        throw std::invalid_argument("longest_chain: requires i < j < n");
    }
    // forward DP over the DAG; -1 marks unreachable
    std::vector<std::ptrdiff_t> best(j + 1, -1);
    best[i] = 0;
    for (std::size_t k = i; k < j; ++k) {
        if (best[k] < 0) continue;
        links.bits.for_each_in_row(k, [&](std::size_t s) {
            if (s <= j) best[s] = std::max(best[s], best[k] + 1);
        });
    }
    return best[j] < 0 ? 0 : static_cast<std::size_t>(best[j]);
}

std::size_t longest_chain(const LinkMatrix& links) {
    const std::size_t n = links.size();
    std::vector<std::size_t> len(n, 0);
    std::size_t overall = 0;
    for (std::size_t k = 0; k < n; ++k) {
        links.bits.for_each_in_row(k, [&](std::size_t s) {
            len[s] = std::max(len[s], len[k] + 1);
            overall = std::max(overall, len[s]);
        });
    }
    return overall;
}

ChainEnumeration enumerate_chains(const LinkMatrix& links, std::size_t i, std::size_t j,
                                  std::size_t cap) {
    return enumerate_chains(links.bits, i, j, cap);
}

ChainEnumeration enumerate_chains(const BitMatrix& relation, std::size_t i, std::size_t j,
                                  std::size_t cap) {
    if (i >= j || j >= relation.size()) {
        throw std::invalid_argument("enumerate_chains: requires i < j < n");
    }
    // Restricting the walk to vertices that can still reach j makes the
    // enumeration output-linear.
    std::vector<char> reaches(j + 1, 0);
    reaches[j] = 1;
    for (std::size_t v = j; v-- > i;) {
        relation.for_each_in_row(v, [&](std::size_t s) {
            if (s <= j && reaches[s]) reaches[v] = 1;
        });
    }

    ChainEnumeration out;
    if (!reaches[i]) return out;

    Chain path{i};
    auto dfs = [&](auto&& self, std::size_t v) -> bool {
        if (v == j) {
            if (out.chains.size() == cap) {
                out.truncated = true;
                return false;
            }
            out.chains.push_back(path);
            return true;
        }
        bool keep_going = true;
        relation.for_each_in_row(v, [&](std::size_t s) {
            if (!keep_going || s > j || !reaches[s]) return;
            path.push_back(s);
            keep_going = self(self, s);
            path.pop_back();
        });
        return keep_going;
    };
    dfs(dfs, i);
    return out;
}

BoostCheckResult boost_invariance_check(const Sprinkle& sprinkle, double beta, double guard) {
    const std::vector<Event>& original = sprinkle.events;
    const std::size_t n = original.size();
    const CausalMatrix c_orig = build_causal_matrix(original);

    struct Tagged {
        Event e;
        std::size_t orig;
    };
    std::vector<Tagged> boosted(n);
    for (std::size_t i = 0; i < n; ++i) boosted[i] = {boost(original[i], beta), i};
    std::sort(boosted.begin(), boosted.end(), [](const Tagged& a, const Tagged& b) {
        return event_less(a.e, b.e) || (a.e == b.e && a.orig < b.orig);
    });

    std::vector<Event> boosted_events(n);
    std::vector<std::size_t> position(n);  // original index -> boosted row
    for (std::size_t i = 0; i < n; ++i) {
        boosted_events[i] = boosted[i].e;
        position[boosted[i].orig] = i;
    }
    const CausalMatrix c_boost = build_causal_matrix(std::move(boosted_events));

    BoostCheckResult result;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const double dt = original[q].t - original[p].t;
            const double dx = original[q].x - original[p].x;
            if (std::abs(dt * dt - dx * dx) <= guard) {
                ++result.guarded_pairs;
                continue;
            }
            ++result.compared_pairs;
            const std::size_t a = position[p];
            const std::size_t b = position[q];
            const bool orig_rel = c_orig.bits.get(p, q);
            const bool boost_fwd = a < b ? c_boost.bits.get(a, b) : false;
            const bool boost_rev = b < a ? c_boost.bits.get(b, a) : false;
            if (boost_fwd != orig_rel || boost_rev) ++result.differing_pairs;
        }
    }
    return result;
}

}
