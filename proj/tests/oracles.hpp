#pragma once

// Brute-force oracles kept independent of the library's probability kernels:
// everything here works by enumerating permutations and counting.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "dos/types.hpp"

namespace oracles {

/// All permutations of {1..n} (as global-rank sequences in arrival order).
inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

/// Local rank sequence of a permutation: ell_i = rank of item i among the
/// first i arrivals.
inline std::vector<int> local_ranks(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<int> ell(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int better = 0;
        for (int j = 0; j < i; ++j)
            if (perm[static_cast<std::size_t>(j)] < perm[static_cast<std::size_t>(i)]) ++better;
        ell[static_cast<std::size_t>(i)] = better + 1;
    }
    return ell;
}

/// Exact optimal expected reward conditional on |H| = h, by backward
/// induction on the trie of observable local-rank prefixes over all n!
/// permutations. Independent of the library's DP and kernels.
inline double brute_force_optimal(const dos::Instance& inst, int h) {
    const int n = inst.size();
    struct Node {
        long count = 0;
        double stop_sum = 0.0;            // sum of Y_{sigma(i)} over perms here
        std::map<int, int> children;      // local rank -> node id
    };
    std::vector<Node> trie(1);
    auto perms = all_permutations(n);
    for (const auto& perm : perms) {
        auto ell = local_ranks(perm);
        int node = 0;
        for (int i = 0; i < n; ++i) {
            auto [it, fresh] = trie[static_cast<std::size_t>(node)].children.try_emplace(
                ell[static_cast<std::size_t>(i)], static_cast<int>(trie.size()));
            if (fresh) trie.emplace_back();
            node = it->second;
            trie[static_cast<std::size_t>(node)].count += 1;
            trie[static_cast<std::size_t>(node)].stop_sum += inst.value(perm[static_cast<std::size_t>(i)]);
        }
    }
    // value(node at depth i): expected reward from the decision at step i
    // (stop allowed only when i > h) given the observed prefix
    auto rec = [&](auto&& self, int node, int depth) -> double {
        const Node& nd = trie[static_cast<std::size_t>(node)];
        double cont;
        if (depth == n) {
            cont = inst.default_tail();
        } else {
            double acc = 0.0;
            long total = 0;
            for (auto [ell, child] : nd.children) {
                acc += trie[static_cast<std::size_t>(child)].count * self(self, child, depth + 1);
                total += trie[static_cast<std::size_t>(child)].count;
            }
            cont = acc / static_cast<double>(total);
        }
        if (depth == 0 || depth <= h) return cont;
        double stop = nd.stop_sum / static_cast<double>(nd.count);
        return std::max(stop, cont);
    };
    return rec(rec, 0, 0);
}

/// P(item of global rank j at step i is ell-local), by counting permutations.
inline double count_local_rank_prob(int n, int i, int j, int ell) {
    auto perms = all_permutations(n);
    long hits = 0, total = 0;
    for (const auto& perm : perms) {
        if (perm[static_cast<std::size_t>(i - 1)] != j) continue;
        ++total;
        if (local_ranks(perm)[static_cast<std::size_t>(i - 1)] == ell) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(total);
}

/// P(best online value has rank j | history = first h arrivals), by counting.
inline double count_opt_dist_dependent(int n, int h, int j) {
    auto perms = all_permutations(n);
    long hits = 0;
    for (const auto& perm : perms) {
        int best = n + 1;
        for (int pos = h; pos < n; ++pos)
            best = std::min(best, perm[static_cast<std::size_t>(pos)]);
        if (best == j) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(perms.size());
}

}  // namespace oracles
