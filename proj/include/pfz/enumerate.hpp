#pragma once

#include <cstdint>
#include <future>
#include <thread>
#include <utility>
#include <vector>

#include "pfz/parking_function.hpp"

namespace pfz {

namespace detail {

// A partial assignment of the first `assigned` columns extends to a parking
// function iff for every i, #(columns <= i) >= i - (remaining unassigned):
// the remaining labels can always be parked in column 1.
inline bool prefix_feasible(const std::vector<int>& per_column, int n, int assigned) {
    const int slack = n - assigned;
    int prefix = 0;
    for (int i = 1; i <= n; ++i) {
        prefix += per_column[i];
        if (prefix < i - slack) return false;
    }
    return true;
}

template <typename Fn>
void pf_dfs(const std::vector<Label>& labels, std::size_t pos, std::vector<int>& cols,
            std::vector<int>& per_column, Fn&& fn) {
    const int n = static_cast<int>(labels.size());
    if (pos == labels.size()) {
        std::vector<std::pair<Label, int>> entries;
        entries.reserve(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i)
            entries.emplace_back(labels[i], cols[i]);
        fn(ParkingFunction::make(std::move(entries)));
        return;
    }
    for (int v = 1; v <= n; ++v) {
        ++per_column[v];
        if (prefix_feasible(per_column, n, static_cast<int>(pos) + 1)) {
            cols[pos] = v;
            pf_dfs(labels, pos + 1, cols, per_column, fn);
        }
        --per_column[v];
    }
}

}  // namespace detail

// Every parking function on the domain exactly once, lexicographic in
// function form with labels sorted ascending.
template <typename Fn>
void for_each_pf(std::vector<Label> domain, Fn&& fn) {
    std::sort(domain.begin(), domain.end());
    const int n = static_cast<int>(domain.size());
    std::vector<int> cols(n, 0), per_column(n + 1, 0);
    detail::pf_dfs(domain, 0, cols, per_column, fn);
}

// Partition piece: parking functions whose smallest label sits in the given
// column.  The pieces over first_col = 1..n are disjoint and exhaustive.
template <typename Fn>
void for_each_pf_first_column(std::vector<Label> domain, int first_col, Fn&& fn) {
    std::sort(domain.begin(), domain.end());
    const int n = static_cast<int>(domain.size());
    if (n == 0 || first_col < 1 || first_col > n) return;
    std::vector<int> cols(n, 0), per_column(n + 1, 0);
    cols[0] = first_col;
    ++per_column[first_col];
    if (detail::prefix_feasible(per_column, n, 1))
        detail::pf_dfs(domain, 1, cols, per_column, fn);
}

template <typename Fn>
void for_each_pfz(std::vector<Label> domain, Fn&& fn) {
    for_each_pf(std::move(domain), [&](const ParkingFunction& f) {
        if (f.zero_secdinv()) fn(f);
    });
}

inline std::uint64_t count_pf_brute(std::vector<Label> domain) {
    std::uint64_t k = 0;
    for_each_pf(std::move(domain), [&](const ParkingFunction&) { ++k; });
    return k;
}

inline std::uint64_t count_pfz_brute(std::vector<Label> domain) {
    std::uint64_t k = 0;
    for_each_pfz(std::move(domain), [&](const ParkingFunction&) { ++k; });
    return k;
}

// Parallel brute-force count of PFZ(domain): one task per first-label column,
// partial counts combine by addition.
inline std::uint64_t count_pfz_brute_parallel(std::vector<Label> domain, unsigned threads = 0) {
    std::sort(domain.begin(), domain.end());
    const int n = static_cast<int>(domain.size());
    if (n == 0) return 1;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads == 1 || n == 1) return count_pfz_brute(std::move(domain));
    std::vector<std::future<std::uint64_t>> parts;
    parts.reserve(n);
    for (int c = 1; c <= n; ++c) {
        parts.push_back(std::async(std::launch::async, [domain, c]() {
            std::uint64_t k = 0;
            for_each_pf_first_column(domain, c, [&](const ParkingFunction& f) {
                if (f.zero_secdinv()) ++k;
            });
            return k;
        }));
    }
    std::uint64_t total = 0;
    for (auto& p : parts) total += p.get();
    return total;
}

}  // namespace pfz
