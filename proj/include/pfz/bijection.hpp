#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pfz/enumerate.hpp"
#include "pfz/insertion.hpp"
#include "pfz/parking_function.hpp"

namespace pfz {

// An element (f, g, D) of P(n): two zero-secdinv parking functions on
// disjoint domains plus an ordering of the remaining labels that starts with
// the minimal label of the ambient domain.
struct Triple {
    ParkingFunction f;
    ParkingFunction g;
    std::vector<Label> d_seq;

    std::vector<Label> ambient() const {
        std::vector<Label> all;
        all.reserve(f.size() + g.size() + d_seq.size());
        all.insert(all.end(), f.labels().begin(), f.labels().end());
        all.insert(all.end(), g.labels().begin(), g.labels().end());
        all.insert(all.end(), d_seq.begin(), d_seq.end());
        std::sort(all.begin(), all.end());
        return all;
    }

    friend bool operator==(const Triple& a, const Triple& b) {
        return a.f == b.f && a.g == b.g && a.d_seq == b.d_seq;
    }
    friend bool operator<(const Triple& a, const Triple& b) {
        if (!(a.f == b.f)) return a.f < b.f;
        if (!(a.g == b.g)) return a.g < b.g;
        return a.d_seq < b.d_seq;
    }
};

// The unvalidated parts of a triple, as produced by the inverse mechanics.
struct PsiParts {
    ParkingFunction f;
    ParkingFunction g;
    std::vector<Label> d_seq;
};

struct BlockMember {
    Label label;
    int row_offset;  // rows above the anchor, >= 1
    int col_offset;  // columns right of the anchor, >= 0

    friend bool operator==(const BlockMember&, const BlockMember&) = default;
};

// The bundle of above-diagonal labels attached to a main-diagonal anchor,
// stored by position relative to the anchor.  In a parking function every
// label occupies its own row, so the block spans exactly |members| rows and
// width(B) = |B|, height(B) = |B| + 1.
struct Block {
    Label anchor;
    std::vector<BlockMember> members;

    int width() const { return static_cast<int>(members.size()); }
    int height() const { return width() + 1; }

    friend bool operator==(const Block&, const Block&) = default;
};

struct BlockDecomposition {
    std::vector<Label> anchors;  // diagonal 0 of g, in column order
    std::vector<Block> blocks;   // aligned with anchors
};

struct PhaseTrace {
    std::vector<ParkingFunction> steps;
};

enum class SecdinvCheck { enforce, skip };

inline Triple make_triple(ParkingFunction f, ParkingFunction g, std::vector<Label> d_seq) {
    if (d_seq.empty())
        throw MinimalLabelMisplaced("D must be a nonempty sequence starting at the minimal label");
    std::vector<Label> all;
    all.insert(all.end(), f.labels().begin(), f.labels().end());
    all.insert(all.end(), g.labels().begin(), g.labels().end());
    all.insert(all.end(), d_seq.begin(), d_seq.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 1; i < all.size(); ++i)
        if (all[i] == all[i - 1])
            throw DomainsOverlap("label " + std::to_string(all[i]) +
                                 " appears in more than one component");
    if (d_seq.front() != all.front())
        throw MinimalLabelMisplaced("D must start with the minimal label " +
                                    std::to_string(all.front()));
    if (!f.zero_secdinv())
        throw NonzeroSecdinv("f has secondary dinv " + std::to_string(f.secdinv()));
    if (!g.zero_secdinv())
        throw NonzeroSecdinv("g has secondary dinv " + std::to_string(g.secdinv()));
    return Triple{std::move(f), std::move(g), std::move(d_seq)};
}

inline Triple make_triple(ParkingFunction f, ParkingFunction g, std::vector<Label> d_seq,
                          const std::vector<Label>& ambient) {
    Triple t = make_triple(std::move(f), std::move(g), std::move(d_seq));
    std::vector<Label> want(ambient);
    std::sort(want.begin(), want.end());
    if (t.ambient() != want)
        throw InvalidDecomposition("components do not cover the ambient domain");
    return t;
}

// Main-diagonal anchors of g with their blocks: block i holds the labels
// above diagonal 0 in columns [col(z_i), col(z_{i+1})), the last window
// extending to |dom(g)| + 1.
inline BlockDecomposition blocks_of(const ParkingFunction& g) {
    BlockDecomposition out;
    out.anchors = g.diagonal_set(0);
    const int t = static_cast<int>(out.anchors.size());
    for (int i = 0; i < t; ++i) {
        const Label z = out.anchors[i];
        const int lo = g.column(z);
        const int hi = i + 1 < t ? g.column(out.anchors[i + 1]) : g.size() + 1;
        std::vector<std::pair<std::pair<int, Label>, BlockMember>> found;
        for (Label x : g.labels()) {
            if (g.diagonal(x) <= 0) continue;
            const int c = g.column(x);
            if (c < lo || c >= hi) continue;
            found.push_back({{c, x}, {x, g.row(x) - g.row(z), c - lo}});
        }
        std::sort(found.begin(), found.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Block b{z, {}};
        b.members.reserve(found.size());
        for (auto& [key, m] : found) {
            (void)key;
            b.members.push_back(m);
        }
        out.blocks.push_back(std::move(b));
    }
    return out;
}

// The three phases of the insertion map, on raw parts.  Phase 1 special
// inserts D onto diagonal maxdiag(f) (0 and starting column 0 for empty f);
// phase 2 special inserts g's main diagonal onto the next diagonal up; phase
// 3 widens after each anchor and transports its block rigidly.  With
// SecdinvCheck::enforce every intermediate must have zero secondary dinv;
// skip runs the same diagram surgery without that gate (the parking-function
// validity of every intermediate is checked regardless).
inline ParkingFunction psi_phases(const ParkingFunction& f, const ParkingFunction& g,
                                  const std::vector<Label>& d_seq,
                                  SecdinvCheck check = SecdinvCheck::enforce,
                                  PhaseTrace* trace = nullptr) {
    if (d_seq.empty())
        throw MinimalLabelMisplaced("D must be nonempty");
    ParkingFunction h = f;
    if (trace) trace->steps.push_back(h);
    const auto step_check = [&](const ParkingFunction& cur, const char* phase) {
        if (check == SecdinvCheck::enforce && !cur.zero_secdinv())
            throw InternalValidityViolation(std::string(phase) +
                                            " produced secondary dinv " +
                                            std::to_string(cur.secdinv()));
        if (trace) trace->steps.push_back(cur);
    };

    // phase 1
    const int d = f.max_diag();
    int c = 0;
    if (!f.empty()) c = f.column(f.diagonal_set(d).back());
    for (std::size_t i = 0; i < d_seq.size(); ++i) {
        if (i > 0) c = h.column(d_seq[i - 1]);
        h = special_insert(h, d_seq[i], c, d);
        step_check(h, "phase 1");
    }

    // phase 2
    const BlockDecomposition bd = blocks_of(g);
    const int dd = d + 1;
    for (std::size_t i = 0; i < bd.anchors.size(); ++i) {
        c = i == 0 ? h.column(d_seq.front()) - 1 : h.column(bd.anchors[i - 1]);
        h = special_insert(h, bd.anchors[i], c, dd);
        step_check(h, "phase 2");
    }

    // phase 3
    for (const Block& b : bd.blocks) {
        const int w = b.width();
        if (w == 0) {
            if (trace) trace->steps.push_back(h);
            continue;
        }
        const int k = h.column(b.anchor);
        std::vector<std::pair<Label, int>> entries;
        entries.reserve(h.size() + w);
        for (const auto& [a, col] : h.entries())
            entries.emplace_back(a, col <= k ? col : col + w);
        for (const BlockMember& m : b.members) entries.emplace_back(m.label, k + m.col_offset);
        try {
            h = ParkingFunction::make(std::move(entries));
        } catch (const Error& e) {
            throw InternalValidityViolation(std::string("phase 3 broke validity: ") + e.what());
        }
        for (const BlockMember& m : b.members) {
            if (h.row(m.label) - h.row(b.anchor) != m.row_offset ||
                h.column(m.label) - h.column(b.anchor) != m.col_offset)
                throw InternalValidityViolation("phase 3 misplaced label " +
                                                std::to_string(m.label));
        }
        step_check(h, "phase 3");
    }
    return h;
}

inline ParkingFunction psi(const Triple& t, PhaseTrace* trace = nullptr) {
    return psi_phases(t.f, t.g, t.d_seq, SecdinvCheck::enforce, trace);
}

// Inverse mechanics: reads d = diag(min label), takes the anchors from
// diagonal d+1, extracts their blocks (diagonal > d+1) with offsets, rebuilds
// g on a fresh grid, removes block rows/columns from h, deletes the anchors
// in reverse column order, and reads D off diagonal d at columns >= the
// minimal label's.  Structural expectations that hold on every zero-secdinv
// input are verified and reported as ReconstructionInvalid.
inline PsiParts psi_inverse_phases(const ParkingFunction& h,
                                   SecdinvCheck check = SecdinvCheck::enforce) {
    if (h.empty())
        throw ReconstructionInvalid("the empty parking function has no triple preimage");
    if (check == SecdinvCheck::enforce && !h.zero_secdinv())
        throw NonzeroSecdinvInput("input has secondary dinv " + std::to_string(h.secdinv()));

    const Label m0 = h.min_label();
    const int d0 = h.diagonal(m0);
    const std::vector<Label> anchors = h.diagonal_set(d0 + 1);
    const int t = static_cast<int>(anchors.size());

    std::vector<std::vector<Label>> members(t);
    std::set<Label> all_members;
    for (int i = 0; i < t; ++i) {
        const int lo = h.column(anchors[i]);
        const int hi = i + 1 < t ? h.column(anchors[i + 1]) : h.size() + 1;
        std::vector<std::pair<std::pair<int, Label>, Label>> found;
        for (Label x : h.labels())
            if (h.diagonal(x) > d0 + 1 && h.column(x) >= lo && h.column(x) < hi)
                found.push_back({{h.column(x), x}, x});
        std::sort(found.begin(), found.end());
        for (auto& [key, x] : found) {
            (void)key;
            members[i].push_back(x);
            all_members.insert(x);
        }
    }
    for (Label x : h.labels())
        if (h.diagonal(x) > d0 + 1 && !all_members.contains(x))
            throw ReconstructionInvalid("label " + std::to_string(x) +
                                        " above diagonal " + std::to_string(d0 + 1) +
                                        " left of every anchor");

    // rebuild g
    ParkingFunction g;
    std::vector<std::pair<Label, int>> g_entries;
    {
        int pos = 1;
        for (int i = 0; i < t; ++i) {
            g_entries.emplace_back(anchors[i], pos);
            for (Label x : members[i]) {
                const int off = h.column(x) - h.column(anchors[i]);
                if (off < 0 || off > static_cast<int>(members[i].size()))
                    throw ReconstructionInvalid("block member " + std::to_string(x) +
                                                " offset exceeds the block width");
                g_entries.emplace_back(x, pos + off);
            }
            pos += static_cast<int>(members[i].size()) + 1;
        }
    }
    if (!g_entries.empty()) {
        try {
            g = ParkingFunction::make(g_entries);
        } catch (const Error& e) {
            throw ReconstructionInvalid(std::string("rebuilt g is not a parking function: ") +
                                        e.what());
        }
        for (int i = 0; i < t; ++i)
            for (Label x : members[i])
                if (g.row(x) - g.row(anchors[i]) != h.row(x) - h.row(anchors[i]))
                    throw ReconstructionInvalid("row offset of " + std::to_string(x) +
                                                " not preserved in g");
        if (g.diagonal_set(0) != anchors)
            throw ReconstructionInvalid("anchors are not the main diagonal of g");
        if (check == SecdinvCheck::enforce && !g.zero_secdinv())
            throw ReconstructionInvalid("rebuilt g has secondary dinv " +
                                        std::to_string(g.secdinv()));
    }

    // remove blocks from h
    std::set<int> removed_cols;
    for (int i = 0; i < t; ++i)
        for (std::size_t j = 1; j <= members[i].size(); ++j)
            removed_cols.insert(h.column(anchors[i]) + static_cast<int>(j));
    std::vector<std::pair<Label, int>> rest;
    for (const auto& [a, c] : h.entries()) {
        if (all_members.contains(a)) continue;
        if (removed_cols.contains(c))
            throw ReconstructionInvalid("label " + std::to_string(a) +
                                        " occupies a removed block column");
        const int shift = static_cast<int>(std::distance(
            removed_cols.begin(), removed_cols.lower_bound(c)));
        rest.emplace_back(a, c - shift);
    }
    ParkingFunction hp;
    try {
        hp = ParkingFunction::make(std::move(rest));
    } catch (const Error& e) {
        throw ReconstructionInvalid(std::string("block removal broke validity: ") + e.what());
    }
    for (Label a : hp.labels())
        if (hp.diagonal(a) != h.diagonal(a))
            throw ReconstructionInvalid("block removal moved label " + std::to_string(a) +
                                        " to another diagonal");

    // delete anchors z_t, ..., z_1
    for (int i = t - 1; i >= 0; --i) hp = erase(hp, anchors[i]);

    // extract D from diagonal d0, columns >= col(min label)
    if (hp.diagonal(m0) != d0)
        throw ReconstructionInvalid("anchor deletion moved the minimal label");
    std::vector<Label> d_seq;
    for (Label a : hp.diagonal_set(d0))
        if (hp.column(a) >= hp.column(m0)) d_seq.push_back(a);
    if (d_seq.empty() || d_seq.front() != m0)
        throw ReconstructionInvalid("minimal label is not leftmost in D");

    ParkingFunction f = hp;
    for (auto it = d_seq.rbegin(); it != d_seq.rend(); ++it) f = erase(f, *it);
    if (check == SecdinvCheck::enforce && !f.zero_secdinv())
        throw ReconstructionInvalid("residual f has secondary dinv " +
                                    std::to_string(f.secdinv()));
    return PsiParts{std::move(f), std::move(g), std::move(d_seq)};
}

inline Triple psi_inverse(const ParkingFunction& h) {
    PsiParts p = psi_inverse_phases(h, SecdinvCheck::enforce);
    return make_triple(std::move(p.f), std::move(p.g), std::move(p.d_seq));
}

// Every element of P(domain) exactly once, in a deterministic order: by |D|,
// then the choice and ordering of D, then the A/B split, then f and g in
// enumeration order.
template <typename Fn>
void for_each_triple(std::vector<Label> domain, Fn&& fn) {
    std::sort(domain.begin(), domain.end());
    if (domain.empty()) return;
    const Label m0 = domain.front();
    const std::vector<Label> rest(domain.begin() + 1, domain.end());
    const int r = static_cast<int>(rest.size());

    for (int k = 1; k <= static_cast<int>(domain.size()); ++k) {
        // (k-1)-subsets of rest, lexicographic
        std::vector<int> idx(k - 1);
        for (int i = 0; i < k - 1; ++i) idx[i] = i;
        while (true) {
            std::vector<Label> chosen;
            chosen.reserve(k - 1);
            std::vector<bool> in_e(r, false);
            for (int i : idx) {
                chosen.push_back(rest[i]);
                in_e[i] = true;
            }
            std::vector<Label> remaining;
            for (int i = 0; i < r; ++i)
                if (!in_e[i]) remaining.push_back(rest[i]);

            std::vector<Label> perm = chosen;
            do {
                std::vector<Label> d_seq;
                d_seq.reserve(k);
                d_seq.push_back(m0);
                d_seq.insert(d_seq.end(), perm.begin(), perm.end());
                const int m = static_cast<int>(remaining.size());
                for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
                    std::vector<Label> a_dom, b_dom;
                    for (int i = 0; i < m; ++i)
                        (bits >> i & 1u ? a_dom : b_dom).push_back(remaining[i]);
                    for_each_pfz(a_dom, [&](const ParkingFunction& f) {
                        for_each_pfz(b_dom, [&](const ParkingFunction& g) {
                            fn(make_triple(f, g, d_seq));
                        });
                    });
                }
            } while (std::next_permutation(perm.begin(), perm.end()));

            // advance combination
            if (k == 1) break;
            int i = k - 2;
            while (i >= 0 && idx[i] == r - (k - 1) + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k - 1; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

}  // namespace pfz
