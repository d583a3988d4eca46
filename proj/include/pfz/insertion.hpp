#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pfz/parking_function.hpp"

namespace pfz {

// Insertion of x into place k.  Labels in earlier columns (or in column k but
// smaller than x) keep their column; everything else shifts one column right.
// The result is always a valid parking function on domain(f) + {x}.
inline ParkingFunction insert(const ParkingFunction& f, Label x, int place) {
    if (x < 1) throw InvalidLabel("label " + std::to_string(x) + " is not a positive integer");
    if (f.contains(x))
        throw LabelAlreadyPresent("label " + std::to_string(x) + " already present");
    if (place < 1 || place > f.size() + 1)
        throw PlaceOutOfRange("place " + std::to_string(place) + " is outside [1, " +
                              std::to_string(f.size() + 1) + "]");
    std::vector<std::pair<Label, int>> entries;
    entries.reserve(f.size() + 1);
    for (const auto& [a, c] : f.entries()) {
        if (c < place || (c == place && a < x))
            entries.emplace_back(a, c);
        else
            entries.emplace_back(a, c + 1);
    }
    entries.emplace_back(x, place);
    return ParkingFunction::make(std::move(entries));
}

// Exact inverse of insert: removes x and closes the gap by shifting every
// later column one step left.  Removing a label can never break the parking
// condition (prefix counts only grow relative to the bound), but the result
// is validated anyway.
inline ParkingFunction erase(const ParkingFunction& h, Label x) {
    const int k = h.column(x);  // throws UnknownLabel
    std::vector<std::pair<Label, int>> entries;
    entries.reserve(h.size() - 1);
    for (const auto& [a, c] : h.entries()) {
        if (a == x) continue;
        entries.emplace_back(a, c <= k ? c : c - 1);
    }
    return ParkingFunction::make(std::move(entries));
}

// (c,d)-insertion: places x on diagonal d in a column beyond c, guided by the
// labels y_1 < ... < y_m (by column) on diagonal d-1 strictly right of column
// c.  l* is the largest index with y_l < x (0 if none; labels are distinct,
// so this matches the minimal-l characterisation); the target place is
// col(y_l*) when l* > 0 and c+1 otherwise.  For d = 0 the guide list comes
// from diagonal -1 and is empty.
inline ParkingFunction special_insert(const ParkingFunction& h, Label x, int c, int d) {
    if (c < 0 || d < 0)
        throw PlaceOutOfRange("special insertion needs c >= 0 and d >= 0");
    std::vector<Label> guides;
    if (d > 0) {
        for (Label y : h.diagonal_set(d - 1))
            if (h.column(y) > c) guides.push_back(y);
    }
    int place = c + 1;
    for (int l = static_cast<int>(guides.size()); l >= 1; --l) {
        if (guides[l - 1] < x) {
            place = h.column(guides[l - 1]);
            break;
        }
    }
    return insert(h, x, place);
}

// Preconditions of the secdinv-preservation claim for (c,d)-insertion:
// (1) d is the highest occupied diagonal and no label right of column c
//     reaches it;
// (2) some label sits in column c on diagonal d at the top of its column.
inline bool claim_preconditions_hold(const ParkingFunction& f, int c, int d) {
    if (f.empty() || d != f.max_diag()) return false;
    for (Label y : f.labels())
        if (f.column(y) > c && f.diagonal(y) >= d) return false;
    for (Label a : f.labels()) {
        if (f.column(a) != c || f.diagonal(a) != d) continue;
        bool top = true;
        for (Label b : f.labels())
            if (f.column(b) == c && b > a) { top = false; break; }
        if (top) return true;
    }
    return false;
}

}  // namespace pfz
