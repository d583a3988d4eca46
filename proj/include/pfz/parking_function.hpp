#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pfz {

// Labels are positive integers; the domain of a parking function is any
// finite set of them, not just [n].
using Label = int;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidLabel : Error { using Error::Error; };
struct DuplicateLabel : Error { using Error::Error; };
struct ColumnOutOfRange : Error { using Error::Error; };
struct ParkingConditionViolated : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };
struct LabelAlreadyPresent : Error { using Error::Error; };
struct PlaceOutOfRange : Error { using Error::Error; };
struct DomainsOverlap : Error { using Error::Error; };
struct MinimalLabelMisplaced : Error { using Error::Error; };
struct NonzeroSecdinv : Error { using Error::Error; };
struct InternalValidityViolation : Error { using Error::Error; };
struct NonzeroSecdinvInput : Error { using Error::Error; };
struct ReconstructionInvalid : Error { using Error::Error; };
struct InvalidDecomposition : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct BruteForceCapExceeded : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct FileUnreadable : Error { using Error::Error; };
struct MalformedLine : Error { using Error::Error; };

enum class DinvKind { primary, secondary };

// A dinv pair, written the way the statistic is usually stated:
// primary pairs as (i, j) with i < j, secondary pairs as (j, i) with i < j.
struct DinvPair {
    DinvKind kind;
    Label first;
    Label second;

    friend bool operator==(const DinvPair&, const DinvPair&) = default;
};

// North/East word of a lattice path from (0,0) to (n,n) that stays weakly
// above the main diagonal.
struct DyckPath {
    std::string steps;  // 'N' and 'E', length 2n

    int length() const { return static_cast<int>(steps.size()) / 2; }

    bool valid() const {
        int north = 0, east = 0;
        for (char s : steps) {
            if (s == 'N') ++north;
            else if (s == 'E') ++east;
            else return false;
            if (east > north) return false;
        }
        return north == east;
    }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
};

// A parking function in function form: a map from a finite label set to
// columns [1, n] satisfying the parking condition.  Rows, diagonals and the
// Dyck path are derived, never stored input; values are immutable after
// construction.
class ParkingFunction {
public:
    ParkingFunction() = default;  // the unique parking function on the empty domain

    // Validates and constructs.  Rows are derived by ranking the labels by
    // (column, label): the diagram's strict decrease down each column forces
    // exactly this assignment.
    static ParkingFunction make(std::vector<std::pair<Label, int>> entries) {
        ParkingFunction f;
        const int n = static_cast<int>(entries.size());
        std::sort(entries.begin(), entries.end());
        for (int i = 0; i < n; ++i) {
            if (entries[i].first < 1)
                throw InvalidLabel("label " + std::to_string(entries[i].first) +
                                   " is not a positive integer");
            if (i > 0 && entries[i].first == entries[i - 1].first)
                throw DuplicateLabel("label " + std::to_string(entries[i].first) +
                                     " appears more than once");
            if (entries[i].second < 1 || entries[i].second > n)
                throw ColumnOutOfRange("column " + std::to_string(entries[i].second) +
                                       " of label " + std::to_string(entries[i].first) +
                                       " is outside [1, " + std::to_string(n) + "]");
        }
        std::vector<int> per_column(n + 1, 0);
        for (const auto& [a, c] : entries) {
            (void)a;
            ++per_column[c];
        }
        int seen = 0;
        for (int i = 1; i <= n; ++i) {
            seen += per_column[i];
            if (seen < i)
                throw ParkingConditionViolated(
                    "only " + std::to_string(seen) + " labels in columns <= " +
                    std::to_string(i));
        }
        f.labels_.reserve(n);
        f.cols_.reserve(n);
        for (const auto& [a, c] : entries) {
            f.labels_.push_back(a);
            f.cols_.push_back(c);
        }
        f.derive_rows();
        return f;
    }

    // Function form on [n]: word[i] is the column of label i+1.
    static ParkingFunction from_word(const std::vector<int>& word) {
        std::vector<std::pair<Label, int>> entries;
        entries.reserve(word.size());
        for (std::size_t i = 0; i < word.size(); ++i)
            entries.emplace_back(static_cast<Label>(i) + 1, word[i]);
        return make(std::move(entries));
    }

    int size() const { return static_cast<int>(labels_.size()); }
    bool empty() const { return labels_.empty(); }

    // Domain in ascending order.
    const std::vector<Label>& labels() const { return labels_; }

    bool contains(Label a) const {
        return std::binary_search(labels_.begin(), labels_.end(), a);
    }

    Label min_label() const {
        if (empty()) throw UnknownLabel("empty parking function has no labels");
        return labels_.front();
    }

    int column(Label a) const { return cols_[index_of(a)]; }
    int row(Label a) const { return rows_[index_of(a)]; }
    int diagonal(Label a) const {
        const int i = index_of(a);
        return rows_[i] - cols_[i];
    }

    // Labels on diagonal d, ordered by column ascending.
    std::vector<Label> diagonal_set(int d) const {
        std::vector<std::pair<int, Label>> hits;
        for (int i = 0; i < size(); ++i)
            if (rows_[i] - cols_[i] == d) hits.emplace_back(cols_[i], labels_[i]);
        std::sort(hits.begin(), hits.end());
        std::vector<Label> out;
        out.reserve(hits.size());
        for (const auto& [c, a] : hits) {
            (void)c;
            out.push_back(a);
        }
        return out;
    }

    // Highest occupied diagonal; 0 for the empty function by convention.
    int max_diag() const {
        int m = 0;
        for (int i = 0; i < size(); ++i) m = std::max(m, rows_[i] - cols_[i]);
        return m;
    }

    // Primary pairs: i < j on the same diagonal with col(i) < col(j).
    // Secondary pairs: i < j with diag(i) = diag(j) - 1 and col(i) > col(j),
    // recorded as (j, i).
    std::vector<DinvPair> dinv_pairs() const {
        std::vector<DinvPair> out;
        const int n = size();
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Label i = labels_[p], j = labels_[q];
                const int di = rows_[p] - cols_[p], dj = rows_[q] - cols_[q];
                if (di == dj && cols_[p] < cols_[q])
                    out.push_back({DinvKind::primary, i, j});
                else if (di == dj - 1 && cols_[p] > cols_[q])
                    out.push_back({DinvKind::secondary, j, i});
            }
        }
        return out;
    }

    int pridinv() const {
        int k = 0;
        const int n = size();
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                if (rows_[p] - cols_[p] == rows_[q] - cols_[q] && cols_[p] < cols_[q]) ++k;
        return k;
    }

    int secdinv() const {
        int k = 0;
        const int n = size();
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                if (rows_[p] - cols_[p] == rows_[q] - cols_[q] - 1 && cols_[p] > cols_[q]) ++k;
        return k;
    }

    int dinv() const { return pridinv() + secdinv(); }
    bool zero_secdinv() const { return secdinv() == 0; }

    DyckPath dyck_path() const {
        const int n = size();
        std::vector<int> per_column(n + 1, 0);
        for (int c : cols_) ++per_column[c];
        DyckPath p;
        p.steps.reserve(2 * n);
        for (int c = 1; c <= n; ++c) {
            p.steps.append(per_column[c], 'N');
            p.steps.push_back('E');
        }
        return p;
    }

    // (label, column) pairs, labels ascending.
    std::vector<std::pair<Label, int>> entries() const {
        std::vector<std::pair<Label, int>> out;
        out.reserve(labels_.size());
        for (int i = 0; i < size(); ++i) out.emplace_back(labels_[i], cols_[i]);
        return out;
    }

    // Columns in label order (the usual vector notation when the domain is [n]).
    std::vector<int> word() const { return cols_; }

    bool domain_is_range() const {
        for (int i = 0; i < size(); ++i)
            if (labels_[i] != i + 1) return false;
        return true;
    }

    friend bool operator==(const ParkingFunction& a, const ParkingFunction& b) {
        return a.labels_ == b.labels_ && a.cols_ == b.cols_;
    }

    friend bool operator<(const ParkingFunction& a, const ParkingFunction& b) {
        if (a.labels_ != b.labels_) return a.labels_ < b.labels_;
        return a.cols_ < b.cols_;
    }

private:
    int index_of(Label a) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), a);
        if (it == labels_.end() || *it != a)
            throw UnknownLabel("label " + std::to_string(a) + " is not in the domain");
        return static_cast<int>(it - labels_.begin());
    }

    void derive_rows() {
        const int n = size();
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int p, int q) {
            if (cols_[p] != cols_[q]) return cols_[p] < cols_[q];
            return labels_[p] < labels_[q];
        });
        rows_.assign(n, 0);
        for (int r = 0; r < n; ++r) rows_[order[r]] = r + 1;
    }

    std::vector<Label> labels_;  // ascending
    std::vector<int> cols_;      // aligned with labels_
    std::vector<int> rows_;      // derived
};

}  // namespace pfz
