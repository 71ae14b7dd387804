#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace stanley {

/// A finite set of 1-based indices, used for variable sets, vertex sets, and
/// faces. Stored sorted and duplicate-free so that equality and ordering are
/// plain vector comparisons.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<int> indices);

    /// Sorts and deduplicates. Throws std::invalid_argument on indices < 1.
    explicit IndexSet(std::vector<int> indices);

    /// The full set {1, ..., n}.
    static IndexSet full(int n);

    bool contains(int index) const;
    bool is_subset_of(const IndexSet& other) const;

    /// This set with one index added (no-op if already present).
    IndexSet with(int index) const;
    /// This set with one index removed (no-op if absent).
    IndexSet without(int index) const;

    bool empty() const { return indices_.empty(); }
    std::size_t size() const { return indices_.size(); }
    const std::vector<int>& indices() const { return indices_; }

    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
        return a.indices_ <=> b.indices_;
    }

private:
    std::vector<int> indices_;
};

}  // namespace stanley
