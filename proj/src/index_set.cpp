#include "stanley/index_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace stanley {

IndexSet::IndexSet(std::initializer_list<int> indices)
    : IndexSet(std::vector<int>(indices)) {}

IndexSet::IndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
    for (int i : indices_) {
        if (i < 1) throw std::invalid_argument("index sets hold 1-based indices");
    }
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

IndexSet IndexSet::full(int n) {
    std::vector<int> all(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    return IndexSet(std::move(all));
}

bool IndexSet::contains(int index) const {
    return std::binary_search(indices_.begin(), indices_.end(), index);
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
    return std::includes(other.indices_.begin(), other.indices_.end(),
                         indices_.begin(), indices_.end());
}

IndexSet IndexSet::with(int index) const {
    if (contains(index)) return *this;
    std::vector<int> out = indices_;
    out.insert(std::upper_bound(out.begin(), out.end(), index), index);
    IndexSet result;
    result.indices_ = std::move(out);
    return result;
}

IndexSet IndexSet::without(int index) const {
    IndexSet result = *this;
    auto it = std::lower_bound(result.indices_.begin(), result.indices_.end(), index);
    if (it != result.indices_.end() && *it == index) result.indices_.erase(it);
    return result;
}

}  // namespace stanley
