#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace coxjsj {

// A set of generators, stored as sorted unique indices into a diagram's
// generator list. Comparison is lexicographic on the sorted index sequence,
// which is the tie-break order used everywhere in this library.
class GeneratorSubset {
public:
    GeneratorSubset() = default;

    static GeneratorSubset of(std::vector<int> indices) {
        GeneratorSubset s;
        std::sort(indices.begin(), indices.end());
        indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
        s.indices_ = std::move(indices);
        return s;
    }

    static GeneratorSubset of(std::initializer_list<int> indices) {
        return of(std::vector<int>(indices));
    }

    const std::vector<int>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }

    bool contains(int g) const {
        return std::binary_search(indices_.begin(), indices_.end(), g);
    }

    bool is_subset_of(const GeneratorSubset& other) const {
        return std::includes(other.indices_.begin(), other.indices_.end(),
                             indices_.begin(), indices_.end());
    }

    GeneratorSubset united(const GeneratorSubset& other) const {
        GeneratorSubset out;
        std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                       other.indices_.end(), std::back_inserter(out.indices_));
        return out;
    }

    GeneratorSubset intersected(const GeneratorSubset& other) const {
        GeneratorSubset out;
        std::set_intersection(indices_.begin(), indices_.end(), other.indices_.begin(),
                              other.indices_.end(), std::back_inserter(out.indices_));
        return out;
    }

    GeneratorSubset minus(const GeneratorSubset& other) const {
        GeneratorSubset out;
        std::set_difference(indices_.begin(), indices_.end(), other.indices_.begin(),
                            other.indices_.end(), std::back_inserter(out.indices_));
        return out;
    }

    GeneratorSubset with(int g) const { return united(of({g})); }
    GeneratorSubset without(int g) const { return minus(of({g})); }

    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }

    friend auto operator<=>(const GeneratorSubset&, const GeneratorSubset&) = default;

private:
    std::vector<int> indices_;
};

}  // namespace coxjsj
