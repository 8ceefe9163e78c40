#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lci/errors.hpp"

namespace lci {

/// Ordered universe of distinct element labels. The position of a label in
/// the sequence is its internal index; all IndexSets are bit-sets over these
/// positions.
class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(static_cast<size_t>(i)); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<int> find(std::string_view label) const;
    /// Index of a label; throws DomainError when absent.
    int index_of(std::string_view label) const;

    /// True when every label is a single character (enables the compact
    /// "123" set rendering).
    bool single_char_labels() const;

    bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }
    bool operator!=(const GroundSet& other) const { return !(*this == other); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

/// Subset of a GroundSet, stored as packed 64-bit blocks. Value type:
/// equality is set equality, comparisons use the canonical
/// (cardinality, lexicographic-by-members) order.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(int universe_size);
    IndexSet(int universe_size, std::initializer_list<int> members);

    static IndexSet full(int universe_size);

    int universe_size() const { return n_; }
    bool test(int i) const;
    void set(int i);
    void reset(int i);

    int count() const;
    bool empty() const { return count() == 0; }
    bool is_full() const { return count() == n_; }

    bool subset_of(const IndexSet& other) const;
    bool superset_of(const IndexSet& other) const { return other.subset_of(*this); }
    bool intersects(const IndexSet& other) const;

    IndexSet set_union(const IndexSet& other) const;
    IndexSet set_intersect(const IndexSet& other) const;
    IndexSet set_difference(const IndexSet& other) const;
    IndexSet complement() const;

    std::vector<int> members() const;
    /// Lowest member index, or -1 when empty.
    int min_member() const;

    bool operator==(const IndexSet& other) const;
    bool operator!=(const IndexSet& other) const { return !(*this == other); }

    struct Hash {
        size_t operator()(const IndexSet& s) const;
    };

private:
    void check_universe(const IndexSet& other) const;

    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Canonical element order: cardinality first, then lexicographic by the
/// sorted member sequence. This order fixes all listings and golden output.
bool canonical_less(const IndexSet& a, const IndexSet& b);

/// Render a set of ground labels: concatenated when every label is a single
/// character ("123"), comma separated otherwise ("11,21,12"); "{}" when empty.
std::string set_to_string(const GroundSet& ground, const IndexSet& s);

/// Inverse of set_to_string for membership lists; accepts both the compact
/// and the comma-separated form. Unknown labels raise DomainError.
IndexSet set_from_labels(const GroundSet& ground, const std::vector<std::string>& labels);

} // namespace lci
