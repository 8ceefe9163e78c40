#include "lci/indexset.hpp"

#include <algorithm>
#include <bit>

namespace lci {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        if (labels_[static_cast<size_t>(i)].empty()) {
            throw DomainError("ground set label must be non-empty");
        }
        auto [it, inserted] = index_.emplace(labels_[static_cast<size_t>(i)], i);
        if (!inserted) {
            throw DomainError("duplicate ground set label: " + labels_[static_cast<size_t>(i)]);
        }
    }
}

std::optional<int> GroundSet::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int GroundSet::index_of(std::string_view label) const {
    auto idx = find(label);
    if (!idx) throw DomainError("unknown ground set label: " + std::string(label));
    return *idx;
}

bool GroundSet::single_char_labels() const {
    return std::all_of(labels_.begin(), labels_.end(),
                       [](const std::string& l) { return l.size() == 1; });
}

namespace {
constexpr int kBlockBits = 64;
int block_count(int n) { return (n + kBlockBits - 1) / kBlockBits; }
} // namespace

IndexSet::IndexSet(int universe_size) : n_(universe_size) {
    if (universe_size < 0) throw DomainError("negative universe size");
    bits_.assign(static_cast<size_t>(block_count(n_)), 0);
}

IndexSet::IndexSet(int universe_size, std::initializer_list<int> members) : IndexSet(universe_size) {
    for (int m : members) set(m);
}

IndexSet IndexSet::full(int universe_size) {
    IndexSet s(universe_size);
    for (int i = 0; i < universe_size; ++i) s.set(i);
    return s;
}

bool IndexSet::test(int i) const {
    if (i < 0 || i >= n_) return false;
    return (bits_[static_cast<size_t>(i / kBlockBits)] >> (i % kBlockBits)) & 1u;
}

void IndexSet::set(int i) {
    if (i < 0 || i >= n_) throw DomainError("index outside ground set");
    bits_[static_cast<size_t>(i / kBlockBits)] |= std::uint64_t(1) << (i % kBlockBits);
}

void IndexSet::reset(int i) {
    if (i < 0 || i >= n_) throw DomainError("index outside ground set");
    bits_[static_cast<size_t>(i / kBlockBits)] &= ~(std::uint64_t(1) << (i % kBlockBits));
}

int IndexSet::count() const {
    int c = 0;
    for (std::uint64_t b : bits_) c += std::popcount(b);
    return c;
}

void IndexSet::check_universe(const IndexSet& other) const {
    if (n_ != other.n_) throw DomainError("index sets over different universes");
}

bool IndexSet::subset_of(const IndexSet& other) const {
    check_universe(other);
    for (size_t k = 0; k < bits_.size(); ++k) {
        if (bits_[k] & ~other.bits_[k]) return false;
    }
    return true;
}

bool IndexSet::intersects(const IndexSet& other) const {
    check_universe(other);
    for (size_t k = 0; k < bits_.size(); ++k) {
        if (bits_[k] & other.bits_[k]) return true;
    }
    return false;
}

IndexSet IndexSet::set_union(const IndexSet& other) const {
    check_universe(other);
    IndexSet out(n_);
    for (size_t k = 0; k < bits_.size(); ++k) out.bits_[k] = bits_[k] | other.bits_[k];
    return out;
}

IndexSet IndexSet::set_intersect(const IndexSet& other) const {
    check_universe(other);
    IndexSet out(n_);
    for (size_t k = 0; k < bits_.size(); ++k) out.bits_[k] = bits_[k] & other.bits_[k];
    return out;
}

IndexSet IndexSet::set_difference(const IndexSet& other) const {
    check_universe(other);
    IndexSet out(n_);
    for (size_t k = 0; k < bits_.size(); ++k) out.bits_[k] = bits_[k] & ~other.bits_[k];
    return out;
}

IndexSet IndexSet::complement() const {
    return full(n_).set_difference(*this);
}

std::vector<int> IndexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (size_t k = 0; k < bits_.size(); ++k) {
        std::uint64_t b = bits_[k];
        while (b) {
            int bit = std::countr_zero(b);
            out.push_back(static_cast<int>(k) * kBlockBits + bit);
            b &= b - 1;
        }
    }
    return out;
}

int IndexSet::min_member() const {
    for (size_t k = 0; k < bits_.size(); ++k) {
        if (bits_[k]) return static_cast<int>(k) * kBlockBits + std::countr_zero(bits_[k]);
    }
    return -1;
}

bool IndexSet::operator==(const IndexSet& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
}

size_t IndexSet::Hash::operator()(const IndexSet& s) const {
    // FNV-style combine over blocks.
    size_t h = 1469598103934665603ull;
    for (std::uint64_t b : s.bits_) {
        h ^= static_cast<size_t>(b);
        h *= 1099511628211ull;
    }
    return h ^ static_cast<size_t>(s.n_);
}

bool canonical_less(const IndexSet& a, const IndexSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    // Same cardinality: compare sorted member sequences, i.e. the first
    // position where exactly one of them has a member decides.
    int n = std::max(a.universe_size(), b.universe_size());
    for (int i = 0; i < n; ++i) {
        bool ia = a.test(i), ib = b.test(i);
        if (ia != ib) return ia;
    }
    return false;
}

std::string set_to_string(const GroundSet& ground, const IndexSet& s) {
    if (s.empty()) return "{}";
    const bool compact = ground.single_char_labels();
    std::string out;
    bool first = true;
    for (int i : s.members()) {
        if (!first && !compact) out += ",";
        out += ground.label(i);
        first = false;
    }
    return out;
}

IndexSet set_from_labels(const GroundSet& ground, const std::vector<std::string>& labels) {
    IndexSet s(ground.size());
    for (const auto& l : labels) s.set(ground.index_of(l));
    return s;
}

} // namespace lci
