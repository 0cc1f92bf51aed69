#include "setmax/element_set.hpp"

#include <algorithm>
#include <bit>

#include "setmax/errors.hpp"

namespace setmax {

ElementSet::ElementSet(std::initializer_list<int> ids) {
    for (int id : ids) insert(id);
}

ElementSet ElementSet::from_ids(const std::vector<int>& ids) {
    ElementSet s;
    for (int id : ids) s.insert(id);
    return s;
}

ElementSet ElementSet::all(int n) {
    ElementSet s;
    if (n <= 0) return s;
    s.words_.assign((n + 63) / 64, ~std::uint64_t{0});
    const int rem = n % 64;
    if (rem != 0) s.words_.back() = (std::uint64_t{1} << rem) - 1;
    return s;
}

ElementSet ElementSet::from_mask(std::uint64_t mask) {
    ElementSet s;
    if (mask != 0) s.words_.push_back(mask);
    return s;
}

bool ElementSet::contains(int id) const {
    if (id < 0) return false;
    const std::size_t w = static_cast<std::size_t>(id) / 64;
    if (w >= words_.size()) return false;
    return (words_[w] >> (id % 64)) & 1u;
}

void ElementSet::insert(int id) {
    if (id < 0) throw parameter_error("negative element id");
    const std::size_t w = static_cast<std::size_t>(id) / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (id % 64);
}

void ElementSet::erase(int id) {
    if (id < 0) return;
    const std::size_t w = static_cast<std::size_t>(id) / 64;
    if (w >= words_.size()) return;
    words_[w] &= ~(std::uint64_t{1} << (id % 64));
    trim();
}

bool ElementSet::empty() const { return words_.empty(); }

int ElementSet::size() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

int ElementSet::max_element() const {
    if (words_.empty()) return -1;
    const std::size_t w = words_.size() - 1;
    return static_cast<int>(w * 64) + 63 - std::countl_zero(words_[w]);
}

int ElementSet::min_element() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
    return -1;
}

bool ElementSet::subset_of(const ElementSet& other) const {
    if (words_.size() > other.words_.size()) {
        for (std::size_t w = other.words_.size(); w < words_.size(); ++w)
            if (words_[w]) return false;
    }
    const std::size_t k = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < k; ++w)
        if (words_[w] & ~other.words_[w]) return false;
    return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
    const std::size_t k = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < k; ++w)
        if (words_[w] & other.words_[w]) return true;
    return false;
}

int ElementSet::intersection_size(const ElementSet& other) const {
    const std::size_t k = std::min(words_.size(), other.words_.size());
    int c = 0;
    for (std::size_t w = 0; w < k; ++w) c += std::popcount(words_[w] & other.words_[w]);
    return c;
}

ElementSet& ElementSet::operator|=(const ElementSet& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t w = 0; w < o.words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& o) {
    if (words_.size() > o.words_.size()) words_.resize(o.words_.size());
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    trim();
    return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& o) {
    const std::size_t k = std::min(words_.size(), o.words_.size());
    for (std::size_t w = 0; w < k; ++w) words_[w] &= ~o.words_[w];
    trim();
    return *this;
}

ElementSet ElementSet::with(int id) const {
    ElementSet s = *this;
    s.insert(id);
    return s;
}

ElementSet ElementSet::without(int id) const {
    ElementSet s = *this;
    s.erase(id);
    return s;
}

bool ElementSet::operator==(const ElementSet& o) const { return words_ == o.words_; }

int ElementSet::lex_compare(const ElementSet& a, const ElementSet& b) {
    // All elements below the lowest differing bit are shared. If that bit is
    // in a, then a's list reads smaller there unless b has already ended, in
    // which case b is a strict prefix of a.
    const std::size_t k = std::max(a.words_.size(), b.words_.size());
    for (std::size_t w = 0; w < k; ++w) {
        const std::uint64_t aw = w < a.words_.size() ? a.words_[w] : 0;
        const std::uint64_t bw = w < b.words_.size() ? b.words_[w] : 0;
        const std::uint64_t diff = aw ^ bw;
        if (diff == 0) continue;
        const int bit = std::countr_zero(diff);
        const bool in_a = (aw >> bit) & 1u;
        const ElementSet& loser = in_a ? b : a; // set lacking the bit
        // Does `loser` have any element above (w, bit)?
        std::uint64_t high = (w < loser.words_.size() ? loser.words_[w] : 0) &
                             ~((bit == 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (bit + 1)) - 1));
        bool loser_has_higher = high != 0;
        for (std::size_t w2 = w + 1; !loser_has_higher && w2 < loser.words_.size(); ++w2)
            loser_has_higher = loser.words_[w2] != 0;
        if (in_a) return loser_has_higher ? -1 : 1; // a < b unless b is a prefix
        return loser_has_higher ? 1 : -1;
    }
    return 0;
}

std::vector<int> ElementSet::to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int id) { out.push_back(id); });
    return out;
}

std::uint64_t ElementSet::mask64() const {
    if (max_element() >= 64) throw parameter_error("mask64: element id >= 64");
    return words_.empty() ? 0 : words_[0];
}

std::string ElementSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](int id) {
        if (!first) out += ",";
        out += std::to_string(id);
        first = false;
    });
    out += "}";
    return out;
}

void ElementSet::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

} // namespace setmax
