#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace setmax {

/// Subset of a ground set {0..n-1}, stored as a bit vector. The universal
/// currency of every oracle in this library. Element ids are canonical
/// integers; all iteration is in ascending id order.
class ElementSet {
public:
    ElementSet() = default;
    ElementSet(std::initializer_list<int> ids);
    static ElementSet from_ids(const std::vector<int>& ids);
    /// Full set {0..n-1}.
    static ElementSet all(int n);
    /// Set from the low 64 bits of a mask (bit i <=> element i).
    static ElementSet from_mask(std::uint64_t mask);

    bool contains(int id) const;
    void insert(int id);
    void erase(int id);

    bool empty() const;
    int size() const;
    int max_element() const; // -1 when empty
    int min_element() const; // -1 when empty

    bool subset_of(const ElementSet& other) const;
    bool intersects(const ElementSet& other) const;
    /// |this & other| without materializing the intersection.
    int intersection_size(const ElementSet& other) const;

    ElementSet& operator|=(const ElementSet& o);
    ElementSet& operator&=(const ElementSet& o);
    ElementSet& operator-=(const ElementSet& o);
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

    /// S + u / S - u without mutating this set.
    ElementSet with(int id) const;
    ElementSet without(int id) const;

    bool operator==(const ElementSet& o) const;
    bool operator!=(const ElementSet& o) const { return !(*this == o); }

    /// Compares as ascending id lists, lexicographically; a strict prefix is
    /// smaller. Returns <0, 0, >0. This is the tie-break order used by the
    /// solvers and audits.
    static int lex_compare(const ElementSet& a, const ElementSet& b);

    std::vector<int> to_vector() const; // ascending ids
    /// Bitmask of the members; requires max_element() < 64.
    std::uint64_t mask64() const;

    std::string to_string() const; // "{0,2,5}"

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int bit = __builtin_ctzll(bits);
                fn(static_cast<int>(w * 64) + bit);
                bits &= bits - 1;
            }
        }
    }

private:
    void trim();
    std::vector<std::uint64_t> words_; // no trailing zero words
};

} // namespace setmax
