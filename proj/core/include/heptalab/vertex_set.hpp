#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace heptalab {

using Vertex = std::size_t;

/// A subset of the vertex range [0, universe) of some graph.
///
/// Universes of at most 64 vertices live in a single inline machine word, so
/// the hot loops of the detectors never allocate. Larger universes fall back
/// to a heap row of words. All binary operations require equal universes.
class VertexSet {
public:
    static constexpr std::size_t word_bits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

    static VertexSet full(std::size_t universe);
    static VertexSet from_range(std::size_t universe, std::span<const Vertex> members);

    std::size_t universe() const noexcept { return universe_; }
    bool small() const noexcept { return universe_ <= word_bits; }

    bool contains(Vertex v) const noexcept
    {
        return v < universe_ && ((words()[v / word_bits] >> (v % word_bits)) & 1U);
    }
    void insert(Vertex v);
    void erase(Vertex v) noexcept;
    void clear() noexcept;

    std::size_t size() const noexcept;
    bool empty() const noexcept;
    std::optional<Vertex> first() const noexcept;
    /// Smallest member strictly greater than v.
    std::optional<Vertex> next(Vertex v) const noexcept;

    bool intersects(const VertexSet& other) const noexcept;
    bool is_subset_of(const VertexSet& other) const noexcept;

    VertexSet& operator&=(const VertexSet& other) noexcept;
    VertexSet& operator|=(const VertexSet& other) noexcept;
    /// Set difference.
    VertexSet& operator-=(const VertexSet& other) noexcept;

    friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }

    VertexSet complement() const;
    std::vector<Vertex> to_vector() const;

    /// Low word, valid only for small universes (fast paths use it directly).
    std::uint64_t mask() const noexcept { return inline_; }
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

    std::span<const std::uint64_t> words() const noexcept;

    friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept;
    /// Orders by the sorted member list (lexicographic).
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) noexcept;

    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const VertexSet* set, std::optional<Vertex> at) : set_(set), at_(at) {}

        Vertex operator*() const noexcept { return *at_; }
        iterator& operator++() noexcept
        {
            at_ = set_->next(*at_);
            return *this;
        }
        iterator operator++(int) noexcept
        {
            auto copy = *this;
            ++*this;
            return copy;
        }
        friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.at_ == b.at_; }

    private:
        const VertexSet* set_ = nullptr;
        std::optional<Vertex> at_;
    };

    iterator begin() const noexcept { return {this, first()}; }
    iterator end() const noexcept { return {this, std::nullopt}; }

private:
    std::span<std::uint64_t> mutable_words() noexcept;
    void trim() noexcept;

    std::size_t universe_ = 0;
    std::uint64_t inline_ = 0;
    std::vector<std::uint64_t> heap_;
};

} // namespace heptalab
