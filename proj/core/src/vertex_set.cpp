#include "heptalab/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace heptalab {

namespace {

std::size_t word_count(std::size_t universe)
{
    return (universe + VertexSet::word_bits - 1) / VertexSet::word_bits;
}

} // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe)
{
    if (!small())
        heap_.assign(word_count(universe), 0);
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe)
{
    for (Vertex v : members)
        insert(v);
}

VertexSet VertexSet::full(std::size_t universe)
{
    VertexSet s(universe);
    for (auto& w : s.mutable_words())
        w = ~std::uint64_t{0};
    s.trim();
    return s;
}

VertexSet VertexSet::from_range(std::size_t universe, std::span<const Vertex> members)
{
    VertexSet s(universe);
    for (Vertex v : members)
        s.insert(v);
    return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask)
{
    if (universe > word_bits)
        throw std::invalid_argument("VertexSet::from_mask needs a universe of at most 64 vertices");
    VertexSet s(universe);
    s.inline_ = mask;
    s.trim();
    return s;
}

std::span<const std::uint64_t> VertexSet::words() const noexcept
{
    if (small())
        return {&inline_, universe_ == 0 ? 0U : 1U};
    return heap_;
}

std::span<std::uint64_t> VertexSet::mutable_words() noexcept
{
    if (small())
        return {&inline_, universe_ == 0 ? 0U : 1U};
    return heap_;
}

void VertexSet::trim() noexcept
{
    auto w = mutable_words();
    if (w.empty())
        return;
    std::size_t tail = universe_ % word_bits;
    if (tail != 0)
        w.back() &= (std::uint64_t{1} << tail) - 1;
}

void VertexSet::insert(Vertex v)
{
    if (v >= universe_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                                std::to_string(universe_));
    mutable_words()[v / word_bits] |= std::uint64_t{1} << (v % word_bits);
}

void VertexSet::erase(Vertex v) noexcept
{
    if (v < universe_)
        mutable_words()[v / word_bits] &= ~(std::uint64_t{1} << (v % word_bits));
}

void VertexSet::clear() noexcept
{
    for (auto& w : mutable_words())
        w = 0;
}

std::size_t VertexSet::size() const noexcept
{
    std::size_t total = 0;
    for (auto w : words())
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::empty() const noexcept
{
    return std::ranges::all_of(words(), [](std::uint64_t w) { return w == 0; });
}

std::optional<Vertex> VertexSet::first() const noexcept
{
    auto w = words();
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0)
            return i * word_bits + static_cast<std::size_t>(std::countr_zero(w[i]));
    return std::nullopt;
}

std::optional<Vertex> VertexSet::next(Vertex v) const noexcept
{
    Vertex from = v + 1;
    if (from >= universe_)
        return std::nullopt;
    auto w = words();
    std::size_t i = from / word_bits;
    std::uint64_t cur = w[i] & (~std::uint64_t{0} << (from % word_bits));
    while (true) {
        if (cur != 0)
            return i * word_bits + static_cast<std::size_t>(std::countr_zero(cur));
        if (++i >= w.size())
            return std::nullopt;
        cur = w[i];
    }
}

bool VertexSet::intersects(const VertexSet& other) const noexcept
{
    auto a = words();
    auto b = other.words();
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        if ((a[i] & b[i]) != 0)
            return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept
{
    auto a = words();
    auto b = other.words();
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t bw = i < b.size() ? b[i] : 0;
        if ((a[i] & ~bw) != 0)
            return false;
    }
    return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept
{
    auto a = mutable_words();
    auto b = other.words();
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] &= i < b.size() ? b[i] : 0;
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept
{
    auto a = mutable_words();
    auto b = other.words();
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        a[i] |= b[i];
    trim();
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept
{
    auto a = mutable_words();
    auto b = other.words();
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        a[i] &= ~b[i];
    return *this;
}

VertexSet VertexSet::complement() const
{
    VertexSet out(universe_);
    auto src = words();
    auto dst = out.mutable_words();
    for (std::size_t i = 0; i < src.size(); ++i)
        dst[i] = ~src[i];
    out.trim();
    return out;
}

std::vector<Vertex> VertexSet::to_vector() const
{
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this)
        out.push_back(v);
    return out;
}

bool operator==(const VertexSet& a, const VertexSet& b) noexcept
{
    return a.universe_ == b.universe_ && std::ranges::equal(a.words(), b.words());
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) noexcept
{
    auto x = a.first();
    auto y = b.first();
    while (x && y) {
        if (*x != *y)
            return *x <=> *y;
        x = a.next(*x);
        y = b.next(*y);
    }
    if (x)
        return std::strong_ordering::greater;
    if (y)
        return std::strong_ordering::less;
    return a.universe_ <=> b.universe_;
}

} // namespace heptalab
