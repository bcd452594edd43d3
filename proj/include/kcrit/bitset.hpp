#pragma once

/**
 * Fixed-width bitset over a compile-time number of 64-bit words, with fast
 * iteration over set bits. Used as adjacency rows and vertex sets.
 */

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace kcrit {

template <std::size_t Words>
class Bitset
{
public:
    static constexpr std::size_t words = Words;
    static constexpr int capacity = static_cast<int>(Words * 64);

    constexpr Bitset() = default;

    static auto first_n(int n) -> Bitset
    {
        Bitset b;
        for (int i = 0; i < n; ++i)
            b.set(i);
        return b;
    }

    auto set(int i) -> void { _w[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    auto reset(int i) -> void { _w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    auto flip(int i) -> void { _w[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }
    auto test(int i) const -> bool { return (_w[i >> 6] >> (i & 63)) & 1U; }

    auto count() const -> int
    {
        int c = 0;
        for (auto w : _w)
            c += std::popcount(w);
        return c;
    }

    auto any() const -> bool
    {
        for (auto w : _w)
            if (w)
                return true;
        return false;
    }

    auto none() const -> bool { return ! any(); }

    /// Lowest set bit, or -1.
    auto first() const -> int
    {
        for (std::size_t i = 0; i < Words; ++i)
            if (_w[i])
                return static_cast<int>(i * 64) + std::countr_zero(_w[i]);
        return -1;
    }

    /// Lowest set bit strictly greater than i, or -1.
    auto next(int i) const -> int
    {
        ++i;
        if (i >= capacity)
            return -1;
        std::size_t wi = static_cast<std::size_t>(i >> 6);
        std::uint64_t w = _w[wi] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w)
                return static_cast<int>(wi * 64) + std::countr_zero(w);
            if (++wi == Words)
                return -1;
            w = _w[wi];
        }
    }

    template <typename F>
    auto for_each(F && f) const -> void
    {
        for (std::size_t i = 0; i < Words; ++i) {
            std::uint64_t w = _w[i];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(i * 64) + b);
                w &= w - 1;
            }
        }
    }

    auto to_vector() const -> std::vector<int>
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    auto intersects(const Bitset & o) const -> bool
    {
        for (std::size_t i = 0; i < Words; ++i)
            if (_w[i] & o._w[i])
                return true;
        return false;
    }

    auto is_subset_of(const Bitset & o) const -> bool
    {
        for (std::size_t i = 0; i < Words; ++i)
            if (_w[i] & ~o._w[i])
                return false;
        return true;
    }

    auto intersect_count(const Bitset & o) const -> int
    {
        int c = 0;
        for (std::size_t i = 0; i < Words; ++i)
            c += std::popcount(_w[i] & o._w[i]);
        return c;
    }

    auto operator&=(const Bitset & o) -> Bitset &
    {
        for (std::size_t i = 0; i < Words; ++i)
            _w[i] &= o._w[i];
        return *this;
    }

    auto operator|=(const Bitset & o) -> Bitset &
    {
        for (std::size_t i = 0; i < Words; ++i)
            _w[i] |= o._w[i];
        return *this;
    }

    auto operator^=(const Bitset & o) -> Bitset &
    {
        for (std::size_t i = 0; i < Words; ++i)
            _w[i] ^= o._w[i];
        return *this;
    }

    /// this := this & ~o
    auto subtract(const Bitset & o) -> Bitset &
    {
        for (std::size_t i = 0; i < Words; ++i)
            _w[i] &= ~o._w[i];
        return *this;
    }

    friend auto operator&(Bitset a, const Bitset & b) -> Bitset { return a &= b; }
    friend auto operator|(Bitset a, const Bitset & b) -> Bitset { return a |= b; }
    friend auto operator^(Bitset a, const Bitset & b) -> Bitset { return a ^= b; }
    friend auto operator-(Bitset a, const Bitset & b) -> Bitset { return a.subtract(b); }

    auto operator==(const Bitset &) const -> bool = default;
    auto operator<=>(const Bitset &) const = default;

    auto word(std::size_t i) const -> std::uint64_t { return _w[i]; }

private:
    std::array<std::uint64_t, Words> _w{};
};

}
