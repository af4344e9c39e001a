#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rb {

/// Index into the symmetric generating alphabet of a presentation. The
/// alphabet order is the shortlex base order.
using Letter = std::int16_t;

using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

/// Distances and Gromov products are half-integers; we store doubled values
/// so that all arithmetic and comparisons stay exact.
struct HalfInt {
    int halves = 0;

    static constexpr HalfInt of(int whole) { return HalfInt{2 * whole}; }
    constexpr double value() const { return halves / 2.0; }
    constexpr bool is_whole() const { return halves % 2 == 0; }
    constexpr auto operator<=>(const HalfInt&) const = default;
    constexpr HalfInt operator+(HalfInt o) const { return {halves + o.halves}; }
    constexpr HalfInt operator-(HalfInt o) const { return {halves - o.halves}; }
    constexpr HalfInt operator*(int k) const { return {halves * k}; }
};

std::string to_string(HalfInt h);

inline Word to_word(WordView v) { return Word(v.begin(), v.end()); }

/// Free reduction against an explicit inverse pairing.
Word free_reduce(WordView w, std::span<const Letter> inv);

Word inverse_word(WordView w, std::span<const Letter> inv);

Word concat(WordView a, WordView b);

/// Shortlex order: length first, then lexicographic by letter index.
bool shortlex_less(WordView a, WordView b);

bool words_equal(WordView a, WordView b);

/// Cyclic rotation w[k..] + w[..k].
Word rotate(WordView w, std::size_t k);

bool is_freely_reduced(WordView w, std::span<const Letter> inv);
bool is_cyclically_reduced(WordView w, std::span<const Letter> inv);

} // namespace rb
