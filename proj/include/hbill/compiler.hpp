#pragma once
/**
 * @file compiler.hpp
 * @brief Word -> strongly admissible itinerary via a^n / b^m passages.
 *
 * A block a^n (n != 0) is realised by |n| - 1 zig-zag passages
 * (s, p(-1)^i) followed by a connector into the next block; the word starts
 * with an initial passage l_0. Connectors and zig-zag parities are chosen by a
 * depth-first search against a model polygon (corners on the angle bisectors),
 * whose chord letters must spell the target exactly.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hbill/admissibility.hpp"
#include "hbill/freegroup.hpp"

namespace hbill {

enum class Axis { a, b };

struct Block {
    Axis axis;
    long exponent;  ///< nonzero
};

struct BlockWord {
    std::vector<Block> blocks;

    static BlockWord from_word(const Word& w);
    static BlockWord parse(std::string_view text) { return from_word(Word::parse(text)); }
    Word word() const;
    std::size_t length() const;
};

struct CompiledItinerary {
    Itinerary centers;
    std::vector<PassageVector> passages;
    /// Passage index of the connector closing each block.
    std::vector<std::size_t> connectors;
    /// Interior centre indices at block boundaries (where idle pairs may go).
    std::vector<std::size_t> boundary_corners;
    std::size_t total_passages() const { return passages.size(); }
};

/// Throws InvalidModel unless 0 < r0 < sqrt(5)/10, Domain for an empty word,
/// Construction if no code is found or the result is not strongly admissible.
CompiledItinerary compile_code(const BlockWord& w, double r0);
inline Itinerary compile(const BlockWord& w, double r0) { return compile_code(w, r0).centers; }

/// Corner points of the model polygon: interior corners on the bisector of the
/// neighbour directions, end corners aimed at the adjacent model corner.
std::vector<Vec2> model_points(const Itinerary& it, double r0);
/// Unreduced crossing letters of the model polygon.
std::vector<Letter> predicted_letters(const Itinerary& it, double r0);

/// Number of distinct symbolic codes (l_0, ..., l_{n+1}) of an a^{n+1}-passage.
std::size_t enumerate_codes(long n, double r0 = 0.2);

/// Insert idle pairs k, k+alpha, k, ... at interior centre @p position, alpha the
/// diagonal towards the model corner. Throws Insertion when the result is not
/// strongly admissible or its model word changes.
Itinerary dilute(const Itinerary& it, long idle_pairs, std::size_t position, double r0);

/// Idle direction used by dilute at @p position.
PassageVector idle_direction(const Itinerary& it, std::size_t position, double r0);

}  // namespace hbill
