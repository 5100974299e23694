#pragma once
/**
 * @file freegroup.hpp
 * @brief Reduced words in the free group F2 = <a, b>, the Cayley-tree metric,
 *        ends approximated by finite prefixes, and points of the rotation cone.
 *
 * Text form uses the alphabet {a, A, b, B} with A = a^-1 and B = b^-1.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hbill {

enum class Letter : std::uint8_t { a, A, b, B };

constexpr Letter inverse(Letter l) noexcept {
    switch (l) {
        case Letter::a: return Letter::A;
        case Letter::A: return Letter::a;
        case Letter::b: return Letter::B;
        case Letter::B: return Letter::b;
    }
    return l;
}

constexpr bool is_x_letter(Letter l) noexcept { return l == Letter::a || l == Letter::A; }
constexpr int letter_sign(Letter l) noexcept { return (l == Letter::a || l == Letter::b) ? 1 : -1; }
char to_char(Letter l) noexcept;
/// Throws Parse for characters outside {a, A, b, B}.
Letter letter_from_char(char c);

/// A reduced word. Construction always reduces, so the invariant cannot be broken.
class Word {
public:
    Word() = default;
    explicit Word(std::span<const Letter> letters);
    /// Parses and reduces a string such as "abAB".
    static Word parse(std::string_view text);

    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    Word inverse() const;
    /// Word of the first @p n letters (n clamped to length()).
    Word prefix(std::size_t n) const;
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// Free reduction by stack scan.
Word reduce(std::span<const Letter> letters);
Word concat(const Word& w1, const Word& w2);
/// Left-invariant tree distance ||w1^-1 w2||.
std::size_t cayley_distance(const Word& w1, const Word& w2);
/// Number of reduced words of length <= n. Throws Domain for n < 0.
std::uint64_t ball_count(int n);
/// Number of reduced words of length exactly n (4 * 3^(n-1), 1 for n = 0).
std::uint64_t sphere_count(int n);
Word longest_common_prefix(const Word& w1, const Word& w2);
/// All reduced words of length exactly n, in lexicographic order over a < A < b < B.
std::vector<Word> enumerate_words(int n);

/**
 * Cylinder of ends beginning with @p stem, optionally continued by repeating
 * @p period forever (an eventually periodic end).
 */
struct EndPrefix {
    Word stem;
    Word period;
    bool declared_infinite{false};

    /// Eventually periodic end stem * period^infinity. The concatenation must
    /// stay reduced; throws Domain otherwise (e.g. period "aA" or "ab" after "B").
    static EndPrefix periodic(const Word& stem, const Word& period);
    /// Reduced prefix of the end with exactly @p depth letters (finite ends are
    /// truncated to their length).
    Word prefix(std::size_t depth) const;
};

/// Point (speed, end) of the cone; the direction is meaningless at speed 0.
struct ConePoint {
    double speed{0.0};
    std::optional<EndPrefix> direction;

    bool is_vertex() const noexcept { return speed == 0.0; }
};

}  // namespace hbill
