#include "hbill/freegroup.hpp"

#include <algorithm>

#include "hbill/error.hpp"

namespace hbill {

char to_char(Letter l) noexcept {
    switch (l) {
        case Letter::a: return 'a';
        case Letter::A: return 'A';
        case Letter::b: return 'b';
        case Letter::B: return 'B';
    }
    return '?';
}

Letter letter_from_char(char c) {
    switch (c) {
        case 'a': return Letter::a;
        case 'A': return Letter::A;
        case 'b': return Letter::b;
        case 'B': return Letter::B;
        default: break;
    }
    throw Error(ErrorCode::Parse, std::string("bad letter '") + c + "'");
}

Word reduce(std::span<const Letter> letters) { return Word(letters); }

Word::Word(std::span<const Letter> letters) {
    letters_.reserve(letters.size());
    for (Letter l : letters) {
        if (!letters_.empty() && letters_.back() == hbill::inverse(l)) {
            letters_.pop_back();
        } else {
            letters_.push_back(l);
        }
    }
}

Word Word::parse(std::string_view text) {
    std::vector<Letter> ls;
    ls.reserve(text.size());
    for (char c : text) ls.push_back(letter_from_char(c));
    return Word(ls);
}

Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(hbill::inverse(*it));
    return w;
}

Word Word::prefix(std::size_t n) const {
    Word w;
    n = std::min(n, letters_.size());
    w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n));
    return w;
}

std::string Word::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter l : letters_) s.push_back(to_char(l));
    return s;
}

Word concat(const Word& w1, const Word& w2) {
    const auto& x = w1.letters();
    const auto& y = w2.letters();
    // Cancel the overlap directly instead of re-reducing the whole product.
    std::size_t k = 0;
    while (k < x.size() && k < y.size() && x[x.size() - 1 - k] == inverse(y[k])) ++k;
    std::vector<Letter> out(x.begin(), x.end() - static_cast<std::ptrdiff_t>(k));
    out.insert(out.end(), y.begin() + static_cast<std::ptrdiff_t>(k), y.end());
    return Word(out);
}

std::size_t cayley_distance(const Word& w1, const Word& w2) {
    return concat(w1.inverse(), w2).length();
}

std::uint64_t sphere_count(int n) {
    if (n < 0) throw Error(ErrorCode::Domain, "negative word length");
    if (n == 0) return 1;
    std::uint64_t c = 4;
    for (int i = 1; i < n; ++i) c *= 3;
    return c;
}

std::uint64_t ball_count(int n) {
    if (n < 0) throw Error(ErrorCode::Domain, "negative ball radius");
    if (n == 0) return 1;
    return 2 * (sphere_count(n) / 4 * 3) - 1;  // 2 * 3^n - 1
}

Word longest_common_prefix(const Word& w1, const Word& w2) {
    const auto& x = w1.letters();
    const auto& y = w2.letters();
    std::size_t k = 0;
    while (k < x.size() && k < y.size() && x[k] == y[k]) ++k;
    return w1.prefix(k);
}

std::vector<Word> enumerate_words(int n) {
    if (n < 0) throw Error(ErrorCode::Domain, "negative word length");
    std::vector<std::vector<Letter>> layer{{}};
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<Letter>> next;
        next.reserve(layer.size() * 4);
        for (const auto& w : layer) {
            for (Letter l : {Letter::a, Letter::A, Letter::b, Letter::B}) {
                if (!w.empty() && w.back() == inverse(l)) continue;
                auto v = w;
                v.push_back(l);
                next.push_back(std::move(v));
            }
        }
        layer = std::move(next);
    }
    std::vector<Word> out;
    out.reserve(layer.size());
    for (const auto& w : layer) out.emplace_back(w);
    return out;
}

EndPrefix EndPrefix::periodic(const Word& stem, const Word& period) {
    if (period.empty()) throw Error(ErrorCode::Domain, "empty period");
    const auto& p = period.letters();
    if (p.front() == inverse(p.back())) throw Error(ErrorCode::Domain, "period is not cyclically reduced");
    if (!stem.empty() && stem.letters().back() == inverse(p.front())) {
        throw Error(ErrorCode::Domain, "stem and period cancel");
    }
    return EndPrefix{stem, period, true};
}

Word EndPrefix::prefix(std::size_t depth) const {
    std::vector<Letter> out(stem.letters().begin(), stem.letters().end());
    if (out.size() >= depth || period.empty()) {
        out.resize(std::min(out.size(), depth));
        return Word(out);
    }
    for (std::size_t i = 0; out.size() < depth; ++i) out.push_back(period[i % period.length()]);
    return Word(out);
}

}  // namespace hbill
