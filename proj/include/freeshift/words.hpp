#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace freeshift {

/// A generator of the free group or its inverse. Ordered by generator index,
/// then positive before inverse (a < A < b < B < ...).
class Letter {
public:
    constexpr Letter() = default;
    constexpr Letter(int generator, bool inverted) : gen_(generator), inv_(inverted) {}

    static constexpr Letter from_code(int code) { return Letter(code / 2, code % 2 != 0); }

    constexpr int generator() const { return gen_; }
    constexpr bool inverted() const { return inv_; }
    constexpr int sign() const { return inv_ ? -1 : 1; }
    /// Dense index in [0, 2d): 2 * generator + (inverted ? 1 : 0).
    constexpr int code() const { return 2 * gen_ + (inv_ ? 1 : 0); }
    constexpr Letter inverse() const { return Letter(gen_, !inv_); }

    /// 'a'..'z' for generators, capitals for inverses.
    char to_char() const;
    static Letter from_char(char c);

    friend constexpr auto operator<=>(Letter x, Letter y) { return x.code() <=> y.code(); }
    friend constexpr bool operator==(Letter x, Letter y) = default;

private:
    int gen_ = 0;
    bool inv_ = false;
};

/// A reduced word. The empty word is the identity.
class Word {
public:
    Word() = default;
    /// Freely reduces the given letters.
    explicit Word(std::span<const Letter> letters);
    Word(std::initializer_list<Letter> letters);

    static Word identity() { return {}; }
    static Word of(Letter s) { return Word({s}); }

    /// Parses "abA"; "e" or "" is the identity. The input need not be reduced.
    static Word parse(std::string_view text);
    std::string to_string() const;

    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter first() const { return letters_.front(); }
    Letter last() const { return letters_.back(); }

    Word inverse() const;
    /// Drops the first letter (the word must be non-empty).
    Word tail() const;

    /// Shortlex order: length first, then lexicographic in letter order.
    friend std::strong_ordering operator<=>(const Word& x, const Word& y);
    friend bool operator==(const Word& x, const Word& y) = default;

private:
    std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence.
Word reduce(std::span<const Letter> letters);
/// Reduced product u·v.
Word concat(const Word& u, const Word& v);
Word operator*(const Word& u, const Word& v);
Word operator*(const Word& u, Letter s);
Word operator*(Letter s, const Word& v);

/// Free group of rank d on generators a, b, c, ...
class FreeGroup {
public:
    explicit FreeGroup(int rank);

    int rank() const { return rank_; }
    /// S = S0 ∪ S0⁻¹ in letter order.
    std::vector<Letter> letters() const;
    std::vector<Letter> generators() const;
    int letter_count() const { return 2 * rank_; }
    bool contains(Letter s) const { return s.generator() >= 0 && s.generator() < rank_; }
    bool contains(const Word& w) const;

    /// All reduced words of length at most k, in shortlex order.
    std::vector<Word> ball(int k) const;
    /// Closed-form |B_k|.
    std::uint64_t ball_size(int k) const;

    /// Whether the Cayley-graph induced subgraph on `words` is connected.
    bool is_connected(std::span<const Word> words) const;

private:
    int rank_;
};

/// Maximum word length in a set.
std::size_t radius_of(std::span<const Word> words);

/// Pointwise products {u·v : u ∈ left, v ∈ right}, sorted and deduplicated.
std::vector<Word> product_set(std::span<const Word> left, std::span<const Word> right);
std::vector<Word> inverse_set(std::span<const Word> words);

} // namespace freeshift

template <>
struct std::hash<freeshift::Word> {
    std::size_t operator()(const freeshift::Word& w) const noexcept;
};
