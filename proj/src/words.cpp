#include "freeshift/words.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_set>

namespace freeshift {

char Letter::to_char() const
{
    if (gen_ < 0 || gen_ >= 26)
        throw std::out_of_range("letter generator outside a..z");
    return static_cast<char>((inv_ ? 'A' : 'a') + gen_);
}

Letter Letter::from_char(char c)
{
    if (c >= 'a' && c <= 'z')
        return Letter(c - 'a', false);
    if (c >= 'A' && c <= 'Z')
        return Letter(c - 'A', true);
    throw std::invalid_argument(std::string("not a letter: '") + c + "'");
}

Word reduce(std::span<const Letter> letters)
{
    Word out;
    for (Letter s : letters)
        out = out * s;
    return out;
}

Word::Word(std::span<const Letter> letters)
{
    for (Letter s : letters) {
        if (!letters_.empty() && letters_.back() == s.inverse())
            letters_.pop_back();
        else
            letters_.push_back(s);
    }
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size()))
{
}

Word Word::parse(std::string_view text)
{
    if (text == "e" || text.empty())
        return {};
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text)
        letters.push_back(Letter::from_char(c));
    return Word(letters);
}

std::string Word::to_string() const
{
    if (letters_.empty())
        return "e";
    std::string out;
    out.reserve(letters_.size());
    for (Letter s : letters_)
        out.push_back(s.to_char());
    return out;
}

Word Word::inverse() const
{
    Word out;
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.letters_.push_back(it->inverse());
    return out;
}

Word Word::tail() const
{
    Word out;
    out.letters_.assign(letters_.begin() + 1, letters_.end());
    return out;
}

std::strong_ordering operator<=>(const Word& x, const Word& y)
{
    if (auto c = x.letters_.size() <=> y.letters_.size(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(x.letters_.begin(), x.letters_.end(),
                                                  y.letters_.begin(), y.letters_.end());
}

Word concat(const Word& u, const Word& v)
{
    const auto& a = u.letters();
    const auto& b = v.letters();
    std::size_t cancel = 0;
    while (cancel < a.size() && cancel < b.size() && a[a.size() - 1 - cancel] == b[cancel].inverse())
        ++cancel;
    std::vector<Letter> out;
    out.reserve(a.size() + b.size() - 2 * cancel);
    out.insert(out.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(cancel));
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(cancel), b.end());
    // already reduced; the span constructor re-checks in linear time
    return Word(out);
}

Word operator*(const Word& u, const Word& v) { return concat(u, v); }
Word operator*(const Word& u, Letter s) { return concat(u, Word::of(s)); }
Word operator*(Letter s, const Word& v) { return concat(Word::of(s), v); }

FreeGroup::FreeGroup(int rank) : rank_(rank)
{
    if (rank < 1 || rank > 26)
        throw std::invalid_argument("rank must be in 1..26");
}

std::vector<Letter> FreeGroup::letters() const
{
    std::vector<Letter> out;
    for (int c = 0; c < 2 * rank_; ++c)
        out.push_back(Letter::from_code(c));
    return out;
}

std::vector<Letter> FreeGroup::generators() const
{
    std::vector<Letter> out;
    for (int g = 0; g < rank_; ++g)
        out.emplace_back(g, false);
    return out;
}

bool FreeGroup::contains(const Word& w) const
{
    return std::all_of(w.letters().begin(), w.letters().end(), [&](Letter s) { return contains(s); });
}

std::vector<Word> FreeGroup::ball(int k) const
{
    std::vector<Word> out{Word()};
    std::size_t layer_begin = 0;
    const auto all = letters();
    for (int len = 1; len <= k; ++len) {
        const std::size_t layer_end = out.size();
        for (std::size_t i = layer_begin; i < layer_end; ++i) {
            for (Letter s : all) {
                if (!out[i].empty() && out[i].last() == s.inverse())
                    continue;
                out.push_back(out[i] * s);
            }
        }
        layer_begin = layer_end;
    }
    // each layer is generated in lexicographic order already
    return out;
}

std::uint64_t FreeGroup::ball_size(int k) const
{
    if (k < 0)
        return 0;
    if (rank_ == 1)
        return 2 * static_cast<std::uint64_t>(k) + 1;
    const std::uint64_t q = 2 * rank_ - 1;
    std::uint64_t pow = 1;
    for (int i = 0; i < k; ++i)
        pow *= q;
    return 1 + 2 * rank_ * (pow - 1) / (q - 1);
}

bool FreeGroup::is_connected(std::span<const Word> words) const
{
    if (words.empty())
        return false;
    std::set<Word> members(words.begin(), words.end());
    std::set<Word> seen{*members.begin()};
    std::queue<Word> todo;
    todo.push(*members.begin());
    const auto all = letters();
    while (!todo.empty()) {
        Word w = todo.front();
        todo.pop();
        for (Letter s : all) {
            Word n = w * s;
            if (members.contains(n) && seen.insert(n).second)
                todo.push(n);
        }
    }
    return seen.size() == members.size();
}

std::size_t radius_of(std::span<const Word> words)
{
    std::size_t r = 0;
    for (const auto& w : words)
        r = std::max(r, w.length());
    return r;
}

std::vector<Word> product_set(std::span<const Word> left, std::span<const Word> right)
{
    std::set<Word> out;
    for (const auto& u : left)
        for (const auto& v : right)
            out.insert(u * v);
    return {out.begin(), out.end()};
}

std::vector<Word> inverse_set(std::span<const Word> words)
{
    std::set<Word> out;
    for (const auto& w : words)
        out.insert(w.inverse());
    return {out.begin(), out.end()};
}

} // namespace freeshift

std::size_t std::hash<freeshift::Word>::operator()(const freeshift::Word& w) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (auto s : w.letters())
        h = (h ^ static_cast<std::size_t>(s.code() + 1)) * 1099511628211ull;
    return h;
}
