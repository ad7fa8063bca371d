#pragma once

#include "freeshift/words.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace freeshift {

using Symbol = std::uint32_t;

/// Finite ordered alphabet of named tokens.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);
    /// Symbols named "0", "1", ..., "n-1".
    static Alphabet numbered(std::size_t n);

    std::size_t size() const { return names_.size(); }
    const std::string& name(Symbol s) const { return names_.at(s); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<Symbol> find(const std::string& name) const;
    Symbol at(const std::string& name) const;

    friend bool operator==(const Alphabet& x, const Alphabet& y) { return x.names_ == y.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Symbol> index_;
};

/// Function from a finite set of words to symbols. The key set is the support.
struct Pattern {
    std::map<Word, Symbol> values;

    std::vector<Word> support() const;
    std::optional<Symbol> at(const Word& w) const;

    friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

/// s·p: support s·F, (s·p)(f) = p(s⁻¹f).
Pattern translate_pattern(const Word& s, const Pattern& p);
/// True iff the two patterns agree on the intersection of their supports.
bool compatible(const Pattern& p1, const Pattern& p2);
/// Union of two compatible patterns.
Pattern merge(const Pattern& p1, const Pattern& p2);

/// An ordered finite set of words with O(1) lookup, shared between configs.
class Domain {
public:
    explicit Domain(std::vector<Word> words);

    const std::vector<Word>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    std::optional<std::size_t> index_of(const Word& w) const;
    bool contains(const Word& w) const { return index_.contains(w); }

    friend bool operator==(const Domain& x, const Domain& y) { return x.words_ == y.words_; }

private:
    std::vector<Word> words_;
    std::unordered_map<Word, std::size_t> index_;
};

using DomainPtr = std::shared_ptr<const Domain>;
DomainPtr make_domain(std::vector<Word> words);

/// A coloring of a finite set of words: the finite shadow of a point of A^G.
class WindowConfig {
public:
    WindowConfig(DomainPtr domain, std::vector<Symbol> values);

    template <class F>
    static WindowConfig tabulate(DomainPtr domain, F&& f)
    {
        std::vector<Symbol> values;
        values.reserve(domain->size());
        for (const auto& w : domain->words())
            values.push_back(f(w));
        return WindowConfig(std::move(domain), std::move(values));
    }

    const DomainPtr& domain() const { return domain_; }
    const std::vector<Symbol>& values() const { return values_; }
    std::optional<Symbol> find(const Word& w) const;
    /// Throws std::out_of_range if w is outside the domain.
    Symbol at(const Word& w) const;

    WindowConfig restrict_to(DomainPtr sub) const;
    /// Restriction at g: the pattern f ↦ c(g·f) on `support`, if g·support ⊆ domain.
    std::optional<Pattern> pattern_at(const Word& g, std::span<const Word> support) const;
    /// Relabels every value through `map`.
    WindowConfig map_symbols(const std::function<Symbol(Symbol)>& map) const;

    friend bool operator==(const WindowConfig& x, const WindowConfig& y);
    friend bool operator<(const WindowConfig& x, const WindowConfig& y) { return x.values_ < y.values_; }

private:
    DomainPtr domain_;
    std::vector<Symbol> values_;
};

/// Subshift of finite type given by forbidden patterns. The defining window is
/// stored explicitly; it always contains ε and every forbidden support.
class Sft {
public:
    Sft(int rank, Alphabet alphabet, std::vector<Pattern> forbidden, std::vector<Word> window);

    int rank() const { return rank_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Pattern>& forbidden() const { return forbidden_; }
    const std::vector<Word>& window() const { return window_; }

    struct Shape {
        std::vector<Word> support;
        std::set<std::vector<Symbol>> tuples;
    };
    /// Forbidden patterns grouped by support.
    const std::vector<Shape>& shapes() const { return shapes_; }

    /// True iff no forbidden translate fully inside the domain occurs in c.
    bool admits(const WindowConfig& c) const;

private:
    int rank_;
    Alphabet alphabet_;
    std::vector<Pattern> forbidden_;
    std::vector<Word> window_;
    std::vector<Shape> shapes_;
};

class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(std::size_t cap);
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

struct EnumerateOptions {
    std::size_t max_configs = 5'000'000;
    /// Optional constraint pinning the value at some words before search.
    std::map<Word, Symbol> pinned;
};

/// All locally admissible colorings of `domain`: no translate g·p of a forbidden
/// pattern with g·supp(p) ⊆ domain occurs. Depth-first in domain order, symbols
/// in alphabet order. Local admissibility only; says nothing about extension.
std::vector<WindowConfig> enumerate_window(const Sft& sft, std::span<const Word> domain,
                                           const EnumerateOptions& options = {});

/// Set of F-patterns on a fixed support.
struct WindowLanguage {
    std::vector<Word> support;
    std::set<Pattern> patterns;

    friend bool operator==(const WindowLanguage&, const WindowLanguage&) = default;
};

/// Every F-pattern occurring at some position g (with g·F inside the config domain).
WindowLanguage restrict_language(std::span<const WindowConfig> configs, std::span<const Word> support);

/// Encodes F-patterns over a base alphabet as single symbols of A^F (mixed radix,
/// first word of F least significant).
class PatternCodec {
public:
    PatternCodec(std::size_t base_size, std::vector<Word> support);

    std::size_t base_size() const { return base_; }
    const std::vector<Word>& support() const { return support_; }
    std::size_t symbol_count() const { return count_; }

    Symbol encode(const Pattern& p) const;
    Pattern decode(Symbol code) const;
    /// Value of the decoded pattern at support()[i].
    Symbol digit(Symbol code, std::size_t i) const;
    Alphabet alphabet(const Alphabet& base) const;

private:
    std::size_t base_;
    std::vector<Word> support_;
    std::size_t count_;
};

/// ι_F: reads x(g)(f) at g·f for every g in the domain and f in F. The result lives
/// on domain·F and its restriction to the domain is g ↦ x(g)(ε). Throws if two
/// readings of the same position disagree or if F⁻¹ is not connected.
WindowConfig iota(const FreeGroup& group, const PatternCodec& codec, const WindowConfig& c);

/// j_F: j(c)(g)(f) = c(g·f) for g in `target`. Throws, naming the missing words,
/// when target·F is not covered by the domain of c.
WindowConfig j_map(const FreeGroup& group, const PatternCodec& codec, const WindowConfig& c,
                   std::span<const Word> target);

/// X ⊔ Y over the tagged alphabet "L:" ⊔ "R:".
Sft disjoint_union(const Sft& x, const Sft& y);

/// The full shift on an alphabet (no forbidden patterns, window {ε}).
Sft full_shift(int rank, Alphabet alphabet);

} // namespace freeshift
