#include "freeshift/patterns.hpp"

#include <algorithm>
#include <sstream>

namespace freeshift {

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names))
{
    if (names_.empty())
        throw std::invalid_argument("alphabet must be nonempty");
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (!index_.emplace(names_[i], static_cast<Symbol>(i)).second)
            throw std::invalid_argument("duplicate alphabet symbol '" + names_[i] + "'");
}

Alphabet Alphabet::numbered(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(std::to_string(i));
    return Alphabet(std::move(names));
}

std::optional<Symbol> Alphabet::find(const std::string& name) const
{
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Symbol Alphabet::at(const std::string& name) const
{
    if (auto s = find(name))
        return *s;
    throw std::invalid_argument("unknown symbol '" + name + "'");
}

// ---------------------------------------------------------------------------
// Patterns

std::vector<Word> Pattern::support() const
{
    std::vector<Word> out;
    out.reserve(values.size());
    for (const auto& [w, _] : values)
        out.push_back(w);
    return out;
}

std::optional<Symbol> Pattern::at(const Word& w) const
{
    auto it = values.find(w);
    if (it == values.end())
        return std::nullopt;
    return it->second;
}

Pattern translate_pattern(const Word& s, const Pattern& p)
{
    Pattern out;
    for (const auto& [f, v] : p.values)
        out.values.emplace(s * f, v);
    return out;
}

bool compatible(const Pattern& p1, const Pattern& p2)
{
    const auto& small = p1.values.size() <= p2.values.size() ? p1 : p2;
    const auto& large = p1.values.size() <= p2.values.size() ? p2 : p1;
    for (const auto& [w, v] : small.values) {
        auto other = large.at(w);
        if (other && *other != v)
            return false;
    }
    return true;
}

Pattern merge(const Pattern& p1, const Pattern& p2)
{
    if (!compatible(p1, p2))
        throw std::invalid_argument("merge of incompatible patterns");
    Pattern out = p1;
    out.values.insert(p2.values.begin(), p2.values.end());
    return out;
}

// ---------------------------------------------------------------------------
// Domains and configs

Domain::Domain(std::vector<Word> words) : words_(std::move(words))
{
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    index_.reserve(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i)
        index_.emplace(words_[i], i);
}

std::optional<std::size_t> Domain::index_of(const Word& w) const
{
    auto it = index_.find(w);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

DomainPtr make_domain(std::vector<Word> words) { return std::make_shared<const Domain>(std::move(words)); }

WindowConfig::WindowConfig(DomainPtr domain, std::vector<Symbol> values)
    : domain_(std::move(domain)), values_(std::move(values))
{
    if (!domain_ || domain_->size() != values_.size())
        throw std::invalid_argument("config values do not match its domain");
}

std::optional<Symbol> WindowConfig::find(const Word& w) const
{
    auto i = domain_->index_of(w);
    if (!i)
        return std::nullopt;
    return values_[*i];
}

Symbol WindowConfig::at(const Word& w) const
{
    auto i = domain_->index_of(w);
    if (!i)
        throw std::out_of_range("word " + w.to_string() + " outside config domain");
    return values_[*i];
}

WindowConfig WindowConfig::restrict_to(DomainPtr sub) const
{
    return tabulate(std::move(sub), [&](const Word& w) { return at(w); });
}

std::optional<Pattern> WindowConfig::pattern_at(const Word& g, std::span<const Word> support) const
{
    Pattern p;
    for (const auto& f : support) {
        auto v = find(g * f);
        if (!v)
            return std::nullopt;
        p.values.emplace(f, *v);
    }
    return p;
}

WindowConfig WindowConfig::map_symbols(const std::function<Symbol(Symbol)>& map) const
{
    std::vector<Symbol> out;
    out.reserve(values_.size());
    for (Symbol s : values_)
        out.push_back(map(s));
    return WindowConfig(domain_, std::move(out));
}

bool operator==(const WindowConfig& x, const WindowConfig& y)
{
    return x.values_ == y.values_ && (x.domain_ == y.domain_ || *x.domain_ == *y.domain_);
}

// ---------------------------------------------------------------------------
// SFTs

Sft::Sft(int rank, Alphabet alphabet, std::vector<Pattern> forbidden, std::vector<Word> window)
    : rank_(rank), alphabet_(std::move(alphabet)), forbidden_(std::move(forbidden)), window_(std::move(window))
{
    FreeGroup group(rank_);
    std::sort(window_.begin(), window_.end());
    window_.erase(std::unique(window_.begin(), window_.end()), window_.end());
    if (!std::binary_search(window_.begin(), window_.end(), Word()))
        throw std::invalid_argument("defining window must contain the identity");
    for (const auto& w : window_)
        if (!group.contains(w))
            throw std::invalid_argument("window word " + w.to_string() + " uses a letter outside the rank");

    std::map<std::vector<Word>, std::size_t> by_support;
    for (const auto& p : forbidden_) {
        if (p.values.empty())
            throw std::invalid_argument("forbidden pattern with empty support");
        std::vector<Symbol> tuple;
        for (const auto& [w, v] : p.values) {
            if (!std::binary_search(window_.begin(), window_.end(), w))
                throw std::invalid_argument("forbidden support word " + w.to_string() + " outside the window");
            if (v >= alphabet_.size())
                throw std::invalid_argument("forbidden pattern uses a symbol outside the alphabet");
            tuple.push_back(v);
        }
        auto support = p.support();
        auto [it, fresh] = by_support.emplace(support, shapes_.size());
        if (fresh)
            shapes_.push_back(Shape{std::move(support), {}});
        shapes_[it->second].tuples.insert(std::move(tuple));
    }
}

bool Sft::admits(const WindowConfig& c) const
{
    for (const auto& shape : shapes_) {
        std::set<Word> candidates;
        for (const auto& d : c.domain()->words())
            for (const auto& f : shape.support)
                candidates.insert(d * f.inverse());
        for (const auto& g : candidates) {
            std::vector<Symbol> tuple;
            bool inside = true;
            for (const auto& f : shape.support) {
                auto v = c.find(g * f);
                if (!v) {
                    inside = false;
                    break;
                }
                tuple.push_back(*v);
            }
            if (inside && shape.tuples.contains(tuple))
                return false;
        }
    }
    return true;
}

CapExceeded::CapExceeded(std::size_t cap)
    : std::runtime_error("window enumeration cap exceeded (" + std::to_string(cap) + " configs)"), cap_(cap)
{
}

namespace {

struct Check {
    const std::set<std::vector<Symbol>>* tuples;
    std::vector<std::size_t> positions;
};

} // namespace

std::vector<WindowConfig> enumerate_window(const Sft& sft, std::span<const Word> domain_words,
                                           const EnumerateOptions& options)
{
    FreeGroup group(sft.rank());
    auto domain = make_domain({domain_words.begin(), domain_words.end()});
    if (!domain->contains(Word()))
        throw std::invalid_argument("window domain must contain the identity");
    if (!group.is_connected(domain->words()))
        throw std::invalid_argument("window domain must be connected");

    const std::size_t n = domain->size();
    // checks[i]: translates whose last position (in domain order) is i
    std::vector<std::vector<Check>> checks(n);
    for (const auto& shape : sft.shapes()) {
        std::set<Word> candidates;
        for (const auto& d : domain->words())
            for (const auto& f : shape.support)
                candidates.insert(d * f.inverse());
        for (const auto& g : candidates) {
            Check check{&shape.tuples, {}};
            for (const auto& f : shape.support) {
                auto i = domain->index_of(g * f);
                if (!i)
                    break;
                check.positions.push_back(*i);
            }
            if (check.positions.size() != shape.support.size())
                continue;
            auto last = *std::max_element(check.positions.begin(), check.positions.end());
            checks[last].push_back(std::move(check));
        }
    }

    std::vector<std::optional<Symbol>> pinned(n);
    for (const auto& [w, v] : options.pinned) {
        if (auto i = domain->index_of(w))
            pinned[*i] = v;
    }

    std::vector<WindowConfig> out;
    std::vector<Symbol> values(n, 0);
    std::vector<Symbol> tuple;
    const auto q = static_cast<Symbol>(sft.alphabet().size());

    auto consistent = [&](std::size_t i) {
        for (const auto& check : checks[i]) {
            tuple.clear();
            for (auto p : check.positions)
                tuple.push_back(values[p]);
            if (check.tuples->contains(tuple))
                return false;
        }
        return true;
    };

    auto search = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            if (out.size() >= options.max_configs)
                throw CapExceeded(options.max_configs);
            out.emplace_back(domain, values);
            return;
        }
        Symbol lo = 0;
        Symbol hi = q;
        if (pinned[i]) {
            lo = *pinned[i];
            hi = lo + 1;
        }
        for (Symbol s = lo; s < hi; ++s) {
            values[i] = s;
            if (consistent(i))
                self(self, i + 1);
        }
    };
    search(search, 0);
    return out;
}

WindowLanguage restrict_language(std::span<const WindowConfig> configs, std::span<const Word> support)
{
    WindowLanguage lang;
    lang.support.assign(support.begin(), support.end());
    std::sort(lang.support.begin(), lang.support.end());
    // positions are cached per distinct domain
    const Domain* cached = nullptr;
    std::vector<Word> positions;
    for (const auto& c : configs) {
        if (c.domain().get() != cached) {
            std::set<Word> candidates;
            for (const auto& d : c.domain()->words())
                for (const auto& f : lang.support)
                    candidates.insert(d * f.inverse());
            positions.clear();
            for (const auto& g : candidates) {
                bool inside = std::all_of(lang.support.begin(), lang.support.end(),
                                          [&](const Word& f) { return c.domain()->contains(g * f); });
                if (inside)
                    positions.push_back(g);
            }
            cached = c.domain().get();
        }
        for (const auto& g : positions)
            lang.patterns.insert(*c.pattern_at(g, lang.support));
    }
    return lang;
}

// ---------------------------------------------------------------------------
// Pattern alphabet A^F and the maps ι_F, j_F

PatternCodec::PatternCodec(std::size_t base_size, std::vector<Word> support)
    : base_(base_size), support_(std::move(support)), count_(1)
{
    if (base_ == 0)
        throw std::invalid_argument("empty base alphabet");
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (count_ > (std::size_t{1} << 31) / base_)
            throw std::invalid_argument("pattern alphabet too large");
        count_ *= base_;
    }
}

Symbol PatternCodec::encode(const Pattern& p) const
{
    std::size_t code = 0;
    std::size_t scale = 1;
    for (const auto& f : support_) {
        auto v = p.at(f);
        if (!v || *v >= base_)
            throw std::invalid_argument("pattern does not match codec support");
        code += *v * scale;
        scale *= base_;
    }
    return static_cast<Symbol>(code);
}

Symbol PatternCodec::digit(Symbol code, std::size_t i) const
{
    std::size_t c = code;
    for (std::size_t k = 0; k < i; ++k)
        c /= base_;
    return static_cast<Symbol>(c % base_);
}

Pattern PatternCodec::decode(Symbol code) const
{
    Pattern p;
    std::size_t c = code;
    for (const auto& f : support_) {
        p.values.emplace(f, static_cast<Symbol>(c % base_));
        c /= base_;
    }
    return p;
}

Alphabet PatternCodec::alphabet(const Alphabet& base) const
{
    if (base.size() != base_)
        throw std::invalid_argument("base alphabet size mismatch");
    std::vector<std::string> names;
    names.reserve(count_);
    for (std::size_t code = 0; code < count_; ++code) {
        std::string name = "{";
        auto p = decode(static_cast<Symbol>(code));
        bool first = true;
        for (const auto& [f, v] : p.values) {
            if (!first)
                name += ",";
            first = false;
            name += f.to_string() + ":" + base.name(v);
        }
        name += "}";
        names.push_back(std::move(name));
    }
    return Alphabet(std::move(names));
}

namespace {

void require_window_shape(const FreeGroup& group, const std::vector<Word>& support)
{
    if (!std::binary_search(support.begin(), support.end(), Word()))
        throw std::invalid_argument("pattern support must contain the identity");
    if (!group.is_connected(inverse_set(support)))
        throw std::invalid_argument("F^-1 is not connected");
}

} // namespace

WindowConfig iota(const FreeGroup& group, const PatternCodec& codec, const WindowConfig& c)
{
    require_window_shape(group, codec.support());
    const auto& support = codec.support();
    auto domain = make_domain(product_set(c.domain()->words(), support));
    std::vector<std::optional<Symbol>> values(domain->size());
    for (std::size_t gi = 0; gi < c.domain()->size(); ++gi) {
        const Word& g = c.domain()->words()[gi];
        const Symbol code = c.values()[gi];
        if (code >= codec.symbol_count())
            throw std::invalid_argument("config symbol outside the pattern alphabet");
        for (std::size_t fi = 0; fi < support.size(); ++fi) {
            const Word gf = g * support[fi];
            auto& slot = values[*domain->index_of(gf)];
            const Symbol v = codec.digit(code, fi);
            if (slot && *slot != v)
                throw std::runtime_error("iota: inconsistent readings at " + gf.to_string());
            slot = v;
        }
    }
    std::vector<Symbol> flat;
    flat.reserve(values.size());
    for (auto& v : values)
        flat.push_back(*v);
    return WindowConfig(std::move(domain), std::move(flat));
}

WindowConfig j_map(const FreeGroup& group, const PatternCodec& codec, const WindowConfig& c,
                   std::span<const Word> target)
{
    require_window_shape(group, codec.support());
    std::set<Word> missing;
    for (const auto& g : target)
        for (const auto& f : codec.support())
            if (!c.domain()->contains(g * f))
                missing.insert(g * f);
    if (!missing.empty()) {
        std::ostringstream msg;
        msg << "j: config domain misses";
        for (const auto& w : missing)
            msg << ' ' << w.to_string();
        throw std::invalid_argument(msg.str());
    }
    return WindowConfig::tabulate(make_domain({target.begin(), target.end()}), [&](const Word& g) {
        return codec.encode(*c.pattern_at(g, codec.support()));
    });
}

Sft disjoint_union(const Sft& x, const Sft& y)
{
    if (x.rank() != y.rank())
        throw std::invalid_argument("disjoint union of SFTs over different ranks");
    FreeGroup group(x.rank());
    std::vector<std::string> names;
    for (const auto& n : x.alphabet().names())
        names.push_back("L:" + n);
    for (const auto& n : y.alphabet().names())
        names.push_back("R:" + n);
    const auto offset = static_cast<Symbol>(x.alphabet().size());

    std::vector<Pattern> forbidden = x.forbidden();
    for (const auto& p : y.forbidden()) {
        Pattern shifted;
        for (const auto& [w, v] : p.values)
            shifted.values.emplace(w, v + offset);
        forbidden.push_back(std::move(shifted));
    }
    for (Letter s : group.letters()) {
        for (Symbol a = 0; a < offset; ++a) {
            for (Symbol b = offset; b < names.size(); ++b) {
                forbidden.push_back(Pattern{{{Word(), a}, {Word::of(s), b}}});
                forbidden.push_back(Pattern{{{Word(), b}, {Word::of(s), a}}});
            }
        }
    }
    std::vector<Word> window = x.window();
    window.insert(window.end(), y.window().begin(), y.window().end());
    for (const auto& w : group.ball(1))
        window.push_back(w);
    return Sft(x.rank(), Alphabet(std::move(names)), std::move(forbidden), std::move(window));
}

Sft full_shift(int rank, Alphabet alphabet) { return Sft(rank, std::move(alphabet), {}, {Word()}); }

} // namespace freeshift
