#include "freeshift/patterns.hpp"
#include "freeshift/rauzy.hpp"

#include <doctest.h>

#include <random>

using namespace freeshift;

namespace {

Word w(const char* s) { return Word::parse(s); }

// All colorings of a domain, filtered by a direct occurrence check.
std::vector<std::vector<Symbol>> brute_admissible(const Sft& x, const std::vector<Word>& domain)
{
    const auto n = x.alphabet().size();
    std::vector<std::vector<Symbol>> out;
    std::vector<Symbol> values(domain.size(), 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < domain.size(); ++i)
        total *= n;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (auto& v : values) {
            v = static_cast<Symbol>(c % n);
            c /= n;
        }
        std::map<Word, Symbol> at;
        for (std::size_t i = 0; i < domain.size(); ++i)
            at[domain[i]] = values[i];
        bool ok = true;
        for (const auto& p : x.forbidden())
            for (const auto& g : domain) {
                bool inside = true, equal = true;
                for (const auto& [f, s] : p.values) {
                    const auto it = at.find(g * f);
                    if (it == at.end()) {
                        inside = false;
                        break;
                    }
                    equal = equal && it->second == s;
                }
                ok = ok && !(inside && equal);
            }
        if (ok)
            out.push_back(values);
    }
    return out;
}

} // namespace

TEST_CASE("translation and merging")
{
    const Pattern p{{{w("e"), 0}, {w("a"), 1}}};
    const auto q = translate_pattern(w("b"), p);
    CHECK(q.values == std::map<Word, Symbol>{{w("b"), 0}, {w("ba"), 1}});
    CHECK(translate_pattern(w("B"), q) == p);
    const Pattern r{{{w("a"), 1}, {w("b"), 0}}};
    CHECK(compatible(p, r));
    CHECK(merge(p, r).values.size() == 3);
    const Pattern clash{{{w("a"), 0}}};
    CHECK_FALSE(compatible(p, clash));
}

TEST_CASE("window configs read patterns by left translation")
{
    auto domain = make_domain(FreeGroup(2).ball(2));
    const auto c = WindowConfig::tabulate(domain, [](const Word& g) { return Symbol(g.length()); });
    const std::vector<Word> support{w("e"), w("a")};
    const auto p = c.pattern_at(w("b"), support);
    REQUIRE(p);
    CHECK(p->values.at(w("e")) == 1);
    CHECK(p->values.at(w("a")) == 2);
    CHECK_FALSE(c.pattern_at(w("bb"), support));
    CHECK_THROWS_AS(c.at(w("aaa")), std::out_of_range);
}

TEST_CASE("enumeration agrees with brute force")
{
    std::mt19937_64 rng(0);
    for (int trial = 0; trial < 20; ++trial) {
        const int rank = 1 + trial % 2;
        const FreeGroup group(rank);
        std::vector<Pattern> forbidden;
        std::uniform_int_distribution<int> sym(0, 1), letter(0, 2 * rank - 1);
        for (int i = 0; i < 3; ++i)
            forbidden.push_back(Pattern{{{Word(), Symbol(sym(rng))},
                                         {Word::of(Letter::from_code(letter(rng))), Symbol(sym(rng))}}});
        const Sft x(rank, Alphabet::numbered(2), forbidden, group.ball(1));
        const auto domain = group.ball(rank == 1 ? 3 : 1);
        std::set<std::vector<Symbol>> fast;
        for (const auto& c : enumerate_window(x, domain))
            fast.insert(c.values());
        const auto slow = brute_admissible(x, domain);
        CHECK(fast == std::set<std::vector<Symbol>>(slow.begin(), slow.end()));
        CHECK(fast.size() == slow.size());
    }
}

TEST_CASE("enumeration cap and pins")
{
    const Sft x = full_shift(2, Alphabet::numbered(2));
    const auto ball = FreeGroup(2).ball(1);
    CHECK(enumerate_window(x, ball).size() == 32);
    EnumerateOptions small;
    small.max_configs = 10;
    CHECK_THROWS_AS(enumerate_window(x, ball, small), CapExceeded);
    EnumerateOptions pinned;
    pinned.pinned[Word()] = 1;
    CHECK(enumerate_window(x, ball, pinned).size() == 16);
}

TEST_CASE("iota and j are mutually inverse for the full shift on a small window")
{
    const FreeGroup group(1);
    const auto f = group.ball(1);
    const PatternCodec codec(2, f);
    const Alphabet base = Alphabet::numbered(2);
    const auto graph = full_shift_graph(1, codec, base);
    const auto x = xg_sft(graph);
    const auto b1 = group.ball(1);
    const auto configs = enumerate_window(x, b1);
    CHECK(configs.size() == (1u << group.ball_size(2)));
    std::set<std::vector<Symbol>> images;
    for (const auto& c : configs) {
        const auto y = iota(group, codec, c);
        CHECK(y.domain()->size() == group.ball_size(2));
        CHECK(j_map(group, codec, y, b1) == c);
        images.insert(y.values());
    }
    CHECK(images.size() == configs.size());
}

TEST_CASE("codec round trip")
{
    const PatternCodec codec(3, FreeGroup(2).ball(1));
    CHECK(codec.symbol_count() == 243);
    for (Symbol s = 0; s < codec.symbol_count(); s += 7)
        CHECK(codec.encode(codec.decode(s)) == s);
    CHECK(codec.digit(codec.encode(Pattern{{{w("e"), 2}, {w("a"), 1}, {w("A"), 0}, {w("b"), 0}, {w("B"), 1}}}), 0) == 2);
}

TEST_CASE("disjoint union keeps the halves apart")
{
    const auto x = full_shift(1, Alphabet::numbered(1));
    const auto y = full_shift(1, Alphabet::numbered(2));
    const auto u = disjoint_union(x, y);
    CHECK(u.alphabet().size() == 3);
    const auto configs = enumerate_window(u, FreeGroup(1).ball(2));
    CHECK(configs.size() == 1 + 32);
    for (const auto& c : configs) {
        const bool left = c.values()[0] == 0;
        for (Symbol v : c.values())
            CHECK((v == 0) == left);
    }
}

TEST_CASE("window language collects every fitting position")
{
    auto domain = make_domain(FreeGroup(1).ball(3));
    const auto c = WindowConfig::tabulate(domain, [](const Word& g) { return Symbol(g.length() % 2); });
    const std::vector<Word> support{w("e"), w("a")};
    const auto lang = restrict_language(std::span(&c, 1), support);
    CHECK(lang.patterns.size() == 2);
}
