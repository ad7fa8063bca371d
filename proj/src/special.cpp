#include "freeshift/special.hpp"

#include <algorithm>

namespace freeshift {

namespace {

bool in_axis(const Word& g, Letter s0)
{
    return std::all_of(g.letters().begin(), g.letters().end(),
                       [&](Letter s) { return s.generator() == s0.generator(); });
}

void require_generator(int rank, Letter s0)
{
    if (s0.inverted() || !FreeGroup(rank).contains(s0))
        throw std::invalid_argument("s0 must be a positive generator of the group");
}

// Generators used anywhere in the domain; a ball of radius ≥ 1 uses all of them.
int rank_of(const Domain& domain)
{
    int rank = 1;
    for (const auto& w : domain.words())
        for (Letter s : w.letters())
            rank = std::max(rank, s.generator() + 1);
    return rank;
}

} // namespace

MarkedPointWindow chi_window(int rank, Letter s0, int radius)
{
    require_generator(rank, s0);
    auto domain = make_domain(FreeGroup(rank).ball(radius));
    return {WindowConfig::tabulate(domain, [&](const Word& g) { return Symbol(in_axis(g, s0) ? 1 : 0); }), s0};
}

SpecialSymbolSft special_symbol_sft(int rank, Letter s0)
{
    if (rank < 2)
        throw std::invalid_argument("the special symbol SFT needs rank at least 2");
    require_generator(rank, s0);
    const FreeGroup group(rank);
    const auto letters = group.letters();
    const auto star = static_cast<Symbol>(letters.size());

    std::vector<std::string> names;
    for (Letter s : letters)
        names.emplace_back(1, s.to_char());
    names.emplace_back("*");
    const std::size_t n = names.size();

    std::vector<Pattern> forbidden;
    // centre c forces the value `want` at the neighbor t
    auto force = [&](Symbol c, Letter t, Symbol want) {
        for (Symbol other = 0; other < n; ++other)
            if (other != want)
                forbidden.push_back(Pattern{{{Word(), c}, {Word::of(t), other}}});
    };
    for (Letter t : letters) {
        const bool axis = t.generator() == s0.generator();
        force(star, t, axis ? star : static_cast<Symbol>(t.code()));
    }
    for (Letter s : letters)
        for (Letter t : letters)
            if (t != s.inverse())
                force(static_cast<Symbol>(s.code()), t, static_cast<Symbol>(t.code()));

    std::vector<Symbol> proj(n, 0);
    proj[star] = 1;
    return {Sft(rank, Alphabet(std::move(names)), std::move(forbidden), group.ball(1)), std::move(proj), star, s0};
}

WindowConfig x0_window(const SpecialSymbolSft& s, int radius)
{
    auto domain = make_domain(FreeGroup(s.x.rank()).ball(radius));
    return WindowConfig::tabulate(domain, [&](const Word& g) {
        return in_axis(g, s.s0) ? s.star : static_cast<Symbol>(g.last().code());
    });
}

WindowLanguage projected_language(const SpecialSymbolSft& s, int radius)
{
    const auto ball = FreeGroup(s.x.rank()).ball(radius);
    WindowLanguage out{ball, {}};
    for (const auto& c : enumerate_window(s.x, ball)) {
        Pattern p;
        for (std::size_t i = 0; i < ball.size(); ++i)
            p.values.emplace(ball[i], s.proj[c.values()[i]]);
        out.patterns.insert(std::move(p));
    }
    return out;
}

WindowLanguage chi_orbit_language(int rank, Letter s0, int radius, int slack)
{
    if (slack < 0)
        slack = 2 * radius;
    const auto chi = chi_window(rank, s0, radius + slack);
    const auto ball = FreeGroup(rank).ball(radius);
    auto out = restrict_language(std::span(&chi.config, 1), ball);
    Pattern zero;
    for (const auto& w : ball)
        zero.values.emplace(w, 0);
    out.patterns.insert(std::move(zero));
    return out;
}

std::vector<std::string> special_symbol_facts(const SpecialSymbolSft& s, int radius)
{
    std::vector<std::string> failures;
    const FreeGroup group(s.x.rank());
    if (!s.x.admits(x0_window(s, radius)))
        failures.push_back("x0 is not admissible on B_" + std::to_string(radius));

    const auto ball = group.ball(radius);
    const Word step = Word::of(s.s0);
    for (const auto& c : enumerate_window(s.x, ball)) {
        std::vector<Word> stars;
        for (std::size_t i = 0; i < ball.size(); ++i)
            if (c.values()[i] == s.star)
                stars.push_back(ball[i]);
        for (const auto& g : stars)
            for (const Word& h : {g * step, g * step.inverse()})
                if (const auto v = c.find(h); v && *v != s.star)
                    failures.push_back("* at " + g.to_string() + " does not continue to " + h.to_string());
        for (std::size_t i = 0; i < stars.size(); ++i)
            for (std::size_t j = i + 1; j < stars.size(); ++j)
                if (!in_axis(stars[i].inverse() * stars[j], s.s0))
                    failures.push_back("* at " + stars[i].to_string() + " and " + stars[j].to_string() +
                                       " lie in different cosets");
    }
    return failures;
}

std::set<Word> return_set(const WindowConfig& x, const Pattern& u, int depth)
{
    const auto support = u.support();
    const auto need = static_cast<int>(depth + radius_of(support));
    const auto& domain = *x.domain();
    const FreeGroup group(rank_of(domain));
    for (const auto& w : group.ball(need))
        if (!domain.contains(w))
            throw std::invalid_argument("window too small: return sets to depth " + std::to_string(depth) +
                                        " need B_" + std::to_string(need) + ", missing " + w.to_string());
    std::set<Word> out;
    for (const auto& g : group.ball(depth)) {
        const bool match = std::all_of(support.begin(), support.end(),
                                       [&](const Word& f) { return x.at(g * f) == *u.at(f); });
        if (match)
            out.insert(g);
    }
    return out;
}

} // namespace freeshift
