#include "freeshift/catalog.hpp"
#include "freeshift/measured.hpp"

#include <doctest.h>

#include <random>

using namespace freeshift;

namespace {

// Balance written out directly from the definition.
bool balanced(const RauzyGraph& g, const std::vector<Rational>& mu, const std::vector<Rational>& m)
{
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (m[e] != m[g.edge(e).bar] || m[e] < 0)
            return false;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (Letter s : g.group().letters()) {
            Rational out = 0, in = 0;
            for (const auto& e : g.edges()) {
                const auto& w = m[&e - g.edges().data()];
                if (e.label == s && e.source == v)
                    out += w;
                if (e.label == s && e.range == v)
                    in += w;
            }
            if (out != mu[v] || in != mu[v])
                return false;
        }
    return true;
}

Integer gcd_all(const MeasuredRauzyGraph& g)
{
    Integer d = 0;
    for (const auto& x : g.mu)
        d = boost::multiprecision::gcd(d, numerator(x));
    for (const auto& x : g.m)
        d = boost::multiprecision::gcd(d, numerator(x));
    return d;
}

} // namespace

TEST_CASE("rational text")
{
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-6/4") == Rational(-3) / 2);
    CHECK(format_rational(parse_rational("-6/4")) == "-3/2");
    CHECK(format_rational(parse_rational("10/5")) == "2");
    CHECK(format_rational(Rational(0)) == "0");
    for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "2/-3"})
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("kernel vectors are primitive and annihilated")
{
    std::mt19937_64 rng(0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_graph(2, 1 + trial % 4, rng);
        const auto rows = balance_matrix(g);
        const std::size_t columns = g.vertex_count() + g.edge_count();
        const auto basis = integer_kernel(rows, columns);
        for (const auto& v : basis) {
            REQUIRE(v.size() == columns);
            for (const auto& row : rows) {
                Integer dot = 0;
                for (std::size_t j = 0; j < columns; ++j)
                    dot += row[j] * v[j];
                CHECK(dot == 0);
            }
            Integer d = 0;
            for (const auto& x : v)
                d = boost::multiprecision::gcd(d, x);
            CHECK(abs(d) == 1);
        }
    }
    // x + y = 0, y - z = 0 in three unknowns: one-dimensional
    const std::vector<std::vector<Integer>> rows{{1, 1, 0}, {0, 1, -1}};
    const auto basis = integer_kernel(rows, 3);
    REQUIRE(basis.size() == 1);
    CHECK(abs(basis[0][0]) == 1);
    CHECK(basis[0][1] == -basis[0][0]);
    CHECK(basis[0][2] == basis[0][1]);
}

TEST_CASE("positive combinations")
{
    const std::vector<std::vector<Integer>> both{{1, -1}, {0, 1}};
    const auto lambda = positive_combination(both, 2);
    REQUIRE(lambda);
    for (std::size_t i = 0; i < 2; ++i) {
        Rational x = 0;
        for (std::size_t k = 0; k < both.size(); ++k)
            x += (*lambda)[k] * Rational(both[k][i]);
        CHECK(x >= 1);
    }
    const std::vector<std::vector<Integer>> opposed{{1, -1}};
    CHECK_FALSE(positive_combination(opposed, 2));
}

TEST_CASE("catalog solutions")
{
    const auto cyc = integer_solution(catalog::cyc2());
    REQUIRE(cyc.measured);
    for (const auto& x : cyc.measured->mu)
        CHECK(x == 1);
    for (const auto& x : cyc.measured->m)
        CHECK(x == 1);

    const auto star = integer_solution(catalog::star3());
    REQUIRE(star.measured);
    const auto& mu = star.measured->mu;
    CHECK(mu[0] == mu[1] + mu[2]);
    CHECK(star.measured->full_support());
    CHECK(validate_balance(*star.measured).empty());

    CHECK_FALSE(integer_solution(catalog::connected_not_minimal()).measured);
    CHECK_FALSE(integer_solution(catalog::minimal_not_edge_connected()).measured);
}

TEST_CASE("hint route scales by the common denominator")
{
    const auto g = catalog::cyc2();
    const MeasuredRauzyGraph hint{g, std::vector<Rational>(2, Rational(1, 2)), std::vector<Rational>(g.edge_count(), Rational(1, 2))};
    const auto sol = integer_solution(g, hint);
    CHECK(sol.route == "hint");
    REQUIRE(sol.measured);
    for (std::size_t v = 0; v < 2; ++v)
        CHECK(sol.measured->mu[v] == hint.mu[v] * 2);

    auto bad = hint;
    bad.m[0] = 1;
    CHECK_THROWS_AS(integer_solution(g, bad), UnbalancedHint);
    try {
        integer_solution(g, bad);
    } catch (const UnbalancedHint& e) {
        CHECK_FALSE(e.violations().empty());
    }
    const MeasuredRauzyGraph other{catalog::rose1(), {1}, {1, 1, 1, 1}};
    CHECK_THROWS_AS(integer_solution(g, other), std::invalid_argument);
}

TEST_CASE("random graphs: solution exists exactly when a positive kernel vector does")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = random_graph(2, 1 + trial % 4, rng);
        const auto sol = integer_solution(g);
        if (!sol.measured) {
            const auto basis = integer_kernel(balance_matrix(g), g.vertex_count() + g.edge_count());
            CHECK_FALSE(positive_combination(basis, g.vertex_count() + g.edge_count()));
            continue;
        }
        const auto& mg = *sol.measured;
        CHECK(mg.integral());
        CHECK(mg.full_support());
        CHECK(balanced(g, mg.mu, mg.m));
        CHECK(validate_balance(mg).empty());
        CHECK(gcd_all(mg) == 1);
    }
}

TEST_CASE("violations are reported by kind")
{
    const auto g = catalog::cyc2();
    MeasuredRauzyGraph mg{g, {1, 1}, std::vector<Rational>(g.edge_count(), 1)};
    CHECK(validate_balance(mg).empty());
    mg.m[0] = 2;
    bool bar = false, out = false;
    for (const auto& v : validate_balance(mg)) {
        bar = bar || v.kind == "bar";
        out = out || v.kind == "out";
    }
    CHECK(bar);
    CHECK(out);
    mg.mu.pop_back();
    CHECK(validate_balance(mg).front().kind == "size");
}
