#include "freeshift/words.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace freeshift;

namespace {

// Every letter string of length ≤ k, reduced by hand with a stack.
std::set<std::string> brute_ball(int rank, int k)
{
    const std::string alphabet = [&] {
        std::string s;
        for (int g = 0; g < rank; ++g) {
            s += static_cast<char>('a' + g);
            s += static_cast<char>('A' + g);
        }
        return s;
    }();
    std::set<std::string> out{"e"};
    std::vector<std::string> layer{""};
    for (int len = 1; len <= k; ++len) {
        std::vector<std::string> next;
        for (const auto& w : layer)
            for (char c : alphabet)
                next.push_back(w + c);
        for (const auto& w : next) {
            std::string stack;
            for (char c : w) {
                const bool cancels = !stack.empty() && stack.back() != c && std::tolower(stack.back()) == std::tolower(c);
                if (cancels)
                    stack.pop_back();
                else
                    stack.push_back(c);
            }
            out.insert(stack.empty() ? "e" : stack);
        }
        layer = std::move(next);
    }
    return out;
}

Word random_word(std::mt19937_64& rng, int rank, int max_len)
{
    std::uniform_int_distribution<int> len(0, max_len), code(0, 2 * rank - 1);
    std::vector<Letter> letters;
    for (int i = len(rng); i > 0; --i)
        letters.push_back(Letter::from_code(code(rng)));
    return Word(letters);
}

} // namespace

TEST_CASE("letters order generators before inverses")
{
    CHECK(Letter::from_char('a') < Letter::from_char('A'));
    CHECK(Letter::from_char('A') < Letter::from_char('b'));
    CHECK(Letter::from_char('B').inverse() == Letter::from_char('b'));
    CHECK(Letter::from_char('c').code() == 4);
    CHECK_THROWS_AS(Letter::from_char('1'), std::invalid_argument);
}

TEST_CASE("parsing reduces and prints back")
{
    CHECK(Word::parse("abA").to_string() == "abA");
    CHECK(Word::parse("aAb").to_string() == "b");
    CHECK(Word::parse("e").empty());
    CHECK(Word::parse("").to_string() == "e");
    CHECK(Word::parse("abBA").empty());
    CHECK((Word::parse("ab") * Word::parse("Ba")).to_string() == "aa");
    CHECK(Word::parse("abA").inverse().to_string() == "aBA");
}

TEST_CASE("shortlex order")
{
    CHECK(Word::parse("e") < Word::parse("a"));
    CHECK(Word::parse("B") < Word::parse("aa"));
    CHECK(Word::parse("aAb") < Word::parse("B"));
    CHECK(Word::parse("ab") < Word::parse("aB"));
}

TEST_CASE("balls match a brute-force enumeration")
{
    for (int rank = 1; rank <= 3; ++rank)
        for (int k = 0; k <= (rank == 3 ? 3 : 4); ++k) {
            const FreeGroup group(rank);
            const auto ball = group.ball(k);
            std::set<std::string> names;
            for (const auto& w : ball)
                names.insert(w.to_string());
            CHECK(names == brute_ball(rank, k));
            CHECK(ball.size() == group.ball_size(k));
            CHECK(std::is_sorted(ball.begin(), ball.end()));
        }
    CHECK(FreeGroup(2).ball_size(2) == 17);
    CHECK(FreeGroup(2).ball_size(8) == 13121);
}

TEST_CASE("group laws on random words")
{
    std::mt19937_64 rng(0);
    for (int i = 0; i < 500; ++i) {
        const auto x = random_word(rng, 3, 8), y = random_word(rng, 3, 8), z = random_word(rng, 3, 8);
        CHECK((x * y) * z == x * (y * z));
        CHECK((x * x.inverse()).empty());
        CHECK((x * y).inverse() == y.inverse() * x.inverse());
        CHECK(Word::parse(x.to_string()) == x);
        for (std::size_t j = 1; j < x.length(); ++j)
            CHECK(x[j] != x[j - 1].inverse());
    }
}

TEST_CASE("connectivity and products of word sets")
{
    const FreeGroup group(2);
    const auto ball = group.ball(2);
    CHECK(group.is_connected(ball));
    const std::vector<Word> gap{Word(), Word::parse("aa")};
    CHECK_FALSE(group.is_connected(gap));
    const std::vector<Word> one{Word::parse("a")};
    CHECK(product_set(one, one) == std::vector<Word>{Word::parse("aa")});
    CHECK(radius_of(ball) == 2);
}
