#include "freeshift/catalog.hpp"
#include "freeshift/cli.hpp"
#include "freeshift/documents.hpp"
#include "freeshift/special.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace freeshift;
namespace fs = std::filesystem;

namespace {

const std::string data = FREESHIFT_DATA_DIR;

struct Result {
    int code;
    std::string out;
    std::string err;
    Json report() const { return Json::parse(out); }
};

Result cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / "freeshift-cli-test";
    fs::create_directories(dir);
    return dir / name;
}

std::string write(const std::string& name, const std::string& text)
{
    const auto p = scratch(name);
    std::ofstream(p) << text;
    return p.string();
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("fnv1a reference values")
{
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("sample documents")
{
    const auto minimal = cli({"minimal", data + "/rose1.json"});
    CHECK(minimal.code == 0);
    CHECK(minimal.report()["verdict"] == true);

    const auto broken = cli({"validate", data + "/broken.json"});
    CHECK(broken.code == 1);
    const auto violations = broken.report()["witnesses"]["violations"];
    CHECK(violations.size() == 2);
    CHECK(violations[0]["axiom"] == "total");

    const auto solved = cli({"measure", "solve", data + "/cyc2.json"});
    REQUIRE(solved.code == 0);
    const auto doc = solved.report()["document"];
    for (const auto& x : doc["mu"])
        CHECK(x == "1");
    for (const auto& x : doc["m"])
        CHECK(x == "1");

    const auto conditions = cli({"conditions", data + "/star3.json"});
    CHECK(conditions.code == 0);
    CHECK(conditions.report()["verdict"]["edge_connected"] == true);
}

TEST_CASE("reports are byte-identical and timings stay apart")
{
    const std::vector<std::string> args{"finite-action", data + "/star3.json", "--transitive"};
    const auto first = cli(args);
    const auto second = cli(args);
    CHECK(first.out == second.out);
    auto args_t = args;
    args_t.insert(args_t.begin(), "--timings");
    auto timed = cli(args_t).report();
    CHECK(timed.contains("timings"));
    timed.erase("timings");
    CHECK(timed == first.report());
}

TEST_CASE("input errors exit with 2 and a location")
{
    const auto bad_vertex = write("bad_vertex.json",
                                  R"({"rank":2,"vertices":["x"],"edges":[{"source":"x","range":"y","label":"a","bar":0}]})");
    auto r = cli({"minimal", bad_vertex});
    CHECK(r.code == 2);
    CHECK(r.err.find("/edges/0/range") != std::string::npos);

    const auto bad_label = write("bad_label.json",
                                 R"({"rank":1,"vertices":["x"],"edges":[{"source":"x","range":"x","label":"b","bar":0}]})");
    r = cli({"minimal", bad_label});
    CHECK(r.code == 2);
    CHECK(r.err.find("/edges/0/label") != std::string::npos);

    const auto truncated = write("truncated.json", "{\"rank\": 2,");
    CHECK(cli({"minimal", truncated}).code == 2);
    const auto array = write("array.json", "[1, 2]");
    CHECK(cli({"minimal", array}).code == 2);
    CHECK(cli({"minimal", (scratch("missing.json")).string()}).code == 2);
    CHECK(cli({"minimal", data + "/broken.json"}).code == 2);
    CHECK(cli({"no-such-command"}).code == 2);
    CHECK(cli({"xg-window", data + "/cyc2.json"}).code == 2);
    CHECK(cli({"special-symbol", "--rank", "2", "--gen", "A", "--radius", "1"}).code == 2);
    CHECK(cli({"measure", "solve", "--hint", data + "/cyc2.json"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("graph documents round-trip")
{
    const auto g = catalog::star3();
    const auto sol = integer_solution(g);
    REQUIRE(sol.measured);
    const auto j = graph_json(*sol.measured);
    const auto doc = parse_graph_document(Json::parse(j.dump()));
    CHECK(doc.raw == g.raw());
    CHECK(measured_graph(doc) == *sol.measured);
    CHECK(graph_json(measured_graph(doc)) == j);
    const auto plain = parse_graph_document(graph_json(g.raw()));
    CHECK_FALSE(plain.mu);
    CHECK(RauzyGraph(plain.raw) == g);
}

TEST_CASE("selector, sft, action and window documents round-trip")
{
    const auto g = catalog::star3();
    const auto c = find_cycle(g, 0);
    const auto t = synthesize_recurrent(g, c);
    const auto sel = parse_selector_document(Json::parse(selector_json(t, c).dump()));
    CHECK(sel.selector == t);
    CHECK(sel.cycle == c);

    const auto x = special_symbol_sft(2, Letter(0, false)).x;
    const auto sft = parse_sft_document(Json::parse(sft_json(x).dump()));
    CHECK(sft.forbidden() == x.forbidden());
    CHECK(sft.window() == x.window());
    CHECK(sft.alphabet() == x.alphabet());

    const FiniteAction act(2, {"p", "q", "r"}, {{1, 2, 0}, {0, 2, 1}});
    CHECK(parse_action_document(Json::parse(action_json(act).dump())) == act);

    const auto window = x_t_window(t, 2);
    const Alphabet names(g.raw().vertices);
    const auto wd = parse_window_document(Json::parse(window_json(2, names, window).dump()));
    CHECK(wd.config == window);
    CHECK(wd.alphabet == names);

    const Pattern p{{{Word(), 1}, {Word::parse("aB"), 2}}};
    CHECK(parse_pattern(pattern_json(p, names), names) == p);
}

TEST_CASE("emitted documents feed later commands")
{
    const auto selector = scratch("cyc2-selector.json").string();
    const auto dot = scratch("cyc2.dot").string();
    const auto synth = cli({"--emit", selector, "selector", "synth", data + "/cyc2.json"});
    REQUIRE(synth.code == 0);
    CHECK(Json::parse(slurp(selector)) == synth.report()["document"]);

    const auto cert = cli({"certify-minimal", selector, "--window", "2", "--depth", "6"});
    CHECK(cert.code == 0);
    const auto w = cert.report()["witnesses"];
    CHECK(w["max_gap"].get<int>() <= w["gap_bound"].get<int>());

    CHECK(cli({"sofic-witness", selector}).code == 0);

    const auto window = scratch("cyc2-window.json").string();
    REQUIRE(cli({"--emit", window, "selector", "expand", selector, "--radius", "6"}).code == 0);
    const auto ret = cli({"return-set", window, "--pattern", R"({"e":"u"})", "--depth", "4"});
    CHECK(ret.code == 0);
    CHECK(ret.report()["witnesses"]["elements"][0] == "e");
    CHECK(cli({"return-set", window, "--pattern", R"({"e":"zz"})", "--depth", "4"}).code == 2);
    CHECK(cli({"return-set", window, "--pattern", R"({"e":"u"})", "--depth", "7"}).code == 2);

    REQUIRE(cli({"--dot", dot, "minimal", data + "/cyc2.json"}).code == 0);
    const auto text = slurp(dot);
    CHECK(text.find("digraph") == 0);
    CHECK(text.find("label=\"a\"") != std::string::npos);
    CHECK(text.find("label=\"A\"") == std::string::npos);

    // global options may also trail the subcommand
    const auto late = scratch("cyc2-late.json").string();
    const auto trailing = cli({"selector", "synth", data + "/cyc2.json", "--emit", late, "--timings"});
    REQUIRE(trailing.code == 0);
    CHECK(trailing.report().contains("timings"));
    CHECK(slurp(late) == slurp(selector));
}

TEST_CASE("actions on the command line")
{
    const auto swap = write("swap.json", R"({"kind":"action","rank":1,"points":["p","q"],"step":{"a":[1,0]}})");
    const auto three = write("three.json", R"({"kind":"action","rank":1,"points":["x","y","z"],"step":{"a":[1,2,0]}})");
    const auto point = write("point.json", R"({"kind":"action","rank":1,"points":["o"],"step":{"a":[0]}})");
    const auto fp = cli({"fiber-product", swap, three, point, "--f1", "o,o", "--f2", "o,o,o"});
    REQUIRE(fp.code == 0);
    CHECK(fp.report()["witnesses"]["points"] == 6);
    CHECK(fp.report()["witnesses"]["orbits"] == 1);
    CHECK(cli({"fiber-product", swap, three, point, "--f1", "o", "--f2", "o,o,o"}).code == 2);

    const auto star = cli({"finite-action", data + "/star3.json", "--transitive", "--generator", "b"});
    CHECK(star.code == 0);
    CHECK(star.report()["witnesses"]["orbits"] == 1);
    const auto parsed = parse_action_document(star.report()["document"]);
    CHECK(parsed.size() == 4);
}

TEST_CASE("special symbol and search commands")
{
    const auto s = cli({"special-symbol", "--rank", "2", "--gen", "a", "--radius", "2", "--slack", "6"});
    CHECK(s.code == 0);
    CHECK(s.report()["witnesses"]["languages_equal"] == true);
    const auto search = cli({"search-condition-witness", "--max-vertices", "2"});
    CHECK(search.code == 1);
    CHECK(search.report()["witnesses"]["graphs_searched"] == 50);
}
