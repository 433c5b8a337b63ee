#include "cli_support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>

using Json = nlohmann::ordered_json;

namespace {

const std::string binary = EDGECONE_CLI;
const std::filesystem::path data = EDGECONE_DATA;

cli::Result edgecone(const std::string& args)
{
    return cli::run(cli::quote(binary) + " " + args);
}

std::string input(const std::string& name)
{
    return cli::quote((data / name).string());
}

size_t count(const std::string& text, const std::string& what)
{
    size_t n = 0;
    for (size_t p = text.find(what); p != std::string::npos; p = text.find(what, p + 1))
        ++n;
    return n;
}

} // namespace

TEST_CASE("every command is deterministic")
{
    cli::TempDir tmp;
    for (const auto& e : cli::corpus(data))
        for (const auto& args : cli::commands(e)) {
            CAPTURE(e.input.string());
            CAPTURE(args);
            auto a = cli::run_with_files(binary, e, args, tmp);
            auto b = cli::run_with_files(binary, e, args, tmp);
            CHECK(a.code == 0);
            CHECK(!a.out.empty());
            CHECK(a.out == b.out);
        }
}

TEST_CASE("json reports round-trip")
{
    for (const auto& e : cli::corpus(data))
        for (const auto& args : cli::commands(e)) {
            if (args.find("table") != std::string::npos)
                continue;
            CAPTURE(args);
            auto r = edgecone(args.substr(0, args.find(' ')) + " " + cli::quote(e.input.string()) +
                              (args.find(' ') == std::string::npos ? "" : args.substr(args.find(' '))));
            REQUIRE(r.code == 0);
            Json j = Json::parse(r.out);
            std::string again = args == "export-cone" ? j.dump() + "\n" : j.dump(2) + "\n";
            CHECK(again == r.out);
        }
}

TEST_CASE("graph and exported cone give the same t1")
{
    cli::TempDir tmp;
    for (const auto& e : cli::corpus(data)) {
        if (e.cone)
            continue;
        CAPTURE(e.input.string());
        auto exported = edgecone("export-cone " + cli::quote(e.input.string()));
        REQUIRE(exported.code == 0);
        auto cone = tmp.path / "cone.json";
        std::ofstream(cone) << exported.out;

        std::string reduced = e.degree.substr(0, e.degree.rfind(','));
        auto g = edgecone("t1 " + cli::quote(e.input.string()) + " --degree " + e.degree);
        auto c = edgecone("t1 " + cli::quote(cone.string()) + " --degree " + reduced);
        REQUIRE(g.code == 0);
        REQUIRE(c.code == 0);
        Json jg = Json::parse(g.out), jc = Json::parse(c.out);
        for (const char* key : {"heights", "compact_vertices", "lattice_vertices", "compact_edges",
                                "compact_two_faces", "v_dim", "constrained_dim", "t1_dim"})
            CHECK(jg[key] == jc[key]);
    }
}

TEST_CASE("reported values on the corpus")
{
    auto info = Json::parse(edgecone("info " + input("kucuk.txt")).out);
    CHECK(info["ray_count"] == 3);
    CHECK(info["dual_dim"] == 3);
    std::vector<std::string> sources;
    for (const auto& r : info["rays"])
        sources.push_back(r["source"]);
    std::sort(sources.begin(), sources.end());
    CHECK(sources == std::vector<std::string>{"{1}+{3}", "{2}", "{4}"});

    CHECK(Json::parse(edgecone("info " + input("k33.json")).out)["ray_count"] == 6);
    CHECK(Json::parse(edgecone("info " + input("path.txt")).out)["ray_count"] == 2);
    // all pairs but the two rays of the two left vertices
    CHECK(Json::parse(edgecone("faces --dim 2 " + input("k23.json")).out)["count"] == 9);

    auto quad = Json::parse(edgecone("faces --dim 3 " + input("quad_face.json")).out);
    bool four = false;
    for (const auto& f : quad["faces"])
        four = four || f["rays"].size() == 4;
    CHECK(four);

    CHECK(Json::parse(edgecone("t1 " + input("double_pyramid.json") + " --degree 1,1,1,1").out)["t1_dim"] == 0);
    CHECK(Json::parse(edgecone("t1 " + input("sigma_prime.json") + " --degree 1,0,0,0").out)["t1_dim"] >= 1);
    CHECK(Json::parse(edgecone("t1 " + input("k22.json") + " --degree 1,1,1,1").out)["t1_dim"] == 1);

    auto k22 = Json::parse(edgecone("rigidity " + input("k22.json")).out);
    CHECK(k22["verdict"] == "NotRigid");
    CHECK(k22["certificate"] == Json::parse("[1,1,1,1]"));
    CHECK(Json::parse(edgecone("rigidity " + input("one_two_sided.json")).out)["verdict"] == "Rigid");
    CHECK(Json::parse(edgecone("rigidity " + input("k45_minus.json")).out)["verdict"] == "Rigid");

    for (const char* g : {"kucuk.txt", "two_two_sided.json", "quad_face.json"})
        CHECK(Json::parse(edgecone(std::string("oracle-check ") + input(g)).out)["passed"] == true);
}

TEST_CASE("crosscut pictures")
{
    cli::TempDir tmp;
    auto dot = tmp.path / "q.dot", svg = tmp.path / "q.svg";
    std::string files = " --dot " + cli::quote(dot.string()) + " --svg " + cli::quote(svg.string());

    REQUIRE(edgecone("crosscut " + input("double_pyramid.json") + " --degree 0,1,0,1" + files).code == 0);
    std::string s = cli::slurp(svg);
    CHECK(count(s, "<circle") == 4);
    CHECK(count(s, "<line") == 5);
    CHECK(count(s, "<polygon") == 2);
    std::string d = cli::slurp(dot);
    CHECK(count(d, " -- ") == 5);
    CHECK(count(d, "subgraph cluster_") == 2);

    REQUIRE(edgecone("crosscut " + input("k22.json") + " --degree 1,1,1,1" + files).code == 0);
    CHECK(count(cli::slurp(svg), "fill=\"black\"") == 4);

    REQUIRE(edgecone("crosscut " + input("double_pyramid.json") + " --degree 0,0,0,-1" + files).code == 0);
    s = cli::slurp(svg);
    CHECK(count(s, "<circle") == 0);
    CHECK(s.find("empty compact part") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(edgecone("").code == 1);
    CHECK(edgecone("info").code == 1);
    CHECK(edgecone("info /nonexistent/graph.json").code == 1);
    CHECK(edgecone("faces --dim 4 " + input("k22.json")).code == 1);
    CHECK(edgecone("t1 " + input("k22.json") + " --degree 1,x,1,1").code == 1);
    CHECK(edgecone("info " + input("double_pyramid.json")).code == 1);
    CHECK(cli::run("echo '{\"m\":2' | " + cli::quote(binary) + " info -").code == 1);
    CHECK(cli::run("printf '2 2\\n1 3\\n2 4\\n' | " + cli::quote(binary) + " info -").code == 2);
    CHECK(edgecone("t1 " + input("k22.json") + " --degree 1,0,0,0").code == 2);
    CHECK(edgecone("t1 " + input("k22.json") + " --degree 1,1,1").code == 2);
    CHECK(cli::run("EDGECONE_ORACLE_LIMIT=3 " + cli::quote(binary) + " oracle-check " + input("k22.json")).code == 2);
    CHECK(cli::run("EDGECONE_ORACLE_LIMIT=4 " + cli::quote(binary) + " oracle-check " + input("k22.json")).code == 0);
    CHECK(cli::run("cat " + input("kucuk.txt") + " | " + cli::quote(binary) + " info -").code == 0);
}
