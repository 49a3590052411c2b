#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "worm/graph6.hpp"
#include "worm/io.hpp"

using namespace worm;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path()
{
    const char* path = std::getenv("WORM_CLI");
    REQUIRE(path != nullptr);
    return path;
}

RunResult run_cli(const std::string& args)
{
    const std::string command = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe))
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string strip_newline(std::string s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
        s.pop_back();
    return s;
}

std::string temp_file(const std::string& name, const std::string& content)
{
    const std::string path = "/tmp/worm_cli_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("gen emits graph6")
{
    const auto k9 = run_cli("gen complete 9");
    REQUIRE(k9.exit_code == 0);
    REQUIRE(strip_newline(k9.output) == encode_graph6(complete(9)));

    const auto product = run_cli("gen product c5 k3");
    REQUIRE(product.exit_code == 0);
    const auto decoded = decode_graph6(strip_newline(product.output));
    REQUIRE(decoded.vertex_count() == 15);
    REQUIRE(decoded.edge_count() == 60);

    const auto groetzsch = run_cli("gen groetzsch");
    REQUIRE(groetzsch.exit_code == 0);
    const auto g = decode_graph6(strip_newline(groetzsch.output));
    REQUIRE(g.vertex_count() == 11);
    REQUIRE(is_triangle_free(g));
}

TEST_CASE("usage errors exit with 2")
{
    REQUIRE(run_cli("gen no-such-graph").exit_code == 2);
    REQUIRE(run_cli("nonsense").exit_code == 2);
    REQUIRE(run_cli("solve --g k5 --pattern k3").exit_code == 2); // missing --k
}

TEST_CASE("construct writes graph and layout")
{
    const std::string layout_path = "/tmp/worm_cli_test_layout.json";
    const auto r = run_cli("construct gadget --pattern c4 --layout " + layout_path);
    REQUIRE(r.exit_code == 0);
    REQUIRE(decode_graph6(strip_newline(r.output)).vertex_count() == 10);
    std::ifstream layout_file(layout_path);
    REQUIRE(layout_file.good());
    const auto layout = json::parse(layout_file);
    REQUIRE(layout["kind"] == "gadget");
    REQUIRE(layout["s"].size() == 7);
    REQUIRE(layout["s_prime"].size() == 1);

    const auto gap = run_cli("construct gap --g groetzsch --n 4");
    REQUIRE(gap.exit_code == 0);
    REQUIRE(decode_graph6(strip_newline(gap.output)).vertex_count() == 36);

    const auto c1r = run_cli("construct c1 --g k2 --pattern c4");
    REQUIRE(c1r.exit_code == 0);
    REQUIRE(decode_graph6(strip_newline(c1r.output)).vertex_count() == 128);

    REQUIRE(run_cli("construct gadget --pattern p3").exit_code == 2); // not 2-connected
}

TEST_CASE("copies")
{
    const auto r = run_cli("copies --g k4 --pattern k3");
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.output);
    REQUIRE(j["n"] == 3);
    REQUIRE(j["copies"].size() == 4);
}

TEST_CASE("verify exit codes")
{
    const auto ok_path = temp_file("ok.json", R"({"colors":[0,0,0,1,1,1,2,2,2]})");
    const auto ok = run_cli("verify --g k9 --pattern k4 --coloring " + ok_path);
    REQUIRE(ok.exit_code == 0);
    REQUIRE(json::parse(ok.output)["verdict"] == "ok");

    const auto bad_path = temp_file("bad.json", R"({"colors":[0,0,0,0,0,0,0,0,0]})");
    const auto bad = run_cli("verify --g k9 --pattern k4 --coloring " + bad_path);
    REQUIRE(bad.exit_code == 1);
    const auto verdict = json::parse(bad.output);
    REQUIRE(verdict["verdict"] == "monochromatic_copy");
    REQUIRE(verdict["member"].size() == 4);

    const auto garbled_path = temp_file("garbled.json", "{not json");
    REQUIRE(run_cli("verify --g k9 --pattern k4 --coloring " + garbled_path).exit_code == 2);
}

TEST_CASE("solve and spectrum")
{
    const auto feasible = run_cli("solve --g k9 --pattern k4 --k 3");
    REQUIRE(feasible.exit_code == 0);
    const auto fj = json::parse(feasible.output);
    REQUIRE(fj["status"] == "feasible");
    REQUIRE(fj["witness"]["colors"].size() == 9);

    REQUIRE(run_cli("solve --g k9 --pattern k4 --k 4").exit_code == 1);
    REQUIRE(run_cli("solve --g k9 --pattern k4 --k 3 --node-limit 2").exit_code == 3);

    const auto spectrum = run_cli("spectrum --g k9 --pattern k4 --no-timing");
    REQUIRE(spectrum.exit_code == 0);
    const auto sj = json::parse(spectrum.output);
    REQUIRE(sj["k"]["3"] == "feasible");
    REQUIRE(sj["k"]["4"] == "infeasible");
    REQUIRE(sj["w_minus"] == 3);
    REQUIRE(sj["w_plus"] == 3);
    REQUIRE(sj["gaps"].empty());
    REQUIRE_FALSE(sj.contains("timing_ms"));

    const auto c5 = run_cli("spectrum --g c5 --pattern k3 --no-timing");
    REQUIRE(c5.exit_code == 0);
    const auto c5j = json::parse(c5.output);
    REQUIRE(c5j["w_minus"] == 1);
    REQUIRE(c5j["w_plus"] == 5);
}

TEST_CASE("gap-graph spectrum shows the hole at 4 colors")
{
    const auto r = run_cli("construct gap --g groetzsch --n 4 | " + cli_path()
                           + " spectrum --g - --pattern k4 --no-timing --threads 4");
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.output);
    REQUIRE(j["k"]["3"] == "feasible");
    REQUIRE(j["k"]["4"] == "infeasible");
    REQUIRE(j["k"]["5"] == "feasible");
    REQUIRE(j["w_minus"] == 3);
    REQUIRE(j["w_plus"] == 12);
    REQUIRE(j["gaps"] == json::array({{{"start", 4}, {"size", 1}}}));
}

TEST_CASE("spectrum output is deterministic with --no-timing")
{
    const auto a = run_cli("spectrum --g k8 --pattern k4 --no-timing");
    const auto b = run_cli("spectrum --g k8 --pattern k4 --no-timing");
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.output == b.output);
}

TEST_CASE("graph arguments accept files and stdin pipelines")
{
    const auto g6 = encode_graph6(complete(9));
    const auto path = temp_file("k9.g6", g6 + "\n");
    const auto from_file = run_cli("spectrum --g " + path + " --pattern k4 --no-timing");
    REQUIRE(from_file.exit_code == 0);
    REQUIRE(json::parse(from_file.output)["w_minus"] == 3);

    const auto piped = run_cli("gen complete 9 | " + cli_path()
                               + " spectrum --g - --pattern k4 --no-timing");
    REQUIRE(piped.exit_code == 0);
    REQUIRE(json::parse(piped.output)["w_minus"] == 3);
}

TEST_CASE("witness subcommands")
{
    const auto low = run_cli("witness gap-low --g groetzsch --n 4");
    REQUIRE(low.exit_code == 0);
    const auto lj = json::parse(low.output);
    REQUIRE(lj["used"] == 3);
    REQUIRE(lj["colors"].size() == 36);

    const auto high = run_cli("witness gap-high --g groetzsch --n 4 --colors 11");
    REQUIRE(high.exit_code == 0);
    REQUIRE(json::parse(high.output)["used"] == 12);

    const auto c1w = run_cli("witness c1 --g c5 --pattern c4 --colors 3 --n0 6");
    REQUIRE(c1w.exit_code == 0);
    const auto cj = json::parse(c1w.output);
    REQUIRE(cj["used"] == 3);
    REQUIRE(cj["outer_colors"] == 3);

    // round trip: verify the emitted witness through the verify subcommand
    const auto coloring_path =
        temp_file("gaplow.json", json{{"colors", lj["colors"]}}.dump());
    const auto gap_g6_path = temp_file("gap.g6",
        strip_newline(run_cli("construct gap --g groetzsch --n 4").output) + "\n");
    const auto verified = run_cli("verify --g " + gap_g6_path + " --pattern k4 --coloring "
                                  + coloring_path);
    REQUIRE(verified.exit_code == 0);
}
