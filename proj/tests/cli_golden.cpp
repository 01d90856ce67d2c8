#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

// Golden tests shelling out to the real binary.  FINFISH_CLI_PATH is baked
// in by the build so the tests run from any working directory.

namespace {

using nlohmann::json;

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_raw(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

RunResult run(const std::string& args) {
    return run_raw(std::string(FINFISH_CLI_PATH) + " " + args);
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

std::size_t occurrences(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("cli sort") {
    RunResult r = run("sort 2,4,3,1");
    CHECK(r.status == 0);
    CHECK(r.out == "2,1,3,4\n");

    RunResult piped = run_raw("echo 2,4,3,1 | " + std::string(FINFISH_CLI_PATH) + " sort -");
    CHECK(piped.status == 0);
    CHECK(piped.out == "2,1,3,4\n");

    CHECK(run("sort 2,2").status == 2);
    CHECK(run("sort abc").status == 2);
}

TEST_CASE("cli check") {
    RunResult bad = run("check 2,3,4,1");
    CHECK(bad.status == 1);
    CHECK(bad.out == "not 2-stack-sortable\n");

    RunResult good = run("check 2,4,3,1");
    CHECK(good.status == 0);
    CHECK(good.out == "2-stack-sortable\n");

    CHECK(run("check ''").status == 2);
}

TEST_CASE("cli decompose") {
    RunResult r = run("decompose 2,4,3,1");
    CHECK(r.status == 0);
    CHECK(r.out == "kind: C2\ni: 1\np1: 1\np2: 2,1\n");

    RunResult j = run("decompose 3,1,2,5,7,6,4 --format json");
    CHECK(j.status == 0);
    json parsed = json::parse(j.out);
    CHECK(parsed["format"] == "ff-v1");
    CHECK(parsed["kind"] == "C2");  // 5 exceeds min(6,4)
    CHECK(parsed["i"] == 1);
    CHECK(parsed["p1"] == json({3, 1, 2, 4}));
    CHECK(parsed["p2"] == json({2, 1}));

    RunResult c1 = run("decompose 2,1,3 --format json");
    CHECK(c1.status == 0);
    json flat = json::parse(c1.out);
    CHECK(flat["kind"] == "C1");
    CHECK(flat["i"].is_null());
    CHECK(flat["p1"] == json({2, 1}));
    CHECK(flat["p2"] == json(json::array()));

    CHECK(run("decompose 2,3,4,1").status == 1);  // not two-stack sortable
}

TEST_CASE("cli phi golden") {
    RunResult r = run("phi 2,4,3,1 --format json");
    CHECK(r.status == 0);
    json fish = json::parse(r.out);
    CHECK(fish["format"] == "ff-v1");
    CHECK(fish["cells"].size() == 4);
    CHECK(fish["stats"]["size"] == 5);
    CHECK(fish["stats"]["lsize"] == 2);
    CHECK(fish["stats"]["rsize"] == 3);
    CHECK(fish["stats"]["fin"] == 4);
    CHECK(fish["stats"]["tails"] == 2);

    RunResult text = run("phi 1");
    CHECK(text.status == 0);
    CHECK(text.out.find("cells: 1") != std::string::npos);
    CHECK(text.out.find("size=2 lsize=1 rsize=1 fin=2 tails=1") != std::string::npos);

    CHECK(run("phi 2,3,4,1").status == 1);
    CHECK(run("phi 1,1").status == 2);
}

TEST_CASE("cli phi inverse and fish decompose round trip") {
    RunResult fish = run("phi 2,4,3,1 --format json");
    REQUIRE(fish.status == 0);
    const auto path = temp_file("ff_fish.json", fish.out);

    RunResult back = run("phi-inverse " + path.string());
    CHECK(back.status == 0);
    CHECK(back.out == "2,4,3,1\n");

    RunResult dec = run("decompose " + path.string() + " --format json");
    CHECK(dec.status == 0);
    json w = json::parse(dec.out);
    CHECK(w["format"] == "ff-v1");
    CHECK(w["kind"] == "C2");
    CHECK(w["i"] == 1);
    CHECK(w["p1"]["cells"].size() == 1);
    CHECK(w["p2"]["cells"].size() == 2);

    const auto junk = temp_file("ff_junk.json", "{\"head\":0}");
    CHECK(run("phi-inverse " + junk.string()).status == 2);

    // Structurally fine JSON that is not a constructible fish.
    const auto ring = temp_file(
        "ff_ring.json",
        "{\"head\":0,\"cells\":["
        "{\"id\":0,\"LL\":null,\"LR\":[1,\"UL\"],\"UR\":null,\"UL\":null},"
        "{\"id\":1,\"LL\":[4,\"UR\"],\"LR\":null,\"UR\":[2,\"LL\"],\"UL\":[0,\"LR\"]},"
        "{\"id\":2,\"LL\":[1,\"UR\"],\"LR\":null,\"UR\":[3,\"LL\"],\"UL\":null},"
        "{\"id\":3,\"LL\":[2,\"UR\"],\"LR\":null,\"UR\":[4,\"LL\"],\"UL\":null},"
        "{\"id\":4,\"LL\":[3,\"UR\"],\"LR\":null,\"UR\":[1,\"LL\"],\"UL\":null}]}");
    CHECK(run("phi-inverse " + ring.string()).status == 1);
}

TEST_CASE("cli enumerate") {
    RunResult r = run("enumerate -n 4");
    CHECK(r.status == 0);
    CHECK(occurrences(r.out, "\n") == 22);
    CHECK(r.out.rfind("1,2,3,4\n", 0) == 0);
    CHECK(r.out.find("2,3,4,1") == std::string::npos);

    RunResult j = run("enumerate -n 3 --method grammar --workers 2 --format json");
    CHECK(j.status == 0);
    json parsed = json::parse(j.out);
    CHECK(parsed["count"] == 6);
    CHECK(parsed["method"] == "grammar");
    CHECK(parsed["permutations"].size() == 6);

    CHECK(run("enumerate -n 11").status == 2);
    CHECK(run("enumerate").status == 2);
}

TEST_CASE("cli gf") {
    RunResult r = run("gf --order 2");
    CHECK(r.status == 0);
    CHECK(r.out == "1 t x u v + 1 t^2 x^2 u v^2 q + 1 t^2 x^2 u^2 v p\n");

    RunResult sys = run("gf --order 4 --check-system");
    CHECK(sys.status == 0);
    CHECK(occurrences(sys.out, "residual") == 4);
    CHECK(sys.out.find("residual full: 0") != std::string::npos);
    CHECK(sys.out.find("system satisfied") != std::string::npos);

    RunResult js = run("gf --order 3 --check-system --json");
    CHECK(js.status == 0);
    json parsed = json::parse(js.out);
    CHECK(parsed["pass"] == true);
    CHECK(parsed["equations"].size() == 4);

    CHECK(run("gf --order 11").status == 2);
    CHECK(run("gf").status == 2);
}

TEST_CASE("cli verify") {
    RunResult r = run("verify --max-n 4");
    CHECK(r.status == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);

    RunResult j = run("verify --max-n 3 --workers 2 --json");
    CHECK(j.status == 0);
    json parsed = json::parse(j.out);
    CHECK(parsed["pass"] == true);
    CHECK(parsed["permutations"] == 9);

    CHECK(run("verify --max-n 9").status == 2);
}

TEST_CASE("cli render") {
    RunResult r = run("render 2,4,3,1");
    CHECK(r.status == 0);
    CHECK(occurrences(r.out, "<polygon") == 4);
    CHECK(occurrences(r.out, "class=\"tail\"") == 2);
    CHECK(occurrences(r.out, "class=\"fin\"") == 4);

    const auto empty = temp_file("ff_empty.json", "{\"head\":null,\"cells\":[]}");
    RunResult note = run("render " + empty.string());
    CHECK(note.status == 0);
    CHECK(note.out.find("empty fish") != std::string::npos);

    const auto svg_path = std::filesystem::temp_directory_path() / "ff_out.svg";
    std::filesystem::remove(svg_path);
    RunResult to_file = run("render 1 -o " + svg_path.string());
    CHECK(to_file.status == 0);
    CHECK(to_file.out.empty());
    std::ifstream in(svg_path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(occurrences(content, "<polygon") == 1);
}

TEST_CASE("cli usage errors") {
    CHECK(run("").status == 2);
    CHECK(run("frobnicate 1,2").status == 2);
    CHECK(run("sort --bogus 1").status == 2);
    CHECK(run("--help").status == 0);
}
