#include "fixture.hpp"

#include "dehnext/json_io.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace dehnext;
using dehnext::testing::bundled;
using io::json;

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int code = -1;
    std::string out, err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch() {
    const fs::path dir = fs::temp_directory_path() / ("dehnext-cli-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

RunResult run_cli(const std::string& args) {
    const fs::path dir = scratch();
    const fs::path out = dir / "stdout.txt", err = dir / "stderr.txt";
    const std::string cmd = std::string("\"") + DEHNEXT_CLI + "\" " + args + " > \"" + out.string() + "\" 2> \"" +
                            err.string() + "\"";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string write_words(const std::string& name, const json& words) {
    const fs::path p = scratch() / name;
    io::save_file(p.string(), json{{"generators", {"a", "b", "t"}}, {"words", words}});
    return p.string();
}

}  // namespace

TEST_CASE("JSON round trips") {
    const Pipeline& p = bundled();
    CHECK(io::presentation_from_json(io::to_json(p.group)) == p.group);
    const auto rep = io::representation_from_json(io::to_json(p.complete.rep, "figure8"));
    REQUIRE(rep.images.size() == p.complete.rep.images.size());
    for (std::size_t i = 0; i < rep.images.size(); ++i)
        CHECK(projective_distance(rep.images[i], p.complete.rep.images[i]) == 0.0);
    const SlopeTuple z{Slope(3, 2), Slope(), Slope(-1, 4)};
    CHECK(io::slope_tuple_from_json(io::to_json(z)) == z);
    const Pointd x({0.25, -1.5}, 3.0);
    const Pointd y = io::point_from_json(io::to_json(x));
    CHECK(y.horizontal == x.horizontal);
    CHECK(y.height == x.height);
    const auto nf = reduce(from_extension_word(p.ext, {2, 3, 1, 3}), p.ext, p.oracle);
    CHECK(io::amalgam_from_json(io::to_json(nf.reduced)) == nf.reduced);
    CHECK_THROWS_AS(io::presentation_from_json(json{{"generators", 3}}), ValidationError);
}

TEST_CASE("config hashes") {
    const ExperimentConfig c = default_config();
    CHECK(c.hash() == default_config().hash());
    CHECK(c.hash() == io::config_hash(c.to_json()));
    ExperimentConfig d = c;
    d.count = 11;
    CHECK(d.hash() != c.hash());
    d = c;
    d.tol.trivial = 2e-6;
    CHECK(d.hash() != c.hash());
    // Loading the bundled file gives the default.
    CHECK(load_config(data_dir() + "/experiment.json").hash() == c.hash());
    CHECK(io::fnv1a("") == 14695981039346656037ull);
    CHECK(io::fnv1a("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("identical configs give identical results") {
    ExperimentConfig c = default_config();
    c.count = 3;
    const Pipeline p1 = prepare(c, true), p2 = prepare(c, true);
    REQUIRE(p1.sequence.size() == p2.sequence.size());
    for (std::size_t i = 0; i < p1.sequence.size(); ++i)
        CHECK(io::to_json(p1.sequence[i]).dump() == io::to_json(p2.sequence[i]).dump());
    const auto s1 = sample_killed_polygons(p1, 30, 9), s2 = sample_killed_polygons(p2, 30, 9);
    REQUIRE(s1.size() == s2.size());
    for (std::size_t i = 0; i < s1.size(); ++i) CHECK(s1[i].word == s2[i].word);
}

TEST_CASE("cli: extend") {
    auto r = run_cli("extend --denominator 1");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("command") == "extend");
    CHECK(j.at("config_hash").get<std::string>().size() == 16);
    const auto group = io::presentation_from_json(io::load_file(data_dir() + "/figure8.json"));
    CHECK(io::presentation_from_json(j["result"]["extension"]["presentation"]) == group);
    // Modulo 1 every slope is congruent: a single class.
    CHECK(j["result"]["class_count"] == 1);

    r = run_cli("extend --slope 1,0 --denominator 2");
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["result"]["class_count"] == 3);
    const auto ext = io::presentation_from_json(j["result"]["extension"]["presentation"]);
    CHECK(ext.generators.back() == "t");
    CHECK(ext.relators.size() == group.relators.size() + 3);
    // Presentation length 10: T = 2 * 3^10.
    CHECK(j["result"]["presentation_length"] == 10);
    CHECK(j["result"]["bounds"]["T"] == std::to_string(2 * 59049));

    r = run_cli("extend --include-trivial --denominator 2");
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["result"]["class_count"] == 4);
}

TEST_CASE("cli: validation errors") {
    auto r = run_cli("stability --words " + write_words("empty.json", json::array()));
    CHECK(r.code == 2);
    CHECK(r.err.find("no words") != std::string::npos);
    CHECK(run_cli("extend --slope 2,4").code == 2);
    CHECK(run_cli("extend --slope x").code == 2);
    CHECK(run_cli("extend --denominator 0").code == 2);
    CHECK(run_cli("sequence --count 0").code == 2);
    CHECK(run_cli("bogus").code == 2);
}

TEST_CASE("cli: exceptional slopes") {
    auto r = run_cli("fill --slope 5,2 --exceptional 5,2");
    CHECK(r.code == 3);
    r = run_cli("fill --slope 1,1");
    CHECK(r.code == 3);
}

TEST_CASE("cli: polygons with an explicit word list") {
    const std::string words = write_words("poly.json", json::array({
        json{{"name", "open"}, {"letters", {2, 3, -2, 1, 3, 2, 3}}},
        json{{"name", "short"}, {"letters", {3}}},
    }));
    const fs::path out = scratch() / "out";
    const auto r = run_cli("polygons --count 2 --polygons 0 --words " + words + " --out " + out.string());
    REQUIRE(r.code == 0);
    const json j = io::load_file((out / "polygons.json").string());
    const json& skipped = j["result"]["skipped"];
    bool open = false, short_word = false;
    for (const auto& s : skipped) {
        if (s["word"] == "open" && s["reason"] == "open polygon") open = true;
        if (s["word"] == "short") short_word = true;
    }
    CHECK(open);
    CHECK(short_word);
    CHECK(j["result"]["polygon_count"] == 0);
    CHECK(j.contains("config_hash"));
}

TEST_CASE("cli: sequence and reduce") {
    auto r = run_cli("sequence --count 2");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["config"]["sequence"]["count"] == 2);
    r = run_cli("reduce");
    CHECK(r.code == 0);
}
