#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rigged/cli.hpp"
#include "rigged/gallery.hpp"
#include "rigged/report.hpp"
#include "rigged/system_file.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "rigged");
    std::ostringstream out, err;
    const int code = rigged::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "rigged_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
    const fs::path p = scratch(name);
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
}

const char* kTwoRows = R"({"triple": {"dim": 2, "max_order": 1},
  "measure": {"kind": "counting", "N": 2},
  "table": [[[1, 0], [0, 0]], [[1, 0], [1, 0]]]})";

const char* kDuplicated = R"({"triple": {"dim": 2, "max_order": 1},
  "measure": {"kind": "counting", "N": 2},
  "table": [[1, 2], [1, 2]]})";

bool all_finite(const json& j) {
    if (j.is_number_float()) return std::isfinite(j.get<double>());
    if (j.is_structured())
        for (const auto& v : j) if (!all_finite(v)) return false;
    return true;
}

} // namespace

TEST_CASE("sha256 digest") {
    CHECK(rigged::cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("gallery --list prints five names") {
    const Result r = run({"gallery", "--list"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::vector<std::string> names;
    while (std::getline(in, line)) names.push_back(line);
    CHECK(names == rigged::gallery_names());
}

TEST_CASE("gallery files round-trip through classify") {
    const std::string path = scratch("onb3.json").string();
    REQUIRE(run({"--out", path, "gallery", "onb", "d=3"}).code == 0);
    const Result r = run({"--no-timestamp", "classify", path});
    REQUIRE(r.code == 0);
    const json rep = json::parse(r.out);
    CHECK(rep["bounds"]["lower"].get<double>() == doctest::Approx(1.0));
    CHECK(rep["bounds"]["upper"].get<double>() == doctest::Approx(1.0));
    CHECK(rep["classification"]["frame"]["value"] == true);
    CHECK(all_finite(rep));
    CHECK_FALSE(rep["provenance"].contains("timestamp"));
    CHECK(rep["provenance"]["input_digest"].get<std::string>().rfind("sha256:", 0) == 0);

    // The report matches the in-memory classification exactly.
    const rigged::SampledMap m = rigged::make_onb(3);
    CHECK(rep["classification"] == rigged::to_json(rigged::classify(m, m.triple())));

    const std::string fourier = scratch("fourier.json").string();
    REQUIRE(run({"--out", fourier, "gallery", "fourier", "d=4", "N=32"}).code == 0);
    const json fr = json::parse(run({"classify", fourier}).out);
    CHECK(std::abs(fr["bounds"]["lower"].get<double>() - 1.0) <= 1e-10);
    CHECK(std::abs(fr["bounds"]["upper"].get<double>() - 1.0) <= 1e-10);
    CHECK(fr["provenance"].contains("timestamp"));
}

TEST_CASE("gallery references carry the family companion") {
    const std::string path = scratch("dp.json").string();
    REQUIRE(run({"--out", path, "gallery", "delta_prime", "d=4", "--reference"}).code == 0);
    const json rep = json::parse(run({"classify", path}).out);
    CHECK(rep["classification"]["bessel_certificate"]["order"] == 1);
    CHECK(rep["classification"]["total"]["value"] == true);
    CHECK(rep["system"]["gallery"]["name"] == "delta_prime");
}

TEST_CASE("solve reports solutions and unsolvable targets") {
    const std::string onb = scratch("onb2.json").string();
    REQUIRE(run({"--out", onb, "gallery", "onb", "d=2"}).code == 0);
    const Result r = run({"solve", onb, "--moments", "[1, 2]"});
    REQUIRE(r.code == 0);
    const json m = json::parse(r.out)["moment"];
    CHECK(m["solution"][0][0].get<double>() == doctest::Approx(1.0));
    CHECK(m["solution"][1][0].get<double>() == doctest::Approx(2.0));
    CHECK(m["residual"].get<double>() <= 1e-14);
    CHECK(m["solvable"] == true);
    const json stab = json::parse(r.out)["stability_constants"];
    CHECK(stab["constants"].size() == 3);

    const std::string dup = write("dup.json", kDuplicated);
    const std::string moments = write("h.json", "[[1, 0], [-1, 0]]");
    const Result d = run({"solve", dup, "--moments", moments});
    CHECK(d.code == 0);
    const json dm = json::parse(d.out)["moment"];
    CHECK(dm["residual"].get<double>() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(dm["solvable"] == false);

    const Result bad = run({"solve", onb, "--moments", "[1, 2, 3]"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("moments length") != std::string::npos);
}

TEST_CASE("certify examples") {
    const std::string onb = scratch("onb2c.json").string();
    REQUIRE(run({"--out", onb, "gallery", "onb", "d=2"}).code == 0);
    const json a = json::parse(run({"certify", onb}).out);
    CHECK(a["rf_certificate"]["holds"] == true);
    CHECK(a["rf_certificate"]["witness_radius"].get<double>() == doctest::Approx(1.0));
    CHECK(a["equivalence"]["agrees"] == true);

    const json b = json::parse(run({"certify", write("two.json", kTwoRows)}).out);
    CHECK(b["rf_certificate"]["witness_radius"].get<double>() == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));

    const json c = json::parse(run({"certify", write("dupc.json", kDuplicated)}).out);
    CHECK(c["rf_certificate"]["holds"] == false);
    CHECK(c["equivalence"]["agrees"] == true);
}

TEST_CASE("reports are byte-identical for identical inputs and seeds") {
    const std::string path = write("two_det.json", kTwoRows);
    for (const std::string cmd : {"classify", "certify"}) {
        const Result x = run({"--no-timestamp", "--seed", "17", cmd, path});
        const Result y = run({"--no-timestamp", "--seed", "17", cmd, path});
        CHECK(x.code == 0);
        CHECK(x.out == y.out);
    }
    const std::string out = scratch("report.json").string();
    REQUIRE(run({"--no-timestamp", "--out", out, "classify", path}).code == 0);
    std::ifstream in(out);
    const std::string file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(file == run({"--no-timestamp", "classify", path}).out);
}

TEST_CASE("malformed inputs exit 2 with distinct messages") {
    const std::vector<std::pair<std::string, std::string>> cases{
        {"missing_measure", R"({"triple": {"dim": 1, "max_order": 0}, "table": [[1]]})"},
        {"nonpositive_weight",
         R"({"triple": {"dim": 1, "max_order": 0}, "measure": {"kind": "custom", "nodes": [0, 1], "weights": [1, 0]}, "table": [[1], [1]]})"},
        {"nan_entry", R"({"triple": {"dim": 1, "max_order": 0}, "measure": {"kind": "counting", "N": 1}, "table": [[NaN]]})"},
        {"overflow_entry", R"({"triple": {"dim": 1, "max_order": 0}, "measure": {"kind": "counting", "N": 1}, "table": [[1e999]]})"},
        {"shape_mismatch", R"({"triple": {"dim": 2, "max_order": 0}, "measure": {"kind": "counting", "N": 1}, "table": [[1]]})"},
        {"both_forms", R"({"gallery": {"name": "onb"}, "triple": {"dim": 1, "max_order": 0}, "table": [[1]]})"},
        {"unknown_gallery", R"({"gallery": {"name": "gabor"}})"},
    };
    std::set<std::string> messages;
    for (const auto& [name, text] : cases) {
        const Result r = run({"classify", write(name + ".json", text)});
        CHECK_MESSAGE(r.code == 2, name);
        CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
        messages.insert(r.err);
    }
    CHECK(messages.size() == cases.size());
    CHECK(run({"classify", scratch("does_not_exist.json").string()}).code == 2);
    CHECK(run({"gallery", "gabor"}).code == 2);
    CHECK(run({"gallery", "onb", "d=two"}).code == 2);
    CHECK(run({"classify"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--rank-tol", "-1", "classify", "x.json"}).code == 2);
}

TEST_CASE("system files round-trip bit for bit") {
    for (const auto& name : rigged::gallery_names()) {
        const rigged::GallerySystem g = rigged::make_gallery({name, {}});
        const json doc = rigged::system_to_json(g.map);
        const rigged::LoadedSystem back = rigged::parse_system_text(doc.dump());
        CHECK(back.map.table() == g.map.table());
        CHECK(back.map.measure() == g.map.measure());
        CHECK(back.map.triple() == g.map.triple());
        CHECK_FALSE(back.companion);
    }
}
