#include "shy/cli/io.hpp"
#include "shy/cli/run.hpp"
#include "shy/connectivity.hpp"
#include "shy/constructions.hpp"
#include "shy/enumeration.hpp"
#include "shy/verification.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using namespace shy;
using namespace shy::cli;

namespace {

const std::filesystem::path data_dir{SHY_TEST_DATA_DIR};

std::filesystem::path data(const char* name)
{
    return data_dir / name;
}

std::filesystem::path scratch(const std::string& name, const std::string& text)
{
    const auto dir = std::filesystem::temp_directory_path() / "shy_test_cli";
    std::filesystem::create_directories(dir);
    const auto p = dir / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
}

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome invoke(const RunConfig& c)
{
    std::ostringstream out, err;
    const int status = run(c, out, err);
    return {status, out.str(), err.str()};
}

Outcome invoke_argv(std::vector<const char*> args)
{
    args.insert(args.begin(), "shymap");
    std::ostringstream out, err;
    const int status = main_entry(static_cast<int>(args.size()), args.data(), out, err);
    return {status, out.str(), err.str()};
}

std::string message_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const SchemaError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("parse images")
{
    const auto img = parse_image(R"({"dimension": 2, "adjacency": {"kind": "cu", "u": 1},
                                     "points": [[1, 0], [0, 0]]})");
    CHECK(img.size() == 2);
    CHECK(img.point(0) == Point{0, 0});
    CHECK(is_connected(img));

    const auto prod = parse_image(R"({"dimension": 2,
        "adjacency": {"kind": "normal_product", "left": {"kind": "cu", "u": 1}, "left_dim": 1,
                      "right": {"kind": "cu", "u": 1}, "right_dim": 1},
        "points": [[0, 0], [1, 1]]})");
    CHECK(prod.edge_count() == 1);

    const auto fig = image_from_json(json::parse(read_file(data("figure1_tree.json"))));
    CHECK(fig.size() == 11);
    CHECK(fig.edge_count() == 10);
    CHECK(fig == figure_tree().image);
}

TEST_CASE("image schema errors name the field")
{
    CHECK(message_of([] {
              (void)parse_image(R"({"dimension": 1, "adjacency": {"kind": "cu", "u": 1},
                                    "points": [[0], [1, 2]]})");
          }).find("image.points[1]") != std::string::npos);
    CHECK(message_of([] {
              (void)parse_image(R"({"dimension": 1, "adjacency": {"kind": "cu", "u": 1},
                                    "points": [[0], [0]]})");
          }).find("duplicate") != std::string::npos);
    CHECK(message_of([] {
              (void)parse_image(R"({"dimension": 1, "adjacency": {"kind": "cu", "u": 2},
                                    "points": [[0]]})");
          }).find("image.adjacency") != std::string::npos);
    CHECK(message_of([] {
              (void)parse_image(R"({"dimension": 1, "adjacency": {"kind": "hex"}, "points": []})");
          }).find("image.adjacency.kind") != std::string::npos);
    CHECK(message_of([] { (void)parse_image(R"({"adjacency": {"kind": "cu", "u": 1}})"); })
              .find("dimension") != std::string::npos);
    CHECK(message_of([] { (void)parse_image("{\n  \"dimension\": 1,\n  oops }"); })
              .find("line 3") != std::string::npos);
    CHECK_THROWS_AS((void)parse_image(R"({"dimension": 1, "adjacency": {"kind": "cu", "u": 1},
                                          "points": [[0.5]]})"),
                    SchemaError);
    CHECK_THROWS_AS((void)parse_image(R"({"dimension": 1, "adjacency": {"kind": "explicit",
                                          "edges": [[[0], [9]]]}, "points": [[0]]})"),
                    SchemaError);
}

TEST_CASE("parse maps")
{
    const auto x = share(interval(0, 2));
    const auto y = share(interval(0, 1));
    const auto f = parse_map(read_file(data("monotone_map.json")), x, y);
    CHECK(f(Point{2}) == Point{1});
    CHECK(is_shy(f));
    CHECK_FALSE(is_shy(parse_map(read_file(data("fold_map.json")), x, y)));

    CHECK_THROWS_AS((void)parse_map(R"({"pairs": [[[0], [0]], [[1], [0]]]})", x, y), SchemaError);
    CHECK_THROWS_AS((void)parse_map(R"({"pairs": [[[0], [0]], [[1], [0]], [[2], [5]]]})", x, y),
                    SchemaError);
    CHECK_THROWS_AS((void)parse_map(R"({"pairs": [[[0], [0]], [[0], [1]], [[1], [0]], [[2], [1]]]})",
                                    x, y),
                    SchemaError);
    CHECK(message_of([&] { (void)parse_map(R"({"pairs": [[[0]]]})", x, y); })
              .find("map.pairs[0]") != std::string::npos);
    CHECK_THROWS_AS((void)read_file(data("no_such_file.json")), InvalidInput);
}

TEST_CASE("property: serialization round-trips")
{
    std::vector<ImagePtr> images = standard_corpus();
    for (const auto& f : factor_corpus())
        images.push_back(f);
    images.push_back(share(figure_tree().image));
    images.push_back(share(product_image(interval(0, 1), simple_closed_curve(4))));
    for (const auto& img : images) {
        const auto text = image_to_json(*img).dump();
        const auto back = parse_image(text);
        REQUIRE(back == *img);
        REQUIRE(image_to_json(back).dump() == text);
    }
    for (const auto& x : corpus_up_to(3))
        for (const auto& y : corpus_up_to(3))
            for (const auto& f : collect_maps({x, y, MapFilter::continuous}))
                REQUIRE(parse_map(map_to_json(f).dump(), x, y) == f);
}

TEST_CASE("check command")
{
    RunConfig c;
    c.command = "check";
    c.domain = data("interval_0_2.json");
    c.codomain = data("interval_0_1.json");
    c.map = data("monotone_map.json");
    c.expect = "shy";
    auto r = invoke(c);
    CHECK(r.status == exit_success);
    CHECK(r.out.find("shy: true") != std::string::npos);

    c.map = data("fold_map.json");
    r = invoke(c);
    CHECK(r.status == exit_property_false);
    CHECK(r.err.find("disconnected") != std::string::npos);

    c.expect.reset();
    c.format = ReportFormat::json;
    r = invoke(c);
    CHECK(r.status == exit_success);
    const auto doc = json::parse(r.out);
    CHECK(doc["classification"]["continuous"] == true);
    CHECK(doc["classification"]["shy"] == false);
    CHECK(doc["verdicts"]["shy"]["witness"] == json::parse("[[0]]"));

    c.expect = "bogus";
    CHECK(invoke(c).status == exit_input_error);
    c.expect.reset();
    c.map = scratch("bad_map.json", R"({"pairs": [[[0], [0]]]})");
    CHECK(invoke(c).status == exit_input_error);
    c.map = data("no_such_file.json");
    CHECK(invoke(c).status == exit_input_error);
    c.map.reset();
    CHECK(invoke(c).status == exit_input_error);
}

TEST_CASE("components, product and wedge commands")
{
    RunConfig c;
    c.command = "components";
    c.inputs = {scratch("two.json", R"({"dimension": 1, "adjacency": {"kind": "cu", "u": 1},
                                        "points": [[0], [1], [5]]})")};
    c.format = ReportFormat::json;
    auto r = invoke(c);
    REQUIRE(r.status == exit_success);
    auto doc = json::parse(r.out);
    CHECK(doc["connected"] == false);
    CHECK(doc["components"].size() == 2);

    c.command = "product";
    c.inputs = {data("interval_0_1.json"), data("interval_0_2.json")};
    r = invoke(c);
    REQUIRE(r.status == exit_success);
    const auto prod = parse_image(r.out);
    CHECK(prod == product_image(interval(0, 1), interval(0, 2)));

    c.command = "wedge";
    c.inputs = {scratch("neg.json", R"({"dimension": 1, "adjacency": {"kind": "cu", "u": 1},
                                        "points": [[-1], [0]]})"),
                data("interval_0_2.json")};
    c.junction = "[0]";
    r = invoke(c);
    REQUIRE(r.status == exit_success);
    CHECK(parse_image(r.out) == interval(-1, 2));

    c.junction = "[1]";
    CHECK(invoke(c).status == exit_input_error);
    c.junction = "[";
    CHECK(invoke(c).status == exit_input_error);
    c.inputs.pop_back();
    CHECK(invoke(c).status == exit_input_error);
}

TEST_CASE("enumerate command")
{
    RunConfig c;
    c.command = "enumerate";
    c.domain = data("interval_0_2.json");
    c.codomain = data("interval_0_1.json");
    c.filter = "shy";
    c.format = ReportFormat::json;
    auto r = invoke(c);
    REQUIRE(r.status == exit_success);
    auto doc = json::parse(r.out);
    CHECK(doc["count"] == 4);
    CHECK(doc["maps"].size() == 4);

    c.count_only = true;
    c.filter = "all";
    doc = json::parse(invoke(c).out);
    CHECK(doc["count"] == 8);
    CHECK_FALSE(doc.contains("maps"));

    c.limit = 3;
    CHECK(json::parse(invoke(c).out)["count"] == 3);
    c.limit.reset();
    c.bound = 4;
    CHECK(invoke(c).status == exit_input_error);
    c.bound.reset();
    c.filter = "nope";
    CHECK(invoke(c).status == exit_input_error);
}

TEST_CASE("verify command")
{
    RunConfig c;
    c.command = "verify";
    c.suite = "monotone";
    c.params = {{"xlen", 4}, {"ylen", 2}};
    c.format = ReportFormat::json;
    auto r = invoke(c);
    REQUIRE(r.status == exit_success);
    auto doc = json::parse(r.out);
    CHECK(doc["passed"] == true);
    CHECK(doc["reports"][0]["instances_checked"] == 36);

    c.suite = "equivalences";
    c.params.clear();
    c.inputs = {data("interval_0_2.json"), data("interval_0_1.json")};
    r = invoke(c);
    CHECK(r.status == exit_success);

    c.suite = "no-such-suite";
    CHECK(invoke(c).status == exit_input_error);
}

TEST_CASE("argv parsing")
{
    CHECK(invoke_argv({"--help"}).status == exit_success);
    CHECK(invoke_argv({}).status == exit_input_error);
    CHECK(invoke_argv({"frobnicate"}).status == exit_input_error);
    CHECK(invoke_argv({"check", "--format", "yaml"}).status == exit_input_error);

    const auto dom = data("interval_0_2.json").string();
    const auto cod = data("interval_0_1.json").string();
    const auto fold = data("fold_map.json").string();
    const auto r = invoke_argv({"check", "--domain", dom.c_str(), "--codomain", cod.c_str(),
                                "--map", fold.c_str(), "--expect", "continuous"});
    CHECK(r.status == exit_success);
    CHECK(invoke_argv({"check", "--domain", dom.c_str(), "--codomain", cod.c_str(), "--map",
                       fold.c_str(), "--expect", "shy"})
              .status == exit_property_false);
    CHECK(invoke_argv({"verify", "cu-product", "--m", "1", "--n", "1", "--radius", "1"}).status ==
          exit_success);
}

TEST_CASE("json reports are deterministic apart from timing")
{
    RunConfig c;
    c.command = "verify";
    c.suite = "all";
    c.format = ReportFormat::json;
    const std::regex timing("\"wall_time\": [0-9.eE+-]+");
    const auto a = invoke(c);
    const auto b = invoke(c);
    REQUIRE(a.status == exit_success);
    CHECK(std::regex_replace(a.out, timing, "") == std::regex_replace(b.out, timing, ""));
}
