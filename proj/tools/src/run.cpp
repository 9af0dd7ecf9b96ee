#include "shy/cli/run.hpp"

#include "shy/cli/io.hpp"
#include "shy/connectivity.hpp"
#include "shy/constructions.hpp"
#include "shy/enumeration.hpp"
#include "shy/maps.hpp"
#include "shy/verification.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace shy::cli {

namespace {

class UsageError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

ImagePtr load_image(const std::optional<std::filesystem::path>& path, const char* flag)
{
    if (!path)
        throw UsageError(std::string("missing ") + flag);
    return share(parse_image(read_file(*path)));
}

ImagePtr load_image(const std::filesystem::path& path)
{
    return share(parse_image(read_file(path)));
}

std::int64_t param(const RunConfig& c, const std::string& name, std::int64_t fallback)
{
    auto it = c.params.find(name);
    return it == c.params.end() ? fallback : it->second;
}

int narrow(std::int64_t v, const std::string& name)
{
    if (v < 0 || v > 1'000'000)
        throw UsageError("--" + name + " out of range: " + std::to_string(v));
    return static_cast<int>(v);
}

std::string points_text(const std::vector<Point>& pts)
{
    std::string s = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i)
            s += ',';
        s += pts[i].to_string();
    }
    return s + "}";
}

std::string map_text(const std::vector<std::pair<Point, Point>>& pairs)
{
    std::string s;
    for (const auto& [x, y] : pairs) {
        if (!s.empty())
            s += ' ';
        s += x.to_string() + "->" + y.to_string();
    }
    return s;
}

json verdict_json(const Verdict& v)
{
    json witness = json::array();
    for (const auto& p : v.witness)
        witness.push_back(point_to_json(p));
    return {{"holds", v.holds}, {"reason", std::string(to_string(v.reason))}, {"witness", witness}};
}

void write_image(const DigitalImage& img, std::ostream& out)
{
    out << image_to_json(img).dump(2) << '\n';
}

int cmd_check(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    const auto dom = load_image(c.domain, "--domain");
    const auto cod = load_image(c.codomain, "--codomain");
    if (!c.map)
        throw UsageError("missing --map");
    const auto f = parse_map(read_file(*c.map), dom, cod);

    const std::vector<std::pair<std::string, Verdict>> verdicts{
        {"continuous", check_continuous(f)}, {"surjective", check_surjective(f)},
        {"injective", check_injective(f)},   {"shy", check_shy(f)},
        {"isomorphism", check_isomorphism(f)},
    };
    const Verdict* expected = nullptr;
    if (c.expect) {
        for (const auto& [name, v] : verdicts)
            if (name == *c.expect)
                expected = &v;
        if (!expected)
            throw UsageError("unknown property for --expect: " + *c.expect);
    }

    if (c.format == ReportFormat::json) {
        json doc{{"command", "check"}, {"classification", classification_to_json(classify(f))}};
        json details = json::object();
        for (const auto& [name, v] : verdicts)
            details[name] = verdict_json(v);
        doc["verdicts"] = details;
        if (c.expect) {
            doc["expect"] = *c.expect;
            doc["expectation_met"] = expected->holds;
        }
        out << doc.dump(2) << '\n';
    } else {
        for (const auto& [name, v] : verdicts) {
            out << name << ": " << (v.holds ? "true" : "false");
            if (!v.holds)
                out << " (" << to_string(v.reason) << ", witness " << points_text(v.witness) << ")";
            out << '\n';
        }
    }
    if (expected && !expected->holds) {
        err << "expected " << *c.expect << " but it fails: " << to_string(expected->reason)
            << ", witness " << points_text(expected->witness) << '\n';
        return exit_property_false;
    }
    return exit_success;
}

int cmd_components(const RunConfig& c, std::ostream& out, std::ostream&)
{
    ImagePtr img;
    if (c.domain)
        img = load_image(c.domain, "--domain");
    else if (c.inputs.size() == 1)
        img = load_image(c.inputs.front());
    else
        throw UsageError("components needs one image (positional or --domain)");
    const auto comps = connected_components(*img);
    if (c.format == ReportFormat::json) {
        json arr = json::array();
        for (const auto& comp : comps) {
            json pts = json::array();
            for (const auto& p : comp)
                pts.push_back(point_to_json(p));
            arr.push_back(pts);
        }
        out << json{{"command", "components"}, {"connected", comps.size() <= 1}, {"components", arr}}
                   .dump(2)
            << '\n';
    } else {
        out << comps.size() << " component(s)\n";
        for (const auto& comp : comps)
            out << to_string(comp) << '\n';
    }
    return exit_success;
}

int cmd_product(const RunConfig& c, std::ostream& out, std::ostream&)
{
    if (c.inputs.size() != 2)
        throw UsageError("product needs exactly two image files");
    write_image(product_image(*load_image(c.inputs[0]), *load_image(c.inputs[1])), out);
    return exit_success;
}

int cmd_wedge(const RunConfig& c, std::ostream& out, std::ostream&)
{
    if (c.inputs.size() != 2)
        throw UsageError("wedge needs exactly two image files");
    if (!c.junction)
        throw UsageError("wedge needs --junction, e.g. --junction '[0]'");
    const auto left = load_image(c.inputs[0]);
    const auto right = load_image(c.inputs[1]);
    json jp;
    try {
        jp = json::parse(*c.junction);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("--junction: ") + e.what());
    }
    const auto junction = point_from_json(jp, left->dimension(), "--junction");
    write_image(*wedge_image(*left, *right, junction).whole, out);
    return exit_success;
}

int cmd_enumerate(const RunConfig& c, std::ostream& out, std::ostream&)
{
    EnumerationSpec spec;
    spec.domain = load_image(c.domain, "--domain");
    spec.codomain = load_image(c.codomain, "--codomain");
    if (c.filter) {
        const auto f = parse_map_filter(*c.filter);
        if (!f)
            throw UsageError("unknown --filter " + *c.filter);
        spec.filter = *f;
    }
    spec.limit = c.limit;
    if (c.bound)
        spec.bound = static_cast<std::uint64_t>(*c.bound);

    json maps = json::array();
    std::ostringstream lines;
    const auto count = enumerate_maps(spec, [&](const DigitalFunction& f) {
        if (!c.count_only) {
            if (c.format == ReportFormat::json)
                maps.push_back(map_to_json(f));
            else
                lines << map_text(f.pairs()) << '\n';
        }
        return true;
    });
    if (c.format == ReportFormat::json) {
        json doc{{"command", "enumerate"}, {"filter", std::string(to_string(spec.filter))},
                 {"count", count}};
        if (!c.count_only)
            doc["maps"] = maps;
        out << doc.dump(2) << '\n';
    } else {
        out << lines.str() << count << " map(s)\n";
    }
    return exit_success;
}

VerificationReport run_single_suite(const RunConfig& c, const VerifyOptions& opts)
{
    const auto& s = c.suite;
    auto has = [&](const char* name) { return c.params.contains(name); };
    if (s == "monotone" && (has("xlen") || has("ylen")))
        return verify_monotone_characterization(narrow(param(c, "xlen", 4), "xlen"),
                                                narrow(param(c, "ylen", 2), "ylen"), opts);
    if (s == "scc-bound" && (has("m") || has("kmax")))
        return verify_scc_image_bound(narrow(param(c, "m", 4), "m"),
                                      narrow(param(c, "kmax", 3), "kmax"), opts);
    if (s == "cu-product" && (has("m") || has("n") || has("radius")))
        return verify_cu_product_identity(narrow(param(c, "m", 1), "m"),
                                          narrow(param(c, "n", 1), "n"),
                                          narrow(param(c, "radius", 1), "radius"), opts);
    if (s == "cut-vertex" && (c.domain || has("k"))) {
        const int k = narrow(param(c, "k", 3), "k");
        if (c.domain)
            return verify_cut_vertex_bound(load_image(c.domain, "--domain"), k, opts);
        return verify_cut_vertex_bound(figure_tree(), k, opts);
    }
    if (c.domain || c.codomain) {
        const auto x = load_image(c.domain, "--domain");
        const auto y = load_image(c.codomain, "--codomain");
        if (s == "equivalences")
            return verify_equivalences(x, y, opts);
        if (s == "continuity-oracle")
            return verify_continuity_oracle(x, y, opts);
        if (s == "shyness-oracle")
            return verify_shyness_oracle(x, y, opts);
        if (s == "isomorphism")
            return verify_isomorphism_laws({x, y}, opts);
        throw UsageError("suite " + s + " does not take --domain/--codomain");
    }
    if (s == "products" && c.inputs.size() == 4) {
        std::vector<ImagePtr> imgs;
        for (const auto& p : c.inputs)
            imgs.push_back(load_image(p));
        return verify_product_theorem(imgs[0], imgs[1], imgs[2], imgs[3], opts);
    }
    return run_suite(s, opts);
}

void write_report_text(const VerificationReport& r, std::ostream& out)
{
    out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(18) << r.theorem_id
        << " instances=" << r.instances_checked << " time="
        << std::chrono::duration<double>(r.wall_time).count() << "s\n";
    for (const auto& ce : r.counterexamples) {
        out << "  counterexample: " << ce.description << '\n';
        for (const auto& m : ce.maps)
            out << "    map: " << map_text(m) << '\n';
        if (!ce.witness.empty())
            out << "    witness: " << points_text(ce.witness) << '\n';
    }
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream&)
{
    VerifyOptions opts;
    if (c.bound)
        opts.bound = static_cast<std::uint64_t>(*c.bound);
    std::vector<VerificationReport> reports;
    if (c.suite == "all")
        reports = run_all_suites(opts);
    else
        reports.push_back(run_single_suite(c, opts));

    bool passed = true;
    for (const auto& r : reports)
        passed = passed && r.passed;

    if (c.format == ReportFormat::json) {
        json arr = json::array();
        for (const auto& r : reports)
            arr.push_back(report_to_json(r));
        out << json{{"command", "verify"}, {"suite", c.suite}, {"passed", passed}, {"reports", arr}}
                   .dump(2)
            << '\n';
    } else {
        for (const auto& r : reports)
            write_report_text(r, out);
    }
    return passed ? exit_success : exit_property_false;
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    if (c.bound && *c.bound <= 0)
        throw UsageError("--bound must be positive");
    if (c.command == "check")
        return cmd_check(c, out, err);
    if (c.command == "components")
        return cmd_components(c, out, err);
    if (c.command == "product")
        return cmd_product(c, out, err);
    if (c.command == "wedge")
        return cmd_wedge(c, out, err);
    if (c.command == "enumerate")
        return cmd_enumerate(c, out, err);
    if (c.command == "verify")
        return cmd_verify(c, out, err);
    throw UsageError("unknown command '" + c.command + "'");
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (!config.out)
            return dispatch(config, out, err);
        std::ostringstream buffer;
        const int status = dispatch(config, buffer, err);
        std::ofstream file(*config.out, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << config.out->string() << '\n';
            return exit_input_error;
        }
        file << buffer.str();
        return status;
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const PreconditionViolation& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Digital images, continuity and shy maps: checks, constructions, audits"};
    app.require_subcommand(1);
    RunConfig config;
    std::string format = "text";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Report format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", config.out, "Write the report to a file");
        sub->add_option("--bound", config.bound, "Enumeration bound on |Y|^|X|");
    };

    auto* check = app.add_subcommand("check", "Classify a map between two images");
    check->add_option("--domain", config.domain)->required();
    check->add_option("--codomain", config.codomain)->required();
    check->add_option("--map", config.map)->required();
    check->add_option("--expect", config.expect,
                      "continuous|surjective|injective|shy|isomorphism; exit 1 if it fails");
    add_common(check);

    auto* components = app.add_subcommand("components", "Connected components of an image");
    components->add_option("--domain", config.domain);
    components->add_option("image", config.inputs);
    add_common(components);

    auto* product = app.add_subcommand("product", "Normal product of two images");
    product->add_option("images", config.inputs)->expected(2);
    add_common(product);

    auto* wedge = app.add_subcommand("wedge", "Wedge of two images meeting at a junction");
    wedge->add_option("images", config.inputs)->expected(2);
    wedge->add_option("--junction", config.junction, "Shared point as JSON, e.g. [0]")
        ->required();
    add_common(wedge);

    auto* enumerate = app.add_subcommand("enumerate", "List maps between two images");
    enumerate->add_option("--domain", config.domain)->required();
    enumerate->add_option("--codomain", config.codomain)->required();
    enumerate->add_option("--filter", config.filter,
                          "all|continuous|continuous_surjections|shy");
    enumerate->add_option("--limit", config.limit);
    enumerate->add_flag("--count-only", config.count_only);
    add_common(enumerate);

    auto* verify = app.add_subcommand("verify", "Run a theorem audit suite");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("suite", config.suite)->required()->check(CLI::IsMember(suites));
    verify->add_option("inputs", config.inputs, "Image files (products: A B C D)");
    verify->add_option("--domain", config.domain);
    verify->add_option("--codomain", config.codomain);
    for (const char* name : {"xlen", "ylen", "m", "n", "kmax", "k", "radius"})
        verify->add_option_function<std::int64_t>(
            std::string("--") + name, [&config, name](std::int64_t v) { config.params[name] = v; });
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_success : exit_input_error;
    }

    for (auto* sub : app.get_subcommands())
        config.command = sub->get_name();
    config.format = format == "json" ? ReportFormat::json : ReportFormat::text;
    return run(config, out, err);
}

} // namespace shy::cli
