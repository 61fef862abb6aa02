#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "heron4/report.hpp"

namespace {

using heron4::Rational;
using heron4::report::Json;
using heron4::report::Options;

struct CommonArgs {
    std::string json_path;
    std::string svg_dir;
    std::string projection;
    bool verbose = false;
    bool corrupt = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--json", args.json_path, "write the JSON report to this path");
    cmd->add_option("--svg-dir", args.svg_dir, "write SVG figures into this directory");
    cmd->add_option("--projection", args.projection,
                    "4x2 projection matrix, row-major: a,b,c,d,e,f,g,h (rationals)");
    cmd->add_flag("--verbose", args.verbose, "print the full report to stdout");
    auto* hook = cmd->add_flag("--corrupt-certificate", args.corrupt, "");
    hook->group("");  // test hook, hidden from help
}

std::vector<Rational> parse_rational_list(const std::string& text, std::size_t expected,
                                          const std::string& what) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        out.push_back(Rational::parse(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() != expected)
        throw std::invalid_argument(what + ": expected " + std::to_string(expected) +
                                    " comma-separated rationals, got '" + text + "'");
    return out;
}

Options make_options(const CommonArgs& args) {
    Options opt;
    if (!args.svg_dir.empty()) opt.svg_dir = args.svg_dir;
    opt.verbose = args.verbose;
    opt.corrupt_certificate = args.corrupt;
    if (!args.projection.empty()) {
        auto vals = parse_rational_list(args.projection, 8, "--projection");
        for (int i = 0; i < 4; ++i) opt.projection.rows[i] = {vals[2 * i], vals[2 * i + 1]};
    }
    return opt;
}

int deliver(const Json& doc, const CommonArgs& args) {
    if (!args.json_path.empty()) {
        std::ofstream f(args.json_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << args.json_path << "\n";
            return 2;
        }
        f << heron4::report::to_text(doc);
    }
    if (args.verbose) std::cout << heron4::report::to_text(doc);
    bool verdict = doc["verdict"].get<bool>();
    std::cout << doc["command"].get<std::string>() << ": "
              << (verdict ? "all certificates true" : "FAILED");
    if (!verdict) {
        if (auto name = heron4::report::failing_certificate(doc))
            std::cout << " (certificate: " << *name << ")";
    } else if (doc["results"].contains("chain_value")) {
        std::cout << ", chain value " << doc["results"]["chain_value"].get<std::string>();
    }
    std::cout << "\n";
    return verdict ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact 4-dimensional dissection certificates for Heron's formula"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    struct {
        std::string p, r, h;
        CommonArgs common;
    } heron;
    auto* heron_cmd = app.add_subcommand("heron", "verify the full Heron chain for a triangle");
    heron_cmd->set_help_flag("--help", "print help");
    heron_cmd->add_option("--p", heron.p, "base length (rational)")->required();
    heron_cmd->add_option("--r", heron.r, "foot of the altitude (rational)")->required();
    heron_cmd->add_option("--h", heron.h, "altitude (rational)")->required();
    add_common(heron_cmd, heron.common);

    struct {
        int n = 4;
        CommonArgs common;
    } cube;
    auto* cube_cmd = app.add_subcommand("cube", "decompose the n-cube into n! right simplices");
    cube_cmd->add_option("--n", cube.n, "dimension (1..8)")->required();
    add_common(cube_cmd, cube.common);

    struct {
        int n = 4;
        CommonArgs common;
    } pyramids;
    auto* pyramids_cmd = app.add_subcommand("pyramids", "decompose the n-cube into n pyramids");
    pyramids_cmd->add_option("--n", pyramids.n, "dimension (2..8)")->required();
    add_common(pyramids_cmd, pyramids.common);

    struct {
        std::string edge = "1";
        CommonArgs common;
    } quarter;
    auto* quarter_cmd =
        app.add_subcommand("quarter", "quarter the 4-cube into triangle products");
    quarter_cmd->add_option("--edge", quarter.edge, "edge length (rational)")->required();
    add_common(quarter_cmd, quarter.common);

    struct {
        int k = 3, n = 3;
        CommonArgs common;
    } multinomial;
    auto* multi_cmd = app.add_subcommand("multinomial", "lattice classes of (x_1+...+x_k)^n");
    multi_cmd->add_option("--k", multinomial.k, "number of summands")->required();
    multi_cmd->add_option("--n", multinomial.n, "power")->required();
    add_common(multi_cmd, multinomial.common);

    struct {
        std::string a2, b2, c;
        CommonArgs common;
    } expand;
    auto* expand_cmd =
        app.add_subcommand("heron-expand", "the 81-term signed expansion and its cancellation");
    expand_cmd->add_option("--a2", expand.a2, "a^2 (rational)")->required();
    expand_cmd->add_option("--b2", expand.b2, "b^2 (rational)")->required();
    expand_cmd->add_option("--c", expand.c, "c (rational)")->required();
    add_common(expand_cmd, expand.common);

    struct {
        std::string legs1, legs2;
        CommonArgs common;
    } pythag;
    auto* pythag_cmd =
        app.add_subcommand("pythag", "25-piece product dissection and its reassembly");
    pythag_cmd->add_option("--legs1", pythag.legs1, "legs of the first triangle: x,y")->required();
    pythag_cmd->add_option("--legs2", pythag.legs2, "legs of the second triangle: u,v")->required();
    add_common(pythag_cmd, pythag.common);

    struct {
        int n = 24;
        CommonArgs common;
    } nicomachus;
    auto* nico_cmd = app.add_subcommand("nicomachus", "sum of cubes against the squared triangle");
    nico_cmd->add_option("--n", nicomachus.n, "upper limit")->required();
    add_common(nico_cmd, nicomachus.common);

    CLI11_PARSE(app, argc, argv);

    try {
        if (heron_cmd->parsed())
            return deliver(heron4::report::heron_report(Rational::parse(heron.p),
                                                        Rational::parse(heron.r),
                                                        Rational::parse(heron.h),
                                                        make_options(heron.common)),
                           heron.common);
        if (cube_cmd->parsed())
            return deliver(heron4::report::cube_report(cube.n, make_options(cube.common)),
                           cube.common);
        if (pyramids_cmd->parsed())
            return deliver(
                heron4::report::pyramids_report(pyramids.n, make_options(pyramids.common)),
                pyramids.common);
        if (quarter_cmd->parsed())
            return deliver(heron4::report::quarter_report(Rational::parse(quarter.edge),
                                                          make_options(quarter.common)),
                           quarter.common);
        if (multi_cmd->parsed())
            return deliver(heron4::report::multinomial_report(multinomial.k, multinomial.n,
                                                              make_options(multinomial.common)),
                           multinomial.common);
        if (expand_cmd->parsed())
            return deliver(heron4::report::heron_expand_report(Rational::parse(expand.a2),
                                                               Rational::parse(expand.b2),
                                                               Rational::parse(expand.c),
                                                               make_options(expand.common)),
                           expand.common);
        if (pythag_cmd->parsed()) {
            auto l1 = parse_rational_list(pythag.legs1, 2, "--legs1");
            auto l2 = parse_rational_list(pythag.legs2, 2, "--legs2");
            return deliver(heron4::report::pythag_report(l1[0], l1[1], l2[0], l2[1],
                                                         make_options(pythag.common)),
                           pythag.common);
        }
        if (nico_cmd->parsed())
            return deliver(
                heron4::report::nicomachus_report(nicomachus.n, make_options(nicomachus.common)),
                nicomachus.common);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
