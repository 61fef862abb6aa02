#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "heron4/heron_pipeline.hpp"
#include "heron4/svg.hpp"

namespace heron4::report {

using Json = nlohmann::ordered_json;

struct Options {
    std::optional<std::string> svg_dir;
    Projection projection = Projection::oblique_default();
    bool verbose = false;
    std::string timestamp;           // empty: fill from the wall clock
    bool corrupt_certificate = false;  // test hook: flips one certificate
};

/// Flat, versioned report documents ("schema": 1).  Exact values are
/// strings; decimal fields are 12-digit advisory renderings.
Json heron_report(const Rational& p, const Rational& r, const Rational& h, const Options& opt);
Json cube_report(int n, const Options& opt);
Json pyramids_report(int n, const Options& opt);
Json quarter_report(const Rational& edge, const Options& opt);
Json multinomial_report(int k, int n, const Options& opt);
Json heron_expand_report(const Rational& a2, const Rational& b2, const Rational& c,
                         const Options& opt);
Json pythag_report(const Rational& leg1a, const Rational& leg1b, const Rational& leg2a,
                   const Rational& leg2b, const Options& opt);
Json nicomachus_report(int n, const Options& opt);

/// Name of the first certificate with a false verdict, if any.
std::optional<std::string> failing_certificate(const Json& doc);

/// Serialization used everywhere: 2-space indent plus trailing newline.
std::string to_text(const Json& doc);

}  // namespace heron4::report
