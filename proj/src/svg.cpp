#include "heron4/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

namespace heron4::report {

std::string decimal12(double v) {
    if (v == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string decimal12(const QuadScalar& v) { return decimal12(v.to_double()); }

namespace {

const char* class_color(const std::string& cls) {
    static const std::map<std::string, const char*> palette = {
        {"triangle x triangle", "#1f77b4"}, {"triangle x square", "#2ca02c"},
        {"square x triangle", "#d62728"},   {"square x square", "#9467bd"},
        {"simplex", "#ff7f0e"},             {"box", "#8c564b"},
    };
    auto it = palette.find(cls);
    return it == palette.end() ? "#333333" : it->second;
}

}  // namespace

std::string svg_document(const std::vector<Piece>& pieces, const Projection& projection) {
    struct Seg {
        double x1, y1, x2, y2;
    };
    std::vector<std::pair<std::string, std::vector<Seg>>> groups;
    double lo_x = 0, lo_y = 0, hi_x = 1, hi_y = 1;
    bool any = false;
    for (const Piece& p : pieces) {
        std::vector<Seg> segs;
        for (const auto& seg : project_wireframe(p, projection)) {
            Seg s{seg[0][0].to_double(), seg[0][1].to_double(), seg[1][0].to_double(),
                  seg[1][1].to_double()};
            if (!any) {
                lo_x = hi_x = s.x1;
                lo_y = hi_y = s.y1;
                any = true;
            }
            lo_x = std::min({lo_x, s.x1, s.x2});
            hi_x = std::max({hi_x, s.x1, s.x2});
            lo_y = std::min({lo_y, s.y1, s.y2});
            hi_y = std::max({hi_y, s.y1, s.y2});
            segs.push_back(s);
        }
        groups.emplace_back(piece_class(p), std::move(segs));
    }
    double pad = 0.05 * std::max(hi_x - lo_x, hi_y - lo_y);
    if (pad <= 0) pad = 0.5;
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"";
    out += decimal12(lo_x - pad) + " " + decimal12(-(hi_y + pad)) + " " +
           decimal12(hi_x - lo_x + 2 * pad) + " " + decimal12(hi_y - lo_y + 2 * pad) + "\">\n";
    out += "<g fill=\"none\" stroke-width=\"" + decimal12((hi_x - lo_x + 2 * pad) / 400.0) +
           "\" stroke-linecap=\"round\">\n";
    for (const auto& [cls, segs] : groups) {
        out += "<g stroke=\"" + std::string(class_color(cls)) + "\">\n";
        for (const Seg& s : segs) {
            // flip y so the mathematical orientation reads upward
            out += "<line x1=\"" + decimal12(s.x1) + "\" y1=\"" + decimal12(-s.y1) + "\" x2=\"" +
                   decimal12(s.x2) + "\" y2=\"" + decimal12(-s.y2) + "\"/>\n";
        }
        out += "</g>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

void emit_svg(const std::vector<Piece>& pieces, const Projection& projection,
              const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("emit_svg: cannot open " + path);
    f << svg_document(pieces, projection);
    if (!f) throw std::runtime_error("emit_svg: write failed for " + path);
}

}  // namespace heron4::report
