#include "lombardi/render.h"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lombardi {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

}  // namespace

std::string to_json(const Tree& t, const Drawing& d) {
    std::ostringstream o;
    o << "{\n";
    o << "  \"meta\": {\"mode\": \"" << mode_name(d.mode) << "\", \"n\": " << t.n
      << ", \"h\": " << d.decomposition_height << ", \"root\": \""
      << json_escape(t.labels[t.root]) << "\", \"ordered\": "
      << (t.ordered ? "true" : "false") << "},\n";
    o << "  \"vertices\": [\n";
    for (int v = 0; v < t.n; ++v) {
        o << "    {\"id\": \"" << json_escape(t.labels[v]) << "\", \"x\": "
          << fmt17(d.position[v].x) << ", \"y\": " << fmt17(d.position[v].y)
          << "}" << (v + 1 < t.n ? "," : "") << "\n";
    }
    o << "  ],\n";
    o << "  \"edges\": [";
    for (size_t i = 0; i < d.edges.size(); ++i) {
        const auto& e = d.edges[i];
        o << (i ? ",\n    " : "\n    ") << "{\"u\": \"" << json_escape(t.labels[e.u])
          << "\", \"v\": \"" << json_escape(t.labels[e.v]) << "\", \"bulge\": "
          << fmt17(e.bulge) << "}";
    }
    o << (d.edges.empty() ? "" : "\n  ") << "],\n";
    o << "  \"disks\": [";
    for (size_t i = 0; i < d.disks.size(); ++i) {
        const auto& a = d.disks[i];
        o << (i ? ",\n    " : "\n    ") << "{\"node\": \""
          << json_escape(t.labels[a.node]) << "\", \"cx\": " << fmt17(a.center.x)
          << ", \"cy\": " << fmt17(a.center.y) << ", \"r\": " << fmt17(a.radius)
          << ", \"kind\": \"" << (a.kind == DiskKind::Node ? "node" : "path")
          << "\"}";
    }
    o << (d.disks.empty() ? "" : "\n  ") << "]\n";
    o << "}\n";
    return o.str();
}

LoadedDrawing from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("drawing JSON: ") + e.what());
    }
    if (!j.contains("vertices") || !j.contains("edges") || !j.contains("meta"))
        throw std::runtime_error("drawing JSON: missing vertices/edges/meta");

    LoadedDrawing out;
    Tree& t = out.tree;
    Drawing& d = out.drawing;

    std::map<std::string, int> ids;
    for (const auto& v : j["vertices"]) {
        std::string id = v.at("id").get<std::string>();
        if (ids.count(id)) throw std::runtime_error("drawing JSON: duplicate vertex id");
        ids[id] = static_cast<int>(t.labels.size());
        t.labels.push_back(id);
        d.position.push_back({v.at("x").get<double>(), v.at("y").get<double>()});
    }
    t.n = static_cast<int>(t.labels.size());
    t.parent.assign(t.n, -1);
    t.children.assign(t.n, {});

    for (const auto& e : j["edges"]) {
        auto ui = ids.find(e.at("u").get<std::string>());
        auto vi = ids.find(e.at("v").get<std::string>());
        if (ui == ids.end() || vi == ids.end())
            throw std::runtime_error("drawing JSON: edge references unknown vertex");
        int u = ui->second, v = vi->second;
        if (t.parent[v] != -1)
            throw std::runtime_error("drawing JSON: vertex with two parents");
        t.parent[v] = u;
        t.children[u].push_back(v);
        d.edges.push_back({u, v, e.at("bulge").get<double>()});
    }
    const auto& meta = j["meta"];
    std::string rootlab = meta.at("root").get<std::string>();
    auto ri = ids.find(rootlab);
    if (ri == ids.end()) throw std::runtime_error("drawing JSON: unknown root");
    t.root = ri->second;
    t.ordered = meta.value("ordered", false);
    d.mode = mode_from_name(meta.value("mode", std::string("external")));
    d.decomposition_height = meta.value("h", 0);
    t.validate();

    if (j.contains("disks")) {
        for (const auto& a : j["disks"]) {
            DiskAnnotation an;
            auto ni = ids.find(a.at("node").get<std::string>());
            if (ni == ids.end()) throw std::runtime_error("drawing JSON: unknown disk node");
            an.node = ni->second;
            an.center = {a.at("cx").get<double>(), a.at("cy").get<double>()};
            an.radius = a.at("r").get<double>();
            an.kind = a.at("kind").get<std::string>() == "path" ? DiskKind::Path
                                                                : DiskKind::Node;
            d.disks.push_back(an);
        }
    }
    return out;
}

std::string to_svg(const Tree& t, const Drawing& d, const SvgOptions& opts) {
    // drawing extent: vertices plus arc sample points
    std::vector<Point> extent = d.position;
    for (const auto& e : d.edges) {
        if (e.bulge == 0.0) continue;
        CurveEdge c = d.curve(e);
        for (double tt : {0.25, 0.5, 0.75}) extent.push_back(point_at(c, tt));
    }
    for (const auto& a : d.disks) {
        extent.push_back(a.center + Vec{a.radius, 0});
        extent.push_back(a.center - Vec{a.radius, 0});
        extent.push_back(a.center + Vec{0, a.radius});
        extent.push_back(a.center - Vec{0, a.radius});
    }
    Disk enc = smallest_enclosing_circle(extent);
    double R = std::max(enc.radius, 1e-9) * 1.05;  // 5% margin
    double x0 = enc.center.x - R, y0 = -enc.center.y - R, wh = 2 * R;

    std::vector<char> heavy(t.n, 0);
    HeavyPathDecomposition hpd = decompose(t);
    for (int v = 0; v < t.n; ++v)
        if (hpd.heavy_child[v] >= 0) heavy[hpd.heavy_child[v]] = 1;

    double sw = 0.002 * wh * opts.stroke_width_scale;
    double vr = 0.004 * wh;

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt9(x0) << " "
      << fmt9(y0) << " " << fmt9(wh) << " " << fmt9(wh) << "\">\n";

    if (opts.show_disks && !d.disks.empty()) {
        // large first so nested disks stay visible; node disks gray, light
        // children (path disks) white
        std::vector<const DiskAnnotation*> ds;
        for (const auto& a : d.disks) ds.push_back(&a);
        std::stable_sort(ds.begin(), ds.end(),
                         [](const DiskAnnotation* a, const DiskAnnotation* b) {
                             return a->radius > b->radius;
                         });
        o << "  <g stroke=\"#999999\" stroke-width=\"" << fmt9(sw * 0.5) << "\">\n";
        for (const auto* a : ds) {
            const char* fill = a->kind == DiskKind::Node ? "#d9d9d9" : "#ffffff";
            o << "    <circle cx=\"" << fmt9(a->center.x) << "\" cy=\""
              << fmt9(-a->center.y) << "\" r=\"" << fmt9(a->radius) << "\" fill=\""
              << fill << "\"/>\n";
        }
        o << "  </g>\n";
    }

    o << "  <g fill=\"none\" stroke=\"#000000\" stroke-width=\"" << fmt9(sw)
      << "\">\n";
    for (const auto& e : d.edges) {
        Point a = d.position[e.u], b = d.position[e.v];
        bool bold = heavy[e.v];  // heavy edge = edge to a heavy child
        o << "    <path d=\"M " << fmt9(a.x) << " " << fmt9(-a.y) << " ";
        if (e.bulge == 0.0) {
            o << "L " << fmt9(b.x) << " " << fmt9(-b.y) << "\"";
        } else {
            CurveEdge c = d.curve(e);
            double r = arc_radius(c);
            int large = std::fabs(e.bulge) > 1.0 ? 1 : 0;
            int sweep = e.bulge > 0 ? 1 : 0;
            o << "A " << fmt9(r) << " " << fmt9(r) << " 0 " << large << " " << sweep
              << " " << fmt9(b.x) << " " << fmt9(-b.y) << "\"";
        }
        if (bold) o << " stroke-width=\"" << fmt9(2.5 * sw) << "\"";
        o << "/>\n";
    }
    o << "  </g>\n";

    o << "  <g fill=\"#000000\">\n";
    for (int v = 0; v < t.n; ++v) {
        o << "    <circle cx=\"" << fmt9(d.position[v].x) << "\" cy=\""
          << fmt9(-d.position[v].y) << "\" r=\"" << fmt9(vr) << "\"/>\n";
    }
    o << "  </g>\n";
    o << "</svg>\n";
    return o.str();
}

}  // namespace lombardi
