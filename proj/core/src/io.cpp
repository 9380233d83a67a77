#include "cassini/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "cassini/error.hpp"

namespace cassini::io {

using nlohmann::json;

namespace {

json parse_document(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // Translate the byte offset into a line/column pair.
        std::size_t line = 1;
        std::size_t col = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InputError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                         e.what());
    }
}

const json& member(const json& obj, const char* key, const std::string& ctx) {
    if (!obj.is_object()) throw InputError(ctx + ": expected a JSON object");
    const auto it = obj.find(key);
    if (it == obj.end()) throw InputError(ctx + ": missing field \"" + key + "\"");
    return *it;
}

double number(const json& v, const std::string& ctx) {
    if (!v.is_number()) throw InputError(ctx + ": expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw InputError(ctx + ": expected a finite number");
    return d;
}

std::vector<Point> point_list(const json& arr, const std::string& ctx) {
    if (!arr.is_array()) throw InputError(ctx + ": expected an array of [x, y] pairs");
    std::vector<Point> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string here = ctx + "[" + std::to_string(i) + "]";
        const auto& p = arr[i];
        if (!p.is_array() || p.size() != 2) throw InputError(here + ": expected [x, y]");
        out.push_back({number(p[0], here + "[0]"), number(p[1], here + "[1]")});
    }
    return out;
}

json point_array(const std::vector<Point>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back({p.x, p.y});
    return arr;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

RadarSet parse_radar_set(std::string_view json_text) {
    const json doc = parse_document(json_text);
    auto tx = point_list(member(doc, "transmitters", "radar set"), "transmitters");
    auto rx = point_list(member(doc, "receivers", "radar set"), "receivers");
    if (tx.empty()) throw InputError("transmitters: need at least one entry");
    if (rx.empty()) throw InputError("receivers: need at least one entry");
    return RadarSet(std::move(tx), std::move(rx));
}

std::string to_json(const RadarSet& radars) {
    return dump({{"transmitters", point_array(radars.transmitters())}, {"receivers", point_array(radars.receivers())}});
}

RectField parse_field(std::string_view json_text) {
    const json doc = parse_document(json_text);
    const double w = number(member(doc, "width", "field"), "width");
    const double h = number(member(doc, "height", "field"), "height");
    if (!(w > 0.0) || !(h > 0.0)) throw InputError("field: width and height must be positive");
    return RectField(w, h);
}

RectField parse_field_dims(std::string_view text) {
    const auto x = text.find_first_of("xX");
    if (x == std::string_view::npos) throw InputError("field must be given as WxH, e.g. 100x100");
    auto to_double = [&](std::string_view part) {
        std::string s(part);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw InputError("field dimension '" + s + "' is not a number");
        }
        if (used != s.size()) throw InputError("field dimension '" + s + "' is not a number");
        return v;
    };
    const double w = to_double(text.substr(0, x));
    const double h = to_double(text.substr(x + 1));
    if (!(w > 0.0) || !(h > 0.0)) throw InputError("field dimensions must be positive");
    return RectField(w, h);
}

LineDeployment parse_line_deployment(std::string_view json_text) {
    const json doc = parse_document(json_text);
    LineDeployment dep;
    dep.h = number(member(doc, "h", "deployment"), "h");
    const auto& order = member(doc, "order", "deployment");
    if (!order.is_array()) throw InputError("order: expected an array of \"T\"/\"R\" strings");
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::string here = "order[" + std::to_string(i) + "]";
        if (!order[i].is_string()) throw InputError(here + ": expected \"T\" or \"R\"");
        const auto s = order[i].get<std::string>();
        if (s == "T") {
            dep.order.push_back(NodeKind::Transmitter);
        } else if (s == "R") {
            dep.order.push_back(NodeKind::Receiver);
        } else {
            throw InputError(here + ": expected \"T\" or \"R\", got \"" + s + "\"");
        }
    }
    const auto& positions = member(doc, "positions", "deployment");
    if (!positions.is_array()) throw InputError("positions: expected an array of numbers");
    for (std::size_t i = 0; i < positions.size(); ++i) {
        dep.positions.push_back(number(positions[i], "positions[" + std::to_string(i) + "]"));
    }
    dep.validate();
    return dep;
}

std::string to_json(const LineDeployment& dep, double vulnerability) {
    json order = json::array();
    for (NodeKind k : dep.order) order.push_back(std::string(1, kind_letter(k)));
    return dump({{"h", dep.h}, {"order", order}, {"positions", dep.positions}, {"vulnerability", vulnerability}});
}

PathResult parse_path_result(std::string_view json_text) {
    const json doc = parse_document(json_text);
    PathResult out;
    out.weight = number(member(doc, "weight", "path result"), "weight");
    out.path = point_list(member(doc, "path", "path result"), "path");
    return out;
}

std::string to_json(const PathResult& result) {
    return dump({{"weight", result.weight}, {"path", point_array(result.path)}});
}

std::string to_json(const VulnerabilityReport& report) {
    json w = json::array();
    for (const auto& x : report.witnesses) w.push_back({{"position", x.position}, {"value", x.value}});
    return dump({{"q", report.q}, {"witnesses", w}});
}

bool is_line_deployment(std::string_view json_text) {
    const json doc = parse_document(json_text);
    return doc.is_object() && doc.contains("order") && doc.contains("positions");
}

RadarSet radars_on_midline(const LineDeployment& dep, const RectField& field) {
    dep.validate();
    if (dep.h > field.width * (1.0 + 1e-12)) throw InputError("deployment is longer than the field is wide");
    const double y = field.height / 2.0;
    std::vector<Point> tx;
    std::vector<Point> rx;
    for (std::size_t i = 0; i < dep.order.size(); ++i) {
        (dep.order[i] == NodeKind::Transmitter ? tx : rx).push_back({dep.positions[i], y});
    }
    return RadarSet(std::move(tx), std::move(rx));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << contents;
}

}  // namespace cassini::io
