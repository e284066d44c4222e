#include "netmap/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace netmap {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<Int> read_ints(std::string_view s, std::size_t count) {
    std::istringstream in{std::string(s)};
    std::vector<Int> out;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        Int v = 0;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || token.empty()) throw Error(ErrorKind::parse, "bad integer '" + token + "'");
        out.push_back(v);
    }
    if (out.size() != count)
        throw Error(ErrorKind::parse, "expected " + std::to_string(count) + " integers, got " + std::to_string(out.size()));
    return out;
}

}  // namespace

NetMapPresentation parse_presentation(std::string_view text) {
    NetMapPresentation p;
    bool have_matrix = false, have_translation = false;
    int arcs = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        try {
            auto colon = line.find(':');
            if (colon == std::string_view::npos) throw Error(ErrorKind::parse, "expected 'key: values'");
            std::string_view key = trim(line.substr(0, colon)), rest = line.substr(colon + 1);
            if (key == "matrix") {
                if (have_matrix) throw Error(ErrorKind::parse, "duplicate matrix line");
                auto v = read_ints(rest, 4);
                p.a = IntMatrix2::from_columns({v[0], v[1]}, {v[2], v[3]});
                have_matrix = true;
            } else if (key == "translation") {
                if (have_translation) throw Error(ErrorKind::parse, "duplicate translation line");
                auto v = read_ints(rest, 2);
                p.b = {v[0], v[1]};
                have_translation = true;
            } else if (key == "arc") {
                if (arcs == 4) throw Error(ErrorKind::parse, "more than four arcs");
                auto arrow = rest.find("->");
                if (arrow == std::string_view::npos) throw Error(ErrorKind::parse, "expected 'arc: x1 y1 -> x2 y2'");
                auto from = read_ints(rest.substr(0, arrow), 2), to = read_ints(rest.substr(arrow + 2), 2);
                p.arcs[arcs++] = {{from[0], from[1]}, {to[0], to[1]}};
            } else {
                throw Error(ErrorKind::parse, "unknown key '" + std::string(key) + "'");
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::parse) throw;
            throw Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!have_matrix) throw Error(ErrorKind::parse, "missing matrix line");
    if (arcs != 4) throw Error(ErrorKind::parse, "expected four arcs, got " + std::to_string(arcs));
    validate_presentation(p);
    return p;
}

std::string serialize_presentation(const NetMapPresentation& p) {
    std::ostringstream os;
    Vec2 l1 = p.a.col1(), l2 = p.a.col2();
    os << "matrix: " << l1.x << ' ' << l1.y << ' ' << l2.x << ' ' << l2.y << '\n';
    os << "translation: " << p.b.x << ' ' << p.b.y << '\n';
    for (const Arc& arc : p.arcs)
        os << "arc: " << arc.initial.x << ' ' << arc.initial.y << " -> " << arc.terminal.x << ' ' << arc.terminal.y
           << '\n';
    return os.str();
}

DynamicPortrait parse_portrait_json(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::parse, std::string("portrait JSON: ") + e.what());
    }
    DynamicPortrait g;
    try {
        if (!doc.is_object() || !doc.contains("postcritical"))
            throw Error(ErrorKind::parse, "portrait JSON: missing 'postcritical'");
        for (const auto& v : doc.at("postcritical"))
            g.vertices.push_back({v.at("id").get<std::string>(), v.at("weight").get<int>(), v.at("to").get<std::string>()});
        if (doc.contains("extra_critical"))
            for (const auto& e : doc.at("extra_critical"))
                g.extra_critical.push_back({e.at("to").get<std::string>(), e.at("count").get<int>()});
    } catch (const json::exception& e) {
        throw Error(ErrorKind::parse, std::string("portrait JSON: ") + e.what());
    }
    return g;
}

std::string serialize_portrait_json(const DynamicPortrait& g) {
    nlohmann::ordered_json doc;
    doc["postcritical"] = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices) doc["postcritical"].push_back({{"id", v.id}, {"weight", v.weight}, {"to", v.to}});
    doc["extra_critical"] = nlohmann::ordered_json::array();
    for (const auto& e : g.extra_critical) doc["extra_critical"].push_back({{"to", e.to}, {"count", e.count}});
    return doc.dump(2) + "\n";
}

std::string portrait_to_dot(const DynamicPortrait& g) {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream os;
    os << "digraph portrait {\n";
    for (const auto& v : g.vertices) os << "  " << quote(v.id) << " [label=" << quote(v.id) << "];\n";
    for (const auto& v : g.vertices)
        os << "  " << quote(v.id) << " -> " << quote(v.to) << " [w=" << v.weight << ", label=\"w=" << v.weight
           << "\"];\n";
    int k = 0;
    for (const auto& e : g.extra_critical) {
        if (e.count == 0) continue;
        std::string node = quote("crit" + std::to_string(k++) + "_" + e.to);
        os << "  " << node << " [shape=point];\n";
        os << "  " << node << " -> " << quote(e.to) << " [w=2, label=\"×" << e.count << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::usage, "cannot read file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace netmap
