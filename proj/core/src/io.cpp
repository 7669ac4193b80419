#include "hullchain/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hullchain/errors.hpp"

namespace hullchain {

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

namespace {

std::string trim(const std::string& s) {
    std::size_t first = 0;
    std::size_t last = s.size();
    while (first < last && std::isspace(static_cast<unsigned char>(s[first])))
        ++first;
    while (last > first &&
           std::isspace(static_cast<unsigned char>(s[last - 1])))
        --last;
    return s.substr(first, last - first);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) {
        fields.push_back(trim(field));
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

double parse_coordinate(const std::string& text, std::size_t line_no) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": '" + text + "' is not a finite number");
    }
    return value;
}

ClassLabel parse_label(const std::string& text, std::size_t line_no) {
    const std::string tag = lower(text);
    if (tag == "pos" || tag == "1") return ClassLabel::Pos;
    if (tag == "neg" || tag == "0") return ClassLabel::Neg;
    throw UnknownLabel("line " + std::to_string(line_no) + ": '" + text +
                       "' is not pos/neg/1/0");
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
};

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        if (!have_header) {
            table.header = split_csv_line(line);
            have_header = true;
        } else {
            table.rows.emplace_back(line_no, split_csv_line(line));
        }
    }
    if (!have_header) {
        throw EmptyFile("no CSV header found");
    }
    return table;
}

}  // namespace

Dataset load_dataset(std::istream& in) {
    const CsvTable table = read_csv(in);
    if (table.header.size() < 2 ||
        lower(table.header.back()) != "label") {
        throw ParseError(
            "line 1: header must be x1,...,xn,label with n >= 1");
    }
    const std::size_t n = table.header.size() - 1;

    Dataset d;
    d.dimension = n;
    d.positive_class = ClassLabel::Pos;
    for (const auto& [line_no, fields] : table.rows) {
        if (fields.size() != n + 1) {
            throw RaggedRow("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(n + 1) + " fields, got " +
                            std::to_string(fields.size()));
        }
        LabeledPoint p;
        p.coords.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            p.coords.push_back(parse_coordinate(fields[i], line_no));
        }
        p.label = parse_label(fields[n], line_no);
        d.points.push_back(std::move(p));
    }
    return d;
}

Dataset load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    return load_dataset(in);
}

std::vector<std::vector<double>> load_points(std::istream& in) {
    const CsvTable table = read_csv(in);
    std::size_t n = table.header.size();
    bool drop_label = n >= 2 && lower(table.header.back()) == "label";
    if (drop_label) --n;
    if (n == 0) {
        throw ParseError("line 1: header carries no coordinate columns");
    }

    std::vector<std::vector<double>> points;
    points.reserve(table.rows.size());
    for (const auto& [line_no, fields] : table.rows) {
        if (fields.size() != table.header.size()) {
            throw RaggedRow("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(table.header.size()) +
                            " fields, got " + std::to_string(fields.size()));
        }
        std::vector<double> coords;
        coords.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            coords.push_back(parse_coordinate(fields[i], line_no));
        }
        points.push_back(std::move(coords));
    }
    return points;
}

std::vector<std::vector<double>> load_points(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    return load_points(in);
}

void write_labels_csv(std::ostream& out,
                      const std::vector<std::vector<double>>& points,
                      const std::vector<ClassLabel>& labels) {
    const std::size_t n = points.empty() ? 0 : points.front().size();
    for (std::size_t i = 0; i < n; ++i) {
        out << 'x' << i + 1 << ',';
    }
    out << "label\n";
    for (std::size_t r = 0; r < points.size(); ++r) {
        for (double c : points[r]) {
            out << format_double(c) << ',';
        }
        out << class_name(labels[r]) << '\n';
    }
}

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

ordered_json cut_to_json(const Cut& cut) { return cut.weights; }

ordered_json hull_to_json(const Polytope& hull) {
    ordered_json j;
    j["generator_class"] = class_name(hull.generator_class);
    j["vertices"] = hull.vertices;
    ordered_json cuts = ordered_json::array();
    for (const Cut& cut : hull.cuts) cuts.push_back(cut_to_json(cut));
    j["cuts"] = std::move(cuts);
    return j;
}

const json& require_field(const json& obj, const std::string& key,
                          const std::string& path) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw SchemaError(path + ": missing field '" + key + "'");
    }
    return obj.at(key);
}

double number_at(const json& value, const std::string& path) {
    if (!value.is_number()) {
        throw SchemaError(path + ": expected a number");
    }
    return value.get<double>();
}

std::vector<double> number_array_at(const json& value, const std::string& path,
                                    std::size_t expected_size) {
    if (!value.is_array() || value.size() != expected_size) {
        throw SchemaError(path + ": expected an array of " +
                          std::to_string(expected_size) + " numbers");
    }
    std::vector<double> out;
    out.reserve(expected_size);
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(number_at(value[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

ClassLabel class_at(const json& value, const std::string& path) {
    if (!value.is_string()) {
        throw SchemaError(path + ": expected \"pos\" or \"neg\"");
    }
    const std::string tag = value.get<std::string>();
    if (tag == "pos") return ClassLabel::Pos;
    if (tag == "neg") return ClassLabel::Neg;
    throw SchemaError(path + ": expected \"pos\" or \"neg\", got \"" + tag +
                      "\"");
}

}  // namespace

std::string serialize_network(const ChainNetwork& net) {
    ordered_json j;
    j["format_version"] = kFormatVersion;
    j["dimension"] = net.dimension;
    j["domain_bound"] = net.domain_bound;
    j["saturation"] = net.saturation;
    j["positive_class"] = class_name(net.positive_class);
    ordered_json units = ordered_json::array();
    for (const Unit& u : net.units) {
        ordered_json ju;
        ju["kind"] = u.kind == UnitKind::Cut ? "cut" : "inverter";
        ju["data_weights"] = u.data_weights;
        if (u.bit_weight.has_value()) {
            ju["bit_weight"] = *u.bit_weight;
        } else {
            ju["bit_weight"] = nullptr;
        }
        units.push_back(std::move(ju));
    }
    j["units"] = std::move(units);
    if (net.hulls.has_value()) {
        ordered_json hulls = ordered_json::array();
        for (const Polytope& hull : *net.hulls) {
            hulls.push_back(hull_to_json(hull));
        }
        j["hulls"] = std::move(hulls);
    }
    return j.dump(2) + "\n";
}

ChainNetwork parse_network(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("not valid JSON: ") + e.what());
    }

    const json& version = require_field(j, "format_version", "$");
    if (!version.is_number_integer()) {
        throw SchemaError("$.format_version: expected an integer");
    }
    if (version.get<int>() != kFormatVersion) {
        throw VersionError("unsupported format_version " +
                           version.dump() + ", expected " +
                           std::to_string(kFormatVersion));
    }

    ChainNetwork net;
    const json& dim = require_field(j, "dimension", "$");
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) {
        throw SchemaError("$.dimension: expected a positive integer");
    }
    net.dimension = dim.get<std::size_t>();
    net.domain_bound = number_at(require_field(j, "domain_bound", "$"),
                                 "$.domain_bound");
    net.saturation = number_at(require_field(j, "saturation", "$"),
                               "$.saturation");
    net.positive_class = class_at(require_field(j, "positive_class", "$"),
                                  "$.positive_class");

    const json& units = require_field(j, "units", "$");
    if (!units.is_array()) {
        throw SchemaError("$.units: expected an array");
    }
    for (std::size_t i = 0; i < units.size(); ++i) {
        const std::string path = "$.units[" + std::to_string(i) + "]";
        const json& ju = units[i];
        Unit u;
        const json& kind = require_field(ju, "kind", path);
        if (kind == "cut") {
            u.kind = UnitKind::Cut;
        } else if (kind == "inverter") {
            u.kind = UnitKind::Inverter;
        } else {
            throw SchemaError(path + ".kind: expected \"cut\" or \"inverter\"");
        }
        u.data_weights =
            number_array_at(require_field(ju, "data_weights", path),
                            path + ".data_weights", net.dimension + 1);
        const json& bit = require_field(ju, "bit_weight", path);
        if (bit.is_null()) {
            u.bit_weight.reset();
        } else {
            u.bit_weight = number_at(bit, path + ".bit_weight");
        }
        net.units.push_back(std::move(u));
    }

    if (j.contains("hulls")) {
        const json& hulls = j.at("hulls");
        if (!hulls.is_array()) {
            throw SchemaError("$.hulls: expected an array");
        }
        std::vector<Polytope> parsed;
        for (std::size_t k = 0; k < hulls.size(); ++k) {
            const std::string path = "$.hulls[" + std::to_string(k) + "]";
            const json& jh = hulls[k];
            Polytope hull;
            hull.generator_class =
                class_at(require_field(jh, "generator_class", path),
                         path + ".generator_class");
            hull.level = static_cast<int>(k) + 1;
            const json& vertices = require_field(jh, "vertices", path);
            if (!vertices.is_array() || vertices.empty()) {
                throw SchemaError(path + ".vertices: expected a non-empty array");
            }
            for (std::size_t i = 0; i < vertices.size(); ++i) {
                hull.vertices.push_back(number_array_at(
                    vertices[i], path + ".vertices[" + std::to_string(i) + "]",
                    net.dimension));
            }
            const json& cuts = require_field(jh, "cuts", path);
            if (!cuts.is_array() || cuts.empty()) {
                throw SchemaError(path + ".cuts: expected a non-empty array");
            }
            for (std::size_t i = 0; i < cuts.size(); ++i) {
                hull.cuts.push_back(Cut{number_array_at(
                    cuts[i], path + ".cuts[" + std::to_string(i) + "]",
                    net.dimension + 1)});
            }
            parsed.push_back(std::move(hull));
        }
        net.hulls = std::move(parsed);
    }
    return net;
}

void save_network(const ChainNetwork& net, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open '" + path.string() + "' for writing");
    }
    out << serialize_network(net);
}

ChainNetwork load_network(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_network(buffer.str());
}

}  // namespace hullchain
