#include "lucanomial/triangle_io.hpp"

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

namespace lucanomial {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
    const char* ws = " \t\r\n";
    auto begin = s.find_first_not_of(ws);
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

}  // namespace

std::string triangle_to_json(const Triangle& tri) {
    ordered_json j;
    j["family"] = tri.family;
    if (tri.param_p && tri.param_q) {
        ordered_json params;
        params["P"] = tri.param_p->str();
        params["Q"] = tri.param_q->str();
        j["params"] = std::move(params);
    }
    j["rule"] = tri.rule;
    ordered_json rows = ordered_json::array();
    for (const auto& row : tri.rows) {
        ordered_json jrow = ordered_json::array();
        for (const Rational& value : row) jrow.push_back(value.str());
        rows.push_back(std::move(jrow));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

Triangle triangle_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error(std::string("triangle JSON: ") + e.what());
    }
    if (!j.is_object()) throw Error("triangle JSON: top level must be an object");
    if (!j.contains("family") || !j["family"].is_string())
        throw Error("triangle JSON: missing string field 'family'");
    if (!j.contains("rule") || !j["rule"].is_string())
        throw Error("triangle JSON: missing string field 'rule'");
    if (!j.contains("rows") || !j["rows"].is_array())
        throw Error("triangle JSON: missing array field 'rows'");

    Triangle tri;
    tri.family = j["family"].get<std::string>();
    tri.rule = j["rule"].get<std::string>();
    if (j.contains("params")) {
        const ordered_json& params = j["params"];
        if (!params.is_object() || !params.contains("P") || !params.contains("Q") ||
            !params["P"].is_string() || !params["Q"].is_string())
            throw Error("triangle JSON: 'params' must hold string fields 'P' and 'Q'");
        tri.param_p = Rational::parse(params["P"].get<std::string>());
        tri.param_q = Rational::parse(params["Q"].get<std::string>());
    }
    const ordered_json& rows = j["rows"];
    tri.rows.reserve(rows.size());
    for (std::size_t n = 0; n < rows.size(); ++n) {
        const ordered_json& jrow = rows[n];
        if (!jrow.is_array() || jrow.size() != n + 1)
            throw Error("triangle JSON: row " + std::to_string(n) + " must be an array of " +
                        std::to_string(n + 1) + " strings");
        std::vector<Rational> row;
        row.reserve(jrow.size());
        for (const ordered_json& cell : jrow) {
            if (!cell.is_string())
                throw Error("triangle JSON: row " + std::to_string(n) +
                            " holds a non-string entry");
            row.push_back(Rational::parse(cell.get<std::string>()));
        }
        tri.rows.push_back(std::move(row));
    }
    return tri;
}

std::string triangle_to_csv(const Triangle& tri) {
    std::string out;
    for (const auto& row : tri.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) out += ",";
            out += row[k].str();
        }
        out += "\n";
    }
    return out;
}

std::string report_to_json_line(const Report& report) {
    ordered_json j;
    j["id"] = report.id;
    j["P"] = report.p.str();
    j["Q"] = report.q.str();
    j["site"] = report.site;
    j["status"] = status_label(report.status);
    j["lhs"] = report.lhs;
    j["rhs"] = report.rhs;
    j["note"] = report.note;
    return j.dump();
}

std::string summary_to_json_line(const std::string& suite, const Summary& summary) {
    ordered_json j;
    j["suite"] = suite;
    j["reports"] = summary.total;
    j["pass"] = summary.pass;
    j["fail"] = summary.fail;
    j["expected_fail"] = summary.expected_fail;
    j["unexpected_fail"] = summary.unexpected_fail;
    j["skipped"] = summary.skipped;
    return j.dump();
}

std::vector<Rational> parse_sequence_file(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        ordered_json j;
        try {
            j = ordered_json::parse(text);
        } catch (const std::exception& e) {
            throw Error(std::string("sequence file JSON: ") + e.what());
        }
        if (!j.is_array()) throw Error("sequence file JSON: expected an array of strings");
        std::vector<Rational> values;
        values.reserve(j.size());
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (!j[i].is_string())
                throw Error("sequence file JSON: entry " + std::to_string(i) +
                            " is not a string");
            values.push_back(Rational::parse(j[i].get<std::string>()));
        }
        return values;
    }
    std::vector<Rational> values;
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        try {
            values.push_back(Rational::parse(body));
        } catch (const Error& e) {
            throw Error("sequence file line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return values;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace lucanomial
