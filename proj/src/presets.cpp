#include "lucanomial/presets.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

#include "lucanomial/triangle_io.hpp"

namespace lucanomial {

namespace {

std::string trim(const std::string& s) {
    const char* ws = " \t\r\n";
    auto begin = s.find_first_not_of(ws);
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string::size_type start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

SequenceKind parse_family_token(const std::string& token) {
    if (token == "u") return SequenceKind::u();
    if (token == "v") return SequenceKind::v();
    std::vector<std::string> pieces = split(token, ':');
    if (pieces.size() == 3 && (pieces[0] == "w" || pieces[0] == "h")) {
        Rational seed0 = Rational::parse(trim(pieces[1]));
        Rational seed1 = Rational::parse(trim(pieces[2]));
        return pieces[0] == "w" ? SequenceKind::horadam_w(seed0, seed1)
                                : SequenceKind::horadam_h(seed0, seed1);
    }
    throw Error("unknown family '" + token + "' (expected u, v, w:<w0>:<w1>, or h:<h0>:<h1>)");
}

}  // namespace

std::vector<Preset> builtin_presets() {
    return {
        {"fibonacci", LucasParams{Rational(1), Rational(-1)}, SequenceKind::u()},
        {"lucas", LucasParams{Rational(1), Rational(-1)}, SequenceKind::v()},
        {"pell", LucasParams{Rational(2), Rational(-1)}, SequenceKind::u()},
        // alias of gaussian:2, i.e. U over P=3, Q=2
        {"mersenne", LucasParams{Rational(3), Rational(2)}, SequenceKind::u()},
    };
}

std::optional<Preset> resolve_preset(const std::string& name, const std::vector<Preset>& user) {
    for (const Preset& preset : user)
        if (preset.name == name) return preset;
    for (const Preset& preset : builtin_presets())
        if (preset.name == name) return preset;
    const std::string prefix = "gaussian:";
    if (name.rfind(prefix, 0) == 0) {
        Rational q = Rational::parse(name.substr(prefix.size()));
        // q = 1 collapses the roots and is rejected by LucasParams
        return Preset{name, LucasParams{q + Rational(1), q}, SequenceKind::u()};
    }
    return std::nullopt;
}

std::vector<Preset> parse_preset_file(const std::string& text) {
    std::vector<Preset> presets;
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        try {
            auto eq = body.find('=');
            if (eq == std::string::npos) throw Error("expected name=P,Q,family");
            std::string name = trim(body.substr(0, eq));
            if (name.empty()) throw Error("empty preset name");
            std::vector<std::string> fields = split(body.substr(eq + 1), ',');
            if (fields.size() != 3) throw Error("expected three fields: P,Q,family");
            Rational p = Rational::parse(trim(fields[0]));
            Rational q = Rational::parse(trim(fields[1]));
            SequenceKind kind = parse_family_token(trim(fields[2]));
            presets.push_back(Preset{name, LucasParams{p, q}, kind});
        } catch (const Error& e) {
            throw Error("preset file line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return presets;
}

std::vector<Preset> load_env_presets() {
    const char* path = std::getenv("LUCANOMIAL_PRESETS");
    if (path == nullptr || *path == '\0') return {};
    return parse_preset_file(read_text_file(path));
}

}  // namespace lucanomial
