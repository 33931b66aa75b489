#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "otcert/cli.hpp"

namespace otcert::cli {

namespace {

const std::set<std::string, std::less<>> kKeys{
    "name",         "polynomial",     "unit",         "subfield_hint", "real_order", "conjugate", "precision_bits",
    "exponent_bound", "height_bound", "word_bound",   "tolerance",     "seed",       "format",
};

bool repeatable(std::string_view key) { return key == "unit" || key == "subfield_hint"; }

class LineCursor {
   public:
    LineCursor(std::string_view text, int line) : text_(text), line_(line) {}

    void skip_spaces() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
    }
    bool at_end() {
        skip_spaces();
        return pos_ >= text_.size();
    }
    char peek() { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    int column() const { return static_cast<int>(pos_) + 1; }
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, column(), message); }
    void expect(char c) {
        skip_spaces();
        if (peek() != c) fail(std::string("expected '") + c + "'" + (pos_ >= text_.size() ? " before end of line" : ""));
        ++pos_;
    }

    std::string word() {
        skip_spaces();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                                       text_[pos_] == '-' || text_[pos_] == '.' || text_[pos_] == '+'))
            ++pos_;
        if (start == pos_) fail("expected a value");
        return std::string(text_.substr(start, pos_ - start));
    }

    Integer integer() {
        skip_spaces();
        const int col = column();
        std::string w = word();
        std::size_t i = (w[0] == '-' || w[0] == '+') ? 1 : 0;
        bool ok = i < w.size();
        for (std::size_t k = i; k < w.size(); ++k) ok = ok && std::isdigit(static_cast<unsigned char>(w[k]));
        if (!ok) throw ParseError(line_, col, "malformed integer '" + w + "'");
        if (w[0] == '+') w.erase(0, 1);
        return Integer(w);
    }

    std::vector<Integer> integer_list() {
        expect('[');
        std::vector<Integer> out;
        skip_spaces();
        if (peek() == ']') {
            ++pos_;
            return out;
        }
        for (;;) {
            out.push_back(integer());
            skip_spaces();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (peek() == ']') {
                ++pos_;
                return out;
            }
            fail(pos_ >= text_.size() ? "unterminated list" : "expected ',' or ']'");
        }
    }

    std::string rest() {
        skip_spaces();
        std::string out(text_.substr(pos_));
        while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
        pos_ = text_.size();
        return out;
    }

   private:
    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
};

long to_long(const Integer& v, int line, int col, long lo, long hi) {
    if (!v.fits_slong_p() || v.get_si() < lo || v.get_si() > hi)
        throw ParseError(line, col, "value out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v.get_si();
}

struct Position {
    int line = 0;
    int column = 0;
};

// Checks shared by both input formats; positions point at the offending key.
void validate(const JobSpec& spec, const std::map<std::string, std::vector<Position>>& where, int last_line) {
    auto pos = [&](const std::string& key, std::size_t i = 0) {
        auto it = where.find(key);
        return (it == where.end() || it->second.size() <= i) ? Position{last_line, 1} : it->second[i];
    };
    if (spec.polynomial.empty()) throw ParseError(last_line, 1, "missing 'polynomial'");
    const Position pp = pos("polynomial");
    if (spec.polynomial.back() != 1)
        throw ParseError(pp.line, pp.column, "polynomial must be monic (last coefficient 1, constant term first)");
    const std::size_t n = spec.polynomial.size() - 1;
    if (n < 2) throw ParseError(pp.line, pp.column, "polynomial must have degree at least 2");
    for (std::size_t k = 0; k < spec.units.size(); ++k)
        if (spec.units[k].size() != n) {
            const Position p = pos("unit", k);
            throw ParseError(p.line, p.column,
                             "unit " + std::to_string(k + 1) + " has " + std::to_string(spec.units[k].size()) +
                                 " coordinates, expected " + std::to_string(n));
        }
    for (std::size_t k = 0; k < spec.subfield_hints.size(); ++k)
        if (spec.subfield_hints[k].size() != n) {
            const Position p = pos("subfield_hint", k);
            throw ParseError(p.line, p.column,
                             "subfield_hint " + std::to_string(k + 1) + " has " +
                                 std::to_string(spec.subfield_hints[k].size()) + " coordinates, expected " +
                                 std::to_string(n));
        }
    if (spec.tolerance && !(*spec.tolerance > 0)) {
        const Position p = pos("tolerance");
        throw ParseError(p.line, p.column, "tolerance must be positive");
    }
}

JobSpec parse_key_value(std::string_view text) {
    JobSpec spec;
    std::map<std::string, std::vector<Position>> where;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        LineCursor cur(line, line_no);
        if (cur.at_end()) {
            if (end == text.size()) break;
            continue;
        }
        const int key_col = cur.column();
        std::string key = cur.word();
        if (!kKeys.count(key)) throw ParseError(line_no, key_col, "unknown key '" + key + "'");
        if (where.count(key) && !repeatable(key)) throw ParseError(line_no, key_col, "duplicate key '" + key + "'");
        cur.expect('=');
        cur.skip_spaces();
        const int col = cur.column();
        where[key].push_back({line_no, col});
        if (cur.at_end()) cur.fail("missing value for '" + key + "'");

        if (key == "name") {
            spec.name = cur.rest();
        } else if (key == "polynomial") {
            spec.polynomial = cur.integer_list();
        } else if (key == "unit") {
            spec.units.push_back(cur.integer_list());
        } else if (key == "subfield_hint") {
            spec.subfield_hints.push_back(cur.integer_list());
        } else if (key == "real_order") {
            std::vector<int> order;
            for (const auto& v : cur.integer_list()) order.push_back(static_cast<int>(to_long(v, line_no, col, 0, 1 << 20)));
            spec.real_order = std::move(order);
        } else if (key == "conjugate") {
            std::vector<bool> flags;
            for (const auto& v : cur.integer_list()) flags.push_back(to_long(v, line_no, col, 0, 1) == 1);
            spec.conjugate = std::move(flags);
        } else if (key == "precision_bits") {
            spec.precision_bits = to_long(cur.integer(), line_no, col, 64, 1 << 16);
        } else if (key == "exponent_bound") {
            spec.exponent_bound = to_long(cur.integer(), line_no, col, 0, 1000);
        } else if (key == "height_bound") {
            spec.height_bound = to_long(cur.integer(), line_no, col, 0, 100);
        } else if (key == "word_bound") {
            spec.word_bound = to_long(cur.integer(), line_no, col, 0, 64);
        } else if (key == "seed") {
            Integer v = cur.integer();
            if (v < 0 || !v.fits_ulong_p()) throw ParseError(line_no, col, "seed must be a non-negative 64-bit integer");
            spec.seed = v.get_ui();
        } else if (key == "tolerance") {
            std::string w = cur.word();
            errno = 0;
            char* endp = nullptr;
            const double t = std::strtod(w.c_str(), &endp);
            if (errno != 0 || endp != w.c_str() + w.size()) throw ParseError(line_no, col, "malformed number '" + w + "'");
            spec.tolerance = t;
        } else if (key == "format") {
            std::string w = cur.word();
            if (w != "text" && w != "json") throw ParseError(line_no, col, "format must be 'text' or 'json'");
            spec.format = w;
        }
        if (!cur.at_end()) cur.fail("unexpected trailing characters");
        if (end == text.size()) break;
    }
    validate(spec, where, line_no);
    return spec;
}

Integer json_integer(const nlohmann::json& v, const std::string& field) {
    if (v.is_number_integer()) return Integer(v.dump());
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (!s.empty() && s.find_first_not_of("+-0123456789") == std::string::npos && s.find_first_of("0123456789") != std::string::npos) {
            try {
                return Integer(s[0] == '+' ? s.substr(1) : s);
            } catch (const std::invalid_argument&) {
            }
        }
    }
    throw ParseError(1, 1, "field '" + field + "': expected an integer");
}

std::vector<Integer> json_integer_list(const nlohmann::json& v, const std::string& field) {
    if (!v.is_array()) throw ParseError(1, 1, "field '" + field + "': expected a list");
    std::vector<Integer> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(json_integer(v[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

long json_long(const nlohmann::json& v, const std::string& field, long lo, long hi) {
    Integer x = json_integer(v, field);
    if (!x.fits_slong_p() || x.get_si() < lo || x.get_si() > hi)
        throw ParseError(1, 1, "field '" + field + "': out of range");
    return x.get_si();
}

JobSpec parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        int line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        if (auto p = what.rfind(": "); p != std::string::npos) what = what.substr(p + 2);
        throw ParseError(line, col, what);
    }
    if (!doc.is_object()) throw ParseError(1, 1, "expected a JSON object");
    static const std::map<std::string, int> allowed{
        {"name", 0},          {"polynomial", 0},   {"units", 0},      {"subfield_hints", 0}, {"real_order", 0},
        {"conjugate", 0},     {"precision_bits", 0}, {"exponent_bound", 0}, {"height_bound", 0},  {"word_bound", 0},
        {"tolerance", 0},     {"seed", 0},         {"format", 0}};
    for (const auto& [k, v] : doc.items())
        if (!allowed.count(k)) throw ParseError(1, 1, "unknown field '" + k + "'");
    JobSpec spec;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ParseError(1, 1, "field 'name': expected a string");
        spec.name = doc["name"].get<std::string>();
    }
    if (doc.contains("polynomial")) spec.polynomial = json_integer_list(doc["polynomial"], "polynomial");
    auto lists = [&](const char* key, std::vector<std::vector<Integer>>& out) {
        if (!doc.contains(key)) return;
        const auto& v = doc[key];
        if (!v.is_array()) throw ParseError(1, 1, std::string("field '") + key + "': expected a list of lists");
        for (std::size_t i = 0; i < v.size(); ++i)
            out.push_back(json_integer_list(v[i], std::string(key) + "[" + std::to_string(i) + "]"));
    };
    lists("units", spec.units);
    lists("subfield_hints", spec.subfield_hints);
    if (doc.contains("real_order")) {
        std::vector<int> order;
        for (const auto& v : json_integer_list(doc["real_order"], "real_order")) {
            if (!v.fits_sint_p() || v < 0) throw ParseError(1, 1, "field 'real_order': out of range");
            order.push_back(static_cast<int>(v.get_si()));
        }
        spec.real_order = std::move(order);
    }
    if (doc.contains("conjugate")) {
        const auto& v = doc["conjugate"];
        if (!v.is_array()) throw ParseError(1, 1, "field 'conjugate': expected a list");
        std::vector<bool> flags;
        for (const auto& x : v) {
            if (x.is_boolean())
                flags.push_back(x.get<bool>());
            else
                flags.push_back(json_long(x, "conjugate", 0, 1) == 1);
        }
        spec.conjugate = std::move(flags);
    }
    if (doc.contains("precision_bits")) spec.precision_bits = json_long(doc["precision_bits"], "precision_bits", 64, 1 << 16);
    if (doc.contains("exponent_bound")) spec.exponent_bound = json_long(doc["exponent_bound"], "exponent_bound", 0, 1000);
    if (doc.contains("height_bound")) spec.height_bound = json_long(doc["height_bound"], "height_bound", 0, 100);
    if (doc.contains("word_bound")) spec.word_bound = json_long(doc["word_bound"], "word_bound", 0, 64);
    if (doc.contains("seed")) {
        Integer v = json_integer(doc["seed"], "seed");
        if (v < 0 || !v.fits_ulong_p()) throw ParseError(1, 1, "field 'seed': out of range");
        spec.seed = v.get_ui();
    }
    if (doc.contains("tolerance")) {
        if (!doc["tolerance"].is_number()) throw ParseError(1, 1, "field 'tolerance': expected a number");
        spec.tolerance = doc["tolerance"].get<double>();
    }
    if (doc.contains("format")) {
        const auto& f = doc["format"];
        if (!f.is_string() || (f != "text" && f != "json")) throw ParseError(1, 1, "field 'format': expected text or json");
        spec.format = f.get<std::string>();
    }
    validate(spec, {}, 1);
    return spec;
}

std::string list_text(const std::vector<Integer>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get_str();
    return out + "]";
}

}  // namespace

JobSpec parse_jobspec(std::string_view text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
    return parse_key_value(text);
}

std::string render_jobspec(const JobSpec& spec) {
    std::ostringstream out;
    if (!spec.name.empty()) out << "name = " << spec.name << "\n";
    out << "polynomial = " << list_text(spec.polynomial) << "\n";
    for (const auto& u : spec.units) out << "unit = " << list_text(u) << "\n";
    for (const auto& h : spec.subfield_hints) out << "subfield_hint = " << list_text(h) << "\n";
    if (spec.real_order) {
        out << "real_order = [";
        for (std::size_t i = 0; i < spec.real_order->size(); ++i) out << (i ? ", " : "") << (*spec.real_order)[i];
        out << "]\n";
    }
    if (spec.conjugate) {
        out << "conjugate = [";
        for (std::size_t i = 0; i < spec.conjugate->size(); ++i) out << (i ? ", " : "") << ((*spec.conjugate)[i] ? 1 : 0);
        out << "]\n";
    }
    if (spec.precision_bits) out << "precision_bits = " << *spec.precision_bits << "\n";
    if (spec.exponent_bound) out << "exponent_bound = " << *spec.exponent_bound << "\n";
    if (spec.height_bound) out << "height_bound = " << *spec.height_bound << "\n";
    if (spec.word_bound) out << "word_bound = " << *spec.word_bound << "\n";
    if (spec.tolerance) out << "tolerance = " << *spec.tolerance << "\n";
    if (spec.seed) out << "seed = " << *spec.seed << "\n";
    if (spec.format) out << "format = " << *spec.format << "\n";
    return out.str();
}

Options resolve_options(const JobSpec& spec, const Overrides& o, Options base) {
    base.precision_bits = o.precision_bits.value_or(spec.precision_bits.value_or(base.precision_bits));
    base.exponent_bound = o.exponent_bound.value_or(spec.exponent_bound.value_or(base.exponent_bound));
    base.height_bound = o.height_bound.value_or(spec.height_bound.value_or(base.height_bound));
    if (o.word_bound)
        base.word_bound = o.word_bound;
    else if (spec.word_bound)
        base.word_bound = spec.word_bound;
    base.tolerance = o.tolerance.value_or(spec.tolerance.value_or(base.tolerance));
    base.seed = o.seed.value_or(spec.seed.value_or(base.seed));
    base.json = o.json.value_or(spec.format ? *spec.format == "json" : base.json);
    return base;
}

}  // namespace otcert::cli
