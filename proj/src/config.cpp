#include "qrayleigh/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "qrayleigh/errors.hpp"

namespace qrayleigh::config {

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ConfigError("line " + std::to_string(line) + ": " + msg);
}

// Drop a trailing comment that is not inside a string.
std::string strip_comment(const std::string& s) {
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"' && (i == 0 || s[i - 1] != '\\')) quoted = !quoted;
        if (s[i] == '#' && !quoted) return s.substr(0, i);
    }
    return s;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    std::string t;
    for (char c : s)
        if (c != '_') t.push_back(c);
    if (t == "inf" || t == "+inf") {
        out = std::numeric_limits<double>::infinity();
        return true;
    }
    if (t == "-inf") {
        out = -std::numeric_limits<double>::infinity();
        return true;
    }
    const char* first = t.data();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), out);
    return ec == std::errc() && ptr == t.data() + t.size();
}

Value parse_value(const std::string& raw, int line) {
    Value v;
    v.line = line;
    v.text = raw;
    if (raw.empty()) fail(line, "missing value");
    if (raw.front() == '"') {
        if (raw.size() < 2 || raw.back() != '"') fail(line, "unterminated string");
        v.type = Value::Type::String;
        std::string s;
        for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
            if (raw[i] == '\\' && i + 2 < raw.size()) {
                const char n = raw[++i];
                s.push_back(n == 'n' ? '\n' : n == 't' ? '\t' : n);
            } else {
                s.push_back(raw[i]);
            }
        }
        v.text = s;
        return v;
    }
    if (raw == "true" || raw == "false") {
        v.type = Value::Type::Boolean;
        v.boolean = raw == "true";
        return v;
    }
    if (raw.front() == '[') {
        if (raw.back() != ']') fail(line, "unterminated array");
        v.type = Value::Type::Array;
        std::stringstream ss(raw.substr(1, raw.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            double x;
            if (!parse_double(item, x)) fail(line, "array entries must be numbers: '" + item + "'");
            v.array.push_back(x);
        }
        return v;
    }
    if (!parse_double(raw, v.number)) fail(line, "cannot parse value '" + raw + "'");
    v.type = Value::Type::Number;
    return v;
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
    });
}

std::string where(const std::string& section, const std::string& key) {
    return section.empty() ? key : section + "." + key;
}

} // namespace

Document Document::parse(std::string_view text) {
    Document doc;
    std::string section;
    doc.sections_[section];
    std::stringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(strip_comment(raw));
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') fail(line, "malformed section header");
            section = trim(std::string_view(s).substr(1, s.size() - 2));
            if (!valid_name(section)) fail(line, "invalid section name '" + section + "'");
            if (doc.sections_.count(section) && !doc.sections_[section].empty())
                fail(line, "duplicate section [" + section + "]");
            doc.sections_[section];
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) fail(line, "expected key = value");
        const std::string key = trim(std::string_view(s).substr(0, eq));
        if (!valid_name(key)) fail(line, "invalid key '" + key + "'");
        auto& table = doc.sections_[section];
        if (table.count(key)) fail(line, "duplicate key '" + where(section, key) + "'");
        table[key] = parse_value(trim(std::string_view(s).substr(eq + 1)), line);
    }
    return doc;
}

Document Document::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

const Value* Document::find(const std::string& section, const std::string& key) const {
    const auto s = sections_.find(section);
    if (s == sections_.end()) return nullptr;
    const auto k = s->second.find(key);
    if (k == s->second.end()) return nullptr;
    used_.insert(where(section, key));
    return &k->second;
}

bool Document::has(const std::string& section, const std::string& key) const {
    const auto s = sections_.find(section);
    return s != sections_.end() && s->second.count(key);
}

bool Document::has_section(const std::string& section) const { return sections_.count(section) > 0; }

double Document::number(const std::string& section, const std::string& key, double fallback) const {
    const Value* v = find(section, key);
    if (!v) return fallback;
    if (v->type != Value::Type::Number) fail(v->line, where(section, key) + " must be a number");
    return v->number;
}

int Document::integer(const std::string& section, const std::string& key, int fallback) const {
    const Value* v = find(section, key);
    if (!v) return fallback;
    int out = 0;
    auto [ptr, ec] = std::from_chars(v->text.data(), v->text.data() + v->text.size(), out);
    if (v->type != Value::Type::Number || ec != std::errc() || ptr != v->text.data() + v->text.size())
        fail(v->line, where(section, key) + " must be an integer");
    return out;
}

std::uint64_t Document::unsigned64(const std::string& section, const std::string& key, std::uint64_t fallback) const {
    const Value* v = find(section, key);
    if (!v) return fallback;
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(v->text.data(), v->text.data() + v->text.size(), out);
    if (v->type != Value::Type::Number || ec != std::errc() || ptr != v->text.data() + v->text.size())
        fail(v->line, where(section, key) + " must be a non-negative integer");
    return out;
}

bool Document::boolean(const std::string& section, const std::string& key, bool fallback) const {
    const Value* v = find(section, key);
    if (!v) return fallback;
    if (v->type != Value::Type::Boolean) fail(v->line, where(section, key) + " must be true or false");
    return v->boolean;
}

std::string Document::string(const std::string& section, const std::string& key, const std::string& fallback) const {
    const Value* v = find(section, key);
    if (!v) return fallback;
    if (v->type != Value::Type::String) fail(v->line, where(section, key) + " must be a quoted string");
    return v->text;
}

std::vector<double> Document::numbers(const std::string& section, const std::string& key,
                                      const std::vector<double>& fallback) const {
    const Value* v = find(section, key);
    if (!v) return fallback;
    if (v->type == Value::Type::Number) return {v->number};
    if (v->type != Value::Type::Array) fail(v->line, where(section, key) + " must be an array of numbers");
    return v->array;
}

std::vector<std::string> Document::unused_keys() const {
    std::vector<std::string> out;
    for (const auto& [section, table] : sections_)
        for (const auto& [key, value] : table)
            if (!used_.count(where(section, key))) out.push_back(where(section, key));
    return out;
}

void Document::set(const std::string& section, const std::string& key, Value v) {
    sections_[section][key] = std::move(v);
}

RunConfig run_config_from(Document doc) {
    RunConfig rc;
    rc.experiment = doc.string("", "experiment", "");
    if (std::find(kExperiments.begin(), kExperiments.end(), rc.experiment) == kExperiments.end())
        throw ConfigError("unknown or missing experiment '" + rc.experiment + "'");
    rc.seed = doc.unsigned64("", "seed", rc.seed);
    rc.out = doc.string("", "out", "");
    try {
        rc.units = measures::parse_log_unit(doc.string("", "units", "nats"));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    rc.doc = std::move(doc);
    return rc;
}

RunConfig load_run_config(const std::string& path) { return run_config_from(Document::load(path)); }

BathParams bath_from(const Document& doc, const std::string& section, const BathParams& defaults) {
    BathParams b = defaults;
    try {
        b.kind = parse_kind(doc.string(section, "kind", to_string(b.kind)));
        b.scenario = parse_scenario(doc.string(section, "scenario", to_string(b.scenario)));
        b.beta_b = doc.number(section, "beta_b", b.beta_b);
        b.coupling = doc.number(section, "coupling", b.coupling);
        b.tau = doc.number(section, "tau", b.tau);
        b.rate = doc.number(section, "rate", b.rate);
        b.qubit.e_g = doc.number(section, "e_g", b.qubit.e_g);
        b.qubit.e_e = doc.number(section, "e_e", b.qubit.e_e);
        b.qubit.validate();
        if (!(b.beta_b > 0.0) || !std::isfinite(b.beta_b)) throw ConfigError(section + ".beta_b must be positive");
        if (!(b.tau >= 0.0) || !std::isfinite(b.tau)) throw ConfigError(section + ".tau must be non-negative");
        if (!(b.rate > 0.0) || !std::isfinite(b.rate)) throw ConfigError(section + ".rate must be positive");
        if (!std::isfinite(b.coupling)) throw ConfigError(section + ".coupling must be finite");
        if (doc.has(section, "coherence") && doc.has(section, "chi"))
            throw ConfigError(section + ": give either coherence or chi, not both");
        if (doc.has(section, "chi")) {
            const double chi = doc.number(section, "chi", 0.0);
            b.coherence = chi * coherence_bounds(b.kind, b.beta_b, b.qubit).upper;
        } else {
            b.coherence = doc.number(section, "coherence", b.coherence);
        }
        projectile_state(b);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError("[" + section + "] " + e.what());
    }
    return b;
}

std::vector<double> linspace(double a, double b, int n) {
    if (n < 1) throw ConfigError("grid needs at least one point");
    std::vector<double> out(static_cast<std::size_t>(n));
    if (n == 1) {
        out[0] = a;
        return out;
    }
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i == n - 1 ? b : a + (b - a) * i / (n - 1);
    return out;
}

} // namespace qrayleigh::config
