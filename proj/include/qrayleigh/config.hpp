// config.hpp: Line-oriented key/value run configuration (a TOML subset)

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qrayleigh/measures.hpp"
#include "qrayleigh/states.hpp"

namespace qrayleigh::config {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Value {
    enum class Type { Number, Boolean, String, Array };
    Type type{Type::Number};
    std::string text; // raw token, kept for exact integer parsing
    double number{0.0};
    bool boolean{false};
    std::vector<double> array;
    int line{0};
};

/// Parsed document. Keys before the first [section] live in section "".
/// Getters record which keys were read so stray or misspelt keys can be
/// reported after an experiment has pulled its parameters.
class Document {
public:
    static Document parse(std::string_view text);
    static Document load(const std::string& path);

    bool has(const std::string& section, const std::string& key) const;
    bool has_section(const std::string& section) const;

    double number(const std::string& section, const std::string& key, double fallback) const;
    int integer(const std::string& section, const std::string& key, int fallback) const;
    std::uint64_t unsigned64(const std::string& section, const std::string& key, std::uint64_t fallback) const;
    bool boolean(const std::string& section, const std::string& key, bool fallback) const;
    std::string string(const std::string& section, const std::string& key, const std::string& fallback) const;
    std::vector<double> numbers(const std::string& section, const std::string& key,
                                const std::vector<double>& fallback) const;

    // "section.key" for every entry no getter has touched.
    std::vector<std::string> unused_keys() const;

    void set(const std::string& section, const std::string& key, Value v);

private:
    const Value* find(const std::string& section, const std::string& key) const;

    std::map<std::string, std::map<std::string, Value>> sections_;
    mutable std::set<std::string> used_;
};

inline const std::vector<std::string> kExperiments = {"fig3", "fig4", "fig5", "fig6", "fig7",
                                                      "onsager", "checks", "sweep"};

struct RunConfig {
    std::string experiment;
    std::uint64_t seed{20240611};
    std::string out;
    measures::LogUnit units{measures::LogUnit::Nats};
    Document doc;
};

RunConfig load_run_config(const std::string& path);
RunConfig run_config_from(Document doc);

/// Reads a [section] bath block on top of `defaults`. `coherence` gives lambda
/// or mu directly, `chi` gives it as a fraction of the upper bound. The
/// result is checked against the family's positivity bound.
BathParams bath_from(const Document& doc, const std::string& section, const BathParams& defaults);

// Evenly spaced points, endpoints included.
std::vector<double> linspace(double a, double b, int n);

} // namespace qrayleigh::config
