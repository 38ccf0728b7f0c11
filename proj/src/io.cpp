#include "jpdom/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace jpdom {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

json majorant_to_json(const RegularMajorant& h) {
    return json{{"breakpoints", h.breakpoints()}, {"values", h.values()}};
}

RegularMajorant majorant_from_json(const json& j) {
    return RegularMajorant(j.at("breakpoints").get<std::vector<double>>(),
                           j.at("values").get<std::vector<double>>());
}

json sequence_to_json(const PositiveSequence& c) {
    json j{{"rule", c.rule_name()}};
    if (c.rule() == PositiveSequence::Rule::explicit_terms) j["terms"] = c.stored_terms();
    return j;
}

PositiveSequence sequence_from_json(const json& j) {
    const auto rule = j.at("rule").get<std::string>();
    if (rule == "explicit") return PositiveSequence(j.at("terms").get<std::vector<double>>());
    return PositiveSequence::from_rule_name(rule);
}

json arcset_to_json(const ArcSet& E) {
    json gaps = json::array();
    json stages = json::array();
    for (const Gap& g : E.gaps()) {
        gaps.push_back(json::array({g.start, g.end}));
        stages.push_back(g.stage);
    }
    return json{{"gaps", gaps},
                {"stages", stages},
                {"measure", E.measure()},
                {"max_arc_length", E.max_arc_length()}};
}

ArcSet arcset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("gaps") || !j.at("gaps").is_array())
        throw std::invalid_argument("arc set json: expected an object with a \"gaps\" array");
    std::vector<Gap> gaps;
    const json& g = j.at("gaps");
    const json* stages = j.contains("stages") ? &j.at("stages") : nullptr;
    if (stages && !stages->is_array())
        throw std::invalid_argument("arc set json: \"stages\" must be an array");
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!g[i].is_array() || g[i].size() < 2 || !g[i][0].is_number() || !g[i][1].is_number())
            throw std::invalid_argument("arc set json: each gap must be a [start, end] pair");
        Gap gap;
        gap.start = g[i][0].get<double>();
        gap.end = g[i][1].get<double>();
        if (stages && i < stages->size()) {
            if (!(*stages)[i].is_number_integer())
                throw std::invalid_argument("arc set json: stages must be integers");
            gap.stage = (*stages)[i].get<std::size_t>();
        }
        gaps.push_back(gap);
    }
    return ArcSet(std::move(gaps));
}

std::string gaps_to_csv(const ArcSet& E) {
    std::ostringstream out;
    out << "index,start,end,length,stage\n";
    const auto& gaps = E.gaps();
    for (std::size_t i = 0; i < gaps.size(); ++i)
        out << i << ',' << format_double(gaps[i].start) << ',' << format_double(gaps[i].end)
            << ',' << format_double(gaps[i].length()) << ',' << gaps[i].stage << '\n';
    return out.str();
}

namespace {
bool is_builtin_majorant(const std::string& arg) {
    return arg == "sqrt" || arg == "identity" || arg == "x" || arg == "xlog" ||
           arg == "one_over_log" || arg.rfind("const:", 0) == 0;
}
} // namespace

namespace {

// non-builtin specs are file paths; any load failure is an argument error
template <typename Load>
auto load_spec_file(const std::string& arg, Load load) {
    try {
        return load(json::parse(read_text_file(arg)));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        throw std::invalid_argument(arg + ": " + e.what());
    }
}

} // namespace

RegularMajorant load_majorant_spec(const std::string& arg) {
    if (is_builtin_majorant(arg)) return make_majorant(arg);
    return load_spec_file(arg, [](const json& j) { return majorant_from_json(j); });
}

PositiveSequence load_sequence_spec(const std::string& arg) {
    if (arg == "one_over_n" || arg == "one_over_log")
        return PositiveSequence::from_rule_name(arg);
    return load_spec_file(arg, [](const json& j) { return sequence_from_json(j); });
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace jpdom
