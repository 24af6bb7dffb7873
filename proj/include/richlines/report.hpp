#pragma once

/// JSON report builders. Every report carries a versioned "schema" key and
/// uses insertion-ordered keys so serialized output is byte-stable. CSV is
/// derived from the JSON by flattening nested keys with dots (arrays get
/// numeric components).

#include <json.hpp>

#include <string>

#include "richlines/incidence.hpp"
#include "richlines/measure.hpp"
#include "richlines/rich_family.hpp"

namespace richlines {

using json = nlohmann::ordered_json;

inline json rich_family_report(const RichFamily& f) {
    json classes = json::array();
    for (const auto& [slope, intercepts] : f.classes()) {
        json mus = json::array();
        for (const Scalar& mu : intercepts) mus.push_back(mu.str());
        classes.push_back(json{{"slope", slope.str()}, {"intercepts", std::move(mus)}});
    }
    return json{{"schema", "rich-family/1"},
                {"n_a", f.grid().a.size()},
                {"n_b", f.grid().b.size()},
                {"threshold", f.threshold()},
                {"vertical_count", f.vertical_count()},
                {"classes", std::move(classes)}};
}

inline json theorem2_report_json(const Theorem2Report& r) {
    return json{{"schema", "theorem2/1"},
                {"n", r.n},
                {"epsilon", r.epsilon.str()},
                {"delta", r.delta.str()},
                {"hypotheses_met", r.hypotheses_met},
                {"slope_count", r.slope_count},
                {"min_class_size", r.min_class_size},
                {"max_uniform_richness", r.max_uniform_richness},
                {"uniform_richness_below_bound", r.uniform_richness_below_bound},
                {"witness", r.witness ? json(*r.witness) : json(nullptr)}};
}

inline json line_json(const Line& l) {
    return json{{"slope", l.slope.str()}, {"intercept", l.intercept.str()}};
}

inline json overlap_report(const OverlapStats& s) {
    json witnesses = json::array();
    for (const auto& [a, b] : s.witness_pairs)
        witnesses.push_back(json{{"first", line_json(a)}, {"second", line_json(b)}});
    return json{{"schema", "overlap/1"},
                {"tau", s.threshold_tau},
                {"total_pairs", s.total_pairs},
                {"pair_count_above", s.pair_count_above},
                {"witness_pairs", std::move(witnesses)}};
}

inline json energy_report_json(count_t x_size, count_t y_size, count_t energy, bool identity_holds,
                               const EnergyReport* translate_part) {
    json rep{{"schema", "energy/1"},
             {"x_size", x_size},
             {"y_size", y_size},
             {"energy", energy},
             {"identity_holds", identity_holds}};
    if (translate_part) {
        rep["m"] = translate_part->m;
        rep["best_translate"] = translate_part->best_translate.str();
        rep["best_overlap"] = translate_part->best_overlap;
    } else {
        rep["m"] = nullptr;
        rep["best_translate"] = nullptr;
        rep["best_overlap"] = nullptr;
    }
    return rep;
}

inline json measure_summary_json(const Measure& m, std::size_t max_listed = 64) {
    json rep{{"support_size", m.size()}, {"max_weight", m.max_weight().str()}};
    if (m.size() <= max_listed) {
        json entries = json::array();
        for (const auto& [value, weight] : m.entries())
            entries.push_back(json{{"value", value.str()}, {"weight", weight.str()}});
        rep["entries"] = std::move(entries);
    }
    return rep;
}

inline json flatten_report_json(count_t theta_size, count_t iterations, const Measure& f_j,
                                const FlatteningReport* flat, const std::string& note = "") {
    json rep{{"schema", "flatten/1"},
             {"theta_size", theta_size},
             {"iterations", iterations},
             {"measure", measure_summary_json(f_j)}};
    if (flat) {
        rep["flattening"] = json{{"m", flat->m.str()},
                                 {"m_star", flat->m_star.str()},
                                 {"m_pow_4_3", flat->m_pow_4_3},
                                 {"log2_support", flat->log2_support},
                                 {"ratio", flat->ratio},
                                 {"precision_digits", flat->precision_digits}};
    } else {
        rep["flattening"] = nullptr;
    }
    if (!note.empty()) rep["note"] = note;
    return rep;
}

inline json incidence_report_json(const IncidenceReport& r) {
    return json{{"schema", "st-check/1"},
                {"n_points", r.n_points},
                {"n_lines", r.n_lines},
                {"incidences", r.incidences},
                {"st_ratio", r.st_ratio},
                {"precision_digits", r.precision_digits}};
}

inline json elekes_report_json(const ElekesReport& r) {
    return json{{"schema", "elekes/1"},
                {"n", r.n},
                {"sumset_size", r.sumset_size},
                {"productset_size", r.productset_size},
                {"product", r.product.get_str()},
                {"bound_holds", r.bound_holds},
                {"exponent", r.exponent},
                {"precision_digits", r.precision_digits}};
}

namespace detail {

inline void flatten_json(const json& node, const std::string& prefix,
                         std::vector<std::pair<std::string, std::string>>& out) {
    auto join = [&](const std::string& key) { return prefix.empty() ? key : prefix + "." + key; };
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) flatten_json(value, join(key), out);
    } else if (node.is_array()) {
        std::size_t i = 0;
        for (const auto& value : node) flatten_json(value, join(std::to_string(i++)), out);
    } else if (node.is_null()) {
        out.emplace_back(prefix, "");
    } else if (node.is_string()) {
        out.emplace_back(prefix, node.get<std::string>());
    } else {
        out.emplace_back(prefix, node.dump());
    }
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace detail

/// Header row of dotted keys plus one value row.
inline std::string to_csv(const json& report) {
    std::vector<std::pair<std::string, std::string>> cells;
    detail::flatten_json(report, "", cells);
    std::string header, values;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) {
            header += ',';
            values += ',';
        }
        header += detail::csv_quote(cells[i].first);
        values += detail::csv_quote(cells[i].second);
    }
    return header + "\n" + values + "\n";
}

/// Canonical serialized form of a report in the requested format.
inline std::string render_report(const json& report, const std::string& format) {
    if (format == "csv") return to_csv(report);
    return report.dump(2) + "\n";
}

}  // namespace richlines
