#pragma once

/// Text formats. All loaders report the offending source name and 1-based
/// line number through ParseError; blank lines and lines starting with '#'
/// are ignored everywhere.
///
///   number set:     one scalar per line
///   line list:      "slope intercept" per line
///   measure:        "value weight" per line; weights positive, total mass 1
///   configuration:  "[points]" section of "x y" lines, then "[lines]"
///                   section of "a b c" lines (a*x + b*y = c)

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "richlines/errors.hpp"
#include "richlines/incidence.hpp"
#include "richlines/line.hpp"
#include "richlines/measure.hpp"
#include "richlines/number_set.hpp"

namespace richlines {

namespace detail {

inline std::string strip(const std::string& s) {
    auto from = s.find_first_not_of(" \t\r\n");
    if (from == std::string::npos) return "";
    auto to = s.find_last_not_of(" \t\r\n");
    return s.substr(from, to - from + 1);
}

inline std::vector<std::string> fields(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

/// Calls fn(line_number, stripped_content) for every meaningful line.
template <typename Fn>
void for_each_data_line(std::istream& in, Fn fn) {
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string s = strip(raw);
        if (s.empty() || s.front() == '#') continue;
        fn(line_no, s);
    }
}

inline Scalar parse_scalar_at(const std::string& source, std::size_t line, const std::string& text) {
    try {
        return Scalar::parse(text);
    } catch (const InvalidArgument& e) {
        throw ParseError(source, line, e.what());
    }
}

}  // namespace detail

inline NumberSet load_number_set(std::istream& in, const std::string& source = "<stream>") {
    std::vector<Scalar> values;
    detail::for_each_data_line(in, [&](std::size_t line_no, const std::string& s) {
        Scalar v = detail::parse_scalar_at(source, line_no, s);
        for (const Scalar& seen : values)
            if (seen == v) throw ParseError(source, line_no, "duplicate value '" + s + "'");
        values.push_back(std::move(v));
    });
    return NumberSet(std::move(values));
}

inline void save_number_set(std::ostream& out, const NumberSet& s) {
    for (const Scalar& v : s) out << v.str() << "\n";
}

inline std::vector<Line> load_lines(std::istream& in, const std::string& source = "<stream>") {
    std::vector<Line> lines;
    detail::for_each_data_line(in, [&](std::size_t line_no, const std::string& s) {
        auto f = detail::fields(s);
        if (f.size() != 2) throw ParseError(source, line_no, "expected 'slope intercept'");
        lines.push_back(Line{detail::parse_scalar_at(source, line_no, f[0]),
                             detail::parse_scalar_at(source, line_no, f[1])});
    });
    return lines;
}

inline void save_lines(std::ostream& out, const std::vector<Line>& lines) {
    for (const Line& l : lines) out << l << "\n";
}

inline Measure load_measure(std::istream& in, const std::string& source = "<stream>") {
    std::vector<Measure::Entry> entries;
    detail::for_each_data_line(in, [&](std::size_t line_no, const std::string& s) {
        auto f = detail::fields(s);
        if (f.size() != 2) throw ParseError(source, line_no, "expected 'value weight'");
        entries.emplace_back(detail::parse_scalar_at(source, line_no, f[0]),
                             detail::parse_scalar_at(source, line_no, f[1]));
    });
    try {
        return Measure::from_entries(std::move(entries));
    } catch (const InvalidArgument& e) {
        throw ParseError(source, 0, e.what());
    }
}

inline void save_measure(std::ostream& out, const Measure& m) {
    for (const auto& [value, weight] : m.entries()) out << value.str() << " " << weight.str() << "\n";
}

inline Configuration load_configuration(std::istream& in, const std::string& source = "<stream>") {
    Configuration cfg;
    enum class Section { none, points, lines } section = Section::none;
    detail::for_each_data_line(in, [&](std::size_t line_no, const std::string& s) {
        if (s == "[points]") {
            section = Section::points;
            return;
        }
        if (s == "[lines]") {
            section = Section::lines;
            return;
        }
        auto f = detail::fields(s);
        switch (section) {
            case Section::none:
                throw ParseError(source, line_no, "content before a [points] or [lines] section");
            case Section::points: {
                if (f.size() != 2) throw ParseError(source, line_no, "expected 'x y'");
                Point p{detail::parse_scalar_at(source, line_no, f[0]),
                        detail::parse_scalar_at(source, line_no, f[1])};
                for (const Point& seen : cfg.points)
                    if (seen == p) throw ParseError(source, line_no, "duplicate point");
                cfg.points.push_back(std::move(p));
                break;
            }
            case Section::lines: {
                if (f.size() != 3) throw ParseError(source, line_no, "expected 'a b c'");
                try {
                    GeneralLine l(detail::parse_scalar_at(source, line_no, f[0]),
                                  detail::parse_scalar_at(source, line_no, f[1]),
                                  detail::parse_scalar_at(source, line_no, f[2]));
                    for (const GeneralLine& seen : cfg.lines)
                        if (seen == l)
                            throw ParseError(source, line_no, "duplicate line after canonicalization");
                    cfg.lines.push_back(std::move(l));
                } catch (const InvalidArgument& e) {
                    throw ParseError(source, line_no, e.what());
                }
                break;
            }
        }
    });
    return cfg;
}

inline void save_configuration(std::ostream& out, const Configuration& cfg) {
    out << "[points]\n";
    for (const Point& p : cfg.points) out << p.x.str() << " " << p.y.str() << "\n";
    out << "[lines]\n";
    for (const GeneralLine& l : cfg.lines)
        out << l.a().str() << " " << l.b().str() << " " << l.c().str() << "\n";
}

template <typename T, typename Loader>
T load_file(const std::filesystem::path& path, Loader loader) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    return loader(in, path.string());
}

inline NumberSet load_number_set_file(const std::filesystem::path& path) {
    return load_file<NumberSet>(path, [](std::istream& in, const std::string& src) {
        return load_number_set(in, src);
    });
}

inline Measure load_measure_file(const std::filesystem::path& path) {
    return load_file<Measure>(path, [](std::istream& in, const std::string& src) {
        return load_measure(in, src);
    });
}

inline Configuration load_configuration_file(const std::filesystem::path& path) {
    return load_file<Configuration>(path, [](std::istream& in, const std::string& src) {
        return load_configuration(in, src);
    });
}

inline std::vector<Line> load_lines_file(const std::filesystem::path& path) {
    return load_file<std::vector<Line>>(path, [](std::istream& in, const std::string& src) {
        return load_lines(in, src);
    });
}

/// Writes content to path via a temp file in the same directory plus an
/// atomic rename.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write '" + tmp.string() + "'");
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace richlines
