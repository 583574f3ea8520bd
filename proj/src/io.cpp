#include "catchmesh/io.hpp"

#include "catchmesh/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace catchmesh {

std::string format_double(double value, int digits) {
    const int d = std::clamp(digits, 1, 17);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", d, value);
    return buf;
}

namespace {

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);   // binary: keep '\n' endings everywhere
    if (!out)
        throw io_error("cannot open for writing: " + path);
    return out;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open for reading: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::vector<double> parse_row(const std::string& line, std::size_t expected,
                              const std::string& path, std::size_t lineno) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = line.find(',', pos);
        const std::string field =
            line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        double v = 0.0;
        const char* first = field.data();
        const char* last = field.data() + field.size();
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last || !std::isfinite(v))
            throw io_error(path + ":" + std::to_string(lineno) + ": bad number '" + field + "'");
        values.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (values.size() != expected)
        throw io_error(path + ":" + std::to_string(lineno) + ": expected " +
                       std::to_string(expected) + " fields, got " +
                       std::to_string(values.size()));
    return values;
}

void check_header(const std::vector<std::string>& lines, const std::string& expected,
                  const std::string& path) {
    if (lines.empty() || lines[0] != expected)
        throw io_error(path + ": expected header '" + expected + "'");
    if (lines.size() < 2)
        throw io_error(path + ": no data rows");
}

SpherePoint point_from_row(const std::vector<double>& row, const std::string& path,
                           std::size_t lineno) {
    const double norm = std::sqrt(row[0] * row[0] + row[1] * row[1] + row[2] * row[2]);
    if (std::abs(norm - 1.0) > 1e-8)
        throw io_error(path + ":" + std::to_string(lineno) + ": point is off the unit sphere");
    // Keep the parsed values verbatim: renormalizing would break the exact
    // write/read round trip, and downstream code accepts the same 1e-8 slack.
    return SpherePoint::unchecked(row[0], row[1], row[2]);
}

std::string stem_of(const std::string& path) {
    const std::size_t slash = path.find_last_of("/\\");
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

} // namespace

void write_point_csv(const std::string& path, const PointConfiguration& cfg, int digits) {
    std::ofstream out = open_output(path);
    out << "x,y,z\n";
    for (const SpherePoint& p : cfg.points)
        out << format_double(p.x, digits) << ',' << format_double(p.y, digits) << ','
            << format_double(p.z, digits) << '\n';
    if (!out)
        throw io_error("write failed: " + path);
}

void write_submesh_csv(const std::string& path, const CatchSubmesh& sub, int digits) {
    std::vector<std::size_t> order(sub.weights.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return sub.weights[a] > sub.weights[b];
    });

    std::ofstream out = open_output(path);
    out << "x,y,z,w\n";
    for (std::size_t i : order) {
        const SpherePoint& p = sub.points.points[i];
        out << format_double(p.x, digits) << ',' << format_double(p.y, digits) << ','
            << format_double(p.z, digits) << ',' << format_double(sub.weights[i], digits)
            << '\n';
    }
    if (!out)
        throw io_error("write failed: " + path);
}

void write_padua_csv(const std::string& path, const PaduaSet& set, int digits) {
    std::ofstream out = open_output(path);
    out << "u,v\n";
    for (const SquarePoint& p : set.points)
        out << format_double(p.u, digits) << ',' << format_double(p.v, digits) << '\n';
    if (!out)
        throw io_error("write failed: " + path);
}

PointConfiguration read_point_csv(const std::string& path) {
    const std::vector<std::string> lines = read_lines(path);
    check_header(lines, "x,y,z", path);

    std::vector<SpherePoint> pts;
    pts.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty() && i + 1 == lines.size()) break;   // trailing newline
        const std::vector<double> row = parse_row(lines[i], 3, path, i + 1);
        pts.push_back(point_from_row(row, path, i + 1));
    }
    try {
        return PointConfiguration::validated(std::move(pts), stem_of(path));
    } catch (const std::invalid_argument& e) {
        throw io_error(path + ": " + e.what());
    }
}

SampleSet read_samples_csv(const std::string& path) {
    const std::vector<std::string> lines = read_lines(path);
    check_header(lines, "x,y,z,f", path);

    SampleSet set;
    std::vector<SpherePoint> pts;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty() && i + 1 == lines.size()) break;
        const std::vector<double> row = parse_row(lines[i], 4, path, i + 1);
        pts.push_back(point_from_row(row, path, i + 1));
        set.values.push_back(row[3]);
    }
    try {
        set.points = PointConfiguration::validated(std::move(pts), stem_of(path));
    } catch (const std::invalid_argument& e) {
        throw io_error(path + ": " + e.what());
    }
    return set;
}

DiscreteMeasure read_submesh_csv(const std::string& path) {
    const std::vector<std::string> lines = read_lines(path);
    check_header(lines, "x,y,z,w", path);

    DiscreteMeasure measure;
    std::vector<SpherePoint> pts;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty() && i + 1 == lines.size()) break;
        const std::vector<double> row = parse_row(lines[i], 4, path, i + 1);
        pts.push_back(point_from_row(row, path, i + 1));
        if (!(row[3] > 0.0))
            throw io_error(path + ":" + std::to_string(i + 1) + ": weight must be positive");
        measure.weights.push_back(row[3]);
    }
    try {
        measure.support = PointConfiguration::validated(std::move(pts), stem_of(path));
    } catch (const std::invalid_argument& e) {
        throw io_error(path + ": " + e.what());
    }
    return measure;
}

} // namespace catchmesh
