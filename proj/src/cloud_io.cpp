#include "mses/cloud_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mses {

namespace {

double parse_real(const std::string& token, std::size_t row) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(*begin)))
        ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(end[-1])))
        --end;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw io_error("row " + std::to_string(row) + ": bad number '" +
                       token + "'");
    return value;
}

PointCloud parse_csv(std::istream& in) {
    PointCloud cloud;
    std::string line;
    std::size_t row = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header_seen) {
            header_seen = true;
            continue;  // `x,y,z` header
        }
        std::stringstream ss(line);
        std::string tx, ty, tz;
        if (!std::getline(ss, tx, ',') || !std::getline(ss, ty, ',') ||
            !std::getline(ss, tz, ','))
            throw io_error("row " + std::to_string(row) +
                           ": expected three comma-separated values");
        cloud.push_back({parse_real(tx, row), parse_real(ty, row),
                         parse_real(tz, row)});
    }
    if (!header_seen) throw io_error("empty cloud file");
    return cloud;
}

PointCloud parse_json_cloud(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("bad JSON cloud: ") + e.what());
    }
    if (!j.is_array()) throw io_error("JSON cloud must be an array");
    PointCloud cloud;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& row = j[i];
        if (!row.is_array() || row.size() != 3 || !row[0].is_number() ||
            !row[1].is_number() || !row[2].is_number())
            throw io_error("row " + std::to_string(i) +
                           ": expected [x, y, z]");
        cloud.push_back({row[0].get<double>(), row[1].get<double>(),
                         row[2].get<double>()});
    }
    return cloud;
}

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path);
    return out;
}

}  // namespace

PointCloud read_cloud(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot read " + path);
    // Sniff the first non-whitespace character to pick the format.
    char c = 0;
    while (in.get(c) && std::isspace(static_cast<unsigned char>(c))) {
    }
    in.unget();
    if (c == '[') return parse_json_cloud(in);
    return parse_csv(in);
}

void write_cloud_csv(const std::string& path, const PointCloud& cloud) {
    auto out = open_out(path);
    out << "x,y,z\n";
    for (const Point3& p : cloud)
        out << format_real(p.x) << ',' << format_real(p.y) << ','
            << format_real(p.z) << '\n';
}

void write_cloud_json(const std::string& path, const PointCloud& cloud) {
    nlohmann::json j = nlohmann::json::array();
    for (const Point3& p : cloud) j.push_back({p.x, p.y, p.z});
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

void write_trace_csv(const std::string& path,
                     const std::vector<TraceRecord>& trace) {
    auto out = open_out(path);
    out << "iter,gbest_j,inside_count,radius,lms,lyapunov\n";
    for (const TraceRecord& r : trace)
        out << r.iter << ',' << format_real(r.gbest_j) << ',' << r.inside_count
            << ',' << format_real(r.radius) << ',' << format_real(r.lms) << ','
            << format_real(r.lyapunov) << '\n';
}

nlohmann::ordered_json pso_report_json(const SolveResult& result,
                                       const PointCloud& cloud,
                                       std::uint64_t seed) {
    nlohmann::ordered_json j;
    j["center"] = {result.sphere.center.x, result.sphere.center.y,
                   result.sphere.center.z};
    j["radius"] = result.sphere.radius;
    j["j"] = result.fitness.j;
    j["inside_count"] = result.fitness.inside_count;
    j["outside_count"] =
        static_cast<int>(cloud.size()) - result.fitness.inside_count;
    j["iterations"] = result.iterations_run;
    j["terminated_by"] = to_string(result.terminated_by);
    j["seed"] = seed;
    return j;
}

nlohmann::ordered_json welzl_report_json(const WelzlResult& result,
                                         const ValidationReport& validation) {
    nlohmann::ordered_json j;
    j["center"] = {result.sphere.center.x, result.sphere.center.y,
                   result.sphere.center.z};
    j["radius"] = result.sphere.radius;
    j["support"] = nlohmann::ordered_json::array();
    for (const Point3& p : result.support)
        j["support"].push_back({p.x, p.y, p.z});
    j["max_violation"] = validation.max_violation;
    j["enclosed_fraction"] = validation.enclosed_fraction;
    return j;
}

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

}  // namespace mses
