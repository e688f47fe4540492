#pragma once

#include "mses/geometry.hpp"
#include "mses/pso.hpp"
#include "mses/welzl.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace mses {

/// Raised on unreadable files and malformed cloud data; the message
/// names the offending row where applicable.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reads a point cloud. A leading '[' selects the JSON array-of-triples
/// format; anything else is parsed as CSV with an `x,y,z` header.
PointCloud read_cloud(const std::string& path);

/// CSV writer, `x,y,z` header, 17 significant digits per coordinate.
void write_cloud_csv(const std::string& path, const PointCloud& cloud);

/// JSON writer: array of [x, y, z] triples.
void write_cloud_json(const std::string& path, const PointCloud& cloud);

/// Trace CSV with header iter,gbest_j,inside_count,radius,lms,lyapunov.
void write_trace_csv(const std::string& path,
                     const std::vector<TraceRecord>& trace);

nlohmann::ordered_json pso_report_json(const SolveResult& result,
                                       const PointCloud& cloud,
                                       std::uint64_t seed);

nlohmann::ordered_json welzl_report_json(const WelzlResult& result,
                                         const ValidationReport& validation);

void write_json(const std::string& path, const nlohmann::ordered_json& j);

}  // namespace mses
