#pragma once

#include "catchmesh/compression.hpp"
#include "catchmesh/errors.hpp"
#include "catchmesh/geometry.hpp"
#include "catchmesh/padua.hpp"

#include <string>
#include <vector>

namespace catchmesh {

// CSV writers print doubles with `digits` significant digits; the default
// 17 round-trips IEEE doubles exactly.  All files use '\n' endings and a
// header row.  Output is byte-identical across runs.

void write_point_csv(const std::string& path, const PointConfiguration& cfg,
                     int digits = 17);                       // header x,y,z

// Rows sorted by descending weight, parent order breaking ties.
void write_submesh_csv(const std::string& path, const CatchSubmesh& sub,
                       int digits = 17);                     // header x,y,z,w

void write_padua_csv(const std::string& path, const PaduaSet& set,
                     int digits = 17);                       // header u,v

// Readers throw io_error on unreadable paths, malformed rows, non-unit
// points (tolerance 1e-8; values are kept verbatim so a write/read cycle
// is exact), duplicates, or empty bodies.
PointConfiguration read_point_csv(const std::string& path);

struct SampleSet {
    PointConfiguration points;
    std::vector<double> values;
};

SampleSet read_samples_csv(const std::string& path);         // header x,y,z,f

DiscreteMeasure read_submesh_csv(const std::string& path);   // header x,y,z,w

std::string format_double(double value, int digits);

} // namespace catchmesh
