#ifndef LPCUT_PROBLEM_IO_HPP
#define LPCUT_PROBLEM_IO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "lpcut/energy.hpp"

namespace lpcut {

struct GridShape {
    int width = 0;
    int height = 0;

    bool operator==(const GridShape&) const = default;
};

/// On-disk problem: the energy plus optional grid metadata used only for
/// raster display. Serialized as JSON with a format/version tag:
///   {
///     "format": "lpcut-problem",
///     "version": 1,
///     "vertex_count": 2,
///     "unaries": [[0.0, 10.0], [10.0, 0.0]],
///     "edges": [[0, 1, [0.0, 1.0, 1.0, 0.0]]],
///     "grid": {"width": 2, "height": 1}        // optional
///   }
/// Numbers round-trip exactly; serialization is byte-stable for a fixed
/// problem.
struct ProblemFile {
    EnergyFunction energy;
    std::optional<GridShape> grid;

    bool operator==(const ProblemFile&) const = default;
};

/// Throws ParseError on syntax errors, tag mismatches, or any energy_model
/// validation failure.
ProblemFile parse_problem(const std::string& text);
std::string serialize_problem(const ProblemFile& problem);

ProblemFile read_problem_file(const std::filesystem::path& path);
void write_problem_file(const ProblemFile& problem, const std::filesystem::path& path);

} // namespace lpcut

#endif
