#pragma once

#include <stdexcept>
#include <string>

namespace seaplan {

struct ScenarioInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegeneratePolygon : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Some mandatory interior point is not covered by any candidate circle.
struct UncoverableRegion : std::runtime_error {
    explicit UncoverableRegion(const std::string& msg, int point_index = -1)
        : std::runtime_error(msg), uncovered_point(point_index) {}
    int uncovered_point;
};

/// Some point of the universe is covered by no candidate.
struct InfeasibleInstance : std::runtime_error {
    explicit InfeasibleInstance(const std::string& msg, int point_index = -1)
        : std::runtime_error(msg), uncovered_point(point_index) {}
    int uncovered_point;
};

/// Malformed input file; the message names the offending field.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace seaplan
