#pragma once

#include "hadsimplex/absorption.hpp"
#include "hadsimplex/ball_norm.hpp"
#include "hadsimplex/bounds.hpp"
#include "hadsimplex/cube_norm.hpp"

#include "json.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hadsimplex {

/// ordered_json keeps insertion order, which is what makes report bytes
/// reproducible across runs and worker counts.
using json = nlohmann::ordered_json;

/// Exact rationals render as "p/q" strings; a display-only decimal rendering
/// rides along where the schema asks for one.  Timing is included only on
/// request — wall time would break byte-for-byte reproducibility.
json norm_report_json(const NormReport& report, bool include_timing = false);
json absorption_report_json(const AbsorptionReport& report);
json ball_norm_json(const BallNormResult& result);
json ball_sweep_json(const BallSweepResult& result);
json bounds_row_json(const BoundsRow& row);

std::string provenance_str(HProvenance provenance);

/// Two-space indented dump with a trailing newline — the one serialization
/// every report file uses, so byte comparisons are meaningful.
std::string dump_report(const json& j);

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Everything needed to re-run a CLI invocation and audit what it read:
/// digests are recorded before any computation touches the inputs.
struct RunManifest {
    std::string command_line;
    std::vector<std::pair<std::string, std::string>> inputs; // (path, sha256)
    std::string library_version;
    int workers = 1;
    std::string timestamp_utc;
    std::vector<std::string> outputs;
};

json manifest_json(const RunManifest& manifest);

std::string iso8601_utc_now();

} // namespace hadsimplex
