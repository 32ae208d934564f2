#include "hadsimplex/report.hpp"

#include "hadsimplex/errors.hpp"
#include "hadsimplex/version.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

namespace hadsimplex {

json norm_report_json(const NormReport& report, bool include_timing) {
    json j;
    j["n"] = report.dimension;
    j["norm"] = rational_str(report.norm);
    j["norm_decimal"] = rational_double(report.norm);
    json census = json::object();
    for (const auto& [mu, count] : report.census) census[std::to_string(mu)] = count;
    j["mu_census"] = census;
    j["maximizer_count"] = report.maximizer_count;
    j["maximizers_complete"] = report.maximizers_complete;
    json maximizers = json::array();
    for (std::uint64_t mask : report.maximizers)
        maximizers.push_back(vertex_bits(mask, report.dimension));
    j["maximizers"] = maximizers;
    j["min_lambda"] = rational_str(report.min_lambda);
    if (include_timing) j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

json absorption_report_json(const AbsorptionReport& report) {
    json j;
    j["n"] = report.dimension;
    j["norm"] = rational_str(report.norm);
    j["xi"] = rational_str(report.xi);
    j["lower"] = rational_str(report.lower);
    j["upper"] = rational_str(report.upper);
    j["tight_right"] = report.tight_right;
    j["has_one_vertex"] = report.has_one_vertex;
    json bounds = json::object();
    for (const auto& [mu, bound] : report.mu_lower_bounds)
        bounds[std::to_string(mu)] = rational_str(bound);
    j["mu_bounds"] = bounds;
    return j;
}

json ball_norm_json(const BallNormResult& result) {
    json j;
    j["n"] = result.n;
    j["a"] = result.a;
    j["psi_a"] = result.psi_a;
    j["psi_a1"] = result.psi_a1;
    j["norm"] = result.norm;
    j["is_perfect_square"] = result.exact_sqrt;
    return j;
}

json ball_sweep_json(const BallSweepResult& result) {
    json j;
    j["max_n"] = result.max_n;
    j["bounds_hold"] = result.bounds_hold;
    j["equality_matches_perfect_squares"] = result.equality_matches_perfect_squares;
    j["perfect_square_count"] = result.perfect_square_count;
    j["first_violation"] = result.first_violation;
    return j;
}

std::string provenance_str(HProvenance provenance) {
    switch (provenance) {
    case HProvenance::Bruteforce: return "bruteforce";
    case HProvenance::HadamardEquality: return "hadamard-equality";
    case HProvenance::BoundOnly: return "bound-only";
    }
    return "unknown";
}

json bounds_row_json(const BoundsRow& row) {
    json j;
    j["n"] = row.n;
    j["h"] = row.h ? json(row.h->str()) : json(nullptr);
    j["h_lower"] = row.h_lower.str();
    j["h_upper"] = row.h_upper.str();
    j["provenance"] = provenance_str(row.provenance);
    j["nu"] = row.nu ? json(rational_str(*row.nu)) : json(nullptr);
    j["hadamard_bound"] = row.hadamard_bound;
    j["barba_bound"] = row.barba_bound ? json(*row.barba_bound) : json(nullptr);
    j["maxdet_ratio_bound"] =
        row.maxdet_ratio_bound ? json(rational_str(*row.maxdet_ratio_bound)) : json(nullptr);
    j["coarse_norm_bound"] = row.coarse_norm_bound;
    j["sqrt_norm_bound"] = row.sqrt_norm_bound;
    j["min_norm_lower"] = row.min_norm_lower;
    return j;
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr) throw Error("digest context allocation failed");
    if (EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx, digest, &length) != 1) {
        EVP_MD_CTX_free(ctx);
        throw Error("sha256 computation failed");
    }
    EVP_MD_CTX_free(ctx);
    std::string hex;
    hex.reserve(2 * length);
    static const char* alphabet = "0123456789abcdef";
    for (unsigned int i = 0; i < length; ++i) {
        hex.push_back(alphabet[digest[i] >> 4]);
        hex.push_back(alphabet[digest[i] & 0xf]);
    }
    return hex;
}

std::string sha256_file(const std::string& path) { return sha256_hex(read_text_file(path)); }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw Error("read failed on " + path);
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw Error("write failed on " + path);
}

json manifest_json(const RunManifest& manifest) {
    json j;
    j["command"] = manifest.command_line;
    json inputs = json::object();
    for (const auto& [path, digest] : manifest.inputs) inputs[path] = digest;
    j["inputs"] = inputs;
    j["library_version"] = manifest.library_version;
    j["workers"] = manifest.workers;
    j["timestamp_utc"] = manifest.timestamp_utc;
    j["outputs"] = manifest.outputs;
    return j;
}

std::string iso8601_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer;
}

} // namespace hadsimplex
