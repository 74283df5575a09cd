#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "gextra/verification.hpp"

namespace gextra {

inline constexpr const char* kToolVersion = "0.1.0";

/// UTC, ISO 8601, second resolution.
std::string utc_timestamp();

/// The report document: {meta: {config, tool_version, timestamp}, records,
/// summary}. Field order is fixed. The worker count is not part of meta, so
/// runs that differ only in jobs differ only in the timestamp.
std::string render_report(const std::vector<VerificationRecord>& records, const RunConfig& config,
                          const std::string& timestamp);

void write_report(const std::vector<VerificationRecord>& records, const RunConfig& config,
                  const std::filesystem::path& path);

using Json = nlohmann::ordered_json;

/// JSON fragments shared with the CLI.
Json to_json(const Prediction& p);
Json to_json(const OracleOutcome& o);
Json to_json(const VertexCutCertificate& c);
Json to_json(const EdgeCutCertificate& c);
Json to_json(const VerificationRecord& r);
Json config_json(const RunConfig& config);

}  // namespace gextra
