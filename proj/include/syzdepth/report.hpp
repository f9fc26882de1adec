#pragma once

#include "syzdepth/asymptotics.hpp"
#include "syzdepth/depth.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace syzdepth {

struct TableRow {
  int n = 0, k = 0;
  int hdepth = 0;
  int lower = 0, upper = 0;
  int min_u = 0;
  /// j of the first negative coefficient at s = min_u - 1 (absent for k = n).
  std::optional<long> witness_j;
  /// Absent where no closed form is known.
  std::optional<bool> closed_form_match;
  bool hbound_tight = false;
};

TableRow make_row(const DepthResult& r);

/// Rows for 1 <= k <= n <= n_max, ordered by n then k. Cells are computed in
/// parallel; the output order does not depend on the thread count.
std::vector<TableRow> depth_table(int n_max, int threads = 1);

enum class TableFormat { csv, json };

std::string table_csv(const std::vector<TableRow>& rows);
std::string table_json(const std::vector<TableRow>& rows);

/// Two columns "beta gamma", 12 significant digits, one point per line.
std::string curve_text(const std::vector<GammaSolution>& points);
std::string curve_json(const std::vector<GammaSolution>& points);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

/// Writes bytes verbatim (LF line endings) and returns their digest.
std::string write_artifact(const std::filesystem::path& destination, const std::string& bytes);

/// Rejects empty input; returns the digest of what was written.
std::string write_table(const std::vector<TableRow>& rows, TableFormat format,
                        const std::filesystem::path& destination);
std::string write_curve(const std::vector<GammaSolution>& points,
                        const std::filesystem::path& destination);

struct RunManifest {
  std::string command_line;
  std::string version = SYZDEPTH_VERSION;
  std::string timestamp;  // UTC, ISO 8601
  int threads = 1;
  int binomial_cache = 0;
  std::vector<std::pair<std::string, double>> tolerances;
  std::vector<std::pair<std::string, std::string>> outputs;  // path, sha256

  std::string to_json() const;
};

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

}  // namespace syzdepth
