#include "syzdepth/report.hpp"

#include "syzdepth/parallel.hpp"
#include "syzdepth/serialize.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace syzdepth {

TableRow make_row(const DepthResult& r) {
  TableRow row;
  row.n = r.n;
  row.k = r.k;
  row.hdepth = r.hdepth;
  row.lower = r.lower_bound;
  row.upper = r.upper_bound;
  row.min_u = r.min_u;
  if (r.witness_negative) row.witness_j = r.witness_negative->witness_j;
  if (auto cf = closed_form(r.n, r.k)) row.closed_form_match = *cf == r.hdepth;
  row.hbound_tight = r.hdepth == r.upper_bound;
  return row;
}

std::vector<TableRow> depth_table(int n_max, int threads) {
  if (n_max < 1) throw std::domain_error("depth_table: n_max must be >= 1");
  std::vector<std::pair<int, int>> cells;
  for (int n = 1; n <= n_max; ++n)
    for (int k = 1; k <= n; ++k) cells.emplace_back(n, k);
  std::vector<TableRow> rows(cells.size());
  parallel_for(cells.size(), threads, [&](std::size_t i) {
    rows[i] = make_row(hdepth_std(cells[i].first, cells[i].second));
  });
  return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "n,k,hdepth,lower,upper,min_u,witness_j,closed_form_match,hbound_tight\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.k << ',' << r.hdepth << ',' << r.lower << ',' << r.upper << ','
        << r.min_u << ',';
    if (r.witness_j) out << *r.witness_j;
    out << ',';
    if (r.closed_form_match) out << (*r.closed_form_match ? "true" : "false");
    out << ',' << (r.hbound_tight ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string table_json(const std::vector<TableRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"k", r.k},
                   {"hdepth", r.hdepth},
                   {"lower", r.lower},
                   {"upper", r.upper},
                   {"min_u", r.min_u},
                   {"witness_j", r.witness_j ? Json(*r.witness_j) : Json(nullptr)},
                   {"closed_form_match",
                    r.closed_form_match ? Json(*r.closed_form_match) : Json(nullptr)},
                   {"hbound_tight", r.hbound_tight}});
  }
  return out.dump(2) + "\n";
}

std::string curve_text(const std::vector<GammaSolution>& points) {
  std::string out;
  char line[96];
  for (const auto& p : points) {
    std::snprintf(line, sizeof line, "%.12Lg %.12Lg\n", p.beta, p.gamma);
    out += line;
  }
  return out;
}

std::string curve_json(const std::vector<GammaSolution>& points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(to_json(p));
  return out.dump(2) + "\n";
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

std::string write_artifact(const std::filesystem::path& destination, const std::string& bytes) {
  std::ofstream file(destination, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + destination.string() + " for writing");
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!file) throw std::runtime_error("write failed for " + destination.string());
  return sha256_hex(bytes);
}

std::string write_table(const std::vector<TableRow>& rows, TableFormat format,
                        const std::filesystem::path& destination) {
  if (rows.empty()) throw std::invalid_argument("write_table: no rows");
  return write_artifact(destination, format == TableFormat::csv ? table_csv(rows) : table_json(rows));
}

std::string write_curve(const std::vector<GammaSolution>& points,
                        const std::filesystem::path& destination) {
  if (points.empty()) throw std::invalid_argument("write_curve: no points");
  return write_artifact(destination, curve_text(points));
}

std::string RunManifest::to_json() const {
  Json tol = Json::object();
  for (const auto& [name, value] : tolerances) tol[name] = value;
  Json outs = Json::array();
  for (const auto& [path, digest] : outputs) outs.push_back({{"path", path}, {"sha256", digest}});
  Json out = {{"command_line", command_line}, {"version", version},
              {"timestamp", timestamp},       {"threads", threads},
              {"binomial_cache", binomial_cache}, {"tolerances", std::move(tol)},
              {"outputs", std::move(outs)}};
  return out.dump(2) + "\n";
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

}  // namespace syzdepth
