#pragma once
#include <string>
#include <vector>

#include "json.hpp"
#include "kinetic/velocity_space.hpp"

namespace kin {

// "version" strings of the numerical modules; bumped when their output changes
std::string module_versions();
// first line of every artifact: "# config_hash=<hex> modules=<versions>"
std::string header_line(const std::string& config_hash);

// CSV with the header line, a column-name line, then rows at 17 significant digits
void write_csv(const std::string& path, const std::string& config_hash, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);
// JSON object with a "header" member carrying the same information
void write_json(const std::string& path, const std::string& config_hash, nlohmann::json body);
// two columns, no names beyond the header comment (for gnuplot and friends)
void write_xy(const std::string& path, const std::string& config_hash, const std::string& what,
              const std::vector<double>& x, const std::vector<double>& y);

// rho, u_n, T of sqrt(mu) g per cell: columns x, rho, u_n, T
void write_moments_csv(const std::string& path, const std::string& config_hash, const VelocityGrid& g,
                       const Field& f, const std::vector<double>& x);

// Binary dump: header text line, then magic "KINF", int32 version = 1,
// int64 rows, int64 cols, rows*cols little-endian doubles in row-major order.
void write_distribution(const std::string& path, const std::string& config_hash, const Field& f);
Field read_distribution(const std::string& path);

void ensure_dir(const std::string& path);

}  // namespace kin
