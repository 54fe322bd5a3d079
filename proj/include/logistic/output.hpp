#pragma once

// Serialization shared by the CLI: CSV number formatting, atomic file writes,
// and the PGM rendering of a bifurcation diagram.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logistic/ergodic.hpp"

namespace logistic {

/// Shortest decimal that round-trips to the same double ("-inf", "inf" and
/// "nan" for non-finite values).
std::string format_real(double v);

/// Accumulates CSV text with '\n' line endings.
class CsvWriter {
public:
  explicit CsvWriter(std::vector<std::string_view> header);

  CsvWriter& cell(double v);
  CsvWriter& cell(std::size_t v);
  CsvWriter& cell(std::string_view v);
  CsvWriter& empty();
  void end_row();

  const std::string& str() const noexcept { return text_; }

private:
  void separator();

  std::string text_;
  bool row_open_ = false;
};

/// Writes to a sibling temporary file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, std::string_view bytes);

inline constexpr unsigned pgm_count_cap = 4;

/// Binary PGM ("P5", maxval 255). One column per parameter; rows bin x in
/// [0, 1] with x = 1 at the top. Escaped columns are left white.
std::string render_bifurcation_pgm(const BifurcationData& data, std::size_t height);

} // namespace logistic
