#include "logistic/output.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include "logistic/error.hpp"

namespace logistic {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

CsvWriter::CsvWriter(std::vector<std::string_view> header) {
  for (auto h : header) cell(h);
  end_row();
}

void CsvWriter::separator() {
  if (row_open_) {
    text_ += ',';
  }
  row_open_ = true;
}

CsvWriter& CsvWriter::cell(double v) {
  separator();
  text_ += format_real(v);
  return *this;
}

CsvWriter& CsvWriter::cell(std::size_t v) {
  separator();
  text_ += std::to_string(v);
  return *this;
}

CsvWriter& CsvWriter::cell(std::string_view v) {
  separator();
  text_ += v;
  return *this;
}

CsvWriter& CsvWriter::empty() {
  separator();
  return *this;
}

void CsvWriter::end_row() {
  text_ += '\n';
  row_open_ = false;
}

void write_atomic(const std::filesystem::path& path, std::string_view bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw InvalidArgument("cannot open " + tmp.string() + " for writing");
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
      throw InvalidArgument("short write to " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InvalidArgument("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

std::string render_bifurcation_pgm(const BifurcationData& data, std::size_t height) {
  if (height < 2 || data.size() == 0) {
    throw InvalidArgument("PGM needs height >= 2 and at least one column");
  }
  const std::size_t width = data.size();
  std::vector<unsigned> counts(width * height, 0);
  for (std::size_t col = 0; col < width; ++col) {
    if (data.escaped[col]) continue;
    for (double x : data.samples[col]) {
      if (!(x >= 0.0 && x <= 1.0)) continue;
      auto row = static_cast<std::size_t>(std::floor((1.0 - x) * static_cast<double>(height)));
      row = std::min(row, height - 1);
      ++counts[row * width + col];
    }
  }

  std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  const std::size_t header = out.size();
  out.resize(header + width * height);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double density = std::min(1.0, static_cast<double>(counts[i]) / pgm_count_cap);
    out[header + i] = static_cast<char>(255 - static_cast<int>(std::lround(255.0 * density)));
  }
  return out;
}

} // namespace logistic
