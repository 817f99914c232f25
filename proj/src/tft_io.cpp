#include "tcode/tft_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace tcode {

void write_tft(std::ostream& os, const FunctionTable& F) {
  os << "tft 1 " << F.n() << ' ' << F.m() << '\n';
  std::string line(static_cast<std::size_t>(F.m()), '0');
  for (Rank x = 0; x < F.domain_size(); ++x) {
    Rank v = F[x];
    for (int j = 0; j < F.m(); ++j, v /= 3) line[static_cast<std::size_t>(F.m() - 1 - j)] = static_cast<char>('0' + v % 3);
    os << line << '\n';
  }
}

FunctionTable read_tft(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw TftParseError("TFT: missing header");
  std::istringstream hs(header);
  std::string magic, extra;
  int version = 0, n = 0, m = 0;
  if (!(hs >> magic >> version >> n >> m) || magic != "tft" || version != 1 || (hs >> extra)) {
    throw TftParseError("TFT: malformed header '" + header + "'");
  }
  if (n < 1 || n > kMaxInputDim || m < 1 || m > kMaxOutputDim) throw TftParseError("TFT: dimensions out of range");
  std::vector<std::uint32_t> table(pow3(n));
  std::string line;
  for (Rank x = 0; x < table.size(); ++x) {
    if (!std::getline(is, line)) throw TftParseError("TFT: expected " + std::to_string(table.size()) + " rows, got " + std::to_string(x));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() != static_cast<std::size_t>(m)) throw TftParseError("TFT: row " + std::to_string(x) + " has wrong width");
    std::uint32_t v = 0;
    for (char c : line) {
      if (c < '0' || c > '2') throw TftParseError("TFT: row " + std::to_string(x) + " contains a non-ternary digit");
      v = v * 3 + static_cast<std::uint32_t>(c - '0');
    }
    table[x] = v;
  }
  while (std::getline(is, line)) {
    if (!line.empty() && line != "\r") throw TftParseError("TFT: trailing data after the last row");
  }
  return FunctionTable(n, m, std::move(table));
}

void save_tft(const std::filesystem::path& path, const FunctionTable& F) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_tft(os, F);
  if (!os) throw std::runtime_error("write failed: " + path.string());
}

FunctionTable load_tft(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw TftParseError("cannot open " + path.string());
  return read_tft(is);
}

}  // namespace tcode
