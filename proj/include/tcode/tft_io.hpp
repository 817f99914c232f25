#pragma once

// TFT/1 function-table text format:
//
//   tft 1 <n> <m>
//   <m base-3 digits>      (3^n lines; line i is F(rank i), highest output coordinate first)

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "tcode/function_table.hpp"

namespace tcode {

class TftParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_tft(std::ostream& os, const FunctionTable& F);
[[nodiscard]] FunctionTable read_tft(std::istream& is);

void save_tft(const std::filesystem::path& path, const FunctionTable& F);
[[nodiscard]] FunctionTable load_tft(const std::filesystem::path& path);

}  // namespace tcode
