#pragma once

#include <cstdint>
#include <string>

#include "bivec/grid.hpp"

namespace bivec {

// Binary field-dump format: magic "RSBV", u32 LE version, u32 LE n,
// f64 LE h, then n^3 site records of six f64 LE values
// (Re1, Im1, Re2, Im2, Re3, Im3) in row-major order, x3 fastest.
inline constexpr std::uint32_t kRsbvVersion = 1;

struct RsbvHeader {
  std::uint32_t version = 0;
  std::uint32_t n = 0;
  double h = 0.0;
};

void write_rsbv(const std::string& path, const FieldGrid& grid);
FieldGrid read_rsbv(const std::string& path);
RsbvHeader read_rsbv_header(const std::string& path);

}  // namespace bivec
