#include "bivec/rsbv_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace bivec {

static_assert(std::endian::native == std::endian::little,
              "dump writer assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'R', 'S', 'B', 'V'};

void put_u32(std::ostream& os, std::uint32_t v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void put_f64(std::ostream& os, double v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint32_t get_u32(std::istream& is) {
  std::uint32_t v = 0;
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}

double get_f64(std::istream& is) {
  double v = 0.0;
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}

RsbvHeader read_header(std::istream& is, const std::string& path) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error(path + ": not an RSBV dump (bad magic)");
  RsbvHeader h;
  h.version = get_u32(is);
  if (h.version != kRsbvVersion)
    throw std::runtime_error(path + ": unsupported RSBV version " +
                             std::to_string(h.version));
  h.n = get_u32(is);
  h.h = get_f64(is);
  if (!is) throw std::runtime_error(path + ": truncated RSBV header");
  return h;
}

}  // namespace

void write_rsbv(const std::string& path, const FieldGrid& grid) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error(path + ": cannot open for writing");
  os.write(kMagic, 4);
  put_u32(os, kRsbvVersion);
  put_u32(os, static_cast<std::uint32_t>(grid.n()));
  put_f64(os, grid.h());
  for (std::size_t s = 0; s < grid.sites(); ++s) {
    for (int c = 0; c < 3; ++c) {
      const cplx z = grid.at(c, s);
      put_f64(os, z.real());
      put_f64(os, z.imag());
    }
  }
  if (!os) throw std::runtime_error(path + ": write failed");
}

FieldGrid read_rsbv(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error(path + ": cannot open for reading");
  const RsbvHeader h = read_header(is, path);
  FieldGrid grid(static_cast<int>(h.n), h.h);
  for (std::size_t s = 0; s < grid.sites(); ++s) {
    for (int c = 0; c < 3; ++c) {
      const double re = get_f64(is);
      const double im = get_f64(is);
      grid.at(c, s) = cplx(re, im);
    }
  }
  if (!is) throw std::runtime_error(path + ": truncated RSBV payload");
  char extra;
  if (is.read(&extra, 1))
    throw std::runtime_error(path + ": trailing bytes after RSBV payload");
  return grid;
}

RsbvHeader read_rsbv_header(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error(path + ": cannot open for reading");
  return read_header(is, path);
}

}  // namespace bivec
