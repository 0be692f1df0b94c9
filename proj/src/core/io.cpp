#include "io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

#include <nlohmann/json.hpp>

namespace dkp {

namespace {
constexpr char kMagic[8] = {'D', 'K', 'P', 'F', 'L', 'D', '0', '1'};

using json = nlohmann::ordered_json;

static_assert(sizeof(double) == 8);

bool host_is_little_endian() {
  const std::uint16_t probe = 1;
  return *reinterpret_cast<const std::uint8_t*>(&probe) == 1;
}

}  // namespace

void save_field_binary(const ComplexField& f, const std::string& path,
                       const std::string& name, std::optional<Complex> k) {
  if (!host_is_little_endian())
    fail(ErrorCode::io_error, "binary field format requires a little-endian host");
  json header;
  header["n"] = f.grid().n();
  header["l"] = f.grid().half_width();
  header["name"] = name;
  if (k) {
    header["k_re"] = k->real();
    header["k_im"] = k->imag();
  }
  const std::string htext = header.dump();

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::io_error, "cannot open " + path + " for writing");
  out.write(kMagic, sizeof(kMagic));
  const std::uint32_t hlen = static_cast<std::uint32_t>(htext.size());
  out.write(reinterpret_cast<const char*>(&hlen), sizeof(hlen));
  out.write(htext.data(), htext.size());
  out.write(reinterpret_cast<const char*>(f.data()),
            static_cast<std::streamsize>(f.size() * sizeof(Complex)));
  if (!out) fail(ErrorCode::io_error, "write failed for " + path);
}

LoadedField load_field_binary(const std::string& path,
                              const GridPtr& expected_grid) {
  if (!host_is_little_endian())
    fail(ErrorCode::io_error, "binary field format requires a little-endian host");
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io_error, "cannot open " + path);
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    fail(ErrorCode::io_error, path + ": not a DKPFLD01 field file");
  std::uint32_t hlen = 0;
  in.read(reinterpret_cast<char*>(&hlen), sizeof(hlen));
  if (!in || hlen > (1u << 20))
    fail(ErrorCode::io_error, path + ": corrupt header length");
  std::string htext(hlen, '\0');
  in.read(htext.data(), hlen);
  if (!in) fail(ErrorCode::io_error, path + ": truncated header");

  json header;
  try {
    header = json::parse(htext);
  } catch (const std::exception& e) {
    fail(ErrorCode::io_error, path + ": bad header JSON: " + e.what());
  }
  if (!header.contains("n") || !header.contains("l"))
    fail(ErrorCode::io_error, path + ": header missing grid parameters");
  const int n = header["n"].get<int>();
  const double l = header["l"].get<double>();

  GridPtr grid = expected_grid;
  if (grid) {
    if (grid->n() != n || grid->half_width() != l)
      fail(ErrorCode::io_error,
           path + ": header grid does not match the expected grid");
  } else {
    grid = Grid2D::create(n, l);
  }

  LoadedField lf{ComplexField(grid), header.value("name", std::string())};
  if (header.contains("k_re"))
    lf.k = Complex(header["k_re"].get<double>(), header["k_im"].get<double>());

  in.read(reinterpret_cast<char*>(lf.field.data()),
          static_cast<std::streamsize>(lf.field.size() * sizeof(Complex)));
  if (!in || in.gcount() !=
                 static_cast<std::streamsize>(lf.field.size() * sizeof(Complex)))
    fail(ErrorCode::io_error,
         path + ": payload size does not match the header grid");
  char extra;
  if (in.read(&extra, 1))
    fail(ErrorCode::io_error, path + ": trailing bytes after payload");
  return lf;
}

void save_field_csv(const ComplexField& f, const std::string& path) {
  std::FILE* out = std::fopen(path.c_str(), "w");
  if (!out) fail(ErrorCode::io_error, "cannot open " + path + " for writing");
  std::fputs("x,y,re,im\n", out);
  const Grid2D& g = f.grid();
  for (int ix = 0; ix < g.n(); ++ix)
    for (int iy = 0; iy < g.n(); ++iy) {
      const Complex v = f(ix, iy);
      std::fprintf(out, "%.17g,%.17g,%.17g,%.17g\n", g.coord(ix), g.coord(iy),
                   v.real(), v.imag());
    }
  if (std::fclose(out) != 0) fail(ErrorCode::io_error, "write failed for " + path);
}

ComplexField load_field_csv(const std::string& path, const GridPtr& grid) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io_error, "cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("x,y,re,im", 0) != 0)
    fail(ErrorCode::io_error, path + ": missing CSV header");
  ComplexField f(grid);
  const int n = grid->n();
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy) {
      if (!std::getline(in, line))
        fail(ErrorCode::io_error, path + ": truncated CSV payload");
      double x, y, re, im;
      if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &x, &y, &re, &im) != 4)
        fail(ErrorCode::io_error, path + ": malformed CSV row: " + line);
      f(ix, iy) = Complex(re, im);
    }
  return f;
}

}  // namespace dkp
