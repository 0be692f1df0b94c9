#pragma once

#include <optional>
#include <string>

#include "field.hpp"

namespace dkp {

// Binary field format: magic "DKPFLD01", little-endian uint32 header length,
// JSON header {"n", "l", "name", "k_re", "k_im"}, then n*n complex doubles
// (re, im interleaved, little endian, row-major over (x, y)). The round trip
// is bit exact.
struct LoadedField {
  ComplexField field;
  std::string name;
  std::optional<Complex> k;
};

void save_field_binary(const ComplexField& f, const std::string& path,
                       const std::string& name,
                       std::optional<Complex> k = std::nullopt);

// When `expected_grid` is supplied the header must match it.
LoadedField load_field_binary(const std::string& path,
                              const GridPtr& expected_grid = nullptr);

// CSV with header "x,y,re,im", one row per sample, 17 significant digits.
void save_field_csv(const ComplexField& f, const std::string& path);
ComplexField load_field_csv(const std::string& path, const GridPtr& grid);

}  // namespace dkp
