#include "config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace dkp {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& v) {
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0')
    fail(ErrorCode::config_error, "key '" + key + "': cannot parse number '" + v + "'");
  return x;
}

long long parse_int(const std::string& key, const std::string& v) {
  char* end = nullptr;
  const long long x = std::strtoll(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0')
    fail(ErrorCode::config_error, "key '" + key + "': cannot parse integer '" + v + "'");
  return x;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "on" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "off" || v == "0" || v == "no") return false;
  fail(ErrorCode::config_error, "key '" + key + "': cannot parse boolean '" + v + "'");
}

}  // namespace

Complex parse_complex(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) fail(ErrorCode::config_error, "empty complex literal");
  // forms: "a", "bi", "a+bi", "a-bi", with "i" alone meaning 1i
  const auto bad = [&]() -> Complex {
    fail(ErrorCode::config_error, "cannot parse complex literal '" + s + "'");
  };
  if (s.back() != 'i') {
    char* end = nullptr;
    const double re = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') return bad();
    return Complex(re, 0.0);
  }
  const std::string body = s.substr(0, s.size() - 1);
  // split at the last '+' or '-' that is not an exponent sign or leading sign
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') &&
        body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  double re = 0.0;
  std::string imtext;
  if (split == std::string::npos) {
    imtext = body;
  } else {
    char* end = nullptr;
    const std::string retext = body.substr(0, split);
    re = std::strtod(retext.c_str(), &end);
    if (end == retext.c_str() || *end != '\0') return bad();
    imtext = body.substr(split);
  }
  double im;
  if (imtext.empty() || imtext == "+") im = 1.0;
  else if (imtext == "-") im = -1.0;
  else {
    char* end = nullptr;
    im = std::strtod(imtext.c_str(), &end);
    if (end == imtext.c_str() || *end != '\0') return bad();
  }
  return Complex(re, im);
}

std::vector<Complex> parse_complex_list(const std::string& text) {
  std::vector<Complex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_complex(item));
  }
  if (out.empty()) fail(ErrorCode::config_error, "empty complex list '" + text + "'");
  return out;
}

void RunConfig::set(const std::string& rawkey, const std::string& rawvalue) {
  const std::string key = trim(rawkey);
  const std::string v = trim(rawvalue);
  if (key == "n") n = static_cast<int>(parse_int(key, v));
  else if (key == "l") l = parse_double(key, v);
  else if (key == "potential") potential = v;
  else if (key == "amplitude") amplitude = parse_double(key, v);
  else if (key == "sigma") sigma = parse_double(key, v);
  else if (key == "center_x") center_x = parse_double(key, v);
  else if (key == "center_y") center_y = parse_double(key, v);
  else if (key == "dipole_offset") dipole_offset = parse_double(key, v);
  else if (key == "potential_file") potential_file = v;
  else if (key == "gaussians") gaussians = v;
  else if (key == "boundary_threshold") boundary_threshold = parse_double(key, v);
  else if (key == "tol_fixed_point") solver.tol_fixed_point = parse_double(key, v);
  else if (key == "tol_residual") solver.tol_residual = parse_double(key, v);
  else if (key == "max_iter") solver.max_iter = static_cast<int>(parse_int(key, v));
  else if (key == "alpha_l") solver.alpha_l = parse_double(key, v);
  else if (key == "sobolev_order") solver.sobolev_order = static_cast<int>(parse_int(key, v));
  else if (key == "dealias") solver.dealias = parse_bool(key, v);
  else if (key == "max_series_terms") solver.max_series_terms = static_cast<int>(parse_int(key, v));
  else if (key == "tol_k") solver.tol_k = parse_double(key, v);
  else if (key == "max_k_iter") solver.max_k_iter = static_cast<int>(parse_int(key, v));
  else if (key == "covering_c") solver.covering_c = parse_double(key, v);
  else if (key == "enforce_covering_bound") solver.enforce_covering_bound = parse_bool(key, v);
  else if (key == "newton") solver.newton_acceleration = parse_bool(key, v);
  else if (key == "cache_quantum") solver.cache_quantum = parse_double(key, v);
  else if (key == "k") k_list = parse_complex_list(v);
  else if (key == "lambda") lambda_list = parse_complex_list(v);
  else if (key == "order") order = static_cast<int>(parse_int(key, v));
  else if (key == "out_dir") out_dir = v;
  else if (key == "seed") seed = static_cast<unsigned long long>(parse_int(key, v));
  else if (key == "eigen_points") eigen_points = static_cast<int>(parse_int(key, v));
  else if (key == "x0") x0 = parse_double(key, v);
  else if (key == "lambda0") lambda0 = parse_double(key, v);
  else if (key == "y0") y0 = parse_double(key, v);
  else if (key == "big_y") big_y = parse_double(key, v);
  else if (key == "ode_step") ode_step = parse_double(key, v);
  else if (key == "record_stride") record_stride = static_cast<int>(parse_int(key, v));
  else if (key == "criteria") criteria = v;
  else
    fail(ErrorCode::config_error, "unknown configuration key '" + key + "'");
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::config_error, "cannot open config file " + path);
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::config_error,
           path + ":" + std::to_string(lineno) + ": expected key = value");
    cfg.set(t.substr(0, eq), t.substr(eq + 1));
  }
  return cfg;
}

PotentialSpec RunConfig::potential_spec() const {
  if (potential == "zero") {
    PotentialSpec s;
    s.boundary_threshold = boundary_threshold;
    return s;
  }
  if (potential == "gaussian") {
    PotentialSpec s = PotentialSpec::gaussian(amplitude, sigma, center_x, center_y);
    s.boundary_threshold = boundary_threshold;
    return s;
  }
  if (potential == "dipole") {
    PotentialSpec s = PotentialSpec::dipole(amplitude, sigma, dipole_offset);
    s.boundary_threshold = boundary_threshold;
    return s;
  }
  if (potential == "file") {
    PotentialSpec s;
    s.file = potential_file;
    s.boundary_threshold = boundary_threshold;
    if (s.file.empty())
      fail(ErrorCode::config_error, "potential = file requires potential_file");
    return s;
  }
  if (potential == "gaussians") {
    PotentialSpec s;
    s.boundary_threshold = boundary_threshold;
    std::stringstream ss(gaussians);
    std::string term;
    while (std::getline(ss, term, ';')) {
      std::stringstream ts(term);
      std::string part;
      std::vector<double> vals;
      while (std::getline(ts, part, ','))
        vals.push_back(parse_double("gaussians", trim(part)));
      if (vals.size() != 4)
        fail(ErrorCode::config_error,
             "gaussians: each term needs 'A,sigma,x0,y0', got '" + term + "'");
      s.gaussians.push_back({vals[0], vals[1], vals[2], vals[3]});
    }
    if (s.gaussians.empty())
      fail(ErrorCode::config_error, "potential = gaussians requires a gaussians list");
    return s;
  }
  fail(ErrorCode::config_error, "unknown potential kind '" + potential + "'");
}

GridPtr RunConfig::make_grid() const { return Grid2D::create(n, l); }

}  // namespace dkp
