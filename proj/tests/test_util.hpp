/// @file test_util.hpp
/// @brief Shared fixtures for the test suite: loading golden instance files
///        and the frozen oracle constants.

#ifndef HOPFPI_TEST_UTIL_HPP
#define HOPFPI_TEST_UTIL_HPP

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hopfpi/io.hpp"

namespace hopfpi_test {

inline std::string source_dir() { return HOPFPI_SOURCE_DIR; }

inline std::string golden_path(const std::string& name) {
  return source_dir() + "/data/instances/" + name + ".json";
}

inline hopfpi::Instance load_golden(const std::string& name) {
  return hopfpi::load_instance(golden_path(name));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// The frozen oracle constants (see data/derived/DERIVATIONS.md).
inline nlohmann::json oracle_constants() {
  std::ifstream in(source_dir() + "/data/derived/constants.json");
  return nlohmann::json::parse(in);
}

/// A vector from the oracle's "p/q"-string representation.
inline hopfpi::Vector oracle_vector(const nlohmann::json& arr, hopfpi::Field f) {
  hopfpi::Vector v(f, static_cast<int>(arr.size()));
  for (int i = 0; i < v.dim(); ++i) {
    auto s = hopfpi::Scalar::parse(arr[static_cast<std::size_t>(i)].get<std::string>(), f);
    REQUIRE(s.has_value());
    v[i] = *s;
  }
  return v;
}

/// Scales a covector line so its first nonzero coordinate is 1, matching the
/// oracle's normalization, so one-dimensional solution lines are comparable.
inline hopfpi::Vector normalize_line(const hopfpi::Vector& v) {
  int i0 = 0;
  while (i0 < v.dim() && v[i0].is_zero()) ++i0;
  if (i0 == v.dim()) return v;
  hopfpi::Vector out = v;
  const hopfpi::Scalar inv = v[i0].inverse();
  for (int i = 0; i < out.dim(); ++i) out[i] = out[i] * inv;
  return out;
}

/// Names of every golden zoo instance.
inline std::vector<std::string> zoo_names() {
  return {"trivial_z1",       "trivial_z2",          "trivial_s3",
          "sweedler",         "c_h4_z2_r0",          "c_h4_z2_r1",
          "c_kz3_z2_trivial", "c_kz3_z2_inversion",  "kz3_q",
          "kz3_gf3",          "proper_support"};
}

}  // namespace hopfpi_test

#endif  // HOPFPI_TEST_UTIL_HPP
