#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "manin/exactlin.hpp"
#include "manin/operad.hpp"

namespace testing_support {

inline manin::IntVector iv(std::initializer_list<long> xs) {
  manin::IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::vector<manin::IntVector> ivs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<manin::IntVector> out;
  for (const auto& r : rows) out.push_back(iv(r));
  return out;
}

inline manin::EchelonBasis span(std::initializer_list<std::initializer_list<long>> rows, std::size_t d) {
  return manin::echelonize(ivs(rows), d);
}

inline manin::IntVector unit(std::size_t d, std::size_t k) {
  manin::IntVector v(d, 0);
  v[k] = 1;
  return v;
}

inline manin::QMatrix diag(std::initializer_list<long> xs) {
  manin::QMatrix m(xs.size(), xs.size());
  std::size_t i = 0;
  for (long x : xs) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

inline manin::IntVector to_int(const manin::QVector& v) {
  manin::IntVector out;
  for (const auto& x : v) out.push_back(x.get_num());
  return out;
}

inline std::string data_path(const std::string& name) { return std::string(MANIN_TEST_DATA_DIR) + "/" + name; }

inline std::string operad_path(const std::string& name) { return std::string(MANIN_OPERAD_DIR) + "/" + name; }

}  // namespace testing_support
