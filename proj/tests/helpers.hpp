#pragma once

#include <initializer_list>
#include <vector>

#include "uslev/sets.hpp"

inline uslev::Vector V(std::initializer_list<double> xs) {
  uslev::Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

inline uslev::Matrix M(std::initializer_list<std::initializer_list<double>> rows) {
  uslev::Matrix m(static_cast<Eigen::Index>(rows.size()),
                  static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline std::vector<double> to_std(const uslev::Vector& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

inline std::vector<std::vector<double>> rows_of(const uslev::Matrix& m) {
  std::vector<std::vector<double>> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(to_std(m.row(i).transpose()));
  return out;
}

inline uslev::SetExpr nonneg(std::size_t n) {
  return uslev::SetExpr::orthant(n, uslev::OrthantSign::NonNeg);
}
inline uslev::SetExpr nonpos(std::size_t n) {
  return uslev::SetExpr::orthant(n, uslev::OrthantSign::NonPos);
}
