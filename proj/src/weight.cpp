#include "smallrep/weight.hpp"

#include <cassert>
#include <stdexcept>

namespace smallrep {

Weight operator+(const Weight& a, const Weight& b) {
  assert(a.size() == b.size());
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  assert(a.size() == b.size());
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Weight operator*(const Rat& c, const Weight& a) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Rat dot(const Weight& a, const Weight& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("weight dimension mismatch");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const Weight& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

std::string weight_str(const Weight& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].str();
  }
  return s + ")";
}

std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> M, std::vector<Rat> rhs) {
  const size_t n = M.size();
  for (auto& row : M) assert(row.size() == n);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && M[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("solve_linear: singular matrix");
    std::swap(M[col], M[piv]);
    std::swap(rhs[col], rhs[piv]);
    Rat p = M[col][col];
    for (size_t j = col; j < n; ++j) M[col][j] /= p;
    rhs[col] /= p;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || M[r][col].is_zero()) continue;
      Rat f = M[r][col];
      for (size_t j = col; j < n; ++j) M[r][j] -= f * M[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace smallrep
