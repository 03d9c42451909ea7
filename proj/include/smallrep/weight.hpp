#pragma once

#include <string>
#include <vector>

#include "smallrep/rational.hpp"

namespace smallrep {

// A weight in the fixed Euclidean embedding of a root system. Plain vector of
// exact rationals; lexicographic ordering makes it a map key.
using Weight = std::vector<Rat>;

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(const Rat& c, const Weight& a);
Rat dot(const Weight& a, const Weight& b);
bool is_zero(const Weight& a);
std::string weight_str(const Weight& a);

// Solves M x = rhs by Gauss-Jordan elimination over exact rationals.
// M must be square and invertible.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> M, std::vector<Rat> rhs);

}  // namespace smallrep
