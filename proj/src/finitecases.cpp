#include "smallrep/finitecases.hpp"

namespace smallrep {
namespace finitecases {

namespace {

long long checked_pow(long long base, long long exp) {
  long long r = 1;
  for (long long i = 0; i < exp; ++i) {
    if (r > (1LL << 62) / base) throw std::overflow_error("power exceeds 64 bits");
    r *= base;
  }
  return r;
}

}  // namespace

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void ExtraspecialShape::validate() const {
  if (!is_prime(p)) throw std::invalid_argument("extraspecial: p must be prime");
  if (n < 1) throw std::invalid_argument("extraspecial: n must be >= 1");
  if (form_type != 1 && form_type != -1)
    throw std::invalid_argument("extraspecial: form type must be +1 or -1");
}

long long irrep_dim(const ExtraspecialShape& shape) {
  shape.validate();
  return checked_pow(shape.p, shape.n);
}

long long weil_dim(const ExtraspecialShape& shape, int eps) {
  shape.validate();
  if (shape.p == 2)
    throw std::invalid_argument(
        "weil_dim: p = 2 is handled by the quadratic-form dichotomy, not the "
        "Weil representation");
  if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
  return (checked_pow(shape.p, shape.n) + eps) / 2;
}

long long isotropic_count(long long n, int form_type) {
  if (n < 1) throw std::invalid_argument("isotropic_count: n must be >= 1");
  if (form_type != 1 && form_type != -1)
    throw std::invalid_argument("form type must be +1 or -1");
  return checked_pow(2, n - 1) * (checked_pow(2, n) + form_type);
}

long long anisotropic_count(long long n, int form_type) {
  return checked_pow(2, 2 * n) - isotropic_count(n, form_type);
}

}  // namespace finitecases
}  // namespace smallrep
