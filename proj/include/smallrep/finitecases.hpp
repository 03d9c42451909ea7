#pragma once

#include <stdexcept>

namespace smallrep {
namespace finitecases {

// Extraspecial p-group of order p^{1+2n}; form_type (+1/-1) is the type of
// the associated quadratic form on F_2^{2n}, meaningful only for p = 2.
struct ExtraspecialShape {
  long long p = 2;
  long long n = 1;
  int form_type = +1;

  void validate() const;
};

// Dimension p^n of the unique irreducible with nontrivial central character.
long long irrep_dim(const ExtraspecialShape& shape);

// Weil representation dimension (p^n + eps)/2; odd p only.
long long weil_dim(const ExtraspecialShape& shape, int eps);

// Number of isotropic vectors of a type +/- quadratic form on F_2^{2n},
// zero vector included: 2^{n-1} (2^n + form_type).
long long isotropic_count(long long n, int form_type);
long long anisotropic_count(long long n, int form_type);

bool is_prime(long long p);

}  // namespace finitecases
}  // namespace smallrep
