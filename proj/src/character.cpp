#include "smallrep/character.hpp"

namespace smallrep {

void GradedCharacter::add(const Weight& w, long long even, long long odd) {
  if (even == 0 && odd == 0) return;
  auto it = entries_.find(w);
  if (it == entries_.end()) {
    entries_[w] = {even, odd};
  } else {
    it->second.even += even;
    it->second.odd += odd;
    if (it->second.even == 0 && it->second.odd == 0) entries_.erase(it);
  }
}

GradedMult GradedCharacter::at(const Weight& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? GradedMult{} : it->second;
}

long long GradedCharacter::dim_total(const RootSystem& rs) const {
  long long t = 0;
  for (const auto& [w, gm] : entries_) t += rs.orbit_size(w) * (gm.even + gm.odd);
  return t;
}

long long GradedCharacter::superdim(const RootSystem& rs) const {
  long long t = 0;
  for (const auto& [w, gm] : entries_) t += rs.orbit_size(w) * (gm.even - gm.odd);
  return t;
}

GradedCharacter GradedCharacter::parity_flipped() const {
  GradedCharacter out;
  for (const auto& [w, gm] : entries_) out.add(w, gm.odd, gm.even);
  return out;
}

std::map<Weight, GradedMult> GradedCharacter::expand(const RootSystem& rs) const {
  std::map<Weight, GradedMult> full;
  for (const auto& [w, gm] : entries_)
    for (const auto& v : rs.orbit(w)) full[v] = gm;
  return full;
}

}  // namespace smallrep
