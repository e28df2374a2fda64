#include "bctkit/tower.hpp"

#include "bctkit/error.hpp"

namespace bctkit {

Tower::Tower(Field base) : base_(std::move(base)) {
  if (base_.degree() % 2 == 0) {
    throw Error(Errc::InvalidParams, "tower needs an odd base degree so that {1, w} is a basis");
  }
}

TowerEl Tower::inv(TowerEl z) const {
  if (z.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return scale(base_.inv(norm(z)), bar(z));
}

TowerEl Tower::pow(TowerEl z, std::uint64_t e) const noexcept {
  TowerEl result = one();
  while (e != 0) {
    if (e & 1u) result = mul(result, z);
    z = sqr(z);
    e >>= 1;
  }
  return result;
}

TowerEl Tower::frob_pow(TowerEl z, unsigned k) const noexcept {
  k %= n();
  for (unsigned i = 0; i < k; ++i) z = sqr(z);
  return z;
}

}  // namespace bctkit
