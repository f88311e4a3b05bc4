#include "ncdeg/observable.hpp"

namespace ncdeg {

Observable Observable::polynomial(NormalOrderedPolynomial p) {
  if (!p.is_hermitian())
    throw InvalidInputError("Observable: polynomial is not Hermitian");
  return Observable(std::move(p));
}

Observable Observable::projector(StateModel psi) { return Observable(std::move(psi)); }

int Observable::modes() const {
  return is_polynomial() ? poly().modes() : state().modes();
}

}  // namespace ncdeg
