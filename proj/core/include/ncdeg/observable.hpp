#pragma once

#include <variant>

#include "ncdeg/polynomial.hpp"
#include "ncdeg/states.hpp"

namespace ncdeg {

/// Hermitian test observable: a normally ordered ladder polynomial, or a
/// rank-one projector |psi><psi| onto a state model.
class Observable {
 public:
  static Observable polynomial(NormalOrderedPolynomial p);
  static Observable projector(StateModel psi);

  bool is_polynomial() const { return std::holds_alternative<NormalOrderedPolynomial>(value_); }
  bool is_projector() const { return std::holds_alternative<StateModel>(value_); }

  const NormalOrderedPolynomial& poly() const { return std::get<NormalOrderedPolynomial>(value_); }
  const StateModel& state() const { return std::get<StateModel>(value_); }

  int modes() const;

 private:
  explicit Observable(NormalOrderedPolynomial p) : value_(std::move(p)) {}
  explicit Observable(StateModel s) : value_(std::move(s)) {}

  std::variant<NormalOrderedPolynomial, StateModel> value_;
};

}  // namespace ncdeg
