#include "serre/serre_class.hpp"

#include <algorithm>

#include "serre/errors.hpp"

namespace serre {

SerreClass SerreClass::dim_le(int j) {
  if (j < 0) throw PreconditionError("dim_le bound must be non-negative");
  return SerreClass(Kind::DimLE, j, std::nullopt);
}

SerreClass SerreClass::supp_in(Ideal b) {
  if (b.is_zero()) throw PreconditionError("supp_in needs a nonzero ideal");
  if (b.is_unit()) throw PreconditionError("supp_in needs a proper ideal");
  return SerreClass(Kind::SuppInV, 0, std::move(b));
}

bool SerreClass::contains(const FPModule& module) const {
  switch (kind_) {
    case Kind::ZeroOnly:
      return module.is_zero();
    case Kind::DimLE:
      return module_dimension(module) <= bound_;
    case Kind::SuppInV: {
      if (module.is_zero()) return true;
      Ideal ann = annihilator(module);
      return std::all_of(ideal_->generators().begin(), ideal_->generators().end(),
                         [&](const Polynomial& g) { return radical_membership(g, ann); });
    }
  }
  return false;
}

bool SerreClass::contains_prime(const Ideal& prime) const {
  switch (kind_) {
    case Kind::ZeroOnly:
      return prime.is_unit();
    case Kind::DimLE:
      return krull_dimension(prime) <= bound_;
    case Kind::SuppInV:
      return prime.contains(*ideal_);
  }
  return false;
}

std::string SerreClass::to_string() const {
  switch (kind_) {
    case Kind::ZeroOnly:
      return "zero";
    case Kind::DimLE:
      return "dim_le(" + std::to_string(bound_) + ")";
    case Kind::SuppInV: {
      std::string inner = ideal_->to_string();
      return "supp_in" + inner;
    }
  }
  return "";
}

}  // namespace serre
