#pragma once

#include <vector>

#include "serre/polynomial.hpp"

namespace serre {

/// The working ring R = S/J where S is an ambient polynomial ring.
/// Objects over R are always carried over S with J absorbed.
class RingDescriptor {
 public:
  RingDescriptor() = default;
  explicit RingDescriptor(RingPtr ambient, std::vector<Polynomial> quotient = {});

  const RingPtr& ambient() const { return ambient_; }
  const std::vector<Polynomial>& quotient() const { return quotient_; }
  bool is_polynomial_ring() const { return quotient_.empty(); }
  std::size_t num_vars() const { return ambient_->num_vars(); }

  Polynomial zero() const { return Polynomial(ambient_); }
  Polynomial one() const { return Polynomial::constant(ambient_, 1); }
  Polynomial var(std::size_t i) const { return Polynomial::variable(ambient_, i); }

  bool operator==(const RingDescriptor& other) const;

 private:
  RingPtr ambient_;
  std::vector<Polynomial> quotient_;
};

}  // namespace serre
