#include "serre/ring.hpp"

#include "serre/errors.hpp"

namespace serre {

RingDescriptor::RingDescriptor(RingPtr ambient, std::vector<Polynomial> quotient)
    : ambient_(std::move(ambient)), quotient_(std::move(quotient)) {
  if (!ambient_) throw PreconditionError("ring descriptor without an ambient ring");
  for (const auto& f : quotient_) {
    if (f.is_zero()) throw PreconditionError("quotient ideal generators must be nonzero");
    if (!(*f.ring() == *ambient_)) throw DescriptorMismatch("quotient generator over another ring");
  }
}

bool RingDescriptor::operator==(const RingDescriptor& other) const {
  if (!ambient_ || !other.ambient_) return ambient_ == other.ambient_;
  return *ambient_ == *other.ambient_ && quotient_ == other.quotient_;
}

}  // namespace serre
