#include "uslev/ext_scalar.hpp"

#include <cstdio>

namespace uslev {

double ExtScalar::value() const {
  if (kind_ != Kind::Real) throw std::logic_error("ExtScalar::value on " + class_name());
  return value_;
}

ExtScalar ExtScalar::add(double t) const {
  if (!std::isfinite(t)) throw InputError("ext_add: shift must be finite");
  if (kind_ != Kind::Real) return *this;
  return real(value_ + t);
}

ExtScalar ExtScalar::scale(double lambda) const {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw InputError("ext_scale: lambda must be a positive finite real");
  if (kind_ != Kind::Real) return *this;
  return real(value_ / lambda);
}

std::partial_ordering ExtScalar::operator<=>(const ExtScalar& other) const {
  if (kind_ == Kind::Nu || other.kind_ == Kind::Nu) return std::partial_ordering::unordered;
  if (kind_ == Kind::NegInf && other.kind_ == Kind::NegInf) return std::partial_ordering::equivalent;
  if (kind_ == Kind::NegInf) return std::partial_ordering::less;
  if (other.kind_ == Kind::NegInf) return std::partial_ordering::greater;
  return value_ <=> other.value_;
}

std::string ExtScalar::class_name() const {
  switch (kind_) {
    case Kind::Real: return "real";
    case Kind::NegInf: return "-inf";
    case Kind::Nu: return "nu";
  }
  return "nu";
}

std::string ExtScalar::to_string() const {
  if (kind_ != Kind::Real) return class_name();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value_);
  return buf;
}

}  // namespace uslev
