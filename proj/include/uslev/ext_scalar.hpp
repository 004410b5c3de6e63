#pragma once

#include <cmath>
#include <compare>
#include <optional>
#include <string>

#include "uslev/errors.hpp"

namespace uslev {

/// A value in R ∪ {-inf, nu}, where nu stands for the infimum of the empty
/// set. There is deliberately no +inf: the scalarizing functional never
/// attains it.
///
/// nu is incomparable to every real number: both `le(t)` and `gt(t)` are
/// false for it, so "not <= t" can only be rewritten as "> t" on the
/// effective domain.
class ExtScalar {
 public:
  enum class Kind { Real, NegInf, Nu };

  static ExtScalar real(double v) {
    if (!std::isfinite(v)) throw InputError("ExtScalar: real payload must be finite");
    return ExtScalar(Kind::Real, v);
  }
  static ExtScalar neg_inf() { return ExtScalar(Kind::NegInf, 0.0); }
  static ExtScalar nu() { return ExtScalar(Kind::Nu, 0.0); }

  Kind kind() const { return kind_; }
  bool is_real() const { return kind_ == Kind::Real; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_nu() const { return kind_ == Kind::Nu; }

  /// Payload of a Real value. Throws for NegInf/Nu.
  double value() const;
  std::optional<double> as_real() const {
    return is_real() ? std::optional<double>(value_) : std::nullopt;
  }

  /// x + t; -inf and nu absorb.
  ExtScalar add(double t) const;
  /// x / lambda, lambda > 0.
  ExtScalar scale(double lambda) const;

  bool le(double t) const { return kind_ == Kind::NegInf || (kind_ == Kind::Real && value_ <= t); }
  bool lt(double t) const { return kind_ == Kind::NegInf || (kind_ == Kind::Real && value_ < t); }
  bool ge(double t) const { return kind_ == Kind::Real && value_ >= t; }
  bool gt(double t) const { return kind_ == Kind::Real && value_ > t; }

  /// Partial order: -inf < reals; nu is unordered against everything,
  /// itself included.
  std::partial_ordering operator<=>(const ExtScalar& other) const;
  /// Structural equality (nu == nu here, unlike the order above).
  bool same_as(const ExtScalar& other) const {
    return kind_ == other.kind_ && (kind_ != Kind::Real || value_ == other.value_);
  }

  /// "real", "-inf" or "nu".
  std::string class_name() const;
  std::string to_string() const;

 private:
  ExtScalar(Kind k, double v) : kind_(k), value_(v) {}

  Kind kind_;
  double value_;
};

inline ExtScalar ext_add(const ExtScalar& v, double t) { return v.add(t); }
inline ExtScalar ext_scale(const ExtScalar& v, double lambda) { return v.scale(lambda); }
inline bool ext_le(const ExtScalar& v, double t) { return v.le(t); }
inline bool ext_lt(const ExtScalar& v, double t) { return v.lt(t); }
inline bool ext_ge(const ExtScalar& v, double t) { return v.ge(t); }
inline bool ext_gt(const ExtScalar& v, double t) { return v.gt(t); }

}  // namespace uslev
