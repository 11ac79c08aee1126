#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qgate {

/// Projective (numerator, denominator) pair for amplitude ratios such as
/// <v|E>/<parent(v)|E>. A zero denominator encodes a signed infinity, so
/// poles of the recursion propagate exactly instead of overflowing.
class AmplitudeRatio {
 public:
  AmplitudeRatio(double num, double den) : num_(num), den_(den) {
    if (num == 0.0 && den == 0.0) {
      throw std::domain_error("amplitude ratio 0/0 is undefined");
    }
  }

  static AmplitudeRatio zero() { return {0.0, 1.0}; }
  static AmplitudeRatio infinity(double sign = -1.0) { return {sign < 0 ? -1.0 : 1.0, 0.0}; }
  static AmplitudeRatio finite(double v) { return {v, 1.0}; }

  double num() const { return num_; }
  double den() const { return den_; }

  bool is_infinite() const { return den_ == 0.0; }
  bool is_zero() const { return num_ == 0.0; }

  /// +-infinity when the denominator vanishes.
  double value() const {
    if (den_ == 0.0) {
      return std::copysign(std::numeric_limits<double>::infinity(), num_);
    }
    return num_ / den_;
  }

  std::string to_string() const;

 private:
  double num_;
  double den_;
};

}  // namespace qgate
