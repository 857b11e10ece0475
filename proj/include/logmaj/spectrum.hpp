#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "logmaj/errors.hpp"

namespace logmaj {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();
inline constexpr double pos_inf = std::numeric_limits<double>::infinity();

/// log with the convention log 0 = -inf; negative input yields NaN.
inline double xlog(double v) { return v == 0.0 ? neg_inf : std::log(v); }

/// exp with the convention exp(-inf) = 0.
inline double xexp(double x) { return x == neg_inf ? 0.0 : std::exp(x); }

/// Difference rhs - lhs with saturating infinities: two equal infinities
/// cancel to zero (equality), otherwise usual IEEE rules apply.
inline double signed_gap(double lhs, double rhs) {
  if (std::isinf(lhs) && std::isinf(rhs) && lhs == rhs) return 0.0;
  return rhs - lhs;
}

/// Descending vector of spectrum values with a companion extended-log view.
/// Values may be negative (Hermitian spectra); log entries are NaN there and
/// the log-domain predicates reject such vectors.
class SpectrumVector {
public:
  SpectrumVector() = default;

  static SpectrumVector from_descending(std::vector<double> values);
  static SpectrumVector from_unsorted(std::vector<double> values);

  int dim() const { return static_cast<int>(values_.size()); }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& log_values() const { return logs_; }
  double operator[](int i) const { return values_[static_cast<size_t>(i)]; }

  bool all_nonnegative() const;
  bool all_positive() const;

private:
  std::vector<double> values_;
  std::vector<double> logs_;
};

/// Prefix sums in the extended-log domain: -inf absorbs.
std::vector<double> prefix_sums(const std::vector<double>& v);

/// Stable descending sort (ties keep input order).
std::vector<double> sorted_descending(std::vector<double> v);

}  // namespace logmaj
