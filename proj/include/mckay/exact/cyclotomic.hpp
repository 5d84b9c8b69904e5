#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mckay/exact/rational.hpp"

namespace mckay::exact {

/// Coefficients of Φ_m, constant term first.
const std::vector<Int>& cyclotomic_polynomial(unsigned m);

unsigned euler_phi(unsigned m);

/// Element of Z[ζ_m] stored as its reduction modulo Φ_m (coefficient i multiplies ζ_m^i).
class CycloInt {
 public:
  CycloInt() : CycloInt(Int(0)) {}
  CycloInt(const Int& value, unsigned conductor = 1);  // NOLINT(google-explicit-constructor)
  CycloInt(long value) : CycloInt(Int(value)) {}       // NOLINT(google-explicit-constructor)

  /// ζ_m^k for any integer k.
  static CycloInt root_of_unity(unsigned m, long k);

  /// Builds from an arbitrary polynomial in ζ_m and reduces it.
  static CycloInt from_poly(unsigned m, std::vector<Int> poly);

  unsigned conductor() const noexcept { return m_; }
  const std::vector<Int>& coeffs() const noexcept { return c_; }

  /// Same value written over Q(ζ_M); M must be a multiple of the conductor.
  CycloInt lifted(unsigned M) const;

  bool is_zero() const;
  bool is_one() const;

  CycloInt operator-() const;
  friend CycloInt operator+(const CycloInt& a, const CycloInt& b);
  friend CycloInt operator-(const CycloInt& a, const CycloInt& b);
  friend CycloInt operator*(const CycloInt& a, const CycloInt& b);
  CycloInt& operator+=(const CycloInt& b) { return *this = *this + b; }
  CycloInt& operator*=(const CycloInt& b) { return *this = *this * b; }

  CycloInt pow(unsigned e) const;

  friend bool operator==(const CycloInt& a, const CycloInt& b);

  /// Sum of terms "c*z<m>^<k>"; the constant term is written as a bare integer.
  std::string to_string() const;

 private:
  unsigned m_{1};
  std::vector<Int> c_;
};

bool is_zero_value(const CycloInt& x);

/// Inverse of to_string: terms "z<m>^<k>", "c*z<m>^<k>", or integers joined by + and -.
CycloInt parse_cyclo(std::string_view text);

}  // namespace mckay::exact
