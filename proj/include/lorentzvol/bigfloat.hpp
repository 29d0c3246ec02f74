#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <string>

namespace lorentzvol {

// Mantissa width (in bits) used by the exact volume engines. The alternating
// sums below cancel heavily, so 64-bit floats are not enough; results are
// rounded to double only at the reporting boundary.
struct PrecisionContext {
  int mantissa_bits;

  explicit PrecisionContext(int bits = kDefaultBits);

  static constexpr int kMinBits = 53;
  static constexpr int kDefaultBits = 256;
};

// Value-semantic wrapper around mpfr_t. Every value carries its own
// precision; binary operations allocate the result at the wider of the two
// operand precisions and round to nearest.
class BigFloat {
 public:
  explicit BigFloat(int bits);                 // zero
  BigFloat(double v, int bits);
  BigFloat(long v, int bits);
  BigFloat(unsigned long v, int bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat from_mpz(const mpz_t z, int bits);

  int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  BigFloat at_precision(int bits) const;  // re-round (exact when widening)
  std::string to_string(int digits = 25) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  BigFloat operator-() const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

  friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
  friend int cmp(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return cmp(a, b) == 0; }

  friend BigFloat abs(const BigFloat& a);
  friend BigFloat sqrt(const BigFloat& a);
  friend BigFloat log(const BigFloat& a);
  friend BigFloat exp(const BigFloat& a);
  friend BigFloat pow(const BigFloat& base, const BigFloat& exponent);
  friend BigFloat pow_ui(const BigFloat& base, unsigned long exponent);
  friend BigFloat ldexp2(const BigFloat& a, long e);  // a * 2^e, exact
  friend BigFloat lngamma(const BigFloat& a);         // requires a > 0

 private:
  mpfr_t v_;
};

BigFloat factorial_big(unsigned long n, int bits);
BigFloat binomial_big(unsigned long n, unsigned long k, int bits);

}  // namespace lorentzvol
