#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "tsemi/error.hpp"

namespace tsemi {

using BigInt = mpz_class;

/// Exact rational; always reduced, denominator always positive.
class BigRational {
 public:
  BigRational() : value_(0) {}
  BigRational(long v) : value_(v) {}  // NOLINT implicit for literals
  explicit BigRational(const BigInt& v) : value_(v) {}
  BigRational(const BigInt& num, const BigInt& den) : value_(num, den) {
    if (den == 0) {
      throw invalid_input_error("rational with zero denominator");
    }
    value_.canonicalize();
  }

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  double to_double() const { return value_.get_d(); }

  /// "p/q" for non-integers, plain "p" when q == 1.
  std::string to_string() const {
    if (value_.get_den() == 1) {
      return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  /// Fixed-point decimal with `digits` digits after the point, rounded to
  /// nearest (ties away from zero).
  std::string decimal(std::size_t digits = 12) const {
    const bool negative = value_ < 0;
    BigInt num = abs(value_.get_num());
    const BigInt den = value_.get_den();
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    BigInt scaled_q, scaled_r;
    mpz_fdiv_qr(scaled_q.get_mpz_t(), scaled_r.get_mpz_t(),
                BigInt(num * scale).get_mpz_t(), den.get_mpz_t());
    if (2 * scaled_r >= den) {
      scaled_q += 1;
    }
    BigInt whole, frac;
    mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), scaled_q.get_mpz_t(),
                scale.get_mpz_t());
    std::string f = frac.get_str();
    std::string out = (negative && (whole != 0 || frac != 0) ? "-" : "");
    out += whole.get_str();
    if (digits > 0) {
      out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
  }

  /// Natural log of the rational, valid far outside double range.
  double log() const {
    if (value_ <= 0) {
      throw invalid_input_error("log of a non-positive rational");
    }
    auto log_big = [](const BigInt& v) {
      signed long exp2 = 0;
      const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
      return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    };
    return log_big(value_.get_num()) - log_big(value_.get_den());
  }

  friend BigRational operator+(const BigRational& a, const BigRational& b) {
    return BigRational(mpq_class(a.value_ + b.value_));
  }
  friend BigRational operator-(const BigRational& a, const BigRational& b) {
    return BigRational(mpq_class(a.value_ - b.value_));
  }
  friend BigRational operator*(const BigRational& a, const BigRational& b) {
    return BigRational(mpq_class(a.value_ * b.value_));
  }
  friend BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.value_ == 0) {
      throw invalid_input_error("division by zero rational");
    }
    return BigRational(mpq_class(a.value_ / b.value_));
  }
  BigRational operator-() const { return BigRational(mpq_class(-value_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const BigRational& a, const BigRational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const BigRational& a, const BigRational& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>(const BigRational& a, const BigRational& b) {
    return a.value_ > b.value_;
  }
  friend bool operator>=(const BigRational& a, const BigRational& b) {
    return a.value_ >= b.value_;
  }

 private:
  explicit BigRational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

}  // namespace tsemi
