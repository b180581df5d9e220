#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace latknot {

/// Integer Laurent polynomial in t, stored sparsely by exponent.
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::int64_t constant);
  explicit LaurentPoly(std::map<int, std::int64_t> coeffs);

  static LaurentPoly monomial(std::int64_t coeff, int exponent);

  const std::map<int, std::int64_t> &coeffs() const { return coeffs_; }
  std::int64_t coeff(int exponent) const;
  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const;
  int max_exponent() const;

  std::int64_t evaluate(std::int64_t t) const; // t must be +-1
  LaurentPoly shifted(int by) const;

  /// Representative symmetric about exponent 0 (up to the parity of the span)
  /// with positive value at t = 1; fixes the +-t^k ambiguity.
  LaurentPoly normalized() const;

  LaurentPoly operator+(const LaurentPoly &o) const;
  LaurentPoly operator-(const LaurentPoly &o) const;
  LaurentPoly operator*(const LaurentPoly &o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly &) const = default;

  /// Ascending exponents, e.g. "t^-1 - 1 + t".
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

private:
  void trim();
  std::map<int, std::int64_t> coeffs_;
};

} // namespace latknot
