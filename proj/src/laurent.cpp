#include "latknot/laurent.hpp"

#include <cctype>
#include <stdexcept>

#include "latknot/errors.hpp"

namespace latknot {

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly::LaurentPoly(std::map<int, std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) { return LaurentPoly({{exponent, coeff}}); }

void LaurentPoly::trim() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
int LaurentPoly::max_exponent() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

std::int64_t LaurentPoly::evaluate(std::int64_t t) const {
  if (t != 1 && t != -1) throw std::invalid_argument("evaluate supports t = +-1 only");
  std::int64_t sum = 0;
  for (const auto &[e, c] : coeffs_) sum += (t == -1 && (e % 2 != 0)) ? -c : c;
  return sum;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  std::map<int, std::int64_t> out;
  for (const auto &[e, c] : coeffs_) out[e + by] = c;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return *this;
  const int lo = min_exponent(), hi = max_exponent();
  // floor((lo + hi) / 2) for either sign
  const int mid = (lo + hi >= 0) ? (lo + hi) / 2 : -((-(lo + hi) + 1) / 2);
  LaurentPoly p = shifted(-mid);
  const std::int64_t at_one = p.evaluate(1);
  if (at_one < 0 || (at_one == 0 && p.coeffs_.rbegin()->second < 0)) p = -p;
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly &o) const {
  std::map<int, std::int64_t> out = coeffs_;
  for (const auto &[e, c] : o.coeffs_) out[e] += c;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
  std::map<int, std::int64_t> out;
  for (const auto &[e, c] : coeffs_) out[e] = -c;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly &o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly &o) const {
  std::map<int, std::int64_t> out;
  for (const auto &[e1, c1] : coeffs_)
    for (const auto &[e2, c2] : o.coeffs_) out[e1 + e2] += c1 * c2;
  return LaurentPoly(std::move(out));
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[e, c] : coeffs_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    first = false;
    if (e == 0 || mag != 1) out += std::to_string(mag);
    if (e != 0) {
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw KnotError(ErrorCode::MalformedInput, "empty polynomial");
  if (s == "0") return {};
  std::map<int, std::int64_t> out;
  std::size_t i = 0;
  auto bad = [&] { return KnotError(ErrorCode::MalformedInput, "cannot parse polynomial '" + s + "'"); };
  auto read_int = [&](std::int64_t &v) {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || i - start > 17) return false;
    v = std::stoll(s.substr(start, i - start));
    return true;
  };
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw bad();
    }
    std::int64_t mag = 1;
    bool have_num = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      if (!read_int(mag)) throw bad();
      have_num = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    int exp = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::int64_t esign = 1, ev = 0;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) esign = s[i++] == '-' ? -1 : 1;
        if (!read_int(ev)) throw bad();
        exp = static_cast<int>(esign * ev);
      }
    } else if (!have_num) {
      throw bad();
    }
    out[exp] += sign * mag;
  }
  return LaurentPoly(std::move(out));
}

} // namespace latknot
