#include "petalgrid/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace petalgrid {

LaurentPolynomial::LaurentPolynomial(int min_exp, std::vector<Integer> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPolynomial LaurentPolynomial::monomial(const Integer& c, int exponent) {
  return LaurentPolynomial(exponent, {c});
}

void LaurentPolynomial::trim() {
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const Integer& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; });
  min_exp_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) min_exp_ = 0;
}

Integer LaurentPolynomial::coefficient(int exponent) const {
  const int j = exponent - min_exp_;
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[j];
}

std::size_t LaurentPolynomial::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (Integer& c : out.coeffs_) c = -c;
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(min_exp_, rhs.min_exp_);
  const int hi = std::max(max_exp(), rhs.max_exp());
  std::vector<Integer> sum(hi - lo + 1);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) sum[min_exp_ - lo + j] += coeffs_[j];
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) sum[rhs.min_exp_ - lo + j] += rhs.coeffs_[j];
  min_exp_ = lo;
  coeffs_ = std::move(sum);
  trim();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  return *this += -rhs;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
  return *this = *this * rhs;
}

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Integer> prod(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] != 0) prod[i + j] += x[i] * y[j];
    }
  }
  return LaurentPolynomial(a.min_exp() + b.min_exp(), std::move(prod));
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial out = *this;
  if (!out.is_zero()) out.min_exp_ += k;
  return out;
}

LaurentPolynomial LaurentPolynomial::substitute_inverse() const {
  if (is_zero()) return {};
  std::vector<Integer> rev(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPolynomial(-max_exp(), std::move(rev));
}

LaurentPolynomial LaurentPolynomial::normalized() const {
  if (is_zero()) return {};
  LaurentPolynomial out = shifted(-min_exp_);
  return out.coeffs_.front() < 0 ? -out : out;
}

Integer LaurentPolynomial::evaluate(const Integer& at) const {
  if (is_zero()) return 0;
  if (at == 1) {
    Integer sum = 0;
    for (const Integer& c : coeffs_) sum += c;
    return sum;
  }
  if (at == -1) {
    Integer sum = 0;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      const bool odd = ((min_exp_ + static_cast<int>(j)) % 2) != 0;
      sum += odd ? -coeffs_[j] : coeffs_[j];
    }
    return sum;
  }
  if (min_exp_ < 0) throw std::domain_error("negative power at a non-unit point");
  Integer value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * at + *it;
  for (int e = 0; e < min_exp_; ++e) value *= at;
  return value;
}

LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  // Both sides as t^e times a polynomial with nonzero constant term.
  std::vector<Integer> rem = a.coeffs();
  const std::vector<Integer>& div = b.coeffs();
  if (rem.size() < div.size()) throw std::domain_error("not divisible");
  const std::size_t qlen = rem.size() - div.size() + 1;
  std::vector<Integer> quot(qlen);
  const Integer& lead = div.back();
  for (std::size_t step = qlen; step-- > 0;) {
    const Integer& top = rem[step + div.size() - 1];
    if (top == 0) continue;
    Integer q, r;
    boost::multiprecision::divide_qr(top, lead, q, r);
    if (r != 0) throw std::domain_error("not divisible");
    quot[step] = q;
    for (std::size_t j = 0; j < div.size(); ++j) rem[step + j] -= q * div[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return c != 0; })) {
    throw std::domain_error("not divisible");
  }
  return LaurentPolynomial(a.min_exp() - b.min_exp(), std::move(quot));
}

bool equal_up_to_units(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a.normalized() == b.normalized();
}

std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = p.max_exp(); e >= p.min_exp(); --e) {
    Integer c = p.coefficient(e);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace petalgrid
