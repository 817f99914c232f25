#include "tcode/eisenstein.hpp"

#include <stdexcept>

namespace tcode {

namespace {

std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("EisensteinInt: addition overflow");
  return r;
}

std::int64_t sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("EisensteinInt: subtraction overflow");
  return r;
}

std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("EisensteinInt: multiplication overflow");
  return r;
}

}  // namespace

std::int64_t EisensteinInt::two_re() const { return sub(mul(2, a_), b_); }

std::int64_t EisensteinInt::norm() const { return add(sub(mul(a_, a_), mul(a_, b_)), mul(b_, b_)); }

EisensteinInt EisensteinInt::conj() const { return {sub(a_, b_), sub(0, b_)}; }

EisensteinInt EisensteinInt::rotate(int j) const {
  switch (((j % 3) + 3) % 3) {
    case 0: return *this;
    case 1: return {sub(0, b_), sub(a_, b_)};
    default: return {sub(b_, a_), sub(0, a_)};
  }
}

EisensteinInt& EisensteinInt::operator+=(const EisensteinInt& o) {
  a_ = add(a_, o.a_);
  b_ = add(b_, o.b_);
  return *this;
}

EisensteinInt& EisensteinInt::operator-=(const EisensteinInt& o) {
  a_ = sub(a_, o.a_);
  b_ = sub(b_, o.b_);
  return *this;
}

// (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w
EisensteinInt& EisensteinInt::operator*=(const EisensteinInt& o) {
  const std::int64_t bd = mul(b_, o.b_);
  const std::int64_t re = sub(mul(a_, o.a_), bd);
  const std::int64_t om = sub(add(mul(a_, o.b_), mul(b_, o.a_)), bd);
  a_ = re;
  b_ = om;
  return *this;
}

EisensteinInt operator*(std::int64_t k, const EisensteinInt& z) { return {mul(k, z.a_), mul(k, z.b_)}; }

EisensteinInt EisensteinInt::operator-() const { return {sub(0, a_), sub(0, b_)}; }

std::string EisensteinInt::to_string() const {
  return "(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
}

bool unit_shaped(const EisensteinInt& z, std::int64_t k, int& exponent) {
  if (k <= 0) return false;
  if (z == EisensteinInt(k, 0)) {
    exponent = 0;
    return true;
  }
  if (z == EisensteinInt(0, k)) {
    exponent = 1;
    return true;
  }
  if (z == EisensteinInt(-k, -k)) {
    exponent = 2;
    return true;
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& z) { return os << z.to_string(); }

}  // namespace tcode
