#include "tcode/gf3.hpp"

namespace tcode {

namespace {

void check_dim(int n) {
  if (n < 0 || n > kMaxDim) throw std::invalid_argument("vector dimension out of range: " + std::to_string(n));
}

}  // namespace

TernaryVector::TernaryVector(int n) : n_(n) { check_dim(n); }

TernaryVector::TernaryVector(std::initializer_list<int> coords) : n_(static_cast<int>(coords.size())) {
  check_dim(n_);
  std::size_t i = 0;
  for (int c : coords) c_[i++] = mod3(c);
}

TernaryVector TernaryVector::from_rank(Rank rank, int n) {
  check_dim(n);
  if (rank >= pow3(n)) {
    throw std::out_of_range("rank " + std::to_string(rank) + " out of range for dimension " + std::to_string(n));
  }
  TernaryVector v(n);
  for (int i = 0; i < n; ++i) {
    v.c_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rank % 3);
    rank /= 3;
  }
  return v;
}

TernaryVector TernaryVector::unit(int n, int i) {
  TernaryVector v(n);
  if (i < 0 || i >= n) throw std::out_of_range("unit vector index out of range");
  v.c_[static_cast<std::size_t>(i)] = 1;
  return v;
}

Rank TernaryVector::rank() const {
  Rank r = 0;
  for (int i = n_ - 1; i >= 0; --i) r = r * 3 + c_[static_cast<std::size_t>(i)];
  return r;
}

bool TernaryVector::is_zero() const {
  for (int i = 0; i < n_; ++i)
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

TernaryVector TernaryVector::operator-() const {
  TernaryVector r(n_);
  for (int i = 0; i < n_; ++i) r.set(i, -(*this)[i]);
  return r;
}

TernaryVector operator+(const TernaryVector& a, const TernaryVector& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("vector dimension mismatch");
  TernaryVector r(a.n_);
  for (int i = 0; i < a.n_; ++i) r.set(i, a[i] + b[i]);
  return r;
}

TernaryVector operator-(const TernaryVector& a, const TernaryVector& b) { return a + (-b); }

TernaryVector operator*(Trit s, const TernaryVector& v) {
  TernaryVector r(v.n_);
  for (int i = 0; i < v.n_; ++i) r.set(i, s * v[i]);
  return r;
}

bool operator==(const TernaryVector& a, const TernaryVector& b) {
  if (a.n_ != b.n_) return false;
  for (int i = 0; i < a.n_; ++i)
    if (a.c_[static_cast<std::size_t>(i)] != b.c_[static_cast<std::size_t>(i)]) return false;
  return true;
}

TernaryVector TernaryVector::concat(const TernaryVector& tail) const {
  TernaryVector r(n_ + tail.n_);
  for (int i = 0; i < n_; ++i) r.set(i, (*this)[i]);
  for (int i = 0; i < tail.n_; ++i) r.set(n_ + i, tail[i]);
  return r;
}

TernaryVector TernaryVector::slice(int first, int count) const {
  if (first < 0 || count < 0 || first + count > n_) throw std::out_of_range("slice out of range");
  TernaryVector r(count);
  for (int i = 0; i < count; ++i) r.set(i, (*this)[first + i]);
  return r;
}

std::string TernaryVector::to_string() const {
  std::string s = "(";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ',';
    s += static_cast<char>('0' + c_[static_cast<std::size_t>(i)]);
  }
  return s + ")";
}

Trit dot(const TernaryVector& u, const TernaryVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("dot: dimension mismatch");
  int acc = 0;
  for (int i = 0; i < u.size(); ++i) acc += u.digit(i) * v.digit(i);
  return Trit(acc);
}

Rank rank_add(Rank a, Rank b, int n) {
  Rank r = 0, p = 1;
  for (int i = 0; i < n; ++i, p *= 3, a /= 3, b /= 3) r += ((a % 3 + b % 3) % 3) * p;
  return r;
}

Rank rank_sub(Rank a, Rank b, int n) {
  Rank r = 0, p = 1;
  for (int i = 0; i < n; ++i, p *= 3, a /= 3, b /= 3) r += ((a % 3 + 3 - b % 3) % 3) * p;
  return r;
}

Rank rank_neg(Rank a, int n) { return rank_sub(0, a, n); }

Rank rank_scale(Rank a, int s, int n) {
  const Rank k = mod3(s);
  Rank r = 0, p = 1;
  for (int i = 0; i < n; ++i, p *= 3, a /= 3) r += ((a % 3) * k % 3) * p;
  return r;
}

std::uint8_t rank_dot(Rank a, Rank b, int n) {
  Rank acc = 0;
  for (int i = 0; i < n; ++i, a /= 3, b /= 3) acc += (a % 3) * (b % 3);
  return static_cast<std::uint8_t>(acc % 3);
}

std::vector<std::uint8_t> dot_table(const TernaryVector& v) {
  const int n = v.size();
  std::vector<std::uint8_t> d(pow3(n), 0);
  std::size_t block = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint8_t c = v.digit(i);
    for (std::size_t x = 0; x < block; ++x) {
      d[x + block] = static_cast<std::uint8_t>((d[x] + c) % 3);
      d[x + 2 * block] = static_cast<std::uint8_t>((d[x] + 2 * c) % 3);
    }
    block *= 3;
  }
  return d;
}

LinearFormWalker::LinearFormWalker(int n, Rank b, std::span<const Form> forms) : n_(n), nforms_(forms.size()) {
  check_dim(n);
  if (forms.size() > kMaxForms) throw std::invalid_argument("LinearFormWalker: too many forms");
  for (int i = 0; i < n; ++i, b /= 3) b_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(b % 3);
  for (std::size_t k = 0; k < nforms_; ++k) {
    forms_[k] = {mod3(forms[k].alpha), mod3(forms[k].beta)};
    Rank r = 0, p = 1;
    for (int i = 0; i < n; ++i, p *= 3) {
      const auto d = static_cast<std::uint8_t>((forms_[k].beta * b_[static_cast<std::size_t>(i)]) % 3);
      digits_[k][static_cast<std::size_t>(i)] = d;
      r += d * p;
    }
    ranks_[k] = r;
  }
}

bool LinearFormWalker::next() {
  Rank p = 1;
  for (int i = 0; i < n_; ++i, p *= 3) {
    const auto ui = static_cast<std::size_t>(i);
    const bool carry = (a_[ui] == 2);
    a_[ui] = carry ? 0 : static_cast<std::uint8_t>(a_[ui] + 1);
    for (std::size_t k = 0; k < nforms_; ++k) {
      const auto d = static_cast<std::uint8_t>((forms_[k].alpha * a_[ui] + forms_[k].beta * b_[ui]) % 3);
      ranks_[k] = ranks_[k] - digits_[k][ui] * p + d * p;
      digits_[k][ui] = d;
    }
    if (!carry) {
      a_rank_ += 1;
      return true;
    }
  }
  a_rank_ = 0;
  return false;
}

}  // namespace tcode
