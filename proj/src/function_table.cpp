#include "tcode/function_table.hpp"

#include <stdexcept>
#include <string>

namespace tcode {

namespace {

void check_dims(int n, int m) {
  if (n < 1 || n > kMaxInputDim) throw std::invalid_argument("function input dimension must be in [1, 16], got " + std::to_string(n));
  if (m < 1 || m > kMaxOutputDim) throw std::invalid_argument("function output dimension must be in [1, 8], got " + std::to_string(m));
}

}  // namespace

FunctionTable::FunctionTable(int n, int m) : n_(n), m_(m) {
  check_dims(n, m);
  table_.assign(pow3(n), 0);
}

FunctionTable::FunctionTable(int n, int m, std::vector<std::uint32_t> table) : n_(n), m_(m), table_(std::move(table)) {
  check_dims(n, m);
  if (table_.size() != pow3(n)) throw std::invalid_argument("function table must have exactly 3^n entries");
  const Rank bound = pow3(m);
  for (auto v : table_)
    if (v >= bound) throw std::invalid_argument("function table entry out of range for m = " + std::to_string(m));
}

FunctionTable FunctionTable::from_function(int n, int m, const std::function<TernaryVector(const TernaryVector&)>& fn) {
  FunctionTable t(n, m);
  for (Rank x = 0; x < t.domain_size(); ++x) {
    const TernaryVector y = fn(TernaryVector::from_rank(x, n));
    if (y.size() != m) throw std::invalid_argument("from_function: output has wrong dimension");
    t.table_[x] = static_cast<std::uint32_t>(y.rank());
  }
  return t;
}

FunctionTable FunctionTable::scalar(int n, std::vector<std::uint8_t> values) {
  std::vector<std::uint32_t> t(values.begin(), values.end());
  return FunctionTable(n, 1, std::move(t));
}

TernaryVector FunctionTable::value(const TernaryVector& x) const {
  if (x.size() != n_) throw std::invalid_argument("FunctionTable::value: dimension mismatch");
  return TernaryVector::from_rank(table_[x.rank()], m_);
}

void FunctionTable::set(Rank x, std::uint32_t value) {
  if (x >= table_.size() || value >= pow3(m_)) throw std::out_of_range("FunctionTable::set out of range");
  table_[x] = value;
}

std::vector<std::uint8_t> FunctionTable::component(Rank mu) const {
  if (mu >= pow3(m_)) throw std::invalid_argument("component: mu out of range");
  const std::vector<std::uint8_t> by_output = dot_table(TernaryVector::from_rank(mu, m_));
  std::vector<std::uint8_t> out(table_.size());
  for (std::size_t x = 0; x < table_.size(); ++x) out[x] = by_output[table_[x]];
  return out;
}

FunctionTable FunctionTable::coordinate(int j) const { return project(j, 1); }

FunctionTable FunctionTable::project(int first, int count) const {
  if (first < 0 || count < 1 || first + count > m_) throw std::invalid_argument("project: coordinate range out of bounds");
  const Rank div = pow3(first);
  const Rank mod = pow3(count);
  std::vector<std::uint32_t> t(table_.size());
  for (std::size_t x = 0; x < table_.size(); ++x) t[x] = static_cast<std::uint32_t>((table_[x] / div) % mod);
  return FunctionTable(n_, count, std::move(t));
}

std::uint64_t FunctionTable::fingerprint() const {
  // FNV-1a over (n, m, table).
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  mix(static_cast<std::uint64_t>(m_));
  for (auto v : table_) mix(v);
  return h;
}

}  // namespace tcode
