#include "toricgp/lattice/int_vector.hpp"

#include <algorithm>
#include <limits>

#include "toricgp/errors.hpp"

namespace toricgp {

namespace {

void check_entry(Exponent e) {
  if (e < 0)
    throw InvalidArgument("negative entry " + std::to_string(e) +
                          " in nonnegative integer vector");
}

void check_dims(const IntVector &a, const IntVector &b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("vector dimensions differ: " +
                            std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
}

} // namespace

IntVector::IntVector(std::initializer_list<Exponent> init) : entries_(init) {
  for (Exponent e : entries_)
    check_entry(e);
}

IntVector::IntVector(std::vector<Exponent> entries)
    : entries_(std::move(entries)) {
  for (Exponent e : entries_)
    check_entry(e);
}

IntVector IntVector::unit(std::size_t dim, std::size_t index) {
  if (index >= dim)
    throw InvalidArgument("unit vector index out of range");
  IntVector v(dim);
  v.entries_[index] = 1;
  return v;
}

void IntVector::set(std::size_t i, Exponent value) {
  check_entry(value);
  entries_.at(i) = value;
}

void IntVector::add_at(std::size_t i, Exponent delta) {
  Exponent out;
  if (__builtin_add_overflow(entries_.at(i), delta, &out))
    throw OverflowError("exponent overflow");
  check_entry(out);
  entries_[i] = out;
}

std::int64_t IntVector::degree() const {
  std::int64_t d = 0;
  for (Exponent e : entries_)
    d += e;
  return d;
}

bool IntVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Exponent e) { return e == 0; });
}

bool IntVector::is_squarefree() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Exponent e) { return e <= 1; });
}

std::uint64_t IntVector::support_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] > 0)
      mask |= std::uint64_t{1} << (i & 63);
  return mask;
}

bool IntVector::divides(const IntVector &other) const {
  check_dims(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] > other.entries_[i])
      return false;
  return true;
}

bool IntVector::coprime(const IntVector &other) const {
  check_dims(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] > 0 && other.entries_[i] > 0)
      return false;
  return true;
}

IntVector &IntVector::operator+=(const IntVector &other) {
  check_dims(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (__builtin_add_overflow(entries_[i], other.entries_[i], &entries_[i]))
      throw OverflowError("exponent overflow");
  return *this;
}

IntVector &IntVector::operator-=(const IntVector &other) {
  check_dims(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] -= other.entries_[i];
    check_entry(entries_[i]);
  }
  return *this;
}

IntVector IntVector::scaled(Exponent k) const {
  check_entry(k);
  IntVector out(*this);
  for (Exponent &e : out.entries_)
    if (__builtin_mul_overflow(e, k, &e))
      throw OverflowError("exponent overflow");
  return out;
}

std::string IntVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

IntVector lcm(const IntVector &a, const IntVector &b) {
  check_dims(a, b);
  std::vector<Exponent> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    out[i] = std::max(a[i], b[i]);
  return IntVector(std::move(out));
}

IntVector gcd(const IntVector &a, const IntVector &b) {
  check_dims(a, b);
  std::vector<Exponent> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    out[i] = std::min(a[i], b[i]);
  return IntVector(std::move(out));
}

Exponent checked_exponent(std::int64_t value) {
  if (value < 0 || value > std::numeric_limits<Exponent>::max())
    throw OverflowError("value " + std::to_string(value) +
                        " outside the exponent range");
  return static_cast<Exponent>(value);
}

std::size_t IntVectorHash::operator()(const IntVector &v) const noexcept {
  // Sum of independent per-coordinate terms, then a splitmix finalizer.
  auto mix = [](std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  const auto &e = v.entries();
  std::uint64_t h = e.size();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i])
      h += mix(i * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(e[i]));
  return static_cast<std::size_t>(mix(h));
}

std::vector<int> sort_tuple(std::vector<int> tuple) {
  std::sort(tuple.begin(), tuple.end());
  return tuple;
}

} // namespace toricgp
