#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace toricgp {

using Exponent = std::int32_t;

// Nonnegative integer vector. Used both for lattice points in Z_{>=0}^d and
// for exponent vectors of monomials; a Monomial is an IntVector.
//
// Entries are checked on construction and on every arithmetic operation:
// negative values and int32 overflow throw instead of wrapping.
class IntVector {
public:
  IntVector() = default;
  explicit IntVector(std::size_t dim) : entries_(dim, 0) {}
  IntVector(std::initializer_list<Exponent> init);
  explicit IntVector(std::vector<Exponent> entries);

  static IntVector unit(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  Exponent operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Exponent> entries() const { return entries_; }
  const std::vector<Exponent> &vec() const { return entries_; }

  void set(std::size_t i, Exponent value);
  void add_at(std::size_t i, Exponent delta);

  std::int64_t degree() const;
  bool is_zero() const;
  // true iff every entry is 0 or 1.
  bool is_squarefree() const;
  // Bit i%64 set iff some entry at i is positive; cheap divisibility reject.
  std::uint64_t support_mask() const;

  // this | other, entrywise <=.
  bool divides(const IntVector &other) const;
  bool coprime(const IntVector &other) const;

  IntVector &operator+=(const IntVector &other);
  // Throws InvalidArgument when a negative entry would result.
  IntVector &operator-=(const IntVector &other);
  IntVector scaled(Exponent k) const;

  friend IntVector operator+(IntVector a, const IntVector &b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector &b) { return a -= b; }

  friend bool operator==(const IntVector &, const IntVector &) = default;
  // Plain lexicographic comparison of the entries; canonical container order,
  // unrelated to any monomial order.
  friend std::strong_ordering operator<=>(const IntVector &a,
                                          const IntVector &b) {
    return a.entries_ <=> b.entries_;
  }

  std::string to_string() const;

private:
  std::vector<Exponent> entries_;
};

using Monomial = IntVector;

IntVector lcm(const IntVector &a, const IntVector &b);
IntVector gcd(const IntVector &a, const IntVector &b);

// Checked helpers shared by code that builds exponents from wider integers.
Exponent checked_exponent(std::int64_t value);

struct IntVectorHash {
  std::size_t operator()(const IntVector &v) const noexcept;
};

// Weakly increasing rearrangement of a tuple of ground indices.
std::vector<int> sort_tuple(std::vector<int> tuple);

} // namespace toricgp
