// matrix.hpp -- Coxeter matrices, order entries and generator subsets.
#ifndef COXETER_MATRIX_HPP
#define COXETER_MATRIX_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxeter/errors.hpp"

namespace coxeter {

using GenIndex = std::uint32_t;

// Entry of a Coxeter matrix: an integer >= 1 or infinity. Infinity is a
// distinguished value, never a large integer; arithmetic helpers stay total
// over {1, 2, ..., inf}.
class Order {
 public:
  constexpr Order() : v_(kInf) {}

  static constexpr Order infinity() { return Order(); }
  static constexpr Order finite(std::uint32_t m) { return Order(m); }

  constexpr bool is_finite() const { return v_ != kInf; }
  constexpr std::uint32_t value() const { return v_; }  // only when finite

  friend constexpr bool operator==(Order a, Order b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Order a, Order b) { return a.v_ != b.v_; }

  std::string to_string() const { return is_finite() ? std::to_string(v_) : "inf"; }

 private:
  explicit constexpr Order(std::uint32_t v) : v_(v) {}
  static constexpr std::uint32_t kInf = 0xFFFFFFFFu;
  std::uint32_t v_;
};

struct GeneratorId {
  std::string name;
  GenIndex index;
};

// Subset of the generator set as a bitmask. Diagrams are desk scale; the
// rank is capped at 64.
class GenSet {
 public:
  constexpr GenSet() : bits_(0) {}
  static constexpr GenSet all(std::size_t rank) {
    return GenSet(rank >= 64 ? ~0ull : ((1ull << rank) - 1));
  }
  static constexpr GenSet single(GenIndex i) { return GenSet(1ull << i); }
  static constexpr GenSet from_bits(std::uint64_t bits) { return GenSet(bits); }

  constexpr bool contains(GenIndex i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(__builtin_popcountll(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr GenSet with(GenIndex i) const { return GenSet(bits_ | (1ull << i)); }
  constexpr GenSet without(GenIndex i) const { return GenSet(bits_ & ~(1ull << i)); }

  friend constexpr GenSet operator|(GenSet a, GenSet b) { return GenSet(a.bits_ | b.bits_); }
  friend constexpr GenSet operator&(GenSet a, GenSet b) { return GenSet(a.bits_ & b.bits_); }
  friend constexpr GenSet operator-(GenSet a, GenSet b) { return GenSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(GenSet a, GenSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(GenSet a, GenSet b) { return a.bits_ != b.bits_; }
  constexpr bool subset_of(GenSet other) const { return (bits_ & ~other.bits_) == 0; }

  GenIndex min() const { return static_cast<GenIndex>(__builtin_ctzll(bits_)); }  // nonempty

  // Iterates set members in increasing index order.
  template <typename F>
  void for_each(F&& f) const {
    std::uint64_t b = bits_;
    while (b) {
      f(static_cast<GenIndex>(__builtin_ctzll(b)));
      b &= b - 1;
    }
  }

  std::vector<GenIndex> to_vector() const {
    std::vector<GenIndex> out;
    out.reserve(count());
    for_each([&](GenIndex i) { out.push_back(i); });
    return out;
  }

 private:
  explicit constexpr GenSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_;
};

// Symmetric matrix of product orders over a fixed, ordered generator list.
// m(s,s) = 1; m(s,t) >= 2 for distinct s,t. Immutable after construction.
class CoxeterMatrix {
 public:
  CoxeterMatrix(std::vector<std::string> names,
                std::vector<std::pair<std::pair<GenIndex, GenIndex>, Order>> edges,
                Order default_order = Order::finite(2));

  std::size_t rank() const { return names_.size(); }
  GenSet full_set() const { return GenSet::all(rank()); }

  Order order(GenIndex i, GenIndex j) const { return entries_[i * rank() + j]; }
  const std::string& name(GenIndex i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  bool has_generator(const std::string& name) const { return index_.count(name) != 0; }
  GenIndex index_of(const std::string& name) const;

  // Stable fingerprint of (names, orders); elements carry it so that values
  // from different matrices cannot be mixed silently.
  std::uint64_t fingerprint() const { return fingerprint_; }

  std::string set_to_string(GenSet set) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, GenIndex> index_;
  std::vector<Order> entries_;
  std::uint64_t fingerprint_;
};

}  // namespace coxeter

#endif
