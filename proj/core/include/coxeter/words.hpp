// words.hpp -- exact computation in a Coxeter group: reduced words, canonical
// normal forms, enumeration of finite parabolic subgroups, longest elements,
// centers and product orders under caps.
//
// Two engines sit behind the WordEngine facade:
//   * reduce() rewrites words by exhaustive braid moves plus ss-cancellation
//     (complete by Tits' theorem), memoized per matrix;
//   * EnumeratedGroup closes a finite parabolic under right multiplication,
//     identifying vertices by walking the dihedral circuits of the defining
//     relations.
// The two routes are independent and are cross-checked in the test suite.
#ifndef COXETER_WORDS_HPP
#define COXETER_WORDS_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "coxeter/matrix.hpp"

namespace coxeter {

struct Word {
  std::vector<GenIndex> letters;

  Word() = default;
  explicit Word(std::vector<GenIndex> l) : letters(std::move(l)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  GenSet support() const {
    GenSet s;
    for (GenIndex g : letters) s = s.with(g);
    return s;
  }

  Word reversed() const { return Word(std::vector<GenIndex>(letters.rbegin(), letters.rend())); }

  friend Word operator+(const Word& a, const Word& b) {
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& a, const Word& b) { return a.letters < b.letters; }

  // Space-separated generator names.
  static Word parse(const CoxeterMatrix& m, std::string_view text);
  std::string to_string(const CoxeterMatrix& m) const;
};

// A group element in canonical form: the lexicographically least reduced word
// under the fixed generator order. Two elements are equal iff their normal
// forms are identical.
class Element {
 public:
  Element() = default;

  const Word& word() const { return nf_; }
  std::uint32_t length() const { return static_cast<std::uint32_t>(nf_.size()); }
  bool is_identity() const { return nf_.empty(); }
  std::uint64_t matrix_fingerprint() const { return fp_; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.fp_ == b.fp_ && a.nf_ == b.nf_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  friend bool operator<(const Element& a, const Element& b) {
    if (a.nf_.size() != b.nf_.size()) return a.nf_.size() < b.nf_.size();
    return a.nf_.letters < b.nf_.letters;
  }

  std::string to_string(const CoxeterMatrix& m) const { return nf_.to_string(m); }

  // Trusted constructor; the word must already be the canonical normal form.
  static Element from_normal_form(Word nf, std::uint64_t fingerprint) {
    Element e;
    e.nf_ = std::move(nf);
    e.fp_ = fingerprint;
    return e;
  }

 private:
  Word nf_;
  std::uint64_t fp_ = 0;
};

struct OrderResult {
  enum class Kind { Finite, AboveCap, CertifiedInfinite };
  Kind kind = Kind::Finite;
  std::uint64_t value = 0;  // the order, or the cap that was hit
  std::string certificate;  // rule id when certified infinite

  static OrderResult finite(std::uint64_t k) { return {Kind::Finite, k, {}}; }
  static OrderResult above_cap(std::uint64_t cap) { return {Kind::AboveCap, cap, {}}; }
  static OrderResult certified_infinite(std::string rule) {
    return {Kind::CertifiedInfinite, 0, std::move(rule)};
  }

  bool is_finite() const { return kind == Kind::Finite; }
  std::string to_string() const;
  friend bool operator==(const OrderResult&, const OrderResult&) = default;
};

// Complete right-Cayley closure of a finite standard parabolic. Vertices are
// dense ids in breadth-first creation order; vertex 0 is the identity and the
// layer of a vertex equals its length. Immutable after build; lazily derived
// tables are internally synchronized.
class EnumeratedGroup {
 public:
  static std::shared_ptr<const EnumeratedGroup> build(const CoxeterMatrix& m, GenSet subset,
                                                      std::uint64_t cap);

  GenSet subset() const { return subset_; }
  std::size_t local_rank() const { return gens_.size(); }
  const std::vector<GenIndex>& generators() const { return gens_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(length_.size()); }
  std::uint64_t matrix_fingerprint() const { return fingerprint_; }

  std::uint32_t length(std::uint32_t v) const { return length_[v]; }

  // Right multiplication by a generator (global index; must lie in subset).
  std::uint32_t apply(std::uint32_t v, GenIndex g) const { return mult_[v * stride_ + local(g)]; }
  std::uint32_t apply_word(std::uint32_t v, const Word& w) const;
  std::uint32_t vertex(const Word& w) const { return apply_word(0, w); }

  // Left multiplication by a generator.
  std::uint32_t left_apply(GenIndex g, std::uint32_t v) const;

  std::uint32_t multiply(std::uint32_t u, std::uint32_t v) const;
  std::uint32_t inverse(std::uint32_t v) const;
  std::uint32_t conjugate(std::uint32_t x, std::uint32_t by) const;  // by^-1 x by
  std::uint32_t element_order(std::uint32_t v) const;

  // Lexicographically least reduced word (global letters).
  const Word& normal_form(std::uint32_t v) const;

  // The unique element of maximal length.
  std::uint32_t longest() const;

  // Elements commuting with every generator of the subset.
  const std::vector<std::uint32_t>& center() const;

  // All conjugates of generators, sorted by vertex id.
  const std::vector<std::uint32_t>& reflections() const;
  bool is_reflection(std::uint32_t v) const;

  EnumeratedGroup(const EnumeratedGroup&) = delete;
  EnumeratedGroup& operator=(const EnumeratedGroup&) = delete;

 private:
  EnumeratedGroup() = default;
  struct Lazy;

  int local(GenIndex g) const;

  GenSet subset_;
  std::vector<GenIndex> gens_;  // sorted global indices
  std::size_t stride_ = 0;
  std::uint64_t fingerprint_ = 0;
  std::vector<Order> local_order_;      // stride x stride
  std::vector<std::uint32_t> mult_;     // size * stride
  std::vector<std::uint32_t> length_;
  std::vector<std::uint32_t> parent_;   // discovery vertex
  std::vector<std::uint8_t> parent_letter_;  // local letter
  std::array<std::int8_t, 64> local_of_{};
  std::shared_ptr<Lazy> lazy_;
};

struct EngineLimits {
  std::uint64_t enumeration_cap = 200000;  // max elements of an enumerated parabolic
  std::uint64_t order_cap = 1000;          // default cap for product orders
  std::uint64_t braid_budget = 4000000;    // words visited per braid-class search
};

// Per-matrix computation session: owns the matrix, the rewriting memo and a
// cache of enumerated parabolics. Thread safe; all returned values are
// immutable.
class WordEngine {
 public:
  explicit WordEngine(CoxeterMatrix m, EngineLimits limits = {});
  ~WordEngine();
  WordEngine(WordEngine&&) noexcept;
  WordEngine& operator=(WordEngine&&) noexcept;

  const CoxeterMatrix& matrix() const;
  const EngineLimits& limits() const;

  Element identity() const;
  Element generator(GenIndex g) const;

  // Canonical normal form by braid-move rewriting. Idempotent; constant on
  // braid-equivalence classes.
  Element reduce(const Word& w) const;

  // Canonical normal form by the fastest available route (enumerated
  // parabolic when the support closes under the cap, rewriting otherwise).
  Element element(const Word& w) const;

  Element multiply(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  Element conjugate(const Element& x, const Element& by) const;  // by^-1 x by

  // Enumerates the standard parabolic on the subset. group() throws
  // CapExceeded; try_group() returns nullptr instead (the failure is cached).
  std::shared_ptr<const EnumeratedGroup> group(GenSet subset) const;
  std::shared_ptr<const EnumeratedGroup> group(GenSet subset, std::uint64_t cap) const;
  std::shared_ptr<const EnumeratedGroup> try_group(GenSet subset) const;

  Element longest_element(GenSet subset) const;
  std::vector<Element> center(GenSet subset) const;

  OrderResult product_order(const Element& x, const Element& y) const;
  OrderResult product_order(const Element& x, const Element& y, std::uint64_t cap) const;

  // Exhaustive test that x is a conjugate of a generator inside the finite
  // parabolic on the subset. x must lie in that parabolic.
  bool is_reflection_in(GenSet subset, const Element& x) const;

  // (-1)^(number of s letters); requires the odd class of s to be {s}.
  int parity_character(GenIndex s, const Word& w) const;

  Element wrap(const EnumeratedGroup& g, std::uint32_t v) const;
  std::uint32_t vertex_in(const EnumeratedGroup& g, const Element& x) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace coxeter

#endif
