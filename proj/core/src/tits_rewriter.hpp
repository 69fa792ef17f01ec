// Internal: memoized word reduction by exhaustive braid moves and
// ss-cancellation. Complete by Tits' theorem: a word is reduced iff no member
// of its braid class carries an adjacent equal pair, and all reduced words of
// an element form a single braid class.
#ifndef COXETER_SRC_TITS_REWRITER_HPP
#define COXETER_SRC_TITS_REWRITER_HPP

#include <mutex>
#include <string>
#include <unordered_map>

#include "coxeter/words.hpp"

namespace coxeter::detail {

class TitsRewriter {
 public:
  TitsRewriter(const CoxeterMatrix& m, std::uint64_t budget) : m_(m), budget_(budget) {}

  // Canonical (lex-least reduced) word for the element of w.
  Word reduce(const Word& w) const;

 private:
  // Normal form of nf * s where nf is already a normal form.
  Word append(const Word& nf, GenIndex s) const;

  // Lex-least member of the braid class once no cancellation remains; each
  // found adjacent equal pair is cancelled and the search restarts.
  Word normalize_class(Word w, std::uint64_t& budget) const;

  const CoxeterMatrix& m_;
  std::uint64_t budget_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, Word> memo_;
};

}  // namespace coxeter::detail

#endif
