// oracle.hpp -- brute-force ground truth on finite instances. Everything here
// is an exhaustive search with a hard cap and no randomization, and the
// module depends only on the word machinery so its answers stay independent
// of the decision and transformation code they are used to check.
#ifndef COXETER_ORACLE_HPP
#define COXETER_ORACLE_HPP

#include <string>
#include <vector>

#include "coxeter/words.hpp"

namespace coxeter::oracle {

enum class Status { Verified, Refuted, Skipped };

struct VerificationReport {
  std::string claim;
  Status status = Status::Skipped;
  std::string evidence;  // counts for Verified, a concrete witness for Refuted
};

std::string to_string(Status s);

// Checks that named words form a Coxeter generating set of the expected type
// inside the finite full group: pairwise product orders match the expected
// matrix, the words generate the whole group, and the group order equals the
// order formula of the expected type.
VerificationReport verify_coxeter_generating_set(
    const WordEngine& engine, const std::vector<std::pair<std::string, Word>>& generators,
    const CoxeterMatrix& expected, std::uint64_t cap);

// All conjugates of generators in the finite full group.
std::vector<Element> reflection_set(const WordEngine& engine, std::uint64_t cap);

// A parabolic subgroup presented as conjugator^-1 <type> conjugator.
struct StandardParabolic {
  GenSet type;
  Element conjugator;
};

// The intersection of all parabolic subgroups containing X, computed by
// enumerating every (subset, coset) pair of the finite full group.
StandardParabolic parabolic_closure(const WordEngine& engine, const std::vector<Element>& x,
                                    std::uint64_t cap);

// A subset of generators whose longest element is central together with a
// conjugator carrying the involution onto that longest element; the size of
// the subset is the rank invariant of the involution.
struct MinusOneForm {
  GenSet subset;
  Element conjugator;  // conjugator^-1 r conjugator = longest element of subset
};

MinusOneForm minus_one_form(const WordEngine& engine, const Element& r, std::uint64_t cap);

// Exhaustively computes the normalizer of the standard parabolic on J inside
// the finite full group and compares it with <J> x <J-perp>. The hypothesis
// (every generator outside J that spans a finite group with J commutes with
// J) is machine-checked first.
VerificationReport verify_normalizer_formula(const WordEngine& engine, GenSet j,
                                             std::uint64_t cap);

}  // namespace coxeter::oracle

#endif
