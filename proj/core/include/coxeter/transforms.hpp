// transforms.hpp -- rewrites of the generating set expressed as explicit
// words: replacing s by s*rho, twisting a block of generators through rho,
// and blowing the pair {s, b} down to a single new generator. Every derived
// matrix entry carries its evidence: enumerated inside a finite parabolic,
// certified infinite by a named rule, or left above the cap.
#ifndef COXETER_TRANSFORMS_HPP
#define COXETER_TRANSFORMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "coxeter/intrinsic.hpp"
#include "coxeter/words.hpp"

namespace coxeter::transforms {

struct DerivedOrder {
  OrderResult order;
  std::string provenance;  // "input", "enumeration <subset>", "rule:R1", "rule:R2", "twist"
};

class GeneratingSet {
 public:
  GeneratingSet() = default;

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Word>& words() const { return words_; }
  const Word& word_of(std::size_t i) const { return words_[i]; }
  std::size_t index_of(const std::string& name) const;

  const DerivedOrder& entry(std::size_t i, std::size_t j) const {
    return entries_[i * names_.size() + j];
  }

  const std::string& descriptor() const { return descriptor_; }
  const std::vector<Fact>& certificates() const { return certificates_; }

  // Rebuilds a Coxeter matrix from the derived orders; empty when some entry
  // is neither finite nor certified infinite.
  std::optional<CoxeterMatrix> derived_matrix() const;

  friend struct Builder;
  struct Builder {
    std::vector<std::string> names;
    std::vector<Word> words;
    std::vector<DerivedOrder> entries;  // size x size, diagonal finite(1)
    std::string descriptor;
    std::vector<Fact> certificates;
    GeneratingSet finish();
  };

 private:
  std::vector<std::string> names_;
  std::vector<Word> words_;
  std::vector<DerivedOrder> entries_;
  std::string descriptor_;
  std::vector<Fact> certificates_;
};

// Replaces s by s*rho for an s-component of (-1)-type; all other generators
// are kept. Throws ComponentNotMinusOneType.
GeneratingSet s_translation(const WordEngine& engine, GenIndex s, GenSet component);

struct TwistResult {
  bool no_op = false;
  CoxeterMatrix twisted;              // generator order preserved; block renamed
  GeneratingSet new_generators;       // words over the original generators
  GenSet replaced;                    // the block K
  std::vector<Fact> certificates;
};

// Conjugates the block of s-infinity reachable from the finite-order partners
// of b through rho, making the candidate proper. A candidate that is already
// proper yields a no-op result.
TwistResult diagram_twist(const WordEngine& engine, GenIndex s,
                          const intrinsic::BlowDownCandidate& candidate);

// Removes s and b and adds the word s*rho. Requires a proper candidate;
// throws CandidateNotProper otherwise (a diagram twist makes it proper).
GeneratingSet blow_down(const WordEngine& engine, GenIndex s,
                        const intrinsic::BlowDownCandidate& candidate);

struct EliminationOutcome {
  GeneratingSet set;
  std::vector<std::string> steps;
  std::optional<CoxeterMatrix> twisted;  // present when a twist was needed
};

// Full pipeline: s-translation when a (-1)-type s-component exists, otherwise
// twist-if-needed followed by blow-down on the first candidate; empty when s
// is intrinsic.
std::optional<EliminationOutcome> eliminate_reflection(const WordEngine& engine, GenIndex s);

enum class DecompositionCase { I, D, Dbar };

struct DecompositionSummary {
  bool decomposes = false;   // W = A x B with A the order-2 center
  bool b_is_coxeter = false;
  std::optional<SphericalType> b_type;
  std::vector<DecompositionCase> cases;
};

// Table of the nontrivial direct-product decompositions of the irreducible
// finite types.
DecompositionSummary decomposition_case(const SphericalType& t);

}  // namespace coxeter::transforms

#endif
