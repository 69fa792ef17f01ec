// intrinsic.hpp -- decision procedure for a right-angled generator: the
// component analysis of its commuting neighborhood, the two blow-down
// conditions, and the final verdict with machine-checkable certificates.
#ifndef COXETER_INTRINSIC_HPP
#define COXETER_INTRINSIC_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coxeter/diagram.hpp"
#include "coxeter/words.hpp"

namespace coxeter {

// A fact recorded while reaching a verdict; every claim a report makes is
// backed by one of these.
struct Fact {
  std::string kind;
  std::string detail;
};

namespace intrinsic {

struct RightAngledContext {
  GenIndex s;
  GenSet perp;      // commuting generators
  GenSet infinity;  // infinite-order partners
  ComponentDecomposition perp_components;
};

// Partitions the generator set around s. Every label at s must lie in
// {1, 2, inf}; otherwise NotRightAngled is thrown naming the offending pair.
RightAngledContext build_context(const CoxeterMatrix& m, GenIndex s);

// The spherical irreducible components of the commuting neighborhood.
std::vector<Component> s_components(const RightAngledContext& ctx);

struct BlowDownCandidate {
  GenIndex a;
  GenIndex b;  // conjugate of a by the component's longest element
  GenSet component;
  SphericalType component_type;
  bool proper;  // s-infinity contained in b-infinity
};

struct Bdg1Result {
  std::optional<BlowDownCandidate> candidate;
  std::string rejection;  // set when candidate is empty
};

// First condition: the component of a must match the odd dihedral or odd
// fork pattern and conjugation by its longest element must move a. The
// conjugate is computed by enumeration of the component.
Bdg1Result check_bdg1(const WordEngine& engine, const RightAngledContext& ctx, GenIndex a);

struct Bdg2Result {
  bool satisfied;
  // On failure, a chain in s-infinity with finite consecutive orders that
  // meets both a finite-order partner of a and one of b.
  std::vector<GenIndex> witness_path;
};

// Second condition, in component form: every connected component of the
// finite-order graph on s-infinity must lie in a-infinity or in b-infinity.
// Equivalent to the chain condition by transitivity.
Bdg2Result check_bdg2(const CoxeterMatrix& m, const RightAngledContext& ctx, GenIndex a,
                      GenIndex b);

std::vector<BlowDownCandidate> find_blowdown_generators(const WordEngine& engine,
                                                        const RightAngledContext& ctx);

struct MinusOneComponentReason {
  GenSet component;
  SphericalType type;
};

struct BlowDownReason {
  BlowDownCandidate candidate;
};

struct IntrinsicVerdict {
  bool is_intrinsic = false;
  std::variant<std::monostate, MinusOneComponentReason, BlowDownReason> reason;
  std::vector<Fact> certificates;

  const MinusOneComponentReason* minus_one() const {
    return std::get_if<MinusOneComponentReason>(&reason);
  }
  const BlowDownReason* blow_down() const { return std::get_if<BlowDownReason>(&reason); }
};

// The decision: not intrinsic when some s-component carries a central longest
// element, or when a blow-down generator exists; intrinsic otherwise.
IntrinsicVerdict decide_intrinsic(const WordEngine& engine, GenIndex s);

// Specialization for systems in which every generator is right-angled: s is
// intrinsic iff the commuting neighborhood has no rank-one direct factor.
bool right_angled_system_criterion(const CoxeterMatrix& m, GenIndex s);

}  // namespace intrinsic
}  // namespace coxeter

#endif
