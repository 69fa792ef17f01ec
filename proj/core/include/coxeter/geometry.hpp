// geometry.hpp -- the Cayley graph of a Coxeter system as a chamber complex:
// chambers are group elements, panels are right-multiplication edges, the
// group acts on the left. Residues are left cosets of standard parabolics.
// Roots are predicates on chambers via the length function; they are only
// materialized in finite groups, where every claim is checked exhaustively.
#ifndef COXETER_GEOMETRY_HPP
#define COXETER_GEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "coxeter/words.hpp"

namespace coxeter::geometry {

struct Chamber {
  Element element;
  friend bool operator==(const Chamber&, const Chamber&) = default;
};

// A reflection of the system with validated evidence: either a generator, an
// explicit conjugate of a generator, or an element checked exhaustively
// inside the finite parabolic on its support.
class Reflection {
 public:
  static Reflection of_generator(const WordEngine& engine, GenIndex s);
  static Reflection conjugate_of(const WordEngine& engine, GenIndex s, const Element& by);
  // Exhaustive membership test in the reflections of the parabolic on the
  // support of x; throws NotAReflection or CapExceeded.
  static Reflection checked(const WordEngine& engine, const Element& x);

  const Element& element() const { return element_; }

 private:
  explicit Reflection(Element e) : element_(std::move(e)) {}
  Element element_;
};

enum class Side { Positive, Negative };

inline Side opposite(Side s) { return s == Side::Positive ? Side::Negative : Side::Positive; }

// Side of the wall of t containing c: Positive iff left multiplication by t
// increases the length. The identity chamber is always Positive.
Side root_side(const WordEngine& engine, const Reflection& t, const Chamber& c);

// The chamber set representative * <type>.
struct Residue {
  GenSet type;
  Element representative;
};

std::vector<Chamber> chambers_of(const WordEngine& engine, const Residue& r);
bool residue_contains(const WordEngine& engine, const Residue& r, const Chamber& c);

// The gate: the unique chamber d of the residue with
// dist(c,x) = dist(c,d) + dist(d,x) for every x in the residue.
Chamber projection(const WordEngine& engine, const Residue& r, const Chamber& c);

// A panel, keyed by its lower chamber: {lower, lower*letter}.
struct Panel {
  Element lower;
  GenIndex letter;
  friend bool operator==(const Panel&, const Panel&) = default;
};

bool panel_on_wall(const WordEngine& engine, const Reflection& t, const Panel& p);

// Panels of the wall of t lying inside the residue (finite type subset).
std::vector<Panel> wall_panels_in_residue(const WordEngine& engine, const Reflection& t,
                                          const Residue& r);

// All panels of the wall of t; requires the whole group to be enumerable.
std::vector<Panel> wall_panels(const WordEngine& engine, const Reflection& t);

struct SandwichReport {
  // Roots fixed by the construction: alpha belongs to u, beta to v, each
  // described by the side containing the base panel.
  Side alpha_base;  // side of u holding the base panel
  Side beta_base;   // side of v holding the base panel
  std::size_t aligned_panels = 0;  // panels of the wall of t
  std::size_t crossed_panels = 0;  // panels of the wall of u t u
  bool verified = false;
};

// For a rank-2 residue stabilized by pairwise distinct reflections t, u, v
// with uv = vu: every panel on the wall of t lies in (alpha cap beta) or
// (-alpha cap -beta), and every panel on the wall of u t u in the mixed
// regions. Exhaustive over the whole finite group.
SandwichReport check_wall_sandwich(const WordEngine& engine, const Residue& r,
                                   const Reflection& t, const Reflection& u, const Reflection& v);

struct SidednessReport {
  bool one_sided = false;
  Side side = Side::Positive;
  // True when <U, t> closed under the cap (so it is finite). When false the
  // group is presumed infinite; that presumption is reported, not certified.
  bool subgroup_with_t_closed = false;
};

struct FixedResidueReport {
  std::vector<Residue> residues;
  std::optional<SidednessReport> sidedness;
};

// Spherical residues within the ball of the given radius that are stabilized
// by the group generated by U (verified finite by closure under the cap).
// When a reflection t is supplied and <U, t> exceeds the cap, additionally
// reports whether all found residues lie on one side of the wall of t.
FixedResidueReport spherical_residues_fixed_by(const WordEngine& engine,
                                               const std::vector<Element>& u_gens,
                                               std::uint32_t radius,
                                               const std::optional<Reflection>& t,
                                               std::uint64_t cap);

}  // namespace coxeter::geometry

#endif
