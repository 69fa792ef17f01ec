// diagram.hpp -- diagram file parsing, irreducible components, recognition of
// the finite types and the classification tables driven by them.
#ifndef COXETER_DIAGRAM_HPP
#define COXETER_DIAGRAM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxeter/matrix.hpp"

namespace coxeter {

// Diagram file format (line oriented, '#' starts a comment):
//   generators <name> <name> ...     exactly once, first payload line
//   default <int>=2 | inf>           optional, once
//   edge <name> <name> <int>=2|inf>  any number, distinct known names
// Unlisted distinct pairs get the default (2 when absent).
CoxeterMatrix parse_diagram(std::string_view text);

std::string render_diagram(const CoxeterMatrix& m);

enum class Family : std::uint8_t { A, C, D, E, F, H, I2 };

// Canonical type of an irreducible spherical system. Coincidences resolve to
// A2 (not I2(3)), C2 (not I2(4)) and A3 (not D3); I2 labels start at 5 and D
// ranks at 4.
struct SphericalType {
  Family family;
  std::uint32_t rank;
  std::uint32_t edge_label = 0;  // only for I2

  friend bool operator==(const SphericalType&, const SphericalType&) = default;
  std::string to_string() const;
};

std::uint64_t spherical_order(const SphericalType& t);

struct Component {
  GenSet members;
  std::optional<SphericalType> type;  // nullopt: not spherical

  bool spherical() const { return type.has_value(); }
};

struct ComponentDecomposition {
  GenSet subset;
  std::vector<Component> components;  // ordered by smallest member index
};

// Connected components of the graph on J whose edges are the pairs with
// m != 2 (infinity counts as an edge), each classified.
ComponentDecomposition irreducible_components(const CoxeterMatrix& m, GenSet j);

// Classification of a single irreducible component by structural matching of
// the diagram (degrees and label patterns); nullopt means not spherical.
// Throws NotIrreducible when the subset splits.
std::optional<SphericalType> classify_spherical(const CoxeterMatrix& m, GenSet component);

// True when the whole subset generates a finite group, i.e. every component
// is spherical.
bool is_spherical_subset(const CoxeterMatrix& m, GenSet j);

// Product of the component orders; nullopt when some component is not
// spherical or the product overflows.
std::optional<std::uint64_t> spherical_subset_order(const CoxeterMatrix& m, GenSet j);

// Longest element central, per irreducible type.
bool is_minus_one_type(const SphericalType& t);

// Whether every generator of an irreducible spherical system of this type
// stays a reflection under every Coxeter generating set of the finite group.
enum class FiniteIntrinsic { Yes, No };
FiniteIntrinsic spherical_intrinsic_table(const SphericalType& t);

// Pattern predicates that see through the canonical coincidences: the odd
// dihedral pattern accepts A2, the odd fork pattern accepts A3.
bool matches_odd_dihedral(const SphericalType& t);   // I2(2k+1), k >= 1
bool matches_odd_fork(const SphericalType& t);       // D(2k+1), k >= 1
bool matches_i2_multiple_of_4(const SphericalType& t);   // I2(4k), includes C2
bool matches_i2_even_not_4k(const SphericalType& t);     // I2(4k+2), k >= 1
bool matches_odd_c(const SphericalType& t);              // C(2k+1), k >= 1

struct Neighborhoods {
  GenSet perp;      // commuting generators
  GenSet infinity;  // infinite-order partners
};
Neighborhoods neighborhoods(const CoxeterMatrix& m, GenIndex s);

// Connected components of the graph with edges at odd finite labels;
// generators in one class are conjugate.
std::vector<GenSet> odd_classes(const CoxeterMatrix& m);
bool odd_class_is_singleton(const CoxeterMatrix& m, GenIndex s);

}  // namespace coxeter

#endif
