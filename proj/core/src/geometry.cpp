#include "coxeter/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coxeter/diagram.hpp"

namespace coxeter::geometry {

namespace {

bool is_involution(const WordEngine& engine, const Element& x) {
  return !x.is_identity() && engine.multiply(x, x).is_identity();
}

}  // namespace

Reflection Reflection::of_generator(const WordEngine& engine, GenIndex s) {
  return Reflection(engine.generator(s));
}

Reflection Reflection::conjugate_of(const WordEngine& engine, GenIndex s, const Element& by) {
  return Reflection(engine.conjugate(engine.generator(s), by));
}

Reflection Reflection::checked(const WordEngine& engine, const Element& x) {
  if (!is_involution(engine, x)) throw NotAReflection();
  if (!engine.is_reflection_in(x.word().support(), x)) throw NotAReflection();
  return Reflection(x);
}

Side root_side(const WordEngine& engine, const Reflection& t, const Chamber& c) {
  Element tc = engine.multiply(t.element(), c.element);
  if (tc.length() == c.element.length()) throw Error("wall action preserved the length");
  return tc.length() > c.element.length() ? Side::Positive : Side::Negative;
}

std::vector<Chamber> chambers_of(const WordEngine& engine, const Residue& r) {
  auto grp = engine.group(r.type);
  std::vector<Chamber> out;
  out.reserve(grp->size());
  for (std::uint32_t v = 0; v < grp->size(); ++v)
    out.push_back({engine.multiply(r.representative, engine.wrap(*grp, v))});
  return out;
}

bool residue_contains(const WordEngine& engine, const Residue& r, const Chamber& c) {
  // c in rep*<J> iff rep^-1 c has support inside J.
  Element g = engine.multiply(engine.inverse(r.representative), c.element);
  return g.word().support().subset_of(r.type);
}

Chamber projection(const WordEngine& engine, const Residue& r, const Chamber& c) {
  auto grp = engine.group(r.type);
  // dist(c, rep*x) = length(c^-1 rep x)
  Element base = engine.multiply(engine.inverse(c.element), r.representative);
  std::uint32_t best_len = 0;
  std::uint32_t best_vertex = 0;
  bool first = true;
  for (std::uint32_t v = 0; v < grp->size(); ++v) {
    Element d = engine.multiply(base, engine.wrap(*grp, v));
    if (first || d.length() < best_len) {
      best_len = d.length();
      best_vertex = v;
      first = false;
    }
  }
  return {engine.multiply(r.representative, engine.wrap(*grp, best_vertex))};
}

bool panel_on_wall(const WordEngine& engine, const Reflection& t, const Panel& p) {
  // t fixes {c, c*s} iff t*c = c*s.
  Element upper = engine.multiply(p.lower, engine.generator(p.letter));
  return engine.multiply(t.element(), p.lower) == upper;
}

std::vector<Panel> wall_panels_in_residue(const WordEngine& engine, const Reflection& t,
                                          const Residue& r) {
  std::vector<Panel> out;
  for (const Chamber& c : chambers_of(engine, r)) {
    r.type.for_each([&](GenIndex j) {
      Element upper = engine.multiply(c.element, engine.generator(j));
      if (upper.length() < c.element.length()) return;  // keyed by the lower chamber
      Panel p{c.element, j};
      if (panel_on_wall(engine, t, p)) out.push_back(p);
    });
  }
  return out;
}

std::vector<Panel> wall_panels(const WordEngine& engine, const Reflection& t) {
  auto grp = engine.group(engine.matrix().full_set());
  std::vector<Panel> out;
  for (std::uint32_t v = 0; v < grp->size(); ++v) {
    Element c = engine.wrap(*grp, v);
    for (GenIndex j = 0; j < engine.matrix().rank(); ++j) {
      if (grp->length(grp->apply(v, j)) < grp->length(v)) continue;
      Panel p{c, j};
      if (panel_on_wall(engine, t, p)) out.push_back(p);
    }
  }
  return out;
}

SandwichReport check_wall_sandwich(const WordEngine& engine, const Residue& r,
                                   const Reflection& t, const Reflection& u,
                                   const Reflection& v) {
  if (r.type.count() != 2) throw HypothesisViolated("residue is not of rank 2");
  const Element &te = t.element(), &ue = u.element(), &ve = v.element();
  if (te == ue || te == ve || ue == ve)
    throw HypothesisViolated("reflections are not pairwise distinct");
  if (engine.multiply(ue, ve) != engine.multiply(ve, ue))
    throw HypothesisViolated("u and v do not commute");
  auto stabilizes = [&](const Element& g) {
    Element conj = engine.multiply(engine.multiply(engine.inverse(r.representative), g),
                                   r.representative);
    return conj.word().support().subset_of(r.type);
  };
  if (!stabilizes(te) || !stabilizes(ue) || !stabilizes(ve))
    throw HypothesisViolated("a reflection does not stabilize the residue");

  std::vector<Panel> base = wall_panels_in_residue(engine, t, r);
  if (base.empty()) throw HypothesisViolated("the wall of t has no panel in the residue");

  auto panel_side = [&](const Reflection& w, const Panel& p) {
    Side lower = root_side(engine, w, {p.lower});
    Side upper = root_side(engine, w, {engine.multiply(p.lower, engine.generator(p.letter))});
    if (lower != upper) throw Error("panel split by a wall it does not lie on");
    return lower;
  };

  SandwichReport report;
  report.alpha_base = panel_side(u, base.front());
  report.beta_base = panel_side(v, base.front());

  for (const Panel& p : wall_panels(engine, t)) {
    Side su = panel_side(u, p);
    Side sv = panel_side(v, p);
    bool aligned = (su == report.alpha_base && sv == report.beta_base) ||
                   (su == opposite(report.alpha_base) && sv == opposite(report.beta_base));
    if (!aligned) return report;  // verified stays false
    ++report.aligned_panels;
  }

  Reflection utu =
      Reflection::checked(engine, engine.conjugate(te, ue));
  for (const Panel& p : wall_panels(engine, utu)) {
    Side su = panel_side(u, p);
    Side sv = panel_side(v, p);
    bool crossed = (su == report.alpha_base && sv == opposite(report.beta_base)) ||
                   (su == opposite(report.alpha_base) && sv == report.beta_base);
    if (!crossed) return report;
    ++report.crossed_panels;
  }

  report.verified = true;
  return report;
}

FixedResidueReport spherical_residues_fixed_by(const WordEngine& engine,
                                               const std::vector<Element>& u_gens,
                                               std::uint32_t radius,
                                               const std::optional<Reflection>& t,
                                               std::uint64_t cap) {
  const CoxeterMatrix& m = engine.matrix();

  // Closure of <U> under the cap; CapExceeded signals a non-finite input.
  std::set<Element> closure;
  {
    std::vector<Element> frontier;
    closure.insert(engine.identity());
    frontier.push_back(engine.identity());
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (const Element& g : frontier)
        for (const Element& gen : u_gens) {
          Element h = engine.multiply(g, gen);
          if (closure.insert(h).second) {
            if (closure.size() > cap) throw CapExceeded(cap, "subgroup closure cap exceeded");
            next.push_back(h);
          }
        }
      frontier = std::move(next);
    }
  }

  // Ball of the given radius.
  std::set<Element> ball;
  std::vector<Element> frontier{engine.identity()};
  ball.insert(engine.identity());
  for (std::uint32_t layer = 0; layer < radius; ++layer) {
    std::vector<Element> next;
    for (const Element& c : frontier)
      for (GenIndex j = 0; j < m.rank(); ++j) {
        Element d = engine.multiply(c, engine.generator(j));
        if (d.length() == c.length() + 1 && ball.insert(d).second) next.push_back(d);
      }
    frontier = std::move(next);
  }

  // Spherical subsets with their longest-element lengths.
  std::vector<std::pair<GenSet, std::uint32_t>> spherical_types;
  const std::uint64_t subsets = 1ull << m.rank();
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    GenSet j = GenSet::from_bits(bits);
    auto order = spherical_subset_order(m, j);
    if (!order || *order > cap) continue;
    auto grp = engine.group(j, cap);
    spherical_types.push_back({j, grp->length(grp->longest())});
  }

  FixedResidueReport report;
  std::set<std::pair<std::uint64_t, Word>> seen;
  for (const Element& c : ball) {
    for (const auto& [j, diameter] : spherical_types) {
      // Gate of the coset c<J>: descend while possible.
      Element gate = c;
      bool descended = true;
      while (descended) {
        descended = false;
        j.for_each([&](GenIndex g) {
          if (descended) return;
          Element down = engine.multiply(gate, engine.generator(g));
          if (down.length() < gate.length()) {
            gate = down;
            descended = true;
          }
        });
      }
      if (gate.length() + diameter > radius) continue;  // residue not inside the ball
      if (!seen.insert({j.bits(), gate.word()}).second) continue;

      bool fixed = true;
      for (const Element& gen : u_gens) {
        // gen * gate <J> = gate <J>  iff  gate^-1 gen gate lies in <J>.
        Element conj = engine.multiply(engine.multiply(engine.inverse(gate), gen), gate);
        if (!conj.word().support().subset_of(j)) {
          fixed = false;
          break;
        }
      }
      if (fixed) report.residues.push_back({j, gate});
    }
  }

  if (t) {
    // Whether <U, t> closes under the cap. When it does not, the group is
    // presumed infinite and the sidedness claim applies; the presumption
    // itself is flagged, never asserted.
    bool closed = true;
    try {
      std::vector<Element> gens = u_gens;
      gens.push_back(t->element());
      std::set<Element> cl{engine.identity()};
      std::vector<Element> fr{engine.identity()};
      while (!fr.empty()) {
        std::vector<Element> next;
        for (const Element& g : fr)
          for (const Element& gen : gens) {
            Element h = engine.multiply(g, gen);
            if (cl.insert(h).second) {
              if (cl.size() > cap) throw CapExceeded(cap);
              next.push_back(h);
            }
          }
        fr = std::move(next);
      }
    } catch (const CapExceeded&) {
      closed = false;
    }

    SidednessReport sided;
    sided.subgroup_with_t_closed = closed;
    bool first = true;
    sided.one_sided = true;
    for (const Residue& res : report.residues) {
      for (const Chamber& c : chambers_of(engine, res)) {
        Side s = root_side(engine, *t, c);
        if (first) {
          sided.side = s;
          first = false;
        } else if (s != sided.side) {
          sided.one_sided = false;
        }
      }
    }
    report.sidedness = sided;
  }

  return report;
}

}  // namespace coxeter::geometry
