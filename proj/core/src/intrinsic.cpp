#include "coxeter/intrinsic.hpp"

#include <algorithm>

namespace coxeter::intrinsic {

RightAngledContext build_context(const CoxeterMatrix& m, GenIndex s) {
  if (s >= m.rank()) throw UnknownGenerator("index out of range");
  RightAngledContext ctx;
  ctx.s = s;
  for (GenIndex t = 0; t < m.rank(); ++t) {
    if (t == s) continue;
    Order o = m.order(s, t);
    if (o == Order::finite(2)) ctx.perp = ctx.perp.with(t);
    else if (!o.is_finite()) ctx.infinity = ctx.infinity.with(t);
    else throw NotRightAngled(m.name(s), m.name(t), o.to_string());
  }
  ctx.perp_components = irreducible_components(m, ctx.perp);
  return ctx;
}

std::vector<Component> s_components(const RightAngledContext& ctx) {
  std::vector<Component> out;
  for (const Component& c : ctx.perp_components.components)
    if (c.spherical()) out.push_back(c);
  return out;
}

Bdg1Result check_bdg1(const WordEngine& engine, const RightAngledContext& ctx, GenIndex a) {
  const CoxeterMatrix& m = engine.matrix();
  if (!ctx.perp.contains(a))
    return {std::nullopt, m.name(a) + " does not commute with " + m.name(ctx.s)};
  const Component* comp = nullptr;
  for (const Component& c : ctx.perp_components.components)
    if (c.members.contains(a)) comp = &c;
  if (!comp->spherical())
    return {std::nullopt, "component " + m.set_to_string(comp->members) + " is not spherical"};
  const SphericalType& type = *comp->type;
  if (!matches_odd_dihedral(type) && !matches_odd_fork(type))
    return {std::nullopt, "component type " + type.to_string() +
                              " matches neither the odd dihedral nor the odd fork pattern"};

  auto grp = engine.group(comp->members);
  std::uint32_t rho = grp->longest();
  std::uint32_t image = grp->conjugate(grp->vertex(Word{{a}}), rho);
  const Word& nf = grp->normal_form(image);
  if (nf.size() != 1) throw Error("conjugation by the longest element did not preserve the subset");
  GenIndex b = nf.letters[0];
  if (b == a)
    return {std::nullopt,
            "conjugation by the longest element of " + m.set_to_string(comp->members) +
                " fixes " + m.name(a)};

  GenSet b_infinity;
  for (GenIndex t = 0; t < m.rank(); ++t)
    if (t != b && !m.order(b, t).is_finite()) b_infinity = b_infinity.with(t);

  BlowDownCandidate cand;
  cand.a = a;
  cand.b = b;
  cand.component = comp->members;
  cand.component_type = type;
  cand.proper = ctx.infinity.subset_of(b_infinity);
  return {cand, {}};
}

Bdg2Result check_bdg2(const CoxeterMatrix& m, const RightAngledContext& ctx, GenIndex a,
                      GenIndex b) {
  GenSet remaining = ctx.infinity;
  auto infinite_with = [&](GenIndex x, GenIndex u) { return !m.order(x, u).is_finite(); };

  while (!remaining.empty()) {
    GenIndex seed = remaining.min();
    GenSet comp = GenSet::single(seed);
    GenSet frontier = comp;
    while (!frontier.empty()) {
      GenSet next;
      frontier.for_each([&](GenIndex u) {
        ctx.infinity.for_each([&](GenIndex v) {
          if (!comp.contains(v) && m.order(u, v).is_finite()) next = next.with(v);
        });
      });
      comp = comp | next;
      frontier = next;
    }
    remaining = remaining - comp;

    bool in_a = true, in_b = true;
    comp.for_each([&](GenIndex u) {
      if (!infinite_with(a, u)) in_a = false;
      if (!infinite_with(b, u)) in_b = false;
    });
    if (in_a || in_b) continue;

    // Witness: a finite-order chain from a generator with finite order
    // against b to one with finite order against a.
    GenIndex from = 64, to = 64;
    comp.for_each([&](GenIndex u) {
      if (from == 64 && !infinite_with(b, u)) from = u;
      if (to == 64 && !infinite_with(a, u)) to = u;
    });
    // Shortest path inside the component.
    std::vector<GenIndex> order;
    std::vector<GenIndex> parent(64, 64);
    order.push_back(from);
    parent[from] = from;
    for (std::size_t head = 0; head < order.size(); ++head) {
      GenIndex u = order[head];
      comp.for_each([&](GenIndex v) {
        if (parent[v] == 64 && m.order(u, v).is_finite() && u != v) {
          parent[v] = u;
          order.push_back(v);
        }
      });
    }
    std::vector<GenIndex> path;
    for (GenIndex cur = to; cur != from; cur = parent[cur]) path.push_back(cur);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return {false, path};
  }
  return {true, {}};
}

std::vector<BlowDownCandidate> find_blowdown_generators(const WordEngine& engine,
                                                        const RightAngledContext& ctx) {
  std::vector<BlowDownCandidate> out;
  ctx.perp.for_each([&](GenIndex a) {
    Bdg1Result one = check_bdg1(engine, ctx, a);
    if (!one.candidate) return;
    Bdg2Result two = check_bdg2(engine.matrix(), ctx, one.candidate->a, one.candidate->b);
    if (two.satisfied) out.push_back(*one.candidate);
  });
  return out;
}

IntrinsicVerdict decide_intrinsic(const WordEngine& engine, GenIndex s) {
  const CoxeterMatrix& m = engine.matrix();
  RightAngledContext ctx = build_context(m, s);
  IntrinsicVerdict verdict;
  verdict.certificates.push_back(
      {"partition", "perp=" + m.set_to_string(ctx.perp) +
                        " infinity=" + m.set_to_string(ctx.infinity)});

  for (const Component& c : s_components(ctx)) {
    verdict.certificates.push_back(
        {"s-component", m.set_to_string(c.members) + " of type " + c.type->to_string() +
                            (is_minus_one_type(*c.type) ? " (central longest element)"
                                                        : " (trivial center)")});
    if (is_minus_one_type(*c.type)) {
      verdict.is_intrinsic = false;
      verdict.reason = MinusOneComponentReason{c.members, *c.type};
      return verdict;
    }
  }

  bool found = false;
  ctx.perp.for_each([&](GenIndex a) {
    if (found) return;
    Bdg1Result one = check_bdg1(engine, ctx, a);
    if (!one.candidate) {
      verdict.certificates.push_back({"bdg1-rejected", m.name(a) + ": " + one.rejection});
      return;
    }
    Bdg2Result two = check_bdg2(m, ctx, one.candidate->a, one.candidate->b);
    if (!two.satisfied) {
      std::string path;
      for (GenIndex u : two.witness_path) path += (path.empty() ? "" : " ") + m.name(u);
      verdict.certificates.push_back(
          {"bdg2-rejected", m.name(a) + " (conjugate " + m.name(one.candidate->b) +
                                "): finite-order chain [" + path + "] escapes both"});
      return;
    }
    verdict.certificates.push_back(
        {"blow-down-generator",
         m.name(a) + " with conjugate " + m.name(one.candidate->b) + ", component type " +
             one.candidate->component_type.to_string() +
             (one.candidate->proper ? ", proper" : ", needs a diagram twist")});
    verdict.is_intrinsic = false;
    verdict.reason = BlowDownReason{*one.candidate};
    found = true;
  });
  if (found) return verdict;

  verdict.is_intrinsic = true;
  verdict.certificates.push_back(
      {"conclusion", "all s-components have trivial center and no blow-down generator exists"});
  return verdict;
}

bool right_angled_system_criterion(const CoxeterMatrix& m, GenIndex s) {
  for (GenIndex t = 0; t < m.rank(); ++t)
    for (GenIndex u = 0; u < m.rank(); ++u) {
      Order o = m.order(t, u);
      if (t != u && o.is_finite() && o.value() != 2) throw SystemNotRightAngled(m.name(t));
    }
  Neighborhoods nb = neighborhoods(m, s);
  bool isolated = false;
  nb.perp.for_each([&](GenIndex t) {
    bool alone = true;
    nb.perp.for_each([&](GenIndex u) {
      if (t != u && m.order(t, u) != Order::finite(2)) alone = false;
    });
    if (alone) isolated = true;
  });
  return !isolated;
}

}  // namespace coxeter::intrinsic
