#include "coxeter/transforms.hpp"

#include <algorithm>

namespace coxeter::transforms {

namespace {

std::string unique_name(const CoxeterMatrix& m, std::string base) {
  while (m.has_generator(base)) base += "_";
  return base;
}

// Rule R2: for an involution r in the commuting neighborhood of s and any u
// with m(s,u) = inf, the product (s r) u has infinite order. The hypotheses
// are verified on the input before the rule may stamp an entry.
bool rule_r2_applies(const WordEngine& engine, const intrinsic::RightAngledContext& ctx,
                     const Word& r, GenIndex u) {
  if (!ctx.infinity.contains(u)) return false;
  if (!r.support().subset_of(ctx.perp)) return false;
  Element e = engine.element(r + r);
  if (!e.is_identity()) return false;
  return !engine.element(r).is_identity();
}

struct EntryTable {
  std::size_t n;
  std::vector<DerivedOrder> entries;

  explicit EntryTable(std::size_t n_) : n(n_) {
    entries.assign(n * n, {OrderResult::finite(1), "diagonal"});
  }
  void set(std::size_t i, std::size_t j, OrderResult o, std::string prov) {
    entries[i * n + j] = {o, prov};
    entries[j * n + i] = {std::move(o), std::move(prov)};
  }
};

OrderResult order_by_enumeration(const WordEngine& engine, GenSet subset, const Word& x,
                                 const Word& y) {
  auto grp = engine.group(subset);
  std::uint32_t v = grp->vertex(x + y);
  return OrderResult::finite(grp->element_order(v));
}

intrinsic::BlowDownCandidate revalidate(const WordEngine& engine,
                                        const intrinsic::RightAngledContext& ctx,
                                        const intrinsic::BlowDownCandidate& candidate) {
  intrinsic::Bdg1Result one = intrinsic::check_bdg1(engine, ctx, candidate.a);
  if (!one.candidate) throw CandidateInvalid(one.rejection);
  if (one.candidate->b != candidate.b)
    throw CandidateInvalid("recorded conjugate does not match the component");
  intrinsic::Bdg2Result two =
      intrinsic::check_bdg2(engine.matrix(), ctx, candidate.a, candidate.b);
  if (!two.satisfied) throw CandidateInvalid("finite-order chain condition fails");
  return *one.candidate;
}

void attach_exclusion_certificates(const WordEngine& engine, GenIndex s, GenSet component,
                                   const Word& srho_word, GeneratingSet::Builder& b) {
  const CoxeterMatrix& m = engine.matrix();
  // Parity of each new generator against the character that is -1 at s.
  for (std::size_t i = 0; i < b.names.size(); ++i) {
    int parity = engine.parity_character(s, b.words[i]);
    b.certificates.push_back(
        {"parity", b.names[i] + " has s-parity " + (parity < 0 ? std::string("-1") : "+1")});
  }
  // Inside the finite parabolic on {s} and the component, s*rho is a central
  // involution of a rank >= 2 subsystem, not a conjugate of a generator.
  GenSet finite_scope = component.with(s);
  Element srho = engine.element(srho_word);
  bool refl = engine.is_reflection_in(finite_scope, srho);
  if (refl) throw Error("replacement word is a reflection of its finite parabolic");
  b.certificates.push_back({"not-a-reflection",
                            "inside " + m.set_to_string(finite_scope) + ", the word '" +
                                srho_word.to_string(m) +
                                "' is not a conjugate of any generator"});
}

}  // namespace

std::size_t GeneratingSet::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw UnknownGenerator(name);
  return static_cast<std::size_t>(it - names_.begin());
}

std::optional<CoxeterMatrix> GeneratingSet::derived_matrix() const {
  std::vector<std::pair<std::pair<GenIndex, GenIndex>, Order>> edges;
  const std::size_t n = names_.size();
  for (GenIndex i = 0; i < n; ++i)
    for (GenIndex j = i + 1; j < n; ++j) {
      const OrderResult& o = entry(i, j).order;
      if (o.kind == OrderResult::Kind::AboveCap) return std::nullopt;
      edges.push_back({{i, j}, o.is_finite() ? Order::finite(static_cast<std::uint32_t>(o.value))
                                             : Order::infinity()});
    }
  return CoxeterMatrix(names_, std::move(edges));
}

GeneratingSet GeneratingSet::Builder::finish() {
  GeneratingSet out;
  out.names_ = std::move(names);
  out.words_ = std::move(words);
  out.entries_ = std::move(entries);
  out.descriptor_ = std::move(descriptor);
  out.certificates_ = std::move(certificates);
  return out;
}

GeneratingSet s_translation(const WordEngine& engine, GenIndex s, GenSet component) {
  const CoxeterMatrix& m = engine.matrix();
  intrinsic::RightAngledContext ctx = intrinsic::build_context(m, s);
  const Component* comp = nullptr;
  for (const Component& c : ctx.perp_components.components)
    if (c.members == component) comp = &c;
  if (!comp || !comp->spherical() || !is_minus_one_type(*comp->type))
    throw ComponentNotMinusOneType();

  auto cgrp = engine.group(component);
  Word rho = cgrp->normal_form(cgrp->longest());
  Word srho = Word{{s}} + rho;
  std::string srho_name = unique_name(m, m.name(s) + "_rho");

  const std::size_t n = m.rank();
  GeneratingSet::Builder b;
  EntryTable table(n);
  for (GenIndex i = 0; i < n; ++i) {
    if (i == s) {
      b.names.push_back(srho_name);
      b.words.push_back(srho);
    } else {
      b.names.push_back(m.name(i));
      b.words.push_back(Word{{i}});
    }
  }
  for (GenIndex i = 0; i < n; ++i)
    for (GenIndex j = i + 1; j < n; ++j) {
      if (i != s && j != s) {
        Order o = m.order(i, j);
        table.set(i, j,
                  o.is_finite() ? OrderResult::finite(o.value())
                                : OrderResult::certified_infinite("R1"),
                  o.is_finite() ? "input" : "rule:R1");
        continue;
      }
      GenIndex t = (i == s) ? j : i;
      if (ctx.perp.contains(t)) {
        GenSet scope = component.with(s).with(t);
        table.set(i, j, order_by_enumeration(engine, scope, srho, Word{{t}}),
                  "enumeration " + m.set_to_string(scope));
      } else {
        if (!rule_r2_applies(engine, ctx, rho, t))
          throw Error("rule R2 hypotheses failed unexpectedly");
        table.set(i, j, OrderResult::certified_infinite("R2"), "rule:R2");
      }
    }

  b.entries = std::move(table.entries);
  b.descriptor = "s-translation of " + m.name(s) + " through " + m.set_to_string(component);
  attach_exclusion_certificates(engine, s, component, srho, b);
  return b.finish();
}

TwistResult diagram_twist(const WordEngine& engine, GenIndex s,
                          const intrinsic::BlowDownCandidate& candidate) {
  const CoxeterMatrix& m = engine.matrix();
  intrinsic::RightAngledContext ctx = intrinsic::build_context(m, s);
  intrinsic::BlowDownCandidate cand = revalidate(engine, ctx, candidate);

  // K: the finite-order components of s-infinity that touch a finite-order
  // partner of b.
  GenSet k0;
  ctx.infinity.for_each([&](GenIndex t) {
    if (m.order(cand.b, t).is_finite()) k0 = k0.with(t);
  });
  GenSet k = k0;
  bool grew = true;
  while (grew) {
    grew = false;
    ctx.infinity.for_each([&](GenIndex u) {
      if (k.contains(u)) return;
      bool touches = false;
      k.for_each([&](GenIndex t) {
        if (m.order(t, u).is_finite()) touches = true;
      });
      if (touches) {
        k = k.with(u);
        grew = true;
      }
    });
  }

  if (k.empty()) {
    TwistResult out{true, m, GeneratingSet{}, GenSet{}, {}};
    GeneratingSet::Builder b;
    EntryTable table(m.rank());
    for (GenIndex i = 0; i < m.rank(); ++i) {
      b.names.push_back(m.name(i));
      b.words.push_back(Word{{i}});
      for (GenIndex j = i + 1; j < m.rank(); ++j) {
        Order o = m.order(i, j);
        table.set(i, j,
                  o.is_finite() ? OrderResult::finite(o.value())
                                : OrderResult::certified_infinite("R1"),
                  "input");
      }
    }
    b.entries = std::move(table.entries);
    b.descriptor = "identity twist (candidate already proper)";
    out.new_generators = b.finish();
    out.certificates.push_back({"no-op", "the candidate is already proper"});
    return out;
  }

  if (!cand.proper) {
    // sanity: K is confined to the infinite-order partners of a
    bool ok = true;
    k.for_each([&](GenIndex t) {
      if (m.order(cand.a, t).is_finite()) ok = false;
    });
    if (!ok) throw CandidateInvalid("twisted block meets a finite-order partner of a");
  }

  auto cgrp = engine.group(cand.component);
  Word rho = cgrp->normal_form(cgrp->longest());
  // The automorphism of the component induced by conjugation with rho,
  // computed by enumeration rather than read off the diagram.
  std::array<GenIndex, 64> sigma{};
  cand.component.for_each([&](GenIndex c) {
    std::uint32_t image = cgrp->conjugate(cgrp->vertex(Word{{c}}), cgrp->longest());
    const Word& nf = cgrp->normal_form(image);
    if (nf.size() != 1) throw Error("longest element does not normalize the component");
    sigma[c] = nf.letters[0];
  });

  std::vector<std::string> new_names;
  for (GenIndex i = 0; i < m.rank(); ++i)
    new_names.push_back(k.contains(i) ? unique_name(m, m.name(i) + "_tw") : m.name(i));

  std::vector<std::pair<std::pair<GenIndex, GenIndex>, Order>> edges;
  for (GenIndex i = 0; i < m.rank(); ++i)
    for (GenIndex j = i + 1; j < m.rank(); ++j) {
      Order o;
      bool i_in = k.contains(i), j_in = k.contains(j);
      if (i_in == j_in) {
        o = m.order(i, j);  // both twisted or both kept
      } else {
        GenIndex x = i_in ? i : j;
        GenIndex c = i_in ? j : i;
        o = cand.component.contains(c) ? m.order(x, sigma[c]) : m.order(x, c);
      }
      if (o != Order::finite(2)) edges.push_back({{i, j}, o});
    }
  CoxeterMatrix twisted(new_names, std::move(edges));

  GeneratingSet::Builder b;
  EntryTable table(m.rank());
  for (GenIndex i = 0; i < m.rank(); ++i) {
    b.names.push_back(new_names[i]);
    b.words.push_back(k.contains(i) ? rho + Word{{i}} + rho : Word{{i}});
    for (GenIndex j = i + 1; j < m.rank(); ++j) {
      Order o = twisted.order(i, j);
      table.set(i, j,
                o.is_finite() ? OrderResult::finite(o.value())
                              : OrderResult::certified_infinite("R1"),
                "twist");
    }
  }
  b.entries = std::move(table.entries);
  b.descriptor = "diagram twist of " + m.set_to_string(k) + " through " +
                 m.set_to_string(cand.component);

  TwistResult out{false, twisted, GeneratingSet{}, k, {}};

  // Post-check: with the twisted matrix the candidate is proper.
  WordEngine twisted_engine(twisted, engine.limits());
  intrinsic::RightAngledContext tctx = intrinsic::build_context(twisted, s);
  intrinsic::Bdg1Result tone = intrinsic::check_bdg1(twisted_engine, tctx, cand.a);
  if (!tone.candidate || !tone.candidate->proper)
    throw Error("twist failed to make the candidate proper");
  out.certificates.push_back(
      {"post-check", "after the twist, every infinite-order partner of " + m.name(s) +
                         " is an infinite-order partner of " + m.name(cand.b)});
  b.certificates = out.certificates;
  out.new_generators = b.finish();
  return out;
}

GeneratingSet blow_down(const WordEngine& engine, GenIndex s,
                        const intrinsic::BlowDownCandidate& candidate) {
  const CoxeterMatrix& m = engine.matrix();
  intrinsic::RightAngledContext ctx = intrinsic::build_context(m, s);
  intrinsic::BlowDownCandidate cand = revalidate(engine, ctx, candidate);
  if (!cand.proper) throw CandidateNotProper();

  auto cgrp = engine.group(cand.component);
  Word rho = cgrp->normal_form(cgrp->longest());
  Word srho = Word{{s}} + rho;
  std::string srho_name = unique_name(m, m.name(s) + "_rho");

  // Generator list: drop b, replace s by the new word.
  std::vector<GenIndex> kept;  // original index per new slot; s's slot holds s
  std::vector<std::string> names;
  std::vector<Word> words;
  for (GenIndex i = 0; i < m.rank(); ++i) {
    if (i == cand.b) continue;
    kept.push_back(i);
    if (i == s) {
      names.push_back(srho_name);
      words.push_back(srho);
    } else {
      names.push_back(m.name(i));
      words.push_back(Word{{i}});
    }
  }

  const std::size_t n = names.size();
  GeneratingSet::Builder b;
  b.names = names;
  b.words = words;
  EntryTable table(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      GenIndex oi = kept[i], oj = kept[j];
      if (oi != s && oj != s) {
        Order o = m.order(oi, oj);
        table.set(i, j,
                  o.is_finite() ? OrderResult::finite(o.value())
                                : OrderResult::certified_infinite("R1"),
                  o.is_finite() ? "input" : "rule:R1");
        continue;
      }
      GenIndex t = (oi == s) ? oj : oi;
      if (cand.component.contains(t)) {
        GenSet scope = cand.component.with(s);
        table.set(i, j, order_by_enumeration(engine, scope, srho, Word{{t}}),
                  "enumeration " + m.set_to_string(scope));
      } else if (ctx.perp.contains(t)) {
        GenSet scope = cand.component.with(s).with(t);
        table.set(i, j, order_by_enumeration(engine, scope, srho, Word{{t}}),
                  "enumeration " + m.set_to_string(scope));
      } else {
        if (!rule_r2_applies(engine, ctx, rho, t))
          throw Error("rule R2 hypotheses failed unexpectedly");
        table.set(i, j, OrderResult::certified_infinite("R2"), "rule:R2");
      }
    }

  b.entries = std::move(table.entries);
  b.descriptor = "blow-down of {" + m.name(s) + "," + m.name(cand.b) + "} through " +
                 m.set_to_string(cand.component);
  attach_exclusion_certificates(engine, s, cand.component, srho, b);
  return b.finish();
}

std::optional<EliminationOutcome> eliminate_reflection(const WordEngine& engine, GenIndex s) {
  const CoxeterMatrix& m = engine.matrix();
  intrinsic::RightAngledContext ctx = intrinsic::build_context(m, s);

  for (const Component& c : intrinsic::s_components(ctx)) {
    if (is_minus_one_type(*c.type)) {
      EliminationOutcome out;
      out.set = s_translation(engine, s, c.members);
      out.steps = {"s-translation"};
      return out;
    }
  }

  auto candidates = intrinsic::find_blowdown_generators(engine, ctx);
  if (candidates.empty()) return std::nullopt;
  const intrinsic::BlowDownCandidate& cand = candidates.front();

  if (cand.proper) {
    EliminationOutcome out;
    out.set = blow_down(engine, s, cand);
    out.steps = {"blow-down"};
    return out;
  }

  TwistResult twist = diagram_twist(engine, s, cand);
  WordEngine twisted_engine(twist.twisted, engine.limits());
  intrinsic::RightAngledContext tctx = intrinsic::build_context(twist.twisted, s);
  intrinsic::Bdg1Result tone = intrinsic::check_bdg1(twisted_engine, tctx, cand.a);
  GeneratingSet down = blow_down(twisted_engine, s, *tone.candidate);

  // Substitute the twist words so the final set is expressed over the
  // original generators. Generator order is preserved by the twist, so the
  // indices in the twisted words map one-to-one.
  GeneratingSet::Builder b;
  b.names = down.names();
  for (const Word& w : down.words()) {
    Word over_original;
    for (GenIndex letter : w.letters) {
      const Word& expansion = twist.new_generators.word_of(letter);
      over_original = over_original + expansion;
    }
    b.words.push_back(std::move(over_original));
  }
  b.entries.reserve(down.size() * down.size());
  for (std::size_t i = 0; i < down.size(); ++i)
    for (std::size_t j = 0; j < down.size(); ++j) b.entries.push_back(down.entry(i, j));
  b.descriptor = twist.new_generators.descriptor() + "; then " + down.descriptor();
  b.certificates = down.certificates();
  for (const Fact& f : twist.certificates) b.certificates.push_back(f);

  EliminationOutcome out;
  out.set = b.finish();
  out.steps = {"diagram-twist", "blow-down"};
  out.twisted = twist.twisted;
  return out;
}

DecompositionSummary decomposition_case(const SphericalType& t) {
  DecompositionSummary out;
  if (matches_i2_even_not_4k(t)) {
    out.decomposes = true;
    out.b_is_coxeter = true;
    std::uint32_t half = t.edge_label / 2;
    out.b_type = half == 3 ? SphericalType{Family::A, 2} : SphericalType{Family::I2, 2, half};
    out.cases = {DecompositionCase::I};
    return out;
  }
  if (matches_odd_c(t)) {
    out.decomposes = true;
    out.b_is_coxeter = true;
    out.b_type = t.rank == 3 ? SphericalType{Family::A, 3} : SphericalType{Family::D, t.rank};
    out.cases = {DecompositionCase::D, DecompositionCase::Dbar};
    return out;
  }
  if ((t.family == Family::E && t.rank == 7) || (t.family == Family::H && t.rank == 3)) {
    out.decomposes = true;
    out.b_is_coxeter = false;
    return out;
  }
  return out;
}

}  // namespace coxeter::transforms
