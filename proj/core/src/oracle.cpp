#include "coxeter/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coxeter/diagram.hpp"

namespace coxeter::oracle {

std::string to_string(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Refuted: return "refuted";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

VerificationReport verify_coxeter_generating_set(
    const WordEngine& engine, const std::vector<std::pair<std::string, Word>>& generators,
    const CoxeterMatrix& expected, std::uint64_t cap) {
  const CoxeterMatrix& m = engine.matrix();
  auto grp = engine.group(m.full_set(), cap);
  VerificationReport report;
  report.claim = "words form a Coxeter generating set of the expected type";

  std::vector<std::uint32_t> vertices;
  for (const auto& [name, word] : generators) {
    std::uint32_t v = grp->vertex(word);
    if (v == 0) {
      report.status = Status::Refuted;
      report.evidence = "generator " + name + " reduces to the identity";
      return report;
    }
    if (grp->multiply(v, v) != 0) {
      report.status = Status::Refuted;
      report.evidence = "generator " + name + " is not an involution";
      return report;
    }
    vertices.push_back(v);
  }

  // Pairwise orders against the expected matrix.
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      GenIndex ei = expected.index_of(generators[i].first);
      GenIndex ej = expected.index_of(generators[j].first);
      Order want = expected.order(ei, ej);
      std::uint32_t got = grp->element_order(grp->multiply(vertices[i], vertices[j]));
      if (!want.is_finite() || want.value() != got) {
        report.status = Status::Refuted;
        report.evidence = "order of " + generators[i].first + "*" + generators[j].first +
                          " is " + std::to_string(got) + ", expected " + want.to_string();
        return report;
      }
    }

  // The words must generate the whole group.
  std::vector<bool> reached(grp->size(), false);
  std::vector<std::uint32_t> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::uint32_t g = stack.back();
    stack.pop_back();
    for (std::uint32_t v : vertices) {
      std::uint32_t h = grp->multiply(g, v);
      if (!reached[h]) {
        reached[h] = true;
        ++count;
        stack.push_back(h);
      }
    }
  }
  if (count != grp->size()) {
    report.status = Status::Refuted;
    report.evidence = "closure of the words has " + std::to_string(count) + " of " +
                      std::to_string(grp->size()) + " elements";
    return report;
  }

  auto formula = spherical_subset_order(expected, expected.full_set());
  if (!formula || *formula != grp->size()) {
    report.status = Status::Refuted;
    report.evidence = "group order " + std::to_string(grp->size()) +
                      " does not match the order formula of the expected type" +
                      (formula ? " (" + std::to_string(*formula) + ")" : "");
    return report;
  }

  report.status = Status::Verified;
  report.evidence = "order " + std::to_string(grp->size()) + ", all pairwise orders match";
  return report;
}

std::vector<Element> reflection_set(const WordEngine& engine, std::uint64_t cap) {
  auto grp = engine.group(engine.matrix().full_set(), cap);
  std::vector<Element> out;
  for (std::uint32_t v : grp->reflections()) out.push_back(engine.wrap(*grp, v));
  return out;
}

StandardParabolic parabolic_closure(const WordEngine& engine, const std::vector<Element>& x,
                                    std::uint64_t cap) {
  const CoxeterMatrix& m = engine.matrix();
  auto grp = engine.group(m.full_set(), cap);
  const std::uint32_t n = grp->size();

  std::vector<std::uint32_t> targets;
  for (const Element& e : x) targets.push_back(engine.vertex_in(*grp, e));

  // Memberships of every conjugate w^-1 <J> w, as chamber bitsets.
  const std::uint64_t subsets = 1ull << m.rank();
  std::vector<bool> closure(n, true);

  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    GenSet j = GenSet::from_bits(bits);
    // Elements of <J>.
    std::vector<std::uint32_t> members;
    std::vector<bool> in_j(n, false);
    for (std::uint32_t v = 0; v < n; ++v)
      if (grp->normal_form(v).support().subset_of(j)) {
        members.push_back(v);
        in_j[v] = true;
      }
    std::vector<bool> seen_coset(n, false);
    for (std::uint32_t w = 0; w < n; ++w) {
      if (seen_coset[w]) continue;
      // Mark the whole coset <J>w as visited so each conjugate is tested once.
      std::vector<bool> conj_set(n, false);
      std::uint32_t wi = grp->inverse(w);
      for (std::uint32_t u : members) {
        std::uint32_t uw = grp->multiply(u, w);
        seen_coset[uw] = true;
        conj_set[grp->multiply(wi, uw)] = true;  // w^-1 u w
      }
      bool contains_all = true;
      for (std::uint32_t tgt : targets)
        if (!conj_set[tgt]) {
          contains_all = false;
          break;
        }
      if (contains_all)
        for (std::uint32_t v = 0; v < n; ++v) closure[v] = closure[v] && conj_set[v];
    }
  }

  // Identify the closure as a standard pair.
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    GenSet j = GenSet::from_bits(bits);
    std::vector<std::uint32_t> members;
    for (std::uint32_t v = 0; v < n; ++v)
      if (grp->normal_form(v).support().subset_of(j)) members.push_back(v);
    std::size_t closure_size = static_cast<std::size_t>(std::count(closure.begin(), closure.end(), true));
    if (members.size() != closure_size) continue;
    for (std::uint32_t w = 0; w < n; ++w) {
      std::uint32_t wi = grp->inverse(w);
      bool match = true;
      for (std::uint32_t u : members)
        if (!closure[grp->multiply(grp->multiply(wi, u), w)]) {
          match = false;
          break;
        }
      if (match) return {j, engine.wrap(*grp, w)};
    }
  }
  throw Error("parabolic closure is not a parabolic subgroup");
}

MinusOneForm minus_one_form(const WordEngine& engine, const Element& r, std::uint64_t cap) {
  const CoxeterMatrix& m = engine.matrix();
  auto grp = engine.group(m.full_set(), cap);
  std::uint32_t rv = engine.vertex_in(*grp, r);
  if (rv == 0 || grp->multiply(rv, rv) != 0) throw NotInvolution();

  const std::uint64_t subsets = 1ull << m.rank();
  // Scan subsets by size so the first hit carries the rank invariant.
  std::vector<GenSet> by_size;
  for (std::uint64_t bits = 1; bits < subsets; ++bits) by_size.push_back(GenSet::from_bits(bits));
  std::sort(by_size.begin(), by_size.end(), [](GenSet a, GenSet b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits() < b.bits();
  });

  for (GenSet j : by_size) {
    bool minus_one = true;
    for (const Component& c : irreducible_components(m, j).components)
      if (!c.spherical() || !is_minus_one_type(*c.type)) {
        minus_one = false;
        break;
      }
    if (!minus_one) continue;
    auto sub = engine.group(j, cap);
    std::uint32_t rho = grp->vertex(sub->normal_form(sub->longest()));
    for (std::uint32_t w = 0; w < grp->size(); ++w) {
      if (grp->conjugate(rv, w) == rho) return {j, engine.wrap(*grp, w)};
    }
  }
  throw Error("no conjugate longest element found for the involution");
}

VerificationReport verify_normalizer_formula(const WordEngine& engine, GenSet j,
                                             std::uint64_t cap) {
  const CoxeterMatrix& m = engine.matrix();
  VerificationReport report;
  report.claim = "normalizer of the parabolic equals the parabolic times its commutant";

  // Hypothesis: s outside J spanning a finite group with J forces [s, J] = 1.
  bool hypothesis = true;
  std::string offender;
  (m.full_set() - j).for_each([&](GenIndex s) {
    if (!hypothesis) return;
    if (!is_spherical_subset(m, j.with(s))) return;
    j.for_each([&](GenIndex t) {
      if (m.order(s, t) != Order::finite(2)) {
        hypothesis = false;
        offender = m.name(s);
      }
    });
  });
  if (!hypothesis) throw HypothesisViolated("generator " + offender +
                                            " spans a finite group with the subset "
                                            "but does not commute with it");

  auto grp = engine.group(m.full_set(), cap);
  const std::uint32_t n = grp->size();
  std::vector<bool> in_j(n, false);
  for (std::uint32_t v = 0; v < n; ++v)
    in_j[v] = grp->normal_form(v).support().subset_of(j);

  GenSet j_perp;
  (m.full_set() - j).for_each([&](GenIndex t) {
    bool commutes = true;
    j.for_each([&](GenIndex u) {
      if (m.order(t, u) != Order::finite(2)) commutes = false;
    });
    if (commutes) j_perp = j_perp.with(t);
  });

  std::size_t normalizer = 0, product = 0, both = 0;
  for (std::uint32_t w = 0; w < n; ++w) {
    bool normalizes = true;
    std::uint32_t wi = grp->inverse(w);
    j.for_each([&](GenIndex t) {
      if (!normalizes) return;
      std::uint32_t tv = grp->vertex(Word{{t}});
      if (!in_j[grp->multiply(grp->multiply(wi, tv), w)]) normalizes = false;
    });
    bool in_product = grp->normal_form(w).support().subset_of(j | j_perp);
    normalizer += normalizes;
    product += in_product;
    both += normalizes && in_product;
  }

  if (normalizer == product && product == both) {
    report.status = Status::Verified;
    report.evidence = "normalizer has " + std::to_string(normalizer) + " elements";
  } else {
    report.status = Status::Refuted;
    report.evidence = "normalizer " + std::to_string(normalizer) + " vs product " +
                      std::to_string(product) + " (overlap " + std::to_string(both) + ")";
  }
  return report;
}

}  // namespace coxeter::oracle
