// Acceptance suite: one check per criterion, one PASS/FAIL line each.
// Every expected value is pinned here; a failure prints the mismatch.
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "support/diagrams.hpp"

#include "coxeter/diagram.hpp"
#include "coxeter/geometry.hpp"
#include "coxeter/intrinsic.hpp"
#include "coxeter/oracle.hpp"
#include "coxeter/transforms.hpp"
#include "coxeter/words.hpp"

using namespace coxeter;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << " s";
  return out.str();
}

// ---------------------------------------------------------------- criterion 1

std::string blow_down_type_i() {
  std::ostringstream evidence;
  for (std::uint32_t k : {1u, 2u, 3u}) {
    auto t0 = std::chrono::steady_clock::now();
    auto m = testsupport::with_commuting_s(testsupport::type_i2(2 * k + 1));
    WordEngine engine(m);
    auto ctx = intrinsic::build_context(m, 0);
    auto one = intrinsic::check_bdg1(engine, ctx, m.index_of("g1"));
    expect(one.candidate.has_value(), "no candidate for k=" + std::to_string(k));
    auto gs = transforms::blow_down(engine, 0, *one.candidate);
    expect(gs.size() == 2, "generating set is not a pair");
    expect(gs.entry(0, 1).order == OrderResult::finite(4 * k + 2),
           "product order is " + gs.entry(0, 1).order.to_string() + ", expected " +
               std::to_string(4 * k + 2));

    auto grp = engine.group(m.full_set());
    std::set<std::uint32_t> closure{0};
    std::vector<std::uint32_t> stack{0};
    std::vector<std::uint32_t> gens;
    for (const Word& w : gs.words()) gens.push_back(grp->vertex(w));
    while (!stack.empty()) {
      std::uint32_t x = stack.back();
      stack.pop_back();
      for (std::uint32_t g : gens) {
        std::uint32_t y = grp->multiply(x, g);
        if (closure.insert(y).second) stack.push_back(y);
      }
    }
    expect(closure.size() == 2 * (4 * k + 2),
           "closure has " + std::to_string(closure.size()) + " elements, expected " +
               std::to_string(2 * (4 * k + 2)));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    expect(secs < 1.0, "k=" + std::to_string(k) + " took " + fmt_seconds(secs));
    evidence << (k > 1 ? ", " : "") << "k=" << k << ": order " << 4 * k + 2 << ", "
             << closure.size() << " elements";
  }
  return evidence.str();
}

// ---------------------------------------------------------------- criterion 2

std::string blow_down_type_d() {
  std::ostringstream evidence;
  for (std::uint32_t k : {1u, 2u}) {
    const std::size_t n = 2 * k + 1;
    auto m = testsupport::with_commuting_s(testsupport::type_d(n));
    WordEngine engine(m);
    auto ctx = intrinsic::build_context(m, 0);
    auto one = intrinsic::check_bdg1(engine, ctx, m.index_of("g" + std::to_string(n - 1)));
    expect(one.candidate.has_value(), "no candidate for k=" + std::to_string(k));
    auto gs = transforms::blow_down(engine, 0, *one.candidate);

    auto derived = gs.derived_matrix();
    expect(derived.has_value(), "derived matrix incomplete");
    auto type = classify_spherical(*derived, derived->full_set());
    expect(type.has_value(), "derived matrix is not spherical");
    SphericalType want{Family::C, static_cast<std::uint32_t>(n)};
    expect(*type == want, "derived type " + type->to_string() + ", expected " + want.to_string());

    std::uint64_t expected_order = 2ull * (1ull << (2 * k));
    for (std::uint32_t i = 2; i <= n; ++i) expected_order *= i;
    auto grp = engine.group(m.full_set());
    std::set<std::uint32_t> closure{0};
    std::vector<std::uint32_t> stack{0};
    std::vector<std::uint32_t> gens;
    for (const Word& w : gs.words()) gens.push_back(grp->vertex(w));
    while (!stack.empty()) {
      std::uint32_t x = stack.back();
      stack.pop_back();
      for (std::uint32_t g : gens) {
        std::uint32_t y = grp->multiply(x, g);
        if (closure.insert(y).second) stack.push_back(y);
      }
    }
    expect(closure.size() == expected_order,
           "closure has " + std::to_string(closure.size()) + " elements, expected " +
               std::to_string(expected_order));
    evidence << (k > 1 ? ", " : "") << "k=" << k << ": type " << type->to_string() << ", "
             << closure.size() << " elements";
  }
  return evidence.str();
}

// ---------------------------------------------------------------- criterion 3

std::string longest_element_length() {
  std::ostringstream evidence;
  for (std::uint32_t k : {1u, 2u}) {
    const std::size_t n = 2 * k + 1;
    auto m = testsupport::type_d(n);
    WordEngine engine(m);
    auto grp = engine.group(m.full_set());
    std::uint32_t got = grp->length(grp->longest());
    std::uint32_t want = 2 * k * (2 * k + 1);
    expect(got == want, "longest length " + std::to_string(got) + ", expected " +
                            std::to_string(want));
    evidence << (k > 1 ? ", " : "") << "k=" << k << ": length " << got;
  }
  return evidence.str();
}

// ---------------------------------------------------------------- criterion 4

std::string right_angled_exhaustive() {
  std::uint64_t diagrams = 0, decisions = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    auto names = testsupport::gen_names(n);
    for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
      std::vector<std::pair<std::pair<GenIndex, GenIndex>, Order>> edges;
      std::size_t bit = 0;
      for (GenIndex i = 0; i < n; ++i)
        for (GenIndex j = i + 1; j < n; ++j)
          if (mask >> bit++ & 1) edges.push_back({{i, j}, Order::infinity()});
      CoxeterMatrix m(names, edges);
      WordEngine engine(m);
      ++diagrams;
      for (GenIndex s = 0; s < n; ++s) {
        bool decided = intrinsic::decide_intrinsic(engine, s).is_intrinsic;
        bool criterion = intrinsic::right_angled_system_criterion(m, s);
        // Direct reading of the criterion: no isolated vertex in the
        // commuting neighborhood.
        Neighborhoods nb = neighborhoods(m, s);
        bool isolated = false;
        nb.perp.for_each([&](GenIndex t) {
          bool alone = true;
          nb.perp.for_each([&](GenIndex u) {
            if (t != u && m.order(t, u) != Order::finite(2)) alone = false;
          });
          if (alone) isolated = true;
        });
        expect(decided == criterion && criterion == !isolated,
               "disagreement at n=" + std::to_string(n) + " mask=" + std::to_string(mask) +
                   " s=" + std::to_string(s));
        ++decisions;
      }
    }
  }
  return std::to_string(diagrams) + " diagrams, " + std::to_string(decisions) +
         " decisions, 100% agreement";
}

// ---------------------------------------------------------------- criterion 5

// Oracle: depth-first over all finite-order paths (distinct vertices, free
// endpoints); the condition fails iff some path meets both a finite-order
// partner of a and one of b.
bool bdg2_path_oracle(unsigned n, const std::array<std::uint32_t, 5>& adj, std::uint32_t a_fin,
                      std::uint32_t b_fin) {
  bool escaped = false;
  std::function<void(unsigned, std::uint32_t, bool, bool)> extend =
      [&](unsigned last, std::uint32_t visited, bool meets_a, bool meets_b) {
        if (escaped) return;
        if (meets_a && meets_b) {
          escaped = true;
          return;
        }
        for (unsigned next = 0; next < n; ++next) {
          if (visited >> next & 1) continue;
          if (!(adj[last] >> next & 1)) continue;
          extend(next, visited | (1u << next), meets_a || (a_fin >> next & 1),
                 meets_b || (b_fin >> next & 1));
        }
      };
  for (unsigned start = 0; start < n && !escaped; ++start)
    extend(start, 1u << start, a_fin >> start & 1, b_fin >> start & 1);
  return !escaped;
}

std::string bdg2_oracle_equivalence() {
  std::uint64_t instances = 0;
  const Order finite_labels[2] = {Order::finite(2), Order::finite(3)};

  auto check_instance = [&](unsigned n, const std::vector<Order>& within,
                            const std::vector<Order>& cross_a,
                            const std::vector<Order>& cross_b) {
    std::vector<std::string> names{"s", "a", "b"};
    for (unsigned i = 0; i < n; ++i) names.push_back("u" + std::to_string(i + 1));
    std::vector<std::pair<std::pair<GenIndex, GenIndex>, Order>> edges;
    edges.push_back({{1, 2}, Order::finite(3)});
    std::size_t w = 0;
    std::array<std::uint32_t, 5> adj{};
    for (unsigned i = 0; i < n; ++i) {
      edges.push_back({{0, 3 + i}, Order::infinity()});
      for (unsigned j = i + 1; j < n; ++j) {
        Order o = within[w++];
        edges.push_back({{3 + i, 3 + j}, o});
        if (o.is_finite()) {
          adj[i] |= 1u << j;
          adj[j] |= 1u << i;
        }
      }
    }
    std::uint32_t a_fin = 0, b_fin = 0;
    for (unsigned i = 0; i < n; ++i) {
      edges.push_back({{1, 3 + i}, cross_a[i]});
      edges.push_back({{2, 3 + i}, cross_b[i]});
      if (cross_a[i].is_finite()) a_fin |= 1u << i;
      if (cross_b[i].is_finite()) b_fin |= 1u << i;
    }
    CoxeterMatrix m(names, edges);
    auto ctx = intrinsic::build_context(m, 0);
    bool component_route = intrinsic::check_bdg2(m, ctx, 1, 2).satisfied;
    bool path_route = bdg2_path_oracle(n, adj, a_fin, b_fin);
    expect(component_route == path_route, "bdg2 disagreement on " + render_diagram(m));
    ++instances;
  };

  // Full three-letter alphabet for up to four chain generators.
  for (unsigned n = 0; n <= 4; ++n) {
    const std::size_t within_slots = n * (n - 1) / 2, cross_slots = 2 * n;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < within_slots + cross_slots; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t digits = code;
      auto take = [&]() {
        std::uint64_t d = digits % 3;
        digits /= 3;
        return d == 2 ? Order::infinity() : finite_labels[d];
      };
      std::vector<Order> within(within_slots), cross_a(n), cross_b(n);
      for (auto& o : within) o = take();
      for (unsigned i = 0; i < n; ++i) cross_a[i] = take();
      for (unsigned i = 0; i < n; ++i) cross_b[i] = take();
      check_instance(n, within, cross_a, cross_b);
    }
  }

  // Five chain generators: both routes read labels only through finiteness,
  // so the finite/infinite patterns are exhausted, each instantiated with
  // both finite labels in alternating positions.
  {
    const unsigned n = 5;
    const std::size_t within_slots = 10, cross_slots = 10;
    for (std::uint64_t pattern = 0; pattern < (1ull << (within_slots + cross_slots));
         ++pattern) {
      for (int variant = 0; variant < 2; ++variant) {
        std::vector<Order> within(within_slots), cross_a(n), cross_b(n);
        std::size_t slot = 0;
        auto take = [&]() {
          bool inf = pattern >> slot & 1;
          Order o = inf ? Order::infinity() : finite_labels[(slot + variant) % 2];
          ++slot;
          return o;
        };
        for (auto& o : within) o = take();
        for (unsigned i = 0; i < n; ++i) cross_a[i] = take();
        for (unsigned i = 0; i < n; ++i) cross_b[i] = take();
        check_instance(n, within, cross_a, cross_b);
      }
    }
  }

  return std::to_string(instances) + " instances, 100% agreement";
}

// ---------------------------------------------------------------- criterion 6

std::string soundness_on_finite_corpus() {
  std::vector<CoxeterMatrix> bases = {
      parse_diagram("generators t\n"),
      parse_diagram("generators t1 t2\n"),
      testsupport::type_i2(3),
      testsupport::type_i2(5),
      testsupport::type_i2(4),
      testsupport::type_a(3),
      testsupport::type_a(4),
      testsupport::type_c(2),
      testsupport::type_c(3),
      testsupport::type_d(3),
      testsupport::type_d(4),
      testsupport::type_d(5),
  };
  std::size_t not_intrinsic = 0, verified = 0;
  for (const CoxeterMatrix& base : bases) {
    auto m = testsupport::with_commuting_s(base);
    WordEngine engine(m);
    auto verdict = intrinsic::decide_intrinsic(engine, 0);
    auto outcome = transforms::eliminate_reflection(engine, 0);
    expect(verdict.is_intrinsic == !outcome.has_value(),
           "verdict and elimination disagree on " + render_diagram(m));
    if (verdict.is_intrinsic) continue;
    ++not_intrinsic;

    const transforms::GeneratingSet& gs = outcome->set;
    auto derived = gs.derived_matrix();
    expect(derived.has_value(), "derived matrix incomplete for " + render_diagram(m));
    std::vector<std::pair<std::string, Word>> words;
    for (std::size_t i = 0; i < gs.size(); ++i) words.push_back({gs.names()[i], gs.word_of(i)});
    auto report = oracle::verify_coxeter_generating_set(engine, words, *derived, 200000);
    expect(report.status == oracle::Status::Verified,
           "oracle refuted " + render_diagram(m) + ": " + report.evidence);
    ++verified;

    // s never appears among the conjugates of the new generators.
    auto grp = engine.group(m.full_set());
    std::uint32_t s_vertex = grp->vertex(Word{{0}});
    for (const Word& w : gs.words()) {
      std::uint32_t r = grp->vertex(w);
      for (std::uint32_t x = 0; x < grp->size(); ++x)
        expect(grp->conjugate(r, x) != s_vertex,
               "s is a conjugate of a new generator in " + render_diagram(m));
    }
  }
  return std::to_string(not_intrinsic) + " non-intrinsic products, " +
         std::to_string(verified) + " generating sets verified, s excluded from every closure";
}

// ---------------------------------------------------------------- criterion 7

std::string identity_suites() {
  std::size_t identities = 0;
  for (std::size_t n : {3u, 5u}) {
    auto m = testsupport::with_commuting_s(testsupport::type_d(n));
    WordEngine e(m);
    GenIndex a = m.index_of("g" + std::to_string(n - 1));
    GenIndex b = m.index_of("g" + std::to_string(n));
    GenSet comp;
    for (GenIndex i = 1; i <= n; ++i) comp = comp.with(i);
    auto cgrp = e.group(comp);
    Element rho = e.wrap(*cgrp, cgrp->longest());
    Element tau = e.multiply(e.generator(0), rho);
    Element ab = e.multiply(e.generator(a), e.generator(b));
    Element sigma = e.multiply(ab, tau);

    expect(ab == e.multiply(e.generator(b), e.generator(a)), "ab != ba");
    expect(!ab.is_identity(), "ab = 1");
    Element abrho = e.multiply(ab, rho);
    expect(e.multiply(abrho, abrho).is_identity() && !abrho.is_identity(),
           "ab*rho is not an involution");
    expect(e.conjugate(e.generator(a), tau) == e.generator(b), "a^tau != b");
    expect(sigma == e.conjugate(tau, e.generator(a)), "sigma != tau^a");
    expect(sigma != tau, "sigma = tau");
    expect(e.multiply(sigma, tau) == e.multiply(tau, sigma), "sigma tau != tau sigma");
    identities += 6;
  }
  for (std::uint32_t mlab : {3u, 5u}) {
    auto m = testsupport::with_commuting_s(testsupport::type_i2(mlab));
    WordEngine e(m);
    GenSet comp = GenSet::single(1) | GenSet::single(2);
    auto cgrp = e.group(comp);
    Element rho = e.wrap(*cgrp, cgrp->longest());
    Element tau = e.multiply(e.generator(0), rho);
    expect(e.conjugate(e.generator(1), tau) == e.generator(2), "a^tau != b");
    expect(e.multiply(tau, rho) == e.multiply(rho, tau), "[tau, rho] != 1");
    identities += 2;
  }
  return std::to_string(identities) + " identities hold by word computation";
}

// ---------------------------------------------------------------- criterion 8

std::string geometry_suite() {
  std::vector<CoxeterMatrix> corpus = {
      testsupport::type_a(1),  testsupport::type_a(2),  testsupport::type_a(3),
      testsupport::type_a(4),  testsupport::type_a(5),  testsupport::type_c(2),
      testsupport::type_c(3),  testsupport::type_c(4),  testsupport::type_d(4),
      testsupport::type_h(3),  testsupport::type_i2(5), testsupport::type_i2(6),
      testsupport::type_i2(7), testsupport::type_i2(8), testsupport::type_i2(12),
      parse_diagram("generators a b\n"),
      parse_diagram("generators a b c\n"),
      parse_diagram("generators s a b\nedge a b 3\n"),
      parse_diagram("generators a b c d\nedge a b 3\nedge c d 3\n"),
      parse_diagram("generators a b c d\nedge a b 3\nedge c d 5\n"),
      parse_diagram("generators s a b c\nedge a b 4\nedge b c 3\n"),
  };

  std::uint64_t chambers_checked = 0, residues_checked = 0;
  for (const CoxeterMatrix& m : corpus) {
    WordEngine e(m);
    auto g = e.group(m.full_set());
    expect(g->size() <= 1200, "corpus group too large");
    const std::uint32_t n = g->size();

    // Root halves and wall disjointness.
    for (std::uint32_t t : g->reflections()) {
      std::size_t pos = 0;
      for (std::uint32_t c = 0; c < n; ++c)
        if (g->length(g->multiply(t, c)) > g->length(c)) ++pos;
      expect(pos * 2 == n, "root halves unbalanced");
    }
    for (std::uint32_t c = 0; c < n; ++c)
      for (GenIndex s = 0; s < m.rank(); ++s) {
        if (g->length(g->apply(c, s)) < g->length(c)) continue;
        std::size_t stabilizers = 0;
        for (std::uint32_t t : g->reflections())
          if (g->multiply(t, c) == g->apply(c, s)) ++stabilizers;
        expect(stabilizers == 1, "panel stabilized by " + std::to_string(stabilizers) +
                                     " reflections");
      }

    // Gate equation on every residue and chamber.
    const std::uint64_t subsets = 1ull << m.rank();
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
      GenSet j = GenSet::from_bits(bits);
      std::vector<std::uint32_t> members;
      for (std::uint32_t v = 0; v < n; ++v)
        if (g->normal_form(v).support().subset_of(j)) members.push_back(v);
      std::vector<bool> seen(n, false);
      for (std::uint32_t rep = 0; rep < n; ++rep) {
        if (seen[rep]) continue;
        std::vector<std::uint32_t> residue;
        for (std::uint32_t x : members) {
          std::uint32_t cx = g->multiply(rep, x);
          residue.push_back(cx);
          seen[cx] = true;
        }
        ++residues_checked;
        std::vector<std::uint32_t> dist(residue.size());
        for (std::uint32_t c = 0; c < n; ++c) {
          std::uint32_t ci = g->inverse(c);
          std::size_t arg = 0;
          for (std::size_t i = 0; i < residue.size(); ++i) {
            dist[i] = g->length(g->multiply(ci, residue[i]));
            if (dist[i] < dist[arg]) arg = i;
          }
          std::uint32_t gate = residue[arg];
          std::uint32_t gi = g->inverse(gate);
          for (std::size_t i = 0; i < residue.size(); ++i) {
            std::uint32_t via = dist[arg] + g->length(g->multiply(gi, residue[i]));
            expect(dist[i] == via, "gate equation fails");
          }
          ++chambers_checked;
        }
      }

      // At most two wall panels inside any rank-2 residue.
      if (j.count() == 2) {
        std::vector<bool> seen2(n, false);
        for (std::uint32_t rep = 0; rep < n; ++rep) {
          if (seen2[rep]) continue;
          std::vector<std::uint32_t> residue;
          for (std::uint32_t x : members) {
            std::uint32_t cx = g->multiply(rep, x);
            residue.push_back(cx);
            seen2[cx] = true;
          }
          for (std::uint32_t t : g->reflections()) {
            std::size_t panels = 0;
            for (std::uint32_t c : residue)
              j.for_each([&](GenIndex s) {
                std::uint32_t upper = g->apply(c, s);
                if (g->length(upper) < g->length(c)) return;
                if (g->multiply(t, c) == upper) ++panels;
              });
            expect(panels <= 2, "wall meets a rank-2 residue in " + std::to_string(panels) +
                                    " panels");
          }
        }
      }
    }
  }

  // Wall sandwich on the 12-element configuration in its blown-down
  // presentation.
  {
    auto m = testsupport::with_commuting_s(testsupport::type_i2(3));
    WordEngine e(m);
    auto ctx = intrinsic::build_context(m, 0);
    auto one = intrinsic::check_bdg1(e, ctx, m.index_of("g1"));
    auto gs = transforms::blow_down(e, 0, *one.candidate);
    auto derived = gs.derived_matrix();
    expect(derived.has_value(), "derived matrix incomplete");
    WordEngine d(*derived);
    GenIndex x = static_cast<GenIndex>(derived->index_of("g1"));
    GenIndex y = static_cast<GenIndex>(derived->index_of("s_rho"));
    geometry::Reflection t = geometry::Reflection::of_generator(d, x);
    geometry::Reflection u = geometry::Reflection::of_generator(d, y);
    geometry::Reflection v = geometry::Reflection::conjugate_of(
        d, x, d.multiply(d.generator(y), d.generator(x)));
    auto report = geometry::check_wall_sandwich(
        d, geometry::Residue{derived->full_set(), d.identity()}, t, u, v);
    expect(report.verified, "wall sandwich not verified");
    // Each wall of the 12-gon consists of two antipodal panels.
    expect(report.aligned_panels == 2 && report.crossed_panels == 2,
           "unexpected panel counts: " + std::to_string(report.aligned_panels) + "/" +
               std::to_string(report.crossed_panels));
  }

  return std::to_string(residues_checked) + " residues, " + std::to_string(chambers_checked) +
         " gate checks, sandwich partition verified";
}

// ---------------------------------------------------------------- criterion 9

std::string dihedral_table_oracle() {
  std::ostringstream evidence;
  std::size_t sets_total = 0;
  for (std::uint32_t mlab = 3; mlab <= 12; ++mlab) {
    auto m = testsupport::type_i2(mlab);
    WordEngine e(m);
    auto g = e.group(m.full_set());

    std::vector<std::uint32_t> involutions;
    for (std::uint32_t v = 1; v < g->size(); ++v)
      if (g->multiply(v, v) == 0) involutions.push_back(v);

    // Every Coxeter generating set: a subset of involutions whose pairwise
    // orders form a diagram with the right finite order and whose closure is
    // the whole group. Rank is bounded by the order formula (2^rank divides
    // the group order).
    std::vector<std::vector<std::uint32_t>> generating_sets;
    std::vector<std::uint32_t> subset;
    std::function<void(std::size_t)> choose = [&](std::size_t from) {
      if (subset.size() >= 2) {
        std::vector<std::string> names;
        std::vector<std::pair<std::pair<GenIndex, GenIndex>, Order>> edges;
        for (std::size_t i = 0; i < subset.size(); ++i)
          names.push_back("r" + std::to_string(i));
        for (std::size_t i = 0; i < subset.size(); ++i)
          for (std::size_t k = i + 1; k < subset.size(); ++k)
            edges.push_back({{static_cast<GenIndex>(i), static_cast<GenIndex>(k)},
                             Order::finite(g->element_order(
                                 g->multiply(subset[i], subset[k])))});
        CoxeterMatrix candidate(names, edges);
        auto order = spherical_subset_order(candidate, candidate.full_set());
        if (order && *order == g->size()) {
          std::set<std::uint32_t> closure{0};
          std::vector<std::uint32_t> stack{0};
          while (!stack.empty()) {
            std::uint32_t xx = stack.back();
            stack.pop_back();
            for (std::uint32_t r : subset) {
              std::uint32_t yy = g->multiply(xx, r);
              if (closure.insert(yy).second) stack.push_back(yy);
            }
          }
          if (closure.size() == g->size()) generating_sets.push_back(subset);
        }
      }
      if (subset.size() == 4) return;
      for (std::size_t i = from; i < involutions.size(); ++i) {
        subset.push_back(involutions[i]);
        choose(i + 1);
        subset.pop_back();
      }
    };
    choose(0);
    expect(!generating_sets.empty(), "no generating sets found");
    sets_total += generating_sets.size();

    // Intersection of the reflection sets over all Coxeter generating sets.
    std::vector<bool> always(g->size(), true);
    for (const auto& r : generating_sets) {
      std::vector<bool> conj(g->size(), false);
      for (std::uint32_t v : r)
        for (std::uint32_t w = 0; w < g->size(); ++w) conj[g->conjugate(v, w)] = true;
      for (std::uint32_t v = 0; v < g->size(); ++v) always[v] = always[v] && conj[v];
    }
    bool gen1 = always[g->vertex(Word{{0}})];
    bool gen2 = always[g->vertex(Word{{1}})];
    expect(gen1 == gen2, "generators disagree at m=" + std::to_string(mlab));

    auto type = classify_spherical(m, m.full_set());
    bool table = spherical_intrinsic_table(*type) == FiniteIntrinsic::Yes;
    expect(table == gen1, "table says " + std::string(table ? "yes" : "no") + " but oracle says " +
                              (gen1 ? "yes" : "no") + " at m=" + std::to_string(mlab));

    // The center-split presentations exist exactly at labels 2 mod 4.
    bool has_triple = false;
    for (const auto& r : generating_sets)
      if (r.size() == 3) has_triple = true;
    expect(has_triple == (mlab % 4 == 2),
           "rank-3 generating sets at m=" + std::to_string(mlab));
  }
  evidence << "labels 3..12, " << sets_total << " generating sets enumerated, table matches";
  return evidence.str();
}

struct Criterion {
  int id;
  std::string title;
  std::function<std::string()> run;
  double budget_seconds;  // 0: no stated bound
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "blow-down of the odd dihedral products has type I2(4k+2)", blow_down_type_i, 0},
      {2, "blow-down of the odd fork products has type C(2k+1)", blow_down_type_d, 30},
      {3, "longest element of D(2k+1) has length 2k(2k+1)", longest_element_length, 0},
      {4, "right-angled diagrams up to rank 6: decision matches the A1-factor test",
       right_angled_exhaustive, 60},
      {5, "component form of the chain condition matches path enumeration",
       bdg2_oracle_equivalence, 0},
      {6, "non-intrinsic verdicts yield verified generating sets excluding s",
       soundness_on_finite_corpus, 0},
      {7, "rank-2 identity suites hold by word computation", identity_suites, 0},
      {8, "chamber-complex properties hold exhaustively up to order 1200", geometry_suite, 120},
      {9, "finite intrinsic table matches the dihedral generating-set oracle",
       dihedral_table_oracle, 0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string evidence;
    bool ok = true;
    try {
      evidence = c.run();
    } catch (const std::exception& e) {
      ok = false;
      evidence = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
      ok = false;
      evidence = "exceeded the " + fmt_seconds(c.budget_seconds) + " budget";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << ": " << c.title << " (" << evidence
              << "; " << fmt_seconds(secs) << ")\n";
    if (!ok) ++failures;
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 9 criteria passed\n";
  return 0;
}
