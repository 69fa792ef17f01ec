#include "coxeter/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace coxeter {

namespace {

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::optional<Order> parse_order_token(std::string_view tok) {
  if (tok == "inf") return Order::infinity();
  std::uint64_t v = 0;
  if (tok.empty()) return std::nullopt;
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (v > 0xFFFFFFFull) return std::nullopt;
  }
  return Order::finite(static_cast<std::uint32_t>(v));
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

CoxeterMatrix parse_diagram(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::pair<std::pair<GenIndex, GenIndex>, Order>> edges;
  Order default_order = Order::finite(2);
  bool seen_generators = false;
  bool seen_default = false;
  std::vector<std::pair<GenIndex, GenIndex>> listed_pairs;

  auto find_index = [&](const std::string& n, int lineno) -> GenIndex {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw ParseError(lineno, "unknown generator '" + n + "'");
    return static_cast<GenIndex>(it - names.begin());
  };

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;

    if (!seen_generators) {
      if (toks[0] != "generators")
        throw ParseError(lineno, "first line must declare generators");
      if (toks.size() < 2) throw ParseError(lineno, "empty generator list");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!valid_name(toks[i]))
          throw ParseError(lineno, "invalid generator name '" + toks[i] + "'");
        if (std::find(names.begin(), names.end(), toks[i]) != names.end())
          throw ParseError(lineno, "duplicate generator name '" + toks[i] + "'");
        names.push_back(toks[i]);
      }
      if (names.size() > 64) throw ParseError(lineno, "at most 64 generators are supported");
      seen_generators = true;
      continue;
    }

    if (toks[0] == "generators") throw ParseError(lineno, "generators declared twice");

    if (toks[0] == "default") {
      if (seen_default) throw ParseError(lineno, "default declared twice");
      if (toks.size() != 2) throw ParseError(lineno, "default takes one value");
      auto m = parse_order_token(toks[1]);
      if (!m) throw ParseError(lineno, "label must be an integer >= 2 or 'inf'");
      if (m->is_finite() && m->value() < 2)
        throw ParseError(lineno, "default order must be at least 2");
      default_order = *m;
      seen_default = true;
      continue;
    }

    if (toks[0] == "edge") {
      if (toks.size() != 4) throw ParseError(lineno, "edge takes two names and a label");
      GenIndex i = find_index(toks[1], lineno);
      GenIndex j = find_index(toks[2], lineno);
      if (i == j) throw ParseError(lineno, "self edge on '" + toks[1] + "'");
      auto m = parse_order_token(toks[3]);
      if (!m) throw ParseError(lineno, "label must be an integer >= 2 or 'inf'");
      if (m->is_finite() && m->value() < 2)
        throw ParseError(lineno, "edge label must be at least 2");
      auto key = std::minmax(i, j);
      std::pair<GenIndex, GenIndex> p{key.first, key.second};
      if (std::find(listed_pairs.begin(), listed_pairs.end(), p) != listed_pairs.end())
        throw ParseError(lineno, "pair listed twice: " + toks[1] + " " + toks[2]);
      listed_pairs.push_back(p);
      edges.push_back({p, *m});
      continue;
    }

    throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
  }

  if (!seen_generators) throw ParseError(lineno, "missing generators line");
  return CoxeterMatrix(std::move(names), std::move(edges), default_order);
}

std::string render_diagram(const CoxeterMatrix& m) {
  std::ostringstream out;
  out << "generators";
  for (const auto& n : m.names()) out << " " << n;
  out << "\n";
  for (GenIndex i = 0; i < m.rank(); ++i)
    for (GenIndex j = i + 1; j < m.rank(); ++j)
      if (m.order(i, j) != Order::finite(2))
        out << "edge " << m.name(i) << " " << m.name(j) << " " << m.order(i, j).to_string() << "\n";
  return out.str();
}

std::string SphericalType::to_string() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::C: return "C" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E: return "E" + std::to_string(rank);
    case Family::F: return "F" + std::to_string(rank);
    case Family::H: return "H" + std::to_string(rank);
    case Family::I2: return "I2(" + std::to_string(edge_label) + ")";
  }
  return "?";
}

std::uint64_t spherical_order(const SphericalType& t) {
  auto factorial = [](std::uint64_t n) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (t.family) {
    case Family::A: return factorial(t.rank + 1);
    case Family::C: return (1ull << t.rank) * factorial(t.rank);
    case Family::D: return (1ull << (t.rank - 1)) * factorial(t.rank);
    case Family::E:
      if (t.rank == 6) return 51840;
      if (t.rank == 7) return 2903040;
      return 696729600;
    case Family::F: return 1152;
    case Family::H: return t.rank == 3 ? 120 : 14400;
    case Family::I2: return 2ull * t.edge_label;
  }
  return 0;
}

ComponentDecomposition irreducible_components(const CoxeterMatrix& m, GenSet j) {
  if (!j.subset_of(m.full_set())) throw UnknownGenerator("index out of range");
  ComponentDecomposition out;
  out.subset = j;
  GenSet remaining = j;
  while (!remaining.empty()) {
    GenIndex seed = remaining.min();
    GenSet comp = GenSet::single(seed);
    GenSet frontier = comp;
    while (!frontier.empty()) {
      GenSet next;
      frontier.for_each([&](GenIndex u) {
        j.for_each([&](GenIndex v) {
          if (!comp.contains(v) && m.order(u, v) != Order::finite(2)) next = next.with(v);
        });
      });
      comp = comp | next;
      frontier = next;
    }
    out.components.push_back({comp, classify_spherical(m, comp)});
    remaining = remaining - comp;
  }
  return out;
}

std::optional<SphericalType> classify_spherical(const CoxeterMatrix& m, GenSet component) {
  const std::size_t r = component.count();
  if (r == 0) throw NotIrreducible();
  auto nodes = component.to_vector();

  // Must be a single component.
  {
    auto dec_check = [&]() {
      GenSet comp = GenSet::single(nodes[0]);
      GenSet frontier = comp;
      while (!frontier.empty()) {
        GenSet next;
        frontier.for_each([&](GenIndex u) {
          component.for_each([&](GenIndex v) {
            if (!comp.contains(v) && m.order(u, v) != Order::finite(2)) next = next.with(v);
          });
        });
        comp = comp | next;
        frontier = next;
      }
      return comp == component;
    };
    if (!dec_check()) throw NotIrreducible();
  }

  if (r == 1) return SphericalType{Family::A, 1};

  // Gather the edges of the induced diagram.
  struct Edge { GenIndex u, v; Order m; };
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) {
      Order o = m.order(nodes[a], nodes[b]);
      if (o != Order::finite(2)) edges.push_back({nodes[a], nodes[b], o});
    }
  for (const Edge& e : edges)
    if (!e.m.is_finite()) return std::nullopt;

  if (r == 2) {
    std::uint32_t label = edges[0].m.value();
    if (label == 3) return SphericalType{Family::A, 2};
    if (label == 4) return SphericalType{Family::C, 2};
    return SphericalType{Family::I2, 2, label};
  }

  // Rank >= 3: a spherical diagram is a tree with at most one branch node.
  if (edges.size() != r - 1) return std::nullopt;
  std::vector<int> degree(r, 0);
  auto local = [&](GenIndex g) {
    return static_cast<std::size_t>(std::find(nodes.begin(), nodes.end(), g) - nodes.begin());
  };
  for (const Edge& e : edges) {
    ++degree[local(e.u)];
    ++degree[local(e.v)];
  }
  int branch = -1;
  for (std::size_t i = 0; i < r; ++i) {
    if (degree[i] > 3) return std::nullopt;
    if (degree[i] == 3) {
      if (branch >= 0) return std::nullopt;
      branch = static_cast<int>(i);
    }
  }

  auto label_of = [&](GenIndex u, GenIndex v) { return m.order(u, v).value(); };
  auto adjacency = [&](GenIndex u) {
    std::vector<GenIndex> adj;
    for (const Edge& e : edges) {
      if (e.u == u) adj.push_back(e.v);
      if (e.v == u) adj.push_back(e.u);
    }
    return adj;
  };

  if (branch < 0) {
    // A path; read labels from one endpoint.
    GenIndex end = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (degree[i] == 1) { end = nodes[i]; break; }
    std::vector<std::uint32_t> labels;
    GenIndex prev = end, cur = end;
    for (std::size_t step = 0; step + 1 < r; ++step) {
      for (GenIndex nxt : adjacency(cur)) {
        if (nxt == prev) continue;
        labels.push_back(label_of(cur, nxt));
        prev = cur;
        cur = nxt;
        break;
      }
    }
    std::size_t big = 0;
    for (auto l : labels)
      if (l != 3) ++big;
    if (big == 0) return SphericalType{Family::A, static_cast<std::uint32_t>(r)};
    if (big > 1) return std::nullopt;
    // Exactly one label > 3.
    std::size_t where = 0;
    while (labels[where] == 3) ++where;
    std::uint32_t l = labels[where];
    bool at_end = (where == 0 || where + 1 == labels.size());
    if (l == 4 && at_end) return SphericalType{Family::C, static_cast<std::uint32_t>(r)};
    if (l == 4 && r == 4) return SphericalType{Family::F, 4};
    if (l == 5 && at_end && (r == 3 || r == 4))
      return SphericalType{Family::H, static_cast<std::uint32_t>(r)};
    return std::nullopt;
  }

  // A fork; all labels must be 3 and the three branch lengths decide.
  for (const Edge& e : edges)
    if (e.m != Order::finite(3)) return std::nullopt;
  std::vector<std::size_t> arms;
  GenIndex center = nodes[static_cast<std::size_t>(branch)];
  for (GenIndex start : adjacency(center)) {
    std::size_t len = 1;
    GenIndex prev = center, cur = start;
    while (true) {
      auto adj = adjacency(cur);
      if (adj.size() == 1) break;
      GenIndex nxt = adj[0] == prev ? adj[1] : adj[0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1)
    return SphericalType{Family::D, static_cast<std::uint32_t>(arms[2] + 3)};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return SphericalType{Family::E, static_cast<std::uint32_t>(arms[2] + 4)};
  return std::nullopt;
}

bool is_spherical_subset(const CoxeterMatrix& m, GenSet j) {
  for (const Component& c : irreducible_components(m, j).components)
    if (!c.spherical()) return false;
  return true;
}

std::optional<std::uint64_t> spherical_subset_order(const CoxeterMatrix& m, GenSet j) {
  std::uint64_t product = 1;
  for (const Component& c : irreducible_components(m, j).components) {
    if (!c.spherical()) return std::nullopt;
    std::uint64_t o = spherical_order(*c.type);
    if (product > ~0ull / o) return std::nullopt;
    product *= o;
  }
  return product;
}

bool is_minus_one_type(const SphericalType& t) {
  switch (t.family) {
    case Family::A: return t.rank == 1;
    case Family::C: return true;
    case Family::D: return t.rank % 2 == 0;
    case Family::E: return t.rank != 6;
    case Family::F: return true;
    case Family::H: return true;
    case Family::I2: return t.edge_label % 2 == 0;
  }
  return false;
}

FiniteIntrinsic spherical_intrinsic_table(const SphericalType& t) {
  bool trivial_center = !is_minus_one_type(t);
  bool is_a5 = t.family == Family::A && t.rank == 5;
  bool listed = (t.family == Family::A && t.rank == 1) ||
                (t.family == Family::H && t.rank == 3) ||
                (t.family == Family::E && t.rank == 7) ||
                matches_i2_multiple_of_4(t);
  return ((trivial_center && !is_a5) || listed) ? FiniteIntrinsic::Yes : FiniteIntrinsic::No;
}

bool matches_odd_dihedral(const SphericalType& t) {
  if (t.family == Family::A && t.rank == 2) return true;  // I2(3)
  return t.family == Family::I2 && t.edge_label % 2 == 1;
}

bool matches_odd_fork(const SphericalType& t) {
  if (t.family == Family::A && t.rank == 3) return true;  // D3
  return t.family == Family::D && t.rank % 2 == 1;
}

bool matches_i2_multiple_of_4(const SphericalType& t) {
  if (t.family == Family::C && t.rank == 2) return true;  // I2(4)
  return t.family == Family::I2 && t.edge_label % 4 == 0;
}

bool matches_i2_even_not_4k(const SphericalType& t) {
  return t.family == Family::I2 && t.edge_label % 4 == 2 && t.edge_label >= 6;
}

bool matches_odd_c(const SphericalType& t) {
  return t.family == Family::C && t.rank >= 3 && t.rank % 2 == 1;
}

Neighborhoods neighborhoods(const CoxeterMatrix& m, GenIndex s) {
  if (s >= m.rank()) throw UnknownGenerator("index out of range");
  Neighborhoods out;
  for (GenIndex t = 0; t < m.rank(); ++t) {
    if (t == s) continue;
    Order o = m.order(s, t);
    if (o == Order::finite(2)) out.perp = out.perp.with(t);
    else if (!o.is_finite()) out.infinity = out.infinity.with(t);
  }
  return out;
}

std::vector<GenSet> odd_classes(const CoxeterMatrix& m) {
  std::vector<GenSet> out;
  GenSet remaining = m.full_set();
  while (!remaining.empty()) {
    GenIndex seed = remaining.min();
    GenSet cls = GenSet::single(seed);
    GenSet frontier = cls;
    while (!frontier.empty()) {
      GenSet next;
      frontier.for_each([&](GenIndex u) {
        for (GenIndex v = 0; v < m.rank(); ++v) {
          Order o = m.order(u, v);
          if (u != v && !cls.contains(v) && o.is_finite() && o.value() % 2 == 1)
            next = next.with(v);
        }
      });
      cls = cls | next;
      frontier = next;
    }
    out.push_back(cls);
    remaining = remaining - cls;
  }
  return out;
}

bool odd_class_is_singleton(const CoxeterMatrix& m, GenIndex s) {
  for (GenIndex t = 0; t < m.rank(); ++t) {
    Order o = m.order(s, t);
    if (t != s && o.is_finite() && o.value() % 2 == 1) return false;
  }
  return true;
}

}  // namespace coxeter
