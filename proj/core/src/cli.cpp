#include "coxeter/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxeter/diagram.hpp"
#include "coxeter/geometry.hpp"
#include "coxeter/intrinsic.hpp"
#include "coxeter/oracle.hpp"
#include "coxeter/transforms.hpp"
#include "coxeter/words.hpp"

namespace coxeter::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitNotIntrinsic = 10;

struct Session {
  CoxeterMatrix matrix;
  WordEngine engine;
  EngineLimits limits;
};

Session open_session(const std::string& file, std::uint64_t max_enum, std::uint64_t order_cap) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open file '" + file + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  CoxeterMatrix m = parse_diagram(buffer.str());
  EngineLimits limits;
  limits.enumeration_cap = max_enum;
  limits.order_cap = order_cap;
  return Session{m, WordEngine(m, limits), limits};
}

json names_of(const CoxeterMatrix& m, GenSet set) {
  json out = json::array();
  set.for_each([&](GenIndex i) { out.push_back(m.name(i)); });
  return out;
}

json facts_json(const std::vector<Fact>& facts) {
  json out = json::array();
  for (const Fact& f : facts) out.push_back(json{{"kind", f.kind}, {"detail", f.detail}});
  return out;
}

json generating_set_json(const CoxeterMatrix& m, const transforms::GeneratingSet& gs) {
  json gens = json::array();
  for (std::size_t i = 0; i < gs.size(); ++i)
    gens.push_back(json{{"name", gs.names()[i]}, {"word", gs.word_of(i).to_string(m)}});
  json entries = json::array();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      const transforms::DerivedOrder& e = gs.entry(i, j);
      entries.push_back(json{{"pair", json::array({gs.names()[i], gs.names()[j]})},
                             {"order", e.order.to_string()},
                             {"provenance", e.provenance}});
    }
  json out;
  out["descriptor"] = gs.descriptor();
  out["generators"] = gens;
  out["derived_matrix"] = entries;
  out["certificates"] = facts_json(gs.certificates());
  if (auto derived = gs.derived_matrix()) {
    json types = json::array();
    for (const Component& c : irreducible_components(*derived, derived->full_set()).components)
      types.push_back(c.spherical() ? c.type->to_string() : std::string("non-spherical"));
    out["derived_type"] = types;
  }
  return out;
}

// Stable text rendering of the same data as the JSON report.
void render_text(const json& value, std::ostream& out, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (value.is_object()) {
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) {
        out << pad << it.key() << ":\n";
        render_text(it.value(), out, indent + 1);
      } else {
        out << pad << it.key() << ": " << (it.value().is_string()
                                               ? it.value().get<std::string>()
                                               : it.value().dump())
            << "\n";
      }
    }
  } else if (value.is_array()) {
    for (const auto& item : value) {
      if (item.is_object() || item.is_array()) {
        out << pad << "-\n";
        render_text(item, out, indent + 1);
      } else {
        out << pad << "- "
            << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
      }
    }
  } else {
    out << pad << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

void emit(const json& report, bool as_json, std::ostream& out) {
  if (as_json) {
    out << report.dump(2) << "\n";
  } else {
    render_text(report, out, 0);
  }
}

int run_verify_checks(Session& session, json& checks, std::uint64_t max_enum);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter diagram analysis: intrinsic reflections, generating-set "
               "transformations, finite-scale verification"};
  app.require_subcommand(1);

  std::uint64_t max_enum = 200000;
  std::uint64_t order_cap = 1000;
  app.add_option("--max-enum", max_enum, "cap on enumerated parabolic size")
      ->envname("COXTOOL_MAX_ENUM");
  app.add_option("--order-cap", order_cap, "cap for product-order searches")
      ->envname("COXTOOL_ORDER_CAP");

  std::string file, generator, candidate;
  bool as_json = false, do_verify = false;
  std::uint32_t radius = 4;

  auto add_common = [&](CLI::App* cmd, bool with_generator, bool with_candidate) {
    cmd->add_option("file", file, "diagram file")->required();
    if (with_generator)
      cmd->add_option("--generator", generator, "generator name")->required();
    if (with_candidate)
      cmd->add_option("--candidate", candidate, "blow-down candidate name")->required();
    cmd->add_flag("--json", as_json, "emit the report as JSON");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "decide whether a right-angled generator "
                                                    "is an intrinsic reflection");
  add_common(analyze, true, false);

  CLI::App* blowdown = app.add_subcommand("blowdown", "blow the generator pair down to a new "
                                                      "generating set");
  add_common(blowdown, true, true);
  blowdown->add_flag("--verify", do_verify, "run the brute-force verification when the group "
                                            "is finite");

  CLI::App* twist = app.add_subcommand("twist", "twist the diagram to make the candidate "
                                                "proper");
  add_common(twist, true, true);

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites on the diagram's "
                                                  "spherical subsets");
  add_common(verify, false, false);

  CLI::App* complex_cmd = app.add_subcommand("complex", "chamber, wall and root statistics");
  add_common(complex_cmd, false, false);
  complex_cmd->add_option("--radius", radius, "ball radius for infinite groups");

  std::vector<const char*> argv;
  argv.push_back("coxtool");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  json report;
  report["caps"] = json{{"max_enum", max_enum}, {"order_cap", order_cap}};

  auto finish = [&](int code) {
    report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    emit(report, as_json, out);
    return code;
  };

  try {
    Session session = open_session(file, max_enum, order_cap);
    const CoxeterMatrix& m = session.matrix;

    if (*analyze) {
      report["command"] = "analyze";
      report["input"] = json{{"file", file}, {"generator", generator}};
      GenIndex s = m.index_of(generator);
      intrinsic::IntrinsicVerdict verdict = intrinsic::decide_intrinsic(session.engine, s);
      json result;
      result["verdict"] = verdict.is_intrinsic ? "intrinsic" : "not-intrinsic";
      if (const auto* reason = verdict.minus_one()) {
        result["reason"] = json{{"kind", "minus-one-component"},
                                {"component", names_of(m, reason->component)},
                                {"type", reason->type.to_string()}};
      } else if (const auto* reason = verdict.blow_down()) {
        result["reason"] = json{{"kind", "blow-down-generator"},
                                {"a", m.name(reason->candidate.a)},
                                {"b", m.name(reason->candidate.b)},
                                {"component", names_of(m, reason->candidate.component)},
                                {"type", reason->candidate.component_type.to_string()},
                                {"proper", reason->candidate.proper}};
      } else {
        result["reason"] = json{{"kind", "all-checks-passed"}};
      }
      result["certificates"] = facts_json(verdict.certificates);
      report["result"] = result;
      return finish(verdict.is_intrinsic ? kExitOk : kExitNotIntrinsic);
    }

    if (*blowdown || *twist) {
      report["command"] = *blowdown ? "blowdown" : "twist";
      report["input"] =
          json{{"file", file}, {"generator", generator}, {"candidate", candidate}};
      GenIndex s = m.index_of(generator);
      GenIndex a = m.index_of(candidate);
      intrinsic::RightAngledContext ctx = intrinsic::build_context(m, s);
      intrinsic::Bdg1Result one = intrinsic::check_bdg1(session.engine, ctx, a);
      if (!one.candidate) throw CandidateInvalid(one.rejection);
      intrinsic::Bdg2Result two = intrinsic::check_bdg2(m, ctx, one.candidate->a,
                                                        one.candidate->b);
      if (!two.satisfied) throw CandidateInvalid("finite-order chain condition fails");

      if (*twist) {
        transforms::TwistResult result = transforms::diagram_twist(session.engine, s,
                                                                   *one.candidate);
        json body;
        body["no_op"] = result.no_op;
        body["twisted_diagram"] = render_diagram(result.twisted);
        body["new_generators"] = generating_set_json(m, result.new_generators);
        report["result"] = body;
        return finish(kExitOk);
      }

      transforms::GeneratingSet gs = transforms::blow_down(session.engine, s, *one.candidate);
      json body = generating_set_json(m, gs);
      if (do_verify) {
        json verification;
        auto expected = gs.derived_matrix();
        auto ambient_order = spherical_subset_order(m, m.full_set());
        if (!expected || !ambient_order || *ambient_order > max_enum) {
          verification["status"] = "skipped";
          verification["reason"] = "ambient group is not enumerable under the cap";
        } else {
          std::vector<std::pair<std::string, Word>> words;
          for (std::size_t i = 0; i < gs.size(); ++i)
            words.push_back({gs.names()[i], gs.word_of(i)});
          oracle::VerificationReport vr = oracle::verify_coxeter_generating_set(
              session.engine, words, *expected, max_enum);
          verification["status"] = oracle::to_string(vr.status);
          verification["evidence"] = vr.evidence;
          if (vr.status != oracle::Status::Verified) {
            body["verification"] = verification;
            report["result"] = body;
            return finish(kExitFailed);
          }
        }
        body["verification"] = verification;
      }
      report["result"] = body;
      return finish(kExitOk);
    }

    if (*verify) {
      report["command"] = "verify";
      report["input"] = json{{"file", file}};
      json checks = json::array();
      int rc = run_verify_checks(session, checks, max_enum);
      json counts{{"verified", 0}, {"refuted", 0}, {"skipped", 0}};
      for (const auto& c : checks) {
        std::string st = c["status"].get<std::string>();
        counts[st] = counts[st].get<int>() + 1;
      }
      report["result"] = json{{"checks", checks}, {"counts", counts}};
      return finish(rc);
    }

    // complex
    report["command"] = "complex";
    report["input"] = json{{"file", file}, {"radius", radius}};
    auto ambient_order = spherical_subset_order(m, m.full_set());
    bool finite = ambient_order && *ambient_order <= max_enum;

    std::vector<Element> chambers;
    if (finite) {
      auto grp = session.engine.group(m.full_set());
      for (std::uint32_t v = 0; v < grp->size(); ++v)
        chambers.push_back(session.engine.wrap(*grp, v));
    } else {
      std::vector<Element> frontier{session.engine.identity()};
      chambers.push_back(session.engine.identity());
      for (std::uint32_t layer = 0; layer < radius; ++layer) {
        std::vector<Element> next;
        for (const Element& c : frontier)
          for (GenIndex j = 0; j < m.rank(); ++j) {
            Element d = session.engine.multiply(c, session.engine.generator(j));
            if (d.length() == c.length() + 1 &&
                std::find(chambers.begin(), chambers.end(), d) == chambers.end()) {
              chambers.push_back(d);
              next.push_back(d);
            }
          }
        frontier = std::move(next);
      }
    }

    std::size_t panels = 0;
    std::map<std::string, std::size_t> wall_sizes;
    for (const Element& c : chambers) {
      for (GenIndex j = 0; j < m.rank(); ++j) {
        Element upper = session.engine.multiply(c, session.engine.generator(j));
        if (upper.length() < c.length()) continue;
        if (!finite &&
            std::find(chambers.begin(), chambers.end(), upper) == chambers.end())
          continue;
        ++panels;
        Element reflection = session.engine.multiply(
            session.engine.multiply(c, session.engine.generator(j)),
            session.engine.inverse(c));
        ++wall_sizes[reflection.to_string(m)];
      }
    }

    json roots = json::array();
    for (GenIndex j = 0; j < m.rank(); ++j) {
      geometry::Reflection t = geometry::Reflection::of_generator(session.engine, j);
      std::size_t pos = 0, neg = 0;
      for (const Element& c : chambers)
        (geometry::root_side(session.engine, t, {c}) == geometry::Side::Positive ? pos : neg)++;
      roots.push_back(json{{"reflection", m.name(j)},
                           {"positive", pos},
                           {"negative", neg}});
    }

    std::size_t max_wall = 0;
    for (const auto& [_, size] : wall_sizes) max_wall = std::max(max_wall, size);
    report["result"] = json{{"scope", finite ? "whole-group" : "ball"},
                            {"chambers", chambers.size()},
                            {"panels", panels},
                            {"walls", wall_sizes.size()},
                            {"largest_wall", max_wall},
                            {"roots", roots}};
    return finish(kExitOk);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UnknownGenerator& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NotRightAngled& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CandidateNotProper& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const CandidateInvalid& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

namespace {

int run_verify_checks(Session& session, json& checks, std::uint64_t max_enum) {
  const CoxeterMatrix& m = session.matrix;
  const WordEngine& engine = session.engine;
  bool any_refuted = false;

  auto push = [&](const std::string& subset, const std::string& claim,
                  oracle::Status status, const std::string& evidence) {
    checks.push_back(json{{"subset", subset},
                          {"claim", claim},
                          {"status", oracle::to_string(status)},
                          {"evidence", evidence}});
    any_refuted = any_refuted || status == oracle::Status::Refuted;
  };

  // The spherical subsets under test: every irreducible component plus the
  // full set when spherical.
  std::vector<GenSet> subsets;
  for (const Component& c : irreducible_components(m, m.full_set()).components)
    subsets.push_back(c.members);
  if (subsets.size() > 1) subsets.push_back(m.full_set());

  for (GenSet j : subsets) {
    std::string label = m.set_to_string(j);
    auto order = spherical_subset_order(m, j);
    if (!order) {
      push(label, "spherical classification", oracle::Status::Skipped, "subset not spherical");
      continue;
    }
    json types = json::array();
    std::size_t minus_one_components = 0;
    std::uint64_t reflection_formula = 0;
    for (const Component& c : irreducible_components(m, j).components) {
      types.push_back(c.type->to_string());
      if (is_minus_one_type(*c.type)) ++minus_one_components;
      const SphericalType& t = *c.type;
      switch (t.family) {
        case Family::A: reflection_formula += t.rank * (t.rank + 1) / 2; break;
        case Family::C: reflection_formula += t.rank * t.rank; break;
        case Family::D: reflection_formula += t.rank * (t.rank - 1); break;
        case Family::I2: reflection_formula += t.edge_label; break;
        case Family::F: reflection_formula += 24; break;
        case Family::H: reflection_formula += t.rank == 3 ? 15 : 60; break;
        case Family::E:
          reflection_formula += t.rank == 6 ? 36 : (t.rank == 7 ? 63 : 120);
          break;
      }
    }
    push(label, "classified type " + types.dump() + ", order formula", oracle::Status::Verified,
         std::to_string(*order));

    if (*order > max_enum) {
      push(label, "enumeration suite", oracle::Status::Skipped,
           "order exceeds the enumeration cap");
      continue;
    }

    auto grp = engine.group(j);
    push(label, "enumeration matches the order formula",
         grp->size() == *order ? oracle::Status::Verified : oracle::Status::Refuted,
         std::to_string(grp->size()));

    std::size_t expected_center = 1ull << minus_one_components;
    push(label, "center size matches the type table",
         grp->center().size() == expected_center ? oracle::Status::Verified
                                                 : oracle::Status::Refuted,
         std::to_string(grp->center().size()));

    std::uint32_t rho = grp->longest();
    bool involution = j.empty() || grp->multiply(rho, rho) == 0;
    bool permutes = true;
    j.for_each([&](GenIndex g) {
      std::uint32_t image = grp->conjugate(grp->vertex(Word{{g}}), rho);
      if (grp->normal_form(image).size() != 1) permutes = false;
    });
    push(label, "longest element is an involution normalizing the subset",
         involution && permutes ? oracle::Status::Verified : oracle::Status::Refuted,
         "length " + std::to_string(grp->length(rho)));

    push(label, "reflection count matches the positive-root formula",
         grp->reflections().size() == reflection_formula ? oracle::Status::Verified
                                                         : oracle::Status::Refuted,
         std::to_string(grp->reflections().size()));

    if (*order <= 1200) {
      // Gate property, exhaustive over panels as residues of rank 1.
      bool gates_ok = true;
      for (std::uint32_t c = 0; c < grp->size() && gates_ok; ++c)
        j.for_each([&](GenIndex g) {
          if (!gates_ok) return;
          geometry::Residue r{GenSet::single(g), engine.identity()};
          geometry::Chamber gate =
              geometry::projection(engine, r, {engine.wrap(*grp, c)});
          std::uint32_t gv = engine.vertex_in(*grp, gate.element);
          std::uint32_t cv = c;
          std::uint32_t d_cg =
              grp->length(grp->multiply(grp->inverse(cv), gv));
          for (std::uint32_t x : {grp->vertex(Word{}), grp->vertex(Word{{g}})}) {
            std::uint32_t d_cx = grp->length(grp->multiply(grp->inverse(cv), x));
            std::uint32_t d_gx = grp->length(grp->multiply(grp->inverse(gv), x));
            if (d_cx != d_cg + d_gx) gates_ok = false;
          }
        });
      push(label, "gate equation on rank-1 residues",
           gates_ok ? oracle::Status::Verified : oracle::Status::Refuted, "exhaustive");

      // Each panel is stabilized by exactly one reflection, and the two root
      // halves have equal size.
      bool walls_ok = true;
      for (std::uint32_t v : grp->reflections()) {
        std::size_t pos = 0;
        for (std::uint32_t c = 0; c < grp->size(); ++c)
          if (grp->length(grp->multiply(v, c)) > grp->length(c)) ++pos;
        if (pos * 2 != grp->size()) walls_ok = false;
      }
      push(label, "each root half holds half the chambers",
           walls_ok ? oracle::Status::Verified : oracle::Status::Refuted,
           std::to_string(grp->reflections().size()) + " reflections");
    } else {
      push(label, "geometry suite", oracle::Status::Skipped, "order above 1200");
    }
  }

  return any_refuted ? kExitFailed : kExitOk;
}

}  // namespace

}  // namespace coxeter::cli
