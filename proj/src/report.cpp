#include "divalg/report.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "divalg/catalog.hpp"
#include "divalg/errors.hpp"
#include "divalg/fusion_ring.hpp"
#include "divalg/io.hpp"
#include "divalg/monad.hpp"
#include "divalg/nimrep.hpp"

namespace divalg {

using nlohmann::json;

namespace {

constexpr std::string_view kBoundedSemantics =
    "bounded: the verdict quantifies over algebras with carrier size <= bound "
    "only";

std::vector<Multiplicity> to_vector(const ObjectVector& v) {
  const auto c = v.components();
  return {c.begin(), c.end()};
}

std::vector<std::string> labels_of(const std::vector<std::size_t>& indices,
                                   const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (auto i : indices) out.push_back(labels.at(i));
  return out;
}

std::string_view form_symbol(AlgebraForm form) {
  switch (form) {
    case AlgebraForm::XtensorXdual:
      return "X ⊗ X*";
    case AlgebraForm::dualXtensorX:
      return "*X ⊗ X";
    case AlgebraForm::internal_end_of_module:
      return "End(M)";
  }
  return "?";
}

std::vector<std::string> element_labels(const FiniteMonad& monad, std::size_t n) {
  std::vector<std::string> out;
  const auto size = monad.object_size(n);
  for (Element t = 0; t < size; ++t) out.push_back(monad.describe(n, t));
  return out;
}

json algebra_json(const FiniteMonad& monad, const EmAlgebra& a) {
  return {{"carrier_size", a.carrier.size()},
          {"carrier", a.carrier.labels()},
          {"domain", element_labels(monad, a.carrier.size())},
          {"structure", a.structure}};
}

json module_json(const RightModule& m) {
  return {{"carrier_size", m.carrier.size()},
          {"carrier", m.carrier.labels()},
          {"action", m.action}};
}

std::string markdown_cell(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string object_name(const std::vector<Multiplicity>& v,
                        const std::vector<std::string>& labels) {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const auto& label = labels.at(i);
    terms.push_back(v[i] == 1 ? label : std::to_string(v[i]) + "·" + label);
  }
  return terms.empty() ? "0" : join(terms, " ⊔ ");
}

json to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back(
        {{"axiom", v.axiom}, {"indices", v.indices}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  }
  return {{"passed", report.passed()}, {"violations", violations}};
}

json to_json(const ClassificationReport& report,
             const std::vector<std::string>& ring_labels,
             const std::vector<std::string>& basis_labels) {
  json out;
  out["object"] = report.object;
  out["object_name"] = object_name(report.object, basis_labels);
  out["algebra_form"] = to_string(report.algebra_form);
  out["algebra"] = to_vector(report.algebra);
  out["algebra_name"] = object_name(to_vector(report.algebra), ring_labels);
  out["simplistic"] = report.simplistic();
  out["essential"] = report.essential();
  out["simplistic_left"] = report.simplistic_left;
  out["simplistic_right"] = report.simplistic_right;
  out["essential_left"] = report.essential_left;
  out["essential_right"] = report.essential_right;
  if (report.inverse_witness) {
    const auto w = to_vector(*report.inverse_witness);
    out["inverse_witness"] = {{"vector", w}, {"name", object_name(w, ring_labels)}};
  } else {
    out["inverse_witness"] = nullptr;
  }
  json reach = json::array();
  for (const auto& [k, i] : report.reach_witnesses) {
    reach.push_back({{"target", basis_labels.at(k)}, {"acting", ring_labels.at(i)}});
  }
  out["reach_witnesses"] = reach;
  out["unreachable"] = labels_of(report.unreachable, basis_labels);
  return out;
}

json to_json(const FiniteMonad& monad, const AdjunctionVerdict& verdict) {
  json out;
  out["status"] = to_string(verdict.status);
  if (verdict.status == Triviality::inapplicable) {
    out["trivial"] = nullptr;
  } else {
    out["trivial"] = verdict.trivial_up_to_bound();
  }
  out["bound"] = verdict.bound;
  out["semantics"] = kBoundedSemantics;
  out["isoclasses"] = verdict.isoclasses();
  json algebras = json::array();
  for (const auto& a : verdict.algebras) algebras.push_back(algebra_json(monad, a));
  out["algebras"] = algebras;
  json witnesses = json::array();
  for (const auto& w : verdict.free_witnesses) {
    witnesses.push_back({{"algebra", w.algebra_index},
                         {"generator_size", w.generator_size},
                         {"bijection", w.bijection}});
  }
  out["free_witnesses"] = witnesses;
  out["non_free"] = verdict.non_free;
  out["counterexample"] = verdict.counterexample
                              ? algebra_json(monad, *verdict.counterexample)
                              : json(nullptr);
  out["laws_checked_up_to"] = verdict.laws_checked_up_to
                                  ? json(*verdict.laws_checked_up_to)
                                  : json(nullptr);
  return out;
}

json to_json(const ComparisonReport& report) {
  json pairs = json::array();
  for (const auto& p : report.pairs) {
    pairs.push_back({{"source", p.source},
                     {"target", p.target},
                     {"kleisli", p.kleisli},
                     {"em", p.em},
                     {"images_are_em_morphisms", p.images_are_em_morphisms},
                     {"injective", p.injective}});
  }
  return {{"fully_faithful", report.fully_faithful()}, {"pairs", pairs}};
}

json to_json(const VeryStrongReport& report) {
  json mismatches = json::array();
  for (const auto& w : report.cardinality_mismatches) {
    mismatches.push_back(
        {{"x", w.x_size}, {"y", w.y_size}, {"lhs", w.lhs}, {"rhs", w.rhs}});
  }
  json non_bijective = json::array();
  for (const auto& [x, y] : report.non_bijective) {
    non_bijective.push_back({{"x", x}, {"y", y}});
  }
  return {{"very_strong", report.very_strong},
          {"cardinality_mismatches", mismatches},
          {"non_bijective", non_bijective}};
}

json to_json(const MonoidObject& a) {
  return {{"ambient", to_string(a.ambient)},
          {"carrier", a.carrier.labels()},
          {"multiplication", a.multiplication},
          {"unit", a.unit},
          {"axioms", to_json(check_monoid_axioms(a))}};
}

json to_json(const ModuleSurvey& survey) {
  json out;
  out["status"] = to_string(survey.status);
  out["bound"] = survey.bound;
  out["semantics"] = kBoundedSemantics;
  out["isoclasses"] = survey.modules.size();
  json modules = json::array();
  for (const auto& m : survey.modules) modules.push_back(module_json(m));
  out["modules"] = modules;
  json witnesses = json::array();
  for (const auto& w : survey.free_witnesses) {
    witnesses.push_back({{"module", w.module_index},
                         {"generator_size", w.generator_size},
                         {"bijection", w.bijection}});
  }
  out["free_witnesses"] = witnesses;
  out["counterexample"] =
      survey.counterexample ? module_json(*survey.counterexample) : json(nullptr);
  return out;
}

json report_to_json(const RunReport& report) {
  json inputs = json::array();
  for (const auto& d : report.inputs) {
    inputs.push_back({{"source", d.source}, {"sha256", d.sha256}});
  }
  json out;
  out["command"] = report.command;
  out["inputs"] = inputs;
  out["kind"] = report.kind;
  out["payload"] = report.payload;
  out["version"] = report.version;
  if (report.elapsed_ms) out["elapsed_ms"] = *report.elapsed_ms;
  return out;
}

std::string export_report(const RunReport& report, ReportFormat format) {
  if (format == ReportFormat::json) return report_to_json(report).dump(2) + "\n";

  std::ostringstream md;
  md << "# divalg " << report.kind << "\n\n";
  md << "| field | value |\n|---|---|\n";
  md << "| command | `" << join(report.command, " ") << "` |\n";
  md << "| version | " << report.version << " |\n";
  for (const auto& d : report.inputs) {
    md << "| input `" << d.source << "` | sha256 " << d.sha256 << " |\n";
  }
  if (report.elapsed_ms) md << "| elapsed_ms | " << *report.elapsed_ms << " |\n";

  const auto& p = report.payload;
  if (p.is_object() && p.contains("classification")) {
    const auto& c = p["classification"];
    const auto form =
        c["algebra_form"] == "XtensorXdual"
            ? form_symbol(AlgebraForm::XtensorXdual)
            : c["algebra_form"] == "dualXtensorX"
                  ? form_symbol(AlgebraForm::dualXtensorX)
                  : form_symbol(AlgebraForm::internal_end_of_module);
    md << "\n## Classification\n\n";
    md << "| object | algebra | form | simplistic | essential |\n";
    md << "|---|---|---|---|---|\n";
    md << "| " << markdown_cell(c["object_name"]) << " | "
       << markdown_cell(c["algebra_name"]) << " | " << form << " | "
       << c["simplistic"].dump() << " | " << c["essential"].dump() << " |\n";
    if (!c["unreachable"].empty()) {
      md << "\nNot in the essential image: "
         << join(c["unreachable"].get<std::vector<std::string>>(), ", ") << "\n";
    }
  } else if (p.is_object()) {
    bool header = false;
    for (const auto& [key, value] : p.items()) {
      if (value.is_structured()) continue;
      if (!header) {
        md << "\n## Verdict\n\n| key | value |\n|---|---|\n";
        header = true;
      }
      md << "| " << key << " | " << markdown_cell(value) << " |\n";
    }
  }
  md << "\n## Payload\n\n```json\n" << p.dump(2) << "\n```\n";
  return md.str();
}

namespace {

struct RingSource {
  std::string builtin;
  std::string file;
};

struct Loaded {
  FusionRing ring;
  InputDigest digest;
};

Loaded load_ring(const RingSource& src) {
  if (!src.builtin.empty() && !src.file.empty()) {
    throw ParseError("give either a ring file or --builtin, not both");
  }
  if (!src.builtin.empty()) {
    auto entry = catalog_entry(src.builtin);
    const auto bytes = ring_to_json(entry.ring).dump();
    return {std::move(entry.ring), {"builtin:" + entry.name, sha256_hex(bytes)}};
  }
  if (src.file.empty()) throw ParseError("a ring file or --builtin is required");
  const auto bytes = read_file(src.file);
  return {FusionRing(parse_ring_json(bytes)), {src.file, sha256_hex(bytes)}};
}

std::uint64_t env_number(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(raw, &used);
    if (used != std::string_view(raw).size()) throw std::invalid_argument(raw);
    return value;
  } catch (const std::exception&) {
    throw ParseError(std::string(name) + " must be a non-negative integer");
  }
}

SearchOptions search_options() {
  SearchOptions options;
  options.candidate_budget =
      env_number("DIVALG_CANDIDATE_BUDGET", options.candidate_budget);
  options.table_cap = static_cast<std::size_t>(
      env_number("DIVALG_TABLE_CAP", options.table_cap));
  return options;
}

// Thrown by handlers that produced a report but must exit with 1.
struct ReportedFailure {
  RunReport report;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Division algebra classification toolkit", "divalg"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  bool timing = false;
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "markdown"}));
  app.add_flag("--timing", timing, "Include elapsed time in the report");

  RunReport report;
  report.command = args;
  std::function<void()> action;

  RingSource ring_src;
  std::string object_text;
  std::string side_text = "left";
  std::string nimrep_file;
  bool regular = false;
  std::string name;
  std::size_t marks = 1;
  std::optional<std::size_t> max_size_arg;
  std::size_t freevec_cap = 4;

  const auto add_ring_source = [&](CLI::App* sub, bool positional) {
    if (positional) sub->add_option("file", ring_src.file, "Ring JSON file");
    else sub->add_option("--ring", ring_src.file, "Ring JSON file");
    sub->add_option("--builtin", ring_src.builtin, "Catalog ring name");
  };

  auto* ring = app.add_subcommand("ring", "Fusion ring commands");
  ring->require_subcommand(1);
  auto* ring_validate = ring->add_subcommand("validate", "Check the ring axioms");
  add_ring_source(ring_validate, true);
  ring_validate->callback([&] {
    action = [&] {
      auto loaded = load_ring(ring_src);
      report.kind = "ring validate";
      report.inputs.push_back(loaded.digest);
      const auto validation = validate_ring(loaded.ring);
      report.payload = {{"rank", loaded.ring.rank()},
                        {"unit_is_simple", loaded.ring.unit_is_simple()},
                        {"validation", to_json(validation)}};
      if (!validation.passed()) throw ReportedFailure{report};
    };
  });

  auto* ring_classify =
      ring->add_subcommand("classify", "Classify the internal End of an object");
  add_ring_source(ring_classify, false);
  ring_classify->add_option("--object", object_text, "Label or multiplicity vector")
      ->required();
  ring_classify->add_option("--side", side_text, "left: X ⊗ X*, right: *X ⊗ X")
      ->check(CLI::IsMember({"left", "right"}));
  ring_classify->callback([&] {
    action = [&] {
      auto loaded = load_ring(ring_src);
      report.kind = "ring classify";
      report.inputs.push_back(loaded.digest);
      const auto validation = validate_ring(loaded.ring);
      if (!validation.passed()) {
        report.payload = {{"validation", to_json(validation)}};
        throw ReportedFailure{report};
      }
      const auto& r = loaded.ring;
      const auto x = parse_object(r, object_text);
      const auto side = side_text == "left" ? Side::left : Side::right;
      const auto c = classify_internal_end(r, x, side);
      json fp;
      try {
        fp = {{"object", fp_dimension(r, x)}, {"algebra", fp_dimension(r, c.algebra)}};
      } catch (const ConvergenceError&) {
        fp = nullptr;
      }
      report.payload = {{"side", to_string(side)},
                        {"classification", to_json(c, r.labels(), r.labels())},
                        {"fp_dimension", fp}};
    };
  });

  auto* nimrep = app.add_subcommand("nimrep", "NIM-rep commands");
  nimrep->require_subcommand(1);
  const auto add_nimrep_source = [&](CLI::App* sub) {
    add_ring_source(sub, false);
    sub->add_option("--nimrep", nimrep_file, "NIM-rep JSON file");
    sub->add_flag("--regular", regular, "Use the regular NIM-rep of the ring");
  };
  struct LoadedModule {
    Loaded loaded;
    NimRepData nr;
    ValidationReport validation;
  };
  // Loads ring and NIM-rep and records digests. An invalid ring ends the run
  // with exit 1; the NIM-rep validation is returned.
  const auto load_nimrep = [&]() -> LoadedModule {
    auto loaded = load_ring(ring_src);
    report.inputs.push_back(loaded.digest);
    const auto ring_validation = validate_ring(loaded.ring);
    if (!ring_validation.passed()) {
      report.payload = {{"ring_validation", to_json(ring_validation)}};
      throw ReportedFailure{report};
    }
    if (regular == !nimrep_file.empty()) {
      throw ParseError("give exactly one of --nimrep or --regular");
    }
    NimRepData nr;
    if (regular) {
      nr = regular_nimrep(loaded.ring);
      report.inputs.push_back(
          {"regular:" + loaded.digest.source, sha256_hex(nimrep_to_json(nr).dump())});
    } else {
      const auto bytes = read_file(nimrep_file);
      nr = parse_nimrep_json(bytes);
      report.inputs.push_back({nimrep_file, sha256_hex(bytes)});
    }
    auto validation = validate_nimrep(loaded.ring, nr);
    return {std::move(loaded), std::move(nr), std::move(validation)};
  };

  auto* nimrep_validate = nimrep->add_subcommand("validate", "Check a NIM-rep");
  add_nimrep_source(nimrep_validate);
  nimrep_validate->callback([&] {
    action = [&] {
      report.kind = "nimrep validate";
      const auto [loaded, nr, validation] = load_nimrep();
      report.payload = {{"module_rank", nr.module_rank()},
                        {"indecomposable", validation.passed() && is_indecomposable(nr)},
                        {"validation", to_json(validation)}};
      if (!validation.passed()) throw ReportedFailure{report};
    };
  });

  auto* nimrep_classify = nimrep->add_subcommand(
      "classify", "Classify the internal End of a module object");
  add_nimrep_source(nimrep_classify);
  nimrep_classify->add_option("--object", object_text, "Module label or vector")
      ->required();
  nimrep_classify->callback([&] {
    action = [&] {
      report.kind = "nimrep classify";
      const auto [loaded, nr, validation] = load_nimrep();
      if (!validation.passed()) {
        report.payload = {{"validation", to_json(validation)}};
        throw ReportedFailure{report};
      }
      const auto m = parse_module_object(nr, object_text);
      const auto c = classify_internal_end_nimrep(loaded.ring, nr, m);
      report.payload = {
          {"classification", to_json(c, loaded.ring.labels(), nr.module_labels)}};
    };
  });

  auto* catalog = app.add_subcommand("catalog", "Builtin rings");
  catalog->require_subcommand(1);
  auto* catalog_list = catalog->add_subcommand("list", "Names and ranks");
  catalog_list->callback([&] {
    action = [&] {
      report.kind = "catalog list";
      json entries = json::array();
      for (const auto& e : catalog_entries()) {
        entries.push_back({{"name", e.name},
                           {"rank", e.ring.rank()},
                           {"unit_is_simple", e.ring.unit_is_simple()},
                           {"provenance", e.provenance}});
      }
      report.payload = {{"entries", entries}};
    };
  });
  auto* catalog_export =
      catalog->add_subcommand("export", "Print a builtin as a ring file");
  catalog_export->add_option("name", name, "Catalog ring name")->required();
  catalog_export->callback([&] {
    action = [&] {
      // Raw ring file, so the output can be fed back to `ring validate`.
      out << ring_to_json(builtin_ring(name)).dump(2) << "\n";
    };
  });

  auto* monad = app.add_subcommand("monad", "Finite-set monad commands");
  monad->require_subcommand(1);
  const auto add_monad_args = [&](CLI::App* sub) {
    sub->add_option("name", name, "maybe, identity, exception or freevec2")
        ->required();
    sub->add_option("--marks", marks, "|S| for the exception monad");
    sub->add_option("--max-size", max_size_arg, "Largest carrier size");
  };
  const auto record_monad = [&](const FiniteMonad& m) {
    report.inputs.push_back({"builtin:" + m.name(), sha256_hex(m.name())});
  };

  auto* monad_check = monad->add_subcommand(
      "check", "Monad laws and bounded adjunction-triviality");
  add_monad_args(monad_check);
  monad_check->add_option("--freevec-cap", freevec_cap,
                          "Carrier cap for freevec2 enumeration");
  monad_check->callback([&] {
    action = [&] {
      const auto max_size = max_size_arg.value_or(3);
      const auto spec = monad_spec(name, marks);
      const auto m = make_monad(spec);
      report.kind = "monad check";
      record_monad(*m);
      auto bound = max_size;
      if (spec.kind == MonadKind::freevec2 && bound > freevec_cap) bound = freevec_cap;
      const auto options = search_options();
      const auto laws = check_monad_laws(*m, bound, options.table_cap);
      const auto verdict = check_adjunction_trivial(*m, bound, options);
      report.payload = to_json(*m, verdict);
      report.payload["monad"] = m->name();
      report.payload["ambient"] = to_string(m->ambient());
      report.payload["requested_bound"] = max_size;
      report.payload["laws"] = to_json(laws.report);
      report.payload["laws"]["checked_up_to"] =
          laws.checked_up_to ? json(*laws.checked_up_to) : json(nullptr);
    };
  });

  auto* monad_strength =
      monad->add_subcommand("strength", "Strength axioms and the T(1) algebra");
  add_monad_args(monad_strength);
  monad_strength->callback([&] {
    action = [&] {
      const auto max_size = max_size_arg.value_or(3);
      const auto m = make_monad(monad_spec(name, marks));
      report.kind = "monad strength";
      record_monad(*m);
      const auto options = search_options();
      const auto strength = check_strength(*m, max_size, options);
      report.payload = {{"monad", m->name()},
                        {"max_size", max_size},
                        {"strength", to_json(strength)},
                        {"very_strong", to_json(is_very_strong(*m, max_size, options))}};
      report.payload["algebra_T1"] =
          strength.passed() ? to_json(algebra_from_strength(*m, max_size, options))
                            : json(nullptr);
    };
  });

  auto* monad_agreement = monad->add_subcommand(
      "agreement", "Adjunction-triviality against freeness of T(1)-modules");
  add_monad_args(monad_agreement);
  monad_agreement->callback([&] {
    action = [&] {
      const auto max_size = max_size_arg.value_or(3);
      const auto m = make_monad(monad_spec(name, marks));
      report.kind = "monad agreement";
      record_monad(*m);
      const auto a = check_adjtriv_module_agreement(*m, max_size, search_options());
      report.payload = {{"monad", m->name()},
                        {"bound", max_size},
                        {"agree", a.agree},
                        {"monadic", to_json(*m, a.monadic)},
                        {"essential", to_json(a.essential)}};
    };
  });

  auto* monad_comparison = monad->add_subcommand(
      "comparison", "Kleisli to Eilenberg-Moore comparison functor");
  add_monad_args(monad_comparison);
  monad_comparison->callback([&] {
    action = [&] {
      const auto max_size = max_size_arg.value_or(2);
      const auto m = make_monad(monad_spec(name, marks));
      report.kind = "monad comparison";
      record_monad(*m);
      report.payload = to_json(check_comparison_fully_faithful(*m, max_size,
                                                               search_options()));
      report.payload["monad"] = m->name();
      report.payload["max_size"] = max_size;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const auto render = [&](RunReport& r, const std::chrono::steady_clock::time_point start) {
    if (timing) {
      r.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    }
    if (!r.kind.empty()) {
      out << export_report(r, format == "markdown" ? ReportFormat::markdown
                                                    : ReportFormat::json);
    }
  };

  const auto start = std::chrono::steady_clock::now();
  if (!action) {
    err << app.help();
    return 2;
  }
  try {
    action();
    render(report, start);
    return 0;
  } catch (ReportedFailure& failure) {
    render(failure.report, start);
    return 1;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ConvergenceError& e) {
    err << "no convergence: " << e.what() << "\n";
    return 3;
  } catch (const AxiomError& e) {
    err << "axiom failure: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace divalg
