#include "hgg/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "hgg/classify.hpp"
#include "hgg/error.hpp"
#include "hgg/io.hpp"

namespace hgg::cli {

namespace {

struct Config {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::uint64_t cap = kTransversalSampleCap;
  int verbosity = 0;
};

std::vector<Elem> parse_index_list(const std::string& text) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "not an index list: \"" + text + "\"");
    }
  }
  return out;
}

std::string join(const std::vector<Elem>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

FiniteGroup load_group(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    const std::string text = load_text_file(arg);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return group_from_json(parse_json(text));
    return parse_cayley_text(text, std::filesystem::path(arg).stem().string());
  }
  return group_from_spec(arg);
}

HypergroupOverGroup load_hypergroup(const std::string& path) { return hypergroup_from_json(load_json_file(path)); }

void emit(std::ostream& out, const std::string& text, const std::optional<std::string>& file) {
  if (file) {
    save_text_file(*file, text);
  } else {
    out << text;
  }
}

void print_table(std::ostream& out, const Table& t) {
  for (int r = 0; r < t.rows(); ++r) {
    for (int c = 0; c < t.cols(); ++c) out << (c ? " " : "") << t(r, c);
    out << '\n';
  }
}

void print_report(std::ostream& out, const AxiomReport& report) {
  for (const auto& s : report.statuses) {
    out << to_string(s.axiom) << ' ' << (s.pass ? "PASS" : "FAIL");
    if (s.witness) out << "  " << s.witness->law << " at (" << join(s.witness->args) << "): " << s.witness->detail;
    out << '\n';
  }
  out << "overall " << (report.overall ? "PASS" : "FAIL") << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Hypergroups over groups: construction, verification, functors and classification", "hgg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "Seed for transversal sampling");
  app.add_option("--cap", cfg.cap, "Transversals sampled per (G, H) beyond this count");
  app.add_flag("-v,--verbose", cfg.verbosity, "Verbosity");

  std::function<int()> action;
  auto json = [&] { return cfg.format == "json"; };

  // group
  auto* group = app.add_subcommand("group", "Finite groups")->require_subcommand(1);
  std::string group_spec;
  auto* g_info = group->add_subcommand("info", "Order, identity, element orders");
  g_info->add_option("spec", group_spec, "Group spec or table file")->required();
  g_info->callback([&] {
    action = [&] {
      const FiniteGroup g = load_group(group_spec);
      if (json()) {
        Json j = to_json(g);
        j["abelian"] = g.is_abelian();
        std::vector<int> orders;
        for (Elem x = 0; x < g.order(); ++x) orders.push_back(g.element_order(x));
        j["element_orders"] = orders;
        out << dump(j);
      } else {
        out << "name " << g.name() << "\norder " << g.order() << "\nidentity " << g.identity() << "\nabelian "
            << (g.is_abelian() ? "yes" : "no") << "\nelement orders";
        for (Elem x = 0; x < g.order(); ++x) out << ' ' << g.element_order(x);
        out << '\n';
      }
      return 0;
    };
  });
  auto* g_subs = group->add_subcommand("subgroups", "All subgroups");
  g_subs->add_option("spec", group_spec, "Group spec or table file")->required();
  g_subs->callback([&] {
    action = [&] {
      const FiniteGroup g = load_group(group_spec);
      const auto subs = enumerate_subgroups(g);
      if (json()) {
        Json list = Json::array();
        for (const auto& h : subs)
          list.push_back({{"elements", h.elements}, {"normal", is_normal(g, h)},
                          {"index", g.order() / static_cast<int>(h.size())}});
        out << dump(list);
      } else {
        for (const auto& h : subs)
          out << "{" << join(h.elements) << "} order " << h.size() << (is_normal(g, h) ? " normal" : "") << '\n';
      }
      return 0;
    };
  });

  // hg
  auto* hg_cmd = app.add_subcommand("hg", "Hypergroups over groups")->require_subcommand(1);
  std::string hg_group, hg_subgroup, hg_transversal = "auto";
  std::optional<std::string> out_file;
  auto* construct = hg_cmd->add_subcommand("construct", "Standard construction from (G, H, M)");
  construct->add_option("--group", hg_group, "Group spec or table file")->required();
  construct->add_option("--subgroup", hg_subgroup, "Comma-separated generators (empty for the trivial subgroup)")
      ->required();
  construct->add_option("--transversal", hg_transversal, "Comma-separated representatives or auto");
  construct->add_option("-o,--output", out_file, "Write the hypergroup here");
  construct->callback([&] {
    action = [&] {
      const FiniteGroup g = load_group(hg_group);
      const Subgroup h = subgroup_closure(g, parse_index_list(hg_subgroup));
      const Transversal t =
          hg_transversal == "auto" ? transversal_at(g, h, 0) : Transversal(g, h, parse_index_list(hg_transversal));
      HypergroupOverGroup hg = standard_construction(t);
      hg.ambient = Ambient{g, h, t.reps()};
      emit(out, dump(to_json(hg)), out_file);
      return 0;
    };
  });

  std::string file_a, file_b, file_c;
  auto* verify = hg_cmd->add_subcommand("verify", "Check every axiom");
  verify->add_option("file", file_a, "Hypergroup JSON")->required();
  verify->callback([&] {
    action = [&] {
      const auto report = verify_axioms(load_hypergroup(file_a));
      if (json()) {
        out << dump(to_json(report));
      } else {
        print_report(out, report);
      }
      if (!report.overall) {
        for (const auto& s : report.statuses)
          if (!s.pass) {
            err << "axiom " << to_string(s.axiom) << " fails at (" << join(s.witness->args) << ")\n";
            break;
          }
        return 1;
      }
      return 0;
    };
  });

  auto* identities = hg_cmd->add_subcommand("identities", "Check the identities derived from the ambient group");
  identities->add_option("file", file_a, "Hypergroup JSON with ambient")->required();
  identities->callback([&] {
    action = [&] {
      const auto report = check_derived_identities(load_hypergroup(file_a));
      if (json()) {
        Json list = Json::array();
        for (const auto& s : report.identities)
          list.push_back({{"name", s.name}, {"pass", s.pass}, {"witness", s.witness}});
        out << dump(Json{{"overall", report.overall}, {"identities", list}});
      } else {
        for (const auto& s : report.identities) {
          out << (s.pass ? "PASS " : "FAIL ") << s.name;
          if (!s.pass) out << " at (" << join(s.witness) << ")";
          out << '\n';
        }
      }
      return report.overall ? 0 : 1;
    };
  });

  Elem solve_a = 0, solve_b = 0;
  bool use_lemma = false;
  auto* solve = hg_cmd->add_subcommand("solve", "Solve [x, a] = b");
  solve->add_option("file", file_a, "Hypergroup JSON")->required();
  solve->add_option("--a", solve_a, "a")->required();
  solve->add_option("--b", solve_b, "b")->required();
  solve->add_flag("--lemma", use_lemma, "Also solve through the ambient inverse decomposition");
  solve->callback([&] {
    action = [&] {
      const auto hg = load_hypergroup(file_a);
      const Elem x = quasigroup_divide(hg, solve_a, solve_b);
      std::optional<LemmaSolution> lemma;
      if (use_lemma) lemma = lemma_solve(hg, solve_a, solve_b);
      if (json()) {
        Json j{{"x", x}};
        if (lemma) {
          j["lemma_x"] = lemma->x;
          j["companion_holds"] = lemma->companion_holds;
        }
        out << dump(j);
      } else {
        out << "x " << x << '\n';
        if (lemma)
          out << "lemma x " << lemma->x << "\ncompanion " << (lemma->companion_holds ? "holds" : "fails") << '\n';
      }
      if (lemma && (lemma->x != x || !lemma->companion_holds)) {
        err << "lemma solution disagrees with the quasigroup division\n";
        return 3;
      }
      return 0;
    };
  });

  auto* iso = hg_cmd->add_subcommand("iso", "Find an isomorphism");
  iso->add_option("a", file_a, "Hypergroup JSON")->required();
  iso->add_option("b", file_b, "Hypergroup JSON")->required();
  iso->callback([&] {
    action = [&] {
      const auto f = find_isomorphism(load_hypergroup(file_a), load_hypergroup(file_b));
      if (!f) {
        if (json()) out << dump(Json{{"isomorphic", false}});
        else out << "not isomorphic\n";
        return 1;
      }
      if (json()) {
        Json j = morphism_to_json(f->f0, f->f1);
        j["isomorphic"] = true;
        out << dump(j);
      } else {
        out << "isomorphic\nf0 " << join(f->f0) << "\nf1 " << join(f->f1) << '\n';
      }
      return 0;
    };
  });

  auto* morphism = hg_cmd->add_subcommand("morphism", "Verify a morphism between two hypergroups");
  morphism->add_option("source", file_a, "Hypergroup JSON")->required();
  morphism->add_option("target", file_b, "Hypergroup JSON")->required();
  morphism->add_option("morphism", file_c, "Morphism JSON")->required();
  morphism->callback([&] {
    action = [&] {
      const auto [f0, f1] = morphism_from_json(load_json_file(file_c));
      const auto check = verify_morphism(load_hypergroup(file_a), load_hypergroup(file_b), f0, f1);
      if (json()) {
        out << dump(Json{{"ok", check.ok}, {"relation", check.relation}, {"witness", check.witness}});
      } else if (check.ok) {
        out << "morphism\n";
      } else {
        out << "not a morphism: " << check.relation << " fails at (" << join(check.witness) << ")\n";
      }
      return check.ok ? 0 : 1;
    };
  });

  // functor
  auto* functor = app.add_subcommand("functor", "Functors into hypergroups over groups")->require_subcommand(1);
  std::string functor_arg;
  int dim = 1;
  auto* f_group = functor->add_subcommand("group", "M |-> M over the trivial group");
  f_group->add_option("spec", functor_arg, "Group spec or table file")->required();
  f_group->add_option("-o,--output", out_file, "Write the hypergroup here");
  f_group->callback([&] {
    action = [&] {
      emit(out, dump(to_json(functor_group(load_group(functor_arg)))), out_file);
      return 0;
    };
  });
  auto* f_vs = functor->add_subcommand("vs", "k^dim over the multiplicative group of k");
  f_vs->add_option("field", functor_arg, "Field spec")->required();
  f_vs->add_option("dim", dim, "Dimension")->required()->check(CLI::PositiveNumber);
  f_vs->add_option("-o,--output", out_file, "Write the hypergroup here");
  f_vs->callback([&] {
    action = [&] {
      emit(out, dump(to_json(functor_vector_space(field_from_spec(functor_arg), dim))), out_file);
      return 0;
    };
  });
  auto* f_field = functor->add_subcommand("field", "F over its multiplicative group");
  f_field->add_option("field", functor_arg, "Field spec")->required();
  f_field->add_option("-o,--output", out_file, "Write the hypergroup here");
  f_field->callback([&] {
    action = [&] {
      emit(out, dump(to_json(functor_field(field_from_spec(functor_arg)))), out_file);
      return 0;
    };
  });

  // reconstruct-field
  bool lenient = false;
  auto* recon = app.add_subcommand("reconstruct-field", "Recover the scalar field of a hypergroup");
  recon->add_option("file", file_a, "Hypergroup JSON")->required();
  recon->add_flag("--division-ring", lenient, "Skip the abelian-H requirement");
  recon->callback([&] {
    action = [&] {
      const auto r = reconstruct_field(load_hypergroup(file_a), !lenient);
      if (json()) {
        Json j{{"diagnostic", to_string(r.diagnostic)}, {"detail", r.detail}, {"witness", r.witness},
               {"is_field_hypergroup", r.is_field_hypergroup}};
        if (r.field) j["field"] = to_json(*r.field);
        out << dump(j);
      } else {
        out << "diagnostic " << to_string(r.diagnostic) << '\n';
        if (!r.ok()) out << "detail " << r.detail << "\nwitness " << join(r.witness) << '\n';
        if (r.field) {
          out << "field order " << r.field->order() << " characteristic " << r.field->p << '\n';
          out << "addition\n";
          print_table(out, r.field->add_table);
          out << "multiplication\n";
          print_table(out, r.field->mul_table);
          out << "field hypergroup " << (r.is_field_hypergroup ? "yes" : "no") << '\n';
        }
      }
      if (!r.ok()) {
        err << "reconstruction failed: " << to_string(r.diagnostic) << '\n';
        return 1;
      }
      if (!r.is_field_hypergroup) {
        err << "k is a field but M is not one-dimensional over it\n";
        return 1;
      }
      return 0;
    };
  });

  // classify
  std::optional<int> max_order;
  bool abstract = false;
  int abstract_m = 1;
  std::string abstract_h = "E";
  std::optional<int> probe_order;
  std::optional<std::string> out_dir;
  auto* classify = app.add_subcommand("classify", "Classify hypergroups up to isomorphism");
  classify->set_help_flag("--help", "Print this help message and exit");  // frees --h
  auto* max_opt = classify->add_option("--max-order", max_order, "Sweep builtin groups up to this order")
                      ->check(CLI::Range(1, kMaxSweepOrder));
  auto* abs_opt = classify->add_flag("--abstract", abstract, "Enumerate abstract hypergroups");
  max_opt->excludes(abs_opt);
  classify->add_option("--m", abstract_m, "|M| for --abstract")->check(CLI::Range(1, kMaxAbstractM));
  classify->add_option("--h", abstract_h, "H for --abstract");
  classify->add_option("--probe", probe_order, "Match abstract classes against a sweep of this order")
      ->check(CLI::Range(1, kMaxSweepOrder));
  classify->add_option("-o,--output", out_dir, "Export the catalog to this directory");
  classify->callback([&] {
    action = [&] {
      if (!max_order && !abstract) throw CLI::ValidationError("classify", "one of --max-order or --abstract is needed");
      Catalog catalog;
      if (abstract) {
        const FiniteGroup h = load_group(abstract_h);
        if (h.order() > kMaxAbstractH)
          throw Error(ErrorCode::SizeLimitExceeded, "|H| is bounded to " + std::to_string(kMaxAbstractH));
        catalog = enumerate_abstract(abstract_m, h);
      } else {
        catalog = sweep_standard(*max_order, cfg.cap, cfg.seed);
      }
      int status = 0;
      std::optional<UniversalityReport> probe;
      if (probe_order) {
        if (!abstract) throw CLI::ValidationError("--probe", "needs --abstract");
        probe = universality_probe(catalog, sweep_standard(*probe_order, cfg.cap, cfg.seed));
      }
      if (out_dir) export_catalog(catalog, *out_dir);
      if (json()) {
        Json j;
        j["classes"] = catalog.class_count();
        j["entries"] = catalog.entries().size();
        Json stats = Json::array();
        for (const auto& s : catalog.stats())
          stats.push_back({{"m_size", s.m_size}, {"h_order", s.h_order}, {"xi_is_group", s.xi_is_group},
                           {"xi_commutative", s.xi_commutative}, {"classes", s.classes}, {"entries", s.entries}});
        j["stats"] = std::move(stats);
        Json reps = Json::array();
        for (int id = 0; id < catalog.class_count(); ++id) {
          const auto& e = catalog.representative(id);
          Json r = to_json(e.hg);
          r["class_id"] = id;
          r["provenance"] = e.provenance;
          reps.push_back(std::move(r));
        }
        j["representatives"] = std::move(reps);
        if (probe) {
          Json m = Json::array();
          for (const auto& x : probe->matches)
            m.push_back({{"abstract_class", x.abstract_class}, {"matched", x.matched},
                         {"standard_class", x.standard_class}});
          j["universality"] = std::move(m);
        }
        out << dump(j);
      } else {
        out << "classes " << catalog.class_count() << "\nentries " << catalog.entries().size() << '\n';
        out << "m_size h_order xi_is_group xi_commutative classes entries\n";
        for (const auto& s : catalog.stats())
          out << s.m_size << ' ' << s.h_order << ' ' << s.xi_is_group << ' ' << s.xi_commutative << ' ' << s.classes
              << ' ' << s.entries << '\n';
        if (cfg.verbosity > 0) out << catalog_summary_csv(catalog);
        if (probe) {
          for (const auto& x : probe->matches) {
            out << "abstract class " << x.abstract_class;
            if (x.matched) out << " matched by standard class " << x.standard_class << '\n';
            else out << " unmatched\n";
          }
        }
      }
      if (probe && probe->unmatched() > 0) {
        err << probe->unmatched() << " abstract classes have no standard match\n";
        status = 1;
      }
      return status;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << e.what() << '\n';
    return kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const CLI::Error& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == ErrorCode::InternalInconsistency ? kInternal : kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace hgg::cli
