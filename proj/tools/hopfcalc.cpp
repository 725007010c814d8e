// hopfcalc: command-line front end of the hopf library.
//
// Exit codes: 0 success, 1 a check or identity failed, 2 usage or
// configuration error.

#include "hopf/catalog.hpp"
#include "hopf/cleft.hpp"
#include "hopf/nichols.hpp"
#include "hopf/parser.hpp"
#include "hopf/primitives.hpp"
#include "hopf/suite.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>

using namespace hopf;
using nlohmann::ordered_json;

namespace {

struct Global {
  std::string algebra = "A";
  std::string field = "Qr";
  std::string pq = "0,0";
  std::string file;
  bool json = false;
  int max_weight = 10;
  int max_degree = 6;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

HopfPresentation presentation(const Global& g) {
  const FieldSpec field = FieldSpec::preset(g.field);
  const Parameters params = preset_parameters(field, g.pq);
  if (!g.file.empty()) {
    LoadOptions opts;
    opts.field = field;
    opts.pq = std::pair<long, long>{g.pq == "6,3" ? 6 : 0, g.pq == "6,3" ? 3 : 0};
    return load_presentation(g.file, opts);
  }
  return build_catalog(g.algebra, field, params);
}

std::string source_name(const Global& g, const HopfPresentation& p) { return g.file.empty() ? g.algebra : p.name; }

void emit(const Global& g, const ordered_json& doc, const std::string& text) {
  if (g.json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

ordered_json report_json(const CheckReport& r) {
  return {{"checked", r.checked}, {"failures", r.failures}, {"notes", r.notes}, {"ok", r.ok()}};
}

int cmd_reduce(const Global& g, const std::vector<std::string>& exprs) {
  HopfAlgebra h(presentation(g));
  ordered_json doc = ordered_json::array();
  std::string text;
  for (const std::string& e : exprs) {
    const NcPoly nf = h.nf(parse_expression(e, h.presentation()));
    doc.push_back({{"input", e}, {"normal_form", h.format(nf)}});
    text += h.format(nf) + "\n";
  }
  emit(g, doc, text);
  return 0;
}

int cmd_verify(const Global& g, const std::string& lhs, const std::string& rhs_in) {
  HopfAlgebra h(presentation(g));
  std::string left = lhs, right = rhs_in;
  if (right.empty()) {
    const auto eq = left.find('=');
    if (eq == std::string::npos) throw UsageError("verify expects LHS RHS or \"LHS = RHS\"");
    right = left.substr(eq + 1);
    left = left.substr(0, eq);
  }
  const NcPoly residue = h.nf(parse_expression(left, h.presentation()) - parse_expression(right, h.presentation()));
  const bool holds = residue.is_zero();
  emit(g,
       {{"algebra", source_name(g, h.presentation())},
        {"field", g.field},
        {"lhs", left},
        {"rhs", right},
        {"holds", holds},
        {"residue", h.format(residue)}},
       holds ? "holds\n" : "fails; residue " + h.format(residue) + "\n");
  return holds ? 0 : 1;
}

int cmd_basis(const Global& g, bool list) {
  const HopfPresentation p = presentation(g);
  const std::vector<int>& wt = p.system.order().weights().front();
  const BasisEnumeration be = enumerate_basis(p.system, wt, g.max_weight);
  std::vector<std::size_t> counts(g.max_weight + 1, 0);
  for (const Word& w : be.words) ++counts[word_weight(w, wt)];
  const bool finite = basis_is_finite(p.system);
  std::optional<std::size_t> total;
  if (finite) total = enumerate_basis(p.system, wt, std::max(g.max_weight, 64)).total;
  ordered_json doc{{"algebra", source_name(g, p)}, {"field", g.field}, {"max_weight", g.max_weight},
                   {"counts", counts},             {"finite", finite}};
  if (total) doc["total"] = *total;
  std::string text = "weight:";
  for (int n = 0; n <= g.max_weight; ++n) text += " " + std::to_string(n) + ":" + std::to_string(counts[n]);
  text += "\n";
  if (total) text += "finite, total " + std::to_string(*total) + "\n";
  if (list) {
    doc["words"] = ordered_json::array();
    for (const Word& w : be.words) {
      doc["words"].push_back(p.alphabet().format(w));
      text += p.alphabet().format(w) + "\n";
    }
  }
  emit(g, doc, text);
  return 0;
}

int cmd_primitives(const Global& g, const std::string& grouplike) {
  HopfAlgebra h(presentation(g));
  std::vector<Word> targets;
  if (grouplike.empty() || grouplike == "all") {
    targets = grouplike_candidates(h.presentation());
  } else {
    const NcPoly gp = parse_expression(grouplike, h.presentation());
    if (gp.size() != 1 || !gp.terms().begin()->second.is_one()) throw UsageError("--grouplike must be a word");
    targets.push_back(gp.terms().begin()->first);
  }
  ordered_json doc = ordered_json::array();
  std::string text;
  for (const Word& g_word : targets) {
    const PrimitiveSpace space = solve_skew_primitives(h, g_word, g.max_weight);
    const std::string label = g_word.empty() ? "1" : h.alphabet().format(g_word);
    ordered_json basis = ordered_json::array();
    text += "V_" + label + ": dim " + std::to_string(space.dimension()) + " (P_(1,g) dim " +
            std::to_string(space.primitive_dimension) + ", weight <= " + std::to_string(space.max_weight) + ")\n";
    for (const NcPoly& v : space.basis) {
      basis.push_back(h.format(v));
      text += "  [" + h.format(v) + "]\n";
    }
    doc.push_back({{"grouplike", label},
                   {"max_weight", space.max_weight},
                   {"dimension", space.dimension()},
                   {"primitive_dimension", space.primitive_dimension},
                   {"basis", basis},
                   {"certified_beyond_bound", space.certified_beyond_bound}});
  }
  text += "completeness is certified up to the weight bound only\n";
  emit(g, doc, text);
  return 0;
}

BraidedVectorSpace nichols_space(const Global& g, const std::string& which) {
  const FieldSpec field = FieldSpec::preset(g.field);
  if (which == "Va") return paper_va_space(field);
  Global at = g;
  if (at.file.empty()) at.algebra = "Atilde";
  at.pq = "0,0";
  HopfAlgebra h(presentation(at));
  const HopfPresentation& p = h.presentation();
  const NcPoly x = p.element("x"), a = p.gen("a");
  if (which == "Va-derived") return braiding_from_yd(h, YdComponent{Word::letter(p.letter("a")), {x, a * x * a * a}, {"u", "v"}});
  if (which == "Vb") return braiding_from_yd(h, YdComponent{Word::letter(p.letter("b")), {p.element("y")}, {"y"}});
  if (which == "V1") {
    const NcPoly F = p.gen("F");
    return braiding_from_yd(h, YdComponent{Word{}, {p.element("x2x3"), F * F * F}, {"w1", "w2"}});
  }
  throw UsageError("unknown space '" + which + "' (expected V1, Va, Vb or Va-derived)");
}

int cmd_nichols(const Global& g, const std::string& which) {
  const BraidedVectorSpace v = nichols_space(g, which);
  const bool braid = check_braid_equation(v);
  ordered_json doc{{"space", which}, {"field", g.field}, {"dimension", v.dim()}, {"braid_equation", braid}};
  std::string text = which + ": dim " + std::to_string(v.dim()) + ", braid equation " + (braid ? "holds" : "fails") + "\n";
  if (!braid) {
    emit(g, doc, text);
    return 1;
  }
  if (which == "Va" || which == "Va-derived") {
    const VaAdjudication adj = adjudicate_va(v, static_cast<std::size_t>(g.max_degree));
    doc["ranks"] = adj.dims.ranks;
    doc["total"] = adj.dims.total;
    doc["terminated"] = adj.dims.terminated;
    doc["characteristic_caveat"] = adj.dims.characteristic_caveat;
    doc["displayed_rank_by_degree"] = adj.displayed_rank_by_degree;
    doc["verdict"] = adj.verdict;
    text += adj.verdict + "\n";
  } else {
    const SymmetrizerReport r = nichols_dims(v, static_cast<std::size_t>(g.max_degree));
    doc["ranks"] = r.ranks;
    doc["kernel_dims"] = r.kernel_dims;
    doc["total"] = r.total;
    doc["terminated"] = r.terminated;
    doc["characteristic_caveat"] = r.characteristic_caveat;
    text += "ranks";
    for (std::size_t n : r.ranks) text += " " + std::to_string(n);
    text += (r.terminated ? ", total " : ", partial sum ") + std::to_string(r.total) + "\n";
    if (r.characteristic_caveat) text += "characteristic caveat: degree >= field characteristic\n";
  }
  emit(g, doc, text);
  return 0;
}

int cmd_cleft(const Global& g) {
  Global at = g;
  at.pq = "0,0";
  HopfAlgebra h(presentation(at));
  QuotientCoalgebra q(h);
  const std::vector<std::pair<std::string, CheckReport>> reports{
      {"section", q.check_section()},
      {"colinearity", q.check_colinearity()},
      {"coradical_inverse", q.check_coradical_inverse()},
      {"coalgebra_map", q.check_coalgebra_map(8)},
      {"coideal", q.check_coideal(100, 6)},
      {"injective_on_C", q.check_injective_on_c()},
  };
  ordered_json doc{{"algebra", source_name(g, h.presentation())}, {"field", g.field}};
  std::string text;
  bool ok = true;
  for (const auto& [name, r] : reports) {
    doc[name] = report_json(r);
    text += name + ": " + r.summary() + "\n";
    ok = ok && r.ok();
  }
  emit(g, doc, text);
  return ok ? 0 : 1;
}

int cmd_verify_hopf(const Global& g) {
  HopfAlgebra h(presentation(g));
  const ConfluenceReport conf = check_confluence(h.system());
  CheckReport bialg, anti;
  if (h.presentation().has_coalgebra() && conf.confluent()) {
    bialg = h.check_bialgebra(6);
    anti = h.check_antipode(100, 8);
  }
  ordered_json doc{{"algebra", source_name(g, h.presentation())},
                   {"field", g.field},
                   {"confluence", {{"ambiguities", conf.ambiguities}, {"failures", conf.failures.size()}}},
                   {"bialgebra", report_json(bialg)},
                   {"antipode", report_json(anti)}};
  const std::string text = "confluence: " + std::to_string(conf.ambiguities) + " ambiguities, " +
                           std::to_string(conf.failures.size()) + " failures\nbialgebra: " + bialg.summary() +
                           "\nantipode: " + anti.summary() + "\n";
  emit(g, doc, text);
  return conf.confluent() && bialg.ok() && anti.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in finitely presented Hopf algebras"};
  app.require_subcommand(1);
  Global g;
  bool algebra_given = false;
  auto* algebra_opt = app.add_option("--algebra", g.algebra, "Atilde, A, Agen, D, B or Atilde-rfree")->check(CLI::IsMember(catalog_names()));
  app.add_option("--field", g.field, "Qr, Q, F7 or F13")->check(CLI::IsMember({"Qr", "Q", "F7", "F13"}));
  app.add_option("--pq", g.pq, "(p, q) preset: 0,0 or 6,3")->check(CLI::IsMember({"0,0", "6,3"}));
  app.add_option("--file", g.file, "presentation file (.hpf) used instead of --algebra")->check(CLI::ExistingFile);
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--max-weight", g.max_weight, "weight bound")->check(CLI::Range(0, 64));
  app.add_option("--max-degree", g.max_degree, "degree bound")->check(CLI::Range(0, 8));
  app.fallthrough();

  std::vector<std::string> exprs;
  auto* reduce = app.add_subcommand("reduce", "normal form of expressions");
  reduce->add_option("expr", exprs, "expressions")->required();

  std::string lhs, rhs;
  auto* verify = app.add_subcommand("verify", "check LHS = RHS, or the Hopf axioms when no identity is given");
  verify->add_option("lhs", lhs, "left-hand side, or \"LHS = RHS\"");
  verify->add_option("rhs", rhs, "right-hand side");

  bool list = false;
  auto* basis = app.add_subcommand("basis", "irreducible words by weight");
  basis->add_flag("--list", list, "print the words");

  std::string grouplike;
  auto* prims = app.add_subcommand("primitives", "(1,g)-skew-primitives modulo k(g-1)");
  prims->add_option("--grouplike", grouplike, "group-like word, e.g. a^2b, or all");

  std::string space = "Va";
  auto* nich = app.add_subcommand("nichols", "symmetrizer ranks of a braided vector space");
  nich->add_option("--space", space, "V1, Va, Vb or Va-derived")->check(CLI::IsMember({"V1", "Va", "Vb", "Va-derived"}));

  auto* cleft = app.add_subcommand("cleft", "cleaving map checks for A/AB+ (A or Agen)");

  std::string filter = "*";
  unsigned jobs = 0;
  auto* suite = app.add_subcommand("suite", "run registered checks");
  suite->add_option("--filter", filter, "check-id glob");
  suite->add_option("--jobs", jobs, "worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  algebra_given = algebra_opt->count() > 0;

  try {
    if (*reduce) return cmd_reduce(g, exprs);
    if (*verify) return lhs.empty() ? cmd_verify_hopf(g) : cmd_verify(g, lhs, rhs);
    if (*basis) return cmd_basis(g, list);
    if (*prims) return cmd_primitives(g, grouplike);
    if (*nich) return cmd_nichols(g, space);
    if (*cleft) return cmd_cleft(g);
    if (*suite) {
      SuiteOptions opts;
      opts.filter = filter;
      opts.field = g.field;
      opts.pq = g.pq;
      opts.jobs = jobs;
      if (algebra_given) opts.algebra = g.algebra;
      const SuiteReport report = g.file.empty() ? run_suite(opts) : run_file_checks(g.file, opts);
      std::cout << (g.json ? report.to_json() + "\n" : report.to_text());
      return report.exit_code();
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PresentationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
