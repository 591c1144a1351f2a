#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hornkit/hornkit.hpp"

namespace hornkit::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string sigma, family, gamma, other, set, query, element, check, max, cmax;
  std::string format = "text";
  bool step = false, quasi = false, trace = false, closed = false;
  bool pseudo = false, minimum = false, classify = false, verify = false;
  bool trim = false, redundancy = false, unit = false, aggregate = false, normalize = false;
  bool base = false, definitional = false, from_meetirr = false, lectic = false, rows012 = false;
};

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return in;
}

ImplicationSet load_sigma(const std::string& path) {
  auto in = open_file(path);
  return parse_implications(in);
}

SetFamily load_family(const std::string& path) {
  auto in = open_file(path);
  return parse_family(in);
}

ClosureSource load_source(const Options& o) {
  if (!o.sigma.empty() == !o.family.empty()) throw UsageError("give exactly one of --sigma or --family");
  if (!o.sigma.empty()) return load_sigma(o.sigma);
  return load_family(o.family);
}

ImplicationSet require_sigma(const Options& o) {
  if (o.sigma.empty()) throw UsageError("--sigma is required");
  return load_sigma(o.sigma);
}

HornSystem load_system(const Options& o) {
  ImplicationSet s = require_sigma(o);
  if (o.gamma.empty()) return HornSystem(std::move(s));
  return HornSystem(std::move(s), load_family(o.gamma));
}

AttrSet parse_arg_set(const Universe& u, std::string text) {
  std::replace(text.begin(), text.end(), ',', ' ');
  return parse_set(u, text);
}

std::size_t parse_element(const Universe& u, const std::string& label) { return u.position(label); }

class Printer {
 public:
  Printer(std::ostream& out, bool lines) : out_(out), lines_(lines) {}

  bool lines() const { return lines_; }
  void line(const std::string& s) { out_ << s << '\n'; }
  void set(const Universe& u, const AttrSet& s) { line(render_set(u, s)); }
  void sets(const Universe& u, const std::vector<AttrSet>& v) {
    for (const auto& s : sorted_canonical(v)) set(u, s);
  }
  void family(const SetFamily& f) { sets(f.universe(), f.sets()); }
  void implications(const ImplicationSet& s) {
    for (const auto& i : s) line(render_implication(s.universe(), i));
  }

 private:
  std::ostream& out_;
  bool lines_;
};

using Handler = std::function<void(const Options&, Printer&)>;

void cmd_close(const Options& o, Printer& p) {
  auto src = load_source(o);
  const auto& u = src.universe();
  AttrSet s = parse_arg_set(u, o.set);
  if (o.closed) {
    p.line(is_closed(src, s) ? "closed" : "not closed");
  } else if (o.quasi) {
    p.set(u, quasiclosure(src, s, Limits::from_env()));
  } else if (o.step || o.trace) {
    if (!src.sigma()) throw UsageError("--step and --trace need --sigma");
    if (o.step) {
      p.set(u, step(*src.sigma(), s));
    } else {
      for (const auto& r : close_trace(*src.sigma(), s).rounds) p.set(u, r);
    }
  } else {
    p.set(u, src.close(s));
  }
}

void cmd_entails(const Options& o, Printer& p) {
  auto src = load_source(o);
  p.line(entails(src, parse_implication(src.universe(), o.query)) ? "yes" : "no");
}

void cmd_equiv(const Options& o, Printer& p) {
  if (o.other.empty()) throw UsageError("--other is required");
  p.line(equivalent(require_sigma(o), load_sigma(o.other)) ? "equivalent" : "not equivalent");
}

void cmd_base_gd(const Options& o, Printer& p) {
  auto src = load_source(o);
  Limits lim = Limits::from_env();
  if (o.minimum) {
    if (!src.sigma()) throw UsageError("--check-minimum needs --sigma");
    p.line(is_minimum(*src.sigma(), lim) ? "minimum" : "not minimum");
  } else if (o.pseudo) {
    p.sets(src.universe(), pseudoclosed_sets(src, lim));
  } else {
    p.implications(gd_base(src, lim));
  }
}

void cmd_base_direct(const Options& o, Printer& p) {
  auto src = load_source(o);
  auto t = stem_table(src, Limits::from_env());
  if (!o.classify) {
    p.implications(canonical_direct(t));
    return;
  }
  const auto& u = src.universe();
  for (const auto& c : classify_stems(src, t)) {
    std::string s = render_implication(u, {c.stem, c.roots});
    s += c.strong ? "  strong" : "  weak";
    s += "  closure-minimal for: " + render_set(u, c.closure_minimal_for);
    p.line(s);
  }
}

void cmd_base_dbasis(const Options& o, Printer& p) {
  auto src = load_source(o);
  auto d = d_basis(src, Limits::from_env());
  if (!o.set.empty()) {
    p.set(src.universe(), ordered_close(d, parse_arg_set(src.universe(), o.set), o.verify));
    return;
  }
  if (!p.lines()) p.line("# binary part: " + std::to_string(d.binary_count));
  p.implications(d.items);
}

void cmd_minimize(const Options& o, Printer& p) {
  auto s = require_sigma(o);
  if (o.unit)
    p.implications(unit_expand(s));
  else if (o.aggregate)
    p.implications(aggregate(s));
  else if (o.normalize)
    p.implications(normalize(s));
  else if (o.redundancy)
    p.implications(remove_redundancy(s));
  else
    p.implications(shock_minimize(s, o.trim));
}

void cmd_primes(const Options& o, Printer& p) {
  auto s = require_sigma(o);
  if (!o.check.empty()) {
    auto imp = parse_implication(s.universe(), o.check);
    if (imp.conclusion.count() > 1) throw UsageError("--check takes a clause with at most one conclusion element");
    HornClause c{imp.premise, std::nullopt};
    if (!imp.conclusion.empty()) c.positive = imp.conclusion.first();
    p.line(is_prime_implicate(s, c) ? "prime" : "not prime");
    return;
  }
  p.implications(prime_implicates(s));
}

void cmd_acyclic(const Options& o, Printer& p) {
  auto s = require_sigma(o);
  if (o.base) {
    p.implications(acyclic_base(s));
    return;
  }
  auto r = is_acyclic(s);
  if (r.acyclic) {
    p.line("acyclic");
    return;
  }
  std::string walk;
  for (auto v : r.cycle) walk += (walk.empty() ? "" : " -> ") + s.universe().label(v);
  p.line("cyclic: " + walk);
}

void cmd_meetirr(const Options& o, Printer& p) {
  auto src = load_source(o);
  if (!o.max.empty()) {
    p.family(max_noncovers(src, parse_element(src.universe(), o.max)));
    return;
  }
  p.family(meet_irreducibles(src, o.definitional ? MeetIrrMethod::definitional : MeetIrrMethod::rows));
}

void cmd_stems(const Options& o, Printer& p) {
  auto src = load_source(o);
  const auto& u = src.universe();
  if (!o.cmax.empty()) {
    auto t = stem_table(src, Limits::from_env());
    for (const auto& x : cmax_from_stems(t, parse_element(u, o.cmax))) p.set(u, x.complement());
    return;
  }
  std::vector<std::size_t> elems;
  if (!o.element.empty())
    elems.push_back(parse_element(u, o.element));
  else
    for (std::size_t e = 0; e < u.size(); ++e) elems.push_back(e);

  std::function<std::vector<AttrSet>(std::size_t)> stems_of;
  std::optional<StemTable> table;
  std::optional<SetFamily> gen;
  if (o.from_meetirr) {
    gen = src.family() ? *src.family() : meet_irreducibles(src);
    stems_of = [&](std::size_t e) { return stems_from_meetirr(*gen, e).sets(); };
  } else {
    table.emplace(stem_table(src, Limits::from_env()));
    stems_of = [&](std::size_t e) { return table->stems(e); };
  }
  for (auto e : elems) {
    auto st = sorted_canonical(stems_of(e));
    if (p.lines()) {
      for (const auto& s : st) p.line(u.label(e) + ": " + render_set(u, s));
      continue;
    }
    std::string row = u.label(e) + ":";
    for (std::size_t i = 0; i < st.size(); ++i) row += (i ? " | " : " ") + render_set(u, st[i]);
    p.line(row);
  }
}

void cmd_dualize(const Options& o, Printer& p) {
  if (o.family.empty()) throw UsageError("--family is required");
  p.family(minimal_transversals(load_family(o.family)));
}

void cmd_keys(const Options& o, Printer& p) { p.family(minimal_keys(load_source(o))); }

void cmd_enumerate(const Options& o, Printer& p) {
  if (o.lectic) {
    auto src = load_source(o);
    for (const auto& s : enumerate_closed_lectic(src)) p.set(src.universe(), s);
    return;
  }
  auto rs = enumerate_horn(load_system(o));
  if (o.rows012) rs = to_012(rs);
  for (const auto& r : rs.rows) p.line(render_row(r));
}

void cmd_count(const Options& o, Printer& p) { p.line(count(enumerate_horn(load_system(o))).str()); }

void cmd_sat(const Options& o, Printer& p) {
  auto h = load_system(o);
  auto r = horn_satisfiable(h);
  p.line(r.satisfiable ? "satisfiable" : "unsatisfiable");
  p.line((p.lines() ? "" : "bottom: ") + render_set(h.sigma().universe(), r.bottom));
}

void cmd_compress(const Options& o, Printer& p) {
  auto out = theorem6_compress(load_system(o));
  p.implications(out.sigma());
  if (out.gamma().empty()) return;
  if (!p.lines()) p.line("# complications");
  for (const auto& a : out.gamma()) p.line((p.lines() ? "! " : "") + render_set(out.sigma().universe(), a));
}

void cmd_measures(const Options& o, Printer& p) {
  auto m = measures(require_sigma(o));
  if (p.lines()) {
    p.line("ca " + std::to_string(m.ca));
    p.line("s " + std::to_string(m.s));
    p.line("lhs " + std::to_string(m.lhs));
    p.line("rhs " + std::to_string(m.rhs));
  } else {
    p.line("ca=" + std::to_string(m.ca) + " s=" + std::to_string(m.s) + " lhs=" + std::to_string(m.lhs) +
           " rhs=" + std::to_string(m.rhs));
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Implications and pure Horn formulas"};
  app.name("hornkit");
  app.require_subcommand(1);
  Options o;
  std::vector<std::pair<CLI::App*, Handler>> verbs;

  auto verb = [&](const std::string& name, const std::string& desc, Handler h) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "lines"}));
    verbs.emplace_back(sub, std::move(h));
    return sub;
  };
  auto source = [&](CLI::App* sub) {
    sub->add_option("--sigma", o.sigma, "Implication file");
    sub->add_option("--family", o.family, "Family file (generating sets)");
  };
  auto system = [&](CLI::App* sub) {
    sub->add_option("--sigma", o.sigma, "Implication file")->required();
    sub->add_option("--gamma", o.gamma, "Complication family file");
  };

  auto* c = verb("close", "Closure of a set", cmd_close);
  source(c);
  c->add_option("--set", o.set, "Set, e.g. \"1 2\" or {}")->required();
  c->add_flag("--step", o.step, "Single application step");
  c->add_flag("--trace", o.trace, "Print every round up to the fixpoint");
  c->add_flag("--quasi", o.quasi, "Quasiclosure");
  c->add_flag("--check", o.closed, "Report whether the set is closed");

  auto* en = verb("entails", "Whether an implication follows", cmd_entails);
  source(en);
  en->add_option("--query", o.query, "Implication, e.g. \"1 2 -> 3\"")->required();

  auto* eq = verb("equiv", "Equivalence of two implication files", cmd_equiv);
  eq->add_option("--sigma", o.sigma, "First implication file")->required();
  eq->add_option("--other", o.other, "Second implication file")->required();

  auto* gd = verb("base-gd", "Minimum canonical base", cmd_base_gd);
  source(gd);
  gd->add_flag("--pseudo", o.pseudo, "List pseudoclosed sets instead");
  gd->add_flag("--check-minimum", o.minimum, "Report whether the input has minimum size");

  auto* bd = verb("base-direct", "Canonical direct base", cmd_base_direct);
  source(bd);
  bd->add_flag("--classify", o.classify, "Classify each stem");

  auto* db = verb("base-dbasis", "Ordered direct unit base", cmd_base_dbasis);
  source(db);
  db->add_option("--set", o.set, "Apply the base to this set in one ordered pass");
  db->add_flag("--verify", o.verify, "Check the single pass against the full closure");

  auto* mn = verb("minimize", "Minimum base by full conclusions and redundancy removal", cmd_minimize);
  mn->add_option("--sigma", o.sigma, "Implication file")->required();
  mn->add_flag("--trim", o.trim, "Report conclusions without their premises");
  mn->add_flag("--redundancy", o.redundancy, "Only remove redundant implications");
  mn->add_flag("--unit-expand", o.unit, "Split conclusions into single elements");
  mn->add_flag("--aggregate", o.aggregate, "Merge implications with equal premises");
  mn->add_flag("--normalize", o.normalize, "Drop tautologies and duplicates");

  auto* pr = verb("primes", "Prime implicates by consensus", cmd_primes);
  pr->add_option("--sigma", o.sigma, "Implication file")->required();
  pr->add_option("--check", o.check, "Test one clause, e.g. \"1 2 -> 3\"");

  auto* ac = verb("acyclic", "Acyclicity test", cmd_acyclic);
  ac->add_option("--sigma", o.sigma, "Implication file")->required();
  ac->add_flag("--base", o.base, "Print the nonredundant prime base");

  auto* mi = verb("meetirr", "Meet-irreducible closed sets", cmd_meetirr);
  source(mi);
  mi->add_flag("--definitional", o.definitional, "Brute force from the full closure system");
  mi->add_option("--max", o.max, "Maximal closed sets avoiding this element");

  auto* st = verb("stems", "Stems per element", cmd_stems);
  source(st);
  st->add_option("--element", o.element, "Only this element");
  st->add_flag("--from-meetirr", o.from_meetirr, "Compute by dualizing meet-irreducibles");
  st->add_option("--cmax", o.cmax, "Maximal closed sets avoiding this element, via its stems");

  auto* du = verb("dualize", "Minimal transversals of a family", cmd_dualize);
  du->add_option("--family", o.family, "Family file")->required();

  auto* ke = verb("keys", "Minimal keys", cmd_keys);
  source(ke);

  auto* em = verb("enumerate", "Models as 012n rows", cmd_enumerate);
  em->add_option("--sigma", o.sigma, "Implication file");
  em->add_option("--family", o.family, "Family file (with --lectic)");
  em->add_option("--gamma", o.gamma, "Complication family file");
  em->add_flag("--lectic", o.lectic, "List closed sets in lectic order");
  em->add_flag("--012", o.rows012, "Expand bubbles into 012 rows");

  auto* co = verb("count", "Number of models", cmd_count);
  system(co);

  auto* sa = verb("sat", "Satisfiability with complications", cmd_sat);
  system(sa);

  auto* cp = verb("compress", "Equivalent system with at most one complication", cmd_compress);
  system(cp);

  auto* me = verb("measures", "Size measures", cmd_measures);
  me->add_option("--sigma", o.sigma, "Implication file")->required();

  std::vector<std::string> argv_store{"hornkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  Printer printer(out, o.format == "lines");
  try {
    for (auto& [sub, handler] : verbs)
      if (sub->parsed()) handler(o, printer);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain;
  }
  return exit_ok;
}

}  // namespace hornkit::cli
