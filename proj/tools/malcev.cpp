#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "malcev/deciders.hpp"
#include "malcev/division.hpp"
#include "malcev/error.hpp"
#include "malcev/io.hpp"
#include "malcev/kernels.hpp"
#include "malcev/pseudoid.hpp"
#include "malcev/structure.hpp"
#include "malcev/verify.hpp"
#include "malcev/zoo.hpp"

using namespace malcev;

namespace {

enum Exit { kTrue = 0, kFalse = 1, kError = 2, kUnknown = 3 };

bool ascii = false;

std::string replace_all(std::string text, std::string const& from, std::string const& to) {
  std::size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
  return text;
}

void emit(std::string const& text) {
  if (ascii) {
    std::cout << replace_all(replace_all(replace_all(text, "θ̄", "O"), "θ", "0"), "ω", "w");
  } else {
    std::cout << text;
  }
}

// zoo:NAME or zoo:NAME:PARAM, otherwise a .sgp path.
FiniteSemigroup load_subject(std::string const& subject, bool allow_large) {
  if (subject.rfind("zoo:", 0) == 0) {
    std::string rest = subject.substr(4);
    int param = 1;
    if (auto colon = rest.find(':'); colon != std::string::npos) {
      try {
        param = std::stoi(rest.substr(colon + 1));
      } catch (std::exception const&) {
        throw Error(ErrorKind::InvalidArgument, "bad zoo parameter in " + subject);
      }
      rest = rest.substr(0, colon);
    }
    return zoo::by_name(rest, param, allow_large).semigroup;
  }
  return read_sgp(subject);
}

std::string names_of(FiniteSemigroup const& s, std::vector<ElementId> const& ids) {
  std::string out;
  for (ElementId x : ids) {
    out += (out.empty() ? "" : ", ") + s.name(x);
  }
  return out;
}

int run_check(std::string const& subject, std::string const& prop, std::string const& via,
              bool allow_large) {
  auto s = load_subject(subject, allow_large);
  Property p = parse_property(prop);
  std::ostringstream out;
  out << "subject: " << subject << "\nproperty: " << to_string(p) << "\nvia: " << via << '\n';
  std::optional<bool> direct;
  std::optional<bool> basis;
  std::optional<Witness> witness;
  if (via == "direct" || via == "both") {
    auto v = decide(s, p);
    direct = v.holds;
    witness = v.witness;
  }
  if (via == "basis" || via == "both") {
    basis = satisfies_basis(s, p);
  }
  if (direct && basis) {
    out << "direct: " << (*direct ? "true" : "false") << "\nbasis: "
        << (*basis ? "true" : "false") << '\n';
    if (*direct != *basis) {
      out << "verdict: disagreement\n";
      emit(out.str());
      return kError;
    }
  }
  bool holds = direct ? *direct : *basis;
  out << "verdict: " << (holds ? "true" : "false") << '\n';
  if (witness) {
    std::string text = format_witness(s, *witness);
    while (!text.empty() && text.back() == '\n') {
      text.pop_back();
    }
    out << "witness: " << text << '\n';
    out << "witness valid: " << (validate_witness(s, *witness) ? "yes" : "no") << '\n';
  }
  emit(out.str());
  return holds ? kTrue : kFalse;
}

int run_structure(std::string const& subject, bool allow_large) {
  auto s = load_subject(subject, allow_large);
  std::ostringstream out;
  out << "order: " << s.order() << '\n';
  out << "zero: " << (s.zero() ? s.name(*s.zero()) : "none") << '\n';
  out << "identity: " << (s.identity() ? s.name(*s.identity()) : "none") << '\n';
  out << "idempotents: " << idempotents(s).size() << '\n';
  auto const& g = green(s);
  out << "r-classes: " << g.r_classes.size() << '\n';
  out << "l-classes: " << g.l_classes.size() << '\n';
  out << "h-classes: " << g.h_classes.size() << '\n';
  out << "j-classes: " << g.j_classes.size() << '\n';
  auto series = principal_series(s);
  for (std::size_t k = 0; k < series.factors.size(); ++k) {
    auto const& f = series.factors[k];
    out << "factor " << k + 1 << ": " << to_string(f.kind) << ", " << f.elements.size()
        << " elements";
    if (f.rees) {
      out << ", rees " << f.rees->spec.n << "x" << f.rees->spec.m << " over a group of order "
          << f.rees->spec.group.order();
    }
    out << '\n';
  }
  out << "maximal subgroups:";
  for (auto const& h : maximal_subgroups(s)) {
    out << ' ' << h.order() << (is_nilpotent_group(h) ? "" : "(non-nilpotent)");
  }
  out << '\n';
  auto yes = [](bool b) { return b ? "true" : "false"; };
  out << "regular: " << yes(is_regular(s)) << '\n';
  out << "inverse: " << yes(is_inverse(s)) << '\n';
  out << "block group: " << yes(is_block_group(s)) << '\n';
  out << "aperiodic: " << yes(is_aperiodic(s)) << '\n';
  out << "idempotents commute: " << yes(idempotents_commute(s)) << '\n';
  out << "bg_nil: " << yes(is_bg_nil(s)) << '\n';
  auto cls = nilpotency_class(s);
  out << "nilpotency class: " << (cls ? std::to_string(*cls) : "none") << '\n';
  emit(out.str());
  return kTrue;
}

int run_zoo(std::string const& name, int param, std::string const& output, bool allow_large) {
  auto const& e = zoo::by_name(name, param, allow_large);
  if (output.empty()) {
    emit(write_sgp(e.semigroup));
  } else {
    write_sgp_file(e.semigroup, output);
    emit("wrote " + output + " (order " + std::to_string(e.semigroup.order()) + ")\n");
  }
  return kTrue;
}

int run_divides(std::string const& fs, std::string const& ts, std::optional<std::size_t> budget,
                std::optional<std::size_t> max_gen, bool allow_large) {
  auto f = load_subject(fs, allow_large);
  auto t = load_subject(ts, allow_large);
  DivisionOptions options;
  options.budget = budget;
  options.max_generators = max_gen;
  auto r = divides(f, t, options);
  std::ostringstream out;
  out << "verdict: " << to_string(r.verdict) << "\nexplored: " << r.explored << '\n';
  if (r.witness) {
    out << "generators:";
    for (std::size_t i = 0; i < r.witness->t_generators.size(); ++i) {
      out << ' ' << t.name(r.witness->t_generators[i]) << "->"
          << f.name(r.witness->f_generators[i]);
    }
    out << "\nwitness valid: " << (validate_division(f, t, *r.witness) ? "yes" : "no") << '\n';
  }
  emit(out.str());
  return r.verdict == Tri::True ? kTrue : r.verdict == Tri::False ? kFalse : kUnknown;
}

int run_rank(std::string const& subject, std::string const& pv, std::size_t k,
             std::optional<std::size_t> budget, bool allow_large) {
  auto s = load_subject(subject, allow_large);
  Property p = parse_property(pv);
  auto r = rank_witness(s, p, k, budget);
  std::ostringstream out;
  out << "subject: " << subject << "\nproperty: " << to_string(p) << "\nk: " << k << '\n';
  out << "verdict: " << (r.holds ? "true" : "false") << '\n';
  out << "subsemigroups: " << r.subsemigroups << '\n';
  if (!r.holds) {
    out << "counterexample: <" << names_of(s, r.counterexample) << ">\n";
  }
  emit(out.str());
  return r.holds ? kTrue : kFalse;
}

int run_verify(std::string const& profile, unsigned threads) {
  VerifyOptions options;
  options.profile = parse_profile(profile);
  options.threads = threads;
  auto report = run_verification(options);
  emit(report.text());
  return report.passed() ? kTrue : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite-semigroup engine: pseudovariety membership, division and the named examples"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::size_t> global_budget;
  unsigned threads = 1;
  bool allow_large = false;
  app.add_option("--budget", global_budget, "Closure budget in elements (overrides MALCEV_BUDGET)");
  app.add_option("--threads", threads, "Worker threads for verify")->check(CLI::PositiveNumber);
  app.add_flag("--ascii", ascii, "Print θ as 0 and θ̄ as O");
  app.add_flag("--allow-large", allow_large, "Allow family members above the default cap");

  std::string subject;
  std::string prop;
  std::string via = "direct";
  auto* check = app.add_subcommand("check", "Decide membership in a class");
  check->add_option("--prop", prop, "mn, wmn, nt, pe, tm, eunng, bg, bgnil, ndf12, aperiodic, "
                                    "inverse or idem-commute")
      ->required();
  check->add_option("--via", via, "direct, basis or both")
      ->check(CLI::IsMember({"direct", "basis", "both"}));
  check->add_option("subject", subject, "zoo:NAME[:PARAM] or a .sgp file")->required();

  auto* structure = app.add_subcommand("structure", "Green structure and principal series");
  structure->add_option("subject", subject, "zoo:NAME[:PARAM] or a .sgp file")->required();

  std::string zoo_name;
  int param = 1;
  std::string output;
  auto* zoo_cmd = app.add_subcommand("zoo", "Emit a named semigroup as .sgp");
  zoo_cmd->add_option("name", zoo_name, "f7, f12, n1, n2, n3, n4, n2n, sprime, lz2, rz2, c2, s3, c7c3")
      ->required();
  zoo_cmd->add_option("--param", param, "Family parameter");
  zoo_cmd->add_option("-o,--output", output, "Output file (default: stdout)");

  std::string f_subject;
  std::string t_subject;
  std::optional<std::size_t> search_budget;
  std::optional<std::size_t> max_gen;
  auto* div = app.add_subcommand("divides", "Whether F divides T");
  div->add_option("f", f_subject, "The divisor")->required();
  div->add_option("t", t_subject, "The semigroup searched")->required();
  div->add_option("--budget", search_budget, "Search budget in explored assignments");
  div->add_option("--max-gen", max_gen, "Largest generating set tried");

  std::string pv;
  std::size_t k = 2;
  std::optional<std::size_t> rank_budget;
  auto* rank = app.add_subcommand("rank", "Whether all k-generated subsemigroups are in a class");
  rank->add_option("--pv", pv, "Class name as for check")->required();
  rank->add_option("--k", k, "Number of generators")->required()->check(CLI::PositiveNumber);
  rank->add_option("--limit", rank_budget, "Largest number of subsemigroups examined");
  rank->add_option("subject", subject, "zoo:NAME[:PARAM] or a .sgp file")->required();

  std::string profile = "quick";
  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  verify->alias("verify-paper");
  verify->add_option("profile", profile, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  auto start = std::chrono::steady_clock::now();
  int code = kError;
  try {
    load_budgets_from_env();
    if (global_budget) {
      Budgets b = default_budgets();
      b.closure = *global_budget;
      set_default_budgets(b);
    }
    if (*check) {
      code = run_check(subject, prop, via, allow_large);
    } else if (*structure) {
      code = run_structure(subject, allow_large);
    } else if (*zoo_cmd) {
      code = run_zoo(zoo_name, param, output, allow_large);
    } else if (*div) {
      code = run_divides(f_subject, t_subject, search_budget, max_gen, allow_large);
    } else if (*rank) {
      code = run_rank(subject, pv, k, rank_budget, allow_large);
    } else if (*verify) {
      code = run_verify(profile, threads);
    }
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = e.kind() == ErrorKind::SizeBudgetExceeded ? kUnknown : kError;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = kError;
  }
  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::fprintf(stderr, "elapsed: %.3f s (kernels: %s)\n", elapsed.count(),
               kernels::active().name);
  return code;
}
