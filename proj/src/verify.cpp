#include "malcev/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "malcev/action.hpp"
#include "malcev/corpus.hpp"
#include "malcev/deciders.hpp"
#include "malcev/division.hpp"
#include "malcev/error.hpp"
#include "malcev/pseudoid.hpp"
#include "malcev/structure.hpp"
#include "malcev/zoo.hpp"

namespace malcev {

char const* to_string(Profile p) { return p == Profile::Quick ? "quick" : "full"; }

Profile parse_profile(std::string_view text) {
  if (text == "quick") {
    return Profile::Quick;
  }
  if (text == "full") {
    return Profile::Full;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown profile \"" + std::string(text) + "\"");
}

bool VerifyReport::passed() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](CriterionResult const& c) { return c.passed; });
}

std::string VerifyReport::text() const {
  std::ostringstream out;
  for (auto const& c : criteria) {
    out << "criterion " << c.id << " (" << c.title << "): " << (c.passed ? "PASS" : "FAIL")
        << '\n';
    for (auto const& d : c.details) {
      out << "  " << d << '\n';
    }
  }
  out << "overall: " << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

// Runs fn(0) .. fn(count - 1) on up to `threads` workers. The first
// exception is rethrown.
void parallel_for(std::size_t count, unsigned threads, std::function<void(std::size_t)> const& fn) {
  std::size_t workers = std::min<std::size_t>(std::max(1u, threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) {
          return;
        }
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
        }
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

char const* tf(bool b) { return b ? "T" : "F"; }

class Checker {
 public:
  Checker(int id, std::string title) {
    result_.id = id;
    result_.title = std::move(title);
  }

  void check(bool ok, std::string const& what) {
    result_.details.push_back((ok ? "ok    " : "FAIL  ") + what);
    all_ &= ok;
  }
  void note(std::string const& text) { result_.details.push_back(text); }

  void within(Clock::time_point start, std::chrono::seconds limit, std::string const& label) {
    check(Clock::now() - start < limit, "runtime within " + label);
  }

  CriterionResult finish() {
    result_.passed = all_;
    return std::move(result_);
  }

 private:
  CriterionResult result_;
  bool all_ = true;
};

FiniteSemigroup const& f12_of(VerifyOptions const& o) {
  return o.f12 ? *o.f12 : zoo::f12().semigroup;
}

struct Member {
  std::string name;
  FiniteSemigroup const* semigroup;
};

std::vector<Member> corpus_and_zoo(VerifyOptions const& o, bool with_family) {
  static std::vector<FiniteSemigroup> const corpus = small_semigroups(4);
  std::vector<Member> out;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out.push_back({"corpus#" + std::to_string(i) + " (order " +
                       std::to_string(corpus[i].order()) + ")",
                   &corpus[i]});
  }
  out.push_back({"F7", &zoo::f7().semigroup});
  out.push_back({"F12", &f12_of(o)});
  out.push_back({"N1", &zoo::n1().semigroup});
  out.push_back({"N2", &zoo::n2().semigroup});
  out.push_back({"N3", &zoo::n3().semigroup});
  out.push_back({"N4", &zoo::n4().semigroup});
  out.push_back({"S'", &zoo::sprime().semigroup});
  out.push_back({"LZ2", &zoo::lz2().semigroup});
  out.push_back({"RZ2", &zoo::rz2().semigroup});
  out.push_back({"C2", &zoo::c2().semigroup});
  out.push_back({"S3", &zoo::s3().semigroup});
  out.push_back({"C7:C3", &zoo::c7c3().semigroup});
  if (with_family) {
    out.push_back({"N2n(1)", &zoo::n2n(1).semigroup});
  }
  return out;
}

// ---------------------------------------------------------------------------

CriterionResult zoo_integrity(VerifyOptions const& o) {
  auto start = Clock::now();
  Checker c(1, "zoo integrity");
  auto order_is = [&](std::string const& name, FiniteSemigroup const& s, std::size_t n) {
    c.check(s.order() == n, "|" + name + "| = " + std::to_string(n) + " (got " +
                                std::to_string(s.order()) + ")");
  };
  order_is("F7", zoo::f7().semigroup, 7);
  order_is("F12", f12_of(o), 12);
  order_is("N4", zoo::n4().semigroup, 13);
  order_is("N1", zoo::n1().semigroup, 19);
  order_is("N3", zoo::n3().semigroup, 20);
  order_is("N2", zoo::n2().semigroup, 127);

  auto const& n4 = zoo::n4().semigroup;
  c.check(!find_non_associative(n4.table(), n4.order()), "N4 is associative");

  auto const& n2 = zoo::n2();
  auto const& s = n2.semigroup;
  auto const& g = green(s);
  std::uint32_t ideal_class = g.j_class[n2.ideal_idempotents.front()];
  std::set<ElementId> outside;
  for (ElementId x = 0; x < s.order(); ++x) {
    if (g.j_class[x] != ideal_class && x != s.zero()) {
      outside.insert(x);
    }
  }
  std::set<ElementId> listed;
  bool all_found = true;
  for (auto const& text : zoo::n2_top_listing()) {
    ElementId x = s.find(parse_orbits(text, 10));
    all_found &= x != kNoElement;
    listed.insert(x);
  }
  c.check(all_found, "every listed element of N lies in N2");
  c.check(listed.size() == 26 && listed == outside,
          "N2 outside its ideal is exactly the 26 listed elements");
  c.within(start, std::chrono::seconds(10), "10 s");
  return c.finish();
}

std::vector<Property> const& matrix_properties() {
  static std::vector<Property> const props{
      Property::MN,  Property::WMN, Property::NT, Property::NDF12,     Property::PE,
      Property::TM,  Property::EUNNG, Property::BG, Property::BGNil, Property::Aperiodic,
      Property::IdempotentsCommute};
  return props;
}

CriterionResult membership_matrix(VerifyOptions const& o) {
  auto start = Clock::now();
  Checker c(2, "membership matrix");
  // Columns as in matrix_properties. Cells the zoo facts do not fix outright
  // were computed once and frozen.
  struct Row {
    std::string name;
    FiniteSemigroup const* s;
    std::string expected;
  };
  std::vector<Row> rows{
      {"F7", &zoo::f7().semigroup, "FFFFFTFTTFT"},
      {"F12", &f12_of(o), "FFFFTTTTTTT"},
      {"N1", &zoo::n1().semigroup, "FFTTTTTTTTT"},
      {"N2", &zoo::n2().semigroup, "FFTTTTFTTTT"},
      {"N3", &zoo::n3().semigroup, "FFFTTTTTTTT"},
      {"N4", &zoo::n4().semigroup, "TTTTTTTTTTF"},
      {"N2n(1)", &zoo::n2n(1).semigroup, "FFFTTTTTTTT"},
  };
  auto const& props = matrix_properties();
  std::vector<Verdict> verdicts(rows.size() * props.size());
  parallel_for(verdicts.size(), o.threads, [&](std::size_t i) {
    verdicts[i] = decide(*rows[i / props.size()].s, props[i % props.size()]);
  });

  std::string header = "        ";
  for (Property p : props) {
    header += std::string(to_string(p)) + " ";
  }
  c.note(header);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line = rows[r].name;
    line.resize(8, ' ');
    bool row_ok = true;
    bool witnesses_ok = true;
    for (std::size_t k = 0; k < props.size(); ++k) {
      auto const& v = verdicts[r * props.size() + k];
      bool want = rows[r].expected[k] == 'T';
      std::string cell = tf(v.holds);
      if (v.holds != want) {
        cell += "!";
        row_ok = false;
      }
      if (!v.holds && (!v.witness || !validate_witness(*rows[r].s, *v.witness))) {
        witnesses_ok = false;
      }
      cell.resize(std::string(to_string(props[k])).size() + 1, ' ');
      line += cell;
    }
    c.note(line);
    c.check(row_ok, rows[r].name + " row matches");
    c.check(witnesses_ok, rows[r].name + " counterexamples validate");
  }
  c.within(start, std::chrono::seconds(120), "2 min");
  return c.finish();
}

CriterionResult rank_witnesses(VerifyOptions const& o) {
  auto start = Clock::now();
  Checker c(3, "rank witnesses");
  auto case_of = [&](std::string const& name, FiniteSemigroup const& s, Property p, std::size_t k,
                     std::optional<std::size_t> budget) {
    std::string label = std::string(to_string(p)) + " on " + name + " with k = " +
                        std::to_string(k);
    try {
      auto r = rank_witness(s, p, k, budget);
      c.check(r.holds, "every " + std::to_string(k) + "-generated subsemigroup of " + name +
                           " is in " + to_string(p) + " (" + std::to_string(r.subsemigroups) +
                           " subsemigroups)");
    } catch (Error const& e) {
      c.check(false, label + ": " + e.what());
    }
    c.check(!decide(s, p).holds, name + " is not in " + to_string(p));
  };
  case_of("N1", zoo::n1().semigroup, Property::MN, 3, std::nullopt);
  case_of("F12", f12_of(o), Property::NDF12, 2, std::nullopt);
  case_of("N2n(1)", zoo::n2n(1).semigroup, Property::NT, 2, std::nullopt);
  if (o.profile == Profile::Full) {
    case_of("N2n(2)", zoo::n2n(2).semigroup, Property::NT, 2, 1000000);
  }
  if (o.profile == Profile::Quick) {
    c.within(start, std::chrono::seconds(300), "5 min");
  } else {
    c.within(start, std::chrono::seconds(3600), "1 h");
  }
  return c.finish();
}

CriterionResult oracle_equivalences(VerifyOptions const& o) {
  auto start = Clock::now();
  Checker c(4, "oracle equivalences");
  auto members = corpus_and_zoo(o, o.profile == Profile::Full);
  auto const& f7 = zoo::f7().semigroup;
  auto const& f12 = f12_of(o);
  enum { MnBasis, MnWmn, TmBasis, EunngBasis, PeDivision, Ndf12Division, Kinds };
  static char const* const names[Kinds] = {
      "is_mn <=> MN identity", "is_mn <=> is_wmn", "is_tm <=> TM identity",
      "is_eunng <=> EUNNG identities", "is_pe <=> bg_nil and F7 does not divide",
      "is_ndf12 <=> bg_nil and neither F7 nor F12 divides"};
  // 0 agree, 1 disagree, 2 unknown
  std::vector<int> outcome(members.size() * Kinds, 0);
  parallel_for(members.size(), o.threads, [&](std::size_t i) {
    auto const& s = *members[i].semigroup;
    int* row = &outcome[i * Kinds];
    bool mn = is_mn(s);
    row[MnBasis] = mn != check_identity(s, mn_identity());
    row[MnWmn] = mn != is_wmn(s);
    row[TmBasis] = is_tm(s) != check_identity(s, tm_identity());
    row[EunngBasis] = is_eunng(s) != satisfies_basis(s, Property::EUNNG);
    bool nil = is_bg_nil(s);
    Tri d7 = divides(f7, s).verdict;
    Tri d12 = divides(f12, s).verdict;
    if (d7 == Tri::Unknown) {
      row[PeDivision] = 2;
    } else {
      row[PeDivision] = is_pe(s) != (nil && d7 == Tri::False);
    }
    if (d7 == Tri::Unknown || d12 == Tri::Unknown) {
      row[Ndf12Division] = 2;
    } else {
      row[Ndf12Division] = is_ndf12(s) != (nil && d7 == Tri::False && d12 == Tri::False);
    }
  });
  c.note(std::to_string(members.size()) + " semigroups");
  for (int k = 0; k < Kinds; ++k) {
    std::size_t bad = 0;
    std::size_t unknown = 0;
    std::string first;
    for (std::size_t i = 0; i < members.size(); ++i) {
      int v = outcome[i * Kinds + k];
      bad += v == 1;
      unknown += v == 2;
      if (v != 0 && first.empty()) {
        first = members[i].name;
      }
    }
    std::string what = std::string(names[k]) + ": " + std::to_string(bad) + " disagreements, " +
                       std::to_string(unknown) + " unknown";
    if (!first.empty()) {
      what += ", first at " + first;
    }
    c.check(bad == 0 && unknown == 0, what);
  }
  c.within(start, std::chrono::seconds(1800), "30 min");
  return c.finish();
}

CriterionResult inclusion_chain(VerifyOptions const& o) {
  Checker c(5, "inclusion chain");
  auto members = corpus_and_zoo(o, false);
  auto const& props = all_properties();
  std::vector<char> holds(members.size() * props.size());
  parallel_for(members.size(), o.threads, [&](std::size_t i) {
    for (std::size_t k = 0; k < props.size(); ++k) {
      holds[i * props.size() + k] = decide(*members[i].semigroup, props[k]).holds;
    }
  });
  auto index = [&](Property p) {
    return static_cast<std::size_t>(std::find(props.begin(), props.end(), p) - props.begin());
  };
  auto in = [&](std::size_t member, Property p) {
    return holds[member * props.size() + index(p)] != 0;
  };
  std::vector<std::pair<Property, Property>> edges{
      {Property::MN, Property::NT},      {Property::NT, Property::NDF12},
      {Property::NDF12, Property::PE},   {Property::PE, Property::BGNil},
      {Property::BGNil, Property::TM},   {Property::TM, Property::BG},
      {Property::MN, Property::EUNNG},   {Property::EUNNG, Property::PE},
  };
  for (auto [a, b] : edges) {
    std::size_t violations = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      violations += in(i, a) && !in(i, b);
    }
    c.check(violations == 0, std::string(to_string(a)) + " => " + to_string(b) + ": " +
                                 std::to_string(violations) + " violations");
  }
  std::size_t ai = 0;
  std::size_t ai_bad = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (in(i, Property::Aperiodic) && in(i, Property::Inverse)) {
      ++ai;
      ai_bad += !in(i, Property::MN);
    }
  }
  c.check(ai_bad == 0, "aperiodic inverse semigroups are MN: " + std::to_string(ai) +
                           " checked, " + std::to_string(ai_bad) + " violations");

  auto find = [&](std::string const& name) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i].name == name) {
        return i;
      }
    }
    throw Error(ErrorKind::InvalidArgument, "missing member " + name);
  };
  std::size_t f12 = find("F12");
  std::size_t n1 = find("N1");
  std::size_t n2 = find("N2");
  std::size_t n3 = find("N3");
  std::size_t n4 = find("N4");
  c.check(in(f12, Property::EUNNG) && !in(f12, Property::NDF12), "F12 in EUNNG minus NDF12");
  c.check(in(n2, Property::NT) && !in(n2, Property::EUNNG), "N2 in NT minus EUNNG");
  c.check(in(n3, Property::EUNNG) && in(n3, Property::NDF12) && !in(n3, Property::NT),
          "N3 in EUNNG and NDF12 but not NT");
  c.check(in(n1, Property::NT) && !in(n1, Property::MN), "N1 in NT minus MN");
  c.check(in(n1, Property::Aperiodic) && in(n1, Property::IdempotentsCommute),
          "N1 aperiodic with commuting idempotents");
  c.check(in(n4, Property::Aperiodic) && in(n4, Property::MN) &&
              !in(n4, Property::IdempotentsCommute),
          "N4 aperiodic and MN with non-commuting idempotents");
  return c.finish();
}

zoo::Color box_color(int box, std::vector<zoo::Color> const& coloring) {
  if (box == 1) {
    return zoo::Color::Black;
  }
  if (box % 2 == 0) {
    return zoo::Color::White;
  }
  return coloring[(box - 3) / 2];
}

bool alternates(int n, int p, int q, std::vector<zoo::Color> const& coloring) {
  if (p < 1 || n % p != 0 || q < 1 || q > 2 * n) {
    return false;
  }
  for (int k = 0; k < 2 * n / p; ++k) {
    int a = (q - 1 + k * p) % (2 * n) + 1;
    int b = (q - 1 + (k + 1) * p) % (2 * n) + 1;
    if (box_color(a, coloring) == box_color(b, coloring)) {
      return false;
    }
  }
  return true;
}

CriterionResult choose_pairs(VerifyOptions const&) {
  auto start = Clock::now();
  Checker c(6, "choose_pair");
  for (int n = 1; n <= 8; ++n) {
    std::size_t good = 0;
    std::size_t total = 0;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<zoo::Color> coloring;
      for (int k = 0; k < n - 1; ++k) {
        coloring.push_back(mask >> k & 1u ? zoo::Color::Black : zoo::Color::White);
      }
      ++total;
      try {
        auto [p, q] = zoo::choose_pair(n, coloring);
        good += alternates(n, p, q, coloring);
      } catch (Error const&) {
      }
    }
    c.check(good == total, "n = " + std::to_string(n) + ": " + std::to_string(good) + " of " +
                               std::to_string(total) + " colourings");
  }
  c.within(start, std::chrono::seconds(1), "1 s");
  return c.finish();
}

CriterionResult iota_property(VerifyOptions const& o) {
  auto start = Clock::now();
  Checker c(7, "iota property");
  std::vector<std::pair<std::string, zoo::ZooEntry const*>> entries{
      {"F7", &zoo::f7()}, {"F12", &zoo::f12()}, {"N1", &zoo::n1()},
      {"N2", &zoo::n2()}, {"N3", &zoo::n3()},   {"N2n(1)", &zoo::n2n(1)}};
  if (o.profile == Profile::Full) {
    entries.emplace_back("N2n(2)", &zoo::n2n(2));
  }
  std::vector<std::size_t> triples(entries.size(), 0);
  std::vector<std::size_t> failures(entries.size(), 0);
  parallel_for(entries.size(), o.threads, [&](std::size_t idx) {
    auto const& s = entries[idx].second->semigroup;
    auto rep = gamma(s, entries[idx].second->ideal_idempotents);
    std::vector<Transformation> ys{Transformation::identity(rep.n)};
    for (ElementId y = 0; y < s.order(); ++y) {
      ys.push_back(rep.map[y]);
    }
    for (ElementId w = 0; w < s.order(); ++w) {
      auto d = orbits(rep.map[w]);
      bool long_tail = std::any_of(d.tails.begin(), d.tails.end(),
                                   [](auto const& tail) { return tail.size() > 1; });
      if (!long_tail) {
        continue;
      }
      auto base = epsilon_iota(rep.map[w]);
      std::size_t bound = std::min(base.iota1, base.iota2);
      for (std::uint64_t p : {2, 3}) {
        Transformation const& wp = rep.map[power(s, w, p)];
        for (auto const& y : ys) {
          auto a = epsilon_iota(wp.then(y));
          auto b = epsilon_iota(y.then(wp));
          ++triples[idx];
          failures[idx] += std::max({a.iota1, a.iota2, b.iota1, b.iota2}) >= bound;
        }
      }
    }
  });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    c.check(failures[i] == 0, entries[i].first + ": " + std::to_string(triples[i]) +
                                  " triples, " + std::to_string(failures[i]) + " failures");
  }
  c.within(start, std::chrono::seconds(60), "1 min");
  return c.finish();
}

CriterionResult product_trials(VerifyOptions const& o) {
  auto start = Clock::now();
  Checker c(8, "product trials");
  bool full = o.profile == Profile::Full;
  static std::vector<FiniteSemigroup> const corpus = small_semigroups(4);
  auto const& f7 = zoo::f7().semigroup;
  auto const& f12 = f12_of(o);

  struct Trial {
    FiniteSemigroup const* t;
    FiniteSemigroup const* v;
  };
  std::vector<FiniteSemigroup const*> small_zoo{&zoo::c2().semigroup, &zoo::lz2().semigroup,
                                                &zoo::rz2().semigroup, &zoo::s3().semigroup, &f7};
  std::size_t corpus_limit = full ? 4 : 3;
  std::vector<Trial> prime;
  for (auto const* t : small_zoo) {
    for (auto const& v : corpus) {
      if (v.order() <= corpus_limit) {
        prime.push_back({t, &v});
      }
    }
    for (auto const* v : small_zoo) {
      prime.push_back({t, v});
    }
  }

  std::vector<Trial> exclusion{{&f12, &zoo::c2().semigroup},
                               {&zoo::n3().semigroup, &zoo::c2().semigroup},
                               {&zoo::n1().semigroup, &zoo::c2().semigroup},
                               {&f7, &zoo::c2().semigroup}};
  for (auto const& v : corpus) {
    if (!is_block_group(v)) {
      continue;
    }
    if (v.order() == 4) {
      exclusion.push_back({&zoo::n3().semigroup, &v});
    }
    if (full && v.order() <= 3) {
      exclusion.push_back({&f12, &v});
      exclusion.push_back({&zoo::n1().semigroup, &v});
    }
  }
  std::vector<FiniteSemigroup> excluded{f7, f12};

  std::vector<TrialOutcome> prime_out(prime.size());
  std::vector<TrialOutcome> excl_out(exclusion.size());
  parallel_for(prime.size() + exclusion.size(), o.threads, [&](std::size_t i) {
    if (i < prime.size()) {
      prime_out[i] = times_prime_trial(f7, *prime[i].t, *prime[i].v).outcome;
    } else {
      auto const& tr = exclusion[i - prime.size()];
      excl_out[i - prime.size()] = exclusion_trial(f12, excluded, *tr.t, *tr.v).outcome;
    }
  });
  auto summarize = [&](std::string const& label, std::vector<TrialOutcome> const& out) {
    std::map<TrialOutcome, std::size_t> counts;
    for (auto t : out) {
      ++counts[t];
    }
    std::string text = label + ": " + std::to_string(out.size()) + " trials";
    for (auto t : {TrialOutcome::Confirmed, TrialOutcome::Vacuous, TrialOutcome::Violation,
                   TrialOutcome::Unknown}) {
      text += ", " + std::to_string(counts[t]) + " " + to_string(t);
    }
    bool ok = counts[TrialOutcome::Violation] == 0 &&
              (!full || counts[TrialOutcome::Unknown] == 0);
    c.check(ok, text);
  };
  summarize("F7 is x-prime", prime_out);
  summarize("F12 in a product of block groups forces F7 or F12 in a factor", excl_out);
  c.within(start, std::chrono::seconds(600), "10 min");
  return c.finish();
}

std::string report_of_first_eight(VerifyOptions const& o) {
  std::vector<CriterionResult> results(kCriteria - 1);
  parallel_for(results.size(), o.threads,
               [&](std::size_t i) { results[i] = run_criterion(static_cast<int>(i) + 1, o); });
  return VerifyReport{results}.text();
}

CriterionResult determinism(VerifyOptions const& o, std::string const& first) {
  Checker c(9, "determinism");
  VerifyOptions other = o;
  other.threads = o.threads > 1 ? 1 : 4;
  std::string second = report_of_first_eight(other);
  c.check(first == second, "reports with one and with several threads are byte-identical");
  return c.finish();
}

CriterionResult guarded(int id, std::string const& title, std::function<CriterionResult()> fn) {
  try {
    return fn();
  } catch (std::exception const& e) {
    CriterionResult r;
    r.id = id;
    r.title = title;
    r.passed = false;
    r.details.push_back(std::string("FAIL  error: ") + e.what());
    return r;
  }
}

}  // namespace

CriterionResult run_criterion(int id, VerifyOptions const& o) {
  switch (id) {
    case 1:
      return guarded(1, "zoo integrity", [&] { return zoo_integrity(o); });
    case 2:
      return guarded(2, "membership matrix", [&] { return membership_matrix(o); });
    case 3:
      return guarded(3, "rank witnesses", [&] { return rank_witnesses(o); });
    case 4:
      return guarded(4, "oracle equivalences", [&] { return oracle_equivalences(o); });
    case 5:
      return guarded(5, "inclusion chain", [&] { return inclusion_chain(o); });
    case 6:
      return guarded(6, "choose_pair", [&] { return choose_pairs(o); });
    case 7:
      return guarded(7, "iota property", [&] { return iota_property(o); });
    case 8:
      return guarded(8, "product trials", [&] { return product_trials(o); });
    case 9:
      return guarded(9, "determinism",
                     [&] { return determinism(o, report_of_first_eight(o)); });
    default:
      throw Error(ErrorKind::InvalidArgument, "no criterion " + std::to_string(id));
  }
}

VerifyReport run_verification(VerifyOptions const& o) {
  std::vector<CriterionResult> results(kCriteria - 1);
  parallel_for(results.size(), o.threads,
               [&](std::size_t i) { results[i] = run_criterion(static_cast<int>(i) + 1, o); });
  std::string first = VerifyReport{results}.text();
  results.push_back(guarded(9, "determinism", [&] { return determinism(o, first); }));
  return VerifyReport{std::move(results)};
}

}  // namespace malcev
