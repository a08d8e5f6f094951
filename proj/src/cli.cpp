#include "inctree/cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "inctree/bijections.hpp"
#include "inctree/hook_identities.hpp"
#include "inctree/named_families.hpp"
#include "inctree/reverse_engineering.hpp"
#include "inctree/tree_space.hpp"
#include "json.hpp"

namespace inctree {

namespace {

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << to_string(xs[i]);
  return os.str();
}

std::vector<Rational> as_rationals(const std::vector<Integer>& xs) { return {xs.begin(), xs.end()}; }

void hook_suite(const VerifyBounds& b, std::vector<Check>& out) {
  auto add = [&](const HookIdentityReport& r) { out.push_back({"hook " + r.to_text(), r.equal, ""}); };
  const std::size_t n_max = std::min<std::size_t>(b.max_n, capacity_limit(12));
  const std::size_t m_max = std::min<std::size_t>(b.max_m, capacity_limit(8));
  for (const auto& f : builtin_families()) {
    if (f.scheme.kind == SchemeKind::k_labelled) {
      for (std::size_t n = 1; n <= n_max; ++n) add(hook_sum_k_labelled(f.weights, f.scheme.k, n));
    } else {
      const auto cap = f.scheme.kind == SchemeKind::unilabelled_bilabelled ? std::optional<unsigned>(2) : std::nullopt;
      for (std::size_t m = 1; m <= m_max; ++m) add(hook_sum_bucket(f.weights, m, cap));
    }
  }
  for (const auto& w : {DegreeWeights::exponential(), DegreeWeights::bundled(1)}) {
    for (unsigned k = 1; k <= 3; ++k) {
      for (std::size_t n = 1; n <= n_max; ++n) add(hook_sum_k_tuple(w, k, n));
    }
  }
  const HookWeight postnikov{{1, 1}, {0, 1}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Rational lhs = generic_hook_weight_sum(TreeFamily::binary, postnikov, n);
    const Rational rhs = Rational(pow(Integer(2), n) * pow(Integer(static_cast<unsigned long>(n + 1)), n - 1)) /
                         Rational(factorial(n));
    out.push_back({"postnikov n=" + std::to_string(n), lhs == rhs, to_string(lhs) + " vs " + to_string(rhs)});
  }
  for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 4); ++n) {
    for (unsigned k = 1; k <= 3; ++k) {
      bool ok = true;
      for (const auto& t : enumerate_ordered_trees(n)) {
        ok = ok && count_k_labellings_formula(t, k) == count_k_labellings_bruteforce(t, k);
      }
      out.push_back({"labelling oracle n=" + std::to_string(n) + " k=" + std::to_string(k), ok, ""});
    }
    bool ok = true;
    std::size_t functions = 0;
    for (const auto& t : enumerate_ordered_trees(n)) {
      for (unsigned m = static_cast<unsigned>(n); m <= std::min<std::size_t>(8, capacity_limit(10)); ++m) {
        for (const auto& bf : enumerate_bucket_functions(t, m)) {
          ++functions;
          ok = ok && count_bucket_labellings_formula(t, bf) == count_bucket_labellings_bruteforce(t, bf);
        }
      }
    }
    out.push_back({"bucket oracle n=" + std::to_string(n) + " m<=8", ok, std::to_string(functions) + " functions"});
  }
}

void bijection_suite(const VerifyBounds& b, std::vector<Check>& out) {
  const std::size_t m_max = std::min<std::size_t>(b.max_m, capacity_limit(7));
  const auto free_counts = solve_free_multilabelled(DegreeWeights::bundled(1), std::max<std::size_t>(m_max, 1));
  const auto unibi_counts = solve_unilabelled_bilabelled(DegreeWeights::exponential(), std::max<std::size_t>(m_max, 1));
  for (std::size_t m = 1; m <= m_max; ++m) {
    for (const auto& r : {verify_chain_bijection(m), verify_split_bijection(m)}) {
      const auto& expected = r.name == "chain" ? free_counts.at(m) : unibi_counts.at(m);
      const bool count_ok = Rational(static_cast<unsigned long>(r.domain_count)) == expected &&
                            r.domain_count == r.codomain_count;
      std::ostringstream d;
      d << r.domain_count << " objects, codomain " << r.codomain_count;
      if (!r.first_failure.empty()) d << "; " << r.first_failure;
      out.push_back({"bijection " + r.name + " m=" + std::to_string(m), r.ok() && count_ok, d.str()});
    }
  }
}

void closed_form_suite(const VerifyBounds& b, std::vector<Check>& out) {
  const std::size_t terms = std::max<std::size_t>(b.max_n, 1);
  for (const auto& f : builtin_families()) {
    const auto solver = f.sequence(std::max(terms, f.reference.size()));
    const auto& v = solver.values();
    const bool ref_ok = std::equal(f.reference.begin(), f.reference.end(), v.begin(),
                                   [](const Integer& a, const Rational& x) { return Rational(a) == x; });
    out.push_back({"reference " + f.id, ref_ok, join(f.reference)});
    if (f.closed_form) {
      const auto cf = as_rationals(f.closed_form(terms));
      const bool ok = std::equal(cf.begin(), cf.end(), v.begin());
      out.push_back({"closed form " + f.id + " (" + f.closed_form_name + ")", ok, join(cf)});
    }
    if (f.scheme.kind == SchemeKind::free_multilabelled) {
      const auto transfer = solve_k_labelled(plus_identity(f.weights), 1, terms);
      out.push_back({"free transfer " + f.id, std::equal(transfer.values().begin(), transfer.values().end(), v.begin()),
                     ""});
    }
  }
  out.push_back({"ordered recurrence = closed form", ordered_bilabelled_recurrence(terms) ==
                                                         find_family("bilabelled/ordered").closed_form(terms),
                 ""});
  out.push_back({"2-bundled recurrence = Bell form",
                 two_bundled_recurrence(terms) == find_family("bilabelled/2-bundled").closed_form(terms), ""});
  for (const auto& row : even_degree_lemniscate_relation_check(terms)) {
    out.push_back({"lemniscate n=" + std::to_string(row.n), row.holds,
                   "T=" + to_string(row.t) + " S=" + to_string(row.s)});
  }
  for (const auto& row : reduced_tangent_check(terms)) {
    out.push_back({"reduced tangent n=" + std::to_string(row.n), row.holds, to_string(row.from_tangent)});
  }
  {
    const auto q = unibi_q_sequence(terms);
    const auto t = solve_unilabelled_bilabelled(DegreeWeights::exponential(), terms).integers();
    bool ok = true;
    for (std::size_t m = 1; m <= terms; ++m) ok = ok && t[m - 1] == q[m - 1] + (m >= 2 ? q[m - 2] : Integer(0));
    out.push_back({"uni-bi T_m = Q_m + Q_{m-1}", ok, join(q)});
  }
  const auto strict = strict_binary_recurrence(7);
  for (std::size_t n : {2, 3, 5, 7}) {
    const auto l = strict_binary_lattice_sum(n, b.cutoff);
    const long double exact = strict[n - 1].get_d();
    const long double err = exact == 0 ? std::abs(l.value) : std::abs(l.value - exact) / exact;
    std::ostringstream d;
    d.precision(17);
    d << l.value << " (imag " << l.residual << ")";
    out.push_back({"lattice sum n=" + std::to_string(n), err <= 1e-6L, d.str()});
  }
  const auto bin = solve_free_multilabelled(DegreeWeights::polynomial({1, 2, 1}), 6).integers();
  for (std::size_t m = 1; m <= 6; ++m) {
    const long double x = binary_free_multi_numeric(m, 60);
    const long double exact = bin[m - 1].get_d();
    std::ostringstream d;
    d.precision(17);
    d << x;
    out.push_back({"binary free series m=" + std::to_string(m), std::abs(x - exact) / exact <= 1e-6L, d.str()});
  }
}

void invariant_suite(const VerifyBounds&, std::vector<Check>& out) {
  for (const auto& f : builtin_families()) {
    if (!(f.scheme == LabellingScheme::k_labelled(2))) continue;
    const auto t = f.sequence(10).generating_function();
    const auto r = first_order_invariant_check(f.weights, t);
    out.push_back({"first-order invariant " + f.id, r.holds() && r.coefficient_ok.size() >= 21,
                   std::to_string(r.coefficient_ok.size()) + " coefficients"});
  }
  struct Case {
    Rational a, b, c;
    std::vector<Rational> expected;
  };
  const std::vector<Case> cases{{1, -1, -1, {2, 12, 18, 8, 0, 0, 0, 0}},
                                {1, Rational(1, 2), 1, {1, 3, 6, 10, 15, 21, 28, 36}},
                                {1, Rational(-1, 2), -1, {1, 9, 24, 28, 15, 3, 0, 0}}};
  for (const auto& c : cases) {
    const auto p = family_from_parameters(c.a, c.b, c.c, 8);
    const bool ok = p.forms_agree && p.report.phi == c.expected && p.report.round_trip.value_or(false);
    out.push_back({"reverse " + p.report.provenance, ok, join(p.report.phi)});
  }
  const std::vector<Rational> two{1, 2, 22, 584};
  const auto r = reverse_engineer(two, 4);
  out.push_back({"reverse 2-bundled prefix", r.phi == std::vector<Rational>{1, 2, 3, 4} && r.round_trip.value_or(false),
                 join(r.phi)});
  const auto ws = weierstrass_invariants(1, 0, 1);
  out.push_back({"weierstrass strict-binary", ws.g2 == Rational(-1, 3) && ws.g3 == 0, ""});
}

std::string format_value(const Rational& x) { return to_string(x); }

int cmd_seq(const std::string& family, std::size_t terms, const std::string& format, std::ostream& out) {
  const auto f = find_family(family);
  const auto s = f.sequence(terms);
  if (format == "bfile") {
    for (std::size_t n = 1; n <= s.size(); ++n) out << n << ' ' << format_value(s.at(n)) << '\n';
  } else if (format == "json") {
    nlohmann::json j;
    j["family"] = f.id;
    j["scheme"] = f.scheme.to_string();
    j["weights"] = f.weights.name();
    j["values"] = nlohmann::json::array();
    for (const auto& v : s.values()) j["values"].push_back(format_value(v));
    if (!f.oeis.empty()) j["oeis"] = f.oeis;
    out << j.dump() << '\n';
  } else {
    out << join(s.values()) << '\n';
  }
  return 0;
}

int report_checks(const std::string& title, const std::vector<Check>& checks, const std::string& format,
                  std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& c : checks) failed += c.pass ? 0 : 1;
  if (format == "json") {
    nlohmann::json j;
    j["suite"] = title;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["passed"] = checks.size() - failed;
    j["failed"] = failed;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& c : checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << '\n';
    }
    out << title << ": " << checks.size() - failed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? 0 : 1;
}

std::vector<Rational> parse_values(const std::string& text) {
  std::vector<Rational> v;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t\r");
    if (b == std::string::npos) continue;
    v.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  return v;
}

std::vector<Rational> read_values_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::vector<Rational> v;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    v.push_back(parse_rational(line.substr(b, e - b + 1)));
  }
  return v;
}

}  // namespace

std::vector<Check> run_suite(const std::string& suite, const VerifyBounds& bounds) {
  std::vector<Check> out;
  const bool all = suite == "all";
  if (!all && suite != "hook" && suite != "bijection" && suite != "closed-forms" && suite != "invariants") {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  if (all || suite == "hook") hook_suite(bounds, out);
  if (all || suite == "bijection") bijection_suite(bounds, out);
  if (all || suite == "closed-forms") closed_form_suite(bounds, out);
  if (all || suite == "invariants") invariant_suite(bounds, out);
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multilabelled increasing trees: sequences, hook-length identities, bijections"};
  app.name("inctree");
  app.require_subcommand(1);

  std::string family, format = "plain", suite, values, file, scheme, object, tree_text;
  std::size_t terms = 10, max_n = 6, max_m = 5, cutoff = 50, n = 4;
  unsigned k = 2;
  bool dropped = false;
  const std::vector<std::string> formats{"plain", "bfile", "json"};

  auto* seq = app.add_subcommand("seq", "print T_1..T_terms of a family");
  seq->add_option("family", family, "family id, e.g. bilabelled/unordered")->required();
  seq->add_option("terms,-t,--terms", terms, "number of terms")->check(CLI::PositiveNumber);
  seq->add_option("--format", format, "plain | bfile | json")->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "run exhaustive checks");
  verify->add_option("suite", suite, "hook | bijection | closed-forms | invariants | all")
      ->required()
      ->check(CLI::IsMember({"hook", "bijection", "closed-forms", "invariants", "all"}));
  verify->add_option("--max-n", max_n, "largest tree size / sequence length");
  verify->add_option("--max-m", max_m, "largest label count for bucket schemes and bijections");
  verify->add_option("--cutoff", cutoff, "lattice-sum cutoff")->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "plain | json")->check(CLI::IsMember({"plain", "json"}));

  auto* reverse = app.add_subcommand("reverse", "recover degree weights from bilabelled counts");
  auto* by_family = reverse->add_option("--family", family, "bilabelled family id");
  auto* by_values = reverse->add_option("--values", values, "comma-separated T_1,T_2,...");
  auto* by_file = reverse->add_option("--file", file, "file with one value per line");
  by_family->excludes(by_values)->excludes(by_file);
  by_values->excludes(by_file);
  auto* reverse_terms = reverse->add_option("-t,--terms", terms, "number of terms")->check(CLI::PositiveNumber);
  reverse->add_option("--format", format, "plain | json")->check(CLI::IsMember({"plain", "json"}));

  auto* bij = app.add_subcommand("bijection", "map one object or verify a bijection");
  bij->add_option("scheme", scheme, "chain | split")->required()->check(CLI::IsMember({"chain", "split"}));
  bij->add_option("--object", object, "object text, e.g. \"({1,2} ({3}))\"");
  bij->add_flag("--dropped-root", dropped, "coloured split input stands for a root {1,2} (size m-1)");
  bij->add_option("--max-m", max_m, "verify for m = 1..max-m");
  bij->add_option("--format", format, "plain | json")->check(CLI::IsMember({"plain", "json"}));

  auto* hook = app.add_subcommand("hook", "hook-length identity for a family, or data for one tree");
  hook->add_option("family", family, "family id (ignored with --tree)");
  hook->add_option("-n,--n", n, "tree size, or label count for bucket schemes")->check(CLI::PositiveNumber);
  hook->add_option("--tree", tree_text, "ordered tree as balanced parentheses, e.g. \"(()())\"");
  hook->add_option("-k,--k", k, "labels per node for --tree")->check(CLI::PositiveNumber);
  hook->add_option("--format", format, "plain | json")->check(CLI::IsMember({"plain", "json"}));

  std::vector<const char*> argv{"inctree"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*seq) return cmd_seq(family, terms, format, out);

    if (*verify) {
      const VerifyBounds b{max_n, max_m, cutoff};
      return report_checks(suite, run_suite(suite, b), format, out);
    }

    if (*reverse) {
      ReverseReport r;
      if (!family.empty()) {
        r = reverse_engineer_family(family, terms);
      } else {
        std::vector<Rational> v = !values.empty() ? parse_values(values)
                                  : !file.empty() ? read_values_file(file)
                                                  : throw std::invalid_argument("reverse needs --family, --values or --file");
        const std::size_t t = reverse_terms->count() ? terms : v.size();
        r = reverse_engineer(v, t, !values.empty() ? "values" : "file " + file);
      }
      out << (format == "json" ? r.to_json() + "\n" : r.to_text());
      return 0;
    }

    if (*bij) {
      if (!object.empty()) {
        const auto t = LabelledTree::parse(object);
        nlohmann::json j;
        if (scheme == "chain") {
          const bool colored = t.color.has_value();
          const auto image = colored ? colored_to_multi(t) : multi_to_colored(t);
          j = {{"input", t.to_string()}, {"image", image.to_string()}};
        } else if (t.color) {
          const QImage q{t, dropped};
          j = {{"input", t.to_string()}, {"image", q_to_unibi(q).to_string()}};
        } else {
          const auto q = unibi_to_q(t);
          j = {{"input", t.to_string()}, {"image", q.tree.to_string()}, {"dropped_root_label", q.dropped_root_label}};
        }
        if (format == "json") {
          out << j.dump() << '\n';
        } else {
          out << j["image"].get<std::string>();
          if (j.contains("dropped_root_label") && j["dropped_root_label"].get<bool>()) out << "  (root {1,2}: size m-1)";
          out << '\n';
        }
        return 0;
      }
      std::vector<Check> checks;
      bijection_suite(VerifyBounds{6, max_m, 50}, checks);
      std::vector<Check> selected;
      for (auto& c : checks) {
        if (c.name.rfind("bijection " + scheme, 0) == 0) selected.push_back(std::move(c));
      }
      return report_checks("bijection " + scheme, selected, format, out);
    }

    if (*hook) {
      if (!tree_text.empty()) {
        const auto t = OrderedTree::parse(tree_text);
        const auto h = t.hook_lengths();
        std::vector<std::size_t> hv(h.begin(), h.end());
        nlohmann::json j{{"tree", t.to_string()}, {"size", t.size()}, {"hook_lengths", hv}, {"k", k}};
        j["formula"] = to_string(count_k_labellings_formula(t, k));
        try {
          j["bruteforce"] = to_string(count_k_labellings_bruteforce(t, k));
        } catch (const CapacityError&) {
          j["bruteforce"] = nullptr;
        }
        if (format == "json") {
          out << j.dump() << '\n';
        } else {
          out << "tree " << t.to_string() << " size " << t.size() << "\nhook lengths:";
          for (auto x : hv) out << ' ' << x;
          out << "\nk=" << k << " labellings: formula " << j["formula"].get<std::string>() << ", brute force "
              << (j["bruteforce"].is_null() ? std::string("(over capacity)") : j["bruteforce"].get<std::string>())
              << '\n';
        }
        return j["bruteforce"].is_null() || j["bruteforce"] == j["formula"] ? 0 : 1;
      }
      if (family.empty()) throw std::invalid_argument("hook needs a family id or --tree");
      const auto f = find_family(family);
      HookIdentityReport r;
      switch (f.scheme.kind) {
        case SchemeKind::k_labelled:
          r = hook_sum_k_labelled(f.weights, f.scheme.k, n);
          break;
        case SchemeKind::free_multilabelled:
          r = hook_sum_bucket(f.weights, n, std::nullopt);
          break;
        case SchemeKind::unilabelled_bilabelled:
          r = hook_sum_bucket(f.weights, n, 2u);
          break;
        case SchemeKind::k_tuple:
          r = hook_sum_k_tuple(f.weights, f.scheme.k, n);
          break;
      }
      out << (format == "json" ? r.to_json() : r.to_text()) << '\n';
      return r.equal ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace inctree
