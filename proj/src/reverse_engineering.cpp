#include "inctree/reverse_engineering.hpp"

#include <sstream>
#include <stdexcept>

#include "inctree/named_families.hpp"
#include "inctree/ode_engine.hpp"
#include "inctree/series.hpp"
#include "json.hpp"

namespace inctree {

std::string ReverseReport::to_text() const {
  std::ostringstream os;
  os << "input (" << provenance << "):";
  for (const auto& t : input) os << ' ' << to_string(t);
  os << "\nphi_0.." << guaranteed_order << ':';
  for (const auto& p : phi) os << ' ' << to_string(p);
  os << "\nadmissible: " << (admissible ? "yes" : "no");
  if (first_violation) os << " (first violation at j = " << *first_violation << ')';
  os << "\nround trip: " << (round_trip ? (*round_trip ? "ok" : "FAIL") : "n/a") << '\n';
  return os.str();
}

std::string ReverseReport::to_json() const {
  nlohmann::json j;
  j["provenance"] = provenance;
  for (const auto& t : input) j["input"].push_back(to_string(t));
  for (const auto& p : phi) j["phi"].push_back(to_string(p));
  j["guaranteed_order"] = guaranteed_order;
  j["admissible"] = admissible;
  j["first_violation"] = first_violation ? nlohmann::json(*first_violation) : nlohmann::json(nullptr);
  j["round_trip"] = round_trip ? nlohmann::json(*round_trip) : nlohmann::json(nullptr);
  return j.dump();
}

DegreeWeights weights_from_prefix(const std::vector<Rational>& phi, std::string name) {
  return DegreeWeights::custom([phi](std::size_t j) -> Rational { return j < phi.size() ? phi[j] : Rational(0); },
                               std::move(name));
}

ReverseReport reverse_engineer(std::span<const Rational> tn, std::size_t terms, std::string provenance) {
  if (terms == 0) throw std::invalid_argument("terms must be >= 1");
  if (tn.size() < terms) {
    throw std::invalid_argument("need " + std::to_string(terms) + " values, got " + std::to_string(tn.size()));
  }
  if (tn[0] == 0) throw std::domain_error("T_1 = 0: f has no linear term and cannot be inverted");
  const int n = static_cast<int>(terms);
  std::vector<Rational> fc(terms + 1, Rational(0));
  for (std::size_t i = 1; i <= terms; ++i) fc[i] = tn[i - 1] / Rational(factorial(2 * i));
  const RationalSeries f(std::move(fc));
  const auto g = reversion(f);                           // order n
  const auto f1 = compose(differentiate(f), g);         // order n-1
  const auto f2 = compose(differentiate(differentiate(f)), g);  // order n-2
  // g f''(g) = z (g/z) f''(g): one order better than the plain product.
  const auto gf2 = shift(unshift(g, 1) * f2, 1);
  const auto phi = Rational(4) * gf2 + Rational(2) * f1;
  if (phi.order() != n - 1) throw std::logic_error("unexpected truncation order in reverse engineering");

  ReverseReport r;
  r.provenance = std::move(provenance);
  r.input.assign(tn.begin(), tn.begin() + static_cast<long>(terms));
  r.phi.assign(phi.coefficients().begin(), phi.coefficients().end());
  r.guaranteed_order = terms - 1;
  if (r.phi[0] <= 0) r.first_violation = 0;
  for (std::size_t j = 1; j < r.phi.size() && !r.first_violation; ++j) {
    if (r.phi[j] < 0) r.first_violation = j;
  }
  r.admissible = !r.first_violation;
  if (r.phi[0] > 0) {
    const auto again = solve_k_labelled(weights_from_prefix(r.phi, "reverse-engineered"), 2, terms);
    r.round_trip = again.values() == r.input;
  }
  return r;
}

ReverseReport reverse_engineer_family(std::string_view family_id, std::size_t terms) {
  const auto fam = find_family(family_id);
  if (!(fam.scheme == LabellingScheme::k_labelled(2))) {
    throw std::invalid_argument("reverse engineering needs a bilabelled family, got " + fam.scheme.to_string());
  }
  const auto seq = fam.sequence(terms);
  return reverse_engineer(seq.values(), terms, "family " + std::string(family_id));
}

ParametricFamily family_from_parameters(const Rational& a, const Rational& b, const Rational& c, std::size_t terms) {
  if (terms == 0) throw std::invalid_argument("terms must be >= 1");
  ParametricFamily p{a, b, c, "", true, {}, {}, {}, false};
  const bool case_i = a > 0 && b < 0 && c < 0;
  const bool case_ii = a > 0 && b > 0 && b < 1 && c > 0;
  if (!case_i && !case_ii) {
    std::string why;
    if (a <= 0) why = "A must be positive";
    else if (b == 0 || b >= 1) why = "B must satisfy B < 0 or 0 < B < 1";
    else if (b < 0) why = "B < 0 requires C < 0";
    else why = "0 < B < 1 requires C > 0";
    throw std::invalid_argument("parameters outside both admissible cases: " + why);
  }
  for (std::size_t n = 1; n <= terms; ++n) {
    p.tn.push_back(Rational(factorial(2 * n)) * (-c) * pow(Rational(-a), n) * binomial(b, n));
  }
  // 2ABC [...] with the bracket from the case's expansion of phi(t).
  const Rational scale = 2 * a * b * c;
  for (std::size_t j = 0; j < terms; ++j) {
    Rational phi;
    if (case_i) {
      const Rational one = 1;
      phi = scale * (2 * (one - b) * binomial(Rational(one - 2 / b), j) - (one - 2 * b) * binomial(Rational(one - 1 / b), j)) /
            pow(Rational(-c), j);
    } else {
      const Rational two = 2;
      phi = scale *
            ((two - 2 * b) * binomial(Rational(two / b - 2 + j), j) - (1 - 2 * b) * binomial(Rational(1 / b - 2 + j), j)) /
            pow(c, j);
    }
    p.closed_form_phi.push_back(phi);
  }
  if (case_i) {
    p.case_label = "case (i)";
    const Rational inv = -1 / b;
    p.integrality_holds = is_integral(inv);
  } else {
    p.case_label = "case (ii)";
  }
  std::ostringstream prov;
  prov << "C(1-(1-Az^2)^B) with A=" << to_string(a) << " B=" << to_string(b) << " C=" << to_string(c);
  p.report = reverse_engineer(p.tn, terms, prov.str());
  p.forms_agree = p.report.phi == p.closed_form_phi;
  return p;
}

}  // namespace inctree
