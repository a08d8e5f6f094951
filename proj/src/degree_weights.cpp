#include "inctree/degree_weights.hpp"

#include <charconv>
#include <stdexcept>
#include <utility>

namespace inctree {

struct DegreeWeights::Impl {
  WeightKind kind;
  std::string name;
  Generator phi;
  std::optional<std::size_t> degree;
};

DegreeWeights::DegreeWeights(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {
  if (impl_->phi(0) <= 0) throw std::invalid_argument("degree weights need phi_0 > 0 (" + impl_->name + ")");
}

DegreeWeights DegreeWeights::polynomial(std::vector<Rational> coefficients, std::string name) {
  while (coefficients.size() > 1 && coefficients.back() == 0) coefficients.pop_back();
  if (coefficients.empty()) throw std::invalid_argument("empty polynomial weights");
  for (const auto& c : coefficients) {
    if (c < 0) throw std::invalid_argument("polynomial weights must be non-negative");
  }
  if (name.empty()) {
    name = "poly:";
    for (std::size_t i = 0; i < coefficients.size(); ++i) name += (i ? "," : "") + to_string(coefficients[i]);
  }
  const std::size_t deg = coefficients.size() - 1;
  auto shared = std::make_shared<const std::vector<Rational>>(std::move(coefficients));
  Generator phi = [shared](std::size_t j) { return j < shared->size() ? (*shared)[j] : Rational(0); };
  return DegreeWeights(std::make_shared<const Impl>(Impl{WeightKind::polynomial, std::move(name), phi, deg}));
}

DegreeWeights DegreeWeights::bundled(unsigned d) {
  if (d == 0) throw std::invalid_argument("bundled weights need d >= 1");
  Generator phi = [d](std::size_t j) { return Rational(binomial(j + d - 1, j)); };
  return DegreeWeights(
      std::make_shared<const Impl>(Impl{WeightKind::bundled, "bundled:" + std::to_string(d), phi, std::nullopt}));
}

DegreeWeights DegreeWeights::exponential() {
  Generator phi = [](std::size_t j) { return make_rational(1, factorial(j)); };
  return DegreeWeights(std::make_shared<const Impl>(Impl{WeightKind::exponential, "exp", phi, std::nullopt}));
}

DegreeWeights DegreeWeights::cosh() {
  Generator phi = [](std::size_t j) { return j % 2 == 0 ? make_rational(1, factorial(j)) : Rational(0); };
  return DegreeWeights(std::make_shared<const Impl>(Impl{WeightKind::cosh, "cosh", phi, std::nullopt}));
}

DegreeWeights DegreeWeights::exp_minus_t() {
  Generator phi = [](std::size_t j) { return j == 1 ? Rational(0) : make_rational(1, factorial(j)); };
  return DegreeWeights(std::make_shared<const Impl>(Impl{WeightKind::exp_minus_t, "exp-t", phi, std::nullopt}));
}

DegreeWeights DegreeWeights::ordered_minus_t() {
  Generator phi = [](std::size_t j) { return j == 1 ? Rational(0) : Rational(1); };
  return DegreeWeights(
      std::make_shared<const Impl>(Impl{WeightKind::ordered_minus_t, "ordered-t", phi, std::nullopt}));
}

DegreeWeights DegreeWeights::custom(Generator phi, std::string name) {
  if (!phi) throw std::invalid_argument("custom weights need a generator");
  return DegreeWeights(std::make_shared<const Impl>(Impl{WeightKind::custom, std::move(name), std::move(phi), std::nullopt}));
}

DegreeWeights DegreeWeights::parse(std::string_view text) {
  if (text == "exp") return exponential();
  if (text == "cosh") return cosh();
  if (text == "exp-t") return exp_minus_t();
  if (text == "ordered-t") return ordered_minus_t();
  if (text == "ordered") return bundled(1);
  if (text.starts_with("bundled:")) {
    auto digits = text.substr(8);
    unsigned d = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || d == 0) {
      throw std::invalid_argument("bad bundled weight: " + std::string(text));
    }
    return bundled(d);
  }
  if (text.starts_with("poly:")) {
    std::vector<Rational> coeffs;
    auto rest = text.substr(5);
    while (true) {
      const auto comma = rest.find(',');
      coeffs.push_back(parse_rational(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return polynomial(std::move(coeffs));
  }
  throw std::invalid_argument("unknown degree weights: " + std::string(text));
}

WeightKind DegreeWeights::kind() const { return impl_->kind; }
const std::string& DegreeWeights::name() const { return impl_->name; }
Rational DegreeWeights::coefficient(std::size_t j) const { return impl_->phi(j); }
std::optional<std::size_t> DegreeWeights::degree() const { return impl_->degree; }

RationalSeries as_series(const DegreeWeights& w, int order) {
  std::vector<Rational> c;
  for (int j = 0; j <= order; ++j) c.push_back(w.coefficient(static_cast<std::size_t>(j)));
  return RationalSeries(std::move(c));
}

RationalSeries derivative_series(const DegreeWeights& w, int order) {
  return differentiate(as_series(w, order + 1));
}

RationalSeries antiderivative_series(const DegreeWeights& w, int order) {
  if (order < 1) return RationalSeries::zero(order);
  return integrate(as_series(w, order - 1));
}

DegreeWeights plus_identity(const DegreeWeights& w) {
  return DegreeWeights::custom([w](std::size_t j) -> Rational { return w.coefficient(j) + (j == 1 ? 1 : 0); },
                               w.name() + "+t");
}

}  // namespace inctree
