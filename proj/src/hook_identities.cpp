#include "inctree/hook_identities.hpp"

#include "json.hpp"
#include <sstream>
#include <stdexcept>

#include "inctree/tree_space.hpp"

namespace inctree {

std::string HookIdentityReport::to_text() const {
  std::ostringstream os;
  os << scheme.to_string() << ' ' << family << (scheme.kind == SchemeKind::free_multilabelled ||
                                                        scheme.kind == SchemeKind::unilabelled_bilabelled
                                                    ? " m="
                                                    : " n=")
     << parameter << " lhs=" << inctree::to_string(lhs) << " rhs=" << inctree::to_string(rhs)
     << " trees=" << trees_visited << (equal ? " OK" : " FAIL");
  return os.str();
}

std::string HookIdentityReport::to_json() const {
  nlohmann::json j;
  j["scheme"] = scheme.to_string();
  j["family"] = family;
  j["parameter"] = parameter;
  j["lhs"] = inctree::to_string(lhs);
  j["rhs"] = inctree::to_string(rhs);
  j["equal"] = equal;
  j["trees_visited"] = trees_visited;
  return j.dump();
}

namespace {

std::vector<Rational> weight_table(const DegreeWeights& w, std::size_t n) {
  std::vector<Rational> phi;
  for (std::size_t j = 0; j < n; ++j) phi.push_back(w.coefficient(j));
  return phi;
}

// w(T), or nullopt when some factor vanishes.
std::optional<Rational> weight_of(const OrderedTree& t, const std::vector<Rational>& phi) {
  Rational r = 1;
  for (auto d : t.preorder_degrees()) {
    if (phi[d] == 0) return std::nullopt;
    r *= phi[d];
  }
  return r;
}

void require_size(std::size_t n, std::size_t limit, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": size must be >= 1");
  if (n > limit) {
    throw CapacityError(std::string(what) + " capped at " + std::to_string(limit) +
                        " (set INCTREE_CAPACITY to raise)");
  }
}

}  // namespace

HookIdentityReport hook_sum_k_labelled(const DegreeWeights& w, unsigned k, std::size_t n) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  require_size(n, capacity_limit(12), "k-labelled hook sum");
  const auto phi = weight_table(w, n);
  HookIdentityReport r{LabellingScheme::k_labelled(k), w.name(), n, 0, 0, false, 0};
  for (const auto& t : enumerate_ordered_trees(n)) {
    ++r.trees_visited;
    auto wt = weight_of(t, phi);
    if (!wt) continue;
    Integer den = 1;
    for (auto h : t.hook_lengths()) den *= falling_factorial(Integer(static_cast<unsigned long>(k * h)), k);
    r.lhs += *wt / Rational(den);
  }
  r.rhs = solve_k_labelled(w, k, n).at(n) / Rational(factorial(k * n));
  r.equal = r.lhs == r.rhs;
  return r;
}

HookIdentityReport hook_sum_bucket(const DegreeWeights& w, std::size_t m, std::optional<unsigned> max_bucket) {
  if (max_bucket && *max_bucket != 2) throw std::invalid_argument("max_bucket must be 2 or unbounded");
  require_size(m, capacity_limit(8), "bucket hook sum");
  const auto phi = weight_table(w, m);
  const auto scheme = max_bucket ? LabellingScheme::unilabelled_bilabelled() : LabellingScheme::free_multilabelled();
  HookIdentityReport r{scheme, w.name(), m, 0, 0, false, 0};
  for (std::size_t s = 1; s <= m; ++s) {
    for (const auto& t : enumerate_ordered_trees(s)) {
      ++r.trees_visited;
      auto wt = weight_of(t, phi);
      if (!wt) continue;
      for (const auto& b : enumerate_bucket_functions(t, static_cast<unsigned>(m), max_bucket)) {
        const auto h = bucket_hook_lengths(t, b);
        Integer den = 1;
        for (std::size_t v = 0; v < s; ++v) {
          den *= falling_factorial(Integer(static_cast<unsigned long>(h[v])), b.sizes[v]);
        }
        r.lhs += *wt / Rational(den);
      }
    }
  }
  r.rhs = solve(scheme, w, m).at(m) / Rational(factorial(m));
  r.equal = r.lhs == r.rhs;
  return r;
}

HookIdentityReport hook_sum_k_tuple(const DegreeWeights& w, unsigned k, std::size_t n) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  require_size(n, capacity_limit(12), "k-tuple hook sum");
  const auto phi = weight_table(w, n);
  HookIdentityReport r{LabellingScheme::k_tuple(k), w.name(), n, 0, 0, false, 0};
  for (const auto& t : enumerate_ordered_trees(n)) {
    ++r.trees_visited;
    auto wt = weight_of(t, phi);
    if (!wt) continue;
    Integer den = 1;
    for (auto h : t.hook_lengths()) den *= pow(Integer(static_cast<unsigned long>(h)), k);
    r.lhs += *wt / Rational(den);
  }
  r.rhs = solve_k_tuple(w, k, n).at(n) / Rational(pow(factorial(n), k));
  r.equal = r.lhs == r.rhs;
  return r;
}

DegreeWeights tree_family_weights(TreeFamily family) {
  switch (family) {
    case TreeFamily::ordered:
      return DegreeWeights::bundled(1);
    case TreeFamily::binary:
      return DegreeWeights::polynomial({1, 2, 1}, "binary");
    case TreeFamily::strict_binary:
      return DegreeWeights::polynomial({1, 0, 1}, "strict-binary");
  }
  throw std::logic_error("unhandled tree family");
}

Rational HookWeight::operator()(std::size_t h) const {
  auto eval = [h](const std::vector<Rational>& c) -> Rational {
    Rational acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * Rational(static_cast<unsigned long>(h)) + c[i];
    return acc;
  };
  const Rational q = eval(denominator);
  if (q == 0) throw std::domain_error("hook weight denominator vanishes at h = " + std::to_string(h));
  return eval(numerator) / q;
}

Rational generic_hook_weight_sum(const DegreeWeights& w, const HookWeight& rho, std::size_t n) {
  require_size(n, capacity_limit(12), "hook weight sum");
  std::vector<Rational> rho_at;  // rho(h) for h = 1..n, checked up front
  for (std::size_t h = 1; h <= n; ++h) rho_at.push_back(rho(h));
  const auto phi = weight_table(w, n);
  Rational total = 0;
  for (const auto& t : enumerate_ordered_trees(n)) {
    auto wt = weight_of(t, phi);
    if (!wt) continue;
    Rational term = *wt;
    for (auto h : t.hook_lengths()) term *= rho_at[h - 1];
    total += term;
  }
  return total;
}

Rational generic_hook_weight_sum(TreeFamily family, const HookWeight& rho, std::size_t n) {
  return generic_hook_weight_sum(tree_family_weights(family), rho, n);
}

}  // namespace inctree
