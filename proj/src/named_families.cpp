#include "inctree/named_families.hpp"

#include <charconv>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace inctree {

namespace {

// 50+ digit literals, rounded to long double.
constexpr long double kPi = 3.14159265358979323846264338327950288419716939937510L;
constexpr long double kGammaQuarter = 3.62560990822190831193068515586767200299516768288006L;
constexpr long double kSqrt5 = 2.23606797749978969640917366873127623544061835961152L;

void require_terms(std::size_t terms) {
  if (terms == 0) throw std::invalid_argument("terms must be >= 1");
}

Integer exact_integer(const Rational& r, const char* what) {
  if (!is_integral(r)) throw std::logic_error(std::string(what) + " is not integral: " + to_string(r));
  return r.get_num();
}

// T_k with T_0 = 0 on a 1-based vector.
const Integer& at_or_zero(const std::vector<Integer>& t, std::size_t k) {
  static const Integer zero = 0;
  return (k == 0 || k > t.size()) ? zero : t[k - 1];
}

}  // namespace

std::vector<Rational> inverse_erf_coefficients(std::size_t count) {
  require_terms(count);
  std::vector<Rational> c{Rational(1)};
  for (std::size_t k = 1; k < count; ++k) {
    Rational s = 0;
    for (std::size_t m = 0; m < k; ++m) {
      s += c[m] * c[k - 1 - m] / Rational(static_cast<unsigned long>((m + 1) * (2 * m + 1)));
    }
    c.push_back(s);
  }
  return c;
}

Integer ordered_bilabelled_closed_form(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  const auto c = inverse_erf_coefficients(n);
  return exact_integer(Rational(factorial(2 * n - 2)) * c[n - 1] / Rational(pow(Integer(2), n - 1)),
                       "ordered closed form");
}

Integer three_bundled_closed_form(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  return odd_double_factorial(n - 1) * odd_double_factorial(n);
}

Rational partial_bell(std::size_t k, std::size_t m, const std::vector<Rational>& xs) {
  if (m < 1 || m > k) throw std::invalid_argument("partial Bell polynomial needs 1 <= m <= k");
  if (xs.size() < k - m + 1) throw std::invalid_argument("partial Bell polynomial needs k-m+1 inputs");
  // b[n][j] = B_{n,j}; B_{n,j} = sum_i C(n-1, i-1) x_i B_{n-i, j-1}.
  std::vector<std::vector<Rational>> b(k + 1, std::vector<Rational>(m + 1, Rational(0)));
  b[0][0] = 1;
  for (std::size_t n = 1; n <= k; ++n) {
    for (std::size_t j = 1; j <= std::min(n, m); ++j) {
      Rational s = 0;
      for (std::size_t i = 1; i + j - 1 <= n; ++i) {
        if (b[n - i][j - 1] == 0) continue;
        s += Rational(binomial(n - 1, i - 1)) * xs[i - 1] * b[n - i][j - 1];
      }
      b[n][j] = s;
    }
  }
  return b[k][m];
}

Rational two_bundled_bell_input(std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  return Rational(factorial(k) * binomial(2 * k, k)) /
         Rational(pow(Integer(4), k) * static_cast<unsigned long>((2 * k - 1) * (2 * k + 1)));
}

Integer two_bundled_closed_form(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  if (n == 1) return 1;
  std::vector<Rational> xs;
  for (std::size_t k = 1; k < n; ++k) xs.push_back(two_bundled_bell_input(k));
  Rational s = 0;
  for (std::size_t m = 1; m <= n - 1; ++m) {
    s += Rational(binomial(2 * n - 1 + m, m) * factorial(m)) * partial_bell(n - 1, m, xs);
  }
  s /= Rational(factorial(n - 1));
  const Rational t = Rational(factorial(2 * n)) / Rational(static_cast<unsigned long>(n)) /
                     Rational(pow(Integer(2), n)) * s;
  return exact_integer(t, "2-bundled closed form");
}

Rational two_bundled_closed_form_uncorrected(std::size_t n) {
  if (n < 2) throw std::invalid_argument("the Bell form is stated for n >= 2");
  std::vector<Rational> xs;
  for (std::size_t k = 1; k < n; ++k) {
    xs.push_back(Rational(factorial(k) * binomial(2 * k, k) * static_cast<unsigned long>(k)) /
                 Rational(pow(Integer(4), k) * static_cast<unsigned long>(2 * k + 1)));
  }
  Rational s = 0;
  for (std::size_t m = 1; m <= n - 1; ++m) s += Rational(binomial(2 * n - 1 + m, m)) * partial_bell(n - 1, m, xs);
  return Rational(factorial(2 * n)) / Rational(static_cast<unsigned long>(n)) / Rational(pow(Integer(8), n)) * s;
}

std::vector<Integer> two_bundled_recurrence(std::size_t terms) {
  require_terms(terms);
  std::vector<Integer> t{1};
  for (std::size_t n = 2; n <= terms; ++n) {
    Integer s = 0;
    for (std::size_t k = 1; k <= n - 1; ++k) s += 2 * binomial(2 * n - 2, 2 * k) * t[k - 1] * t[n - k - 1];
    for (std::size_t j = 0; j <= n - 1; ++j) {
      for (std::size_t k = 0; j + k <= n - 1; ++k) {
        const std::size_t l = n - 1 - j - k;
        const auto& tj = at_or_zero(t, j);
        const auto& tk = at_or_zero(t, k);
        if (tj == 0 || tk == 0) continue;
        s -= multinomial({2 * j, 2 * k, 2 * l}) * tj * tk * at_or_zero(t, l + 1);
      }
    }
    t.push_back(s);
  }
  return t;
}

std::vector<Integer> strict_binary_recurrence(std::size_t terms) {
  require_terms(terms);
  std::vector<Integer> t{1};
  for (std::size_t n = 2; n <= terms; ++n) {
    Integer s = 0;
    for (std::size_t k = 1; k + 2 <= n; ++k) s += binomial(2 * n - 2, 2 * k) * t[k - 1] * t[n - 2 - k];
    t.push_back(s);
  }
  return t;
}

std::vector<Integer> ordered_bilabelled_recurrence(std::size_t terms) {
  require_terms(terms);
  std::vector<Integer> t{1};
  for (std::size_t n = 2; n <= terms; ++n) {
    Integer s = 0;
    for (std::size_t k = 1; k <= n - 1; ++k) s += binomial(2 * n - 2, 2 * k) * t[k - 1] * t[n - k - 1];
    t.push_back(s);
  }
  return t;
}

std::vector<Integer> binary_bilabelled_recurrence(std::size_t terms) {
  require_terms(terms);
  std::vector<Integer> t{1};
  for (std::size_t n = 2; n <= terms; ++n) {
    Integer s = 2 * t[n - 2];
    for (std::size_t k = 1; k + 2 <= n; ++k) s += binomial(2 * n - 2, 2 * k) * t[k - 1] * t[n - 2 - k];
    t.push_back(s);
  }
  return t;
}

std::vector<Integer> even_degree_recurrence(std::size_t terms) {
  require_terms(terms);
  std::vector<Integer> t{1};
  // index n of the recurrence produces T_{n+2}
  for (std::size_t n = 0; t.size() < terms; ++n) {
    Integer s = 0;
    if (n >= 1) {
      for (std::size_t j = 0; j <= n - 1; ++j) {
        for (std::size_t k = 0; j + k <= n - 1; ++k) {
          const std::size_t l = n - 1 - j - k;
          s += multinomial({2 * j + 1, 2 * k + 1, 2 * l + 1}) * t[j] * t[k] * t[l];
        }
      }
    }
    if (s % 2 != 0) throw std::logic_error("even-degree recurrence produced an odd sum");
    t.push_back(s / 2);
  }
  return t;
}

std::vector<Integer> lemniscate_sine_coefficients(std::size_t count) {
  require_terms(count);
  // s[n] = S_n; S_{n+2} = -2 sum_{i+j+l=n} C(n; i,j,l) S_i S_j S_l.
  std::vector<Integer> s(count + 1, Integer(0));
  s[1] = 1;
  for (std::size_t n = 0; n + 2 <= count; ++n) {
    Integer acc = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (s[i] == 0) continue;
      for (std::size_t j = 1; i + j <= n; ++j) {
        if (s[j] == 0) continue;
        const std::size_t l = n - i - j;
        if (l == 0 || s[l] == 0) continue;
        acc += multinomial({i, j, l}) * s[i] * s[j] * s[l];
      }
    }
    s[n + 2] = -2 * acc;
  }
  return {s.begin() + 1, s.end()};
}

std::vector<LemniscateRow> even_degree_lemniscate_relation_check(std::size_t max_n) {
  require_terms(max_n);
  const auto t = even_degree_recurrence(max_n);
  const auto s = lemniscate_sine_coefficients(2 * max_n - 1);
  std::vector<LemniscateRow> rows;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const Integer& tn = t[n - 1];
    const Integer& sn = s[2 * n - 2];
    bool ok;
    if (n % 2 == 0) {
      ok = tn == 0 && sn == 0;
    } else {
      const Integer sign = ((n - 1) / 2) % 2 == 0 ? 1 : -1;
      ok = tn * pow(Integer(2), n - 1) == sign * sn;
    }
    rows.push_back({n, tn, sn, ok});
  }
  return rows;
}

std::vector<Integer> blasius_numbers(std::size_t terms) {
  require_terms(terms);
  std::vector<Integer> t{1};
  for (std::size_t n = 1; t.size() < terms; ++n) {
    Integer s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += binomial(3 * n - 1, 3 * k - 3) * t[k - 1] * t[n - k];
    t.push_back(s);
  }
  return t;
}

std::vector<Integer> unibi_q_sequence(std::size_t terms) {
  require_terms(terms);
  std::vector<Integer> q{0, 1};  // Q_0, Q_1
  for (std::size_t m = 0; q.size() <= terms; ++m) {
    Integer s = 0;
    for (std::size_t k = 0; k <= m; ++k) s += binomial(m, k) * (q[k] + q[k + 1]) * q[m - k + 1];
    q.push_back(s);
  }
  return {q.begin() + 1, q.begin() + 1 + static_cast<long>(terms)};
}

WeierstrassInvariants weierstrass_invariants(const Rational& phi0, const Rational& phi1, const Rational& phi2) {
  WeierstrassInvariants w;
  w.g2 = -phi0 * phi2 / 3 + phi1 * phi1 / 12;
  w.g3 = -phi1 * phi1 * phi1 / 216 + phi0 * phi1 * phi2 / 36;
  w.p_at_c = phi1 / 12;
  return w;
}

LatticeSum strict_binary_lattice_sum(std::size_t n, std::size_t cutoff) {
  if (n == 0 || cutoff == 0) throw std::invalid_argument("lattice sum needs n >= 1 and cutoff >= 1");
  using C = std::complex<long double>;
  const long c = static_cast<long>(cutoff);
  const std::size_t e = 2 * n + 2;
  C sum = 0;
  for (long n1 = -c; n1 <= c; ++n1) {
    for (long n2 = -c; n2 <= c; ++n2) {
      const C z(1.0L + n1 + n2, static_cast<long double>(n1 - n2));
      C p = 1;
      for (std::size_t i = 0; i < e; ++i) p *= z;
      sum += 1.0L / p;
    }
  }
  long double pre = 1;
  for (std::size_t i = 2; i <= 2 * n + 1; ++i) pre *= static_cast<long double>(i);
  pre *= std::pow(2.0L, static_cast<long double>(3 * n + 4));
  pre *= std::pow(kPi, static_cast<long double>(n + 1));
  pre /= std::pow(3.0L, (static_cast<long double>(n) - 1) / 2);
  pre /= std::pow(kGammaQuarter, static_cast<long double>(4 * n + 4));
  return {pre * sum.real(), pre * sum.imag()};
}

Integer strict_binary_free_multi_explicit(std::size_t m) {
  if (m == 0) throw std::invalid_argument("m must be >= 1");
  // cos(r pi/6) = (a + b sqrt3)/2
  static constexpr int kCosA[12] = {2, 0, 1, 0, -1, 0, -2, 0, -1, 0, 1, 0};
  static constexpr int kCosB[12] = {0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1};
  Integer rational_part = 0;  // both parts carry a factor 1/2
  Integer sqrt3_part = 0;
  for (std::size_t k = 1; k <= m; ++k) {
    Integer inner = 0;
    for (std::size_t l = 1; l <= k; ++l) {
      Integer term = binomial(k, l) * pow(Integer(static_cast<unsigned long>(l)), m);
      inner += (k - l) % 2 == 0 ? term : Integer(-term);
    }
    const long arg = 3 * static_cast<long>(m) + 2 - 5 * static_cast<long>(k);
    const int r = static_cast<int>(((arg % 12) + 12) % 12);
    Integer a = kCosA[r];
    Integer b = kCosB[r];
    const std::size_t d = m - k;
    const Integer p = pow(Integer(3), d / 2);
    if (d % 2 == 1) {  // extra sqrt3: (a + b sqrt3) sqrt3 = 3b + a sqrt3
      Integer a2 = 3 * b;
      b = a;
      a = a2;
    }
    rational_part += p * a * inner;
    sqrt3_part += p * b * inner;
  }
  if (sqrt3_part != 0) throw std::logic_error("sqrt(3) component did not cancel");
  if (rational_part % 2 != 0) throw std::logic_error("explicit strict-binary value is not integral");
  return rational_part / 2;
}

long double binary_free_multi_numeric(std::size_t m, std::size_t cutoff) {
  if (m == 0 || cutoff == 0) throw std::invalid_argument("m and cutoff must be >= 1");
  const long double q = (7.0L - 3.0L * kSqrt5) / 2.0L;
  long double sum = 0;
  long double qk = 1;
  for (std::size_t k = 1; k <= cutoff; ++k) {
    qk *= q;
    sum += qk * std::pow(kSqrt5 * static_cast<long double>(k), static_cast<long double>(m));
  }
  return kSqrt5 * sum;
}

namespace {

std::vector<Integer> reduced_tangent_numbers(std::size_t terms) {
  const std::size_t top = 2 * terms - 1;
  std::vector<Rational> t(top + 1, Rational(0));  // tan z coefficients
  for (std::size_t j = 0; j < top; ++j) {
    Rational s = j == 0 ? Rational(1) : Rational(0);
    for (std::size_t i = 1; i < j; ++i) s += t[i] * t[j - i];
    t[j + 1] = s / Rational(static_cast<unsigned long>(j + 1));
  }
  std::vector<Integer> out;
  for (std::size_t n = 1; n <= terms; ++n) {
    out.push_back(exact_integer(Rational(factorial(2 * n - 1)) * t[2 * n - 1] / Rational(pow(Integer(2), n - 1)),
                                "reduced tangent number"));
  }
  return out;
}

}  // namespace

std::vector<TangentRow> reduced_tangent_check(std::size_t max_n) {
  require_terms(max_n);
  const auto tan_side = reduced_tangent_numbers(max_n);
  const auto solver = solve_k_labelled(DegreeWeights::exponential(), 2, max_n).integers();
  std::vector<TangentRow> rows;
  for (std::size_t n = 1; n <= max_n; ++n) {
    rows.push_back({n, tan_side[n - 1], solver[n - 1], tan_side[n - 1] == solver[n - 1]});
  }
  return rows;
}

// ---- registry ----

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

template <class F>
std::function<std::vector<Integer>(std::size_t)> per_term(F f) {
  return [f](std::size_t terms) {
    std::vector<Integer> v;
    for (std::size_t n = 1; n <= terms; ++n) v.push_back(f(n));
    return v;
  };
}

DegreeWeights poly(std::vector<Rational> c, std::string name) { return DegreeWeights::polynomial(std::move(c), std::move(name)); }

std::vector<FamilySpec> make_builtins() {
  const auto bl = LabellingScheme::k_labelled(2);
  const auto fr = LabellingScheme::free_multilabelled();
  std::vector<FamilySpec> f;
  f.push_back({"bilabelled/unordered", "unordered bilabelled increasing trees", bl, DegreeWeights::exponential(),
               ints({1, 1, 4, 34, 496, 11056}), "remark on unordered bilabelled trees", "A002105",
               reduced_tangent_numbers, "reduced tangent numbers"});
  f.push_back({"bilabelled/ordered", "ordered bilabelled increasing trees", bl, DegreeWeights::bundled(1),
               ints({1, 1, 7, 127, 4369, 243649}), "remark on ordered bilabelled trees", "A002067",
               per_term(ordered_bilabelled_closed_form), "inverse-erf coefficients"});
  f.push_back({"bilabelled/3-bundled", "3-bundled bilabelled increasing trees", bl, DegreeWeights::bundled(3),
               ints({1, 3, 45, 1575, 99225}), "remark on 3-bundled trees", "A079484",
               per_term(three_bundled_closed_form), "(2n-3)!! (2n-1)!!"});
  f.push_back({"bilabelled/2-bundled", "2-bundled bilabelled increasing trees", bl, DegreeWeights::bundled(2),
               ints({1, 2, 22, 584, 28384, 2190128}), "remark on 2-bundled trees", "A120419",
               per_term(two_bundled_closed_form), "Bell polynomial form"});
  f.push_back({"bilabelled/strict-binary", "strict-binary bilabelled increasing trees", bl,
               poly({1, 0, 1}, "strict-binary"), ints({1, 0, 6, 0, 336, 0, 77616, 0, 50916096}),
               "remark on strict-binary trees", "A144849", strict_binary_recurrence, "convolution recurrence"});
  f.push_back({"bilabelled/even-degree", "unordered even-degree bilabelled increasing trees", bl, DegreeWeights::cosh(),
               ints({1, 0, 3, 0, 189, 0, 68607}), "remark on even-degree trees", "", even_degree_recurrence,
               "cubic recurrence"});
  f.push_back({"bilabelled/binary", "binary bilabelled increasing trees", bl, poly({1, 2, 1}, "binary"),
               ints({1, 2, 10, 80, 1000, 17600, 418000}), "binary bilabelled sequence", "A063902",
               binary_bilabelled_recurrence, "convolution recurrence"});
  f.push_back({"trilabelled/unordered", "unordered trilabelled increasing trees", LabellingScheme::k_labelled(3),
               DegreeWeights::exponential(), ints({1, 1, 11, 375, 27897, 3817137}), "remark on trilabelled trees",
               "A018893", blasius_numbers, "shifted Blasius numbers"});
  f.push_back({"free/strict-binary", "strict-binary free multilabelled increasing trees", fr,
               poly({1, 0, 1}, "strict-binary"), ints({1, 1, 3, 9, 39, 189, 1107}), "free multilabelled remark",
               "A080635", per_term(strict_binary_free_multi_explicit), "trigonometric sum"});
  f.push_back({"free/binary", "binary free multilabelled increasing trees", fr, poly({1, 2, 1}, "binary"),
               ints({1, 3, 11, 51, 295, 2055, 16715}), "free multilabelled remark", "A230008", nullptr, ""});
  f.push_back({"free/unary-binary", "unary-binary free multilabelled increasing trees", fr,
               poly({1, 1, 1}, "unary-binary"), ints({1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800}),
               "T_m = m!", "", per_term([](std::size_t m) { return factorial(m); }), "m!"});
  f.push_back({"free/ordered-no-unary", "ordered free multilabelled trees without unary nodes", fr,
               DegreeWeights::ordered_minus_t(), ints({1, 1, 3, 15, 105, 945, 10395, 135135, 2027025, 34459425}),
               "T_m = (2m-3)!!", "", per_term([](std::size_t m) { return odd_double_factorial(m - 1); }),
               "(2m-3)!!"});
  f.push_back({"free/unordered-no-unary", "unordered free multilabelled trees without unary nodes", fr,
               DegreeWeights::exp_minus_t(), ints({1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880}), "T_m = (m-1)!",
               "", per_term([](std::size_t m) { return factorial(m - 1); }), "(m-1)!"});
  f.push_back({"unibi/unordered", "unordered unilabelled-bilabelled increasing trees",
               LabellingScheme::unilabelled_bilabelled(), DegreeWeights::exponential(),
               ints({1, 2, 4, 14, 66, 392, 2806}), "uni-bi remark", "",
               [](std::size_t terms) {
                 const auto q = unibi_q_sequence(terms);
                 std::vector<Integer> t;
                 for (std::size_t m = 1; m <= terms; ++m) t.push_back(q[m - 1] + (m >= 2 ? q[m - 2] : Integer(0)));
                 return t;
               },
               "Q_m + Q_{m-1}"});
  return f;
}

}  // namespace

const std::vector<FamilySpec>& builtin_families() {
  static const std::vector<FamilySpec> families = make_builtins();
  return families;
}

FamilySpec find_family(std::string_view id) {
  for (const auto& f : builtin_families()) {
    if (f.id == id) return f;
  }
  const auto slash = id.find('/');
  if (slash == std::string_view::npos) throw std::invalid_argument("unknown family: " + std::string(id));
  const auto scheme_name = id.substr(0, slash);
  auto rest = id.substr(slash + 1);
  std::optional<unsigned> k;
  if (const auto pos = rest.rfind(":k="); pos != std::string_view::npos) {
    const auto digits = rest.substr(pos + 3);
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || v == 0) {
      throw std::invalid_argument("bad k in family id: " + std::string(id));
    }
    k = v;
    rest = rest.substr(0, pos);
  }
  LabellingScheme scheme;
  if (scheme_name == "bilabelled" && !k) {
    scheme = LabellingScheme::k_labelled(2);
  } else if (scheme_name == "k-labelled") {
    scheme = LabellingScheme::k_labelled(k.value_or(2));
  } else if (scheme_name == "free" && !k) {
    scheme = LabellingScheme::free_multilabelled();
  } else if (scheme_name == "unibi" && !k) {
    scheme = LabellingScheme::unilabelled_bilabelled();
  } else if (scheme_name == "ktuple") {
    scheme = LabellingScheme::k_tuple(k.value_or(2));
  } else {
    throw std::invalid_argument("unknown family: " + std::string(id));
  }
  DegreeWeights w = [&] {
    try {
      return DegreeWeights::parse(rest);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("unknown family: " + std::string(id));
    }
  }();
  return FamilySpec{std::string(id), scheme.to_string() + " with weights " + w.name(), scheme, w, {}, "", "",
                    nullptr, ""};
}

}  // namespace inctree
