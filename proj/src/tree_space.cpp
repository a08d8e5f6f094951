#include "inctree/tree_space.hpp"

#include <bit>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <string>

namespace inctree {

std::size_t capacity_limit(std::size_t default_limit) {
  if (const char* env = std::getenv("INCTREE_CAPACITY")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > default_limit) return v;
  }
  return default_limit;
}

OrderedTree::OrderedTree() : degrees_{0} {}

OrderedTree OrderedTree::from_children(std::span<const OrderedTree> children) {
  if (children.size() > 255) throw std::invalid_argument("out-degree above 255");
  std::vector<std::uint8_t> d{static_cast<std::uint8_t>(children.size())};
  for (const auto& c : children) d.insert(d.end(), c.degrees_.begin(), c.degrees_.end());
  return OrderedTree(std::move(d));
}

OrderedTree OrderedTree::from_degrees(std::vector<std::uint8_t> preorder_degrees) {
  // A valid preorder degree sequence closes exactly at its last entry.
  long need = 1;
  for (std::size_t i = 0; i < preorder_degrees.size(); ++i) {
    if (need == 0) throw std::invalid_argument("degree sequence closes early");
    need += static_cast<long>(preorder_degrees[i]) - 1;
  }
  if (preorder_degrees.empty() || need != 0) throw std::invalid_argument("degree sequence does not describe a tree");
  return OrderedTree(std::move(preorder_degrees));
}

OrderedTree OrderedTree::parse(std::string_view text) {
  std::vector<std::uint8_t> degrees;
  std::vector<std::size_t> open;  // preorder ids of unclosed nodes
  bool closed_root = false;
  for (char ch : text) {
    if (ch == ' ' || ch == '\n' || ch == '\t') continue;
    if (closed_root) throw std::invalid_argument("trailing input after tree: " + std::string(text));
    if (ch == '(') {
      if (!open.empty()) {
        if (degrees[open.back()] == 255) throw std::invalid_argument("out-degree above 255");
        ++degrees[open.back()];
      }
      open.push_back(degrees.size());
      degrees.push_back(0);
    } else if (ch == ')') {
      if (open.empty()) throw std::invalid_argument("unbalanced ')' in tree: " + std::string(text));
      open.pop_back();
      if (open.empty()) closed_root = true;
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + ch + "' in tree");
    }
  }
  if (!closed_root) throw std::invalid_argument("unbalanced tree encoding: " + std::string(text));
  return OrderedTree(std::move(degrees));
}

std::string OrderedTree::to_string() const {
  std::string out;
  std::vector<unsigned> remaining;
  for (auto d : degrees_) {
    out += '(';
    remaining.push_back(d);
    while (!remaining.empty() && remaining.back() == 0) {
      out += ')';
      remaining.pop_back();
      if (!remaining.empty()) --remaining.back();
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> OrderedTree::children() const {
  std::vector<std::vector<std::size_t>> kids(size());
  std::vector<std::pair<std::size_t, unsigned>> stack;  // (node, children still to attach)
  for (std::size_t v = 0; v < size(); ++v) {
    if (!stack.empty()) {
      kids[stack.back().first].push_back(v);
      if (--stack.back().second == 0) stack.pop_back();
    }
    if (degrees_[v] > 0) stack.emplace_back(v, degrees_[v]);
    // Pop fully attached ancestors.
    while (!stack.empty() && stack.back().second == 0) stack.pop_back();
  }
  return kids;
}

std::vector<std::optional<std::size_t>> OrderedTree::parents() const {
  std::vector<std::optional<std::size_t>> p(size());
  const auto kids = children();
  for (std::size_t v = 0; v < size(); ++v) {
    for (auto c : kids[v]) p[c] = v;
  }
  return p;
}

std::vector<std::size_t> OrderedTree::hook_lengths() const {
  const auto kids = children();
  std::vector<std::size_t> h(size(), 1);
  for (std::size_t v = size(); v-- > 0;) {
    for (auto c : kids[v]) h[v] += h[c];
  }
  return h;
}

std::vector<OrderedTree> OrderedTree::subtrees() const {
  const auto h = hook_lengths();
  std::vector<OrderedTree> out;
  for (auto c : children()[0]) {
    out.push_back(OrderedTree(std::vector<std::uint8_t>(degrees_.begin() + static_cast<long>(c),
                                                        degrees_.begin() + static_cast<long>(c + h[c]))));
  }
  return out;
}

namespace {

std::size_t subtree_end(const std::vector<std::uint8_t>& d, std::size_t start) {
  long need = 1;
  std::size_t i = start;
  while (need > 0) need += static_cast<long>(d[i++]) - 1;
  return i;
}

std::strong_ordering compare_at(const std::vector<std::uint8_t>& a, std::size_t sa, const std::vector<std::uint8_t>& b,
                                std::size_t sb) {
  const std::size_t ea = subtree_end(a, sa);
  const std::size_t eb = subtree_end(b, sb);
  if (auto c = (ea - sa) <=> (eb - sb); c != 0) return c;
  std::size_t ca = sa + 1;
  std::size_t cb = sb + 1;
  for (unsigned i = 0; i < a[sa] && i < b[sb]; ++i) {
    if (auto c = compare_at(a, ca, b, cb); c != 0) return c;
    ca = subtree_end(a, ca);
    cb = subtree_end(b, cb);
  }
  return a[sa] <=> b[sb];
}

}  // namespace

std::strong_ordering operator<=>(const OrderedTree& a, const OrderedTree& b) {
  return compare_at(a.degrees_, 0, b.degrees_, 0);
}

const std::vector<OrderedTree>& enumerate_ordered_trees(std::size_t n) {
  if (n == 0) throw std::invalid_argument("tree size must be >= 1");
  const std::size_t limit = capacity_limit(14);
  if (n > limit) {
    throw CapacityError("ordered-tree enumeration capped at n = " + std::to_string(limit) +
                        " (set INCTREE_CAPACITY to raise)");
  }
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<OrderedTree>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // Child sequences of total size s in lexicographic order: the first child
  // runs over all smaller trees in canonical order (size first), then the rest.
  std::vector<const OrderedTree*> chosen;
  std::vector<OrderedTree> out;
  std::function<void(std::size_t)> sequences = [&](std::size_t s) {
    if (s == 0) {
      out.push_back(OrderedTree::from_children([&] {
        std::vector<OrderedTree> kids;
        for (auto* c : chosen) kids.push_back(*c);
        return kids;
      }()));
      return;
    }
    for (std::size_t a = 1; a <= s; ++a) {
      auto it = cache.find(a);
      for (const auto& c : it->second) {
        chosen.push_back(&c);
        sequences(s - a);
        chosen.pop_back();
      }
    }
  };
  for (std::size_t m = 1; m <= n; ++m) {
    if (cache.count(m)) continue;
    out.clear();
    sequences(m - 1);
    cache.emplace(m, std::move(out));
    out = {};
  }
  return cache.at(n);
}

std::vector<OrderedTree> enumerate_weighted_trees(std::size_t n, const DegreeWeights& w) {
  std::vector<OrderedTree> out;
  for (const auto& t : enumerate_ordered_trees(n)) {
    bool keep = true;
    for (auto d : t.preorder_degrees()) {
      if (w.coefficient(d) == 0) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(t);
  }
  return out;
}

Rational tree_weight(const OrderedTree& t, const DegreeWeights& w) {
  Rational r = 1;
  for (auto d : t.preorder_degrees()) r *= w.coefficient(d);
  return r;
}

unsigned BucketFunction::total() const {
  unsigned s = 0;
  for (auto b : sizes) s += b;
  return s;
}

std::vector<std::size_t> bucket_hook_lengths(const OrderedTree& t, const BucketFunction& b) {
  if (b.sizes.size() != t.size()) throw std::invalid_argument("bucket function does not match tree size");
  const auto kids = t.children();
  std::vector<std::size_t> h(t.size());
  for (std::size_t v = t.size(); v-- > 0;) {
    h[v] = b.sizes[v];
    for (auto c : kids[v]) h[v] += h[c];
  }
  return h;
}

Integer count_k_labellings_formula(const OrderedTree& t, unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  Integer den = 1;
  for (auto h : t.hook_lengths()) den *= falling_factorial(Integer(static_cast<unsigned long>(k * h)), k);
  const Integer num = factorial(k * t.size());
  if (num % den != 0) throw std::logic_error("labelling formula is not integral");
  return num / den;
}

namespace {

// Explicit assignment of label blocks to nodes in preorder; a node may only
// take labels above its parent's largest label.
std::uint64_t count_assignments(const OrderedTree& t, const std::vector<unsigned>& sizes, unsigned labels) {
  const auto parent = t.parents();
  const std::size_t n = t.size();
  std::vector<unsigned> max_label(n, 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t, std::uint64_t)> place = [&](std::size_t v, std::uint64_t used) {
    if (v == n) {
      ++count;
      return;
    }
    const unsigned floor = parent[v] ? max_label[*parent[v]] : 0;
    // Choose sizes[v] unused labels from (floor, labels], in increasing order.
    std::function<void(unsigned, unsigned, std::uint64_t, unsigned)> pick = [&](unsigned next, unsigned left,
                                                                               std::uint64_t mask, unsigned top) {
      if (left == 0) {
        max_label[v] = top;
        place(v + 1, mask);
        return;
      }
      for (unsigned l = next; l <= labels; ++l) {
        const std::uint64_t bit = std::uint64_t{1} << l;
        if (mask & bit) continue;
        pick(l + 1, left - 1, mask | bit, l);
      }
    };
    pick(floor + 1, sizes[v], used, floor);
  };
  place(0, 0);
  return count;
}

}  // namespace

Integer count_k_labellings_bruteforce(const OrderedTree& t, unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  const std::size_t labels = k * t.size();
  const std::size_t limit = std::min<std::size_t>(capacity_limit(12), 63);
  if (labels > limit) {
    throw CapacityError("brute-force k-labelling needs k*n <= " + std::to_string(limit));
  }
  std::vector<unsigned> sizes(t.size(), k);
  return Integer(static_cast<unsigned long>(count_assignments(t, sizes, static_cast<unsigned>(labels))));
}

Integer count_bucket_labellings_formula(const OrderedTree& t, const BucketFunction& b) {
  const auto h = bucket_hook_lengths(t, b);
  Integer den = 1;
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (b.sizes[v] == 0) throw std::invalid_argument("bucket sizes must be >= 1");
    den *= falling_factorial(Integer(static_cast<unsigned long>(h[v])), b.sizes[v]);
  }
  const Integer num = factorial(b.total());
  if (num % den != 0) throw std::logic_error("bucket labelling formula is not integral");
  return num / den;
}

Integer count_bucket_labellings_bruteforce(const OrderedTree& t, const BucketFunction& b) {
  if (b.sizes.size() != t.size()) throw std::invalid_argument("bucket function does not match tree size");
  for (auto s : b.sizes) {
    if (s == 0) throw std::invalid_argument("bucket sizes must be >= 1");
  }
  const unsigned m = b.total();
  const std::size_t limit = std::min<std::size_t>(capacity_limit(10), 63);
  if (m > limit) throw CapacityError("brute-force bucket labelling needs m <= " + std::to_string(limit));
  return Integer(static_cast<unsigned long>(count_assignments(t, b.sizes, m)));
}

Integer count_k_tuple_labellings(const OrderedTree& t, unsigned k) {
  return pow(count_k_labellings_formula(t, 1), k);
}

std::vector<BucketFunction> enumerate_bucket_functions(const OrderedTree& t, unsigned m,
                                                       std::optional<unsigned> max_bucket) {
  std::vector<BucketFunction> out;
  const std::size_t n = t.size();
  if (m < n) return out;
  const unsigned cap = max_bucket.value_or(m);
  if (cap == 0) return out;
  std::vector<unsigned> sizes(n, 0);
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t v, unsigned left) {
    const std::size_t rest = n - v - 1;  // nodes after v
    if (v + 1 == n) {
      if (left >= 1 && left <= cap) {
        sizes[v] = left;
        out.push_back(BucketFunction{sizes});
      }
      return;
    }
    for (unsigned b = 1; b <= cap && b + rest <= left; ++b) {
      if (left - b > rest * cap) continue;
      sizes[v] = b;
      fill(v + 1, left - b);
    }
  };
  fill(0, m);
  return out;
}

}  // namespace inctree
