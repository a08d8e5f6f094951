#include "inctree/bijections.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "inctree/tree_space.hpp"

namespace inctree {

std::size_t LabelledTree::size() const {
  std::size_t s = 1;
  for (const auto& c : children) s += c.size();
  return s;
}

std::size_t LabelledTree::label_count() const {
  std::size_t s = labels.size();
  for (const auto& c : children) s += c.label_count();
  return s;
}

std::string LabelledTree::to_string() const {
  std::string out = "({";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + std::to_string(labels[i]);
  out += '}';
  if (color) out += *color == Color::black ? 'b' : 'w';
  for (const auto& c : children) out += ' ' + c.to_string();
  out += ')';
  return out;
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad tree text at offset " + std::to_string(i) + ": " + what);
  }
  void skip() {
    while (i < s.size() && s[i] == ' ') ++i;
  }
  void expect(char c) {
    skip();
    if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  }
  int number() {
    skip();
    const std::size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (start == i) fail("expected a label");
    return std::stoi(std::string(s.substr(start, i - start)));
  }
  LabelledTree node() {
    LabelledTree t;
    expect('(');
    expect('{');
    t.labels.push_back(number());
    skip();
    while (i < s.size() && s[i] == ',') {
      ++i;
      t.labels.push_back(number());
      skip();
    }
    expect('}');
    if (i < s.size() && (s[i] == 'b' || s[i] == 'w')) t.color = s[i++] == 'b' ? Color::black : Color::white;
    skip();
    while (i < s.size() && s[i] == '(') {
      t.children.push_back(node());
      skip();
    }
    expect(')');
    return t;
  }
};

void collect_labels(const LabelledTree& t, std::vector<int>& out) {
  out.insert(out.end(), t.labels.begin(), t.labels.end());
  for (const auto& c : t.children) collect_labels(c, out);
}

void shift_labels(LabelledTree& t, int delta) {
  for (auto& l : t.labels) l += delta;
  for (auto& c : t.children) shift_labels(c, delta);
}

bool by_min_label(const LabelledTree& a, const LabelledTree& b) { return a.labels.front() < b.labels.front(); }

std::string set_text(const std::vector<int>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + std::to_string(labels[i]);
  return out + "}";
}

void validate_node(const LabelledTree& t, ObjectScheme scheme) {
  if (t.labels.empty()) throw std::invalid_argument("node with an empty label set");
  if (!std::is_sorted(t.labels.begin(), t.labels.end()) ||
      std::adjacent_find(t.labels.begin(), t.labels.end()) != t.labels.end()) {
    throw std::invalid_argument("label set " + set_text(t.labels) + " is not strictly ascending");
  }
  const bool ordered = scheme == ObjectScheme::free_ordered || scheme == ObjectScheme::colored_unary_ordered;
  const bool colored =
      scheme == ObjectScheme::colored_unary_ordered || scheme == ObjectScheme::colored_branching_unordered;
  if (scheme == ObjectScheme::unibi_unordered && t.labels.size() > 2) {
    throw std::invalid_argument("node " + set_text(t.labels) + " carries more than two labels");
  }
  if (colored && t.labels.size() != 1) {
    throw std::invalid_argument("coloured node " + set_text(t.labels) + " must carry exactly one label");
  }
  if (colored && !t.color) throw std::invalid_argument("node " + set_text(t.labels) + " has no colour");
  if (!colored && t.color) throw std::invalid_argument("node " + set_text(t.labels) + " must not be coloured");
  if (colored && *t.color == Color::black) {
    if (scheme == ObjectScheme::colored_unary_ordered && t.children.size() != 1) {
      throw std::invalid_argument("black node " + set_text(t.labels) + " has out-degree " +
                                  std::to_string(t.children.size()) + ", expected 1");
    }
    if (scheme == ObjectScheme::colored_branching_unordered && t.children.size() < 2) {
      throw std::invalid_argument("black node " + set_text(t.labels) + " has out-degree " +
                                  std::to_string(t.children.size()) + ", expected >= 2");
    }
  }
  if (!ordered && !std::is_sorted(t.children.begin(), t.children.end(), by_min_label)) {
    throw std::invalid_argument("children of " + set_text(t.labels) + " are not sorted by smallest label");
  }
  for (const auto& c : t.children) {
    if (c.labels.empty() || c.labels.front() <= t.labels.back()) {
      throw std::invalid_argument("labelling not increasing below " + set_text(t.labels));
    }
    validate_node(c, scheme);
  }
}

}  // namespace

LabelledTree LabelledTree::parse(std::string_view text) {
  Parser p{text};
  auto t = p.node();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return t;
}

std::string to_string(ObjectScheme s) {
  switch (s) {
    case ObjectScheme::free_ordered:
      return "free";
    case ObjectScheme::unibi_unordered:
      return "unibi";
    case ObjectScheme::colored_unary_ordered:
      return "colored-unary";
    case ObjectScheme::colored_branching_unordered:
      return "colored-branching";
  }
  return "?";
}

ObjectScheme parse_object_scheme(std::string_view text) {
  for (auto s : {ObjectScheme::free_ordered, ObjectScheme::unibi_unordered, ObjectScheme::colored_unary_ordered,
                 ObjectScheme::colored_branching_unordered}) {
    if (to_string(s) == text) return s;
  }
  throw std::invalid_argument("unknown object scheme: " + std::string(text));
}

void validate(const LabelledTree& t, ObjectScheme scheme) {
  validate_node(t, scheme);
  std::vector<int> all;
  collect_labels(t, all);
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<int>(i + 1)) {
      throw std::invalid_argument("label set is not {1.." + std::to_string(all.size()) + "}");
    }
  }
}

// ---- chain bijection ----

namespace {

LabelledTree chain_of(const LabelledTree& t) {
  LabelledTree white{{t.labels.back()}, Color::white, {}};
  for (const auto& c : t.children) white.children.push_back(chain_of(c));
  LabelledTree cur = std::move(white);
  for (std::size_t i = t.labels.size() - 1; i-- > 0;) {
    LabelledTree black{{t.labels[i]}, Color::black, {}};
    black.children.push_back(std::move(cur));
    cur = std::move(black);
  }
  return cur;
}

LabelledTree unchain(const LabelledTree& c) {
  LabelledTree out;
  const LabelledTree* cur = &c;
  while (*cur->color == Color::black) {
    out.labels.push_back(cur->labels.front());
    cur = &cur->children.front();
  }
  out.labels.push_back(cur->labels.front());
  for (const auto& child : cur->children) out.children.push_back(unchain(child));
  return out;
}

}  // namespace

LabelledTree multi_to_colored(const LabelledTree& t) {
  validate(t, ObjectScheme::free_ordered);
  return chain_of(t);
}

LabelledTree colored_to_multi(const LabelledTree& c) {
  validate(c, ObjectScheme::colored_unary_ordered);
  return unchain(c);
}

// ---- split bijection ----

namespace {

void sort_children(LabelledTree& t) {
  for (auto& c : t.children) sort_children(c);
  std::sort(t.children.begin(), t.children.end(), by_min_label);
}

void split(LabelledTree& v) {
  auto first_double = std::find_if(v.children.begin(), v.children.end(),
                                   [](const LabelledTree& c) { return c.labels.size() == 2; });
  if (first_double == v.children.end()) {
    v.color = Color::white;
  } else {
    const auto p = static_cast<std::size_t>(first_double - v.children.begin());
    LabelledTree vp = std::move(v.children[p]);
    LabelledTree v1{{vp.labels[0]}, std::nullopt, {}};
    LabelledTree v2{{vp.labels[1]}, std::nullopt, std::move(vp.children)};
    for (std::size_t i = p + 1; i < v.children.size(); ++i) v1.children.push_back(std::move(v.children[i]));
    v.children.resize(p);
    v.children.push_back(std::move(v1));
    v.children.push_back(std::move(v2));
    v.color = Color::black;
  }
  for (auto& c : v.children) split(c);
}

void merge(LabelledTree& v) {
  for (auto& c : v.children) merge(c);
  const bool black = *v.color == Color::black;
  v.color.reset();
  if (!black) return;
  const std::size_t n = v.children.size();
  LabelledTree a = std::move(v.children[n - 2]);
  LabelledTree b = std::move(v.children[n - 1]);
  v.children.resize(n - 2);
  for (auto& c : a.children) v.children.push_back(std::move(c));
  v.children.push_back(LabelledTree{{a.labels.front(), b.labels.front()}, std::nullopt, std::move(b.children)});
  std::sort(v.children.begin(), v.children.end(), by_min_label);
}

}  // namespace

QImage unibi_to_q(const LabelledTree& t) {
  LabelledTree work = t;
  sort_children(work);
  validate(work, ObjectScheme::unibi_unordered);
  QImage q;
  if (work.labels.size() == 2) {
    // the root of a uni-bi tree with two labels is {1,2}
    work.labels = {work.labels[1]};
    shift_labels(work, -1);
    q.dropped_root_label = true;
  }
  split(work);
  q.tree = std::move(work);
  return q;
}

LabelledTree q_to_unibi(const QImage& q) {
  LabelledTree work = q.tree;
  sort_children(work);
  validate(work, ObjectScheme::colored_branching_unordered);
  merge(work);
  if (q.dropped_root_label) {
    shift_labels(work, 1);
    work.labels.insert(work.labels.begin(), 1);
  }
  return work;
}

// ---- enumeration ----

namespace {

using Labels = std::vector<int>;

void set_partitions(const Labels& r, std::size_t i, std::vector<Labels>& blocks,
                    const std::function<void(const std::vector<Labels>&)>& emit) {
  if (i == r.size()) {
    emit(blocks);
    return;
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(r[i]);
    set_partitions(r, i + 1, blocks, emit);
    blocks[b].pop_back();
  }
  blocks.push_back({r[i]});
  set_partitions(r, i + 1, blocks, emit);
  blocks.pop_back();
}

std::vector<LabelledTree> generate(ObjectScheme scheme, const Labels& labels);

// Every choice of one tree per block, in block order.
void forests(ObjectScheme scheme, const std::vector<Labels>& blocks, std::size_t i, std::vector<LabelledTree>& cur,
             std::vector<std::vector<LabelledTree>>& out) {
  if (i == blocks.size()) {
    out.push_back(cur);
    return;
  }
  for (auto& t : generate(scheme, blocks[i])) {
    cur.push_back(std::move(t));
    forests(scheme, blocks, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<LabelledTree> generate(ObjectScheme scheme, const Labels& labels) {
  const bool ordered = scheme == ObjectScheme::free_ordered || scheme == ObjectScheme::colored_unary_ordered;
  std::size_t max_root = 1;
  if (scheme == ObjectScheme::free_ordered) max_root = labels.size();
  if (scheme == ObjectScheme::unibi_unordered) max_root = std::min<std::size_t>(2, labels.size());
  std::vector<LabelledTree> out;
  for (std::size_t j = 1; j <= max_root; ++j) {
    const Labels root(labels.begin(), labels.begin() + static_cast<long>(j));
    const Labels rest(labels.begin() + static_cast<long>(j), labels.end());
    std::vector<std::vector<LabelledTree>> all_forests;
    std::vector<Labels> blocks;
    set_partitions(rest, 0, blocks, [&](const std::vector<Labels>& part) {
      std::vector<std::size_t> order(part.size());
      std::iota(order.begin(), order.end(), 0);
      do {
        std::vector<Labels> arranged;
        for (auto k : order) arranged.push_back(part[k]);
        std::vector<LabelledTree> cur;
        forests(scheme, arranged, 0, cur, all_forests);
      } while (ordered && std::next_permutation(order.begin(), order.end()));
    });
    for (auto& f : all_forests) {
      LabelledTree t{root, std::nullopt, std::move(f)};
      if (scheme == ObjectScheme::colored_unary_ordered || scheme == ObjectScheme::colored_branching_unordered) {
        t.color = Color::white;
        out.push_back(t);
        const bool may_be_black = scheme == ObjectScheme::colored_unary_ordered ? t.children.size() == 1
                                                                                 : t.children.size() >= 2;
        if (may_be_black) {
          t.color = Color::black;
          out.push_back(std::move(t));
        }
      } else {
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<LabelledTree> enumerate_objects(ObjectScheme scheme, std::size_t m) {
  const std::size_t limit = capacity_limit(7);
  if (m > limit) {
    throw CapacityError("object enumeration capped at m = " + std::to_string(limit) +
                        " (set INCTREE_CAPACITY to raise)");
  }
  if (m == 0) return {};
  Labels labels(m);
  std::iota(labels.begin(), labels.end(), 1);
  return generate(scheme, labels);
}

// ---- verification ----

BijectionReport verify_chain_bijection(std::size_t m) {
  BijectionReport r;
  r.name = "chain";
  r.m = m;
  const auto domain = enumerate_objects(ObjectScheme::free_ordered, m);
  const auto codomain = enumerate_objects(ObjectScheme::colored_unary_ordered, m);
  r.domain_count = domain.size();
  r.codomain_count = codomain.size();
  std::set<std::string> image;
  for (const auto& t : domain) {
    LabelledTree c;
    try {
      c = multi_to_colored(t);
      validate(c, ObjectScheme::colored_unary_ordered);
    } catch (const std::exception& e) {
      r.image_valid = false;
      if (r.first_failure.empty()) r.first_failure = t.to_string() + ": " + e.what();
      continue;
    }
    if (!image.insert(c.to_string()).second) {
      r.injective = false;
      if (r.first_failure.empty()) r.first_failure = "repeated image " + c.to_string();
    }
    if (!(colored_to_multi(c) == t)) {
      r.round_trip = false;
      if (r.first_failure.empty()) r.first_failure = "round trip fails for " + t.to_string();
    }
  }
  std::set<std::string> target;
  for (const auto& c : codomain) target.insert(c.to_string());
  r.image_equals_codomain = image == target && target.size() == codomain.size();
  if (!r.image_equals_codomain && r.first_failure.empty()) r.first_failure = "image differs from codomain";
  return r;
}

BijectionReport verify_split_bijection(std::size_t m) {
  BijectionReport r;
  r.name = "split";
  r.m = m;
  const auto domain = enumerate_objects(ObjectScheme::unibi_unordered, m);
  std::set<std::string> target;
  for (const auto& c : enumerate_objects(ObjectScheme::colored_branching_unordered, m)) target.insert("m " + c.to_string());
  if (m >= 2) {
    for (const auto& c : enumerate_objects(ObjectScheme::colored_branching_unordered, m - 1)) {
      target.insert("m-1 " + c.to_string());
    }
  }
  r.domain_count = domain.size();
  r.codomain_count = target.size();
  std::set<std::string> image;
  for (const auto& t : domain) {
    QImage q;
    try {
      q = unibi_to_q(t);
      validate(q.tree, ObjectScheme::colored_branching_unordered);
    } catch (const std::exception& e) {
      r.image_valid = false;
      if (r.first_failure.empty()) r.first_failure = t.to_string() + ": " + e.what();
      continue;
    }
    const std::string key = (q.dropped_root_label ? "m-1 " : "m ") + q.tree.to_string();
    if (!image.insert(key).second) {
      r.injective = false;
      if (r.first_failure.empty()) r.first_failure = "repeated image " + key;
    }
    if (!(q_to_unibi(q) == t)) {
      r.round_trip = false;
      if (r.first_failure.empty()) r.first_failure = "round trip fails for " + t.to_string();
    }
  }
  r.image_equals_codomain = image == target;
  if (!r.image_equals_codomain && r.first_failure.empty()) r.first_failure = "image differs from codomain";
  return r;
}

}  // namespace inctree
