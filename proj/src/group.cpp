#include "group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace gs {
namespace {

constexpr int kTableCap = 5040;  // dense Cayley tables only; 7! is the largest we store

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Lexicographic rank of a one-line word among all permutations of 0..n-1.
int lex_rank(const std::vector<int>& img) {
  int n = static_cast<int>(img.size());
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (img[j] < img[i]) ++smaller;
    r += smaller * factorial(n - 1 - i);
  }
  return static_cast<int>(r);
}

std::vector<int> lex_unrank(int rank, int n) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> img(n);
  std::uint64_t r = rank;
  for (int i = 0; i < n; ++i) {
    std::uint64_t f = factorial(n - 1 - i);
    int d = static_cast<int>(r / f);
    r %= f;
    img[i] = pool[d];
    pool.erase(pool.begin() + d);
  }
  return img;
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(text, &pos);
  } catch (const std::exception&) {
    fail(Errc::Parse, "expected an integer in " + what + ": '" + text + "'");
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) fail(Errc::Parse, "trailing characters in " + what + ": '" + text + "'");
  return v;
}

}  // namespace

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  int n = static_cast<int>(image_.size());
  std::vector<char> seen(n, 0);
  for (int v : image_) {
    if (v < 0 || v >= n || seen[v]) fail(Errc::InvalidArg, "permutation image is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_one_line(const std::string& text, int n) {
  std::istringstream in(text);
  std::vector<int> img;
  int v = 0;
  while (in >> v) img.push_back(v - 1);
  if (!in.eof()) fail(Errc::Parse, "bad one-line permutation: '" + text + "'");
  if (static_cast<int>(img.size()) != n)
    fail(Errc::Parse, "one-line permutation '" + text + "' does not have " + std::to_string(n) + " entries");
  for (int& x : img)
    if (x < 0 || x >= n) fail(Errc::Parse, "one-line permutation entry out of range in '" + text + "'");
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(const std::string& text, int n) {
  // Product of cycles, applied right to left; points are 1-based and may be
  // separated by spaces or commas. Points absent from a cycle are fixed.
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '(') fail(Errc::Parse, "expected '(' in cycle notation: '" + text + "'");
    std::size_t close = text.find(')', i);
    if (close == std::string::npos) fail(Errc::Parse, "unbalanced '(' in cycle notation: '" + text + "'");
    std::string body = text.substr(i + 1, close - i - 1);
    for (char& ch : body)
      if (ch == ',') ch = ' ';
    std::istringstream in(body);
    std::vector<int> cyc;
    int v = 0;
    while (in >> v) {
      if (v < 1 || v > n)
        fail(Errc::Parse, "cycle point " + std::to_string(v) + " outside 1.." + std::to_string(n));
      cyc.push_back(v - 1);
    }
    if (!in.eof()) fail(Errc::Parse, "bad cycle body: '(" + body + ")'");
    std::vector<char> seen(n, 0);
    for (int p : cyc) {
      if (seen[p]) fail(Errc::Parse, "repeated point inside one cycle: '(" + body + ")'");
      seen[p] = 1;
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    i = close + 1;
  }
  Permutation result = Permutation::identity(n);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    const std::vector<int>& cyc = *it;
    for (std::size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    result = result.compose(Permutation(std::move(img)));
  }
  return result;
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (degree() != rhs.degree()) fail(Errc::InvalidArg, "composing permutations of different degree");
  std::vector<int> img(image_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = image_[rhs.image_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(image_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[image_[i]] = static_cast<int>(i);
  return Permutation(std::move(img));
}

std::string Permutation::to_one_line() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) out << ' ';
    out << image_[i] + 1;
  }
  return out.str();
}

std::shared_ptr<const FiniteGroup> FiniteGroup::cyclic(int n) {
  if (n < 1) fail(Errc::InvalidArg, "cyclic group order must be positive");
  if (n > kTableCap) fail(Errc::Unsupported, "cyclic group order exceeds the dense table cap");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->family_ = GroupFamily::Cyclic;
  g->parameter_ = n;
  g->order_ = n;
  g->name_ = "cyclic:" + std::to_string(n);
  g->mult_.resize(static_cast<std::size_t>(n) * n);
  g->inv_.resize(n);
  g->labels_.resize(n);
  for (int a = 0; a < n; ++a) {
    g->inv_[a] = (n - a) % n;
    g->labels_[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) g->mult_[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::symmetric(int n) {
  if (n < 1 || factorial(n) > kTableCap)
    fail(Errc::Unsupported,
         "symmetric group degree " + std::to_string(n) + " outside supported range 1..7 (table size guard)");
  int order = static_cast<int>(factorial(n));
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->family_ = GroupFamily::Symmetric;
  g->parameter_ = n;
  g->order_ = order;
  g->name_ = "sym:" + std::to_string(n);

  std::vector<std::vector<int>> words(order);
  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  for (int i = 0; i < order; ++i) {
    words[i] = cur;
    std::next_permutation(cur.begin(), cur.end());
  }

  g->mult_.resize(static_cast<std::size_t>(order) * order);
  g->inv_.resize(order);
  g->labels_.resize(order);
  std::vector<int> tmp(n);
  for (int a = 0; a < order; ++a) {
    const std::vector<int>& pa = words[a];
    for (int b = 0; b < order; ++b) {
      const std::vector<int>& pb = words[b];
      for (int i = 0; i < n; ++i) tmp[i] = pa[pb[i]];
      g->mult_[static_cast<std::size_t>(a) * order + b] = lex_rank(tmp);
    }
    for (int i = 0; i < n; ++i) tmp[pa[i]] = i;
    g->inv_[a] = lex_rank(tmp);
    std::ostringstream out;
    for (int i = 0; i < n; ++i) {
      if (i) out << ' ';
      out << pa[i] + 1;
    }
    g->labels_[a] = out.str();
  }
  return g;
}

Permutation FiniteGroup::permutation(Element a) const {
  check(a);
  if (family_ != GroupFamily::Symmetric)
    fail(Errc::InvalidArg, "permutation view is only defined for symmetric groups");
  return Permutation(lex_unrank(a, parameter_));
}

Element FiniteGroup::element_of(const Permutation& p) const {
  if (family_ != GroupFamily::Symmetric)
    fail(Errc::InvalidArg, "permutation view is only defined for symmetric groups");
  if (p.degree() != parameter_)
    fail(Errc::InvalidArg, "permutation degree does not match " + name_);
  return lex_rank(p.image());
}

bool Subgroup::contains(Element x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

int Subgroup::member_index(Element x) const {
  auto it = std::lower_bound(members.begin(), members.end(), x);
  if (it == members.end() || *it != x) return -1;
  return static_cast<int>(it - members.begin());
}

Subgroup subgroup_from_generators(const GroupPtr& g, const std::vector<Element>& gens) {
  std::vector<char> in(g->order(), 0);
  std::vector<Element> members{0};
  in[0] = 1;
  std::vector<Element> queue{0};
  for (Element x : gens) {
    if (x < 0 || x >= g->order()) fail(Errc::InvalidArg, "generator index out of range");
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      queue.push_back(x);
    }
  }
  while (!queue.empty()) {
    Element x = queue.back();
    queue.pop_back();
    std::vector<Element> snapshot = members;
    for (Element m : snapshot) {
      for (Element p : {g->compose(x, m), g->compose(m, x)}) {
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
          queue.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{g, std::move(members), "<generated>"};
}

Subgroup canonical_symmetric_subgroup(const GroupPtr& g, int k) {
  if (g->family() != GroupFamily::Symmetric)
    fail(Errc::InvalidArg, "canonical sym:k subgroup requires a symmetric parent group");
  int n = g->parameter();
  if (k < 1 || k > n) fail(Errc::InvalidArg, "subgroup degree must satisfy 1 <= k <= " + std::to_string(n));
  std::vector<Element> members;
  for (Element x = 0; x < g->order(); ++x) {
    Permutation p = g->permutation(x);
    bool fixes_tail = true;
    for (int i = k; i < n && fixes_tail; ++i) fixes_tail = (p(i) == i);
    if (fixes_tail) members.push_back(x);
  }
  if (members.size() != factorial(k)) fail(Errc::Internal, "canonical subgroup has wrong order");
  return Subgroup{g, std::move(members), "sym:" + std::to_string(k)};
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {0}, "<trivial>"}; }

Subgroup whole_group(const GroupPtr& g) {
  std::vector<Element> members(g->order());
  std::iota(members.begin(), members.end(), 0);
  return Subgroup{g, std::move(members), "<whole>"};
}

namespace {

void check_subgroup(const GroupPtr& g, const Subgroup& h) {
  if (h.parent.get() != g.get()) fail(Errc::InvalidArg, "subgroup belongs to a different group");
  if (h.members.empty() || h.members[0] != 0) fail(Errc::InvalidArg, "subgroup must contain the identity");
  for (Element a : h.members)
    for (Element b : h.members)
      if (!h.contains(g->compose(a, b))) fail(Errc::InvalidArg, "subgroup member list is not closed");
}

}  // namespace

CosetTransversal transversal(const GroupPtr& g, const Subgroup& h, CosetKind kind) {
  check_subgroup(g, h);
  CosetTransversal t;
  t.kind = kind;
  t.subgroup = h;
  t.coset_of.assign(g->order(), -1);
  for (Element x = 0; x < g->order(); ++x) {
    if (t.coset_of[x] >= 0) continue;
    int idx = t.count();
    t.reps.push_back(x);
    switch (kind) {
      case CosetKind::Left:
        for (Element m : h.members) t.coset_of[g->compose(x, m)] = idx;
        break;
      case CosetKind::Right:
        for (Element m : h.members) t.coset_of[g->compose(m, x)] = idx;
        break;
      case CosetKind::Double:
        for (Element a : h.members)
          for (Element b : h.members) t.coset_of[g->compose(g->compose(a, x), b)] = idx;
        break;
    }
  }
  if (kind != CosetKind::Double && t.count() * h.order() != g->order())
    fail(Errc::Internal, "coset transversal does not partition the group");
  return t;
}

GroupPtr parse_group_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    fail(Errc::Parse, "group spec must look like 'sym:<n>' or 'cyclic:<n>', got '" + spec + "'");
  std::string family = spec.substr(0, colon);
  int n = parse_int(spec.substr(colon + 1), "group spec");
  if (family == "sym") return FiniteGroup::symmetric(n);
  if (family == "cyclic") return FiniteGroup::cyclic(n);
  fail(Errc::Parse, "unknown group family '" + family + "'");
}

Subgroup parse_subgroup_spec(const GroupPtr& g, const std::string& spec) {
  std::string trimmed = spec;
  auto issp = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
  while (!trimmed.empty() && issp(trimmed.front())) trimmed.erase(trimmed.begin());
  while (!trimmed.empty() && issp(trimmed.back())) trimmed.pop_back();
  if (trimmed.empty()) return trivial_subgroup(g);
  if (trimmed.rfind("sym:", 0) == 0) {
    int k = parse_int(trimmed.substr(4), "subgroup spec");
    return canonical_symmetric_subgroup(g, k);
  }
  // Generator list: cycle-notation words for symmetric groups, residues for
  // cyclic ones. Separators are ';' or top-level ','.
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : trimmed) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ';' || c == ',') && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  std::vector<Element> gens;
  for (const std::string& part : parts) {
    std::string word = part;
    while (!word.empty() && issp(word.front())) word.erase(word.begin());
    while (!word.empty() && issp(word.back())) word.pop_back();
    if (word.empty()) continue;
    if (g->family() == GroupFamily::Symmetric)
      gens.push_back(g->element_of(Permutation::from_cycles(word, g->parameter())));
    else
      gens.push_back(parse_int(word, "cyclic subgroup generator"));
  }
  for (Element x : gens)
    if (x < 0 || x >= g->order()) fail(Errc::Parse, "subgroup generator out of range");
  Subgroup h = subgroup_from_generators(g, gens);
  h.spec = trimmed;
  return h;
}

}  // namespace gs
