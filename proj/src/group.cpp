#include "centerpoint/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "centerpoint/errors.hpp"

namespace centerpoint {

namespace {

constexpr std::size_t kMaxBuiltinOrder = 2520;

void validate_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[static_cast<std::size_t>(x)])
      throw InvalidPermutation("not a permutation of 0.." + std::to_string(static_cast<long>(p.size()) - 1));
    seen[static_cast<std::size_t>(x)] = true;
  }
}

std::vector<int> cycle_type_of(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

int moved_points(const Permutation& p) {
  int n = 0;
  for (std::size_t i = 0; i < p.size(); ++i) n += p[i] != static_cast<int>(i);
  return n;
}

std::vector<Permutation> ordered_symmetric(int d, bool even_only) {
  std::vector<Permutation> all;
  Permutation p = identity_permutation(d);
  do {
    if (!even_only || permutation_sign(p) == 1) all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  struct Keyed {
    int support;
    std::vector<int> type;
    Permutation perm;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(all.size());
  for (auto& q : all) keyed.push_back({moved_points(q), cycle_type_of(q), std::move(q)});
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.support != b.support) return a.support < b.support;
    if (a.type != b.type) return a.type > b.type;
    return a.perm < b.perm;
  });
  std::vector<Permutation> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.perm));
  return out;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) {
    f *= static_cast<std::size_t>(i);
    if (f > kMaxBuiltinOrder * 2) return f;
  }
  return f;
}

GroupTable quaternion8() {
  // Units 1, i, j, k as 0..3; index = 2 * unit + (negative ? 1 : 0).
  static const int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_prod[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<int> mul(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      int sign = sign_prod[ua][ub] * ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1);
      mul[static_cast<std::size_t>(a * 8 + b)] = 2 * unit_prod[ua][ub] + (sign < 0 ? 1 : 0);
    }
  return GroupTable::from_table(std::move(mul), 8, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, "Q8");
}

GroupTable cyclic(int n) {
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "1" : a == 1 ? "c" : "c^" + std::to_string(a));
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  }
  return GroupTable::from_table(std::move(mul), static_cast<std::size_t>(n), std::move(labels),
                                "C" + std::to_string(n));
}

GroupTable dihedral(int n) {
  // Index k < n is r^k, index n + k is s r^k.
  const int order = 2 * n;
  auto mod = [n](int x) { return ((x % n) + n) % n; };
  std::vector<int> mul(static_cast<std::size_t>(order) * order);
  std::vector<std::string> labels;
  for (int a = 0; a < order; ++a) {
    const bool sa = a >= n;
    const int ka = a % n;
    const std::string rk = ka == 0 ? "" : ka == 1 ? "r" : "r^" + std::to_string(ka);
    labels.push_back(sa ? "s" + rk : (ka == 0 ? "1" : rk));
    for (int b = 0; b < order; ++b) {
      const bool sb = b >= n;
      const int kb = b % n;
      // r^ka s = s r^-ka
      const int k = sb ? mod(-ka + kb) : mod(ka + kb);
      const bool s = sa != sb;
      mul[static_cast<std::size_t>(a * order + b)] = (s ? n : 0) + k;
    }
  }
  return GroupTable::from_table(std::move(mul), static_cast<std::size_t>(order), std::move(labels),
                                "D" + std::to_string(n));
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InputError("expected an integer, got '" + std::string(s) + "'");
  return v;
}

GroupTable single_factor(std::string_view name) {
  if (name == "Q8") return builtin_group(GroupFamily::Quaternion8);
  if (name.size() < 2) throw InputError("unknown group '" + std::string(name) + "'");
  const int n = parse_int(name.substr(1));
  switch (name[0]) {
    case 'S': return builtin_group(GroupFamily::Symmetric, n);
    case 'A': return builtin_group(GroupFamily::Alternating, n);
    case 'C': return builtin_group(GroupFamily::Cyclic, n);
    case 'D': return builtin_group(GroupFamily::Dihedral, n);
    default: throw InputError("unknown group '" + std::string(name) + "'");
  }
}

}  // namespace

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

Permutation invert(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::string_view text, int n) {
  Permutation p = identity_permutation(n);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw InputError("malformed cycle notation '" + std::string(text) + "'");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw InputError("unclosed cycle in '" + std::string(text) + "'");
    std::vector<int> cyc;
    std::istringstream in(std::string(text.substr(pos + 1, close - pos - 1)));
    int v = 0;
    while (in >> v) {
      if (v < 1 || v > n) throw InvalidPermutation("point " + std::to_string(v) + " out of range");
      cyc.push_back(v - 1);
    }
    Permutation c = identity_permutation(n);
    for (std::size_t i = 0; i < cyc.size(); ++i) c[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
    validate_permutation(c);
    p = compose(p, c);
    pos = close + 1;
  }
  return p;
}

int permutation_sign(const Permutation& p) {
  int sign = 1;
  for (int len : cycle_type_of(p))
    if (len % 2 == 0) sign = -sign;
  return sign;
}

GroupTable GroupTable::from_permutations(std::vector<Permutation> perms, std::string name) {
  if (perms.empty()) throw InputError("empty element list");
  const std::size_t n = perms.size();
  const int degree = static_cast<int>(perms.front().size());
  if (perms.front() != identity_permutation(degree)) throw InputError("first element must be the identity");
  GroupTable g;
  g.order_ = n;
  g.degree_ = degree;
  g.name_ = std::move(name);
  for (std::size_t i = 0; i < n; ++i) {
    validate_permutation(perms[i]);
    if (static_cast<int>(perms[i].size()) != degree) throw InvalidPermutation("permutations of different degrees");
    if (!g.perm_index_.emplace(perms[i], static_cast<int>(i)).second) throw InputError("repeated element");
  }
  g.mul_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = g.perm_index_.find(compose(perms[a], perms[b]));
      if (it == g.perm_index_.end()) throw InputError("element list is not closed under composition");
      g.mul_[a * n + b] = it->second;
    }
  for (const auto& p : perms) g.labels_.push_back(cycle_notation(p));
  g.perms_ = std::move(perms);
  g.finish();
  return g;
}

GroupTable GroupTable::from_table(std::vector<int> flat_mul, std::size_t order, std::vector<std::string> labels,
                                  std::string name) {
  if (order == 0 || flat_mul.size() != order * order) throw InputError("table size does not match order");
  GroupTable g;
  g.order_ = order;
  g.mul_ = std::move(flat_mul);
  g.name_ = std::move(name);
  g.labels_ = std::move(labels);
  if (g.labels_.size() != order) {
    g.labels_.clear();
    for (std::size_t i = 0; i < order; ++i) g.labels_.push_back("g" + std::to_string(i));
  }
  for (int x : g.mul_)
    if (x < 0 || static_cast<std::size_t>(x) >= order) throw InputError("table entry out of range");
  for (std::size_t a = 0; a < order; ++a)
    if (g.mul(0, static_cast<int>(a)) != static_cast<int>(a) || g.mul(static_cast<int>(a), 0) != static_cast<int>(a))
      throw InputError("element 0 is not the identity");
  g.finish();
  if (order <= 256) {
    auto err = check_group_axioms(g);
    if (!err.empty()) throw InputError(err);
  }
  return g;
}

void GroupTable::finish() {
  inv_.assign(order_, -1);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      if (mul_[a * order_ + b] == 0) {
        inv_[a] = static_cast<int>(b);
        break;
      }
  for (int x : inv_)
    if (x < 0) throw InputError("element without inverse");
  elem_order_.assign(order_, 0);
  exponent_ = 1;
  for (std::size_t a = 0; a < order_; ++a) {
    int k = 1;
    for (int x = static_cast<int>(a); x != 0; x = mul(x, static_cast<int>(a))) {
      ++k;
      if (static_cast<std::size_t>(k) > order_ + 1) throw InputError("element of unbounded order");
    }
    elem_order_[a] = k;
    exponent_ = std::lcm(exponent_, k);
  }
}

int GroupTable::power(int g, long long k) const {
  const long long o = element_order(g);
  k = ((k % o) + o) % o;
  int r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, g);
  return r;
}

int GroupTable::index_of(const Permutation& p) const {
  auto it = perm_index_.find(p);
  return it == perm_index_.end() ? -1 : it->second;
}

int ClassPartition::power_class(int c, long long k) const {
  const long long e = static_cast<long long>(power_table.size()) - 1;
  k = ((k % e) + e) % e;
  return power_table[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
}

ClassPartition conjugacy_classes(const GroupTable& g) {
  ClassPartition cp;
  const int n = static_cast<int>(g.order());
  cp.class_of.assign(g.order(), -1);
  for (int x = 0; x < n; ++x) {
    if (cp.class_of[static_cast<std::size_t>(x)] >= 0) continue;
    const int c = static_cast<int>(cp.classes.size());
    std::vector<int> members;
    for (int h = 0; h < n; ++h) {
      const int y = g.mul(g.inv(h), g.mul(x, h));
      if (cp.class_of[static_cast<std::size_t>(y)] < 0) {
        cp.class_of[static_cast<std::size_t>(y)] = c;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    cp.sizes.push_back(members.size());
    cp.class_element_order.push_back(g.element_order(x));
    cp.classes.push_back(std::move(members));
  }
  for (std::size_t c = 0; c < cp.count(); ++c)
    cp.inverse_class.push_back(cp.class_of[static_cast<std::size_t>(g.inv(cp.classes[c].front()))]);
  cp.power_table.assign(static_cast<std::size_t>(g.exponent()) + 1, std::vector<int>(cp.count()));
  for (std::size_t c = 0; c < cp.count(); ++c) {
    const int rep = cp.classes[c].front();
    int x = 0;
    for (int k = 0; k <= g.exponent(); ++k) {
      cp.power_table[static_cast<std::size_t>(k)][c] = cp.class_of[static_cast<std::size_t>(x)];
      x = g.mul(x, rep);
    }
  }
  return cp;
}

GroupTable build_group_from_generators(const std::vector<Permutation>& generators, std::size_t limit,
                                       int degree) {
  if (limit < 1) throw UnsupportedParameter("limit must be at least 1");
  if (!generators.empty()) degree = static_cast<int>(generators.front().size());
  if (degree < 0) throw InvalidPermutation("negative degree");
  for (const auto& s : generators) {
    if (static_cast<int>(s.size()) != degree) throw InvalidPermutation("generators act on different point sets");
    validate_permutation(s);
  }
  std::vector<Permutation> elements{identity_permutation(degree)};
  std::map<Permutation, int> seen{{elements.front(), 0}};
  std::vector<Permutation> level = elements;
  while (!level.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : level)
      for (const auto& s : generators) {
        auto h = compose(g, s);
        if (seen.emplace(h, -1).second) next.push_back(std::move(h));
      }
    std::sort(next.begin(), next.end());
    for (auto& h : next) {
      seen[h] = static_cast<int>(elements.size());
      elements.push_back(h);
      if (elements.size() > limit)
        throw ClosureExceedsLimit("generated group has more than " + std::to_string(limit) + " elements");
    }
    level = std::move(next);
  }
  return GroupTable::from_permutations(std::move(elements), "generated");
}

GroupTable builtin_group(GroupFamily family, int parameter) {
  switch (family) {
    case GroupFamily::Symmetric:
    case GroupFamily::Alternating: {
      const bool alt = family == GroupFamily::Alternating;
      if (parameter < 1) throw UnsupportedParameter("degree must be at least 1");
      const std::size_t order = factorial(parameter) / (alt && parameter >= 2 ? 2 : 1);
      if (order > kMaxBuiltinOrder) throw UnsupportedParameter("group order exceeds " + std::to_string(kMaxBuiltinOrder));
      auto g = GroupTable::from_permutations(ordered_symmetric(parameter, alt), (alt ? "A" : "S") + std::to_string(parameter));
      return g;
    }
    case GroupFamily::Cyclic:
      if (parameter < 1 || static_cast<std::size_t>(parameter) > kMaxBuiltinOrder)
        throw UnsupportedParameter("cyclic order out of range");
      return cyclic(parameter);
    case GroupFamily::Dihedral:
      if (parameter < 1 || static_cast<std::size_t>(2 * parameter) > kMaxBuiltinOrder)
        throw UnsupportedParameter("dihedral parameter out of range");
      return dihedral(parameter);
    case GroupFamily::Quaternion8:
      return quaternion8();
    case GroupFamily::DirectProduct:
      throw UnsupportedParameter("use direct_product() or a name such as C2xC2");
  }
  throw UnsupportedParameter("unknown family");
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > kMaxBuiltinOrder) throw UnsupportedParameter("group order exceeds " + std::to_string(kMaxBuiltinOrder));
  std::vector<int> mul(n * n);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back("(" + a.label(static_cast<int>(x / nb)) + "," + b.label(static_cast<int>(x % nb)) + ")");
    for (std::size_t y = 0; y < n; ++y) {
      const int pa = a.mul(static_cast<int>(x / nb), static_cast<int>(y / nb));
      const int pb = b.mul(static_cast<int>(x % nb), static_cast<int>(y % nb));
      mul[x * n + y] = pa * static_cast<int>(nb) + pb;
    }
  }
  return GroupTable::from_table(std::move(mul), n, std::move(labels), a.name() + "x" + b.name());
}

GroupTable builtin_group_by_name(std::string_view name) {
  const auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    const auto family = name.substr(0, colon);
    const auto param = name.substr(colon + 1);
    if (family == "symmetric") return builtin_group(GroupFamily::Symmetric, parse_int(param));
    if (family == "alternating") return builtin_group(GroupFamily::Alternating, parse_int(param));
    if (family == "cyclic") return builtin_group(GroupFamily::Cyclic, parse_int(param));
    if (family == "dihedral") return builtin_group(GroupFamily::Dihedral, parse_int(param));
    if (family == "quaternion8") return builtin_group(GroupFamily::Quaternion8);
    if (family == "direct_product") return builtin_group_by_name(param);
    throw InputError("unknown group family '" + std::string(family) + "'");
  }
  if (name == "quaternion8") return builtin_group(GroupFamily::Quaternion8);
  std::vector<std::string_view> factors;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= name.size(); ++i)
    if (i == name.size() || name[i] == 'x') {
      factors.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  GroupTable g = single_factor(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, single_factor(factors[i]));
  return g;
}

std::string check_group_axioms(const GroupTable& g) {
  const int n = static_cast<int>(g.order());
  std::vector<int> row_seen(g.order()), col_seen(g.order());
  for (int a = 0; a < n; ++a) {
    std::fill(row_seen.begin(), row_seen.end(), 0);
    std::fill(col_seen.begin(), col_seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      if (row_seen[static_cast<std::size_t>(g.mul(a, b))]++) return "row " + std::to_string(a) + " is not a permutation";
      if (col_seen[static_cast<std::size_t>(g.mul(b, a))]++) return "column " + std::to_string(a) + " is not a permutation";
    }
    if (g.mul(a, 0) != a || g.mul(0, a) != a) return "element 0 is not a two-sided identity";
    if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0) return "bad inverse for element " + std::to_string(a);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = g.mul(a, b);
      for (int c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) return "multiplication is not associative";
    }
  return {};
}

}  // namespace centerpoint
