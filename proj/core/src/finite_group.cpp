#include "twistprod/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace twistprod {

namespace {

constexpr int kAssociativityCap = 4096;

std::vector<std::string> default_labels(int order) {
  std::vector<std::string> labels;
  labels.reserve(order);
  for (int i = 0; i < order; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

CayleyGroup::CayleyGroup(int order, std::vector<int> table, std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
  if (order <= 0) throw IngestionError("group order must be positive");
  if (table_.size() != static_cast<std::size_t>(order) * order)
    throw IngestionError("multiplication table must be order x order");
  for (int v : table_)
    if (v < 0 || v >= order) throw IngestionError("table entry out of element range");
  if (labels_.empty()) labels_ = default_labels(order);
  if (static_cast<int>(labels_.size()) != order)
    throw IngestionError("label count must match group order");
}

int CayleyGroup::inverse(int a) const {
  for (int b = 0; b < order_; ++b)
    if (mul(a, b) == 0 && mul(b, a) == 0) return b;
  throw StructuralError("element " + std::to_string(a) + " has no two-sided inverse");
}

int CayleyGroup::element_order(int a) const {
  int x = a;
  for (int k = 1; k <= order_; ++k) {
    if (x == 0) return k;
    x = mul(x, a);
  }
  throw StructuralError("element order exceeds group order; table is not a group");
}

GroupValidation validate_group(const CayleyGroup& g) {
  const int n = g.order();

  // Latin square: rows and columns are permutations.
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (int b = 0; b < n; ++b) {
      if (row[g.mul(a, b)]) return {false, "latin_square", {a, b, g.mul(a, b)}};
      row[g.mul(a, b)] = true;
      if (col[g.mul(b, a)]) return {false, "latin_square", {b, a, g.mul(b, a)}};
      col[g.mul(b, a)] = true;
    }
  }

  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a) return {false, "identity", {0, a}};
    if (g.mul(a, 0) != a) return {false, "identity", {a, 0}};
  }

  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b) found = g.mul(a, b) == 0 && g.mul(b, a) == 0;
    if (!found) return {false, "inverse", {a}};
  }

  if (n > kAssociativityCap)
    throw Error("associativity scan refused: order " + std::to_string(n) + " exceeds cap " +
                std::to_string(kAssociativityCap));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          return {false, "associativity", {a, b, c}};

  return {};
}

GroupValidation validate_action(const GroupAction& action) {
  const int ns = action.source.order();
  const int nt = action.target.order();
  if (static_cast<int>(action.maps.size()) != ns)
    throw DimensionError("action needs one permutation per source element");

  for (int h = 0; h < ns; ++h) {
    if (static_cast<int>(action.maps[h].size()) != nt)
      throw DimensionError("action permutation has wrong length");
    std::vector<bool> seen(nt, false);
    for (int g = 0; g < nt; ++g) {
      const int img = action.maps[h][g];
      if (img < 0 || img >= nt || seen[img]) return {false, "action_permutation", {h, g}};
      seen[img] = true;
    }
  }

  for (int g = 0; g < nt; ++g)
    if (action.maps[0][g] != g) return {false, "action_identity", {0, g}};

  for (int h = 0; h < ns; ++h)
    for (int g1 = 0; g1 < nt; ++g1)
      for (int g2 = 0; g2 < nt; ++g2)
        if (action.maps[h][action.target.mul(g1, g2)] !=
            action.target.mul(action.maps[h][g1], action.maps[h][g2]))
          return {false, "action_automorphism", {h, g1, g2}};

  for (int h1 = 0; h1 < ns; ++h1)
    for (int h2 = 0; h2 < ns; ++h2)
      for (int g = 0; g < nt; ++g)
        if (action.maps[action.source.mul(h1, h2)][g] != action.maps[h1][action.maps[h2][g]])
          return {false, "action_homomorphism", {h1, h2, g}};

  return {};
}

GroupAction inner_action(const CayleyGroup& m) {
  const int n = m.order();
  GroupAction action{m, m, {}};
  action.maps.reserve(n);
  for (int h = 0; h < n; ++h) {
    std::vector<int> perm(n);
    const int h_inv = m.inverse(h);
    for (int g = 0; g < n; ++g) perm[g] = m.mul(m.mul(h, g), h_inv);
    action.maps.push_back(std::move(perm));
  }
  return action;
}

GroupAction trivial_action(const CayleyGroup& source, const CayleyGroup& target) {
  GroupAction action{source, target, {}};
  std::vector<int> id(target.order());
  std::iota(id.begin(), id.end(), 0);
  action.maps.assign(source.order(), id);
  return action;
}

std::vector<int> action_kernel(const GroupAction& action) {
  const int ns = action.source.order();
  const int nt = action.target.order();
  std::vector<int> kernel;
  std::vector<bool> in_kernel(ns, false);
  for (int h = 0; h < ns; ++h) {
    bool id = true;
    for (int g = 0; g < nt && id; ++g) id = action.maps[h][g] == g;
    if (id) {
      kernel.push_back(h);
      in_kernel[h] = true;
    }
  }
  // Kernels of homomorphisms are normal; anything else means the action
  // was not a homomorphism.
  for (int h : kernel)
    for (int x = 0; x < ns; ++x)
      if (!in_kernel[action.source.mul(action.source.mul(x, h), action.source.inverse(x))])
        throw StructuralError("action kernel is not normal; input is not an action");
  return kernel;
}

ConditionResult check_twist_condition(const GroupAction& lambda, const GroupAction& mu) {
  const CayleyGroup& g_group = lambda.target;
  const CayleyGroup& h_group = lambda.source;
  if (mu.source.order() != g_group.order() || mu.source.table() != g_group.table() ||
      mu.target.order() != h_group.order() || mu.target.table() != h_group.table())
    throw DimensionError("lambda acts H on G, mu must act the same G on the same H");

  std::vector<bool> ker_lambda(h_group.order(), false);
  for (int h : action_kernel(lambda)) ker_lambda[h] = true;
  std::vector<bool> ker_mu(g_group.order(), false);
  for (int g : action_kernel(mu)) ker_mu[g] = true;

  for (int g = 0; g < g_group.order(); ++g)
    for (int h = 0; h < h_group.order(); ++h) {
      const int defect_h = h_group.mul(mu.apply(g, h), h_group.inverse(h));
      if (!ker_lambda[defect_h]) return {false, std::make_pair(g, h), 1};
      const int defect_g = g_group.mul(lambda.apply(h, g), g_group.inverse(g));
      if (!ker_mu[defect_g]) return {false, std::make_pair(g, h), 2};
    }
  return {};
}

TwistOutcome twisted_product(const CayleyGroup& g, const CayleyGroup& h,
                             const GroupAction& lambda, const GroupAction& mu) {
  if (lambda.target.table() != g.table() || lambda.source.table() != h.table() ||
      mu.source.table() != g.table() || mu.target.table() != h.table())
    throw DimensionError("twisted product needs lambda: H -> Aut(G) and mu: G -> Aut(H)");

  const int ng = g.order(), nh = h.order();
  const int n = ng * nh;
  if (n > kAssociativityCap)
    throw Error("twisted product order " + std::to_string(n) + " exceeds the brute-force cap " +
                std::to_string(kAssociativityCap));

  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int g1 = 0; g1 < ng; ++g1)
    for (int h1 = 0; h1 < nh; ++h1) {
      labels[g1 * nh + h1] = "(" + g.label(g1) + "," + h.label(h1) + ")";
      for (int g2 = 0; g2 < ng; ++g2)
        for (int h2 = 0; h2 < nh; ++h2) {
          const int gp = g.mul(g1, lambda.apply(h1, g2));
          const int hp = h.mul(h1, mu.apply(g1, h2));
          table[static_cast<std::size_t>(g1 * nh + h1) * n + (g2 * nh + h2)] = gp * nh + hp;
        }
    }

  CayleyGroup product(n, std::move(table), std::move(labels));
  GroupValidation axioms = validate_group(product);
  ConditionResult condition = check_twist_condition(lambda, mu);
  if (axioms.pass != condition.holds)
    throw StructuralError("group axioms and twist condition disagree; this is a bug");

  TwistOutcome outcome;
  outcome.is_group = axioms.pass;
  outcome.condition = condition;
  if (axioms.pass) {
    outcome.table = std::move(product);
    return outcome;
  }
  // A failed twist always breaks associativity (that is the content of the
  // group criterion), so report the first violating triple even when some
  // other axiom trips earlier in the generic scan.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (product.mul(product.mul(a, b), c) != product.mul(a, product.mul(b, c))) {
          outcome.failure = GroupValidation{false, "associativity", {a, b, c}};
          return outcome;
        }
  throw StructuralError("twist condition failed but the product is associative; this is a bug");
}

InversePair twisted_inverse(int g1, int h1, const GroupAction& lambda, const GroupAction& mu) {
  const CayleyGroup& g_group = lambda.target;
  const CayleyGroup& h_group = lambda.source;
  const int g2 = lambda.apply(h_group.inverse(h1), g_group.inverse(g1));
  const int h2 = mu.apply(g_group.inverse(g1), h_group.inverse(h1));

  const auto twist_mul = [&](std::pair<int, int> a, std::pair<int, int> b) {
    return std::make_pair(g_group.mul(a.first, lambda.apply(a.second, b.first)),
                          h_group.mul(a.second, mu.apply(a.first, b.second)));
  };
  const auto right = twist_mul({g1, h1}, {g2, h2});
  const auto left = twist_mul({g2, h2}, {g1, h1});
  return {g2, h2, left == std::make_pair(0, 0), right == std::make_pair(0, 0)};
}

GroupNilpotency is_two_step_nilpotent_group(const CayleyGroup& m) {
  const int n = m.order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const int c = m.commutator(g, h);
      for (int x = 0; x < n; ++x)
        if (m.commutator(c, x) != 0) return {false, std::array<int, 3>{g, h, x}};
    }
  return {true, std::nullopt};
}

// --- small-group corpus -----------------------------------------------------

CayleyGroup trivial_group() { return CayleyGroup(1, {0}, {"e"}); }

CayleyGroup cyclic_group(int n) {
  if (n < 1) throw IngestionError("cyclic group order must be positive");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return CayleyGroup(n, std::move(table));
}

CayleyGroup dihedral_group(int n) {
  if (n < 2) throw IngestionError("dihedral group needs n >= 2");
  const int order = 2 * n;
  // Element k + n*e is r^k s^e with s r = r^-1 s.
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> labels(order);
  for (int e = 0; e < 2; ++e)
    for (int k = 0; k < n; ++k)
      labels[k + n * e] = (e ? "sr" : "r") + std::to_string(k);
  for (int e1 = 0; e1 < 2; ++e1)
    for (int k1 = 0; k1 < n; ++k1)
      for (int e2 = 0; e2 < 2; ++e2)
        for (int k2 = 0; k2 < n; ++k2) {
          const int k = ((e1 ? n - k2 : k2) + k1) % n;
          const int e = e1 ^ e2;
          table[static_cast<std::size_t>(k1 + n * e1) * order + (k2 + n * e2)] = k + n * e;
        }
  return CayleyGroup(order, std::move(table), std::move(labels));
}

CayleyGroup quaternion_group() {
  // Elements 2*axis + sign with axes (1, i, j, k).
  const auto axis_mul = [](int a, int b) -> std::pair<int, int> {  // (axis, sign)
    if (a == 0) return {b, 0};
    if (b == 0) return {a, 0};
    if (a == b) return {0, 1};                       // i*i = -1
    static const int eps[4][4] = {{0, 0, 0, 0},      // levi-civita signs for i,j,k
                                  {0, 0, 1, -1},     // i*j=k, i*k=-j
                                  {0, -1, 0, 1},     // j*i=-k, j*k=i
                                  {0, 1, -1, 0}};    // k*i=j, k*j=-i
    const int third = 6 - a - b;  // the remaining axis among 1,2,3
    return {third, eps[a][b] == 1 ? 0 : 1};
  };
  std::vector<int> table(64);
  const std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const auto [axis, sign] = axis_mul(a / 2, b / 2);
      table[static_cast<std::size_t>(a) * 8 + b] = 2 * axis + (sign ^ (a % 2) ^ (b % 2));
    }
  return CayleyGroup(8, std::move(table), labels);
}

namespace {

CayleyGroup permutation_group(std::vector<std::vector<int>> perms) {
  const int order = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < order; ++i) index[perms[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> labels(order);
  for (int a = 0; a < order; ++a) {
    std::string l;
    for (int v : perms[a]) l += std::to_string(v);
    labels[a] = l;
    for (int b = 0; b < order; ++b) {
      std::vector<int> comp(perms[a].size());
      for (std::size_t x = 0; x < comp.size(); ++x) comp[x] = perms[a][perms[b][x]];
      table[static_cast<std::size_t>(a) * order + b] = index.at(comp);
    }
  }
  return CayleyGroup(order, std::move(table), std::move(labels));
}

bool is_even_permutation(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

}  // namespace

CayleyGroup symmetric_group_3() {
  std::vector<int> p = {0, 1, 2};
  std::vector<std::vector<int>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return permutation_group(std::move(perms));
}

CayleyGroup alternating_group_4() {
  std::vector<int> p = {0, 1, 2, 3};
  std::vector<std::vector<int>> perms;
  do {
    if (is_even_permutation(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return permutation_group(std::move(perms));
}

CayleyGroup direct_product(const CayleyGroup& a, const CayleyGroup& b) {
  const int na = a.order(), nb = b.order();
  const int n = na * nb;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1) {
      labels[a1 * nb + b1] = "(" + a.label(a1) + "," + b.label(b1) + ")";
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          table[static_cast<std::size_t>(a1 * nb + b1) * n + (a2 * nb + b2)] =
              a.mul(a1, a2) * nb + b.mul(b1, b2);
    }
  return CayleyGroup(n, std::move(table), std::move(labels));
}

const std::vector<NamedGroup>& standard_corpus() {
  static const std::vector<NamedGroup> corpus = [] {
    std::vector<NamedGroup> c;
    c.push_back({"Z1", trivial_group()});
    for (int n = 2; n <= 8; ++n) c.push_back({"Z" + std::to_string(n), cyclic_group(n)});
    c.push_back({"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))});
    c.push_back({"Z2xZ4", direct_product(cyclic_group(2), cyclic_group(4))});
    c.push_back({"S3", symmetric_group_3()});
    c.push_back({"D4", dihedral_group(4)});
    c.push_back({"Q8", quaternion_group()});
    c.push_back({"D4xZ2", direct_product(dihedral_group(4), cyclic_group(2))});
    c.push_back({"A4", alternating_group_4()});
    return c;
  }();
  return corpus;
}

// --- automorphism search ----------------------------------------------------

namespace {

/// Generating sequence with a word for every element: element x is
/// expr[x] = (parent, generator index), discovered parents first.
struct GeneratingWords {
  std::vector<int> generators;              // element values
  std::vector<int> discovery;               // all elements in discovery order
  std::vector<std::pair<int, int>> expr;    // per element: (parent, gen index); (-1,-1) for identity
};

GeneratingWords generating_words(const CayleyGroup& g) {
  const int n = g.order();
  GeneratingWords w;
  w.expr.assign(n, {-1, -1});
  std::vector<bool> known(n, false);
  known[0] = true;
  w.discovery.push_back(0);

  while (static_cast<int>(w.discovery.size()) < n) {
    int next = -1;
    for (int x = 0; x < n && next < 0; ++x)
      if (!known[x]) next = x;
    const int gen_idx = static_cast<int>(w.generators.size());
    w.generators.push_back(next);
    w.expr[next] = {0, gen_idx};
    known[next] = true;
    w.discovery.push_back(next);
    // Close under right multiplication by all generators so far.
    for (std::size_t head = 0; head < w.discovery.size(); ++head) {
      const int a = w.discovery[head];
      for (int t = 0; t < static_cast<int>(w.generators.size()); ++t) {
        const int p = g.mul(a, w.generators[t]);
        if (!known[p]) {
          known[p] = true;
          w.expr[p] = {a, t};
          w.discovery.push_back(p);
        }
      }
    }
  }
  return w;
}

}  // namespace

std::vector<std::vector<int>> enumerate_automorphisms(const CayleyGroup& g, std::size_t cap) {
  const int n = g.order();
  const GeneratingWords words = generating_words(g);
  const int num_gens = static_cast<int>(words.generators.size());

  std::vector<int> gen_order(num_gens);
  for (int t = 0; t < num_gens; ++t) gen_order[t] = g.element_order(words.generators[t]);
  std::vector<int> elem_order(n);
  for (int x = 0; x < n; ++x) elem_order[x] = g.element_order(x);

  std::vector<std::vector<int>> result;
  std::vector<int> images(num_gens, 0);

  const auto try_extend = [&]() {
    std::vector<int> phi(n, -1);
    phi[0] = 0;
    for (int x : words.discovery) {
      if (x == 0) continue;
      const auto [parent, t] = words.expr[x];
      phi[x] = g.mul(phi[parent], images[t]);
    }
    std::vector<bool> hit(n, false);
    for (int x = 0; x < n; ++x) {
      if (hit[phi[x]]) return;
      hit[phi[x]] = true;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (phi[g.mul(a, b)] != g.mul(phi[a], phi[b])) return;
    result.push_back(std::move(phi));
  };

  const auto backtrack = [&](auto&& self, int t) -> void {
    if (result.size() >= cap) return;
    if (t == num_gens) {
      try_extend();
      return;
    }
    for (int img = 0; img < n; ++img) {
      if (elem_order[img] != gen_order[t]) continue;
      images[t] = img;
      self(self, t + 1);
      if (result.size() >= cap) return;
    }
  };
  backtrack(backtrack, 0);

  std::sort(result.begin(), result.end());
  return result;
}

std::vector<GroupAction> enumerate_actions(const CayleyGroup& source, const CayleyGroup& target,
                                           std::size_t cap) {
  const int ns = source.order();
  const std::vector<std::vector<int>> auts = enumerate_automorphisms(target);
  const int num_auts = static_cast<int>(auts.size());

  std::map<std::vector<int>, int> aut_index;
  for (int i = 0; i < num_auts; ++i) aut_index[auts[i]] = i;

  std::vector<int> identity_perm(target.order());
  std::iota(identity_perm.begin(), identity_perm.end(), 0);
  const int id_aut = aut_index.at(identity_perm);

  const auto compose = [&](int x, int y) {
    std::vector<int> comp(auts[x].size());
    for (std::size_t t = 0; t < comp.size(); ++t) comp[t] = auts[x][auts[y][t]];
    return aut_index.at(comp);
  };

  std::vector<int> aut_ord(num_auts);
  for (int i = 0; i < num_auts; ++i) {
    int x = i, k = 1;
    while (x != id_aut) {
      x = compose(x, i);
      ++k;
    }
    aut_ord[i] = k;
  }

  const GeneratingWords words = generating_words(source);
  const int num_gens = static_cast<int>(words.generators.size());
  std::vector<int> gen_order(num_gens);
  for (int t = 0; t < num_gens; ++t) gen_order[t] = source.element_order(words.generators[t]);

  std::vector<std::vector<int>> assignments;  // aut index per source element
  std::vector<int> images(num_gens, 0);

  const auto try_extend = [&]() {
    std::vector<int> phi(ns, -1);
    phi[0] = id_aut;
    for (int x : words.discovery) {
      if (x == 0) continue;
      const auto [parent, t] = words.expr[x];
      phi[x] = compose(phi[parent], images[t]);
    }
    for (int a = 0; a < ns; ++a)
      for (int b = 0; b < ns; ++b)
        if (phi[source.mul(a, b)] != compose(phi[a], phi[b])) return;
    assignments.push_back(std::move(phi));
  };

  const auto backtrack = [&](auto&& self, int t) -> void {
    if (assignments.size() >= cap) return;
    if (t == num_gens) {
      try_extend();
      return;
    }
    for (int img = 0; img < num_auts; ++img) {
      if (gen_order[t] % aut_ord[img] != 0) continue;
      images[t] = img;
      self(self, t + 1);
      if (assignments.size() >= cap) return;
    }
  };
  backtrack(backtrack, 0);

  std::sort(assignments.begin(), assignments.end());
  const std::vector<int> trivial(ns, id_aut);
  const auto it = std::find(assignments.begin(), assignments.end(), trivial);
  if (it != assignments.end()) std::rotate(assignments.begin(), it, it + 1);

  std::vector<GroupAction> actions;
  actions.reserve(assignments.size());
  for (const auto& phi : assignments) {
    GroupAction action{source, target, {}};
    action.maps.reserve(ns);
    for (int h = 0; h < ns; ++h) action.maps.push_back(auts[phi[h]]);
    actions.push_back(std::move(action));
  }
  return actions;
}

}  // namespace twistprod
