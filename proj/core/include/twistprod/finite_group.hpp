#ifndef TWISTPROD_FINITE_GROUP_HPP
#define TWISTPROD_FINITE_GROUP_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistprod/common.hpp"
#include "twistprod/validation.hpp"

namespace twistprod {

/// Finite group as an order x order multiplication table over 0-based
/// element indices; index 0 is the identity. Construction stores the table
/// as-is: run validate_group to certify the axioms (deliberately broken
/// tables are useful test objects).
class CayleyGroup {
 public:
  CayleyGroup(int order, std::vector<int> table, std::vector<std::string> labels = {});

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }

  /// Left inverse by row scan; requires a valid table.
  int inverse(int a) const;

  /// aba^-1 b^-1.
  int commutator(int a, int b) const { return mul(mul(mul(a, b), inverse(a)), inverse(b)); }

  /// Smallest k >= 1 with a^k = identity.
  int element_order(int a) const;

  const std::vector<int>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_[a]; }

 private:
  int order_;
  std::vector<int> table_;
  std::vector<std::string> labels_;
};

/// Latin square, identity at index 0, two-sided inverses, associativity —
/// in that order; the first violation in row-major scan order is reported.
/// The associativity scan is O(order^3) and refuses orders above 4096.
GroupValidation validate_group(const CayleyGroup& g);

/// Action of `source` (H) on `target` (G) by automorphisms: one target
/// permutation per source element.
struct GroupAction {
  CayleyGroup source;
  CayleyGroup target;
  std::vector<std::vector<int>> maps;  // maps[h][g]

  int apply(int h, int g) const { return maps[h][g]; }
};

/// Each permutation an automorphism, identity maps to the identity
/// permutation, and maps[h1 h2] = maps[h1] o maps[h2].
GroupValidation validate_action(const GroupAction& action);

/// Conjugation action of a group on itself: maps[h] = (g -> h g h^-1).
GroupAction inner_action(const CayleyGroup& m);

/// Every source element acts as the identity permutation.
GroupAction trivial_action(const CayleyGroup& source, const CayleyGroup& target);

/// Sorted list of source elements acting as the identity permutation.
/// Always contains 0; asserted to be a normal subgroup.
std::vector<int> action_kernel(const GroupAction& action);

struct ConditionResult {
  bool holds = true;
  /// First violating pair (g, h) in row-major scan order, when any.
  std::optional<std::pair<int, int>> witness;
  /// 1: mu(g)(h) h^-1 escaped ker(lambda); 2: lambda(h)(g) g^-1 escaped ker(mu).
  int failed_clause = 0;
};

/// The group criterion for a twist: for all g, h the twisted commutator
/// defects mu(g)(h) h^-1 and lambda(h)(g) g^-1 land in ker(lambda) and
/// ker(mu) respectively.
ConditionResult check_twist_condition(const GroupAction& lambda, const GroupAction& mu);

/// Result of assembling a twisted product table. Exactly one of `table`
/// (when the product is a group) and `failure` is populated.
struct TwistOutcome {
  bool is_group = false;
  std::optional<CayleyGroup> table;
  std::optional<GroupValidation> failure;
  ConditionResult condition;
};

/// Builds the |G| x |H| element table with product
/// (g1,h1)(g2,h2) = (g1 lambda(h1)(g2), h1 mu(g1)(h2)),
/// pairs flattened to index g*|H| + h, then brute-force checks the group
/// axioms. Agreement between the axiom check and the twist condition is
/// asserted (they are equivalent); disagreement is an internal error.
TwistOutcome twisted_product(const CayleyGroup& g, const CayleyGroup& h,
                             const GroupAction& lambda, const GroupAction& mu);

struct InversePair {
  int g = 0;
  int h = 0;
  /// Whether the formula value actually inverts from both sides. Both hold
  /// whenever the twist condition does; a false flag reports its failure.
  bool left_inverse = false;
  bool right_inverse = false;
};

/// Closed-form inverse in the twisted product:
/// (g1, h1)^-1 = (lambda(h1^-1)(g1^-1), mu(g1^-1)(h1^-1)).
InversePair twisted_inverse(int g1, int h1, const GroupAction& lambda, const GroupAction& mu);

struct GroupNilpotency {
  bool two_step = false;
  std::optional<std::array<int, 3>> witness;  // (g, h, x) with [[g,h],x] != e
};

/// True iff every commutator is central: [[g,h],x] = e for all triples.
GroupNilpotency is_two_step_nilpotent_group(const CayleyGroup& m);

// --- small-group corpus -----------------------------------------------------

CayleyGroup trivial_group();
CayleyGroup cyclic_group(int n);
CayleyGroup dihedral_group(int n);      // order 2n, n >= 2
CayleyGroup quaternion_group();         // Q8
CayleyGroup symmetric_group_3();
CayleyGroup alternating_group_4();
CayleyGroup direct_product(const CayleyGroup& a, const CayleyGroup& b);

struct NamedGroup {
  std::string name;
  CayleyGroup group;
};

/// Z1..Z8, Z2xZ2, Z2xZ4, S3, D4, Q8, D4xZ2, A4 — order <= 16 coverage of
/// both nilpotency classes.
const std::vector<NamedGroup>& standard_corpus();

// --- automorphism search ----------------------------------------------------

/// All automorphisms of g (as target permutations), identity first, up to
/// `cap` results. Deterministic order.
std::vector<std::vector<int>> enumerate_automorphisms(const CayleyGroup& g,
                                                      std::size_t cap = 100000);

/// All actions of `source` on `target`, i.e. homomorphisms from source into
/// the automorphism group of target, up to `cap` results. The trivial
/// action is always first.
std::vector<GroupAction> enumerate_actions(const CayleyGroup& source, const CayleyGroup& target,
                                           std::size_t cap = 100000);

}  // namespace twistprod

#endif
