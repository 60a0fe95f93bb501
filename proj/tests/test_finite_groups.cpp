#include <algorithm>
#include <random>

#include "doctest.h"
#include "twistprod/finite_group.hpp"

using namespace twistprod;

namespace {

// Test-side oracle: group axioms by direct scan, independent of
// validate_group's code path.
bool oracle_is_group(const CayleyGroup& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (int b = 0; b < n; ++b) {
      if (row[g.mul(a, b)] || col[g.mul(b, a)]) return false;
      row[g.mul(a, b)] = col[g.mul(b, a)] = true;
    }
    if (g.mul(0, a) != a || g.mul(a, 0) != a) return false;
  }
  for (int a = 0; a < n; ++a) {
    bool inv = false;
    for (int b = 0; b < n && !inv; ++b) inv = g.mul(a, b) == 0 && g.mul(b, a) == 0;
    if (!inv) return false;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  return true;
}

// Independent semidirect-product constructor for the mu-trivial reduction.
CayleyGroup oracle_semidirect(const CayleyGroup& g, const CayleyGroup& h,
                              const GroupAction& lambda) {
  const int ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int g1 = 0; g1 < ng; ++g1)
    for (int h1 = 0; h1 < nh; ++h1)
      for (int g2 = 0; g2 < ng; ++g2)
        for (int h2 = 0; h2 < nh; ++h2)
          table[static_cast<std::size_t>(g1 * nh + h1) * n + (g2 * nh + h2)] =
              g.mul(g1, lambda.maps[h1][g2]) * nh + h.mul(h1, h2);
  return CayleyGroup(n, std::move(table));
}

int first_order_k_element(const CayleyGroup& g, int k) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == k) return x;
  return -1;
}

}  // namespace

TEST_CASE("group validation") {
  SUBCASE("corpus groups all pass and match the oracle") {
    for (const auto& [name, group] : standard_corpus()) {
      INFO(name);
      CHECK(validate_group(group).pass);
      CHECK(oracle_is_group(group));
    }
  }
  SUBCASE("trivial group passes") { CHECK(validate_group(trivial_group()).pass); }
  SUBCASE("a swapped entry is caught; associativity breaks too") {
    CayleyGroup z4 = cyclic_group(4);
    std::vector<int> table = z4.table();
    std::swap(table[1 * 4 + 1], table[1 * 4 + 2]);  // row 1: now 1*1=3, 1*2=2
    const CayleyGroup broken(4, table);
    REQUIRE_FALSE(oracle_is_group(broken));
    const GroupValidation report = validate_group(broken);
    CHECK_FALSE(report.pass);
    // One swapped entry dents a column first (checks run Latin, identity,
    // inverses, associativity in order) ...
    CHECK(report.axiom == "latin_square");
    // ... and the 64-triple scan confirms associativity is gone as well.
    bool assoc_broken = false;
    std::array<int, 3> triple{};
    for (int a = 0; a < 4 && !assoc_broken; ++a)
      for (int b = 0; b < 4 && !assoc_broken; ++b)
        for (int c = 0; c < 4 && !assoc_broken; ++c)
          if (broken.mul(broken.mul(a, b), c) != broken.mul(a, broken.mul(b, c))) {
            assoc_broken = true;
            triple = {a, b, c};
          }
    CHECK(assoc_broken);
    CHECK(broken.mul(broken.mul(triple[0], triple[1]), triple[2]) !=
          broken.mul(triple[0], broken.mul(triple[1], triple[2])));
  }
  SUBCASE("a pure associativity failure reports its first triple") {
    // Latin square with identity and two-sided inverses that is not
    // associative: the five-element loop below (row-by-row).
    const CayleyGroup loop(5, {0, 1, 2, 3, 4,  //
                               1, 0, 3, 4, 2,  //
                               2, 4, 0, 1, 3,  //
                               3, 2, 4, 0, 1,  //
                               4, 3, 1, 2, 0});
    REQUIRE_FALSE(oracle_is_group(loop));
    const GroupValidation report = validate_group(loop);
    CHECK_FALSE(report.pass);
    CHECK(report.axiom == "associativity");
    REQUIRE(report.witness.size() == 3);
    const int a = report.witness[0], b = report.witness[1], c = report.witness[2];
    CHECK(loop.mul(loop.mul(a, b), c) != loop.mul(a, loop.mul(b, c)));
    // First violating triple in row-major scan order.
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y)
        for (int z = 0; z < 5; ++z) {
          if (std::array{x, y, z} >= std::array{a, b, c}) goto done;
          CHECK(loop.mul(loop.mul(x, y), z) == loop.mul(x, loop.mul(y, z)));
        }
  done:;
  }
  SUBCASE("non-square input is rejected") {
    CHECK_THROWS_AS(CayleyGroup(3, {0, 1, 2, 1}), IngestionError);
  }
}

TEST_CASE("inner actions") {
  SUBCASE("abelian conjugation is trivial") {
    const GroupAction action = inner_action(cyclic_group(6));
    for (const auto& perm : action.maps)
      for (int g = 0; g < 6; ++g) CHECK(perm[g] == g);
  }
  SUBCASE("S3: a transposition swaps the two 3-cycles") {
    const CayleyGroup s3 = symmetric_group_3();
    const GroupAction action = inner_action(s3);
    CHECK(validate_action(action).pass);
    const int t = first_order_k_element(s3, 2);
    std::vector<int> cycles;
    for (int x = 0; x < 6; ++x)
      if (s3.element_order(x) == 3) cycles.push_back(x);
    REQUIRE(cycles.size() == 2);
    CHECK(action.maps[t][cycles[0]] == cycles[1]);
    CHECK(action.maps[t][cycles[1]] == cycles[0]);
  }
  SUBCASE("Q8: conjugation by i fixes the i-axis and flips j, k") {
    const GroupAction action = inner_action(quaternion_group());
    // Elements: 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k.
    const std::vector<int> expected = {0, 1, 2, 3, 5, 4, 7, 6};
    CHECK(action.maps[2] == expected);
  }
  SUBCASE("inner actions always validate") {
    for (const auto& [name, group] : standard_corpus()) {
      INFO(name);
      CHECK(validate_action(inner_action(group)).pass);
    }
  }
}

TEST_CASE("action kernels") {
  CHECK(action_kernel(inner_action(cyclic_group(6))) == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(action_kernel(inner_action(symmetric_group_3())) == std::vector<int>{0});
  CHECK(action_kernel(inner_action(quaternion_group())) == std::vector<int>{0, 1});
}

TEST_CASE("twist condition") {
  SUBCASE("trivial actions always satisfy it") {
    const CayleyGroup g = symmetric_group_3();
    const CayleyGroup h = alternating_group_4();
    CHECK(check_twist_condition(trivial_action(h, g), trivial_action(g, h)).holds);
  }
  SUBCASE("inner Q8 passes: commutators land in the central kernel") {
    const GroupAction inner = inner_action(quaternion_group());
    CHECK(check_twist_condition(inner, inner).holds);
  }
  SUBCASE("inner S3 fails with a non-commuting witness") {
    const CayleyGroup s3 = symmetric_group_3();
    const GroupAction inner = inner_action(s3);
    const ConditionResult r = check_twist_condition(inner, inner);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    const auto [g, h] = *r.witness;
    CHECK(s3.commutator(g, h) != 0);
    CHECK(r.failed_clause == 1);
  }
}

TEST_CASE("twisted products") {
  SUBCASE("Z2 with trivial actions gives the Klein four-group") {
    const CayleyGroup z2 = cyclic_group(2);
    const TwistOutcome outcome =
        twisted_product(z2, z2, trivial_action(z2, z2), trivial_action(z2, z2));
    REQUIRE(outcome.is_group);
    CHECK(outcome.table->order() == 4);
    CHECK(outcome.table->table() == direct_product(z2, z2).table());
  }
  SUBCASE("inner Q8 twist is a group of order 64") {
    const CayleyGroup q8 = quaternion_group();
    const GroupAction inner = inner_action(q8);
    const TwistOutcome outcome = twisted_product(q8, q8, inner, inner);
    REQUIRE(outcome.is_group);
    CHECK(outcome.table->order() == 64);
    CHECK(oracle_is_group(*outcome.table));
  }
  SUBCASE("inner S3 twist is not a group; the witness violates associativity") {
    const CayleyGroup s3 = symmetric_group_3();
    const GroupAction inner = inner_action(s3);
    const TwistOutcome outcome = twisted_product(s3, s3, inner, inner);
    CHECK_FALSE(outcome.is_group);
    CHECK_FALSE(outcome.table.has_value());
    REQUIRE(outcome.failure.has_value());
    CHECK(outcome.failure->axiom == "associativity");
    // Recheck the witness through the twist multiplication itself.
    REQUIRE(outcome.failure->witness.size() == 3);
    const auto mul = [&](int a, int b) {
      const auto [g1, h1] = std::div(a, 6);
      const auto [g2, h2] = std::div(b, 6);
      return s3.mul(g1, inner.maps[h1][g2]) * 6 + s3.mul(h1, inner.maps[g1][h2]);
    };
    const int a = outcome.failure->witness[0], b = outcome.failure->witness[1],
              c = outcome.failure->witness[2];
    CHECK(mul(mul(a, b), c) != mul(a, mul(b, c)));
  }
  SUBCASE("product order is always |G| |H|") {
    const CayleyGroup z3 = cyclic_group(3), z4 = cyclic_group(4);
    const TwistOutcome outcome =
        twisted_product(z3, z4, trivial_action(z4, z3), trivial_action(z3, z4));
    REQUIRE(outcome.is_group);
    CHECK(outcome.table->order() == 12);
  }
  SUBCASE("the brute-force cap is enforced") {
    const CayleyGroup d4z2 = direct_product(dihedral_group(4), cyclic_group(2));
    const CayleyGroup big = direct_product(d4z2, d4z2);  // order 256
    CHECK_THROWS_AS(
        twisted_product(big, big, trivial_action(big, big), trivial_action(big, big)), Error);
  }
}

TEST_CASE("twisted product reduces to direct and semidirect products") {
  const CayleyGroup g = dihedral_group(3);
  const CayleyGroup h = cyclic_group(4);
  SUBCASE("both trivial: direct product") {
    const TwistOutcome outcome =
        twisted_product(g, h, trivial_action(h, g), trivial_action(g, h));
    REQUIRE(outcome.is_group);
    CHECK(outcome.table->table() == direct_product(g, h).table());
  }
  SUBCASE("mu trivial: semidirect product, against the independent constructor") {
    // A nontrivial action of Z4 on D3 exists (inversion of rotations).
    const auto actions = enumerate_actions(h, g);
    const GroupAction* nontrivial = nullptr;
    for (const auto& a : actions)
      if (a.maps[1] != a.maps[0]) {
        nontrivial = &a;
        break;
      }
    REQUIRE(nontrivial != nullptr);
    const TwistOutcome outcome = twisted_product(g, h, *nontrivial, trivial_action(g, h));
    REQUIRE(outcome.is_group);
    CHECK(outcome.table->table() == oracle_semidirect(g, h, *nontrivial).table());
  }
}

TEST_CASE("twisted inverses") {
  const CayleyGroup q8 = quaternion_group();
  const GroupAction inner = inner_action(q8);
  SUBCASE("identity pair inverts to itself") {
    const InversePair inv = twisted_inverse(0, 0, inner, inner);
    CHECK(inv.g == 0);
    CHECK(inv.h == 0);
    CHECK(inv.left_inverse);
    CHECK(inv.right_inverse);
  }
  SUBCASE("the (i, j) element of the inner Q8 twist") {
    const InversePair inv = twisted_inverse(2, 4, inner, inner);  // (i, j)
    CHECK(inv.left_inverse);
    CHECK(inv.right_inverse);
  }
  SUBCASE("every element of a valid twist has a two-sided inverse") {
    for (int g = 0; g < 8; ++g)
      for (int h = 0; h < 8; ++h) {
        const InversePair inv = twisted_inverse(g, h, inner, inner);
        CHECK(inv.left_inverse);
        CHECK(inv.right_inverse);
      }
  }
  SUBCASE("trivial actions invert componentwise") {
    const CayleyGroup z6 = cyclic_group(6);
    const InversePair inv = twisted_inverse(2, 5, trivial_action(z6, z6), trivial_action(z6, z6));
    CHECK(inv.g == 4);
    CHECK(inv.h == 1);
    CHECK(inv.left_inverse);
    CHECK(inv.right_inverse);
  }
  SUBCASE("a failed condition shows up as a one-sided inverse somewhere") {
    const CayleyGroup s3 = symmetric_group_3();
    const GroupAction s3_inner = inner_action(s3);
    bool some_failure = false;
    for (int g = 0; g < 6 && !some_failure; ++g)
      for (int h = 0; h < 6 && !some_failure; ++h) {
        const InversePair inv = twisted_inverse(g, h, s3_inner, s3_inner);
        some_failure = !inv.left_inverse || !inv.right_inverse;
      }
    CHECK(some_failure);
  }
}

TEST_CASE("group-level 2-step nilpotency") {
  CHECK(is_two_step_nilpotent_group(quaternion_group()).two_step);
  CHECK(is_two_step_nilpotent_group(cyclic_group(7)).two_step);
  CHECK(is_two_step_nilpotent_group(dihedral_group(4)).two_step);
  const GroupNilpotency s3 = is_two_step_nilpotent_group(symmetric_group_3());
  CHECK_FALSE(s3.two_step);
  REQUIRE(s3.witness.has_value());
  const CayleyGroup g = symmetric_group_3();
  const auto [a, b, x] = *s3.witness;
  CHECK(g.commutator(g.commutator(a, b), x) != 0);
  CHECK_FALSE(is_two_step_nilpotent_group(alternating_group_4()).two_step);
}

TEST_CASE("corpus-wide equivalence: inner twist is a group iff 2-step nilpotent") {
  for (const auto& [name, group] : standard_corpus()) {
    INFO(name);
    const GroupAction inner = inner_action(group);
    const TwistOutcome outcome = twisted_product(group, group, inner, inner);
    CHECK(outcome.is_group == is_two_step_nilpotent_group(group).two_step);
  }
}

TEST_CASE("corpus-wide equivalence: outcome always matches the twist condition") {
  // twisted_product asserts this internally; recheck explicitly.
  for (const auto& [name, group] : standard_corpus()) {
    INFO(name);
    const GroupAction inner = inner_action(group);
    CHECK(twisted_product(group, group, inner, inner).is_group ==
          check_twist_condition(inner, inner).holds);
  }
}

TEST_CASE("automorphism enumeration") {
  SUBCASE("cyclic groups have phi(n) automorphisms") {
    CHECK(enumerate_automorphisms(cyclic_group(5)).size() == 4);
    CHECK(enumerate_automorphisms(cyclic_group(8)).size() == 4);
    CHECK(enumerate_automorphisms(cyclic_group(12)).size() == 4);
  }
  SUBCASE("Aut(Z2 x Z2) = S3, Aut(S3) = S3, Aut(Q8) = S4") {
    CHECK(enumerate_automorphisms(direct_product(cyclic_group(2), cyclic_group(2))).size() == 6);
    CHECK(enumerate_automorphisms(symmetric_group_3()).size() == 6);
    CHECK(enumerate_automorphisms(quaternion_group()).size() == 24);
  }
  SUBCASE("every enumerated map is an automorphism") {
    const CayleyGroup a4 = alternating_group_4();
    const auto auts = enumerate_automorphisms(a4);
    CHECK(auts.size() == 24);
    for (const auto& phi : auts)
      for (int a = 0; a < 12; ++a)
        for (int b = 0; b < 12; ++b) CHECK(phi[a4.mul(a, b)] == a4.mul(phi[a], phi[b]));
  }
}

TEST_CASE("action enumeration") {
  const CayleyGroup z2 = cyclic_group(2);
  const CayleyGroup z3 = cyclic_group(3);
  SUBCASE("trivial action comes first") {
    const auto actions = enumerate_actions(z2, z3);
    REQUIRE(!actions.empty());
    for (int g = 0; g < 3; ++g) CHECK(actions[0].maps[1][g] == g);
    // Z2 acting on Z3: trivial and inversion.
    CHECK(actions.size() == 2);
  }
  SUBCASE("all enumerated actions validate") {
    const auto actions = enumerate_actions(symmetric_group_3(), quaternion_group());
    for (const auto& a : actions) CHECK(validate_action(a).pass);
    CHECK(!actions.empty());
  }
}

TEST_CASE("condition equivalence holds across randomized action pairs") {
  std::mt19937_64 rng(2024);
  const auto& corpus = standard_corpus();
  std::vector<const NamedGroup*> small;
  for (const auto& ng : corpus)
    if (ng.group.order() <= 12) small.push_back(&ng);

  int checked = 0;
  while (checked < 50) {
    const NamedGroup& g_named = *small[rng() % small.size()];
    const NamedGroup& h_named = *small[rng() % small.size()];
    const auto lambdas = enumerate_actions(h_named.group, g_named.group, 2000);
    const auto mus = enumerate_actions(g_named.group, h_named.group, 2000);
    const GroupAction& lambda = lambdas[rng() % lambdas.size()];
    const GroupAction& mu = mus[rng() % mus.size()];
    INFO(g_named.name, " * ", h_named.name);
    const TwistOutcome outcome = twisted_product(g_named.group, h_named.group, lambda, mu);
    CHECK(outcome.is_group == check_twist_condition(lambda, mu).holds);
    if (outcome.is_group)
      CHECK(outcome.table->order() == g_named.group.order() * h_named.group.order());
    ++checked;
  }
}
