#include <doctest.h>

#include <map>

#include "cutlift/catalog.hpp"
#include "cutlift/equivalence.hpp"
#include "cutlift/errors.hpp"
#include "cutlift/trielim.hpp"
#include "helpers.hpp"

using namespace cutlift;
using namespace cutlift::testing;

namespace {

Inequality lifted_example(FormKind f1, FormKind f2, FormKind f3) {
  EliminationPlan plan;
  plan.entries.push_back({"1", "2", "6", f1});
  plan.entries.push_back({"1", "3", "7", f2});
  plan.entries.push_back({"2", "3", "8", f3});
  return eliminate(make_pentagonal(), k3113(), plan).output;
}

}  // namespace

TEST_CASE("multipartite structure detection") {
  CHECK(multipartite_parts(*k(5)).has_value());
  CHECK(multipartite_parts(*k3113()).has_value());
  CHECK(multipartite_parts(*k3113())->parts.size() == 4);

  auto p4 = shared(Graph("P4", {"1", "2", "3", "4"},
                         {{"1", "2"}, {"2", "3"}, {"3", "4"}}));
  CHECK(!multipartite_parts(*p4).has_value());
  CHECK_THROWS_WITH_AS(PartPermGroup::of_graph(*p4),
                       doctest::Contains("unsupported"), Error);
}

TEST_CASE("group sizes") {
  CHECK(PartPermGroup::of_graph(*k(5)).size() == 120);
  CHECK(PartPermGroup::of_graph(*k3113()).size() == 6 * 6 * 2 * 2);

  int count = 0;
  PartPermGroup::of_graph(*k(4)).for_each([&](const std::vector<int>&) {
    ++count;
    return false;
  });
  CHECK(count == 24);

  // identity first
  bool first = true;
  PartPermGroup::of_graph(*k(4)).for_each([&](const std::vector<int>& p) {
    if (first) {
      CHECK(p == std::vector<int>{0, 1, 2, 3});
      first = false;
    }
    return true;
  });
}

TEST_CASE("switchings of an inequality are found with the identity permutation") {
  Inequality pent = make_pentagonal();
  std::mt19937 rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    CutMask s = static_cast<CutMask>(rng() & 0xf);
    EquivResult res = are_ps_equivalent(pent, apply_switching(pent, s));
    REQUIRE(res.equivalent);
    CHECK(apply_witness(pent, *res.witness) == apply_switching(pent, s));
  }
}

TEST_CASE("the example's two eliminations are {6,8}-switching equivalent") {
  Inequality aprime = lifted_example(FormKind::UW_V, FormKind::UV_W, FormKind::UV_W);
  Inequality adp = lifted_example(FormKind::WV_U, FormKind::UV_W, FormKind::UVW);
  EquivResult res = are_ps_equivalent(aprime, adp);
  REQUIRE(res.equivalent);
  std::vector<int> ident(8);
  for (int i = 0; i < 8; ++i) ident[i] = i;
  CHECK(res.witness->perm == ident);
  CHECK(res.witness->switching == NodeSet{"6", "8"});
  CHECK(apply_witness(aprime, *res.witness) == adp);
}

TEST_CASE("pentagonal and triangle are not equivalent (invariant short-circuit)") {
  Inequality pent = make_pentagonal();
  Inequality tri5 = zero_lift(make_triangle(), k(5));
  EquivOptions opts;
  opts.verify_shortcircuit = true;
  CHECK(!are_ps_equivalent(pent, tri5, opts).equivalent);
  CHECK(!are_ps_equivalent(tri5, pent, opts).equivalent);
}

TEST_CASE("witness soundness and the equivalence relation on an orbit sample") {
  std::mt19937 rng(31);
  Inequality pent = make_pentagonal();
  std::vector<Inequality> sample{pent};
  for (int i = 0; i < 3; ++i) {
    std::vector<int> perm{0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    sample.push_back(
        apply_switching(apply_permutation(pent, perm), static_cast<CutMask>(rng() & 0xf)));
  }
  for (const auto& x : sample)
    for (const auto& y : sample) {
      EquivResult res = are_ps_equivalent(x, y);
      REQUIRE(res.equivalent);
      CHECK(apply_witness(x, *res.witness) == y);
    }
}

TEST_CASE("canonical forms collapse the orbit") {
  Inequality pent = make_pentagonal();
  Inequality pent_sw = apply_switching(pent, NodeSet{"2", "4"});
  std::map<std::string, std::string> swap45{{"4", "5"}, {"5", "4"}};
  Inequality pent_perm = apply_permutation(pent, swap45);
  Inequality canon = canonical_form(pent);
  CHECK(canonical_form(pent_sw) == canon);
  CHECK(canonical_form(pent_perm) == canon);

  Inequality aprime = lifted_example(FormKind::UW_V, FormKind::UV_W, FormKind::UV_W);
  Inequality adp = lifted_example(FormKind::WV_U, FormKind::UV_W, FormKind::UVW);
  CHECK(canonical_form(aprime) == canonical_form(adp));
  CHECK(!(canonical_form(zero_lift(make_triangle(), k(5))) == canonical_form(pent)));
}

TEST_CASE("fast bipartite criterion accepts within-side permutations") {
  Inequality pent = make_pentagonal({"A1", "A2", "B1", "B2", "B3"});
  std::map<std::string, std::string> swapA{{"A1", "A2"}, {"A2", "A1"}};
  Inequality pent2 = apply_permutation(pent, swapA);
  CHECK(fast_equiv_bipartite(pent, pent2, 2, 3).equivalent);
  CHECK(fast_equiv_bipartite(pent, apply_switching(pent, NodeSet{"B1"}), 2, 3)
            .equivalent);
}

TEST_CASE("fast bipartite criterion rejects triangles, citing the exclusion") {
  Layout layout = build_bipartite_layout(2, 3);
  Inequality a(layout.source,
               Inequality::CoeffList{{"A1", "A2", Rational(-1)},
                                     {"A1", "B1", Rational(-1)},
                                     {"A2", "B1", Rational(1)}},
               Rational(0));
  Inequality b(layout.source,
               Inequality::CoeffList{{"A1", "B1", Rational(-1)},
                                     {"A1", "B2", Rational(1)},
                                     {"B1", "B2", Rational(-1)}},
               Rational(0));
  CHECK_THROWS_WITH_AS(fast_equiv_bipartite(a, b, 2, 3),
                       doctest::Contains("triangle"), Error);

  // ... while their lifted versions ARE permutation-switching equivalent:
  // the counterexample direction
  Inequality la = eliminate(a, layout.target, layout.plan).output;
  Inequality lb = eliminate(b, layout.target, layout.plan).output;
  Inequality expect_la(layout.target,
                       Inequality::CoeffList{{"A1", "B1", Rational(-1)},
                                             {"A2", "B1", Rational(1)},
                                             {"A1", "B12", Rational(-1)},
                                             {"A2", "B12", Rational(-1)}},
                       Rational(0));
  Inequality expect_lb(layout.target,
                       Inequality::CoeffList{{"A1", "B1", Rational(-1)},
                                             {"A1", "B2", Rational(1)},
                                             {"A12", "B1", Rational(-1)},
                                             {"A12", "B2", Rational(-1)}},
                       Rational(0));
  CHECK(la == expect_la);
  CHECK(lb == expect_lb);
  CHECK(are_ps_equivalent(la, lb).equivalent);
}

TEST_CASE("fast bipartite criterion rejects non-facet inputs") {
  Layout layout = build_bipartite_layout(2, 3);
  Inequality weak(layout.source,
                  Inequality::CoeffList{{"A1", "B1", Rational(1)},
                                        {"A2", "B2", Rational(1)},
                                        {"B1", "B3", Rational(1)},
                                        {"A1", "A2", Rational(1)}},
                  Rational(4));
  CHECK_THROWS_WITH_AS(
      fast_equiv_bipartite(weak, weak, 2, 3), doctest::Contains("facet"), Error);
}

TEST_CASE("permuting a lifted inequality along a target automorphism") {
  Layout layout = build_bipartite_layout(2, 3);
  Inequality lifted =
      eliminate_multistage(make_pentagonal({"A1", "A2", "B1", "B2", "B3"}), layout)
          .result.output;
  std::map<std::string, std::string> swapA{{"A1", "A2"}, {"A2", "A1"}};
  Inequality variant = apply_permutation(lifted, swapA);
  CHECK(!(variant == lifted));
  EquivResult res = are_ps_equivalent(lifted, variant);
  REQUIRE(res.equivalent);
  CHECK(apply_witness(lifted, *res.witness) == variant);
}

TEST_CASE("fast criterion agrees with brute force on lifted pairs") {
  Layout layout = build_bipartite_layout(2, 3);
  Inequality pent = make_pentagonal({"A1", "A2", "B1", "B2", "B3"});
  std::map<std::string, std::string> swapA{{"A1", "A2"}, {"A2", "A1"}};
  std::map<std::string, std::string> mix{{"A1", "B1"}, {"B1", "A1"}};

  std::vector<Inequality> sources{pent, apply_permutation(pent, swapA),
                                  apply_permutation(pent, mix)};
  for (const auto& x : sources)
    for (const auto& y : sources) {
      bool fast = fast_equiv_bipartite(x, y, 2, 3).equivalent;
      Inequality lx = eliminate_multistage(x, layout).result.output;
      Inequality ly = eliminate_multistage(y, layout).result.output;
      bool brute = are_ps_equivalent(lx, ly).equivalent;
      CHECK(fast == brute);
    }
}

TEST_CASE("fast criterion separates the two non-triangle classes on K_6") {
  auto g = shared(
      Graph::complete("K6", {"A1", "A2", "B1", "B2", "B3", "B4"}));
  std::vector<std::string> labels{"A1", "A2", "B1", "B2", "B3", "B4"};
  auto hyp_on = [&](std::vector<long long> b) {
    Inequality::CoeffList cl;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        cl.emplace_back(labels[static_cast<std::size_t>(i)],
                        labels[static_cast<std::size_t>(j)],
                        Rational(b[static_cast<std::size_t>(i)]) *
                            Rational(b[static_cast<std::size_t>(j)]));
    return Inequality(g, cl, Rational(0));
  };
  Inequality pent_lift = hyp_on({1, 1, 1, -1, -1, 0});
  Inequality other = hyp_on({1, 1, 1, 1, -1, -2});
  // both are facets but in different orbits; the criterion must say no
  CHECK(!fast_equiv_bipartite(pent_lift, other, 2, 4).equivalent);
  CHECK(fast_equiv_bipartite(
            pent_lift, apply_switching(pent_lift, NodeSet{"B1", "B3"}), 2, 4)
            .equivalent);
  // and the full search on the shared K_6 agrees that the classes differ
  CHECK(!are_ps_equivalent(pent_lift, other).equivalent);
}

TEST_CASE("budget cap on the orbit search") {
  Layout l33 = build_bipartite_layout(3, 3);
  Inequality big(l33.target);
  CHECK_THROWS_AS(are_ps_equivalent(big, big), CapExceeded);
}
