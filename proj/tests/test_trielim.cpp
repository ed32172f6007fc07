#include <doctest.h>

#include <map>

#include "cutlift/catalog.hpp"
#include "cutlift/errors.hpp"
#include "cutlift/trielim.hpp"
#include "cutlift/verify.hpp"
#include "helpers.hpp"

using namespace cutlift;
using namespace cutlift::testing;

namespace {

EliminationPlan example_plan(FormKind f1, FormKind f2, FormKind f3) {
  EliminationPlan plan;
  plan.entries.push_back({"1", "2", "6", f1});
  plan.entries.push_back({"1", "3", "7", f2});
  plan.entries.push_back({"2", "3", "8", f3});
  return plan;
}

Inequality expected_aprime() {
  return Inequality(k3113(),
                    Inequality::CoeffList{{"1", "4", Rational(-1)},
                                          {"1", "5", Rational(-1)},
                                          {"2", "4", Rational(-1)},
                                          {"2", "5", Rational(-1)},
                                          {"3", "4", Rational(1)},
                                          {"3", "5", Rational(1)},
                                          {"4", "5", Rational(1)},
                                          {"1", "6", Rational(1)},
                                          {"2", "6", Rational(-1)},
                                          {"1", "7", Rational(-1)},
                                          {"3", "7", Rational(-1)},
                                          {"2", "8", Rational(-1)},
                                          {"3", "8", Rational(-1)}},
                    Rational(0));
}

Inequality expected_adoubleprime() {
  return Inequality(k3113(),
                    Inequality::CoeffList{{"1", "4", Rational(-1)},
                                          {"1", "5", Rational(-1)},
                                          {"2", "4", Rational(-1)},
                                          {"2", "5", Rational(-1)},
                                          {"3", "4", Rational(1)},
                                          {"3", "5", Rational(1)},
                                          {"4", "5", Rational(1)},
                                          {"1", "6", Rational(-1)},
                                          {"2", "6", Rational(1)},
                                          {"1", "7", Rational(-1)},
                                          {"3", "7", Rational(-1)},
                                          {"2", "8", Rational(1)},
                                          {"3", "8", Rational(1)}},
                    Rational(2));
}

}  // namespace

TEST_CASE("the worked example, both form choices") {
  Inequality pent = make_pentagonal();

  // Delta(1,6;2) = Delta(u,w;v), Delta(1,3;7) and Delta(2,3;8) = Delta(u,v;w)
  EliminationResult r1 =
      eliminate(pent, k3113(), example_plan(FormKind::UW_V, FormKind::UV_W, FormKind::UV_W));
  CHECK(r1.output == expected_aprime());
  CHECK(r1.rhs_shift == 0);

  // Delta(2,6;1) = Delta(w,v;u), Delta(1,3;7), Delta(2,3,8) perimeter
  EliminationResult r2 =
      eliminate(pent, k3113(), example_plan(FormKind::WV_U, FormKind::UV_W, FormKind::UVW));
  CHECK(r2.output == expected_adoubleprime());
  CHECK(r2.rhs_shift == 2);

  // the two eliminations are the {6,8}-switching of each other
  CHECK(apply_switching(r1.output, NodeSet{"6", "8"}) == r2.output);

  // canonical resolution picks exactly the first choice
  EliminationResult canon = eliminate(
      pent, k3113(),
      example_plan(FormKind::Canonical, FormKind::Canonical, FormKind::Canonical));
  CHECK(canon.output == expected_aprime());
  CHECK(canon.plan_used.entries[0].form == FormKind::UW_V);
  CHECK(canon.plan_used.entries[1].form == FormKind::UV_W);
  CHECK(canon.plan_used.entries[2].form == FormKind::UV_W);
}

TEST_CASE("forms that do not cancel are rejected") {
  Inequality pent = make_pentagonal();
  // a_12 = +1 > 0, so Delta(u,v;w) adds +1 on x_12 instead of cancelling
  CHECK_THROWS_WITH_AS(
      eliminate(pent, k3113(),
                example_plan(FormKind::UV_W, FormKind::UV_W, FormKind::UV_W)),
      doctest::Contains("does not cancel"), Error);
}

TEST_CASE("zero-coefficient eliminated edges leave the associated node unused") {
  auto g = k(5);
  Inequality q(g,
               Inequality::CoeffList{{"3", "4", Rational(1)},
                                     {"3", "5", Rational(-1)},
                                     {"4", "5", Rational(-1)},
                                     {"1", "4", Rational(1)}},
               Rational(1));
  EliminationPlan plan;
  plan.entries.push_back({"1", "2", "w1", FormKind::Canonical});
  Graph target = build_trielim_graph(*g, plan, {});
  EliminationResult res = eliminate(q, shared(target), plan);
  CHECK(res.output.coeff("1", "w1") == 0);
  CHECK(res.output.coeff("2", "w1") == 0);
  CHECK(res.output.rhs() == q.rhs());
  CHECK(!support_graph(res.output).has_node("w1"));
}

TEST_CASE("collapse_back undoes canonical eliminations exactly") {
  Inequality pent = make_pentagonal();
  EliminationResult res = eliminate(
      pent, k3113(),
      example_plan(FormKind::Canonical, FormKind::Canonical, FormKind::Canonical));
  CollapseBackResult back = collapse_back(res);
  CHECK(back.preswitched.empty());
  CHECK(back.restored == pent);
}

TEST_CASE("collapse_back signals the perimeter-form switching set") {
  Inequality pent = make_pentagonal();
  EliminationResult res = eliminate(
      pent, k3113(), example_plan(FormKind::WV_U, FormKind::UV_W, FormKind::UVW));
  CollapseBackResult back = collapse_back(res);
  CHECK(back.preswitched == NodeSet{"8"});
  CHECK(back.restored == pent);
}

TEST_CASE("single-edge elimination round-trips for positive coefficients") {
  Inequality pent = make_pentagonal();  // a_12 = +1 > 0
  EliminationPlan plan;
  plan.entries.push_back({"1", "2", "w", FormKind::Canonical});
  Graph target = build_trielim_graph(pent.graph(), plan, {});
  EliminationResult res = eliminate(pent, shared(target), plan);
  CHECK(res.plan_used.entries[0].form == FormKind::UW_V);
  CHECK(collapse_back(res).restored == pent);
}

TEST_CASE("collapse_back on randomized canonical eliminations") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = k(trial % 2 ? 5 : 6);
    Inequality q = random_inequality(g, rng);
    EliminationPlan plan = random_plan(*g, 1 + trial % 4, rng);
    Graph target = build_trielim_graph(*g, plan, random_extra_edges(*g, plan, rng, 25));
    EliminationResult res = eliminate(q, shared(target), plan);
    CollapseBackResult back = collapse_back(res);
    CHECK(back.preswitched.empty());
    CHECK(back.restored == q);
  }
}

TEST_CASE("elimination keeps validity in both directions") {
  std::mt19937 rng(42);
  auto g = k(5);
  int valid_seen = 0, invalid_seen = 0;
  for (int trial = 0; trial < 25; ++trial) {
    Inequality q = random_inequality(g, rng);
    EliminationPlan plan = random_plan(*g, 4, rng);
    Graph target = build_trielim_graph(*g, plan, random_extra_edges(*g, plan, rng, 30));
    REQUIRE(target.node_count() == 9);
    EliminationResult res = eliminate(q, shared(target), plan);
    bool src_valid = is_valid(q);
    (src_valid ? valid_seen : invalid_seen)++;
    CHECK(is_valid(res.output) == src_valid);
  }
  CHECK(valid_seen > 0);
  CHECK(invalid_seen > 0);
}

TEST_CASE("different form choices give switching-equivalent outputs") {
  std::mt19937 rng(77);
  auto g = k(5);
  auto pick_form = [&](const Rational& alpha) {
    if (alpha > 0) return rng() % 2 ? FormKind::UW_V : FormKind::WV_U;
    return rng() % 2 ? FormKind::UV_W : FormKind::UVW;
  };
  for (int trial = 0; trial < 12; ++trial) {
    Inequality q = random_inequality(g, rng);
    EliminationPlan base = random_plan(*g, 3, rng);
    Graph target = build_trielim_graph(*g, base, random_extra_edges(*g, base, rng, 20));

    EliminationPlan p1 = base, p2 = base;
    for (std::size_t i = 0; i < base.entries.size(); ++i) {
      Rational alpha = q.coeff(base.entries[i].u, base.entries[i].v);
      p1.entries[i].form = pick_form(alpha);
      p2.entries[i].form = pick_form(alpha);
    }
    Inequality o1 = eliminate(q, shared(target), p1).output;
    Inequality o2 = eliminate(q, shared(target), p2).output;

    // switching equivalent with the identity permutation
    bool found = false;
    const int n = target.node_count();
    for (CutMask s = 0; s < (CutMask{1} << (n - 1)) && !found; ++s)
      found = apply_switching(o1, s) == o2;
    CHECK(found);
  }
}

TEST_CASE("switching-equivalent inputs eliminate to switching-equivalent outputs") {
  std::mt19937 rng(88);
  auto g = k(5);
  for (int trial = 0; trial < 10; ++trial) {
    Inequality q = random_inequality(g, rng);
    CutMask s = static_cast<CutMask>(rng() & 0xf);
    Inequality q_sw = apply_switching(q, s);
    EliminationPlan plan = random_plan(*g, 3, rng);
    GraphPtr target =
        shared(build_trielim_graph(*g, plan, random_extra_edges(*g, plan, rng, 20)));
    Inequality o1 = eliminate(q, target, plan).output;
    Inequality o2 = eliminate(q_sw, target, plan).output;

    bool found = false;
    const int n = target->node_count();
    for (CutMask t = 0; t < (CutMask{1} << (n - 1)) && !found; ++t)
      found = apply_switching(o1, t) == o2;
    CHECK(found);
  }
}

TEST_CASE("facet conditions for the worked example all pass") {
  Inequality pent = make_pentagonal();
  FacetConditionReport rep = check_facet_conditions(
      pent, *k3113(),
      example_plan(FormKind::Canonical, FormKind::Canonical, FormKind::Canonical));
  CHECK(rep.all_pass());
  CHECK(!rep.violated());
}

TEST_CASE("facet conditions flag the triangle input as not guaranteed") {
  Inequality tri = make_triangle();
  EliminationPlan plan;
  plan.entries.push_back({"1", "2", "w", FormKind::Canonical});
  Graph target = build_trielim_graph(tri.graph(), plan, {});
  FacetConditionReport rep = check_facet_conditions(tri, target, plan);
  CHECK(rep.input_facet.state == ConditionState::Pass);
  CHECK(rep.support.state == ConditionState::NotVerified);
  CHECK(rep.support.detail.find("not guaranteed") != std::string::npos);
  CHECK(!rep.all_pass());
  CHECK(!rep.violated());
}

TEST_CASE("an edge between associated nodes violates condition (ii)") {
  Inequality pent = make_pentagonal();
  EliminationPlan plan;
  plan.entries.push_back({"1", "2", "w1", FormKind::Canonical});
  plan.entries.push_back({"3", "4", "w2", FormKind::Canonical});
  Graph target = build_trielim_graph(pent.graph(), plan, {{"w1", "w2"}});
  FacetConditionReport rep = check_facet_conditions(pent, target, plan);
  CHECK(rep.neighborhoods.state == ConditionState::Fail);
  CHECK(rep.w_independent.state == ConditionState::Fail);
  CHECK(rep.violated());
}

TEST_CASE("multistage elimination through the bipartite layout") {
  Layout layout = build_bipartite_layout(2, 3);
  Inequality pent = make_pentagonal({"A1", "A2", "B1", "B2", "B3"});
  MultistageResult ms = eliminate_multistage(pent, layout);

  CHECK(ms.stages.size() == 2);
  CHECK(ms.result.output.graph() == *layout.target);
  // all four eliminated edges have nonzero coefficients, so all four
  // associated nodes carry support
  Graph supp = support_graph(ms.result.output);
  for (const char* w : {"B12", "A12", "A13", "A23"}) CHECK(supp.has_node(w));
  CHECK(supp.node_count() == 9);

  // staged composition equals the one-shot elimination
  EliminationResult oneshot = eliminate(pent, layout.target, layout.plan);
  CHECK(ms.result.output == oneshot.output);

  // intermediate graphs follow the join construction
  CHECK(ms.stages[0].graph->node_count() == 6);
  CHECK(ms.stages[0].graph->edge_count() == 10 - 1 + 5);
  CHECK(ms.stages[1].graph->node_count() == 9);
}

TEST_CASE("multistage elimination reproduces the example inequality") {
  KPartiteGroup g1, g2, g3;
  g1.members = {"1", "2", "3"};
  g1.v_part = 1;
  g1.w_part = 4;
  g1.w_labels = {"6", "7", "8"};
  g2.members = {"4"};
  g2.v_part = 2;
  g3.members = {"5"};
  g3.v_part = 3;
  Layout layout = build_kpartite_layout({g1, g2, g3}, 4);

  MultistageResult ms = eliminate_multistage(make_pentagonal(), layout);
  CHECK(ms.result.output == expected_aprime());
}

TEST_CASE("multistage rejects triangles and small sources") {
  Layout layout = build_bipartite_layout(2, 3);
  Inequality tri = zero_lift(make_triangle(), k(5));
  // relabel onto the layout's source labels
  Inequality tri_ab(layout.source,
                    Inequality::CoeffList{{"A1", "A2", Rational(1)},
                                          {"A1", "B1", Rational(-1)},
                                          {"A2", "B1", Rational(-1)}},
                    Rational(0));
  CHECK_THROWS_WITH_AS(eliminate_multistage(tri_ab, layout),
                       doctest::Contains("triangle"), Error);
  CHECK_THROWS_AS(eliminate_multistage(tri, layout), Error);
}

TEST_CASE("the elimination identity holds as a formal linear expression") {
  // output - input = sum_i |a_i| * form_i, checked edge by edge over the
  // union of both edge sets
  std::mt19937 rng(17);
  auto g = k(5);
  for (int trial = 0; trial < 15; ++trial) {
    Inequality q = random_inequality(g, rng);
    EliminationPlan plan = random_plan(*g, 2 + trial % 3, rng);
    GraphPtr target =
        shared(build_trielim_graph(*g, plan, random_extra_edges(*g, plan, rng, 20)));
    EliminationResult res = eliminate(q, target, plan);

    std::map<std::pair<std::string, std::string>, Rational> lhs, rhs_sum;
    auto add = [](auto& m, const std::string& a, const std::string& b,
                  const Rational& c) { m[ekey(a, b)] += c; };
    for (int e = 0; e < target->edge_count(); ++e) {
      const auto& edge = target->edges()[e];
      add(lhs, target->label(edge.u), target->label(edge.v), res.output.coeff(e));
    }
    for (int e = 0; e < g->edge_count(); ++e) {
      const auto& edge = g->edges()[e];
      add(lhs, g->label(edge.u), g->label(edge.v), -q.coeff(e));
    }
    Rational const_lhs = -res.output.rhs() + q.rhs();

    Rational const_rhs = 0;
    for (const auto& entry : res.plan_used.entries) {
      Rational mag = abs(q.coeff(entry.u, entry.v));
      FormExpansion exp = expand_form({entry.form, entry.u, entry.v, entry.w});
      for (const auto& [a, b, c] : exp.terms) add(rhs_sum, a, b, mag * c);
      const_rhs -= mag * exp.rhs;
    }

    for (const auto& [key, val] : lhs) CHECK(val == rhs_sum[key]);
    for (const auto& [key, val] : rhs_sum) CHECK(val == lhs[key]);
    CHECK(const_lhs == const_rhs);
    // and the output never touches an eliminated edge
    for (const auto& entry : res.plan_used.entries)
      CHECK(target->edge_index(entry.u, entry.v) < 0);
  }
}

TEST_CASE("facet preservation end-to-end through validated layouts") {
  Layout bip = build_bipartite_layout(2, 3);
  std::mt19937 rng(61);
  std::vector<int> perm{0, 1, 2, 3, 4};
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    Inequality src =
        apply_permutation(make_pentagonal({"A1", "A2", "B1", "B2", "B3"}), perm);
    REQUIRE(is_facet(src).facet);
    Inequality lifted = eliminate_multistage(src, bip).result.output;
    CHECK(is_facet(lifted).facet);
  }

  // single-stage random targets whose condition report fully passes
  Inequality pent = make_pentagonal();
  for (int trial = 0; trial < 3; ++trial) {
    EliminationPlan plan = random_plan(pent.graph(), 2, rng);
    GraphPtr target = shared(build_trielim_graph(
        pent.graph(), plan, random_extra_edges(pent.graph(), plan, rng, 30)));
    FacetConditionReport rep = check_facet_conditions(pent, *target, plan);
    if (!rep.all_pass()) continue;
    CHECK(is_facet(eliminate(pent, target, plan).output).facet);
  }
}

TEST_CASE("prune flag drops unused associated nodes") {
  Layout layout = build_bipartite_layout(2, 3);
  // support on 4 nodes, zero coefficient on B2B3 (associated node A23)
  Inequality q(layout.source,
               Inequality::CoeffList{{"A1", "A2", Rational(1)},
                                     {"A1", "B1", Rational(-1)},
                                     {"A2", "B2", Rational(-1)},
                                     {"B1", "B2", Rational(1)}},
               Rational(1));
  MultistageResult pruned = eliminate_multistage(q, layout, true);
  CHECK(!pruned.result.output.graph().has_node("A23"));
  CHECK(!pruned.result.output.graph().has_node("A13"));
  CHECK(pruned.result.output.graph().has_node("A12"));
  CHECK(pruned.result.output.graph().has_node("B12"));

  MultistageResult full = eliminate_multistage(q, layout, false);
  CHECK(full.result.output.graph().has_node("A23"));
  CHECK(!support_graph(full.result.output).has_node("A23"));
}
