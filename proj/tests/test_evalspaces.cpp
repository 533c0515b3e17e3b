// Omnichrome colorings, the infinity-evaluation, and graded dimensions of
// the evaluation state spaces, checked against hand computations, a
// brute-force coloring oracle, and the published single-web ranks.

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "glzero/evalspaces.hpp"

using namespace glzero;
using namespace glzero::evalspaces;
using webs::AnnularWeb;
using webs::BraidWord;
using webs::parse_braid;
using webs::resolution_from_mask;
using webs::resolve;

namespace {

AnnularWeb make_web(const std::string& braid, int strands, unsigned long mask) {
  BraidWord b = parse_braid(braid, strands);
  return resolve(b, resolution_from_mask(b.n(), mask));
}

PigmentPoly X(std::size_t k, std::size_t i) { return PigmentPoly::variable(k, i); }

// Exhaustive oracle: try every pigment assignment to thin edges.
std::vector<std::vector<int>> brute_colorings(const AnnularWeb& w) {
  const int E = w.thin_count(), k = w.strands();
  std::vector<std::vector<int>> out;
  std::vector<int> a(E, 0);
  while (true) {
    if (coloring_valid(w, {a})) out.push_back(a);
    int i = 0;
    while (i < E && ++a[i] == k) {
      a[i] = 0;
      ++i;
    }
    if (i == E) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> thin_sets(const std::vector<Coloring>& cs) {
  std::vector<std::vector<int>> out;
  for (const auto& c : cs) out.push_back(c.thin);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("omnichrome colorings match the exhaustive oracle") {
  for (auto [braid, k, mask] : std::vector<std::tuple<std::string, int, unsigned long>>{
           {"", 1, 0},        // unknot
           {"", 2, 0},        // two circles
           {"1", 2, 0},       // one dumbbell
           {"1 1", 2, 0},     // two stacked dumbbells
           {"1 2", 3, 0},     // dumbbell chain on three strands
           {"1 -2 1 -2", 3, 0b1010}  // fully singular figure-eight
       }) {
    AnnularWeb w = make_web(braid, k, mask);
    auto got = omnichrome_colorings(w);
    CHECK(thin_sets(got) == brute_colorings(w));
  }
  CHECK(omnichrome_colorings(make_web("", 1, 0)).size() == 1);
  CHECK(omnichrome_colorings(make_web("", 2, 0)).size() == 2);
}

TEST_CASE("split denominator worked example") {
  // Two splits of a full triple: {X2,X3}/{X1} and {X1,X2}/{X3} (pigments
  // 0-based in code). The four factors and the regrouped square form.
  auto q = split_denominator(3, {{{1, 2}, {0}}, {{0, 1}, {2}}});
  auto expected = (X(3, 2) - X(3, 0)) * (X(3, 1) - X(3, 2)) * (X(3, 0) - X(3, 2)) *
                  (X(3, 1) - X(3, 0));
  CHECK(q == expected);
  auto regrouped = (X(3, 2) - X(3, 1)) * (X(3, 1) - X(3, 0)) * (X(3, 2) - X(3, 0)) *
                   (X(3, 2) - X(3, 0));
  CHECK(q == regrouped);

  CHECK(split_denominator(2, {{{0}, {1}}}) == -split_denominator(2, {{{1}, {0}}}));
}

TEST_CASE("coloring evaluation on the one-dumbbell web") {
  AnnularWeb w = make_web("1", 2, 0);
  auto cs = omnichrome_colorings(w);
  REQUIRE(cs.size() == 2);
  // Edges: 0 = inner incoming, 1 = inner outgoing, 2 = outer incoming,
  // 3 = outer outgoing (of the dumbbell).
  CHECK(cs[0].thin == std::vector<int>{0, 0, 1, 1});
  CHECK(cs[1].thin == std::vector<int>{1, 1, 0, 0});

  auto unitev = eval_coloring(w, {}, cs[0]);
  CHECK(unitev.num == PigmentPoly::one(2));
  CHECK(unitev.den == X(2, 0) - X(2, 1));
  CHECK(eval_coloring(w, {}, cs[1]).den == X(2, 1) - X(2, 0));
  CHECK(eval_coloring(w, {0, 1}, cs[0]).num == X(2, 0));
  CHECK(eval_coloring(w, {0, 1}, cs[1]).num == X(2, 1));

  // Summed evaluations: the unit decoration cancels, one dot on either
  // lower edge gives 1, on either upper edge -1.
  PairingEvaluator ev(w);
  CHECK(eval_infty(ev, {}).is_zero());
  CHECK(eval_infty(ev, {0, 1}) == PigmentPoly::one(2));
  CHECK(ev.pair_monomial({1, 0, 0, 0}) == Rat(1));
  CHECK(ev.pair_monomial({0, 1, 0, 0}) == Rat(1));
  CHECK(ev.pair_monomial({0, 0, 1, 0}) == Rat(-1));
  CHECK(ev.pair_monomial({0, 0, 0, 1}) == Rat(-1));
}

TEST_CASE("evaluation on circles") {
  AnnularWeb w = make_web("", 1, 0);
  CHECK(eval_infty(w, {}) == PigmentPoly::one(1));
  CHECK(eval_infty(w, {3}) == PigmentPoly::variable(1, 0, 3));
  CHECK(eval_gl1(w, {}) == Rat(1));
  CHECK(eval_gl1(w, {1}) == Rat(0));
  CHECK(eval_gl1(w, {4}) == Rat(0));
}

TEST_CASE("infinity evaluation is a symmetric homogeneous polynomial") {
  std::vector<std::size_t> allvars;
  for (int k = 2; k <= 3; ++k) {
    allvars.assign(k, 0);
    std::iota(allvars.begin(), allvars.end(), 0);
    std::vector<std::vector<int>> words{{}};
    for (int g = 1; g < k; ++g)
      for (int sgn : {g, -g}) {
        words.push_back({sgn});
        for (int g2 = 1; g2 < k; ++g2)
          for (int sgn2 : {g2, -g2}) words.push_back({sgn, sgn2});
      }
    for (const auto& letters : words) {
      BraidWord b;
      b.strands = k;
      b.letters = letters;
      for (unsigned long m = 0; m < (1ul << b.n()); ++m) {
        AnnularWeb w = resolve(b, resolution_from_mask(b.n(), m));
        PairingEvaluator ev(w);
        const int s = w.dumbbell_count();
        for (int d = 0; d <= 2; ++d)
          for (const auto& T : monomials_of_degree(w.thin_count(), d)) {
            PigmentPoly p = eval_infty(ev, T);  // no throw: denominators clear
            CHECK(p.symmetric_in(allvars));
            if (!p.is_zero()) CHECK(p.total_degree() == d - s);
          }
      }
    }
  }
}

TEST_CASE("section symmetric functions annihilate the pairing") {
  for (auto [braid, k, mask] : std::vector<std::tuple<std::string, int, unsigned long>>{
           {"1", 2, 0}, {"1 1 1", 2, 0}, {"1 2", 3, 0}}) {
    AnnularWeb w = make_web(braid, k, mask);
    PairingEvaluator ev(w);
    const int s = w.dumbbell_count(), E = w.thin_count();
    for (int gap : {0, 1})
      for (int a = 0; a + 1 <= s; ++a)
        for (const auto& S : monomials_of_degree(E, a))
          for (const auto& T : monomials_of_degree(E, s - 1 - a)) {
            Rat total(0);
            for (int h = 1; h <= k; ++h) {
              Decoration U(E, 0);
              for (int e = 0; e < E; ++e) U[e] = S[e] + T[e];
              U[w.edge_at(h, gap)] += 1;
              total += ev.pair_monomial(U);
            }
            CHECK(total == Rat(0));
          }
  }
}

TEST_CASE("graded dimensions of the plain quotient") {
  CHECK(gl1_dims(make_web("", 1, 0)) == GradedDims{{0, 1}});
  CHECK(gl1_dims(make_web("", 2, 0)) == GradedDims{{0, 1}});
  CHECK(gl1_dims(make_web("1", 2, 0)) == GradedDims{{-1, 1}, {1, 1}});
  // Chain on three strands: dimensions pair off symmetrically.
  GradedDims d3 = gl1_dims(make_web("1 2", 3, 0));
  int total = 0;
  for (auto [deg, dim] : d3) {
    CHECK(d3.at(-deg) == dim);
    total += dim;
  }
  CHECK(total > 0);
  // A degree bound truncates from above.
  CHECK(gl1_dims(make_web("1", 2, 0), 0) == GradedDims{{-1, 1}});
}

TEST_CASE("graded dimensions of the basepoint-twisted quotient") {
  CHECK(gl0_dims(make_web("", 1, 0)) == GradedDims{{0, 1}});      // phi is the identity
  CHECK(gl0_dims(make_web("", 2, 0)).empty());                    // disconnected
  CHECK(gl0_dims(make_web("1", 2, 0)) == GradedDims{{0, 1}});     // dumbbell chain
  CHECK(gl0_dims(make_web("1 2", 3, 0)) == GradedDims{{0, 1}});   // dumbbell chain
  CHECK(gl0_dims(make_web("1 1 1", 2, 0)) ==
        GradedDims{{-2, 1}, {0, 2}, {2, 1}});                     // all-singular trefoil
  CHECK(gl0_dims(make_web("1 -2 1 -2", 3, 0b1010)) ==
        GradedDims{{-2, 1}, {0, 3}, {2, 1}});                     // all-singular figure-eight
}

TEST_CASE("trefoil cube state dimensions per vertex and per column") {
  BraidWord b = parse_braid("1 1 1", 2);
  std::map<int, GradedDims> columns;  // homological degree -> shifted dims
  for (unsigned long m = 0; m < 8; ++m) {
    AnnularWeb w = resolve(b, resolution_from_mask(3, m));
    GradedDims dims = gl0_dims(w);
    int hdeg = static_cast<int>(__builtin_popcountl(m));
    switch (hdeg) {
      case 0:
        CHECK(dims == GradedDims{{-2, 1}, {0, 2}, {2, 1}});
        break;
      case 1:
        CHECK(dims == GradedDims{{-1, 1}, {1, 1}});
        break;
      case 2:
        CHECK(dims == GradedDims{{0, 1}});
        break;
      case 3:
        CHECK(dims.empty());
        break;
    }
    for (auto [d, v] : dims) columns[hdeg][d - hdeg] += v;
  }
  CHECK(columns[0] == GradedDims{{-2, 1}, {0, 2}, {2, 1}});
  CHECK(columns[1] == GradedDims{{-2, 3}, {0, 3}});
  CHECK(columns[2] == GradedDims{{-2, 3}});
  CHECK(columns.count(3) == 0);
}

TEST_CASE("figure-eight cube state dimensions per column") {
  BraidWord b = parse_braid("1 -2 1 -2", 3);
  std::map<int, GradedDims> columns;
  int connected_with_states = 0;
  for (unsigned long m = 0; m < 16; ++m) {
    AnnularWeb w = resolve(b, resolution_from_mask(4, m));
    GradedDims dims = gl0_dims(w);
    bool connected = webs::components(w) == 1;
    CHECK((dims.empty() ? 0 : 1) == (connected ? 1 : 0));
    if (!dims.empty()) ++connected_with_states;
    int hdeg = static_cast<int>(__builtin_popcountl(m)) - b.n_minus();
    for (auto [d, v] : dims) columns[hdeg][d - hdeg] += v;
  }
  CHECK(connected_with_states == 9);
  CHECK(columns.count(-2) == 0);
  CHECK(columns[-1] == GradedDims{{0, 2}, {2, 2}});
  CHECK(columns[0] == GradedDims{{-2, 1}, {0, 7}, {2, 1}});
  CHECK(columns[1] == GradedDims{{-2, 2}, {0, 2}});
  CHECK(columns.count(2) == 0);
}

TEST_CASE("both basepoint twists agree and embed into the plain quotient") {
  std::vector<std::pair<std::string, int>> braids{{"1 1 1", 2}, {"1 -2 1 -2", 3}};
  for (const auto& [text, k] : braids) {
    BraidWord b = parse_braid(text, k);
    for (unsigned long m = 0; m < (1ul << b.n()); ++m) {
      AnnularWeb w = resolve(b, resolution_from_mask(b.n(), m));
      GradedDims marked = gl0_dims(w, -1, PhiStyle::marked_power);
      CHECK(marked == gl0_dims(w, -1, PhiStyle::dots_below));
      GradedDims plain = gl1_dims(w);
      for (auto [d, v] : marked) {
        auto it = plain.find(d + (k - 1));
        REQUIRE(it != plain.end());
        CHECK(v <= it->second);
      }
    }
  }
}
