#include "doctest.h"
#include "hopf/catalog.hpp"
#include "hopf/nichols.hpp"

#include <algorithm>
#include <numeric>

using namespace hopf;

TEST_SUITE("nichols") {
  const FieldSpec qr = FieldSpec::preset("Qr");

  TEST_CASE("braid equation") {
    CHECK(check_braid_equation(paper_va_space(qr)));
    CHECK(check_braid_equation(flip_space(qr, 2)));
    // c(e0 e0) = e0 e0 + e0 e1 fails the braid equation.
    const BraidedVectorSpace bad{qr, {"p", "q"}, ExactMatrix::from_ints(qr, {{1, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}})};
    CHECK_FALSE(check_braid_equation(bad));
    CHECK_THROWS_AS(symmetrizer(bad, 3), std::logic_error);
    // A diagonal rescaling of the flip is still a braiding.
    const BraidedVectorSpace diag{qr, {"p", "q"}, ExactMatrix::from_ints(qr, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 2}})};
    CHECK(check_braid_equation(diag));
  }

  TEST_CASE("symmetric and exterior algebras") {
    const SymmetrizerReport sym = nichols_dims(flip_space(qr, 2), 4);
    CHECK(sym.ranks == std::vector<std::size_t>{1, 2, 3, 4, 5});
    const SymmetrizerReport ext = nichols_dims(flip_space(qr, 2, -1), 4);
    CHECK(ext.ranks == std::vector<std::size_t>{1, 2, 1, 0, 0});
    CHECK(ext.terminated);
    CHECK(ext.total == 4);
  }

  TEST_CASE("lifts do not depend on the reduced word") {
    const BraidedVectorSpace va = paper_va_space(qr);
    std::vector<std::size_t> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    int count = 0;
    do {
      const auto left = reduced_word(perm, false);
      const auto right = reduced_word(perm, true);
      CHECK(left.size() == right.size());
      CHECK(braid_lift(va, 4, left) == braid_lift(va, 4, right));
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(count == 24);
    for (std::size_t n = 2; n <= 4; ++n) CHECK(symmetrizer(va, n) == symmetrizer_bruteforce(va, n));
  }

  TEST_CASE("derived braidings") {
    HopfAlgebra h(build_catalog("Atilde", qr, preset_parameters(qr, "0,0")));
    const HopfPresentation& p = h.presentation();
    const NcPoly x = p.element("x"), a = p.gen("a"), F = p.gen("F");
    const auto va = braiding_from_yd(h, YdComponent{Word::letter(p.letter("a")), {x, a * x * a * a}, {"u", "v"}});
    CHECK(va.braiding == paper_va_space(qr).braiding);
    const auto vb = braiding_from_yd(h, YdComponent{Word::letter(p.letter("b")), {p.element("y")}, {"y"}});
    CHECK(vb.braiding == flip_space(qr, 1, -1).braiding);
    const auto v1 = braiding_from_yd(h, YdComponent{Word{}, {p.element("x2x3"), F * F * F}, {"w1", "w2"}});
    CHECK(v1.braiding == flip_space(qr, 2).braiding);
  }

  TEST_CASE("relations of B(V_a)") {
    const BraidedVectorSpace va = paper_va_space(qr);
    const std::vector<TensorRelation> rels{{{1, {0, 0, 0}}},
                                           {{1, {1, 1, 1}}},
                                           {{1, {0, 0, 1}}, {1, {0, 1, 0}}, {1, {1, 0, 0}}},
                                           {{1, {0, 0}}, {1, {0, 1}}, {1, {1, 1}}}};
    CHECK(check_relations_in_kernel(va, rels).ok());
    CHECK_FALSE(check_relations_in_kernel(va, {{{1, {0, 1}}}}).ok());
  }

  TEST_CASE("dimension of B(V_a)") {
    const VaAdjudication adj = adjudicate_va(paper_va_space(qr), 6);
    CHECK(adj.dims.ranks == std::vector<std::size_t>{1, 2, 3, 2, 1, 0, 0});
    CHECK(adj.dims.total == 9);
    CHECK(adj.dims.terminated);
    CHECK(adj.displayed_rank_by_degree.at(4) == 1);
    CHECK(adj.displayed_count_by_degree.at(4) == 2);
  }

  TEST_CASE("characteristic caveat") {
    const FieldSpec f7 = FieldSpec::preset("F7");
    CHECK_FALSE(nichols_dims(flip_space(f7, 1), 6).characteristic_caveat);
    CHECK(nichols_dims(flip_space(f7, 1), 7).characteristic_caveat);
  }
}
