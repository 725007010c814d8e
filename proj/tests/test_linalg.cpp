#include "doctest.h"
#include "hopf/linalg.hpp"

#include <algorithm>
#include <random>

using namespace hopf;

TEST_SUITE("linalg") {
  TEST_CASE("rank and nullspace") {
    const FieldSpec q = FieldSpec::rational();
    const ExactMatrix m = ExactMatrix::from_ints(q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(m) == 2);
    const auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(m.apply(ns[0]) == Vector(3, FieldElement::zero(q)));
  }

  TEST_CASE("characteristic matters") {
    // det = 7 vanishes over F7 only.
    const std::vector<std::vector<long>> rows{{2, 1}, {1, 4}};
    CHECK(rank(ExactMatrix::from_ints(FieldSpec::rational(), rows)) == 2);
    CHECK(rank(ExactMatrix::from_ints(FieldSpec::preset("F7"), rows)) == 1);
  }

  TEST_CASE("rank is invariant under row shuffles") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-2, 2);
    const FieldSpec f = FieldSpec::preset("Qr");
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::vector<long>> rows(5, std::vector<long>(4));
      for (auto& r : rows)
        for (auto& v : r) v = d(rng);
      const std::size_t r0 = rank(ExactMatrix::from_ints(f, rows));
      std::shuffle(rows.begin(), rows.end(), rng);
      CHECK(rank(ExactMatrix::from_ints(f, rows)) == r0);
    }
  }

  TEST_CASE("sparse dependencies") {
    const FieldSpec q = FieldSpec::rational();
    using SV = SparseVector<int>;
    const std::vector<SV> vs{{{0, FieldElement(q, 1)}, {1, FieldElement(q, 1)}},
                             {{1, FieldElement(q, 1)}},
                             {{0, FieldElement(q, 2)}}};
    const auto rel = linear_dependencies(q, vs);
    REQUIRE(rel.size() == 1);
    CHECK(rel[0] == Vector{FieldElement(q, 1), FieldElement(q, -1), FieldElement(q, mpq_class(-1, 2))});
    SparseSpan<int> span(q);
    CHECK(span.insert(vs[0]));
    CHECK(span.insert(vs[1]));
    CHECK_FALSE(span.insert(vs[2]));
    CHECK(span.dimension() == 2);
  }
}
