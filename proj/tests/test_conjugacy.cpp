#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "garside/builtin.hpp"
#include "garside/conjugacy.hpp"
#include "garside/error.hpp"
#include "garside/word_engine.hpp"
#include "support.hpp"

using namespace garside;

namespace {

Word W(const GarsideSystem& sys, const char* text) { return sys.alphabet().parse(text); }
NormalForm NF(const GarsideSystem& sys, std::int64_t p, std::initializer_list<const char*> factors) {
  NormalForm nf{p, {}};
  for (const char* f : factors) nf.factors.push_back(simple_by_word(sys, f));
  return nf;
}

bool conjugates_to(const GarsideSystem& sys, const Oracle& o, const Word& from, const Word& g, const Word& to) {
  return o.is_identity(concat(concat(concat(inverse(g), from), g), inverse(to)));
}

}  // namespace

TEST_CASE("cycling and decycling examples") {
  const auto p3 = build_system(builtin::p3());
  CHECK(decycle(p3, NF(p3, 0, {"a", "c"})) == NF(p3, 0, {"c a"}));
  const auto t23 = build_system(builtin::torus(2, 3));
  CHECK(cycle(t23, NF(t23, 0, {"b", "a"})) == NF(t23, 0, {"a", "b"}));
  CHECK_THROWS_AS(cycle(t23, NormalForm{2, {}}), Error);
  CHECK_THROWS_AS(decycle(t23, NormalForm{2, {}}), Error);
}

TEST_CASE("rigidity examples") {
  const auto t23 = build_system(builtin::torus(2, 3));
  CHECK(is_rigid(t23, NF(t23, 0, {"b", "a"})));
  const auto p3 = build_system(builtin::p3());
  CHECK_FALSE(is_rigid(p3, NF(p3, 0, {"a", "c"})));
  const auto i23 = build_system(builtin::dihedral(3));
  CHECK_FALSE(is_rigid(i23, NF(i23, 0, {"a", "b"})));
}

TEST_CASE("cycling then decycling restores rigid forms") {
  for (const auto& def : {builtin::dihedral(3), builtin::p3(), builtin::dual_dihedral(3)}) {
    const auto sys = build_system(def);
    for (const auto& nf : testing::all_normal_forms(sys, 1, 3)) {
      if (!is_rigid(sys, nf)) continue;
      CHECK(decycle(sys, cycle(sys, nf)) == nf);
      CHECK(is_rigid(sys, cycle(sys, nf)));
    }
  }
}

TEST_CASE("element order") {
  const auto t23 = build_system(builtin::torus(2, 3));
  CHECK(element_order(t23, NF(t23, 1, {"a"})) == 1);
  const auto i23 = build_system(builtin::dihedral(3));
  CHECK(element_order(i23, NF(i23, 0, {"a"})) == 2);
  CHECK(element_order(i23, NormalForm{3, {}}) == 1);
}

TEST_CASE("super summit representatives") {
  const auto p3 = build_system(builtin::p3());
  const Oracle op(p3, BackendKind::ModularLinear);
  CHECK(sss_representative(p3, NF(p3, 0, {"a", "c"}), op) == NF(p3, 0, {"c a"}));
  const auto t23 = build_system(builtin::torus(2, 3));
  const Oracle ot(t23, BackendKind::ModularLinear);
  CHECK(sss_representative(t23, NF(t23, 0, {"b b"}), ot) == NF(t23, 0, {"b b"}));
  const auto rigid = NF(t23, 0, {"b", "a"});
  CHECK(sss_representative(t23, rigid, ot) == rigid);
}

TEST_CASE("super summit set enumeration examples") {
  const auto p3 = build_system(builtin::p3());
  const Oracle op(p3, BackendKind::ModularLinear);
  const auto a = sss_enumerate(p3, NF(p3, 0, {"a", "c"}), op);
  CHECK(a.sss == std::set<NormalForm>{NF(p3, 0, {"c a"})});
  const auto t23 = build_system(builtin::torus(2, 3));
  const Oracle ot(t23, BackendKind::ModularLinear);
  const auto b = sss_enumerate(t23, NF(t23, 0, {"a", "b"}), ot);
  CHECK(b.sss.size() <= 2);
  for (const auto& x : b.sss) CHECK((x == NF(t23, 0, {"a", "b"}) || x == NF(t23, 0, {"b", "a"})));
  const auto c = sss_enumerate(t23, NormalForm{3, {}}, ot);
  CHECK(c.sss == std::set<NormalForm>{NormalForm{3, {}}});
}

TEST_CASE("representatives and enumerations match brute saturation") {
  for (const auto& def : {builtin::dihedral(3), builtin::dual_dihedral(3), builtin::torus(2, 3)}) {
    const auto sys = build_system(def);
    const Oracle o(sys, BackendKind::ModularLinear);
    for (const auto& nf : testing::all_normal_forms(sys, 1, 3)) {
      const auto brute = testing::brute_sss(sys, nf);
      const auto rc = sss_representative_with_conjugator(sys, nf, o);
      CHECK(brute.count(rc.nf) == 1);
      CHECK(conjugates_to(sys, o, to_word(sys, nf), rc.conjugator, to_word(sys, rc.nf)));
      const auto data = sss_enumerate(sys, nf, o);
      CHECK(data.sss == brute);
      CHECK(data.inf_s == brute.begin()->inf());
      CHECK(static_cast<std::int64_t>(data.sss.size()) <=
            std::max<std::int64_t>(data.cl_s, 1) * element_order(sys, data.representative));
      for (const auto& e : data.edges) CHECK(conjugate_by_simple(sys, e.from, e.conjugator) == e.to);
    }
  }
}

TEST_CASE("non-rigid inputs reach rigid conjugates with cl at least 2") {
  const auto sys = build_system(builtin::p3());
  const Oracle o(sys, BackendKind::ModularLinear);
  for (const auto& nf : testing::all_normal_forms(sys, 1, 3)) {
    const auto rep = sss_representative(sys, nf, o);
    const auto brute = testing::brute_sss(sys, nf);
    CHECK(brute.count(rep) == 1);
    if (rep.cl() >= 2) CHECK(is_rigid(sys, rep));
  }
}

TEST_CASE("decisions") {
  const auto i23 = build_system(builtin::dihedral(3));
  const Oracle oi(i23, BackendKind::ModularLinear);
  CHECK(decide_conjugacy(i23, W(i23, "a"), W(i23, "b"), oi));
  const auto g = conjugacy_witness(i23, W(i23, "a"), W(i23, "b"), oi);
  REQUIRE(g);
  CHECK(conjugates_to(i23, oi, W(i23, "a"), *g, W(i23, "b")));
  CHECK(conjugacy_witness(i23, W(i23, "a b"), W(i23, "a b"), oi) == Word{});
  const auto p3 = build_system(builtin::p3());
  const Oracle op(p3, BackendKind::ModularLinear);
  CHECK_FALSE(decide_conjugacy(p3, W(p3, "a"), W(p3, "b"), op));
  CHECK_FALSE(conjugacy_witness(p3, W(p3, "a"), W(p3, "b"), op));
}

TEST_CASE("random conjugates are recognised with verified witnesses") {
  std::mt19937_64 rng(47);
  for (const auto& def : {builtin::dihedral(3), builtin::dihedral(4), builtin::p3(), builtin::torus(2, 3)}) {
    const auto sys = build_system(def);
    const Oracle o(sys, BackendKind::Reference);
    for (int i = 0; i < 60; ++i) {
      const Word w = testing::random_word(rng, sys.atom_count(), 10);
      const Word h = testing::random_word(rng, sys.atom_count(), 8);
      const Word v = concat(concat(inverse(h), w), h);
      CHECK(decide_conjugacy(sys, w, v, o));
      CHECK(decide_conjugacy(sys, v, w, o));
      const auto g = conjugacy_witness(sys, w, v, o);
      REQUIRE(g);
      CHECK(conjugates_to(sys, o, w, *g, v));
    }
  }
}

TEST_CASE("longer normal forms reach the super summit set") {
  std::mt19937_64 rng(53);
  for (const auto& def : {builtin::p3(), builtin::dihedral(4)}) {
    const auto sys = build_system(def);
    const Oracle o(sys, BackendKind::Reference);
    auto pool = testing::all_normal_forms(sys, 1, 4);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min<std::size_t>(pool.size(), 150));
    for (const auto& nf : pool) {
      REQUIRE(is_left_greedy(sys, nf));
      const auto brute = testing::brute_sss(sys, nf);
      const auto rc = sss_representative_with_conjugator(sys, nf, o);
      CHECK(brute.count(rc.nf) == 1);
      CHECK(conjugates_to(sys, o, to_word(sys, nf), rc.conjugator, to_word(sys, rc.nf)));
    }
  }
}
