#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "garside/builtin.hpp"
#include "garside/error.hpp"
#include "garside/normal_form.hpp"
#include "garside/oracle.hpp"
#include "garside/word_engine.hpp"
#include "support.hpp"

using namespace garside;

namespace {

const GarsideSystem& t23() {
  static const auto sys = build_system(builtin::torus(2, 3));
  return sys;
}

Word W(const GarsideSystem& sys, const char* text) { return sys.alphabet().parse(text); }
PositiveWord P(const GarsideSystem& sys, const char* text) { return sys.alphabet().parse_positive(text); }
NormalForm NF(const GarsideSystem& sys, std::int64_t p, std::initializer_list<const char*> factors) {
  NormalForm nf{p, {}};
  for (const char* f : factors) nf.factors.push_back(simple_by_word(sys, f));
  return nf;
}

}  // namespace

TEST_CASE("greedy reference examples") {
  const auto& s = t23();
  CHECK(greedy_reference(s, W(s, "b a b b a a b a b b")) == NormalForm{4, {}});
  CHECK(greedy_reference(s, {}) == NormalForm{0, {}});
  CHECK(greedy_reference(s, W(s, "a^-1 b")) == NF(s, -1, {"a", "b"}));
}

TEST_CASE("stage b") {
  const auto& s = t23();
  CHECK(stage_fb(s, W(s, "a^-1 b")) == StageBOutput{1, P(s, "a b")});
  CHECK(stage_fb(s, W(s, "b^-1 a^-1")) == StageBOutput{2, P(s, "b b a")});
  CHECK(stage_fb(s, W(s, "a b b")) == StageBOutput{0, P(s, "a b b")});
}

TEST_CASE("stage c") {
  const auto& s = t23();
  for (auto kind : {BackendKind::Reference, BackendKind::ModularLinear}) {
    const Oracle o(s, kind);
    CHECK(stage_fc(s, 0, P(s, "b a b b a a b a b b"), o) == StageCOutput{0, {}, 4});
    CHECK(stage_fc(s, 1, P(s, "a b"), o) == StageCOutput{1, P(s, "a b"), 0});
    CHECK(stage_fc(s, 0, P(s, "a a"), o) == StageCOutput{0, {}, 1});
  }
}

TEST_CASE("stage d") {
  const auto& s = t23();
  CHECK(stage_fd(s, 1, P(s, "a b"), 0) == NF(s, -1, {"a", "b"}));
  CHECK(stage_fd(s, 0, P(s, "b b"), 0) == NF(s, 0, {"b b"}));
  CHECK(stage_fd(s, 3, {}, 5) == NormalForm{2, {}});
}

TEST_CASE("lnf examples") {
  const auto& s = t23();
  const Oracle o(s, BackendKind::ModularLinear);
  CHECK(lnf(s, W(s, "b a b b a a b a b b"), o) == NormalForm{4, {}});
  CHECK(lnf(s, W(s, "a^-1 b"), o) == NF(s, -1, {"a", "b"}));
  const auto p3 = build_system(builtin::p3());
  const Oracle op(p3, BackendKind::Reference);
  CHECK(lnf(p3, W(p3, "a c"), op) == NF(p3, 0, {"a", "c"}));
  CHECK(lnf(s, W(s, "a a^-1"), o, true) == NormalForm{0, {}});
}

TEST_CASE("lnf output is left-greedy and represents the input") {
  std::mt19937_64 rng(17);
  for (const auto& def : {builtin::torus(2, 3), builtin::dihedral(3), builtin::dual_dihedral(3), builtin::p3()}) {
    const auto sys = build_system(def);
    const Oracle o(sys, BackendKind::ModularLinear);
    for (int i = 0; i < 300; ++i) {
      const Word w = testing::random_word(rng, sys.atom_count(), 24);
      const NormalForm nf = lnf(sys, w, o);
      CHECK(is_left_greedy(sys, nf));
      CHECK(o.is_identity(concat(to_word(sys, nf), inverse(w))));
    }
  }
}

TEST_CASE("normal form is invariant under defining relations") {
  std::mt19937_64 rng(19);
  for (const auto& def : {builtin::torus(2, 3), builtin::dihedral(3), builtin::p3()}) {
    const auto sys = build_system(def);
    const Oracle o(sys, BackendKind::Reference);
    const auto rels = testing::relations_of(def);
    for (int i = 0; i < 300; ++i) {
      const Word u = testing::random_word(rng, sys.atom_count(), 8);
      const Word v = testing::random_word(rng, sys.atom_count(), 8);
      const auto& [l, r] = rels[rng() % rels.size()];
      Word lw = u, rw = u;
      for (auto x : l) lw.push_back(pos(x));
      for (auto x : r) rw.push_back(pos(x));
      lw.insert(lw.end(), v.begin(), v.end());
      rw.insert(rw.end(), v.begin(), v.end());
      CHECK(lnf(sys, lw, o) == lnf(sys, rw, o));
      CHECK(lnf(sys, concat(u, concat({pos(0), neg(0)}, v)), o) == lnf(sys, concat(u, v), o));
    }
  }
}

TEST_CASE("normalize and tau") {
  const auto sys = build_system(builtin::dihedral(3));
  CHECK(normalize(sys, 0, {sys.delta()}) == NormalForm{1, {}});
  CHECK(normalize(sys, 0, {simple_by_word(sys, "a"), simple_by_word(sys, "b")}) == NF(sys, 0, {"a b"}));
  const auto nf = NF(sys, 1, {"a"});
  CHECK(tau_nf(sys, nf, 1) == NF(sys, 1, {"b"}));
  CHECK(tau_nf(sys, nf, 2) == nf);
}

TEST_CASE("render and parse round trip") {
  const auto& s = t23();
  const auto nf = NF(s, -1, {"a", "b"});
  CHECK(render(s, nf) == "p=-1 factors=a,b");
  CHECK(parse_normal_form(s, render(s, nf)) == nf);
  CHECK(render(s, NormalForm{0, {}}) == "p=0 factors=");
  CHECK_THROWS_AS(parse_normal_form(s, "p=x"), Error);
}
