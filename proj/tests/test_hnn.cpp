#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "garside/builtin.hpp"
#include "garside/error.hpp"
#include "garside/hnn.hpp"
#include "garside/oracle.hpp"
#include "garside/word_engine.hpp"
#include "support.hpp"

using namespace garside;
using hnn::HnnNormalForm;

namespace {

Word H(const char* text) { return hnn::b3_alphabet().parse(text); }
Word V(const char* text) { return hnn::base_alphabet().parse(text); }

}  // namespace

TEST_CASE("B3 HNN normal form examples") {
  CHECK(hnn::b3_hnn_nf(H("a t")) == HnnNormalForm{1, V("b")});
  CHECK(hnn::b3_hnn_nf(H("t")) == HnnNormalForm{1, {}});
  CHECK(hnn::b3_hnn_nf(H("b t")) == HnnNormalForm{1, V("b a^-1")});
  CHECK(hnn::b3_hnn_nf(H("a t^-1")) == HnnNormalForm{-1, V("b^-1 a")});
  CHECK(hnn::b3_hnn_nf(H("b t^-1")) == HnnNormalForm{-1, V("a")});
  CHECK(hnn::b3_hnn_nf({}) == HnnNormalForm{0, {}});
}

TEST_CASE("B3 HNN normal form is invariant under the defining relations") {
  const std::vector<std::pair<Word, Word>> rels{{H("a t"), H("t b")}, {H("b t"), H("t b a^-1")},
                                                {H("t t^-1"), {}}, {H("a^-1 a"), {}}};
  std::mt19937_64 rng(37);
  for (int i = 0; i < 2000; ++i) {
    const Word u = testing::random_word(rng, 3, 8), v = testing::random_word(rng, 3, 8);
    const auto& [l, r] = rels[rng() % rels.size()];
    CHECK(hnn::b3_hnn_nf(concat(u, concat(l, v))) == hnn::b3_hnn_nf(concat(u, concat(r, v))));
  }
}

TEST_CASE("B3 HNN normal form is a fixed point of its own spelling") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 1000; ++i) {
    const auto nf = hnn::b3_hnn_nf(testing::random_word(rng, 3, 12));
    Word spelled(static_cast<std::size_t>(std::abs(nf.p)), nf.p >= 0 ? pos(hnn::kT) : neg(hnn::kT));
    spelled.insert(spelled.end(), nf.v.begin(), nf.v.end());
    CHECK(hnn::b3_hnn_nf(spelled) == nf);
    CHECK(free_reduce(nf.v) == nf.v);
  }
}

TEST_CASE("Burau convention self-test") {
  const auto s1 = builtin::burau_sigma1(), s2 = builtin::burau_sigma2();
  CHECK(s1 * s2 * s1 == s2 * s1 * s2);
  const auto d = s1 * s2 * s1;
  const auto d4 = d * d * d * d;
  CHECK(d4 * s1 == s1 * d4);
  CHECK(d4 * s2 == s2 * d4);
  CHECK_FALSE(s1 * s2 == s2 * s1);
}

TEST_CASE("braid substitution respects the HNN relations") {
  const auto sys = build_system(builtin::dihedral(3));
  const Oracle o(sys, BackendKind::ModularLinear);
  CHECK(o.is_identity(hnn::b3_to_braid(H("a t b^-1 t^-1"))));
  CHECK(o.is_identity(hnn::b3_to_braid(H("b t a b^-1 t^-1"))));
  CHECK_FALSE(o.is_identity(hnn::b3_to_braid(H("a b a^-1 b^-1"))));
}

TEST_CASE("HNN triviality agrees with Burau on short words") {
  const auto sys = build_system(builtin::dihedral(3));
  std::size_t bad = 0, trivial = 0;
  testing::for_each_word_upto(3, 5, [&](const Word& w) {
    const auto nf = hnn::b3_hnn_nf(w);
    const bool t = nf.p == 0 && nf.v.empty();
    trivial += t;
    if (t != word_problem(sys, hnn::b3_to_braid(w), BackendKind::ModularLinear)) ++bad;
  });
  CHECK(bad == 0);
  CHECK(trivial > 1);
}

TEST_CASE("t1 action examples") {
  CHECK(hnn::b4_t1_image(V("b"), 1) == V("b a^-1 b b"));
  CHECK(hnn::b4_t1_image(V("a"), 1) == V("b"));
  CHECK(hnn::b4_t1_image(V("b"), -1) == V("a"));
  std::mt19937_64 rng(43);
  for (int i = 0; i < 300; ++i) {
    const Word w = testing::random_word(rng, 2, 10);
    const auto m = static_cast<std::int64_t>(rng() % 4);
    CHECK(hnn::b4_t1_image(hnn::b4_t1_image(w, m), -m) == free_reduce(w));
  }
}

TEST_CASE("growth rows") {
  const auto rows = hnn::b4_growth(12);
  const std::vector<std::uint64_t> expect{1, 4, 11, 29, 76, 199, 521, 1364};
  for (std::size_t m = 0; m < expect.size(); ++m) CHECK(rows[m].length == expect[m]);
  CHECK(rows[0].alpha_bar == 0);
  CHECK(rows[0].beta == 1);
  CHECK(rows[2].alpha_bar == 3);
  const double phi2 = std::pow((1 + std::sqrt(5.0)) / 2, 2);
  for (std::size_t m = 0; m < rows.size(); ++m) {
    CHECK(rows[m].recurrence_ok);
    CHECK(rows[m].length == rows[m].alpha_bar + rows[m].beta);
    if (m >= 1) CHECK(rows[m].alpha_bar == rows[m - 1].beta);
    if (m >= 2) CHECK(rows[m].rel_err <= 1e-6);
  }
  CHECK(std::abs(static_cast<double>(rows[11].length) / static_cast<double>(rows[10].length) - phi2) < 1e-3);
  for (std::int64_t m = 0; m <= 6; ++m) {
    for (Letter x : hnn::b4_t1_image(V("b"), m)) CHECK((x == neg(hnn::kA) || x == pos(hnn::kB)));
  }
  CHECK_THROWS_AS(hnn::b4_growth(15), Error);
}
