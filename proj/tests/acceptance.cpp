#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "garside/axioms.hpp"
#include "garside/builtin.hpp"
#include "garside/conjugacy.hpp"
#include "garside/error.hpp"
#include "garside/geodesic.hpp"
#include "garside/hnn.hpp"
#include "garside/normal_form.hpp"
#include "garside/oracle.hpp"
#include "garside/pipeline.hpp"
#include "garside/stages.hpp"
#include "garside/word_engine.hpp"
#include "support.hpp"

using namespace garside;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

Outcome nf_delta_power() {
  const auto sys = build_system(builtin::torus(2, 3));
  const Oracle oracle(sys, BackendKind::ModularLinear);
  const auto nf = lnf(sys, sys.alphabet().parse("b a b b a a b a b b"), oracle);
  return {nf.p == 4 && nf.factors.empty(), render(sys, nf)};
}

Outcome simple_counts() {
  const auto t23 = build_system(builtin::torus(2, 3));
  std::set<std::string> proper;
  for (SimpleId s = 1; s + 1 < t23.simple_count(); ++s) proper.insert(render_simple(t23, s));
  const auto bad = build_system(builtin::nonspindle_b3());
  const bool not_spindle = std::holds_alternative<SpindleWitness>(spindle_check(bad));
  std::ostringstream d;
  d << "T(2,3) simples=" << t23.simple_count() << " proper={";
  for (const auto& w : proper) d << ' ' << w;
  d << " } fixture simples=" << bad.simple_count() << " fixture spindle=" << (not_spindle ? "no" : "yes");
  const bool pass = t23.simple_count() == 5 && proper == std::set<std::string>{"a", "b", "bb"} &&
                    bad.simple_count() == 8 && not_spindle;
  return {pass, d.str()};
}

Outcome oracle_equivalence() {
  const std::vector<SystemDef> defs{builtin::torus(2, 3), builtin::dihedral(3), builtin::dual_dihedral(3),
                                    builtin::p3()};
  std::mt19937_64 rng(20261015);
  std::size_t checked = 0, bad = 0, modular_checked = 0, modular_bad = 0;
  for (const auto& def : defs) {
    const auto sys = build_system(def);
    const Oracle ref(sys, BackendKind::Reference);
    const Oracle mod(sys, BackendKind::ModularLinear);
    const auto n = sys.atom_count();
    testing::for_each_word_upto(n, 8, [&](const Word& w) {
      ++checked;
      if (lnf(sys, w, ref) != greedy_reference(sys, w)) ++bad;
    });
    for (int i = 0; i < 100000; ++i) {
      const Word w = testing::random_word(rng, n, 64);
      ++checked;
      if (lnf(sys, w, ref) != greedy_reference(sys, w)) ++bad;
    }
    testing::for_each_word_upto(n, 6, [&](const Word& w) {
      ++modular_checked;
      if (lnf(sys, w, mod) != greedy_reference(sys, w)) ++modular_bad;
    });
    for (int i = 0; i < 10000; ++i) {
      const Word w = testing::random_word(rng, n, 64);
      ++modular_checked;
      if (lnf(sys, w, mod) != greedy_reference(sys, w)) ++modular_bad;
    }
  }
  std::ostringstream d;
  d << "reference backend " << bad << "/" << checked << " mismatches; modular backend " << modular_bad << "/"
    << modular_checked;
  return {bad == 0 && modular_bad == 0, d.str()};
}

Outcome geodesic_optimality() {
  const std::vector<SystemDef> defs{builtin::dihedral(3), builtin::dihedral(4), builtin::p3()};
  std::mt19937_64 rng(7);
  std::size_t checked = 0, bad = 0, random_bad = 0;
  for (const auto& def : defs) {
    const auto sys = build_system(def);
    const Oracle oracle(sys, BackendKind::Reference);
    const auto ball = cayley_ball(sys, 6);
    testing::for_each_word_upto(sys.atom_count(), 6, [&](const Word& w) {
      ++checked;
      const auto it = ball.find(greedy_reference(sys, w));
      if (it == ball.end() || geodesic_nf(sys, w, oracle).size() != it->second) ++bad;
    });
    for (int i = 0; i < 10000; ++i) {
      const Word w = testing::random_word(rng, sys.atom_count(), 40);
      const Word g = geodesic_nf(sys, w, oracle);
      if (g.size() > w.size() || !oracle.is_identity(concat(g, inverse(w)))) ++random_bad;
    }
  }
  bool raised = false;
  const auto t25 = build_system(builtin::torus(2, 5));
  try {
    geodesic_nf(t25, t25.alphabet().parse("a^-1 b"), Oracle(t25, BackendKind::Reference));
  } catch (const Error& e) {
    raised = e.kind() == ErrorKind::NotHomogeneous;
  }
  std::ostringstream d;
  d << "exhaustive " << bad << "/" << checked << " off; random " << random_bad << "/30000 off; T(2,5) "
    << (raised ? "NotHomogeneous" : "no error");
  return {bad == 0 && random_bad == 0 && raised, d.str()};
}

std::vector<NormalForm> conjugacy_sample(const GarsideSystem& sys, std::mt19937_64& rng) {
  auto pool = testing::all_normal_forms(sys, 2, 3);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::set<NormalForm> sample;
  for (const auto& nf : pool) {
    if (sample.size() >= 100) break;
    sample.insert(nf);
  }
  const std::vector<NormalForm> seeds(sample.begin(), sample.end());
  for (std::size_t i = 0; sample.size() < 200 && i < 100000; ++i) {
    const NormalForm& x = seeds[i % seeds.size()];
    const Word g = testing::random_word(rng, sys.atom_count(), 4);
    const NormalForm y = greedy_reference(sys, concat(concat(inverse(g), to_word(sys, x)), g));
    if (std::abs(y.p) <= 2 && y.cl() <= 3) sample.insert(y);
  }
  for (const auto& nf : pool) {
    if (sample.size() >= 200) break;
    sample.insert(nf);
  }
  return {sample.begin(), sample.end()};
}

Outcome conjugacy() {
  std::mt19937_64 rng(11);
  std::size_t pairs = 0, positives = 0, bad = 0, bad_witness = 0, bound_violations = 0;
  for (const auto& def : {builtin::dihedral(3), builtin::p3()}) {
    const auto sys = build_system(def);
    const Oracle oracle(sys, BackendKind::ModularLinear);
    const auto sample = conjugacy_sample(sys, rng);
    std::vector<std::set<NormalForm>> brute;
    for (const auto& x : sample) {
      brute.push_back(testing::brute_sss(sys, x));
      const auto data = sss_enumerate(sys, x, oracle);
      const auto bound = std::max<std::int64_t>(data.cl_s, 1) * element_order(sys, data.representative);
      if (static_cast<std::int64_t>(data.sss.size()) > bound) ++bound_violations;
    }
    for (std::size_t i = 0; i < sample.size(); ++i) {
      const Word wi = to_word(sys, sample[i]);
      for (std::size_t j = 0; j < sample.size(); ++j) {
        if (i == j) continue;
        ++pairs;
        const Word wj = to_word(sys, sample[j]);
        const bool expected = brute[i] == brute[j];
        if (decide_conjugacy(sys, wi, wj, oracle) != expected) ++bad;
        if (!expected) continue;
        ++positives;
        try {
          const auto g = conjugacy_witness(sys, wi, wj, oracle);
          if (!g || !oracle.is_identity(concat(concat(concat(inverse(*g), wi), *g), inverse(wj)))) ++bad_witness;
        } catch (const Error&) {
          ++bad_witness;
        }
      }
    }
  }
  std::ostringstream d;
  d << pairs << " ordered pairs, " << positives << " conjugate; " << bad << " disagreements, " << bad_witness
    << " bad witnesses, " << bound_violations << " SSS bound violations";
  return {bad == 0 && bad_witness == 0 && bound_violations == 0 && positives > 0, d.str()};
}

Outcome growth() {
  const auto rows = hnn::b4_growth(12);
  const std::vector<std::uint64_t> expected{1, 4, 11, 29, 76, 199, 521, 1364};
  bool pass = true;
  for (std::size_t m = 0; m < expected.size(); ++m) pass &= rows[m].length == expected[m];
  double worst = 0;
  for (const auto& r : rows) {
    pass &= r.recurrence_ok;
    if (r.m >= 2) worst = std::max(worst, r.rel_err);
  }
  pass &= worst <= 1e-6;
  std::ostringstream d;
  d << "length(12)=" << rows.back().length << " worst rel err " << worst;
  return {pass, d.str()};
}

Outcome space_scaling() {
  const auto sys = build_system(builtin::torus(2, 3));
  const Oracle oracle(sys, BackendKind::ModularLinear);
  const auto pipe = make_pipeline(sys, oracle);
  const std::vector<std::size_t> sizes{256, 512, 1024, 2048, 4096, 8192};
  const auto profile =
      space_profile(*pipe, [&](std::size_t n) { return delta_noise_family(sys, n); }, sizes);
  bool pass = true;
  std::ostringstream d;
  d << "peak bits";
  for (const auto& row : profile.rows) d << ' ' << row.report.peak_work_bits;
  for (std::size_t i = 0; i + 2 < profile.rows.size(); ++i) {
    const auto a = profile.rows[i].report.peak_work_bits, b = profile.rows[i + 2].report.peak_work_bits;
    if (b > a + 5) pass = false;
  }
  if (profile.rows.back().report.peak_work_bits > 2 * profile.rows.front().report.peak_work_bits) pass = false;
  double lo = 1e300, hi = 0;
  for (const auto& row : profile.rows) {
    const double r = static_cast<double>(row.report.output_length) / static_cast<double>(row.n);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  d << "; output/n in [" << lo << ", " << hi << "]";
  if (lo <= 0 || hi > 4 * lo) pass = false;
  return {pass, d.str()};
}

Outcome axioms() {
  std::size_t systems = 0, failures = 0;
  std::string first;
  for (const auto& def : builtin::spindle_catalogue()) {
    const auto sys = build_system(def);
    ++systems;
    for (const auto& r : axiom_suite(sys)) {
      if (r.pass) continue;
      ++failures;
      if (first.empty()) first = sys.name() + " " + r.name + ": " + r.detail;
    }
  }
  std::ostringstream d;
  d << systems << " systems, " << failures << " failures";
  if (!first.empty()) d << "; " << first;
  return {failures == 0 && systems > 0, d.str()};
}

Outcome burau() {
  const auto sys = build_system(builtin::dihedral(3));
  const auto& s1 = builtin::burau_sigma1();
  const auto& s2 = builtin::burau_sigma2();
  const bool braid = s1 * s2 * s1 == s2 * s1 * s2;
  std::size_t checked = 0, bad = 0;
  testing::for_each_word_upto(3, 6, [&](const Word& w) {
    ++checked;
    const auto nf = hnn::b3_hnn_nf(w);
    const bool trivial = nf.p == 0 && nf.v.empty();
    if (trivial != word_problem(sys, hnn::b3_to_braid(w), BackendKind::ModularLinear)) ++bad;
  });
  std::ostringstream d;
  d << "braid relation " << (braid ? "holds" : "fails") << "; " << bad << "/" << checked << " disagreements";
  return {braid && bad == 0, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 delta power normal form", nf_delta_power},
      {"2 simple counts and spindle check", simple_counts},
      {"3 oracle equivalence", oracle_equivalence},
      {"4 geodesic optimality", geodesic_optimality},
      {"5 conjugacy", conjugacy},
      {"6 growth sequence", growth},
      {"7 space scaling", space_scaling},
      {"8 lattice and axiom suite", axioms},
      {"9 Burau cross-check", burau},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("%s criterion %s: %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", name.c_str(), out.detail.c_str(), secs);
    std::fflush(stdout);
    if (!out.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
