#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
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
#include "garside/system_io.hpp"

namespace fs = std::filesystem;
using namespace garside;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string system;
  std::string backend;
  std::vector<std::string> params;
  bool porcelain = false;
};

std::string read_arg(const std::string& arg) {
  if (arg != "-") return arg;
  std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

TemplateParams parse_params(const std::vector<std::string>& params) {
  TemplateParams out;
  for (const auto& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--param expects key=value, got '" + kv + "'");
    try {
      out[kv.substr(0, eq)] = std::stol(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--param value is not an integer: '" + kv + "'");
    }
  }
  return out;
}

fs::path resolve_system(const std::string& name) {
  if (name.empty()) throw UsageError("--system is required");
  fs::path p(name);
  if (fs::exists(p)) return p;
  fs::path data = fs::path(GARSIDE_DATA_DIR) / p;
  if (fs::exists(data)) return data;
  throw UsageError("system file not found: " + name);
}

GarsideSystem load(const Options& o) {
  return build_system(load_system_def(resolve_system(o.system), parse_params(o.params)), BuildOptions::from_environment());
}

Oracle make_oracle(const GarsideSystem& sys, const Options& o) {
  if (o.backend.empty()) return Oracle(sys, sys.has_matrix_rep() ? BackendKind::ModularLinear : BackendKind::Reference);
  return Oracle(sys, parse_backend(o.backend));
}

Word parse_word(const GarsideSystem& sys, const std::string& arg) { return sys.alphabet().parse(read_arg(arg)); }

std::string join_ids(const std::vector<std::size_t>& ids) {
  std::string out;
  for (std::size_t k = 0; k < ids.size(); ++k) out += (k ? "," : "") + std::to_string(ids[k]);
  return out;
}

int cmd_build(const Options& o) {
  const GarsideSystem sys = load(o);
  if (o.porcelain) {
    std::cout << "id\tword\tlen\tdpartial\ttau\n";
    for (SimpleId s = 0; s < sys.simple_count(); ++s) {
      std::cout << s << '\t' << render_simple(sys, s) << '\t' << sys.simple(s).len << '\t'
                << render_simple(sys, sys.dpartial(s)) << '\t' << render_simple(sys, sys.tau(s)) << '\n';
    }
    return 0;
  }
  std::cout << "name: " << sys.name() << '\n';
  std::cout << "atoms:";
  for (const auto& a : sys.alphabet().names()) std::cout << ' ' << a;
  std::cout << '\n';
  std::cout << "simples: " << sys.simple_count() << '\n';
  std::cout << "order: " << sys.order() << '\n';
  std::cout << "homogeneous: " << (sys.homogeneous() ? "yes" : "no") << '\n';
  std::cout << "spindle: " << (std::holds_alternative<SpindleOk>(spindle_check(sys)) ? "yes" : "no") << '\n';
  std::cout << "matrix-rep: " << (sys.has_matrix_rep() ? "yes" : "no") << '\n';
  for (SimpleId s = 0; s < sys.simple_count(); ++s) {
    std::cout << "  " << std::setw(3) << s << "  " << std::setw(8) << std::left << render_simple(sys, s) << std::right
              << "  d=" << render_simple(sys, sys.dpartial(s)) << "  tau=" << render_simple(sys, sys.tau(s)) << '\n';
  }
  return 0;
}

int print_axioms(const std::string& label, const std::vector<AxiomResult>& results) {
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.pass;
    std::cout << label << '\t' << r.name << '\t' << (r.pass ? "PASS" : "FAIL");
    if (!r.detail.empty()) std::cout << '\t' << r.detail;
    std::cout << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_check(const Options& o) {
  const GarsideSystem sys = load(o);
  return print_axioms(sys.name(), axiom_suite(sys));
}

int cmd_nf(const Options& o, const std::string& word, bool reduce) {
  const GarsideSystem sys = load(o);
  const Oracle oracle = make_oracle(sys, o);
  std::cout << render(sys, lnf(sys, parse_word(sys, word), oracle, reduce)) << '\n';
  return 0;
}

int cmd_geodesic(const Options& o, const std::string& word, bool show_plan) {
  const GarsideSystem sys = load(o);
  const Oracle oracle = make_oracle(sys, o);
  const Word w = parse_word(sys, word);
  const Word g = geodesic_nf(sys, w, oracle);
  std::cout << sys.alphabet().render(g) << '\n';
  if (show_plan) {
    const GeodesicPlan plan = geodesic_plan(sys, lnf(sys, w, oracle));
    std::cout << "t=" << plan.t << " indices=" << join_ids(plan.indices) << '\n';
  }
  return 0;
}

int cmd_wp(const Options& o, const std::string& word) {
  const GarsideSystem sys = load(o);
  const Oracle oracle = make_oracle(sys, o);
  const bool trivial = oracle.is_identity(parse_word(sys, word));
  std::cout << (o.porcelain ? "" : "trivial: ") << (trivial ? "yes" : "no") << '\n';
  return 0;
}

int cmd_conj(const Options& o, const std::string& w1, const std::string& w2, bool with_witness) {
  const GarsideSystem sys = load(o);
  const Oracle oracle = make_oracle(sys, o);
  const Word u = parse_word(sys, w1), v = parse_word(sys, w2);
  if (!with_witness) {
    std::cout << "conjugate: " << (decide_conjugacy(sys, u, v, oracle) ? "yes" : "no") << '\n';
    return 0;
  }
  const auto g = conjugacy_witness(sys, u, v, oracle);
  std::cout << "conjugate: " << (g ? "yes" : "no") << '\n';
  if (g) std::cout << "witness: " << sys.alphabet().render(*g) << '\n';
  return 0;
}

int cmd_sss(const Options& o, const std::string& word) {
  const GarsideSystem sys = load(o);
  const Oracle oracle = make_oracle(sys, o);
  const SummitData d = sss_enumerate(sys, lnf(sys, parse_word(sys, word), oracle), oracle);
  if (!o.porcelain) {
    std::cout << "inf_s=" << d.inf_s << " sup_s=" << d.sup_s << " cl_s=" << d.cl_s << " size=" << d.sss.size()
              << " ord=" << element_order(sys, d.representative) << '\n';
  }
  for (const auto& nf : d.sss) std::cout << render(sys, nf) << '\n';
  std::cout << "edges:\n";
  for (const auto& e : d.edges) {
    std::cout << render(sys, e.from) << '\t' << render_simple(sys, e.conjugator) << '\t' << render(sys, e.to) << '\n';
  }
  return 0;
}

int cmd_space_bench(const Options& o, const std::vector<std::size_t>& sizes, bool audit, std::size_t ceiling) {
  const GarsideSystem sys = load(o);
  const Oracle oracle = make_oracle(sys, o);
  RunOptions ro;
  ro.audit = audit;
  if (ceiling) ro.work_bit_ceiling = ceiling;
  const auto pipeline = make_pipeline(sys, oracle);
  const Profile profile =
      space_profile(*pipeline, [&sys](std::size_t n) { return delta_noise_family(sys, n); }, sizes, ro);
  std::cout << format_profile_tsv(profile);
  if (!o.porcelain) {
    std::cout << "fit: peak_work_bits ~ " << profile.fit.a << " + " << profile.fit.b << " * log2(n)\n";
  }
  return 0;
}

int cmd_b3_hnn(const Options& o, const std::string& word) {
  const auto nf = hnn::b3_hnn_nf(hnn::b3_alphabet().parse(read_arg(word)));
  const std::string v = hnn::base_alphabet().render(nf.v);
  if (o.porcelain) {
    std::cout << nf.p << '\t' << v << '\n';
  } else {
    std::cout << "p=" << nf.p << " V=" << v << '\n';
  }
  return 0;
}

int cmd_b4_growth(std::int64_t max_m) {
  std::cout << "m\talpha_bar\tbeta\tlength\trecurrence_ok\tclosed_form_rel_err\n";
  for (const auto& r : hnn::b4_growth(max_m)) {
    char err[32];
    std::snprintf(err, sizeof err, "%.3e", r.rel_err);
    std::cout << r.m << '\t' << r.alpha_bar << '\t' << r.beta << '\t' << r.length << '\t' << (r.recurrence_ok ? 1 : 0)
              << '\t' << err << '\n';
  }
  return 0;
}

int selftest_system(const GarsideSystem& sys) {
  auto results = axiom_suite(sys);
  const Oracle oracle(sys, BackendKind::Reference);
  results.push_back(oracle_agreement(sys, oracle, 4));
  if (sys.has_matrix_rep()) {
    auto r = oracle_agreement(sys, Oracle(sys, BackendKind::ModularLinear), 4);
    r.name = "modular-agreement";
    results.push_back(r);
  }
  return print_axioms(sys.name(), results);
}

int cmd_selftest(const Options& o, const std::string& dir) {
  int status = 0;
  if (!o.system.empty()) return selftest_system(load(o));
  if (dir.empty()) {
    for (const auto& def : builtin::spindle_catalogue()) status |= selftest_system(build_system(def));
    return status;
  }
  if (!fs::is_directory(dir)) throw UsageError("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".gs") files.push_back(e.path());
  }
  if (files.empty()) throw UsageError("no .gs system files in " + dir);
  std::sort(files.begin(), files.end());
  for (const auto& f : files) status |= selftest_system(build_system(load_system_def(f), BuildOptions::from_environment()));
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garside systems of spindle type: normal forms, geodesics, conjugacy"};
  app.require_subcommand(1);
  Options o;
  auto common = [&o](CLI::App* sub, bool needs_system) {
    auto* opt = sub->add_option("--system", o.system, "system definition file (.gs)");
    if (needs_system) opt->required();
    sub->add_option("--backend", o.backend, "word problem backend: reference|modular");
    sub->add_option("--param", o.params, "template parameter key=value");
    sub->add_flag("--porcelain", o.porcelain, "machine-readable output");
  };
  std::string w1, w2, dir;
  bool show_plan = false, reduce = false, audit = false;
  std::vector<std::size_t> sizes{256, 512, 1024, 2048};
  std::size_t ceiling = 0;
  std::int64_t max_m = 7;

  auto* build = app.add_subcommand("build", "build a system and list its simples");
  common(build, true);
  auto* check = app.add_subcommand("check", "run the lattice and spindle axioms");
  common(check, true);
  auto* nf = app.add_subcommand("nf", "left normal form");
  common(nf, true);
  nf->add_option("word", w1, "word, or - for stdin")->required();
  nf->add_flag("--reduce", reduce, "freely reduce before the pipeline");
  auto* geo = app.add_subcommand("geodesic", "geodesic normal form");
  common(geo, true);
  geo->add_option("word", w1, "word, or - for stdin")->required();
  geo->add_flag("--show-plan", show_plan, "print the threshold and chosen factor indices");
  auto* wp = app.add_subcommand("wp", "word problem");
  common(wp, true);
  wp->add_option("word", w1, "word, or - for stdin")->required();
  auto* conj = app.add_subcommand("conj", "decide conjugacy");
  common(conj, true);
  conj->add_option("word1", w1)->required();
  conj->add_option("word2", w2)->required();
  auto* wit = app.add_subcommand("witness", "conjugacy with a verified conjugator");
  common(wit, true);
  wit->add_option("word1", w1)->required();
  wit->add_option("word2", w2)->required();
  auto* sss = app.add_subcommand("sss", "super summit set and its cycling/tau graph");
  common(sss, true);
  sss->add_option("word", w1, "word, or - for stdin")->required();
  auto* bench = app.add_subcommand("space-bench", "space profile of the streamed pipeline");
  common(bench, true);
  bench->add_option("--sizes", sizes, "input sizes")->delimiter(',');
  bench->add_flag("--audit", audit, "replay every step from a register snapshot");
  bench->add_option("--ceiling", ceiling, "work bit ceiling");
  auto* b3 = app.add_subcommand("b3-hnn", "HNN normal form t^p V(a,b) in B3");
  common(b3, false);
  b3->add_option("word", w1, "word over a b t, or - for stdin")->required();
  auto* b4 = app.add_subcommand("b4-growth", "lengths of b^(t1^m) in B4");
  common(b4, false);
  b4->add_option("--max", max_m, "largest m")->check(CLI::NonNegativeNumber);
  auto* self = app.add_subcommand("selftest", "axiom and oracle suites for built-in systems");
  common(self, false);
  self->add_option("--dir", dir, "run on every .gs file in this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*build) return cmd_build(o);
    if (*check) return cmd_check(o);
    if (*nf) return cmd_nf(o, w1, reduce);
    if (*geo) return cmd_geodesic(o, w1, show_plan);
    if (*wp) return cmd_wp(o, w1);
    if (*conj) return cmd_conj(o, w1, w2, false);
    if (*wit) return cmd_conj(o, w1, w2, true);
    if (*sss) return cmd_sss(o, w1);
    if (*bench) return cmd_space_bench(o, sizes, audit, ceiling);
    if (*b3) return cmd_b3_hnn(o, w1);
    if (*b4) return cmd_b4_growth(max_m);
    if (*self) return cmd_selftest(o, dir);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Parse ? 2 : 1;
  }
  return 2;
}
