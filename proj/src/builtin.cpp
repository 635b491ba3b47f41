#include "garside/builtin.hpp"

#include <set>

#include "garside/error.hpp"

namespace garside::builtin {

namespace {

std::string atom_name(int i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i + 1);
}

std::vector<std::string> atom_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(atom_name(i));
  return out;
}

void require(bool ok, const std::string& msg) {
  if (!ok) fail(ErrorKind::MalformedDef, msg);
}

LaurentMatrix pow(const LaurentMatrix& m, int e) {
  LaurentMatrix r = LaurentMatrix::identity(m.dim());
  for (int i = 0; i < e; ++i) r = r * m;
  return r;
}

}  // namespace

LaurentMatrix burau_sigma1() { return LaurentMatrix::parse("-t, 1; 0, 1"); }
LaurentMatrix burau_sigma2() { return LaurentMatrix::parse("1, 0; t, -t"); }

SystemDef torus(int p, int q) {
  require(p >= 1 && q >= 1, "torus parameters must be positive");
  SystemDef d;
  d.name = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
  d.atoms = {"a", "b"};
  d.delta_chains = {PositiveWord(static_cast<std::size_t>(p), 0), PositiveWord(static_cast<std::size_t>(q), 1)};
  if (p == 2 && q == 3) {
    const LaurentMatrix s1 = burau_sigma1(), s2 = burau_sigma2();
    d.matrix_rep[0] = s1 * s2 * s1;
    d.matrix_rep[1] = s1 * s2;
  }
  return d;
}

SystemDef dihedral(int m) {
  require(m >= 2, "dihedral parameter m must be at least 2");
  SystemDef d;
  d.name = "I2(" + std::to_string(m) + ")";
  d.atoms = {"a", "b"};
  PositiveWord x, y;
  for (int i = 0; i < m; ++i) {
    x.push_back(static_cast<AtomId>(i % 2));
    y.push_back(static_cast<AtomId>((i + 1) % 2));
  }
  d.delta_chains = {x, y};
  if (m == 3) {
    d.matrix_rep[0] = burau_sigma1();
    d.matrix_rep[1] = burau_sigma2();
  }
  return d;
}

SystemDef dual_dihedral(int m) {
  require(m >= 2, "dual dihedral parameter m must be at least 2");
  SystemDef d;
  d.name = "I2*(" + std::to_string(m) + ")";
  d.atoms = atom_names(m);
  const auto last = static_cast<AtomId>(m - 1);
  d.delta_chains.push_back({0, last});
  for (AtomId i = 1; i <= last; ++i) d.delta_chains.push_back({i, i - 1});
  if (m == 3) {
    const LaurentMatrix s1 = burau_sigma1(), s2 = burau_sigma2();
    d.matrix_rep[0] = s1;
    d.matrix_rep[1] = s2;
    d.matrix_rep[2] = s2 * s1 * s2.inverse();
  }
  return d;
}

SystemDef pure_dihedral(int n) {
  require(n >= 2, "pure dihedral rank must be at least 2");
  SystemDef d;
  d.name = "PI2(" + std::to_string(n) + ")";
  d.atoms = atom_names(n);
  for (int i = 0; i < n; ++i) {
    PositiveWord chain;
    for (int k = 0; k < n; ++k) chain.push_back(static_cast<AtomId>(((i - k) % n + n) % n));
    d.delta_chains.push_back(std::move(chain));
  }
  return d;
}

SystemDef p3() {
  SystemDef d;
  d.name = "P3";
  d.atoms = {"a", "b", "c"};
  d.delta_chains = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  const SystemDef dual = dual_dihedral(3);
  d.matrix_rep[0] = pow(dual.matrix_rep.at(2), 2);
  d.matrix_rep[1] = pow(dual.matrix_rep.at(1), 2);
  d.matrix_rep[2] = pow(dual.matrix_rep.at(0), 2);
  return d;
}

SystemDef nonspindle_b3() {
  SystemDef d;
  d.name = "nonspindle-B3";
  d.atoms = {"s", "b"};
  d.extra_relations = {{{0, 1, 0}, {1, 1}}};
  d.delta_word = PositiveWord{1, 1, 1};
  return d;
}

SystemDef integers() {
  SystemDef d;
  d.name = "Z";
  d.atoms = {"a"};
  d.delta_chains = {{0}};
  return d;
}

SystemDef from_template(const std::string& name, const std::map<std::string, long>& params) {
  std::set<std::string> used;
  auto get = [&](const std::string& key, long fallback) {
    used.insert(key);
    auto it = params.find(key);
    return static_cast<int>(it == params.end() ? fallback : it->second);
  };
  SystemDef d;
  if (name == "torus") {
    int p = get("p", 2);
    int q = get("q", 3);
    d = torus(p, q);
  } else if (name == "dihedral") {
    d = dihedral(get("m", 3));
  } else if (name == "dual-dihedral") {
    d = dual_dihedral(get("m", 3));
  } else if (name == "pure-dihedral") {
    d = pure_dihedral(get("n", 3));
  } else if (name == "p3") {
    d = p3();
  } else if (name == "nonspindle-b3") {
    d = nonspindle_b3();
  } else if (name == "integers") {
    d = integers();
  } else {
    fail(ErrorKind::MalformedDef, "unknown template '" + name + "'");
  }
  for (const auto& [k, v] : params) {
    if (!used.count(k)) fail(ErrorKind::MalformedDef, "template '" + name + "' has no parameter '" + k + "'");
  }
  return d;
}

std::vector<SystemDef> spindle_catalogue() {
  return {integers(),        torus(2, 3),      torus(2, 5),      torus(3, 4),      dihedral(3),
          dihedral(4),       dihedral(5),      dual_dihedral(3), dual_dihedral(4), dual_dihedral(5),
          pure_dihedral(3), pure_dihedral(4), p3()};
}

}  // namespace garside::builtin
