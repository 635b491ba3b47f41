#include "garside/system_io.hpp"

#include <fstream>
#include <sstream>

#include <boost/algorithm/string/trim.hpp>

#include "garside/builtin.hpp"
#include "garside/error.hpp"

namespace garside {

namespace {

std::string trim(std::string_view s) { return boost::algorithm::trim_copy(std::string(s)); }

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void bad_line(std::size_t line, const std::string& msg) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

SystemDef parse_system_def(std::string_view text, const TemplateParams& overrides) {
  std::string name;
  std::optional<std::vector<std::string>> atoms;
  std::vector<std::pair<std::size_t, std::string>> delta_lines, relation_lines, delta_word_lines;
  std::vector<std::tuple<std::size_t, std::string, std::string>> rep_lines;
  std::optional<std::string> tmpl;
  TemplateParams params;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) bad_line(lineno, "expected 'key: value'");
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (key == "name") {
      name = value;
    } else if (key == "atoms") {
      if (atoms) bad_line(lineno, "duplicate atoms line");
      std::istringstream ws(value);
      atoms.emplace();
      for (std::string a; ws >> a;) atoms->push_back(a);
    } else if (key == "delta") {
      delta_lines.emplace_back(lineno, value);
    } else if (key == "relation") {
      relation_lines.emplace_back(lineno, value);
    } else if (key == "delta-word") {
      delta_word_lines.emplace_back(lineno, value);
    } else if (key.rfind("rep ", 0) == 0) {
      rep_lines.emplace_back(lineno, trim(key.substr(4)), value);
    } else if (key == "template") {
      std::istringstream ws(value);
      std::string kind;
      ws >> kind;
      if (kind.empty()) bad_line(lineno, "template kind missing");
      tmpl = kind;
      for (std::string kv; ws >> kv;) {
        std::size_t eq = kv.find('=');
        if (eq == std::string::npos) bad_line(lineno, "template parameters are key=value");
        try {
          params[kv.substr(0, eq)] = std::stol(kv.substr(eq + 1));
        } catch (const std::exception&) {
          bad_line(lineno, "template parameter '" + kv + "' is not an integer");
        }
      }
    } else {
      bad_line(lineno, "unknown key '" + key + "'");
    }
  }

  if (tmpl) {
    if (atoms || !delta_lines.empty() || !relation_lines.empty() || !delta_word_lines.empty() || !rep_lines.empty()) {
      fail(ErrorKind::Parse, "a template file may only contain name and template lines");
    }
    for (const auto& [k, v] : overrides) params[k] = v;
    SystemDef def = builtin::from_template(*tmpl, params);
    if (!name.empty() && overrides.empty()) def.name = name;
    return def;
  }
  if (!overrides.empty()) fail(ErrorKind::Parse, "parameters given for a system that is not a template");

  if (!atoms) fail(ErrorKind::MalformedDef, "missing atoms line");
  SystemDef def;
  def.name = name.empty() ? "unnamed" : name;
  def.atoms = *atoms;
  Alphabet alpha(def.atoms);
  auto parse_word = [&](std::size_t line, const std::string& w) {
    try {
      return alpha.parse_positive(w);
    } catch (const Error& e) {
      bad_line(line, e.what());
    }
  };
  if (delta_lines.size() > 1) bad_line(delta_lines[1].first, "only one delta line is allowed");
  for (const auto& [line, value] : delta_lines) {
    for (const auto& chain : split(value, '|')) def.delta_chains.push_back(parse_word(line, chain));
  }
  for (const auto& [line, value] : relation_lines) {
    auto sides = split(value, '=');
    if (sides.size() != 2) bad_line(line, "relation must have the form 'u = v'");
    def.extra_relations.emplace_back(parse_word(line, sides[0]), parse_word(line, sides[1]));
  }
  if (delta_word_lines.size() > 1) bad_line(delta_word_lines[1].first, "only one delta-word line is allowed");
  for (const auto& [line, value] : delta_word_lines) def.delta_word = parse_word(line, value);
  for (const auto& [line, atom, value] : rep_lines) {
    auto a = alpha.find(atom);
    if (!a) bad_line(line, "rep for unknown atom '" + atom + "'");
    if (def.matrix_rep.count(*a)) bad_line(line, "duplicate rep for atom '" + atom + "'");
    try {
      def.matrix_rep[*a] = LaurentMatrix::parse(value);
    } catch (const Error& e) {
      bad_line(line, e.what());
    }
  }
  return def;
}

SystemDef load_system_def(const std::filesystem::path& path, const TemplateParams& overrides) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot read system file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_system_def(buf.str(), overrides);
}

std::string format_system_def(const SystemDef& def) {
  Alphabet alpha(def.atoms);
  std::ostringstream out;
  out << "name: " << def.name << "\n";
  out << "atoms:";
  for (const auto& a : def.atoms) out << ' ' << a;
  out << "\n";
  if (!def.delta_chains.empty()) {
    out << "delta: ";
    for (std::size_t i = 0; i < def.delta_chains.size(); ++i) {
      if (i) out << " | ";
      out << alpha.render(def.delta_chains[i]);
    }
    out << "\n";
  }
  for (const auto& [u, v] : def.extra_relations) out << "relation: " << alpha.render(u) << " = " << alpha.render(v) << "\n";
  if (def.delta_word) out << "delta-word: " << alpha.render(*def.delta_word) << "\n";
  for (const auto& [a, m] : def.matrix_rep) out << "rep " << def.atoms[a] << ": " << m.to_string() << "\n";
  return out.str();
}

}  // namespace garside
