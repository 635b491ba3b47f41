#include "garside/word.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "garside/error.hpp"

namespace garside {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(invert(*it));
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word to_word(const PositiveWord& w) {
  Word out;
  out.reserve(w.size());
  for (AtomId a : w) out.push_back(pos(a));
  return out;
}

bool is_positive(const Word& w) {
  return std::none_of(w.begin(), w.end(), [](Letter x) { return x.inverse; });
}

PositiveWord to_positive(const Word& w) {
  PositiveWord out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(x.atom);
  return out;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) fail(ErrorKind::MalformedDef, "empty atom name");
    if (n.find_first_of(" \t\n|=,;^#") != std::string::npos) {
      fail(ErrorKind::MalformedDef, "atom name contains a reserved character: '" + n + "'");
    }
    if (!seen.insert(n).second) fail(ErrorKind::MalformedDef, "duplicate atom name '" + n + "'");
  }
}

std::optional<AtomId> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<AtomId>(i);
  }
  return std::nullopt;
}

Word Alphabet::parse(std::string_view text) const {
  Word out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    bool inv = false;
    std::string_view name = token;
    if (name.size() > 3 && name.substr(name.size() - 3) == "^-1") {
      inv = true;
      name.remove_suffix(3);
    }
    auto a = find(name);
    if (!a) fail(ErrorKind::Parse, "unknown letter '" + token + "'");
    out.push_back({*a, inv});
  }
  return out;
}

PositiveWord Alphabet::parse_positive(std::string_view text) const {
  Word w = parse(text);
  if (!is_positive(w)) fail(ErrorKind::Parse, "expected a positive word: '" + std::string(text) + "'");
  return to_positive(w);
}

std::string Alphabet::render(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += name(w[i].atom);
    if (w[i].inverse) out += "^-1";
  }
  return out;
}

std::string Alphabet::render(const PositiveWord& w) const { return render(to_word(w)); }

std::string Alphabet::render_compact(const PositiveWord& w) const {
  std::string out;
  for (AtomId a : w) out += name(a);
  return out;
}

}  // namespace garside
