#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace garside {

using AtomId = std::uint32_t;
using SimpleId = std::uint32_t;

struct Letter {
  AtomId atom = 0;
  bool inverse = false;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;
using PositiveWord = std::vector<AtomId>;

inline Letter pos(AtomId a) { return {a, false}; }
inline Letter neg(AtomId a) { return {a, true}; }
inline Letter invert(Letter x) { return {x.atom, !x.inverse}; }

/// Formal inverse: reversed with every letter inverted.
Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
Word to_word(const PositiveWord& w);
bool is_positive(const Word& w);
/// Drops signs; the caller guarantees `is_positive(w)`.
PositiveWord to_positive(const Word& w);

/// Ordered list of letter names; index = AtomId.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(AtomId a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<AtomId> find(std::string_view name) const;

  /// Grammar: whitespace-separated tokens, `token := name ("^-1")?`.
  Word parse(std::string_view text) const;
  PositiveWord parse_positive(std::string_view text) const;

  /// Space-separated tokens, the inverse of `parse`.
  std::string render(const Word& w) const;
  std::string render(const PositiveWord& w) const;
  /// Names concatenated without separators (used for factor renderings).
  std::string render_compact(const PositiveWord& w) const;

 private:
  std::vector<std::string> names_;
};

}  // namespace garside
