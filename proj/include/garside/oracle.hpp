#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "garside/system.hpp"
#include "garside/word.hpp"

namespace garside {

enum class BackendKind { Reference, ModularLinear };

std::string to_string(BackendKind kind);
/// "reference" or "modular". Throws Error{Parse}.
BackendKind parse_backend(std::string_view text);

/// k-th letter of the currently scanned subword.
using LetterSource = std::function<AtomId(std::size_t)>;

/// Incremental test of "the scanned positive word equals Δ^q" as letters are
/// appended one at a time. Scratch state is metered in bits.
class SubwordScan {
 public:
  virtual ~SubwordScan() = default;

  virtual std::unique_ptr<SubwordScan> clone() const = 0;
  virtual void reset() = 0;
  virtual void push(AtomId a) = 0;
  /// True when an additive invariant pins down the only possible q.
  virtual bool has_invariant() const = 0;
  /// The q allowed by the invariant, if any (meaningful when has_invariant()).
  virtual std::optional<std::int64_t> power_candidate() const = 0;
  /// Decides whether the scanned word equals Δ^q; `replay` re-reads its letters.
  virtual bool equals_delta_power(std::int64_t q, const LetterSource& replay) = 0;

  virtual std::size_t scratch_bits() const = 0;
  virtual std::size_t peak_bits() const = 0;
  std::size_t calls() const { return calls_; }

 protected:
  std::size_t calls_ = 0;
};

struct ModularData;

/// Word-problem oracle over a built system. Keeps a reference to `sys`.
class Oracle {
 public:
  /// Throws Error{NoRepresentation} for ModularLinear without a matrix rep.
  Oracle(const GarsideSystem& sys, BackendKind kind);
  ~Oracle();
  Oracle(const Oracle&);
  Oracle& operator=(const Oracle&);

  BackendKind kind() const { return kind_; }
  const GarsideSystem& system() const { return *sys_; }

  bool is_identity(const Word& w) const;
  std::unique_ptr<SubwordScan> scan() const;

 private:
  const GarsideSystem* sys_;
  BackendKind kind_;
  std::shared_ptr<const ModularData> mod_;
};

/// True iff w represents the identity.
bool word_problem(const GarsideSystem& sys, const Word& w, BackendKind backend);

}  // namespace garside
