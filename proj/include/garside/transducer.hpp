#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "garside/oracle.hpp"

namespace garside {

using Symbol = std::int64_t;

/// Random-access, read-only input.
class Tape {
 public:
  virtual ~Tape() = default;
  /// Symbol at `index`, or nullopt past the end.
  virtual std::optional<Symbol> read(std::size_t index) = 0;
};

class VectorTape final : public Tape {
 public:
  explicit VectorTape(const std::vector<Symbol>& data) : data_(data) {}
  std::optional<Symbol> read(std::size_t index) override {
    if (index >= data_.size()) return std::nullopt;
    return data_[index];
  }

 private:
  const std::vector<Symbol>& data_;
};

/// Append-only output.
class Emitter {
 public:
  virtual ~Emitter() = default;
  virtual void emit(Symbol s) = 0;
};

struct RegisterSpec {
  std::string name;
  bool is_enum = false;
  std::size_t variants = 0;  // enums only
};

/// The complete mutable state of a transducer, declared up front.
class RegisterLayout {
 public:
  std::size_t declare_int(std::string name);
  std::size_t declare_enum(std::string name, std::size_t variants);
  /// Appends all of `other`'s registers with a name prefix; returns their offset.
  std::size_t append(const RegisterLayout& other, const std::string& prefix);

  std::size_t size() const { return specs_.size(); }
  const RegisterSpec& spec(std::size_t i) const { return specs_.at(i); }

 private:
  std::vector<RegisterSpec> specs_;
};

/// Register values plus the largest magnitude each register ever held.
class RegisterFile {
 public:
  explicit RegisterFile(const RegisterLayout& layout);

  Symbol get(std::size_t i) const { return values_.at(i); }
  void set(std::size_t i, Symbol v);
  /// Zeroes values in [offset, offset+count); peaks are kept.
  void clear(std::size_t offset, std::size_t count);

  std::size_t size() const { return values_.size(); }
  /// Σ over integer registers of ⌈log2(1+|peak|)⌉ plus Σ over enums of ⌈log2 #variants⌉.
  std::size_t peak_bits() const;
  const std::vector<Symbol>& values() const { return values_; }
  void restore(const std::vector<Symbol>& values) { values_ = values; }

 private:
  const RegisterLayout* layout_;
  std::vector<Symbol> values_;
  std::vector<std::uint64_t> peaks_;
};

/// A bounds-checked window onto one transducer's registers.
class RegisterView {
 public:
  RegisterView(RegisterFile& file, std::size_t offset, std::size_t count) : file_(&file), offset_(offset), count_(count) {}
  Symbol get(std::size_t i) const;
  void set(std::size_t i, Symbol v) const;
  void clear() const { file_->clear(offset_, count_); }
  RegisterView sub(std::size_t offset, std::size_t count) const;

 private:
  RegisterFile* file_;
  std::size_t offset_, count_;
};

/// Everything a step may touch.
struct StepEnv {
  Tape& input;
  RegisterView regs;
  Emitter& out;
  /// Oracle scratch slots, one per oracle-using leaf, in tree order.
  std::span<std::unique_ptr<SubwordScan>> scans;
};

/// Deterministic stream program: all mutable state lives in the declared
/// registers and oracle scratch; `step` is const.
class Transducer {
 public:
  virtual ~Transducer() = default;
  virtual std::string name() const = 0;
  virtual const RegisterLayout& layout() const = 0;
  /// Upper bound on symbols emitted by a single step.
  virtual std::size_t max_emit_per_step() const = 0;
  /// Number of oracle scratch slots used by this program (and its parts).
  virtual std::size_t oracle_slots() const { return 0; }
  virtual void make_scans(std::vector<std::unique_ptr<SubwordScan>>&) const {}
  /// Runs one step; returns false (emitting nothing) once the program has halted.
  virtual bool step(StepEnv& env) const = 0;
};

/// outer ∘ inner: outer's input reads are served by re-running inner.
std::shared_ptr<const Transducer> compose(std::shared_ptr<const Transducer> outer, std::shared_ptr<const Transducer> inner);

/// Copies its input.
std::shared_ptr<const Transducer> identity_transducer();
/// Emits every input symbol twice.
std::shared_ptr<const Transducer> doubler_transducer();

struct SpaceReport {
  std::size_t input_length = 0;
  std::size_t peak_work_bits = 0;
  std::size_t peak_oracle_bits = 0;
  std::size_t output_length = 0;
  std::size_t oracle_calls = 0;
  std::size_t steps = 0;

  friend bool operator==(const SpaceReport&, const SpaceReport&) = default;
};

struct RunOptions {
  /// Throw Error{StateBudgetExceeded} when work bits exceed this.
  std::optional<std::size_t> work_bit_ceiling;
  /// Replays every top-level step from a snapshot and requires identical effects,
  /// which catches state kept outside the declared registers.
  bool audit = false;
};

struct RunResult {
  std::vector<Symbol> output;
  SpaceReport report;
};

RunResult run(const Transducer& t, const std::vector<Symbol>& input, const RunOptions& options = {});

}  // namespace garside
