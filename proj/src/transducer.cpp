#include "garside/transducer.hpp"

#include <algorithm>

#include "garside/bits.hpp"
#include "garside/error.hpp"

namespace garside {

std::size_t RegisterLayout::declare_int(std::string name) {
  specs_.push_back({std::move(name), false, 0});
  return specs_.size() - 1;
}

std::size_t RegisterLayout::declare_enum(std::string name, std::size_t variants) {
  specs_.push_back({std::move(name), true, variants});
  return specs_.size() - 1;
}

std::size_t RegisterLayout::append(const RegisterLayout& other, const std::string& prefix) {
  std::size_t offset = specs_.size();
  for (const auto& s : other.specs_) specs_.push_back({prefix + s.name, s.is_enum, s.variants});
  return offset;
}

RegisterFile::RegisterFile(const RegisterLayout& layout)
    : layout_(&layout), values_(layout.size(), 0), peaks_(layout.size(), 0) {}

void RegisterFile::set(std::size_t i, Symbol v) {
  values_.at(i) = v;
  const RegisterSpec& spec = layout_->spec(i);
  if (spec.is_enum && (v < 0 || static_cast<std::size_t>(v) >= spec.variants)) {
    fail(ErrorKind::Internal, "enum register '" + spec.name + "' set out of range");
  }
  std::uint64_t mag = v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
  peaks_[i] = std::max(peaks_[i], mag);
}

void RegisterFile::clear(std::size_t offset, std::size_t count) {
  std::fill(values_.begin() + static_cast<std::ptrdiff_t>(offset), values_.begin() + static_cast<std::ptrdiff_t>(offset + count), 0);
}

std::size_t RegisterFile::peak_bits() const {
  std::size_t bits = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const RegisterSpec& spec = layout_->spec(i);
    bits += spec.is_enum ? enum_bits(spec.variants) : static_cast<std::size_t>(std::bit_width(peaks_[i]));
  }
  return bits;
}

Symbol RegisterView::get(std::size_t i) const {
  if (i >= count_) fail(ErrorKind::Internal, "read of undeclared register");
  return file_->get(offset_ + i);
}

void RegisterView::set(std::size_t i, Symbol v) const {
  if (i >= count_) fail(ErrorKind::Internal, "write to undeclared register");
  file_->set(offset_ + i, v);
}

RegisterView RegisterView::sub(std::size_t offset, std::size_t count) const {
  if (offset + count > count_) fail(ErrorKind::Internal, "register window out of range");
  return RegisterView(*file_, offset_ + offset, count);
}

namespace {

class ComposedTape final : public Tape {
 public:
  enum Reg : std::size_t { kEmitted, kBufStart, kBufLen, kHalted, kBuf };

  ComposedTape(const Transducer& inner, Tape& input, RegisterView inner_regs, RegisterView tape_regs,
               std::span<std::unique_ptr<SubwordScan>> scans, std::size_t capacity)
      : inner_(inner), input_(input), inner_regs_(inner_regs), r_(tape_regs), scans_(scans), capacity_(capacity) {}

  std::optional<Symbol> read(std::size_t index) override {
    const auto idx = static_cast<Symbol>(index);
    if (idx < r_.get(kBufStart)) restart();
    while (true) {
      const Symbol start = r_.get(kBufStart);
      if (idx >= start && idx < start + r_.get(kBufLen)) return r_.get(kBuf + static_cast<std::size_t>(idx - start));
      if (r_.get(kHalted)) return std::nullopt;
      const Symbol old_start = start, old_len = r_.get(kBufLen);
      r_.set(kBufStart, r_.get(kEmitted));
      r_.set(kBufLen, 0);
      BufferEmitter em(*this);
      StepEnv env{input_, inner_regs_, em, scans_};
      if (!inner_.step(env)) {
        r_.set(kHalted, 1);
        r_.set(kBufStart, old_start);
        r_.set(kBufLen, old_len);
      }
    }
  }

 private:
  class BufferEmitter final : public Emitter {
   public:
    explicit BufferEmitter(ComposedTape& t) : t_(t) {}
    void emit(Symbol s) override {
      const Symbol len = t_.r_.get(kBufLen);
      if (static_cast<std::size_t>(len) >= t_.capacity_) fail(ErrorKind::Internal, "step emitted more than its declared bound");
      t_.r_.set(kBuf + static_cast<std::size_t>(len), s);
      t_.r_.set(kBufLen, len + 1);
      t_.r_.set(kEmitted, t_.r_.get(kEmitted) + 1);
    }

   private:
    ComposedTape& t_;
  };

  void restart() {
    inner_regs_.clear();
    r_.clear();
    for (auto& s : scans_) s->reset();
  }

  const Transducer& inner_;
  Tape& input_;
  RegisterView inner_regs_;
  RegisterView r_;
  std::span<std::unique_ptr<SubwordScan>> scans_;
  std::size_t capacity_;
};

class Composed final : public Transducer {
 public:
  Composed(std::shared_ptr<const Transducer> outer, std::shared_ptr<const Transducer> inner)
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    outer_off_ = layout_.append(outer_->layout(), outer_->name() + ".");
    inner_off_ = layout_.append(inner_->layout(), inner_->name() + ".");
    tape_off_ = layout_.declare_int("tape.emitted");
    layout_.declare_int("tape.buf_start");
    layout_.declare_int("tape.buf_len");
    layout_.declare_enum("tape.halted", 2);
    capacity_ = std::max<std::size_t>(1, inner_->max_emit_per_step());
    for (std::size_t i = 0; i < capacity_; ++i) layout_.declare_int("tape.buf" + std::to_string(i));
  }

  std::string name() const override { return outer_->name() + "∘" + inner_->name(); }
  const RegisterLayout& layout() const override { return layout_; }
  std::size_t max_emit_per_step() const override { return outer_->max_emit_per_step(); }
  std::size_t oracle_slots() const override { return outer_->oracle_slots() + inner_->oracle_slots(); }
  void make_scans(std::vector<std::unique_ptr<SubwordScan>>& out) const override {
    outer_->make_scans(out);
    inner_->make_scans(out);
  }

  bool step(StepEnv& env) const override {
    const std::size_t no = outer_->oracle_slots();
    ComposedTape tape(*inner_, env.input, env.regs.sub(inner_off_, inner_->layout().size()),
                      env.regs.sub(tape_off_, 4 + capacity_), env.scans.subspan(no, inner_->oracle_slots()), capacity_);
    StepEnv outer_env{tape, env.regs.sub(outer_off_, outer_->layout().size()), env.out, env.scans.first(no)};
    return outer_->step(outer_env);
  }

 private:
  std::shared_ptr<const Transducer> outer_, inner_;
  RegisterLayout layout_;
  std::size_t outer_off_ = 0, inner_off_ = 0, tape_off_ = 0, capacity_ = 1;
};

class Copier final : public Transducer {
 public:
  Copier(std::string name, std::size_t copies) : name_(std::move(name)), copies_(copies) { layout_.declare_int("pos"); }
  std::string name() const override { return name_; }
  const RegisterLayout& layout() const override { return layout_; }
  std::size_t max_emit_per_step() const override { return copies_; }
  bool step(StepEnv& env) const override {
    const Symbol pos = env.regs.get(0);
    auto x = env.input.read(static_cast<std::size_t>(pos));
    if (!x) return false;
    for (std::size_t i = 0; i < copies_; ++i) env.out.emit(*x);
    env.regs.set(0, pos + 1);
    return true;
  }

 private:
  std::string name_;
  std::size_t copies_;
  RegisterLayout layout_;
};

class VectorEmitter final : public Emitter {
 public:
  explicit VectorEmitter(std::vector<Symbol>& out) : out_(out) {}
  void emit(Symbol s) override { out_.push_back(s); }

 private:
  std::vector<Symbol>& out_;
};

}  // namespace

std::shared_ptr<const Transducer> compose(std::shared_ptr<const Transducer> outer, std::shared_ptr<const Transducer> inner) {
  return std::make_shared<Composed>(std::move(outer), std::move(inner));
}

std::shared_ptr<const Transducer> identity_transducer() { return std::make_shared<Copier>("identity", 1); }
std::shared_ptr<const Transducer> doubler_transducer() { return std::make_shared<Copier>("doubler", 2); }

RunResult run(const Transducer& t, const std::vector<Symbol>& input, const RunOptions& options) {
  RegisterFile file(t.layout());
  std::vector<std::unique_ptr<SubwordScan>> scans;
  t.make_scans(scans);
  if (scans.size() != t.oracle_slots()) fail(ErrorKind::Internal, "oracle slot count mismatch");
  VectorTape tape(input);
  RunResult result;
  VectorEmitter out(result.output);
  RegisterView all(file, 0, file.size());

  while (true) {
    bool more = false;
    if (options.audit) {
      const std::vector<Symbol> before = file.values();
      std::vector<std::unique_ptr<SubwordScan>> shadow;
      for (const auto& s : scans) shadow.push_back(s->clone());
      const std::size_t mark = result.output.size();
      StepEnv env{tape, all, out, scans};
      more = t.step(env);
      const std::vector<Symbol> after = file.values();
      std::vector<Symbol> replay_out;
      VectorEmitter replay_em(replay_out);
      file.restore(before);
      StepEnv replay{tape, all, replay_em, shadow};
      const bool replay_more = t.step(replay);
      const std::vector<Symbol> emitted(result.output.begin() + static_cast<std::ptrdiff_t>(mark), result.output.end());
      if (replay_more != more || replay_out != emitted || file.values() != after) {
        fail(ErrorKind::Internal, "audit: step of '" + t.name() + "' depends on undeclared state");
      }
    } else {
      StepEnv env{tape, all, out, scans};
      more = t.step(env);
    }
    if (!more) break;
    ++result.report.steps;
    if (options.work_bit_ceiling && file.peak_bits() > *options.work_bit_ceiling) {
      fail(ErrorKind::StateBudgetExceeded, "work state of '" + t.name() + "' reached " + std::to_string(file.peak_bits()) +
                                               " bits (ceiling " + std::to_string(*options.work_bit_ceiling) + ")");
    }
  }
  result.report.input_length = input.size();
  result.report.output_length = result.output.size();
  result.report.peak_work_bits = file.peak_bits();
  for (const auto& s : scans) {
    result.report.peak_oracle_bits += s->peak_bits();
    result.report.oracle_calls += s->calls();
  }
  return result;
}

}  // namespace garside
