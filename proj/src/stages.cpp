#include "garside/stages.hpp"

#include <algorithm>

#include "garside/error.hpp"

namespace garside {

std::vector<Symbol> encode_word(const Word& w) {
  std::vector<Symbol> out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(encode_letter(x));
  return out;
}

namespace {

AtomId atom_of(Symbol s) { return static_cast<AtomId>((s < 0 ? -s : s) - 1); }
Symbol positive_symbol(AtomId a) { return static_cast<Symbol>(a) + 1; }

Symbol must_read(Tape& t, std::size_t idx, const char* what) {
  auto x = t.read(idx);
  if (!x) fail(ErrorKind::Internal, std::string("malformed stage tape: missing ") + what);
  return *x;
}

class StageB final : public Transducer {
 public:
  enum Phase : Symbol { kCount, kEmit };
  enum Reg : std::size_t { kPhase, kPos, kK, kJ };

  explicit StageB(const GarsideSystem& sys) : sys_(sys) {
    layout_.declare_enum("phase", 2);
    layout_.declare_int("pos");
    layout_.declare_int("k");
    layout_.declare_int("j");
    for (AtomId a = 0; a < sys.atom_count(); ++a) {
      max_emit_ = std::max(max_emit_, sys.simple(sys.dpartial(sys.atom_simple(a))).canonical_word.size());
    }
  }

  std::string name() const override { return "fb"; }
  const RegisterLayout& layout() const override { return layout_; }
  std::size_t max_emit_per_step() const override { return max_emit_; }

  bool step(StepEnv& env) const override {
    const RegisterView& r = env.regs;
    const Symbol pos = r.get(kPos);
    auto x = env.input.read(static_cast<std::size_t>(pos));
    if (r.get(kPhase) == kCount) {
      if (x) {
        if (*x < 0) r.set(kK, r.get(kK) + 1);
        r.set(kPos, pos + 1);
      } else {
        env.out.emit(r.get(kK));
        r.set(kJ, r.get(kK));
        r.set(kPos, 0);
        r.set(kPhase, kEmit);
      }
      return true;
    }
    if (!x) return false;
    const Symbol j = r.get(kJ);
    if (*x > 0) {
      env.out.emit(positive_symbol(sys_.tau_atom_power(atom_of(*x), -j)));
    } else {
      const SimpleId d = sys_.dpartial(sys_.atom_simple(atom_of(*x)));
      for (AtomId a : sys_.simple(d).canonical_word) env.out.emit(positive_symbol(sys_.tau_atom_power(a, -j)));
      r.set(kJ, j - 1);
    }
    r.set(kPos, pos + 1);
    return true;
  }

 private:
  const GarsideSystem& sys_;
  RegisterLayout layout_;
  std::size_t max_emit_ = 1;
};

class StageC final : public Transducer {
 public:
  enum Phase : Symbol { kStart, kOuter, kScan, kDone };
  enum Reg : std::size_t { kPhase, kI, kJ, kQ, kQ1, kQmin, kQmax, kBestJ, kBestQ1 };

  StageC(const GarsideSystem& sys, const Oracle& oracle) : sys_(sys), oracle_(oracle) {
    layout_.declare_enum("phase", 4);
    for (const char* n : {"i", "j", "q", "q1", "qmin", "qmax", "best_j", "best_q1"}) layout_.declare_int(n);
  }

  std::string name() const override { return "fc"; }
  const RegisterLayout& layout() const override { return layout_; }
  std::size_t max_emit_per_step() const override { return 1; }
  std::size_t oracle_slots() const override { return 1; }
  void make_scans(std::vector<std::unique_ptr<SubwordScan>>& out) const override { out.push_back(oracle_.scan()); }

  bool step(StepEnv& env) const override {
    const RegisterView& r = env.regs;
    SubwordScan& scan = *env.scans[0];
    switch (r.get(kPhase)) {
      case kStart:
        env.out.emit(must_read(env.input, 0, "k"));
        r.set(kI, 1);
        r.set(kPhase, kOuter);
        return true;
      case kOuter: {
        const Symbol i = r.get(kI);
        if (!env.input.read(static_cast<std::size_t>(i))) {
          env.out.emit(r.get(kQ));
          r.set(kPhase, kDone);
          return true;
        }
        scan.reset();
        r.set(kJ, i);
        r.set(kBestJ, 0);
        r.set(kBestQ1, 0);
        r.set(kPhase, kScan);
        return true;
      }
      case kScan:
        scan_step(env, scan);
        return true;
      default:
        return false;
    }
  }

 private:
  void scan_step(StepEnv& env, SubwordScan& scan) const {
    const RegisterView& r = env.regs;
    const Symbol i = r.get(kI), j = r.get(kJ);
    auto x = env.input.read(static_cast<std::size_t>(j));
    if (!x) {
      if (r.get(kBestJ) != 0) {
        r.set(kQ, r.get(kQ) + r.get(kBestQ1));
        r.set(kI, r.get(kBestJ) + 1);
      } else {
        const Symbol xi = must_read(env.input, static_cast<std::size_t>(i), "letter");
        env.out.emit(positive_symbol(sys_.tau_atom_power(atom_of(xi), -r.get(kQ))));
        r.set(kI, i + 1);
      }
      r.set(kPhase, kOuter);
      return;
    }
    scan.push(atom_of(*x));
    const Symbol len = j - i + 1;
    const auto lmax = static_cast<Symbol>(sys_.len_max()), lmin = static_cast<Symbol>(sys_.len_min());
    r.set(kQmin, std::max<Symbol>(1, (len + lmax - 1) / lmax));
    r.set(kQmax, len / lmin);
    LetterSource replay = [&env, i](std::size_t k) {
      return atom_of(must_read(env.input, static_cast<std::size_t>(i) + k, "letter"));
    };
    auto try_power = [&](Symbol q1) {
      r.set(kQ1, q1);
      if (scan.equals_delta_power(q1, replay)) {
        r.set(kBestJ, j);
        r.set(kBestQ1, q1);
        return true;
      }
      return false;
    };
    if (scan.has_invariant()) {
      auto c = scan.power_candidate();
      if (c && *c >= r.get(kQmin) && *c <= r.get(kQmax)) try_power(*c);
    } else {
      for (Symbol q1 = r.get(kQmin); q1 <= r.get(kQmax); ++q1) {
        if (try_power(q1)) break;
      }
    }
    r.set(kJ, j + 1);
  }

  const GarsideSystem& sys_;
  Oracle oracle_;
  RegisterLayout layout_;
};

class StageD final : public Transducer {
 public:
  enum Phase : Symbol { kStart, kFindEnd, kMunch, kDone };
  enum Reg : std::size_t { kPhase, kK, kPos, kEnd, kQ, kNode };

  explicit StageD(const GarsideSystem& sys) : sys_(sys) {
    layout_.declare_enum("phase", 4);
    for (const char* n : {"k", "pos", "end", "q"}) layout_.declare_int(n);
    layout_.declare_enum("node", sys.trie_size());
  }

  std::string name() const override { return "fd"; }
  const RegisterLayout& layout() const override { return layout_; }
  std::size_t max_emit_per_step() const override { return 1; }

  bool step(StepEnv& env) const override {
    const RegisterView& r = env.regs;
    switch (r.get(kPhase)) {
      case kStart:
        r.set(kK, must_read(env.input, 0, "k"));
        r.set(kPos, 1);
        r.set(kPhase, kFindEnd);
        return true;
      case kFindEnd: {
        const Symbol pos = r.get(kPos);
        if (env.input.read(static_cast<std::size_t>(pos))) {
          r.set(kPos, pos + 1);
          return true;
        }
        if (pos < 2) fail(ErrorKind::Internal, "malformed stage tape: missing q");
        r.set(kEnd, pos - 1);
        r.set(kQ, must_read(env.input, static_cast<std::size_t>(pos - 1), "q"));
        env.out.emit(r.get(kQ) - r.get(kK));
        r.set(kPos, 1);
        r.set(kNode, sys_.trie_root());
        r.set(kPhase, kMunch);
        return true;
      }
      case kMunch: {
        const Symbol pos = r.get(kPos);
        const auto node = static_cast<GarsideSystem::TrieNode>(r.get(kNode));
        if (pos == r.get(kEnd)) {
          if (node != sys_.trie_root()) emit_factor(env, node);
          r.set(kPhase, kDone);
          return true;
        }
        const AtomId a = sys_.tau_atom_power(atom_of(must_read(env.input, static_cast<std::size_t>(pos), "letter")), r.get(kQ));
        if (auto child = sys_.trie_step(node, a)) {
          r.set(kNode, *child);
          r.set(kPos, pos + 1);
        } else {
          emit_factor(env, node);
          r.set(kNode, sys_.trie_root());
        }
        return true;
      }
      default:
        return false;
    }
  }

 private:
  void emit_factor(StepEnv& env, GarsideSystem::TrieNode node) const {
    const SimpleId s = sys_.trie_simple(node);
    if (!sys_.is_proper(s)) fail(ErrorKind::Internal, "stage (d) met a non-proper factor");
    env.out.emit(s);
  }

  const GarsideSystem& sys_;
  RegisterLayout layout_;
};

}  // namespace

std::shared_ptr<const Transducer> make_stage_fb(const GarsideSystem& sys) { return std::make_shared<StageB>(sys); }
std::shared_ptr<const Transducer> make_stage_fc(const GarsideSystem& sys, const Oracle& oracle) {
  return std::make_shared<StageC>(sys, oracle);
}
std::shared_ptr<const Transducer> make_stage_fd(const GarsideSystem& sys) { return std::make_shared<StageD>(sys); }

std::shared_ptr<const Transducer> make_pipeline(const GarsideSystem& sys, const Oracle& oracle) {
  return compose(make_stage_fd(sys), compose(make_stage_fc(sys, oracle), make_stage_fb(sys)));
}

NormalForm decode_normal_form(const std::vector<Symbol>& tape) {
  if (tape.empty()) fail(ErrorKind::Internal, "empty stage (d) tape");
  NormalForm nf;
  nf.p = tape[0];
  for (std::size_t i = 1; i < tape.size(); ++i) nf.factors.push_back(static_cast<SimpleId>(tape[i]));
  return nf;
}

}  // namespace garside
