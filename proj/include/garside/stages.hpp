#pragma once

#include <memory>
#include <vector>

#include "garside/normal_form.hpp"
#include "garside/oracle.hpp"
#include "garside/system.hpp"
#include "garside/transducer.hpp"

namespace garside {

// Tape encodings: a letter x^{±1} is ±(x+1). Stage (b) output is [k, w_b...],
// stage (c) output is [k, w_c..., q], stage (d) output is [p, s1, ..., sl].

inline Symbol encode_letter(Letter x) {
  const Symbol v = static_cast<Symbol>(x.atom) + 1;
  return x.inverse ? -v : v;
}
inline Letter decode_letter(Symbol s) {
  return s < 0 ? neg(static_cast<AtomId>(-s - 1)) : pos(static_cast<AtomId>(s - 1));
}
std::vector<Symbol> encode_word(const Word& w);

/// Stage (b): counts negative letters, then rewrites with the τ-twists.
/// The transducers keep a reference to `sys`.
std::shared_ptr<const Transducer> make_stage_fb(const GarsideSystem& sys);
/// Stage (c): Algorithm 1 with the given word-problem oracle.
std::shared_ptr<const Transducer> make_stage_fc(const GarsideSystem& sys, const Oracle& oracle);
/// Stage (d): maximal-munch read-off of τ^q(w_c).
std::shared_ptr<const Transducer> make_stage_fd(const GarsideSystem& sys);
/// fd ∘ fc ∘ fb composed without intermediate tapes.
std::shared_ptr<const Transducer> make_pipeline(const GarsideSystem& sys, const Oracle& oracle);

/// Parses a stage (d) tape.
NormalForm decode_normal_form(const std::vector<Symbol>& tape);

}  // namespace garside
