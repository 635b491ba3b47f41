#include "garside/pipeline.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "garside/error.hpp"
#include "garside/word_engine.hpp"

namespace garside {

StageBOutput stage_fb(const GarsideSystem& sys, const Word& w) {
  auto out = run(*make_stage_fb(sys), encode_word(w)).output;
  StageBOutput r;
  r.k = out.at(0);
  for (std::size_t i = 1; i < out.size(); ++i) r.word.push_back(decode_letter(out[i]).atom);
  return r;
}

StageCOutput stage_fc(const GarsideSystem& sys, std::int64_t k, const PositiveWord& wb, const Oracle& oracle) {
  std::vector<Symbol> in{k};
  for (AtomId a : wb) in.push_back(encode_letter(pos(a)));
  auto out = run(*make_stage_fc(sys, oracle), in).output;
  StageCOutput r;
  r.k = out.front();
  r.q = out.back();
  for (std::size_t i = 1; i + 1 < out.size(); ++i) r.word.push_back(decode_letter(out[i]).atom);
  return r;
}

NormalForm stage_fd(const GarsideSystem& sys, std::int64_t k, const PositiveWord& wc, std::int64_t q) {
  std::vector<Symbol> in{k};
  for (AtomId a : wc) in.push_back(encode_letter(pos(a)));
  in.push_back(q);
  return decode_normal_form(run(*make_stage_fd(sys), in).output);
}

NormalForm lnf(const GarsideSystem& sys, const Word& w, const Oracle& oracle, bool reduce_first) {
  const StageBOutput b = stage_fb(sys, reduce_first ? free_reduce(w) : w);
  const StageCOutput c = stage_fc(sys, b.k, b.word, oracle);
  return stage_fd(sys, c.k, c.word, c.q);
}

ProfileFit fit_log2(const std::vector<ProfileRow>& rows) {
  ProfileFit fit;
  const double m = static_cast<double>(rows.size());
  if (rows.empty()) return fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    const double x = std::log2(static_cast<double>(std::max<std::size_t>(r.n, 1)));
    const double y = static_cast<double>(r.report.peak_work_bits);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double den = m * sxx - sx * sx;
  fit.b = den == 0 ? 0 : (m * sxy - sx * sy) / den;
  fit.a = (sy - fit.b * sx) / m;
  for (const auto& r : rows) {
    const double x = std::log2(static_cast<double>(std::max<std::size_t>(r.n, 1)));
    fit.residuals.push_back(static_cast<double>(r.report.peak_work_bits) - (fit.a + fit.b * x));
  }
  return fit;
}

Profile space_profile(const Transducer& t, const InputFamily& family, const std::vector<std::size_t>& sizes,
                      const RunOptions& options) {
  Profile p;
  for (std::size_t n : sizes) p.rows.push_back({n, run(t, family(n), options).report});
  p.fit = fit_log2(p.rows);
  return p;
}

std::vector<Symbol> delta_noise_family(const GarsideSystem& sys, std::size_t n) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  const AtomId first = 0;
  const auto second = static_cast<AtomId>(sys.atom_count() > 1 ? 1 : 0);
  std::vector<Symbol> out;
  std::size_t unit = 0;
  while (out.size() < n) {
    Word piece;
    switch (rng() % 3) {
      case 0:
        piece = to_word(sys.delta_word());
        break;
      case 1:
        piece = {pos(first), pos(second)};
        break;
      default: {
        const auto x = static_cast<AtomId>(unit % sys.atom_count());
        piece = {pos(x), neg(x)};
        break;
      }
    }
    for (Letter x : piece) {
      if (out.size() < n) out.push_back(encode_letter(x));
    }
    ++unit;
  }
  return out;
}

std::string format_profile_tsv(const Profile& profile) {
  std::ostringstream out;
  out << "n\tpeak_work_bits\tpeak_oracle_bits\toracle_calls\toutput_len\n";
  for (const auto& r : profile.rows) {
    out << r.n << '\t' << r.report.peak_work_bits << '\t' << r.report.peak_oracle_bits << '\t' << r.report.oracle_calls
        << '\t' << r.report.output_length << '\n';
  }
  return out.str();
}

}  // namespace garside
