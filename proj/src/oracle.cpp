#include "garside/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "garside/bits.hpp"
#include "garside/error.hpp"
#include "garside/modular.hpp"
#include "garside/normal_form.hpp"
#include "garside/word_engine.hpp"

namespace garside {

namespace {

constexpr std::size_t kResidueBits = 61;

using ModMat = std::vector<std::uint64_t>;

void mul_into(const ModMat& a, const ModMat& b, ModMat& out, std::size_t dim, std::uint64_t p) {
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < dim; ++k) s = modular::add(s, modular::mul(a[r * dim + k], b[k * dim + c], p), p);
      out[r * dim + c] = s;
    }
  }
}

ModMat identity_mod(std::size_t dim) {
  ModMat m(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1;
  return m;
}

ModMat eval_mod(const LaurentMatrix& m, std::uint64_t point, std::uint64_t point_inv, std::uint64_t p) {
  ModMat out(m.dim() * m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) out[r * m.dim() + c] = m.at(r, c).eval_mod(point, point_inv, p);
  }
  return out;
}

struct MatStat {
  std::int64_t lo = 0, hi = 0;
  double log2_rs = 0;
};

}  // namespace

struct ModularData {
  std::size_t dim = 0;
  std::size_t atoms = 0;
  // [0, n) generators, [n, 2n) inverses, 2n Δ, 2n+1 Δ⁻¹.
  std::vector<LaurentMatrix> mats;
  std::vector<MatStat> stats;
  std::uint64_t fp_prime = 0, fp_point = 0, fp_point_inv = 0;
  std::vector<ModMat> fp_mats;

  std::size_t delta_index() const { return 2 * atoms; }
  std::size_t delta_inv_index() const { return 2 * atoms + 1; }
  std::size_t letter_index(Letter x) const { return x.inverse ? atoms + x.atom : x.atom; }

  /// Exact identity test for the product of mats[index(k)], k < count.
  /// `scratch` receives the bits in use while checking.
  bool identity(std::size_t count, const std::function<std::size_t(std::size_t)>& index, std::size_t& scratch) const {
    std::int64_t sum_lo = 0, sum_hi = 0, sum_pos_hi = 0;
    double log2_rs = 0;
    for (std::size_t k = 0; k < count; ++k) {
      const MatStat& s = stats[index(k)];
      sum_lo += s.lo;
      sum_hi += s.hi;
      log2_rs += s.log2_rs;
      sum_pos_hi += std::max<std::int64_t>(s.hi, 0);
    }
    const std::int64_t E = std::max<std::int64_t>(0, -sum_lo);
    const std::int64_t degree = E + std::max<std::int64_t>(sum_hi, 0);
    const std::uint64_t top = static_cast<std::uint64_t>(degree) + 2;
    const double lt = std::log2(static_cast<double>(top));
    const double bits = static_cast<double>(E + sum_pos_hi) * lt + log2_rs + 2;
    const std::size_t nprimes = static_cast<std::size_t>(std::ceil(bits / 60.0)) + 1;
    const auto& primes = modular::large_primes(nprimes);

    const std::size_t cells = dim * dim;
    scratch = 2 * cells * kResidueBits + mats.size() * cells * kResidueBits + magnitude_bits(static_cast<std::int64_t>(top)) +
              magnitude_bits(static_cast<std::int64_t>(nprimes)) + magnitude_bits(static_cast<std::int64_t>(count));

    ModMat acc, tmp(cells);
    std::vector<ModMat> evaluated(mats.size());
    const ModMat one = identity_mod(dim);
    for (std::uint64_t point = 2; point <= top; ++point) {
      for (std::size_t pi = 0; pi < nprimes; ++pi) {
        const std::uint64_t p = primes[pi];
        const std::uint64_t inv = modular::inv(point, p);
        for (std::size_t m = 0; m < mats.size(); ++m) evaluated[m] = eval_mod(mats[m], point, inv, p);
        acc = one;
        for (std::size_t k = 0; k < count; ++k) {
          mul_into(acc, evaluated[index(k)], tmp, dim, p);
          std::swap(acc, tmp);
        }
        if (acc != one) return false;
      }
    }
    return true;
  }
};

namespace {

std::shared_ptr<const ModularData> make_modular(const GarsideSystem& sys) {
  if (!sys.has_matrix_rep()) {
    fail(ErrorKind::NoRepresentation, "system '" + sys.name() + "' has no matrix representation; use the reference backend");
  }
  auto d = std::make_shared<ModularData>();
  const auto& rep = sys.matrix_rep();
  d->dim = rep.front().dim();
  d->atoms = rep.size();
  for (const auto& m : rep) d->mats.push_back(m);
  for (const auto& m : rep) d->mats.push_back(m.inverse());
  LaurentMatrix delta = LaurentMatrix::identity(d->dim);
  for (AtomId a : sys.delta_word()) delta = delta * rep[a];
  d->mats.push_back(delta);
  d->mats.push_back(delta.inverse());
  for (const auto& m : d->mats) {
    MatStat s;
    s.lo = m.min_exponent();
    s.hi = m.max_exponent();
    s.log2_rs = std::log2(m.row_abs_sum().convert_to<double>() + 1.0);
    d->stats.push_back(s);
  }
  d->fp_prime = modular::large_primes(1)[0];
  d->fp_point = 0x5bd1e995ULL % d->fp_prime;
  d->fp_point_inv = modular::inv(d->fp_point, d->fp_prime);
  for (const auto& m : d->mats) d->fp_mats.push_back(eval_mod(m, d->fp_point, d->fp_point_inv, d->fp_prime));
  return d;
}

std::size_t weight_bits(const std::optional<std::int64_t>& w) { return w ? magnitude_bits(*w) : 0; }

class ModularScan final : public SubwordScan {
 public:
  ModularScan(const GarsideSystem& sys, std::shared_ptr<const ModularData> d) : sys_(sys), d_(std::move(d)) { reset(); }

  std::unique_ptr<SubwordScan> clone() const override { return std::make_unique<ModularScan>(*this); }

  void reset() override {
    fp_ = identity_mod(d_->dim);
    tmp_.assign(d_->dim * d_->dim, 0);
    count_ = 0;
    weight_ = sys_.atom_weights() ? std::optional<std::int64_t>(0) : std::nullopt;
    meter(0);
  }

  void push(AtomId a) override {
    mul_into(fp_, d_->fp_mats[a], tmp_, d_->dim, d_->fp_prime);
    std::swap(fp_, tmp_);
    ++count_;
    if (weight_) *weight_ += (*sys_.atom_weights())[a];
    meter(0);
  }

  bool has_invariant() const override { return weight_.has_value(); }

  std::optional<std::int64_t> power_candidate() const override {
    if (!weight_ || *weight_ % sys_.delta_weight() != 0) return std::nullopt;
    return *weight_ / sys_.delta_weight();
  }

  bool equals_delta_power(std::int64_t q, const LetterSource& replay) override {
    ++calls_;
    const std::size_t cells = d_->dim * d_->dim;
    // Fingerprint: compare against Δ^q at the fixed point.
    if (!cached_q_ || *cached_q_ != q) {
      ModMat base = d_->fp_mats[q >= 0 ? d_->delta_index() : d_->delta_inv_index()], t2(cells);
      target_ = identity_mod(d_->dim);
      for (std::uint64_t e = static_cast<std::uint64_t>(q < 0 ? -q : q); e; e >>= 1) {
        if (e & 1) {
          mul_into(target_, base, t2, d_->dim, d_->fp_prime);
          std::swap(target_, t2);
        }
        mul_into(base, base, t2, d_->dim, d_->fp_prime);
        std::swap(base, t2);
      }
      cached_q_ = q;
    }
    meter(2 * cells * kResidueBits + magnitude_bits(q));
    if (target_ != fp_) return false;

    const std::size_t n = count_;
    const std::size_t tail = q >= 0 ? d_->delta_inv_index() : d_->delta_index();
    const std::size_t total = n + static_cast<std::size_t>(q < 0 ? -q : q);
    std::size_t scratch = 0;
    bool ok = d_->identity(total, [&](std::size_t k) { return k < n ? static_cast<std::size_t>(replay(k)) : tail; }, scratch);
    meter(scratch);
    return ok;
  }

  std::size_t scratch_bits() const override { return current_; }
  std::size_t peak_bits() const override { return peak_; }

 private:
  void meter(std::size_t extra) {
    current_ = d_->dim * d_->dim * kResidueBits + magnitude_bits(static_cast<std::int64_t>(count_)) + weight_bits(weight_) + extra;
    peak_ = std::max(peak_, current_);
  }

  const GarsideSystem& sys_;
  std::shared_ptr<const ModularData> d_;
  ModMat fp_, tmp_, target_;
  std::optional<std::int64_t> cached_q_;
  std::size_t count_ = 0;
  std::optional<std::int64_t> weight_;
  std::size_t current_ = 0, peak_ = 0;
};

class ReferenceScan final : public SubwordScan {
 public:
  explicit ReferenceScan(const GarsideSystem& sys) : sys_(sys) { reset(); }

  std::unique_ptr<SubwordScan> clone() const override { return std::make_unique<ReferenceScan>(*this); }

  void reset() override {
    nf_ = NormalForm{};
    weight_ = sys_.atom_weights() ? std::optional<std::int64_t>(0) : std::nullopt;
    meter();
  }

  void push(AtomId a) override {
    multiply_right(sys_, nf_, pos(a));
    if (weight_) *weight_ += (*sys_.atom_weights())[a];
    meter();
  }

  bool has_invariant() const override { return weight_.has_value(); }

  std::optional<std::int64_t> power_candidate() const override {
    if (!weight_ || *weight_ % sys_.delta_weight() != 0) return std::nullopt;
    return *weight_ / sys_.delta_weight();
  }

  bool equals_delta_power(std::int64_t q, const LetterSource&) override {
    ++calls_;
    return nf_.p == q && nf_.factors.empty();
  }

  std::size_t scratch_bits() const override { return current_; }
  std::size_t peak_bits() const override { return peak_; }

 private:
  void meter() {
    current_ = magnitude_bits(nf_.p) + nf_.factors.size() * enum_bits(sys_.simple_count()) + weight_bits(weight_);
    peak_ = std::max(peak_, current_);
  }

  const GarsideSystem& sys_;
  NormalForm nf_;
  std::optional<std::int64_t> weight_;
  std::size_t current_ = 0, peak_ = 0;
};

}  // namespace

std::string to_string(BackendKind kind) { return kind == BackendKind::Reference ? "reference" : "modular"; }

BackendKind parse_backend(std::string_view text) {
  if (text == "reference") return BackendKind::Reference;
  if (text == "modular") return BackendKind::ModularLinear;
  fail(ErrorKind::Parse, "unknown backend '" + std::string(text) + "' (expected reference or modular)");
}

Oracle::Oracle(const GarsideSystem& sys, BackendKind kind) : sys_(&sys), kind_(kind) {
  if (kind == BackendKind::ModularLinear) mod_ = make_modular(sys);
}
Oracle::~Oracle() = default;
Oracle::Oracle(const Oracle&) = default;
Oracle& Oracle::operator=(const Oracle&) = default;

bool Oracle::is_identity(const Word& w) const {
  if (kind_ == BackendKind::Reference) {
    NormalForm nf = greedy_reference(*sys_, w);
    return nf.p == 0 && nf.factors.empty();
  }
  for (Letter x : w) {
    if (x.atom >= mod_->atoms) fail(ErrorKind::Internal, "letter outside the representation");
  }
  Word r = free_reduce(w);
  std::size_t scratch = 0;
  return mod_->identity(r.size(), [&](std::size_t k) { return mod_->letter_index(r[k]); }, scratch);
}

std::unique_ptr<SubwordScan> Oracle::scan() const {
  if (kind_ == BackendKind::Reference) return std::make_unique<ReferenceScan>(*sys_);
  return std::make_unique<ModularScan>(*sys_, mod_);
}

bool word_problem(const GarsideSystem& sys, const Word& w, BackendKind backend) {
  return Oracle(sys, backend).is_identity(w);
}

}  // namespace garside
