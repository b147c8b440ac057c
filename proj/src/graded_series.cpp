#include "gvkit/graded_series.hpp"

#include "gvkit/error.hpp"

#include <optional>

namespace gvkit {

namespace {

constexpr const char *kModule = "series_core";

const HalfLaurent &exact_zero() {
  static const HalfLaurent zero;
  return zero;
}

// The constant term of a unit series must be exactly 1 wherever it is known.
void require_unit_constant(const GradedSeries &a, const char *op) {
  const auto zero = CurveClass::zero(a.rank());
  const HalfLaurent &c = a.at(zero);
  bool ok = c.coeffs().size() == 1 && c.coeffs().begin()->first == 0 &&
            c.coeffs().begin()->second == 1 &&
            (!c.precision() || *c.precision() >= 0);
  if (!ok)
    throw PreconditionError(kModule, op, "constant term must be 1",
                            to_string(zero));
}

GradedSeries without_constant(const GradedSeries &a) {
  GradedSeries::Terms terms = a.terms();
  terms.erase(CurveClass::zero(a.rank()));
  return GradedSeries(a.cutoff(), std::move(terms));
}

} // namespace

GradedSeries::GradedSeries(DegreeCutoff cutoff) : cutoff_(std::move(cutoff)) {}

GradedSeries::GradedSeries(DegreeCutoff cutoff, Terms terms)
    : cutoff_(std::move(cutoff)) {
  for (auto &[beta, c] : terms) {
    if (!cutoff_.admits(beta))
      throw PreconditionError(kModule, "GradedSeries",
                              "class is not effective or exceeds cutoff",
                              to_string(beta));
    if (!c.is_exact_zero())
      terms_.emplace(beta, std::move(c));
  }
}

GradedSeries GradedSeries::unit(DegreeCutoff cutoff) {
  auto zero = CurveClass::zero(cutoff.rank());
  return monomial(std::move(cutoff), zero, HalfLaurent::constant(1));
}

GradedSeries GradedSeries::monomial(DegreeCutoff cutoff,
                                    const CurveClass &beta,
                                    HalfLaurent coeff) {
  GradedSeries s(std::move(cutoff));
  s.add_term(beta, coeff);
  return s;
}

const HalfLaurent &GradedSeries::at(const CurveClass &beta) const {
  auto it = terms_.find(beta);
  return it == terms_.end() ? exact_zero() : it->second;
}

void GradedSeries::add_term(const CurveClass &beta, const HalfLaurent &coeff) {
  if (beta.rank() != rank())
    throw PreconditionError(kModule, "add_term", "rank mismatch",
                            to_string(beta));
  if (!beta.is_effective())
    throw ConeError(kModule, "add_term", "class is not effective",
                    to_string(beta));
  if (!cutoff_.admits(beta))
    return;
  auto it = terms_.find(beta);
  if (it == terms_.end()) {
    if (!coeff.is_exact_zero())
      terms_.emplace(beta, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_exact_zero())
    terms_.erase(it);
}

bool GradedSeries::is_zero() const {
  for (const auto &[beta, c] : terms_)
    if (!c.empty())
      return false;
  return true;
}

bool GradedSeries::agrees_with(const GradedSeries &other) const {
  if (rank() != other.rank())
    return false;
  for (const auto &[beta, c] : terms_)
    if (!c.agrees_with(other.at(beta)))
      return false;
  for (const auto &[beta, c] : other.terms_)
    if (!contains(beta) && !c.agrees_with(exact_zero()))
      return false;
  return true;
}

GradedSeries GradedSeries::restricted(const DegreeCutoff &cutoff) const {
  if (cutoff.rank() != rank())
    throw PreconditionError(kModule, "restricted", "rank mismatch");
  GradedSeries out(cutoff);
  for (const auto &[beta, c] : terms_)
    if (cutoff.admits(beta))
      out.terms_.emplace(beta, c);
  return out;
}

GradedSeries GradedSeries::truncated(HalfUnit precision) const {
  GradedSeries out(cutoff_);
  for (const auto &[beta, c] : terms_)
    out.terms_.emplace(beta, c.truncated(precision));
  return out;
}

GradedSeries GradedSeries::with_negated_variable() const {
  GradedSeries out(cutoff_);
  for (const auto &[beta, c] : terms_)
    out.terms_.emplace(beta, c.with_negated_variable());
  return out;
}

void GradedSeries::require_compatible(const GradedSeries &rhs,
                                      const char *op) const {
  if (rank() != rhs.rank())
    throw PreconditionError(kModule, op, "rank mismatch");
  if (!(cutoff_ == rhs.cutoff_))
    throw PreconditionError(kModule, op, "cutoff mismatch");
}

GradedSeries &GradedSeries::operator+=(const GradedSeries &rhs) {
  require_compatible(rhs, "add");
  for (const auto &[beta, c] : rhs.terms_)
    add_term(beta, c);
  return *this;
}

GradedSeries &GradedSeries::operator-=(const GradedSeries &rhs) {
  require_compatible(rhs, "sub");
  for (const auto &[beta, c] : rhs.terms_)
    add_term(beta, -c);
  return *this;
}

GradedSeries &GradedSeries::operator*=(const Rational &c) {
  for (auto &kv : terms_)
    kv.second *= c;
  return *this;
}

GradedSeries gs_mul_serial(const GradedSeries &a, const GradedSeries &b) {
  if (a.rank() != b.rank())
    throw PreconditionError(kModule, "gs_mul", "rank mismatch");
  if (!(a.cutoff() == b.cutoff()))
    throw PreconditionError(kModule, "gs_mul", "cutoff mismatch");
  GradedSeries out(a.cutoff());
  for (const auto &[ba, ca] : a.terms())
    for (const auto &[bb, cb] : b.terms()) {
      auto beta = ba + bb;
      if (a.cutoff().admits(beta))
        out.add_term(beta, hl_mul(ca, cb));
    }
  return out;
}

GradedSeries gs_mul(const GradedSeries &a, const GradedSeries &b) {
  if (a.rank() != b.rank())
    throw PreconditionError(kModule, "gs_mul", "rank mismatch");
  if (!(a.cutoff() == b.cutoff()))
    throw PreconditionError(kModule, "gs_mul", "cutoff mismatch");

  const auto targets = a.cutoff().classes();
  const std::vector<std::pair<CurveClass, HalfLaurent>> lhs(a.terms().begin(),
                                                           a.terms().end());
  std::vector<HalfLaurent> slots(targets.size());

  const long n = static_cast<long>(targets.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const CurveClass &beta = targets[static_cast<std::size_t>(i)];
    HalfLaurent acc;
    for (const auto &[ba, ca] : lhs) {
      if (!ba.dominated_by(beta))
        continue;
      const HalfLaurent &cb = b.at(beta - ba);
      if (!cb.is_exact_zero())
        acc += hl_mul(ca, cb);
    }
    slots[static_cast<std::size_t>(i)] = std::move(acc);
  }

  GradedSeries::Terms terms;
  for (std::size_t i = 0; i < targets.size(); ++i)
    if (!slots[i].is_exact_zero())
      terms.emplace(targets[i], std::move(slots[i]));
  return GradedSeries(a.cutoff(), std::move(terms));
}

GradedSeries gs_log(const GradedSeries &a) {
  require_unit_constant(a, "gs_log");
  const GradedSeries x = without_constant(a);
  GradedSeries result(a.cutoff());
  GradedSeries power = x;
  for (long k = 1; !power.terms().empty(); ++k) {
    Rational c(k % 2 == 1 ? 1 : -1, k);
    result += c * power;
    power = gs_mul(power, x);
  }
  return result;
}

GradedSeries gs_exp(const GradedSeries &a) {
  const auto zero = CurveClass::zero(a.rank());
  if (!a.at(zero).empty())
    throw PreconditionError(kModule, "gs_exp", "constant term must vanish",
                            to_string(zero));
  const GradedSeries x = without_constant(a);
  GradedSeries result = GradedSeries::unit(a.cutoff());
  GradedSeries term = x;
  for (long k = 1; !term.terms().empty(); ++k) {
    result += term;
    term = ratio(1, k + 1) * gs_mul(term, x);
  }
  return result;
}

GradedSeries gs_div(const GradedSeries &a, const GradedSeries &b) {
  if (a.rank() != b.rank())
    throw PreconditionError(kModule, "gs_div", "rank mismatch");
  if (!(a.cutoff() == b.cutoff()))
    throw PreconditionError(kModule, "gs_div", "cutoff mismatch");
  require_unit_constant(b, "gs_div");
  const GradedSeries tail = without_constant(b);

  // c_beta = a_beta - sum_{0 < beta2 <= beta} b_beta2 c_{beta - beta2}
  GradedSeries::Terms out;
  for (const auto &beta : a.cutoff().classes()) {
    HalfLaurent acc = a.at(beta);
    for (const auto &[b2, cb] : tail.terms()) {
      if (!b2.dominated_by(beta))
        continue;
      auto it = out.find(beta - b2);
      if (it != out.end())
        acc -= hl_mul(cb, it->second);
    }
    if (!acc.is_exact_zero())
      out.emplace(beta, std::move(acc));
  }
  return GradedSeries(a.cutoff(), std::move(out));
}

PushResult push_class(const GradedSeries &a, const LatticeMap &phi,
                      const DegreeCutoff &target) {
  if (phi.rank() != a.rank() || target.rank() != a.rank())
    throw PreconditionError(kModule, "push_class", "rank mismatch");
  PushResult res{GradedSeries(target), {}};
  std::string offenders;
  for (const auto &[beta, c] : a.terms()) {
    auto image = phi(beta);
    if (!image.is_effective()) {
      offenders += (offenders.empty() ? "" : " ") + to_string(beta) + "->" +
                   to_string(image);
      continue;
    }
    if (!target.admits(image)) {
      res.beyond_cutoff.push_back(image);
      continue;
    }
    res.series.add_term(image, c);
  }
  if (!offenders.empty())
    throw ConeError(kModule, "push_class", "leaves effective cone", offenders);
  return res;
}

SignedSeries push_class_signed(const GradedSeries &a, const LatticeMap &phi) {
  if (phi.rank() != a.rank())
    throw PreconditionError(kModule, "push_class", "rank mismatch");
  SignedSeries out;
  for (const auto &[beta, c] : a.terms())
    out.emplace(phi(beta), c);
  return out;
}

} // namespace gvkit
