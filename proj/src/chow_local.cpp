#include "gvkit/chow_local.hpp"

#include "gvkit/error.hpp"

#include <algorithm>
#include <optional>

namespace gvkit {

namespace {

constexpr const char *kModule = "chow_local";

long sign_of_power(long e) { return e % 2 == 0 ? 1 : -1; }

const HalfLaurent &exact_zero() {
  static const HalfLaurent zero;
  return zero;
}

void require_support(const LocalFunction &f, const ChowModel &model,
                     const char *op) {
  for (const auto &[c, v] : f.values)
    if (!model.contains(c))
      throw PreconditionError(kModule, op, "support outside model",
                              to_string(c));
}

void require_unit_at_zero(const LocalFunction &f, const ChowModel &model,
                          const char *op) {
  const auto zero = model.zero_cycle();
  if (!model.contains(zero) || model.euler(zero) != 1)
    throw PreconditionError(kModule, op,
                            "model needs the zero cycle with Euler weight 1");
  const HalfLaurent &c = f.at(zero);
  bool ok = c.coeffs().size() == 1 && c.coeffs().begin()->first == 0 &&
            c.coeffs().begin()->second == 1 &&
            (!c.precision() || *c.precision() >= 0);
  if (!ok)
    throw PreconditionError(kModule, op, "value at the zero cycle must be 1",
                            to_string(zero));
}

LocalFunction without_zero(const LocalFunction &f, const ChowModel &model) {
  LocalFunction out = f;
  out.values.erase(model.zero_cycle());
  return out;
}

HalfLaurent kernel(long g, long k, long q_order, Convention convention) {
  return convention == Convention::local_minus_q
             ? kernel_minus_local(g, k, q_order)
             : kernel_minus(g, k, q_order);
}

long q_order_of(HalfUnit units) {
  return units >= 0 ? units / 2 : -((-units + 1) / 2);
}

} // namespace

ChowModel::ChowModel(std::vector<Generator> generators,
                     std::vector<Point> points)
    : generators_(std::move(generators)), points_(std::move(points)) {
  if (generators_.empty())
    throw PreconditionError(kModule, "ChowModel", "no generators");
  class_rank_ = generators_.front().curve_class.rank();
  for (const auto &g : generators_)
    if (g.curve_class.rank() != class_rank_)
      throw PreconditionError(kModule, "ChowModel",
                              "generator classes differ in rank", g.label);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto &p = points_[i];
    if (p.cycle.rank() != generators_.size() || !p.cycle.is_effective())
      throw PreconditionError(kModule, "ChowModel",
                              "cycle must be a nonnegative vector over the "
                              "generators",
                              to_string(p.cycle));
    if (!index_.emplace(p.cycle, i).second)
      throw PreconditionError(kModule, "ChowModel", "duplicate cycle",
                              to_string(p.cycle));
    if (!class_of(p.cycle).is_effective())
      throw PreconditionError(kModule, "ChowModel",
                              "pushed class is not effective",
                              to_string(p.cycle));
    if (p.cycle.is_zero() && p.euler != 1)
      throw PreconditionError(kModule, "ChowModel",
                              "zero cycle must have Euler weight 1");
  }
}

long ChowModel::euler(const Cycle &c) const {
  auto it = index_.find(c);
  if (it == index_.end())
    throw PreconditionError(kModule, "euler", "cycle outside model",
                            to_string(c));
  return points_[it->second].euler;
}

CurveClass ChowModel::class_of(const Cycle &c) const {
  auto out = CurveClass::zero(class_rank_);
  for (std::size_t i = 0; i < generators_.size(); ++i)
    out += c[i] * generators_[i].curve_class;
  return out;
}

std::vector<Cycle> ChowModel::ordered_cycles() const {
  std::vector<Cycle> out;
  for (const auto &p : points_)
    out.push_back(p.cycle);
  std::sort(out.begin(), out.end(), [](const Cycle &a, const Cycle &b) {
    return a.total() != b.total() ? a.total() < b.total() : a < b;
  });
  return out;
}

long ChowModel::max_multiplicity() const {
  long m = 0;
  for (const auto &p : points_)
    m = std::max(m, p.cycle.total());
  return m;
}

const HalfLaurent &LocalFunction::at(const Cycle &c) const {
  auto it = values.find(c);
  return it == values.end() ? exact_zero() : it->second;
}

void LocalFunction::add(const Cycle &c, const HalfLaurent &v) {
  auto it = values.find(c);
  if (it == values.end()) {
    if (!v.is_exact_zero())
      values.emplace(c, v);
    return;
  }
  it->second += v;
  if (it->second.is_exact_zero())
    values.erase(it);
}

LocalFunction LocalFunction::delta(const Cycle &c, HalfLaurent v) {
  LocalFunction f;
  f.add(c, v);
  return f;
}

long LocalGVTable::at(const Cycle &c, long g) const {
  auto it = entries.find(c);
  return it == entries.end() ? 0 : it->second.at(g);
}

void LocalGVTable::add(const Cycle &c, long g, long n) {
  if (n == 0)
    return;
  auto &v = entries[c];
  v.add(g, n);
  if (v.empty())
    entries.erase(c);
}

LocalFunction convolve_serial(const LocalFunction &f, const LocalFunction &h,
                              const ChowModel &model, OutsideModel outside) {
  require_support(f, model, "convolve");
  require_support(h, model, "convolve");
  LocalFunction out;
  for (const auto &[c1, v1] : f.values)
    for (const auto &[c2, v2] : h.values) {
      auto c = c1 + c2;
      if (!model.contains(c)) {
        if (outside == OutsideModel::error)
          throw PreconditionError(kModule, "convolve",
                                  "sum leaves the model", to_string(c));
        continue;
      }
      out.add(c, hl_mul(v1, v2) *
                     Rational(model.euler(c1) * model.euler(c2)));
    }
  return out;
}

LocalFunction convolve(const LocalFunction &f, const LocalFunction &h,
                       const ChowModel &model, OutsideModel outside) {
  require_support(f, model, "convolve");
  require_support(h, model, "convolve");
  if (outside == OutsideModel::error)
    for (const auto &[c1, v1] : f.values)
      for (const auto &[c2, v2] : h.values)
        if (!model.contains(c1 + c2))
          throw PreconditionError(kModule, "convolve", "sum leaves the model",
                                  to_string(c1 + c2));

  const auto &points = model.points();
  const std::vector<std::pair<Cycle, HalfLaurent>> lhs(f.values.begin(),
                                                      f.values.end());
  std::vector<HalfLaurent> slots(points.size());
  const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const Cycle &target = points[static_cast<std::size_t>(i)].cycle;
    HalfLaurent acc;
    for (const auto &[c1, v1] : lhs) {
      if (!c1.dominated_by(target))
        continue;
      const auto c2 = target - c1;
      const HalfLaurent &v2 = h.at(c2);
      if (v2.is_exact_zero())
        continue;
      acc += hl_mul(v1, v2) * Rational(model.euler(c1) * model.euler(c2));
    }
    slots[static_cast<std::size_t>(i)] = std::move(acc);
  }
  LocalFunction out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!slots[i].is_exact_zero())
      out.values.emplace(points[i].cycle, std::move(slots[i]));
  return out;
}

LocalFunction conv_log(const LocalFunction &f, const ChowModel &model) {
  require_support(f, model, "conv_log");
  require_unit_at_zero(f, model, "conv_log");
  const LocalFunction x = without_zero(f, model);
  LocalFunction result;
  LocalFunction power = x;
  for (long k = 1; !power.values.empty(); ++k) {
    const Rational c = ratio(k % 2 == 1 ? 1 : -1, k);
    for (const auto &[cy, v] : power.values)
      result.add(cy, v * c);
    power = convolve(power, x, model);
  }
  return result;
}

LocalFunction conv_exp(const LocalFunction &f, const ChowModel &model) {
  require_support(f, model, "conv_exp");
  const auto zero = model.zero_cycle();
  if (!model.contains(zero) || model.euler(zero) != 1)
    throw PreconditionError(kModule, "conv_exp",
                            "model needs the zero cycle with Euler weight 1");
  if (!f.at(zero).empty())
    throw PreconditionError(kModule, "conv_exp",
                            "value at the zero cycle must vanish");
  const LocalFunction x = without_zero(f, model);
  LocalFunction result = LocalFunction::delta(zero);
  LocalFunction term = x;
  for (long k = 1; !term.values.empty(); ++k) {
    for (const auto &[cy, v] : term.values)
      result.add(cy, v);
    term = convolve(term, x, model);
    for (auto &kv : term.values)
      kv.second *= ratio(1, k + 1);
  }
  return result;
}

LocalFunction push_multiple(const LocalFunction &f, long k,
                            const ChowModel &model, OutsideModel outside) {
  if (k < 1)
    throw PreconditionError(kModule, "push_multiple", "k must be positive");
  require_support(f, model, "push_multiple");
  LocalFunction out;
  for (const auto &[c, v] : f.values) {
    auto image = k * c;
    if (!model.contains(image)) {
      if (outside == OutsideModel::error)
        throw PreconditionError(kModule, "push_multiple",
                                "image outside model", to_string(image));
      continue;
    }
    out.add(image, v);
  }
  return out;
}

LocalFunction local_pt_from_gv(const LocalGVTable &n, const ChowModel &model,
                               long q_order, Convention convention) {
  if (q_order < 1)
    throw WindowError(kModule, "local_pt_from_gv", "window must reach q^1");
  LocalFunction log_f;
  for (const auto &[c, genus] : n.entries) {
    if (!model.contains(c))
      throw PreconditionError(kModule, "local_pt_from_gv",
                              "support outside model", to_string(c));
    if (c.is_zero())
      throw PreconditionError(kModule, "local_pt_from_gv",
                              "zero cycle carries no GV data");
    for (long k = 1; k * c.total() <= model.max_multiplicity(); ++k) {
      auto image = k * c;
      if (!model.contains(image))
        continue;
      for (const auto &[g, value] : genus.entries)
        log_f.add(image, kernel(g, k, q_order, convention) *
                             ratio(sign_of_power(g - 1) * value, k));
    }
  }
  return conv_exp(log_f, model);
}

LocalGVTable local_gv_from_pt(const LocalFunction &p, const ChowModel &model,
                              GenusRange range, Convention convention) {
  const LocalFunction log_p = conv_log(p, model);
  std::optional<HalfUnit> fallback;
  for (const auto &[c, v] : log_p.values)
    if (v.precision())
      fallback = std::max(fallback.value_or(*v.precision()), *v.precision());

  LocalGVTable out;
  for (const auto &c : model.ordered_cycles()) {
    if (c.is_zero())
      continue;
    HalfLaurent rest = log_p.at(c);
    const long q_order =
        q_order_of(rest.precision() ? *rest.precision() : fallback.value_or(0));
    for (long k = 2; k <= c.total(); ++k) {
      auto base = c.divided_by(k);
      if (!base)
        continue;
      auto it = out.entries.find(*base);
      if (it == out.entries.end())
        continue;
      for (const auto &[g, value] : it->second.entries)
        rest -= kernel(g, k, q_order, convention) *
                ratio(sign_of_power(g - 1) * value, k);
    }
    if (convention == Convention::local_minus_q)
      rest = rest.with_negated_variable();
    GenusVector genus = located("cycle=" + to_string(c), [&] {
      return extract_genus_from_qseries(rest, range);
    });
    if (!genus.empty())
      out.entries.emplace(c, std::move(genus));
  }
  return out;
}

std::map<CurveClass, HalfLaurent> integrate_chow(const LocalFunction &f,
                                                 const ChowModel &model) {
  require_support(f, model, "integrate_chow");
  std::map<CurveClass, HalfLaurent> out;
  for (const auto &[c, v] : f.values) {
    auto &slot = out[model.class_of(c)];
    slot += v * Rational(model.euler(c));
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_exact_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::map<CurveClass, GenusVector> integrate_chow(const LocalGVTable &n,
                                                 const ChowModel &model) {
  std::map<CurveClass, GenusVector> out;
  for (const auto &[c, genus] : n.entries) {
    if (!model.contains(c))
      throw PreconditionError(kModule, "integrate_chow",
                              "support outside model", to_string(c));
    auto &slot = out[model.class_of(c)];
    for (const auto &[g, value] : genus.entries)
      slot.add(g, value * model.euler(c));
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

GVTable integrate_to_gv(const LocalGVTable &n, const ChowModel &model) {
  GVTable out{model.class_rank(), {}};
  for (auto &[beta, genus] : integrate_chow(n, model)) {
    if (beta.is_zero())
      continue;
    out.entries.emplace(beta, genus);
  }
  return out;
}

} // namespace gvkit
