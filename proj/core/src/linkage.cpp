#include "jacring/linkage.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "jacring/errors.hpp"
#include "jacring/oracle.hpp"

namespace jacring {

namespace {

std::string basis_text(const Ideal& ideal) {
  std::string out = "[";
  const auto& elems = ideal.groebner().elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(ideal.ring(), elems[i]);
  }
  return out + "]";
}

// dim of the ideal itself in degree k.
std::int64_t ideal_piece(const HilbertSeries& quotient, int k) {
  return monomial_count(quotient.num_vars(), k) - quotient.dimension(k);
}

// First element of `candidate`'s basis outside `target`, with the degree and
// the two ideal dimensions there.
std::optional<Witness> containment_witness(const Ideal& candidate, const Ideal& target,
                                           const std::string& what) {
  for (const auto& g : candidate.groebner().elements()) {
    if (target.contains(g)) continue;
    const int k = g.degree(candidate.ring());
    return Witness{k, ideal_piece(hilbert_series(candidate), k), ideal_piece(hilbert_series(target), k),
                   what + to_string(candidate.ring(), g)};
  }
  return std::nullopt;
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CheckResult finish(CheckResult result, const Stopwatch& watch) {
  result.elapsed_ms = watch.elapsed_ms();
  return result;
}

Coefficient random_coefficient(const Field& field, std::mt19937_64& rng) {
  if (field.is_rational()) return field.from_int(static_cast<long long>(rng() % 201) - 100);
  return Coefficient::modular(static_cast<std::uint32_t>(rng() % field.characteristic()));
}

Polynomial random_form(const RingContext& ring, int degree, std::mt19937_64& rng) {
  std::vector<Term> terms;
  for (const auto& m : ring.monomials_of_degree(degree)) {
    terms.push_back({random_coefficient(ring.field(), rng), m});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

JacobianIdeal jacobian_ideal(RingPtr ring, const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("jacobian_ideal of the zero polynomial");
  const int d = f.degree(*ring);
  if (d < 2) throw PreconditionError("jacobian_ideal needs degree >= 2, got " + std::to_string(d));
  JacobianIdeal out{Ideal::zero(ring), d, {}, false};
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) {
    partials.push_back(partial_derivative(*ring, f, i));
    if (partials.back().is_zero()) out.zero_partials.push_back(i);
  }
  const auto p = ring->characteristic();
  out.characteristic_divides_degree = p != 0 && d % static_cast<int>(p) == 0;
  out.ideal = Ideal(std::move(ring), std::move(partials));
  return out;
}

int socle_degree(std::span<const int> degrees, int n) {
  if (n < 0 || degrees.size() != static_cast<std::size_t>(n) + 1) {
    throw PreconditionError("socle_degree needs n + 1 = " + std::to_string(n + 1) + " degrees, got " +
                            std::to_string(degrees.size()));
  }
  if (std::any_of(degrees.begin(), degrees.end(), [](int d) { return d < 1; })) {
    throw PreconditionError("socle_degree needs positive degrees");
  }
  return std::accumulate(degrees.begin(), degrees.end(), 0) - n - 1;
}

int default_degree_bound(int sigma, int max_generator_degree, std::size_t num_vars) {
  return std::max(sigma, max_generator_degree) + static_cast<int>(num_vars) + 2;
}

int QuasiCI::tau() const {
  const int n = static_cast<int>(cci_degrees.size());
  return std::accumulate(cci_degrees.begin(), cci_degrees.end(), 0) - n - 1;
}

std::size_t default_distinguished(const Ideal& ideal) {
  const auto& gens = ideal.generators();
  std::size_t best = 0;
  for (std::size_t i = 1; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    if (gens[best].is_zero() || gens[i].degree(ideal.ring()) < gens[best].degree(ideal.ring())) best = i;
  }
  return best;
}

QuasiCI extract_regular_sequence(const Ideal& ideal, std::size_t distinguished, std::uint64_t seed,
                                 int max_attempts) {
  const RingContext& ring = ideal.ring();
  const auto& gens = ideal.generators();
  const std::size_t count = gens.size();
  if (count != ring.num_vars()) {
    throw PreconditionError("need n + 1 = " + std::to_string(ring.num_vars()) + " generators, got " +
                            std::to_string(count));
  }
  if (distinguished >= count) throw PreconditionError("distinguished index out of range");
  if (gens[distinguished].is_zero()) throw PreconditionError("distinguished generator is zero");
  if (std::any_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_zero(); })) {
    throw PreconditionError("generators must be nonzero");
  }
  if (ideal.is_unit()) throw PreconditionError("the unit ideal has no quasi-complete intersection");
  const int dim = krull_dim(ideal);
  if (dim > 1) {
    throw PreconditionError("dim Proj(S/I) = " + std::to_string(dim - 1) + ", expected <= 0");
  }

  // f_0 first, then the rest by increasing degree.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < count; ++i) {
    if (i != distinguished) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return gens[a].degree(ring) < gens[b].degree(ring);
  });
  order.insert(order.begin(), distinguished);

  std::vector<Polynomial> f;
  std::vector<int> d;
  for (auto i : order) {
    f.push_back(gens[i]);
    d.push_back(gens[i].degree(ring));
  }

  QuasiCI out{ideal, {}, distinguished, f[0], Ideal::zero(ideal.ring_ptr()), {}, 0, seed};
  for (const auto& g : gens) out.degrees.push_back(g.degree(ring));
  out.cci_degrees.assign(d.begin() + 1, d.end());

  auto regular = [&](const std::vector<Polynomial>& seq) {
    Ideal candidate(ideal.ring_ptr(), seq);
    if (candidate.is_unit() || krull_dim(candidate) != 1) return std::optional<Ideal>{};
    return std::optional<Ideal>{std::move(candidate)};
  };

  std::vector<Polynomial> raw(f.begin() + 1, f.end());
  if (auto j = regular(raw)) {
    out.cci_J = std::move(*j);
    return out;
  }

  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<Polynomial> seq;
    for (std::size_t i = 1; i < f.size(); ++i) {
      Polynomial fi = f[i];
      for (std::size_t j = 0; j < i; ++j) {
        if (d[j] > d[i]) continue;
        fi = add(ring, fi, mul(ring, random_form(ring, d[i] - d[j], rng), f[j]));
      }
      seq.push_back(std::move(fi));
    }
    if (auto j = regular(seq)) {
      std::vector<Polynomial> all{f[0]};
      all.insert(all.end(), seq.begin(), seq.end());
      if (!ideal_equal(Ideal(ideal.ring_ptr(), std::move(all)), ideal)) {
        throw Error("recombined generators changed the ideal");
      }
      out.cci_J = std::move(*j);
      out.attempts = attempt;
      return out;
    }
  }
  throw Error("no regular sequence found after " + std::to_string(max_attempts) +
              " attempts (seed " + std::to_string(seed) + ")");
}

GradedDims local_cohomology_h0(const Ideal& ideal, const Ideal& saturation, int bound) {
  const HilbertSeries hi = hilbert_series(ideal);
  const HilbertSeries hs = hilbert_series(saturation);
  // sum_k h(k) t^k = (N_I - N_sat) / (1 - t)^n, which must be a polynomial.
  std::vector<std::int64_t> diff(std::max(hi.numerator().size(), hs.numerator().size()), 0);
  for (std::size_t i = 0; i < hi.numerator().size(); ++i) diff[i] += hi.numerator()[i];
  for (std::size_t i = 0; i < hs.numerator().size(); ++i) diff[i] -= hs.numerator()[i];
  for (std::size_t r = 0; r < hi.num_vars(); ++r) {
    while (!diff.empty() && diff.back() == 0) diff.pop_back();
    if (diff.empty()) break;
    std::int64_t total = std::accumulate(diff.begin(), diff.end(), std::int64_t{0});
    if (total != 0) throw Error("I^s / I does not have finite length");
    std::vector<std::int64_t> q(diff.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) {
      acc += diff[i];
      q[i] = acc;
    }
    diff = std::move(q);
  }
  while (!diff.empty() && diff.back() == 0) diff.pop_back();
  const int top = static_cast<int>(diff.size()) - 1;
  if (top > bound) {
    throw Error("local cohomology is nonzero in degree " + std::to_string(top) +
                ", above the degree bound " + std::to_string(bound) + "; use a larger bound");
  }
  GradedDims h;
  h.bound = bound;
  h.eventually_constant = 0;
  for (int k = 0; k <= bound; ++k) {
    const std::int64_t v = hi.dimension(k) - hs.dimension(k);
    if (v < 0) throw Error("negative local cohomology dimension; saturation is wrong");
    h.table[k] = v;
  }
  return h;
}

GradedDims local_cohomology_h0(const QuasiCI& quasi, int bound) {
  return local_cohomology_h0(quasi.ideal_I, saturate(quasi.ideal_I).ideal, bound);
}

SelfDuality check_self_duality(const GradedDims& h, int sigma) {
  // h vanishes below 0 and above bound; checking k in [min(0, sigma - bound),
  // max(bound, sigma)] covers every k where either side can be nonzero.
  const int lo = std::min(0, sigma - h.bound);
  const int hi = std::max(h.bound, sigma);
  for (int k = lo; k <= hi; ++k) {
    const std::int64_t a = h.at(k);
    const std::int64_t b = h.at(sigma - k);
    if (a != b) return {false, k, a, b};
  }
  return {};
}

LinkageData linked_ideal(const QuasiCI& quasi, std::optional<int> bound) {
  const SaturationResult sat = saturate(quasi.ideal_I);
  const Ideal& j = quasi.cci_J;
  Ideal k_prime = colon(j, sat.ideal);
  const Ideal back = colon(j, k_prime);
  if (!ideal_equal(back, sat.ideal)) {
    throw Error("linkage involution failed: (J : K') = " + basis_text(back) + " but I^s = " +
                basis_text(sat.ideal));
  }
  const int max_deg = *std::max_element(quasi.degrees.begin(), quasi.degrees.end());
  LinkageData link{quasi, sat.ideal, sat.iterations, std::move(k_prime), quasi.tau(), quasi.sigma(), 0, {}};
  link.bound = bound.value_or(default_degree_bound(link.sigma, max_deg, quasi.ideal_I.ring().num_vars()));
  link.h0 = local_cohomology_h0(quasi.ideal_I, link.i_sat, link.bound);
  return link;
}

CheckResult verify_linkage_involution(const LinkageData& link) {
  const Stopwatch watch;
  CheckResult r{"linkage_involution", CheckStatus::Pass, {}, "", 0};
  const Ideal& j = link.quasi.cci_J;
  const Ideal back = colon(j, link.k_prime);
  const Ideal forth = colon(j, link.i_sat);
  if (!ideal_equal(back, link.i_sat)) {
    r.status = CheckStatus::Fail;
    auto w = containment_witness(back, link.i_sat, "in (J : K') but not in I^s: ");
    if (!w) w = containment_witness(link.i_sat, back, "in I^s but not in (J : K'): ");
    if (w) r.witnesses.push_back(*w);
  }
  if (!ideal_equal(forth, link.k_prime)) {
    r.status = CheckStatus::Fail;
    auto w = containment_witness(forth, link.k_prime, "in (J : I^s) but not in K': ");
    if (!w) w = containment_witness(link.k_prime, forth, "in K' but not in (J : I^s): ");
    if (w) r.witnesses.push_back(*w);
  }
  r.detail = "K' = " + basis_text(link.k_prime);
  return finish(std::move(r), watch);
}

CheckResult verify_main_sequence(const LinkageData& link) {
  const Stopwatch watch;
  CheckResult r{"main_sequence", CheckStatus::Pass, {}, "", 0};
  const HilbertSeries hi = hilbert_series(link.quasi.ideal_I);
  const HilbertSeries hj = hilbert_series(link.quasi.cci_J);
  const HilbertSeries hk = hilbert_series(link.k_prime);
  const int d0 = link.quasi.d0();
  for (int j = 0; j <= link.bound; ++j) {
    // dim I_j - dim J_j = dim (S/J)_j - dim (S/I)_j
    const std::int64_t lhs = hj.dimension(j) - hi.dimension(j);
    const std::int64_t rhs = hk.dimension(j - d0);
    if (lhs != rhs) {
      r.status = CheckStatus::Fail;
      r.witnesses.push_back({j, lhs, rhs, "dim I_j - dim J_j vs dim (S/K')_{j-d0}"});
    }
  }
  r.detail = "degrees 0.." + std::to_string(link.bound) + ", d0 = " + std::to_string(d0);
  return finish(std::move(r), watch);
}

CheckResult gherardelli_injectivity_check(const LinkageData& link) {
  return gherardelli_injectivity_check(link, link.k_prime);
}

CheckResult gherardelli_injectivity_check(const LinkageData& link, const Ideal& target) {
  const Stopwatch watch;
  CheckResult r{"gherardelli_injectivity", CheckStatus::Pass, {}, "", 0};
  const Ideal annihilator = colon(link.quasi.cci_J, link.quasi.f0);
  if (auto w = containment_witness(annihilator, target, "in (J : f0) but not in K': ")) {
    r.status = CheckStatus::Fail;
    r.witnesses.push_back(*w);
  }
  r.detail = "(J : f0) = " + basis_text(annihilator);
  return finish(std::move(r), watch);
}

CheckResult degree_additivity_check(const LinkageData& link) {
  const Stopwatch watch;
  CheckResult r{"degree_additivity", CheckStatus::Pass, {}, "", 0};
  if (link.degenerate()) {
    r.status = CheckStatus::Skipped;
    r.detail = "I^s is the unit ideal";
    return finish(std::move(r), watch);
  }
  const std::int64_t gamma = degree_of(link.quasi.cci_J);
  const std::int64_t delta = degree_of(link.i_sat);
  const std::int64_t theta = degree_of(link.k_prime);
  r.detail = "deg Gamma = " + std::to_string(gamma) + ", deg Delta = " + std::to_string(delta) +
             ", deg Theta = " + std::to_string(theta);
  if (gamma != delta + theta) {
    r.status = CheckStatus::Fail;
    const int k = link.bound;
    r.witnesses.push_back({k, hilbert_function(link.quasi.cci_J, k),
                           hilbert_function(link.i_sat, k) + hilbert_function(link.k_prime, k),
                           "Hilbert functions of Gamma vs Delta + Theta at the bound"});
  }
  return finish(std::move(r), watch);
}

CheckResult self_duality_check(const LinkageData& link) {
  const Stopwatch watch;
  CheckResult r{"self_duality", CheckStatus::Pass, {}, "", 0};
  const SelfDuality sd = check_self_duality(link.h0, link.sigma);
  if (!sd.self_dual) {
    r.status = CheckStatus::Fail;
    r.witnesses.push_back({sd.witness, sd.lhs, sd.rhs, "h(k) vs h(sigma - k)"});
  }
  r.detail = "sigma = " + std::to_string(link.sigma);
  return finish(std::move(r), watch);
}

CheckResult support_bound_check(const LinkageData& link) {
  const Stopwatch watch;
  CheckResult r{"support_bound", CheckStatus::Pass, {}, "", 0};
  for (const auto& [k, v] : link.h0.table) {
    if (v != 0 && (k < 0 || k > link.sigma)) {
      r.status = CheckStatus::Fail;
      r.witnesses.push_back({k, v, 0, "h(k) nonzero outside [0, sigma]"});
    }
  }
  return finish(std::move(r), watch);
}

CheckResult regular_sequence_check(const QuasiCI& quasi) {
  const Stopwatch watch;
  CheckResult r{"regular_sequence", CheckStatus::Pass, {}, "", 0};
  std::vector<Polynomial> all{quasi.f0};
  const auto& jg = quasi.cci_J.generators();
  all.insert(all.end(), jg.begin(), jg.end());
  const Ideal rebuilt(quasi.ideal_I.ring_ptr(), std::move(all));
  if (!ideal_equal(rebuilt, quasi.ideal_I)) {
    r.status = CheckStatus::Fail;
    auto w = containment_witness(quasi.ideal_I, rebuilt, "in I but not in (f0) + J: ");
    if (!w) w = containment_witness(rebuilt, quasi.ideal_I, "in (f0) + J but not in I: ");
    if (w) r.witnesses.push_back(*w);
  }
  const int dim = quasi.cci_J.is_unit() ? 0 : krull_dim(quasi.cci_J);
  if (dim != 1) {
    r.status = CheckStatus::Fail;
    r.witnesses.push_back({std::nullopt, dim, 1, "krull_dim(S/J)"});
  }
  std::string gens;
  for (std::size_t i = 0; i < jg.size(); ++i) {
    if (i > 0) gens += ", ";
    gens += to_string(quasi.ideal_I.ring(), jg[i]);
  }
  r.detail = "J = (" + gens + "), attempts = " + std::to_string(quasi.attempts);
  return finish(std::move(r), watch);
}

CheckResult oracle_agreement_check(const LinkageData& link) {
  const Stopwatch watch;
  CheckResult r{"oracle_agreement", CheckStatus::Pass, {}, "", 0};
  struct Named {
    const char* name;
    const Ideal* ideal;
  };
  const Named ideals[] = {{"I", &link.quasi.ideal_I},
                          {"J", &link.quasi.cci_J},
                          {"I^s", &link.i_sat},
                          {"K'", &link.k_prime}};
  std::size_t compared = 0;
  for (const auto& [name, ideal] : ideals) {
    const HilbertSeries hs = hilbert_series(*ideal);
    MacaulayOracle oracle(ideal->ring_ptr(), ideal->generators());
    for (int k = 0; k <= link.bound; ++k) {
      const std::int64_t engine = hs.dimension(k);
      const std::int64_t independent = oracle.quotient_dim(k);
      ++compared;
      if (engine != independent) {
        r.status = CheckStatus::Fail;
        r.witnesses.push_back({k, engine, independent, std::string("dim (S/") + name + ")_k"});
      }
    }
  }
  const HilbertSeries hsat = hilbert_series(link.i_sat);
  MacaulayOracle oracle(link.quasi.ideal_I.ring_ptr(), link.quasi.ideal_I.generators());
  const std::size_t nv = link.quasi.ideal_I.ring().num_vars();
  for (int k = 0; k <= link.bound; ++k) {
    const std::int64_t engine = monomial_count(nv, k) - hsat.dimension(k);
    const std::int64_t independent = oracle.saturation_dim(k, link.bound);
    ++compared;
    if (engine != independent) {
      r.status = CheckStatus::Fail;
      r.witnesses.push_back({k, engine, independent, "dim (I^s)_k"});
    }
  }
  r.detail = std::to_string(compared) + " dimensions compared";
  return finish(std::move(r), watch);
}

// ---------------------------------------------------------------------------

VerificationReport full_report(RingPtr ring, const PipelineInput& input, const PipelineOptions& options) {
  VerificationReport report;
  report.include_timings = options.timings;
  report.ring = {ring->characteristic(), ring->variable_names(), std::string(to_string(ring->order()))};
  report.input.seed = options.seed;
  report.input.bound = options.bound;
  report.input.distinguished = options.distinguished;

  std::string stage = "input";
  try {
    std::optional<Ideal> ideal;
    if (const auto* f = std::get_if<Polynomial>(&input)) {
      report.input.mode = "hypersurface";
      report.input.f = to_string(*ring, *f);
      stage = "jacobian";
      JacobianIdeal jac = jacobian_ideal(ring, *f);
      if (jac.characteristic_divides_degree) {
        report.warnings.push_back("characteristic " + std::to_string(ring->characteristic()) +
                                  " divides the degree " + std::to_string(jac.degree));
      }
      for (auto i : jac.zero_partials) {
        report.warnings.push_back("partial derivative by " + ring->variable_names()[i] +
                                  " is identically zero");
      }
      ideal = std::move(jac.ideal);
    } else {
      report.input.mode = "generators";
      const auto& gens = std::get<std::vector<Polynomial>>(input);
      for (const auto& g : gens) report.input.generators.push_back(to_string(*ring, g));
      if (gens.size() != ring->num_vars()) {
        throw PreconditionError("need n + 1 = " + std::to_string(ring->num_vars()) +
                                " generators, got " + std::to_string(gens.size()));
      }
      ideal = Ideal(ring, gens);
    }
    report.input.generators.clear();
    for (const auto& g : ideal->generators()) {
      report.input.generators.push_back(to_string(*ring, g));
      report.input.degrees.push_back(g.degree(*ring));
    }
    const auto p = ring->characteristic();
    std::vector<int> flagged;
    for (int d : report.input.degrees) {
      if (p == 0 || d <= 0 || d % static_cast<int>(p) != 0) continue;
      if (std::find(flagged.begin(), flagged.end(), d) != flagged.end()) continue;
      flagged.push_back(d);
      report.warnings.push_back("characteristic " + std::to_string(p) + " divides the generator degree " +
                                std::to_string(d));
    }

    stage = "dim_proj";
    if (ideal->is_unit()) throw PreconditionError("the ideal is the unit ideal");
    const int dim = krull_dim(*ideal);
    if (dim > 1) {
      throw PreconditionError("dim Proj(S/I) = " + std::to_string(dim - 1) +
                              "; the singular locus is not isolated");
    }

    stage = "regular_sequence";
    const std::size_t distinguished = options.distinguished.value_or(default_distinguished(*ideal));
    report.input.distinguished = distinguished;
    const QuasiCI quasi = extract_regular_sequence(*ideal, distinguished, options.seed);
    report.tau = quasi.tau();
    report.sigma = quasi.sigma();
    report.checks.push_back(regular_sequence_check(quasi));

    stage = "linkage";
    const LinkageData link = linked_ideal(quasi, options.bound);
    report.input.bound = link.bound;
    for (const auto& [k, v] : link.h0.table) report.h0.emplace_back(k, v);

    stage = "checks";
    report.checks.push_back(verify_linkage_involution(link));
    report.checks.push_back(self_duality_check(link));
    report.checks.push_back(support_bound_check(link));
    report.checks.push_back(verify_main_sequence(link));
    report.checks.push_back(gherardelli_injectivity_check(link));
    report.checks.push_back(degree_additivity_check(link));
    if (options.oracle) {
      stage = "oracle";
      report.checks.push_back(oracle_agreement_check(link));
    }
  } catch (const PreconditionError& e) {
    report.failure = StageFailure{stage, e.what(), true};
  } catch (const ParseError& e) {
    report.failure = StageFailure{stage, e.what(), true};
  } catch (const NonHomogeneousError& e) {
    report.failure = StageFailure{stage, e.what(), true};
  } catch (const Error& e) {
    report.failure = StageFailure{stage, e.what(), false};
  }
  return report;
}

}  // namespace jacring
