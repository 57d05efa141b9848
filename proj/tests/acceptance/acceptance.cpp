// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "jacring/errors.hpp"
#include "jacring/groebner.hpp"
#include "jacring/linkage.hpp"
#include "jacring/oracle.hpp"
#include "problem_file.hpp"
#include "support.hpp"

using namespace jacring;
using namespace jacring::testing;
namespace fs = std::filesystem;

namespace {

struct Instance {
  std::string name;
  tools::Problem problem;
  std::optional<QuasiCI> quasi;
  std::optional<LinkageData> link;
  std::string error;
  int hypersurface_degree = 0;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Ideal input_ideal(const tools::Problem& p) {
  if (p.f) return jacobian_ideal(p.ring, *p.f).ideal;
  return Ideal(p.ring, p.gens);
}

std::vector<Instance> load_corpus(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".txt") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Instance> out;
  for (const auto& f : files) {
    Instance inst{f.stem().string(), tools::load_problem(f.string()), {}, {}, {}, 0};
    try {
      const Ideal i = input_ideal(inst.problem);
      if (inst.problem.f) inst.hypersurface_degree = inst.problem.f->degree(*inst.problem.ring);
      const std::size_t d = inst.problem.distinguished.value_or(default_distinguished(i));
      inst.quasi = extract_regular_sequence(i, d, inst.problem.seed);
      inst.link = linked_ideal(*inst.quasi, inst.problem.bound);
    } catch (const std::exception& e) {
      inst.error = e.what();
    }
    out.push_back(std::move(inst));
  }
  return out;
}

class Criterion {
 public:
  Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

  void fail(const std::string& why) {
    ok_ = false;
    if (!notes_.empty()) notes_ += "; ";
    notes_ += why;
  }
  void note(const std::string& what) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += what;
  }
  bool report() const {
    std::cout << (ok_ ? "PASS" : "FAIL") << "  [" << number_ << "] " << title_;
    if (!notes_.empty()) std::cout << "  (" << notes_ << ")";
    std::cout << std::endl;
    return ok_;
  }

 private:
  int number_;
  std::string title_;
  bool ok_ = true;
  std::string notes_;
};

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Each criterion below runs over the instances that loaded; a load error is a
// failure of every criterion that needs that instance.
bool require_link(Criterion& c, const Instance& inst) {
  if (inst.link) return true;
  c.fail(inst.name + ": " + inst.error);
  return false;
}

bool macaulay_baseline(const fs::path& corpus) {
  Criterion c(1, "Fermat quartic surface h0 = (1,4,10,16,19,16,10,4,1), sigma = 8, under 30 s");
  const auto start = std::chrono::steady_clock::now();
  try {
    const tools::Problem p = tools::load_problem((corpus / "fermat_quartic_surface.txt").string());
    const Ideal i = input_ideal(p);
    const QuasiCI q = extract_regular_sequence(i, 0, p.seed);
    const int bound = default_degree_bound(q.sigma(), 3, 4);
    const GradedDims h = local_cohomology_h0(i, saturate(i).ideal, bound);
    const double elapsed = seconds_since(start);
    std::vector<std::int64_t> got;
    for (int k = 0; k <= 8; ++k) got.push_back(h.at(k));
    const std::vector<std::int64_t> expected{1, 4, 10, 16, 19, 16, 10, 4, 1};
    if (q.sigma() != 8) c.fail("sigma = " + std::to_string(q.sigma()));
    if (got != expected) c.fail("h0 = " + join(got));
    for (int k = 9; k <= bound; ++k) {
      if (h.at(k) != 0) c.fail("h0 nonzero in degree " + std::to_string(k));
    }
    // Certify with the Macaulay-matrix oracle: h(k) = dim (I^s)_k - dim I_k.
    MacaulayOracle oracle(p.ring, i.generators());
    std::vector<std::int64_t> certified;
    for (int k = 0; k <= 8; ++k) certified.push_back(oracle.saturation_dim(k, bound) - oracle.ideal_dim(k));
    if (certified != expected) c.fail("oracle h0 = " + join(certified));
    if (elapsed >= 30.0) c.fail("took " + std::to_string(elapsed) + " s");
    std::ostringstream t;
    t.precision(3);
    t << "engine " << elapsed << " s, oracle-certified";
    c.note(t.str());
  } catch (const std::exception& e) {
    c.fail(e.what());
  }
  return c.report();
}

bool singular_self_duality(const fs::path& corpus) {
  Criterion c(2, "self-duality h(k) = h(sigma-k) on cuspidal cubic, nodal quartic, Cayley cubic, under 120 s each");
  for (const char* name : {"cuspidal_cubic", "nodal_quartic", "cayley_cubic"}) {
    const auto start = std::chrono::steady_clock::now();
    try {
      const tools::Problem p = tools::load_problem((corpus / (std::string(name) + ".txt")).string());
      const VerificationReport rep = full_report(p.ring, *p.f, {.seed = p.seed});
      const double elapsed = seconds_since(start);
      if (rep.failure) {
        c.fail(std::string(name) + ": " + rep.failure->message);
        continue;
      }
      const int n = static_cast<int>(p.ring->num_vars()) - 1;
      const int d = p.f->degree(*p.ring);
      if (rep.sigma != (n + 1) * (d - 2)) c.fail(std::string(name) + ": sigma mismatch");
      const CheckResult* sd = rep.find("self_duality");
      if (!sd || sd->status != CheckStatus::Pass) c.fail(std::string(name) + ": not self-dual");
      bool nonzero = false;
      for (const auto& [k, v] : rep.h0) nonzero = nonzero || v != 0;
      if (!nonzero) c.fail(std::string(name) + ": h0 vanishes, instance is not singular");
      if (elapsed >= 120.0) c.fail(std::string(name) + ": too slow");
      std::ostringstream t;
      t.precision(2);
      t << name << " sigma=" << *rep.sigma << " " << elapsed << "s";
      c.note(t.str());
    } catch (const std::exception& e) {
      c.fail(std::string(name) + ": " + e.what());
    }
  }
  return c.report();
}

bool involution(const std::vector<Instance>& corpus) {
  Criterion c(3, "linkage involution (J : (J : I^s)) = I^s on every corpus instance");
  int smooth = 0;
  for (const auto& inst : corpus) {
    if (!require_link(c, inst)) continue;
    const auto res = verify_linkage_involution(*inst.link);
    if (res.status != CheckStatus::Pass) c.fail(inst.name);
    // Compare reduced bases literally as well.
    const Ideal back = colon(inst.quasi->cci_J, inst.link->k_prime);
    if (!(back.groebner() == inst.link->i_sat.groebner())) c.fail(inst.name + ": reduced bases differ");
    smooth += inst.link->degenerate();
  }
  c.note(std::to_string(corpus.size()) + " instances, " + std::to_string(smooth) + " with I^s = (1)");
  return c.report();
}

bool main_sequence(const std::vector<Instance>& corpus) {
  Criterion c(4, "dim I_j - dim J_j = dim S_{j-d0} - dim K'_{j-d0} for all j <= sigma + n + 2");
  for (const auto& inst : corpus) {
    if (!require_link(c, inst)) continue;
    const LinkageData& link = *inst.link;
    const int n = static_cast<int>(inst.problem.ring->num_vars()) - 1;
    const int top = link.sigma + n + 2;
    const RingContext& ring = *inst.problem.ring;
    const HilbertSeries hi = hilbert_series(link.quasi.ideal_I);
    const HilbertSeries hj = hilbert_series(link.quasi.cci_J);
    const HilbertSeries hk = hilbert_series(link.k_prime);
    const int d0 = link.quasi.d0();
    for (int j = 0; j <= top; ++j) {
      const std::int64_t dim_i = monomial_count(ring.num_vars(), j) - hi.dimension(j);
      const std::int64_t dim_j = monomial_count(ring.num_vars(), j) - hj.dimension(j);
      const std::int64_t s = j - d0 < 0 ? 0 : monomial_count(ring.num_vars(), j - d0);
      const std::int64_t k = j - d0 < 0 ? 0 : s - hk.dimension(j - d0);
      if (dim_i - dim_j != s - k) c.fail(inst.name + " j=" + std::to_string(j));
    }
    if (verify_main_sequence(link).status != CheckStatus::Pass) c.fail(inst.name + ": check");
  }
  return c.report();
}

bool injectivity(const std::vector<Instance>& corpus) {
  Criterion c(5, "(J : f0) contained in K' everywhere; negative control with J in place of K' fails");
  for (const auto& inst : corpus) {
    if (!require_link(c, inst)) continue;
    if (gherardelli_injectivity_check(*inst.link).status != CheckStatus::Pass) c.fail(inst.name);
  }
  bool control_ran = false;
  for (const auto& inst : corpus) {
    if (!inst.link || inst.link->degenerate() || inst.name != "cuspidal_cubic") continue;
    control_ran = true;
    const auto bad = gherardelli_injectivity_check(*inst.link, inst.link->quasi.cci_J);
    if (bad.status != CheckStatus::Fail) c.fail("negative control on " + inst.name + " did not fail");
    else c.note("negative control on " + inst.name + " fails as required");
  }
  if (!control_ran) c.fail("negative control instance missing");
  return c.report();
}

bool degree_additivity(const std::vector<Instance>& corpus) {
  Criterion c(6, "deg J = deg I^s + deg K' on every singular instance (triangle 4 = 3 + 1)");
  int singular = 0;
  for (const auto& inst : corpus) {
    if (!require_link(c, inst)) continue;
    if (inst.link->degenerate()) continue;
    ++singular;
    const auto g = degree_of(inst.link->quasi.cci_J);
    const auto d = degree_of(inst.link->i_sat);
    const auto t = degree_of(inst.link->k_prime);
    if (g != d + t) c.fail(inst.name);
    if (inst.name == "triangle") {
      if (g != 4 || d != 3 || t != 1) c.fail("triangle gives " + std::to_string(g) + "=" + std::to_string(d) + "+" + std::to_string(t));
      else c.note("triangle 4 = 3 + 1");
    }
  }
  c.note(std::to_string(singular) + " singular instances");
  return c.report();
}

bool oracle_equivalence(const std::vector<Instance>& corpus) {
  Criterion c(7, "Groebner dimensions equal Macaulay-matrix dimensions for every corpus ideal and k <= bound");
  std::size_t compared = 0;
  for (const auto& inst : corpus) {
    if (!require_link(c, inst)) continue;
    const auto res = oracle_agreement_check(*inst.link);
    if (res.status != CheckStatus::Pass) {
      c.fail(inst.name + ": " + std::to_string(res.witnesses.size()) + " discrepancies");
    }
    compared += static_cast<std::size_t>(std::stoul(res.detail));
  }
  c.note(std::to_string(compared) + " dimensions compared");
  return c.report();
}

bool regular_sequences(const std::vector<Instance>& corpus) {
  Criterion c(8, "regular sequence found within 32 attempts, ideal preserved, krull_dim(S/J) = 1, seeded reproducibility");
  int max_attempts = 0;
  for (const auto& inst : corpus) {
    if (!inst.quasi) {
      c.fail(inst.name + ": " + inst.error);
      continue;
    }
    const QuasiCI& q = *inst.quasi;
    max_attempts = std::max(max_attempts, q.attempts);
    if (q.attempts > kMaxRecombinationAttempts) c.fail(inst.name + ": too many attempts");
    if (regular_sequence_check(q).status != CheckStatus::Pass) c.fail(inst.name + ": check");
    for (std::uint64_t seed : {q.seed, q.seed + 1000}) {
      const QuasiCI a = extract_regular_sequence(q.ideal_I, q.distinguished, seed);
      const QuasiCI b = extract_regular_sequence(q.ideal_I, q.distinguished, seed);
      if (a.cci_J.generators() != b.cci_J.generators() || a.attempts != b.attempts) {
        c.fail(inst.name + ": seed " + std::to_string(seed) + " not reproducible");
      }
      if (regular_sequence_check(a).status != CheckStatus::Pass) c.fail(inst.name + ": other seed");
    }
  }
  c.note("max attempts " + std::to_string(max_attempts));
  return c.report();
}

bool buchberger_suite() {
  Criterion c(9, "50 random homogeneous ideals: S-polynomials reduce to zero, permutation invariance");
  std::mt19937_64 rng(20261019);
  int checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const RandomIdeal in = random_ideal(rng);
    const GroebnerBasis basis = reduced_groebner_basis(in.ring, in.generators);
    if (!satisfies_buchberger_criterion(basis) || !is_reduced(basis)) c.fail("ideal " + std::to_string(trial));
    auto perm = in.generators;
    std::sort(perm.begin(), perm.end(), [&](const Polynomial& a, const Polynomial& b) {
      return to_string(*in.ring, a) < to_string(*in.ring, b);
    });
    do {
      if (!(reduced_groebner_basis(in.ring, perm) == basis)) {
        c.fail("ideal " + std::to_string(trial) + " depends on generator order");
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end(), [&](const Polynomial& a, const Polynomial& b) {
      return to_string(*in.ring, a) < to_string(*in.ring, b);
    }));
    ++checked;
  }
  c.note(std::to_string(checked) + " ideals, all generator permutations");
  return c.report();
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path corpus = argc > 1 ? fs::path(argv[1]) : fs::path(JACRING_CORPUS_DIR);
  std::vector<Instance> instances;
  try {
    instances = load_corpus(corpus);
  } catch (const std::exception& e) {
    std::cout << "FAIL  corpus could not be loaded: " << e.what() << std::endl;
    return 1;
  }
  bool ok = true;
  ok &= macaulay_baseline(corpus);
  ok &= singular_self_duality(corpus);
  ok &= involution(instances);
  ok &= main_sequence(instances);
  ok &= injectivity(instances);
  ok &= degree_additivity(instances);
  ok &= oracle_equivalence(instances);
  ok &= regular_sequences(instances);
  ok &= buchberger_suite();
  return ok ? 0 : 1;
}
