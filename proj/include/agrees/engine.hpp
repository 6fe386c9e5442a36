#pragma once

// Almost Gorenstein classifier for Rees algebras R(I) of m-primary ideals of
// k[x,y]_(x,y). Everything is read off J = Q:I, since K_R(1) = J·R once
// I^2 = QI. A witness (f, g, h) with IJ = gJ + Ih and 𝔪J = fJ + 𝔪h certifies
// the property; a generator count of 𝔐C that cannot fit into two generated
// 𝔐C refutes it.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "agrees/staircase.hpp"

namespace agrees {

enum class Verdict { Gorenstein, AgCertified, NotAg, Unknown };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Gorenstein: return "GORENSTEIN";
    case Verdict::AgCertified: return "AG_CERTIFIED";
    case Verdict::NotAg: return "NOT_AG";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace detail {

/// Coefficient for random combinations: small integers over Q keep Groebner
/// coefficient growth in check, uniform residues over F_p.
template <Field F>
F small_random(std::mt19937_64& rng, const FieldConfig& cfg) {
  if constexpr (std::is_same_v<F, Rational>) {
    std::uniform_int_distribution<long> dist(1, 31);
    long v = dist(rng);
    return Rational((rng() & 1U) != 0 ? v : -v);
  } else {
    return F::random_nonzero(rng, cfg);
  }
}

template <Field F>
std::vector<std::string> print_all(const std::vector<Polynomial<F>>& ps) {
  std::vector<std::string> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

/// Σ c_j v_j.
template <Field F>
Polynomial<F> combine(const std::vector<F>& c, const std::vector<Polynomial<F>>& v) {
  Polynomial<F> acc(v.front().ring(), v.front().order());
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (!c[j].is_zero()) acc += v[j].scaled(c[j]);
  }
  return acc;
}

/// Generators sorted by descending lex leading monomial (staircase order for
/// monomial ideals: x-powers first).
template <Field F>
std::vector<Polynomial<F>> sorted_desc(std::vector<Polynomial<F>> gens) {
  const MonomialOrder order = MonomialOrder::lex();
  std::stable_sort(gens.begin(), gens.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return gens;
}

}  // namespace detail

/// Minimal reduction Q = (a, b) of I with reduction number r.
template <Field F>
struct ReductionData {
  IdealHandle<F> q;
  /// Q with the components away from the origin removed (Q + I^{r+1}); equals Q
  /// whenever Q is already m-primary.
  IdealHandle<F> q_local;
  int reduction_number = 0;
  bool stable = false;
  std::string strategy;
};

template <Field F>
ReductionData<F> find_reduction(const IdealHandle<F>& ideal, std::uint64_t seed, int max_r = 4, int attempts = 32) {
  if (!is_m_primary(ideal)) throw NotZeroDimensional("find_reduction: ideal is not m-primary");
  const FieldConfig& cfg = ideal.field();

  std::vector<IdealHandle<F>> powers{ideal_power(ideal, 0)};
  auto power = [&](int k) -> const IdealHandle<F>& {
    while (static_cast<int>(powers.size()) <= k) powers.push_back(compact(ideal_product(powers.back(), ideal)));
    return powers[static_cast<std::size_t>(k)];
  };
  // smallest r <= max_r with I^{r+1} = Q I^r at the origin, or -1
  auto reduction_number = [&](const IdealHandle<F>& q) {
    for (int r = 0; r <= max_r; ++r) {
      if (locally_contains(ideal_product(q, power(r)), power(r + 1))) return r;
    }
    return -1;
  };
  auto finish = [&](IdealHandle<F> q, int r, std::string strategy) {
    IdealHandle<F> local = is_m_primary(q) ? q : compact(ideal_sum(q, power(r + 1)));
    return ReductionData<F>{std::move(q), std::move(local), r, r <= 1, std::move(strategy)};
  };

  if (auto s = staircase_of(ideal)) {
    const long a = s->x_power();
    const long b = s->y_power();
    bool integral = std::all_of(s->gens().begin(), s->gens().end(),
                                [&](const ExpPair& g) { return g.first * b + g.second * a >= a * b; });
    if (integral) {
      IdealHandle<F> q = monomial_ideal<F>({{static_cast<int>(a), 0}, {0, static_cast<int>(b)}}, cfg);
      int r = reduction_number(q);
      if (r >= 0) return finish(std::move(q), r, "pure-powers");
    }
  }

  std::vector<Polynomial<F>> gens = minimal_generators(ideal);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<F> c, d;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      c.push_back(detail::small_random<F>(rng, cfg));
      d.push_back(detail::small_random<F>(rng, cfg));
    }
    IdealHandle<F> q(Ring::base(), {detail::combine(c, gens), detail::combine(d, gens)}, cfg);
    int r = reduction_number(q);
    if (r >= 0) return finish(std::move(q), r, "random-combination");
  }
  throw NoReductionFound("no reduction with reduction number <= " + std::to_string(max_r) + " after " +
                         std::to_string(attempts) + " random attempts");
}

/// I^2 = QI at the origin.
template <Field F>
bool is_stable(const IdealHandle<F>& ideal, const IdealHandle<F>& q) {
  if (!ideal_subset(q, ideal)) throw NotContained("is_stable: Q is not contained in I");
  return locally_contains(ideal_product(q, ideal), ideal_product(ideal, ideal));
}

/// J = Q : I, returned on minimal generators sorted by descending leading monomial.
template <Field F>
IdealHandle<F> canonical_colon(const IdealHandle<F>& ideal, const ReductionData<F>& red) {
  IdealHandle<F> j = compact(ideal_colon(red.q_local, ideal));
  IdealHandle<F> sorted(Ring::base(), detail::sorted_desc(j.generators()), ideal.field());
  IdealHandle<F> out(Ring::base(), minimal_generators(sorted), ideal.field());
  if (red.stable && is_contracted(ideal) && ideal_order(ideal) != ideal_order(out) + 1) {
    throw InvariantViolation("o(I) = o(J) + 1 fails for contracted stable I = " + ideal.to_string());
  }
  return out;
}

/// Witness (f, g, h) for IJ = gJ + Ih and 𝔪J = fJ + 𝔪h; only constructible
/// through verify(), which re-checks both identities at the origin.
template <Field F>
class AGWitness {
 public:
  static std::optional<AGWitness> verify(const IdealHandle<F>& ideal, const IdealHandle<F>& j, const Polynomial<F>& f,
                                         const Polynomial<F>& g, const Polynomial<F>& h) {
    const FieldConfig& cfg = ideal.field();
    IdealHandle<F> m = maximal_ideal<F>(cfg);
    if (f.is_zero() || f.min_degree() < 1 || !ideal_contains(ideal, g) || !ideal_contains(j, h)) return std::nullopt;
    IdealHandle<F> ij = ideal_product(ideal, j);
    IdealHandle<F> rhs_ij = ideal_sum(ideal_scale(g, j), ideal_scale(h, ideal));
    if (!locally_equal(ij, rhs_ij)) return std::nullopt;
    IdealHandle<F> mj = ideal_product(m, j);
    IdealHandle<F> rhs_mj = ideal_sum(ideal_scale(f, j), ideal_scale(h, m));
    if (!locally_equal(mj, rhs_mj)) return std::nullopt;
    return AGWitness(f, g, h);
  }

  const Polynomial<F>& f() const noexcept { return f_; }
  const Polynomial<F>& g() const noexcept { return g_; }
  const Polynomial<F>& h() const noexcept { return h_; }

 private:
  AGWitness(Polynomial<F> f, Polynomial<F> g, Polynomial<F> h) : f_(std::move(f)), g_(std::move(g)), h_(std::move(h)) {}
  Polynomial<F> f_, g_, h_;
};

namespace detail {

/// Normal-form tables shared by the certificate search and the refuter.
/// Classes in IJ/𝔪IJ and 𝔪J/𝔪²J are represented by normal forms modulo
/// 𝔪IJ and 𝔪²J, so rank computations there are plain linear algebra.
template <Field F>
struct SpanTables {
  std::vector<Polynomial<F>> i_gens, j_gens;
  std::shared_ptr<const GroebnerBasis<F>> m_ij, m2_j;
  long mu_ij = 0, mu_mj = 0;
  /// ij[k][l] = NF(i_k j_l) mod 𝔪IJ.
  std::vector<std::vector<Polynomial<F>>> ij;
  /// mj[v][l] = NF(var_v j_l) mod 𝔪²J for v in {x, y}.
  std::vector<std::vector<Polynomial<F>>> mj;

  SpanTables(const IdealHandle<F>& ideal, const IdealHandle<F>& j) {
    const FieldConfig& cfg = ideal.field();
    IdealHandle<F> m = maximal_ideal<F>(cfg);
    i_gens = minimal_generators(ideal);
    j_gens = j.generators();
    IdealHandle<F> prod(Ring::base(), i_gens, cfg);
    IdealHandle<F> ij_ideal = ideal_product(prod, j);
    IdealHandle<F> mj_ideal = ideal_product(m, j);
    m_ij = ideal_product(m, ij_ideal).basis();
    m2_j = ideal_product(m, mj_ideal).basis();
    mu_ij = static_cast<long>(span_rank(ij_ideal.generators(), *m_ij));
    mu_mj = static_cast<long>(span_rank(mj_ideal.generators(), *m2_j));
    for (const auto& a : i_gens) {
      std::vector<Polynomial<F>> row;
      for (const auto& b : j_gens) row.push_back(normal_form(a * b, *m_ij));
      ij.push_back(std::move(row));
    }
    for (const auto& v : m.generators()) {
      std::vector<Polynomial<F>> row;
      for (const auto& b : j_gens) row.push_back(normal_form(v * b, *m2_j));
      mj.push_back(std::move(row));
    }
  }

  static std::size_t span_rank(const std::vector<Polynomial<F>>& gens, const GroebnerBasis<F>& gb) {
    EchelonBasis<F> e;
    for (const auto& g : gens) e.insert(normal_form(g, gb));
    return e.rank();
  }

  /// Classes of I·h in IJ/𝔪IJ for h = Σ c_l j_l.
  std::vector<Polynomial<F>> ih(const std::vector<F>& c) const {
    std::vector<Polynomial<F>> out;
    for (const auto& row : ij) out.push_back(combine(c, row));
    return out;
  }
  /// Classes of 𝔪·h in 𝔪J/𝔪²J.
  std::vector<Polynomial<F>> mh(const std::vector<F>& c) const {
    std::vector<Polynomial<F>> out;
    for (const auto& row : mj) out.push_back(combine(c, row));
    return out;
  }
};

/// Coefficient vectors of the h candidates on the minimal generators of J:
/// unit vectors, signed differences e_i − e_k, then `budget` seeded random
/// vectors with entries in {±1, ±2, random}.
template <Field F>
std::vector<std::vector<F>> h_coefficients(std::size_t nj, std::size_t budget, std::uint64_t seed,
                                           const FieldConfig& cfg) {
  const F one = field_int<F>(1, cfg);
  std::vector<std::vector<F>> pool;
  auto unit_vec = [&](std::size_t i) {
    std::vector<F> c(nj, one - one);
    c[i] = one;
    return c;
  };
  for (std::size_t i = 0; i < nj; ++i) pool.push_back(unit_vec(i));
  for (std::size_t i = 0; i < nj; ++i) {
    for (std::size_t k = 0; k < nj; ++k) {
      if (i == k) continue;
      auto c = unit_vec(i);
      c[k] = -one;
      pool.push_back(std::move(c));
    }
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::array<long, 4> small{1, -1, 2, -2};
  for (std::size_t n = 0; n < budget; ++n) {
    std::vector<F> c;
    for (std::size_t i = 0; i < nj; ++i) {
      std::uint64_t pick = rng() % 5;
      c.push_back(pick < 4 ? field_int<F>(small[pick], cfg) : small_random<F>(rng, cfg));
    }
    pool.push_back(std::move(c));
  }
  return pool;
}

}  // namespace detail

/// The h candidates tried by certificate_search, in search order.
template <Field F>
std::vector<Polynomial<F>> h_candidates(const IdealHandle<F>& j, std::size_t budget, std::uint64_t seed) {
  std::vector<Polynomial<F>> out;
  for (const auto& c : detail::h_coefficients<F>(j.generators().size(), budget, seed, j.field())) {
    out.push_back(detail::combine(c, j.generators()));
  }
  return out;
}

template <Field F>
std::optional<AGWitness<F>> certificate_search(const IdealHandle<F>& ideal, const ReductionData<F>& red,
                                               const IdealHandle<F>& j, std::size_t budget, std::uint64_t seed) {
  if (!red.stable || red.reduction_number > 1) throw NotStable("certificate_search requires I^2 = QI");
  const FieldConfig& cfg = ideal.field();
  detail::SpanTables<F> tab(ideal, j);
  const std::size_t nj = tab.j_gens.size();

  // g ranges over generators of I and Q; f over y, x and their differences.
  std::vector<Polynomial<F>> g_pool = tab.i_gens;
  for (const auto& q : red.q.generators()) {
    if (std::none_of(g_pool.begin(), g_pool.end(), [&](const Polynomial<F>& p) { return p == q; })) g_pool.push_back(q);
  }
  const Polynomial<F> x = variable<F>(Ring::base(), Ring::kX, cfg);
  const Polynomial<F> y = variable<F>(Ring::base(), Ring::kY, cfg);
  const std::vector<Polynomial<F>> f_pool{y, x, x - y, y - x};

  auto classes_times = [&](const Polynomial<F>& e, const GroebnerBasis<F>& gb) {
    std::vector<Polynomial<F>> out;
    for (const auto& b : tab.j_gens) out.push_back(normal_form(e * b, gb));
    return out;
  };
  std::vector<std::vector<Polynomial<F>>> g_classes, f_classes;
  for (const auto& g : g_pool) g_classes.push_back(classes_times(g, *tab.m_ij));
  for (const auto& f : f_pool) f_classes.push_back(classes_times(f, *tab.m2_j));

  auto spans = [](std::vector<Polynomial<F>> a, const std::vector<Polynomial<F>>& b, long target) {
    a.insert(a.end(), b.begin(), b.end());
    return static_cast<long>(rank_of<F>(a)) == target;
  };

  const std::vector<std::vector<F>> h_pool = detail::h_coefficients<F>(nj, budget, seed, cfg);

  for (const auto& c : h_pool) {
    std::vector<Polynomial<F>> ih = tab.ih(c);
    std::vector<Polynomial<F>> mh = tab.mh(c);
    std::optional<std::size_t> g_hit, f_hit;
    for (std::size_t k = 0; k < g_pool.size() && !g_hit; ++k) {
      if (spans(g_classes[k], ih, tab.mu_ij)) g_hit = k;
    }
    if (!g_hit) continue;
    for (std::size_t k = 0; k < f_pool.size() && !f_hit; ++k) {
      if (spans(f_classes[k], mh, tab.mu_mj)) f_hit = k;
    }
    if (!f_hit) continue;
    Polynomial<F> h = detail::combine(c, tab.j_gens);
    if (auto w = AGWitness<F>::verify(ideal, j, f_pool[*f_hit], g_pool[*g_hit], h)) return w;
  }
  return std::nullopt;
}

/// Generator-count refutation data. min_sum is the least value of
/// μ(IJ/Ih) + μ(𝔪J/𝔪h) over h ∈ J; an almost Gorenstein R(I) needs
/// min_sum <= threshold = 2(μ(J) − 1).
struct RefutationData {
  long mu_ij = 0;
  long mu_mj = 0;
  long mu_j = 0;
  long threshold = 0;
  long min_sum = 0;
  long rank_i = 0;
  long rank_m = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> primes;
  /// Upper bound on the probability that a generic rank was missed.
  double failure_bound = 0.0;
};

template <Field F>
RefutationData necessary_bound(const IdealHandle<F>& ideal, const ReductionData<F>& red, const IdealHandle<F>& j,
                               std::uint64_t seed, int trials = 16) {
  if (!red.stable || red.reduction_number > 1) throw NotStable("necessary_bound requires I^2 = QI");
  const FieldConfig& cfg = ideal.field();
  detail::SpanTables<F> tab(ideal, j);
  const long mu_j = static_cast<long>(tab.j_gens.size());
  if (mu_j < 2) throw Error("necessary_bound requires mu(J) >= 2");

  std::mt19937_64 rng(seed ^ 0xd1b54a32d192ed03ULL);
  long best_i = 0, best_m = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<F> c;
    for (long i = 0; i < mu_j; ++i) c.push_back(F::random_nonzero(rng, cfg));
    best_i = std::max(best_i, static_cast<long>(rank_of<F>(tab.ih(c))));
    best_m = std::max(best_m, static_cast<long>(rank_of<F>(tab.mh(c))));
  }
  RefutationData out;
  out.mu_ij = tab.mu_ij;
  out.mu_mj = tab.mu_mj;
  out.mu_j = mu_j;
  out.threshold = 2 * (mu_j - 1);
  out.rank_i = best_i;
  out.rank_m = best_m;
  out.min_sum = tab.mu_ij + tab.mu_mj - best_i - best_m;
  out.trials = trials;
  out.seed = seed;
  if (!cfg.is_rational()) out.primes.push_back(cfg.prime);
  // a maximal minor of degree r vanishes at a uniform sample with probability <= r/|S|
  const double sample = cfg.is_rational() ? std::ldexp(1.0, 21) : static_cast<double>(cfg.prime - 1);
  const double degree = static_cast<double>(std::max(best_i, best_m));
  out.failure_bound = std::pow(degree / sample, trials);
  return out;
}

struct ReductionSummary {
  std::vector<std::string> q;
  int reduction_number = 0;
  bool stable = false;
  std::string strategy;
};

struct ColonSummary {
  std::vector<std::string> gens;
  int order = 0;
  long mu = 0;
};

struct WitnessSummary {
  std::string f, g, h;
};

struct AGReport {
  Verdict verdict = Verdict::Unknown;
  std::vector<std::string> ideal;
  std::string field;
  std::uint64_t seed = 0;
  int order = 0;
  long mu = 0;
  long colength = 0;
  bool contracted = false;
  std::optional<bool> integrally_closed;
  std::optional<long> closure_gap;
  std::optional<ReductionSummary> reduction;
  std::optional<ColonSummary> colon;
  std::optional<WitnessSummary> witness;
  std::optional<RefutationData> refutation;
  std::vector<std::string> notes;
};

struct ClassifyConfig {
  FieldConfig field;
  std::uint64_t seed = 0;
  std::size_t budget = 64;
  int trials = 16;
  /// Over F_p, re-derive every NOT_AG verdict modulo a second prime.
  bool confirm_second_prime = true;
};

namespace detail {

template <Field F>
AGReport classify_in(const IdealHandle<Rational>& input, const ClassifyConfig& config) {
  const FieldConfig& cfg = config.field;
  std::vector<Polynomial<F>> gens;
  for (const auto& g : input.generators()) gens.push_back(convert_field<F>(g, cfg));
  IdealHandle<F> ideal(Ring::base(), std::move(gens), cfg);

  AGReport rep;
  rep.ideal = print_all(ideal.generators());
  rep.field = cfg.to_string();
  rep.seed = config.seed;
  if (!is_m_primary(ideal)) throw NotZeroDimensional("ideal " + ideal.to_string() + " is not m-primary");
  rep.order = ideal_order(ideal);
  rep.mu = min_gens(ideal);
  rep.colength = colength(ideal);
  rep.contracted = is_contracted(ideal);
  if (auto s = staircase_of(ideal)) {
    rep.closure_gap = closure_gap_length(*s);
    rep.integrally_closed = *rep.closure_gap == 0;
  }

  std::optional<ReductionData<F>> red;
  try {
    red = find_reduction(ideal, config.seed);
  } catch (const NoReductionFound& e) {
    rep.notes.push_back(std::string("no reduction found: ") + e.what());
    return rep;
  }
  rep.reduction = ReductionSummary{print_all(red->q.generators()), red->reduction_number, red->stable, red->strategy};
  if (!red->stable) {
    rep.notes.push_back("reduction number " + std::to_string(red->reduction_number) +
                        " > 1: I^2 != QI, so K_R(1) = JR is unavailable");
    return rep;
  }

  IdealHandle<F> j = canonical_colon(ideal, *red);
  rep.colon = ColonSummary{print_all(j.generators()), ideal_order(j), static_cast<long>(j.generators().size())};
  if (rep.colon->mu == 1) {
    rep.verdict = Verdict::Gorenstein;
    rep.notes.push_back("J = Q:I is principal, so R(I) is Gorenstein");
    return rep;
  }

  if (auto w = certificate_search(ideal, *red, j, config.budget, config.seed)) {
    rep.verdict = Verdict::AgCertified;
    rep.witness = WitnessSummary{w->f().to_string(), w->g().to_string(), w->h().to_string()};
    return rep;
  }

  RefutationData ref = necessary_bound(ideal, *red, j, config.seed, config.trials);
  if (ref.min_sum <= ref.threshold) {
    rep.refutation = ref;
    rep.notes.push_back("passes the generator-count bound but no witness was found in the candidate pool");
    return rep;
  }
  if (ref.mu_j > 3) {
    rep.notes.push_back("threshold 2(mu(J)-1) extrapolates the mu(J) in {2,3} argument");
  }
  rep.verdict = Verdict::NotAg;
  if constexpr (std::is_same_v<F, ModP>) {
    if (config.confirm_second_prime) {
      ClassifyConfig second = config;
      second.field = FieldConfig::prime_field(previous_prime(cfg.prime));
      second.confirm_second_prime = false;
      AGReport again = classify_in<ModP>(input, second);
      ref.primes.push_back(second.field.prime);
      ref.failure_bound = std::min(1.0, ref.failure_bound + (again.refutation ? again.refutation->failure_bound : 1.0));
      if (again.verdict != Verdict::NotAg || !again.refutation || again.refutation->min_sum != ref.min_sum) {
        rep.verdict = Verdict::Unknown;
        rep.notes.push_back("second prime " + std::to_string(second.field.prime) + " did not confirm NOT_AG");
      }
    }
  }
  rep.refutation = ref;
  return rep;
}

}  // namespace detail

/// Full pipeline: invariants, reduction, J = Q:I, witness search, refutation.
inline AGReport classify(const IdealHandle<Rational>& input, const ClassifyConfig& config = {}) {
  if (input.generators().empty()) throw EmptyIdeal("classify: no generators");
  if (config.field.is_rational()) return detail::classify_in<Rational>(input, config);
  return detail::classify_in<ModP>(input, config);
}

}  // namespace agrees
