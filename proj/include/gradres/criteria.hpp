#pragma once

// The release gate: ten self-contained checks exercising the whole engine on
// small instances with independently known answers, plus the corpus runner
// that drives them from a JSON config. Every check returns a pass/fail with
// a witness string and its runtime, and enforces its own time budget.

#include "gradres/fixtures.hpp"
#include "gradres/io.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace gradres {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string witness;  // first failure, or a short summary when passing
};

namespace detail {

inline std::string join_dims(const std::vector<std::size_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i)
    s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

template <FieldLike F>
Matrix<F> single_col(const F& f, const Vec<F>& v) {
  return from_cols<F>(v.size(), {v});
}

/// Named small modules over F_2 with dim <= 5, for the oracle sweeps.
struct NamedModule {
  std::string name;
  Module<PrimeField> mod;
};

inline std::vector<NamedModule> oracle_sweep_modules(std::uint64_t seed) {
  PrimeField f(2);
  const auto d2 = truncated_poly(f, 2);
  const auto d3 = truncated_poly(f, 3);
  const auto a2 = two_vertex_arrow(f);
  std::vector<NamedModule> out;
  out.push_back({"regular/d2", forget(regular_module(d2))});
  out.push_back({"regular/d3", forget(regular_module(d3))});
  out.push_back({"regular/a2", forget(regular_module(a2))});
  out.push_back({"simple/d2", forget(top_of(regular_module(d2)))});
  out.push_back({"simple/d3", forget(top_of(regular_module(d3)))});
  out.push_back({"simple1/a2", forget(simple_at(a2, 0))});
  out.push_back({"simple2/a2", forget(simple_at(a2, 1))});
  std::mt19937_64 rng(seed);
  const AlgebraPtr<PrimeField> algs[3] = {d2, d3, a2};
  for (int t = 0; t < 20; ++t) {
    const auto& a = algs[t % 3];
    out.push_back({"random#" + std::to_string(t), random_module(a, rng, 4, false)});
  }
  return out;
}

/// The graded module list for the resolution-forgetting check, shared with
/// the determinism rerun so both runs see identical instances.
struct GradedInstance {
  std::string name;
  AlgebraPtr<PrimeField> alg;
  Module<PrimeField> mod;
};

inline std::vector<GradedInstance> graded_instances(std::uint64_t seed) {
  PrimeField f(2);
  const auto d2 = truncated_poly(f, 2);
  const auto d3 = truncated_poly(f, 3);
  const auto a2 = two_vertex_arrow(f);
  std::vector<GradedInstance> out;
  out.push_back({"k/d2", d2, top_of(regular_module(d2))});
  out.push_back({"k/d3", d3, top_of(regular_module(d3))});
  out.push_back({"s1/a2", a2, simple_at(a2, 0)});
  out.push_back({"regular/d2", d2, regular_module(d2)});
  out.push_back({"regular/d3", d3, regular_module(d3)});
  out.push_back({"regular/a2", a2, regular_module(a2)});
  std::mt19937_64 rng(seed + 3);
  for (int t = 0; t < 10; ++t) {
    const auto& a = t % 2 == 0 ? a2 : d3;
    out.push_back({"random#" + std::to_string(t) + (t % 2 == 0 ? "/a2" : "/d3"),
                   a, random_module(a, rng, 6, true)});
  }
  return out;
}

/// The fixture module pairs (right argument, left argument) for the Tor
/// comparisons over D2 and A2.
inline std::vector<std::pair<NamedModule, NamedModule>> tor_pairs() {
  PrimeField f(2);
  std::vector<std::pair<NamedModule, NamedModule>> out;
  {
    const auto d2 = truncated_poly(f, 2);
    const auto op = share(opposite(*d2));
    std::vector<NamedModule> right = {{"regular", forget(regular_module(op))},
                                      {"k", forget(top_of(regular_module(op)))}};
    std::vector<NamedModule> left = {{"regular", forget(regular_module(d2))},
                                     {"k", forget(top_of(regular_module(d2)))}};
    for (const auto& n : right)
      for (const auto& m : left)
        out.push_back({{n.name + "/d2", n.mod}, {m.name + "/d2", m.mod}});
  }
  {
    const auto a2 = two_vertex_arrow(f);
    const auto op = share(opposite(*a2));
    std::vector<NamedModule> right = {{"regular", forget(regular_module(op))},
                                      {"s1", forget(simple_at(op, 0))},
                                      {"s2", forget(simple_at(op, 1))}};
    std::vector<NamedModule> left = {{"regular", forget(regular_module(a2))},
                                     {"s1", forget(simple_at(a2, 0))},
                                     {"s2", forget(simple_at(a2, 1))}};
    for (const auto& n : right)
      for (const auto& m : left)
        out.push_back({{n.name + "/a2", n.mod}, {m.name + "/a2", m.mod}});
  }
  return out;
}

template <typename Fn>
CriterionResult timed_criterion(int id, std::string name, double budget, Fn body) {
  CriterionResult res{id, std::move(name), false, 0.0, ""};
  const auto start = std::chrono::steady_clock::now();
  try {
    res.witness = body();
    res.pass = true;
  } catch (const std::exception& e) {
    res.pass = false;
    res.witness = e.what();
  }
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (res.pass && res.seconds >= budget) {
    res.pass = false;
    res.witness = "time budget exceeded: " + std::to_string(res.seconds) + "s >= " +
                  std::to_string(budget) + "s";
  }
  return res;
}

struct criterion_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// The ten checks
// ---------------------------------------------------------------------------

inline CriterionResult criterion_1(std::uint64_t seed) {
  return detail::timed_criterion(
      1, "superfluity agrees with the exhaustive definition", 10.0, [&] {
        PrimeField f(2);
        std::size_t checked = 0;
        for (const auto& [name, m] : detail::oracle_sweep_modules(seed))
          for (const auto& sub : all_submodule_bases(m)) {
            const bool fast = is_superfluous(m, sub);
            const bool slow = is_superfluous_bruteforce(m, sub);
            ++checked;
            if (fast != slow)
              throw detail::criterion_failure(
                  "predicates disagree on " + name + ", submodule of dim " +
                  std::to_string(sub.cols()) + ": rank-based says " +
                  (fast ? "yes" : "no"));
          }
        return std::to_string(checked) + " submodules checked";
      });
}

inline CriterionResult criterion_2(std::uint64_t seed) {
  return detail::timed_criterion(
      2, "superfluous submodules push forward, add up, and split over sums",
      30.0, [&] {
        PrimeField f(2);
        const AlgebraPtr<PrimeField> algs[3] = {
            truncated_poly(f, 2), truncated_poly(f, 3), two_vertex_arrow(f)};
        std::mt19937_64 rng(seed + 2);
        std::size_t brute_checked = 0;
        for (int t = 0; t < 100; ++t) {
          const auto& a = algs[t % 3];
          const Module<PrimeField> m = random_module(a, rng, 4, false);
          const Module<PrimeField> m2 = random_module(a, rng, 4, false);
          const ModuleMap<PrimeField> phi = random_map(m, m2, rng);
          const Matrix<PrimeField> n = random_superfluous_submodule(m, rng);
          const std::string tag = " (instance " + std::to_string(t) + ")";

          if (!is_superfluous(m, n))
            throw detail::criterion_failure("radical submodule not superfluous" + tag);

          // (i) images of superfluous submodules are superfluous
          const Matrix<PrimeField> img = image_basis(m2, phi, n);
          if (!is_superfluous(m2, img))
            throw detail::criterion_failure("image fails to be superfluous" + tag);
          if (m2.dim() <= 5) {
            ++brute_checked;
            if (!is_superfluous_bruteforce(m2, img))
              throw detail::criterion_failure("exhaustive check rejects the image" + tag);
          }

          // (ii) sums of superfluous submodules are superfluous
          const Matrix<PrimeField> n2 = random_superfluous_submodule(m, rng);
          const Matrix<PrimeField> sum = submodule_sum(f, n, n2);
          if (!is_superfluous(m, sum))
            throw detail::criterion_failure("sum fails to be superfluous" + tag);
          if (m.dim() <= 5) {
            ++brute_checked;
            if (!is_superfluous_bruteforce(m, sum))
              throw detail::criterion_failure("exhaustive check rejects the sum" + tag);
          }

          // (iii) a direct sum of submodules is superfluous iff both parts are
          const Matrix<PrimeField> loose = random_submodule(m, rng);
          const Matrix<PrimeField> sup2 = random_superfluous_submodule(m2, rng);
          const DirectSum<PrimeField> d = direct_sum(m, m2);
          std::vector<Vec<PrimeField>> cols;
          for (std::size_t j = 0; j < loose.cols(); ++j)
            cols.push_back(mat_vec(f, d.inj1, col(loose, j)));
          for (std::size_t j = 0; j < sup2.cols(); ++j)
            cols.push_back(mat_vec(f, d.inj2, col(sup2, j)));
          const Matrix<PrimeField> joint = from_cols<PrimeField>(d.sum.dim(), cols);
          const bool lhs = is_superfluous(d.sum, joint);
          const bool rhs = is_superfluous(m, loose) && is_superfluous(m2, sup2);
          if (lhs != rhs)
            throw detail::criterion_failure(
                std::string("direct-sum equivalence broken: joint says ") +
                (lhs ? "yes" : "no") + tag);
          if (d.sum.dim() <= 5) {
            ++brute_checked;
            if (is_superfluous_bruteforce(d.sum, joint) != lhs)
              throw detail::criterion_failure(
                  "exhaustive check disagrees on the direct sum" + tag);
          }
        }
        return "100 instances, " + std::to_string(brute_checked) +
               " exhaustive cross-checks";
      });
}

inline CriterionResult criterion_3(std::uint64_t seed) {
  return detail::timed_criterion(
      3, "graded minimal resolutions survive forgetting the grading", 30.0, [&] {
        for (const auto& inst : detail::graded_instances(seed)) {
          const Thm26Report rep = theorem_2_6_check(inst.mod, 4);
          if (!rep.holds)
            throw detail::criterion_failure(
                inst.name + ": graded " + detail::join_dims(rep.graded_dims) +
                " vs ungraded " + detail::join_dims(rep.ungraded_dims));
        }
        return "16 modules, k up to 4";
      });
}

inline CriterionResult criterion_4(std::uint64_t) {
  return detail::timed_criterion(
      4, "shifting before or after twisting gives the same module", 5.0, [&] {
        PrimeField f(5);
        const SmashAlgebra<PrimeField> s = skew_plane(f, f.from_int(2));
        const Module<PrimeField> reg = regular_module(s.b);
        const Module<PrimeField> k = top_of(reg);
        for (const auto* n : {&reg, &k})
          for (std::int64_t b = 0; b <= 2; ++b)
            if (!prop_3_2_check(s, MonoidElt{b}, *n))
              throw detail::criterion_failure(
                  "identification fails at shift " + std::to_string(b) +
                  " on the " + std::string(n == &reg ? "regular" : "simple") +
                  " right factor");
        return "2 modules x 3 shifts";
      });
}

inline CriterionResult criterion_5(std::uint64_t) {
  return detail::timed_criterion(
      5, "twisting by the regular right factor preserves minimal resolutions",
      60.0, [&] {
        PrimeField f(5);
        const SmashAlgebra<PrimeField> s = skew_plane(f, f.from_int(2));
        const Module<PrimeField> m = top_of(regular_module(s.a));
        const Module<PrimeField> n = regular_module(s.b);
        const Thm36Report rep = theorem_3_6_check(s, m, n, 3);
        if (!rep.hypotheses_ok)
          throw detail::criterion_failure("twisted right factor not projective");
        if (!rep.holds)
          throw detail::criterion_failure("image resolution fails: " +
                                          rep.image_check.detail);
        return "image exact, projective, minimal, and equal to the direct computation";
      });
}

inline CriterionResult criterion_6(std::uint64_t) {
  return detail::timed_criterion(
      6, "the standard complex certifies its homotopy identities", 60.0, [&] {
        PrimeField f(2);
        const auto d2 = truncated_poly(f, 2);
        const auto a2 = two_vertex_arrow(f);
        struct Setup {
          std::string name;
          AlgebraPtr<PrimeField> alg;
          SubalgebraR<PrimeField> r;
        };
        std::vector<Setup> setups;
        setups.push_back({"d2/ground", d2, ground_field_subalgebra(*d2)});
        setups.push_back({"a2/ground", a2, ground_field_subalgebra(*a2)});
        setups.push_back({"a2/vertices", a2, idempotent_subalgebra(*a2, a2->idempotents())});
        std::size_t identities = 0;
        for (const auto& setup : setups) {
          std::vector<detail::NamedModule> mods;
          if (setup.alg == d2) {
            mods.push_back({"k", forget(top_of(regular_module(d2)))});
          } else {
            mods.push_back({"s1", forget(simple_at(a2, 0))});
            mods.push_back({"s2", forget(simple_at(a2, 1))});
          }
          mods.push_back({"regular", forget(regular_module(setup.alg))});
          for (const auto& [mname, mod] : mods) {
            const std::string tag = setup.name + ", module " + mname;
            const BarResolution<PrimeField> bar =
                bar_resolution(setup.alg, setup.r, mod, 4);
            if (mat_mul(f, bar.diffs[0], bar.contractions[0]) !=
                identity(f, mod.dim()))
              throw detail::criterion_failure("augmentation homotopy fails: " + tag);
            ++identities;
            for (std::size_t j = 0; j + 1 < bar.terms.size(); ++j) {
              const Matrix<PrimeField> lhs =
                  mat_add(f, mat_mul(f, bar.diffs[j + 1], bar.contractions[j + 1]),
                          mat_mul(f, bar.contractions[j], bar.diffs[j]));
              if (lhs != identity(f, bar.terms[j].dim()))
                throw detail::criterion_failure(
                    "homotopy identity fails in degree " + std::to_string(j) +
                    ": " + tag);
              ++identities;
            }
            for (std::size_t j = 1; j < bar.terms.size(); ++j) {
              if (!is_zero(f, mat_mul(f, bar.diffs[j - 1], bar.diffs[j])))
                throw detail::criterion_failure(
                    "composite differential nonzero in degree " +
                    std::to_string(j) + ": " + tag);
              ++identities;
            }
          }
        }
        return std::to_string(identities) + " identities across 8 complexes";
      });
}

inline CriterionResult criterion_7(std::uint64_t) {
  return detail::timed_criterion(
      7, "relative Tor over the ground field equals ordinary Tor", 60.0, [&] {
        std::size_t pairs = 0;
        for (const auto& [n, m] : detail::tor_pairs()) {
          const auto& a = m.mod.algebra();
          const TorTable ordinary = tor(n.mod, m.mod, 4);
          const TorTable relative =
              relative_tor(n.mod, m.mod, ground_field_subalgebra(a), 4);
          ++pairs;
          if (ordinary.dims != relative.dims)
            throw detail::criterion_failure(
                n.name + " against " + m.name + ": ordinary " +
                detail::join_dims(ordinary.dims) + " vs relative " +
                detail::join_dims(relative.dims));
        }
        return std::to_string(pairs) + " pairs, k up to 4";
      });
}

inline CriterionResult criterion_8(std::uint64_t) {
  return detail::timed_criterion(
      8, "the flattening criterion accepts and rejects the known ideals", 10.0, [&] {
        PrimeField f(2);
        const auto a2 = two_vertex_arrow(f);
        const StratifyingReport good = stratifying_check(
            a2, detail::single_col(f, a2->idempotents()[1]), 4);
        if (!good.ordinary_stratifying)
          throw detail::criterion_failure(
              "corner ideal rejected: Tor dims " +
              detail::join_dims(good.ordinary.dims));
        for (std::size_t k = 1; k < good.ordinary.dims.size(); ++k)
          if (good.ordinary.dims[k] != 0)
            throw detail::criterion_failure("corner ideal Tor persists at k = " +
                                            std::to_string(k));

        const auto d2 = truncated_poly(f, 2);
        const StratifyingReport bad =
            stratifying_check(d2, radical(*d2), 4);
        if (bad.ordinary_stratifying)
          throw detail::criterion_failure("nilpotent ideal accepted");
        if (bad.ordinary.dims.size() < 2 || bad.ordinary.dims[1] != 1)
          throw detail::criterion_failure(
              "expected a one-dimensional first obstruction, got " +
              detail::join_dims(bad.ordinary.dims));
        return "corner ideal passes with vanishing Tor; nilpotent ideal fails at k = 1";
      });
}

inline CriterionResult criterion_9(std::uint64_t) {
  return detail::timed_criterion(
      9, "the quotient functor transports the minimal resolution", 10.0, [&] {
        PrimeField f(2);
        const auto a2 = two_vertex_arrow(f);
        const Matrix<PrimeField> gens = detail::single_col(f, a2->idempotents()[1]);
        const auto quot = quotient_by_ideal(*a2, gens);
        const Module<PrimeField> m = forget(regular_module(share(quot.quotient)));
        const Thm43Report rep = theorem_4_3_check(a2, gens, m, 4);
        if (!rep.verdict_given)
          throw detail::criterion_failure("hypotheses unexpectedly rejected");
        if (!rep.holds)
          throw detail::criterion_failure("transported resolution fails: " +
                                          rep.image_check.detail);

        const auto d2 = truncated_poly(f, 2);
        const Matrix<PrimeField> xgens = radical(*d2);
        const auto dquot = quotient_by_ideal(*d2, xgens);
        const Module<PrimeField> dk = forget(regular_module(share(dquot.quotient)));
        const Thm43Report neg = theorem_4_3_check(d2, xgens, dk, 4);
        if (neg.verdict_given)
          throw detail::criterion_failure("negative control was not declined");
        if (neg.hypotheses.ordinary.dims.size() < 2 ||
            neg.hypotheses.ordinary.dims[1] == 0)
          throw detail::criterion_failure("negative control lacks a Tor witness");
        return "positive case holds; negative control declined with Tor_1 dim " +
               std::to_string(neg.hypotheses.ordinary.dims[1]);
      });
}

inline CriterionResult criterion_10(std::uint64_t seed) {
  return detail::timed_criterion(
      10, "dimension tables are unchanged under basis reordering", 120.0, [&] {
        PrimeField f2(2);

        // the resolution-forgetting tables, transported along reversed bases
        for (const auto& inst : detail::graded_instances(seed)) {
          const Thm26Report base = theorem_2_6_check(inst.mod, 4);
          const auto sigma = reversed_perm(inst.alg->dim());
          const AlgebraPtr<PrimeField> alg2 = permute_algebra(*inst.alg, sigma);
          const Module<PrimeField> moved =
              permute_module(inst.mod, alg2, sigma, reversed_perm(inst.mod.dim()));
          const Thm26Report again = theorem_2_6_check(moved, 4);
          if (base.graded_dims != again.graded_dims ||
              base.ungraded_dims != again.ungraded_dims)
            throw detail::criterion_failure(
                inst.name + ": " + detail::join_dims(base.graded_dims) +
                " became " + detail::join_dims(again.graded_dims));
        }

        // the twisted-product resolution, rebuilt from permuted factors
        PrimeField f5(5);
        const SmashAlgebra<PrimeField> s = skew_plane(f5, f5.from_int(2));
        const Module<PrimeField> m = top_of(regular_module(s.a));
        const Module<PrimeField> n = regular_module(s.b);
        const auto base_dims =
            minimal_resolution(twist_module(s, m, n), 3, true).dims();
        if (!theorem_3_6_check(s, m, n, 3).holds)
          throw detail::criterion_failure("twisted check fails before permuting");

        const auto sa = reversed_perm(2), sb = reversed_perm(2);
        const AlgebraPtr<PrimeField> a2p = permute_algebra(*s.a, sa);
        const AlgebraPtr<PrimeField> b2p = permute_algebra(*s.b, sb);
        const Matrix<PrimeField> pb = perm_matrix(f5, sb);
        const Matrix<PrimeField> sig2 =
            mat_mul(f5, pb, mat_mul(f5, s.action.sigma(MonoidElt{1}), transpose(pb)));
        GammaAlgebra<PrimeField> gp(*b2p, a2p->grading().monoid, {sig2});
        const SmashAlgebra<PrimeField> sp = smash(a2p, std::move(gp));
        const Module<PrimeField> mp = top_of(regular_module(sp.a));
        const Module<PrimeField> np = regular_module(sp.b);
        if (!theorem_3_6_check(sp, mp, np, 3).holds)
          throw detail::criterion_failure("twisted check fails after permuting");
        const auto perm_dims =
            minimal_resolution(twist_module(sp, mp, np), 3, true).dims();
        if (base_dims != perm_dims)
          throw detail::criterion_failure(
              "twisted resolution dims " + detail::join_dims(base_dims) +
              " became " + detail::join_dims(perm_dims));

        // the flattening verdict tables
        const auto a2 = two_vertex_arrow(f2);
        const auto d2 = truncated_poly(f2, 2);
        const auto strat_a = stratifying_check(
            a2, detail::single_col(f2, a2->idempotents()[1]), 4);
        const auto strat_d = stratifying_check(d2, radical(*d2), 4);
        const auto a2p2 = permute_algebra(*a2, reversed_perm(3));
        const auto d2p2 = permute_algebra(*d2, reversed_perm(2));
        const auto strat_ap = stratifying_check(
            a2p2, detail::single_col(f2, a2p2->idempotents()[1]), 4);
        const auto strat_dp = stratifying_check(
            d2p2, mat_mul(f2, perm_matrix(f2, reversed_perm(2)), radical(*d2)), 4);
        if (strat_a.ordinary.dims != strat_ap.ordinary.dims ||
            strat_a.ordinary_stratifying != strat_ap.ordinary_stratifying)
          throw detail::criterion_failure(
              "corner-ideal table changed: " +
              detail::join_dims(strat_a.ordinary.dims) + " became " +
              detail::join_dims(strat_ap.ordinary.dims));
        if (strat_d.ordinary.dims != strat_dp.ordinary.dims ||
            strat_d.ordinary_stratifying != strat_dp.ordinary_stratifying)
          throw detail::criterion_failure(
              "nilpotent-ideal table changed: " +
              detail::join_dims(strat_d.ordinary.dims) + " became " +
              detail::join_dims(strat_dp.ordinary.dims));

        return "16 resolution tables, the twisted product, and both verdicts";
      });
}

inline std::vector<CriterionResult> run_criteria(const std::vector<int>& ids,
                                                 std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id : ids) {
    switch (id) {
      case 1: out.push_back(criterion_1(seed)); break;
      case 2: out.push_back(criterion_2(seed)); break;
      case 3: out.push_back(criterion_3(seed)); break;
      case 4: out.push_back(criterion_4(seed)); break;
      case 5: out.push_back(criterion_5(seed)); break;
      case 6: out.push_back(criterion_6(seed)); break;
      case 7: out.push_back(criterion_7(seed)); break;
      case 8: out.push_back(criterion_8(seed)); break;
      case 9: out.push_back(criterion_9(seed)); break;
      case 10: out.push_back(criterion_10(seed)); break;
      default: throw input_error("unknown criterion id: " + std::to_string(id));
    }
  }
  return out;
}

inline std::vector<int> all_criterion_ids() {
  return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
}

inline bool print_criteria(std::ostream& os, const std::vector<CriterionResult>& rs) {
  bool all = true;
  for (const auto& r : rs) {
    std::ostringstream secs;
    secs.precision(1);
    secs << std::fixed << r.seconds;
    os << "criterion " << r.id << ": " << (r.pass ? "pass" : "FAIL") << " — "
       << r.name << " [" << secs.str() << "s]";
    if (!r.witness.empty()) os << " — " << r.witness;
    os << "\n";
    all = all && r.pass;
  }
  return all;
}

// ---------------------------------------------------------------------------
// Corpus runner
// ---------------------------------------------------------------------------

namespace detail {

/// A resolution given explicitly in a corpus item: the base module plus the
/// differential matrices, with free terms of the rank each column count
/// implies. Verified exact, projective, and minimal.
template <FieldLike F>
VerifyReport check_given_resolution(const F& f, const Json& item,
                                    const std::filesystem::path& dir) {
  const Json mj = resolve_ref(item.at("module"), dir);
  const auto [alg, mod] = load_module_json(f, mj, dir);
  if (item.contains("graded") && item.at("graded").get<bool>())
    throw input_error("corpus: explicit resolutions are checked ungraded");
  Resolution<F> res{forget(mod), {}, {}, false, false};
  const Module<F> reg = forget(regular_module(alg));
  for (const auto& dj : item.at("diffs")) {
    Matrix<F> d = matrix_from_json(f, dj);
    if (d.cols() % alg->dim() != 0)
      throw input_error("corpus: differential width is not a multiple of the rank");
    const std::size_t rank_k = d.cols() / alg->dim();
    res.terms.push_back(
        direct_sum_many(alg, std::vector<Module<F>>(rank_k, reg)).sum);
    res.diffs.push_back(std::move(d));
  }
  return verify_resolution(res);
}

}  // namespace detail

/// Runs the checks a corpus config selects: the numbered criteria plus any
/// explicitly listed fixture items. Returns the process exit code.
inline int corpus_run(const Json& config, const std::filesystem::path& base_dir,
                      std::ostream& os, std::uint64_t seed) {
  if (!config.is_object()) throw input_error("corpus: config must be an object");
  std::vector<int> ids;
  if (config.contains("criteria"))
    ids = config.at("criteria").get<std::vector<int>>();
  else if (!config.contains("items"))
    ids = all_criterion_ids();
  const Json items = config.contains("items") ? config.at("items") : Json::array();
  if (ids.empty() && items.empty())
    throw input_error("corpus: nothing to run (no criteria, no items)");

  bool all = print_criteria(os, run_criteria(ids, seed));

  std::size_t idx = 0;
  for (const auto& item : items) {
    ++idx;
    const std::string kind = item.at("kind").get<std::string>();
    std::string verdict = "ok", detail_msg;
    try {
      if (kind == "algebra") {
        const Json j = resolve_ref(item.at("path"), base_dir);
        with_field(declared_field(j), [&](const auto& f) {
          const auto a = algebra_from_json(f, j);
          const auto back = algebra_from_json(f, algebra_to_json(*a));
          if (!same_structure(*a, *back))
            throw internal_error("serialization round trip changed the algebra");
        });
      } else if (kind == "module") {
        const Json j = resolve_ref(item.at("path"), base_dir);
        with_field(declared_field(j), [&](const auto& f) {
          const auto [alg, mod] = load_module_json(f, j, base_dir);
          const auto back = module_from_json(f, module_to_json(mod), alg);
          if (!same_module_presentation(mod, back))
            throw internal_error("serialization round trip changed the module");
        });
      } else if (kind == "resolution") {
        const Json probe = resolve_ref(item.at("module"), base_dir);
        with_field(declared_field(probe), [&](const auto& f) {
          const VerifyReport rep = detail::check_given_resolution(f, item, base_dir);
          if (!rep.holds()) throw detail::criterion_failure(rep.detail);
        });
      } else {
        throw input_error("corpus: unknown item kind: " + kind);
      }
    } catch (const input_error&) {
      throw;  // malformed corpus entries abort the run as invalid input
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail_msg = e.what();
      all = false;
    }
    os << "item " << idx << " (" << kind << "): " << verdict;
    if (!detail_msg.empty()) os << " — " << detail_msg;
    os << "\n";
  }
  os << "corpus: " << (all ? "ok" : "FAIL") << "\n";
  return all ? 0 : 1;
}

}  // namespace gradres
