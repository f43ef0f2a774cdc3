#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "qwc/errors.hpp"
#include "qwc/state_transfer.hpp"

using namespace qwc;
using std::numbers::pi;

namespace {

std::vector<QuadExt> ints(std::initializer_list<std::int64_t> xs) {
  std::vector<QuadExt> out;
  for (auto x : xs) out.push_back(QuadExt::integer(x));
  return out;
}

// Exact corona eigenvalues over the support of a base vertex.
std::vector<QuadExt> corona_support(const CoronaParams& p, const std::vector<std::int64_t>& supp) {
  auto pair = [](std::int64_t a, std::int64_t radicand) {
    const auto r = square_free_part(static_cast<std::uint64_t>(radicand));
    const auto b = static_cast<std::int64_t>(r.s);
    const auto d = static_cast<std::int64_t>(r.c);
    return std::vector<QuadExt>{QuadExt(a, b, d), QuadExt(a, -b, d)};
  };
  std::vector<QuadExt> out = pair(2 * p.r1 + p.s + p.t, p.r_radicand());
  for (auto theta : supp) {
    if (theta == 2 * p.r1) continue;
    for (auto x : pair(theta + p.s + p.t, p.theta_radicand(theta))) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("periodicity from exact supports") {
  auto r = is_periodic_vertex(ints({6, 2, 0}));
  CHECK(r.periodic);
  CHECK(r.kind == PeriodicityCase::integer_case);
  r = is_periodic_vertex({QuadExt(5, 3, 3), QuadExt(5, -1, 3)});
  CHECK(r.periodic);
  CHECK(r.kind == PeriodicityCase::quadratic_case);
  CHECK(r.delta == 3);
  r = is_periodic_vertex({QuadExt(4, 2, 2), QuadExt(4, 2, 3)});
  CHECK_FALSE(r.periodic);
  CHECK(r.kind == PeriodicityCase::refuted);
  CHECK_FALSE(is_periodic_vertex({QuadExt(4, 2, 2), QuadExt::integer(1)}).periodic);
  CHECK_FALSE(is_periodic_vertex({QuadExt(1, 0, 1), QuadExt::integer(1)}).periodic);
  CHECK_THROWS_AS(is_periodic_vertex(std::vector<QuadExt>{}), std::invalid_argument);

  const auto numeric = is_periodic_vertex(std::vector<double>{2 + std::sqrt(2.0), 2 - std::sqrt(2.0)});
  CHECK(numeric.periodic);
  CHECK(is_periodic_vertex(std::vector<double>{pi, 1.0}).kind == PeriodicityCase::undecided_numeric);
}

TEST_CASE("corona base periodicity agrees with the exact support test") {
  int quadratic = 0, periodic = 0, total = 0;
  for (std::int64_t n1 = 2; n1 <= 6; ++n1)
    for (std::int64_t r1 = 1; r1 < n1; ++r1)
      for (std::int64_t n2 = 1; n2 <= 12; ++n2)
        for (std::int64_t r2 = 0; r2 < n2; ++r2) {
          const auto p = CoronaParams::make(n1, n2, r1, r2);
          // subsets of {0..2r1-1} of size <= 2, always with 2 r1
          std::vector<std::vector<std::int64_t>> supports{{2 * r1}};
          for (std::int64_t a = 0; a < 2 * r1; ++a) {
            supports.push_back({2 * r1, a});
            for (std::int64_t b = a + 1; b < 2 * r1; ++b) supports.push_back({2 * r1, a, b});
          }
          for (const auto& supp : supports) {
            const auto fast = corona_base_periodicity(p, supp);
            const auto exact = is_periodic_vertex(corona_support(p, supp));
            ++total;
            CAPTURE(n1);
            CAPTURE(r1);
            CAPTURE(n2);
            CAPTURE(r2);
            CAPTURE(supp.size() > 1 ? supp[1] : -1);
            CAPTURE(fast.witness);
            REQUIRE(fast.periodic == exact.periodic);
            if (fast.periodic) {
              ++periodic;
              CHECK(fast.delta == exact.delta);
            }
            if (fast.kind == PeriodicityCase::quadratic_case) {
              // outside 2r1 + t = s only the bare r-pair can be quadratic
              if (2 * p.r1 + p.t == p.s) {
                ++quadratic;
                CHECK(p.n2 % *fast.delta == 0);
              } else {
                CHECK(supp.size() == 1);
              }
            }
          }
        }
  CHECK(total > 1000);
  CHECK(periodic > 0);
  CHECK(quadratic > 0);
}

TEST_CASE("necessary bounds") {
  // C4 corona K1: theta = 2 gives |2-s+t| + 1 = 3 > n2 = 1
  const auto p = CoronaParams::make(4, 1, 2, 0);
  auto b = periodicity_bounds(p, {4, 2, 0});
  CHECK_FALSE(b.holds);
  CHECK(b.violating_theta == 2.0);
  b = periodicity_bounds(p, {4});
  CHECK(b.holds);
  // n1 = 2 can never satisfy the r-term
  CHECK(periodicity_bounds(CoronaParams::make(2, 9, 1, 0), {2, 0}).r_term_violated);
  CHECK(periodicity_bounds(CoronaParams::make(3, 4, 2, 3), {4, 1}).holds);
}

TEST_CASE("gap refutations") {
  // cube corona K1: s = t, supp {6,4,2,0}
  const auto p = CoronaParams::make(8, 1, 3, 0);
  const auto gap = gap_inequality_refutation(p, {6, 4, 2, 0});
  CHECK(gap.nonperiodic);
  CHECK(gap.condition == GapCondition::pair_gap);
  CHECK(gap.basis == Basis::corona_gap_inequality);
  const auto sq = sqrt_delta_gap_refutation(p, {6, 4, 2, 0});
  CHECK(sq.nonperiodic);
  CHECK(sq.basis == Basis::corona_gap_sqrt_delta);
  CHECK(sq.delta == 1);
  // lone theta: only the r-gap can fire
  const auto single = CoronaParams::make(2, 1, 1, 0);
  const auto r = gap_inequality_refutation(single, {2, 0});
  CHECK(r.nonperiodic);
  CHECK(r.condition == GapCondition::r_gap);
  CHECK_FALSE(gap_inequality_refutation(single, {2}).nonperiodic);
}

TEST_CASE("K2 corona analysis") {
  for (auto [n2, r2] : {std::pair{1, 0}, {3, 2}, {3, 0}, {5, 2}, {5, 0}, {7, 2}, {2, 0}}) {
    const auto a = k2_corona_no_pst(n2, r2);
    CAPTURE(n2);
    CHECK(a.verdict == Verdict::no_pst);
    CHECK(a.basis == Basis::k2_square_differences);
    CHECK_FALSE(a.base_periodic);
  }
  // K2 corona K2: the base is periodic, the verdict rests on the external result
  const auto k2 = k2_corona_no_pst(2, 1);
  CHECK(k2.base_periodic);
  CHECK(k2.verdict == Verdict::no_pst);
  CHECK(k2.basis == Basis::k2_even_order_external);
  CHECK(k2_corona_no_pst(4, 1).basis == Basis::k2_even_order_external);
  CHECK(k2_corona_no_pst(9, 2).verdict == Verdict::undecided);
  CHECK_THROWS_AS(k2_corona_no_pst(3, 3), std::invalid_argument);
}

TEST_CASE("K2 corona base periodicity matches a numeric search") {
  // periodic base vertex of K2 corona K2: |U(tau)_00| returns to 1
  const auto g = complete_graph(2), h = complete_graph(2);
  const auto dec = decompose(corona_full_q(g, h));
  const double best = oracle::grid_max(
      [&](double t) { return std::norm(transition_amplitude(dec, 0, 0, t)); }, 0.5, 20.0, 40000);
  CHECK(best > 1 - 1e-6);
}

TEST_CASE("PST certification") {
  const auto q = signless_laplacian(cocktail_party_graph(4));
  const auto dec = decompose(q);
  const auto r = certify_pst(dec, 0, 1);
  CHECK(r.verdict == Verdict::pst);
  CHECK(r.basis == Basis::pst_characterization);
  CHECK(r.delta == 1);
  CHECK(r.g == 2);
  REQUIRE(r.tau0);
  CHECK(std::abs(*r.tau0 - pi / 2) < 1e-15);
  const auto u = oracle::expm(q, *r.tau0);
  CHECK(std::abs(u(1, 0) - *r.phase) < 1e-9);

  const auto k2 = certify_pst(decompose(signless_laplacian(complete_graph(2))), 0, 1);
  CHECK(k2.verdict == Verdict::pst);
  CHECK(std::abs(*k2.tau0 - pi / 2) < 1e-15);

  const auto c4 = certify_pst(decompose(signless_laplacian(cycle_graph(4))), 0, 2);
  CHECK(c4.verdict == Verdict::pst);

  // odd m has no PST between antipodal vertices
  const auto cp3 = certify_pst(decompose(signless_laplacian(cocktail_party_graph(3))), 0, 1);
  CHECK(cp3.verdict == Verdict::no_pst);
  CHECK(cp3.basis == Basis::eigenvalue_parity);

  const auto not_cos = certify_pst(decompose(signless_laplacian(path_graph(3))), 0, 1);
  CHECK(not_cos.verdict == Verdict::no_pst);
  CHECK(not_cos.basis == Basis::strong_cospectrality);

  // P4 ends are strongly cospectral but the support is not quadratic-common
  const auto p4 = certify_pst(decompose(signless_laplacian(path_graph(4))), 0, 3);
  CHECK(p4.verdict == Verdict::no_pst);
  CHECK(p4.basis == Basis::common_quadratic_form);
}

TEST_CASE("certification input validation") {
  CertificationInput in;
  in.strongly_cospectral = true;
  in.numeric = {2.0, std::sqrt(3.0)};
  in.exact = {QuadExt::integer(2), std::nullopt};
  in.signs = {1, -1};
  CHECK(pst_certify(in).verdict == Verdict::undecided_numeric);
  in.exact[1] = QuadExt::integer(0);
  CHECK(pst_certify(in).verdict == Verdict::pst);
  in.signs[1] = 1;
  CHECK(pst_certify(in).basis == Basis::eigenvalue_parity);
}

TEST_CASE("corona PST checks") {
  auto r = check_corona_pst(cycle_graph(4), complete_graph(1), {0, 0}, {2, 0});
  CHECK(r.verdict == Verdict::no_pst);
  CHECK(r.basis == Basis::corona_necessary_bounds);
  CHECK(r.refutations.size() >= 2);

  r = check_corona_pst(complete_graph(2), cycle_graph(3), {0, 0}, {1, 0});
  CHECK(r.basis == Basis::k2_square_differences);

  r = check_corona_pst(complete_graph(2), complete_graph(2), {0, 0}, {1, 0});
  CHECK(r.verdict == Verdict::no_pst);

  // a copy vertex is refuted through its base
  r = check_corona_pst(cycle_graph(4), complete_graph(1), {0, 1}, {2, 1});
  CHECK(r.verdict == Verdict::no_pst);

  // non-regular G falls back to the numeric route
  r = check_corona_pst(path_graph(3), complete_graph(1), {0, 0}, {2, 0});
  CHECK(r.verdict != Verdict::pst);
  CHECK_THROWS_AS(check_corona_pst(cycle_graph(4), complete_graph(1), {0, 0}, {0, 0}),
                  std::invalid_argument);
}

TEST_CASE("PGST hypotheses") {
  const auto p = CoronaParams::make(8, 1, 6, 0);
  const auto h = check_pgst_hypotheses(p, {12, 6, 4}, 2);
  CHECK(h.ok);
  CHECK(h.r_radicand == 340);
  CHECK(h.r_root.s == 2);
  CHECK(h.r_root.c == 85);

  const auto k2 = check_pgst_hypotheses(CoronaParams::make(2, 2, 1, 1), {2, 0}, 2);
  CHECK_FALSE(k2.ok);
  CHECK(k2.failures.size() == 2);
  // theta = 0 with n2 = 1 gives Lambda_theta = 2
  const auto c4 = check_pgst_hypotheses(CoronaParams::make(4, 1, 2, 0), {4, 0}, 2);
  CHECK(c4.ok);
  CHECK(c4.notes.size() == 1);
  // no other graph eigenvalue 0 <= theta <= 2 r1 gives a rational Lambda_theta
  for (std::int64_t n1 = 3; n1 <= 9; ++n1)
    for (std::int64_t r1 = 1; r1 < n1; ++r1)
      for (std::int64_t n2 = 1; n2 <= 12; ++n2) {
        const auto q = CoronaParams::make(n1, n2, r1, 0);
        for (std::int64_t theta = 0; theta < 2 * r1; ++theta) {
          const bool square = exact_sqrt(static_cast<std::uint64_t>(q.theta_radicand(theta))).has_value();
          CHECK(square == (theta == 0 && n2 == 1));
        }
      }
  // theta = -1 is not a signless Laplacian eigenvalue; the check refuses it
  CHECK_THROWS_AS(check_pgst_hypotheses(CoronaParams::make(3, 2, 2, 0), {4, -1}, 1), std::logic_error);
}

TEST_CASE("PGST scans") {
  const auto gdec = decompose(signless_laplacian(cocktail_party_graph(4)));
  const auto p = CoronaParams::make(8, 1, 6, 0);
  const auto res = pgst_time_search(gdec, p, 0, 1, 0.05, 100000);
  CHECK(res.achieved);
  CHECK(res.fidelity >= 0.95);
  CHECK(std::abs(res.time - (4.0 * static_cast<double>(res.best_l) + 1.0) * pi) < 1e-6);
  CHECK(std::abs(std::norm(corona_transition_element(gdec, p, 0, 1, res.time)) - res.fidelity) < 1e-12);

  // starved bound
  const auto starved = scan_pgst_times(BaseAmplitude(gdec, p, 0, 1), 2, 1e-9, 3);
  CHECK_FALSE(starved.achieved);
  CHECK(starved.best_l <= 3);

  CHECK_THROWS_AS(pgst_time_search(gdec, p, 0, 2, 0.01, 10), PreconditionError);
  const auto k2 = decompose(signless_laplacian(complete_graph(2)));
  CHECK_THROWS_AS(pgst_time_search(k2, CoronaParams::make(2, 2, 1, 1), 0, 1, 0.01, 10),
                  PreconditionError);
}

TEST_CASE("cocktail party PGST branches") {
  CHECK_THROWS_AS(pgst_cocktail(2, 0.01, 10), PreconditionError);
  CHECK_THROWS_AS(pgst_cocktail(4, 0.01, 10), PreconditionError);
  CHECK(pgst_cocktail(5, 0.5, 10).branch == "distinct-square-free-parts");
  // 8*121 - 132 + 5 = 29^2
  CHECK(pgst_cocktail(11, 0.5, 10).branch == "integral-Lambda_r");
  const auto m3 = pgst_cocktail(3, 0.01, 1000000);
  CHECK(m3.achieved);
  CHECK(m3.fidelity >= 0.99);
}
