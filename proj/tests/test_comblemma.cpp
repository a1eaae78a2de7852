#include <doctest.h>

#include <set>

#include "g2/comblemma.hpp"

using namespace g2;

TEST_CASE("transcribed critical regions match the worked cases") {
  auto regs = critical_regions(-6, Parabolic::PBeta);
  REQUIRE(regs.size() == 10);
  CHECK(regs[0].name == "(1)");
  // case (1): b <= a <= 2b
  CHECK(regs[0].contains(3, 2, -6));
  CHECK(!regs[0].contains(5, 2, -6));
  // case (2): 2b-3-w <= a <= 3b-2-w, at pw=-6: 2b+3 <= a <= 3b+4
  CHECK(regs[1].contains(7, 2, -6));
  CHECK(regs[1].contains(10, 2, -6));
  CHECK(!regs[1].contains(11, 2, -6));
  CHECK(!regs[1].contains(6, 2, -6));
  // regime switch at pw = 3: case (1) becomes b <= a <= 2b-w-5 = 2b-8
  auto pos = critical_regions(3, Parabolic::PBeta);
  CHECK(pos[0].contains(2, 5, 3) == false);
  CHECK(pos[0].contains(4, 4, 3) == false);
  CHECK(pos[0].contains(8, 8, 3));
  CHECK(!pos[0].contains(9, 8, 3));

  // the Hecke-dominant witness used in the lcrit tests sits in case (5)
  auto deep = critical_regions(-20, Parabolic::PBeta);
  CHECK(deep[4].name == "(5)");
  CHECK(deep[4].contains(20, -20, -20));
}

TEST_CASE("regime boundary belongs to both branches") {
  // at pw = -5 the two regime instantiations agree pointwise
  for (Parabolic tag : {Parabolic::PBeta, Parabolic::PAlpha}) {
    auto at = critical_regions(-5, tag);
    for (long long a = -30; a <= 30; ++a)
      for (long long b = -30; b <= 30; ++b) {
        bool member = false;
        for (const auto& r : at)
          if (r.contains(a, b, -5)) member = true;
        CHECK(member == statement_one(a, b, -5, tag));
      }
  }
}

TEST_CASE("critical region union equals the criticality predicate") {
  for (Parabolic tag : {Parabolic::PBeta, Parabolic::PAlpha}) {
    for (long long pw : {-12, -7, -5, -3, 0, 3}) {
      auto regs = critical_regions(pw, tag);
      for (long long a = -40; a <= 40; ++a)
        for (long long b = -40; b <= 40; ++b) {
          bool in_union = false;
          for (const auto& r : regs)
            if (r.contains(a, b, pw)) {
              in_union = true;
              break;
            }
          CHECK(in_union == statement_one(a, b, pw, tag));
        }
    }
  }
}

TEST_CASE("critical regions are disjoint away from boundaries") {
  for (Parabolic tag : {Parabolic::PBeta, Parabolic::PAlpha}) {
    for (long long pw : {-7, 3}) {
      auto regs = critical_regions(pw, tag);
      for (long long a = -40; a <= 40; ++a)
        for (long long b = -40; b <= 40; ++b) {
          int hits = 0;
          bool all_boundary = true;
          for (const auto& r : regs)
            if (r.contains(a, b, pw)) {
              ++hits;
              all_boundary = all_boundary && r.on_boundary(a, b, pw);
            }
          if (hits > 1) CHECK(all_boundary);
        }
    }
  }
}

TEST_CASE("derived twisted regions match the transcribed ones") {
  for (long long pw = -12; pw <= 6; ++pw) {
    auto der = twisted_regions(pw, Parabolic::PBeta);
    auto tra = twisted_regions_transcribed_beta(pw);
    REQUIRE(der.size() == 6);
    REQUIRE(tra.size() == 6);
    for (size_t i = 0; i < 6; ++i)
      for (long long a = -60; a <= 60; ++a)
        for (long long b = -60; b <= 60; ++b)
          CHECK(der[i].contains(a, b, pw) == tra[i].contains(a, b, pw));
  }
}

TEST_CASE("twisted region membership equals balanced-shape dominance") {
  // region (I) for pw <= -5 is b <= a <= 2b; (VI) is 2a-w <= b <= a
  auto regs = twisted_regions(-6, Parabolic::PBeta);
  CHECK(regs[0].contains(3, 2, -6));
  CHECK(!regs[0].contains(5, 2, -6));
  CHECK(regs[5].contains(-7, -8, -6));  // 2a-w = -8 <= b = -8 <= a
  CHECK(!regs[5].contains(-7, -9, -6));
}

TEST_CASE("coverage is exact at the scan weights") {
  for (Parabolic tag : {Parabolic::PBeta, Parabolic::PAlpha}) {
    for (long long pw : {-7, 3}) {
      CoverageReport rep = coverage_report(pw, tag, 40);
      CHECK(rep.symmetric_difference_empty());
      CHECK(rep.crit_count > 0);
    }
  }
}

TEST_CASE("each point admits at most two balanced shapes") {
  for (Parabolic tag : {Parabolic::PBeta, Parabolic::PAlpha}) {
    for (long long pw : {-7, -5, 0}) {
      auto regs = twisted_regions(pw, tag);
      for (long long a = -30; a <= 30; ++a)
        for (long long b = -30; b <= 30; ++b) {
          int hits = 0;
          for (const auto& r : regs)
            if (r.contains(a, b, pw)) ++hits;
          CHECK(hits <= 2);
        }
    }
  }
}

TEST_CASE("lattice-free checks") {
  auto sliver = lattice_free_check({RationalPoint{Rational(0), Rational(0)},
                                    RationalPoint{Rational(0), Rational(1)},
                                    RationalPoint{Rational(1, 2), Rational(-1, 2)}});
  CHECK(sliver.lattice_free);
  CHECK(sliver.vertex_lattice_points.size() == 2);

  auto big = lattice_free_check({RationalPoint{Rational(0), Rational(0)},
                                 RationalPoint{Rational(3), Rational(0)},
                                 RationalPoint{Rational(0), Rational(3)}});
  CHECK(!big.lattice_free);
  REQUIRE(big.witness.has_value());

  // shrinking to the open interior still flags the (1,1) point
  auto interior =
      lattice_free_check({RationalPoint{Rational(1, 2), Rational(1, 2)},
                          RationalPoint{Rational(5, 2), Rational(1, 2)},
                          RationalPoint{Rational(1, 2), Rational(5, 2)}});
  CHECK(!interior.lattice_free);
  REQUIRE(interior.witness.has_value());
  CHECK(interior.witness->a == 1);
  CHECK(interior.witness->b == 1);

  CHECK_THROWS_AS(
      lattice_free_check({RationalPoint{Rational(0), Rational(0)},
                          RationalPoint{Rational(1), Rational(1)},
                          RationalPoint{Rational(2), Rational(2)}}),
      std::domain_error);
}

TEST_CASE("uncovered slivers carry no quarter-lattice points for P_alpha") {
  // the twisted regions of P_alpha cover the critical ones exactly; the
  // uncovered sliver phenomenon only occurs for P_beta
  for (long long pw : {-7, 0}) {
    auto regs = critical_regions(pw, Parabolic::PAlpha);
    auto tws = twisted_regions(pw, Parabolic::PAlpha);
    for (long long qa = -4 * 25; qa <= 4 * 25; ++qa)
      for (long long qb = -4 * 25; qb <= 4 * 25; ++qb) {
        auto ev = [&](const AffineForm& f) {
          return f.ca * qa + f.cb * qb + 4 * (f.cw * pw + f.c0);
        };
        bool ic = false, it = false;
        for (const auto& r : regs) {
          bool ok = true;
          for (const auto& f : r.constraints)
            if (ev(f) < 0) {
              ok = false;
              break;
            }
          if (ok) {
            ic = true;
            break;
          }
        }
        for (const auto& r : tws) {
          bool ok = true;
          for (const auto& f : r.constraints)
            if (ev(f) < 0) {
              ok = false;
              break;
            }
          if (ok) {
            it = true;
            break;
          }
        }
        CHECK(ic == (ic && it));
      }
  }
}

TEST_CASE("lemma verification on a compact window") {
  for (Parabolic tag : {Parabolic::PBeta, Parabolic::PAlpha}) {
    LemmaReport rep = verify_lemma(tag, -16, 6, 24);
    CHECK(rep.disagreements.empty());
    CHECK(rep.derived_family_mismatches == 0);
    CHECK(rep.printed_family_mismatches > 0);  // printed bounds differ
    CHECK(rep.points_checked > 0);
  }

  // worked instance and the degenerate one
  CHECK(statement_one(3, 2, -6, Parabolic::PBeta));
  CHECK(statement_three(3, 2, -6, Parabolic::PBeta));
  CHECK(!statement_one(3, 1, 4, Parabolic::PBeta));
  CHECK(!statement_three(3, 1, 4, Parabolic::PBeta));
}
