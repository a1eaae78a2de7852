#include <doctest.h>

#include <set>

#include "g2/lcrit.hpp"
#include "g2/sampling.hpp"

using namespace g2;

namespace {

const PureWeight kWorked = make_pure_weight_single({3, 2}, {-8, -9},
                                                   Basis::TBeta);
// degenerate pair: (a*, b*) = (a, b), so the Hecke width vanishes
const PureWeight kDegenerate = make_pure_weight_single({3, 1}, {3, 1},
                                                       Basis::TBeta);

// pointwise scan of the product conditions, independent of the interval
// arithmetic in crit_set_product
bool product_scan_member(const PureWeight& mu, Parabolic tag, HalfInt s0) {
  for (LKind kind : parabolic_factors(tag)) {
    CritInterval ci = crit_set(mu, kind);
    if (!ci.contains_real(s0 * lkind_scale(kind))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("transfer weights") {
  TransferredWeight t = transfer_weight({3, 2}, -6, LKind::Ad3);
  CHECK(t.entries == std::vector<long long>{4, 3, 2, 1});
  CHECK(t.pw == -6);

  t = transfer_weight({3, 2}, -6, LKind::Omega);
  CHECK(t.entries == std::vector<long long>{5});
  CHECK(t.pw == -12);

  t = transfer_weight({0, 0}, 0, LKind::StdTwist);
  CHECK(t.entries == std::vector<long long>{0, 0});
  CHECK(t.pw == 0);

  t = transfer_weight({3, 2}, -6, LKind::Std);
  CHECK(t.entries == std::vector<long long>{3, 2});
}

TEST_CASE("gamma argument offsets") {
  auto ad3 = gamma_arguments(kWorked, LKind::Ad3);
  REQUIRE(ad3.size() == 4);
  CHECK(ad3[0] == HalfInt::half(11));
  CHECK(ad3[1] == HalfInt::half(15));
  CHECK(ad3[2] == HalfInt::half(19));
  CHECK(ad3[3] == HalfInt::half(23));

  auto om = gamma_arguments(kWorked, LKind::Omega);
  REQUIRE(om.size() == 1);
  CHECK(om[0] == HalfInt(17));

  PureWeight zero = make_pure_weight_single({0, 0}, {0, 0});
  CHECK(gamma_arguments(zero, LKind::Omega)[0] == HalfInt(0));
}

TEST_CASE("widths") {
  Widths w1 = widths(kWorked, LKind::Ad3);
  CHECK(w1.abelian == HalfInt::half(-6));
  CHECK(w1.cuspidal == 5);

  Widths w2 = widths(kWorked, LKind::Omega);
  CHECK(w2.abelian == HalfInt(-6));
  CHECK(w2.cuspidal == 11);

  CHECK(widths(kDegenerate, LKind::Omega).cuspidal == 0);

  // invariance under swapping the embeddings of every pair
  Rng rng(3);
  for (int i = 0; i < 60; ++i) {
    PureWeight mu = random_pure_weight(rng, 1 + static_cast<int>(rng.range(0, 2)),
                                       20, -25, 25, Basis::T0);
    PureWeight swapped = mu;
    for (PlacePair& p : swapped.pairs) std::swap(p.eta, p.etabar);
    for (LKind kind : {LKind::Ad3, LKind::Omega, LKind::Std, LKind::StdTwist}) {
      CHECK(widths(mu, kind).cuspidal == widths(swapped, kind).cuspidal);
      CHECK(widths(mu, kind).abelian == widths(swapped, kind).abelian);
    }
  }
}

TEST_CASE("critical sets") {
  CritInterval ad3 = crit_set(kWorked, LKind::Ad3);
  CHECK(ad3.lo == HalfInt::half(-9));
  CHECK(ad3.hi == HalfInt::half(-1));
  CHECK(ad3.lattice == Lattice::HalfOdd);
  CHECK(ad3.size() == 5);

  CritInterval om = crit_set(kWorked, LKind::Omega);
  CHECK(om.lo == HalfInt(-16));
  CHECK(om.hi == HalfInt(5));
  CHECK(om.lattice == Lattice::Integers);

  CHECK(crit_set(kDegenerate, LKind::Omega).empty);
}

TEST_CASE("critical set oracle equivalence") {
  Rng rng(20260808);
  for (int i = 0; i < 200; ++i) {
    PureWeight mu = random_pure_weight(rng, 1 + static_cast<int>(rng.range(0, 1)),
                                       18, -30, 18, Basis::T0);
    for (LKind kind : {LKind::Ad3, LKind::Omega, LKind::Std, LKind::StdTwist}) {
      CritInterval ci = crit_set(mu, kind);
      HalfInt s = lkind_lattice(kind, mu.pw) == Lattice::Integers
                      ? HalfInt(-50)
                      : HalfInt::half(-99);
      for (; s <= HalfInt(50); s = s + HalfInt(1))
        CHECK(ci.contains(s) == crit_oracle(mu, kind, s));
    }
  }
}

TEST_CASE("product critical sets") {
  CritInterval prod = crit_set_product(kWorked, Parabolic::PBeta);
  CHECK(prod.lo == HalfInt::half(-9));
  CHECK(prod.hi == HalfInt::half(-1));
  CHECK(prod.lattice == Lattice::HalfOdd);

  CHECK(crit_set_product(kDegenerate, Parabolic::PBeta).empty);
  CHECK(crit_set_product(kDegenerate, Parabolic::PAlpha).empty);
  CHECK(crit_set_product(make_pure_weight_single({0, 0}, {0, 0}, Basis::TBeta),
                         Parabolic::PBeta)
            .empty);

  // product equals the pointwise intersection scan
  Rng rng(5);
  for (int i = 0; i < 120; ++i) {
    PureWeight mu = random_pure_weight(rng, 1, 16, -28, 12, Basis::T0);
    for (Parabolic tag : {Parabolic::PBeta, Parabolic::PAlpha}) {
      CritInterval prod2 = crit_set_product(mu, tag);
      for (HalfInt s = HalfInt::half(-99); s <= HalfInt(50);
           s = s + HalfInt(1))
        CHECK(prod2.contains(s) == product_scan_member(mu, tag, s));
    }
  }
}

TEST_CASE("minimal factor containment at P_beta") {
  // the product interval equals the minimal factor's pullback there
  Rng rng(17);
  for (int i = 0; i < 150; ++i) {
    PureWeight mu = random_pure_weight(rng, 1, 16, -28, 12, Basis::TBeta);
    CritInterval prod = crit_set_product(mu, Parabolic::PBeta);
    DominanceCase dc = dominance_case(mu, Parabolic::PBeta);
    LKind kind = dc == DominanceCase::L1Min ? LKind::Ad3 : LKind::Omega;
    long long count = 0;
    for (HalfInt s = HalfInt::half(-199); s <= HalfInt(100); s = s + HalfInt(1))
      if (crit_set(mu, kind).contains_real(s * lkind_scale(kind))) ++count;
    CHECK(prod.size() == count);
  }
}

TEST_CASE("poe check") {
  PoeResult poe = poe_check(kWorked, Parabolic::PBeta);
  CHECK(poe.critical_at_k);
  CHECK(poe.critical_at_k_plus_1);
  REQUIRE(poe.inequalities.size() == 4);
  CHECK(poe.inequalities[0].lo == -8);
  CHECK(poe.inequalities[0].value == -6);
  CHECK(poe.inequalities[0].hi == -2);
  CHECK(poe.inequalities[0].holds);
  CHECK(poe.inequalities[2].lo == -15);
  CHECK(poe.inequalities[2].hi == 5);
  CHECK(poe.inequalities[2].holds);

  CHECK(!poe_check(make_pure_weight_single({0, 0}, {0, 0}, Basis::TBeta),
                   Parabolic::PBeta)
             .pair_critical);

  // P_alpha instance with l1 = 5, l2 = 11: window -1-l1 <= pw <= -5+l1
  PureWeight alpha_mu = make_pure_weight_single({6, 1}, {-5, -10}, Basis::T0);
  CHECK(widths(alpha_mu, LKind::Std).cuspidal == 5);
  CHECK(widths(alpha_mu, LKind::Omega).cuspidal == 11);
  PoeResult pa = poe_check(alpha_mu, Parabolic::PAlpha);
  CHECK(pa.inequalities[0].lo == -6);
  CHECK(pa.inequalities[0].hi == 0);
  CHECK(pa.pair_critical);
}

TEST_CASE("dominance case") {
  CHECK(dominance_case(kWorked, Parabolic::PBeta) == DominanceCase::L1Min);
  // interior point of the Hecke-dominant region
  PureWeight mu = make_pure_weight_single({20, -20}, {0, -40}, Basis::TBeta);
  CHECK(widths(mu, LKind::Ad3).cuspidal == 21);
  CHECK(widths(mu, LKind::Omega).cuspidal == 20);
  CHECK(dominance_case(mu, Parabolic::PBeta) == DominanceCase::L2Min);
  // tie goes to the smaller index
  PureWeight tie = make_pure_weight_single({0, 0}, {0, 0}, Basis::TBeta);
  CHECK(widths(tie, LKind::Ad3).cuspidal == widths(tie, LKind::Ad3).cuspidal);
  CHECK(dominance_case(make_pure_weight_single({1, 0}, {-5, -6}, Basis::TBeta),
                       Parabolic::PBeta) != DominanceCase::L3Min);
}

TEST_CASE("tate covariance") {
  Rng rng(23);
  for (int i = 0; i < 80; ++i) {
    PureWeight mu = random_pure_weight(rng, 1, 14, -24, 10, Basis::T0);
    long long t = rng.range(-6, 6);
    PureWeight tw = tate_twist(mu, t);
    for (LKind kind : {LKind::Ad3, LKind::Omega, LKind::Std, LKind::StdTwist}) {
      CHECK(widths(tw, kind).cuspidal == widths(mu, kind).cuspidal);
      long long ps = lkind_purity_scale(kind);
      CHECK(widths(tw, kind).abelian ==
            widths(mu, kind).abelian + HalfInt(ps * t));
      CritInterval a = crit_set(mu, kind);
      CritInterval b = crit_set(tw, kind);
      CHECK(a.empty == b.empty);
      if (!a.empty) {
        CHECK(b.lo == a.lo + HalfInt(ps * t));
        CHECK(b.hi == a.hi + HalfInt(ps * t));
      }
    }
  }
}

TEST_CASE("tate traversal bounds") {
  TateWindow tw = tate_traversal_bounds(kWorked, Parabolic::PBeta);
  REQUIRE(!tw.empty);
  CHECK(tw.lo == -1);
  CHECK(tw.hi == 2);
  // traversal size equals the Ad3 pair count in the dominant case
  CHECK(tw.size() == widths(kWorked, LKind::Ad3).cuspidal - 1);

  CHECK(tate_traversal_bounds(kDegenerate, Parabolic::PBeta).empty);

  // exact characterization: t admissible iff poe passes after twisting,
  // and the set is contiguous
  Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    PureWeight mu = random_pure_weight(rng, 1, 14, -26, 10, Basis::T0);
    for (Parabolic tag : {Parabolic::PBeta, Parabolic::PAlpha}) {
      TateWindow w = tate_traversal_bounds(mu, tag);
      for (long long t = -40; t <= 40; ++t) {
        bool pass = poe_check(tate_twist(mu, t), tag).pair_critical;
        bool inside = !w.empty && w.lo <= t && t <= w.hi;
        CHECK(pass == inside);
      }
    }
  }
}

TEST_CASE("unitary axis") {
  CHECK(unitary_axis_check(kWorked, Parabolic::PBeta));
  PureWeight boundary = make_pure_weight_single({0, 0}, {-5, -5}, Basis::TBeta);
  CHECK(boundary.pw == -5);
  CHECK(unitary_axis_check(boundary, Parabolic::PBeta));
  PureWeight zero = make_pure_weight_single({0, 0}, {0, 0}, Basis::T0);
  CHECK(!unitary_axis_check(zero, Parabolic::PAlpha));
}

TEST_CASE("oracle rejects off-window points") {
  CHECK(crit_oracle(kWorked, LKind::Ad3, HalfInt::half(-5)));
  CHECK(!crit_oracle(kWorked, LKind::Ad3, HalfInt::half(-11)));
  CHECK_THROWS_AS(crit_oracle(kWorked, LKind::Ad3, HalfInt(1)),
                  std::domain_error);
}
