#include <doctest.h>

#include <cmath>

#include "pql/domains/domains.hpp"

using namespace pql::domains;

TEST_CASE("curve V") {
  CHECK(curve_V(3, 0) == doctest::Approx(4));
  CHECK(curve_V(6, 0) == doctest::Approx(1));
  CHECK(curve_V(4, 0.5) == doctest::Approx(2.25));
  CHECK_THROWS_AS(curve_V(3, 1), pql::PreconditionError);
  CHECK_THROWS_AS(curve_V(2, 0.5), pql::PreconditionError);
}

TEST_CASE("curve V monotonicity") {
  for (int n = 3; n < 12; ++n)
    for (double q = 0; q < 0.99; q += 0.01) {
      CHECK(curve_V(n + 1, q) < curve_V(n, q));
      CHECK(curve_V(n, q) < curve_V(n, q + 0.01));
    }
}

TEST_CASE("G and H") {
  CHECK(G_bgv(6, 2, 0) == doctest::Approx(0));
  CHECK(G_bgv(6, 1, 0) == doctest::Approx(-4));
  CHECK(G_bgv(6, 0, 1) == doctest::Approx(-6));
  CHECK(H_mawu(3, 0, 1) == doctest::Approx(-1));
  CHECK(H_mawu(3, 1, 0.5) == doctest::Approx(-4));
  CHECK(H_mawu(7, 0, 0) == doctest::Approx(1.0 / 25));
}

TEST_CASE("G(., 0) vanishes exactly at 0 and the Sobolev exponent") {
  for (int n = 3; n <= 12; ++n) {
    // G(p,0) = (n-2) p^2 - (n+2) p: integer arithmetic at p = (n+2)/(n-2) scaled by (n-2)^2
    long a = n - 2, b = -(n + 2), P = n + 2, D = n - 2;
    CHECK(a * P * P + b * P * D == 0);
    CHECK(G_bgv(n, 0, 0) == 0);
    CHECK(std::abs(G_bgv(n, double(P) / D, 0)) < 1e-12);
  }
}

TEST_CASE("feasibility") {
  CHECK(feasibility(FeasSet::D, 6, 0.5, 0.1));
  CHECK_FALSE(feasibility(FeasSet::D, 6, 0, 1.9));
  CHECK_THROWS_AS(feasibility(FeasSet::D, 6, 0.5, 0), pql::PreconditionError);
  CHECK_THROWS_AS(feasibility(FeasSet::D, 6, 0.5, 2), pql::PreconditionError);
}

TEST_CASE("phi is increasing") {
  for (int n : {3, 6, 10})
    for (double q : {0.0, 0.7, 1.4})
      for (double y = 0.01; y < 1.98; y += 0.01) CHECK(phi(n, q, y) < phi(n, q, y + 0.01));
  CHECK(phi(6, 0.5, 1e-12) == doctest::Approx((3 - 0.5) / 4));
}

TEST_CASE("suprema") {
  SupResult d = sup_phi(FeasSet::D, 6, 1.2, 1e-9);
  CHECK(d.attained);
  CHECK_FALSE(d.plus_infinity);
  CHECK(d.value > 1);
  CHECK(d.value == doctest::Approx(3.0940749).epsilon(1e-6));  // dense scan at step 1e-6
  CHECK(feasibility(FeasSet::D, 6, 1.2, d.argmax_y));
  SupResult e = sup_phi(FeasSet::E, 6, 1.5, 1e-9);
  CHECK(e.argmax_y > 0);
  CHECK(e.argmax_y < 2);
  CHECK(e.value == doctest::Approx(4.7343429).epsilon(1e-6));
  CHECK_THROWS_AS(sup_phi(FeasSet::D, 6, 1.2, 0), pql::PreconditionError);
  CHECK_THROWS_AS(sup_phi(FeasSet::D, 6, 0.2, 1e-9), pql::PreconditionError);
  CHECK_THROWS_AS(sup_phi(FeasSet::E, 6, 0.9, 1e-9), pql::PreconditionError);
}

TEST_CASE("suprema do not decrease under refinement") {
  for (double q : {0.6, 0.9, 1.2, 1.45}) {
    double prev = -INFINITY;
    for (double tol : {1e-3, 1e-6, 1e-9}) {
      double v = sup_phi(FeasSet::D, 6, q, tol).value;
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("memo table") {
  SupTable t;
  SupResult a = t.get(FeasSet::D, 6, 1.2, 1e-6);
  CHECK(t.size() == 1);
  SupResult b = t.get(FeasSet::D, 6, 1.2, 1e-9);  // tighter: recomputed
  CHECK(b.value >= a.value - 1e-12);
  CHECK(t.records().front().tol == 1e-9);
  t.get(FeasSet::D, 6, 1.2, 1e-6);  // looser request is served from the table
  CHECK(t.records().front().tol == 1e-9);
}

TEST_CASE("admissible sets") {
  CHECK(in_admissible(AdmSet::BL, {6, 1, 0}));
  CHECK(in_admissible(AdmSet::L, {6, 1, 0}));
  CHECK(in_admissible(AdmSet::L, {6, 0.2, 1.8}));
  CHECK_FALSE(in_admissible(AdmSet::BL, {6, 3, 0.5}));
  CHECK(in_admissible(AdmSet::BL, {6, 10, 1.5}));
  CHECK_FALSE(in_admissible(AdmSet::A, {6, 10, 1.5}));
  CHECK_THROWS_AS(in_admissible(AdmSet::L, {2, 1, 0}), pql::PreconditionError);
}

TEST_CASE("boundary band") {
  const int n = 6;
  const double q = 1.2;
  SupResult s = sup_phi(FeasSet::D, n, q, kSupTol);
  ParamPoint on{n, s.value + 1 - q, q};
  CHECK(membership(AdmSet::A, on) == Member::Boundary);
  CHECK_FALSE(in_admissible(AdmSet::A, on));
  ParamPoint inside{n, s.value + 1 - q - 1e-6, q};
  CHECK(membership(AdmSet::A, inside) == Member::Yes);
}

TEST_CASE("L and BL agree for q <= 1") {
  for (int n : {3, 5, 8})
    for (double q = 0.005; q <= 1; q += 0.01) {
      RowSups row = row_sups(n, q);
      for (double p = -1; p < 6; p += 0.05) {
        ParamPoint pt{n, p, q};
        CHECK(membership(AdmSet::L, pt, row) == membership(AdmSet::BL, pt, row));
      }
    }
}

TEST_CASE("classify") {
  Verdict v = classify({6, 1, 0}, false);
  CHECK(v.status == Status::LiouvilleProven);
  CHECK(v.criterion == "cond3");
  v = classify({6, 3, 0.5}, false);
  CHECK(v.status == Status::RadialSolutionsExist);
  CHECK(v.criterion.empty());
  v = classify({2, 100, 0.5}, false);
  CHECK(v.status == Status::LiouvilleProven);
  CHECK(v.criterion == "cond1");
  CHECK(classify({6, 0.2, 1.8}, false).criterion == "cond2");
  CHECK(classify({6, 1.2, 0.7}, false).criterion == "cond4");
  CHECK(classify({6, 1.5, 0.0}, false).criterion == "cond3");
  CHECK(classify({6, 10, 1.55}, true).status == Status::LiouvilleBoundedOnly);
  v = classify({6, 10, 1.55}, true);
  CHECK(v.criterion == "BL");
  CHECK(v.fired.back() == "bounded_q32");
  CHECK(classify({6, 10, 1.55}, false).status == Status::Unknown);
  CHECK_THROWS_AS(classify({6, 1, -0.1}, false), pql::PreconditionError);
}

TEST_CASE("condition 4 needs q > 0") {
  // p_S(6) = 2: at q = 0 the Sobolev point is on V and belongs to the radial region
  Verdict v = classify({6, 2, 0}, false);
  CHECK(v.status == Status::RadialSolutionsExist);
}

TEST_CASE("classifier regions are disjoint") {
  for (int n = 3; n <= 10; ++n)
    for (double q = 0; q < 2.1; q += 0.02) {
      RowSups row = row_sups(n, q);
      for (double p = -1; p < 8; p += 0.03) CHECK_NOTHROW(classify({n, p, q}, true, row));
    }
}

TEST_CASE("containment inequalities") {
  for (int n = 3; n <= 10; ++n) {
    ContainmentReport r = containment_check(n, 0.01);
    CHECK_MESSAGE(r.ok(), r.text());
    CHECK(r.items.size() == (n >= 4 ? 5u : 4u));
  }
  ContainmentReport r6 = containment_check(6, 0.1);
  // at q = 0.3: l_V - (p5 + q - 1) = 1.0321 - 0.5990
  CHECK(curve_V(6, 0.3) - (p_cond5(6) + 0.3 - 1) == doctest::Approx(0.4331).epsilon(1e-3));
  CHECK(r6.ok());
}
