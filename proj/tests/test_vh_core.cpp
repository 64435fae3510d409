#include "doctest.h"

#include <algorithm>
#include <set>

#include "test_util.hpp"
#include "vhlf/errors.hpp"
#include "vhlf/quaternion.hpp"
#include "vhlf/vh_core.hpp"

using namespace vhlf;
using testutil::quad;

TEST_CASE("generating sets for q = 3, tau = 2") {
  const Config cfg = make_config(3, 2);
  const QuadField& k = cfg.k();
  REQUIRE(cfg.c.code == 2);
  REQUIRE(cfg.delta == quad(k, 1, 1));
  REQUIRE(cfg.zeta == quad(k, 1, 1));
  const VHData data = build_vh(cfg);
  const std::set<Fq2> a(data.A.begin(), data.A.end());
  const std::set<Fq2> b(data.B.begin(), data.B.end());
  CHECK(a == std::set<Fq2>{quad(k, 1, 0), quad(k, 2, 0), quad(k, 0, 1), quad(k, 0, 2)});
  CHECK(b == std::set<Fq2>{quad(k, 1, 1), quad(k, 1, 2), quad(k, 2, 1), quad(k, 2, 2)});
  CHECK(data.name_a(data.index_a(k.z())) == "a:(0,1)");
  CHECK(data.name_b(data.index_b(quad(k, 2, 2))) == "b:(2,2)");
  CHECK_THROWS_AS(data.index_a(quad(k, 1, 1)), Error);
  CHECK_FALSE(data.find_b(k.z()).has_value());
}

TEST_CASE("solver example and round trip for q = 3") {
  const Config cfg = make_config(3, 2);
  const QuadField& k = cfg.k();
  const auto [lambda, mu] = solve_forward(k, k.z(), quad(k, 1, 1));
  CHECK(lambda == quad(k, 2, 2));
  CHECK(mu == quad(k, 2, 0));
  const auto [xi, eta] = solve_backward(k, quad(k, 2, 2), quad(k, 2, 0));
  CHECK(xi == k.z());
  CHECK(eta == quad(k, 1, 1));
}

TEST_CASE("sets, sigma and solvers across all configurations") {
  for (int q : testutil::kOddQ) {
    for (int tc = 2; tc < q; ++tc) {
      CAPTURE(q);
      CAPTURE(tc);
      const Config cfg = make_config(q, tc);
      const QuadField& k = cfg.k();
      const VHData data = build_vh(cfg);
      const int n = data.n();
      REQUIRE(n == q + 1);
      REQUIRE(static_cast<int>(data.B.size()) == q + 1);
      for (const Fq2& xi : data.A) {
        CHECK(k.norm(xi) == cfg.norm_a());
        CHECK_FALSE(data.find_b(xi).has_value());
        CHECK(data.find_a(k.neg(xi)).has_value());
      }
      for (const Fq2& eta : data.B) {
        CHECK(k.norm(eta) == cfg.norm_b());
        CHECK(data.find_b(k.neg(eta)).has_value());
      }
      // sigma_xi is a permutation of B, sigma_eta of A.
      for (const Fq2& xi : data.A) {
        std::set<Fq2> image;
        for (const Fq2& eta : data.B) {
          const Fq2 s = sigma(k, xi, eta);
          CHECK(k.norm(s) == k.norm(eta));
          image.insert(s);
        }
        CHECK(static_cast<int>(image.size()) == n);
      }
      for (const Fq2& eta : data.B) {
        std::set<Fq2> image;
        for (const Fq2& xi : data.A) image.insert(sigma(k, eta, xi));
        CHECK(image == std::set<Fq2>(data.A.begin(), data.A.end()));
      }
      // Corner relation a_xi b_{sigma_xi(lambda)} = b_lambda a_{sigma_lambda(xi)}.
      std::set<std::pair<int, int>> outputs;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const auto [l, m] = data.forward[i * n + j];
          outputs.insert({l, m});
          CHECK(data.backward[l * n + m] == std::pair{i, j});
          CHECK(data.B[j] == sigma(k, data.A[i], data.B[l]));
          CHECK(data.A[m] == sigma(k, data.B[l], data.A[i]));
          CHECK(data.sigma_b[i * n + l] == j);
          CHECK(data.sigma_a[l * n + i] == m);
        }
      }
      CHECK(static_cast<int>(outputs.size()) == n * n);
    }
  }
}

TEST_CASE("VH axioms hold for every configuration") {
  for (int q : testutil::kOddQ) {
    for (int tc = 2; tc < q; ++tc) {
      const VHData data = build_vh(make_config(q, tc));
      const VHReport rep = check_vh_axioms(data);
      CAPTURE(q);
      CAPTURE(tc);
      CHECK(rep.ok());
      CHECK(rep.find("iv_no_2_torsion") != nullptr);
      CHECK(rep.find("relations_exact_in_D") != nullptr);
      CHECK(check_vh_axioms(to_abstract(data)).ok());
    }
  }
}

TEST_CASE("the degenerate fixture fails only the torsion axiom") {
  const VHReport rep = check_vh_axioms(degenerate_fixture());
  CHECK_FALSE(rep.ok());
  REQUIRE(rep.first_failure() != nullptr);
  CHECK(rep.first_failure()->name == "iv_no_2_torsion");
  CHECK_FALSE(rep.first_failure()->witness.empty());
  CHECK(rep.find("i_inverse_involution_A")->ok);
  CHECK(rep.find("i_inverse_involution_B")->ok);
  CHECK(rep.find("iii_product_bijection")->ok);
}

TEST_CASE("broken involutions and duplicate products are reported") {
  AbstractVH vh = degenerate_fixture();
  vh.inv_a = {0, 1};
  CHECK_FALSE(check_vh_axioms(vh).find("i_inverse_involution_A")->ok);
  AbstractVH dup = degenerate_fixture();
  dup.relations[1] = dup.relations[0];
  CHECK_FALSE(check_vh_axioms(dup).find("iii_product_bijection")->ok);
}

TEST_CASE("conjugation actions for q = 3") {
  const Config cfg = make_config(3, 2);
  const QuadField& k = cfg.k();
  CHECK(k.pe(cfg.delta) == k.z());
  const std::vector<Fq2> orbit{k.z(), quad(k, 2, 0), quad(k, 0, 2), quad(k, 1, 0)};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    CHECK(conj_action_d(cfg, orbit[i]) == orbit[(i + 1) % orbit.size()]);
  }
  CHECK(conj_action_s(cfg, k.z()) == k.z());
  CHECK(centralizer_reflection(cfg, k.z()) == 0);
}

TEST_CASE("d acts as a single cycle, s as an involution, reflections are unique") {
  for (int q : testutil::kOddQ) {
    for (int tc = 2; tc < q; ++tc) {
      const Config cfg = make_config(q, tc);
      const QuadField& k = cfg.k();
      const VHData data = build_vh(cfg);
      for (const auto* set : {&data.A, &data.B}) {
        Fq2 x = set->front();
        int steps = 0;
        do {
          x = conj_action_d(cfg, x);
          CHECK(std::find(set->begin(), set->end(), x) != set->end());
          ++steps;
        } while (x != set->front() && steps <= q + 1);
        CHECK(steps == q + 1);
        for (const Fq2& w : *set) {
          const Fq2 s = conj_action_s(cfg, w);
          CHECK(std::find(set->begin(), set->end(), s) != set->end());
          CHECK(conj_action_s(cfg, s) == w);
          const int r = centralizer_reflection(cfg, w);
          CHECK(r >= 0);
          CHECK(r <= q);
          int hits = 0;
          for (int e = 0; e <= q; ++e) {
            if (k.pe(k.mul(w, k.pow(cfg.delta, static_cast<std::uint64_t>(e)))) == k.neg(k.one())) ++hits;
          }
          CHECK(hits == 1);
        }
      }
    }
  }
}

TEST_CASE("solve_forward commutes with the d-action") {
  for (int q : testutil::kOddQ) {
    const Config cfg = make_config(q, q - 1);
    const QuadField& k = cfg.k();
    const VHData data = build_vh(cfg);
    for (const Fq2& xi : data.A) {
      for (const Fq2& eta : data.B) {
        const auto [lambda, mu] = solve_forward(k, xi, eta);
        const auto [l2, m2] = solve_forward(k, conj_action_d(cfg, xi), conj_action_d(cfg, eta));
        CHECK(l2 == conj_action_d(cfg, lambda));
        CHECK(m2 == conj_action_d(cfg, mu));
      }
    }
  }
}

TEST_CASE("linear lift of sigma has determinant 1 - N(xi / mu)") {
  for (int q : testutil::kOddQ) {
    for (int tc = 2; tc < q; ++tc) {
      const Config cfg = make_config(q, tc);
      const Field& F = cfg.f();
      const QuadField& k = cfg.k();
      const VHData data = build_vh(cfg);
      for (const Fq2& xi : data.A) {
        for (const Fq2& mu : data.B) {
          const Fq2 omega = k.div(xi, mu);
          // Images of the basis 1 and Z under w -> w - omega conj(w).
          const Fq2 img1 = k.sub(k.one(), k.mul(omega, k.one()));
          const Fq2 imgz = k.sub(k.z(), k.mul(omega, k.conj(k.z())));
          const Fq det = F.sub(F.mul(img1.w0, imgz.w1), F.mul(imgz.w0, img1.w1));
          CHECK(det == F.sub(F.one(), k.norm(omega)));
          CHECK(det != F.zero());
        }
      }
    }
  }
}

TEST_CASE("sigma rejects coincident input") {
  const Config cfg = make_config(5, 2);
  const Fq2 xi = build_vh(cfg).A[0];
  CHECK_THROWS_AS(sigma(cfg.k(), xi, xi), Error);
}
