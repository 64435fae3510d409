#include "vhlf/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>

#include "vhlf/errors.hpp"
#include "vhlf/invariants.hpp"
#include "vhlf/mass_formula.hpp"
#include "vhlf/normal_form.hpp"
#include "vhlf/presentation.hpp"
#include "vhlf/quaternion.hpp"
#include "vhlf/square_complex.hpp"
#include "vhlf/structure.hpp"

namespace vhlf {

namespace {

std::vector<QuatElem> test_elements(const Config& cfg) {
  const QuatElem z = q_Z(cfg);
  const QuatElem f = q_F(cfg);
  const VHData data = build_vh(cfg);
  return {q_one(cfg), z, f, qmul(cfg, z, f), make_alpha(cfg, data.A.front()), make_beta(cfg, data.B.back())};
}

bool is_homomorphism(const Config& cfg, Mat2 (*rho)(const Config&, const QuatElem&)) {
  const auto elems = test_elements(cfg);
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      if (!(rho(cfg, qmul(cfg, x, y)) == mul2(rho(cfg, x), rho(cfg, y)))) return false;
    }
  }
  return true;
}

}  // namespace

bool rho_z_is_homomorphism(const Config& cfg) { return is_homomorphism(cfg, &rho_z); }
bool rho_y_is_homomorphism(const Config& cfg) { return is_homomorphism(cfg, &rho_y); }

std::vector<CheckRecord> run_checks(const Config& cfg, const SuiteOptions& opt) {
  std::vector<CheckRecord> out;
  auto run = [&out](const std::string& name, const std::function<std::string()>& body) {
    // body returns an empty string on success, a witness otherwise
    CheckRecord rec{name, false, ""};
    if (std::getenv("VHLF_TRACE")) std::cerr << "check " << name << "\n";
    try {
      rec.detail = body();
      rec.ok = rec.detail.empty();
    } catch (const std::exception& e) {
      rec.detail = e.what();
    }
    out.push_back(std::move(rec));
  };

  const VHData data = build_vh(cfg);
  const QuadField& k = cfg.k();
  const Field& f = cfg.f();
  const int n = data.n();

  for (const auto& r : check_vh_axioms(data).checks) out.push_back({"vh." + r.name, r.ok, r.witness});

  run("quaternion.nrd_formulas", [&]() -> std::string {
    const RatFunc t = k_t(cfg);
    const RatFunc c = k_const(cfg, cfg.c);
    const RatFunc one = k_const(cfg, f.one());
    const RatFunc tau = k_const(cfg, cfg.tau);
    for (const Fq2& xi : data.A) {
      if (!(nrd(cfg, make_alpha(cfg, xi)) == c * c * t)) return data.name_a(data.index_a(xi));
    }
    for (const Fq2& eta : data.B) {
      const RatFunc expected = c * c * t * (t - tau) / (one - tau);
      if (!(nrd(cfg, make_beta(cfg, eta)) == expected)) return data.name_b(data.index_b(eta));
    }
    return "";
  });
  run("quaternion.relations_exact", [&]() -> std::string {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto [l, m] = data.forward[i * n + j];
        if (!relation_check(cfg, data.A[i], data.B[j], data.B[l], data.A[m])) return data.name_a(i) + data.name_b(j);
      }
    }
    return "";
  });
  run("quaternion.rho_z_homomorphism", [&] { return rho_z_is_homomorphism(cfg) ? "" : "product mismatch"; });
  run("quaternion.rho_y_homomorphism", [&] { return rho_y_is_homomorphism(cfg) ? "" : "product mismatch"; });
  run("quaternion.neighbour_valuations", [&]() -> std::string {
    for (const Fq2& xi : data.A) {
      if (neighbour_valuations_alpha(cfg, xi) != std::make_pair(1, 0)) return k.to_string(xi);
    }
    for (const Fq2& eta : data.B) {
      if (neighbour_valuations_beta(cfg, eta) != std::make_pair(0, 1)) return k.to_string(eta);
    }
    return "";
  });
  run("quaternion.dihedral_relations", [&] { return dihedral_relations_check(cfg).all() ? "" : "non-central relator"; });

  run("complex.link_complete_bipartite", [&]() -> std::string {
    const OneVertexComplex cx = build_sab(data);
    if (!is_complete_bipartite(link_of(cx))) return "link is not K_{q+1,q+1}";
    if (static_cast<int>(cx.squares.size()) * 4 != n * n) return "square count differs from (q+1)^2/4";
    return "";
  });
  run("invariants.noether", [&]() -> std::string {
    const SurfaceInvariants inv = surface_invariants(build_sab(data), cfg.q());
    if (!inv.noether_holds()) return "12 chi != c1^2 + c2";
    if (inv.c1sq != 2 * inv.c2) return "Chern ratio differs from 2";
    return "";
  });

  const Presentation gamma = present_gamma(data);
  run("presentation.gamma_certified", [&]() -> std::string {
    const auto bad = first_uncertified(cfg, gamma_images(data), gamma);
    return bad ? export_text({"", gamma.generators, {gamma.relators[*bad]}}, TextFormat::plain) : "";
  });
  run("presentation.lambda_prime_certified", [&]() -> std::string {
    const Presentation p = present_lambda_prime(cfg);
    const auto bad = first_uncertified(cfg, lambda_images(cfg, false), p);
    return bad ? "relator " + std::to_string(*bad) : "";
  });
  run("presentation.lambda_certified", [&]() -> std::string {
    const Presentation p = present_lambda(cfg);
    const auto bad = first_uncertified(cfg, lambda_images(cfg, true), p);
    return bad ? "relator " + std::to_string(*bad) : "";
  });
  run("presentation.star_matches_solver", [&]() -> std::string {
    std::map<Square, int> hits;
    std::vector<int> inv(2 * n);
    for (int i = 0; i < n; ++i) {
      inv[i] = data.inv_a[i];
      inv[n + i] = n + data.inv_b[i];
    }
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < n; ++l) {
        const StarSolution s = star_solve(cfg, i, l);
        if (!star_alternate_form_agrees(cfg, i, l, s)) return "alternate form differs at " + std::to_string(i) + "," + std::to_string(l);
        const Quadruple qd = star_quadruple(cfg, i, s.j, s.k, l);
        if (solve_forward(k, qd.xi, qd.eta) != std::make_pair(qd.lambda, qd.mu)) {
          return "(i,l) = (" + std::to_string(i) + "," + std::to_string(l) + ")";
        }
        const int a = data.index_a(qd.xi);
        const int b = data.index_b(qd.eta);
        const int b2 = data.index_b(qd.lambda);
        const int a2 = data.index_a(qd.mu);
        ++hits[canonical_square({a, n + b, inv[a2], inv[n + b2]}, inv)];
      }
    }
    if (static_cast<int>(hits.size()) * 4 != n * n) return "not every square is reached";
    for (const auto& [sq, c] : hits) {
      if (c != 4) return "uneven square coverage";
    }
    return "";
  });
  run("presentation.abelianization_finite", [&]() -> std::string {
    const auto divs = abelianization(gamma);
    if (std::find(divs.begin(), divs.end(), 0) != divs.end()) return "free rank > 0";
    if (abelianization(present_gamma(data, false)) != divs) return "depends on relator dedup";
    if (f.r() == 1 && !admits_quotient(divs, 2 * f.p(), 2)) return "no Z/2p x Z/2p quotient";
    return "";
  });
  run("presentation.uniform_quotients", [&]() -> std::string {
    const auto rep = uniform_quotients_check(data);
    if (!rep.additive_kills_relators) return "additive map does not kill relators";
    if (!rep.parity_kills_relators) return "parity map does not kill relators";
    return "";
  });

  run("normal_form.sphere_counts", [&]() -> std::string {
    const SphereTable t = sphere_table(data, opt.sphere_radius);
    if (!t.lengths_match_depth) return "normal form length differs from word length";
    for (const auto& [kl, c] : t.counts) {
      if (c != expected_sphere(cfg.q(), kl.first, kl.second)) {
        return "(" + std::to_string(kl.first) + "," + std::to_string(kl.second) + ") -> " + std::to_string(c);
      }
    }
    return "";
  });

  run("structure.local_groups", [&]() -> std::string {
    const LocalGroups lg = local_groups(data);
    const LocalPrediction pr = predict_local_groups(cfg);
    const DeterminantReport dr = local_determinants(data);
    const std::uint64_t full = pgl_order(cfg.q());
    auto expect = [&](LocalType t) { return t == LocalType::PGL ? full : full / 2; };
    if (lg.p_a.order() != expect(pr.p_a)) return "|P_A| = " + std::to_string(lg.p_a.order());
    if (lg.p_b.order() != expect(pr.p_b)) return "|P_B| = " + std::to_string(lg.p_b.order());
    if (dr.p_a != pr.p_a || dr.p_b != pr.p_b) return "determinant route disagrees";
    if (!lg.p_a.is_two_transitive() || !lg.p_b.is_two_transitive()) return "not 2-transitive";
    return "";
  });
  run("structure.iso_one_minus_tau", [&] {
    iso_one_minus_tau(cfg);
    return std::string();
  });
  run("structure.iso_frobenius", [&] {
    iso_frobenius(cfg);
    return std::string();
  });

  run("mass.formula_matches_enumeration", [&]() -> std::string {
    for (int m = 1; m <= opt.mass_max_product; ++m) {
      for (int nn = 1; m * nn <= opt.mass_max_product; ++nn) {
        const auto a = mass_labeled_formula(m, nn);
        const auto b = mass_enumerate(m, nn);
        if (a != b) return "(" + std::to_string(m) + "," + std::to_string(nn) + "): " + std::to_string(a) + " vs " + std::to_string(b);
      }
    }
    return "";
  });

  std::sort(out.begin(), out.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
  return out;
}

}  // namespace vhlf
