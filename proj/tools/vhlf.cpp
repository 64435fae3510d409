// Command-line front end. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 ok, 1 a check failed, 2 usage or parameter error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "vhlf/errors.hpp"
#include "vhlf/invariants.hpp"
#include "vhlf/mass_formula.hpp"
#include "vhlf/normal_form.hpp"
#include "vhlf/presentation.hpp"
#include "vhlf/square_complex.hpp"
#include "vhlf/structure.hpp"
#include "vhlf/verify.hpp"

using nlohmann::json;
using namespace vhlf;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct FieldFlags {
  std::optional<int> q;
  std::optional<int> p;
  std::optional<int> r;
  std::optional<int> c;
  std::optional<int> delta;
  std::optional<int> zeta;
};

void add_field_flags(CLI::App* cmd, FieldFlags& f, bool overrides) {
  cmd->add_option("--q", f.q, "field order (odd prime power)");
  cmd->add_option("--p", f.p, "characteristic, with --r");
  cmd->add_option("--r", f.r, "degree over F_p, with --p");
  if (overrides) {
    cmd->add_option("--c", f.c, "non-square c (integer encoding)");
    cmd->add_option("--delta", f.delta, "generator delta of F_q[Z]^* (e0 + e1 q)");
    cmd->add_option("--zeta", f.zeta, "zeta of norm (tau-1)/tau (e0 + e1 q)");
  }
}

std::shared_ptr<const Field> resolve_field(const FieldFlags& f) {
  if (f.q && (f.p || f.r)) throw Error(ErrorCode::InvalidParameter, "give either --q or --p/--r");
  if (f.q) return std::make_shared<const Field>(make_field_for_order(*f.q));
  if (f.p && f.r) return std::make_shared<const Field>(make_field(*f.p, *f.r));
  throw Error(ErrorCode::InvalidParameter, "field not specified: use --q or --p and --r");
}

Config resolve_config(const FieldFlags& f, int tau) {
  const auto field = resolve_field(f);
  return make_config(field, field->element(tau), {f.c, f.delta, f.zeta});
}

json config_json(const Config& cfg) {
  return {{"q", cfg.q()},
          {"p", cfg.f().p()},
          {"r", cfg.f().r()},
          {"tau", cfg.tau.code},
          {"c", cfg.c.code},
          {"delta", cfg.k().encode(cfg.delta)},
          {"zeta", cfg.k().encode(cfg.zeta)}};
}

void print(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string rational_string(const boost::rational<long long>& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// ---------------------------------------------------------------------------

int cmd_verify(const Config& cfg, bool deep) {
  SuiteOptions opt;
  if (deep) {
    opt.sphere_radius = sphere_bound(cfg.q());
    opt.mass_max_product = mass_bound();
  }
  const auto start = std::chrono::steady_clock::now();
  const auto records = run_checks(cfg, opt);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "verify: " << records.size() << " checks in " << secs << " s\n";

  json checks = json::array();
  const CheckRecord* failed = nullptr;
  for (const auto& r : records) {
    checks.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    if (!r.ok && !failed) failed = &r;
  }
  json doc{{"config", config_json(cfg)}, {"checks", checks}, {"ok", failed == nullptr}};
  if (failed) doc["first_failure"] = failed->name;
  print(doc);
  if (failed) std::cerr << "FAILED: " << failed->name << ": " << failed->detail << "\n";
  return failed ? kCheckFailed : kOk;
}

int cmd_construct(const Config& cfg, const std::string& out) {
  const OneVertexComplex cx = build_sab(build_vh(cfg));
  const json doc = export_json(cx);
  if (out.empty()) {
    print(doc);
    return kOk;
  }
  std::ofstream file(out);
  if (!file) throw Error(ErrorCode::InvalidParameter, "cannot write " + out);
  file << doc.dump(2) << "\n";
  const CellCounts n = counts(cx);
  print({{"path", out}, {"vertices", n.vertices}, {"edges", n.edges}, {"squares", n.squares}});
  return kOk;
}

int cmd_presentation(const Config& cfg, const std::string& group, const std::string& format, bool no_dedup) {
  Presentation p;
  if (group == "gamma") {
    p = present_gamma(build_vh(cfg), !no_dedup);
  } else if (group == "lambda") {
    p = present_lambda(cfg);
  } else {
    p = present_lambda_prime(cfg);
  }
  const TextFormat fmt = format == "gap" ? TextFormat::gap : format == "plain" ? TextFormat::plain : TextFormat::json;
  std::cout << export_text(p, fmt);
  if (fmt == TextFormat::json) std::cout << "\n";
  return kOk;
}

int cmd_mass(int m, int n, const std::string& method) {
  json doc{{"m", m}, {"n", n}};
  std::optional<std::uint64_t> formula;
  std::optional<std::uint64_t> enumerated;
  if (method != "enumerate") {
    formula = mass_labeled_formula(m, n);
    doc["formula"] = *formula;
    doc["weighted"] = rational_string(mass_weighted(m, n));
  }
  if (method != "formula") {
    enumerated = mass_enumerate(m, n);
    doc["enumerate"] = *enumerated;
  }
  const bool agree = !(formula && enumerated) || *formula == *enumerated;
  doc["agree"] = agree;
  print(doc);
  return agree ? kOk : kCheckFailed;
}

json generator_name(const VHData& d, int g) {
  const int n = d.n();
  return g < n ? d.name_a(g) : d.name_b(g - n);
}

int cmd_classify(const FieldFlags& f, int tau1, int tau2) {
  const Config cfg = resolve_config(f, tau1);
  const Fq target = cfg.f().element(tau2);
  const Commensurability res = commensurable(cfg, target);
  json doc{{"q", cfg.q()}, {"tau1", tau1}, {"tau2", tau2}, {"related", res.related}};
  if (res.related) {
    const IsoCertificate& cert = *res.certificate;
    doc["frobenius_power"] = res.frobenius_power;
    doc["flip"] = res.flip;
    doc["swaps_classes"] = cert.swaps_classes;
    doc["relations_checked"] = cert.relations_checked;
    const VHData src = build_vh(cfg);
    const VHData dst = build_vh(with_tau(cfg, target));
    json map = json::array();
    for (std::size_t g = 0; g < cert.image.size(); ++g) {
      map.push_back({generator_name(src, static_cast<int>(g)), generator_name(dst, cert.image[g])});
    }
    doc["generator_map"] = map;
  }
  print(doc);
  return kOk;
}

int cmd_balls(const Config& cfg, int k_max, int l_max) {
  if (k_max < 0 || l_max < 0) throw Error(ErrorCode::InvalidParameter, "--k and --l must be nonnegative");
  const SphereTable t = sphere_table(build_vh(cfg), k_max + l_max);
  json rows = json::array();
  bool ok = t.lengths_match_depth;
  for (int k = 0; k <= k_max; ++k) {
    for (int l = 0; l <= l_max; ++l) {
      const auto it = t.counts.find({k, l});
      const std::uint64_t got = it == t.counts.end() ? 0 : it->second;
      const std::uint64_t want = expected_sphere(cfg.q(), k, l);
      ok = ok && got == want;
      rows.push_back({{"k", k}, {"l", l}, {"count", got}, {"expected", want}});
    }
  }
  print({{"config", config_json(cfg)}, {"spheres", rows}, {"geodesic", t.lengths_match_depth}, {"ok", ok}});
  return ok ? kOk : kCheckFailed;
}

int cmd_invariants(const Config& cfg) {
  const OneVertexComplex cx = build_sab(build_vh(cfg));
  const CellCounts n = counts(cx);
  const SurfaceInvariants inv = surface_invariants(cx, cfg.q());
  print({{"config", config_json(cfg)},
         {"vertices", n.vertices},
         {"edges", n.edges},
         {"squares", n.squares},
         {"chi", rational_string(inv.chi)},
         {"c1sq", inv.c1sq},
         {"c2", inv.c2},
         {"chern_ratio", rational_string(boost::rational<long long>(inv.c1sq, inv.c2))},
         {"noether", inv.noether_holds()},
         {"fake_quadric", inv.fake_quadric}});
  return inv.noether_holds() ? kOk : kCheckFailed;
}

int cmd_local_groups(const Config& cfg) {
  const VHData data = build_vh(cfg);
  const LocalGroups lg = local_groups(data);
  const LocalPrediction pr = predict_local_groups(cfg);
  const DeterminantReport dr = local_determinants(data);
  const std::uint64_t full = pgl_order(cfg.q());
  auto entry = [&](const PermGroup& g, LocalType predicted, LocalType by_det) {
    const LocalType by_order = g.order() == full ? LocalType::PGL : LocalType::PSL;
    const bool ok = (g.order() == full || g.order() == full / 2) && by_order == predicted && by_det == predicted;
    return std::make_pair(json{{"order", g.order()},
                               {"type", to_string(by_order)},
                               {"predicted", to_string(predicted)},
                               {"determinant_route", to_string(by_det)},
                               {"two_transitive", g.is_two_transitive()}},
                          ok);
  };
  const auto [a, ok_a] = entry(lg.p_a, pr.p_a, dr.p_a);
  const auto [b, ok_b] = entry(lg.p_b, pr.p_b, dr.p_b);
  print({{"config", config_json(cfg)}, {"P_A", a}, {"P_B", b}, {"pgl_order", full}, {"ok", ok_a && ok_b}});
  return ok_a && ok_b ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternionic lattices acting on products of trees"};
  app.require_subcommand(1);

  FieldFlags field;
  int tau = 0;
  bool deep = false;
  std::string out;
  std::string group = "gamma";
  std::string format = "plain";
  bool no_dedup = false;
  int m = 1;
  int n = 1;
  std::string method = "both";
  int tau1 = 0;
  int tau2 = 0;
  int k_max = 2;
  int l_max = 2;

  auto config_cmd = [&](CLI::App* cmd) {
    add_field_flags(cmd, field, true);
    cmd->add_option("--tau", tau, "tau in F_q^* minus 1 (integer encoding)")->required();
  };

  auto* verify = app.add_subcommand("verify", "run every check for one configuration");
  config_cmd(verify);
  verify->add_flag("--deep", deep, "raise sphere and mass bounds");

  auto* construct = app.add_subcommand("construct", "emit the one-vertex square complex as JSON");
  config_cmd(construct);
  construct->add_option("--out", out, "output path (default stdout)");

  auto* presentation = app.add_subcommand("presentation", "emit a finite presentation");
  config_cmd(presentation);
  presentation->add_option("--group", group)->check(CLI::IsMember({"gamma", "lambda", "lambda-prime"}));
  presentation->add_option("--format", format)->check(CLI::IsMember({"gap", "plain", "json"}));
  presentation->add_flag("--no-dedup", no_dedup, "keep all four readings of each square relator");

  auto* mass = app.add_subcommand("mass", "count one-vertex complexes with VH-structure");
  mass->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  mass->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  mass->add_option("--method", method)->check(CLI::IsMember({"formula", "enumerate", "both"}));

  auto* classify = app.add_subcommand("classify", "decide commensurability of two lattices");
  add_field_flags(classify, field, true);
  classify->add_option("--tau1", tau1)->required();
  classify->add_option("--tau2", tau2)->required();

  auto* balls = app.add_subcommand("balls", "sphere counts in the Cayley graph");
  config_cmd(balls);
  balls->add_option("--k", k_max);
  balls->add_option("--l", l_max);

  auto* invariants = app.add_subcommand("invariants", "Euler characteristic and Chern numbers");
  config_cmd(invariants);

  auto* local = app.add_subcommand("local-groups", "local permutation groups P_A, P_B");
  config_cmd(local);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*mass) return cmd_mass(m, n, method);
    if (*classify) return cmd_classify(field, tau1, tau2);
    const Config cfg = resolve_config(field, tau);
    if (*verify) return cmd_verify(cfg, deep);
    if (*construct) return cmd_construct(cfg, out);
    if (*presentation) return cmd_presentation(cfg, group, format, no_dedup);
    if (*balls) return cmd_balls(cfg, k_max, l_max);
    if (*invariants) return cmd_invariants(cfg);
    if (*local) return cmd_local_groups(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::InvalidParameter:
      case ErrorCode::NotPrime:
      case ErrorCode::EvenCharacteristic:
      case ErrorCode::DegreeTooLarge:
      case ErrorCode::WrongNorm:
      case ErrorCode::BoundExceeded:
        return kUsage;
      default:
        return kCheckFailed;
    }
  }
  return kUsage;
}
