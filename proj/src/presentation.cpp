#include "vhlf/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "vhlf/errors.hpp"
#include "vhlf/square_complex.hpp"

namespace vhlf {

using boost::multiprecision::cpp_int;

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Presentation present_gamma(const VHData& data, bool dedup) {
  Presentation p;
  p.name = "gamma";
  const int n = data.n();
  for (int i = 0; i < n; ++i) p.generators.push_back("a" + std::to_string(i));
  for (int j = 0; j < n; ++j) p.generators.push_back("b" + std::to_string(j));
  auto a = [](int i) { return i + 1; };
  auto b = [n](int j) { return n + j + 1; };

  for (int i = 0; i < n; ++i) {
    if (i < data.inv_a[i]) p.relators.push_back({a(i), a(data.inv_a[i])});
  }
  for (int j = 0; j < n; ++j) {
    if (j < data.inv_b[j]) p.relators.push_back({b(j), b(data.inv_b[j])});
  }

  std::vector<int> inv(2 * n);
  for (int i = 0; i < n; ++i) {
    inv[i] = data.inv_a[i];
    inv[n + i] = n + data.inv_b[i];
  }
  std::set<Square> seen;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto [l, m] = data.forward[i * n + j];
      if (dedup && !seen.insert(canonical_square({i, n + j, inv[m], inv[n + l]}, inv)).second) continue;
      p.relators.push_back({a(i), b(j), -a(m), -b(l)});
    }
  }
  return p;
}

// ---------------------------------------------------------------------------

DeltaClasses::DeltaClasses(const Config& cfg) : k_(cfg.ext.get()), q_(cfg.q()) {
  const QuadField& k = *k_;
  cls_.assign(k.order(), -1);
  Fq2 w = k.one();
  for (int e = 0; e < k.order() - 1; ++e) {
    cls_[k.encode(w)] = e % (q_ + 1);
    w = k.mul(w, cfg.delta);
  }
}

int DeltaClasses::of(Fq2 w) const {
  const int c = cls_[k_->encode(w)];
  if (c < 0) throw Error(ErrorCode::InternalNonunit, "no delta-power class for " + k_->pretty(w));
  return c;
}

StarSolution star_solve(const Config& cfg, int i, int l) {
  const QuadField& k = cfg.k();
  const int q = cfg.q();
  if (i < 0 || i > q || l < 0 || l > q) throw Error(ErrorCode::InvalidParameter, "star indices outside 0..q");
  const DeltaClasses cls(cfg);
  const Fq2 di = k.pow(cfg.delta, static_cast<std::uint64_t>(i));
  const Fq2 dl = k.pow(cfg.delta, static_cast<std::uint64_t>(l));
  const Fq2 dqi = k.pow(di, static_cast<std::uint64_t>(q));
  const Fq2 dql = k.pow(dl, static_cast<std::uint64_t>(q));
  const Fq2 lhs_j = k.mul(k.sub(dl, k.mul(k.mul(cfg.zeta, k.pe(di)), dql)), k.z());
  const Fq2 lhs_k = k.mul(k.sub(di, k.mul(k.div(k.pe(dl), cfg.zeta), dqi)), k.z());
  return {cls.of(lhs_j), cls.of(lhs_k)};
}

bool star_alternate_form_agrees(const Config& cfg, int i, int l, const StarSolution& s) {
  const QuadField& k = cfg.k();
  const int q = cfg.q();
  const DeltaClasses cls(cfg);
  const Fq2 half = k.pow(cfg.delta, static_cast<std::uint64_t>((q + 1) / 2));
  const Fq2 twist = k.mul(cfg.zeta, k.pow(cfg.delta, static_cast<long long>(i - l) * (1 - q)));
  const Fq2 rhs_j = k.mul(k.sub(k.one(), twist), half);
  const Fq2 rhs_k = k.mul(k.sub(k.one(), k.inv(twist)), half);
  const int mod = q + 1;
  return cls.of(rhs_j) == ((s.j - l) % mod + mod) % mod && cls.of(rhs_k) == ((s.k - i) % mod + mod) % mod;
}

Quadruple star_quadruple(const Config& cfg, int i, int j, int k_, int l) {
  const QuadField& k = cfg.k();
  auto pe_pow = [&](int e) { return k.pe(k.pow(cfg.delta, static_cast<std::uint64_t>(e))); };
  const Fq2 z = k.z();
  return {k.mul(z, pe_pow(i)), k.neg(k.div(k.mul(z, pe_pow(j)), cfg.zeta)), k.div(k.mul(z, pe_pow(l)), cfg.zeta),
          k.neg(k.mul(z, pe_pow(k_)))};
}

namespace {

// Appends g^e with e reduced into [0, order) when order > 0.
void append_power(Word& w, int g, long long e, int order) {
  if (order > 0) e = ((e % order) + order) % order;
  const int letter = e >= 0 ? g : -g;
  for (long long t = 0; t < (e >= 0 ? e : -e); ++t) w.push_back(letter);
}

Presentation lambda_common(const Config& cfg, bool with_s) {
  const int q = cfg.q();
  const int order = q + 1;
  Presentation p;
  p.name = with_s ? "lambda" : "lambda-prime";
  p.generators = with_s ? std::vector<std::string>{"d", "s", "a", "b"} : std::vector<std::string>{"d", "a", "b"};
  const int d = 1;
  const int s = with_s ? 2 : 0;
  const int a = with_s ? 3 : 2;
  const int b = with_s ? 4 : 3;

  Word dpow;
  append_power(dpow, d, order, 0);
  p.relators.push_back(dpow);
  if (with_s) p.relators.push_back({s, s});
  if (with_s) p.relators.push_back({d, s, d, s});
  p.relators.push_back({a, a});
  p.relators.push_back({b, b});
  if (with_s) {
    p.relators.push_back({s, a, s, a});
    const int e = DeltaClasses(cfg).of(cfg.zeta);
    Word w;
    for (int rep = 0; rep < 2; ++rep) {
      w.push_back(s);
      append_power(w, d, e, order);
      w.push_back(b);
    }
    p.relators.push_back(w);
  }

  // (d^i a d^-i)(d^j b d^-j)(d^k a d^-k)^-1 (d^l b d^-l)^-1
  for (int i = 0; i <= q; ++i) {
    for (int l = 0; l <= q; ++l) {
      const StarSolution st = star_solve(cfg, i, l);
      Word w;
      append_power(w, d, i, order);
      w.push_back(a);
      append_power(w, d, st.j - i, order);
      w.push_back(b);
      append_power(w, d, st.k - st.j, order);
      w.push_back(-a);
      append_power(w, d, l - st.k, order);
      w.push_back(-b);
      append_power(w, d, -l, order);
      p.relators.push_back(free_reduce(w));
    }
  }
  return p;
}

}  // namespace

Presentation present_lambda_prime(const Config& cfg) { return lambda_common(cfg, false); }
Presentation present_lambda(const Config& cfg) { return lambda_common(cfg, true); }

std::vector<QuatElem> gamma_images(const VHData& data) {
  std::vector<QuatElem> out;
  for (const auto& xi : data.A) out.push_back(make_alpha(data.cfg, xi));
  for (const auto& eta : data.B) out.push_back(make_beta(data.cfg, eta));
  return out;
}

std::vector<QuatElem> lambda_images(const Config& cfg, bool with_s) {
  const QuadField& k = cfg.k();
  std::vector<QuatElem> out{q_embed(cfg, cfg.delta)};
  if (with_s) out.push_back(q_F(cfg));
  out.push_back(make_gamma(cfg, k.z()));
  out.push_back(make_gamma(cfg, k.div(k.z(), cfg.zeta)));
  return out;
}

std::optional<std::size_t> first_uncertified(const Config& cfg, const std::vector<QuatElem>& images,
                                             const Presentation& p) {
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    QuatElem acc = q_one(cfg);
    for (int x : p.relators[r]) {
      const QuatElem& g = images[std::abs(x) - 1];
      acc = qmul(cfg, acc, x > 0 ? g : qconj(g));
    }
    if (!is_central(acc)) return r;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::vector<long long> abelianization(const Presentation& p) {
  const std::size_t rows = p.relators.size();
  const std::size_t cols = p.generators.size();
  std::vector<std::vector<cpp_int>> m(rows, std::vector<cpp_int>(cols, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (int x : p.relators[r]) m[r][std::abs(x) - 1] += x > 0 ? 1 : -1;
  }

  std::vector<cpp_int> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: the entry of least nonzero magnitude in the remaining block.
    std::size_t pr = rows;
    std::size_t pc = cols;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        if (m[r][c] != 0 && (pr == rows || abs(m[r][c]) < abs(m[pr][pc]))) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m[r][t] == 0) continue;
        const cpp_int f = m[r][t] / m[t][t];
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= f * m[t][c];
        if (m[r][t] != 0) {
          std::swap(m[t], m[r]);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m[t][c] == 0) continue;
        const cpp_int f = m[t][c] / m[t][t];
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= f * m[r][t];
        if (m[t][c] != 0) {
          for (auto& row : m) std::swap(row[t], row[c]);
          clean = false;
        }
      }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  while (diag.size() < cols) diag.emplace_back(0);

  // Enforce the divisibility chain: (x, y) -> (gcd, lcm), zeros last.
  std::stable_partition(diag.begin(), diag.end(), [](const cpp_int& x) { return x != 0; });
  std::size_t nonzero = 0;
  while (nonzero < diag.size() && diag[nonzero] != 0) ++nonzero;
  for (std::size_t i = 0; i < nonzero; ++i) {
    for (std::size_t j = i + 1; j < nonzero; ++j) {
      const cpp_int g = gcd(diag[i], diag[j]);
      const cpp_int l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  }
  std::vector<long long> out;
  for (const auto& x : diag) out.push_back(static_cast<long long>(x));
  return out;
}

bool admits_quotient(const std::vector<long long>& divisors, long long m, int count) {
  int hits = 0;
  for (long long x : divisors) {
    if (x % m == 0) ++hits;
  }
  return hits >= count;
}

UniformQuotientReport uniform_quotients_check(const VHData& data) {
  const Config& cfg = data.cfg;
  const QuadField& k = cfg.k();
  const Field& F = cfg.f();
  const int n = data.n();
  const Presentation p = present_gamma(data, false);
  UniformQuotientReport rep;

  auto image = [&](int g) { return g < n ? data.A[g] : data.B[g - n]; };
  rep.additive_kills_relators = true;
  rep.parity_kills_relators = true;
  for (const auto& w : p.relators) {
    Fq2 sum = k.zero();
    int pa = 0;
    int pb = 0;
    for (int x : w) {
      const int g = std::abs(x) - 1;
      sum = x > 0 ? k.add(sum, image(g)) : k.sub(sum, image(g));
      (g < n ? pa : pb) += 1;
    }
    if (sum != k.zero()) rep.additive_kills_relators = false;
    if (pa % 2 != 0 || pb % 2 != 0) rep.parity_kills_relators = false;
  }

  // F_p-rank of the span of A u B inside F_q[Z] = F_p^{2r}.
  const int p_char = F.p();
  const int dim = 2 * F.r();
  std::vector<std::vector<int>> rows;
  auto vec = [&](Fq2 w) {
    std::vector<int> v = F.coeffs(w.w0);
    const auto v1 = F.coeffs(w.w1);
    v.insert(v.end(), v1.begin(), v1.end());
    return v;
  };
  for (const auto& w : data.A) rows.push_back(vec(w));
  for (const auto& w : data.B) rows.push_back(vec(w));
  int rank = 0;
  for (int col = 0; col < dim && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    int inv = 1;
    while (rows[rank][col] * inv % p_char != 1) ++inv;
    for (auto& x : rows[rank]) x = x * inv % p_char;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const int f = rows[r][col];
      for (int c = 0; c < dim; ++c) rows[r][c] = ((rows[r][c] - f * rows[rank][c]) % p_char + p_char) % p_char;
    }
    ++rank;
  }
  rep.additive_rank = rank;
  rep.additive_order = 1;
  for (int i = 0; i < rank; ++i) rep.additive_order *= p_char;
  rep.spans_extension = rank == dim;
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::string word_text(const Presentation& p, const Word& w, const char* sep, bool gap) {
  if (w.empty()) return gap ? "One(F)" : "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t run = i;
    while (run < w.size() && w[run] == w[i]) ++run;
    const long long e = static_cast<long long>(run - i) * (w[i] > 0 ? 1 : -1);
    if (!first) os << sep;
    first = false;
    os << p.generators[std::abs(w[i]) - 1];
    if (e != 1) os << "^" << e;
    i = run;
  }
  return os.str();
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::SchemaViolation, what); }

}  // namespace

nlohmann::json to_json(const Presentation& p) {
  return {{"name", p.name}, {"generators", p.generators}, {"relators", p.relators}};
}

Presentation from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("generators") || !doc.contains("relators")) {
    bad("presentation needs generators and relators");
  }
  Presentation p;
  try {
    p.name = doc.value("name", std::string());
    p.generators = doc["generators"].get<std::vector<std::string>>();
    p.relators = doc["relators"].get<std::vector<Word>>();
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
  const int ngen = static_cast<int>(p.generators.size());
  for (const auto& w : p.relators) {
    for (int x : w) {
      if (x == 0 || std::abs(x) > ngen) bad("relator letter " + std::to_string(x) + " out of range");
    }
  }
  return p;
}

std::string export_text(const Presentation& p, TextFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case TextFormat::gap: {
      os << "F := FreeGroup(";
      for (std::size_t g = 0; g < p.generators.size(); ++g) {
        os << (g ? ", " : "") << '"' << p.generators[g] << '"';
      }
      os << ");\n";
      for (std::size_t g = 0; g < p.generators.size(); ++g) {
        os << p.generators[g] << " := F." << g + 1 << ";\n";
      }
      os << "G := F / [\n";
      for (std::size_t r = 0; r < p.relators.size(); ++r) {
        os << "  " << word_text(p, p.relators[r], "*", true) << (r + 1 < p.relators.size() ? ",\n" : "\n");
      }
      os << "];\n";
      break;
    }
    case TextFormat::plain: {
      os << "name: " << p.name << "\n";
      os << "generators:";
      for (const auto& g : p.generators) os << " " << g;
      os << "\nrelators:\n";
      std::vector<Word> sorted = p.relators;
      std::sort(sorted.begin(), sorted.end());
      for (const auto& w : sorted) os << word_text(p, w, "*", false) << "\n";
      break;
    }
    case TextFormat::json:
      os << to_json(p).dump(2) << "\n";
      break;
  }
  return os.str();
}

Presentation import_text(const std::string& doc, TextFormat fmt) {
  if (fmt == TextFormat::json) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(doc);
    } catch (const nlohmann::json::exception& e) {
      bad(e.what());
    }
    return from_json(j);
  }
  if (fmt != TextFormat::plain) bad("only plain and json presentations can be imported");

  Presentation p;
  std::istringstream in(doc);
  std::string line;
  auto strip = [](const std::string& s, const std::string& prefix) { return s.substr(prefix.size()); };
  if (!std::getline(in, line) || line.rfind("name:", 0) != 0) bad("expected 'name:' line");
  p.name = strip(line, "name:");
  if (!p.name.empty() && p.name[0] == ' ') p.name.erase(0, 1);
  if (!std::getline(in, line) || line.rfind("generators:", 0) != 0) bad("expected 'generators:' line");
  {
    std::istringstream gs(strip(line, "generators:"));
    std::string g;
    while (gs >> g) p.generators.push_back(g);
  }
  std::map<std::string, int> index;
  for (std::size_t g = 0; g < p.generators.size(); ++g) index[p.generators[g]] = static_cast<int>(g) + 1;
  if (!std::getline(in, line) || line != "relators:") bad("expected 'relators:' line");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Word w;
    if (line != "1") {
      std::istringstream ts(line);
      std::string tok;
      while (std::getline(ts, tok, '*')) {
        long long e = 1;
        const auto caret = tok.find('^');
        std::string name = tok.substr(0, caret);
        if (caret != std::string::npos) {
          try {
            e = std::stoll(tok.substr(caret + 1));
          } catch (const std::exception&) {
            bad("bad exponent in " + tok);
          }
        }
        auto it = index.find(name);
        if (it == index.end()) bad("unknown generator " + name);
        for (long long t = 0; t < (e >= 0 ? e : -e); ++t) w.push_back(e >= 0 ? it->second : -it->second);
      }
    }
    p.relators.push_back(w);
  }
  return p;
}

}  // namespace vhlf
