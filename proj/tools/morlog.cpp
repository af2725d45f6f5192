#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "morlog/burnside.hpp"
#include "morlog/errors.hpp"
#include "morlog/formal_group.hpp"
#include "morlog/hecke.hpp"
#include "morlog/instances.hpp"
#include "morlog/log_ops.hpp"
#include "morlog/verify/acceptance.hpp"

using json = nlohmann::ordered_json;
using namespace morlog;

namespace {

struct Config {
  long prime = 2;
  int rank = 1;
  long precision = 20;
  int degree = 8;
  uint32_t index_bound = SubgroupTable::kDefaultMaxOrder;
  std::string format = "json";
  uint64_t seed = 1;
  std::string value;
  std::string ring;
  std::string law = "honda";
  std::string exponents;
  std::string points = "cyclotomic";
  long lambda = 0;
  int level = 1;
  int terms = 4;
};

struct Report {
  std::string command;
  json params = json::object();
  json results = json::object();
  json checks = json::array();

  void check(const std::string& anchor, bool pass, const std::string& detail) {
    checks.push_back(json{{"anchor", anchor}, {"pass", pass}, {"detail", detail}});
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c["pass"].get<bool>()) return false;
    return true;
  }
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<long> parse_list(const std::string& text, const char* what) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("--") + what + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw UsageError(std::string("--") + what + " is empty");
  return out;
}

BigInt parse_bigint(const std::string& text) {
  BigInt v;
  if (text.empty() || v.set_str(text, 10) != 0) throw UsageError("--value: '" + text + "' is not an integer");
  return v;
}

std::string value_or(const Config& c, const std::string& fallback) { return c.value.empty() ? fallback : c.value; }

template <class T>
json strings(const std::vector<T>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

template <Ring R>
json elems(const R& r, const std::vector<typename R::Elem>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(r.format(x));
  return out;
}

FinAbPGroup group_from(const Config& c) {
  std::vector<int> exps;
  if (c.exponents.empty()) {
    exps.assign(static_cast<size_t>(c.rank), 1);
  } else {
    for (long e : parse_list(c.exponents, "exponents")) exps.push_back(static_cast<int>(e));
  }
  return FinAbPGroup(c.prime, exps);
}

FglKind law_kind(const std::string& law) {
  if (law == "additive") return FglKind::Additive;
  if (law == "multiplicative") return FglKind::Multiplicative;
  if (law == "honda") return FglKind::Honda;
  throw UsageError("--law must be additive, multiplicative or honda");
}

void cmd_pseries(const Config& c, Report& rep) {
  rep.params = {{"prime", c.prime}, {"law", c.law}, {"rank", c.rank}, {"degree", c.degree}};
  auto f = make_fgl(law_kind(c.law), c.prime, c.rank, Integers{}, static_cast<size_t>(c.degree));
  auto ps = p_series(f);
  rep.results["law"] = f.tag();
  rep.results["p_series"] = elems(Integers{}, ps.coeffs);
  auto ax = check_fgl_axioms(f);
  rep.check("fgl-axioms", ax.ok(),
            std::string("unit ") + (ax.unit ? "ok" : "fails") + ", commutativity " + (ax.commutative ? "ok" : "fails") +
                ", associativity " + (ax.associative ? "ok" : "fails") + " through degree " + std::to_string(c.degree));
  std::optional<size_t> lowest;
  for (size_t k = 0; k < ps.order() && !lowest; ++k)
    if (mpz_divisible_ui_p(ps[k].get_mpz_t(), static_cast<unsigned long>(c.prime)) == 0) lowest = k;
  rep.results["lowest_term_mod_p"] = lowest ? json(*lowest) : json(nullptr);
  std::optional<size_t> expected;
  if (f.kind() == FglKind::Multiplicative) expected = static_cast<size_t>(c.prime);
  if (f.kind() == FglKind::Honda)
    expected = static_cast<size_t>(pow_int(BigInt(c.prime), static_cast<unsigned long>(c.rank)).get_ui());
  if (expected && *expected > static_cast<size_t>(c.degree)) expected.reset();
  if (f.kind() == FglKind::Additive || expected) {
    std::string want = expected ? "T^" + std::to_string(*expected) : "none";
    std::string got = lowest ? "T^" + std::to_string(*lowest) : "none";
    rep.check("p-series-height", lowest == expected, "lowest term mod p is " + got + ", expected " + want);
  }
}

void cmd_level_check(const Config& c, Report& rep) {
  const long p = c.prime;
  rep.params = {{"prime", p}, {"points", c.points}, {"degree", c.degree}};
  FinAbPGroup a(p, {1});
  if (c.points == "cyclotomic") {
    using CycRing = PolyQuotient<Integers>;
    auto ring = CycRing::cyclotomic_shifted(Integers{}, p);
    auto law = make_fgl(FglKind::Multiplicative, p, 1, ring, static_cast<size_t>(std::max<long>(c.degree, p + 1)));
    std::vector<CycRing::Elem> pts;
    auto zeta = ring.add(ring.one(), ring.variable());
    auto power = ring.one();
    for (long k = 0; k < p; ++k, power = ring.mul(power, zeta)) pts.push_back(ring.sub(power, ring.one()));
    auto d = check_level_structure(LevelStructureCandidate<CycRing>{law, a, pts});
    rep.results["ring"] = ring.name();
    rep.results["points"] = elems(ring, pts);
    rep.results["divides"] = d.divides;
    if (d.quotient) rep.results["quotient"] = elems(ring, d.quotient->coeffs);
    rep.check("level-structure-divides-p-series", d.divides,
              d.divides ? "prod (T +_F (zeta^a - 1)) divides [p](T)"
                        : "obstruction in degree " + std::to_string(d.obstruction_degree.value_or(0)));
  } else if (c.points == "zero") {
    PadicRing zp2(p, 2);
    auto law = make_fgl(FglKind::Multiplicative, p, 1, zp2, static_cast<size_t>(std::max<long>(c.degree, p + 1)));
    std::vector<PadicInt> pts(static_cast<size_t>(p), zp2.zero());
    auto d = check_level_structure(LevelStructureCandidate<PadicRing>{law, a, pts});
    rep.results["ring"] = zp2.name();
    rep.results["divides"] = d.divides;
    rep.results["obstruction_degree"] = d.obstruction_degree ? json(*d.obstruction_degree) : json(nullptr);
    rep.check("level-structure-divides-p-series", d.divides,
              d.divides ? "T^p divides [p](T)"
                        : "T^p does not divide [p](T): obstruction in degree " +
                              std::to_string(d.obstruction_degree.value_or(0)));
  } else if (c.points == "trivial") {
    rep.params["law"] = c.law;
    rep.params["rank"] = c.rank;
    PadicRing fp(p, 1);
    auto f = make_fgl(law_kind(c.law), p, c.rank, fp, static_cast<size_t>(c.degree));
    bool ok = admits_trivial_level_structure(f, c.rank);
    rep.results["law"] = f.tag();
    rep.results["admits_trivial"] = ok;
    rep.check("trivial-level-structure", ok,
              "T^(p^" + std::to_string(c.rank) + ") " + (ok ? "divides" : "does not divide") + " [p](T) mod p");
  } else {
    throw UsageError("--points must be cyclotomic, zero or trivial");
  }
}

void cmd_subgroups(const Config& c, Report& rep) {
  auto g = group_from(c);
  rep.params = {{"prime", c.prime}, {"group", g.str()}, {"index_bound", c.index_bound}};
  auto table = enumerate_subgroups(g, c.index_bound);
  json list = json::array();
  for (size_t s = 0; s < table->size(); ++s)
    list.push_back({{"order", (*table)[s].order}, {"subgroup", table->describe(s)},
                    {"lattice", matrix_to_string((*table)[s].lattice)}});
  rep.results["count"] = table->size();
  rep.results["subgroups"] = list;
  bool elementary = true;
  for (int e : g.exponents()) elementary = elementary && e == 1;
  if (elementary) {
    const int n = static_cast<int>(g.rank());
    std::vector<long> count(static_cast<size_t>(n + 1), 0);
    for (size_t s = 0; s < table->size(); ++s) ++count[static_cast<size_t>(table->log_order(s))];
    bool ok = true;
    for (int j = 0; j <= n; ++j) ok = ok && BigRat(count[j]) == gaussian_binomial(n, j, c.prime);
    rep.check("gaussian-binomial-subgroup-count", ok, "subgroups of order p^j counted against [n;j]_p");
  }
}

void cmd_gauss(const Config& c, Report& rep) {
  rep.params = {{"prime", c.prime}, {"rank", c.rank}};
  std::vector<BigRat> row;
  for (int j = 0; j <= c.rank; ++j) row.push_back(gaussian_binomial(c.rank, j, c.prime));
  BigRat sum = gaussian_alternating_sum(c.rank, c.prime);
  rep.results["binomials"] = strings(row);
  rep.results["alternating_sum"] = sum.str();
  BigRat want(c.rank == 0 ? 1 : 0);
  rep.check("gaussian-alternating-sum", sum == want, "sum_j (-1)^j p^(j(j-1)/2) [n;j]_p = " + sum.str());
}

void cmd_moebius(const Config& c, Report& rep) {
  auto g = group_from(c);
  rep.params = {{"prime", c.prime}, {"group", g.str()}};
  auto table = enumerate_subgroups(g, c.index_bound);
  BigRat mu = moebius(*table, table->trivial(), table->whole());
  bool elementary = table->is_elementary_quotient(table->whole(), table->trivial());
  int j = table->log_order(table->whole());
  BigRat want(0);
  if (elementary) {
    want = BigRat(pow_int(BigInt(c.prime), static_cast<unsigned long>(j * (j - 1) / 2)));
    if (j % 2 == 1) want = -want;
  }
  rep.results["mu"] = mu.str();
  rep.results["elementary"] = elementary;
  rep.check("moebius-elementary-abelian", mu == want, "mu(0, G) = " + mu.str() + ", expected " + want.str());
}

void cmd_burnside_e(const Config& c, Report& rep) {
  rep.params = {{"prime", c.prime}, {"rank", c.rank}, {"level", c.level}};
  auto e = rezk_element(c.rank, c.prime, c.level);
  const auto& table = e.table_ptr();
  json coeffs = json::object();
  for (size_t s = 0; s < table->size(); ++s)
    if (!e.coeff(s).is_zero()) coeffs[table->describe(s)] = e.coeff(s).str();
  rep.results["group"] = table->group().str();
  rep.results["e"] = coeffs;
  const size_t whole = table->whole();
  BigRat de = fixed_points(e, whole);
  rep.results["d(e)"] = de.str();
  rep.check("burnside-element-e", de == BigRat(c.prime), "d(e) = " + de.str());
  rep.check("burnside-element-e", burnside_mul(e, e) == BigRat(c.prime) * e, "e^2 = p e");
  size_t bad = 0;
  for (size_t s = 0; s < table->size(); ++s) {
    auto y = BurnsideElem::basis(table, s);
    if (!(burnside_mul(y, e) == fixed_points(y, whole) * e)) ++bad;
  }
  rep.check("burnside-element-e", bad == 0,
            "y e = d(y) e for " + std::to_string(table->size() - bad) + " of " + std::to_string(table->size()) +
                " basis elements");
}

void cmd_hecke_verify(const Config& c, Report& rep) {
  rep.params = {{"prime", c.prime}, {"rank", c.rank}, {"degree", c.degree}};
  auto r = verify_euler_inverse(static_cast<size_t>(c.rank), c.prime, c.degree);
  json residuals = json::array();
  for (const auto& v : r.residuals) residuals.push_back(v.is_zero() ? "0" : v.str());
  rep.results["residuals"] = residuals;
  rep.check("hecke-euler-factor-inverse", r.ok(),
            r.ok() ? "X^1..X^" + std::to_string(c.degree) + " coefficients vanish on [Z^n]"
                   : "nonzero coefficient at X^" + std::to_string(*r.first_nonzero_degree));
}

template <Ring R>
void validate_psi(const PsiRing<R>& s, const std::vector<typename R::Elem>& samples) {
  if (auto why = check_psi_ring(s, samples)) throw DomainError("not a Frobenius lift: " + *why);
}

template <Ring Base>
typename PolyQuotient<Base>::Elem poly_value(const PolyQuotient<Base>& r, const Config& c, const std::string& fallback) {
  auto coeffs = parse_list(value_or(c, fallback), "value");
  if (coeffs.size() > r.degree()) throw UsageError("--value has more coefficients than the truncation degree");
  return instances::from_coeffs(r, coeffs);
}

template <Ring R>
void report_log(const PsiRing<R>& s, const typename R::Elem& x, long precision, Report& rep) {
  const auto& r = s.ring;
  validate_psi(s, {x, r.add(x, r.one())});
  auto lx = k1_log(s, x, precision);
  auto lxx = k1_log(s, r.mul(x, x), precision);
  rep.results["ring"] = s.description;
  rep.results["x"] = r.format(x);
  rep.results["log"] = r.format(lx);
  rep.check("k1-log-additive", r.equal(lxx, r.add(lx, lx)), "l(x^2) = 2 l(x)");
}

void cmd_k1_log(const Config& c, Report& rep) {
  const long p = c.prime;
  const std::string ring = c.ring.empty() ? "padic" : c.ring;
  rep.params = {{"prime", p}, {"ring", ring}, {"precision", c.precision}};
  if (ring == "padic") {
    auto s = instances::padic_identity(p, c.precision + 2);
    rep.params["value"] = value_or(c, "1");
    report_log(s, s.ring.from_int(parse_bigint(value_or(c, "1"))), c.precision, rep);
  } else if (ring == "eps") {
    rep.params["degree"] = c.degree;
    rep.params["lambda"] = c.lambda;
    rep.params["value"] = value_or(c, "1,1");
    auto s = instances::scaled_truncated(PadicRing(p, c.precision + 2), p, c.degree, c.lambda);
    report_log(s, poly_value(s.ring, c, "1,1"), c.precision, rep);
  } else if (ring == "frobenius") {
    rep.params["degree"] = c.degree;
    rep.params["value"] = value_or(c, "1,1");
    auto s = instances::frobenius_truncated(PadicRing(p, c.precision + 2), p, c.degree);
    report_log(s, poly_value(s.ring, c, "1,1"), c.precision, rep);
  } else {
    throw UsageError("--ring must be padic, eps or frobenius");
  }
}

template <Ring Base>
void report_exp(const PsiRing<PolyQuotient<Base>>& s, const Config& c, Report& rep) {
  const auto& r = s.ring;
  auto alpha = poly_value(r, c, "0,2");
  validate_psi(s, {alpha, r.add(alpha, r.one())});
  auto e = k1_exp(s, alpha, instances::t_adic_witness(r));
  auto back = k1_log(s, e, c.precision);
  bool ok = true;
  for (size_t k = 0; k < r.degree(); ++k)
    ok = ok && back[k].precision() >= c.precision && back[k].agrees_with(alpha[k], c.precision);
  rep.results["ring"] = s.description;
  rep.results["alpha"] = r.format(alpha);
  rep.results["exp"] = r.format(e);
  rep.results["log_of_exp"] = r.format(back);
  rep.check("k1-exp-log-inverse", ok, "l(e(alpha)) = alpha mod p^" + std::to_string(c.precision));
}

void cmd_k1_exp(const Config& c, Report& rep) {
  const long p = c.prime;
  const std::string ring = c.ring.empty() ? "frobenius" : c.ring;
  rep.params = {{"prime", p}, {"ring", ring}, {"precision", c.precision}, {"degree", c.degree},
                {"value", value_or(c, "0,2")}};
  PadicRing base(p, c.precision + 8);
  if (ring == "frobenius") {
    report_exp(instances::frobenius_truncated(base, p, c.degree), c, rep);
  } else if (ring == "eps") {
    rep.params["lambda"] = c.lambda;
    report_exp(instances::scaled_truncated(base, p, c.degree, c.lambda), c, rep);
  } else {
    throw UsageError("--ring must be frobenius or eps for k1-exp");
  }
}

void cmd_artin_hasse(const Config& c, Report& rep) {
  rep.params = {{"prime", c.prime}, {"degree", c.degree}};
  auto f = artin_hasse(c.prime, static_cast<size_t>(c.degree));
  rep.results["coefficients"] = strings(f.coeffs);
  size_t bad = 0;
  for (const auto& a : f.coeffs)
    if (padic_val(a, c.prime) < Valuation::finite(0)) ++bad;
  rep.check("artin-hasse-integral", bad == 0,
            std::to_string(f.order() - bad) + " of " + std::to_string(f.order()) + " coefficients p-integral");
}

void cmd_witt(const Config& c, Report& rep) {
  const long p = c.prime;
  rep.params = {{"prime", p}, {"degree", c.degree}, {"terms", c.terms}, {"value", value_or(c, "0,1,1")}};
  auto s = instances::frobenius_truncated(Integers{}, p, c.degree);
  const auto& r = s.ring;
  auto x = poly_value(r, c, "0,1,1");
  auto th = theta_tower(s, x, static_cast<size_t>(c.terms));
  std::vector<instances::IntPolyRing::Elem> ghosts;
  auto g = x;
  for (int k = 0; k < c.terms; ++k, g = s.psi(g)) ghosts.push_back(g);
  auto back = ghost_from_witt(r, WittVector<instances::IntPolyRing::Elem>{p, th});
  bool same = true;
  for (size_t k = 0; k < back.size(); ++k) same = same && r.equal(back[k], ghosts[k]);
  rep.results["ring"] = s.description;
  rep.results["theta"] = elems(r, th);
  rep.results["ghosts"] = elems(r, ghosts);
  rep.check("witt-theta-tower", same, "ghost components of (theta_i) reproduce psi^k(x)");
  if (th.size() > 1) rep.check("witt-theta-tower", r.equal(th[1], theta(s, x)), "theta_1 = theta");
}

void cmd_hecke_form(const Config& c, Report& rep) {
  const long p = c.prime;
  rep.params = {{"prime", p}, {"rank", c.rank}, {"degree", c.degree}, {"seed", c.seed}};
  using QE = PolyQuotient<Rationals>;
  auto ring = QE::truncated(Rationals{}, c.degree, "e");
  auto table = enumerate_subgroups(FinAbPGroup::homocyclic(p, 1, c.rank), c.index_bound);
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  auto rat = [&] { return BigRat(BigInt(num(rng)), BigInt(den(rng))); };
  std::vector<BigRat> scalars;
  for (size_t a = 0; a < table->size(); ++a) scalars.push_back(rat());
  QE::Elem x;
  if (c.value.empty()) {
    x = ring.one();
    for (size_t k = 1; k < ring.degree(); ++k) x[k] = rat();
  } else {
    rep.params["value"] = c.value;
    x = instances::from_coeffs(ring, parse_list(c.value, "value"));
  }
  auto s = scaled_power_ops(ring, p, c.rank, scalars);
  json psi = json::object();
  for (size_t a = 0; a < table->size(); ++a) psi[table->describe(a)] = (a == table->trivial() ? BigRat(1) : scalars[a]).str();
  auto r = hecke_form_check(s, x);
  rep.results["psi_scalars"] = psi;
  rep.results["x"] = ring.format(x);
  rep.results["morava_log"] = ring.format(r.log_side);
  rep.results["hecke_side"] = ring.format(r.hecke_side);
  rep.check("morava-log-hecke-form", r.equal, "(1/p) log(1 + pM(x)) against F_1 applied to log x");
}

void cmd_selftest(const Config& c, Report& rep) {
  rep.params = {{"seed", c.seed}};
  json list = json::array();
  for (const auto& r : verify::run_acceptance(c.seed)) {
    std::fprintf(stderr, "criterion %d: %.2f s\n", r.id, r.seconds);
    list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}});
    rep.check(r.anchor, r.pass, "criterion " + std::to_string(r.id) + ": " + r.detail);
  }
  rep.results["criteria"] = list;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit(const Report& rep, const std::string& format) {
  if (format == "json") {
    json out = {{"command", rep.command}, {"params", rep.params}, {"results", rep.results}, {"checks", rep.checks}};
    std::cout << out.dump(2) << "\n";
  } else if (format == "text") {
    std::cout << rep.command << "\n";
    for (const auto& [k, v] : rep.params.items()) std::cout << "  " << k << " = " << scalar_text(v) << "\n";
    for (const auto& [k, v] : rep.results.items()) std::cout << k << ": " << scalar_text(v) << "\n";
    for (const auto& ch : rep.checks)
      std::cout << (ch["pass"].get<bool>() ? "PASS " : "FAIL ") << ch["anchor"].get<std::string>() << ": "
                << ch["detail"].get<std::string>() << "\n";
  } else {
    std::cout << "section,key,value\n";
    for (const auto& [k, v] : rep.params.items()) std::cout << "param," << csv_field(k) << "," << csv_field(scalar_text(v)) << "\n";
    for (const auto& [k, v] : rep.results.items()) std::cout << "result," << csv_field(k) << "," << csv_field(scalar_text(v)) << "\n";
    for (const auto& ch : rep.checks)
      std::cout << "check," << csv_field(ch["anchor"].get<std::string>()) << ","
                << csv_field(std::string(ch["pass"].get<bool>() ? "pass" : "fail") + ": " + ch["detail"].get<std::string>())
                << "\n";
  }
}

using Handler = void (*)(const Config&, Report&);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations around logarithmic cohomology operations"};
  app.require_subcommand(1);
  Config cfg;
  const std::vector<std::pair<std::string, std::pair<std::string, Handler>>> commands = {
      {"pseries", {"[p]-series of a formal group law", cmd_pseries}},
      {"level-check", {"divisibility test for level structures", cmd_level_check}},
      {"subgroups", {"subgroups of a finite abelian p-group", cmd_subgroups}},
      {"gauss", {"Gaussian binomials and their alternating sum", cmd_gauss}},
      {"moebius", {"Moebius function of the subgroup lattice", cmd_moebius}},
      {"burnside-e", {"the element e of the Burnside ring and its properties", cmd_burnside_e}},
      {"hecke-verify", {"Euler factor inverse on lattices", cmd_hecke_verify}},
      {"k1-log", {"K(1)-local logarithm on a built-in psi-ring", cmd_k1_log}},
      {"k1-exp", {"exponential inverse of the logarithm", cmd_k1_exp}},
      {"artin-hasse", {"Artin-Hasse exponential coefficients", cmd_artin_hasse}},
      {"witt", {"theta tower and ghost components", cmd_witt}},
      {"hecke-form", {"Morava logarithm against its Hecke form", cmd_hecke_form}},
      {"selftest", {"run the acceptance suite", cmd_selftest}},
  };
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& [name, info] : commands) {
    auto* sub = app.add_subcommand(name, info.first);
    sub->add_option("--prime", cfg.prime, "prime p");
    sub->add_option("--rank", cfg.rank, "rank or height n")->check(CLI::NonNegativeNumber);
    sub->add_option("--precision", cfg.precision, "p-adic digits N")->check(CLI::PositiveNumber);
    sub->add_option("--degree", cfg.degree, "truncation degree D")->check(CLI::PositiveNumber);
    sub->add_option("--index-bound", cfg.index_bound, "largest group order to enumerate")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--value", cfg.value, "input: an integer, or comma-separated coefficients");
    sub->add_option("--ring", cfg.ring, "built-in ring family: padic, eps or frobenius");
    sub->add_option("--law", cfg.law, "formal group law: additive, multiplicative or honda");
    sub->add_option("--exponents", cfg.exponents, "group Z/p^r1 x ... as r1,r2,...");
    sub->add_option("--points", cfg.points, "level-check candidate: cyclotomic, zero or trivial");
    sub->add_option("--lambda", cfg.lambda, "psi(e) = lambda e for the eps ring");
    sub->add_option("--level", cfg.level, "stage r of (Z/p^r)^n")->check(CLI::PositiveNumber);
    sub->add_option("--terms", cfg.terms, "length of the theta tower")->check(CLI::PositiveNumber);
    subs.emplace_back(sub, info.second);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Report rep;
  try {
    for (const auto& [sub, handler] : subs) {
      if (!sub->parsed()) continue;
      rep.command = sub->get_name();
      require_prime(cfg.prime);
      handler(cfg, rep);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  emit(rep, cfg.format);
  return rep.ok() ? 0 : 1;
}
