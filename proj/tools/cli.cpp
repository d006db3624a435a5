#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "acceptance.hpp"
#include "binet/binet_poly.hpp"
#include "binet/compare.hpp"
#include "binet/gamma.hpp"
#include "binet/laplace.hpp"
#include "binet/mu.hpp"
#include "binet/stieltjes.hpp"

namespace binet::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

struct RunConfig {
  int digits = 30;
  long max_terms = 100000;
  std::string output;  // empty: stdout
  Format format = Format::Csv;
  int table_rows = 256;
};

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  void add(std::vector<std::string> r) { rows.push_back(std::move(r)); }
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void emit(const Table& t, Format f, std::ostream& os) {
  if (f == Format::Json) {
    nlohmann::ordered_json j;
    j["meta"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.meta) j["meta"][k] = v;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    os << j.dump(1) << "\n";
    return;
  }
  for (const auto& [k, v] : t.meta) os << "# " << k << ": " << v << "\n";
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << "\n";
  };
  line(t.columns);
  for (const auto& r : t.rows) line(r);
}

Rat to_rat(const std::string& s, const char* what) {
  try {
    return parse_rational(s);
  } catch (const DomainError&) {
    throw UsageError(std::string(what) + ": not a rational number: " + s);
  }
}

Real to_real(const std::string& s, const char* what) {
  if (s.find('/') != std::string::npos) return Real(to_rat(s, what));
  try {
    return Real(s);
  } catch (const DomainError&) {
    throw UsageError(std::string(what) + ": not a number: " + s);
  }
}

// "a", "a+bi", "a-bi", "bi".
Complex to_complex(std::string s, const char* what) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) throw UsageError(std::string(what) + ": empty value");
  if (s.back() != 'i') return Complex(to_real(s, what));
  s.pop_back();
  size_t cut = std::string::npos;
  for (size_t i = s.size(); i-- > 1;)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      cut = i;
      break;
    }
  auto imag = [&](std::string t) {
    if (t.empty() || t == "+") return Real(1);
    if (t == "-") return Real(-1);
    return to_real(t, what);
  };
  if (cut == std::string::npos) return Complex(Real(0), imag(s));
  return Complex(to_real(s.substr(0, cut), what), imag(s.substr(cut)));
}

std::vector<Real> z_list(const std::string& s) {
  std::vector<Real> out;
  if (s.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() < 2 || parts.size() > 3) throw UsageError("--z-list: expected lo:hi[:step]");
    const Real lo = to_real(parts[0], "--z-list"), hi = to_real(parts[1], "--z-list");
    const Real step = parts.size() == 3 ? to_real(parts[2], "--z-list") : Real(1);
    if (!(step > Real(0))) throw DomainError("--z-list: step must be positive");
    for (long i = 0;; ++i) {
      Real z = lo + step * Real(i);
      if (z > hi + step / 1000) break;
      out.push_back(z);
    }
  } else {
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, ',');) out.push_back(to_real(p, "--z-list"));
  }
  if (out.empty()) throw UsageError("--z-list: no values");
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

TaylorFunction example_function(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::map<std::string, std::string> kv;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    for (std::string p; std::getline(ss, p, ',');) {
      const auto eq = p.find('=');
      if (eq == std::string::npos) throw UsageError("--example: expected key=value, got " + p);
      kv[p.substr(0, eq)] = p.substr(eq + 1);
    }
  }
  auto get = [&](const std::string& k) {
    auto it = kv.find(k);
    if (it == kv.end()) throw UsageError("--example " + name + ": missing " + k + "=");
    return it->second;
  };
  if (name == "exp") return exp_function(to_rat(get("b"), "--example"));
  if (name == "ml") {
    const Rat a = to_rat(get("a"), "--example"), b = to_rat(get("b"), "--example");
    if (a.get_den() != 1 || b.get_den() != 1) throw DomainError("ml: a and b must be integers");
    return mittag_leffler(static_cast<int>(a.get_num().get_si()), static_cast<int>(b.get_num().get_si()));
  }
  if (name == "recip") return reciprocal_one_plus();
  if (name == "binet") return binet_integrand();
  throw UsageError("--example: unknown function " + name + " (exp, ml, recip, binet)");
}

TaylorFunction file_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--coeffs: cannot open " + path);
  std::vector<Rat> c;
  for (std::string l; std::getline(in, l);) {
    l.erase(std::remove_if(l.begin(), l.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }),
            l.end());
    if (l.empty() || l[0] == '#') continue;
    c.push_back(to_rat(l, "--coeffs"));
  }
  if (c.empty()) throw UsageError("--coeffs: no coefficients in " + path);
  return from_coefficients(std::move(c), path);
}

void check_terms(long K, const RunConfig& cfg, const char* what) {
  if (K < 0) throw DomainError(std::string(what) + ": must be >= 0");
  if (K > cfg.max_terms) throw DomainError(std::string(what) + ": exceeds --max-terms");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binet function, factorial series and related expansions"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  int digits_flag = 0;
  std::string format_name = "csv";
  app.add_option("--digits", digits_flag, "Significant digits (default: $BINET_DIGITS or 30)");
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.output, "Write output to a file");
  app.add_option("--max-terms", cfg.max_terms, "Upper limit on requested term counts");
  app.add_option("--table-rows", cfg.table_rows, "Rows of the Stirling tables built up front");

  // coeffs
  auto* coeffs = app.add_subcommand("coeffs", "Exact coefficients c_m, beta_m, b_m(alpha), p_j(m)");
  std::string kind = "c", alpha_s = "0";
  int m = 0, m_max = 0;
  coeffs->add_option("--kind", kind)->check(CLI::IsMember({"c", "beta", "b", "p"}));
  coeffs->add_option("--m", m, "Single index");
  coeffs->add_option("--m-max", m_max, "All indices 1..m-max");
  coeffs->add_option("--alpha", alpha_s, "Rational alpha for --kind b");

  // mu
  auto* mu = app.add_subcommand("mu", "Evaluate mu(z)");
  std::string z_s = "1", method = "auto";
  long terms = 0;
  bool no_shift = false;
  mu->add_option("--z", z_s, "z as a, a+bi or bi")->required();
  mu->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "factorial", "stirling", "companion", "taylor", "oracle", "polygamma", "reference"}));
  mu->add_option("--alpha", alpha_s, "Rational alpha (factorial)");
  mu->add_option("--terms", terms, "Terms; 0 = adaptive (stirling: K*)");
  mu->add_flag("--no-shift", no_shift, "Companion: sum at z itself");

  auto* ident = app.add_subcommand("identities", "Residuals of the functional equations of mu");
  int mult_n = 3;
  ident->add_option("--z", z_s)->required();
  ident->add_option("--n", mult_n, "Multiplication order");

  auto* dig = app.add_subcommand("digamma", "psi(z) from the factorial or asymptotic series");
  std::string dig_method = "factorial";
  dig->add_option("--z", z_s)->required();
  dig->add_option("--terms", terms, "K; 0 = adaptive");
  dig->add_option("--method", dig_method)->check(CLI::IsMember({"factorial", "asymptotic"}));

  auto* harm = app.add_subcommand("harmonic", "H_n from the factorial series");
  long n_h = 10;
  harm->add_option("--n", n_h)->required();
  harm->add_option("--terms", terms, "K")->required();

  auto* poly = app.add_subcommand("polygamma", "psi^(n)(z)");
  int order = 1;
  std::string poly_method = "factorial";
  poly->add_option("--order", order)->required();
  poly->add_option("--z", z_s)->required();
  poly->add_option("--terms", terms, "Terms of the m-sum; 0 = adaptive");
  poly->add_option("--method", poly_method)->check(CLI::IsMember({"factorial", "reference"}));

  auto* zer = app.add_subcommand("zeros", "Real zeros of b_m(alpha)");
  zer->add_option("--m", m)->required();

  auto* stj = app.add_subcommand("stieltjes", "Taylor coefficients g_m of (s-1) zeta(s) at s = 1");
  stj->add_option("--m-max", m_max)->required();

  auto* lap = app.add_subcommand("laplace", "Factorial series of a Laplace transform");
  std::string example, coeff_file, lap_mode = "factorial", beta_s = "1", t_s = "1";
  lap->add_option("--example", example, "exp:b=B | ml:a=A,b=B | recip | binet");
  lap->add_option("--coeffs", coeff_file, "File of Taylor coefficients f_0, f_1, ... one per line");
  lap->add_option("--mode", lap_mode)->check(CLI::IsMember({"factorial", "laurent", "resum", "phi"}));
  lap->add_option("--z", z_s);
  lap->add_option("--alpha", alpha_s);
  lap->add_option("--beta", beta_s);
  lap->add_option("--terms", terms, "K; 0 = adaptive (phi: last index)");
  lap->add_option("--t", t_s, "Point for --mode resum");

  auto* cmp = app.add_subcommand("compare", "Truncation-error tables");
  cmp->require_subcommand(1);
  std::string zl = "2:16", lo_s = "-2", hi_s = "2";
  int points = 401;
  bool serial = false;
  auto* fig1 = cmp->add_subcommand("fig1", "Stirling vs alpha = 0, 1 at K*(z)");
  fig1->add_option("--z-list", zl, "lo:hi[:step] or a comma list");
  fig1->add_flag("--serial", serial);
  auto* fig2 = cmp->add_subcommand("fig2", "Error of the alpha series over an alpha grid at K*(z)");
  fig2->add_option("--z-list", zl);
  fig2->add_option("--lo", lo_s);
  fig2->add_option("--hi", hi_s);
  fig2->add_option("--points", points);
  fig2->add_flag("--serial", serial);
  auto* cerr_ = cmp->add_subcommand("error", "Single truncation error");
  std::string err_method = "stirling";
  cerr_->add_option("--z", z_s)->required();
  cerr_->add_option("--terms", terms, "K; 0 = K*(z)");
  cerr_->add_option("--method", err_method)->check(CLI::IsMember({"stirling", "alpha"}));
  cerr_->add_option("--alpha", alpha_s);

  auto* opt = app.add_subcommand("optimize-alpha", "Search alpha minimizing the truncation error");
  std::string olo = "0", ohi = "1";
  int opoints = 2000;
  opt->add_option("--z", z_s)->required();
  opt->add_option("--terms", terms, "K; 0 = K*(z)");
  opt->add_option("--lo", olo);
  opt->add_option("--hi", ohi);
  opt->add_option("--points", opoints);
  opt->add_flag("--serial", serial);

  auto* self = app.add_subcommand("selftest", "Run the acceptance criteria");
  int only = 0;
  self->add_option("--only", only, "Run one criterion");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (digits_flag) {
      cfg.digits = digits_flag;
    } else if (const char* env = std::getenv("BINET_DIGITS"); env && *env) {
      try {
        size_t used = 0;
        cfg.digits = std::stoi(env, &used);
        if (env[used]) throw std::invalid_argument(env);
      } catch (const std::logic_error&) {
        throw UsageError(std::string("BINET_DIGITS: not an integer: ") + env);
      }
    }
    cfg.format = format_name == "json" ? Format::Json : Format::Csv;
    if (cfg.digits < 15) throw DomainError("digits must be >= 15");
    if (cfg.max_terms <= 0) throw DomainError("--max-terms must be positive");
    if (cfg.table_rows <= 0) throw DomainError("--table-rows must be positive");

    const PrecisionContext ctx{cfg.digits};
    PrecisionGuard guard(ctx);
    stirling1_table(cfg.table_rows);
    stirling2_table(cfg.table_rows);
    const int P = cfg.digits;
    auto R = [&](const Real& x) { return format(x, P); };

    Table t;
    t.meta.push_back({"digits", std::to_string(P)});

    if (coeffs->parsed()) {
      if ((m > 0) == (m_max > 0)) throw UsageError("coeffs: give exactly one of --m, --m-max");
      t.meta.push_back({"kind", kind});
      const int first = m > 0 ? m : 1, last = m > 0 ? m : m_max;
      if (kind == "p") {
        if (m <= 0) throw UsageError("coeffs --kind p needs --m");
        t.columns = {"j", "p_j"};
        const auto& p = p_coefficients(m).p;
        for (size_t j = 0; j < p.size(); ++j) t.add({std::to_string(j), to_string(p[j])});
      } else {
        const Rat a = to_rat(alpha_s, "--alpha");
        if (kind == "b") t.meta.push_back({"alpha", to_string(a)});
        t.columns = {"m", kind == "b" ? "b_m" : kind + "_m"};
        for (int k = first; k <= last; ++k) {
          Rat v = kind == "c" ? c_coefficient(k) : kind == "beta" ? beta_coefficient(k) : b_eval_exact(k, a);
          t.add({std::to_string(k), to_string(v)});
        }
      }
    } else if (mu->parsed()) {
      const Complex z = to_complex(z_s, "--z");
      check_terms(terms, cfg, "--terms");
      t.meta.push_back({"method", method});
      t.columns = {"z_re", "z_im", "re", "im", "terms", "converged", "shift", "note"};
      if (method == "auto" || method == "reference") {
        const Complex v = method == "auto" ? mu_auto(z, ctx) : mu_reference(z, ctx);
        t.add({R(z.re), R(z.im), R(v.re), R(v.im), "", "", "", ""});
      } else {
        MuResult r;
        if (method == "factorial") r = mu_factorial(z, to_rat(alpha_s, "--alpha"), terms, ctx);
        else if (method == "stirling") r = mu_stirling(z, terms ? terms : k_star(z.re), ctx);
        else if (method == "companion") r = mu_companion(z, terms, ctx, !no_shift);
        else if (method == "taylor") r = mu_taylor_small(z, ctx);
        else if (method == "oracle") r = mu_oracle(z, ctx);
        else r = mu_polygamma_series(z, terms, ctx);
        if (!r.valid) throw DomainError("mu " + method + ": " + r.reason);
        t.add({R(z.re), R(z.im), R(r.value().re), R(r.value().im), std::to_string(r.eval.terms_used),
               yes_no(r.eval.converged), std::to_string(r.shift), r.eval.note});
      }
    } else if (ident->parsed()) {
      const Complex z = to_complex(z_s, "--z");
      IdentityResiduals r = identity_residuals(z, ctx, mult_n);
      t.columns = {"identity", "residual"};
      auto row = [&](const char* name, const std::optional<Real>& v) {
        t.add({name, v ? format(*v, 6) : "skipped"});
      };
      row("difference", r.difference);
      row("reflection", r.reflection);
      row("duplication", r.duplication);
      row(("multiplication_n" + std::to_string(r.multiplication_n)).c_str(), r.multiplication);
      row("integral_mean", r.integral_mean);
      for (const auto& s : r.skipped) t.meta.push_back({"skipped", s});
    } else if (dig->parsed()) {
      const Complex z = to_complex(z_s, "--z");
      check_terms(terms, cfg, "--terms");
      SeriesEvaluation e = dig_method == "factorial" ? digamma_factorial(z, terms, ctx)
                                                     : digamma_asymptotic(z, terms, ctx);
      t.meta.push_back({"method", dig_method});
      t.columns = {"z_re", "z_im", "K", "re", "im", "terms", "converged"};
      t.add({R(z.re), R(z.im), std::to_string(terms), R(e.value.re), R(e.value.im), std::to_string(e.terms_used),
             yes_no(e.converged)});
    } else if (harm->parsed()) {
      if (n_h < 1) throw DomainError("harmonic: n >= 1 required");
      check_terms(terms, cfg, "--terms");
      SeriesEvaluation e = harmonic(n_h, terms, ctx);
      const Real exact(harmonic_exact(n_h));
      t.columns = {"n", "K", "value", "exact", "abs_error"};
      t.add({std::to_string(n_h), std::to_string(terms), R(e.value.re), R(exact), format(abs(e.value.re - exact), 6)});
    } else if (poly->parsed()) {
      if (order < 1) throw DomainError("polygamma: order >= 1 required");
      const Complex z = to_complex(z_s, "--z");
      check_terms(terms, cfg, "--terms");
      SeriesEvaluation e = poly_method == "factorial" ? polygamma_factorial(order, z, terms, ctx)
                                                      : polygamma_reference(order, z, ctx);
      t.meta.push_back({"method", poly_method});
      t.columns = {"order", "z_re", "z_im", "re", "im", "terms", "converged"};
      t.add({std::to_string(order), R(z.re), R(z.im), R(e.value.re), R(e.value.im), std::to_string(e.terms_used),
             yes_no(e.converged)});
    } else if (zer->parsed()) {
      if (m < 1) throw DomainError("zeros: m >= 1 required");
      ZeroSet zs = zeros(m, ctx);
      t.meta.push_back({"m", std::to_string(m)});
      t.meta.push_back({"sturm_count", std::to_string(zs.sturm_count)});
      t.columns = {"j", "xi"};
      for (size_t j = 0; j < zs.zeros.size(); ++j) t.add({std::to_string(j + 1), R(zs.zeros[j])});
    } else if (stj->parsed()) {
      if (m_max < 0) throw DomainError("stieltjes: m-max >= 0 required");
      auto tab = g_table(m_max, ctx);
      t.columns = {"m", "g_m"};
      for (int k = 0; k <= m_max; ++k) t.add({std::to_string(k), R(tab->g[k])});
    } else if (lap->parsed()) {
      if (example.empty() == coeff_file.empty()) throw UsageError("laplace: give exactly one of --example, --coeffs");
      const TaylorFunction f = example.empty() ? file_function(coeff_file) : example_function(example);
      const Rat alpha = to_rat(alpha_s, "--alpha"), beta = to_rat(beta_s, "--beta");
      check_terms(terms, cfg, "--terms");
      t.meta.push_back({"function", f.name});
      t.meta.push_back({"mode", lap_mode});
      if (lap_mode == "phi") {
        if (!(beta > 0)) throw DomainError("laplace: beta > 0 required");
        PhiTable pt = phi_table(f, alpha, beta, static_cast<int>(terms ? terms : 10));
        t.columns = {"m", "g_m", "phi_m"};
        for (size_t k = 0; k < pt.phi.size(); ++k) t.add({std::to_string(k), to_string(pt.g[k]), to_string(pt.phi[k])});
      } else if (lap_mode == "resum") {
        SeriesEvaluation e = resum_f(to_real(t_s, "--t"), alpha, terms, f, ctx);
        t.columns = {"t", "value", "terms", "converged", "note"};
        t.add({t_s, R(e.value.re), std::to_string(e.terms_used), yes_no(e.converged), e.note});
      } else {
        const Complex z = to_complex(z_s, "--z");
        SeriesEvaluation e;
        if (lap_mode == "laurent") {
          e = laurent_eval(z, terms, f, ctx);
        } else {
          LaplaceResult r = factorial_series_eval(z, alpha, beta, terms, f, ctx);
          e = r.eval;
          t.meta.push_back({"radius_flag", yes_no(r.radius.tripped)});
        }
        t.columns = {"z_re", "z_im", "re", "im", "terms", "converged", "note"};
        t.add({R(z.re), R(z.im), R(e.value.re), R(e.value.im), std::to_string(e.terms_used), yes_no(e.converged),
               e.note});
      }
    } else if (cmp->parsed()) {
      const Exec ex = serial ? Exec::Serial : Exec::Parallel;
      if (fig1->parsed()) {
        auto rows = sweep_fig1(z_list(zl), ctx, ex);
        t.meta.push_back({"figure", "fig1"});
        t.columns = {"z", "K", "log10_stirling", "log10_alpha0", "log10_alpha1", "ok", "note"};
        for (const auto& r : rows)
          t.add({R(r.z), std::to_string(r.K), r.ok ? R(r.log_stirling) : "", r.ok ? R(r.log_alpha0) : "",
                 r.ok ? R(r.log_alpha1) : "", yes_no(r.ok), r.note});
      } else if (fig2->parsed()) {
        if (points < 2) throw DomainError("--points >= 2 required");
        auto rows = sweep_fig2(z_list(zl), to_real(lo_s, "--lo"), to_real(hi_s, "--hi"), points, ctx, ex);
        t.meta.push_back({"figure", "fig2"});
        t.columns = {"z", "K", "alpha", "log10_error", "ok", "note"};
        for (const auto& r : rows)
          t.add({R(r.z), std::to_string(r.K), R(r.alpha), r.ok ? R(r.log_error) : "", yes_no(r.ok), r.note});
      } else {
        const Real z = to_real(z_s, "--z");
        if (!(z > Real(0))) throw DomainError("compare error: z > 0 required");
        check_terms(terms, cfg, "--terms");
        const long K = terms ? terms : k_star(z);
        ErrorPoint p = err_method == "stirling" ? error_stirling(z, K, ctx)
                                                : error_alpha(z, to_real(alpha_s, "--alpha"), K, ctx);
        t.columns = {"z", "K", "method", "alpha", "error", "log10_error"};
        t.add({R(z), std::to_string(K), p.method, p.alpha ? R(*p.alpha) : "", R(p.error), R(p.log10_error)});
      }
    } else if (opt->parsed()) {
      const Real z = to_real(z_s, "--z");
      if (!(z > Real(0))) throw DomainError("optimize-alpha: z > 0 required");
      check_terms(terms, cfg, "--terms");
      const long K = terms ? terms : k_star(z);
      AlphaSearchResult r = optimize_alpha(z, K, to_real(olo, "--lo"), to_real(ohi, "--hi"), ctx, opoints,
                                           serial ? Exec::Serial : Exec::Parallel);
      const Real st = error_stirling(z, K, ctx).log10_error;
      t.columns = {"z", "K", "lo", "hi", "alpha_star", "log10_error", "log10_stirling", "evaluations", "flat"};
      t.add({R(z), std::to_string(K), R(r.lo), R(r.hi), R(r.alpha_star), R(r.log10_error), R(st),
             std::to_string(r.evaluations), yes_no(r.flat)});
    } else if (self->parsed()) {
      int failed = 0;
      acceptance::run(only, [&](const acceptance::Outcome& o) {
        out << acceptance::line(o) << std::endl;
        if (!o.pass) ++failed;
      });
      return failed ? 1 : 0;
    }

    if (cfg.output.empty()) {
      emit(t, cfg.format, out);
    } else {
      std::ofstream f(cfg.output);
      if (!f) throw UsageError("--out: cannot open " + cfg.output);
      emit(t, cfg.format, f);
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace binet::cli
